//! Genus-`g` Gromov-Witten invariants of the plane blown up at points on a
//! conic.
//!
//! A class is `D = dH - sum m_i E_i`. With at most five blown-up points the
//! invariant is an irreducible count with fixed multiple points `s = m`. With
//! six points on the conic the conic's proper transform is a `(-2)`-curve,
//! and [`gw_cubic_conjectural`] sums over curves with extra copies of it
//! attached; that formula is conjectural.

use std::fmt;

use num_traits::{One, Zero};

use crate::config::CurveConfig;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::seqcomb::{binomial, TangencySeq};
use crate::Count;

/// The class `dH - sum_i m_i E_i` on the blow-up at `m.len()` points, with a genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupClass {
    pub d: i64,
    pub m: Vec<i64>,
    pub g: i64,
}

impl BlowupClass {
    pub fn new(d: i64, m: Vec<i64>, g: i64) -> Self {
        BlowupClass { d, m, g }
    }

    /// Number of blown-up points.
    pub fn points(&self) -> usize {
        self.m.len()
    }

    /// `-K . D + g - 1 = 3d - sum m_i + g - 1`.
    pub fn point_conditions(&self) -> i64 {
        3 * self.d - self.m.iter().sum::<i64>() + self.g - 1
    }

    /// `D . E'` for the conic `E'`: `2d - sum m_i`.
    pub fn conic_intersection(&self) -> i64 {
        2 * self.d - self.m.iter().sum::<i64>()
    }

    fn is_exceptional(&self) -> bool {
        self.d == 0
            && self.m.iter().filter(|&&x| x == -1).count() == 1
            && self.m.iter().all(|&x| x == 0 || x == -1)
    }

    fn is_conic_transform(&self) -> bool {
        self.points() == 5 && self.d == 2 && self.m.iter().all(|&x| x == 1)
    }
}

impl fmt::Display for BlowupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}H", self.d)?;
        for (i, m) in self.m.iter().enumerate() {
            match m {
                0 => {}
                m if *m < 0 => write!(f, " + {}E{}", -m, i + 1)?,
                m => write!(f, " - {}E{}", m, i + 1)?,
            }
        }
        write!(f, ", g={}", self.g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwValue {
    pub count: Count,
    pub point_conditions: i64,
    /// The irreducible count evaluated, or `None` for the rigid special classes.
    pub config: Option<CurveConfig>,
}

/// The plane curve problem equivalent to `class`, when there is one.
pub fn delpezzo_config(class: &BlowupClass) -> Result<Option<CurveConfig>> {
    if class.points() > 5 {
        return Err(Error::InvalidInput(format!(
            "{} points blown up; at most 5 are supported",
            class.points()
        )));
    }
    if class.g < 0 {
        return Err(Error::InvalidInput("genus must be nonnegative".into()));
    }
    if class.is_exceptional() || class.is_conic_transform() {
        return Ok(None);
    }
    if class.d < 1 {
        return Err(Error::InvalidInput(format!(
            "class {class} is neither an exceptional curve nor of positive degree"
        )));
    }
    if class.m.iter().any(|&x| x < 0) {
        return Err(Error::InvalidInput(format!(
            "class {class} has a negative multiplicity"
        )));
    }
    let free = class.conic_intersection();
    if free < 0 {
        return Err(Error::InvalidInput(format!(
            "class {class} meets the conic negatively"
        )));
    }
    let s: Vec<u32> = class.m.iter().map(|&x| x as u32).collect();
    let beta = if free == 0 {
        TangencySeq::zero()
    } else {
        TangencySeq::scaled_unit(1, free as u32)
    };
    Ok(Some(CurveConfig::new(
        class.d as u32,
        class.g,
        TangencySeq::zero(),
        beta,
        s,
    )))
}

/// `GW^{D,g}` on the plane blown up at `l <= 5` points.
pub fn gw_delpezzo(engine: &Engine, class: &BlowupClass) -> Result<GwValue> {
    let point_conditions = class.point_conditions();
    match delpezzo_config(class)? {
        None => Ok(GwValue {
            count: if class.g == 0 { Count::one() } else { Count::zero() },
            point_conditions,
            config: None,
        }),
        Some(config) => Ok(GwValue {
            count: engine.count_irreducible(&config)?,
            point_conditions,
            config: Some(config),
        }),
    }
}

/// One summand of the cubic-surface formula: a core curve of class
/// `D - j E'` with `j` copies of the `(-2)`-curve `E'` attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicTerm {
    pub j: u32,
    /// Unordered choices of `j` distinct attachment points among the core's
    /// free intersections with `E'`.
    pub attach_count: Count,
    pub core_count: Count,
    pub core: CurveConfig,
}

impl CubicTerm {
    pub fn contribution(&self) -> Count {
        &self.attach_count * &self.core_count
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicValue {
    pub total: Count,
    pub point_conditions: i64,
    pub breakdown: Vec<CubicTerm>,
}

/// Conjectural `GW^{D,g}` of the cubic surface, from the degeneration with
/// the six points on a conic.
///
/// Sums `C(b_j, j) * N_irr(d - 2j, g, 0, b_j e_1, m - j)` over
/// `0 <= j <= min m_i` with `d - 2j >= 1` and `b_j >= j`, where
/// `b_j = 2d - sum m_i + 2j` is the number of free intersections of the core
/// curve with the conic. Only transverse, distinct attachment points are
/// counted.
pub fn gw_cubic_conjectural(engine: &Engine, class: &BlowupClass) -> Result<CubicValue> {
    if class.points() != 6 {
        return Err(Error::InvalidInput(format!(
            "the cubic surface blows up 6 points, got {}",
            class.points()
        )));
    }
    if class.g < 0 || class.m.iter().any(|&x| x < 0) {
        return Err(Error::InvalidInput(format!(
            "class {class} needs nonnegative genus and multiplicities"
        )));
    }
    let point_conditions = class.point_conditions();
    let max_j = class.m.iter().copied().min().unwrap_or(0);
    let mut breakdown = Vec::new();
    let mut total = Count::zero();
    for j in 0..=max_j {
        let core_degree = class.d - 2 * j;
        let free = class.conic_intersection() + 2 * j;
        if core_degree < 1 || free < j {
            continue;
        }
        let s: Vec<u32> = class.m.iter().map(|&x| (x - j) as u32).collect();
        let beta = if free == 0 {
            TangencySeq::zero()
        } else {
            TangencySeq::scaled_unit(1, free as u32)
        };
        let core = CurveConfig::new(core_degree as u32, class.g, TangencySeq::zero(), beta, s);
        if core.upsilon() != point_conditions {
            return Err(Error::Invariant(format!(
                "core ({core}) imposes {} conditions, expected {point_conditions}",
                core.upsilon()
            )));
        }
        let term = CubicTerm {
            j: j as u32,
            attach_count: binomial(free as u64, j as u64),
            core_count: engine.count_irreducible(&core)?,
            core,
        };
        total += term.contribution();
        breakdown.push(term);
    }
    Ok(CubicValue {
        total,
        point_conditions,
        breakdown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gw(d: i64, m: &[i64], g: i64) -> u64 {
        let v = gw_delpezzo(&Engine::new(), &BlowupClass::new(d, m.to_vec(), g)).unwrap();
        u64::try_from(v.count).unwrap()
    }

    #[test]
    fn delpezzo_values() {
        assert_eq!(gw(3, &[], 0), 12);
        assert_eq!(gw(0, &[-1], 0), 1);
        assert_eq!(gw(0, &[-1], 2), 0);
        assert_eq!(gw(0, &[0, 0, -1], 0), 1);
        assert_eq!(gw(5, &[2, 2, 2, 2, 2], 0), 12);
        assert_eq!(gw(2, &[1, 1, 1, 1, 1], 0), 1);
        assert_eq!(gw(2, &[1, 1, 1, 1, 1], 1), 0);
        assert_eq!(gw(1, &[1, 1], 0), 1);
        assert_eq!(gw(4, &[2], 1), 20);
    }

    #[test]
    fn delpezzo_errors() {
        let e = Engine::new();
        assert!(gw_delpezzo(&e, &BlowupClass::new(3, vec![0; 6], 0)).is_err());
        assert!(gw_delpezzo(&e, &BlowupClass::new(1, vec![1, 1, 1], 0)).is_err());
        assert!(gw_delpezzo(&e, &BlowupClass::new(0, vec![], 0)).is_err());
        assert!(gw_delpezzo(&e, &BlowupClass::new(2, vec![-1, 1], 0)).is_err());
    }

    #[test]
    fn point_conditions() {
        let c = BlowupClass::new(5, vec![2; 5], 0);
        let v = gw_delpezzo(&Engine::new(), &c).unwrap();
        assert_eq!(v.point_conditions, 4);
        assert_eq!(v.config.unwrap().upsilon(), 4);
    }

    #[test]
    fn cubic_line_through_two_points() {
        let v = gw_cubic_conjectural(&Engine::new(), &BlowupClass::new(1, vec![1, 1, 0, 0, 0, 0], 0))
            .unwrap();
        assert_eq!(v.total, Count::one());
        assert_eq!(v.breakdown.len(), 1);
        assert_eq!(v.breakdown[0].j, 0);
    }

    #[test]
    fn cubic_rejects_wrong_point_count() {
        assert!(gw_cubic_conjectural(&Engine::new(), &BlowupClass::new(3, vec![1; 5], 0)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(BlowupClass::new(0, vec![-1], 0).to_string(), "0H + 1E1, g=0");
        assert_eq!(BlowupClass::new(4, vec![2, 0], 1).to_string(), "4H - 2E1, g=1");
    }
}
