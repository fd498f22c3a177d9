//! Curve-counting configurations `(d, g, alpha, beta, s)`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::seqcomb::{parse_list, write_list, TangencySeq};

/// Multiplicities `s = (s_1, ..., s_l)` of fixed multiple points on the conic.
///
/// The labeled form keeps one slot per point; [`canonical`](Self::canonical)
/// erases the labels by keeping only entries `>= 2` in non-increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityProfile(Vec<u32>);

impl MultiplicityProfile {
    pub fn new(mults: Vec<u32>) -> Self {
        MultiplicityProfile(mults)
    }

    pub fn empty() -> Self {
        MultiplicityProfile(Vec::new())
    }

    pub fn mults(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|s| = sum_k s_k`
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&m| m as u64).sum()
    }

    /// Number of points of multiplicity exactly one.
    pub fn ones(&self) -> u32 {
        self.0.iter().filter(|&&m| m == 1).count() as u32
    }

    /// Entries `>= 2`, sorted non-increasing.
    pub fn canonical(&self) -> MultiplicityProfile {
        let mut v: Vec<u32> = self.0.iter().copied().filter(|&m| m >= 2).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        MultiplicityProfile(v)
    }

    pub fn is_canonical(&self) -> bool {
        self.0.iter().all(|&m| m >= 2) && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// `s` with `extra` appended.
    pub fn with(&self, extra: u32) -> MultiplicityProfile {
        let mut v = self.0.clone();
        v.push(extra);
        MultiplicityProfile(v)
    }
}

impl From<Vec<u32>> for MultiplicityProfile {
    fn from(v: Vec<u32>) -> Self {
        MultiplicityProfile(v)
    }
}

impl<const N: usize> From<[u32; N]> for MultiplicityProfile {
    fn from(v: [u32; N]) -> Self {
        MultiplicityProfile(v.to_vec())
    }
}

impl fmt::Display for MultiplicityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for MultiplicityProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_list(s).map(MultiplicityProfile)
    }
}

/// The data `(d, g, alpha, beta, s)` of a count.
///
/// `g` is the geometric genus for irreducible counts and the arithmetic genus
/// for possibly-reducible counts, where it may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveConfig {
    pub d: u32,
    pub g: i64,
    pub alpha: TangencySeq,
    pub beta: TangencySeq,
    pub s: MultiplicityProfile,
}

impl CurveConfig {
    pub fn new(
        d: u32,
        g: i64,
        alpha: impl Into<TangencySeq>,
        beta: impl Into<TangencySeq>,
        s: impl Into<MultiplicityProfile>,
    ) -> Self {
        CurveConfig {
            d,
            g,
            alpha: alpha.into(),
            beta: beta.into(),
            s: s.into(),
        }
    }

    /// Degree `d` genus `g` plane curves with fixed multiple points `s` on the
    /// conic and all remaining intersections with it free and transverse:
    /// `alpha = 0`, `beta = (2d - |s|) e_1`. `None` if `|s| > 2d`.
    pub fn plane(d: u32, g: i64, s: impl Into<MultiplicityProfile>) -> Option<Self> {
        let s = s.into();
        let free = (2 * d as u64).checked_sub(s.total())?;
        let beta = if free == 0 {
            TangencySeq::zero()
        } else {
            TangencySeq::scaled_unit(1, free as u32)
        };
        Some(CurveConfig {
            d,
            g,
            alpha: TangencySeq::zero(),
            beta,
            s,
        })
    }

    /// `d + |beta| + g - 1`: the number of general point conditions.
    pub fn upsilon(&self) -> i64 {
        self.d as i64 + self.beta.size() as i64 + self.g - 1
    }

    /// `I alpha + I beta + |s| == 2d`.
    pub fn is_balanced(&self) -> bool {
        self.alpha.weight() + self.beta.weight() + self.s.total() == 2 * self.d as u64
    }

    /// Drops zero multiplicities, folds multiplicity-one points into `alpha_1`,
    /// and sorts the rest non-increasing.
    pub fn normalize(&self) -> CurveConfig {
        let ones = self.s.ones();
        let alpha = if ones > 0 {
            self.alpha.plus_unit(1, ones)
        } else {
            self.alpha.clone()
        };
        CurveConfig {
            d: self.d,
            g: self.g,
            alpha,
            beta: self.beta.clone(),
            s: self.s.canonical(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.s.is_canonical()
    }

    /// `(d - 1)(d - 2) / 2`, the genus of a smooth plane curve of degree `d`.
    pub fn max_genus(&self) -> i64 {
        let d = self.d as i64;
        (d - 1) * (d - 2) / 2
    }
}

impl fmt::Display for CurveConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d={} g={} alpha={} beta={} s={}",
            self.d, self.g, self.alpha, self.beta, self.s
        )
    }
}

/// Parses `d=<int> g=<int> alpha=<seq> beta=<seq> s=<list>`; alpha, beta and
/// s default to empty.
impl FromStr for CurveConfig {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let bad = |reason: String| Error::Parse {
            input: text.to_string(),
            reason,
        };
        let (mut d, mut g) = (None, None);
        let mut alpha = TangencySeq::zero();
        let mut beta = TangencySeq::zero();
        let mut s = MultiplicityProfile::empty();
        for field in text.split_whitespace() {
            let (name, value) = field
                .split_once('=')
                .ok_or_else(|| bad(format!("expected name=value, got {field:?}")))?;
            match name {
                "d" => d = Some(value.parse::<u32>().map_err(|e| bad(format!("d: {e}")))?),
                "g" => g = Some(value.parse::<i64>().map_err(|e| bad(format!("g: {e}")))?),
                "alpha" => alpha = value.parse()?,
                "beta" => beta = value.parse()?,
                "s" => s = value.parse()?,
                other => return Err(bad(format!("unknown field {other:?}"))),
            }
        }
        Ok(CurveConfig {
            d: d.ok_or_else(|| bad("missing d".into()))?,
            g: g.ok_or_else(|| bad("missing g".into()))?,
            alpha,
            beta,
            s,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn upsilon_examples() {
        assert_eq!(CurveConfig::new(1, 0, [], [], []).upsilon(), 0);
        assert_eq!(CurveConfig::new(5, 1, [], [10], []).upsilon(), 15);
        assert_eq!(CurveConfig::new(2, -1, [], [], []).upsilon(), 0);
    }

    #[test]
    fn normalize_examples() {
        let c = CurveConfig::new(4, 0, [], [2], [2, 1, 2, 0]);
        assert_eq!(c.normalize(), CurveConfig::new(4, 0, [1], [2], [2, 2]));

        let c = CurveConfig::new(3, 0, [6], [], []);
        assert_eq!(c.normalize(), c);

        let c = CurveConfig::new(1, 0, [], [], [1, 1]);
        assert_eq!(c.normalize(), CurveConfig::new(1, 0, [2], [], []));
    }

    #[test]
    fn balance_examples() {
        assert!(CurveConfig::new(3, 0, [], [6], []).is_balanced());
        assert!(!CurveConfig::new(3, 0, [1], [6], []).is_balanced());
        assert!(CurveConfig::new(6, 0, [], [], [2, 2, 2, 2, 2, 2]).is_balanced());
    }

    #[test]
    fn plane_convenience() {
        assert_eq!(
            CurveConfig::plane(5, 2, [2, 2]).unwrap(),
            CurveConfig::new(5, 2, [], [6], [2, 2])
        );
        assert_eq!(
            CurveConfig::plane(5, 0, [2, 2, 2, 2, 2]).unwrap().beta,
            TangencySeq::zero()
        );
        assert!(CurveConfig::plane(1, 0, [3]).is_none());
    }

    #[test]
    fn text_roundtrip() {
        let c: CurveConfig = "d=4 g=0 alpha=1 beta=0,1,0 s=2,2".parse().unwrap();
        assert_eq!(c, CurveConfig::new(4, 0, [1], [0, 1], [2, 2]));
        assert_eq!(c.to_string(), "d=4 g=0 alpha=1 beta=0,1 s=2,2");
        assert_eq!(c.to_string().parse::<CurveConfig>().unwrap(), c);
        let c: CurveConfig = "d=2 g=-1".parse().unwrap();
        assert_eq!(c, CurveConfig::new(2, -1, [], [], []));
        assert!("d=2".parse::<CurveConfig>().is_err());
        assert!("d=2 g=0 q=1".parse::<CurveConfig>().is_err());
    }

    fn any_config() -> impl Strategy<Value = CurveConfig> {
        (
            1u32..7,
            -2i64..5,
            prop::collection::vec(0u32..4, 0..4),
            prop::collection::vec(0u32..4, 0..4),
            prop::collection::vec(0u32..4, 0..5),
        )
            .prop_map(|(d, g, a, b, s)| CurveConfig::new(d, g, a, b, s))
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent_and_preserving(c in any_config()) {
            let n = c.normalize();
            prop_assert_eq!(n.normalize(), n.clone());
            prop_assert!(n.is_canonical());
            prop_assert_eq!(n.upsilon(), c.upsilon());
            prop_assert_eq!(n.is_balanced(), c.is_balanced());
        }
    }
}
