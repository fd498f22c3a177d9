//! Counts of irreducible curves: `N_irr^{d,g}(alpha, beta, s)`.
//!
//! A general point condition is specialized to a general point `q` of the
//! conic `E`. Either a moving contact of order `k` slides onto `q` (weight
//! `k`), or the curve breaks into `E` plus residual components of total
//! degree `d - 2`, each meeting `E` somewhere new. The second kind of term is
//! indexed by a multiset of [`ComponentProfile`]s.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::config::{CurveConfig, MultiplicityProfile};
use crate::engine::{check_measure, Engine};
use crate::error::{Error, Result};
use crate::memo::{EngineTag, MemoKey};
use crate::seqcomb::{
    bounded_vectors, enumerate_seqs_with_weight, enumerate_subseqs_le, multinomial,
    seq_binomial, seq_multinomial, TangencySeq,
};
use crate::Count;

/// One residual component of a degeneration that contains the conic.
///
/// `gamma` is the part of the parent's moving contacts carried by this
/// component and `beta - gamma` the new points where it meets the conic
/// component. `s` is labeled by the parent's multiple points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentProfile {
    pub degree: u32,
    pub genus: i64,
    pub alpha: TangencySeq,
    pub beta: TangencySeq,
    pub gamma: TangencySeq,
    pub s: Vec<u32>,
}

impl ComponentProfile {
    pub fn upsilon(&self) -> i64 {
        self.degree as i64 + self.beta.size() as i64 + self.genus - 1
    }

    /// The configuration counted for this component, with labels intact.
    pub fn config(&self) -> CurveConfig {
        CurveConfig {
            d: self.degree,
            g: self.genus,
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            s: MultiplicityProfile::new(self.s.clone()),
        }
    }

    /// `beta - gamma`, the contacts with the conic component.
    pub fn attachments(&self) -> TangencySeq {
        self.beta
            .checked_sub(&self.gamma)
            .expect("gamma <= beta by construction")
    }
}

/// A multiset of components together with its weight
/// `(1/sigma) * binom(alpha; alpha^i, rest) * binom(Upsilon - 1; Upsilon^i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeIITerm {
    pub components: Vec<ComponentProfile>,
    pub sigma: u64,
    pub coefficient: BigRational,
}

/// `prod over distinct profiles of (multiplicity)!`
pub fn symmetry_factor(components: &[ComponentProfile]) -> u64 {
    let mut counts: BTreeMap<&ComponentProfile, u64> = BTreeMap::new();
    for c in components {
        *counts.entry(c).or_default() += 1;
    }
    counts.values().map(|&m| (1..=m).product::<u64>()).product()
}

#[derive(Clone, Debug)]
struct Budget {
    degree: u32,
    gamma: TangencySeq,
    alpha: TangencySeq,
    s: Vec<u32>,
    upsilon: i64,
}

impl Budget {
    fn after(&self, c: &ComponentProfile) -> Budget {
        Budget {
            degree: self.degree - c.degree,
            gamma: self.gamma.checked_sub(&c.gamma).expect("gamma within budget"),
            alpha: self.alpha.checked_sub(&c.alpha).expect("alpha within budget"),
            s: self.s.iter().zip(&c.s).map(|(b, x)| b - x).collect(),
            upsilon: self.upsilon - c.upsilon(),
        }
    }

    fn is_complete(&self) -> bool {
        self.degree == 0
            && self.gamma.is_zero()
            && self.upsilon == 0
            && self.s.iter().all(|&x| x <= 1)
    }

    /// Necessary conditions for the remaining components to close the budget.
    fn is_feasible(&self) -> bool {
        if self.degree == 0 {
            return self.is_complete();
        }
        // every component has Upsilon^i >= d^i
        if self.upsilon < self.degree as i64 {
            return false;
        }
        // every component takes I gamma^i + |s^i| <= 2 d^i - 1
        let need = self.gamma.weight()
            + self.s.iter().map(|&x| x.saturating_sub(1) as u64).sum::<u64>();
        need < 2 * self.degree as u64
    }

    fn candidates(&self) -> Vec<ComponentProfile> {
        let gammas: Vec<_> = enumerate_subseqs_le(&self.gamma)
            .map(|g| {
                let w = g.weight();
                (g, w)
            })
            .collect();
        let alphas: Vec<_> = enumerate_subseqs_le(&self.alpha)
            .map(|a| {
                let w = a.weight();
                (a, w)
            })
            .collect();
        let points: Vec<_> = bounded_vectors(&self.s)
            .into_iter()
            .map(|v| {
                let w = v.iter().map(|&x| x as u64).sum::<u64>();
                (v, w)
            })
            .collect();

        let mut out = Vec::new();
        for degree in 1..=self.degree {
            let intersections = 2 * degree as u64;
            for (gamma, wg) in &gammas {
                for (alpha, wa) in &alphas {
                    for (s, ws) in &points {
                        let used = wg + wa + ws;
                        if used >= intersections {
                            continue;
                        }
                        for delta in enumerate_seqs_with_weight(intersections - used) {
                            let beta = gamma + &delta;
                            let floor = degree as i64 + beta.size() as i64 - 1;
                            for genus in 0..=(self.upsilon - floor) {
                                out.push(ComponentProfile {
                                    degree,
                                    genus,
                                    alpha: alpha.clone(),
                                    beta: beta.clone(),
                                    gamma: gamma.clone(),
                                    s: s.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Every admissible multiset of residual components for `c`, in canonical
/// (sorted) order, each exactly once.
///
/// `c.s` is read as a labeled vector; `c` need not be normalized.
pub fn enumerate_type2_terms(c: &CurveConfig) -> Vec<TypeIITerm> {
    let mut out = Vec::new();
    let upsilon = c.upsilon();
    if c.d < 2 || upsilon < 1 {
        return out;
    }
    let root = Budget {
        degree: c.d - 2,
        gamma: c.beta.clone(),
        alpha: c.alpha.clone(),
        s: c.s.mults().to_vec(),
        upsilon: upsilon - 1,
    };
    let mut chosen = Vec::new();
    collect_multisets(c, &root, None, &mut chosen, &mut out);
    out.sort_by(|a, b| a.components.cmp(&b.components));
    out
}

fn collect_multisets(
    parent: &CurveConfig,
    budget: &Budget,
    floor: Option<&ComponentProfile>,
    chosen: &mut Vec<ComponentProfile>,
    out: &mut Vec<TypeIITerm>,
) {
    if budget.degree == 0 {
        if budget.is_complete() {
            out.push(make_term(parent, chosen.clone()));
        }
        return;
    }
    if !budget.is_feasible() {
        return;
    }
    for cand in budget.candidates() {
        if floor.is_some_and(|f| &cand < f) {
            continue;
        }
        let next = budget.after(&cand);
        chosen.push(cand);
        let last = chosen.last().cloned();
        collect_multisets(parent, &next, last.as_ref(), chosen, out);
        chosen.pop();
    }
}

fn make_term(parent: &CurveConfig, components: Vec<ComponentProfile>) -> TypeIITerm {
    let sigma = symmetry_factor(&components);
    let coefficient = type2_coefficient(parent, &components)
        .expect("components drawn from the parent's alpha")
        / BigInt::from(sigma);
    TypeIITerm {
        components,
        sigma,
        coefficient,
    }
}

/// `binom(alpha; alpha^1, ..., alpha^l, alpha - sum alpha^i) * binom(Upsilon - 1; Upsilon^1, ..., Upsilon^l)`,
/// without the `1/sigma`.
pub fn type2_coefficient(parent: &CurveConfig, components: &[ComponentProfile]) -> Result<BigRational> {
    let mut parts: Vec<TangencySeq> = components.iter().map(|c| c.alpha.clone()).collect();
    let used = parts.iter().fold(TangencySeq::zero(), |acc, a| &acc + a);
    let rest = parent.alpha.checked_sub(&used).ok_or_else(|| {
        Error::Invariant(format!("components use more than alpha = ({})", parent.alpha))
    })?;
    parts.push(rest);
    let alpha_ways = seq_multinomial(&parent.alpha, &parts)?;
    let upsilons: Option<Vec<u64>> = components
        .iter()
        .map(|c| u64::try_from(c.upsilon()).ok())
        .collect();
    let point_ways = match (upsilons, u64::try_from(parent.upsilon() - 1)) {
        (Some(parts), Ok(n)) => multinomial(n, &parts),
        _ => BigUint::zero(),
    };
    Ok(BigRational::from_integer(BigInt::from(alpha_ways * point_ways)))
}

impl Engine {
    /// `N_irr^{d,g}(alpha, beta, s)`.
    pub fn count_irreducible(&self, c: &CurveConfig) -> Result<Count> {
        if c.d == 0 {
            return Err(Error::NonPositiveDegree(c.d));
        }
        let c = c.normalize();
        if let Some(v) = self.settled_irreducible(&c) {
            return Ok(v);
        }
        let key = MemoKey::new(EngineTag::Irreducible, &c);
        if let Some(v) = self.memo.lookup(&key) {
            return Ok(v);
        }
        let v = self.expand(&c)?;
        self.memo.insert(key, v.clone())?;
        Ok(v)
    }

    /// Applies one step of the recursion to `c` exactly as given, with its
    /// multiple points kept as labeled (possibly 0 or 1) entries. Sub-counts
    /// go through [`count_irreducible`](Self::count_irreducible).
    pub fn expand_irreducible(&self, c: &CurveConfig) -> Result<Count> {
        if c.d == 0 {
            return Err(Error::NonPositiveDegree(c.d));
        }
        if let Some(v) = self.settled_irreducible(&c.normalize()) {
            return Ok(v);
        }
        self.expand(c)
    }

    /// Values that need no recursion: invalid or empty configurations and the
    /// zero-dimensional seeds.
    fn settled_irreducible(&self, c: &CurveConfig) -> Option<Count> {
        if c.g < 0 || !c.is_balanced() || c.upsilon() < 0 {
            return Some(Count::zero());
        }
        if self.options.genus_prune && c.g > c.max_genus() {
            return Some(Count::zero());
        }
        if c.upsilon() == 0 {
            let seed = c.d == 1
                && c.g == 0
                && c.beta.is_zero()
                && c.s.is_empty()
                && (c.alpha == TangencySeq::from([2]) || c.alpha == TangencySeq::from([0, 1]));
            return Some(if seed { Count::one() } else { Count::zero() });
        }
        None
    }

    fn expand(&self, c: &CurveConfig) -> Result<Count> {
        let mut total = Count::zero();
        for (k, _) in c.beta.support() {
            let sub = CurveConfig {
                alpha: c.alpha.plus_unit(k, 1),
                beta: c.beta.minus_unit(k).expect("beta_k > 0"),
                ..c.clone()
            };
            check_measure(c, &sub)?;
            total += self.count_irreducible(&sub)? * k;
        }

        let mut acc = BigRational::zero();
        for term in enumerate_type2_terms(c) {
            let value = self.term_value(c, &term.components)?;
            if !value.is_zero() {
                acc += &term.coefficient * BigRational::from_integer(BigInt::from(value));
            }
        }
        if !acc.is_integer() || acc.is_negative() {
            return Err(Error::Invariant(format!(
                "Type II sum for ({c}) is {acc}, not a nonnegative integer"
            )));
        }
        let type2 = acc.to_integer().to_biguint().expect("nonnegative");
        Ok(total + type2)
    }

    /// `prod_i binom(beta^i, gamma^i) * I^{beta^i - gamma^i} * N_irr(component i)`.
    pub fn term_value(&self, parent: &CurveConfig, components: &[ComponentProfile]) -> Result<Count> {
        let mut product = Count::one();
        for comp in components {
            let sub = comp.config();
            check_measure(parent, &sub)?;
            let n = self.count_irreducible(&sub)?;
            if n.is_zero() {
                return Ok(Count::zero());
            }
            let mut ways = seq_binomial(&comp.beta, &comp.gamma);
            if self.options.inject_binomial_fault {
                ways += 1u32;
            }
            product *= ways * comp.attachments().weight_product() * n;
        }
        Ok(product)
    }
}
