//! Counts of possibly reducible curves, `N^{d,g}(alpha, beta, s)`, where `g` is
//! the arithmetic genus of the (possibly disconnected) source curve.
//!
//! Degree 0 is admitted: the empty curve is counted once, with `g = 1` and
//! no contact data. The zero-dimensional seeds are unions of lines, counted
//! as loopless multigraphs on the fixed points.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::config::{CurveConfig, MultiplicityProfile};
use crate::engine::{check_measure, Engine};
use crate::error::{Error, Result};
use crate::memo::{EngineTag, MemoKey};
use crate::seqcomb::{enumerate_seqs_with_weight, enumerate_subseqs_le, seq_binomial};
use crate::Count;

/// Vertex valences of a labeled multigraph; every entry is at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.contains(&0) {
            return Err(Error::InvalidInput(
                "vertex degrees must be positive".into(),
            ));
        }
        Ok(DegreeSequence(degrees))
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }
}

/// Number of loopless multigraphs on labeled vertices with the given valences.
///
/// Resolves the vertex of largest remaining degree by choosing how many of its
/// edges go to each other vertex, then recurses. Intermediate results are
/// memoized on the sorted remaining degrees.
pub fn count_loopless_multigraphs(ds: &DegreeSequence) -> Count {
    let mut memo = HashMap::new();
    multigraphs(ds.0.clone(), &mut memo)
}

fn multigraphs(mut degrees: Vec<u32>, memo: &mut HashMap<Vec<u32>, Count>) -> Count {
    degrees.retain(|&x| x > 0);
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let total: u64 = degrees.iter().map(|&x| x as u64).sum();
    if total == 0 {
        return Count::one();
    }
    if total % 2 == 1 || 2 * degrees[0] as u64 > total {
        return Count::zero();
    }
    if let Some(v) = memo.get(&degrees) {
        return v.clone();
    }
    let first = degrees[0];
    let rest = degrees[1..].to_vec();
    let mut sum = Count::zero();
    let mut split = vec![0u32; rest.len()];
    distribute(first, &rest, 0, &mut split, &mut |split| {
        let remaining = rest.iter().zip(split).map(|(d, x)| d - x).collect();
        sum += multigraphs(remaining, memo);
    });
    memo.insert(degrees, sum.clone());
    sum
}

/// Calls `f` with every `split <= caps` summing to `n`.
fn distribute(n: u32, caps: &[u32], i: usize, split: &mut [u32], f: &mut impl FnMut(&[u32])) {
    if i == caps.len() {
        if n == 0 {
            f(split);
        }
        return;
    }
    let room: u32 = caps[i + 1..].iter().sum();
    let lo = n.saturating_sub(room);
    for x in lo..=n.min(caps[i]) {
        split[i] = x;
        distribute(n - x, caps, i + 1, split, f);
    }
    split[i] = 0;
}

impl Engine {
    /// `N^{d,g}(alpha, beta, s)`.
    pub fn count_reducible(&self, c: &CurveConfig) -> Result<Count> {
        let c = c.normalize();
        if c.d == 0 {
            let empty = c.g == 1 && c.alpha.is_zero() && c.beta.is_zero() && c.s.is_empty();
            return Ok(if empty { Count::one() } else { Count::zero() });
        }
        if !c.is_balanced() || c.upsilon() < 0 {
            return Ok(Count::zero());
        }
        if c.upsilon() == 0 {
            return Ok(reducible_seed(&c));
        }
        let key = MemoKey::new(EngineTag::Reducible, &c);
        if let Some(v) = self.memo.lookup(&key) {
            return Ok(v);
        }
        let v = self.expand_reducible(&c)?;
        self.memo.insert(key, v.clone())?;
        Ok(v)
    }

    fn expand_reducible(&self, c: &CurveConfig) -> Result<Count> {
        let mut total = Count::zero();
        for (k, _) in c.beta.support() {
            let sub = CurveConfig {
                alpha: c.alpha.plus_unit(k, 1),
                beta: c.beta.minus_unit(k).expect("beta_k > 0"),
                ..c.clone()
            };
            check_measure(c, &sub)?;
            total += self.count_reducible(&sub)? * k;
        }

        if c.d < 2 {
            return Ok(total);
        }
        let budget = 2 * (c.d as u64 - 2);
        let beta_weight = c.beta.weight();
        let points = c.s.mults();
        for alpha in enumerate_subseqs_le(&c.alpha) {
            let alpha_ways = seq_binomial(&c.alpha, &alpha);
            // each fixed multiple point either keeps its multiplicity or drops one
            for mask in 0u32..(1 << points.len()) {
                let s: Vec<u32> = points
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| m - ((mask >> i) & 1))
                    .collect();
                let used = alpha.weight() + beta_weight + s.iter().map(|&x| x as u64).sum::<u64>();
                let Some(free) = budget.checked_sub(used) else {
                    continue;
                };
                for delta in enumerate_seqs_with_weight(free) {
                    let beta = &c.beta + &delta;
                    let sub = CurveConfig {
                        d: c.d - 2,
                        g: c.g - delta.size() as i64 + 1,
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        s: MultiplicityProfile::new(s.clone()),
                    };
                    check_measure(c, &sub)?;
                    let n = self.count_reducible(&sub)?;
                    if n.is_zero() {
                        continue;
                    }
                    total += n
                        * &alpha_ways
                        * seq_binomial(&beta, &c.beta)
                        * delta.weight_product();
                }
            }
        }
        Ok(total)
    }
}

/// Zero-dimensional case: a union of lines through the fixed points, plus one
/// line tangent at each fixed tangency point of order 2.
fn reducible_seed(c: &CurveConfig) -> Count {
    let only_low_order = c.alpha.entries().len() <= 2;
    if !c.beta.is_zero() || !only_low_order {
        return Count::zero();
    }
    let mut degrees = c.s.mults().to_vec();
    degrees.extend(std::iter::repeat(1).take(c.alpha.get(1) as usize));
    if c.alpha.weight() + c.s.total() != 2 * c.d as u64 {
        return Count::zero();
    }
    count_loopless_multigraphs(&DegreeSequence(degrees))
}
