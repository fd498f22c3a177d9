//! Finite-support sequences of nonnegative integers and the combinatorial
//! coefficients built from them.
//!
//! A [`TangencySeq`] `a = (a_1, a_2, ...)` records, for each contact order
//! `k >= 1`, how many contact points of that order a curve has with the conic.
//! Documentation indexes entries from 1; storage is 0-based and never carries
//! trailing zeros, so structural equality is equality of sequences.
//!
//! All enumeration helpers yield their items in lexicographic order of the
//! entry vectors, which keeps every downstream sum byte-reproducible.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;

/// A finite-support sequence of nonnegative integers, indexed from 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TangencySeq(Vec<u32>);

impl TangencySeq {
    /// Builds a sequence from its entries `(a_1, a_2, ...)`, dropping trailing zeros.
    pub fn new(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        TangencySeq(entries)
    }

    pub fn zero() -> Self {
        TangencySeq(Vec::new())
    }

    /// The unit sequence `e_k`. Panics if `k == 0`.
    pub fn unit(k: usize) -> Self {
        Self::scaled_unit(k, 1)
    }

    /// `n * e_k`.
    pub fn scaled_unit(k: usize, n: u32) -> Self {
        assert!(k >= 1, "contact orders start at 1");
        let mut v = vec![0; k];
        v[k - 1] = n;
        Self::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Canonical entries, without trailing zeros.
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Largest index with a nonzero entry (0 for the zero sequence).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry `a_k` for `k >= 1`; zero beyond the support.
    pub fn get(&self, k: usize) -> u32 {
        if k == 0 {
            return 0;
        }
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    /// Iterates `(k, a_k)` over the nonzero entries.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| (i + 1, a))
    }

    /// `|a| = a_1 + a_2 + ...`
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    /// `I a = a_1 + 2 a_2 + 3 a_3 + ...`
    pub fn weight(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u64 + 1) * a as u64)
            .sum()
    }

    /// `I^a = 1^{a_1} 2^{a_2} 3^{a_3} ...`
    pub fn weight_product(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (k, a) in self.support() {
            if k > 1 {
                acc *= BigUint::from(k).pow(a);
            }
        }
        acc
    }

    /// Componentwise `self <= other`.
    pub fn is_le(&self, other: &TangencySeq) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self - other`, or `None` unless `other <= self`.
    pub fn checked_sub(&self, other: &TangencySeq) -> Option<TangencySeq> {
        if !other.is_le(self) {
            return None;
        }
        let mut v = self.0.clone();
        for (x, y) in v.iter_mut().zip(&other.0) {
            *x -= y;
        }
        Some(TangencySeq::new(v))
    }

    /// `self + n e_k`.
    pub fn plus_unit(&self, k: usize, n: u32) -> TangencySeq {
        assert!(k >= 1, "contact orders start at 1");
        let mut v = self.0.clone();
        if v.len() < k {
            v.resize(k, 0);
        }
        v[k - 1] += n;
        TangencySeq::new(v)
    }

    /// `self - e_k`, or `None` when `a_k == 0`.
    pub fn minus_unit(&self, k: usize) -> Option<TangencySeq> {
        if self.get(k) == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[k - 1] -= 1;
        Some(TangencySeq::new(v))
    }
}

impl Add for &TangencySeq {
    type Output = TangencySeq;

    fn add(self, rhs: &TangencySeq) -> TangencySeq {
        let (long, short) = if self.0.len() >= rhs.0.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut v = long.0.clone();
        for (x, y) in v.iter_mut().zip(&short.0) {
            *x += y;
        }
        TangencySeq(v)
    }
}

impl Add for TangencySeq {
    type Output = TangencySeq;

    fn add(self, rhs: TangencySeq) -> TangencySeq {
        &self + &rhs
    }
}

impl From<Vec<u32>> for TangencySeq {
    fn from(v: Vec<u32>) -> Self {
        TangencySeq::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for TangencySeq {
    fn from(v: [u32; N]) -> Self {
        TangencySeq::new(v.to_vec())
    }
}

impl fmt::Display for TangencySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for TangencySeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_list(s).map(TangencySeq::new)
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, items: &[u32]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Parses a comma-separated list of nonnegative decimal integers; the empty
/// string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<u32>, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|item| {
            let item = item.trim();
            item.parse::<u32>().map_err(|_| Error::Parse {
                input: s.to_string(),
                reason: format!("{item:?} is not a nonnegative integer"),
            })
        })
        .collect()
}

/// Ordinary binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `prod_k C(a_k, b_k)`; zero unless `b <= a`.
pub fn seq_binomial(a: &TangencySeq, b: &TangencySeq) -> BigUint {
    if !b.is_le(a) {
        return BigUint::zero();
    }
    a.0.iter()
        .zip(b.0.iter().chain(std::iter::repeat(&0)))
        .fold(BigUint::one(), |acc, (&x, &y)| acc * binomial(x as u64, y as u64))
}

/// Componentwise multinomial `prod_k a_k! / prod_i parts_i,k!`.
///
/// The caller passes every part explicitly, including any remainder, so a
/// mismatch between `sum(parts)` and `a` is reported as an error.
pub fn seq_multinomial(a: &TangencySeq, parts: &[TangencySeq]) -> Result<BigUint, Error> {
    let total = parts
        .iter()
        .fold(TangencySeq::zero(), |acc, p| &acc + p);
    if &total != a {
        return Err(Error::PartSumMismatch {
            whole: a.to_string(),
            sum: total.to_string(),
        });
    }
    let mut acc = BigUint::one();
    for (i, &ak) in a.0.iter().enumerate() {
        let k = i + 1;
        let parts_k: Vec<u64> = parts.iter().map(|p| p.get(k) as u64).collect();
        acc *= multinomial(ak as u64, &parts_k);
    }
    Ok(acc)
}

/// `n! / prod parts_i!` when the parts sum to `n`, and zero otherwise.
pub fn multinomial(n: u64, parts: &[u64]) -> BigUint {
    if parts.iter().sum::<u64>() != n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    let mut remaining = n;
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    acc
}

/// Every `b` with `0 <= b <= a` componentwise, lexicographically.
pub fn enumerate_subseqs_le(a: &TangencySeq) -> impl Iterator<Item = TangencySeq> {
    bounded_vectors(&a.0).into_iter().map(TangencySeq::new)
}

/// All vectors `v` with `0 <= v_i <= bounds_i`, lexicographically.
pub(crate) fn bounded_vectors(bounds: &[u32]) -> Vec<Vec<u32>> {
    let count: usize = bounds.iter().map(|&b| b as usize + 1).product();
    let mut out = Vec::with_capacity(count);
    let mut cur = vec![0u32; bounds.len()];
    loop {
        out.push(cur.clone());
        // odometer, last position fastest
        let mut i = bounds.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < bounds[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Ordered `l`-tuples `(b^1, ..., b^l)` with `sum b^i = a`.
///
/// The tuples are produced as a product over contact orders `k = 1, 2, ...`
/// of the weak compositions of `a_k` into `l` parts, with later orders varying
/// fastest and each composition listed lexicographically.
pub fn enumerate_seq_compositions(
    a: &TangencySeq,
    l: usize,
) -> impl Iterator<Item = Vec<TangencySeq>> {
    let mut tuples: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new(); l]];
    if l == 0 && !a.is_zero() {
        tuples.clear();
    }
    for &ak in &a.0 {
        let comps = weak_compositions(ak, l);
        let mut next = Vec::with_capacity(tuples.len() * comps.len());
        for t in &tuples {
            for c in &comps {
                let mut t = t.clone();
                for (part, &x) in t.iter_mut().zip(c) {
                    part.push(x);
                }
                next.push(t);
            }
        }
        tuples = next;
    }
    tuples
        .into_iter()
        .map(|t| t.into_iter().map(TangencySeq::new).collect())
}

/// Weak compositions of `n` into `l` parts, lexicographically.
fn weak_compositions(n: u32, l: usize) -> Vec<Vec<u32>> {
    fn rec(n: u32, l: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if l == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=n {
            cur.push(x);
            rec(n - x, l - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if l == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, l, &mut Vec::with_capacity(l), &mut out);
    out
}

/// Every sequence with `I b == w`, i.e. the partitions of `w`, lexicographically.
pub fn enumerate_seqs_with_weight(w: u64) -> impl Iterator<Item = TangencySeq> {
    fn rec(remaining: u64, k: u64, cur: &mut Vec<u32>, out: &mut Vec<TangencySeq>) {
        if k == 0 {
            if remaining == 0 {
                out.push(TangencySeq::new(cur.iter().rev().copied().collect()));
            }
            return;
        }
        // cur holds entries for orders > k, in decreasing order of k
        for n in 0..=remaining / k {
            cur.push(n as u32);
            rec(remaining - n * k, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w, &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter()
}

/// Every sequence with `I b <= w`, lexicographically.
pub fn enumerate_seqs_with_weight_at_most(w: u64) -> impl Iterator<Item = TangencySeq> {
    let mut out: Vec<TangencySeq> = (0..=w).flat_map(enumerate_seqs_with_weight).collect();
    out.sort();
    out.into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[u32]) -> TangencySeq {
        TangencySeq::new(v.to_vec())
    }

    #[test]
    fn size_weight_and_weight_product() {
        assert_eq!(seq(&[]).size(), 0);
        assert_eq!(seq(&[2, 0, 1]).size(), 3);
        assert_eq!(seq(&[0, 0, 5]).size(), 5);

        assert_eq!(seq(&[]).weight(), 0);
        assert_eq!(seq(&[2, 0, 1]).weight(), 5);
        assert_eq!(seq(&[0, 3]).weight(), 6);

        assert_eq!(seq(&[]).weight_product(), BigUint::from(1u32));
        assert_eq!(seq(&[2, 0, 1]).weight_product(), BigUint::from(3u32));
        assert_eq!(seq(&[0, 2, 1]).weight_product(), BigUint::from(12u32));
    }

    #[test]
    fn binomials() {
        assert_eq!(seq_binomial(&seq(&[2, 1]), &seq(&[1, 1])), BigUint::from(2u32));
        assert_eq!(seq_binomial(&seq(&[3]), &seq(&[4])), BigUint::zero());
        assert_eq!(seq_binomial(&seq(&[4, 2]), &seq(&[2, 1])), BigUint::from(12u32));
    }

    #[test]
    fn multinomials() {
        assert_eq!(
            seq_multinomial(&seq(&[2]), &[seq(&[1]), seq(&[1])]).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            seq_multinomial(&seq(&[6]), &[seq(&[1]), seq(&[5])]).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(seq_multinomial(&seq(&[]), &[]).unwrap(), BigUint::one());
        assert!(seq_multinomial(&seq(&[3]), &[seq(&[1])]).is_err());

        assert_eq!(multinomial(5, &[2, 3]), BigUint::from(10u32));
        assert_eq!(multinomial(4, &[2, 3]), BigUint::zero());
        assert_eq!(multinomial(0, &[]), BigUint::one());
    }

    #[test]
    fn subseqs() {
        let all: Vec<_> = enumerate_subseqs_le(&seq(&[1, 1])).collect();
        assert_eq!(all, vec![seq(&[]), seq(&[0, 1]), seq(&[1]), seq(&[1, 1])]);
        assert_eq!(enumerate_subseqs_le(&seq(&[])).count(), 1);
        let two: Vec<_> = enumerate_subseqs_le(&seq(&[2])).collect();
        assert_eq!(two, vec![seq(&[]), seq(&[1]), seq(&[2])]);
    }

    #[test]
    fn compositions() {
        assert_eq!(enumerate_seq_compositions(&seq(&[1, 1]), 2).count(), 4);
        let one: Vec<_> = enumerate_seq_compositions(&seq(&[2]), 1).collect();
        assert_eq!(one, vec![vec![seq(&[2])]]);
        assert_eq!(enumerate_seq_compositions(&seq(&[1]), 0).count(), 0);
        assert_eq!(enumerate_seq_compositions(&seq(&[]), 0).count(), 1);
    }

    #[test]
    fn bounded_weight() {
        let w0: Vec<_> = enumerate_seqs_with_weight_at_most(0).collect();
        assert_eq!(w0, vec![seq(&[])]);
        let w2: Vec<_> = enumerate_seqs_with_weight_at_most(2).collect();
        assert_eq!(w2, vec![seq(&[]), seq(&[0, 1]), seq(&[1]), seq(&[2])]);
        assert_eq!(enumerate_seqs_with_weight_at_most(3).count(), 7);
        // partition numbers 1,1,2,3,5,7,11 summed
        assert_eq!(enumerate_seqs_with_weight_at_most(6).count(), 30);
    }

    #[test]
    fn text_grammar() {
        let a: TangencySeq = "2,0,1,0,0".parse().unwrap();
        let b: TangencySeq = "2,0,1".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "2,0,1");
        assert_eq!("".parse::<TangencySeq>().unwrap(), TangencySeq::zero());
        assert!("1,-2".parse::<TangencySeq>().is_err());
        assert!("1,,2".parse::<TangencySeq>().is_err());
    }

    fn small_seq() -> impl Strategy<Value = TangencySeq> {
        prop::collection::vec(0u32..4, 0..5).prop_map(TangencySeq::new)
    }

    proptest! {
        #[test]
        fn additive_statistics(a in small_seq(), b in small_seq()) {
            let sum = &a + &b;
            prop_assert_eq!(sum.weight(), a.weight() + b.weight());
            prop_assert_eq!(sum.size(), a.size() + b.size());
            prop_assert_eq!(sum.weight_product(), a.weight_product() * b.weight_product());
        }

        #[test]
        fn binomial_is_two_part_multinomial(a in small_seq(), b in small_seq()) {
            if let Some(rest) = a.checked_sub(&b) {
                prop_assert_eq!(
                    seq_multinomial(&a, &[b.clone(), rest]).unwrap(),
                    seq_binomial(&a, &b)
                );
            } else {
                prop_assert!(seq_binomial(&a, &b).is_zero());
            }
        }

        #[test]
        fn composition_count_and_sums(a in small_seq(), l in 0usize..4) {
            let tuples: Vec<_> = enumerate_seq_compositions(&a, l).collect();
            let expected: BigUint = if l == 0 {
                BigUint::from(a.is_zero() as u32)
            } else {
                a.entries()
                    .iter()
                    .map(|&ak| binomial(ak as u64 + l as u64 - 1, l as u64 - 1))
                    .product()
            };
            prop_assert_eq!(BigUint::from(tuples.len()), expected);
            for t in &tuples {
                prop_assert_eq!(t.len(), l);
                let total = t.iter().fold(TangencySeq::zero(), |acc, p| &acc + p);
                prop_assert_eq!(&total, &a);
            }
            let mut sorted = tuples.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), tuples.len());
        }

        #[test]
        fn subseqs_are_exactly_the_lower_set(a in small_seq()) {
            let subs: Vec<_> = enumerate_subseqs_le(&a).collect();
            let expected: usize = a.entries().iter().map(|&x| x as usize + 1).product();
            prop_assert_eq!(subs.len(), expected);
            prop_assert!(subs.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(subs.iter().all(|b| b.is_le(&a)));
        }
    }
}
