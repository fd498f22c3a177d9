//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's enumerators or coefficient helpers.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use severi::{CurveConfig, Engine, TangencySeq};

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Sequences (without trailing zeros) of total weight `w`.
pub fn seqs_of_weight(w: u32) -> Vec<Vec<u32>> {
    fn go(k: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            let mut v = cur.clone();
            while v.last() == Some(&0) {
                v.pop();
            }
            out.push(v);
            return;
        }
        if k > left {
            return;
        }
        for n in 0..=left / k {
            cur.push(n);
            go(k + 1, left - n * k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, w, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// Every vector `v` with `0 <= v[i] <= bounds[i]`.
pub fn boxes(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Nonincreasing lists with entries in `2..=max_entry` and sum at most `max_sum`.
pub fn fat_point_lists(max_entry: u32, max_sum: u32) -> Vec<Vec<u32>> {
    fn go(top: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        for m in (2..=top.min(left)).rev() {
            cur.push(m);
            go(m, left - m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_entry, max_sum, &mut Vec::new(), &mut out);
    out
}

/// Balanced irreducible problems with `1 <= d <= max_d`, `0 <= g <= max_g`,
/// fixed multiplicities `>= 2` summing to at most `max_s`, and every split
/// of the remaining conic intersection between `alpha` and `beta`.
pub fn corpus(max_d: u32, max_g: i64, max_s: u32) -> Vec<CurveConfig> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for s in fat_point_lists(d, max_s.min(2 * d)) {
            let rem = 2 * d - s.iter().sum::<u32>();
            for wa in 0..=rem {
                for a in seqs_of_weight(wa) {
                    for b in seqs_of_weight(rem - wa) {
                        for g in 0..=max_g {
                            out.push(CurveConfig::new(d, g, a.clone(), b.clone(), s.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

fn weight(v: &[u32]) -> u32 {
    v.iter().enumerate().map(|(i, &x)| (i as u32 + 1) * x).sum()
}

fn size(v: &[u32]) -> u32 {
    v.iter().sum()
}

fn padded(v: &[u32], n: usize) -> Vec<u32> {
    let mut w = v.to_vec();
    w.resize(n.max(v.len()), 0);
    w
}

fn sub(a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let (a, b) = (padded(a, n), padded(b, n));
    a.iter().zip(&b).map(|(x, y)| x - y).collect()
}

fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let (a, b) = (padded(a, n), padded(b, n));
    a.iter().zip(&b).map(|(x, y)| x + y).collect()
}

fn le(a: &[u32], b: &[u32]) -> bool {
    let n = a.len().max(b.len());
    padded(a, n).iter().zip(&padded(b, n)).all(|(x, y)| x <= y)
}

fn binom(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n as u64) / (factorial(k as u64) * factorial((n - k) as u64))
}

#[derive(Clone, Debug)]
struct Piece {
    d: u32,
    g: i64,
    alpha: Vec<u32>,
    beta: Vec<u32>,
    gamma: Vec<u32>,
    s: Vec<u32>,
}

impl Piece {
    fn upsilon(&self) -> i64 {
        self.d as i64 + size(&self.beta) as i64 + self.g - 1
    }
}

struct Walk<'a> {
    engine: &'a Engine,
    parent: &'a CurveConfig,
    total: BigRational,
    tuples: u64,
}

impl Walk<'_> {
    fn close(&mut self, pieces: &[Piece]) {
        let p = self.parent;
        let alpha = p.alpha.entries();
        let mut used = Vec::new();
        for pc in pieces {
            used = add(&used, &pc.alpha);
        }
        let rest = sub(alpha, &used);
        let mut coef = BigUint::one();
        for (k, &a) in alpha.iter().enumerate() {
            let mut denom = factorial(rest[k] as u64);
            for pc in pieces {
                denom *= factorial(*pc.alpha.get(k).unwrap_or(&0) as u64);
            }
            coef *= factorial(a as u64) / denom;
        }
        let n = (p.upsilon() - 1) as u64;
        let mut denom = BigUint::one();
        for pc in pieces {
            denom *= factorial(pc.upsilon() as u64);
        }
        coef *= factorial(n) / denom;
        for pc in pieces {
            for (k, &b) in pc.beta.iter().enumerate() {
                let c = *pc.gamma.get(k).unwrap_or(&0);
                coef *= binom(b, c) * BigUint::from(k as u32 + 1).pow(b - c);
            }
            let sub = CurveConfig::new(
                pc.d,
                pc.g,
                pc.alpha.clone(),
                pc.beta.clone(),
                pc.s.clone(),
            );
            coef *= self.engine.count_irreducible(&sub).unwrap();
        }
        self.tuples += 1;
        self.total += BigRational::new(BigInt::from(coef), BigInt::from(factorial(pieces.len() as u64)));
    }

    fn step(
        &mut self,
        deg_left: u32,
        alpha_left: &[u32],
        gamma_left: &[u32],
        s_used: &[u32],
        ups_left: i64,
        pieces: &mut Vec<Piece>,
    ) {
        let s = self.parent.s.mults();
        if deg_left == 0 {
            let gamma_done = gamma_left.iter().all(|&x| x == 0);
            let points_ok = s.iter().zip(s_used).all(|(&sk, &u)| sk - u <= 1);
            if gamma_done && points_ok && ups_left == 0 {
                self.close(pieces);
            }
            return;
        }
        let s_room: Vec<u32> = s.iter().zip(s_used).map(|(a, b)| a - b).collect();
        for d in 1..=deg_left {
            for gamma in boxes(gamma_left) {
                for alpha in boxes(alpha_left) {
                    for si in boxes(&s_room) {
                        let used = weight(&alpha) + weight(&gamma) + size(&si);
                        if used >= 2 * d {
                            continue;
                        }
                        for delta in seqs_of_weight(2 * d - used) {
                            let beta = add(&gamma, &delta);
                            for g in 0.. {
                                let pc = Piece {
                                    d,
                                    g,
                                    alpha: alpha.clone(),
                                    beta: beta.clone(),
                                    gamma: gamma.clone(),
                                    s: si.clone(),
                                };
                                let u = pc.upsilon();
                                if u > ups_left {
                                    break;
                                }
                                if u < 0 {
                                    continue;
                                }
                                pieces.push(pc);
                                self.step(
                                    deg_left - d,
                                    &sub(alpha_left, &alpha),
                                    &sub(gamma_left, &gamma),
                                    &add(s_used, &si),
                                    ups_left - u,
                                    pieces,
                                );
                                pieces.pop();
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Type II sum of one recursion step, enumerated as ordered tuples of
/// components weighted by `1/l!`. Returns the sum and the tuple count.
pub fn ordered_type2(engine: &Engine, c: &CurveConfig) -> (BigRational, u64) {
    let mut walk = Walk {
        engine,
        parent: c,
        total: BigRational::zero(),
        tuples: 0,
    };
    if c.d >= 2 && c.upsilon() >= 1 {
        let zeros = vec![0; c.s.len()];
        walk.step(
            c.d - 2,
            c.alpha.entries(),
            c.beta.entries(),
            &zeros,
            c.upsilon() - 1,
            &mut Vec::new(),
        );
    }
    (walk.total, walk.tuples)
}

/// `sum_k k * N(alpha + e_k, beta - e_k)`.
pub fn type1(engine: &Engine, c: &CurveConfig) -> BigUint {
    let mut total = BigUint::zero();
    for (i, &b) in c.beta.entries().iter().enumerate() {
        if b == 0 {
            continue;
        }
        let k = i + 1;
        let mut beta = c.beta.entries().to_vec();
        beta[i] -= 1;
        let sub = CurveConfig::new(
            c.d,
            c.g,
            c.alpha.plus_unit(k, 1),
            TangencySeq::new(beta),
            c.s.clone(),
        );
        total += engine.count_irreducible(&sub).unwrap() * k;
    }
    total
}

/// Loopless multigraphs on labeled vertices with the given degrees, by
/// enumerating the multiplicity of every vertex pair.
pub fn brute_multigraphs(degrees: &[u32]) -> u64 {
    let n = degrees.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    fn go(pairs: &[(usize, usize)], left: &mut Vec<u32>) -> u64 {
        match pairs.split_first() {
            None => u64::from(left.iter().all(|&x| x == 0)),
            Some((&(i, j), rest)) => {
                let mut total = 0;
                for m in 0..=left[i].min(left[j]) {
                    left[i] -= m;
                    left[j] -= m;
                    total += go(rest, left);
                    left[i] += m;
                    left[j] += m;
                }
                total
            }
        }
    }
    go(&pairs, &mut degrees.to_vec())
}

/// Compositions (ordered, positive parts) of every total up to `max_sum`.
pub fn compositions_up_to(max_sum: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for x in 1..=left {
            cur.push(x);
            go(left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_sum, &mut Vec::new(), &mut out);
    out
}
