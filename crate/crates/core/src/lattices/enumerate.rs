//! Fincke–Pohst enumeration of short vectors after LLL.
//!
//! Pruning intervals come from an exact rational LDLᵀ rounded to `f64` and
//! widened by a margin; every candidate's norm is then computed exactly in
//! integers, so counts never depend on floating point.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::lattice::{is_even, is_integral, Lattice};
use super::linalg::{common_denominator, scale_to_integer, ZMat};
use super::lll::{default_delta, lll_gram};
use crate::{Error, Result};

/// `counts[m] = #{x ∈ L : x·x = 2m}` for `m ≤ order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaSeries {
    pub order: usize,
    pub counts: Vec<BigInt>,
}

impl ThetaSeries {
    /// Truncated product; the series of an orthogonal direct sum.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut counts = vec![BigInt::zero(); order + 1];
        for (i, a) in self.counts.iter().enumerate().take(order + 1) {
            for (j, b) in other.counts.iter().enumerate().take(order + 1 - i) {
                counts[i + j] += a * b;
            }
        }
        Self { order, counts }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            counts: self.counts[..=order].to_vec(),
        }
    }
}

/// A reduced positive definite integer form ready for enumeration.
pub(crate) struct Enumerator {
    n: usize,
    g: Vec<Vec<i64>>,
    /// `q[i][i]` pivots, `q[i][j]` (j > i) the unit upper factor.
    q: Vec<Vec<f64>>,
    /// Rows: reduced basis in terms of the input basis.
    transform: ZMat,
}

#[derive(Clone)]
struct Node {
    level: usize,
    x: Vec<i64>,
    /// `acc[r] = Σ_{j ≥ level} g[r][j] x[j]` for r < level.
    acc: Vec<i64>,
    /// `cen[r] = Σ_{j ≥ level} q[r][j] x[j]` for r < level.
    cen: Vec<f64>,
    /// Exact norm of the fixed tail.
    partial: i64,
    /// Float budget left for the free head.
    budget: f64,
    all_zero: bool,
}

impl Enumerator {
    pub(crate) fn new(gram: &ZMat) -> Result<Self> {
        let n = gram.len();
        let out = lll_gram(gram, &default_delta())?;
        let g: Vec<Vec<i64>> = out
            .gram
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        x.to_i64()
                            .ok_or(Error::OutOfRange("Gram entry exceeds i64".into()))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let mut a: Vec<Vec<BigRational>> = out
            .gram
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        for i in 0..n {
            if a[i][i] <= BigRational::zero() {
                return Err(Error::NotDefinite);
            }
            for j in i + 1..n {
                a[j][i] = a[i][j].clone();
                a[i][j] = &a[i][j] / &a[i][i];
            }
            for k in i + 1..n {
                for l in k..n {
                    let t = &a[k][i] * &a[i][l];
                    a[k][l] -= t;
                }
            }
        }
        let q = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if j >= i {
                            a[i][j].to_f64().unwrap_or(f64::NAN)
                        } else {
                            0.0
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            n,
            g,
            q,
            transform: out.transform,
        })
    }

    fn root(&self, bound: i64) -> Node {
        Node {
            level: self.n,
            x: vec![0; self.n],
            acc: vec![0; self.n],
            cen: vec![0.0; self.n],
            partial: 0,
            budget: bound as f64,
            all_zero: true,
        }
    }

    /// Integer range for coordinate `i` given the tail in `node`.
    fn range(&self, node: &Node, i: usize) -> Option<(i64, i64)> {
        let qii = self.q[i][i];
        let c = -node.cen[i];
        let slack = node.budget + 1e-6 * (1.0 + node.budget.abs());
        if slack < 0.0 {
            return None;
        }
        let r = (slack / qii).sqrt() + 1e-9;
        let lo = (c - r).ceil() as i64;
        let hi = (c + r).floor() as i64;
        let lo = if node.all_zero { lo.max(0) } else { lo };
        (lo <= hi).then_some((lo, hi))
    }

    fn child(&self, node: &Node, i: usize, xi: i64) -> Node {
        let mut ch = node.clone();
        ch.level = i;
        ch.x[i] = xi;
        ch.partial = node.partial + xi * (self.g[i][i] * xi + 2 * node.acc[i]);
        let t = xi as f64 + node.cen[i];
        ch.budget = node.budget - self.q[i][i] * t * t;
        for r in 0..i {
            ch.acc[r] += self.g[r][i] * xi;
            ch.cen[r] += self.q[r][i] * xi as f64;
        }
        ch.all_zero = node.all_zero && xi == 0;
        ch
    }

    /// Visit every nonzero `x` with `x·x ≤ bound`, one of each `±x` pair.
    fn descend<F: FnMut(&[i64], i64)>(&self, node: &mut Node, bound: i64, visit: &mut F) {
        if node.level == 0 {
            if !node.all_zero && node.partial <= bound {
                visit(&node.x, node.partial);
            }
            return;
        }
        let i = node.level - 1;
        let Some((lo, hi)) = self.range(node, i) else {
            return;
        };
        if i == 0 {
            // leaf loop without cloning
            for x0 in lo..=hi {
                if node.all_zero && x0 == 0 {
                    continue;
                }
                let norm = node.partial + x0 * (self.g[0][0] * x0 + 2 * node.acc[0]);
                if norm <= bound {
                    node.x[0] = x0;
                    visit(&node.x, norm);
                }
            }
            node.x[0] = 0;
            return;
        }
        for xi in lo..=hi {
            let mut ch = self.child(node, i, xi);
            self.descend(&mut ch, bound, visit);
        }
    }

    /// Subtree roots after fixing the top `depth` coordinates.
    fn frontier(&self, bound: i64, depth: usize) -> Vec<Node> {
        let stop = self.n.saturating_sub(depth);
        let mut out = Vec::new();
        let mut stack = vec![self.root(bound)];
        while let Some(node) = stack.pop() {
            if node.level <= stop {
                out.push(node);
                continue;
            }
            let i = node.level - 1;
            if let Some((lo, hi)) = self.range(&node, i) {
                for xi in (lo..=hi).rev() {
                    stack.push(self.child(&node, i, xi));
                }
            }
        }
        out
    }

    fn split_depth(&self) -> usize {
        if self.n >= 16 {
            3
        } else if self.n >= 6 {
            2
        } else {
            0
        }
    }

    /// Counts of `x ≠ 0` by norm, both signs included.
    pub(crate) fn counts(&self, bound: i64) -> BTreeMap<i64, u64> {
        let nodes = self.frontier(bound, self.split_depth());
        let maps: Vec<BTreeMap<i64, u64>> = nodes
            .into_par_iter()
            .map(|mut node| {
                let mut local = vec![0u64; bound.max(0) as usize + 1];
                self.descend(&mut node, bound, &mut |_, norm| local[norm as usize] += 1);
                local
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, c)| c > 0)
                    .map(|(k, c)| (k as i64, c))
                    .collect()
            })
            .collect();
        let mut total = BTreeMap::new();
        for m in maps {
            for (k, c) in m {
                *total.entry(k).or_insert(0) += 2 * c;
            }
        }
        total
    }

    /// Vectors up to sign, as coefficient rows in the input basis, sorted.
    pub(crate) fn vectors(&self, bound: i64) -> Vec<(i64, Vec<i64>)> {
        let mut out = Vec::new();
        let mut root = self.root(bound);
        self.descend(&mut root, bound, &mut |x, norm| {
            out.push((norm, x.to_vec()))
        });
        let mut mapped: Vec<(i64, Vec<i64>)> = out
            .into_iter()
            .map(|(norm, x)| {
                let v = (0..self.n)
                    .map(|c| {
                        let s: BigInt = x
                            .iter()
                            .zip(&self.transform)
                            .map(|(&xi, row)| &row[c] * xi)
                            .sum();
                        s.to_i64().expect("coefficient fits i64")
                    })
                    .collect::<Vec<i64>>();
                (norm, canonical_sign(v))
            })
            .collect();
        mapped.sort();
        mapped
    }

    pub(crate) fn min_diagonal(&self) -> i64 {
        (0..self.n).map(|i| self.g[i][i]).min().unwrap_or(0)
    }
}

/// First nonzero entry positive.
fn canonical_sign(v: Vec<i64>) -> Vec<i64> {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => v.into_iter().map(|y| -y).collect(),
        _ => v,
    }
}

fn integer_gram(l: &Lattice) -> Result<ZMat> {
    if !l.is_definite() {
        return Err(Error::NotDefinite);
    }
    if !is_integral(l) {
        return Err(Error::Precondition("Gram matrix is not integral".into()));
    }
    Ok(scale_to_integer(l.gram(), &BigInt::one()))
}

/// Exact counts of nonzero vectors with `x·x ≤ max_norm`, keyed by norm.
pub fn short_vectors(l: &Lattice, max_norm: u64) -> Result<BTreeMap<u64, u64>> {
    if !is_even(l) {
        return Err(Error::NotEven);
    }
    let g = integer_gram(l)?;
    if l.rank() == 0 {
        return Ok(BTreeMap::new());
    }
    let bound = i64::try_from(max_norm).map_err(|_| Error::OutOfRange("max_norm".into()))?;
    let e = Enumerator::new(&g)?;
    Ok(e.counts(bound)
        .into_iter()
        .map(|(k, c)| (k as u64, c))
        .collect())
}

/// Short vectors up to sign as basis-coefficient rows, sorted by norm then
/// lexicographically.
pub fn short_vector_list(l: &Lattice, max_norm: u64) -> Result<Vec<(u64, Vec<i64>)>> {
    let g = integer_gram(l)?;
    if l.rank() == 0 {
        return Ok(Vec::new());
    }
    let bound = i64::try_from(max_norm).map_err(|_| Error::OutOfRange("max_norm".into()))?;
    let e = Enumerator::new(&g)?;
    Ok(e.vectors(bound)
        .into_iter()
        .map(|(k, v)| (k as u64, v))
        .collect())
}

/// Index sets of the connected components of the Gram graph.
pub fn orthogonal_components(gram: &[Vec<BigRational>]) -> Vec<Vec<usize>> {
    let n = gram.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && !gram[i][j].is_zero() {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

fn block_theta(g: &ZMat, order: usize) -> Result<ThetaSeries> {
    let e = Enumerator::new(g)?;
    let counts = e.counts(2 * order as i64);
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for (norm, k) in counts {
        c[(norm / 2) as usize] += k;
    }
    Ok(ThetaSeries { order, counts: c })
}

/// θ-series to order `order`; orthogonal blocks of the Gram are enumerated
/// separately and multiplied.
pub fn theta_series(l: &Lattice, order: usize) -> Result<ThetaSeries> {
    if !is_even(l) {
        return Err(Error::NotEven);
    }
    let g = integer_gram(l)?;
    let mut theta = ThetaSeries {
        order,
        counts: (0..=order)
            .map(|m| BigInt::from(u8::from(m == 0)))
            .collect(),
    };
    for comp in orthogonal_components(l.gram()) {
        let sub: ZMat = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| g[i][j].clone()).collect())
            .collect();
        theta = theta.mul(&block_theta(&sub, order)?);
    }
    Ok(theta)
}

/// θ-series without splitting into blocks; the reference for the block rule.
pub fn theta_series_direct(l: &Lattice, order: usize) -> Result<ThetaSeries> {
    if !is_even(l) {
        return Err(Error::NotEven);
    }
    block_theta(&integer_gram(l)?, order)
}

/// Minimal nonzero norm and the number of vectors attaining it, for any
/// positive definite rational Gram.
pub fn minimum(l: &Lattice) -> Result<(BigRational, u64)> {
    if !l.is_definite() {
        return Err(Error::NotDefinite);
    }
    let den = common_denominator(l.gram());
    let g = scale_to_integer(l.gram(), &den);
    let e = Enumerator::new(&g)?;
    let bound = e.min_diagonal();
    let counts = e.counts(bound);
    let (&norm, &count) = counts
        .iter()
        .next()
        .ok_or(Error::Construction("no short vector found".into()))?;
    Ok((BigRational::new(norm.into(), den), count))
}
