//! Exact matrices over ℤ and ℚ. Hermite normal form with its unimodular
//! transform is the one primitive behind kernels, sublattices and quotients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type ZMat = Vec<Vec<BigInt>>;
pub type QMat = Vec<Vec<BigRational>>;

pub fn zmat_from_i64(rows: &[Vec<i64>]) -> ZMat {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn qmat_from_z(m: &ZMat) -> QMat {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

pub fn identity_q(n: usize) -> QMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn identity_z(n: usize) -> ZMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn mul_q(a: &QMat, b: &QMat) -> QMat {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            debug_assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .fold(BigRational::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn mul_z(a: &ZMat, b: &ZMat) -> ZMat {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .fold(BigInt::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mul_q(v: &[BigRational], m: &QMat) -> Vec<BigRational> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| {
            v.iter()
                .zip(m)
                .filter(|(x, _)| !x.is_zero())
                .fold(BigRational::zero(), |acc, (x, row)| acc + x * &row[j])
        })
        .collect()
}

/// Least common multiple of all denominators.
pub fn common_denominator(m: &QMat) -> BigInt {
    m.iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// `d · m` as an integer matrix; `d` must clear every denominator.
pub fn scale_to_integer(m: &QMat, d: &BigInt) -> ZMat {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let y = x * BigRational::from_integer(d.clone());
                    debug_assert!(y.is_integer());
                    y.to_integer()
                })
                .collect()
        })
        .collect()
}

pub fn is_integer_matrix(m: &QMat) -> bool {
    m.iter().flatten().all(BigRational::is_integer)
}

/// Determinant by exact Gaussian elimination.
pub fn det_q(m: &QMat) -> BigRational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// Inverse by Gauss–Jordan; `None` when singular.
pub fn inverse_q(m: &QMat) -> Option<QMat> {
    let n = m.len();
    let mut a: QMat = m
        .iter()
        .zip(identity_q(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        let inv = BigRational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..2 * n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Rank over ℚ.
pub fn rank_q(m: &QMat) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            if a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] / &a[r][col];
            for c in col..cols {
                let t = &f * &a[r][c];
                a[i][c] -= t;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Solve `c · basis = v` for `c` (basis rows independent). `None` when `v`
/// is outside the row span.
pub fn solve_left(basis: &QMat, v: &[BigRational]) -> Option<Vec<BigRational>> {
    let r = basis.len();
    let d = v.len();
    // augmented system Bᵀ c = v: d equations, r unknowns
    let mut a: QMat = (0..d)
        .map(|j| {
            basis
                .iter()
                .map(|row| row[j].clone())
                .chain([v[j].clone()])
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..r {
        let Some(p) = (row..d).find(|&i| !a[i][col].is_zero()) else {
            return None; // dependent basis
        };
        a.swap(p, row);
        let inv = BigRational::one() / &a[row][col];
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..d {
            if i == row || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for c in col..=r {
                let t = &f * &a[row][c];
                a[i][c] -= t;
            }
        }
        pivots.push(col);
        row += 1;
    }
    if a[row..].iter().any(|eq| !eq[r].is_zero()) {
        return None;
    }
    Some((0..r).map(|i| a[i][r].clone()).collect())
}

/// Row-style Hermite normal form `h = u · a` with `u` unimodular.
///
/// Nonzero rows of `h` come first, each with a positive pivot strictly right
/// of the previous one and entries above a pivot reduced into `[0, pivot)`.
/// The trailing `rows − rank` rows of `u` span the left kernel of `a`.
#[derive(Debug, Clone)]
pub struct Hnf {
    pub h: ZMat,
    pub u: ZMat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

fn row_sub_mul(m: &mut ZMat, target: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in t.iter_mut().zip(s) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

pub fn hnf(a: &ZMat) -> Hnf {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut h = a.clone();
    let mut u = identity_z(rows);
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !h[i][col].is_zero())
                .min_by(|&i, &j| h[i][col].abs().cmp(&h[j][col].abs()));
            let Some(best) = best else { break };
            h.swap(r, best);
            u.swap(r, best);
            let mut clean = true;
            for i in r + 1..rows {
                if h[i][col].is_zero() {
                    continue;
                }
                let q = h[i][col].div_floor(&h[r][col]);
                row_sub_mul(&mut h, i, r, &q);
                row_sub_mul(&mut u, i, r, &q);
                if !h[i][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.get(r).is_some_and(|row| !row[col].is_zero()) {
            if h[r][col].is_negative() {
                for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                    *x = -std::mem::take(x);
                }
            }
            for i in 0..r {
                let q = h[i][col].div_floor(&h[r][col]);
                row_sub_mul(&mut h, i, r, &q);
                row_sub_mul(&mut u, i, r, &q);
            }
            pivots.push(col);
            r += 1;
        }
    }
    Hnf {
        h,
        u,
        rank: r,
        pivots,
    }
}

/// A ℤ-basis of the left kernel `{x : x · a = 0}`.
pub fn left_kernel(a: &ZMat) -> ZMat {
    let f = hnf(a);
    f.u[f.rank..].to_vec()
}

/// A ℤ-basis (HNF rows) of the lattice generated by the rows of `gens`.
pub fn row_basis(gens: &ZMat) -> ZMat {
    let f = hnf(gens);
    f.h[..f.rank].to_vec()
}

/// A ℤ-basis of the rational row span generated by `gens`.
pub fn row_basis_q(gens: &QMat) -> QMat {
    let d = common_denominator(gens);
    let basis = row_basis(&scale_to_integer(gens, &d));
    let dq = BigRational::from_integer(d);
    basis
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()) / &dq)
                .collect()
        })
        .collect()
}

/// Integer coefficient vectors `n ∈ ℤᵏ` with `n · a ∈ ℤᵐ`, where `a` is a
/// rational `k × m` matrix. The result is a basis of that full-rank
/// sublattice of `ℤᵏ`.
pub fn integral_preimage(a: &QMat) -> ZMat {
    let k = a.len();
    let m = a.first().map_or(0, Vec::len);
    let d = common_denominator(a);
    let ai = scale_to_integer(a, &d);
    // (n, t) with n·ai + t·(d I) = 0  ⇔  n·ai ≡ 0 (mod d)
    let mut stacked = ai;
    for i in 0..m {
        let mut row = vec![BigInt::zero(); m];
        row[i] = d.clone();
        stacked.push(row);
    }
    let kernel = left_kernel(&stacked);
    let projected: ZMat = kernel.iter().map(|row| row[..k].to_vec()).collect();
    row_basis(&projected)
}
