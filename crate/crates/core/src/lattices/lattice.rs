use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::linalg::{det_q, inverse_q, mul_q, rank_q, solve_left, transpose, vec_mul_q, QMat};
use crate::{Error, Result};

/// The bilinear form on the ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Metric {
    /// `x·y = Σ xᵢyᵢ`.
    Euclidean,
    /// `x·y = −x₁y₁ + x₂y₂ + … + x_dy_d`, first coordinate timelike.
    Lorentzian,
    /// An explicit symmetric matrix.
    Form(QMat),
}

impl Metric {
    pub fn name(&self) -> &'static str {
        match self {
            Metric::Euclidean => "euclidean",
            Metric::Lorentzian => "lorentzian",
            Metric::Form(_) => "gram",
        }
    }

    pub fn pair(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        match self {
            Metric::Euclidean => x
                .iter()
                .zip(y)
                .fold(BigRational::zero(), |a, (p, q)| a + p * q),
            Metric::Lorentzian => {
                let s = x
                    .iter()
                    .zip(y)
                    .skip(1)
                    .fold(BigRational::zero(), |a, (p, q)| a + p * q);
                s - &x[0] * &y[0]
            }
            Metric::Form(m) => {
                let mx = vec_mul_q(x, m);
                mx.iter()
                    .zip(y)
                    .fold(BigRational::zero(), |a, (p, q)| a + p * q)
            }
        }
    }
}

/// A lattice: the ℤ-span of the rows of `basis` in an ambient space with
/// form `metric`, scaled globally by `scale`.
///
/// The Gram matrix `scale · B S Bᵀ` is cached.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    basis: QMat,
    metric: Metric,
    scale: BigRational,
    gram: QMat,
}

impl Lattice {
    pub fn new(basis: QMat, metric: Metric) -> Result<Self> {
        Self::with_scale(basis, metric, BigRational::one())
    }

    pub fn with_scale(basis: QMat, metric: Metric, scale: BigRational) -> Result<Self> {
        let dim = basis.first().map_or(0, Vec::len);
        if basis.iter().any(|r| r.len() != dim) {
            return Err(Error::Precondition("ragged basis".into()));
        }
        if let Metric::Form(m) = &metric {
            if m.len() != dim || m.iter().any(|r| r.len() != dim) {
                return Err(Error::DimensionMismatch(m.len(), dim));
            }
        }
        if scale.is_zero() {
            return Err(Error::Precondition("zero scale".into()));
        }
        if rank_q(&basis) != basis.len() {
            return Err(Error::Precondition(
                "basis rows are linearly dependent".into(),
            ));
        }
        let gram = basis
            .iter()
            .map(|x| basis.iter().map(|y| metric.pair(x, y) * &scale).collect())
            .collect();
        Ok(Self {
            basis,
            metric,
            scale,
            gram,
        })
    }

    /// The abstract lattice with the given Gram matrix (basis = identity).
    pub fn from_gram(gram: QMat) -> Result<Self> {
        let n = gram.len();
        for i in 0..n {
            if gram[i].len() != n {
                return Err(Error::DimensionMismatch(gram[i].len(), n));
            }
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Precondition("Gram matrix is not symmetric".into()));
                }
            }
        }
        if det_q(&gram).is_zero() {
            return Err(Error::SingularGram);
        }
        Self::new(super::linalg::identity_q(n), Metric::Form(gram))
    }

    pub fn from_integer_rows(rows: &[Vec<i64>], metric: Metric) -> Result<Self> {
        let basis = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        Self::new(basis, metric)
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.first().map_or(0, Vec::len)
    }

    pub fn basis(&self) -> &QMat {
        &self.basis
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    pub fn gram(&self) -> &QMat {
        &self.gram
    }

    pub fn det(&self) -> BigRational {
        det_q(&self.gram)
    }

    /// Inner product of two ambient vectors under the scaled form.
    pub fn inner(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        self.metric.pair(x, y) * &self.scale
    }

    pub fn norm(&self, x: &[BigRational]) -> BigRational {
        self.inner(x, x)
    }

    /// The ambient vector with the given basis coefficients.
    pub fn vector(&self, coeffs: &[BigInt]) -> Vec<BigRational> {
        let c: Vec<BigRational> = coeffs
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        vec_mul_q(&c, &self.basis)
    }

    /// Coordinates of an ambient vector in this basis, when it lies in the
    /// rational span.
    pub fn coordinates(&self, x: &[BigRational]) -> Option<Vec<BigRational>> {
        if x.len() != self.ambient_dim() {
            return None;
        }
        solve_left(&self.basis, x)
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.coordinates(x)
            .is_some_and(|c| c.iter().all(BigRational::is_integer))
    }

    /// Equal as point sets: same ambient data and mutual basis membership.
    pub fn same_points(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.rank() == other.rank()
            && self.basis.iter().all(|b| other.contains(b))
            && other.basis.iter().all(|b| self.contains(b))
    }

    /// Positive definite Gram, decided exactly by the signs of the LDLᵀ
    /// pivots.
    pub fn is_definite(&self) -> bool {
        let n = self.rank();
        let mut a = self.gram.clone();
        for i in 0..n {
            if !a[i][i].is_positive() {
                return false;
            }
            for r in i + 1..n {
                let f = &a[r][i] / &a[i][i];
                for c in i..n {
                    let t = &f * &a[i][c];
                    a[r][c] -= t;
                }
            }
        }
        true
    }

    /// Same points, form multiplied by `k`.
    pub fn rescaled(&self, k: &BigRational) -> Result<Self> {
        Self::with_scale(self.basis.clone(), self.metric.clone(), &self.scale * k)
    }

    /// Replace the basis by `transform · basis` (rows of `transform` are
    /// integer coefficient vectors).
    pub fn with_basis_transform(&self, transform: &[Vec<BigInt>]) -> Result<Self> {
        let t: QMat = transform
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        Self::with_scale(
            mul_q(&t, &self.basis),
            self.metric.clone(),
            self.scale.clone(),
        )
    }

    /// Orthogonal direct sum; ambient spaces are concatenated.
    pub fn direct_sum(parts: &[&Lattice]) -> Result<Self> {
        let dim: usize = parts.iter().map(|l| l.ambient_dim()).sum();
        let mut basis = Vec::new();
        let mut offset = 0;
        for l in parts {
            for row in l.basis() {
                let mut v = vec![BigRational::zero(); dim];
                v[offset..offset + row.len()].clone_from_slice(row);
                basis.push(v);
            }
            offset += l.ambient_dim();
        }
        let first = parts
            .first()
            .ok_or_else(|| Error::Precondition("empty direct sum".into()))?;
        let uniform = parts
            .iter()
            .all(|l| l.metric == Metric::Euclidean && l.scale == first.scale);
        if uniform {
            return Self::with_scale(basis, Metric::Euclidean, first.scale.clone());
        }
        let mut form = vec![vec![BigRational::zero(); dim]; dim];
        let mut offset = 0;
        for l in parts {
            let d = l.ambient_dim();
            let local = l.metric.matrix(d);
            for i in 0..d {
                for j in 0..d {
                    form[offset + i][offset + j] = &local[i][j] * &l.scale;
                }
            }
            offset += d;
        }
        Self::new(basis, Metric::Form(form))
    }
}

impl Metric {
    /// The form as a `d × d` matrix.
    pub fn matrix(&self, d: usize) -> QMat {
        match self {
            Metric::Form(m) => m.clone(),
            _ => {
                let mut m = super::linalg::identity_q(d);
                if *self == Metric::Lorentzian && d > 0 {
                    m[0][0] = -BigRational::one();
                }
                m
            }
        }
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("rank", &self.rank())
            .field("ambient_dim", &self.ambient_dim())
            .field("metric", &self.metric.name())
            .field("scale", &self.scale.to_string())
            .finish()
    }
}

/// Every Gram entry is an integer.
pub fn is_integral(l: &Lattice) -> bool {
    l.gram.iter().flatten().all(BigRational::is_integer)
}

/// Integral with even diagonal.
pub fn is_even(l: &Lattice) -> bool {
    is_integral(l)
        && l.gram
            .iter()
            .enumerate()
            .all(|(i, r)| r[i].to_integer() % 2 == BigInt::zero())
}

/// `|det Gram| = 1`.
pub fn is_unimodular(l: &Lattice) -> bool {
    l.det().abs().is_one()
}

/// The dual lattice `{y in span(L) : y·x ∈ ℤ for all x ∈ L}`, basis
/// `G⁻¹ B`.
pub fn dual_lattice(l: &Lattice) -> Result<Lattice> {
    let inv = inverse_q(&l.gram).ok_or(Error::SingularGram)?;
    Lattice::with_scale(mul_q(&inv, &l.basis), l.metric.clone(), l.scale.clone())
}

/// Transposed basis; occasionally handy for column-oriented constructions.
pub fn basis_columns(l: &Lattice) -> QMat {
    transpose(&l.basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn zn(n: usize) -> Lattice {
        Lattice::new(super::super::linalg::identity_q(n), Metric::Euclidean).unwrap()
    }

    fn a2() -> Lattice {
        Lattice::from_integer_rows(&[vec![1, -1, 0], vec![0, 1, -1]], Metric::Euclidean).unwrap()
    }

    #[test]
    fn predicates() {
        let z = zn(5);
        assert_eq!(
            (is_integral(&z), is_even(&z), is_unimodular(&z)),
            (true, false, true)
        );
        let a = a2();
        assert_eq!(
            (is_integral(&a), is_even(&a), is_unimodular(&a)),
            (true, true, false)
        );
        assert_eq!(a.det(), rat(3, 1));
    }

    #[test]
    fn dual_examples() {
        let z = zn(4);
        assert!(dual_lattice(&z).unwrap().same_points(&z));
        let d = dual_lattice(&a2()).unwrap();
        assert_eq!(d.det(), rat(1, 3));
        assert!(dual_lattice(&d).unwrap().same_points(&a2()));
        // A2 ⊂ A2*
        assert!(a2().basis().iter().all(|b| d.contains(b)));
    }

    #[test]
    fn dependent_basis_rejected() {
        let r = Lattice::from_integer_rows(&[vec![1, 2], vec![2, 4]], Metric::Euclidean);
        assert!(r.is_err());
    }

    #[test]
    fn lorentzian_gram() {
        let l = Lattice::from_integer_rows(&[vec![1, 1], vec![1, 0]], Metric::Lorentzian).unwrap();
        assert_eq!(l.gram()[0][0], rat(0, 1));
        assert_eq!(l.gram()[1][1], rat(-1, 1));
        assert!(!l.is_definite());
    }

    #[test]
    fn direct_sum_and_rescale() {
        let s = Lattice::direct_sum(&[&a2(), &zn(2)]).unwrap();
        assert_eq!(s.rank(), 4);
        assert_eq!(s.det(), rat(3, 1));
        let t = a2().rescaled(&rat(1, 2)).unwrap();
        let u = Lattice::direct_sum(&[&t, &zn(1)]).unwrap();
        assert_eq!(u.det(), rat(3, 4));
        assert!(matches!(u.metric(), Metric::Form(_)));
    }

    #[test]
    fn from_gram_validates() {
        assert!(
            Lattice::from_gram(vec![vec![rat(2, 1), rat(1, 1)], vec![rat(0, 1), rat(2, 1)]])
                .is_err()
        );
        let l = Lattice::from_gram(vec![
            vec![rat(2, 1), rat(-1, 1)],
            vec![rat(-1, 1), rat(2, 1)],
        ])
        .unwrap();
        assert!(is_even(&l) && l.is_definite());
    }
}
