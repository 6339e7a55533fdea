//! The even unimodular Lorentzian lattices `II₈ₖ₊₁,₁` as membership
//! predicates, their Weyl vectors, and the Leech lattice as `w^⊥ / ℤw`
//! inside `II₂₅,₁`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::lattice::{Lattice, Metric};
use super::linalg::{
    hnf, inverse_q, left_kernel, mul_z, qmat_from_z, row_basis_q, solve_left, transpose, ZMat,
};
use crate::{Error, Result};

const SUPPORTED: [usize; 3] = [10, 18, 26];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordParity {
    Integer,
    HalfInteger,
}

/// A vector of ℝ^{d−1,1} with all coordinates in ℤ or all in ℤ + ½, stored
/// doubled.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LorentzianVector {
    doubled: Vec<BigInt>,
}

impl LorentzianVector {
    pub fn from_doubled(doubled: Vec<BigInt>) -> Result<Self> {
        let Some(first) = doubled.first() else {
            return Err(Error::Precondition("empty vector".into()));
        };
        let odd = first.is_odd();
        if doubled.iter().any(|x| x.is_odd() != odd) {
            return Err(Error::Precondition(
                "mixed integer and half-integer coordinates".into(),
            ));
        }
        Ok(Self { doubled })
    }

    pub fn from_integers(x: &[i64]) -> Result<Self> {
        Self::from_doubled(x.iter().map(|&v| BigInt::from(v) * 2).collect())
    }

    pub fn from_rationals(x: &[BigRational]) -> Result<Self> {
        let doubled = x
            .iter()
            .map(|v| {
                let d = v * BigRational::from_integer(2.into());
                if d.is_integer() {
                    Ok(d.to_integer())
                } else {
                    Err(Error::Precondition(format!(
                        "coordinate {v} is not a half-integer"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_doubled(doubled)
    }

    pub fn doubled(&self) -> &[BigInt] {
        &self.doubled
    }

    pub fn dim(&self) -> usize {
        self.doubled.len()
    }

    pub fn parity(&self) -> CoordParity {
        if self.doubled[0].is_odd() {
            CoordParity::HalfInteger
        } else {
            CoordParity::Integer
        }
    }

    pub fn coords(&self) -> Vec<BigRational> {
        self.doubled
            .iter()
            .map(|d| BigRational::new(d.clone(), 2.into()))
            .collect()
    }

    pub fn coord_sum(&self) -> BigRational {
        BigRational::new(self.doubled.iter().sum(), 2.into())
    }
}

impl fmt::Display for LorentzianVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `−x₁y₁ + x₂y₂ + … + x_dy_d`.
pub fn minkowski_dot(u: &LorentzianVector, v: &LorentzianVector) -> Result<BigRational> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch(u.dim(), v.dim()));
    }
    let s: BigInt = u
        .doubled
        .iter()
        .zip(&v.doubled)
        .skip(1)
        .map(|(a, b)| a * b)
        .sum();
    let t = &u.doubled[0] * &v.doubled[0];
    Ok(BigRational::new(s - t, 4.into()))
}

/// Membership in `II₈ₖ₊₁,₁`: all integers or all half-integers, even sum.
pub fn ii_member(v: &[BigRational]) -> Result<bool> {
    if !SUPPORTED.contains(&v.len()) {
        return Err(Error::UnsupportedDimension(v.len()));
    }
    let Ok(lv) = LorentzianVector::from_rationals(v) else {
        return Ok(false);
    };
    let sum = lv.coord_sum();
    Ok(sum.is_integer() && sum.to_integer().is_even())
}

/// `(28,0,1,…,8)`, `(46,0,1,…,16)`, `(70,0,1,…,24)`.
pub fn weyl_vector(dim: usize) -> Result<LorentzianVector> {
    let head = match dim {
        10 => 28,
        18 => 46,
        26 => 70,
        _ => return Err(Error::UnsupportedDimension(dim)),
    };
    let mut v = vec![head];
    v.extend(0..dim as i64 - 1);
    LorentzianVector::from_integers(&v)
}

/// `r·r = 2` and `r·w = −1` against the Weyl vector of `dim`.
pub fn is_fundamental_root(r: &LorentzianVector, dim: usize) -> Result<bool> {
    if r.dim() != dim {
        return Err(Error::DimensionMismatch(r.dim(), dim));
    }
    if !ii_member(&r.coords())? {
        return Err(Error::NotAMember(r.to_string()));
    }
    let w = weyl_vector(dim)?;
    let two = BigRational::from_integer(2.into());
    Ok(minkowski_dot(r, r)? == two && minkowski_dot(r, &w)? == -BigRational::one())
}

/// A basis of `II_{d−1,1}`: `D_d` plus the glue `(−½, ½, …, ½)`.
pub fn ii_basis(dim: usize) -> Result<Lattice> {
    if !SUPPORTED.contains(&dim) {
        return Err(Error::UnsupportedDimension(dim));
    }
    let e = |i: usize| {
        (0..dim)
            .map(|j| BigRational::from_integer(BigInt::from(u8::from(i == j))))
            .collect::<Vec<_>>()
    };
    let mut gens = vec![e(0)
        .iter()
        .zip(e(1))
        .map(|(a, b)| a + b)
        .collect::<Vec<_>>()];
    for i in 0..dim - 1 {
        gens.push(e(i).iter().zip(e(i + 1)).map(|(a, b)| a - b).collect());
    }
    let half = BigRational::new(1.into(), 2.into());
    let mut glue = vec![half.clone(); dim];
    glue[0] = -half;
    gens.push(glue);
    Lattice::new(row_basis_q(&gens), Metric::Lorentzian)
}

/// Leech as `S/ℤw` with `S = w^⊥ ∩ II₂₅,₁` and `w` the lightlike Weyl vector.
///
/// Rows of the result are representatives in ℝ^{25,1}; the Gram is taken
/// with the Lorentzian form and is positive definite.
pub fn leech_from_ii26() -> Result<Lattice> {
    let ii = ii_basis(26)?;
    let w = weyl_vector(26)?.coords();
    let pair: ZMat = ii
        .basis()
        .iter()
        .map(|b| {
            let x = ii.inner(b, &w);
            if x.is_integer() {
                Ok(vec![x.to_integer()])
            } else {
                Err(Error::Construction("non-integral pairing with w".into()))
            }
        })
        .collect::<Result<_>>()?;
    // S in basis coefficients
    let k = left_kernel(&pair);
    if k.len() != 25 {
        return Err(Error::Construction(format!("w-perp rank {}", k.len())));
    }
    let s_basis = mul_z_q(&k, ii.basis());
    let t = solve_left(&s_basis, &w)
        .ok_or_else(|| Error::Construction("w not in its own complement".into()))?;
    if !t.iter().all(BigRational::is_integer) {
        return Err(Error::Construction("w not in S".into()));
    }
    let t: Vec<BigInt> = t.iter().map(BigRational::to_integer).collect();
    // u · tᵀ = (±1, 0, …); V = (u⁻¹)ᵀ is unimodular with first row ±t
    let col: ZMat = t.iter().map(|x| vec![x.clone()]).collect();
    let f = hnf(&col);
    if !f.h[0][0].is_one() {
        return Err(Error::Construction("w is not primitive".into()));
    }
    let uinv = inverse_q(&qmat_from_z(&f.u))
        .ok_or_else(|| Error::Construction("singular transform".into()))?;
    let v: ZMat = transpose(&uinv)
        .iter()
        .map(|r| r.iter().map(BigRational::to_integer).collect())
        .collect();
    debug_assert_eq!(v[0], t);
    let completed = mul_z(&v, &k);
    let rows = mul_z_q(&completed[1..].to_vec(), ii.basis());
    let leech = Lattice::new(rows, Metric::Lorentzian)?;
    if leech.rank() != 24 || !leech.is_definite() {
        return Err(Error::Construction(
            "quotient is not a definite rank-24 lattice".into(),
        ));
    }
    Ok(leech)
}

fn mul_z_q(a: &ZMat, b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .fold(BigRational::zero(), |acc, (x, br)| {
                            acc + BigRational::from_integer(x.clone()) * &br[j]
                        })
                })
                .collect()
        })
        .collect()
}

/// Sign of the timelike coordinate; `II` vectors with negative norm lie in
/// one of two cones.
pub fn time_sign(v: &LorentzianVector) -> i8 {
    match v.doubled[0].sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}
