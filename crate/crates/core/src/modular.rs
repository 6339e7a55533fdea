//! Integer q-series: `η²⁴`, truncated products and inverses, and the
//! j-function as `θ_L / η²⁴` for rank-24 even unimodular `L`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lattices::{is_even, is_unimodular, theta_series, Lattice};
use crate::{Error, Result};

/// `Σ_{e = low}^{order} coeffs[e − low] qᵉ`, known exactly through `order`.
///
/// `coeffs[0] ≠ 0` unless the series is zero through `order`, in which case
/// `coeffs` is empty and `low = order + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentSeries {
    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut s = Self { low, coeffs };
        s.normalize();
        s
    }

    pub fn from_i64(low: i64, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + O(q^{order+1})`.
    pub fn one(order: i64) -> Self {
        let mut c = vec![BigInt::zero(); (order + 1).max(0) as usize];
        if let Some(first) = c.first_mut() {
            *first = BigInt::one();
        }
        Self::new(0, c)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
        self.low += lead as i64;
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a known coefficient.
    pub fn order(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `qᵉ`; zero below `low`, `None` past `order`.
    pub fn coeff(&self, e: i64) -> Option<BigInt> {
        if e > self.order() {
            None
        } else if e < self.low {
            Some(BigInt::zero())
        } else {
            Some(self.coeffs[(e - self.low) as usize].clone())
        }
    }

    /// Same series known only through `order`.
    pub fn truncate(&self, order: i64) -> Self {
        let keep = (order - self.low + 1).clamp(0, self.coeffs.len() as i64) as usize;
        if keep == 0 {
            return Self {
                low: order.min(self.order()) + 1,
                coeffs: Vec::new(),
            };
        }
        Self::new(self.low, self.coeffs[..keep].to_vec())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let low = self.low.min(other.low);
        let coeffs = (low..=order)
            .map(|e| self.coeff(e).unwrap_or_default() - other.coeff(e).unwrap_or_default())
            .collect();
        let mut s = Self::new(low, coeffs);
        if s.is_zero() {
            s.low = order + 1;
        }
        s
    }
}

impl fmt::Display for LaurentSeries {
    /// `q^-1 + 744 + 196884 q + 21493760 q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + k as i64;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(&var)?,
                (_, false) => write!(f, "{mag} {var}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Cauchy product through exponent `order`.
pub fn series_mul(a: &LaurentSeries, b: &LaurentSeries, order: i64) -> LaurentSeries {
    // both factors must be known far enough for the result
    let order = order.min(a.order() + b.low).min(b.order() + a.low);
    let low = a.low + b.low;
    if a.is_zero() || b.is_zero() || order < low {
        return LaurentSeries {
            low: order + 1,
            coeffs: Vec::new(),
        };
    }
    let len = (order - low + 1) as usize;
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.coeffs.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    LaurentSeries::new(low, out)
}

/// `a⁻¹` through exponent `order`; the leading coefficient must be ±1.
pub fn series_inv(a: &LaurentSeries, order: i64) -> Result<LaurentSeries> {
    let lead = a
        .coeffs
        .first()
        .ok_or_else(|| Error::NonUnitLeading("0".into()))?;
    if !lead.abs().is_one() {
        return Err(Error::NonUnitLeading(lead.to_string()));
    }
    let low = -a.low;
    // a is known through a.order(), so a⁻¹ through low + (a.order() − a.low)
    let order = order.min(low + a.order() - a.low);
    if order < low {
        return Ok(LaurentSeries {
            low: order + 1,
            coeffs: Vec::new(),
        });
    }
    let len = (order - low + 1) as usize;
    let mut b: Vec<BigInt> = Vec::with_capacity(len);
    b.push(lead.clone());
    for k in 1..len {
        let mut s = BigInt::zero();
        for i in 1..=k.min(a.coeffs.len() - 1) {
            s += &a.coeffs[i] * &b[k - i];
        }
        // b_k = −s / lead, exact since lead = ±1
        let (q, r) = (-s).div_rem(lead);
        debug_assert!(r.is_zero());
        b.push(q);
    }
    Ok(LaurentSeries::new(low, b))
}

/// `∏_{n=1}^{order} (1 − qⁿ)` through exponent `order`.
fn euler_product(order: usize) -> LaurentSeries {
    let mut p = vec![BigInt::zero(); order + 1];
    p[0] = BigInt::one();
    for n in 1..=order {
        for e in (n..=order).rev() {
            let t = p[e - n].clone();
            p[e] -= t;
        }
    }
    LaurentSeries::new(0, p)
}

/// `q ∏_{n=1}^{N} (1 − qⁿ)²⁴` through exponent `N + 1`.
pub fn eta24(n: usize) -> Result<LaurentSeries> {
    if n == 0 {
        return Err(Error::OutOfRange("eta24 needs N ≥ 1".into()));
    }
    let ord = n as i64;
    let p = euler_product(n);
    let p2 = series_mul(&p, &p, ord);
    let p4 = series_mul(&p2, &p2, ord);
    let p8 = series_mul(&p4, &p4, ord);
    let p16 = series_mul(&p8, &p8, ord);
    let p24 = series_mul(&p16, &p8, ord);
    Ok(LaurentSeries::new(1, p24.coeffs.clone()).with_order(ord + 1))
}

impl LaurentSeries {
    /// Pad with explicit zeros so the series is known through `order`.
    fn with_order(mut self, order: i64) -> Self {
        if self.is_zero() {
            self.low = order + 1;
            return self;
        }
        while self.order() < order {
            self.coeffs.push(BigInt::zero());
        }
        self
    }
}

/// `θ_L / η²⁴` through exponent `order`.
///
/// Needs θ through `q^{order+1}`, i.e. vectors up to norm `2·order + 2`.
pub fn j_from_lattice(l: &Lattice, order: usize) -> Result<LaurentSeries> {
    if l.rank() != 24 || !is_even(l) || !is_unimodular(l) {
        return Err(Error::Precondition(
            "j needs a rank-24 even unimodular lattice".into(),
        ));
    }
    let theta = theta_series(l, order + 1)?;
    let t = LaurentSeries::new(0, theta.counts).with_order(order as i64 + 1);
    let inv = series_inv(&eta24(order + 1)?, order as i64)?;
    Ok(series_mul(&t, &inv, order as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sequential_eta24(n: usize) -> LaurentSeries {
        let p = euler_product(n);
        let mut acc = LaurentSeries::one(n as i64);
        for _ in 0..24 {
            acc = series_mul(&acc, &p, n as i64);
        }
        LaurentSeries::new(1, acc.coeffs.clone()).with_order(n as i64 + 1)
    }

    #[test]
    fn eta_leading_terms() {
        let e = eta24(5).unwrap();
        assert_eq!(e.low(), 1);
        assert_eq!(e.order(), 6);
        assert_eq!(e.coeff(1), Some(1.into()));
        assert_eq!(e.coeff(2), Some((-24).into()));
        // Ramanujan τ(3) = 252
        assert_eq!(e.coeff(3), Some(252.into()));
        assert!(eta24(0).is_err());
    }

    #[test]
    fn squaring_matches_sequential() {
        for n in [1, 2, 7, 50] {
            assert_eq!(eta24(n).unwrap(), sequential_eta24(n), "N = {n}");
        }
    }

    #[test]
    fn mul_and_inverse() {
        let a = LaurentSeries::from_i64(-1, &[1, 3, -2, 5]);
        assert_eq!(series_mul(&a, &LaurentSeries::one(5), 2), a);
        let g = series_inv(&LaurentSeries::from_i64(0, &[1, -1, 0, 0, 0, 0]), 5).unwrap();
        assert_eq!(g, LaurentSeries::from_i64(0, &[1; 6]));
        let eta = eta24(50).unwrap();
        let inv = series_inv(&eta, 49).unwrap();
        assert_eq!(inv.low(), -1);
        assert!(inv.coeffs().iter().all(|c| !c.is_negative()));
        assert_eq!(series_mul(&eta, &inv, 49), LaurentSeries::one(49));
        let bad = LaurentSeries::from_i64(0, &[2, 1]);
        assert_eq!(series_inv(&bad, 3), Err(Error::NonUnitLeading("2".into())));
    }

    #[test]
    fn truncation_bookkeeping() {
        let a = LaurentSeries::from_i64(0, &[0, 0, 1, 2]);
        assert_eq!((a.low(), a.order()), (2, 3));
        assert_eq!(a.coeff(0), Some(0.into()));
        assert_eq!(a.coeff(4), None);
        let z = LaurentSeries::from_i64(0, &[0, 0]);
        assert!(z.is_zero());
        assert_eq!(a.truncate(2).coeffs(), &[BigInt::one()]);
        let d = a.sub(&a);
        assert!(d.is_zero());
    }

    #[test]
    fn display() {
        let s = LaurentSeries::from_i64(-1, &[1, 744, 196884, 21493760]);
        assert_eq!(s.to_string(), "q^-1 + 744 + 196884 q + 21493760 q^2");
        assert_eq!(
            LaurentSeries::from_i64(0, &[-1, 0, -3]).to_string(),
            "-1 - 3 q^2"
        );
        assert_eq!(LaurentSeries::from_i64(0, &[]).to_string(), "0");
    }
}
