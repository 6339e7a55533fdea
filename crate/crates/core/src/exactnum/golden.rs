use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Scalar;

/// An element `u + v·√5` of the quadratic field ℚ(√5).
///
/// The derived ordering is lexicographic on `(u, v)`. It exists for canonical
/// sorting and hashing of sets, not as the order on the real line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GoldenRational {
    pub u: BigRational,
    pub v: BigRational,
}

impl GoldenRational {
    pub fn new(u: BigRational, v: BigRational) -> Self {
        Self { u, v }
    }

    pub fn rational(u: BigRational) -> Self {
        Self {
            u,
            v: BigRational::zero(),
        }
    }

    pub fn sqrt5() -> Self {
        Self {
            u: BigRational::zero(),
            v: BigRational::one(),
        }
    }

    /// The golden ratio φ = (1 + √5)/2.
    pub fn phi() -> Self {
        let half = BigRational::new(1.into(), 2.into());
        Self {
            u: half.clone(),
            v: half,
        }
    }

    /// φ⁻¹ = φ − 1 = (−1 + √5)/2.
    pub fn phi_inv() -> Self {
        let half = BigRational::new(1.into(), 2.into());
        Self {
            u: -half.clone(),
            v: half,
        }
    }

    /// Galois conjugate `u − v√5`.
    pub fn conj(&self) -> Self {
        Self {
            u: self.u.clone(),
            v: -self.v.clone(),
        }
    }

    /// Field norm `u² − 5v²`, i.e. `x · conj(x)`.
    pub fn field_norm(&self) -> BigRational {
        &self.u * &self.u - BigRational::from_integer(5.into()) * &self.v * &self.v
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            u: &self.u * k,
            v: &self.v * k,
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.u.to_f64().unwrap_or(f64::NAN) + self.v.to_f64().unwrap_or(f64::NAN) * 5f64.sqrt()
    }
}

/// `(u₁+v₁√5)(u₂+v₂√5) = (u₁u₂+5v₁v₂) + (u₁v₂+v₁u₂)√5`.
pub fn golden_mul(x: &GoldenRational, y: &GoldenRational) -> GoldenRational {
    let five = BigRational::from_integer(5.into());
    GoldenRational {
        u: &x.u * &y.u + five * &x.v * &y.v,
        v: &x.u * &y.v + &x.v * &y.u,
    }
}

impl fmt::Display for GoldenRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.u.is_zero(), self.v.is_zero()) {
            (_, true) => write!(f, "{}", self.u),
            (true, false) => write!(f, "{}√5", self.v),
            (false, false) => write!(f, "({} + {}√5)", self.u, self.v),
        }
    }
}

impl Zero for GoldenRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

impl One for GoldenRational {
    fn one() -> Self {
        Self::rational(BigRational::one())
    }
}

impl Neg for GoldenRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            u: -self.u,
            v: -self.v,
        }
    }
}

impl<'a> Add<&'a GoldenRational> for GoldenRational {
    type Output = Self;
    fn add(self, o: &'a Self) -> Self {
        Self {
            u: self.u + &o.u,
            v: self.v + &o.v,
        }
    }
}

impl<'a> Sub<&'a GoldenRational> for GoldenRational {
    type Output = Self;
    fn sub(self, o: &'a Self) -> Self {
        Self {
            u: self.u - &o.u,
            v: self.v - &o.v,
        }
    }
}

impl<'a> Mul<&'a GoldenRational> for GoldenRational {
    type Output = Self;
    fn mul(self, o: &'a Self) -> Self {
        golden_mul(&self, o)
    }
}

impl Add for GoldenRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self + &o
    }
}

impl Sub for GoldenRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self - &o
    }
}

impl Mul for GoldenRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        golden_mul(&self, &o)
    }
}

impl Scalar for GoldenRational {
    fn recip(&self) -> Option<Self> {
        let n = self.field_norm();
        if n.is_zero() {
            return None;
        }
        let inv = BigRational::one() / n;
        Some(self.conj().scale(&inv))
    }

    fn from_rational(q: BigRational) -> Self {
        Self::rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn g(u: BigRational, v: BigRational) -> GoldenRational {
        GoldenRational::new(u, v)
    }

    fn random(rng: &mut ChaCha8Rng) -> GoldenRational {
        g(
            rat(rng.gen_range(-20..=20), rng.gen_range(1..=6)),
            rat(rng.gen_range(-20..=20), rng.gen_range(1..=6)),
        )
    }

    #[test]
    fn sqrt5_squared_is_five() {
        let s = GoldenRational::sqrt5();
        assert_eq!(golden_mul(&s, &s), GoldenRational::from_i64(5));
    }

    #[test]
    fn phi_times_conjugate_is_minus_one() {
        let phi = GoldenRational::phi();
        assert_eq!(golden_mul(&phi, &phi.conj()), GoldenRational::from_i64(-1));
        // φ⁻¹ really is the inverse of φ
        assert_eq!(
            golden_mul(&phi, &GoldenRational::phi_inv()),
            GoldenRational::one()
        );
    }

    #[test]
    fn unit_law_and_conj_examples() {
        let x = g(rat(3, 7), rat(-2, 5));
        assert_eq!(golden_mul(&x, &GoldenRational::one()), x);
        let r = GoldenRational::rational(rat(4, 9));
        assert_eq!(r.conj(), r);
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn conj_is_multiplicative_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let (x, y) = (random(&mut rng), random(&mut rng));
            assert_eq!(golden_mul(&x, &y).conj(), golden_mul(&x.conj(), &y.conj()));
        }
    }

    #[test]
    fn commutative_and_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..300 {
            let (x, y, z) = (random(&mut rng), random(&mut rng), random(&mut rng));
            assert_eq!(golden_mul(&x, &y), golden_mul(&y, &x));
            assert_eq!(
                golden_mul(&golden_mul(&x, &y), &z),
                golden_mul(&x, &golden_mul(&y, &z))
            );
        }
    }

    #[test]
    fn recip() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let x = random(&mut rng);
            match x.recip() {
                Some(r) => assert_eq!(golden_mul(&x, &r), GoldenRational::one()),
                None => assert!(x.is_zero()),
            }
        }
    }
}
