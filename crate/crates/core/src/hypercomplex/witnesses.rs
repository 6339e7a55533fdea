//! Stored counterexamples marking where each law stops holding along the
//! Cayley–Dickson tower.

use num_rational::BigRational;
use num_traits::One;

use super::cayley_dickson::HyperNumber;

type Q = HyperNumber<BigRational>;

fn e(level: u32, i: usize) -> Q {
    HyperNumber::basis(level, i).expect("index below 2^level")
}

/// `(i, j)` at level 2: `ij = k ≠ −k = ji`.
pub fn noncommuting_pair() -> (Q, Q) {
    (e(2, 1), e(2, 2))
}

/// `(e₁, e₂, e₄)` at level 3: `(e₁e₂)e₄ ≠ e₁(e₂e₄)`.
pub fn nonassociative_triple() -> (Q, Q, Q) {
    (e(3, 1), e(3, 2), e(3, 4))
}

/// `(e₁ + e₁₀, e₄)` at level 4: `x(xy) ≠ (xx)y`.
pub fn nonalternative_pair() -> (Q, Q) {
    let x = e(4, 1).add(&e(4, 10)).expect("same level");
    (x, e(4, 4))
}

/// `(e₁ + e₁₀, e₄ − e₁₅)` at level 4: nonzero factors with zero product,
/// so `N(xy) = 0 ≠ 4 = N(x)N(y)`.
pub fn zero_divisor_pair() -> (Q, Q) {
    let x = e(4, 1).add(&e(4, 10)).expect("same level");
    let y = e(4, 4).sub(&e(4, 15)).expect("same level");
    (x, y)
}

/// The pair `(e₁, e₄)`, `(−1, e₅)` as two level-4 numbers.
pub fn quoted_sedenion_pair() -> (Q, Q) {
    let x = HyperNumber::pair(&e(3, 1), &e(3, 4)).expect("same level");
    let y = HyperNumber::pair(&HyperNumber::scalar(3, -BigRational::one()), &e(3, 5))
        .expect("same level");
    (x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercomplex::{cd_mul, cd_norm};
    use num_traits::Zero;

    #[test]
    fn witnesses_witness() {
        let (x, y) = noncommuting_pair();
        assert_ne!(cd_mul(&x, &y).unwrap(), cd_mul(&y, &x).unwrap());
        let (x, y, z) = nonassociative_triple();
        assert_ne!(
            cd_mul(&cd_mul(&x, &y).unwrap(), &z).unwrap(),
            cd_mul(&x, &cd_mul(&y, &z).unwrap()).unwrap()
        );
        let (x, y) = nonalternative_pair();
        assert_ne!(
            cd_mul(&x, &cd_mul(&x, &y).unwrap()).unwrap(),
            cd_mul(&cd_mul(&x, &x).unwrap(), &y).unwrap()
        );
        let (x, y) = zero_divisor_pair();
        assert!(!x.is_zero() && !y.is_zero());
        assert!(cd_mul(&x, &y).unwrap().is_zero());
        assert_eq!(
            cd_norm(&x) * cd_norm(&y),
            BigRational::from_integer(4.into())
        );
        assert!(cd_norm(&cd_mul(&x, &y).unwrap()).is_zero());
    }

    #[test]
    fn quoted_pair_is_not_a_zero_divisor() {
        let (x, y) = quoted_sedenion_pair();
        let p = cd_mul(&x, &y).unwrap();
        assert_eq!(p, e(4, 1).scale(&BigRational::from_integer((-2).into())));
    }
}
