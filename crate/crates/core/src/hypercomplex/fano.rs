use std::sync::OnceLock;

use super::cayley_dickson::{cd_conj, cd_mul, HyperNumber};
use crate::exactnum::Scalar;
use crate::{Error, Result};

/// Multiplication table of the octonion units `e_0 = 1, e_1, …, e_7` read off
/// the Fano plane: `e_i e_j = sign · e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoTable {
    product: [[(u8, i8); 8]; 8],
}

impl FanoTable {
    /// The seven oriented lines are `(t, t+1, t+3)` mod 7 on labels 1..7,
    /// which is the cycling orbit of `e_1 e_2 = e_4`.
    pub fn lines() -> [[u8; 3]; 7] {
        let mut out = [[0u8; 3]; 7];
        for (t, line) in out.iter_mut().enumerate() {
            for (slot, off) in line.iter_mut().zip([0usize, 1, 3]) {
                *slot = ((t + off) % 7 + 1) as u8;
            }
        }
        out
    }

    fn build() -> Self {
        let mut product = [[(0u8, 0i8); 8]; 8];
        for (i, row) in product.iter_mut().enumerate() {
            row[0] = (i as u8, 1);
        }
        for j in 0..8 {
            product[0][j] = (j as u8, 1);
        }
        for i in 1..8 {
            product[i][i] = (0, -1);
        }
        for [a, b, c] in Self::lines() {
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                product[x as usize][y as usize] = (z, 1);
                product[y as usize][x as usize] = (z, -1);
            }
        }
        Self { product }
    }

    pub fn standard() -> &'static Self {
        static TABLE: OnceLock<FanoTable> = OnceLock::new();
        TABLE.get_or_init(Self::build)
    }

    /// `e_i e_j` for `0 ≤ i, j ≤ 7` as `(k, sign)`.
    pub fn unit_product(&self, i: usize, j: usize) -> (usize, i8) {
        let (k, s) = self.product[i][j];
        (k as usize, s)
    }
}

/// `e_i e_j` for imaginary units `1 ≤ i, j ≤ 7`. For `i == j` the result is
/// `(0, −1)`, i.e. `e_i² = −1`.
pub fn fano_mul(i: usize, j: usize) -> Result<(usize, i8)> {
    for k in [i, j] {
        if !(1..=7).contains(&k) {
            return Err(Error::IndexOutOfRange(k as i64));
        }
    }
    Ok(FanoTable::standard().unit_product(i, j))
}

/// Octonion product in the Fano basis.
pub fn fano_octonion_mul<S: Scalar>(
    x: &HyperNumber<S>,
    y: &HyperNumber<S>,
) -> Result<HyperNumber<S>> {
    for v in [x, y] {
        if v.level() != 3 {
            return Err(Error::LevelMismatch(v.level(), 3));
        }
    }
    let table = FanoTable::standard();
    let mut out = vec![S::zero(); 8];
    for (i, a) in x.coords().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.coords().iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let (k, sign) = table.unit_product(i, j);
            let term = a.clone() * b;
            out[k] = if sign > 0 {
                std::mem::replace(&mut out[k], S::zero()) + &term
            } else {
                std::mem::replace(&mut out[k], S::zero()) - &term
            };
        }
    }
    HyperNumber::new(3, out)
}

/// The two octonion multiplications that coexist in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OctonionMul {
    CayleyDickson,
    Fano,
}

impl OctonionMul {
    pub fn mul<S: Scalar>(self, x: &HyperNumber<S>, y: &HyperNumber<S>) -> Result<HyperNumber<S>> {
        match self {
            Self::CayleyDickson => {
                if x.level() != 3 {
                    return Err(Error::LevelMismatch(x.level(), 3));
                }
                cd_mul(x, y)
            }
            Self::Fano => fano_octonion_mul(x, y),
        }
    }
}

/// The x-product `b ×_a c = (b a)(a* c)` in the Fano octonions.
pub fn xproduct<S: Scalar>(
    a: &HyperNumber<S>,
    b: &HyperNumber<S>,
    c: &HyperNumber<S>,
) -> Result<HyperNumber<S>> {
    let ba = fano_octonion_mul(b, a)?;
    let ac = fano_octonion_mul(&cd_conj(a), c)?;
    fano_octonion_mul(&ba, &ac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, BigRational};
    use crate::hypercomplex::cd_norm;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type Q = HyperNumber<BigRational>;

    fn random(rng: &mut ChaCha8Rng) -> Q {
        Q::new(
            3,
            (0..8)
                .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
                .collect(),
        )
        .unwrap()
    }

    /// Products of the unit octonions with |coordinates| from a Pythagorean
    /// style construction: (3 + 4e_k)/5 and friends are exact unit octonions.
    fn random_unit(rng: &mut ChaCha8Rng) -> Q {
        let mut u = Q::one(3);
        for _ in 0..3 {
            let k = rng.gen_range(1..8);
            let mut c = vec![rat(0, 1); 8];
            let (p, q) = [(3, 4), (5, 12), (8, 15)][rng.gen_range(0..3)];
            let r = ((p * p + q * q) as f64).sqrt() as i64;
            c[0] = rat(p, r);
            c[k] = rat(if rng.gen_bool(0.5) { q } else { -q }, r);
            u = fano_octonion_mul(&u, &Q::new(3, c).unwrap()).unwrap();
        }
        u
    }

    #[test]
    fn quoted_products() {
        assert_eq!(fano_mul(1, 2).unwrap(), (4, 1));
        assert_eq!(fano_mul(2, 4).unwrap(), (1, 1));
        assert_eq!(fano_mul(4, 1).unwrap(), (2, 1));
        assert_eq!(fano_mul(5, 2).unwrap(), (3, 1));
        assert_eq!(fano_mul(6, 3).unwrap(), (4, 1));
        assert_eq!(fano_mul(3, 7).unwrap(), (1, 1));
        assert_eq!(fano_mul(7, 3).unwrap(), (1, -1));
        assert_eq!(fano_mul(3, 3).unwrap(), (0, -1));
        assert_eq!(fano_mul(0, 3), Err(Error::IndexOutOfRange(0)));
        assert_eq!(fano_mul(1, 8), Err(Error::IndexOutOfRange(8)));
    }

    #[test]
    fn antisymmetry_cycling_and_doubling() {
        let m = |a: usize| (a - 1) % 7 + 1;
        for i in 1..=7usize {
            for j in (i + 1)..=7 {
                let (k, s) = fano_mul(i, j).unwrap();
                assert_eq!(fano_mul(j, i).unwrap(), (k, -s));
                assert_eq!(
                    fano_mul(m(i + 1), m(j + 1)).unwrap(),
                    (m(k + 1), s),
                    "cycling {i},{j}"
                );
                assert_eq!(
                    fano_mul(m(2 * i), m(2 * j)).unwrap(),
                    (m(2 * k), s),
                    "doubling {i},{j}"
                );
            }
        }
    }

    #[test]
    fn each_line_is_a_quaternion_subalgebra() {
        for [a, b, c] in FanoTable::lines() {
            let (a, b, c) = (a as usize, b as usize, c as usize);
            assert_eq!(fano_mul(a, b).unwrap(), (c, 1));
            assert_eq!(fano_mul(b, c).unwrap(), (a, 1));
            assert_eq!(fano_mul(c, a).unwrap(), (b, 1));
        }
    }

    #[test]
    fn xproduct_with_unit_one_is_ordinary_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let (b, c) = (random(&mut rng), random(&mut rng));
            assert_eq!(
                xproduct(&Q::one(3), &b, &c).unwrap(),
                fano_octonion_mul(&b, &c).unwrap()
            );
        }
    }

    #[test]
    fn xproduct_norm_is_multiplicative_for_unit_a() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..200 {
            let a = random_unit(&mut rng);
            assert_eq!(cd_norm(&a), rat(1, 1));
            let (b, c) = (random(&mut rng), random(&mut rng));
            let x = xproduct(&a, &b, &c).unwrap();
            assert_eq!(cd_norm(&x), cd_norm(&b) * cd_norm(&c));
        }
    }

    #[test]
    fn xproduct_with_b_one_returns_c() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let a = random_unit(&mut rng);
            let c = random(&mut rng);
            assert_eq!(xproduct(&a, &Q::one(3), &c).unwrap(), c);
        }
    }

    #[test]
    fn xproduct_rejects_wrong_level() {
        let x = Q::one(2);
        assert!(xproduct(&x, &x, &x).is_err());
    }
}
