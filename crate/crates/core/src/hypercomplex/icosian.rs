use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::cayley_dickson::{cd_mul, HyperNumber};
use super::GoldenQuaternion;
use crate::exactnum::{rat, GoldenRational};
use crate::lattices::linalg::{row_basis_q, solve_left, QMat};
use crate::{Error, Result};

/// Closure larger than this means the seed does not generate a finite group
/// of the expected kind.
const CLOSURE_LIMIT: usize = 10_000;

/// An icosian together with its integer coordinates in the fixed ℤ-basis of
/// the icosian ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IcosianElement {
    q: GoldenQuaternion,
    coords: Vec<BigInt>,
}

impl IcosianElement {
    pub fn quaternion(&self) -> &GoldenQuaternion {
        &self.q
    }

    /// Coordinates in [`IcosianRing::basis`].
    pub fn certificate(&self) -> &[BigInt] {
        &self.coords
    }
}

/// The ring of icosians: ℤ-span of the 120 unit icosians.
#[derive(Debug)]
pub struct IcosianRing {
    units: Vec<IcosianElement>,
    basis: Vec<GoldenQuaternion>,
    basis_r8: QMat,
}

/// `(a + √5 b) + (c + √5 d)i + (e + √5 f)j + (g + √5 h)k ↦ (a, b, …, h)`.
pub fn icosian_to_r8(q: &GoldenQuaternion) -> Vec<BigRational> {
    q.coords()
        .iter()
        .flat_map(|g| [g.u.clone(), g.v.clone()])
        .collect()
}

fn from_r8(v: &[BigRational]) -> GoldenQuaternion {
    let coords = v
        .chunks(2)
        .map(|p| GoldenRational::new(p[0].clone(), p[1].clone()))
        .collect();
    HyperNumber::new(2, coords).expect("four golden coordinates")
}

fn seeds() -> Vec<GoldenQuaternion> {
    let z = GoldenRational::default;
    let one = GoldenRational::one;
    let half = rat(1, 2);
    let i = HyperNumber::new(2, vec![z(), one(), z(), z()]).expect("level 2");
    let j = HyperNumber::new(2, vec![z(), z(), one(), z()]).expect("level 2");
    // (φ⁻¹ + i + φ j)/2
    let s = HyperNumber::new(
        2,
        vec![
            GoldenRational::phi_inv().scale(&half),
            GoldenRational::rational(half.clone()),
            GoldenRational::phi().scale(&half),
            z(),
        ],
    )
    .expect("level 2");
    vec![i, j, s]
}

/// Multiplicative closure of `gens` (with 1), in breadth-first order.
fn closure(gens: &[GoldenQuaternion]) -> Result<Vec<GoldenQuaternion>> {
    let one = HyperNumber::one(2);
    let mut seen: HashSet<GoldenQuaternion> = HashSet::from([one.clone()]);
    let mut order = vec![one.clone()];
    let mut queue = VecDeque::from([one]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = cd_mul(&x, g)?;
            if seen.insert(y.clone()) {
                if seen.len() > CLOSURE_LIMIT {
                    return Err(Error::Construction(format!(
                        "icosian closure exceeded {CLOSURE_LIMIT} elements"
                    )));
                }
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(order)
}

impl IcosianRing {
    fn build() -> Result<Self> {
        let mut group = closure(&seeds())?;
        group.sort();
        let images: QMat = group.iter().map(icosian_to_r8).collect();
        let basis_r8 = row_basis_q(&images);
        if basis_r8.len() != 8 {
            return Err(Error::Construction(format!(
                "icosian ring has rank {}",
                basis_r8.len()
            )));
        }
        let basis = basis_r8.iter().map(|v| from_r8(v)).collect();
        let mut ring = Self {
            units: Vec::new(),
            basis,
            basis_r8,
        };
        ring.units = group
            .into_iter()
            .map(|q| {
                ring.certify(&q)
                    .ok_or_else(|| Error::Construction("unit outside its own span".into()))
            })
            .collect::<Result<_>>()?;
        Ok(ring)
    }

    /// The 120 unit icosians, sorted.
    pub fn units(&self) -> &[IcosianElement] {
        &self.units
    }

    /// The fixed ℤ-basis, HNF-reduced in ℝ⁸ coordinates.
    pub fn basis(&self) -> &[GoldenQuaternion] {
        &self.basis
    }

    pub fn basis_r8(&self) -> &QMat {
        &self.basis_r8
    }

    /// Membership test: integer coordinates in the basis, if any.
    pub fn certify(&self, q: &GoldenQuaternion) -> Option<IcosianElement> {
        if q.level() != 2 {
            return None;
        }
        let c = solve_left(&self.basis_r8, &icosian_to_r8(q))?;
        if !c.iter().all(BigRational::is_integer) {
            return None;
        }
        Some(IcosianElement {
            q: q.clone(),
            coords: c.into_iter().map(|x| x.to_integer()).collect(),
        })
    }

    pub fn contains(&self, q: &GoldenQuaternion) -> bool {
        self.certify(q).is_some()
    }

    /// Rebuild a quaternion from basis coordinates.
    pub fn element(&self, coords: &[BigInt]) -> GoldenQuaternion {
        let mut acc = HyperNumber::zero(2);
        for (c, b) in coords.iter().zip(&self.basis) {
            let k = GoldenRational::rational(BigRational::from_integer(c.clone()));
            acc = acc.add(&b.scale(&k)).expect("level 2");
        }
        acc
    }
}

/// The icosian ring, built once.
pub fn icosian_ring() -> &'static IcosianRing {
    static RING: OnceLock<IcosianRing> = OnceLock::new();
    RING.get_or_init(|| {
        IcosianRing::build().expect("icosian seed generates the binary icosahedral group")
    })
}

/// The 120 unit icosians.
pub fn icosian_units() -> &'static [IcosianElement] {
    icosian_ring().units()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercomplex::{cd_norm, hurwitz_units};
    use num_traits::Zero;

    fn lift(q: &HyperNumber<BigRational>) -> GoldenQuaternion {
        HyperNumber::new(
            2,
            q.coords()
                .iter()
                .map(|c| GoldenRational::rational(c.clone()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn exactly_120_units_of_norm_one() {
        let units = icosian_units();
        assert_eq!(units.len(), 120);
        for u in units {
            assert!(cd_norm(u.quaternion()).is_one());
        }
    }

    #[test]
    fn contains_all_hurwitz_units() {
        let set: HashSet<_> = icosian_units()
            .iter()
            .map(|u| u.quaternion().clone())
            .collect();
        for h in hurwitz_units() {
            assert!(set.contains(&lift(&h)), "{h:?}");
        }
    }

    #[test]
    fn units_are_closed_under_multiplication() {
        let set: HashSet<_> = icosian_units()
            .iter()
            .map(|u| u.quaternion().clone())
            .collect();
        for a in icosian_units().iter().step_by(7) {
            for b in icosian_units() {
                assert!(set.contains(&cd_mul(a.quaternion(), b.quaternion()).unwrap()));
            }
        }
    }

    #[test]
    fn certificates_reconstruct() {
        let ring = icosian_ring();
        for u in ring.units() {
            assert_eq!(&ring.element(u.certificate()), u.quaternion());
        }
        let half = HyperNumber::scalar(2, GoldenRational::rational(rat(1, 2)));
        assert!(!ring.contains(&half));
        // the ring is closed under products
        let p = cd_mul(&ring.basis()[3], &ring.basis()[5]).unwrap();
        assert!(ring.contains(&p));
    }

    #[test]
    fn r8_coordinate_split() {
        assert_eq!(
            icosian_to_r8(&HyperNumber::one(2)),
            [1, 0, 0, 0, 0, 0, 0, 0].map(|x| rat(x, 1))
        );
        let mut c = vec![GoldenRational::zero(); 4];
        c[2] = GoldenRational::sqrt5();
        let q = HyperNumber::new(2, c).unwrap();
        assert_eq!(
            icosian_to_r8(&q),
            [0, 0, 0, 0, 0, 1, 0, 0].map(|x| rat(x, 1))
        );
        assert_eq!(from_r8(&icosian_to_r8(&q)), q);
    }
}
