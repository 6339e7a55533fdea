//! E₈ and Leech built from the icosian ring.
//!
//! Coordinates are `icosian_to_r8`. Two forms on them are offered: the plain
//! coordinate form `a² + b² + … + h²`, and the golden form `x + y` where
//! the quaternion norm is `x + y√5`. A single global scale is then chosen
//! so the minimal norm is 2 (E₈) or 4 (Leech).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::enumerate::minimum;
use super::lattice::{is_even, is_unimodular, Lattice, Metric};
use super::linalg::{integral_preimage, inverse_q, mul_q, row_basis_q, QMat};
use crate::exactnum::GoldenRational;
use crate::hypercomplex::{
    cd_conj, cd_mul, icosian_ring, icosian_to_r8, GoldenQuaternion, HyperNumber,
};
use crate::{Error, Result};

/// `h = (−√5 + i + j + k)/2`.
pub fn icosian_h() -> GoldenQuaternion {
    let half = BigRational::new(1.into(), 2.into());
    let z = BigRational::zero();
    let c = vec![
        GoldenRational::new(z.clone(), -half.clone()),
        GoldenRational::new(half.clone(), z.clone()),
        GoldenRational::new(half.clone(), z.clone()),
        GoldenRational::new(half, z),
    ];
    HyperNumber::new(2, c).expect("quaternion")
}

/// Quadratic form on the split coordinates `(a, b, …, h)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IcosianForm {
    /// `a² + b² + … + h²`.
    #[default]
    Coordinate,
    /// `x + y` for quaternion norm `x + y√5`: per golden coordinate
    /// `u + v√5 ↦ u² + 2uv + 5v²`.
    Golden,
}

impl IcosianForm {
    /// The form on `blocks` consecutive copies of ℝ⁸.
    pub fn matrix(self, blocks: usize) -> QMat {
        let n = 8 * blocks;
        let mut f = vec![vec![BigRational::zero(); n]; n];
        for c in 0..n / 2 {
            let (u, v) = (2 * c, 2 * c + 1);
            f[u][u] = BigRational::one();
            match self {
                IcosianForm::Coordinate => f[v][v] = BigRational::one(),
                IcosianForm::Golden => {
                    f[v][v] = BigRational::from_integer(5.into());
                    f[u][v] = BigRational::one();
                    f[v][u] = BigRational::one();
                }
            }
        }
        f
    }

    fn metric(self, blocks: usize) -> Metric {
        match self {
            IcosianForm::Coordinate => Metric::Euclidean,
            IcosianForm::Golden => Metric::Form(self.matrix(blocks)),
        }
    }
}

/// Multiply by the single factor that brings the minimal norm to `target`;
/// fail with the raw Gram if the result is not even unimodular.
fn normalize(raw: Lattice, target: i64) -> Result<Lattice> {
    let (min, _) = minimum(&raw)?;
    let k = BigRational::from_integer(target.into()) / min;
    let l = raw.rescaled(&k)?;
    if is_even(&l) && is_unimodular(&l) {
        Ok(l)
    } else {
        Err(Error::NoRescaling(format_gram(raw.gram())))
    }
}

fn format_gram(g: &QMat) -> String {
    g.iter()
        .map(|r| {
            r.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// ℤ-span of the 120 unit icosians in ℝ⁸ under the coordinate form,
/// normalized to minimal norm 2.
pub fn build_e8_from_icosians() -> Result<Lattice> {
    build_e8_from_icosians_with(IcosianForm::Coordinate)
}

pub fn build_e8_from_icosians_with(form: IcosianForm) -> Result<Lattice> {
    let ring = icosian_ring();
    let images: QMat = ring
        .units()
        .iter()
        .map(|u| icosian_to_r8(u.quaternion()))
        .collect();
    let raw = Lattice::new(row_basis_q(&images), form.metric(1))?;
    normalize(raw, 2)
}

/// `I·h` (`right = true`) or `h·I` as a ℤ-basis in ℝ⁸.
fn ideal_basis(g: &GoldenQuaternion, right: bool) -> Result<QMat> {
    let ring = icosian_ring();
    let gens: QMat = ring
        .basis()
        .iter()
        .map(|b| if right { cd_mul(b, g) } else { cd_mul(g, b) }.map(|p| icosian_to_r8(&p)))
        .collect::<Result<_>>()?;
    let basis = row_basis_q(&gens);
    if basis.len() != 8 {
        return Err(Error::Construction("ideal is not of full rank".into()));
    }
    Ok(basis)
}

/// Which side of the generator a principal ideal sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealSide {
    /// `I·g`
    Right,
    /// `g·I`
    Left,
}

/// Unnormalized triples `(x, y, z) ∈ I³` with `x − y, y − z` in the ideal
/// of `diff` and `x + y + z` in the ideal of `sum`.
pub fn icosian_triples(
    diff: (&GoldenQuaternion, IdealSide),
    sum: (&GoldenQuaternion, IdealSide),
    form: IcosianForm,
) -> Result<Lattice> {
    let ring = icosian_ring();
    let bq = ring.basis_r8();
    // I-coordinates → ideal coordinates
    let coords = |(g, side): (&GoldenQuaternion, IdealSide)| -> Result<QMat> {
        let m = ideal_basis(g, side == IdealSide::Right)?;
        inverse_q(&m)
            .map(|inv| mul_q(bq, &inv))
            .ok_or(Error::SingularGram)
    };
    let p = coords(diff)?;
    let ps = coords(sum)?;
    let zero = vec![vec![BigRational::zero(); 8]; 8];
    let neg = |m: &QMat| -> QMat { m.iter().map(|r| r.iter().map(|x| -x).collect()).collect() };
    let blocks = [
        [p.clone(), zero.clone(), ps.clone()],
        [neg(&p), p.clone(), ps.clone()],
        [zero, neg(&p), ps],
    ];
    let a: QMat = blocks
        .iter()
        .flat_map(|row| {
            (0..8).map(move |i| row.iter().flat_map(|b| b[i].iter().cloned()).collect())
        })
        .collect();
    let coeffs = integral_preimage(&a);
    if coeffs.len() != 24 {
        return Err(Error::Construction(format!(
            "congruence lattice rank {}",
            coeffs.len()
        )));
    }
    let embed: QMat = (0..24)
        .map(|r| {
            let (blk, i) = (r / 8, r % 8);
            let mut row = vec![BigRational::zero(); 24];
            row[8 * blk..8 * blk + 8].clone_from_slice(&bq[i]);
            row
        })
        .collect();
    let cq: QMat = coeffs
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    Lattice::new(mul_q(&cq, &embed), form.metric(3))
}

/// Triples `(x, y, z) ∈ I³` with `x ≡ y ≡ z mod h` and `x + y + z ≡ 0 mod h*`
/// (`u ≡ v mod g` meaning `u − v ∈ I·g`) under the coordinate form,
/// normalized to minimal norm 4.
///
/// Under the coordinate form the shortest triples number 6144 rather than
/// 196560, no global scale is even unimodular, and this returns
/// [`Error::NoRescaling`] carrying the raw Gram.
pub fn leech_from_icosians() -> Result<Lattice> {
    leech_from_icosians_with(IcosianForm::Coordinate)
}

pub fn leech_from_icosians_with(form: IcosianForm) -> Result<Lattice> {
    let h = icosian_h();
    let hs = cd_conj(&h);
    let raw = icosian_triples((&h, IdealSide::Right), (&hs, IdealSide::Right), form)?;
    normalize(raw, 4)
}

/// Whether `q` lies in the left ideal `I·g`.
pub fn in_left_ideal(q: &GoldenQuaternion, g: &GoldenQuaternion) -> Result<bool> {
    let basis = ideal_basis(g, true)?;
    let l = Lattice::new(basis, Metric::Euclidean)?;
    Ok(l.contains(&icosian_to_r8(q)))
}

/// Scale applied by [`build_e8_from_icosians`] relative to the plain form.
pub fn e8_icosian_scale() -> Result<BigRational> {
    let ring = icosian_ring();
    let raw = Lattice::new(ring.basis_r8().clone(), Metric::Euclidean)?;
    let (min, _) = minimum(&raw)?;
    Ok(BigRational::from_integer(BigInt::from(2)) / min)
}
