//! Root lattices and their relatives, in their usual coordinates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::enumerate::short_vector_list;
use super::lattice::{Lattice, Metric};
use super::linalg::{left_kernel, row_basis_q, QMat, ZMat};
use crate::{Error, Result};

fn unit(n: usize, i: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); n];
    v[i] = BigRational::one();
    v
}

fn diff(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// ℤⁿ.
pub fn build_zn(n: usize) -> Result<Lattice> {
    Lattice::new((0..n).map(|i| unit(n, i)).collect(), Metric::Euclidean)
}

/// `{x ∈ ℤⁿ⁺¹ : Σxᵢ = 0}` with basis `eᵢ − eᵢ₊₁`.
pub fn build_an(n: usize) -> Result<Lattice> {
    if n == 0 {
        return Err(Error::UnsupportedDimension(n));
    }
    let basis = (0..n)
        .map(|i| diff(&unit(n + 1, i), &unit(n + 1, i + 1)))
        .collect();
    Lattice::new(basis, Metric::Euclidean)
}

fn dn_rows(n: usize) -> QMat {
    let mut rows = vec![add(&unit(n, 0), &unit(n, 1))];
    rows.extend((0..n - 1).map(|i| diff(&unit(n, i), &unit(n, i + 1))));
    rows
}

/// `{x ∈ ℤⁿ : Σxᵢ even}` with basis `e₁+e₂, eᵢ − eᵢ₊₁`.
pub fn build_dn(n: usize) -> Result<Lattice> {
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    Lattice::new(dn_rows(n), Metric::Euclidean)
}

/// `Dₙ` together with the all-½ glue vector, `n ≡ 0 mod 8`.
fn dn_plus(n: usize) -> Result<Lattice> {
    let mut gens = dn_rows(n);
    gens.push(vec![BigRational::new(1.into(), 2.into()); n]);
    Lattice::new(row_basis_q(&gens), Metric::Euclidean)
}

/// E₈ as `D₈⁺`: integer or half-integer coordinates with even sum.
pub fn build_e8() -> Result<Lattice> {
    dn_plus(8)
}

pub fn build_d16plus() -> Result<Lattice> {
    dn_plus(16)
}

pub fn build_3e8() -> Result<Lattice> {
    let e8 = build_e8()?;
    Lattice::direct_sum(&[&e8, &e8, &e8])
}

pub fn build_e8_d16plus() -> Result<Lattice> {
    Lattice::direct_sum(&[&build_e8()?, &build_d16plus()?])
}

/// Norm-2 vectors of `l` in ambient coordinates, both signs, sorted.
pub fn roots(l: &Lattice) -> Result<Vec<Vec<BigRational>>> {
    let mut out = Vec::new();
    for (norm, c) in short_vector_list(l, 2)? {
        if norm != 2 {
            continue;
        }
        let v = l.vector(&c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        out.push(v.iter().map(|x| -x).collect());
        out.push(v);
    }
    out.sort();
    Ok(out)
}

/// The sublattice of `l` orthogonal to every vector in `vs`.
pub fn orthogonal_sublattice(l: &Lattice, vs: &[Vec<BigRational>]) -> Result<Lattice> {
    // column j holds (bᵢ·vⱼ); integral because each vⱼ lies in l
    let cols: ZMat = l
        .basis()
        .iter()
        .map(|b| {
            vs.iter()
                .map(|v| {
                    let x = l.inner(b, v);
                    if x.is_integer() {
                        Ok(x.to_integer())
                    } else {
                        Err(Error::Precondition("non-integral pairing".into()))
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let kernel = left_kernel(&cols);
    l.with_basis_transform(&kernel)
}

/// `{x ∈ E₈ : x·v = 0}` for the lexicographically least root `v`.
pub fn build_e7(e8: &Lattice) -> Result<Lattice> {
    let rs = roots(e8)?;
    let v = rs
        .first()
        .ok_or_else(|| Error::Construction("E8 has no roots".into()))?;
    let e7 = orthogonal_sublattice(e8, std::slice::from_ref(v))?;
    if e7.rank() != 7 {
        return Err(Error::Construction(format!("E7 rank {}", e7.rank())));
    }
    Ok(e7)
}

/// Orthogonal complement in E₈ of an A₂ spanned by two roots at inner
/// product −1.
pub fn build_e6(e8: &Lattice) -> Result<Lattice> {
    let (v, w) = a2_pair(e8)?;
    let e6 = orthogonal_sublattice(e8, &[v, w])?;
    if e6.rank() != 6 {
        return Err(Error::Construction(format!("E6 rank {}", e6.rank())));
    }
    Ok(e6)
}

/// The least root and the least root meeting it at −1.
pub fn a2_pair(l: &Lattice) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
    let rs = roots(l)?;
    let v = rs
        .first()
        .ok_or_else(|| Error::Construction("no roots".into()))?;
    let minus_one = -BigRational::one();
    rs.iter()
        .find(|w| l.inner(v, w) == minus_one)
        .map(|w| (v.clone(), w.clone()))
        .ok_or_else(|| Error::Construction("no A2 pair among the roots".into()))
}

/// A lattice by name: `A<n>`, `D<n>`, `Z<n>`, `E6`, `E7`, `E8`, `D16+`,
/// `3E8`, `E8+D16+`, `LeechII`, `LeechIcosian`, `LeechIcosianGolden`.
pub fn named(name: &str) -> Result<Lattice> {
    let dim = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("unknown lattice {name}")))
    };
    match name {
        "E8" => build_e8(),
        "E7" => build_e7(&build_e8()?),
        "E6" => build_e6(&build_e8()?),
        "D16+" => build_d16plus(),
        "3E8" | "E8^3" => build_3e8(),
        "E8+D16+" => build_e8_d16plus(),
        "LeechII" => super::lorentzian::leech_from_ii26(),
        "LeechIcosian" => super::icosian::leech_from_icosians(),
        "LeechIcosianGolden" => {
            super::icosian::leech_from_icosians_with(super::icosian::IcosianForm::Golden)
        }
        _ => match name.split_at(name.len().min(1)) {
            ("A", n) => build_an(dim(n)?),
            ("D", n) => build_dn(dim(n)?),
            ("Z", n) => build_zn(dim(n)?),
            _ => Err(Error::Parse(format!("unknown lattice {name}"))),
        },
    }
}
