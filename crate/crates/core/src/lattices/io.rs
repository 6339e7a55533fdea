//! Plain-text lattice format.
//!
//! ```text
//! rank ambient signature [scale]
//! p/q p/q ...
//! ```
//!
//! `signature` is `euclidean` or `lorentzian` (rows are basis vectors) or
//! `gram` (rows are the Gram matrix, `rank = ambient`).

use num_rational::BigRational;
use num_traits::One;

use super::lattice::{Lattice, Metric};
use super::linalg::identity_q;
use crate::exactnum::parse_rational;
use crate::{Error, Result};

pub fn parse_lattice(text: &str) -> Result<Lattice> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty lattice file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if !(3..=4).contains(&fields.len()) {
        return Err(Error::Parse(format!("bad header `{header}`")));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad count `{s}`")))
    };
    let (rank, ambient) = (num(fields[0])?, num(fields[1])?);
    let scale = match fields.get(3) {
        Some(s) => parse_rational(s)?,
        None => BigRational::one(),
    };
    let rows: Vec<Vec<BigRational>> = lines
        .map(|l| {
            l.split_whitespace()
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    if rows.len() != rank || rows.iter().any(|r| r.len() != ambient) {
        return Err(Error::Parse(format!(
            "expected {rank} rows of {ambient} entries"
        )));
    }
    match fields[2] {
        "euclidean" => Lattice::with_scale(rows, Metric::Euclidean, scale),
        "lorentzian" => Lattice::with_scale(rows, Metric::Lorentzian, scale),
        "gram" => {
            if rank != ambient {
                return Err(Error::Parse("a Gram matrix must be square".into()));
            }
            let g = Lattice::from_gram(rows)?;
            if scale.is_one() {
                Ok(g)
            } else {
                g.rescaled(&scale)
            }
        }
        other => Err(Error::Parse(format!("unknown signature `{other}`"))),
    }
}

pub fn format_lattice(l: &Lattice) -> String {
    let one = BigRational::one();
    let (header, rows, scale) = match l.metric() {
        Metric::Form(m) if *l.basis() == identity_q(l.rank()) => ("gram", m, l.scale()),
        // an abstract form over a non-trivial basis is written as its Gram
        Metric::Form(_) => ("gram", l.gram(), &one),
        other => (other.name(), l.basis(), l.scale()),
    };
    let cols = rows.first().map_or(0, Vec::len);
    let mut out = format!("{} {} {}", rows.len(), cols, header);
    if !scale.is_one() {
        out.push_str(&format!(" {scale}"));
    }
    out.push('\n');
    out.push_str(&format_rows(rows));
    out
}

fn format_rows(rows: &[Vec<BigRational>]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(
            &r.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push('\n');
    }
    out
}

/// Gram matrix alone in the same row format.
pub fn format_gram(l: &Lattice) -> String {
    format_rows(l.gram())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::named::{build_an, build_e8};

    #[test]
    fn round_trip_basis() {
        for l in [build_e8().unwrap(), build_an(3).unwrap()] {
            let text = format_lattice(&l);
            let back = parse_lattice(&text).unwrap();
            assert_eq!(back, l);
        }
    }

    #[test]
    fn round_trip_gram_and_scale() {
        let l = parse_lattice("2 2 gram\n2 -1\n-1 2\n").unwrap();
        assert_eq!(parse_lattice(&format_lattice(&l)).unwrap().gram(), l.gram());
        let s = parse_lattice("1 2 euclidean 1/2\n1 1\n").unwrap();
        assert_eq!(s.gram()[0][0], BigRational::one());
        assert_eq!(parse_lattice(&format_lattice(&s)).unwrap(), s);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_lattice("").is_err());
        assert!(parse_lattice("2 2 euclidean\n1 0\n").is_err());
        assert!(parse_lattice("1 2 hyperbolic\n1 0\n").is_err());
        assert!(parse_lattice("1 2 euclidean\n1 x\n").is_err());
    }
}
