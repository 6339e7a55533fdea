//! Area spectrum `Σ √(j(j+1))` of spin-network punctures, in units where
//! the Planck area is 1.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactnum::parse_rational;
use crate::{Error, Result};

/// Multiset of spins, stored as `2j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpinList {
    twice: Vec<u32>,
}

impl SpinList {
    pub fn from_twice(twice: Vec<u32>) -> Self {
        Self { twice }
    }

    /// Spins such as `0`, `1/2`, `3/2`, `2`.
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let two = BigRational::from_integer(2.into());
        let twice = items
            .iter()
            .map(|s| {
                let j = parse_rational(s.as_ref())?;
                let t = &j * &two;
                if !t.is_integer() || t < BigRational::zero() {
                    return Err(Error::Parse(format!(
                        "{} is not a nonnegative half-integer",
                        s.as_ref()
                    )));
                }
                t.to_integer()
                    .try_into()
                    .map_err(|_| Error::Parse(format!("spin {} too large", s.as_ref())))
            })
            .collect::<Result<_>>()?;
        Ok(Self { twice })
    }

    pub fn twice_spins(&self) -> &[u32] {
        &self.twice
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            twice: self.twice.iter().chain(&other.twice).copied().collect(),
        }
    }
}

/// `Σ_j m_j √(j(j+1))` kept exactly as multiplicities per `2j`, plus its
/// numerical value.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinArea {
    /// `2j ↦ m_j`; spin 0 contributes nothing and is omitted.
    pub exact: BTreeMap<u32, u64>,
    pub approx: f64,
}

/// `√(j(j+1))` for `t = 2j > 0` as `(c, b)` meaning `c·√b`, `b` squarefree.
/// `t(t+2) = (t+1)² − 1` is never a square, so `b > 1`.
fn surd(t: u32) -> (BigRational, u64) {
    // j(j+1) = t(t+2)/4
    let mut rest = t as u64 * (t as u64 + 2);
    let mut outside = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        while rest % (p * p) == 0 {
            rest /= p * p;
            outside *= p;
        }
        p += 1;
    }
    (BigRational::new(outside.into(), 2.into()), rest)
}

pub fn spin_area(spins: &SpinList) -> SpinArea {
    let mut exact = BTreeMap::new();
    for &t in &spins.twice {
        if t > 0 {
            *exact.entry(t).or_insert(0u64) += 1;
        }
    }
    let approx = exact
        .iter()
        .map(|(&t, &m)| m as f64 * ((t as f64) * (t as f64 + 2.0)).sqrt() / 2.0)
        .sum();
    SpinArea { exact, approx }
}

impl SpinArea {
    /// Coefficients of `√b` for squarefree `b`, merging spins that share a surd.
    pub fn surds(&self) -> BTreeMap<u64, BigRational> {
        let mut out: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (&t, &m) in &self.exact {
            let (c, b) = surd(t);
            *out.entry(b).or_insert_with(BigRational::zero) +=
                c * BigRational::from_integer(m.into());
        }
        out
    }
}

impl fmt::Display for SpinArea {
    /// `2√2 + (1/2)√3`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .surds()
            .into_iter()
            .map(|(b, c)| {
                let coeff = match (c.is_one(), c.is_integer()) {
                    (true, _) => String::new(),
                    (false, true) => c.to_string(),
                    (false, false) => format!("({c})"),
                };
                format!("{coeff}√{b}")
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}
