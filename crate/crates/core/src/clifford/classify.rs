use std::fmt;

use super::algebra::CliffordSignature;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    R,
    C,
    H,
}

impl Ring {
    pub fn real_dim(self) -> u64 {
        match self {
            Ring::R => 1,
            Ring::C => 2,
            Ring::H => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Ring::R => "R",
            Ring::C => "C",
            Ring::H => "H",
        }
    }
}

/// `summands` copies of `size × size` matrices over `ring`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatrixAlgebraClass {
    pub ring: Ring,
    pub size: u64,
    pub summands: u8,
}

impl MatrixAlgebraClass {
    pub fn real_dim(&self) -> u64 {
        u64::from(self.summands) * self.size * self.size * self.ring.real_dim()
    }

    /// Real dimension of the smallest nonzero real module.
    pub fn smallest_real_rep(&self) -> u64 {
        self.size * self.ring.real_dim()
    }
}

impl fmt::Display for MatrixAlgebraClass {
    /// `R`, `H`, `C(4)`, `R(8)+R(8)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = if self.size == 1 {
            self.ring.symbol().to_string()
        } else {
            format!("{}({})", self.ring.symbol(), self.size)
        };
        if self.summands == 2 {
            write!(f, "{one}+{one}")
        } else {
            f.write_str(&one)
        }
    }
}

/// Isomorphism class of `C_{p,q}` from `(q − p) mod 8`.
pub fn classify(sig: CliffordSignature) -> MatrixAlgebraClass {
    let k = (sig.q() as i64 - sig.p() as i64).rem_euclid(8);
    let (ring, summands) = match k {
        0 | 2 => (Ring::R, 1),
        1 => (Ring::R, 2),
        3 | 7 => (Ring::C, 1),
        4 | 6 => (Ring::H, 1),
        5 => (Ring::H, 2),
        _ => unreachable!("residue mod 8"),
    };
    let per = (1u64 << sig.n()) / (u64::from(summands) * ring.real_dim());
    let size = per.isqrt();
    debug_assert_eq!(size * size, per);
    MatrixAlgebraClass {
        ring,
        size,
        summands,
    }
}

/// `C_{p+8,q} ≅ C_{p,q} ⊗ ℝ(16)`.
pub fn periodicity_check(sig: CliffordSignature) -> Result<bool> {
    if sig.n() + 8 > CliffordSignature::MAX_GENERATORS {
        return Err(Error::OutOfRange(format!(
            "{sig} shifted by 8 exceeds the generator bound"
        )));
    }
    let base = classify(sig);
    let up = classify(CliffordSignature::for_classification(sig.p() + 8, sig.q())?);
    Ok(up.ring == base.ring && up.summands == base.summands && up.size == 16 * base.size)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: usize, q: usize) -> String {
        classify(CliffordSignature::new(p, q).unwrap()).to_string()
    }

    #[test]
    fn examples() {
        let h = classify(CliffordSignature::new(2, 0).unwrap());
        assert_eq!((h.ring, h.size, h.summands), (Ring::H, 1, 1));
        let r = classify(CliffordSignature::new(7, 1).unwrap());
        assert_eq!((r.ring, r.size, r.summands), (Ring::R, 16, 1));
        let r4 = classify(CliffordSignature::new(1, 3).unwrap());
        assert_eq!((r4.ring, r4.size, r4.summands), (Ring::R, 4, 1));
        assert_eq!(c(7, 0), "R(8)+R(8)");
    }

    #[test]
    fn dimension_identity() {
        for n in 0..=10 {
            for p in 0..=n {
                let s = CliffordSignature::new(p, n - p).unwrap();
                assert_eq!(classify(s).real_dim(), 1 << n, "{s}");
            }
        }
    }

    #[test]
    fn periodicity_sweep() {
        for n in 0..=8 {
            for p in 0..=n {
                assert!(periodicity_check(CliffordSignature::new(p, n - p).unwrap()).unwrap());
            }
        }
        assert!(periodicity_check(CliffordSignature::new(10, 7).unwrap()).is_err());
    }
}
