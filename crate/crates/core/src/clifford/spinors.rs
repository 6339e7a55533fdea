use std::collections::BTreeSet;
use std::fmt;

use super::algebra::{gamma_squared, CliffordSignature};
use super::classify::classify;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpinorKind {
    Dirac,
    Majorana,
    Weyl,
    MajoranaWeyl,
}

/// Spinor data for `n`-dimensional Minkowski spacetime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpinorProfile {
    pub n: usize,
    pub dirac_complex_dim: u64,
    pub majorana: bool,
    pub weyl: bool,
    pub majorana_weyl: bool,
    pub minimal_real_components: u64,
}

impl SpinorProfile {
    /// Kinds that exist in this dimension, Dirac first.
    pub fn kinds(&self) -> Vec<SpinorKind> {
        let mut out = vec![SpinorKind::Dirac];
        if self.majorana {
            out.push(SpinorKind::Majorana);
        }
        if self.weyl {
            out.push(SpinorKind::Weyl);
        }
        if self.majorana_weyl {
            out.push(SpinorKind::MajoranaWeyl);
        }
        out
    }

    /// Real components of a kind, `None` when it does not exist.
    pub fn real_components(&self, kind: SpinorKind) -> Option<u64> {
        let d = self.dirac_complex_dim;
        match kind {
            SpinorKind::Dirac => Some(2 * d),
            SpinorKind::Majorana => self.majorana.then_some(d),
            SpinorKind::Weyl => self.weyl.then_some(d),
            SpinorKind::MajoranaWeyl => self.majorana_weyl.then_some(d / 2),
        }
    }

    /// The space of a kind as `C^k` / `R^k`, or `None` when absent.
    pub fn space(&self, kind: SpinorKind) -> Option<String> {
        let d = self.dirac_complex_dim;
        let fmt = |field: char, k: u64| {
            if k == 1 {
                field.to_string()
            } else {
                format!("{field}^{k}")
            }
        };
        match kind {
            SpinorKind::Dirac => Some(fmt('C', d)),
            SpinorKind::Majorana => self.majorana.then(|| fmt('R', d)),
            SpinorKind::Weyl => self.weyl.then(|| fmt('C', d / 2)),
            SpinorKind::MajoranaWeyl => self.majorana_weyl.then(|| fmt('R', d / 2)),
        }
    }
}

impl fmt::Display for SpinorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let col = |k| self.space(k).unwrap_or_else(|| "-".into());
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}",
            self.n,
            col(SpinorKind::Dirac),
            col(SpinorKind::Majorana),
            col(SpinorKind::Weyl),
            col(SpinorKind::MajoranaWeyl)
        )
    }
}

/// Dirac spinors are `ℂ^{2^⌊n/2⌋}`; Majorana spinors exist when the
/// smallest real module of `C_{n−1,1}` or `C_{1,n−1}` has half the Dirac real
/// dimension; Weyl spinors when `n` is even; Majorana–Weyl when both hold and
/// `Γ² = 1`.
pub fn spinor_taxonomy(n: usize) -> Result<SpinorProfile> {
    if n == 0 {
        return Err(Error::OutOfRange(
            "spacetime dimension must be positive".into(),
        ));
    }
    let minus = CliffordSignature::for_classification(n - 1, 1)?;
    let plus = CliffordSignature::for_classification(1, n - 1)?;
    let d = 1u64 << (n / 2);
    let majorana = [minus, plus]
        .iter()
        .any(|&s| classify(s).smallest_real_rep() == d);
    let weyl = n % 2 == 0;
    let majorana_weyl = majorana && weyl && gamma_squared(minus) == 1;
    let mut profile = SpinorProfile {
        n,
        dirac_complex_dim: d,
        majorana,
        weyl,
        majorana_weyl,
        minimal_real_components: 0,
    };
    profile.minimal_real_components = profile
        .kinds()
        .into_iter()
        .filter_map(|k| profile.real_components(k))
        .min()
        .unwrap_or(2 * d);
    Ok(profile)
}

/// Dimensions in `[lo, hi]` with a spinor kind of exactly `2(n − 2)` real
/// components.
pub fn super_ym_dims(lo: usize, hi: usize) -> Result<BTreeSet<usize>> {
    if lo < 3 || lo > hi {
        return Err(Error::OutOfRange(format!(
            "need 3 ≤ lo ≤ hi, got {lo}..{hi}"
        )));
    }
    let mut out = BTreeSet::new();
    for n in lo..=hi {
        let p = spinor_taxonomy(n)?;
        let target = 2 * (n as u64 - 2);
        if p.kinds()
            .into_iter()
            .any(|k| p.real_components(k) == Some(target))
        {
            out.insert(n);
        }
    }
    Ok(out)
}
