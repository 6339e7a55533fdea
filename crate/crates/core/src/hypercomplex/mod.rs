//! The Cayley–Dickson tower ℝ → ℂ → ℍ → 𝕆 → sedenions, the Fano-plane
//! octonions, triality permutations on quaternions, and the Hurwitz and
//! icosian rings.

mod cayley_dickson;
mod fano;
mod hurwitz;
mod icosian;
mod triality;
mod witnesses;

pub use cayley_dickson::{cd_conj, cd_inv, cd_mul, cd_norm, HyperNumber};
pub use fano::{fano_mul, fano_octonion_mul, xproduct, FanoTable, OctonionMul};
pub use hurwitz::{hurwitz_contains, hurwitz_units};
pub use icosian::{icosian_ring, icosian_to_r8, icosian_units, IcosianElement, IcosianRing};
pub use triality::{ijk_permute, Parity, PermutationIJK};
pub use witnesses::{
    nonalternative_pair, nonassociative_triple, noncommuting_pair, quoted_sedenion_pair,
    zero_divisor_pair,
};

use num_rational::BigRational;

use crate::exactnum::GoldenRational;

pub type Quaternion<S> = HyperNumber<S>;
pub type RationalQuaternion = HyperNumber<BigRational>;
pub type GoldenQuaternion = HyperNumber<GoldenRational>;
