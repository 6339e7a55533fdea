//! Clifford algebras `C_{p,q}` over ℚ: blade arithmetic, the matrix-algebra
//! classification, and the spinor taxonomy of Minkowski spacetimes.

mod algebra;
mod classify;
mod spinors;

pub use algebra::{clif_mul, clif_reverse, gamma_squared, CliffordElement, CliffordSignature};
pub use classify::{classify, periodicity_check, MatrixAlgebraClass, Ring};
pub use spinors::{spinor_taxonomy, super_ym_dims, SpinorKind, SpinorProfile};
