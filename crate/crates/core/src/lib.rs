//! Exact computations around the exceptional structures of algebra and
//! lattice geometry: the Cayley–Dickson tower and octonions, Clifford
//! algebras and spinors, even unimodular lattices (E8, Leech) with their
//! theta series, the j-function, BBP hex digits of π, spin-network areas and
//! Gauss linking numbers.
//!
//! Everything below the CLI is exact: rationals, the golden field ℚ(√5) and
//! arbitrary-precision integers. Floating point appears only where a value
//! is irrational by nature (area spectra) or as a pruning heuristic inside
//! lattice enumeration, where every counted vector is re-checked exactly.

pub mod clifford;
pub mod error;
pub mod exactnum;
pub mod hypercomplex;
pub mod identities;
pub mod lattices;
pub mod modular;

pub use error::{Error, Result};
