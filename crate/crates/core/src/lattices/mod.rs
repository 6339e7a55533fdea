//! Integral lattices: constructions, predicates, duals, reduction,
//! enumeration and θ-series, plus the Lorentzian lattices `II₈ₖ₊₁,₁`.

pub mod enumerate;
pub mod icosian;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod lll;
pub mod lorentzian;
pub mod named;

pub use enumerate::{minimum, short_vector_list, short_vectors, theta_series, ThetaSeries};
pub use icosian::{
    build_e8_from_icosians, build_e8_from_icosians_with, leech_from_icosians,
    leech_from_icosians_with, IcosianForm,
};
pub use io::{format_lattice, parse_lattice};
pub use lattice::{dual_lattice, is_even, is_integral, is_unimodular, Lattice, Metric};
pub use lll::{default_delta, lll_reduce};
pub use lorentzian::{
    ii_member, is_fundamental_root, leech_from_ii26, minkowski_dot, weyl_vector, LorentzianVector,
};
pub use named::{
    build_3e8, build_an, build_d16plus, build_dn, build_e6, build_e7, build_e8, build_e8_d16plus,
    named,
};
