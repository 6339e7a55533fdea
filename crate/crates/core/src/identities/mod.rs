//! Standalone numeric kernels: BBP hex digits of π, the cannonball problem,
//! spin-network area sums and the Gauss linking number.

mod bbp;
mod cannonball;
mod linking;
mod spin;

pub use bbp::{bbp_pi_hex, BBP_LIMIT};
pub use cannonball::{cannonball_search, square_pyramid};
pub use linking::{linking_number, Point, PolyLoop, MAX_PROJECTIONS};
pub use spin::{spin_area, SpinArea, SpinList};
