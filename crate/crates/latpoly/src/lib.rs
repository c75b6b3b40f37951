//! Exact computations on lattice polytopes and the polarized toric
//! varieties they encode: smoothness, Cayley structures, toric blow-ups,
//! jet separation, Seshadri-constant bounds, higher-order Gauss maps and
//! enumeration of smooth lattice polygons.

pub mod cayley;
mod dd;
pub mod classify;
pub mod error;
pub mod gauss;
pub mod io;
pub mod jets;
pub mod linalg;
pub mod polytope;
pub mod seshadri;

pub use error::{Error, Result};
pub use linalg::{Int, IntMatrix, Rat, RatMatrix};
pub use polytope::{Equation, Face, Halfspace, LatticePolytope};
