//! Exact checks on explicit points of quiver varieties: the moment map,
//! nilpotency, stability of framed points, the cokernel dimension `ε_i`,
//! and the functor `F(𝐚)` induced by a diagram automorphism.

mod checks;
mod rep;

pub use checks::{apply_fa, apply_fa_point, epsilon_geom, moment_check, nilpotency_check, reps_isomorphic, stability_check};
pub use rep::{NakajimaPoint, QuiverRep};
