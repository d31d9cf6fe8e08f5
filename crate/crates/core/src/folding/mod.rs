//! Folding crystals along an admissible automorphism: the induced
//! permutation `σ` of a crystal, the orbit operators `ẽ_𝐢`, `f̃_𝐢`, the
//! subcrystal they generate, and the checks that it is the set of
//! σ-fixed elements and a crystal of the folded type.
//!
//! The generated set is explored breadth-first; no particular order of
//! exhausting the orbit operators is imposed.

mod checks;
mod folded;
mod induced;
mod orbit;

pub use checks::{check_fixed_equals_generated, verify_folded_is_target, CountMismatch, FixedReport, TargetReport};
pub use folded::{fold_binfinity, fold_blambda, folded_crystal, FoldMode, FoldedCrystal, HeightBound};
pub use induced::{induced_automorphism, InducedAutomorphism};
pub use orbit::{orbit_e, orbit_f};
