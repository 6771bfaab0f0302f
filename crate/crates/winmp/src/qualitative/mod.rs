//! Attractors and solvers for reachability, safety, Büchi, coBüchi and their generalizations.

pub mod attractor;
pub mod basic;
pub mod generalized;

pub use attractor::{attractor, AttractorResult};
pub use basic::{solve_buchi, solve_cobuchi, solve_reach, solve_safe};
pub use generalized::{solve_gen_buchi, solve_gen_buchi_cobuchi, solve_gen_reach};
pub mod isl;

pub use isl::{isl_regions, solve_isl_intersection, IslRoute};
