//! Slow, independent reference engines used to cross-check the solvers.
//!
//! Nothing here calls into the solver modules; the only shared pieces are the game types and
//! objective normalization.

mod minmax;
mod muller;
mod random;
mod tracker;

pub use minmax::depth_limited_minmax;
pub use muller::{solve_muller, rabin_by_enumeration};
pub use random::{random_game, RandomGameParams};
pub use tracker::{gd_reach_oracle, oracle_solve, oracle_solve_normalized};
