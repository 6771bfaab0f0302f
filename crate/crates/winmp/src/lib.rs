//! Two-player games on multi-weighted graphs with window mean-payoff objectives combined with
//! inf, sup, liminf, limsup thresholds and classical qualitative conditions.

pub mod boolean;
pub mod check;
pub mod error;
pub mod game;
pub mod io;
pub mod objective;
pub mod oracle;
pub mod qualitative;
pub mod reductions;
pub mod set;
pub mod solution;
pub mod strategy;
pub mod window;

pub use error::{Error, Result};
pub use game::{build_game, Arena, GameStructure, Lasso, Player};
pub use objective::{Atom, Expr, Measure, Rel};
pub use set::VertexSet;
pub use solution::{Solution, WinningRegions};
pub use strategy::MooreStrategy;
