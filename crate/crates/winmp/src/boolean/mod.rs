//! Boolean combinations of objectives.

mod dispatch;
mod generic;
pub(crate) mod parity;
pub mod rabin;

pub use dispatch::{dispatch, solve, Dispatched, Route, RouteReport};
pub use generic::{solve_cnf, solve_dnf, solve_intersection};
pub use rabin::{solve_rabin, solve_rabin_for, RabinCondition};
