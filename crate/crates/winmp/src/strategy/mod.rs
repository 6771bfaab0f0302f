//! Finite-memory strategies, plays, and strategy checking.

pub mod certify;
pub mod enumerate;
pub mod evaluate;
mod moore;
mod play;

pub use certify::{certify, CertificationReport, CertifyConfig, Counterexample};
pub use enumerate::enumerate_memoryless;
pub use evaluate::{evaluate, Goal, Verdict};
pub use moore::MooreStrategy;
pub use play::play_out;
