//! Game products that turn quantitative leaves into finite-state conditions.

pub mod edge_split;
pub mod expand;
pub mod lift;
pub mod product;
pub mod qual;

pub use edge_split::{reduce_edge_split, EdgeSplit};
pub use expand::{reduce_complement_expand, reduce_expand, Expansion, Leaf};
pub use lift::{lift_strategy, ReductionMap};
pub use product::{Product, Step, DEFAULT_NODE_BUDGET};
pub use qual::{augment, reduce_qual_to_weighted, QualKind};
