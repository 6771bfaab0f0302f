use super::edge_split::EdgeSplit;
use super::product::Product;
use crate::game::Arena;
use crate::strategy::MooreStrategy;

/// How a reduced game relates to its base game.
#[derive(Clone, Copy, Debug)]
pub enum ReductionMap<'a> {
    EdgeSplit(&'a EdgeSplit),
    Product(&'a Product),
}

/// Transfers a strategy on the reduced game back to `base`.
pub fn lift_strategy(map: ReductionMap<'_>, base: &Arena, s: &MooreStrategy) -> MooreStrategy {
    match map {
        ReductionMap::EdgeSplit(x) => x.lift(base, s),
        ReductionMap::Product(p) => p.lift_moore(base, s),
    }
}
