use super::icw::icw_region;
use crate::error::Result;
use crate::game::{GameStructure, Player};
use crate::qualitative::basic::reach_for;
use crate::reductions::expand::{window_step, DEAD};
use crate::reductions::product::{Product, Step};
use crate::set::{self, VertexSet};
use crate::solution::{Solution, WinningRegions};

/// Iterates `X_{k+1} = X_k ∪ ICWEnd(X_k)` from `X_0 = target`; the last two entries are equal.
pub fn gd_end_trace(g: &GameStructure, target: &VertexSet, lambda: usize) -> Vec<VertexSet> {
    let mut trace = vec![target.clone()];
    loop {
        let x = trace.last().unwrap();
        let next = set::union(x, &icw_region(g, x, lambda));
        let done = &next == x;
        trace.push(next);
        if done {
            return trace;
        }
        debug_assert!(trace.len() <= g.num_vertices() + 2);
    }
}

/// Vertices from which player 1 can force a history with a good decomposition ending in the target.
pub fn gd_end_region(g: &GameStructure, target: &VertexSet, lambda: usize) -> VertexSet {
    gd_end_trace(g, target, lambda).pop().unwrap()
}

/// Regions from the fixed point; strategies are positional on the window-tracker product, where
/// the target is entered at a closing position.
pub fn gd_end(g: &GameStructure, target: &VertexSet, lambda: usize, budget: usize) -> Result<(Solution, Vec<VertexSet>)> {
    let trace = gd_end_trace(g, target, lambda);
    let prod = Product::build(
        g,
        1,
        |_| Step::To(vec![0, 0]),
        |q, e| {
            let next = window_step(q[0], q[1], g.weight(e, 0), lambda);
            if next[0] == DEAD {
                Step::Sink(0)
            } else {
                Step::To(next.to_vec())
            }
        },
        budget,
    )?;
    let goal = prod.set_where(|v, q| target[v] && q[0] == 0 && q[1] == 0, &[false]);
    let pos = reach_for(&prod.arena, Player::P1, &goal);
    let sol = Solution {
        regions: WinningRegions::from_w1(trace.last().unwrap().clone()),
        s1: prod.lift_positional(g, Player::P1, &pos.mine),
        s2: prod.lift_positional(g, Player::P2, &pos.theirs),
    };
    Ok((sol, trace))
}
