use crate::game::{GameStructure, Player};
use crate::set::VertexSet;

/// Best total weight player 1 can guarantee from `v` by stopping in `u` within `lambda` steps
/// (at least one), counting only stops where every suffix of the path has nonnegative weight;
/// `i64::MIN` when no such stop can be forced. Explores the full game tree.
pub fn depth_limited_minmax(g: &GameStructure, u: &VertexSet, lambda: usize, v: usize) -> i64 {
    let mut path = Vec::with_capacity(lambda);
    go(g, u, v, lambda, &mut path, true)
}

fn payoff(path: &[i64]) -> i64 {
    let mut suffix = 0;
    for &w in path.iter().rev() {
        suffix += w;
        if suffix < 0 {
            return i64::MIN;
        }
    }
    suffix
}

fn go(g: &GameStructure, u: &VertexSet, v: usize, left: usize, path: &mut Vec<i64>, root: bool) -> i64 {
    let stop = if !root && u[v] { payoff(path) } else { i64::MIN };
    if left == 0 {
        return stop;
    }
    let p1 = g.owner(v) == Player::P1;
    let mut best = if p1 { i64::MIN } else { i64::MAX };
    for &e in g.out_edges(v) {
        path.push(g.weight(e, 0));
        let r = go(g, u, g.dst(e), left - 1, path, false);
        path.pop();
        best = if p1 { best.max(r) } else { best.min(r) };
    }
    stop.max(best)
}
