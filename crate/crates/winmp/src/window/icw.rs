use super::gd::gd_end_region;
use super::{oplus, NEG_INF};
use crate::game::{GameStructure, Player};
use crate::reductions::product::{Product, Step};
use crate::set::{self, VertexSet};
use crate::solution::{Solution, WinningRegions};
use crate::strategy::MooreStrategy;

/// `C_l(v)`: the best total payoff player 1 can guarantee when inductively closing, within at
/// most `l` steps, the window opened at `v` in a vertex of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowValueTable {
    pub lambda: usize,
    /// Row `l` holds `C_l` for every vertex; −∞ is `NEG_INF`.
    pub values: Vec<Vec<i64>>,
    pub target: VertexSet,
}

impl WindowValueTable {
    pub fn get(&self, l: usize, v: usize) -> i64 {
        self.values[l][v]
    }

    /// `w(e) ⊕ max(C_0(dst), C_{l-1}(dst))`.
    fn step_value(&self, g: &GameStructure, l: usize, e: usize) -> i64 {
        let d = g.dst(e);
        oplus(g.weight(e, 0), self.values[0][d].max(self.values[l - 1][d]))
    }

    /// Lowest edge out of `v` optimal for `p` with `l` steps left.
    fn best_edge(&self, g: &GameStructure, l: usize, v: usize, p: Player) -> usize {
        let mut best = g.out_edges(v)[0];
        let mut val = self.step_value(g, l, best);
        for &e in &g.out_edges(v)[1..] {
            let x = self.step_value(g, l, e);
            if (p == Player::P1 && x > val) || (p == Player::P2 && x < val) {
                best = e;
                val = x;
            }
        }
        best
    }
}

pub fn icw_table(g: &GameStructure, target: &VertexSet, lambda: usize) -> WindowValueTable {
    let n = g.num_vertices();
    let c0: Vec<i64> = (0..n).map(|v| if target[v] { 0 } else { NEG_INF }).collect();
    let mut t = WindowValueTable { lambda, values: vec![c0], target: target.clone() };
    for l in 1..=lambda {
        let row: Vec<i64> = (0..n)
            .map(|v| {
                let vals = g.out_edges(v).iter().map(|&e| t.step_value(g, l, e));
                match g.owner(v) {
                    Player::P1 => vals.max().unwrap_or(NEG_INF),
                    Player::P2 => vals.min().unwrap_or(NEG_INF),
                }
            })
            .collect();
        debug_assert!((0..n).all(|v| row[v] >= t.values[l - 1][v] || l == 1));
        t.values.push(row);
    }
    t
}

/// Vertices from which player 1 can inductively close the first window in the target.
pub fn icw_region(g: &GameStructure, target: &VertexSet, lambda: usize) -> VertexSet {
    let t = icw_table(g, target, lambda);
    set::from_fn(g.num_vertices(), |v| t.values[lambda][v] >= 0)
}

/// Regions for closing the first window in the target, with the table and optimal-move
/// machines for both players: memory is the number of steps left, starting at `lambda`.
pub fn icw_end(g: &GameStructure, target: &VertexSet, lambda: usize) -> (Solution, WindowValueTable) {
    let t = icw_table(g, target, lambda);
    let w1 = set::from_fn(g.num_vertices(), |v| t.values[lambda][v] >= 0);
    let machine = |p: Player| {
        let mut s = MooreStrategy::trivial(g, p, lambda + 1);
        s.initial = lambda;
        for l in 0..=lambda {
            for e in 0..g.num_edges() {
                s.set_update(l, e, l.saturating_sub(1));
            }
            if l >= 1 {
                for v in g.vertices_of(p) {
                    s.set_next(l, v, t.best_edge(g, l, v, p));
                }
            }
        }
        s
    };
    let sol = Solution { regions: WinningRegions::from_w1(w1), s1: machine(Player::P1), s2: machine(Player::P2) };
    (sol, t)
}

/// Vertices from which player 1 can inductively close the first window either in a vertex
/// winning the good-decomposition reachability of `x`, or in `z` after a history that stayed
/// in `u`.
pub fn end_lambda(g: &GameStructure, u: &VertexSet, x: &VertexSet, z: &VertexSet, lambda: usize) -> VertexSet {
    let gd = gd_end_region(g, x, lambda);
    end_with(g, u, &gd, z, lambda)
}

/// `end_lambda` with the good-decomposition region already computed.
pub(crate) fn end_with(g: &GameStructure, u: &VertexSet, gd: &VertexSet, z: &VertexSet, lambda: usize) -> VertexSet {
    // the bit records a visit outside u
    let prod = Product::build(
        g,
        0,
        |v| Step::To(vec![i32::from(!u[v])]),
        |q, e| Step::To(vec![i32::from(q[0] == 1 || !u[g.dst(e)])]),
        usize::MAX,
    )
    .expect("bit product is at most twice the game");
    let target = prod.set_where(|v, q| gd[v] || (q[0] == 0 && z[v]), &[]);
    let w = icw_region(&prod.weighted(g), &target, lambda);
    prod.project_init(&w)
}
