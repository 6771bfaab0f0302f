use super::gd::gd_end_region;
use super::icw::end_with;
use crate::error::Result;
use crate::game::{induced_subgame, GameStructure, Player, SubgameView};
use crate::qualitative::attractor::attractor;
use crate::qualitative::basic::reach_for;
use crate::qualitative::generalized::{gen_buchi_product, gen_reach_product};
use crate::reductions::expand::{solve_leaves, Leaf};
use crate::reductions::product::{Product, Step};
use crate::set::{self, VertexSet};
use crate::solution::{Solution, WinningRegions};

/// Runs `f` on the subgame induced by a set player 2 cannot leave and lifts its answer.
fn on_subgame(g: &GameStructure, keep: &VertexSet, f: impl FnOnce(&SubgameView) -> VertexSet) -> VertexSet {
    if keep.not_any() {
        return set::empty(g.num_vertices());
    }
    let view = induced_subgame(g, keep, Player::P2).expect("set is closed for player 2");
    view.lift_set(&f(&view))
}

/// Regions from a window algorithm, strategies from the explicit product of the window leaf and
/// the qualitative leaves.
fn with_strategies(g: &GameStructure, w1: VertexSet, lambda: usize, qual: Vec<Leaf>, budget: usize) -> Result<Solution> {
    let mut leaves = vec![Leaf::Wmp { dim: 0, lambda }];
    leaves.extend(qual);
    let (sol, _) = solve_leaves(g, &[leaves], budget)?;
    Ok(Solution { regions: WinningRegions::from_w1(w1), s1: sol.s1, s2: sol.s2 })
}

/// Iterates `Z_{k+1} = X ∪ End(U, X, Z_k)` from `Z_0 = V`; the last two entries are equal.
pub fn obj_f_trace(g: &GameStructure, u: &VertexSet, x: &VertexSet, lambda: usize) -> Vec<VertexSet> {
    let gd = gd_end_region(g, x, lambda);
    let mut trace = vec![set::full(g.num_vertices())];
    loop {
        let z = trace.last().unwrap();
        let next = set::union(x, &end_with(g, u, &gd, z, lambda));
        debug_assert!(set::is_subset(&next, z));
        let done = &next == z;
        trace.push(next);
        if done {
            return trace;
        }
    }
}

/// Winning region of `(WMP ∩ Safe(U)) ∪ GDReach(X)`.
pub fn obj_f(g: &GameStructure, u: &VertexSet, x: &VertexSet, lambda: usize) -> VertexSet {
    obj_f_trace(g, u, x, lambda).pop().unwrap()
}

pub fn wmp_single_region(g: &GameStructure, lambda: usize) -> VertexSet {
    let n = g.num_vertices();
    obj_f(g, &set::full(n), &set::empty(n), lambda)
}

pub fn solve_wmp_single(g: &GameStructure, lambda: usize, budget: usize) -> Result<Solution> {
    with_strategies(g, wmp_single_region(g, lambda), lambda, vec![], budget)
}

/// Window objective inside the safe region of `u`.
pub fn wmp_safe_region(g: &GameStructure, u: &VertexSet, lambda: usize) -> VertexSet {
    let safe = set::complement(&reach_for(g, Player::P2, &set::complement(u)).win);
    on_subgame(g, &safe, |sub| wmp_single_region(&sub.game, lambda))
}

pub fn wmp_safe(g: &GameStructure, u: &VertexSet, lambda: usize, budget: usize) -> Result<Solution> {
    with_strategies(g, wmp_safe_region(g, u, lambda), lambda, vec![Leaf::Safe(u.clone())], budget)
}

/// Window objective and a visit to `u`: a bit records the visit; the answer is the
/// good-decomposition reachability of bit-1 vertices that win the window objective.
pub fn wmp_reach_region(g: &GameStructure, u: &VertexSet, lambda: usize) -> VertexSet {
    let prod = Product::build(
        g,
        0,
        |v| Step::To(vec![i32::from(u[v])]),
        |q, e| Step::To(vec![i32::from(q[0] == 1 || u[g.dst(e)])]),
        usize::MAX,
    )
    .expect("bit product is at most twice the game");
    let pg = prod.weighted(g);
    let seen = prod.set_where(|_, q| q[0] == 1, &[]);
    prod.project_init(&reach_layer(&pg, &seen, lambda))
}

/// Good-decomposition reachability of the window-winning part of `target`.
fn reach_layer(g: &GameStructure, target: &VertexSet, lambda: usize) -> VertexSet {
    let x = set::intersect(target, &wmp_single_region(g, lambda));
    gd_end_region(g, &x, lambda)
}

pub fn wmp_reach(g: &GameStructure, u: &VertexSet, lambda: usize, budget: usize) -> Result<Solution> {
    with_strategies(g, wmp_reach_region(g, u, lambda), lambda, vec![Leaf::Reach(u.clone())], budget)
}

/// Window objective and a visit to every set, through the visited-bits product.
pub fn wmp_gen_reach_region(g: &GameStructure, sets: &[VertexSet], lambda: usize, budget: usize) -> Result<VertexSet> {
    let prod = gen_reach_product(g, sets, budget)?;
    let all = (1i32 << sets.len()) - 1;
    let done = prod.set_where(|_, q| q[0] == all, &[]);
    let w = reach_layer(&prod.weighted(g), &done, lambda);
    Ok(prod.project_init(&w))
}

pub fn wmp_gen_reach(g: &GameStructure, sets: &[VertexSet], lambda: usize, budget: usize) -> Result<Solution> {
    let w1 = wmp_gen_reach_region(g, sets, lambda, budget)?;
    with_strategies(g, w1, lambda, sets.iter().cloned().map(Leaf::Reach).collect(), budget)
}

/// Window objective and infinitely many visits to `u`: repeatedly drop the player-2 attractor of
/// the vertices losing the reachability version.
pub fn wmp_buchi_region(g: &GameStructure, u: &VertexSet, lambda: usize) -> VertexSet {
    let n = g.num_vertices();
    let mut rest = set::full(n);
    let mut x = wmp_reach_region(g, u, lambda);
    while x != rest && x.any() {
        let y = attractor(g, Player::P2, &set::complement(&x)).set;
        rest = set::complement(&y);
        x = on_subgame(g, &rest, |sub| wmp_reach_region(&sub.game, &sub.restrict_set(u), lambda));
    }
    x
}

pub fn wmp_buchi(g: &GameStructure, u: &VertexSet, lambda: usize, budget: usize) -> Result<Solution> {
    with_strategies(g, wmp_buchi_region(g, u, lambda), lambda, vec![Leaf::Buchi(u.clone())], budget)
}

/// Window objective and every set visited infinitely often, through the round-robin counter.
pub fn wmp_gen_buchi_region(g: &GameStructure, sets: &[VertexSet], lambda: usize, budget: usize) -> Result<VertexSet> {
    if sets.is_empty() {
        return Ok(wmp_single_region(g, lambda));
    }
    let prod = gen_buchi_product(g, sets, budget)?;
    let i = sets.len() as i32;
    let top = prod.set_where(|_, q| q[0] == i, &[]);
    let w = wmp_buchi_region(&prod.weighted(g), &top, lambda);
    Ok(prod.project_init(&w))
}

pub fn wmp_gen_buchi(g: &GameStructure, sets: &[VertexSet], lambda: usize, budget: usize) -> Result<Solution> {
    let w1 = wmp_gen_buchi_region(g, sets, lambda, budget)?;
    with_strategies(g, w1, lambda, sets.iter().cloned().map(Leaf::Buchi).collect(), budget)
}

/// Iterates of the outer fixed point and, for each, the inner `Z` iterates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoBuchiTrace {
    pub xs: Vec<VertexSet>,
    /// `zs[k]` is the `Z` trace of the call computing `xs[k + 1]`.
    pub zs: Vec<Vec<VertexSet>>,
}

/// Iterates `X_{k+1} = X_k ∪ ObjF(U, X_k)` from `X_0 = ∅`; the last two entries are equal.
pub fn wmp_cobuchi_trace(g: &GameStructure, u: &VertexSet, lambda: usize) -> CoBuchiTrace {
    let mut t = CoBuchiTrace { xs: vec![set::empty(g.num_vertices())], zs: Vec::new() };
    loop {
        let x = t.xs.last().unwrap();
        let zs = obj_f_trace(g, u, x, lambda);
        let next = set::union(x, zs.last().unwrap());
        let done = &next == x;
        t.zs.push(zs);
        t.xs.push(next);
        if done {
            return t;
        }
    }
}

pub fn wmp_cobuchi(g: &GameStructure, u: &VertexSet, lambda: usize, budget: usize) -> Result<Solution> {
    let w1 = wmp_cobuchi_trace(g, u, lambda).xs.pop().unwrap();
    with_strategies(g, w1, lambda, vec![Leaf::CoBuchi(u.clone())], budget)
}
