use super::basic::{buchi_for, reach_for};
use crate::boolean::rabin::{solve_rabin_for, RabinCondition};
use crate::error::Result;
use crate::game::{Arena, Player};
use crate::reductions::product::{Product, Step};
use crate::set::{self, VertexSet};
use crate::solution::{Solution, WinningRegions};

fn mask_of(sets: &[VertexSet], v: usize) -> i32 {
    sets.iter().enumerate().filter(|(_, s)| s[v]).fold(0, |m, (k, _)| m | (1 << k))
}

/// Visited-bits product: one bit per target set, set once the set has been seen.
pub fn gen_reach_product(a: &Arena, sets: &[VertexSet], budget: usize) -> Result<Product> {
    if (sets.len() as u32) >= 31 || a.num_vertices().saturating_mul(1 << sets.len()) > budget {
        return Err(crate::error::Error::ProductTooLarge { budget });
    }
    Product::build(
        a,
        0,
        |v| Step::To(vec![mask_of(sets, v)]),
        |q, e| Step::To(vec![q[0] | mask_of(sets, a.dst(e))]),
        budget,
    )
}

/// Generalized reachability: visit every set at least once.
pub fn solve_gen_reach(a: &Arena, sets: &[VertexSet], budget: usize) -> Result<Solution> {
    let prod = gen_reach_product(a, sets, budget)?;
    let all = (1i32 << sets.len()) - 1;
    let target = prod.set_where(|_, q| q[0] == all, &[]);
    let pos = reach_for(&prod.arena, Player::P1, &target);
    Ok(lift(a, &prod, &pos.win, &pos.mine, &pos.theirs))
}

/// Counter product: the counter advances when the next set in round-robin order is entered
/// and wraps after reaching `sets.len()`.
pub fn gen_buchi_product(a: &Arena, sets: &[VertexSet], budget: usize) -> Result<Product> {
    let i = sets.len() as i32;
    Product::build(
        a,
        0,
        |_| Step::To(vec![0]),
        |q, e| {
            let k = q[0];
            let next = if k == i {
                0
            } else if sets[k as usize][a.dst(e)] {
                k + 1
            } else {
                k
            };
            Step::To(vec![next])
        },
        budget,
    )
}

/// Generalized Büchi: visit every set infinitely often.
pub fn solve_gen_buchi(a: &Arena, sets: &[VertexSet], budget: usize) -> Result<Solution> {
    if sets.is_empty() {
        return Ok(super::basic::solve_buchi(a, &set::full(a.num_vertices())));
    }
    let prod = gen_buchi_product(a, sets, budget)?;
    let i = sets.len() as i32;
    let target = prod.set_where(|_, q| q[0] == i, &[]);
    let pos = buchi_for(&prod.arena, Player::P1, &target);
    Ok(lift(a, &prod, &pos.win, &pos.mine, &pos.theirs))
}

/// Generalized Büchi of `sets` intersected with coBüchi of `stay`, as a one-pair Rabin game on
/// the counter product.
pub fn solve_gen_buchi_cobuchi(a: &Arena, sets: &[VertexSet], stay: &VertexSet, budget: usize) -> Result<Solution> {
    let prod = gen_buchi_product(a, sets, budget)?;
    let i = sets.len() as i32;
    let avoid = prod.set_where(|v, _| !stay[v], &[]);
    let visit = prod.set_where(|_, q| q[0] == i, &[]);
    let sol = solve_rabin_for(&prod.arena, Player::P1, &RabinCondition { pairs: vec![(avoid, visit)] }, budget)?;
    Ok(Solution {
        regions: WinningRegions::from_w1(prod.project_init(&sol.regions.w1)),
        s1: prod.lift_moore(a, &sol.s1),
        s2: prod.lift_moore(a, &sol.s2),
    })
}

fn lift(a: &Arena, prod: &Product, win: &VertexSet, s1: &[Option<usize>], s2: &[Option<usize>]) -> Solution {
    Solution {
        regions: WinningRegions::from_w1(prod.project_init(win)),
        s1: prod.lift_positional(a, Player::P1, s1),
        s2: prod.lift_positional(a, Player::P2, s2),
    }
}
