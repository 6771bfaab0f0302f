//! Rabin games, solved through an index appearance record and a parity game.

use super::parity::solve_parity;
use crate::error::Result;
use crate::game::{Arena, Player};
use crate::reductions::product::{Product, Step, DEFAULT_NODE_BUDGET};
use crate::set::VertexSet;
use crate::solution::{Solution, WinningRegions};
use crate::strategy::MooreStrategy;

/// Pairs `(E, F)`: a play satisfies the condition iff for some pair it visits `E` finitely
/// often and `F` infinitely often.
#[derive(Clone, Debug)]
pub struct RabinCondition {
    pub pairs: Vec<(VertexSet, VertexSet)>,
}

/// Permutation update: indices whose `E` set contains `v` move to the front.
fn iar_step(perm: &[i32], cond: &RabinCondition, v: usize) -> Vec<i32> {
    let mut front: Vec<i32> = perm.iter().copied().filter(|&k| cond.pairs[k as usize].0[v]).collect();
    front.extend(perm.iter().copied().filter(|&k| !cond.pairs[k as usize].0[v]));
    front
}

/// Priority of `v` read under `perm` (positions are 1-based, 0 when no pair is hit).
fn iar_priority(perm: &[i32], cond: &RabinCondition, v: usize) -> usize {
    let mut e = 0;
    let mut f = 0;
    for (i, &k) in perm.iter().enumerate() {
        let (ek, fk) = &cond.pairs[k as usize];
        if ek[v] {
            e = i + 1;
        }
        if fk[v] {
            f = i + 1;
        }
    }
    if f > e {
        2 * f
    } else {
        2 * e + 1
    }
}

/// Solves the Rabin game where `p` owns the Rabin condition.
pub fn solve_rabin_for(a: &Arena, p: Player, cond: &RabinCondition, budget: usize) -> Result<Solution> {
    if cond.pairs.is_empty() {
        let w1 = if p == Player::P1 { crate::set::empty(a.num_vertices()) } else { crate::set::full(a.num_vertices()) };
        return Ok(Solution {
            regions: WinningRegions::from_w1(w1),
            s1: MooreStrategy::trivial(a, Player::P1, 1),
            s2: MooreStrategy::trivial(a, Player::P2, 1),
        });
    }
    let identity: Vec<i32> = (0..cond.pairs.len() as i32).collect();
    let prod = Product::build(
        a,
        0,
        |_| Step::To(identity.clone()),
        |perm, e| Step::To(iar_step(perm, cond, a.src(e))),
        budget,
    )?;
    let shift = usize::from(p == Player::P2);
    let prio: Vec<usize> = (0..prod.num_vertices())
        .map(|x| iar_priority(prod.state(x), cond, prod.base_vertex[x]) + shift)
        .collect();
    let pos = solve_parity(&prod.arena, &prio);
    let w1 = prod.project_init(&pos.win);
    Ok(Solution {
        regions: WinningRegions::from_w1(w1),
        s1: prod.lift_positional(a, Player::P1, &pos.mine),
        s2: prod.lift_positional(a, Player::P2, &pos.theirs),
    })
}

/// Rabin game for player 1.
pub fn solve_rabin(a: &Arena, cond: &RabinCondition) -> Result<Solution> {
    solve_rabin_for(a, Player::P1, cond, DEFAULT_NODE_BUDGET)
}
