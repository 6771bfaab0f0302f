//! Intersections of Inf, Sup, LimInf and LimSup thresholds.

use super::basic::reach_for;
use super::generalized::{solve_gen_buchi_cobuchi, solve_gen_reach};
use crate::boolean::rabin::{solve_rabin_for, RabinCondition};
use crate::error::{Error, Result};
use crate::game::{restrict, Arena, GameStructure, Player};
use crate::objective::{Atom, Measure};
use crate::reductions::edge_split::reduce_edge_split;
use crate::reductions::expand::{leaves_of, solve_leaves};
use crate::set::{self, VertexSet};
use crate::solution::{Solution, WinningRegions};

/// Which of the cheap sub-cases applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IslRoute {
    /// No Sup and at most one LimSup: a single Büchi/coBüchi pair, no counter.
    BuchiCoBuchi,
    /// At most one Sup: the reachability pass is a plain attractor.
    SingleReach,
    /// Generalized reachability over a visited-bits product.
    General,
}

impl IslRoute {
    pub fn describe(self) -> &'static str {
        match self {
            IslRoute::BuchiCoBuchi => "ISL intersection, no Sup and at most one LimSup (Büchi ∩ coBüchi)",
            IslRoute::SingleReach => "ISL intersection, at most one Sup (attractor pass)",
            IslRoute::General => "ISL intersection (generalized reachability product)",
        }
    }
}

/// Winning regions of a normalized ISL intersection, computed on the edge-split game as
/// Safe first, then generalized Büchi ∩ coBüchi inside the safe region, then generalized
/// reachability inside that.
pub fn isl_regions(g: &GameStructure, atoms: &[Atom], budget: usize) -> Result<(VertexSet, IslRoute)> {
    if atoms.iter().any(|a| a.measure == Measure::Wmp) {
        return Err(Error::NotIsl);
    }
    let split = reduce_edge_split(g, atoms)?;
    let n2 = split.game.num_vertices();
    let of = |m: Measure| -> Vec<VertexSet> {
        atoms
            .iter()
            .zip(&split.sets)
            .filter(|(a, _)| a.measure == m)
            .map(|(_, s)| s.clone().expect("qualitative leaf"))
            .collect()
    };
    let meet = |sets: Vec<VertexSet>| sets.iter().fold(set::full(n2), |acc, s| set::intersect(&acc, s));
    let safe = meet(of(Measure::Inf));
    let stay = meet(of(Measure::LimInf));
    let buchi = of(Measure::LimSup);
    let reach = of(Measure::Sup);
    let route = match (reach.len(), buchi.len()) {
        (0, 0 | 1) => IslRoute::BuchiCoBuchi,
        (0 | 1, _) => IslRoute::SingleReach,
        _ => IslRoute::General,
    };

    let a: &Arena = &split.game;
    let t = reach_for(a, Player::P2, &set::complement(&safe)).win;
    let t = set::complement(&t);
    let x1 = within(a, &t, |sub, lift| {
        let stay = lift(&stay);
        if buchi.len() <= 1 {
            let visit = buchi.first().map(|b| lift(b)).unwrap_or_else(|| set::full(sub.num_vertices()));
            let cond = RabinCondition { pairs: vec![(set::complement(&stay), visit)] };
            Ok(solve_rabin_for(sub, Player::P1, &cond, budget)?.regions.w1)
        } else {
            let sets: Vec<VertexSet> = buchi.iter().map(|b| lift(b)).collect();
            Ok(solve_gen_buchi_cobuchi(sub, &sets, &stay, budget)?.regions.w1)
        }
    })?;
    let y1 = within(a, &x1, |sub, lift| match reach.len() {
        0 => Ok(set::full(sub.num_vertices())),
        1 => Ok(reach_for(sub, Player::P1, &lift(&reach[0])).win),
        _ => {
            let sets: Vec<VertexSet> = reach.iter().map(|r| lift(r)).collect();
            Ok(solve_gen_reach(sub, &sets, budget)?.regions.w1)
        }
    })?;
    Ok((split.restrict_set(&y1), route))
}

/// Solves on the arena induced by a 2-closed set `keep`; `f` gets the subarena and a map from
/// sets over `a` to sets over the subarena, and returns player 1's region there.
fn within(
    a: &Arena,
    keep: &VertexSet,
    f: impl FnOnce(&Arena, &dyn Fn(&VertexSet) -> VertexSet) -> Result<VertexSet>,
) -> Result<VertexSet> {
    if keep.not_any() {
        return Ok(set::empty(a.num_vertices()));
    }
    let r = restrict(a, keep)?;
    let w = f(&r.arena, &|s| r.restrict_set(s))?;
    Ok(r.lift_set(&w))
}

/// Regions from the layered schedule; strategies from the explicit leaf product.
pub fn solve_isl_intersection(g: &GameStructure, atoms: &[Atom], budget: usize) -> Result<(Solution, IslRoute)> {
    let (w1, route) = isl_regions(g, atoms, budget)?;
    let (sol, _) = solve_leaves(g, &[leaves_of(atoms)], budget)?;
    Ok((Solution { regions: WinningRegions::from_w1(w1), s1: sol.s1, s2: sol.s2 }, route))
}

