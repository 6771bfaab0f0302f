//! One window atom intersected with thresholds of a single classical kind.

use super::families::{
    wmp_cobuchi_trace, wmp_gen_buchi_region, wmp_gen_reach_region, wmp_safe_region, wmp_single_region,
};
use crate::error::{Error, Result};
use crate::game::GameStructure;
use crate::objective::{Atom, Measure};
use crate::reductions::edge_split::reduce_edge_split;
use crate::reductions::expand::{leaves_of, solve_leaves};
use crate::set::{self, VertexSet};
use crate::solution::{Solution, WinningRegions};

/// Default cap on the number of Sup atoms; each one doubles the product.
pub const DEFAULT_SUP_BOUND: usize = 3;

/// Which classical kind accompanies the window atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FragmentKind {
    WindowOnly,
    Inf,
    Sup,
    LimInf,
    LimSup,
}

impl FragmentKind {
    pub fn describe(self) -> &'static str {
        match self {
            FragmentKind::WindowOnly => "single window objective",
            FragmentKind::Inf => "window ∩ Inf (window ∩ Safe)",
            FragmentKind::Sup => "window ∩ Sup (window ∩ generalized Reach)",
            FragmentKind::LimInf => "window ∩ LimInf (window ∩ coBüchi)",
            FragmentKind::LimSup => "window ∩ LimSup (window ∩ generalized Büchi)",
        }
    }
}

/// Classifies a normalized conjunction, or says why it is outside the fragment.
pub fn fragment_kind(atoms: &[Atom], sup_bound: usize) -> Result<FragmentKind> {
    let wmp = atoms.iter().filter(|a| a.measure == Measure::Wmp).count();
    if wmp != 1 {
        return Err(Error::FragmentMismatch(format!("{wmp} window atoms, expected exactly one")));
    }
    let mut kinds = atoms.iter().map(|a| a.measure).filter(|&m| m != Measure::Wmp);
    let Some(first) = kinds.next() else { return Ok(FragmentKind::WindowOnly) };
    if kinds.any(|m| m != first) {
        return Err(Error::FragmentMismatch("mixed classical measures".into()));
    }
    Ok(match first {
        Measure::Inf => FragmentKind::Inf,
        Measure::LimInf => FragmentKind::LimInf,
        Measure::LimSup => FragmentKind::LimSup,
        Measure::Sup => {
            let n = atoms.len() - 1;
            if n > sup_bound {
                return Err(Error::FragmentMismatch(format!("{n} Sup atoms exceed the bound {sup_bound}")));
            }
            FragmentKind::Sup
        }
        Measure::Wmp => unreachable!(),
    })
}

/// Player 1's region for a normalized conjunction with exactly one window atom, computed on the
/// edge-split game.
pub fn one_wmp_region(g: &GameStructure, atoms: &[Atom], sup_bound: usize, budget: usize) -> Result<(VertexSet, FragmentKind)> {
    let kind = fragment_kind(atoms, sup_bound)?;
    let split = reduce_edge_split(g, atoms)?;
    let iw = atoms.iter().position(|a| a.measure == Measure::Wmp).unwrap();
    let lambda = split.atoms[iw].lambda();
    let g1 = split.game.project(iw)?;
    let sets: Vec<VertexSet> = split.sets.iter().flatten().cloned().collect();
    let n2 = g1.num_vertices();
    let meet = || sets.iter().fold(set::full(n2), |acc, s| set::intersect(&acc, s));
    let w = match kind {
        FragmentKind::WindowOnly => wmp_single_region(&g1, lambda),
        FragmentKind::Inf => wmp_safe_region(&g1, &meet(), lambda),
        FragmentKind::LimInf => wmp_cobuchi_trace(&g1, &meet(), lambda).xs.pop().unwrap(),
        FragmentKind::Sup => wmp_gen_reach_region(&g1, &sets, lambda, budget)?,
        FragmentKind::LimSup => wmp_gen_buchi_region(&g1, &sets, lambda, budget)?,
    };
    Ok((split.restrict_set(&w), kind))
}

/// Regions from the fragment algorithms, strategies from the explicit leaf product.
pub fn solve_one_wmp_fragment(g: &GameStructure, atoms: &[Atom], sup_bound: usize, budget: usize) -> Result<(Solution, FragmentKind)> {
    let (w1, kind) = one_wmp_region(g, atoms, sup_bound, budget)?;
    let (sol, _) = solve_leaves(g, &[leaves_of(atoms)], budget)?;
    Ok((Solution { regions: WinningRegions::from_w1(w1), s1: sol.s1, s2: sol.s2 }, kind))
}
