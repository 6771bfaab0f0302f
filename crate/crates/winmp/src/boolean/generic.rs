//! Product-based solvers for intersections and for DNF/CNF combinations.

use crate::error::Result;
use crate::game::GameStructure;
use crate::objective::Atom;
use crate::reductions::expand::{leaves_of, solve_leaves, solve_leaves_cnf};
use crate::solution::Solution;

/// Normalized intersection: one generalized Büchi ∩ coBüchi pair on the leaf product.
/// Also returns the number of product vertices.
pub fn solve_intersection(g: &GameStructure, atoms: &[Atom], budget: usize) -> Result<(Solution, usize)> {
    solve_leaves(g, &[leaves_of(atoms)], budget)
}

/// `⋁_k ⋀ disjuncts[k]`: one Rabin pair per disjunct.
pub fn solve_dnf(g: &GameStructure, disjuncts: &[Vec<Atom>], budget: usize) -> Result<(Solution, usize)> {
    let leaves: Vec<_> = disjuncts.iter().map(|d| leaves_of(d)).collect();
    solve_leaves(g, &leaves, budget)
}

/// `⋀_k ⋁ clauses[k]`, solved as player 2's DNF of the negated leaves.
pub fn solve_cnf(g: &GameStructure, clauses: &[Vec<Atom>], budget: usize) -> Result<(Solution, usize)> {
    let leaves: Vec<_> = clauses.iter().map(|c| leaves_of(c)).collect();
    solve_leaves_cnf(g, &leaves, budget)
}
