//! Exact objective membership of ultimately periodic plays.

use crate::game::{GameStructure, Lasso};
use crate::objective::{Atom, Expr, Measure};
use crate::set::VertexSet;

/// Membership of a lasso in an objective, with per-atom detail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    /// One entry per atom, in the expression's left-to-right atom order.
    pub atoms: Vec<bool>,
    pub overall: bool,
    /// First position whose window is bad, for failed WMP atoms.
    pub bad_windows: Vec<Option<usize>>,
}

/// Evaluates `expr` on `lasso`. Atoms may carry any rational threshold and relation.
pub fn evaluate(g: &GameStructure, lasso: &Lasso, expr: &Expr) -> Verdict {
    let results: Vec<(bool, Option<usize>)> = expr.atoms().into_iter().map(|a| atom_holds(g, lasso, a)).collect();
    let atoms: Vec<bool> = results.iter().map(|r| r.0).collect();
    let mut i = 0;
    let overall = combine(expr, &atoms, &mut i);
    Verdict { atoms, overall, bad_windows: results.into_iter().map(|r| r.1).collect() }
}

fn combine(e: &Expr, atoms: &[bool], i: &mut usize) -> bool {
    match e {
        Expr::Atom(_) => {
            *i += 1;
            atoms[*i - 1]
        }
        Expr::And(xs) => xs.iter().map(|x| combine(x, atoms, i)).fold(true, |acc, b| acc && b),
        Expr::Or(xs) => xs.iter().map(|x| combine(x, atoms, i)).fold(false, |acc, b| acc || b),
    }
}

/// Membership of one atom; for WMP atoms also the first bad window position.
pub fn atom_holds(g: &GameStructure, lasso: &Lasso, a: &Atom) -> (bool, Option<usize>) {
    let w = |e: usize| g.weight(e, a.dim) as i128;
    let (num, den) = (a.num as i128, a.den as i128);
    let all = || lasso.stem.iter().chain(lasso.period.iter()).map(|&e| w(e));
    let period = || lasso.period.iter().map(|&e| w(e));
    let value = match a.measure {
        Measure::Inf => all().min(),
        Measure::Sup => all().max(),
        Measure::LimInf => period().min(),
        Measure::LimSup => period().max(),
        Measure::Wmp => {
            let lambda = a.lambda();
            let bad = (0..lasso.len()).find(|&k| {
                let mut tp = 0i128;
                !(1..=lambda).any(|l| {
                    tp += w(lasso.edge_at(k + l - 1));
                    a.rel.holds(den * tp, num * l as i128)
                })
            });
            return (bad.is_none(), bad);
        }
    };
    (a.rel.holds(den * value.unwrap_or(0), num), None)
}

/// Next position of the greedy first-closing chain on dimension 0, if the window at `k` is good.
pub fn first_close(g: &GameStructure, lasso: &Lasso, k: usize, lambda: usize) -> Option<usize> {
    let mut tp = 0i64;
    for l in 1..=lambda {
        tp += g.weight(lasso.edge_at(k + l - 1), 0);
        if tp >= 0 {
            return Some(k + l);
        }
    }
    None
}

/// Some window-closing position `l` in `1..=lambda` of the chain from 0 lies in `target`.
pub fn icw_reach_holds(g: &GameStructure, lasso: &Lasso, target: &VertexSet, lambda: usize) -> bool {
    let mut k = 0;
    while let Some(next) = first_close(g, lasso, k, lambda) {
        if next > lambda {
            return false;
        }
        if target[lasso.vertex_at(g, next)] {
            return true;
        }
        k = next;
    }
    false
}

/// Some position of the maximal good decomposition prefix (including 0) lies in `target`.
pub fn gd_reach_holds(g: &GameStructure, lasso: &Lasso, target: &VertexSet, lambda: usize) -> bool {
    let mut seen = vec![false; lasso.len()];
    let mut k = 0;
    loop {
        if target[lasso.vertex_at(g, k)] {
            return true;
        }
        let c = lasso.canonical_pos(k);
        if seen[c] {
            return false;
        }
        seen[c] = true;
        match first_close(g, lasso, k, lambda) {
            Some(next) => k = next,
            None => return false,
        }
    }
}

/// Winning condition checked by the certification harness.
#[derive(Clone, Copy, Debug)]
pub enum Goal<'a> {
    Objective(&'a Expr),
    IcwReach(&'a VertexSet, usize),
    GdReach(&'a VertexSet, usize),
}

pub fn goal_holds(g: &GameStructure, lasso: &Lasso, goal: Goal<'_>) -> bool {
    match goal {
        Goal::Objective(e) => evaluate(g, lasso, e).overall,
        Goal::IcwReach(u, l) => icw_reach_holds(g, lasso, u, l),
        Goal::GdReach(u, l) => gd_reach_holds(g, lasso, u, l),
    }
}
