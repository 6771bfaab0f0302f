use std::fmt;

use super::generic::{solve_cnf, solve_dnf, solve_intersection};
use crate::error::Result;
use crate::game::GameStructure;
use crate::objective::{normalize, shape_of, Atom, Expr, Measure, Shape};
use crate::qualitative::{isl_regions, IslRoute};
use crate::set::VertexSet;
use crate::solution::{Solution, WinningRegions};
use crate::window::{fragment_kind, one_wmp_region, FragmentKind, DEFAULT_SUP_BOUND};

/// The solving path dispatch picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Isl(IslRoute),
    OneWindow(FragmentKind),
    Intersection,
    Dnf { disjuncts: usize },
    Cnf { clauses: usize },
    /// An arbitrary formula expanded to DNF first.
    ConvertedDnf { disjuncts: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteReport {
    pub route: Route,
    /// Vertices of the explicit product the strategies come from.
    pub product_vertices: usize,
}

impl fmt::Display for RouteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.route {
            Route::Isl(r) => write!(f, "{}", r.describe())?,
            Route::OneWindow(k) => write!(f, "one window objective: {}", k.describe())?,
            Route::Intersection => write!(f, "generic intersection (generalized Büchi ∩ coBüchi product)")?,
            Route::Dnf { disjuncts } => write!(f, "DNF with {disjuncts} disjuncts (Rabin product)")?,
            Route::Cnf { clauses } => write!(f, "CNF with {clauses} clauses (Rabin product for player 2)")?,
            Route::ConvertedDnf { disjuncts } => {
                write!(f, "general formula converted to DNF with {disjuncts} disjuncts (Rabin product)")?
            }
        }
        write!(f, "; product vertices: {}", self.product_vertices)
    }
}

#[derive(Clone, Debug)]
pub struct Dispatched {
    pub solution: Solution,
    pub report: RouteReport,
}

// Regions from the specialized algorithm; strategies from the product.
fn with_regions(sol: Solution, w1: VertexSet) -> Solution {
    Solution { regions: WinningRegions::from_w1(w1), ..sol }
}

fn conjunction(expr: &Expr) -> Vec<Atom> {
    expr.atoms().into_iter().cloned().collect()
}

/// Solves a normalized objective along the cheapest applicable path.
pub fn dispatch(g: &GameStructure, expr: &Expr, budget: usize) -> Result<Dispatched> {
    let expr = expr.flatten();
    let (solution, route, size) = match shape_of(&expr) {
        Shape::Atom | Shape::Intersection => {
            let atoms = conjunction(&expr);
            let windows = atoms.iter().filter(|a| a.measure == Measure::Wmp).count();
            if windows == 0 {
                let (w1, r) = isl_regions(g, &atoms, budget)?;
                let (sol, size) = solve_intersection(g, &atoms, budget)?;
                (with_regions(sol, w1), Route::Isl(r), size)
            } else if let Ok(kind) = fragment_kind(&atoms, DEFAULT_SUP_BOUND) {
                let (w1, _) = one_wmp_region(g, &atoms, DEFAULT_SUP_BOUND, budget)?;
                let (sol, size) = solve_intersection(g, &atoms, budget)?;
                (with_regions(sol, w1), Route::OneWindow(kind), size)
            } else {
                let (sol, size) = solve_intersection(g, &atoms, budget)?;
                (sol, Route::Intersection, size)
            }
        }
        Shape::Dnf => {
            let d = expr.to_dnf();
            let (sol, size) = solve_dnf(g, &d, budget)?;
            (sol, Route::Dnf { disjuncts: d.len() }, size)
        }
        Shape::Cnf => {
            let c = expr.to_cnf();
            let (sol, size) = solve_cnf(g, &c, budget)?;
            (sol, Route::Cnf { clauses: c.len() }, size)
        }
        Shape::General => {
            let d = expr.to_dnf();
            let (sol, size) = solve_dnf(g, &d, budget)?;
            (sol, Route::ConvertedDnf { disjuncts: d.len() }, size)
        }
    };
    Ok(Dispatched { solution, report: RouteReport { route, product_vertices: size } })
}

/// Normalizes `expr` against `g` and dispatches. Strategies refer to the arena of `g`.
pub fn solve(g: &GameStructure, expr: &Expr, budget: usize) -> Result<Dispatched> {
    let (e, ng, _) = normalize(expr, g);
    dispatch(&ng, &e, budget)
}
