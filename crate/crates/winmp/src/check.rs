//! Seeded cross-checks of every solver family against the oracle, shared by the CLI and the
//! acceptance suite.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boolean::{solve_cnf, solve_dnf, solve_intersection};
use crate::error::Result;
use crate::game::GameStructure;
use crate::objective::{normalize, Atom, Expr, Measure};
use crate::oracle::{depth_limited_minmax, gd_reach_oracle, oracle_solve_normalized, random_game, RandomGameParams};
use crate::qualitative::solve_isl_intersection;
use crate::reductions::{augment, QualKind};
use crate::set::{self, VertexSet};
use crate::solution::{Solution, WinningRegions};
use crate::strategy::Goal;
use crate::window::{
    gd_end, icw_end, solve_wmp_single, wmp_buchi, wmp_cobuchi, wmp_gen_buchi, wmp_gen_reach, wmp_reach, wmp_safe,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    IcwEnd,
    GdEnd,
    WmpSafe,
    WmpReach,
    WmpGenReach,
    WmpBuchi,
    WmpGenBuchi,
    WmpCoBuchi,
    WmpSingle,
    Isl,
    Intersection,
    Dnf,
    Cnf,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::IcwEnd,
        Family::GdEnd,
        Family::WmpSafe,
        Family::WmpReach,
        Family::WmpGenReach,
        Family::WmpBuchi,
        Family::WmpGenBuchi,
        Family::WmpCoBuchi,
        Family::WmpSingle,
        Family::Isl,
        Family::Intersection,
        Family::Dnf,
        Family::Cnf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::IcwEnd => "icw-end",
            Family::GdEnd => "gd-end",
            Family::WmpSafe => "wmp-safe",
            Family::WmpReach => "wmp-reach",
            Family::WmpGenReach => "wmp-gen-reach",
            Family::WmpBuchi => "wmp-buchi",
            Family::WmpGenBuchi => "wmp-gen-buchi",
            Family::WmpCoBuchi => "wmp-cobuchi",
            Family::WmpSingle => "wmp-single",
            Family::Isl => "isl",
            Family::Intersection => "intersection",
            Family::Dnf => "dnf",
            Family::Cnf => "cnf",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a play has to satisfy for the certified strategies.
#[derive(Clone, Debug)]
pub enum Target {
    Objective(Expr),
    IcwReach(VertexSet, usize),
    GdReach(VertexSet, usize),
}

impl Target {
    pub fn goal(&self) -> Goal<'_> {
        match self {
            Target::Objective(e) => Goal::Objective(e),
            Target::IcwReach(u, l) => Goal::IcwReach(u, *l),
            Target::GdReach(u, l) => Goal::GdReach(u, *l),
        }
    }
}

/// One solved instance: the solver's answer next to the oracle's.
#[derive(Clone, Debug)]
pub struct Checked {
    pub seed: u64,
    /// Game the target is read on (qualitative sets appear as extra dimensions).
    pub game: GameStructure,
    pub target: Target,
    pub solution: Solution,
    pub expected: WinningRegions,
    /// Set when a window value differs from the game-tree search.
    pub value_mismatch: Option<usize>,
}

impl Checked {
    pub fn agrees(&self) -> bool {
        self.solution.regions == self.expected && self.value_mismatch.is_none()
    }
}

/// Instance bounds: at most 6 vertices, windows at most 3, weights at most 2 in absolute value.
fn params(rng: &mut ChaCha8Rng, dim: usize) -> (RandomGameParams, usize) {
    let p = RandomGameParams {
        vertices: rng.gen_range(2..=6),
        avg_degree: rng.gen_range(1.0..2.5),
        dim,
        max_weight: rng.gen_range(1..=2),
        p2_fraction: 0.5,
    };
    (p, rng.gen_range(1..=3))
}

fn random_set(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    set::from_iter(n, (0..n).filter(|_| rng.gen_bool(0.5)).collect::<Vec<_>>())
}

fn random_atom(rng: &mut ChaCha8Rng, dim: usize, lambda: usize, window: bool) -> Atom {
    let kinds = [Measure::Inf, Measure::Sup, Measure::LimInf, Measure::LimSup, Measure::Wmp];
    let m = kinds[rng.gen_range(0..if window { 5 } else { 4 })];
    Atom::normalized(m, dim, (m == Measure::Wmp).then_some(lambda))
}

const QUAL: [(Family, &[QualKind]); 6] = [
    (Family::WmpSafe, &[QualKind::Safe]),
    (Family::WmpReach, &[QualKind::Reach]),
    (Family::WmpGenReach, &[QualKind::Reach, QualKind::Reach]),
    (Family::WmpBuchi, &[QualKind::Buchi]),
    (Family::WmpGenBuchi, &[QualKind::Buchi, QualKind::Buchi]),
    (Family::WmpCoBuchi, &[QualKind::CoBuchi]),
];

/// Generates the instance for `seed`, solves it with the family's solver and with the oracle.
pub fn check(family: Family, seed: u64, budget: usize) -> Result<Checked> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (family as u64) << 48);
    let (mut p, lambda) = params(&mut rng, 1);
    let mut value_mismatch = None;
    let (game, target, solution, expected) = match family {
        Family::IcwEnd => {
            let g = random_game(rng.gen(), &p);
            let u = random_set(&mut rng, g.num_vertices());
            let (sol, table) = icw_end(&g, &u, lambda);
            let values: Vec<i64> = (0..g.num_vertices()).map(|v| depth_limited_minmax(&g, &u, lambda, v)).collect();
            value_mismatch = (0..g.num_vertices()).find(|&v| table.get(lambda, v) != values[v]);
            let expected = WinningRegions::from_w1(set::from_fn(g.num_vertices(), |v| values[v] >= 0));
            (g, Target::IcwReach(u, lambda), sol, expected)
        }
        Family::GdEnd => {
            let g = random_game(rng.gen(), &p);
            let u = random_set(&mut rng, g.num_vertices());
            let (sol, _) = gd_end(&g, &u, lambda, budget)?;
            let expected = WinningRegions::from_w1(gd_reach_oracle(&g, &u, lambda, budget)?);
            (g, Target::GdReach(u, lambda), sol, expected)
        }
        Family::WmpSingle => {
            let g = random_game(rng.gen(), &p);
            let e = Expr::Atom(Atom::wmp(0, lambda));
            let sol = solve_wmp_single(&g, lambda, budget)?;
            let expected = oracle_solve_normalized(&g, &e, budget)?;
            (g, Target::Objective(e), sol, expected)
        }
        f if QUAL.iter().any(|(q, _)| *q == f) => {
            let kinds = QUAL.iter().find(|(q, _)| *q == f).unwrap().1;
            let g = random_game(rng.gen(), &p);
            let sets: Vec<VertexSet> = kinds.iter().map(|_| random_set(&mut rng, g.num_vertices())).collect();
            let sol = match f {
                Family::WmpSafe => wmp_safe(&g, &sets[0], lambda, budget)?,
                Family::WmpReach => wmp_reach(&g, &sets[0], lambda, budget)?,
                Family::WmpGenReach => wmp_gen_reach(&g, &sets, lambda, budget)?,
                Family::WmpBuchi => wmp_buchi(&g, &sets[0], lambda, budget)?,
                Family::WmpGenBuchi => wmp_gen_buchi(&g, &sets, lambda, budget)?,
                _ => wmp_cobuchi(&g, &sets[0], lambda, budget)?,
            };
            let specs: Vec<(QualKind, VertexSet)> = kinds.iter().copied().zip(sets).collect();
            let (ga, atoms) = augment(&g, &specs);
            let mut all = vec![Atom::wmp(0, lambda)];
            all.extend(atoms);
            let e = Expr::and(all);
            let expected = oracle_solve_normalized(&ga, &e, budget)?;
            (ga, Target::Objective(e), sol, expected)
        }
        Family::Isl | Family::Intersection => {
            p.dim = 2;
            let g = random_game(rng.gen(), &p);
            let window = family == Family::Intersection;
            let atoms: Vec<Atom> = (0..2).map(|d| random_atom(&mut rng, d, lambda, window)).collect();
            let sol = if window {
                solve_intersection(&g, &atoms, budget)?.0
            } else {
                solve_isl_intersection(&g, &atoms, budget)?.0
            };
            let e = Expr::and(atoms);
            let expected = oracle_solve_normalized(&g, &e, budget)?;
            (g, Target::Objective(e), sol, expected)
        }
        _ => {
            // Two groups of one or two atoms over a 2-dimensional game, normalized to one
            // dimension per leaf.
            p.dim = 2;
            let raw = random_game(rng.gen(), &p);
            let groups: Vec<Vec<Atom>> = (0..2)
                .map(|_| {
                    let k = rng.gen_range(1..=2);
                    (0..k)
                        .map(|_| {
                            let d = rng.gen_range(0..2);
                            random_atom(&mut rng, d, lambda, true)
                        })
                        .collect()
                })
                .collect();
            let dnf = family == Family::Dnf;
            let outer = |xs: Vec<Expr>| if dnf { Expr::Or(xs) } else { Expr::And(xs) };
            let inner = |xs: Vec<Atom>| {
                let items: Vec<Expr> = xs.into_iter().map(Expr::Atom).collect();
                match (items.len(), dnf) {
                    (1, _) => items.into_iter().next().unwrap(),
                    (_, true) => Expr::And(items),
                    (_, false) => Expr::Or(items),
                }
            };
            let expr = outer(groups.into_iter().map(inner).collect());
            let (e, g, _) = normalize(&expr, &raw);
            let sol = if dnf { solve_dnf(&g, &e.to_dnf(), budget)?.0 } else { solve_cnf(&g, &e.to_cnf(), budget)?.0 };
            let expected = oracle_solve_normalized(&g, &e, budget)?;
            (g, Target::Objective(e), sol, expected)
        }
    };
    Ok(Checked { seed, game, target, solution, expected, value_mismatch })
}
