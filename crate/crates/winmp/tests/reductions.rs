mod common;

use common::*;
use proptest::prelude::*;
use winmp::boolean::solve_intersection;
use winmp::oracle::{oracle_solve, random_game, RandomGameParams};
use winmp::qualitative::{solve_buchi, solve_cobuchi, solve_reach, solve_safe};
use winmp::reductions::expand::{solve_leaves, window_step, DEAD};
use winmp::reductions::{
    lift_strategy, reduce_complement_expand, reduce_edge_split, reduce_expand, reduce_qual_to_weighted, QualKind,
    ReductionMap,
};
use winmp::strategy::{certify, evaluate, CertifyConfig, Goal};
use winmp::{set, Atom, Expr, Lasso, Measure, Solution, WinningRegions};

#[test]
fn edge_split_shape() {
    let g = fig("fig1").game;
    let atoms = [Atom::wmp(0, 3), Atom::sup(1), Atom::lim_sup(2)];
    let s = reduce_edge_split(&g, &atoms).unwrap();
    assert_eq!(s.game.num_vertices(), 3 + 6);
    assert_eq!(s.game.num_edges(), 12);
    assert_eq!(s.atoms[0], Atom::wmp(0, 6));
    assert!(s.sets[0].is_none());
    // v0 -> v1 weighs (-1, -1, -1): the window dimension splits into -1 and 0.
    assert_eq!(s.game.weights(0), &[-1, -1, -1]);
    assert_eq!(s.game.weights(1)[0], 0);
    // The only Sup-good edge is the v1 loop.
    let sup = s.sets[1].as_ref().unwrap();
    assert_eq!(ids(sup), vec![3 + g.find_edge(1, 1).unwrap()]);
}

fn split_lasso(l: &Lasso) -> Lasso {
    let f = |es: &[usize]| es.iter().flat_map(|&e| [2 * e, 2 * e + 1]).collect();
    Lasso { start: l.start, stem: f(&l.stem), period: f(&l.period) }
}

fn atom_of(k: u8, dim: usize, lambda: usize) -> Atom {
    let m = [Measure::Inf, Measure::Sup, Measure::LimInf, Measure::LimSup, Measure::Wmp][k as usize % 5];
    Atom::normalized(m, dim, (m == Measure::Wmp).then_some(lambda))
}

#[test]
fn qual_encoding_reads_sources() {
    let g = fig("fig1").game;
    let u = vs(3, &[1]);
    let (wg, atoms) = reduce_qual_to_weighted(&g, &[(QualKind::Reach, u.clone()), (QualKind::Safe, u)]);
    assert_eq!(atoms, vec![Atom::sup(0), Atom::inf(1)]);
    assert_eq!(wg.weights(g.find_edge(1, 0).unwrap()), &[0, 0]);
    assert_eq!(wg.weights(g.find_edge(0, 1).unwrap()), &[-1, -1]);
}

#[test]
fn leaves_match_qualitative_solvers() {
    for seed in 0..40 {
        let g = random_game(seed, &RandomGameParams { vertices: 6, ..RandomGameParams::default() });
        let u = set::from_fn(6, |v| (seed >> (v % 4)) & 1 == 1 || v == seed as usize % 6);
        use winmp::reductions::Leaf::*;
        let cases = [
            (Reach(u.clone()), solve_reach(&g, &u)),
            (Safe(u.clone()), solve_safe(&g, &u)),
            (Buchi(u.clone()), solve_buchi(&g, &u)),
            (CoBuchi(u.clone()), solve_cobuchi(&g, &u)),
        ];
        for (leaf, direct) in cases {
            let (sol, _) = solve_leaves(&g, &[vec![leaf.clone()]], BUDGET).unwrap();
            assert_eq!(sol.regions, direct.regions, "seed {seed} {leaf:?}");
        }
    }
}

#[test]
fn window_tracker() {
    assert_eq!(window_step(0, 0, 2, 3), [0, 0]);
    assert_eq!(window_step(0, 0, -1, 3), [-1, 1]);
    assert_eq!(window_step(-1, 1, -1, 3), [-2, 2]);
    assert_eq!(window_step(-2, 2, -1, 3), [DEAD, 0]);
    assert_eq!(window_step(-2, 2, 2, 3), [0, 0]);
    assert_eq!(window_step(DEAD, 0, 9, 3), [DEAD, 0]);
    assert_eq!(window_step(0, 0, -1, 1), [DEAD, 0]);
}

#[test]
fn expansion_sets() {
    let g = fig("fig1").game;
    let atoms = [Atom::wmp(0, 3), Atom::sup(1), Atom::lim_sup(2)];
    let (p, buchi, cobuchi) = reduce_expand(&g, &atoms, BUDGET).unwrap();
    // Sup and LimSup are Büchi-type, the window leaf is coBüchi-type.
    assert_eq!(buchi.len(), 2);
    assert_eq!(cobuchi.len(), 1);
    // The shared window-failure sink is never good.
    assert!(p.is_sink(0));
    assert!(!cobuchi[0][0]);
    assert!(buchi.iter().chain(&cobuchi).all(|s| s.len() == p.num_vertices()));
    let (q, _, _) = reduce_complement_expand(&g, &atoms, BUDGET).unwrap();
    assert!(q.num_vertices() >= 3);
    assert!(reduce_expand(&g, &atoms, 4).is_err());
}

#[test]
fn product_strategies_lift() {
    let g = fig("fig1").game;
    let atoms = [Atom::wmp(0, 3), Atom::sup(1), Atom::lim_sup(2)];
    let (sol, size) = solve_intersection(&g, &atoms, BUDGET).unwrap();
    assert_eq!(ids(&sol.regions.w1), vec![0, 1]);
    assert!(size > g.num_vertices());
    let (p, _, _) = reduce_expand(&g, &atoms, BUDGET).unwrap();
    let trivial = winmp::MooreStrategy::trivial(&p.arena, winmp::Player::P1, 1);
    assert!(lift_strategy(ReductionMap::Product(&p), &g, &trivial).is_well_formed(&g));
}

proptest! {
    #[test]
    fn edge_split_preserves_verdicts(
        seed in any::<u64>(),
        kinds in proptest::collection::vec((any::<u8>(), 0usize..2, 1usize..4), 1..4),
        choices in proptest::collection::vec(0usize..4, 0..20),
        min_len in 0usize..6,
    ) {
        let g = random_game(seed, &RandomGameParams { vertices: 4, dim: 2, ..RandomGameParams::default() });
        let atoms: Vec<Atom> = kinds.iter().map(|&(k, d, l)| atom_of(k, d, l)).collect();
        let s = reduce_edge_split(&g, &atoms).unwrap();
        let l = random_lasso(&g, 0, &choices, min_len);
        let sl = split_lasso(&l);
        prop_assert!(sl.is_valid(&s.game));
        for (a, b) in atoms.iter().zip(&s.atoms) {
            let before = evaluate(&g, &l, &Expr::Atom(a.clone())).overall;
            let after = evaluate(&s.game, &sl, &Expr::Atom(b.clone())).overall;
            prop_assert_eq!(before, after, "{} vs {}", a, b);
        }
    }

    #[test]
    fn edge_split_preserves_regions_and_strategies(
        seed in any::<u64>(),
        kinds in proptest::collection::vec((any::<u8>(), 0usize..2, 1usize..3), 1..3),
    ) {
        let g = random_game(seed, &RandomGameParams { vertices: 4, dim: 2, ..RandomGameParams::default() });
        let atoms: Vec<Atom> = kinds.iter().map(|&(k, d, l)| atom_of(k, d, l)).collect();
        let expr = Expr::and(atoms.clone());
        let s = reduce_edge_split(&g, &atoms).unwrap();
        let (split_sol, _) = solve_intersection(&s.game, &s.atoms, BUDGET).unwrap();
        let w1 = s.restrict_set(&split_sol.regions.w1);
        prop_assert_eq!(&w1, &oracle_solve(&g, &expr, BUDGET).unwrap().w1);
        let lifted = Solution {
            regions: WinningRegions::from_w1(w1),
            s1: lift_strategy(ReductionMap::EdgeSplit(&s), &g, &split_sol.s1),
            s2: lift_strategy(ReductionMap::EdgeSplit(&s), &g, &split_sol.s2),
        };
        let cfg = CertifyConfig { samples: 8, max_memory: 2, ..CertifyConfig::default() };
        prop_assert!(certify(&g, &lifted, Goal::Objective(&expr), &cfg).unwrap().is_ok());
    }

    #[test]
    fn qual_encoding_matches_set_semantics(
        seed in any::<u64>(), bits in any::<u8>(), k in 0usize..4,
        choices in proptest::collection::vec(0usize..4, 0..20),
    ) {
        let g = random_game(seed, &RandomGameParams { vertices: 5, ..RandomGameParams::default() });
        let u = set::from_fn(5, |v| bits >> v & 1 == 1);
        let kind = [QualKind::Reach, QualKind::Safe, QualKind::Buchi, QualKind::CoBuchi][k];
        let (wg, atoms) = reduce_qual_to_weighted(&g, &[(kind, u.clone())]);
        let l = random_lasso(&g, 0, &choices, 0);
        let stem = l.stem_vertices(&g);
        let period = l.period_vertices(&g);
        let direct = match kind {
            QualKind::Reach => stem.iter().chain(&period).any(|&v| u[v]),
            QualKind::Safe => stem.iter().chain(&period).all(|&v| u[v]),
            QualKind::Buchi => period.iter().any(|&v| u[v]),
            QualKind::CoBuchi => period.iter().all(|&v| u[v]),
        };
        prop_assert_eq!(evaluate(&wg, &l, &Expr::Atom(atoms[0].clone())).overall, direct);
    }
}
