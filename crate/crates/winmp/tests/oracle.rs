mod common;

use common::*;
use proptest::prelude::*;
use winmp::objective::parse_objective;
use winmp::oracle::*;
use winmp::qualitative::{solve_buchi, solve_cobuchi, solve_safe};
use winmp::{set, Atom, Expr};

#[test]
fn random_games_are_reproducible() {
    let p = RandomGameParams::default();
    assert_eq!(random_game(7, &p), random_game(7, &p));
    let differ = (0..100u64).filter(|&s| random_game(2 * s, &p) != random_game(2 * s + 1, &p)).count();
    assert!(differ >= 99, "{differ}");
}

#[test]
fn degree_one_games() {
    let p = RandomGameParams { vertices: 8, avg_degree: 1.0, dim: 3, max_weight: 4, p2_fraction: 0.3 };
    for seed in 0..20 {
        let g = random_game(seed, &p);
        assert_eq!(g.num_edges(), 8);
        assert!((0..8).all(|v| g.out_edges(v).len() == 1));
        assert_eq!(g.dim(), 3);
        assert!(g.max_weight() <= 4);
    }
}

#[test]
fn minmax_on_fig5() {
    let g = fig("fig5").game;
    let u = vs(5, &[1, 3, 4]);
    assert_eq!(depth_limited_minmax(&g, &u, 2, 2), 0);
    assert_eq!(depth_limited_minmax(&g, &set::empty(5), 2, 2), i64::MIN);
    assert_eq!(gd_reach_oracle(&g, &u, 2, BUDGET).unwrap(), all(&g));
}

#[test]
fn example_regions() {
    let g = fig("fig1").game;
    let e = parse_objective("WMP(3,>=0@1) & Sup(>=0@2) & LimSup(>=0@3)", 3).unwrap();
    let r = oracle_solve(&g, &e, BUDGET).unwrap();
    assert_eq!(ids(&r.w1), vec![0, 1]);
    assert_eq!(ids(&r.w2), vec![2]);
    let g8 = fig("fig8").game;
    let r = oracle_solve(&g8, &Expr::and(vec![Atom::sup(0), Atom::sup(1)]), BUDGET).unwrap();
    assert!(r.w2[0]);
}

#[test]
fn budget_is_respected() {
    let g = fig("fig1").game;
    let e = parse_objective("WMP(3,>=0@1) & Sup(>=0@2) & LimSup(>=0@3)", 3).unwrap();
    assert!(oracle_solve(&g, &e, 2).is_err());
}

proptest! {
    #[test]
    fn muller_and_rabin_agree_with_buchi(seed in any::<u64>(), bits in any::<u8>()) {
        let g = random_game(seed, &RandomGameParams { vertices: 6, ..RandomGameParams::default() });
        let u = set::from_fn(6, |v| bits >> v & 1 == 1);
        let colors: Vec<u32> = (0..6).map(|v| if u[v] { 1 } else { 2 }).collect();
        let buchi = solve_buchi(&g, &u).regions.w1;
        prop_assert_eq!(&solve_muller(&g, &colors, &|c| c & 1 == 1), &buchi);
        prop_assert_eq!(&rabin_by_enumeration(&g, &[(set::empty(6), u.clone())]), &buchi);
        let cobuchi = solve_cobuchi(&g, &u).regions.w1;
        prop_assert_eq!(&solve_muller(&g, &colors, &|c| c == 1), &cobuchi);
        prop_assert_eq!(&rabin_by_enumeration(&g, &[(set::complement(&u), set::full(6))]), &cobuchi);
    }

    #[test]
    fn inf_atom_is_safety(seed in any::<u64>()) {
        // Inf(>= 0) holds iff no negative edge is ever taken: safety in the edge-split sense,
        // which on a game where weights depend only on the source is plain Safe.
        let g = random_game(seed, &RandomGameParams { vertices: 6, ..RandomGameParams::default() });
        let good = set::from_fn(6, |v| g.out_edges(v).iter().all(|&e| g.weight(e, 0) >= 0));
        let w: Vec<i64> = (0..g.num_edges()).map(|e| if good[g.src(e)] { 0 } else { -1 }).collect();
        let h = g.with_weights(1, w);
        let r = oracle_solve(&h, &Expr::Atom(Atom::inf(0)), BUDGET).unwrap();
        prop_assert_eq!(r.w1, solve_safe(&h, &good).regions.w1);
    }
}
