mod common;

use common::*;
use proptest::prelude::*;
use winmp::oracle::{oracle_solve, random_game, RandomGameParams};
use winmp::qualitative::{
    attractor, isl_regions, solve_buchi, solve_cobuchi, solve_gen_buchi, solve_gen_reach, solve_reach, solve_safe,
    IslRoute,
};
use winmp::reductions::qual::{reduce_qual_to_weighted, QualKind};
use winmp::strategy::{certify, enumerate_memoryless, evaluate, play_out, CertifyConfig, Goal, MooreStrategy};
use winmp::{build_game, set, Atom, Expr, GameStructure, Player, Solution};

fn with_owner(g: &GameStructure, v: usize, p: Player) -> GameStructure {
    let mut owners = g.owners().to_vec();
    owners[v] = p;
    let edges = (0..g.num_edges()).map(|e| (g.src(e), g.dst(e), g.weights(e).to_vec())).collect();
    build_game(owners, edges).unwrap()
}

#[test]
fn attractor_ranks() {
    // 0 -> 1 -> 2 (target), 3 is player 2 with an escape to itself.
    let g = build_game(
        vec![Player::P1, Player::P1, Player::P1, Player::P2],
        vec![(0, 1, vec![0]), (1, 2, vec![0]), (2, 2, vec![0]), (3, 2, vec![0]), (3, 3, vec![0])],
    )
    .unwrap();
    let r = attractor(&g, Player::P1, &vs(4, &[2]));
    assert_eq!(ids(&r.set), vec![0, 1, 2]);
    assert_eq!(&r.rank[..3], &[2, 1, 0]);
    assert_eq!(r.witness[0], Some(0));
    let r2 = attractor(&g, Player::P2, &vs(4, &[2]));
    assert_eq!(ids(&r2.set), vec![0, 1, 2, 3]);
}

#[test]
fn basic_solvers_on_fig1() {
    let g = fig("fig1").game;
    // v2 belongs to player 2 and can stay on its loop forever.
    assert_eq!(ids(&solve_reach(&g, &vs(3, &[1])).regions.w1), vec![0, 1]);
    assert_eq!(ids(&solve_safe(&g, &vs(3, &[0, 2])).regions.w1), vec![0, 2]);
    assert_eq!(ids(&solve_buchi(&g, &vs(3, &[1])).regions.w1), vec![0, 1]);
    assert_eq!(ids(&solve_cobuchi(&g, &vs(3, &[2])).regions.w1), Vec::<usize>::new());
    assert_eq!(ids(&solve_cobuchi(&g, &vs(3, &[1])).regions.w1), vec![0, 1]);
}

#[test]
fn generalized_solvers() {
    let g = fig("fig1").game;
    let sets = [vs(3, &[1]), vs(3, &[2])];
    assert_eq!(ids(&solve_gen_reach(&g, &sets, BUDGET).unwrap().regions.w1), vec![0, 1]);
    // Player 2 stays in v2 forever once there.
    assert!(solve_gen_buchi(&g, &sets, BUDGET).unwrap().regions.w1.not_any());
    let g1 = with_owner(&g, 2, Player::P1);
    assert_eq!(ids(&solve_gen_buchi(&g1, &sets, BUDGET).unwrap().regions.w1), vec![0, 1, 2]);
}

#[test]
fn isl_routes() {
    let g = fig("fig1").game;
    let r = |atoms: &[Atom]| isl_regions(&g, atoms, BUDGET).unwrap();
    assert_eq!(r(&[Atom::sup(1), Atom::lim_sup(2)]).1, IslRoute::SingleReach);
    assert_eq!(r(&[Atom::inf(0), Atom::lim_inf(1), Atom::lim_sup(2)]).1, IslRoute::BuchiCoBuchi);
    assert_eq!(r(&[Atom::sup(0), Atom::sup(1)]).1, IslRoute::General);
    assert!(isl_regions(&g, &[Atom::wmp(0, 2)], BUDGET).is_err());
}

fn wins_from(g: &GameStructure, v: usize, s: &MooreStrategy, expr: &Expr) -> bool {
    let opp = s.owner.opponent();
    enumerate_memoryless(g, opp, 1 << 20).unwrap().all(|t| {
        let (s1, s2) = if s.owner == Player::P1 { (s, &t) } else { (&t, s) };
        evaluate(g, &play_out(g, v, s1, s2), expr).overall == (s.owner == Player::P1)
    })
}

#[test]
fn sup_and_limsup_needs_memory() {
    let g = fig("fig1").game;
    let expr = Expr::and(vec![Atom::sup(1), Atom::lim_sup(2)]);
    let (sol, _) = winmp::boolean::solve_intersection(&g, &[Atom::sup(1), Atom::lim_sup(2)], BUDGET).unwrap();
    assert!(sol.regions.w1[0]);
    assert!(wins_from(&g, 0, &sol.s1, &expr));
    assert!(!sol.s1.is_memoryless());
    for s in enumerate_memoryless(&g, Player::P1, 1 << 10).unwrap() {
        assert!(!wins_from(&g, 0, &s, &expr));
    }
}

#[test]
fn one_player_limsup_needs_memory() {
    let g = with_owner(&fig("fig1").game, 2, Player::P1);
    let atoms = [Atom::lim_sup(1), Atom::lim_sup(2)];
    let expr = Expr::and(atoms.to_vec());
    let (sol, _) = winmp::boolean::solve_intersection(&g, &atoms, BUDGET).unwrap();
    assert!(sol.regions.w1[0]);
    let idle = MooreStrategy::trivial(&g, Player::P2, 1);
    assert!(evaluate(&g, &play_out(&g, 0, &sol.s1, &idle), &expr).overall);
    for s in enumerate_memoryless(&g, Player::P1, 1 << 10).unwrap() {
        assert!(!evaluate(&g, &play_out(&g, 0, &s, &idle), &expr).overall);
    }
}

#[test]
fn player_two_needs_memory_on_fig8() {
    let g = fig("fig8").game;
    let atoms = [Atom::sup(0), Atom::sup(1)];
    let expr = Expr::and(atoms.to_vec());
    let (sol, _) = winmp::boolean::solve_intersection(&g, &atoms, BUDGET).unwrap();
    assert!(sol.regions.w2[0]);
    assert!(wins_from(&g, 0, &sol.s2, &expr));
    for s in enumerate_memoryless(&g, Player::P2, 1 << 10).unwrap() {
        assert!(!wins_from(&g, 0, &s, &expr));
    }
}

fn certified(g: &GameStructure, sol: &Solution, expr: &Expr) -> bool {
    let cfg = CertifyConfig { samples: 8, max_memory: 2, ..CertifyConfig::default() };
    certify(g, sol, Goal::Objective(expr), &cfg).unwrap().is_ok()
}

fn qual_case(seed: u64, kind: QualKind, bits: u8) -> (GameStructure, winmp::VertexSet, Expr) {
    let g = random_game(seed, &RandomGameParams { vertices: 6, ..RandomGameParams::default() });
    let u = set::from_fn(6, |v| bits >> v & 1 == 1);
    let (wg, atoms) = reduce_qual_to_weighted(&g, &[(kind, u.clone())]);
    (wg, u, Expr::Atom(atoms[0].clone()))
}

proptest! {
    #[test]
    fn basic_solvers_match_oracle(seed in any::<u64>(), bits in any::<u8>(), k in 0usize..4) {
        let kind = [QualKind::Reach, QualKind::Safe, QualKind::Buchi, QualKind::CoBuchi][k];
        let (g, u, expr) = qual_case(seed, kind, bits);
        let sol = match kind {
            QualKind::Reach => solve_reach(&g, &u),
            QualKind::Safe => solve_safe(&g, &u),
            QualKind::Buchi => solve_buchi(&g, &u),
            QualKind::CoBuchi => solve_cobuchi(&g, &u),
        };
        prop_assert!(sol.regions.is_partition());
        prop_assert_eq!(&sol.regions, &oracle_solve(&g, &expr, BUDGET).unwrap());
        prop_assert!(certified(&g, &sol, &expr));
    }

    #[test]
    fn generalized_solvers_match_oracle(seed in any::<u64>(), masks in proptest::collection::vec(any::<u8>(), 1..4), buchi in any::<bool>()) {
        let g = random_game(seed, &RandomGameParams { vertices: 5, ..RandomGameParams::default() });
        let sets: Vec<_> = masks.iter().map(|&b| set::from_fn(5, |v| b >> v & 1 == 1)).collect();
        let kind = if buchi { QualKind::Buchi } else { QualKind::Reach };
        let specs: Vec<_> = sets.iter().map(|s| (kind, s.clone())).collect();
        let (wg, atoms) = reduce_qual_to_weighted(&g, &specs);
        let expr = Expr::and(atoms);
        let sol = if buchi { solve_gen_buchi(&g, &sets, BUDGET) } else { solve_gen_reach(&g, &sets, BUDGET) }.unwrap();
        prop_assert_eq!(&sol.regions, &oracle_solve(&wg, &expr, BUDGET).unwrap());
        prop_assert!(certified(&wg, &sol, &expr));
    }
}
