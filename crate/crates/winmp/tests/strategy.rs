mod common;

use common::*;
use proptest::prelude::*;
use winmp::boolean::solve_intersection;
use winmp::objective::parse_objective;
use winmp::oracle::{random_game, RandomGameParams};
use winmp::strategy::certify::random_strategy;
use winmp::strategy::enumerate::count_memoryless;
use winmp::strategy::{certify, enumerate_memoryless, evaluate, play_out, CertifyConfig, Goal, MooreStrategy};
use winmp::{Atom, Error, Expr, Lasso, Measure, Player};
use rand::SeedableRng;

const EXAMPLE: &str = "WMP(3,>=0@1) & Sup(>=0@2) & LimSup(>=0@3)";

/// Visit the v1 loop once, return to v0, then head for v2 for good.
fn example_strategy(g: &winmp::GameStructure) -> MooreStrategy {
    let e = |u, v| g.find_edge(u, v).unwrap();
    let mut s = MooreStrategy::trivial(g, Player::P1, 3);
    s.set_next(0, 0, e(0, 1));
    s.set_next(0, 1, e(1, 1));
    s.set_update(0, e(1, 1), 1);
    s.set_next(1, 1, e(1, 0));
    s.set_update(1, e(1, 0), 2);
    s.set_next(2, 0, e(0, 2));
    s.set_next(2, 1, e(1, 0));
    s
}

#[test]
fn example_outcome() {
    let g = fig("fig1").game;
    let s1 = example_strategy(&g);
    assert!(s1.is_well_formed(&g));
    assert!(s1.positional().is_none());
    let stay = MooreStrategy::memoryless(&g, Player::P2, &[None, None, g.find_edge(2, 2)]);
    let l = play_out(&g, 0, &s1, &stay);
    assert_eq!(l, Lasso::from_vertices(&g, &[0, 1, 1, 0], &[2]).unwrap());
    let v = evaluate(&g, &l, &parse_objective(EXAMPLE, 3).unwrap());
    assert_eq!(v.atoms, vec![true, true, true]);
    assert!(v.overall);
    // Bouncing back to v0 does not help player 2: every window still closes within two steps.
    let back = MooreStrategy::memoryless(&g, Player::P2, &[None, None, g.find_edge(2, 0)]);
    let l = play_out(&g, 0, &s1, &back);
    assert_eq!(l.period_vertices(&g), vec![0, 2]);
    assert!(evaluate(&g, &l, &parse_objective(EXAMPLE, 3).unwrap()).overall);
}

#[test]
fn enumeration() {
    let g = fig("fig8").game;
    assert_eq!(count_memoryless(&g, Player::P1), 2);
    assert_eq!(enumerate_memoryless(&g, Player::P1, 10).unwrap().count(), 2);
    assert_eq!(enumerate_memoryless(&g, Player::P2, 10).unwrap().count(), 2);
    assert!(matches!(enumerate_memoryless(&g, Player::P1, 1), Err(Error::BudgetExceeded(2))));
    let all: Vec<_> = enumerate_memoryless(&g, Player::P1, 10).unwrap().collect();
    assert_ne!(all[0], all[1]);
    assert!(all.iter().all(|s| s.is_memoryless()));
}

#[test]
fn certification_catches_a_broken_strategy() {
    let g = fig("fig1").game;
    let expr = parse_objective(EXAMPLE, 3).unwrap();
    let atoms: Vec<Atom> = expr.atoms().into_iter().cloned().collect();
    let (sol, _) = solve_intersection(&g, &atoms, BUDGET).unwrap();
    let cfg = CertifyConfig { samples: 50, ..CertifyConfig::default() };
    let report = certify(&g, &sol, Goal::Objective(&expr), &cfg).unwrap();
    assert!(report.is_ok());
    assert!(report.plays > 0);

    let mut broken = sol.clone();
    let to_v2 = g.find_edge(0, 2).unwrap();
    for m in 0..broken.s1.memory {
        broken.s1.set_next(m, 0, to_v2);
    }
    let report = certify(&g, &broken, Goal::Objective(&expr), &cfg).unwrap();
    assert!(!report.is_ok());
    let c = &report.counterexamples[0];
    assert_eq!(c.player, Player::P1);
    assert!(!evaluate(&g, &c.lasso, &expr).overall);
}

fn rotate(l: &Lasso) -> Lasso {
    let mut stem = l.stem.clone();
    stem.push(l.period[0]);
    let mut period = l.period[1..].to_vec();
    period.push(l.period[0]);
    Lasso { start: l.start, stem, period }
}

fn unroll(l: &Lasso) -> Lasso {
    Lasso { start: l.start, stem: l.stem.clone(), period: l.period.repeat(2) }
}

proptest! {
    #[test]
    fn verdicts_ignore_lasso_presentation(
        seed in any::<u64>(),
        kinds in proptest::collection::vec((0usize..5, 0usize..2, 1usize..4, -2i64..3), 1..4),
        choices in proptest::collection::vec(0usize..4, 0..20),
        min_len in 0usize..6,
    ) {
        let g = random_game(seed, &RandomGameParams { vertices: 5, dim: 2, ..RandomGameParams::default() });
        let ms = [Measure::Inf, Measure::Sup, Measure::LimInf, Measure::LimSup, Measure::Wmp];
        let atoms: Vec<Atom> = kinds
            .iter()
            .map(|&(k, d, l, t)| Atom { num: t, ..Atom::normalized(ms[k], d, (k == 4).then_some(l)) })
            .collect();
        let expr = Expr::and(atoms);
        let l = random_lasso(&g, 0, &choices, min_len);
        prop_assert!(l.is_valid(&g));
        let v = evaluate(&g, &l, &expr);
        prop_assert_eq!(&evaluate(&g, &rotate(&l), &expr), &v);
        prop_assert_eq!(&evaluate(&g, &unroll(&l), &expr).atoms, &v.atoms);
    }

    #[test]
    fn play_out_is_bounded(seed in any::<u64>(), m1 in 1usize..4, m2 in 1usize..4) {
        let g = random_game(seed, &RandomGameParams { vertices: 6, ..RandomGameParams::default() });
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let s1 = random_strategy(&g, Player::P1, m1, &mut rng);
        let s2 = random_strategy(&g, Player::P2, m2, &mut rng);
        prop_assert!(s1.is_well_formed(&g) && s2.is_well_formed(&g));
        for v in 0..g.num_vertices() {
            let l = play_out(&g, v, &s1, &s2);
            prop_assert!(l.is_valid(&g));
            prop_assert!(l.len() <= g.num_vertices() * m1 * m2);
        }
    }
}
