mod common;

use common::*;
use proptest::prelude::*;
use winmp::game::{induced_subgame, project_dimension, restrict};
use winmp::oracle::{random_game, RandomGameParams};
use winmp::{build_game, set, Arena, Error, Lasso, Player};

#[test]
fn fig1_structure() {
    let g = fig("fig1").game;
    assert_eq!((g.num_vertices(), g.num_edges(), g.dim()), (3, 6, 3));
    assert_eq!(g.owner(2), Player::P2);
    assert_eq!(g.max_weight(), 2);
    let e = g.find_edge(1, 0).unwrap();
    assert_eq!(g.weights(e), &[2, -1, -1]);
}

#[test]
fn deadlock_is_rejected() {
    let r = build_game(vec![Player::P1, Player::P1], vec![(0, 1, vec![0])]);
    assert!(matches!(r, Err(Error::DeadlockVertex(1))));
}

#[test]
fn mismatched_dimensions_are_rejected() {
    let r = build_game(vec![Player::P1], vec![(0, 0, vec![0, 1]), (0, 0, vec![2])]);
    assert!(matches!(r, Err(Error::DimensionMismatch { edge: 1, expected: 2, found: 1 })));
}

#[test]
fn bad_endpoint_and_empty() {
    assert!(matches!(Arena::new(vec![Player::P1], &[(0, 3)]), Err(Error::BadEndpoint { .. })));
    assert!(matches!(Arena::new(vec![], &[]), Err(Error::EmptyGame)));
}

#[test]
fn projection_is_one_based() {
    let g = fig("fig1").game;
    let p = project_dimension(&g, 2).unwrap();
    assert_eq!(p.dim(), 1);
    assert_eq!(p.weight(g.find_edge(1, 1).unwrap(), 0), 0);
    assert!(matches!(project_dimension(&g, 0), Err(Error::BadDimension(0))));
    assert!(matches!(project_dimension(&g, 4), Err(Error::BadDimension(4))));
}

#[test]
fn subgame_without_the_player2_vertex() {
    let g = fig("fig1").game;
    let view = induced_subgame(&g, &vs(3, &[0, 1]), Player::P2).unwrap();
    assert_eq!(view.game.num_vertices(), 2);
    // v0->v1, v1->v0, v1->v1 survive.
    assert_eq!(view.game.num_edges(), 3);
    assert_eq!(ids(&view.lift_set(&set::full(2))), vec![0, 1]);
}

#[test]
fn subgame_player2_can_escape() {
    // Player 2 leaves {v2} through v2->v0.
    let g = fig("fig1").game;
    assert!(matches!(induced_subgame(&g, &vs(3, &[2]), Player::P2), Err(Error::NotClosed { .. })));
    assert!(induced_subgame(&g, &vs(3, &[2]), Player::P1).is_ok());
}

#[test]
fn lasso_from_vertices() {
    let g = fig("fig1").game;
    let l = Lasso::from_vertices(&g, &[0, 1, 1, 0], &[2, 0]).unwrap();
    assert!(l.is_valid(&g));
    assert_eq!(l.stem_vertices(&g), vec![0, 1, 1, 0]);
    assert_eq!(l.period_vertices(&g), vec![2, 0]);
    assert_eq!(l.vertex_at(&g, 7), 0);
    assert_eq!(l.canonical_pos(9), 5);
    assert!(Lasso::from_vertices(&g, &[0], &[]).is_none());
}

fn small_game() -> impl Strategy<Value = winmp::GameStructure> {
    (any::<u64>(), 1usize..7, 1usize..3).prop_map(|(seed, n, dim)| {
        random_game(seed, &RandomGameParams { vertices: n, dim, ..RandomGameParams::default() })
    })
}

proptest! {
    #[test]
    fn random_games_have_no_deadlocks(g in small_game()) {
        for v in 0..g.num_vertices() {
            prop_assert!(!g.out_edges(v).is_empty());
            for &e in g.out_edges(v) {
                prop_assert_eq!(g.src(e), v);
                prop_assert!(g.in_edges(g.dst(e)).contains(&e));
            }
        }
    }

    #[test]
    fn restriction_round_trips(g in small_game(), mask in any::<u8>()) {
        let n = g.num_vertices();
        let keep = set::from_fn(n, |v| mask >> v & 1 == 1);
        if let Ok(r) = restrict(&g, &keep) {
            prop_assert_eq!(r.lift_set(&set::full(r.arena.num_vertices())), keep.clone());
            prop_assert_eq!(r.restrict_set(&keep), set::full(r.arena.num_vertices()));
        }
    }
}
