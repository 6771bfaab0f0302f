use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{build_game, GameStructure, Player};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomGameParams {
    pub vertices: usize,
    /// Average out-degree; every vertex gets at least one edge.
    pub avg_degree: f64,
    pub dim: usize,
    /// Weights are drawn uniformly from `[-max_weight, max_weight]`.
    pub max_weight: i64,
    pub p2_fraction: f64,
}

impl Default for RandomGameParams {
    fn default() -> Self {
        RandomGameParams { vertices: 5, avg_degree: 2.0, dim: 1, max_weight: 2, p2_fraction: 0.5 }
    }
}

/// Deterministic in `seed`.
pub fn random_game(seed: u64, p: &RandomGameParams) -> GameStructure {
    assert!(p.vertices > 0 && p.dim > 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = p.vertices;
    let owners = (0..n).map(|_| if rng.gen_bool(p.p2_fraction) { Player::P2 } else { Player::P1 }).collect();
    let weights = |rng: &mut ChaCha8Rng| (0..p.dim).map(|_| rng.gen_range(-p.max_weight..=p.max_weight)).collect::<Vec<_>>();
    let mut edges = Vec::new();
    for v in 0..n {
        let t = rng.gen_range(0..n);
        let w = weights(&mut rng);
        edges.push((v, t, w));
    }
    let extra = ((p.avg_degree - 1.0).max(0.0) * n as f64).round() as usize;
    for _ in 0..extra {
        let s = rng.gen_range(0..n);
        let t = rng.gen_range(0..n);
        let w = weights(&mut rng);
        edges.push((s, t, w));
    }
    // Group edges by source so edge indices follow vertex order.
    edges.sort_by_key(|e| e.0);
    build_game(owners, edges).expect("every vertex has an edge")
}
