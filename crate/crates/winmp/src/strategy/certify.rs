//! Empirical certification: play a strategy against many opponents and check the outcome.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::enumerate_memoryless;
use super::evaluate::{goal_holds, Goal};
use super::{play_out, MooreStrategy};
use crate::error::Result;
use crate::game::{Arena, GameStructure, Lasso, Player};
use crate::solution::Solution;

#[derive(Clone, Debug)]
pub struct CertifyConfig {
    /// Random finite-memory opponents per player.
    pub samples: usize,
    pub max_memory: usize,
    pub seed: u64,
    /// Cap on the number of memoryless opponents enumerated exhaustively.
    pub enum_budget: u128,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig { samples: 16, max_memory: 3, seed: 0, enum_budget: 1 << 16 }
    }
}

/// A play from `vertex` consistent with `player`'s strategy that `player` loses.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub vertex: usize,
    pub player: Player,
    pub lasso: Lasso,
}

#[derive(Clone, Debug, Default)]
pub struct CertificationReport {
    pub plays: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl CertificationReport {
    pub fn is_ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Random Moore machine for `owner` with `memory` states.
pub fn random_strategy(a: &Arena, owner: Player, memory: usize, rng: &mut impl Rng) -> MooreStrategy {
    let mut s = MooreStrategy::trivial(a, owner, memory);
    for m in 0..memory {
        for v in a.vertices_of(owner) {
            let out = a.out_edges(v);
            s.set_next(m, v, out[rng.gen_range(0..out.len())]);
        }
        for e in 0..a.num_edges() {
            s.set_update(m, e, rng.gen_range(0..memory));
        }
    }
    s
}

/// Opponents of `p`: all memoryless strategies plus `cfg.samples` random machines.
pub fn opponents(a: &Arena, p: Player, cfg: &CertifyConfig, rng: &mut impl Rng) -> Result<Vec<MooreStrategy>> {
    let q = p.opponent();
    let mut out: Vec<MooreStrategy> = enumerate_memoryless(a, q, cfg.enum_budget)?.collect();
    for _ in 0..cfg.samples {
        let m = rng.gen_range(1..=cfg.max_memory.max(1));
        out.push(random_strategy(a, q, m, rng));
    }
    Ok(out)
}

/// Checks that `sol.s1` wins `goal` from every vertex of W1 and `sol.s2` spoils it from every
/// vertex of W2.
pub fn certify(g: &GameStructure, sol: &Solution, goal: Goal<'_>, cfg: &CertifyConfig) -> Result<CertificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut report = CertificationReport::default();
    for p in [Player::P1, Player::P2] {
        let region = sol.regions.of(p);
        if region.not_any() {
            continue;
        }
        let mine = sol.strategy(p);
        let theirs = opponents(g, p, cfg, &mut rng)?;
        for v in region.iter_ones() {
            for t in &theirs {
                let lasso = match p {
                    Player::P1 => play_out(g, v, mine, t),
                    Player::P2 => play_out(g, v, t, mine),
                };
                report.plays += 1;
                if goal_holds(g, &lasso, goal) != (p == Player::P1) {
                    report.counterexamples.push(Counterexample { vertex: v, player: p, lasso });
                    break;
                }
            }
        }
    }
    Ok(report)
}
