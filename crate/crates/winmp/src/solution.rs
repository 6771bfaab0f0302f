//! Solver outputs shared by every module.

use crate::game::{Arena, Player};
use crate::set::{self, VertexSet};
use crate::strategy::MooreStrategy;

/// Determinacy partition of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WinningRegions {
    pub w1: VertexSet,
    pub w2: VertexSet,
}

impl WinningRegions {
    pub fn from_w1(w1: VertexSet) -> WinningRegions {
        let w2 = set::complement(&w1);
        WinningRegions { w1, w2 }
    }

    pub fn of(&self, p: Player) -> &VertexSet {
        match p {
            Player::P1 => &self.w1,
            Player::P2 => &self.w2,
        }
    }

    pub fn winner(&self, v: usize) -> Player {
        if self.w1[v] {
            Player::P1
        } else {
            Player::P2
        }
    }

    /// W1 and W2 are disjoint and cover every vertex.
    pub fn is_partition(&self) -> bool {
        self.w1.len() == self.w2.len() && (0..self.w1.len()).all(|v| self.w1[v] != self.w2[v])
    }

    pub fn swapped(&self) -> WinningRegions {
        WinningRegions { w1: self.w2.clone(), w2: self.w1.clone() }
    }
}

/// Regions together with a strategy for each player that wins from that player's region.
#[derive(Clone, Debug)]
pub struct Solution {
    pub regions: WinningRegions,
    pub s1: MooreStrategy,
    pub s2: MooreStrategy,
}

impl Solution {
    pub fn strategy(&self, p: Player) -> &MooreStrategy {
        match p {
            Player::P1 => &self.s1,
            Player::P2 => &self.s2,
        }
    }
}

/// Positional solution of a game from the point of view of player `p`.
#[derive(Clone, Debug)]
pub(crate) struct Positional {
    pub player: Player,
    pub win: VertexSet,
    pub mine: Vec<Option<usize>>,
    pub theirs: Vec<Option<usize>>,
}

impl Positional {
    pub fn into_solution(self, a: &Arena) -> Solution {
        let (w1, c1, c2) = match self.player {
            Player::P1 => (self.win, self.mine, self.theirs),
            Player::P2 => (set::complement(&self.win), self.theirs, self.mine),
        };
        Solution {
            regions: WinningRegions::from_w1(w1),
            s1: MooreStrategy::memoryless(a, Player::P1, &c1),
            s2: MooreStrategy::memoryless(a, Player::P2, &c2),
        }
    }
}
