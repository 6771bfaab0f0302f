use std::collections::HashMap;

use super::MooreStrategy;
use crate::game::{Arena, Lasso, Player};

/// The unique play from `v0` consistent with both machines, folded into a lasso at the first
/// repeated configuration (vertex, memory of player 1, memory of player 2).
pub fn play_out(a: &Arena, v0: usize, s1: &MooreStrategy, s2: &MooreStrategy) -> Lasso {
    debug_assert!(s1.owner == Player::P1 && s2.owner == Player::P2);
    let mut seen: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    let (mut v, mut m1, mut m2) = (v0, s1.initial, s2.initial);
    loop {
        if let Some(&k) = seen.get(&(v, m1, m2)) {
            let period = edges.split_off(k);
            return Lasso { start: v0, stem: edges, period };
        }
        seen.insert((v, m1, m2), edges.len());
        let e = match a.owner(v) {
            Player::P1 => s1.next(m1, v),
            Player::P2 => s2.next(m2, v),
        };
        edges.push(e);
        m1 = s1.update(m1, e);
        m2 = s2.update(m2, e);
        v = a.dst(e);
    }
}
