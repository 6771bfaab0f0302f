#![allow(dead_code)]

use winmp::io::{fixture, NamedGame};
use winmp::{set, GameStructure, VertexSet};

pub const BUDGET: usize = 1 << 20;

pub fn fig(name: &str) -> NamedGame {
    fixture(name).unwrap()
}

pub fn vs(n: usize, items: &[usize]) -> VertexSet {
    set::from_iter(n, items.iter().copied())
}

pub fn ids(s: &VertexSet) -> Vec<usize> {
    set::to_vec(s)
}

pub fn all(g: &GameStructure) -> VertexSet {
    set::full(g.num_vertices())
}

/// Random walk from `start` folded into a lasso at the first repeated vertex after `min_len` steps.
pub fn random_lasso(g: &GameStructure, start: usize, choices: &[usize], min_len: usize) -> winmp::Lasso {
    let mut first_at = vec![usize::MAX; g.num_vertices()];
    let mut edges = Vec::new();
    let mut v = start;
    let mut i = 0;
    loop {
        if edges.len() >= min_len && first_at[v] != usize::MAX {
            let k = first_at[v];
            let period = edges.split_off(k);
            return winmp::Lasso { start, stem: edges, period };
        }
        if first_at[v] == usize::MAX {
            first_at[v] = edges.len();
        }
        let out = g.out_edges(v);
        let e = out[choices.get(i).copied().unwrap_or(0) % out.len()];
        i += 1;
        edges.push(e);
        v = g.dst(e);
    }
}

/// Closure of the winning regions, checked only where the atoms allow it: W1 cannot be left by
/// player 2 when every atom is closed under suffixes, and W2 cannot be left by player 1 when
/// every atom is closed under adding a prefix.
pub fn closure_violation(g: &GameStructure, atoms: &[&winmp::Atom], r: &winmp::WinningRegions) -> Option<String> {
    use winmp::{Measure, Player};
    if !r.is_partition() {
        return Some("regions do not partition V".into());
    }
    if atoms.iter().all(|a| a.measure != Measure::Sup) {
        if let Err(e) = g.check_closed(&r.w1, Player::P2) {
            return Some(format!("W1: {e}"));
        }
    }
    if atoms.iter().all(|a| matches!(a.measure, Measure::Sup | Measure::LimInf | Measure::LimSup)) {
        if let Err(e) = g.check_closed(&r.w2, Player::P1) {
            return Some(format!("W2: {e}"));
        }
    }
    None
}
