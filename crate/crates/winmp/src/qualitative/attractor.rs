use std::collections::VecDeque;

use crate::game::{Arena, Player};
use crate::set::{self, VertexSet};

pub const NO_RANK: usize = usize::MAX;

#[derive(Clone, Debug)]
pub struct AttractorResult {
    pub set: VertexSet,
    /// Induction step at which a vertex joined; `NO_RANK` outside.
    pub rank: Vec<usize>,
    /// Rank-decreasing edge for attracted vertices of the attracting player.
    pub witness: Vec<Option<usize>>,
}

/// `p`-attractor of `target` in the whole arena.
pub fn attractor(a: &Arena, p: Player, target: &VertexSet) -> AttractorResult {
    attractor_in(a, p, target, &set::full(a.num_vertices()))
}

/// `p`-attractor of `target` inside the subarena `domain`; edges leaving `domain` are ignored.
pub fn attractor_in(a: &Arena, p: Player, target: &VertexSet, domain: &VertexSet) -> AttractorResult {
    let n = a.num_vertices();
    let mut in_set = set::empty(n);
    let mut rank = vec![NO_RANK; n];
    let mut witness = vec![None; n];
    let mut remaining: Vec<usize> = (0..n)
        .map(|v| a.out_edges(v).iter().filter(|&&e| domain[a.dst(e)]).count())
        .collect();
    let mut queue = VecDeque::new();
    for v in target.iter_ones() {
        if domain[v] {
            in_set.set(v, true);
            rank[v] = 0;
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &e in a.in_edges(u) {
            let v = a.src(e);
            if !domain[v] || in_set[v] {
                continue;
            }
            let joins = if a.owner(v) == p {
                witness[v] = Some(e);
                true
            } else {
                remaining[v] -= 1;
                remaining[v] == 0
            };
            if joins {
                in_set.set(v, true);
                rank[v] = rank[u] + 1;
                queue.push_back(v);
            }
        }
    }
    AttractorResult { set: in_set, rank, witness }
}

/// Edge from `v` staying inside `s`, lowest index first.
pub fn edge_into(a: &Arena, v: usize, s: &VertexSet) -> Option<usize> {
    a.out_edges(v).iter().copied().find(|&e| s[a.dst(e)])
}
