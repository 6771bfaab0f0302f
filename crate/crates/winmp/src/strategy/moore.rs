use crate::game::{Arena, Player};

/// Finite-memory strategy as an explicit Moore machine.
///
/// The update reads the traversed edge, so parallel edges with different weights stay
/// distinguishable. `next` is only meaningful on vertices of `owner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MooreStrategy {
    pub owner: Player,
    pub memory: usize,
    pub initial: usize,
    num_vertices: usize,
    num_edges: usize,
    update: Vec<u32>,
    next: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl MooreStrategy {
    /// Machine with `memory` states; every owned vertex plays its lowest edge and memory stays put.
    pub fn trivial(a: &Arena, owner: Player, memory: usize) -> MooreStrategy {
        let nv = a.num_vertices();
        let ne = a.num_edges();
        let mut next = vec![NONE; memory * nv];
        let mut update = vec![0; memory * ne];
        for m in 0..memory {
            for v in a.vertices_of(owner) {
                next[m * nv + v] = a.out_edges(v)[0] as u32;
            }
            for e in 0..ne {
                update[m * ne + e] = m as u32;
            }
        }
        MooreStrategy { owner, memory, initial: 0, num_vertices: nv, num_edges: ne, update, next }
    }

    pub(crate) fn from_tables(
        a: &Arena,
        owner: Player,
        memory: usize,
        initial: usize,
        update: Vec<u32>,
        next: Vec<u32>,
    ) -> MooreStrategy {
        debug_assert_eq!(update.len(), memory * a.num_edges());
        debug_assert_eq!(next.len(), memory * a.num_vertices());
        MooreStrategy { owner, memory, initial, num_vertices: a.num_vertices(), num_edges: a.num_edges(), update, next }
    }

    /// Memoryless strategy from a per-vertex edge choice; missing choices fall back to the lowest edge.
    pub fn memoryless(a: &Arena, owner: Player, choice: &[Option<usize>]) -> MooreStrategy {
        let mut s = MooreStrategy::trivial(a, owner, 1);
        for v in a.vertices_of(owner) {
            if let Some(e) = choice[v] {
                debug_assert_eq!(a.src(e), v);
                s.set_next(0, v, e);
            }
        }
        s
    }

    pub fn is_memoryless(&self) -> bool {
        self.memory == 1
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn next(&self, m: usize, v: usize) -> usize {
        let e = self.next[m * self.num_vertices + v];
        debug_assert!(e != NONE, "vertex {v} is not owned by {}", self.owner);
        e as usize
    }

    pub fn update(&self, m: usize, e: usize) -> usize {
        self.update[m * self.num_edges + e] as usize
    }

    pub fn set_next(&mut self, m: usize, v: usize, e: usize) {
        self.next[m * self.num_vertices + v] = e as u32;
    }

    pub fn set_update(&mut self, m: usize, e: usize, m2: usize) {
        self.update[m * self.num_edges + e] = m2 as u32;
    }

    /// Checks that every owned vertex maps to one of its own edges in every memory state.
    pub fn is_well_formed(&self, a: &Arena) -> bool {
        if a.num_vertices() != self.num_vertices || a.num_edges() != self.num_edges || self.initial >= self.memory {
            return false;
        }
        for m in 0..self.memory {
            for v in a.vertices_of(self.owner) {
                let e = self.next[m * self.num_vertices + v];
                if e == NONE || e as usize >= a.num_edges() || a.src(e as usize) != v {
                    return false;
                }
            }
            for e in 0..self.num_edges {
                if self.update(m, e) >= self.memory {
                    return false;
                }
            }
        }
        true
    }

    /// The choice table of a memoryless machine.
    pub fn positional(&self) -> Option<Vec<Option<usize>>> {
        if !self.is_memoryless() {
            return None;
        }
        Some(
            (0..self.num_vertices)
                .map(|v| {
                    let e = self.next[v];
                    (e != NONE).then_some(e as usize)
                })
                .collect(),
        )
    }
}
