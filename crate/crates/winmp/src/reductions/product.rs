//! Products of a game with a deterministic automaton reading edges, and strategy lifting.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::game::{Arena, Player};
use crate::set::{self, VertexSet};
use crate::strategy::MooreStrategy;

/// Default cap on product vertices.
pub const DEFAULT_NODE_BUDGET: usize = 1 << 22;

pub const NO_BASE: usize = usize::MAX;
const NO_STATE: u32 = u32::MAX;

/// Automaton successor: a regular state or one of the absorbing sinks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    To(Vec<i32>),
    Sink(usize),
}

/// Reachable part of `base × automaton`, plus absorbing sinks with a single self-loop.
#[derive(Clone, Debug)]
pub struct Product {
    pub arena: Arena,
    /// Base vertex per product vertex; `NO_BASE` on sinks.
    pub base_vertex: Vec<usize>,
    state_of: Vec<u32>,
    pub states: Vec<Vec<i32>>,
    /// Base edge per product edge; `NO_BASE` on sink loops.
    pub edge_base: Vec<usize>,
    /// Product vertex where a play from each base vertex starts.
    pub init: Vec<usize>,
    /// Sinks occupy product ids `0..sinks.len()`.
    pub sinks: Vec<usize>,
    state_ids: HashMap<Vec<i32>, u32>,
    index: HashMap<(u32, u32), u32>,
    out_pos: Vec<usize>,
}

struct Builder {
    state_ids: HashMap<Vec<i32>, u32>,
    states: Vec<Vec<i32>>,
    index: HashMap<(u32, u32), u32>,
    base_vertex: Vec<usize>,
    state_of: Vec<u32>,
    owners: Vec<Player>,
    queue: VecDeque<usize>,
    budget: usize,
}

impl Builder {
    fn intern(&mut self, base: &Arena, v: usize, s: Step) -> Result<usize> {
        let q = match s {
            Step::Sink(k) => return Ok(k),
            Step::To(q) => q,
        };
        let qid = match self.state_ids.get(&q) {
            Some(&id) => id,
            None => {
                let id = self.states.len() as u32;
                self.state_ids.insert(q.clone(), id);
                self.states.push(q);
                id
            }
        };
        if let Some(&p) = self.index.get(&(v as u32, qid)) {
            return Ok(p as usize);
        }
        let p = self.base_vertex.len();
        if p >= self.budget {
            return Err(Error::ProductTooLarge { budget: self.budget });
        }
        self.index.insert((v as u32, qid), p as u32);
        self.base_vertex.push(v);
        self.state_of.push(qid);
        self.owners.push(base.owner(v));
        self.queue.push_back(p);
        Ok(p)
    }
}

impl Product {
    pub fn build(
        base: &Arena,
        num_sinks: usize,
        init: impl Fn(usize) -> Step,
        step: impl Fn(&[i32], usize) -> Step,
        budget: usize,
    ) -> Result<Product> {
        let mut b = Builder {
            state_ids: HashMap::new(),
            states: Vec::new(),
            index: HashMap::new(),
            base_vertex: vec![NO_BASE; num_sinks],
            state_of: vec![NO_STATE; num_sinks],
            owners: vec![Player::P1; num_sinks],
            queue: VecDeque::new(),
            budget,
        };
        let init_of = (0..base.num_vertices())
            .map(|v| b.intern(base, v, init(v)))
            .collect::<Result<Vec<_>>>()?;
        // Edges are emitted per source in base order, so the i-th product out-edge of (v, q)
        // corresponds to the i-th base out-edge of v.
        let mut out_lists: Vec<Vec<(usize, usize)>> = Vec::new();
        while let Some(p) = b.queue.pop_front() {
            let v = b.base_vertex[p];
            let q = b.states[b.state_of[p] as usize].clone();
            let mut list = Vec::with_capacity(base.out_edges(v).len());
            for &e in base.out_edges(v) {
                list.push((b.intern(base, base.dst(e), step(&q, e))?, e));
            }
            if out_lists.len() <= p {
                out_lists.resize(p + 1, Vec::new());
            }
            out_lists[p] = list;
        }
        out_lists.resize(b.base_vertex.len(), Vec::new());
        let mut pairs = Vec::new();
        let mut edge_base = Vec::new();
        for (p, list) in out_lists.iter().enumerate() {
            if b.base_vertex[p] == NO_BASE {
                pairs.push((p, p));
                edge_base.push(NO_BASE);
            }
            for &(t, e) in list {
                pairs.push((p, t));
                edge_base.push(e);
            }
        }
        let arena = Arena::new(b.owners, &pairs)?;
        let mut out_pos = vec![0; base.num_edges()];
        for v in 0..base.num_vertices() {
            for (i, &e) in base.out_edges(v).iter().enumerate() {
                out_pos[e] = i;
            }
        }
        Ok(Product {
            arena,
            base_vertex: b.base_vertex,
            state_of: b.state_of,
            states: b.states,
            state_ids: b.state_ids,
            edge_base,
            init: init_of,
            sinks: (0..num_sinks).collect(),
            index: b.index,
            out_pos,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.arena.num_vertices()
    }

    pub fn is_sink(&self, p: usize) -> bool {
        self.base_vertex[p] == NO_BASE
    }

    /// Automaton state of a non-sink vertex.
    pub fn state(&self, p: usize) -> &[i32] {
        &self.states[self.state_of[p] as usize]
    }

    pub fn vertex(&self, v: usize, q: &[i32]) -> Option<usize> {
        let qid = *self.state_ids.get(q)?;
        self.index.get(&(v as u32, qid)).map(|&p| p as usize)
    }

    /// Product vertices satisfying `f` on non-sinks, and `sink_in[k]` on sink `k`.
    pub fn set_where(&self, f: impl Fn(usize, &[i32]) -> bool, sink_in: &[bool]) -> VertexSet {
        let mut s = set::empty(self.num_vertices());
        for p in 0..self.num_vertices() {
            let inside = if self.is_sink(p) {
                sink_in.get(p).copied().unwrap_or(false)
            } else {
                f(self.base_vertex[p], self.state(p))
            };
            s.set(p, inside);
        }
        s
    }

    /// Base vertices whose starting product vertex lies in `s`.
    pub fn project_init(&self, s: &VertexSet) -> VertexSet {
        set::from_fn(self.init.len(), |v| s[self.init[v]])
    }

    fn locate(&self, x: i64, v: usize) -> Option<usize> {
        if x < 0 {
            Some((-x - 1) as usize)
        } else {
            self.index.get(&(v as u32, x as u32)).map(|&p| p as usize)
        }
    }

    fn key(&self, p: usize) -> i64 {
        if self.is_sink(p) {
            -(p as i64) - 1
        } else {
            self.state_of[p] as i64
        }
    }

    fn product_edge(&self, p: usize, e: usize) -> usize {
        if self.is_sink(p) {
            self.arena.out_edges(p)[0]
        } else {
            self.arena.out_edges(p)[self.out_pos[e]]
        }
    }

    /// Turns a strategy on the product arena into a strategy on the base game whose memory
    /// pairs the automaton state with the product strategy's own memory.
    pub fn lift_moore(&self, base: &Arena, strat: &MooreStrategy) -> MooreStrategy {
        let owner = strat.owner;
        let ne = base.num_edges();
        let nv = base.num_vertices();
        // Memory 0 is the start. When every play starts in the same automaton state it is that
        // state; otherwise it is a marker resolved from the first vertex.
        let first = self.key(self.init[0]);
        let start = if self.init.iter().all(|&p| self.key(p) == first) { first } else { i64::MIN };
        let mut keys: Vec<(i64, usize)> = vec![(start, strat.initial)];
        let mut ids: HashMap<(i64, usize), usize> = HashMap::new();
        ids.insert(keys[0], 0);
        let mut update: Vec<u32> = Vec::new();
        let mut next: Vec<u32> = Vec::new();
        let mut i = 0;
        while i < keys.len() {
            let (x, m) = keys[i];
            let locate = |v: usize| if x == i64::MIN { Some(self.init[v]) } else { self.locate(x, v) };
            for e in 0..ne {
                let target = match locate(base.src(e)) {
                    None => i,
                    Some(p) => {
                        let pe = self.product_edge(p, e);
                        let k = (self.key(self.arena.dst(pe)), strat.update(m, pe));
                        *ids.entry(k).or_insert_with(|| {
                            keys.push(k);
                            keys.len() - 1
                        })
                    }
                };
                update.push(target as u32);
            }
            for v in 0..nv {
                if base.owner(v) != owner {
                    next.push(u32::MAX);
                    continue;
                }
                let e = match locate(v) {
                    Some(p) if !self.is_sink(p) => self.edge_base[strat.next(m, p)],
                    _ => base.out_edges(v)[0],
                };
                next.push(e as u32);
            }
            i += 1;
        }
        MooreStrategy::from_tables(base, owner, keys.len(), 0, update, next)
    }

    pub fn lift_positional(&self, base: &Arena, owner: Player, choice: &[Option<usize>]) -> MooreStrategy {
        self.lift_moore(base, &MooreStrategy::memoryless(&self.arena, owner, choice))
    }
}

impl Product {
    /// The product arena weighted like the base edges; sink loops weigh 0.
    pub fn weighted(&self, g: &crate::game::GameStructure) -> crate::game::GameStructure {
        let dim = g.dim();
        let mut w = Vec::with_capacity(self.arena.num_edges() * dim);
        for &e in &self.edge_base {
            if e == NO_BASE {
                w.extend(std::iter::repeat(0).take(dim));
            } else {
                w.extend_from_slice(g.weights(e));
            }
        }
        crate::game::GameStructure::from_parts(self.arena.clone(), dim, w)
    }
}
