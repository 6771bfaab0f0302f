//! Game graphs: ownership, edges, weights, subgames and lassos.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::set::{self, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    P1,
    P2,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::P1 => Player::P2,
            Player::P2 => Player::P1,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::P1 => write!(f, "P1"),
            Player::P2 => write!(f, "P2"),
        }
    }
}

/// Unweighted game graph. Edges are identified by index; parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arena {
    owner: Vec<Player>,
    src: Vec<usize>,
    dst: Vec<usize>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl Arena {
    pub fn new(owner: Vec<Player>, edges: &[(usize, usize)]) -> Result<Arena> {
        let n = owner.len();
        if n == 0 {
            return Err(Error::EmptyGame);
        }
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::BadEndpoint { edge: e, vertex: x });
                }
            }
            out[u].push(e);
            inc[v].push(e);
        }
        if let Some(v) = out.iter().position(|o| o.is_empty()) {
            return Err(Error::DeadlockVertex(v));
        }
        Ok(Arena {
            owner,
            src: edges.iter().map(|e| e.0).collect(),
            dst: edges.iter().map(|e| e.1).collect(),
            out,
            inc,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.owner.len()
    }

    pub fn num_edges(&self) -> usize {
        self.src.len()
    }

    pub fn owner(&self, v: usize) -> Player {
        self.owner[v]
    }

    pub fn owners(&self) -> &[Player] {
        &self.owner
    }

    pub fn src(&self, e: usize) -> usize {
        self.src[e]
    }

    pub fn dst(&self, e: usize) -> usize {
        self.dst[e]
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.src.iter().copied().zip(self.dst.iter().copied()).collect()
    }

    /// Lowest-index edge from `u` to `v`, if any.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.out[u].iter().copied().find(|&e| self.dst[e] == v)
    }

    pub fn vertices_of(&self, p: Player) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_vertices()).filter(move |&v| self.owner[v] == p)
    }

    /// Checks that `s` is `p`-closed: `p` cannot leave it and the opponent can stay.
    pub fn check_closed(&self, s: &VertexSet, p: Player) -> Result<()> {
        for v in s.iter_ones() {
            let inside = self.out[v].iter().filter(|&&e| s[self.dst[e]]).count();
            if self.owner[v] == p && inside < self.out[v].len() {
                return Err(Error::NotClosed {
                    vertex: v,
                    reason: format!("{p} can leave"),
                });
            }
            if self.owner[v] != p && inside == 0 {
                return Err(Error::NotClosed {
                    vertex: v,
                    reason: format!("{} cannot stay", p.opponent()),
                });
            }
        }
        Ok(())
    }

    pub fn is_closed(&self, s: &VertexSet, p: Player) -> bool {
        self.check_closed(s, p).is_ok()
    }
}

/// Multi-weighted game structure: an arena plus an integer weight vector per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameStructure {
    arena: Arena,
    dim: usize,
    weights: Vec<i64>,
    max_weight: i64,
}

impl Deref for GameStructure {
    type Target = Arena;
    fn deref(&self) -> &Arena {
        &self.arena
    }
}

impl GameStructure {
    pub fn arena(&self) -> &Arena {
        &self.arena
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// W: the largest absolute weight over all edges and dimensions.
    pub fn max_weight(&self) -> i64 {
        self.max_weight
    }

    /// Weight of edge `e` in dimension `m` (0-based).
    pub fn weight(&self, e: usize, m: usize) -> i64 {
        self.weights[e * self.dim + m]
    }

    pub fn weights(&self, e: usize) -> &[i64] {
        &self.weights[e * self.dim..(e + 1) * self.dim]
    }

    /// 0-based projection on dimension `m`.
    pub fn project(&self, m: usize) -> Result<GameStructure> {
        if m >= self.dim {
            return Err(Error::BadDimension(m + 1));
        }
        let w = (0..self.num_edges()).map(|e| self.weight(e, m)).collect();
        Ok(GameStructure::from_parts(self.arena.clone(), 1, w))
    }

    /// Keeps the listed 0-based dimensions, in order; dimensions may repeat.
    pub fn select_dims(&self, dims: &[usize]) -> Result<GameStructure> {
        if let Some(&m) = dims.iter().find(|&&m| m >= self.dim) {
            return Err(Error::BadDimension(m + 1));
        }
        if dims.is_empty() {
            return Err(Error::BadDimension(0));
        }
        let mut w = Vec::with_capacity(self.num_edges() * dims.len());
        for e in 0..self.num_edges() {
            for &m in dims {
                w.push(self.weight(e, m));
            }
        }
        Ok(GameStructure::from_parts(self.arena.clone(), dims.len(), w))
    }

    /// Same arena with new flat edge-major weights.
    pub fn with_weights(&self, dim: usize, weights: Vec<i64>) -> GameStructure {
        assert_eq!(weights.len(), dim * self.num_edges());
        GameStructure::from_parts(self.arena.clone(), dim, weights)
    }

    pub(crate) fn from_parts(arena: Arena, dim: usize, weights: Vec<i64>) -> GameStructure {
        let max_weight = weights.iter().map(|w| w.abs()).max().unwrap_or(0);
        GameStructure { arena, dim, weights, max_weight }
    }
}

/// Validates and builds a game from owners and `(src, dst, weights)` triples.
pub fn build_game(owners: Vec<Player>, edges: Vec<(usize, usize, Vec<i64>)>) -> Result<GameStructure> {
    let dim = edges.first().map(|e| e.2.len()).unwrap_or(1);
    if dim == 0 {
        return Err(Error::DimensionMismatch { edge: 0, expected: 1, found: 0 });
    }
    let mut weights = Vec::with_capacity(edges.len() * dim);
    for (i, (_, _, w)) in edges.iter().enumerate() {
        if w.len() != dim {
            return Err(Error::DimensionMismatch { edge: i, expected: dim, found: w.len() });
        }
        weights.extend_from_slice(w);
    }
    let pairs: Vec<_> = edges.iter().map(|e| (e.0, e.1)).collect();
    let arena = Arena::new(owners, &pairs)?;
    Ok(GameStructure::from_parts(arena, dim, weights))
}

/// Projection on dimension `m`, 1-based as in the objective syntax.
pub fn project_dimension(g: &GameStructure, m: usize) -> Result<GameStructure> {
    if m == 0 {
        return Err(Error::BadDimension(0));
    }
    g.project(m - 1)
}

/// The subgame induced by a closed vertex set, materialized with its own dense indices.
#[derive(Clone, Debug)]
pub struct SubgameView {
    pub game: GameStructure,
    pub retained: VertexSet,
    pub closed_for: Player,
    to_base: Vec<usize>,
    from_base: Vec<Option<usize>>,
    edge_to_base: Vec<usize>,
}

impl SubgameView {
    pub fn to_base(&self, v: usize) -> usize {
        self.to_base[v]
    }

    pub fn from_base(&self, v: usize) -> Option<usize> {
        self.from_base[v]
    }

    pub fn edge_to_base(&self, e: usize) -> usize {
        self.edge_to_base[e]
    }

    /// Lifts a set of subgame vertices to the base game.
    pub fn lift_set(&self, s: &VertexSet) -> VertexSet {
        set::from_iter(self.from_base.len(), s.iter_ones().map(|v| self.to_base[v]))
    }

    /// Restricts a base set to the subgame.
    pub fn restrict_set(&self, s: &VertexSet) -> VertexSet {
        set::from_fn(self.to_base.len(), |v| s[self.to_base[v]])
    }
}

pub fn induced_subgame(g: &GameStructure, retained: &VertexSet, closed_for: Player) -> Result<SubgameView> {
    if retained.not_any() {
        return Err(Error::EmptyGame);
    }
    g.check_closed(retained, closed_for)?;
    let r = restrict(g, retained)?;
    let weights = r.edge_to_base.iter().flat_map(|&e| g.weights(e).iter().copied()).collect();
    Ok(SubgameView {
        game: GameStructure::from_parts(r.arena, g.dim(), weights),
        retained: retained.clone(),
        closed_for,
        to_base: r.to_base,
        from_base: r.from_base,
        edge_to_base: r.edge_to_base,
    })
}

/// Arena induced by `keep`, with edges leaving `keep` dropped.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub arena: Arena,
    pub to_base: Vec<usize>,
    pub from_base: Vec<Option<usize>>,
    pub edge_to_base: Vec<usize>,
}

impl Restriction {
    pub fn lift_set(&self, s: &VertexSet) -> VertexSet {
        set::from_iter(self.from_base.len(), s.iter_ones().map(|v| self.to_base[v]))
    }

    pub fn restrict_set(&self, s: &VertexSet) -> VertexSet {
        set::from_fn(self.to_base.len(), |v| s[self.to_base[v]])
    }
}

/// Fails with `DeadlockVertex` (in base numbering) if some kept vertex has no edge inside `keep`.
pub fn restrict(a: &Arena, keep: &VertexSet) -> Result<Restriction> {
    let to_base: Vec<usize> = keep.iter_ones().collect();
    if to_base.is_empty() {
        return Err(Error::EmptyGame);
    }
    let mut from_base = vec![None; a.num_vertices()];
    for (i, &v) in to_base.iter().enumerate() {
        from_base[v] = Some(i);
    }
    let mut pairs = Vec::new();
    let mut edge_to_base = Vec::new();
    for e in 0..a.num_edges() {
        if let (Some(x), Some(y)) = (from_base[a.src(e)], from_base[a.dst(e)]) {
            pairs.push((x, y));
            edge_to_base.push(e);
        }
    }
    let owners = to_base.iter().map(|&v| a.owner(v)).collect();
    let arena = Arena::new(owners, &pairs).map_err(|err| match err {
        Error::DeadlockVertex(v) => Error::DeadlockVertex(to_base[v]),
        other => other,
    })?;
    Ok(Restriction { arena, to_base, from_base, edge_to_base })
}

/// Ultimately periodic play: `stem` edges followed by `period` edges repeated forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lasso {
    pub start: usize,
    pub stem: Vec<usize>,
    pub period: Vec<usize>,
}

impl Lasso {
    /// Builds a lasso from vertex sequences, picking the lowest-index edge between consecutive vertices.
    pub fn from_vertices(a: &Arena, stem: &[usize], period: &[usize]) -> Option<Lasso> {
        if period.is_empty() {
            return None;
        }
        let seq: Vec<usize> = stem.iter().chain(period.iter()).copied().collect();
        let mut edges = Vec::with_capacity(seq.len());
        for i in 0..seq.len() {
            let next = if i + 1 < seq.len() { seq[i + 1] } else { period[0] };
            edges.push(a.find_edge(seq[i], next)?);
        }
        let period_edges = edges.split_off(stem.len());
        Some(Lasso { start: seq[0], stem: edges, period: period_edges })
    }

    pub fn is_valid(&self, a: &Arena) -> bool {
        if self.period.is_empty() {
            return false;
        }
        let mut cur = self.start;
        for &e in self.stem.iter().chain(self.period.iter()) {
            if e >= a.num_edges() || a.src(e) != cur {
                return false;
            }
            cur = a.dst(e);
        }
        cur == a.src(self.period[0])
    }

    pub fn stem_vertices(&self, a: &Arena) -> Vec<usize> {
        self.stem.iter().map(|&e| a.src(e)).collect()
    }

    pub fn period_vertices(&self, a: &Arena) -> Vec<usize> {
        self.period.iter().map(|&e| a.src(e)).collect()
    }

    pub fn len(&self) -> usize {
        self.stem.len() + self.period.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Edge at position `k` of the infinite play.
    pub fn edge_at(&self, k: usize) -> usize {
        if k < self.stem.len() {
            self.stem[k]
        } else {
            self.period[(k - self.stem.len()) % self.period.len()]
        }
    }

    /// Maps positions at or beyond the stem into one period.
    pub fn canonical_pos(&self, k: usize) -> usize {
        if k < self.stem.len() {
            k
        } else {
            self.stem.len() + (k - self.stem.len()) % self.period.len()
        }
    }

    /// Vertex at position `k`.
    pub fn vertex_at(&self, a: &Arena, k: usize) -> usize {
        a.src(self.edge_at(k))
    }
}
