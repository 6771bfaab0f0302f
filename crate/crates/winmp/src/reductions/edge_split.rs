//! Splitting every edge through a fresh player-1 vertex, so that classical measures become
//! conditions on vertices.

use crate::error::Result;
use crate::game::{Arena, GameStructure, Player};
use crate::objective::{Atom, Measure};
use crate::set::{self, VertexSet};
use crate::strategy::MooreStrategy;

/// Edge `e = (u, v)` of the base game becomes `u -> x_e` (edge `2e`) and `x_e -> v`
/// (edge `2e+1`), where `x_e = |V| + e`.
#[derive(Clone, Debug)]
pub struct EdgeSplit {
    pub game: GameStructure,
    /// Atoms over the split game; windows are doubled.
    pub atoms: Vec<Atom>,
    /// Per atom, the set of vertices decorated 0, or `None` for window atoms.
    pub sets: Vec<Option<VertexSet>>,
    pub base_vertices: usize,
}

/// Splits `g` for normalized `atoms`. Window dimensions carry `-1` then `1 + w(e)`; every other
/// atom's dimension is rewritten so that each edge carries the decoration of its source.
pub fn reduce_edge_split(g: &GameStructure, atoms: &[Atom]) -> Result<EdgeSplit> {
    let nv = g.num_vertices();
    let ne = g.num_edges();
    let n2 = nv + ne;
    let mut owners = g.owners().to_vec();
    owners.extend(std::iter::repeat(Player::P1).take(ne));
    let mut pairs = Vec::with_capacity(2 * ne);
    for e in 0..ne {
        pairs.push((g.src(e), nv + e));
        pairs.push((nv + e, g.dst(e)));
    }
    let arena = Arena::new(owners, &pairs)?;
    let mut sets = Vec::with_capacity(atoms.len());
    let mut out_atoms = Vec::with_capacity(atoms.len());
    for (i, a) in atoms.iter().enumerate() {
        debug_assert!(a.is_normalized());
        if a.measure == Measure::Wmp {
            sets.push(None);
            out_atoms.push(Atom::wmp(i, 2 * a.lambda()));
            continue;
        }
        let base_good = matches!(a.measure, Measure::Inf | Measure::LimInf);
        sets.push(Some(set::from_fn(n2, |x| if x < nv { base_good } else { g.weight(x - nv, a.dim) >= 0 })));
        out_atoms.push(Atom::normalized(a.measure, i, None));
    }
    let dim = atoms.len();
    let mut weights = vec![0i64; 2 * ne * dim];
    for e2 in 0..2 * ne {
        let e = e2 / 2;
        for (i, a) in atoms.iter().enumerate() {
            weights[e2 * dim + i] = match &sets[i] {
                None if e2 % 2 == 0 => -1,
                None => 1 + g.weight(e, a.dim),
                Some(s) => {
                    if s[arena.src(e2)] {
                        0
                    } else {
                        -1
                    }
                }
            };
        }
    }
    Ok(EdgeSplit { game: GameStructure::from_parts(arena, dim, weights), atoms: out_atoms, sets, base_vertices: nv })
}

impl EdgeSplit {
    /// Base vertices of a set over the split game.
    pub fn restrict_set(&self, s: &VertexSet) -> VertexSet {
        set::from_fn(self.base_vertices, |v| s[v])
    }

    /// Transfers a strategy on the split game to the base game: each base edge feeds both
    /// halves to the update, and the intermediate vertex needs no decision.
    pub fn lift(&self, base: &Arena, s: &MooreStrategy) -> MooreStrategy {
        let mut out = MooreStrategy::trivial(base, s.owner, s.memory);
        out.initial = s.initial;
        for m in 0..s.memory {
            for e in 0..base.num_edges() {
                out.set_update(m, e, s.update(s.update(m, 2 * e), 2 * e + 1));
            }
            for v in base.vertices_of(s.owner) {
                out.set_next(m, v, s.next(m, v) / 2);
            }
        }
        out
    }
}
