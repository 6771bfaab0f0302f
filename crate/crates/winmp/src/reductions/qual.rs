//! Qualitative conditions encoded as weights: 0 on edges leaving the set, -1 elsewhere.

use crate::game::{Arena, GameStructure};
use crate::objective::{Atom, Measure};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QualKind {
    Reach,
    Safe,
    Buchi,
    CoBuchi,
}

impl QualKind {
    pub fn measure(self) -> Measure {
        match self {
            QualKind::Reach => Measure::Sup,
            QualKind::Safe => Measure::Inf,
            QualKind::Buchi => Measure::LimSup,
            QualKind::CoBuchi => Measure::LimInf,
        }
    }
}

/// One dimension per `(kind, set)`; the returned atoms read those dimensions in order.
pub fn reduce_qual_to_weighted(a: &Arena, specs: &[(QualKind, VertexSet)]) -> (GameStructure, Vec<Atom>) {
    let dim = specs.len().max(1);
    let mut w = vec![0i64; a.num_edges() * dim];
    for e in 0..a.num_edges() {
        for (i, (_, u)) in specs.iter().enumerate() {
            w[e * dim + i] = if u[a.src(e)] { 0 } else { -1 };
        }
    }
    let atoms = specs.iter().enumerate().map(|(i, (k, _))| Atom::normalized(k.measure(), i, None)).collect();
    (GameStructure::from_parts(a.clone(), dim, w), atoms)
}

/// Appends one encoded dimension per `(kind, set)` entry to `g`; returns the new game and the atoms for the
/// appended dimensions.
pub fn augment(g: &GameStructure, specs: &[(QualKind, VertexSet)]) -> (GameStructure, Vec<Atom>) {
    let n = g.dim();
    let dim = n + specs.len();
    let mut w = Vec::with_capacity(g.num_edges() * dim);
    for e in 0..g.num_edges() {
        w.extend_from_slice(g.weights(e));
        for (_, u) in specs {
            w.push(if u[g.src(e)] { 0 } else { -1 });
        }
    }
    let atoms = specs.iter().enumerate().map(|(i, (k, _))| Atom::normalized(k.measure(), n + i, None)).collect();
    (g.with_weights(dim, w), atoms)
}
