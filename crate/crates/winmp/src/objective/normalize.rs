use super::{Atom, Expr, Rel};
use crate::game::GameStructure;

/// Rewrite applied to one leaf: new weight = sign * (scale * w[source_dim] - shift).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafRewrite {
    pub source_dim: usize,
    pub scale: i64,
    pub shift: i64,
    pub negated: bool,
    pub measure_swap: bool,
}

impl LeafRewrite {
    pub fn is_identity(&self) -> bool {
        self.scale == 1 && self.shift == 0 && !self.negated && !self.measure_swap
    }

    pub fn apply(&self, w: i64) -> i64 {
        let v = self.scale * w - self.shift;
        if self.negated {
            -v
        } else {
            v
        }
    }
}

/// One rewrite per leaf, in leaf order; leaf `i` of the normalized expression reads dimension `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationCertificate {
    pub leaves: Vec<LeafRewrite>,
}

impl NormalizationCertificate {
    pub fn is_identity(&self) -> bool {
        self.leaves.iter().all(LeafRewrite::is_identity)
    }
}

// Strict relations on a window of size λ: with integer w' = b·w - a, a sum of l ≤ λ terms is
// positive iff the sum of λ·w' - 1 is nonnegative. Non-window atoms are the case λ = 1.
fn rewrite_of(a: &Atom) -> LeafRewrite {
    let k = a.window.unwrap_or(1) as i64;
    let (scale, shift, negated) = match a.rel {
        Rel::Ge => (a.den, a.num, false),
        Rel::Gt => (k * a.den, k * a.num + 1, false),
        Rel::Le => (a.den, a.num, true),
        Rel::Lt => (k * a.den, k * a.num - 1, true),
    };
    LeafRewrite { source_dim: a.dim, scale, shift, negated, measure_swap: negated }
}

/// Rewrites every leaf to `measure(>= 0)` over its own weight dimension.
///
/// The returned game has one dimension per leaf, so a dimension shared by several leaves is
/// duplicated. If the leaves already use distinct dimensions in leaf order and are all `>= 0`,
/// game and expression come back unchanged.
pub fn normalize(expr: &Expr, g: &GameStructure) -> (Expr, GameStructure, NormalizationCertificate) {
    let leaves: Vec<LeafRewrite> = expr.atoms().into_iter().map(rewrite_of).collect();
    let identity_dims = leaves.len() == g.dim() && leaves.iter().enumerate().all(|(i, r)| r.source_dim == i);
    let cert = NormalizationCertificate { leaves };
    if identity_dims && cert.is_identity() {
        return (expr.clone(), g.clone(), cert);
    }
    let k = cert.leaves.len();
    let mut w = Vec::with_capacity(g.num_edges() * k);
    for e in 0..g.num_edges() {
        for r in &cert.leaves {
            w.push(r.apply(g.weight(e, r.source_dim)));
        }
    }
    let ng = g.with_weights(k, w);
    let mut i = 0;
    let ne = expr.map_atoms(&mut |a| {
        let r = &cert.leaves[i];
        let measure = if r.measure_swap { a.measure.dual() } else { a.measure };
        let out = Atom { measure, dim: i, rel: Rel::Ge, num: 0, den: 1, window: a.window };
        i += 1;
        out
    });
    (ne, ng, cert)
}
