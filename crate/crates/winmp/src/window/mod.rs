//! Window mean-payoff machinery: window predicates, window-closing attractors, and the solvers
//! for one window objective combined with a qualitative condition.
//!
//! Every solver here reads dimension 0 of the game with threshold `>= 0`.

mod families;
mod fragment;
mod gd;
mod icw;

pub use families::{
    obj_f, obj_f_trace, solve_wmp_single, wmp_buchi, wmp_buchi_region, wmp_cobuchi, wmp_cobuchi_trace,
    wmp_gen_buchi, wmp_gen_buchi_region, wmp_gen_reach, wmp_gen_reach_region, wmp_reach, wmp_reach_region,
    wmp_safe, wmp_safe_region, wmp_single_region, CoBuchiTrace,
};
pub use fragment::{fragment_kind, one_wmp_region, solve_one_wmp_fragment, FragmentKind, DEFAULT_SUP_BOUND};
pub use gd::{gd_end, gd_end_region, gd_end_trace};
pub use icw::{end_lambda, icw_end, icw_region, icw_table, WindowValueTable};

use crate::error::{Error, Result};
use crate::game::{GameStructure, Lasso};

/// The value −∞ of window tables.
pub const NEG_INF: i64 = i64::MIN;

/// `a + b` if it is nonnegative, −∞ otherwise.
pub fn oplus(a: i64, b: i64) -> i64 {
    if a == NEG_INF || b == NEG_INF {
        return NEG_INF;
    }
    let s = a + b;
    if s >= 0 {
        s
    } else {
        NEG_INF
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowClass {
    /// Smallest `l` with a nonnegative total payoff over the first `l` weights.
    GoodClosedAt(usize),
    Bad,
}

/// Classifies the window opening at the start of `weights`.
pub fn window_classify(weights: &[i64], lambda: usize) -> Result<WindowClass> {
    let mut tp = 0i64;
    for (i, &w) in weights.iter().take(lambda).enumerate() {
        tp += w;
        if tp >= 0 {
            return Ok(WindowClass::GoodClosedAt(i + 1));
        }
    }
    if weights.len() < lambda {
        return Err(Error::TooShort);
    }
    Ok(WindowClass::Bad)
}

/// Positions of the maximal good decomposition of a lasso, listed until a position repeats
/// modulo the period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodDecomposition {
    pub positions: Vec<usize>,
    /// Index in `positions` from which the listed suffix repeats with the period.
    pub cycle_from: usize,
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Good(GoodDecomposition),
    /// First position whose window is bad.
    Fail(usize),
}

/// Decides whether the lasso satisfies the window objective on dimension 0, returning the
/// greedy first-closing decomposition when it does.
pub fn good_decomposition(g: &GameStructure, lasso: &Lasso, lambda: usize) -> Decomposition {
    let len = lasso.len();
    let close = |k: usize| -> Option<usize> {
        let mut tp = 0i64;
        (1..=lambda).find(|&l| {
            tp += g.weight(lasso.edge_at(k + l - 1), 0);
            tp >= 0
        })
    };
    if let Some(k) = (0..len).find(|&k| close(k).is_none()) {
        return Decomposition::Fail(k);
    }
    let mut seen = vec![usize::MAX; len];
    let mut positions = Vec::new();
    let mut k = 0;
    loop {
        let c = lasso.canonical_pos(k);
        if seen[c] != usize::MAX {
            return Decomposition::Good(GoodDecomposition { positions, cycle_from: seen[c], maximal: true });
        }
        seen[c] = positions.len();
        positions.push(k);
        k += close(k).expect("checked above");
    }
}
