//! Explicit products tracking every leaf of a DNF objective, solved as a Rabin game.

use crate::boolean::rabin::{solve_rabin_for, RabinCondition};
use crate::error::{Error, Result};
use crate::game::{GameStructure, Player};
use crate::objective::{Atom, Measure};
use crate::reductions::product::{Product, Step};
use crate::set::{self, VertexSet};
use crate::solution::{Solution, WinningRegions};

/// Window tracker state after a bad window.
pub const DEAD: i32 = i32::MIN;
/// Marks every component of a disjunct that can no longer be satisfied.
const DOOM: i32 = i32::MIN + 1;

/// One conjunct of a product objective. Weighted leaves read `>= 0` on their dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Leaf {
    Inf(usize),
    Sup(usize),
    LimInf(usize),
    LimSup(usize),
    Wmp { dim: usize, lambda: usize },
    Reach(VertexSet),
    Safe(VertexSet),
    Buchi(VertexSet),
    CoBuchi(VertexSet),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Acceptance {
    Buchi,
    CoBuchi,
}

impl Leaf {
    /// Leaf of a normalized atom.
    pub fn from_atom(a: &Atom) -> Leaf {
        debug_assert!(a.is_normalized());
        match a.measure {
            Measure::Inf => Leaf::Inf(a.dim),
            Measure::Sup => Leaf::Sup(a.dim),
            Measure::LimInf => Leaf::LimInf(a.dim),
            Measure::LimSup => Leaf::LimSup(a.dim),
            Measure::Wmp => Leaf::Wmp { dim: a.dim, lambda: a.lambda() },
        }
    }

    fn width(&self) -> usize {
        match self {
            Leaf::Wmp { .. } => 2,
            Leaf::Buchi(_) | Leaf::CoBuchi(_) => 0,
            _ => 1,
        }
    }

    fn init(&self, v: usize, out: &mut Vec<i32>) {
        match self {
            Leaf::Inf(_) | Leaf::LimInf(_) | Leaf::LimSup(_) => out.push(0),
            Leaf::Sup(_) => out.push(-1),
            Leaf::Wmp { .. } => out.extend([0, 0]),
            Leaf::Reach(u) => out.push(i32::from(u[v])),
            Leaf::Safe(u) => out.push(i32::from(!u[v])),
            Leaf::Buchi(_) | Leaf::CoBuchi(_) => {}
        }
    }

    fn step(&self, g: &GameStructure, q: &[i32], e: usize, out: &mut Vec<i32>) {
        let w = |m: usize| g.weight(e, m);
        let v2 = g.dst(e);
        match self {
            Leaf::Inf(m) => out.push(if q[0] == -1 || w(*m) < 0 { -1 } else { 0 }),
            Leaf::Sup(m) => out.push(if q[0] == 0 || w(*m) >= 0 { 0 } else { -1 }),
            Leaf::LimInf(m) | Leaf::LimSup(m) => out.push(if w(*m) < 0 { -1 } else { 0 }),
            Leaf::Wmp { dim, lambda } => out.extend(window_step(q[0], q[1], w(*dim), *lambda)),
            Leaf::Reach(u) => out.push(i32::from(q[0] == 1 || u[v2])),
            Leaf::Safe(u) => out.push(i32::from(q[0] == 1 || !u[v2])),
            Leaf::Buchi(_) | Leaf::CoBuchi(_) => {}
        }
    }

    fn acceptance(&self) -> Acceptance {
        match self {
            Leaf::Sup(_) | Leaf::LimSup(_) | Leaf::Reach(_) | Leaf::Buchi(_) => Acceptance::Buchi,
            _ => Acceptance::CoBuchi,
        }
    }

    /// Whether the state satisfies the leaf's set in the player-1 orientation.
    fn good(&self, q: &[i32], v: usize) -> bool {
        match self {
            Leaf::Inf(_) | Leaf::Sup(_) | Leaf::LimInf(_) | Leaf::LimSup(_) => q[0] == 0,
            Leaf::Wmp { .. } => q[0] != DEAD,
            Leaf::Reach(_) => q[0] == 1,
            Leaf::Safe(_) => q[0] == 0,
            Leaf::Buchi(u) | Leaf::CoBuchi(u) => u[v],
        }
    }

    /// The leaf can no longer hold (resp. can no longer fail, when `complemented`).
    fn settled(&self, q: &[i32], complemented: bool) -> bool {
        match (self, complemented) {
            (Leaf::Inf(_), false) => q[0] == -1,
            (Leaf::Wmp { .. }, false) => q[0] == DEAD,
            (Leaf::Safe(_), false) => q[0] == 1,
            (Leaf::Sup(_), true) => q[0] == 0,
            (Leaf::Reach(_), true) => q[0] == 1,
            _ => false,
        }
    }
}

/// Window tracker step: `(s, l)` is the running sum and length of the open window.
pub fn window_step(s: i32, l: i32, w: i64, lambda: usize) -> [i32; 2] {
    if s == DEAD {
        return [DEAD, 0];
    }
    let t = s as i64 + w;
    if t >= 0 {
        [0, 0]
    } else if (l as usize) + 1 < lambda {
        [t as i32, l + 1]
    } else {
        [DEAD, 0]
    }
}

struct Layout {
    /// Start of each leaf's components, per disjunct.
    offsets: Vec<Vec<usize>>,
    /// (start, end) of each disjunct's slice; the counter, if any, is the last component.
    spans: Vec<(usize, usize)>,
    /// Büchi leaves per disjunct, in counter order.
    buchi: Vec<Vec<usize>>,
    counter: Vec<Option<usize>>,
    width: usize,
}

impl Layout {
    fn new(disjuncts: &[Vec<Leaf>], complemented: bool) -> Layout {
        let mut offsets = Vec::new();
        let mut spans = Vec::new();
        let mut buchi = Vec::new();
        let mut counter = Vec::new();
        let mut pos = 0;
        for d in disjuncts {
            let start = pos;
            let mut offs = Vec::new();
            for leaf in d {
                offs.push(pos);
                pos += leaf.width();
            }
            let b: Vec<usize> = (0..d.len()).filter(|&i| accepts_buchi(&d[i], complemented)).collect();
            if b.len() >= 2 {
                counter.push(Some(pos));
                pos += 1;
            } else {
                counter.push(None);
            }
            spans.push((start, pos));
            offsets.push(offs);
            buchi.push(b);
        }
        Layout { offsets, spans, buchi, counter, width: pos }
    }
}

fn accepts_buchi(leaf: &Leaf, complemented: bool) -> bool {
    (leaf.acceptance() == Acceptance::Buchi) != complemented
}

/// Leaf goodness in the orientation of the Rabin player.
fn leaf_good(leaf: &Leaf, q: &[i32], v: usize, complemented: bool) -> bool {
    leaf.good(q, v) != complemented
}

/// Product of a game with trackers for every leaf of `⋁_k ⋀ disjuncts[k]`.
///
/// When `complemented` is set the leaves are read negated and the disjunction belongs to
/// player 2, which is how a CNF objective is solved from player 2's side.
pub struct Expansion {
    pub product: Product,
    pub disjuncts: Vec<Vec<Leaf>>,
    pub complemented: bool,
    pub condition: RabinCondition,
}

impl Expansion {
    pub fn build(g: &GameStructure, disjuncts: &[Vec<Leaf>], complemented: bool, budget: usize) -> Result<Expansion> {
        if disjuncts.is_empty() || disjuncts.iter().any(|d| d.is_empty()) {
            return Err(Error::FragmentMismatch("empty conjunction or disjunction".into()));
        }
        let lay = Layout::new(disjuncts, complemented);
        let finish = |q: &mut Vec<i32>, v: usize, prev: Option<&[i32]>| -> bool {
            let mut all_doomed = true;
            for (k, d) in disjuncts.iter().enumerate() {
                let (lo, hi) = lay.spans[k];
                if q[lo..hi].first() == Some(&DOOM) {
                    continue;
                }
                let doomed = d
                    .iter()
                    .enumerate()
                    .any(|(i, leaf)| leaf.settled(&q[lay.offsets[k][i]..], complemented));
                if doomed {
                    q[lo..hi].iter_mut().for_each(|x| *x = DOOM);
                    continue;
                }
                all_doomed = false;
                if let Some(c) = lay.counter[k] {
                    let top = lay.buchi[k].len() as i32;
                    q[c] = match prev {
                        None => 0,
                        Some(p) => {
                            let cur = p[c];
                            if cur == top {
                                0
                            } else {
                                let leaf = lay.buchi[k][cur as usize];
                                let off = lay.offsets[k][leaf];
                                if leaf_good(&d[leaf], &q[off..], v, complemented) {
                                    cur + 1
                                } else {
                                    cur
                                }
                            }
                        }
                    };
                }
            }
            all_doomed
        };
        let init = |v: usize| {
            let mut q = Vec::with_capacity(lay.width);
            for (k, d) in disjuncts.iter().enumerate() {
                for leaf in d {
                    leaf.init(v, &mut q);
                }
                if lay.counter[k].is_some() {
                    q.push(0);
                }
            }
            if finish(&mut q, v, None) {
                Step::Sink(0)
            } else {
                Step::To(q)
            }
        };
        let step = |p: &[i32], e: usize| {
            let mut q = Vec::with_capacity(lay.width);
            for (k, d) in disjuncts.iter().enumerate() {
                let (lo, hi) = lay.spans[k];
                if p[lo..hi].first() == Some(&DOOM) {
                    q.extend_from_slice(&p[lo..hi]);
                    continue;
                }
                for (i, leaf) in d.iter().enumerate() {
                    leaf.step(g, &p[lay.offsets[k][i]..], e, &mut q);
                }
                if lay.counter[k].is_some() {
                    q.push(0);
                }
            }
            if finish(&mut q, g.dst(e), Some(p)) {
                Step::Sink(0)
            } else {
                Step::To(q)
            }
        };
        let product = Product::build(g, 1, init, step, budget)?;
        let mut pairs = Vec::with_capacity(disjuncts.len());
        for (k, d) in disjuncts.iter().enumerate() {
            let (lo, _) = lay.spans[k];
            let live = |q: &[i32]| q.get(lo) != Some(&DOOM) || lay.spans[k].0 == lay.spans[k].1;
            let stay = product.set_where(
                |v, q| {
                    live(q)
                        && d.iter().enumerate().all(|(i, leaf)| {
                            accepts_buchi(leaf, complemented)
                                || leaf_good(leaf, &q[lay.offsets[k][i]..], v, complemented)
                        })
                },
                &[false],
            );
            let visit = product.set_where(
                |v, q| {
                    live(q)
                        && match (lay.counter[k], lay.buchi[k].as_slice()) {
                            (Some(c), b) => q[c] == b.len() as i32,
                            (None, [i]) => leaf_good(&d[*i], &q[lay.offsets[k][*i]..], v, complemented),
                            (None, _) => true,
                        }
                },
                &[false],
            );
            pairs.push((set::complement(&stay), visit));
        }
        Ok(Expansion { product, disjuncts: disjuncts.to_vec(), complemented, condition: RabinCondition { pairs } })
    }

    pub fn num_vertices(&self) -> usize {
        self.product.num_vertices()
    }

    /// Player owning the disjunction of Rabin pairs.
    pub fn rabin_player(&self) -> Player {
        if self.complemented {
            Player::P2
        } else {
            Player::P1
        }
    }

    /// Solves the product and transfers regions and strategies to `g`.
    pub fn solve(&self, g: &GameStructure, budget: usize) -> Result<Solution> {
        let sol = solve_rabin_for(&self.product.arena, self.rabin_player(), &self.condition, budget)?;
        Ok(Solution {
            regions: WinningRegions::from_w1(self.product.project_init(&sol.regions.w1)),
            s1: self.product.lift_moore(g, &sol.s1),
            s2: self.product.lift_moore(g, &sol.s2),
        })
    }
}

/// Solves `⋁_k ⋀ disjuncts[k]` for player 1 on `g`.
pub fn solve_leaves(g: &GameStructure, disjuncts: &[Vec<Leaf>], budget: usize) -> Result<(Solution, usize)> {
    let x = Expansion::build(g, disjuncts, false, budget)?;
    Ok((x.solve(g, budget)?, x.num_vertices()))
}

/// Solves `⋀_k ⋁ clauses[k]` for player 1 by letting player 2 play the negated DNF.
pub fn solve_leaves_cnf(g: &GameStructure, clauses: &[Vec<Leaf>], budget: usize) -> Result<(Solution, usize)> {
    let x = Expansion::build(g, clauses, true, budget)?;
    Ok((x.solve(g, budget)?, x.num_vertices()))
}

/// Leaves of a normalized conjunction of atoms.
pub fn leaves_of(atoms: &[Atom]) -> Vec<Leaf> {
    atoms.iter().map(Leaf::from_atom).collect()
}

/// Leaf product for a normalized intersection, together with the player-1
/// Büchi and co-Büchi sets of every leaf (leaf order).
pub fn reduce_expand(g: &GameStructure, atoms: &[Atom], budget: usize) -> Result<(Product, Vec<VertexSet>, Vec<VertexSet>)> {
    expand_sets(g, atoms, false, budget)
}

/// Same product with every leaf complemented: Büchi and co-Büchi sets swap roles.
pub fn reduce_complement_expand(g: &GameStructure, atoms: &[Atom], budget: usize) -> Result<(Product, Vec<VertexSet>, Vec<VertexSet>)> {
    expand_sets(g, atoms, true, budget)
}

fn expand_sets(g: &GameStructure, atoms: &[Atom], complemented: bool, budget: usize) -> Result<(Product, Vec<VertexSet>, Vec<VertexSet>)> {
    let leaves = leaves_of(atoms);
    let lay = Layout::new(std::slice::from_ref(&leaves), complemented);
    // In the direct product a failed window is fatal for the whole intersection, so all window
    // leaves share one absorbing β. The complemented product keeps the failure per leaf.
    let beta = !complemented && leaves.iter().any(|l| matches!(l, Leaf::Wmp { .. }));
    let product = Product::build(
        g,
        usize::from(beta),
        |v| {
            let mut q = Vec::new();
            leaves.iter().for_each(|l| l.init(v, &mut q));
            Step::To(q)
        },
        |p, e| {
            let mut q = Vec::new();
            let mut off = 0;
            for l in &leaves {
                l.step(g, &p[off..], e, &mut q);
                if beta && matches!(l, Leaf::Wmp { .. }) && q[q.len() - 2] == DEAD {
                    return Step::Sink(0);
                }
                off += l.width();
            }
            Step::To(q)
        },
        budget,
    )?;
    let mut buchi = Vec::new();
    let mut cobuchi = Vec::new();
    for (i, leaf) in leaves.iter().enumerate() {
        let off = lay.offsets[0][i];
        let s = product.set_where(|v, q| leaf_good(leaf, &q[off..], v, complemented), &[false]);
        if accepts_buchi(leaf, complemented) {
            buchi.push(s);
        } else {
            cobuchi.push(s);
        }
    }
    Ok((product, buchi, cobuchi))
}
