//! Max-parity games solved with Zielonka's recursive algorithm.

use crate::game::{Arena, Player};
use crate::qualitative::attractor::{attractor_in, edge_into};
use crate::set::{self, VertexSet};
use crate::solution::Positional;

/// Player 1 wins a play iff the largest priority seen infinitely often is even.
pub(crate) fn solve_parity(a: &Arena, prio: &[usize]) -> Positional {
    let n = a.num_vertices();
    let mut st = State { a, prio, s1: vec![None; n], s2: vec![None; n] };
    let (w1, _) = st.solve(set::full(n));
    Positional { player: Player::P1, win: w1, mine: st.s1, theirs: st.s2 }
}

struct State<'a> {
    a: &'a Arena,
    prio: &'a [usize],
    s1: Vec<Option<usize>>,
    s2: Vec<Option<usize>>,
}

impl State<'_> {
    fn strat(&mut self, p: Player) -> &mut Vec<Option<usize>> {
        match p {
            Player::P1 => &mut self.s1,
            Player::P2 => &mut self.s2,
        }
    }

    /// Returns (W1, W2) of the subgame on `domain`; strategies are written for every vertex
    /// of each region owned by the region's winner.
    fn solve(&mut self, mut domain: VertexSet) -> (VertexSet, VertexSet) {
        let a = self.a;
        let n = a.num_vertices();
        let mut won1 = set::empty(n);
        let mut won2 = set::empty(n);
        loop {
            let Some(d) = domain.iter_ones().map(|v| self.prio[v]).max() else {
                return (won1, won2);
            };
            let p = if d % 2 == 0 { Player::P1 } else { Player::P2 };
            let q = p.opponent();
            let top = set::from_fn(n, |v| domain[v] && self.prio[v] == d);
            let attr = attractor_in(a, p, &top, &domain);
            let (r1, r2) = self.solve(set::minus(&domain, &attr.set));
            let sub_q = if q == Player::P1 { r1 } else { r2 };
            if sub_q.not_any() {
                for v in attr.set.iter_ones() {
                    if a.owner(v) == p {
                        let e = attr.witness[v].or_else(|| edge_into(a, v, &domain));
                        self.strat(p)[v] = e;
                    }
                }
                if p == Player::P1 {
                    won1 |= domain.as_bitslice();
                } else {
                    won2 |= domain.as_bitslice();
                }
                return (won1, won2);
            }
            let b = attractor_in(a, q, &sub_q, &domain);
            for v in b.set.iter_ones() {
                if a.owner(v) == q && !sub_q[v] {
                    self.strat(q)[v] = b.witness[v];
                }
            }
            if q == Player::P1 {
                won1 |= b.set.as_bitslice();
            } else {
                won2 |= b.set.as_bitslice();
            }
            domain = set::minus(&domain, &b.set);
        }
    }
}
