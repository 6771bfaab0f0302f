use super::attractor::{attractor, attractor_in, edge_into};
use crate::game::{Arena, Player};
use crate::set::{self, VertexSet};
use crate::solution::{Positional, Solution};

/// Reachability for player `p`, with positional strategies for both players.
pub(crate) fn reach_for(a: &Arena, p: Player, target: &VertexSet) -> Positional {
    let attr = attractor(a, p, target);
    let n = a.num_vertices();
    let mut mine = vec![None; n];
    let mut theirs = vec![None; n];
    let outside = set::complement(&attr.set);
    for v in 0..n {
        if a.owner(v) == p {
            mine[v] = attr.witness[v];
        } else if outside[v] {
            theirs[v] = edge_into(a, v, &outside);
        }
    }
    Positional { player: p, win: attr.set, mine, theirs }
}

/// Büchi for player `p` by repeated attractor removal.
pub(crate) fn buchi_for(a: &Arena, p: Player, target: &VertexSet) -> Positional {
    buchi_in(a, p, target, &set::full(a.num_vertices()))
}

pub(crate) fn buchi_in(a: &Arena, p: Player, target: &VertexSet, domain: &VertexSet) -> Positional {
    let n = a.num_vertices();
    let q = p.opponent();
    let mut s = domain.clone();
    let mut mine = vec![None; n];
    let mut theirs = vec![None; n];
    loop {
        let goal = set::intersect(target, &s);
        let attr = attractor_in(a, p, &goal, &s);
        let trap = set::minus(&s, &attr.set);
        if trap.not_any() {
            for v in s.iter_ones() {
                if a.owner(v) == p {
                    mine[v] = attr.witness[v].or_else(|| edge_into(a, v, &s));
                }
            }
            return Positional { player: p, win: s, mine, theirs };
        }
        let lose = attractor_in(a, q, &trap, &s);
        for v in lose.set.iter_ones() {
            if a.owner(v) == q {
                theirs[v] = lose.witness[v].or_else(|| edge_into(a, v, &trap));
            }
        }
        s = set::minus(&s, &lose.set);
        if s.not_any() {
            return Positional { player: p, win: s, mine, theirs };
        }
    }
}

pub fn solve_reach(a: &Arena, target: &VertexSet) -> Solution {
    reach_for(a, Player::P1, target).into_solution(a)
}

/// Safe(U) is the complement of player 2 reaching V \ U.
pub fn solve_safe(a: &Arena, safe: &VertexSet) -> Solution {
    reach_for(a, Player::P2, &set::complement(safe)).into_solution(a)
}

pub fn solve_buchi(a: &Arena, target: &VertexSet) -> Solution {
    buchi_for(a, Player::P1, target).into_solution(a)
}

/// CoBuchi(U) is the complement of player 2's Büchi(V \ U).
pub fn solve_cobuchi(a: &Arena, stay: &VertexSet) -> Solution {
    buchi_for(a, Player::P2, &set::complement(stay)).into_solution(a)
}
