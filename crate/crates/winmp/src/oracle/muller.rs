use std::collections::VecDeque;

use crate::game::{Arena, Player};
use crate::set::{self, VertexSet};

/// `p`-attractor of `target` inside `domain`.
fn attr(a: &Arena, p: Player, target: &VertexSet, domain: &VertexSet) -> VertexSet {
    let n = a.num_vertices();
    let mut inside = set::intersect(target, domain);
    let mut left: Vec<usize> = (0..n)
        .map(|v| a.out_edges(v).iter().filter(|&&e| domain[a.dst(e)]).count())
        .collect();
    let mut queue: VecDeque<usize> = inside.iter_ones().collect();
    while let Some(t) = queue.pop_front() {
        for &e in a.in_edges(t) {
            let u = a.src(e);
            if !domain[u] || inside[u] {
                continue;
            }
            left[u] -= 1;
            if a.owner(u) == p || left[u] == 0 {
                inside.set(u, true);
                queue.push_back(u);
            }
        }
    }
    inside
}

/// Player 1's region of the game where a play is won iff `wins(colors seen infinitely often)`.
/// `colors[v]` is a bitmask; at most 16 distinct colors are supported.
pub fn solve_muller(a: &Arena, colors: &[u32], wins: &dyn Fn(u32) -> bool) -> VertexSet {
    let used = colors.iter().fold(0, |m, &c| m | c);
    assert!(used.count_ones() <= 16, "too many colors");
    let mut memo = Vec::new();
    zielonka(a, colors, wins, set::full(a.num_vertices()), &mut memo).0
}

// Maximal proper subsets of `c` whose verdict differs from `c`'s.
fn children(c: u32, wins: &dyn Fn(u32) -> bool, memo: &mut Vec<(u32, Vec<u32>)>) -> Vec<u32> {
    if let Some((_, ch)) = memo.iter().find(|(k, _)| *k == c) {
        return ch.clone();
    }
    let top = wins(c);
    let mut flip = Vec::new();
    let mut d = c;
    // Enumerate the proper submasks of c.
    loop {
        d = d.wrapping_sub(1) & c;
        if wins(d) != top {
            flip.push(d);
        }
        if d == 0 {
            break;
        }
    }
    let ch: Vec<u32> = flip.iter().copied().filter(|&d| !flip.iter().any(|&e| e != d && e & d == d)).collect();
    memo.push((c, ch.clone()));
    ch
}

fn zielonka(
    a: &Arena,
    colors: &[u32],
    wins: &dyn Fn(u32) -> bool,
    mut g: VertexSet,
    memo: &mut Vec<(u32, Vec<u32>)>,
) -> (VertexSet, VertexSet) {
    let n = a.num_vertices();
    let mut w1 = set::empty(n);
    let mut w2 = set::empty(n);
    'outer: loop {
        if g.not_any() {
            return (w1, w2);
        }
        let c = g.iter_ones().fold(0, |m, v| m | colors[v]);
        let sigma = if wins(c) { Player::P1 } else { Player::P2 };
        for d in children(c, wins, memo) {
            let outside = set::from_fn(n, |v| g[v] && colors[v] & !d != 0);
            let a_set = attr(a, sigma, &outside, &g);
            let rest = set::minus(&g, &a_set);
            if rest.not_any() {
                continue;
            }
            let (r1, r2) = zielonka(a, colors, wins, rest, memo);
            let tau_sub = if sigma == Player::P1 { r2 } else { r1 };
            if tau_sub.any() {
                let b = attr(a, sigma.opponent(), &tau_sub, &g);
                if sigma == Player::P1 {
                    w2 |= b.as_bitslice();
                } else {
                    w1 |= b.as_bitslice();
                }
                g = set::minus(&g, &b);
                continue 'outer;
            }
        }
        if sigma == Player::P1 {
            w1 |= g.as_bitslice();
        } else {
            w2 |= g.as_bitslice();
        }
        return (w1, w2);
    }
}

/// Player 1's region of a Rabin game by brute force: player 1 wins from `v` iff some memoryless
/// strategy leaves no reachable cycle that violates every pair. Exponential in player 1's choices.
pub fn rabin_by_enumeration(a: &Arena, pairs: &[(VertexSet, VertexSet)]) -> VertexSet {
    let n = a.num_vertices();
    let mine: Vec<usize> = a.vertices_of(Player::P1).collect();
    let mut pick = vec![0usize; mine.len()];
    let mut won = set::empty(n);
    loop {
        let keep = |e: usize| {
            let u = a.src(e);
            match mine.iter().position(|&m| m == u) {
                Some(i) => a.out_edges(u)[pick[i]] == e,
                None => true,
            }
        };
        let bad = streett_cycle_vertices(a, pairs, &keep);
        // Vertices that can reach a bad cycle in the restricted graph lose under this strategy.
        let mut lose = bad.clone();
        let mut queue: VecDeque<usize> = bad.iter_ones().collect();
        while let Some(t) = queue.pop_front() {
            for &e in a.in_edges(t) {
                if keep(e) && !lose[a.src(e)] {
                    lose.set(a.src(e), true);
                    queue.push_back(a.src(e));
                }
            }
        }
        won |= set::complement(&lose).as_bitslice();
        // Odometer over player 1's choices.
        let mut i = 0;
        loop {
            if i == mine.len() {
                return won;
            }
            pick[i] += 1;
            if pick[i] < a.out_edges(mine[i]).len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Vertices lying on a cycle (of kept edges) whose vertex set fails every Rabin pair, that is:
/// for each pair it meets `E` or misses `F`.
fn streett_cycle_vertices(a: &Arena, pairs: &[(VertexSet, VertexSet)], keep: &dyn Fn(usize) -> bool) -> VertexSet {
    let n = a.num_vertices();
    let mut out = set::empty(n);
    let mut stack = vec![set::full(n)];
    while let Some(dom) = stack.pop() {
        for scc in sccs(a, &dom, keep) {
            let violated: Vec<usize> = (0..pairs.len())
                .filter(|&k| {
                    let (e, f) = &pairs[k];
                    !scc.iter_ones().any(|v| e[v]) && scc.iter_ones().any(|v| f[v])
                })
                .collect();
            if violated.is_empty() {
                out |= scc.as_bitslice();
            } else {
                // Cycles avoiding F_k for every violated pair are the only candidates left.
                let sub = set::from_fn(n, |v| scc[v] && violated.iter().all(|&k| !pairs[k].1[v]));
                if sub.any() {
                    stack.push(sub);
                }
            }
        }
    }
    out
}

/// Nontrivial strongly connected components of the kept edges inside `dom`.
fn sccs(a: &Arena, dom: &VertexSet, keep: &dyn Fn(usize) -> bool) -> Vec<VertexSet> {
    let n = a.num_vertices();
    let reach = |s: usize, forward: bool| {
        let mut seen = set::empty(n);
        seen.set(s, true);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let edges = if forward { a.out_edges(u) } else { a.in_edges(u) };
            for &e in edges {
                let t = if forward { a.dst(e) } else { a.src(e) };
                if keep(e) && dom[t] && !seen[t] {
                    seen.set(t, true);
                    stack.push(t);
                }
            }
        }
        seen
    };
    let mut done = set::empty(n);
    let mut out = Vec::new();
    for v in dom.iter_ones() {
        if done[v] {
            continue;
        }
        let c = set::intersect(&reach(v, true), &reach(v, false));
        done |= c.as_bitslice();
        let nontrivial = c.count_ones() > 1 || a.out_edges(v).iter().any(|&e| keep(e) && a.dst(e) == v);
        if nontrivial {
            out.push(c);
        }
    }
    out
}
