use std::collections::{HashMap, VecDeque};

use super::muller::solve_muller;
use crate::error::{Error, Result};
use crate::game::{Arena, GameStructure, Player};
use crate::objective::{normalize, Atom, Expr, Measure};
use crate::set::{self, VertexSet};
use crate::solution::WinningRegions;

const NONE: i32 = i32::MAX;

/// Per-leaf memory. Window leaves keep every open window explicitly: `slots[a]` is the running
/// sum of the window opened `a + 1` steps ago, `NONE` once it has closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Mem {
    Flag(bool),
    Windows { dead: bool, slots: Vec<i32> },
}

fn init(a: &Atom) -> Mem {
    match a.measure {
        Measure::Inf | Measure::Sup | Measure::LimSup => Mem::Flag(false),
        Measure::LimInf => Mem::Flag(true),
        Measure::Wmp => Mem::Windows { dead: false, slots: vec![NONE; a.lambda().saturating_sub(1)] },
    }
}

fn step(a: &Atom, m: &Mem, w: i64) -> Mem {
    match (a.measure, m) {
        (Measure::Inf, Mem::Flag(bad)) => Mem::Flag(*bad || w < 0),
        (Measure::Sup, Mem::Flag(seen)) => Mem::Flag(*seen || w >= 0),
        (Measure::LimInf | Measure::LimSup, _) => Mem::Flag(w >= 0),
        (Measure::Wmp, Mem::Windows { dead, slots }) => {
            let lambda = a.lambda();
            if *dead {
                return m.clone();
            }
            // Every open window (and the one opening now) absorbs w.
            let mut next = vec![NONE; lambda.saturating_sub(1)];
            let mut advance = |age: usize, sum: i64| -> bool {
                let s = sum + w;
                if s >= 0 {
                    return true;
                }
                if age + 1 >= lambda {
                    return false;
                }
                next[age] = s as i32;
                true
            };
            let mut ok = advance(0, 0);
            for (age, &s) in slots.iter().enumerate() {
                if s != NONE {
                    ok &= advance(age + 1, s as i64);
                }
            }
            if ok {
                Mem::Windows { dead: false, slots: next }
            } else {
                Mem::Windows { dead: true, slots: vec![NONE; lambda.saturating_sub(1)] }
            }
        }
        _ => unreachable!("memory does not match the atom"),
    }
}

/// Whether the leaf's colour is on: "good" for Sup/LimSup (wanted infinitely often), "bad" for
/// Inf/LimInf/window (wanted finitely often).
fn colour(a: &Atom, m: &Mem) -> bool {
    match (a.measure, m) {
        (Measure::Inf, Mem::Flag(bad)) => *bad,
        (Measure::LimInf, Mem::Flag(good)) => !*good,
        (Measure::Sup | Measure::LimSup, Mem::Flag(good)) => *good,
        (Measure::Wmp, Mem::Windows { dead, .. }) => *dead,
        _ => unreachable!(),
    }
}

fn leaf_holds(a: &Atom, inf: u32, i: usize) -> bool {
    let on = inf >> i & 1 == 1;
    match a.measure {
        Measure::Sup | Measure::LimSup => on,
        _ => !on,
    }
}

fn eval(e: &Expr, atoms: &[Atom], inf: u32, next: &mut usize) -> bool {
    match e {
        Expr::Atom(_) => {
            let i = *next;
            *next += 1;
            leaf_holds(&atoms[i], inf, i)
        }
        // Evaluate every child so that leaf numbering stays aligned.
        Expr::And(xs) => xs.iter().map(|x| eval(x, atoms, inf, next)).fold(true, |a, b| a && b),
        Expr::Or(xs) => xs.iter().map(|x| eval(x, atoms, inf, next)).fold(false, |a, b| a || b),
    }
}

struct Explicit {
    arena: Arena,
    colours: Vec<u32>,
    init: Vec<usize>,
    target: VertexSet,
}

fn explore(g: &GameStructure, atoms: &[Atom], goal: Option<&VertexSet>, budget: usize) -> Result<Explicit> {
    let mut ids: HashMap<(usize, Vec<Mem>), usize> = HashMap::new();
    let mut nodes: Vec<(usize, Vec<Mem>)> = Vec::new();
    let mut queue = VecDeque::new();
    let mut intern = |v: usize, q: Vec<Mem>, nodes: &mut Vec<(usize, Vec<Mem>)>, queue: &mut VecDeque<usize>| -> Result<usize> {
        let key = (v, q);
        if let Some(&id) = ids.get(&key) {
            return Ok(id);
        }
        if nodes.len() >= budget {
            return Err(Error::ProductTooLarge { budget });
        }
        let id = nodes.len();
        ids.insert(key.clone(), id);
        nodes.push(key);
        queue.push_back(id);
        Ok(id)
    };
    let init = (0..g.num_vertices())
        .map(|v| intern(v, atoms.iter().map(init).collect(), &mut nodes, &mut queue))
        .collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::new();
    while let Some(id) = queue.pop_front() {
        let (v, q) = nodes[id].clone();
        for &e in g.out_edges(v) {
            let q2 = atoms.iter().zip(&q).map(|(a, m)| step(a, m, g.weight(e, a.dim))).collect();
            let t = intern(g.dst(e), q2, &mut nodes, &mut queue)?;
            edges.push((id, t));
        }
    }
    let owners = nodes.iter().map(|(v, _)| g.owner(*v)).collect();
    let arena = Arena::new(owners, &edges)?;
    let colours = nodes
        .iter()
        .map(|(_, q)| atoms.iter().zip(q).enumerate().fold(0, |m, (i, (a, x))| m | (u32::from(colour(a, x)) << i)))
        .collect();
    let target = set::from_fn(nodes.len(), |id| {
        let (v, q) = &nodes[id];
        goal.is_some_and(|u| u[*v])
            && q.iter().all(|m| matches!(m, Mem::Windows { dead: false, slots } if slots.iter().all(|&s| s == NONE)))
    });
    Ok(Explicit { arena, colours, init, target })
}

/// Regions of a normalized objective (each leaf `>= 0` on its own dimension, in leaf order).
pub fn oracle_solve_normalized(g: &GameStructure, expr: &Expr, budget: usize) -> Result<WinningRegions> {
    let atoms: Vec<Atom> = expr.atoms().into_iter().cloned().collect();
    if atoms.len() > 16 {
        return Err(Error::FragmentMismatch("more than 16 leaves".into()));
    }
    let x = explore(g, &atoms, None, budget)?;
    let wins = |inf: u32| eval(expr, &atoms, inf, &mut 0);
    let w = solve_muller(&x.arena, &x.colours, &wins);
    Ok(WinningRegions::from_w1(set::from_fn(g.num_vertices(), |v| w[x.init[v]])))
}

/// Regions of any objective: normalizes, then solves the explicit product.
pub fn oracle_solve(g: &GameStructure, expr: &Expr, budget: usize) -> Result<WinningRegions> {
    let (e, ng, _) = normalize(expr, g);
    oracle_solve_normalized(&ng, &e, budget)
}

/// Player 1's region for reaching `u` at a position where every window opened so far has
/// closed within `lambda` steps (dimension 0).
pub fn gd_reach_oracle(g: &GameStructure, u: &VertexSet, lambda: usize, budget: usize) -> Result<VertexSet> {
    let atoms = [Atom::wmp(0, lambda)];
    let x = explore(g, &atoms, Some(u), budget)?;
    // Plain attractor by iteration to a fixed point.
    let a = &x.arena;
    let mut win = x.target.clone();
    loop {
        let next = set::from_fn(a.num_vertices(), |p| {
            win[p] || {
                let mut succ = a.out_edges(p).iter().map(|&e| win[a.dst(e)]);
                if a.owner(p) == Player::P1 {
                    succ.any(|b| b)
                } else {
                    succ.all(|b| b)
                }
            }
        });
        if next == win {
            break;
        }
        win = next;
    }
    Ok(set::from_fn(g.num_vertices(), |v| win[x.init[v]]))
}
