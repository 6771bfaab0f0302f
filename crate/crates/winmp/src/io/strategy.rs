use std::fmt::Write as _;
use std::path::Path;

use super::{parse_error, tokens, NamedGame};
use crate::error::Result;
use crate::game::Player;
use crate::strategy::MooreStrategy;

/// Table form of a Moore machine:
///
/// ```text
/// strategy P1 memory 2 initial 0
/// next 0 v0 3      # in memory 0 at v0 take edge 3
/// update 0 3 1     # after edge 3 memory 0 becomes 1
/// ```
///
/// Missing `update` lines keep the memory; every owned vertex needs a `next` line per state.
pub fn write_strategy(g: &NamedGame, s: &MooreStrategy) -> String {
    let a = &g.game;
    let mut out = format!("strategy {} memory {} initial {}\n", s.owner, s.memory, s.initial);
    for m in 0..s.memory {
        for v in a.vertices_of(s.owner) {
            writeln!(out, "next {m} {} {}", g.names[v], s.next(m, v)).unwrap();
        }
        for e in 0..a.num_edges() {
            writeln!(out, "update {m} {e} {}", s.update(m, e)).unwrap();
        }
    }
    out
}

pub fn parse_strategy(text: &str, g: &NamedGame) -> Result<MooreStrategy> {
    let a = &g.game;
    let mut strat: Option<MooreStrategy> = None;
    let mut seen: Vec<bool> = Vec::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        last = ln;
        let toks = tokens(raw);
        let Some(&(col, kw)) = toks.first() else { continue };
        let num = |k: usize, bound: usize, what: &str| -> Result<usize> {
            let &(c, t) = toks.get(k).ok_or_else(|| parse_error(ln, raw.len() + 1, format!("missing {what}")))?;
            match t.parse::<usize>() {
                Ok(x) if x < bound => Ok(x),
                _ => Err(parse_error(ln, c, format!("bad {what} '{t}'"))),
            }
        };
        match (kw, strat.as_mut()) {
            ("strategy", None) => {
                if toks.len() != 6 || toks[2].1 != "memory" || toks[4].1 != "initial" {
                    return Err(parse_error(ln, col, "expected 'strategy <P1|P2> memory <m> initial <m0>'"));
                }
                let owner = match toks[1].1 {
                    "P1" => Player::P1,
                    "P2" => Player::P2,
                    t => return Err(parse_error(ln, toks[1].0, format!("expected P1 or P2, found '{t}'"))),
                };
                let memory = num(3, usize::MAX, "memory size")?;
                if memory == 0 {
                    return Err(parse_error(ln, toks[3].0, "memory size must be positive"));
                }
                let initial = num(5, memory, "initial state")?;
                let mut s = MooreStrategy::trivial(a, owner, memory);
                s.initial = initial;
                seen = vec![false; memory * a.num_vertices()];
                strat = Some(s);
            }
            (_, None) => return Err(parse_error(ln, col, "expected 'strategy' header")),
            ("next", Some(s)) => {
                let m = num(1, s.memory, "memory state")?;
                let &(c, name) = toks.get(2).ok_or_else(|| parse_error(ln, raw.len() + 1, "missing vertex"))?;
                let v = g.index_of(name).ok_or_else(|| parse_error(ln, c, format!("unknown vertex '{name}'")))?;
                if a.owner(v) != s.owner {
                    return Err(parse_error(ln, c, format!("vertex '{name}' is not owned by {}", s.owner)));
                }
                let e = num(3, a.num_edges(), "edge")?;
                if a.src(e) != v {
                    return Err(parse_error(ln, toks[3].0, format!("edge {e} does not leave '{name}'")));
                }
                s.set_next(m, v, e);
                seen[m * a.num_vertices() + v] = true;
            }
            ("update", Some(s)) => {
                let m = num(1, s.memory, "memory state")?;
                let e = num(2, a.num_edges(), "edge")?;
                let m2 = num(3, s.memory, "memory state")?;
                s.set_update(m, e, m2);
            }
            (t, _) => return Err(parse_error(ln, col, format!("unknown directive '{t}'"))),
        }
    }
    let s = strat.ok_or_else(|| parse_error(last.max(1), 1, "missing 'strategy' header"))?;
    for m in 0..s.memory {
        if let Some(v) = a.vertices_of(s.owner).find(|&v| !seen[m * a.num_vertices() + v]) {
            return Err(parse_error(last + 1, 1, format!("no choice for '{}' in memory {m}", g.names[v])));
        }
    }
    Ok(s)
}

pub fn load_strategy(path: impl AsRef<Path>, g: &NamedGame) -> Result<MooreStrategy> {
    parse_strategy(&std::fs::read_to_string(path)?, g)
}

pub fn save_strategy(path: impl AsRef<Path>, g: &NamedGame, s: &MooreStrategy) -> Result<()> {
    Ok(std::fs::write(path, write_strategy(g, s))?)
}
