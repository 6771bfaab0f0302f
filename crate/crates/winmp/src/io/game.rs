use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use super::{parse_error, tokens};
use crate::error::{Error, Result};
use crate::game::{build_game, GameStructure, Player};

/// A game together with the external vertex names, in file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGame {
    pub game: GameStructure,
    pub names: Vec<String>,
}

impl NamedGame {
    /// Names `v0, v1, ...` for a game without a file.
    pub fn anonymous(game: GameStructure) -> NamedGame {
        let names = (0..game.num_vertices()).map(|v| format!("v{v}")).collect();
        NamedGame { game, names }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Resolves a comma separated list of names (or bare indices) to vertices.
    pub fn vertex_list(&self, list: &str) -> Result<Vec<usize>> {
        list.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                self.index_of(s)
                    .or_else(|| s.parse::<usize>().ok().filter(|&v| v < self.names.len()))
                    .ok_or_else(|| parse_error(1, 1, format!("unknown vertex '{s}'")))
            })
            .collect()
    }
}

/// Parses the line format: `game <|V|> <n>`, then `v <name> <P1|P2>` and `e <src> <dst> w1 .. wn`.
pub fn parse_game(text: &str) -> Result<NamedGame> {
    let mut header: Option<(usize, usize)> = None;
    let mut names = Vec::new();
    let mut owners = Vec::new();
    let mut index = HashMap::new();
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        last_line = ln;
        let toks = tokens(raw);
        let Some(&(col, kw)) = toks.first() else { continue };
        let int = |k: usize| -> Result<i64> {
            let &(c, t) = toks.get(k).ok_or_else(|| parse_error(ln, raw.len() + 1, "missing field"))?;
            t.parse().map_err(|_| parse_error(ln, c, format!("expected an integer, found '{t}'")))
        };
        match (kw, header) {
            ("game", None) => {
                if toks.len() != 3 {
                    return Err(parse_error(ln, col, "expected 'game <vertices> <dimension>'"));
                }
                let (nv, dim) = (int(1)?, int(2)?);
                if nv < 1 || dim < 1 {
                    return Err(parse_error(ln, col, "vertex count and dimension must be positive"));
                }
                header = Some((nv as usize, dim as usize));
            }
            (_, None) => return Err(parse_error(ln, col, "expected 'game' header")),
            ("v", Some((nv, _))) => {
                if toks.len() != 3 {
                    return Err(parse_error(ln, col, "expected 'v <name> <P1|P2>'"));
                }
                let (c, name) = toks[1];
                if index.contains_key(name) {
                    return Err(parse_error(ln, c, format!("duplicate vertex '{name}'")));
                }
                if names.len() == nv {
                    return Err(parse_error(ln, col, "more vertices than declared"));
                }
                let owner = match toks[2].1 {
                    "P1" => Player::P1,
                    "P2" => Player::P2,
                    t => return Err(parse_error(ln, toks[2].0, format!("expected P1 or P2, found '{t}'"))),
                };
                index.insert(name.to_string(), names.len());
                names.push(name.to_string());
                owners.push(owner);
            }
            ("e", Some((_, dim))) => {
                if toks.len() != 3 + dim {
                    return Err(parse_error(ln, col, format!("expected 'e <src> <dst>' and {dim} weights")));
                }
                let vertex = |k: usize| -> Result<usize> {
                    let (c, t) = toks[k];
                    index.get(t).copied().ok_or_else(|| parse_error(ln, c, format!("unknown vertex '{t}'")))
                };
                let (s, d) = (vertex(1)?, vertex(2)?);
                let w = (3..3 + dim).map(int).collect::<Result<Vec<_>>>()?;
                edges.push((s, d, w));
            }
            ("game", Some(_)) => return Err(parse_error(ln, col, "duplicate header")),
            (t, _) => return Err(parse_error(ln, col, format!("unknown directive '{t}'"))),
        }
    }
    let Some((nv, dim)) = header else {
        return Err(parse_error(last_line.max(1), 1, "missing 'game' header"));
    };
    if names.len() != nv {
        return Err(parse_error(last_line + 1, 1, format!("declared {nv} vertices, found {}", names.len())));
    }
    if edges.is_empty() {
        return Err(parse_error(last_line + 1, 1, "no edges"));
    }
    let game = build_game(owners, edges).map_err(|e| match e {
        Error::DeadlockVertex(v) => parse_error(last_line + 1, 1, format!("vertex '{}' has no outgoing edge", names[v])),
        other => other,
    })?;
    debug_assert_eq!(game.dim(), dim);
    Ok(NamedGame { game, names })
}

/// Canonical text form: vertices in index order, then edges in index order.
pub fn write_game(g: &NamedGame) -> String {
    let game = &g.game;
    let mut s = format!("game {} {}\n", game.num_vertices(), game.dim());
    for (v, name) in g.names.iter().enumerate() {
        writeln!(s, "v {name} {}", game.owner(v)).unwrap();
    }
    for e in 0..game.num_edges() {
        write!(s, "e {} {}", g.names[game.src(e)], g.names[game.dst(e)]).unwrap();
        for w in game.weights(e) {
            write!(s, " {w}").unwrap();
        }
        s.push('\n');
    }
    s
}

pub fn load_game(path: impl AsRef<Path>) -> Result<NamedGame> {
    parse_game(&std::fs::read_to_string(path)?)
}

pub fn save_game(path: impl AsRef<Path>, g: &NamedGame) -> Result<()> {
    Ok(std::fs::write(path, write_game(g))?)
}

/// The bundled example games, by file stem.
pub const FIXTURES: [(&str, &str); 5] = [
    ("fig1", include_str!("../../fixtures/fig1.game")),
    ("fig5", include_str!("../../fixtures/fig5.game")),
    ("fig6", include_str!("../../fixtures/fig6.game")),
    ("fig7", include_str!("../../fixtures/fig7.game")),
    ("fig8", include_str!("../../fixtures/fig8.game")),
];

/// A bundled game by name (with or without the `.game` suffix).
pub fn fixture(name: &str) -> Option<NamedGame> {
    let stem = name.strip_suffix(".game").unwrap_or(name);
    FIXTURES.iter().find(|(n, _)| *n == stem).map(|(_, text)| parse_game(text).expect("bundled game parses"))
}
