//! Text formats for games and strategies, DOT export and the bundled example games.

mod dot;
mod game;
mod strategy;

pub use dot::export_dot;
pub use game::{fixture, load_game, parse_game, save_game, write_game, NamedGame, FIXTURES};
pub use strategy::{load_strategy, parse_strategy, save_strategy, write_strategy};

use crate::error::Error;

fn parse_error(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::ParseError { line, col, msg: msg.into() }
}

/// Tokens of a line with their 1-based columns; `#` starts a comment.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in body.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &body[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &body[s..]));
    }
    out
}
