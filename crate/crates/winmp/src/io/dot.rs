use std::fmt::Write as _;

use super::NamedGame;
use crate::game::Player;
use crate::solution::WinningRegions;
use crate::strategy::MooreStrategy;

/// Graphviz text. Player 1 vertices are circles and player 2 vertices boxes; regions fill the
/// nodes (W1 blue, W2 red) and the strategy's choices in its initial memory state are bold.
pub fn export_dot(g: &NamedGame, regions: Option<&WinningRegions>, strategy: Option<&MooreStrategy>) -> String {
    let a = &g.game;
    let mut s = String::from("digraph game {\n");
    for (v, name) in g.names.iter().enumerate() {
        let shape = if a.owner(v) == Player::P1 { "circle" } else { "box" };
        write!(s, "  n{v} [label=\"{name}\", shape={shape}").unwrap();
        if let Some(r) = regions {
            let color = if r.w1[v] { "lightblue" } else { "lightcoral" };
            write!(s, ", style=filled, fillcolor={color}").unwrap();
        }
        s.push_str("];\n");
    }
    for e in 0..a.num_edges() {
        let w: Vec<String> = a.weights(e).iter().map(i64::to_string).collect();
        write!(s, "  n{} -> n{} [label=\"({})\"", a.src(e), a.dst(e), w.join(",")).unwrap();
        if let Some(st) = strategy {
            let v = a.src(e);
            if a.owner(v) == st.owner && st.next(st.initial, v) == e {
                s.push_str(", style=bold");
            }
        }
        s.push_str("];\n");
    }
    s.push_str("}\n");
    s
}
