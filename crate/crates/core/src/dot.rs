//! Graphviz export of Hasse diagrams: cover edges only, greater elements drawn higher.

use crate::poset::FinitePoset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn hasse_dot(p: &FinitePoset, name: &str) -> String {
    let mut s = format!("digraph {} {{\n  rankdir=BT;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n", quote(name));
    for l in p.labels() {
        s.push_str(&format!("  {};\n", quote(l)));
    }
    for (a, b) in p.cover_pairs() {
        s.push_str(&format!("  {} -> {};\n", quote(p.label(a)), quote(p.label(b))));
    }
    s.push_str("}\n");
    s
}
