//! Graphviz output: gray edge labels carry canonical ideal generators, red
//! vertex labels carry spline values.

use std::fmt::Write as _;

use crate::graph::EdgeLabeledGraph;
use crate::spline::Spline;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

fn html(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn emit_dot(g: &EdgeLabeledGraph, p: Option<&Spline>) -> String {
    let mut out = String::new();
    out.push_str("graph G {\n");
    out.push_str("  forcelabels=true;\n");
    out.push_str("  node [shape=circle, style=filled, fillcolor=black, fontcolor=white, width=0.3];\n");
    out.push_str("  edge [fontcolor=gray40, color=gray50];\n");
    for (i, v) in g.vertices().iter().enumerate() {
        match p {
            Some(p) => {
                let _ = writeln!(
                    out,
                    "  {} [xlabel=<<font color=\"red\">{}</font>>];",
                    quote(v),
                    html(&p.value(i).to_string())
                );
            }
            None => {
                let _ = writeln!(out, "  {};", quote(v));
            }
        }
    }
    for e in g.edges() {
        let _ = writeln!(
            out,
            "  {} -- {} [label={}];",
            quote(g.vertex_id(e.tail())),
            quote(g.vertex_id(e.head())),
            quote(&e.label().canonical().to_string())
        );
    }
    out.push_str("}\n");
    out
}
