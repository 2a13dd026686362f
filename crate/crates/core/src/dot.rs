//! Graphviz export. Output is deterministic: nodes and edges follow the
//! order of the underlying data.

use std::fmt::Write;

use crate::cat::PresentedCategory;
use crate::cubical::{raise_flips, CubicalSpace, DihomotopyClassSet};
use crate::vankampen::PushoutResult;

const PALETTE: &[&str] = &[
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Paths as nodes colored by class, raise flips as edges.
pub fn flip_graph_dot(space: &CubicalSpace, classes: &DihomotopyClassSet) -> String {
    let mut out = String::from("digraph flips {\n  node [shape=box, style=filled, fontname=monospace];\n");
    for (i, p) in classes.paths.iter().enumerate() {
        let color = PALETTE[classes.class_of[i] % PALETTE.len()];
        let _ = writeln!(out, "  {} [fillcolor={}];", quote(&p.word()), quote(color));
    }
    for p in &classes.paths {
        for q in raise_flips(space, p) {
            let _ = writeln!(out, "  {} -> {};", quote(&p.word()), quote(&q.word()));
        }
    }
    out.push_str("}\n");
    out
}

fn presentation_body(out: &mut String, c: &PresentedCategory, indent: &str) {
    for o in c.objects() {
        let _ = writeln!(out, "{indent}{};", quote(o));
    }
    for g in c.generators() {
        let _ = writeln!(
            out,
            "{indent}{} -> {} [label={}];",
            quote(&g.src),
            quote(&g.dst),
            quote(&g.id)
        );
    }
}

/// Objects as nodes, generators as labeled edges, relations as a comment
/// block.
pub fn presentation_dot(c: &PresentedCategory) -> String {
    let mut out = String::from("digraph presentation {\n");
    for r in c.relations() {
        let _ = writeln!(out, "  // {} = {}", r.lhs, r.rhs);
    }
    presentation_body(&mut out, c, "  ");
    out.push_str("}\n");
    out
}

/// The pushout presentation with generators colored by the side they
/// come from.
pub fn pushout_dot(po: &PushoutResult) -> String {
    let p = &po.presentation;
    let mut out = String::from("digraph pushout {\n");
    for o in p.objects() {
        let _ = writeln!(out, "  {};", quote(o));
    }
    for g in p.generators() {
        let color = if g.id.starts_with("1:") { PALETTE[0] } else { PALETTE[1] };
        let _ = writeln!(
            out,
            "  {} -> {} [label={}, color={}];",
            quote(&g.src),
            quote(&g.dst),
            quote(&g.id),
            quote(color)
        );
    }
    out.push_str("}\n");
    out
}
