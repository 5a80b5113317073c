//! Graphviz export of presentations.

use std::fmt::Write;

use linqh_core::borel::BorelPresentation;
use linqh_core::MonomialPresentation;

fn header(out: &mut String, name: &str, relations: &[String]) {
    writeln!(out, "digraph {name} {{").unwrap();
    let rel = if relations.is_empty() { "none".to_string() } else { relations.join(", ") };
    writeln!(out, "  // relations: {rel}").unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
}

/// Degree-0 arrows are dashed and degree-1 arrows solid.
pub fn presentations_dot(name: &str, parts: &[MonomialPresentation]) -> String {
    let mut out = String::new();
    let relations: Vec<String> = parts.iter().flat_map(MonomialPresentation::relations).collect();
    header(&mut out, name, &relations);
    let mut vertices: Vec<_> = parts.iter().flat_map(MonomialPresentation::vertices).collect();
    vertices.sort_unstable();
    vertices.dedup();
    for v in vertices {
        writeln!(out, "  {v};").unwrap();
    }
    for p in parts {
        for a in p.arrows() {
            let style = if a.degree == 0 { "dashed" } else { "solid" };
            writeln!(out, "  {} -> {} [label=\"{}\", style={style}];", a.src, a.tgt, a.name()).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Borel arrows all have degree 0.
pub fn borel_dot(b: &BorelPresentation) -> String {
    let mut out = String::new();
    header(&mut out, "borel", &[]);
    for v in b.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for (i, j) in b.arrows() {
        writeln!(out, "  {i} -> {j} [style=dashed];").unwrap();
    }
    out.push_str("}\n");
    out
}
