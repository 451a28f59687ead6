//! Legendre graph export.
//!
//! Edge list: one `a b` line per edge, 1-based labels with `a < b`, sorted.
//! DOT: an undirected `graph` with one node per label (so isolated vertices
//! show up) followed by the same edges as `a -- b;`.

use std::io::{self, Write};

use lcordial_core::legraph::LegendreGraph;

pub fn write_edge_list<W: Write>(graph: &LegendreGraph, mut sink: W) -> io::Result<()> {
    for (a, b) in graph.label_edges() {
        writeln!(sink, "{a} {b}")?;
    }
    Ok(())
}

pub fn write_dot<W: Write>(graph: &LegendreGraph, mut sink: W) -> io::Result<()> {
    writeln!(
        sink,
        "graph \"L_{}^{}({})\" {{",
        graph.order(),
        graph.k(),
        graph.prime()
    )?;
    for label in 1..=graph.order() {
        writeln!(sink, "  {label};")?;
    }
    for (a, b) in graph.label_edges() {
        writeln!(sink, "  {a} -- {b};")?;
    }
    writeln!(sink, "}}")
}
