//! Graphviz output. Node ids follow element (or vertex) indices.

use std::fmt::Write;

use latticelab::dynamics::EdgeLabeling;
use latticelab::{GaloisGraph, Lattice};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram, bottom to top; covers carry their labels when given.
pub fn hasse(l: &Lattice, labels: Option<&EdgeLabeling>) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for x in 0..l.len() {
        writeln!(out, "  n{x} [label={}];", quote(l.name(x))).unwrap();
    }
    for &(x, y) in l.covers() {
        match labels.and_then(|lab| lab.label(x, y)) {
            Some(j) => writeln!(out, "  n{x} -> n{y} [label={}];", quote(l.name(j))).unwrap(),
            None => writeln!(out, "  n{x} -> n{y};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

/// The Galois graph with vertices named by their join-irreducibles.
pub fn galois(l: &Lattice, g: &GaloisGraph) -> String {
    let mut out = String::from("digraph galois {\n");
    for (i, &j) in g.vertices().iter().enumerate() {
        writeln!(out, "  v{i} [label={}];", quote(l.name(j))).unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  v{a} -> v{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
