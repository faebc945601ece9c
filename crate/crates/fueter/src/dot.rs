//! Graphviz rendering of Fueter trees.

use std::fmt::Write;

use fueter_core::fueter::TreeEdge;
use fueter_core::{FueterTree, SetPartition};

/// `M` for the all-singletons partition, otherwise the partition string.
pub fn node_label(p: &SetPartition) -> String {
    if p.is_all_singletons() {
        "M".to_string()
    } else {
        p.to_string()
    }
}

/// `Delta` for unary steps, else `tau j, alpha=i` with 1-based `j`.
pub fn edge_label(e: &TreeEdge) -> String {
    if e.unary {
        "Delta".to_string()
    } else {
        format!("tau {}, alpha={}", e.block + 1, e.alpha)
    }
}

pub fn export_dot(tree: &FueterTree) -> String {
    let mut out = String::new();
    out.push_str("digraph fueter {\n");
    let _ = writeln!(
        out,
        "  graph [height={}, root_weight=\"{}\", leaves=\"{}\"];",
        tree.height(),
        tree.root_weight(),
        if tree.merges_leaves() { "merged" } else { "split" }
    );
    out.push_str("  node [shape=box];\n");
    for (i, node) in tree.nodes().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", node_label(&node.partition));
    }
    for e in tree.edges() {
        let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.parent, e.child, edge_label(e));
    }
    out.push_str("}\n");
    out
}
