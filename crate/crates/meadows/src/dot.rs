//! DOT export of directed lattices: one node per vertex labeled with its
//! ring, one downward edge per Hasse cover labeled with the transition
//! map's generator images.

use crate::build::DirectedLattice;

pub fn export_dot(dl: &DirectedLattice) -> String {
    export_dot_named(dl, "meadow")
}

pub fn export_dot_named(dl: &DirectedLattice, graph_name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {graph_name} {{\n"));
    out.push_str("  rankdir=TB;\n");
    for (v, ring) in dl.rings().iter().enumerate() {
        let label = match ring.name() {
            Some(name) => format!("{name} (order {})", ring.order()),
            None => format!("order {}", ring.order()),
        };
        out.push_str(&format!("  v{v} [label=\"{label}\"];\n"));
    }
    for (&(hi, lo), hom) in dl.covers().iter().zip(dl.edge_homs()) {
        let gens = dl.ring(hi).additive_generators();
        let srcs: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        let imgs: Vec<String> = gens.iter().map(|&g| hom.apply(g).to_string()).collect();
        out.push_str(&format!(
            "  v{hi} -> v{lo} [label=\"[{}] -> [{}]\"];\n",
            srcs.join(","),
            imgs.join(",")
        ));
    }
    out.push_str("}\n");
    out
}
