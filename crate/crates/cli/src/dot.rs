//! Graphviz output for exchange graphs.

use std::fmt::Write;

use cyclotri::cluster::ExchangeGraph;
use cyclotri::SymbolicArcSet;

use crate::format;

/// `{a b, c d, …}` with the arcs in sorted order.
pub fn label(set: &SymbolicArcSet) -> String {
    let arcs: Vec<String> = set.explicit().iter().map(|p| format::arc(set.order(), p)).collect();
    format!("{{{}}}", arcs.join(", "))
}

pub fn exchange_graph(n: u32, graph: &ExchangeGraph) -> String {
    let labels: Vec<String> = graph.vertices.iter().map(label).collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "// {} triangulations of the {n}-gon, {} flips",
        labels.len(),
        graph.edges.len()
    );
    let _ = writeln!(out, "graph exchange_{n} {{");
    for l in &labels {
        let _ = writeln!(out, "  \"{l}\";");
    }
    for &(i, j) in &graph.edges {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", labels[i], labels[j]);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclotri::cluster::exchange_graph as graph;

    #[test]
    fn pentagon_is_a_cycle() {
        let text = exchange_graph(5, &graph(5).unwrap());
        assert!(text.starts_with("// 5 triangulations of the 5-gon, 5 flips\ngraph exchange_5 {\n"));
        assert_eq!(text.matches(" -- ").count(), 5);
        for line in text.lines().filter(|l| !l.contains("--") && l.starts_with("  ")) {
            let name = line.trim().trim_end_matches(';');
            assert_eq!(
                text.matches(&format!("{name} --")).count() + text.matches(&format!("-- {name}")).count(),
                2
            );
        }
    }
}
