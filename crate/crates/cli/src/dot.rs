//! DOT export with colour-indexed styling: colour i maps onto a fixed
//! 12-colour palette, cycling, with a numeric label once the palette wraps.

use rpk_core::digraph::ArcColouredDigraph;

use crate::document::InstanceDocument;

const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff",
];

pub fn export_dot(doc: &InstanceDocument, d: &ArcColouredDigraph) -> String {
    let mut out = String::from("digraph instance {\n  rankdir=LR;\n  node [shape=circle];\n");
    for name in &doc.vertices {
        out.push_str(&format!("  \"{}\";\n", name));
    }
    for a in d.arcs() {
        let c = a.colour.value();
        let hex = PALETTE[((c - 1) % 12) as usize];
        let label = if c > 12 { format!(", label=\"{}\"", c) } else { String::new() };
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [color=\"{}\"{}];\n",
            doc.name_of(a.from),
            doc.name_of(a.to),
            hex,
            label
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palette_cycles_and_labels_beyond_twelve() {
        let doc = InstanceDocument {
            vertices: (0..15).map(|i| format!("v{}", i)).collect(),
            arcs: (0..14).map(|i| (format!("v{}", i), format!("v{}", i + 1), i as u32 + 1)).collect(),
        };
        let d = doc.to_digraph().unwrap();
        let dot = export_dot(&doc, &d);
        assert!(dot.contains("label=\"13\""));
        assert!(dot.matches(PALETTE[0]).count() >= 2); // colour 1 and colour 13
    }
}
