//! Plain-text and DOT renderers for the output documents.

use std::fmt::Write as _;

use crate::io::{Num, OutputDocument};

fn vector(v: &[Num]) -> String {
    let inner: Vec<String> = v.iter().map(|n| n.0.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn index_set(ids: &[usize]) -> String {
    let inner: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn render_text(doc: &OutputDocument) -> String {
    let mut out = String::new();
    if let Some(j) = &doc.submonoid {
        let _ = writeln!(out, "submonoid: {}", index_set(j));
    }
    if let Some(x) = &doc.element {
        let _ = writeln!(out, "element: {}", vector(x));
    }
    if let Some(d) = doc.dim {
        let _ = writeln!(out, "dim: {d}");
    }
    if let Some(s) = doc.simplicial {
        let _ = writeln!(out, "simplicial: {s}");
    }
    if let Some(rays) = &doc.rays {
        let _ = writeln!(out, "rays ({}):", rays.len());
        for r in rays {
            let _ = writeln!(out, "  {}", vector(r));
        }
    }
    if let Some(facets) = &doc.facets {
        let _ = writeln!(out, "facet normals ({}):", facets.len());
        for f in facets {
            let _ = writeln!(out, "  {}", vector(f));
        }
    }
    if let Some(faces) = &doc.faces {
        let _ = writeln!(out, "faces ({}):", faces.faces.len());
        for (i, f) in faces.faces.iter().enumerate() {
            let _ = writeln!(
                out,
                "  {i}: dim {}, generators {}, rays {}",
                f.dim,
                index_set(&f.generator_indices),
                index_set(&f.ray_indices)
            );
        }
        let _ = writeln!(out, "hasse edges:");
        for [a, b] in &faces.hasse_edges {
            let _ = writeln!(out, "  {a} -> {b}");
        }
    }
    if let Some(dc) = &doc.dc_lattice {
        let _ = writeln!(out, "divisor-closed submonoids ({}):", dc.nodes.len());
        for (i, n) in dc.nodes.iter().enumerate() {
            let _ = writeln!(out, "  {i}: {}", index_set(&n.generators));
        }
        let _ = writeln!(out, "hasse edges:");
        for [a, b] in &dc.hasse_edges {
            let _ = writeln!(out, "  {a} -> {b}");
        }
    }
    if let Some(report) = &doc.delta_report {
        let stars: Vec<String> = report.delta_star.iter().map(|n| n.0.to_string()).collect();
        let _ = writeln!(out, "delta_star: {{{}}}", stars.join(", "));
        let _ = writeln!(out, "per submonoid:");
        for node in &report.per_submonoid {
            let value = node
                .min_delta
                .as_ref()
                .map_or_else(|| "-".to_string(), |n| n.0.to_string());
            let _ = writeln!(out, "  {}: {}", index_set(&node.generators), value);
        }
    }
    if let Some(md) = &doc.min_delta {
        let value = md
            .as_ref()
            .map_or_else(|| "-".to_string(), |n| n.0.to_string());
        let _ = writeln!(out, "min_delta: {value}");
    }
    if let Some(b) = doc.divisor_closed {
        let _ = writeln!(out, "divisor_closed: {b}");
    }
    if let Some(sys) = &doc.equation_system {
        let _ = writeln!(out, "equation system (p = {}):", sys.p);
        for c in &sys.congruences {
            let terms: Vec<String> = c
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, n)| format!("{}*x{}", n.0, i + 1))
                .collect();
            let _ = writeln!(out, "  {} = 0 mod {}", terms.join(" + "), c.modulus.0);
        }
        for e in &sys.equations {
            let terms: Vec<String> = e
                .iter()
                .enumerate()
                .map(|(i, n)| format!("{}*x{}", n.0, i + 1))
                .collect();
            let _ = writeln!(out, "  {} = 0", terms.join(" + "));
        }
    }
    if let Some(gens) = &doc.group_generators {
        let _ = writeln!(out, "group generators ({}):", gens.len());
        for g in gens {
            let _ = writeln!(out, "  {}", vector(g));
        }
    }
    if let Some(f) = &doc.factorizations {
        let _ = writeln!(out, "factorizations ({}):", f.factorizations.len());
        for x in &f.factorizations {
            let _ = writeln!(out, "  {}", vector(x));
        }
        let lengths: Vec<String> = f.lengths.iter().map(|n| n.0.to_string()).collect();
        let _ = writeln!(out, "lengths: {{{}}}", lengths.join(", "));
        let delta: Vec<String> = f.delta.iter().map(|n| n.0.to_string()).collect();
        let _ = writeln!(out, "delta: {{{}}}", delta.join(", "));
    }
    out
}

/// Directed acyclic graph of a lattice: one node per element labeled by its
/// generator subset, one edge per covering relation, bottom to top.
pub fn render_dot(doc: &OutputDocument) -> Option<String> {
    let (labels, edges): (Vec<String>, &Vec<[usize; 2]>) = if let Some(dc) = &doc.dc_lattice {
        (
            dc.nodes.iter().map(|n| index_set(&n.generators)).collect(),
            &dc.hasse_edges,
        )
    } else if let Some(faces) = &doc.faces {
        (
            faces
                .faces
                .iter()
                .map(|f| format!("{} dim {}", index_set(&f.generator_indices), f.dim))
                .collect(),
            &faces.hasse_edges,
        )
    } else {
        return None;
    };
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for (i, label) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
    }
    for [a, b] in edges {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    Some(out)
}
