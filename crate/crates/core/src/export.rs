//! DOT and edge-list interchange.
//!
//! The edge-list format is whitespace separated: an `n m` header, then one
//! `u v` line per edge.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, RoleKind};

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n_vertices(), g.n_edges());
    for &(a, b) in g.edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("expected an integer, got `{t}`")))
    });
    let mut next = |what: &str| {
        tokens
            .next()
            .unwrap_or_else(|| Err(Error::Parse(format!("missing {what}"))))
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        edges.push((next("edge endpoint")?, next("edge endpoint")?));
    }
    if tokens.next().is_some() {
        return Err(Error::Parse("trailing data after last edge".into()));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.n_edges() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges but only {} are distinct",
            g.n_edges()
        )));
    }
    Ok(g)
}

fn role_label(g: &Graph, v: usize) -> Option<String> {
    let r = g.role(v)?;
    Some(match r.role {
        RoleKind::Hub => "v".into(),
        RoleKind::InnerCycle => format!("v{}", r.index),
        RoleKind::OuterCycle => format!("u{}", r.index),
        // web pendants are w_i; elsewhere pendants are u_i
        RoleKind::Pendant => {
            let outer = g.roles()?.iter().any(|x| x.role == RoleKind::OuterCycle);
            if outer {
                format!("w{}", r.index)
            } else {
                format!("u{}", r.index)
            }
        }
    })
}

/// Undirected DOT; family members get role labels and the graph is named
/// after the family.
pub fn to_dot(g: &Graph) -> String {
    let name = match g.family() {
        Some((kind, n)) => format!("{kind}_{n}"),
        None => "G".into(),
    };
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n_vertices() {
        match role_label(g, v) {
            Some(label) => writeln!(out, "  {v} [label=\"{label}\"];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for &(a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{helm, sunlet, web};

    #[test]
    fn sunlet_edge_list() {
        let text = to_edge_list(&sunlet(3).unwrap());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "6 6");
        assert_eq!(lines.len(), 7);
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = web(4).unwrap();
        let back = parse_edge_list(&to_edge_list(&g)).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.n_vertices(), g.n_vertices());
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 5\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n1 0\n").is_err());
        assert!(parse_edge_list("2 1\na b\n").is_err());
    }

    #[test]
    fn dot_labels() {
        let dot = to_dot(&helm(3).unwrap());
        assert!(dot.starts_with("graph helm_3 {"));
        assert!(dot.contains("0 [label=\"v\"]"));
        assert!(dot.contains("4 [label=\"u1\"]"));
        assert!(dot.contains("0 -- 1;"));
        let dot = to_dot(&web(3).unwrap());
        assert!(dot.contains("6 [label=\"w1\"]"));
        let plain = to_dot(&Graph::path(2));
        assert!(plain.contains("graph G {") && plain.contains("0 -- 1;"));
    }
}
