//! Text formats: the `n m` edge-list format for undirected graphs, the same
//! shape reused for arc lists, and a DOT export for digraphs.
//!
//! Lines starting with `#` and blank lines are ignored. The first data line
//! is `n m`; exactly m data lines `u v` follow.

use crate::error::{Error, Result};
use crate::graph::{Digraph, MultiGraph};

fn parse_pairs(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let a = fields.next();
        let b = fields.next();
        let extra = fields.next();
        let (a, b) = match (a, b, extra) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two integers, got '{line}'"),
                })
            }
        };
        let parse = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("'{s}' is not a non-negative integer"),
            })
        };
        let (a, b) = (parse(a)?, parse(b)?);
        match header {
            None => header = Some((a, b)),
            Some((_, m)) => {
                if pairs.len() == m {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("more than the declared {m} entries"),
                    });
                }
                pairs.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: text.lines().count() + 1,
        message: "missing 'n m' header".into(),
    })?;
    if pairs.len() != m {
        return Err(Error::Parse {
            line: text.lines().count() + 1,
            message: format!("declared {m} entries but found {}", pairs.len()),
        });
    }
    Ok((n, pairs))
}

/// Reads `n m` followed by m undirected edges `u v`.
pub fn parse_multigraph(text: &str) -> Result<MultiGraph> {
    let (n, edges) = parse_pairs(text)?;
    MultiGraph::new(n, edges)
}

/// Reads `n m` followed by m arcs `u v` (meaning u -> v).
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let (n, arcs) = parse_pairs(text)?;
    Digraph::new(n, arcs)
}

pub fn write_multigraph(g: &MultiGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("{} {}\n", d.vertex_count(), d.arc_count());
    for &(u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn digraph_to_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph {\n");
    for &(u, v) in d.arcs() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// True iff `d` is an orientation of `g`: same order, and a bijection between
/// arcs and edges matching endpoint sets (parallel edges compare as a multiset).
pub fn is_orientation_of(d: &Digraph, g: &MultiGraph) -> bool {
    if d.vertex_count() != g.vertex_count() || d.arc_count() != g.edge_count() {
        return false;
    }
    let normalize = |pairs: Vec<(usize, usize)>| {
        let mut v: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        v.sort_unstable();
        v
    };
    normalize(d.arcs().to_vec()) == normalize(g.edges().to_vec())
}
