//! Line-oriented text formats and the preset pattern library.
//!
//! Graph files start with a header `n m` followed by `m` edge lines `u v`
//! over the ids `0..n`. Lines starting with `#` and blank lines are skipped.
//!
//! ```
//! use secluded::io::{parse_graph, write_graph};
//!
//! let g = parse_graph("# a path\n3 2\n0 1\n1 2\n")?;
//! assert_eq!(g.size(), 2);
//! assert_eq!(write_graph(&g)?, "3 2\n0 1\n1 2\n");
//! # Ok::<(), secluded::Error>(())
//! ```

use std::collections::BTreeMap;
use std::fs;

use crate::enumerator::Candidate;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::subiso::ForbiddenFamily;

pub const PRESETS: [&str; 11] = [
    "k2", "p3", "p4", "k3", "c4", "c5", "claw", "paw", "diamond", "k4", "2k2",
];

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair<A, B>(line: usize, text: &str, what: &str) -> Result<(A, B)>
where
    A: std::str::FromStr,
    B: std::str::FromStr,
{
    let mut fields = text.split_whitespace();
    let bad = || Error::parse(line, format!("expected {what}, found {text:?}"));
    let a = fields.next().and_then(|f| f.parse().ok()).ok_or_else(bad)?;
    let b = fields.next().and_then(|f| f.parse().ok()).ok_or_else(bad)?;
    if fields.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header \"n m\""))?;
    let (n, m): (usize, usize) = parse_pair(hline, header, "header \"n m\"")?;
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    let mut last = hline;
    for (line, edge) in lines {
        last = line;
        let (u, v): (Vertex, Vertex) = parse_pair(line, edge, "edge \"u v\"")?;
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("vertex id out of range 0..{n}")));
        }
        if g.size() == m {
            return Err(Error::parse(
                line,
                format!("more than the {m} edges announced"),
            ));
        }
        g.add_edge(u, v)
            .map_err(|e| Error::parse(line, e.to_string()))?;
    }
    if g.size() != m {
        return Err(Error::parse(
            last,
            format!("header announces {m} edges, found {}", g.size()),
        ));
    }
    Ok(g)
}

pub fn read_graph(path: &str) -> Result<Graph> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::invalid(format!("cannot read {path}: {e}")))?;
    parse_graph(&text).map_err(|e| Error::invalid(format!("{path}: {e}")))
}

/// Requires the ids to be exactly `0..n`.
pub fn write_graph(g: &Graph) -> Result<String> {
    if g.id_bound() != g.order() {
        return Err(Error::invalid("graph ids must be 0..n to be written"));
    }
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    Ok(out)
}

/// Comma-separated ids; the empty string is the empty set.
pub fn parse_vertex_list(text: &str) -> Result<VertexSet> {
    text.split(',')
        .map(str::trim)
        .filter(|f| !f.is_empty())
        .map(|f| {
            f.parse()
                .map_err(|_| Error::invalid(format!("not a vertex id: {f:?}")))
        })
        .collect()
}

pub fn preset(name: &str) -> Option<Graph> {
    let g = match name {
        "k2" => Graph::path(2),
        "p3" => Graph::path(3),
        "p4" => Graph::path(4),
        "k3" => Graph::complete(3),
        "c4" => Graph::cycle(4),
        "c5" => Graph::cycle(5),
        "claw" => Graph::star(3),
        "k4" => Graph::complete(4),
        // triangle 0,1,2 with pendant 3 on 0
        "paw" => Graph::from_edges(0..4, [(0, 1), (0, 2), (1, 2), (0, 3)]).ok()?,
        // K4 minus the edge 2-3
        "diamond" => Graph::from_edges(0..4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).ok()?,
        "2k2" => Graph::path(2).disjoint_union(&Graph::path(2)),
        _ => return None,
    };
    Some(g)
}

/// Comma-separated preset names and `@file` references; `empty` is `F = ∅`.
pub fn parse_family(spec: &str) -> Result<ForbiddenFamily> {
    let tokens: Vec<&str> = spec
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect();
    if tokens == ["empty"] {
        return Ok(ForbiddenFamily::empty());
    }
    if tokens.is_empty() {
        return Err(Error::invalid(
            "empty family spec; write \"empty\" for no patterns",
        ));
    }
    let mut patterns = Vec::with_capacity(tokens.len());
    for token in tokens {
        let g = match token.strip_prefix('@') {
            Some(path) => read_graph(path)?,
            None => preset(&token.to_ascii_lowercase()).ok_or_else(|| {
                Error::invalid(format!(
                    "unknown pattern {token:?}; known: {}",
                    PRESETS.join(", ")
                ))
            })?,
        };
        patterns.push(g);
    }
    ForbiddenFamily::new(&patterns)
}

/// `v w` lines; vertices of `g` without a line get weight 1.
pub fn parse_weights(text: &str, g: &Graph) -> Result<BTreeMap<Vertex, u64>> {
    let mut weights: BTreeMap<Vertex, u64> = g.vertices().map(|v| (v, 1)).collect();
    let mut seen = VertexSet::new();
    for (line, entry) in content_lines(text) {
        let (v, w): (Vertex, u64) = parse_pair(line, entry, "weight line \"v w\"")?;
        if !g.contains(v) {
            return Err(Error::parse(line, format!("unknown vertex {v}")));
        }
        if w == 0 {
            return Err(Error::parse(line, "weights must be positive"));
        }
        if !seen.insert(v) {
            return Err(Error::parse(line, format!("vertex {v} weighted twice")));
        }
        weights.insert(v, w);
    }
    Ok(weights)
}

/// `C=<ids> N=<ids> |N|=<int>`
pub fn format_candidate(c: &Candidate) -> String {
    format!("C={} N={} |N|={}", c.members, c.boundary, c.boundary_size)
}
