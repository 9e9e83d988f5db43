//! Edge-list text format: loading with label indexing and load statistics,
//! plus serialization back to text.
//!
//! A data line holds exactly two whitespace-separated vertex tokens
//! (source, target); lines starting with `#` or `%` and blank lines are
//! skipped. Labels are arbitrary non-whitespace strings and are preserved;
//! internally vertices get dense indices in first-appearance order.

use motifcensus_core::graph::DirectedGraph;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("input contains no edges")]
    Empty,
}

/// What loading did to the raw text.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub n: u32,
    /// Ordered pairs kept (a bidirected pair counts as two).
    pub m: u64,
    pub dropped_self_loops: u64,
    pub dropped_duplicates: u64,
    pub isolated_removed: u32,
}

/// Parses edge-list text. Zero-degree vertices (possible when a vertex
/// appears only in self-loops) are removed unless `keep_isolated` is set.
pub fn parse_edge_list(
    text: &str,
    keep_isolated: bool,
) -> Result<(DirectedGraph, LoadReport), LoadError> {
    let mut index: HashMap<&str, u32> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(LoadError::Parse {
                    line: lineno + 1,
                    msg: format!("expected two vertex tokens, got {line:?}"),
                })
            }
        };
        let mut ids = [0u32; 2];
        for (slot, tok) in ids.iter_mut().zip([a, b]) {
            *slot = match index.get(tok) {
                Some(&i) => i,
                None => {
                    let i = labels.len() as u32;
                    labels.push(tok.to_string());
                    index.insert(tok, i);
                    i
                }
            };
        }
        pairs.push((ids[0], ids[1]));
    }
    let (mut g, stats) = DirectedGraph::from_pairs(labels, pairs);
    let mut report = LoadReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        dropped_self_loops: stats.dropped_self_loops,
        dropped_duplicates: stats.dropped_duplicates,
        isolated_removed: 0,
    };
    if g.edge_count() == 0 {
        return Err(LoadError::Empty);
    }
    if !keep_isolated {
        let isolated: Vec<u32> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).collect();
        if !isolated.is_empty() {
            let mut remap = vec![u32::MAX; g.vertex_count() as usize];
            let mut kept_labels = Vec::new();
            for v in 0..g.vertex_count() {
                if g.degree(v) > 0 {
                    remap[v as usize] = kept_labels.len() as u32;
                    kept_labels.push(g.label(v).to_string());
                }
            }
            let pairs: Vec<(u32, u32)> = g
                .edges()
                .iter()
                .map(|&(u, v)| (remap[u as usize], remap[v as usize]))
                .collect();
            g = DirectedGraph::from_pairs(kept_labels, pairs).0;
            report.isolated_removed = isolated.len() as u32;
            report.n = g.vertex_count();
        }
    }
    Ok((g, report))
}

pub fn load_edge_list(
    path: &Path,
    keep_isolated: bool,
) -> Result<(DirectedGraph, LoadReport), LoadError> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text, keep_isolated)
}

/// Serializes a graph back to edge-list text with original labels, one
/// ordered pair per line in sorted index order.
pub fn to_edge_list(g: &DirectedGraph) -> String {
    let mut out = String::new();
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{}\t{}", g.label(u), g.label(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_directions_and_indexing() {
        let (g, rep) = parse_edge_list("0 1\n1 0\n0 2\n", false).unwrap();
        assert_eq!(rep.n, 3);
        assert_eq!(g.bi_nbrs(0), &[1]);
        assert_eq!(g.out_nbrs(0), &[2]);
        assert_eq!(g.in_nbrs(2), &[0]);
    }

    #[test]
    fn comments_and_labels() {
        let (g, rep) = parse_edge_list("a b\nb a\n# c\n% d\n\n", false).unwrap();
        assert_eq!(rep.n, 2);
        assert_eq!(g.bi_nbrs(0), &[1]);
        assert_eq!(g.label(0), "a");
        assert_eq!(g.label(1), "b");
    }

    #[test]
    fn dedup_and_self_loop_counts() {
        let (g, rep) = parse_edge_list("0 0\n0 1\n0 1\n", false).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(rep.dropped_self_loops, 1);
        assert_eq!(rep.dropped_duplicates, 1);
        assert_eq!(rep.n, 2);
    }

    #[test]
    fn isolated_vertex_removal() {
        // "c" only appears in a self-loop, so it ends up isolated
        let (g, rep) = parse_edge_list("a b\nc c\n", false).unwrap();
        assert_eq!(rep.n, 2);
        assert_eq!(rep.isolated_removed, 1);
        assert_eq!(g.labels(), &["a".to_string(), "b".to_string()]);

        let (g2, rep2) = parse_edge_list("a b\nc c\n", true).unwrap();
        assert_eq!(rep2.n, 3);
        assert_eq!(rep2.isolated_removed, 0);
        assert_eq!(g2.degree(2), 0);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_edge_list("a b\nonly_one_token\n", false).unwrap_err();
        match err {
            LoadError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("wrong error: {other}"),
        }
        let err = parse_edge_list("a b c\n", false).unwrap_err();
        assert!(matches!(err, LoadError::Parse { line: 1, .. }));
    }

    #[test]
    fn empty_graph_is_an_error() {
        assert!(matches!(parse_edge_list("# nothing\n", false), Err(LoadError::Empty)));
        assert!(matches!(parse_edge_list("x x\n", false), Err(LoadError::Empty)));
    }

    #[test]
    fn round_trip_preserves_graph() {
        let (g, _) = parse_edge_list("a b\nb a\nb c\nd a\n", false).unwrap();
        let (h, _) = parse_edge_list(&to_edge_list(&g), false).unwrap();
        assert_eq!(g.vertex_count(), h.vertex_count());
        assert_eq!(g.labels(), h.labels());
        assert_eq!(g.edges(), h.edges());
    }
}
