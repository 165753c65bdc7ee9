//! Undirected weighted simple graphs with dense node ids.
//!
//! Input files use arbitrary string tokens for nodes; tokens are remapped
//! to `0..n-1` in order of first appearance and the mapping is kept so
//! every output can be written back in terms of the original tokens.

use std::collections::HashMap;
use std::io::BufRead;

use crate::error::{Error, Result};

/// One undirected edge `(u, v)` with positive weight, stored in the
/// orientation it was first seen in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

/// Undirected weighted simple graph.
///
/// Invariants: no self-loops, each unordered pair appears at most once,
/// all weights strictly positive, `degrees[u]` is the sum of incident
/// edge weights. Immutable after construction.
#[derive(Debug, Clone)]
pub struct Graph {
    tokens: Vec<String>,
    edges: Vec<Edge>,
    /// Per node: (neighbor, edge weight, edge id), sorted by neighbor.
    adjacency: Vec<Vec<(usize, f64, usize)>>,
    degrees: Vec<f64>,
}

impl Graph {
    /// Parse a whitespace-separated edge list: `u v` or `u v w` per line,
    /// `#` starts a comment line. Duplicate orientations of the same pair
    /// are merged; conflicting duplicate weights are rejected.
    pub fn load_edge_list<R: BufRead>(reader: R, weighted: bool, source: &str) -> Result<Graph> {
        let mut tokens: Vec<String> = Vec::new();
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut edges: Vec<Edge> = Vec::new();
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();

        let mut intern = |tok: &str, tokens: &mut Vec<String>| -> usize {
            if let Some(&id) = ids.get(tok) {
                id
            } else {
                let id = tokens.len();
                tokens.push(tok.to_string());
                ids.insert(tok.to_string(), id);
                id
            }
        };

        for (lineno, line) in reader.lines().enumerate() {
            let lineno = lineno + 1;
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let w = match (fields.len(), weighted) {
                (2, _) => 1.0,
                (3, true) => fields[2].parse::<f64>().map_err(|_| {
                    Error::parse(source, lineno, format!("bad weight {:?}", fields[2]))
                })?,
                (3, false) => {
                    return Err(Error::parse(
                        source,
                        lineno,
                        "weight column present but input declared unweighted",
                    ));
                }
                (k, _) => {
                    return Err(Error::parse(source, lineno, format!("expected 2 or 3 fields, got {k}")));
                }
            };
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::parse(source, lineno, format!("non-positive weight {w}")));
            }
            if fields[0] == fields[1] {
                return Err(Error::parse(source, lineno, format!("self-loop at {:?}", fields[0])));
            }
            let u = intern(fields[0], &mut tokens);
            let v = intern(fields[1], &mut tokens);
            let key = (u.min(v), u.max(v));
            if let Some(&eid) = seen.get(&key) {
                if (edges[eid].w - w).abs() > 0.0 {
                    return Err(Error::parse(
                        source,
                        lineno,
                        format!(
                            "duplicate edge ({}, {}) with conflicting weight {} (was {})",
                            fields[0], fields[1], w, edges[eid].w
                        ),
                    ));
                }
                continue; // duplicate orientation, merged
            }
            seen.insert(key, edges.len());
            edges.push(Edge { u, v, w });
        }

        if edges.is_empty() {
            return Err(Error::parse(source, 0, "no edges in input"));
        }
        Ok(Graph::from_parts(tokens, edges))
    }

    /// Build from dense-id edges; `n` may exceed the largest endpoint to
    /// retain isolated nodes. Intended for fixtures and generated graphs.
    pub fn from_edges(n: usize, raw: &[(usize, usize, f64)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(raw.len());
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        for &(u, v, w) in raw {
            if u >= n || v >= n {
                return Err(Error::NodeOutOfRange(u.max(v), n));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at node {u}")));
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidInput(format!("non-positive weight {w}")));
            }
            if seen.insert((u.min(v), u.max(v)), ()).is_some() {
                return Err(Error::InvalidInput(format!("duplicate edge ({u}, {v})")));
            }
            edges.push(Edge { u, v, w });
        }
        if edges.is_empty() {
            return Err(Error::InvalidInput("graph has no edges".into()));
        }
        let tokens = (0..n).map(|i| i.to_string()).collect();
        Ok(Graph::from_parts(tokens, edges))
    }

    fn from_parts(tokens: Vec<String>, edges: Vec<Edge>) -> Graph {
        let n = tokens.len();
        let mut adjacency: Vec<Vec<(usize, f64, usize)>> = vec![Vec::new(); n];
        let mut degrees = vec![0.0f64; n];
        for (eid, e) in edges.iter().enumerate() {
            adjacency[e.u].push((e.v, e.w, eid));
            adjacency[e.v].push((e.u, e.w, eid));
            degrees[e.u] += e.w;
            degrees[e.v] += e.w;
        }
        for adj in &mut adjacency {
            adj.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        }
        let isolated = degrees.iter().filter(|&&d| d == 0.0).count();
        if isolated > 0 {
            log::warn!("{isolated} isolated node(s): retained in the graph, absent from the line graph");
        }
        Graph {
            tokens,
            edges,
            adjacency,
            degrees,
        }
    }

    pub fn node_count(&self) -> usize {
        self.tokens.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, eid: usize) -> &Edge {
        &self.edges[eid]
    }

    /// Neighbors of `u` as `(neighbor, weight, edge id)`, sorted by neighbor.
    pub fn neighbors(&self, u: usize) -> &[(usize, f64, usize)] {
        &self.adjacency[u]
    }

    /// Number of incident edges (combinatorial degree).
    pub fn incident_count(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    /// Sum of incident edge weights; 0 for an isolated node.
    pub fn degree(&self, u: usize) -> Result<f64> {
        self.degrees
            .get(u)
            .copied()
            .ok_or(Error::NodeOutOfRange(u, self.node_count()))
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    pub fn token(&self, u: usize) -> &str {
        &self.tokens[u]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn node_id(&self, token: &str) -> Option<usize> {
        self.tokens.iter().position(|t| t == token)
    }
}

/// Optional per-node community labels used only by the evaluation
/// protocols. Label tokens are remapped to a contiguous `0..k-1` range in
/// order of first appearance.
#[derive(Debug, Clone)]
pub struct NodeLabels {
    labels: Vec<Option<usize>>,
    names: Vec<String>,
}

impl NodeLabels {
    /// Parse a `node<TAB>label` file against an already loaded graph.
    pub fn load<R: BufRead>(reader: R, graph: &Graph, source: &str) -> Result<NodeLabels> {
        let mut ids: HashMap<String, usize> = HashMap::new();
        for (u, tok) in graph.tokens().iter().enumerate() {
            ids.insert(tok.clone(), u);
        }
        let mut labels: Vec<Option<usize>> = vec![None; graph.node_count()];
        let mut names: Vec<String> = Vec::new();
        let mut name_ids: HashMap<String, usize> = HashMap::new();

        for (lineno, line) in reader.lines().enumerate() {
            let lineno = lineno + 1;
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::parse(source, lineno, format!("expected 2 fields, got {}", fields.len())));
            }
            let &u = ids
                .get(fields[0])
                .ok_or_else(|| Error::parse(source, lineno, format!("unknown node {:?}", fields[0])))?;
            let label = *name_ids.entry(fields[1].to_string()).or_insert_with(|| {
                names.push(fields[1].to_string());
                names.len() - 1
            });
            labels[u] = Some(label);
        }
        Ok(NodeLabels { labels, names })
    }

    pub fn from_dense(labels: Vec<usize>) -> NodeLabels {
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        NodeLabels {
            labels: labels.into_iter().map(Some).collect(),
            names: (0..k).map(|i| i.to_string()).collect(),
        }
    }

    pub fn get(&self, u: usize) -> Option<usize> {
        self.labels.get(u).copied().flatten()
    }

    pub fn class_count(&self) -> usize {
        self.names.len()
    }

    pub fn class_name(&self, label: usize) -> &str {
        &self.names[label]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn load(text: &str, weighted: bool) -> Result<Graph> {
        Graph::load_edge_list(Cursor::new(text), weighted, "test")
    }

    #[test]
    fn parses_and_dedups_orientations() {
        let g = load("a b\nb a\n", false).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_self_loop_with_line_number() {
        let err = load("a b\na a\n", false).unwrap_err();
        match err {
            Error::Parse { line, ref msg, .. } => {
                assert_eq!(line, 2);
                assert!(msg.contains("self-loop"), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_non_positive_weight() {
        assert!(load("a b 0\n", true).is_err());
        assert!(load("a b -1.5\n", true).is_err());
        assert!(load("a b nan\n", true).is_err());
    }

    #[test]
    fn rejects_empty_stream() {
        assert!(load("", false).is_err());
        assert!(load("# only comments\n\n", false).is_err());
    }

    #[test]
    fn rejects_conflicting_duplicate_weight() {
        assert!(load("a b 1.0\nb a 2.0\n", true).is_err());
        assert!(load("a b 1.5\nb a 1.5\n", true).unwrap().edge_count() == 1);
    }

    #[test]
    fn degree_is_sum_of_incident_weights() {
        let g = load("a b 0.5\na c 1.5\n", true).unwrap();
        assert_eq!(g.degree(0).unwrap(), 2.0);
        assert_eq!(g.degree(1).unwrap(), 0.5);
        assert!(g.degree(7).is_err());

        // triangle, unweighted
        let k3 = load("a b\nb c\nc a\n", false).unwrap();
        for u in 0..3 {
            assert_eq!(k3.degree(u).unwrap(), 2.0);
        }
    }

    #[test]
    fn isolated_node_has_zero_degree() {
        let g = Graph::from_edges(3, &[(0, 1, 1.0)]).unwrap();
        assert_eq!(g.degree(2).unwrap(), 0.0);
        assert!(g.neighbors(2).is_empty());
    }

    #[test]
    fn handshake_lemma() {
        let g = load("a b 2.0\nb c 0.5\nc a 1.0\nc d 3.0\n", true).unwrap();
        let degree_sum: f64 = (0..g.node_count()).map(|u| g.degree(u).unwrap()).sum();
        let weight_sum: f64 = g.edges().iter().map(|e| e.w).sum();
        assert!((degree_sum - 2.0 * weight_sum).abs() < 1e-12);
    }

    #[test]
    fn karate_fixture_has_expected_size() {
        let bytes = include_bytes!("../fixtures/karate.edges");
        let g = Graph::load_edge_list(Cursor::new(&bytes[..]), false, "karate.edges").unwrap();
        assert_eq!(g.node_count(), 34);
        assert_eq!(g.edge_count(), 78);
    }

    #[test]
    fn node_labels_remap_to_contiguous_ids() {
        let g = load("a b\nb c\n", false).unwrap();
        let labels =
            NodeLabels::load(Cursor::new("a red\nb blue\nc red\n"), &g, "labels").unwrap();
        assert_eq!(labels.class_count(), 2);
        assert_eq!(labels.get(0), Some(0));
        assert_eq!(labels.get(1), Some(1));
        assert_eq!(labels.get(2), Some(0));
    }

    #[test]
    fn node_labels_reject_unknown_token() {
        let g = load("a b\n", false).unwrap();
        assert!(NodeLabels::load(Cursor::new("z 1\n"), &g, "labels").is_err());
    }
}
