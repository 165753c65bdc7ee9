//! Weighted line graph transformation.
//!
//! Every edge of the input graph becomes a line-node; two line-nodes are
//! adjacent iff their edges share an endpoint, so each original node of
//! combinatorial degree `d` induces a `d`-clique among its incident
//! line-nodes.
//!
//! Arc weights model a walk step: leaving line-node `(v_i, v_j)` through
//! the shared endpoint `v_j` toward `(v_j, v_k)` carries weight
//!
//! ```text
//! d_i / (d_i + d_j) * w_jk / (sum_{r in N(v_j)} w_jr - w_ij)
//! ```
//!
//! where degrees are weighted. The weight depends on the direction of
//! traversal, so arcs are stored directed; the undirected skeleton (arc
//! existence) is symmetric.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A node of the line graph, tagged with its originating edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineNode {
    pub u: usize,
    pub v: usize,
    /// Edge id in the original graph; equals the line-node id.
    pub edge_id: usize,
}

/// A directed weighted arc between line-nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineArc {
    pub dst: usize,
    pub weight: f64,
    /// The original node shared by the two edges, i.e. the endpoint the
    /// walk steps through.
    pub via: usize,
}

/// Weighted line graph with the edge-to-node bijection and the per-node
/// clique registry. Immutable after construction.
#[derive(Debug, Clone)]
pub struct LineGraph {
    nodes: Vec<LineNode>,
    /// Out-arcs per line-node, sorted by destination.
    arcs: Vec<Vec<LineArc>>,
    /// For each original node u, the line-node ids of its incident edges.
    cliques: Vec<Vec<usize>>,
    index: HashMap<(usize, usize), usize>,
}

/// Build the weighted line graph of `g`.
pub fn build_line_graph(g: &Graph) -> Result<LineGraph> {
    if g.edge_count() == 0 {
        return Err(Error::InvalidInput("cannot build the line graph of an edgeless graph".into()));
    }
    let m = g.edge_count();
    let mut nodes = Vec::with_capacity(m);
    let mut index = HashMap::with_capacity(m);
    for (eid, e) in g.edges().iter().enumerate() {
        nodes.push(LineNode {
            u: e.u,
            v: e.v,
            edge_id: eid,
        });
        index.insert((e.u.min(e.v), e.u.max(e.v)), eid);
    }

    let cliques: Vec<Vec<usize>> = (0..g.node_count())
        .map(|u| g.neighbors(u).iter().map(|&(_, _, eid)| eid).collect())
        .collect();

    let mut arcs: Vec<Vec<LineArc>> = vec![Vec::new(); m];
    for (eid, e) in g.edges().iter().enumerate() {
        for (i, j) in [(e.u, e.v), (e.v, e.u)] {
            // leave the edge (i, j) through endpoint j
            let continuation = g.degree(j)? - e.w;
            if g.incident_count(j) <= 1 {
                continue; // j offers no continuation
            }
            debug_assert!(continuation > 0.0);
            let endpoint_factor = g.degree(i)? / (g.degree(i)? + g.degree(j)?);
            for &(k, w_jk, eid_jk) in g.neighbors(j) {
                if k == i {
                    continue;
                }
                arcs[eid].push(LineArc {
                    dst: eid_jk,
                    weight: endpoint_factor * w_jk / continuation,
                    via: j,
                });
            }
        }
    }
    for out in &mut arcs {
        out.sort_unstable_by(|a, b| a.dst.cmp(&b.dst));
    }

    Ok(LineGraph {
        nodes,
        arcs,
        cliques,
        index,
    })
}

impl LineGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[LineNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &LineNode {
        &self.nodes[id]
    }

    /// Out-arcs of a line-node, sorted by destination.
    pub fn out_arcs(&self, id: usize) -> &[LineArc] {
        &self.arcs[id]
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.iter().map(Vec::len).sum()
    }

    /// Number of unordered adjacent line-node pairs; equals
    /// `sum_u d_u (d_u - 1) / 2` over combinatorial degrees.
    pub fn adjacency_count(&self) -> usize {
        self.arc_count() / 2
    }

    /// Line-node ids incident to original node `u` (a clique).
    pub fn clique(&self, u: usize) -> &[usize] {
        &self.cliques[u]
    }

    pub fn clique_count(&self) -> usize {
        self.cliques.len()
    }

    /// The line-node corresponding to edge `(u, v)` in either orientation.
    pub fn line_node_of(&self, u: usize, v: usize) -> Result<usize> {
        self.index
            .get(&(u.min(v), u.max(v)))
            .copied()
            .ok_or_else(|| Error::NotAnEdge(u.to_string(), v.to_string()))
    }

    /// Whether two line-nodes are adjacent in the undirected skeleton.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.arcs[a].binary_search_by(|arc| arc.dst.cmp(&b)).is_ok()
    }
}
