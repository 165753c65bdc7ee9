//! Hop-count closeness and betweenness centrality.
//!
//! Shortest paths are unweighted (hop counts) even on weighted graphs;
//! closeness is component-local, betweenness is unnormalized with each
//! unordered pair counted once.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Component-local closeness: `(reachable - 1) / sum of distances`,
/// 0 for isolated nodes. Values lie in `[0, 1]`.
pub fn closeness_centrality(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut out = vec![0.0; n];
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        queue.push_back(s);
        let mut reachable = 0usize;
        let mut total = 0usize;
        while let Some(u) = queue.pop_front() {
            reachable += 1;
            total += dist[u];
            for &(v, _, _) in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if reachable > 1 {
            out[s] = (reachable - 1) as f64 / total as f64;
        }
    }
    out
}

/// Brandes betweenness accumulation over hop-count shortest paths.
/// Each unordered pair contributes once.
pub fn betweenness_centrality(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut betweenness = vec![0.0f64; n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![i64::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];

    for s in 0..n {
        sigma.fill(0.0);
        dist.fill(i64::MAX);
        delta.fill(0.0);
        for p in &mut preds {
            p.clear();
        }
        sigma[s] = 1.0;
        dist[s] = 0;
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &(v, _, _) in g.neighbors(u) {
                if dist[v] == i64::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
                if dist[v] == dist[u] + 1 {
                    sigma[v] += sigma[u];
                    preds[v].push(u);
                }
            }
        }
        for &w in order.iter().rev() {
            for &p in &preds[w] {
                delta[p] += sigma[p] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                betweenness[w] += delta[w];
            }
        }
    }
    // The source loop visits each unordered pair twice.
    for b in &mut betweenness {
        *b /= 2.0;
    }
    betweenness
}
