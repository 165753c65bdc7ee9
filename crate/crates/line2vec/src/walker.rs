//! Walk corpus generation over the weighted line graph.
//!
//! Walks are second-order (p, q) biased: the next step distribution is the
//! arc weight divided by `p` when returning to the previous node, by 1 when
//! the destination is adjacent to the previous node, and by `q` otherwise.
//! First steps are plain weight-proportional.
//!
//! Each (start node, repeat) walk draws from its own seeded generator, so
//! corpora are identical whether walks are generated sequentially or in
//! parallel.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::alias::AliasTable;
use crate::error::{Error, Result};
use crate::line_graph::LineGraph;

/// Walk and window hyper-parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkConfig {
    pub walks_per_node: usize,
    pub walk_length: usize,
    pub return_param: f64,
    pub inout_param: f64,
    pub window: usize,
    pub seed: u64,
}

impl Default for WalkConfig {
    fn default() -> Self {
        WalkConfig {
            walks_per_node: 10,
            walk_length: 80,
            return_param: 1.0,
            inout_param: 1.0,
            window: 10,
            seed: 1,
        }
    }
}

impl WalkConfig {
    pub fn validate(&self) -> Result<()> {
        if self.walks_per_node == 0 || self.walk_length == 0 || self.window == 0 {
            return Err(Error::InvalidConfig(
                "walks_per_node, walk_length and window must be positive".into(),
            ));
        }
        if !(self.return_param > 0.0) || !(self.inout_param > 0.0) {
            return Err(Error::InvalidConfig("p and q must be positive".into()));
        }
        if self.window > self.walk_length - 1 {
            return Err(Error::InvalidConfig(format!(
                "window {} must be <= walk_length - 1 = {}",
                self.window,
                self.walk_length - 1
            )));
        }
        Ok(())
    }
}

enum SecondOrder {
    /// `tables[src][arc_idx]`: distribution over the out-arcs of
    /// `arcs[src][arc_idx].dst`, biased with previous node `src`.
    Precomputed(Vec<Vec<AliasTable>>),
    /// Rejection sampling from the first-order table: accept a candidate
    /// with probability bias / max_bias.
    OnTheFly { max_bias: f64 },
}

/// Alias tables for O(1) transition sampling.
pub struct TransitionTables {
    first: Vec<Option<AliasTable>>,
    second: SecondOrder,
    p: f64,
    q: f64,
}

/// Total number of alias entries full second-order precomputation needs.
pub fn second_order_table_entries(lg: &LineGraph) -> usize {
    (0..lg.node_count())
        .map(|src| {
            lg.out_arcs(src)
                .iter()
                .map(|a| lg.out_arcs(a.dst).len())
                .sum::<usize>()
        })
        .sum()
}

impl TransitionTables {
    /// Build tables. Precomputes one table per directed arc unless that
    /// would exceed `max_precomputed_entries`, in which case second-order
    /// steps fall back to on-the-fly rejection sampling.
    pub fn build(lg: &LineGraph, p: f64, q: f64, max_precomputed_entries: usize) -> TransitionTables {
        assert!(p > 0.0 && q > 0.0, "p and q must be positive");
        let first: Vec<Option<AliasTable>> = (0..lg.node_count())
            .map(|id| {
                let arcs = lg.out_arcs(id);
                if arcs.is_empty() {
                    None
                } else {
                    let weights: Vec<f64> = arcs.iter().map(|a| a.weight).collect();
                    Some(AliasTable::new(&weights))
                }
            })
            .collect();

        let second = if second_order_table_entries(lg) <= max_precomputed_entries {
            let tables: Vec<Vec<AliasTable>> = (0..lg.node_count())
                .into_par_iter()
                .map(|src| {
                    lg.out_arcs(src)
                        .iter()
                        .map(|arc| {
                            let weights: Vec<f64> = lg
                                .out_arcs(arc.dst)
                                .iter()
                                .map(|next| next.weight * bias(lg, src, next.dst, p, q))
                                .collect();
                            AliasTable::new(&weights)
                        })
                        .collect()
                })
                .collect();
            SecondOrder::Precomputed(tables)
        } else {
            SecondOrder::OnTheFly {
                max_bias: (1.0 / p).max(1.0).max(1.0 / q),
            }
        };

        TransitionTables { first, second, p, q }
    }

    /// Sample the first step out of `node`; `None` when the node has no
    /// out-arcs.
    pub fn sample_first<R: Rng + ?Sized>(&self, node: usize, rng: &mut R) -> Option<usize> {
        self.first[node].as_ref().map(|t| t.sample(rng))
    }

    /// Sample the next arc index out of `cur`, given that `cur` was
    /// entered from `prev` via `arcs[prev][arc_idx]`.
    pub fn sample_second<R: Rng + ?Sized>(
        &self,
        lg: &LineGraph,
        prev: usize,
        arc_idx: usize,
        rng: &mut R,
    ) -> usize {
        let cur = lg.out_arcs(prev)[arc_idx].dst;
        match &self.second {
            SecondOrder::Precomputed(tables) => tables[prev][arc_idx].sample(rng),
            SecondOrder::OnTheFly { max_bias } => {
                let table = self.first[cur].as_ref().expect("reached node must have out-arcs");
                loop {
                    let candidate = table.sample(rng);
                    let dst = lg.out_arcs(cur)[candidate].dst;
                    let b = bias(lg, prev, dst, self.p, self.q);
                    if rng.random::<f64>() * max_bias < b {
                        return candidate;
                    }
                }
            }
        }
    }

    /// Exact second-order transition distribution over the out-arcs of the
    /// node entered via `arcs[prev][arc_idx]`.
    pub fn second_order_distribution(&self, lg: &LineGraph, prev: usize, arc_idx: usize) -> Vec<f64> {
        let cur = lg.out_arcs(prev)[arc_idx].dst;
        let weights: Vec<f64> = lg
            .out_arcs(cur)
            .iter()
            .map(|next| next.weight * bias(lg, prev, next.dst, self.p, self.q))
            .collect();
        let total: f64 = weights.iter().sum();
        weights.into_iter().map(|w| w / total).collect()
    }
}

fn bias(lg: &LineGraph, prev: usize, dst: usize, p: f64, q: f64) -> f64 {
    if dst == prev {
        1.0 / p
    } else if lg.adjacent(dst, prev) {
        1.0
    } else {
        1.0 / q
    }
}

/// Sequences of line-node ids plus context-pair extraction.
#[derive(Debug, Clone)]
pub struct WalkCorpus {
    walks: Vec<Vec<u32>>,
}

impl WalkCorpus {
    pub fn walks(&self) -> &[Vec<u32>] {
        &self.walks
    }

    pub fn walk_count(&self) -> usize {
        self.walks.len()
    }

    /// `(center, context)` pairs: for each position i, all j != i with
    /// |i - j| <= window.
    pub fn context_pairs(&self, window: usize) -> Vec<(u32, u32)> {
        let mut pairs = Vec::new();
        for walk in &self.walks {
            for i in 0..walk.len() {
                let lo = i.saturating_sub(window);
                let hi = (i + window).min(walk.len() - 1);
                for j in lo..=hi {
                    if j != i {
                        pairs.push((walk[i], walk[j]));
                    }
                }
            }
        }
        pairs
    }

    /// Visit count per line-node (for the negative-sampling distribution).
    pub fn visit_counts(&self, node_count: usize) -> Vec<u64> {
        let mut counts = vec![0u64; node_count];
        for walk in &self.walks {
            for &v in walk {
                counts[v as usize] += 1;
            }
        }
        counts
    }

    /// One walk per line, space-separated line-node ids.
    pub fn dump<W: std::io::Write>(&self, mut out: W) -> Result<()> {
        for walk in &self.walks {
            let line: Vec<String> = walk.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn walk_seed(seed: u64, start: usize, rep: usize) -> u64 {
    mix64(seed ^ mix64((start as u64).wrapping_add(mix64(rep as u64 ^ 0x510e_527f_ade6_82d1))))
}

fn single_walk(lg: &LineGraph, tables: &TransitionTables, start: usize, length: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let mut walk = Vec::with_capacity(length);
    walk.push(start as u32);
    if length == 1 {
        return walk;
    }
    let Some(first_idx) = tables.sample_first(start, rng) else {
        return walk; // stuck: no out-arcs
    };
    let mut prev = start;
    let mut arc_idx = first_idx;
    walk.push(lg.out_arcs(prev)[arc_idx].dst as u32);
    while walk.len() < length {
        let next_idx = tables.sample_second(lg, prev, arc_idx, rng);
        let cur = lg.out_arcs(prev)[arc_idx].dst;
        walk.push(lg.out_arcs(cur)[next_idx].dst as u32);
        prev = cur;
        arc_idx = next_idx;
    }
    walk
}

/// Generate `walks_per_node` walks from every line-node. Deterministic for
/// a fixed seed regardless of `parallel`.
pub fn generate_walks(
    lg: &LineGraph,
    tables: &TransitionTables,
    cfg: &WalkConfig,
    parallel: bool,
) -> Result<WalkCorpus> {
    cfg.validate()?;
    let m = lg.node_count();
    let total = m * cfg.walks_per_node;
    let walk_of = |slot: usize| {
        let start = slot / cfg.walks_per_node;
        let rep = slot % cfg.walks_per_node;
        let mut rng = ChaCha8Rng::seed_from_u64(walk_seed(cfg.seed, start, rep));
        single_walk(lg, tables, start, cfg.walk_length, &mut rng)
    };
    let walks: Vec<Vec<u32>> = if parallel {
        (0..total).into_par_iter().map(walk_of).collect()
    } else {
        (0..total).map(walk_of).collect()
    };
    Ok(WalkCorpus { walks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::line_graph::build_line_graph;

    fn small_line_graph() -> (Graph, LineGraph) {
        // 5 nodes, enough structure for second-order sampling
        let g = Graph::from_edges(
            5,
            &[
                (0, 1, 1.0),
                (1, 2, 2.0),
                (2, 3, 1.0),
                (3, 0, 0.5),
                (1, 3, 1.0),
                (2, 4, 1.0),
            ],
        )
        .unwrap();
        let lg = build_line_graph(&g).unwrap();
        (g, lg)
    }

    #[test]
    fn single_out_arc_is_certain() {
        let g = Graph::from_edges(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let lg = build_line_graph(&g).unwrap();
        let tables = TransitionTables::build(&lg, 1.0, 1.0, usize::MAX);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..16 {
            assert_eq!(tables.sample_first(0, &mut rng), Some(0));
        }
    }

    #[test]
    fn unit_pq_reduces_to_first_order() {
        let (_, lg) = small_line_graph();
        let tables = TransitionTables::build(&lg, 1.0, 1.0, usize::MAX);
        for prev in 0..lg.node_count() {
            for arc_idx in 0..lg.out_arcs(prev).len() {
                let cur = lg.out_arcs(prev)[arc_idx].dst;
                let weights: Vec<f64> = lg.out_arcs(cur).iter().map(|a| a.weight).collect();
                let total: f64 = weights.iter().sum();
                let second = tables.second_order_distribution(&lg, prev, arc_idx);
                for (k, w) in weights.iter().enumerate() {
                    assert!(
                        (second[k] - w / total).abs() < 1e-12,
                        "second-order != first-order at ({prev}, {arc_idx}, {k})"
                    );
                }
            }
        }
    }

    #[test]
    fn rejection_sampling_matches_precomputed_distribution() {
        let (_, lg) = small_line_graph();
        let pre = TransitionTables::build(&lg, 0.5, 2.0, usize::MAX);
        let fly = TransitionTables::build(&lg, 0.5, 2.0, 0);
        assert!(matches!(fly.second, SecondOrder::OnTheFly { .. }));
        let prev = 0;
        let arc_idx = 0;
        let expected = pre.second_order_distribution(&lg, prev, arc_idx);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let n = 200_000usize;
        let mut counts = vec![0usize; expected.len()];
        for _ in 0..n {
            counts[fly.sample_second(&lg, prev, arc_idx, &mut rng)] += 1;
        }
        for (k, &p) in expected.iter().enumerate() {
            let sigma = (p * (1.0 - p) * n as f64).sqrt().max(1.0);
            let dev = (counts[k] as f64 - p * n as f64).abs();
            assert!(dev < 4.0 * sigma, "arc {k}: dev {dev} > 4 sigma {sigma}");
        }
    }

    #[test]
    fn walks_start_at_start_and_follow_arcs() {
        let (_, lg) = small_line_graph();
        let tables = TransitionTables::build(&lg, 1.0, 2.0, usize::MAX);
        let cfg = WalkConfig {
            walks_per_node: 3,
            walk_length: 12,
            window: 4,
            ..WalkConfig::default()
        };
        let corpus = generate_walks(&lg, &tables, &cfg, false).unwrap();
        assert_eq!(corpus.walk_count(), lg.node_count() * 3);
        for (slot, walk) in corpus.walks().iter().enumerate() {
            assert_eq!(walk[0] as usize, slot / 3);
            assert_eq!(walk.len(), 12);
            for step in walk.windows(2) {
                let (a, b) = (step[0] as usize, step[1] as usize);
                assert!(
                    lg.out_arcs(a).iter().any(|arc| arc.dst == b),
                    "transition {a}->{b} is not an arc"
                );
            }
        }
    }

    #[test]
    fn stuck_walks_truncate() {
        let g = Graph::from_edges(2, &[(0, 1, 1.0)]).unwrap();
        let lg = build_line_graph(&g).unwrap();
        let tables = TransitionTables::build(&lg, 1.0, 1.0, usize::MAX);
        let cfg = WalkConfig {
            walks_per_node: 4,
            walk_length: 10,
            window: 1,
            ..WalkConfig::default()
        };
        let corpus = generate_walks(&lg, &tables, &cfg, false).unwrap();
        assert_eq!(corpus.walk_count(), 4);
        for walk in corpus.walks() {
            assert_eq!(walk, &vec![0u32]);
        }
        assert!(corpus.context_pairs(1).is_empty());
    }

    #[test]
    fn fixed_seed_reproduces_corpus_and_parallel_agrees() {
        let (_, lg) = small_line_graph();
        let tables = TransitionTables::build(&lg, 0.5, 2.0, usize::MAX);
        let cfg = WalkConfig {
            walks_per_node: 5,
            walk_length: 20,
            window: 5,
            seed: 99,
            ..WalkConfig::default()
        };
        let a = generate_walks(&lg, &tables, &cfg, false).unwrap();
        let b = generate_walks(&lg, &tables, &cfg, false).unwrap();
        let c = generate_walks(&lg, &tables, &cfg, true).unwrap();
        assert_eq!(a.walks(), b.walks());
        assert_eq!(a.walks(), c.walks());
    }

    #[test]
    fn context_pairs_enumeration() {
        let corpus = WalkCorpus {
            walks: vec![vec![10, 11, 12]],
        };
        let pairs = corpus.context_pairs(1);
        assert_eq!(pairs, vec![(10, 11), (11, 10), (11, 12), (12, 11)]);

        let corpus = WalkCorpus {
            walks: vec![vec![0, 1, 2, 3]],
        };
        assert_eq!(corpus.context_pairs(2).len(), 10);

        let corpus = WalkCorpus { walks: vec![vec![5]] };
        assert!(corpus.context_pairs(3).is_empty());
    }

    #[test]
    fn every_line_node_is_visited_at_least_r_times() {
        let (_, lg) = small_line_graph();
        let tables = TransitionTables::build(&lg, 1.0, 1.0, usize::MAX);
        let cfg = WalkConfig {
            walks_per_node: 7,
            walk_length: 5,
            window: 2,
            ..WalkConfig::default()
        };
        let corpus = generate_walks(&lg, &tables, &cfg, false).unwrap();
        for (node, &count) in corpus.visit_counts(lg.node_count()).iter().enumerate() {
            assert!(count >= 7, "node {node} visited {count} < 7 times");
        }
    }

    #[test]
    fn chi_square_of_unit_pq_walk_transitions() {
        // With p = q = 1 the observed transition frequencies over 1e5
        // steps must match the first-order distribution: chi-square below
        // the 0.999 quantile (Wilson-Hilferty approximation).
        let (_, lg) = small_line_graph();
        let tables = TransitionTables::build(&lg, 1.0, 1.0, usize::MAX);
        let cfg = WalkConfig {
            walks_per_node: 20,
            walk_length: 1 + 100_000 / 20,
            window: 1,
            seed: 5,
            ..WalkConfig::default()
        };
        let corpus = generate_walks(&lg, &tables, &cfg, false).unwrap();

        let mut visits = vec![0f64; lg.node_count()];
        let mut observed: Vec<std::collections::HashMap<usize, f64>> =
            vec![std::collections::HashMap::new(); lg.node_count()];
        for walk in corpus.walks() {
            for step in walk.windows(2) {
                let (a, b) = (step[0] as usize, step[1] as usize);
                visits[a] += 1.0;
                *observed[a].entry(b).or_insert(0.0) += 1.0;
            }
        }
        let mut chi2 = 0.0;
        let mut df = 0i64;
        for a in 0..lg.node_count() {
            if visits[a] == 0.0 {
                continue;
            }
            let total: f64 = lg.out_arcs(a).iter().map(|arc| arc.weight).sum();
            df += lg.out_arcs(a).len() as i64 - 1;
            for arc in lg.out_arcs(a) {
                let expected = visits[a] * arc.weight / total;
                let obs = observed[a].get(&arc.dst).copied().unwrap_or(0.0);
                chi2 += (obs - expected).powi(2) / expected;
            }
        }
        let df = df as f64;
        let z = 3.090_232; // 0.999 normal quantile
        let quantile = df * (1.0 - 2.0 / (9.0 * df) + z * (2.0 / (9.0 * df)).sqrt()).powi(3);
        assert!(chi2 < quantile, "chi2 {chi2} >= 0.999 quantile {quantile} (df {df})");
    }
}
