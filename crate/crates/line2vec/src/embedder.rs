//! Skip-gram embedding of the line graph under collective-homophily
//! sphere constraints, trained with penalty-method SGD.
//!
//! The objective over edge embeddings `X`, sphere centers `C` and radii
//! `R` is
//!
//! ```text
//! sum_v [ |N_S(v)| ln sum_neg exp(x_neg . x_v) - sum_ctx x_ctx . x_v ]
//!   + alpha sum_u R_u^2
//!   + lambda sum_u sum_{v in N(u)} g(||x_uv - c_u||^2 - R_u^2)
//!   + sum_u gamma_u g(-R_u)
//! ```
//!
//! with hinge `g(t) = max(t, 0)` (subgradient 0 at the kink). The sphere
//! and radius constraints are enforced by escalating `lambda` and the
//! per-node `gamma_u` whenever an epoch ends with violations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alias::AliasTable;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::line_graph::LineGraph;
use crate::walker::WalkCorpus;

/// Training hyper-parameters and the penalty schedule.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbedConfig {
    /// Embedding dimension K; must satisfy 2 <= K < m.
    pub dim: usize,
    /// Weight of the summed squared radii.
    pub alpha: f64,
    pub epochs: usize,
    /// Negatives drawn per context pair.
    pub negatives: usize,
    /// Exponent on corpus frequencies for the noise distribution.
    pub negative_power: f64,
    /// Linear learning-rate decay endpoints over all pair updates.
    pub lr_start: f64,
    pub lr_end: f64,
    pub lambda_init: f64,
    pub gamma_init: f64,
    /// Multiplier applied to lambda after an epoch whose spherical error
    /// exceeds `spherical_tol`.
    pub lambda_growth: f64,
    /// Multiplier applied to gamma_u after an epoch that ends with R_u < 0.
    pub gamma_growth: f64,
    /// Upper bound for both penalty parameters.
    pub penalty_cap: f64,
    pub spherical_tol: f64,
    pub seed: u64,
}

impl Default for EmbedConfig {
    fn default() -> Self {
        EmbedConfig {
            dim: 8,
            alpha: 0.1,
            epochs: 30,
            negatives: 5,
            negative_power: 0.75,
            lr_start: 0.025,
            lr_end: 1e-4,
            lambda_init: 0.1,
            gamma_init: 1.0,
            lambda_growth: 1.5,
            gamma_growth: 2.0,
            penalty_cap: 1e4,
            spherical_tol: 1e-3,
            seed: 1,
        }
    }
}

impl EmbedConfig {
    pub fn validate(&self, edge_count: usize) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::InvalidConfig(format!("dim {} must be >= 2", self.dim)));
        }
        if self.dim >= edge_count {
            return Err(Error::InvalidConfig(format!(
                "dim {} must be < edge count {}",
                self.dim, edge_count
            )));
        }
        if self.epochs == 0 || self.negatives == 0 {
            return Err(Error::InvalidConfig("epochs and negatives must be positive".into()));
        }
        for (name, v) in [
            ("alpha", self.alpha),
            ("lr_start", self.lr_start),
            ("lambda_init", self.lambda_init),
            ("gamma_init", self.gamma_init),
            ("penalty_cap", self.penalty_cap),
            ("spherical_tol", self.spherical_tol),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidConfig(format!("{name} must be positive, got {v}")));
            }
        }
        if self.lr_end < 0.0 || self.lr_end > self.lr_start {
            return Err(Error::InvalidConfig("lr_end must lie in [0, lr_start]".into()));
        }
        if self.lambda_growth < 1.0 || self.gamma_growth < 1.0 {
            return Err(Error::InvalidConfig("penalty growth factors must be >= 1".into()));
        }
        Ok(())
    }
}

/// All learnable state: edge embeddings (m x K, flat row-major), sphere
/// centers (n x K), radii (n), and the live penalty parameters.
#[derive(Debug, Clone)]
pub struct EmbeddingState {
    pub dim: usize,
    /// Row i embeds line-node i, i.e. edge i of the original graph.
    pub x: Vec<f64>,
    /// Row u is the sphere center of original node u.
    pub centers: Vec<f64>,
    pub radii: Vec<f64>,
    pub alpha: f64,
    pub lambda: f64,
    pub gamma: Vec<f64>,
}

#[inline]
fn row(m: &[f64], k: usize, i: usize) -> &[f64] {
    &m[i * k..(i + 1) * k]
}

#[inline]
fn row_mut(m: &mut [f64], k: usize, i: usize) -> &mut [f64] {
    &mut m[i * k..(i + 1) * k]
}

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

impl EmbeddingState {
    pub fn edge_count(&self) -> usize {
        self.x.len() / self.dim
    }

    pub fn node_count(&self) -> usize {
        self.radii.len()
    }

    pub fn embedding(&self, line_node: usize) -> &[f64] {
        row(&self.x, self.dim, line_node)
    }

    pub fn center(&self, node: usize) -> &[f64] {
        row(&self.centers, self.dim, node)
    }

    pub fn is_finite(&self) -> bool {
        self.x.iter().chain(&self.centers).chain(&self.radii).all(|v| v.is_finite())
    }
}

/// Feasible start: X uniform in [-0.5/K, 0.5/K], each center the mean of
/// its incident edge embeddings, each radius the max distance to the
/// center, so both penalty errors are exactly zero before the first step.
pub fn init_state(
    g: &Graph,
    lg: &LineGraph,
    cfg: &EmbedConfig,
) -> Result<EmbeddingState> {
    cfg.validate(lg.node_count())?;
    let k = cfg.dim;
    let m = lg.node_count();
    let n = g.node_count();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let half = 0.5 / k as f64;
    let x: Vec<f64> = (0..m * k).map(|_| rng.random_range(-half..half)).collect();

    let mut centers = vec![0.0f64; n * k];
    let mut radii = vec![0.0f64; n];
    for u in 0..n {
        let clique = lg.clique(u);
        if clique.is_empty() {
            continue;
        }
        let c = row_mut(&mut centers, k, u);
        for &ln in clique {
            axpy(1.0, row(&x, k, ln), c);
        }
        let inv = 1.0 / clique.len() as f64;
        for v in c.iter_mut() {
            *v *= inv;
        }
        radii[u] = clique
            .iter()
            .map(|&ln| {
                let d2: f64 = row(&x, k, ln)
                    .iter()
                    .zip(row(&centers, k, u))
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                d2.sqrt()
            })
            .fold(0.0, f64::max);
    }

    Ok(EmbeddingState {
        dim: k,
        x,
        centers,
        radii,
        alpha: cfg.alpha,
        lambda: cfg.lambda_init,
        gamma: vec![cfg.gamma_init; n],
    })
}

/// Noise distribution over line-nodes: corpus visit frequency raised to
/// `power`, with full support.
pub struct NegativeSampler {
    table: AliasTable,
    pub negatives_per_pair: usize,
}

impl NegativeSampler {
    pub fn from_corpus(
        corpus: &WalkCorpus,
        line_node_count: usize,
        negatives_per_pair: usize,
        power: f64,
    ) -> NegativeSampler {
        let counts = corpus.visit_counts(line_node_count);
        let weights: Vec<f64> = counts
            .iter()
            .map(|&c| (c.max(1) as f64).powf(power))
            .collect();
        NegativeSampler {
            table: AliasTable::new(&weights),
            negatives_per_pair,
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        self.table.sample(rng)
    }

    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut Vec<u32>) {
        out.clear();
        for _ in 0..self.negatives_per_pair {
            out.push(self.table.sample(rng) as u32);
        }
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.table.outcome_probabilities()
    }
}

/// Loss components, each already scaled by its multiplier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossComponents {
    pub skip_gram: f64,
    /// alpha * sum R_u^2
    pub radius: f64,
    /// lambda * total spherical hinge
    pub spherical: f64,
    /// sum_u gamma_u * g(-R_u)
    pub nonneg: f64,
}

impl LossComponents {
    pub fn total(&self) -> f64 {
        self.skip_gram + self.radius + self.spherical + self.nonneg
    }
}

/// Unscaled constraint-violation errors: (spherical, non-negative).
pub fn penalty_errors(state: &EmbeddingState, g: &Graph) -> (f64, f64) {
    let k = state.dim;
    let mut spherical = 0.0;
    for u in 0..g.node_count() {
        let c = row(&state.centers, k, u);
        let r2 = state.radii[u] * state.radii[u];
        for &(_, _, eid) in g.neighbors(u) {
            let d2: f64 = row(&state.x, k, eid)
                .iter()
                .zip(c)
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            spherical += (d2 - r2).max(0.0);
        }
    }
    let nonneg = state.radii.iter().map(|&r| (-r).max(0.0)).sum();
    (spherical, nonneg)
}

/// A context pair with its negatives pinned, for deterministic loss and
/// gradient evaluation.
pub type FixedPair = (u32, u32, Vec<u32>);

fn skip_gram_pair_loss(state: &EmbeddingState, center: usize, context: usize, negatives: &[u32]) -> f64 {
    let k = state.dim;
    let xc = row(&state.x, k, center);
    let mut max_dot = f64::NEG_INFINITY;
    let dots: Vec<f64> = negatives
        .iter()
        .map(|&nb| {
            let d = dot(xc, row(&state.x, k, nb as usize));
            max_dot = max_dot.max(d);
            d
        })
        .collect();
    let z: f64 = dots.iter().map(|d| (d - max_dot).exp()).sum();
    max_dot + z.ln() - dot(xc, row(&state.x, k, context))
}

fn constraint_loss(state: &EmbeddingState, g: &Graph) -> f64 {
    let (spherical, _) = penalty_errors(state, g);
    let radius: f64 = state.radii.iter().map(|&r| r * r).sum();
    let nonneg: f64 = state
        .radii
        .iter()
        .zip(&state.gamma)
        .map(|(&r, &gamma)| gamma * (-r).max(0.0))
        .sum();
    state.alpha * radius + state.lambda * spherical + nonneg
}

/// Full objective with pinned negatives; the deterministic path checked
/// against finite differences.
pub fn objective_fixed(state: &EmbeddingState, g: &Graph, pairs: &[FixedPair]) -> f64 {
    let sg: f64 = pairs
        .iter()
        .map(|(c, ctx, negs)| skip_gram_pair_loss(state, *c as usize, *ctx as usize, negs))
        .sum();
    sg + constraint_loss(state, g)
}

/// Analytic gradients of [`objective_fixed`] with respect to X, C and R.
#[derive(Debug, Clone)]
pub struct Gradients {
    pub x: Vec<f64>,
    pub centers: Vec<f64>,
    pub radii: Vec<f64>,
}

pub fn objective_gradients(state: &EmbeddingState, g: &Graph, pairs: &[FixedPair]) -> (f64, Gradients) {
    let k = state.dim;
    let mut grad = Gradients {
        x: vec![0.0; state.x.len()],
        centers: vec![0.0; state.centers.len()],
        radii: vec![0.0; state.radii.len()],
    };
    let mut loss = 0.0;

    let mut softmax = Vec::new();
    for (center, context, negatives) in pairs {
        let (center, context) = (*center as usize, *context as usize);
        let xc = row(&state.x, k, center);
        let mut max_dot = f64::NEG_INFINITY;
        let dots: Vec<f64> = negatives
            .iter()
            .map(|&nb| {
                let d = dot(xc, row(&state.x, k, nb as usize));
                max_dot = max_dot.max(d);
                d
            })
            .collect();
        let z: f64 = dots.iter().map(|d| (d - max_dot).exp()).sum();
        loss += max_dot + z.ln() - dot(xc, row(&state.x, k, context));

        softmax.clear();
        softmax.extend(dots.iter().map(|d| (d - max_dot).exp() / z));

        // d/dx_center = sum_i s_i x_neg_i - x_ctx
        for (i, &nb) in negatives.iter().enumerate() {
            let xn = row(&state.x, k, nb as usize).to_vec();
            axpy(softmax[i], &xn, row_mut(&mut grad.x, k, center));
            // d/dx_neg = s_i x_center
            axpy(softmax[i], xc, row_mut(&mut grad.x, k, nb as usize));
        }
        let x_ctx = row(&state.x, k, context).to_vec();
        axpy(-1.0, &x_ctx, row_mut(&mut grad.x, k, center));
        axpy(-1.0, xc, row_mut(&mut grad.x, k, context));
    }

    // alpha sum R^2 + gamma hinge
    for u in 0..state.radii.len() {
        grad.radii[u] += 2.0 * state.alpha * state.radii[u];
        if state.radii[u] < 0.0 {
            grad.radii[u] -= state.gamma[u];
        }
    }

    // lambda sum g(||x_uv - c_u||^2 - R_u^2)
    for u in 0..g.node_count() {
        let r = state.radii[u];
        for &(_, _, eid) in g.neighbors(u) {
            let d: Vec<f64> = row(&state.x, k, eid)
                .iter()
                .zip(row(&state.centers, k, u))
                .map(|(a, b)| a - b)
                .collect();
            let s = dot(&d, &d) - r * r;
            if s > 0.0 {
                axpy(2.0 * state.lambda, &d, row_mut(&mut grad.x, k, eid));
                axpy(-2.0 * state.lambda, &d, row_mut(&mut grad.centers, k, u));
                grad.radii[u] -= 2.0 * state.lambda * r;
            }
        }
    }

    loss += constraint_loss(state, g);
    (loss, grad)
}

/// Stochastic evaluation of the full objective: negatives are drawn fresh
/// per context pair from `sampler`, seeded by `seed`.
pub fn total_loss(
    state: &EmbeddingState,
    g: &Graph,
    pairs: &[(u32, u32)],
    sampler: &NegativeSampler,
    seed: u64,
) -> Result<(f64, LossComponents)> {
    if pairs.is_empty() {
        return Err(Error::InvalidInput("empty corpus: no context pairs".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut negs = Vec::with_capacity(sampler.negatives_per_pair);
    let mut skip_gram = 0.0;
    for &(center, context) in pairs {
        sampler.draw(&mut rng, &mut negs);
        skip_gram += skip_gram_pair_loss(state, center as usize, context as usize, &negs);
    }
    let (spherical_err, _) = penalty_errors(state, g);
    let radius: f64 = state.radii.iter().map(|&r| r * r).sum();
    let nonneg: f64 = state
        .radii
        .iter()
        .zip(&state.gamma)
        .map(|(&r, &gamma)| gamma * (-r).max(0.0))
        .sum();
    let components = LossComponents {
        skip_gram,
        radius: state.alpha * radius,
        spherical: state.lambda * spherical_err,
        nonneg,
    };
    Ok((components.total(), components))
}

/// Per-epoch trace record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpochRecord {
    pub skip_gram_loss: f64,
    pub radius_loss: f64,
    pub spherical_error: f64,
    pub nonneg_error: f64,
    pub lambda: f64,
    pub mean_gamma: f64,
}

#[derive(Debug, Clone, Default)]
pub struct TrainTrace {
    pub epochs: Vec<EpochRecord>,
}

/// Linear decay from `lr_start` to `lr_end` over the planned pair updates.
pub struct LrSchedule {
    lr_start: f64,
    lr_end: f64,
    total: u64,
    step: u64,
}

impl LrSchedule {
    pub fn new(lr_start: f64, lr_end: f64, total_steps: u64) -> LrSchedule {
        LrSchedule {
            lr_start,
            lr_end,
            total: total_steps.max(1),
            step: 0,
        }
    }

    pub fn current(&self) -> f64 {
        let t = (self.step as f64 / self.total as f64).min(1.0);
        self.lr_start + (self.lr_end - self.lr_start) * t
    }

    pub fn advance(&mut self) -> f64 {
        let lr = self.current();
        self.step += 1;
        lr
    }
}

/// One pass over shuffled context pairs with a full constraint sweep
/// interleaved. Pair updates apply the sampled skip-gram gradients; each
/// constraint item (u, incident edge) applies the exact subgradient of its
/// sphere hinge plus the alpha/gamma radius terms scaled by 1/d_u so that
/// one sweep accumulates their exact gradient once.
#[allow(clippy::too_many_arguments)]
pub fn sgd_epoch(
    state: &mut EmbeddingState,
    g: &Graph,
    pairs: &[(u32, u32)],
    constraint_items: &[(u32, u32)],
    sampler: &NegativeSampler,
    schedule: &mut LrSchedule,
    rng: &mut ChaCha8Rng,
) -> Result<EpochRecord> {
    let k = state.dim;
    let mut order: Vec<u32> = (0..pairs.len() as u32).collect();
    order.shuffle(rng);
    let mut sweep: Vec<u32> = (0..constraint_items.len() as u32).collect();
    sweep.shuffle(rng);

    let mut negs: Vec<u32> = Vec::with_capacity(sampler.negatives_per_pair);
    let mut center_old = vec![0.0f64; k];
    let mut grad_center = vec![0.0f64; k];
    let mut softmax: Vec<f64> = Vec::with_capacity(sampler.negatives_per_pair);
    let mut sg_loss = 0.0;

    let mut constraint_step = |state: &mut EmbeddingState, item: (u32, u32), lr: f64| {
        let (u, eid) = (item.0 as usize, item.1 as usize);
        let r = state.radii[u];
        let mut s = -r * r;
        let mut diff = [0.0f64; 2]; // reused length check below
        debug_assert!(diff.len() <= 2);
        // diff must hold k entries; use a scratch vec on the stack-free path
        let mut d = vec![0.0f64; k];
        for (di, (a, b)) in d
            .iter_mut()
            .zip(row(&state.x, k, eid).iter().zip(row(&state.centers, k, u)))
        {
            *di = a - b;
            s += *di * *di;
        }
        let _ = &mut diff;
        if s > 0.0 {
            let lam2 = 2.0 * state.lambda * lr;
            axpy(-lam2, &d, row_mut(&mut state.x, k, eid));
            axpy(lam2, &d, row_mut(&mut state.centers, k, u));
            state.radii[u] += 2.0 * state.lambda * lr * r;
        }
        let inv_d = 1.0 / g.incident_count(u) as f64;
        state.radii[u] -= lr * 2.0 * state.alpha * state.radii[u] * inv_d;
        if state.radii[u] < 0.0 {
            state.radii[u] += lr * state.gamma[u] * inv_d;
        }
    };

    let stride = if sweep.is_empty() {
        usize::MAX
    } else {
        (order.len() / sweep.len()).max(1)
    };
    let mut sweep_iter = sweep.iter();

    for (idx, &pair_idx) in order.iter().enumerate() {
        let (center, context) = pairs[pair_idx as usize];
        let (center, context) = (center as usize, context as usize);
        let lr = schedule.advance();
        sampler.draw(rng, &mut negs);

        center_old.copy_from_slice(row(&state.x, k, center));
        let mut max_dot = f64::NEG_INFINITY;
        softmax.clear();
        for &nb in &negs {
            let d = dot(&center_old, row(&state.x, k, nb as usize));
            max_dot = max_dot.max(d);
            softmax.push(d);
        }
        let mut z = 0.0;
        for d in softmax.iter_mut() {
            *d = (*d - max_dot).exp();
            z += *d;
        }
        let ctx_dot = dot(&center_old, row(&state.x, k, context));
        sg_loss += max_dot + z.ln() - ctx_dot;
        for s in softmax.iter_mut() {
            *s /= z;
        }

        grad_center.fill(0.0);
        for (i, &nb) in negs.iter().enumerate() {
            let xn = row(&state.x, k, nb as usize);
            for (gi, xi) in grad_center.iter_mut().zip(xn) {
                *gi += softmax[i] * xi;
            }
        }
        axpy(-1.0, row(&state.x, k, context), &mut grad_center);

        for (i, &nb) in negs.iter().enumerate() {
            axpy(-lr * softmax[i], &center_old, row_mut(&mut state.x, k, nb as usize));
        }
        axpy(lr, &center_old, row_mut(&mut state.x, k, context));
        axpy(-lr, &grad_center, row_mut(&mut state.x, k, center));

        if (idx + 1) % stride == 0 {
            if let Some(&ci) = sweep_iter.next() {
                constraint_step(state, constraint_items[ci as usize], schedule.current());
            }
        }
    }
    for &ci in sweep_iter {
        constraint_step(state, constraint_items[ci as usize], schedule.current());
    }

    if !sg_loss.is_finite() || !state.is_finite() {
        return Err(Error::Divergence(format!(
            "non-finite state after epoch (skip-gram loss {sg_loss})"
        )));
    }

    let (spherical_error, nonneg_error) = penalty_errors(state, g);
    let radius_loss = state.alpha * state.radii.iter().map(|&r| r * r).sum::<f64>();
    let mean_gamma = state.gamma.iter().sum::<f64>() / state.gamma.len().max(1) as f64;
    Ok(EpochRecord {
        skip_gram_loss: sg_loss,
        radius_loss,
        spherical_error,
        nonneg_error,
        lambda: state.lambda,
        mean_gamma,
    })
}

/// Training output: final state, per-epoch trace, and the constraint
/// check at termination.
#[derive(Debug, Clone)]
pub struct TrainResult {
    pub state: EmbeddingState,
    pub trace: TrainTrace,
    /// Populated when the final epoch still violates a constraint.
    pub constraint_warning: Option<String>,
}

/// Run the full penalty-method schedule: per epoch one [`sgd_epoch`], then
/// escalate lambda if the spherical error exceeds tolerance and gamma_u
/// for every radius that went negative.
pub fn train(
    g: &Graph,
    lg: &LineGraph,
    corpus: &WalkCorpus,
    window: usize,
    cfg: &EmbedConfig,
) -> Result<TrainResult> {
    cfg.validate(lg.node_count())?;
    let pairs = corpus.context_pairs(window);
    if pairs.is_empty() {
        log::warn!("corpus has no context pairs; training sphere and radius terms only");
    }
    let sampler = NegativeSampler::from_corpus(corpus, lg.node_count(), cfg.negatives, cfg.negative_power);
    let mut state = init_state(g, lg, cfg)?;

    let mut constraint_items: Vec<(u32, u32)> = Vec::new();
    for u in 0..g.node_count() {
        for &(_, _, eid) in g.neighbors(u) {
            constraint_items.push((u as u32, eid as u32));
        }
    }

    let total_steps = cfg.epochs as u64 * pairs.len().max(1) as u64;
    let mut schedule = LrSchedule::new(cfg.lr_start, cfg.lr_end, total_steps);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6c32_7664_7761_6c6b);
    let mut trace = TrainTrace::default();

    for _epoch in 0..cfg.epochs {
        let record = sgd_epoch(
            &mut state,
            g,
            &pairs,
            &constraint_items,
            &sampler,
            &mut schedule,
            &mut rng,
        )?;
        if record.spherical_error > cfg.spherical_tol {
            state.lambda = (state.lambda * cfg.lambda_growth).min(cfg.penalty_cap);
        }
        for (u, r) in state.radii.iter().enumerate() {
            if *r < 0.0 {
                state.gamma[u] = (state.gamma[u] * cfg.gamma_growth).min(cfg.penalty_cap);
            }
        }
        trace.epochs.push(record);
    }

    let last = trace.epochs.last().expect("at least one epoch");
    let constraint_warning = if last.nonneg_error != 0.0 || last.spherical_error > cfg.spherical_tol {
        let msg = format!(
            "constraints violated at termination: spherical error {}, non-negative error {}",
            last.spherical_error, last.nonneg_error
        );
        log::warn!("{msg}");
        Some(msg)
    } else {
        None
    };

    Ok(TrainResult {
        state,
        trace,
        constraint_warning,
    })
}
