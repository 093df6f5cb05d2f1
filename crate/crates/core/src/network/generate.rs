use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Network;
use crate::error::{Error, Result};

/// Parameters of [`generate_random`].
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub vertices: usize,
    pub edges: usize,
    /// Inclusive capacity range; sampled values are rounded to two decimals.
    pub capacity_range: (f64, f64),
    /// Inclusive length range.
    pub length_range: (u64, u64),
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(vertices: usize, edges: usize, seed: u64) -> Self {
        Self {
            vertices,
            edges,
            capacity_range: (1.0, 10.0),
            length_range: (1, 1),
            seed,
        }
    }

    pub fn capacities(mut self, lo: f64, hi: f64) -> Self {
        self.capacity_range = (lo, hi);
        self
    }

    pub fn lengths(mut self, lo: u64, hi: u64) -> Self {
        self.length_range = (lo, hi);
        self
    }
}

/// Random network with source `0` and sink `n - 1`.
///
/// When `m >= n - 1` the first `n - 1` arcs form a random Hamiltonian
/// s-t path, so the sink is always reachable. Edge ids are shuffled
/// afterwards. The output is a pure function of the config.
pub fn generate_random(cfg: &GeneratorConfig) -> Result<Network> {
    let n = cfg.vertices;
    let m = cfg.edges;
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    if m < 1 {
        return Err(Error::InvalidArgument("need at least 1 edge".into()));
    }
    let (cap_lo, cap_hi) = cfg.capacity_range;
    if !(cap_lo.is_finite() && cap_hi.is_finite() && cap_lo > 0.0 && cap_lo <= cap_hi) {
        return Err(Error::InvalidArgument(format!(
            "invalid capacity range {cap_lo}:{cap_hi}"
        )));
    }
    let (len_lo, len_hi) = cfg.length_range;
    if len_lo < 1 || len_lo > len_hi {
        return Err(Error::InvalidArgument(format!(
            "invalid length range {len_lo}:{len_hi}"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let source = 0;
    let sink = n - 1;
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(m);
    if m >= n - 1 {
        let mut middle: Vec<usize> = (1..n - 1).collect();
        middle.shuffle(&mut rng);
        let chain: Vec<usize> = std::iter::once(source)
            .chain(middle)
            .chain(std::iter::once(sink))
            .collect();
        pairs.extend(chain.windows(2).map(|w| (w[0], w[1])));
    }
    while pairs.len() < m {
        let tail = rng.gen_range(0..n);
        let head = rng.gen_range(0..n);
        if tail != head {
            pairs.push((tail, head));
        }
    }
    pairs.shuffle(&mut rng);

    let arcs: Vec<(usize, usize, f64, u64)> = pairs
        .into_iter()
        .map(|(tail, head)| {
            let raw = rng.gen_range(cap_lo..=cap_hi);
            let cap = ((raw * 100.0).round() / 100.0).clamp(cap_lo, cap_hi);
            let len = rng.gen_range(len_lo..=len_hi);
            (tail, head, cap, len)
        })
        .collect();
    Network::new(n, source, sink, arcs)
}
