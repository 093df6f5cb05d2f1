#![allow(dead_code)]

use lbflow::{generate_random, DualLengths, GeneratorConfig, LengthMode, Network};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A desk-scale instance: n <= 8, m <= 20, caps in [1, 10].
#[derive(Debug, Clone)]
pub struct Instance {
    pub seed: u64,
    pub net: Network,
    pub bound: u64,
    pub mode: LengthMode,
}

pub fn random_instance(seed: u64, mode: LengthMode) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let n = rng.gen_range(2..=8);
    let m = rng.gen_range((n - 1).max(1)..=20);
    let bound = rng.gen_range(1..=6);
    let lens = match mode {
        LengthMode::Hop => (1, 1),
        LengthMode::General => (1, 3),
    };
    let cfg = GeneratorConfig::new(n, m, seed)
        .capacities(1.0, 10.0)
        .lengths(lens.0, lens.1);
    Instance {
        seed,
        net: generate_random(&cfg).unwrap(),
        bound,
        mode,
    }
}

/// Every simple s-t path of mode-length at most `bound`, found by extending
/// vertex sequences over the full edge list.
pub fn brute_paths(net: &Network, bound: u64, mode: LengthMode) -> Vec<Vec<usize>> {
    #[allow(clippy::too_many_arguments)]
    fn extend(
        net: &Network,
        bound: u64,
        mode: LengthMode,
        at: usize,
        used: u64,
        visited: &mut Vec<bool>,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if at == net.sink() {
            out.push(stack.clone());
            return;
        }
        for e in net.edges() {
            let len = match mode {
                LengthMode::Hop => 1,
                LengthMode::General => e.length,
            };
            if e.tail != at || visited[e.head] || used + len > bound {
                continue;
            }
            visited[e.head] = true;
            stack.push(e.id);
            extend(net, bound, mode, e.head, used + len, visited, stack, out);
            stack.pop();
            visited[e.head] = false;
        }
    }
    let mut visited = vec![false; net.vertex_count()];
    visited[net.source()] = true;
    let mut out = Vec::new();
    extend(
        net,
        bound,
        mode,
        net.source(),
        0,
        &mut visited,
        &mut Vec::new(),
        &mut out,
    );
    out.sort();
    out
}

/// Cheapest bounded path cost by enumeration.
pub fn brute_min_cost(
    net: &Network,
    y: &DualLengths<f64>,
    bound: u64,
    mode: LengthMode,
) -> Option<f64> {
    brute_paths(net, bound, mode)
        .iter()
        .map(|p| p.iter().map(|&id| y.get(id)).sum::<f64>())
        .min_by(f64::total_cmp)
}

/// Random duals in `[0, 1)` with roughly one in five set to zero.
pub fn random_duals(m: usize, rng: &mut impl Rng) -> DualLengths<f64> {
    DualLengths::new(
        (0..m)
            .map(|_| {
                if rng.gen_bool(0.2) {
                    0.0
                } else {
                    rng.gen::<f64>()
                }
            })
            .collect(),
    )
    .unwrap()
}
