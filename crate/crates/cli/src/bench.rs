//! Benchmark suites: one CSV row per solver run.

use std::time::Instant;

use lbflow::{
    approx, counterexample_fixture, diamond_with_direct, exact_max_l_flow, generate_random,
    single_edge, BigRational, GeneratorConfig, LengthMode, LpScalar, Network, DEFAULT_PATH_BUDGET,
};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Random,
    Fixtures,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub suite: Suite,
    pub sizes: Vec<(usize, usize)>,
    pub eps: Vec<f64>,
    pub repeats: usize,
    pub seed: u64,
    pub bound: u64,
    pub mode: LengthMode,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub mode: &'static str,
    pub n: usize,
    pub m: usize,
    #[serde(rename = "L")]
    pub bound: u64,
    pub eps: f64,
    pub iterations: u64,
    pub theoretical_iter_bound: u64,
    /// `oracle / value`; empty when the oracle refuses the instance.
    pub ratio_to_oracle: Option<f64>,
    pub runtime_ms: f64,
}

struct Job {
    name: String,
    net: Network,
    bound: u64,
}

fn jobs(cfg: &BenchConfig) -> lbflow::Result<Vec<Job>> {
    let mut out = Vec::new();
    match cfg.suite {
        Suite::Random => {
            let lengths = match cfg.mode {
                LengthMode::Hop => (1, 1),
                LengthMode::General => (1, 3),
            };
            let mut seed = cfg.seed;
            for &(n, m) in &cfg.sizes {
                for _ in 0..cfg.repeats {
                    let gen = GeneratorConfig::new(n, m, seed).lengths(lengths.0, lengths.1);
                    out.push(Job {
                        name: format!("random-{n}x{m}-s{seed}"),
                        net: generate_random(&gen)?,
                        bound: cfg.bound,
                    });
                    seed = seed.wrapping_add(1);
                }
            }
        }
        Suite::Fixtures => {
            let (counter, counter_bound) = counterexample_fixture();
            let fixtures = [
                ("single-edge", single_edge(), 1),
                ("diamond", diamond_with_direct(), 2),
                ("counterexample", counter, counter_bound),
            ];
            for _ in 0..cfg.repeats {
                for (name, net, bound) in &fixtures {
                    out.push(Job {
                        name: name.to_string(),
                        net: net.clone(),
                        bound: *bound,
                    });
                }
            }
        }
    }
    Ok(out)
}

fn run_job(job: &Job, cfg: &BenchConfig) -> lbflow::Result<Vec<BenchRow>> {
    let oracle =
        exact_max_l_flow::<BigRational>(&job.net, job.bound, cfg.mode, DEFAULT_PATH_BUDGET)
            .ok()
            .map(|ex| ex.value.to_f64());
    cfg.eps
        .iter()
        .map(|&eps| {
            let started = Instant::now();
            let res = approx(&job.net, job.bound, eps, cfg.mode)?;
            let runtime_ms = started.elapsed().as_secs_f64() * 1e3;
            let value = res.value();
            let ratio_to_oracle = oracle.map(|opt| {
                if value > 0.0 {
                    opt / value
                } else if opt == 0.0 {
                    1.0
                } else {
                    f64::INFINITY
                }
            });
            Ok(BenchRow {
                instance: job.name.clone(),
                mode: cfg.mode.as_str(),
                n: job.net.vertex_count(),
                m: job.net.edge_count(),
                bound: job.bound,
                eps,
                iterations: res.trace.iterations(),
                theoretical_iter_bound: res.params.iteration_bound,
                ratio_to_oracle,
                runtime_ms,
            })
        })
        .collect()
}

/// Runs every job in parallel; rows come back in job order.
pub fn run(cfg: &BenchConfig) -> lbflow::Result<Vec<BenchRow>> {
    let jobs = jobs(cfg)?;
    let rows: lbflow::Result<Vec<Vec<BenchRow>>> =
        jobs.par_iter().map(|j| run_job(j, cfg)).collect();
    Ok(rows?.into_iter().flatten().collect())
}

/// Parses `8x20,16x40`.
pub fn parse_size(text: &str) -> Result<(usize, usize), String> {
    let (n, m) = text
        .split_once('x')
        .ok_or_else(|| format!("expected NxM, got {text:?}"))?;
    let n = n
        .trim()
        .parse()
        .map_err(|e| format!("bad vertex count in {text:?}: {e}"))?;
    let m = m
        .trim()
        .parse()
        .map_err(|e| format!("bad edge count in {text:?}: {e}"))?;
    Ok((n, m))
}
