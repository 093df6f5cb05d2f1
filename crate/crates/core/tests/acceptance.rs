//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{brute_min_cost, random_duals, random_instance, Instance};
use lbflow::{
    approx, approx_unit, certify, certify_flow, check_capacity_feasible, check_l_bounded,
    counterexample_fixture, enumerate_l_bounded_paths, exact_max_l_flow, generate_random,
    max_flow_value, rcsp_approx, rcsp_exact, BigRational, GeneratorConfig, LengthMode, LpScalar,
    Network, Path, Solution, COUNTEREXAMPLE_BOUND, DEFAULT_PATH_BUDGET, DEFAULT_REL_TOL,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const EPS_GRID: [f64; 3] = [0.1, 0.3, 0.5];
const RANDOM_INSTANCES: u64 = 320;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: String) -> Self {
        Self { passed, detail }
    }
}

/// One solver run together with the exact optimum of its instance.
struct Run {
    label: String,
    inst: Instance,
    eps: f64,
    opt: f64,
    result: Solution,
}

/// The oracle on one instance plus whether its optimality check succeeded.
struct OracleRun {
    label: String,
    self_consistent: Result<(), String>,
}

fn instances() -> Vec<(String, Instance)> {
    let mut out = Vec::new();
    for mode in [LengthMode::Hop, LengthMode::General] {
        let (net, bound) = counterexample_fixture();
        out.push((
            format!("fixture/{}", mode.as_str()),
            Instance {
                seed: 0,
                net,
                bound,
                mode,
            },
        ));
        for seed in 0..RANDOM_INSTANCES {
            out.push((
                format!("random{seed}/{}", mode.as_str()),
                random_instance(seed, mode),
            ));
        }
    }
    out
}

fn solve_all() -> (Vec<Run>, Vec<OracleRun>) {
    let per_instance: Vec<(Vec<Run>, OracleRun)> = instances()
        .into_par_iter()
        .map(|(label, inst)| {
            let exact = exact_max_l_flow::<BigRational>(
                &inst.net,
                inst.bound,
                inst.mode,
                DEFAULT_PATH_BUDGET,
            )
            .expect("oracle fits the budget");
            let opt = exact.value.to_f64();
            let runs = EPS_GRID
                .iter()
                .map(|&eps| Run {
                    label: format!("{label} eps={eps}"),
                    inst: inst.clone(),
                    eps,
                    opt,
                    result: approx(&inst.net, inst.bound, eps, inst.mode).expect("solver run"),
                })
                .collect();
            let oracle = OracleRun {
                label: label.clone(),
                self_consistent: exact.check_optimality(&inst.net),
            };
            (runs, oracle)
        })
        .collect();
    let mut runs = Vec::new();
    let mut oracles = Vec::new();
    for (r, o) in per_instance {
        runs.extend(r);
        oracles.push(o);
    }
    (runs, oracles)
}

fn first_failure<T>(items: &[T], check: impl Fn(&T) -> Option<String>) -> Option<String> {
    items.iter().find_map(check)
}

fn guarantee(runs: &[Run]) -> Outcome {
    let margin = runs
        .iter()
        .filter(|r| r.opt > 0.0)
        .map(|r| r.result.value() * (1.0 + r.eps) / r.opt)
        .fold(f64::INFINITY, f64::min);
    let zero = runs.iter().filter(|r| r.opt == 0.0).count();
    let failure = first_failure(runs, |r| {
        let v = r.result.value();
        (v * (1.0 + r.eps) < r.opt - 1e-9)
            .then(|| format!("{}: value {v}, optimum {}", r.label, r.opt))
    });
    let instances = runs.len() / EPS_GRID.len() / 2;
    Outcome::new(
        failure.is_none(),
        failure.unwrap_or(format!(
            "{} runs over {instances} instances per mode ({zero} with optimum 0), min value(1+eps)/opt {margin:.6}",
            runs.len()
        )),
    )
}

fn feasibility(runs: &[Run]) -> Outcome {
    let failure = first_failure(runs, |r| {
        let net = &r.inst.net;
        let cap = check_capacity_feasible(net, &r.result.scaled, DEFAULT_REL_TOL).unwrap();
        let len = check_l_bounded(net, &r.result.scaled, r.inst.bound, r.inst.mode).unwrap();
        cap.iter()
            .chain(&len)
            .next()
            .map(|v| format!("{}: {v}", r.label))
    });
    let worst = runs
        .iter()
        .map(|r| r.result.scaled.congestion(&r.inst.net).unwrap())
        .fold(0.0, f64::max);
    Outcome::new(
        failure.is_none(),
        failure.unwrap_or(format!("{} runs, max congestion {worst:.12}", runs.len())),
    )
}

fn dual_cap_and_iterations(runs: &[Run]) -> Outcome {
    let failure = first_failure(runs, |r| {
        let p = &r.result.params;
        let top = r
            .result
            .final_duals
            .as_slice()
            .iter()
            .copied()
            .fold(0.0, f64::max);
        if top >= p.dual_cap() {
            return Some(format!("{}: dual {top} >= cap {}", r.label, p.dual_cap()));
        }
        let tau = r.result.trace.iterations();
        (tau > p.iteration_bound).then(|| {
            format!(
                "{}: {tau} iterations > bound {}",
                r.label, p.iteration_bound
            )
        })
    });
    let usage = runs
        .iter()
        .map(|r| r.result.trace.iterations() as f64 / r.result.params.iteration_bound as f64)
        .fold(0.0, f64::max);
    Outcome::new(
        failure.is_none(),
        failure.unwrap_or(format!(
            "{} runs, max iterations/bound {usage:.4}",
            runs.len()
        )),
    )
}

fn restricted_shortest_paths() -> Outcome {
    const TUPLES: u64 = 600;
    let results: Vec<Result<(bool, f64), String>> = (0..TUPLES)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(90_000 + k);
            let n = rng.gen_range(2..=if k % 4 == 0 { 14 } else { 7 });
            let m = rng.gen_range(1..=3 * n);
            let cfg = GeneratorConfig::new(n, m, rng.gen()).lengths(1, rng.gen_range(1..=6));
            let net = generate_random(&cfg).unwrap();
            let y = random_duals(m, &mut rng);
            let bound = rng.gen_range(1..=15);
            let w = [0.05, 0.2, 1.0][(k % 3) as usize];
            let exact = rcsp_exact(&net, &y, bound).unwrap().map(|sp| sp.cost);
            let approx = rcsp_approx(&net, &y, bound, w).unwrap();
            let tag = format!("tuple {k} (n={n}, m={m}, L={bound}, w={w})");
            if let Some(sp) = &approx {
                let len = net.path_length(&sp.path, LengthMode::General).unwrap();
                if len > bound {
                    return Err(format!("{tag}: length {len}"));
                }
            }
            let ratio = match (&approx, exact) {
                (None, None) => 0.0,
                (Some(sp), Some(best)) => {
                    if sp.cost > (1.0 + w) * best + 1e-12 {
                        return Err(format!("{tag}: cost {} vs exact {best}", sp.cost));
                    }
                    if best > 0.0 {
                        sp.cost / best / (1.0 + w)
                    } else {
                        0.0
                    }
                }
                _ => return Err(format!("{tag}: existence disagrees")),
            };
            let brute = n <= 7;
            if brute && exact != brute_min_cost(&net, &y, bound, LengthMode::General) {
                return Err(format!("{tag}: exact DP disagrees with enumeration"));
            }
            Ok((brute, ratio))
        })
        .collect();
    let failure = results.iter().find_map(|r| r.as_ref().err().cloned());
    let ok: Vec<(bool, f64)> = results.into_iter().filter_map(Result::ok).collect();
    let brute = ok.iter().filter(|(b, _)| *b).count();
    let worst = ok.iter().map(|(_, r)| *r).fold(0.0, f64::max);
    Outcome::new(
        failure.is_none(),
        failure.unwrap_or(format!(
            "{TUPLES} tuples, {brute} brute-forced, max cost/((1+w) exact) {worst:.6}"
        )),
    )
}

/// Adds the path's bottleneck capacity to its amount, which must overload
/// that edge.
fn overload(r: &Run) -> Option<bool> {
    let mut flow = r.result.scaled.clone();
    let (path, _) = flow.iter().next().map(|(p, x)| (p.clone(), x))?;
    let extra = r.inst.net.bottleneck(&path).unwrap();
    flow.add(path, extra);
    let cert = certify_flow(
        &r.inst.net,
        &flow,
        &r.result.certificate_duals,
        r.inst.bound,
        r.inst.mode,
    )
    .unwrap();
    Some(!cert.feasible && !cert.is_valid())
}

/// Routes a little flow along some simple path that is too long.
fn lengthen(r: &Run) -> Option<bool> {
    let net: &Network = &r.inst.net;
    let (bound, mode) = (r.inst.bound, r.inst.mode);
    let long = enumerate_l_bounded_paths(net, 3 * bound + 3, mode, DEFAULT_PATH_BUDGET)
        .unwrap()
        .into_iter()
        .find(|p: &Path| net.path_length(p, mode).unwrap() > bound)?;
    let mut flow = r.result.scaled.clone();
    flow.add(long, 1e-6);
    let cert = certify_flow(net, &flow, &r.result.certificate_duals, bound, mode).unwrap();
    Some(!cert.l_bounded && !cert.is_valid())
}

fn certificates(runs: &[Run]) -> Outcome {
    let certs: Vec<_> = runs
        .par_iter()
        .map(|r| certify(&r.inst.net, &r.result, r.inst.bound, r.inst.mode).unwrap())
        .collect();
    let failure = runs.iter().zip(&certs).find_map(|(r, c)| {
        let upper = (1.0 + r.eps) * (1.0 + 1e-6);
        (!c.is_valid() || c.ratio < 1.0 - 1e-9 || c.ratio > upper)
            .then(|| format!("{}: ratio {} valid {}", r.label, c.ratio, c.is_valid()))
    });
    let worst = runs
        .iter()
        .zip(&certs)
        .map(|(r, c)| c.ratio / (1.0 + r.eps))
        .fold(0.0, f64::max);
    let lowest = certs.iter().map(|c| c.ratio).fold(f64::INFINITY, f64::min);

    let overloads: Vec<bool> = runs.iter().filter_map(overload).collect();
    let long: Vec<bool> = runs.iter().filter_map(lengthen).collect();
    let tamper_ok = overloads.iter().chain(&long).all(|&rejected| rejected);
    let failure = failure.or((!tamper_ok).then(|| "a tampered flow was accepted".to_string()));
    Outcome::new(
        failure.is_none(),
        failure.unwrap_or(format!(
            "{} runs, ratio in [{lowest:.6}, (1+eps){worst:.6}], {} overloaded and {} overlong tampered flows rejected",
            runs.len(),
            overloads.len(),
            long.len()
        )),
    )
}

fn oracle_consistency(oracles: &[OracleRun]) -> Outcome {
    let failure = first_failure(oracles, |o| {
        o.self_consistent
            .as_ref()
            .err()
            .map(|e| format!("{}: {e}", o.label))
    });
    let mismatches: Vec<String> = (0..50u64)
        .into_par_iter()
        .filter_map(|seed| {
            let inst = random_instance(50_000 + seed, LengthMode::Hop);
            let bound = inst.net.vertex_count() as u64 - 1;
            let ex = exact_max_l_flow::<BigRational>(
                &inst.net,
                bound,
                LengthMode::Hop,
                DEFAULT_PATH_BUDGET,
            )
            .unwrap();
            ex.check_optimality(&inst.net).ok()?;
            let classical = max_flow_value::<BigRational>(&inst.net);
            (ex.value != classical).then(|| format!("seed {seed}: {} vs {classical}", ex.value))
        })
        .collect();
    let failure = failure.or(mismatches.first().cloned());
    Outcome::new(
        failure.is_none(),
        failure.unwrap_or(format!(
            "{} oracle runs with primal = dual exactly, 50 unrestricted instances equal max flow",
            oracles.len()
        )),
    )
}

fn counterexample() -> Outcome {
    let (net, bound) = counterexample_fixture();
    assert_eq!(bound, COUNTEREXAMPLE_BOUND);
    let ex =
        exact_max_l_flow::<BigRational>(&net, bound, LengthMode::Hop, DEFAULT_PATH_BUDGET).unwrap();
    let exact_two =
        ex.value == BigRational::from_integer(2.into()) && ex.check_optimality(&net).is_ok();
    let v = approx_unit(&net, bound, 0.1).unwrap().value();
    let in_range = (2.0 / 1.1..=2.0).contains(&v);
    Outcome::new(
        exact_two && in_range,
        format!(
            "oracle {}, approximate value at eps=0.1 is {v:.6}",
            lbflow::rational_string(&ex.value)
        ),
    )
}

fn scaling_trend() -> Outcome {
    let eps = [0.1, 0.2, 0.4];
    let mut cases: Vec<(String, Instance)> = Vec::new();
    let (net, bound) = counterexample_fixture();
    cases.push((
        "fixture".into(),
        Instance {
            seed: 0,
            net,
            bound,
            mode: LengthMode::Hop,
        },
    ));
    for seed in 0..30 {
        for mode in [LengthMode::Hop, LengthMode::General] {
            cases.push((
                format!("random{seed}/{}", mode.as_str()),
                random_instance(60_000 + seed, mode),
            ));
        }
    }
    let counts: Vec<(String, Vec<u64>)> = cases
        .into_par_iter()
        .map(|(label, inst)| {
            let its = eps
                .iter()
                .map(|&e| {
                    approx(&inst.net, inst.bound, e, inst.mode)
                        .unwrap()
                        .trace
                        .iterations()
                })
                .collect();
            (label, its)
        })
        .collect();
    let failure = counts
        .iter()
        .find(|(_, its)| its.windows(2).any(|w| w[1] > w[0]))
        .map(|(label, its)| format!("{label}: iterations {its:?} for eps {eps:?}"));
    let fixture = &counts[0].1;
    Outcome::new(
        failure.is_none(),
        failure.unwrap_or(format!(
            "{} instances nonincreasing, fixture iterations {fixture:?} for eps {eps:?}",
            counts.len()
        )),
    )
}

fn main() -> ExitCode {
    let started = Instant::now();
    let (runs, oracles) = solve_all();
    let outcomes = [
        ("guarantee", guarantee(&runs)),
        ("feasibility", feasibility(&runs)),
        (
            "dual cap and iteration bound",
            dual_cap_and_iterations(&runs),
        ),
        (
            "restricted shortest path contract",
            restricted_shortest_paths(),
        ),
        ("certificate soundness", certificates(&runs)),
        ("oracle self-consistency", oracle_consistency(&oracles)),
        ("counterexample fixture", counterexample()),
        ("scaling trend", scaling_trend()),
    ];
    let mut all = true;
    for (k, (name, outcome)) in outcomes.iter().enumerate() {
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {} [{verdict}] {name}: {}", k + 1, outcome.detail);
        all &= outcome.passed;
    }
    println!(
        "acceptance finished in {:.1}s",
        started.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
