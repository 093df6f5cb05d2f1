use std::time::{Duration, Instant};

use super::flow::{scale_flow, PathFlow};
use super::params::{derive_params, RunParams};
use crate::error::{Error, Result};
use crate::network::{LengthMode, Network, Path};
use crate::scalar::{CompensatedSum, Real};
use crate::shortest_paths::{hop_shortest_path, rcsp_approx, DualLengths, SpPath, SpResult};

/// One pass of the routing loop.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord<F> {
    /// 1-based iteration index `i`.
    pub iteration: u64,
    pub path: Path,
    /// Amount routed, the smallest capacity on `path`.
    pub bottleneck: F,
    /// Cost of `path` under `y_{i-1}`, the value the loop condition tested.
    pub alpha: F,
    /// Flow value `f_i` after this iteration.
    pub flow_value: F,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SolveTrace<F> {
    pub records: Vec<IterationRecord<F>>,
    /// Cost of the shortest path under the final duals (`α(τ)` or `ᾱ(τ)`);
    /// `None` when no bounded path exists.
    pub final_alpha: Option<F>,
    pub elapsed: Duration,
}

impl<F> SolveTrace<F> {
    pub fn iterations(&self) -> u64 {
        self.records.len() as u64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult<F> {
    /// Unscaled flow `x_τ`; generally violates capacities.
    pub raw: PathFlow<F>,
    /// `raw / scale_factor`, capacity feasible.
    pub scaled: PathFlow<F>,
    /// Dual lengths `y_τ` when the loop stopped.
    pub final_duals: DualLengths<F>,
    /// The dual lengths with the smallest bound seen during the run, either
    /// some `y_i` or some `y_i - y_0`. `y_τ` alone can be far from optimal.
    pub certificate_duals: DualLengths<F>,
    pub params: RunParams<F>,
    pub trace: SolveTrace<F>,
}

impl<F: Real> SolveResult<F> {
    pub fn value(&self) -> F {
        self.scaled.value()
    }
}

/// `(1 + ε)`-approximate maximum flow over paths with at most `bound` edges.
pub fn approx_unit<F: Real>(net: &Network, bound: u64, eps: F) -> Result<SolveResult<F>> {
    let params = derive_params(eps, bound, net.edge_count(), LengthMode::Hop)?;
    run(net, params, |y| hop_shortest_path(net, y, bound))
}

/// `(1 + ε)`-approximate maximum flow over paths whose edge-length sum is at
/// most `bound`, using the `(1 + w)`-approximate restricted shortest path.
pub fn approx_general<F: Real>(net: &Network, bound: u64, eps: F) -> Result<SolveResult<F>> {
    let params = derive_params(eps, bound, net.edge_count(), LengthMode::General)?;
    let w = params.w;
    run(net, params, |y| rcsp_approx(net, y, bound, w))
}

/// Dispatches on `mode`.
pub fn approx<F: Real>(
    net: &Network,
    bound: u64,
    eps: F,
    mode: LengthMode,
) -> Result<SolveResult<F>> {
    match mode {
        LengthMode::Hop => approx_unit(net, bound, eps),
        LengthMode::General => approx_general(net, bound, eps),
    }
}

/// The exponential-length loop shared by both modes.
///
/// Starts from `y_0 = δ`, routes the bottleneck capacity along the path
/// returned by `shortest` while its cost is below `1 + w`, and multiplies
/// `y(e)` by `1 + ε' c / c(e)` on every edge of the path.
fn run<F: Real>(
    net: &Network,
    params: RunParams<F>,
    mut shortest: impl FnMut(&DualLengths<F>) -> Result<SpResult<F>>,
) -> Result<SolveResult<F>> {
    let started = Instant::now();
    let capacities: Vec<F> = net.edges().iter().map(|e| F::lit(e.capacity)).collect();
    let mut y = DualLengths::uniform(net.edge_count(), params.delta);
    let mut raw = PathFlow::new();
    let mut value = CompensatedSum::new();
    let mut records = Vec::new();
    let threshold = params.stop_threshold();

    let mut current = shortest(&y)?;
    let mut best = BestDuals::new(net, &params);
    best.offer(&y, current.as_ref());
    while let Some(sp) = current.as_ref().filter(|sp| sp.cost < threshold) {
        let iteration = records.len() as u64 + 1;
        if iteration > params.max_iterations {
            return Err(Error::IterationCapExceeded {
                cap: params.max_iterations,
            });
        }
        let c = sp
            .path
            .edges()
            .iter()
            .map(|&id| capacities[id])
            .fold(F::infinity(), F::min);
        let duals = y.as_mut_slice();
        for &id in sp.path.edges() {
            duals[id] *= F::one() + params.eps_internal * c / capacities[id];
        }
        value.add(c);
        raw.add(sp.path.clone(), c);
        records.push(IterationRecord {
            iteration,
            path: sp.path.clone(),
            bottleneck: c,
            alpha: sp.cost,
            flow_value: value.value(),
        });
        current = shortest(&y)?;
        best.offer(&y, current.as_ref());
    }

    let scaled = scale_flow(&raw, params.scale_factor)?;
    let certificate_duals = best.into_duals().unwrap_or_else(|| y.clone());
    Ok(SolveResult {
        raw,
        scaled,
        final_duals: y,
        certificate_duals,
        params,
        trace: SolveTrace {
            records,
            final_alpha: current.map(|sp| sp.cost),
            elapsed: started.elapsed(),
        },
    })
}

/// Keeps the dual vector with the smallest upper estimate of its bound
/// `D(y) / d(y)`.
///
/// The loop's path cost `a` satisfies `a / (1 + w) <= d(y_i) <= a`, and
/// `d(y_i - y_0) >= d(y_i) - δh` since a bounded simple path has at most
/// `h = min(L, n - 1)` edges. Both estimates therefore never undershoot the
/// exact bound computed later.
struct BestDuals<'a, F> {
    net: &'a Network,
    delta: F,
    slack: F,
    shift: F,
    best: Option<(F, DualLengths<F>)>,
}

impl<'a, F: Real> BestDuals<'a, F> {
    fn new(net: &'a Network, params: &RunParams<F>) -> Self {
        let hops = params.bound.min(net.vertex_count() as u64 - 1);
        Self {
            net,
            delta: params.delta,
            slack: F::one() + params.w,
            shift: params.delta * F::lit(hops as f64),
            best: None,
        }
    }

    fn offer(&mut self, y: &DualLengths<F>, sp: Option<&SpPath<F>>) {
        let Some(sp) = sp else { return };
        let lower = sp.cost / self.slack;
        if lower > F::zero() {
            self.keep(y.weighted_total(self.net) / lower, || y.clone());
        }
        let shifted = lower - self.shift;
        if shifted > F::zero() {
            let delta = self.delta;
            let grown = DualLengths::new(
                y.as_slice()
                    .iter()
                    .map(|&v| (v - delta).max(F::zero()))
                    .collect(),
            )
            .expect("shifted duals are finite and nonnegative");
            let total = grown.weighted_total(self.net);
            // zero before the first update, when only rounding separates
            // `lower` from the shift
            if total > F::zero() {
                self.keep(total / shifted, || grown);
            }
        }
    }

    fn keep(&mut self, estimate: F, duals: impl FnOnce() -> DualLengths<F>) {
        if self.best.as_ref().is_none_or(|(b, _)| estimate < *b) {
            self.best = Some((estimate, duals()));
        }
    }

    fn into_duals(self) -> Option<DualLengths<F>> {
        self.best.map(|(_, y)| y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{counterexample_fixture, diamond_with_direct, single_edge};

    #[test]
    fn single_edge_value() {
        let res = approx_unit(&single_edge(), 1, 0.3).unwrap();
        let v = res.value();
        assert!((7.0 / 1.3..=7.0).contains(&v), "{v}");
    }

    #[test]
    fn diamond_value() {
        let res = approx_unit(&diamond_with_direct(), 2, 0.3).unwrap();
        let v = res.value();
        assert!((3.0 / 1.3..=3.0).contains(&v), "{v}");
        for path in res.scaled.paths() {
            assert!(path.len() <= 2);
        }
    }

    #[test]
    fn counterexample_value() {
        let (net, bound) = counterexample_fixture();
        let v = approx_unit(&net, bound, 0.3).unwrap().value();
        assert!((2.0 / 1.3..=2.0).contains(&v), "{v}");
    }

    #[test]
    fn no_bounded_path_gives_zero_flow() {
        let net = Network::new(3, 0, 2, [(0, 1, 1.0, 1), (1, 2, 1.0, 1)]).unwrap();
        let res = approx_unit(&net, 1, 0.3).unwrap();
        assert!(res.scaled.is_empty());
        assert_eq!(res.trace.iterations(), 0);
        assert_eq!(res.trace.final_alpha, None);
        let res = approx_general(&net, 1, 0.3).unwrap();
        assert_eq!(res.value(), 0.0);
    }

    #[test]
    fn general_mode_examples() {
        let net = Network::new(3, 0, 2, [(0, 2, 10.0, 3), (0, 1, 1.0, 1), (1, 2, 1.0, 1)]).unwrap();
        let v = approx_general(&net, 2, 0.5).unwrap().value();
        assert!((1.0 / 1.5..=1.0).contains(&v), "{v}");
        let v = approx_general(&net, 3, 0.5).unwrap().value();
        assert!((11.0 / 1.5..=11.0).contains(&v), "{v}");

        let res = approx_general(&diamond_with_direct(), 2, 0.5).unwrap();
        assert!((3.0 / 1.5..=3.0).contains(&res.value()));
        assert!(res.scaled.paths().all(|p| p.len() <= 2));
    }

    #[test]
    fn runs_in_single_precision() {
        let v = approx_unit::<f32>(&diamond_with_direct(), 2, 0.3)
            .unwrap()
            .value();
        assert!((3.0 / 1.3..=3.0).contains(&v), "{v}");
    }

    #[test]
    fn trace_is_consistent() {
        let res = approx_unit(&diamond_with_direct(), 2, 0.3).unwrap();
        let trace = &res.trace;
        assert!(trace.iterations() <= res.params.iteration_bound);
        let mut prev = 0.0_f64;
        for (k, r) in trace.records.iter().enumerate() {
            assert_eq!(r.iteration, k as u64 + 1);
            assert!(r.flow_value > prev);
            assert!(r.alpha < 1.0);
            prev = r.flow_value;
        }
        assert!(trace.final_alpha.unwrap() >= 1.0);
        assert!((res.raw.value() - prev).abs() < 1e-9);
    }

    #[test]
    fn certificate_duals_on_a_chain() {
        // the only path has exactly `L` edges, so `y_0 - y_0` is a candidate
        // whose estimate is pure rounding
        let net = Network::new(
            7,
            0,
            6,
            [
                (0, 1, 4.96, 1),
                (1, 2, 7.68, 1),
                (2, 3, 8.52, 1),
                (3, 4, 1.8, 1),
                (4, 5, 5.23, 1),
                (5, 6, 6.75, 1),
            ],
        )
        .unwrap();
        let res = approx_unit(&net, 6, 0.3).unwrap();
        assert!(res.certificate_duals.as_slice().iter().any(|&v| v > 0.0));
        let cert = crate::certificate::certify(&net, &res, 6, LengthMode::Hop).unwrap();
        assert!(
            cert.ratio >= 1.0 - 1e-9 && cert.ratio <= 1.3 * (1.0 + 1e-6),
            "{}",
            cert.ratio
        );
    }
}
