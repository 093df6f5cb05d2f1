//! Stand-alone verification of claimed solutions.
//!
//! Nothing here consults the exact oracle: capacity feasibility and
//! length-boundedness are checked directly, and the approximation ratio is
//! certified by weak duality. For any `y >= 0` with cheapest bounded path
//! cost `d > 0`, `y / d` is dual feasible, so `D(y) / d` bounds the optimum
//! from above.

use crate::error::{Error, Result};
use crate::fptas::{PathFlow, SolveResult};
use crate::network::{LengthMode, Network, Path};
use crate::scalar::Real;
use crate::shortest_paths::{exact_shortest_path, DualLengths};

pub const DEFAULT_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    Capacity {
        edge: usize,
        flow: f64,
        capacity: f64,
    },
    Length {
        path: Path,
        length: u64,
        bound: u64,
    },
    MalformedPath {
        path: Path,
        reason: String,
    },
    NonpositiveAmount {
        path: Path,
        amount: f64,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Capacity {
                edge,
                flow,
                capacity,
            } => write!(f, "capacity: edge {edge} carries {flow} > {capacity}"),
            Violation::Length {
                path,
                length,
                bound,
            } => write!(
                f,
                "length: path {:?} has length {length} > {bound}",
                path.edges()
            ),
            Violation::MalformedPath { path, reason } => {
                write!(f, "malformed: path {:?}: {reason}", path.edges())
            }
            Violation::NonpositiveAmount { path, amount } => {
                write!(f, "amount: path {:?} carries {amount}", path.edges())
            }
        }
    }
}

/// `f(e) <= c(e) (1 + rel_tol)` for every edge. Returns the violations
/// (empty means feasible).
pub fn check_capacity_feasible<F: Real>(
    net: &Network,
    flow: &PathFlow<F>,
    rel_tol: f64,
) -> Result<Vec<Violation>> {
    let totals = flow.edge_totals(net.edge_count())?;
    Ok(net
        .edges()
        .iter()
        .filter_map(|e| {
            let f = totals[e.id].to_f64().unwrap_or(f64::NAN);
            (f.is_nan() || f > e.capacity * (1.0 + rel_tol)).then_some(Violation::Capacity {
                edge: e.id,
                flow: f,
                capacity: e.capacity,
            })
        })
        .collect())
}

/// Every flow-carrying path is a simple s-t path of mode-length at most
/// `bound`.
pub fn check_l_bounded<F: Real>(
    net: &Network,
    flow: &PathFlow<F>,
    bound: u64,
    mode: LengthMode,
) -> Result<Vec<Violation>> {
    let mut violations = Vec::new();
    for (path, amount) in flow.iter() {
        if amount.is_nan() || amount <= F::zero() {
            violations.push(Violation::NonpositiveAmount {
                path: path.clone(),
                amount: amount.to_f64().unwrap_or(f64::NAN),
            });
        }
        match net.check_path(path) {
            Ok(()) => {}
            Err(Error::DanglingEdge(id)) => return Err(Error::DanglingEdge(id)),
            Err(err) => {
                violations.push(Violation::MalformedPath {
                    path: path.clone(),
                    reason: err.to_string(),
                });
                continue;
            }
        }
        let length = net.path_length(path, mode)?;
        if length > bound {
            violations.push(Violation::Length {
                path: path.clone(),
                length,
                bound,
            });
        }
    }
    Ok(violations)
}

/// Upper bound on the maximum bounded flow obtained from dual lengths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DualBound<F> {
    /// `D(y) / d` with `d` the exact cheapest bounded path cost.
    Finite {
        value: F,
        objective: F,
        path_cost: F,
    },
    /// No bounded s-t path exists, so the optimum is zero.
    OptZero,
    /// A bounded path of zero `y`-cost exists; `y` certifies nothing.
    Unbounded,
}

impl<F: Real> DualBound<F> {
    /// The bound as a number (`0` for [`DualBound::OptZero`], `+∞` for
    /// [`DualBound::Unbounded`]).
    pub fn value(&self) -> F {
        match *self {
            DualBound::Finite { value, .. } => value,
            DualBound::OptZero => F::zero(),
            DualBound::Unbounded => F::infinity(),
        }
    }
}

/// `D(y) / d^L_y(s, t)`; `d` is computed exactly (hop DP or the exact
/// restricted shortest path DP).
pub fn dual_bound<F: Real>(
    net: &Network,
    y: &DualLengths<F>,
    bound: u64,
    mode: LengthMode,
) -> Result<DualBound<F>> {
    let Some(sp) = exact_shortest_path(net, y, bound, mode)? else {
        return Ok(DualBound::OptZero);
    };
    if sp.cost <= F::zero() {
        return Ok(DualBound::Unbounded);
    }
    let objective = y.weighted_total(net);
    Ok(DualBound::Finite {
        value: objective / sp.cost,
        objective,
        path_cost: sp.cost,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate<F> {
    pub primal_value: F,
    pub dual_bound: F,
    /// `dual_bound / primal_value`; `1` when both are zero.
    pub ratio: F,
    pub feasible: bool,
    pub l_bounded: bool,
    /// No bounded s-t path exists, so the optimum is certified to be zero.
    pub opt_zero: bool,
    pub violations: Vec<Violation>,
}

impl<F: Real> Certificate<F> {
    pub fn is_valid(&self) -> bool {
        self.feasible && self.l_bounded
    }
}

/// Certifies a flow against dual lengths.
pub fn certify_flow<F: Real>(
    net: &Network,
    flow: &PathFlow<F>,
    duals: &DualLengths<F>,
    bound: u64,
    mode: LengthMode,
) -> Result<Certificate<F>> {
    let capacity = check_capacity_feasible(net, flow, DEFAULT_REL_TOL)?;
    let length = check_l_bounded(net, flow, bound, mode)?;
    let dual = dual_bound(net, duals, bound, mode)?;
    let primal_value = flow.value();
    let dual_value = dual.value();
    let ratio = if primal_value > F::zero() {
        dual_value / primal_value
    } else if dual_value == F::zero() {
        F::one()
    } else {
        F::infinity()
    };
    let feasible = capacity.is_empty();
    let l_bounded = length.is_empty();
    let mut violations = capacity;
    violations.extend(length);
    Ok(Certificate {
        primal_value,
        dual_bound: dual_value,
        ratio,
        feasible,
        l_bounded,
        opt_zero: matches!(dual, DualBound::OptZero),
        violations,
    })
}

/// Certifies a solver result: its scaled flow against the best dual lengths
/// the run produced.
pub fn certify<F: Real>(
    net: &Network,
    result: &SolveResult<F>,
    bound: u64,
    mode: LengthMode,
) -> Result<Certificate<F>> {
    certify_flow(net, &result.scaled, &result.certificate_duals, bound, mode)
}
