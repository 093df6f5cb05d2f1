//! Exact maximum bounded flow for small instances.
//!
//! Enumerates every bounded s-t path and solves the path-packing LP
//! `max Σ x(P)  s.t.  Σ_{P∋e} x(P) <= c(e)` exactly. With the rational
//! instantiation the optimum, the primal solution and the optimal duals are
//! all exact.

mod maxflow;
mod simplex;

pub use maxflow::max_flow_value;
pub use simplex::{maximize, LpSolution};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fptas::approx;
use crate::network::{enumerate_l_bounded_paths, LengthMode, Network, Path};
use crate::scalar::LpScalar;

/// Default cap on tableau entries, `rows * (columns + rows)`.
pub const DEFAULT_LP_CAP: usize = 4_000_000;

/// Exact optimum of the path-packing LP.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactFlow<T> {
    pub value: T,
    /// Paths with positive flow.
    pub path_amounts: BTreeMap<Path, T>,
    /// Optimal dual length per edge id.
    pub dual_values: Vec<T>,
    /// All bounded paths, the LP columns.
    pub columns: Vec<Path>,
}

impl<T: LpScalar> ExactFlow<T> {
    /// `Σ_e c(e) y(e)` for the stored duals.
    pub fn dual_objective(&self, net: &Network) -> T {
        net.edges().iter().fold(T::zero(), |acc, e| {
            acc + T::from_capacity(e.capacity) * self.dual_values[e.id].clone()
        })
    }

    /// Checks primal feasibility, dual feasibility over every column and
    /// equality of the two objectives, all without tolerance.
    pub fn check_optimality(&self, net: &Network) -> std::result::Result<(), String> {
        let mut load = vec![T::zero(); net.edge_count()];
        let mut total = T::zero();
        for (path, x) in &self.path_amounts {
            if *x < T::zero() {
                return Err(format!("negative amount on {:?}", path.edges()));
            }
            total = total + x.clone();
            for &id in path.edges() {
                load[id] = load[id].clone() + x.clone();
            }
        }
        if total != self.value {
            return Err(format!("amounts sum to {total}, value is {}", self.value));
        }
        for e in net.edges() {
            if load[e.id] > T::from_capacity(e.capacity) {
                return Err(format!("edge {} overloaded: {}", e.id, load[e.id]));
            }
        }
        if let Some(id) = self.dual_values.iter().position(|y| *y < T::zero()) {
            return Err(format!("negative dual on edge {id}"));
        }
        for path in &self.columns {
            let len = path
                .edges()
                .iter()
                .fold(T::zero(), |acc, &id| acc + self.dual_values[id].clone());
            if len < T::one() {
                return Err(format!("dual constraint violated by {:?}", path.edges()));
            }
        }
        let dual = self.dual_objective(net);
        if dual != self.value {
            return Err(format!("primal {} differs from dual {dual}", self.value));
        }
        Ok(())
    }
}

/// Exact maximum flow over simple s-t paths of mode-length at most `bound`.
pub fn exact_max_l_flow<T: LpScalar>(
    net: &Network,
    bound: u64,
    mode: LengthMode,
    path_budget: usize,
) -> Result<ExactFlow<T>> {
    exact_max_l_flow_with_cap(net, bound, mode, path_budget, DEFAULT_LP_CAP)
}

pub fn exact_max_l_flow_with_cap<T: LpScalar>(
    net: &Network,
    bound: u64,
    mode: LengthMode,
    path_budget: usize,
    lp_cap: usize,
) -> Result<ExactFlow<T>> {
    let columns = enumerate_l_bounded_paths(net, bound, mode, path_budget)?;
    let rows = net.edge_count();
    let cells = rows.saturating_mul(columns.len() + rows);
    if cells > lp_cap {
        return Err(Error::LpTooLarge {
            rows,
            cols: columns.len(),
            cap: lp_cap,
        });
    }
    let mut a = vec![vec![T::zero(); columns.len()]; rows];
    for (j, path) in columns.iter().enumerate() {
        for &id in path.edges() {
            a[id][j] = T::one();
        }
    }
    let b: Vec<T> = net
        .edges()
        .iter()
        .map(|e| T::from_capacity(e.capacity))
        .collect();
    let c = vec![T::one(); columns.len()];
    let sol = maximize(&a, &b, &c)?;
    let path_amounts = columns
        .iter()
        .zip(sol.x)
        .filter(|(_, x)| *x > T::zero())
        .map(|(p, x)| (p.clone(), x))
        .collect();
    Ok(ExactFlow {
        value: sol.value,
        path_amounts,
        dual_values: sol.duals,
        columns,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheckRun {
    pub eps: f64,
    pub value: f64,
    /// `value (1 + eps) / oracle`; `1` when both are zero.
    pub ratio: f64,
    pub iterations: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheckReport {
    pub oracle_value: f64,
    pub runs: Vec<CrossCheckRun>,
    pub min_ratio: f64,
}

impl CrossCheckReport {
    /// Every run meets the guarantee and none exceeds the optimum.
    pub fn passed(&self) -> bool {
        self.min_ratio >= 1.0 - 1e-9
            && self
                .runs
                .iter()
                .all(|r| r.value <= self.oracle_value * (1.0 + 1e-9) + 1e-12)
    }
}

/// Runs the approximation scheme for each epsilon and compares against the
/// exact rational optimum.
pub fn oracle_cross_check(
    net: &Network,
    bound: u64,
    mode: LengthMode,
    eps_grid: &[f64],
    path_budget: usize,
) -> Result<CrossCheckReport> {
    let exact = exact_max_l_flow::<num_rational::BigRational>(net, bound, mode, path_budget)?;
    let oracle_value = exact.value.to_f64();
    let mut runs = Vec::with_capacity(eps_grid.len());
    for &eps in eps_grid {
        let res = approx(net, bound, eps, mode)?;
        let value = res.value();
        let ratio = if oracle_value > 0.0 {
            value * (1.0 + eps) / oracle_value
        } else if value == 0.0 {
            1.0
        } else {
            f64::INFINITY
        };
        runs.push(CrossCheckRun {
            eps,
            value,
            ratio,
            iterations: res.trace.iterations(),
        });
    }
    let min_ratio = runs.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min);
    Ok(CrossCheckReport {
        oracle_value,
        runs,
        min_ratio,
    })
}
