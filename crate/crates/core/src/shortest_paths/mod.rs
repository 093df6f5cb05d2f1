//! Length-bounded shortest paths under nonnegative dual weights.
//!
//! * [`hop_shortest_path`]: exact, at most `L` edges, layered DP in `O(Lm)`.
//! * [`rcsp_exact`]: exact, edge-length sum at most `L`, DP pseudo-polynomial
//!   in `L`.
//! * [`rcsp_approx`]: `(1 + w)`-approximate cost, edge-length sum at most `L`
//!   (hard), via cost rounding. Polynomial in `n`, `m` and `1/w`.
//!
//! All three break ties towards the smallest edge id, so every call is
//! bit-reproducible.

mod hop;
mod rcsp;

pub use hop::hop_shortest_path;
pub use rcsp::{rcsp_approx, rcsp_exact, rcsp_exact_with_cap, DEFAULT_TABLE_CAP};

use crate::error::{Error, Result};
use crate::network::{LengthMode, Network, Path};
use crate::scalar::{CompensatedSum, Real};

/// Nonnegative weight per edge id (the dual variables `y`).
#[derive(Debug, Clone, PartialEq)]
pub struct DualLengths<F>(Vec<F>);

impl<F: Real> DualLengths<F> {
    pub fn new(values: Vec<F>) -> Result<Self> {
        if let Some((id, v)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v >= F::zero()))
        {
            return Err(Error::InvalidArgument(format!(
                "dual length of edge {id} must be finite and nonnegative, got {v}"
            )));
        }
        Ok(Self(values))
    }

    pub fn uniform(m: usize, value: F) -> Self {
        Self(vec![value; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, id: usize) -> F {
        self.0[id]
    }

    pub fn as_slice(&self) -> &[F] {
        &self.0
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [F] {
        &mut self.0
    }

    pub fn into_vec(self) -> Vec<F> {
        self.0
    }

    /// `Σ_{e∈path} y(e)`, summed in path order.
    pub fn path_cost(&self, path: &Path) -> F {
        path.edges()
            .iter()
            .fold(F::zero(), |acc, &id| acc + self.0[id])
    }

    /// Dual objective `Σ_e c(e) y(e)`.
    pub fn weighted_total(&self, net: &Network) -> F {
        net.edges()
            .iter()
            .map(|e| F::lit(e.capacity) * self.0[e.id])
            .collect::<CompensatedSum<F>>()
            .value()
    }

    pub fn scaled(&self, factor: F) -> Self {
        Self(self.0.iter().map(|&v| v * factor).collect())
    }

    pub(crate) fn check_len(&self, net: &Network) -> Result<()> {
        if self.0.len() != net.edge_count() {
            return Err(Error::InvalidArgument(format!(
                "{} dual lengths supplied for {} edges",
                self.0.len(),
                net.edge_count()
            )));
        }
        Ok(())
    }
}

/// A path together with its dual cost.
#[derive(Debug, Clone, PartialEq)]
pub struct SpPath<F> {
    pub path: Path,
    pub cost: F,
}

impl<F: Real> SpPath<F> {
    pub(crate) fn from_walk(net: &Network, y: &DualLengths<F>, walk: &[usize]) -> Self {
        let path = Path::new(crate::network::shortcut_walk(net, walk));
        let cost = y.path_cost(&path);
        Self { path, cost }
    }
}

/// Outcome of a shortest-path query; `None` when no path meets the bound.
pub type SpResult<F> = Option<SpPath<F>>;

/// Exact minimum-cost path within the bound for the given mode:
/// [`hop_shortest_path`] for hops, [`rcsp_exact`] for general lengths.
pub fn exact_shortest_path<F: Real>(
    net: &Network,
    y: &DualLengths<F>,
    bound: u64,
    mode: LengthMode,
) -> Result<SpResult<F>> {
    match mode {
        LengthMode::Hop => hop_shortest_path(net, y, bound),
        LengthMode::General => rcsp_exact(net, y, bound),
    }
}
