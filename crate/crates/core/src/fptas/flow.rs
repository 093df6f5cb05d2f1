use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::network::{Network, Path};
use crate::scalar::{CompensatedSum, Real};

/// Flow stored as positive amounts on explicit s-t paths.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PathFlow<F> {
    entries: BTreeMap<Path, F>,
}

impl<F: Real> PathFlow<F> {
    pub fn new() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    /// Adds `amount` to the flow on `path`. Nonpositive amounts are ignored.
    pub fn add(&mut self, path: Path, amount: F) {
        if amount > F::zero() {
            *self.entries.entry(path).or_insert_with(F::zero) += amount;
        }
    }

    pub fn amount(&self, path: &Path) -> F {
        self.entries.get(path).copied().unwrap_or_else(F::zero)
    }

    /// Entries in lexicographic path order.
    pub fn iter(&self) -> impl Iterator<Item = (&Path, F)> {
        self.entries.iter().map(|(p, &x)| (p, x))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total flow value `Σ_P x(P)`.
    pub fn value(&self) -> F {
        self.entries
            .values()
            .copied()
            .collect::<CompensatedSum<F>>()
            .value()
    }

    /// Per-edge totals `f(e) = Σ_{P∋e} x(P)`, indexed by edge id.
    pub fn edge_totals(&self, edge_count: usize) -> Result<Vec<F>> {
        let mut acc = vec![CompensatedSum::<F>::new(); edge_count];
        for (path, &x) in &self.entries {
            for &id in path.edges() {
                acc.get_mut(id).ok_or(Error::DanglingEdge(id))?.add(x);
            }
        }
        Ok(acc.iter().map(CompensatedSum::value).collect())
    }

    /// Largest `f(e) / c(e)` over all edges.
    pub fn congestion(&self, net: &Network) -> Result<F> {
        let totals = self.edge_totals(net.edge_count())?;
        Ok(net
            .edges()
            .iter()
            .map(|e| totals[e.id] / F::lit(e.capacity))
            .fold(F::zero(), F::max))
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.entries.keys()
    }
}

impl<F: Real> FromIterator<(Path, F)> for PathFlow<F> {
    fn from_iter<I: IntoIterator<Item = (Path, F)>>(iter: I) -> Self {
        let mut flow = PathFlow::new();
        for (p, x) in iter {
            flow.add(p, x);
        }
        flow
    }
}

/// Divides every path amount by `factor`.
pub fn scale_flow<F: Real>(raw: &PathFlow<F>, factor: F) -> Result<PathFlow<F>> {
    if !(factor > F::zero() && factor.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "scaling factor must be positive, got {factor}"
        )));
    }
    Ok(PathFlow {
        entries: raw
            .entries
            .iter()
            .map(|(p, &x)| (p.clone(), x / factor))
            .collect(),
    })
}
