//! JSON documents written by `solve`, `verify` and `oracle`.

use lbflow::{
    check_capacity_feasible, check_l_bounded, rational_string, Cert, Flow, LengthMode, LpScalar,
    Network, Path, RationalFlow, Solution, DEFAULT_REL_TOL,
};
use serde::{Deserialize, Serialize};

/// Tolerance for the stated value when re-verifying a document.
pub const VALUE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceInfo {
    pub n: usize,
    pub m: usize,
    #[serde(rename = "L")]
    pub bound: u64,
    pub mode: String,
    /// Echo of `--seed`; the solver itself is deterministic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl InstanceInfo {
    pub fn new(net: &Network, bound: u64, mode: LengthMode, seed: Option<u64>) -> Self {
        Self {
            n: net.vertex_count(),
            m: net.edge_count(),
            bound,
            mode: mode.as_str().to_string(),
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsInfo {
    pub eps: f64,
    pub eps_internal: f64,
    pub delta: f64,
    pub w: f64,
    pub scale_factor: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathEntry {
    pub edges: Vec<usize>,
    pub amount: f64,
}

/// Output of `solve`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub instance: InstanceInfo,
    pub params: ParamsInfo,
    pub value: f64,
    pub paths: Vec<PathEntry>,
    /// `None` when the bound is not finite.
    pub dual_bound: Option<f64>,
    pub ratio: Option<f64>,
    pub iterations: u64,
    pub runtime_ms: f64,
    pub violations: Vec<String>,
}

fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

impl ResultDocument {
    pub fn new(instance: InstanceInfo, result: &Solution, cert: &Cert) -> Self {
        let p = &result.params;
        Self {
            instance,
            params: ParamsInfo {
                eps: p.eps_user,
                eps_internal: p.eps_internal,
                delta: p.delta,
                w: p.w,
                scale_factor: p.scale_factor,
            },
            value: result.value(),
            paths: result
                .scaled
                .iter()
                .map(|(path, amount)| PathEntry {
                    edges: path.edges().to_vec(),
                    amount,
                })
                .collect(),
            dual_bound: finite(cert.dual_bound),
            ratio: finite(cert.ratio),
            iterations: result.trace.iterations(),
            runtime_ms: result.trace.elapsed.as_secs_f64() * 1e3,
            violations: cert.violations.iter().map(ToString::to_string).collect(),
        }
    }
}

/// Output of `verify`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub feasible: bool,
    pub l_bounded: bool,
    pub value_matches: bool,
    pub stated_value: f64,
    pub recomputed_value: f64,
    pub violations: Vec<String>,
}

impl VerifyReport {
    pub fn accepted(&self) -> bool {
        self.feasible && self.l_bounded && self.value_matches && self.violations.is_empty()
    }
}

/// Rechecks a result document against the network it claims to solve.
pub fn verify_document(net: &Network, doc: &ResultDocument, mode: LengthMode) -> VerifyReport {
    let mut violations = Vec::new();
    if doc.instance.n != net.vertex_count() || doc.instance.m != net.edge_count() {
        violations.push(format!(
            "instance: document describes n={} m={}, network has n={} m={}",
            doc.instance.n,
            doc.instance.m,
            net.vertex_count(),
            net.edge_count()
        ));
    }
    let mut flow = Flow::new();
    let mut feasible = true;
    let mut l_bounded = true;
    for entry in &doc.paths {
        if let Some(&id) = entry.edges.iter().find(|&&id| id >= net.edge_count()) {
            violations.push(format!(
                "malformed: path {:?} uses missing edge {id}",
                entry.edges
            ));
            l_bounded = false;
        } else if !(entry.amount.is_finite() && entry.amount > 0.0) {
            violations.push(format!(
                "amount: path {:?} carries {}",
                entry.edges, entry.amount
            ));
            feasible = false;
        } else {
            flow.add(Path::new(entry.edges.clone()), entry.amount);
        }
    }
    let capacity = check_capacity_feasible(net, &flow, DEFAULT_REL_TOL).expect("edge ids checked");
    let length = check_l_bounded(net, &flow, doc.instance.bound, mode).expect("edge ids checked");
    feasible &= capacity.is_empty();
    l_bounded &= length.is_empty();
    violations.extend(capacity.iter().chain(&length).map(ToString::to_string));

    let recomputed_value = flow.value();
    let value_matches =
        (recomputed_value - doc.value).abs() <= VALUE_TOL * doc.value.abs().max(1.0);
    if !value_matches {
        violations.push(format!(
            "value: stated {} but paths carry {recomputed_value}",
            doc.value
        ));
    }
    VerifyReport {
        feasible,
        l_bounded,
        value_matches,
        stated_value: doc.value,
        recomputed_value,
        violations,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactPathEntry {
    pub edges: Vec<usize>,
    pub amount: String,
    pub amount_decimal: f64,
}

/// Output of `oracle`; exact numbers are `p/q` strings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleDocument {
    pub instance: InstanceInfo,
    pub value: String,
    pub value_decimal: f64,
    pub paths: Vec<ExactPathEntry>,
    pub dual_bound: String,
    pub dual_values: Vec<String>,
    pub columns: usize,
}

impl OracleDocument {
    pub fn new(instance: InstanceInfo, net: &Network, exact: &RationalFlow) -> Self {
        Self {
            instance,
            value: rational_string(&exact.value),
            value_decimal: exact.value.to_f64(),
            paths: exact
                .path_amounts
                .iter()
                .map(|(path, amount)| ExactPathEntry {
                    edges: path.edges().to_vec(),
                    amount: rational_string(amount),
                    amount_decimal: amount.to_f64(),
                })
                .collect(),
            dual_bound: rational_string(&exact.dual_objective(net)),
            dual_values: exact.dual_values.iter().map(rational_string).collect(),
            columns: exact.columns.len(),
        }
    }
}
