//! Maximum length-bounded s-t flow.
//!
//! A flow is *L-bounded* when it decomposes into s-t paths of length at
//! most `L`, where length is either the hop count ([`LengthMode::Hop`]) or
//! the sum of integer edge lengths ([`LengthMode::General`]). This crate
//! provides
//!
//! * the exponential-length approximation scheme ([`approx_unit`],
//!   [`approx_general`]) returning a `(1 + ε)`-approximate flow,
//! * the bounded shortest path subroutines it relies on,
//! * weak-duality certificates that verify any run on their own, and
//! * an exact rational LP oracle for small instances.
//!
//! The numeric code is generic over the scalar type; the aliases at the
//! crate root fix it to `f64` (solver) and [`BigRational`] (oracle).
//!
//! ```
//! use lbflow::{approx_unit, certify, diamond_with_direct, LengthMode};
//!
//! let net = diamond_with_direct();
//! let result = approx_unit(&net, 2, 0.3).unwrap();
//! assert!(result.value() >= 3.0 / 1.3);
//! let cert = certify(&net, &result, 2, LengthMode::Hop).unwrap();
//! assert!(cert.is_valid() && cert.ratio <= 1.3 * (1.0 + 1e-6));
//! ```

pub mod certificate;
pub mod error;
pub mod fptas;
pub mod network;
pub mod oracle;
pub mod scalar;
pub mod shortest_paths;

pub use num_rational::BigRational;

pub use certificate::{
    certify, certify_flow, check_capacity_feasible, check_l_bounded, dual_bound, Certificate,
    DualBound, Violation, DEFAULT_REL_TOL,
};
pub use error::{Error, Result};
pub use fptas::{
    approx, approx_general, approx_unit, derive_params, scale_flow, IterationRecord, PathFlow,
    RunParams, SolveResult, SolveTrace,
};
pub use network::{
    counterexample_fixture, diamond_with_direct, enumerate_l_bounded_paths, generate_random,
    parse_network, serialize_network, single_edge, Edge, GeneratorConfig, LengthMode, Network,
    Path, COUNTEREXAMPLE_BOUND, DEFAULT_PATH_BUDGET,
};
pub use oracle::{
    exact_max_l_flow, exact_max_l_flow_with_cap, max_flow_value, oracle_cross_check,
    CrossCheckReport, CrossCheckRun, ExactFlow, DEFAULT_LP_CAP,
};
pub use scalar::{decimal_to_rational, rational_string, CompensatedSum, LpScalar, Real};
pub use shortest_paths::{
    exact_shortest_path, hop_shortest_path, rcsp_approx, rcsp_exact, rcsp_exact_with_cap,
    DualLengths, SpPath, SpResult, DEFAULT_TABLE_CAP,
};

/// Dual lengths in double precision.
pub type Duals = DualLengths<f64>;
/// Path flow in double precision.
pub type Flow = PathFlow<f64>;
/// Solver output in double precision.
pub type Solution = SolveResult<f64>;
/// Run parameters in double precision.
pub type Params = RunParams<f64>;
/// Certificate in double precision.
pub type Cert = Certificate<f64>;
/// Exact oracle output over the rationals.
pub type RationalFlow = ExactFlow<BigRational>;
