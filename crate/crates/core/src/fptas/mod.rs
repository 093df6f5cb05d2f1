//! Exponential-length approximation scheme for maximum length-bounded flow.

mod engine;
mod flow;
mod params;

pub use engine::{approx, approx_general, approx_unit, IterationRecord, SolveResult, SolveTrace};
pub use flow::{scale_flow, PathFlow};
pub use params::{derive_params, RunParams};
