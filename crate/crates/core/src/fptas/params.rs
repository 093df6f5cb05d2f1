use crate::error::{Error, Result};
use crate::network::LengthMode;
use crate::scalar::Real;

/// Parameters of one solver run, derived from the user's epsilon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunParams<F> {
    pub mode: LengthMode,
    pub bound: u64,
    pub eps_user: F,
    /// Step size of the multiplicative update.
    pub eps_internal: F,
    /// Initial dual length of every edge.
    pub delta: F,
    /// Slack of the approximate shortest path oracle; zero in hop mode.
    pub w: F,
    /// Raw flow is divided by this to become capacity feasible.
    pub scale_factor: F,
    /// Proven bound `m * ceil(scale_factor)` on the number of iterations.
    pub iteration_bound: u64,
    /// Hard cap, ten times the proven bound.
    pub max_iterations: u64,
}

impl<F: Real> RunParams<F> {
    /// Loop sentinel: stop once the (approximate) shortest path costs this much.
    pub fn stop_threshold(&self) -> F {
        F::one() + self.w
    }

    /// Strict upper bound on every final dual length, `(1 + ε')(1 + w)`.
    pub fn dual_cap(&self) -> F {
        (F::one() + self.eps_internal) * (F::one() + self.w)
    }
}

/// Derives `ε'`, `δ`, `w` and the scaling factor.
///
/// Hop mode runs with `ε' = ε/3`, `w = 0`; general mode with `ε' = w = ε/5`.
/// With `K = (1 + ε')(1 + w)`:
///
/// ```text
/// δ     = K / (K L)^(1/ε')
/// scale = log_{1+ε'}(K / δ)
/// ```
///
/// `δ` is computed in log space and rejected if it would fall below
/// [`Real::underflow_floor`].
pub fn derive_params<F: Real>(
    eps_user: F,
    bound: u64,
    edge_count: usize,
    mode: LengthMode,
) -> Result<RunParams<F>> {
    let eps_f64 = eps_user.to_f64().unwrap_or(f64::NAN);
    if !(eps_user > F::zero() && eps_user < F::one()) {
        return Err(Error::EpsilonOutOfRange(eps_f64));
    }
    if bound == 0 {
        return Err(Error::InvalidArgument(
            "length bound must be at least 1".into(),
        ));
    }
    let one = F::one();
    let (eps_internal, w) = match mode {
        LengthMode::Hop => (eps_user / F::lit(3.0), F::zero()),
        LengthMode::General => {
            let e = eps_user / F::lit(5.0);
            (e, e)
        }
    };
    let k = (one + eps_internal) * (one + w);
    let l = F::lit(bound as f64);
    let ln_delta = k.ln() - (k * l).ln() / eps_internal;
    if ln_delta < F::underflow_floor().ln() {
        return Err(Error::DeltaUnderflow {
            ln_delta: ln_delta.to_f64().unwrap_or(f64::NEG_INFINITY),
        });
    }
    let delta = ln_delta.exp();
    // ln(K/δ) = ln(K L) / ε'
    let scale_factor = ((k * l).ln() / eps_internal) / (one + eps_internal).ln();
    let per_edge = scale_factor.ceil().to_u64().unwrap_or(u64::MAX);
    let iteration_bound = per_edge.saturating_mul(edge_count as u64);
    let cap_base = (F::lit(edge_count as f64) * scale_factor)
        .ceil()
        .to_u64()
        .unwrap_or(u64::MAX);
    Ok(RunParams {
        mode,
        bound,
        eps_user,
        eps_internal,
        delta,
        w,
        scale_factor,
        iteration_bound,
        max_iterations: cap_base.saturating_mul(10),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hop_example_values() {
        let p = derive_params(0.3_f64, 4, 5, LengthMode::Hop).unwrap();
        assert!((p.eps_internal - 0.1).abs() < 1e-15);
        assert_eq!(p.w, 0.0);
        let expected = 1.1 / 4.4_f64.powi(10);
        assert!(((p.delta - expected) / expected).abs() < 1e-12);
        assert!((p.delta - 4.04e-7).abs() < 0.01e-7);
        let scale = (1.1 / expected).ln() / 1.1_f64.ln();
        assert!((p.scale_factor - scale).abs() < 1e-9);
        assert_eq!(p.iteration_bound, 5 * scale.ceil() as u64);
        assert_eq!(p.max_iterations, 10 * (5.0 * scale).ceil() as u64);
    }

    #[test]
    fn unit_bound_collapses() {
        let p = derive_params(0.3_f64, 1, 1, LengthMode::Hop).unwrap();
        let expected = 1.1_f64.powi(-9);
        assert!(((p.delta - expected) / expected).abs() < 1e-12);
    }

    #[test]
    fn general_mode_slack() {
        let p = derive_params(0.5_f64, 3, 4, LengthMode::General).unwrap();
        assert!((p.eps_internal - 0.1).abs() < 1e-15);
        assert!((p.w - 0.1).abs() < 1e-15);
        let k = 1.1 * 1.1;
        let expected = k / (k * 3.0_f64).powf(10.0);
        assert!(((p.delta - expected) / expected).abs() < 1e-12);
        assert!((p.dual_cap() - k).abs() < 1e-15);
        assert!((p.stop_threshold() - 1.1).abs() < 1e-15);
    }

    #[test]
    fn epsilon_range_enforced() {
        for eps in [0.0, 1.0, 1.5, -0.1, f64::NAN] {
            assert!(matches!(
                derive_params(eps, 2, 3, LengthMode::Hop),
                Err(Error::EpsilonOutOfRange(_))
            ));
        }
    }

    #[test]
    fn delta_underflow_detected() {
        let err = derive_params(0.01_f64, 1_000_000, 3, LengthMode::Hop).unwrap_err();
        assert!(matches!(err, Error::DeltaUnderflow { .. }));
        // f32 has a far higher floor
        assert!(derive_params(0.05_f32, 1000, 3, LengthMode::Hop).is_err());
        assert!(derive_params(0.3_f32, 4, 3, LengthMode::Hop).is_ok());
    }
}
