//! Scalar abstractions.
//!
//! The approximation machinery is written against [`Real`] (implemented for
//! `f32` and `f64`); the exact oracle is written against [`LpScalar`], which
//! is implemented for [`BigRational`] and, for quick experiments, `f64`.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, NumAssign, Signed, ToPrimitive, Zero};

/// Floating point type the solver runs in.
pub trait Real:
    Float + FromPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Smallest initial dual length accepted by parameter derivation.
    fn underflow_floor() -> Self;

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }
}

impl Real for f32 {
    fn underflow_floor() -> Self {
        f32::MIN_POSITIVE
    }
}

impl Real for f64 {
    fn underflow_floor() -> Self {
        1e-300
    }
}

/// Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum<F> {
    sum: F,
    carry: F,
}

impl<F: Real> CompensatedSum<F> {
    pub fn new() -> Self {
        Self {
            sum: F::zero(),
            carry: F::zero(),
        }
    }

    pub fn add(&mut self, x: F) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> F {
        self.sum + self.carry
    }
}

impl<F: Real> FromIterator<F> for CompensatedSum<F> {
    fn from_iter<I: IntoIterator<Item = F>>(iter: I) -> Self {
        let mut acc = Self::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Ordered field used by the exact simplex and max-flow routines.
pub trait LpScalar: Clone + PartialOrd + Num + Signed + Debug + Display {
    /// Converts an edge capacity. Rational implementations read the
    /// shortest decimal rendering of the float, so `7.1` becomes `71/10`.
    fn from_capacity(c: f64) -> Self;

    fn to_f64(&self) -> f64;
}

impl LpScalar for BigRational {
    fn from_capacity(c: f64) -> Self {
        decimal_to_rational(&format!("{c}"))
            .or_else(|| BigRational::from_float(c))
            .expect("finite capacity")
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl LpScalar for f64 {
    fn from_capacity(c: f64) -> Self {
        c
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Parses a plain decimal literal (`[-]digits[.digits]`) into an exact
/// rational, `d` fractional digits giving denominator `10^d`.
pub fn decimal_to_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|ch| ch.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse::<BigInt>().ok()?
    };
    let denom = num_traits::pow(BigInt::from(10u32), frac_part.len());
    let value = BigRational::new(numer, denom);
    Some(if negative { -value } else { value })
}

/// Renders a rational as `p/q` (denominator always present).
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
