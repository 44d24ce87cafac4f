//! The abelian statistics parameter and its fractionality functions.
//!
//! A single counterclockwise exchange of two anyons multiplies the wave
//! function by `exp(i*alpha*pi)`. All quantities here are expressed in
//! units of pi: `alpha = 0` are bosons, `alpha = 1` fermions, and the
//! kinetic energy is invariant under `alpha -> alpha + 2` and
//! `alpha -> -alpha`.
//!
//! The N-fractionality
//!
//! ```text
//! alpha_N = min over p in {0..N-2}, q integer of |(2p+1) alpha - 2q|
//! ```
//!
//! measures the arcwise distance of all possible pair-exchange phases
//! from the bosonic point +1. Its N -> infinity limit is an odd variant
//! of Thomae's popcorn function: `1/v` at reduced rationals `u/v` with
//! odd numerator, zero everywhere else. Because that limit is
//! discontinuous at every point, it is only evaluated on exact rational
//! input.

use crate::error::CoreError;
use crate::Result;
use num_rational::Ratio;

/// Statistics parameter with an optional exact rational form.
///
/// The float field drives every continuous formula; the rational form,
/// when present, unlocks the exact fractionality evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatisticsParameter {
    alpha: f64,
    rational: Option<Ratio<i64>>,
}

impl StatisticsParameter {
    /// Float statistics parameter without an exact form.
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(CoreError::invalid("statistics parameter must be finite"));
        }
        Ok(Self { alpha, rational: None })
    }

    /// Exact rational statistics parameter `num/den`, reduced internally.
    pub fn from_rational(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(CoreError::invalid("rational alpha with zero denominator"));
        }
        let r = Ratio::new(num, den);
        Ok(Self { alpha: *r.numer() as f64 / *r.denom() as f64, rational: Some(r) })
    }

    /// Marks the parameter as known irrational (e.g. a silver-mean phase).
    /// The popcorn limit is then exactly zero.
    pub fn irrational(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(CoreError::invalid("statistics parameter must be finite"));
        }
        Ok(Self { alpha, rational: None })
    }

    pub fn value(&self) -> f64 {
        self.alpha
    }

    /// Reduced rational form `(numerator, denominator)` if known.
    pub fn as_rational(&self) -> Option<(i64, i64)> {
        self.rational.map(|r| (*r.numer(), *r.denom()))
    }
}

/// 2-fractionality: distance of `exp(i*alpha*pi)` from +1 along the circle,
/// `min_q |alpha - 2q|`, always in `[0, 1]`.
pub fn alpha_two(alpha: f64) -> Result<f64> {
    if !alpha.is_finite() {
        return Err(CoreError::invalid("alpha_two of non-finite input"));
    }
    let half = alpha / 2.0;
    Ok(2.0 * (half - half.round()).abs())
}

/// N-fractionality `min_{p<=N-2} min_q |(2p+1) alpha - 2q|`.
pub fn alpha_n(alpha: f64, n: u32) -> Result<f64> {
    if n < 2 {
        return Err(CoreError::invalid("alpha_n requires N >= 2"));
    }
    if !alpha.is_finite() {
        return Err(CoreError::invalid("alpha_n of non-finite input"));
    }
    let mut best = f64::INFINITY;
    for p in 0..=(n - 2) {
        let x = (2.0 * p as f64 + 1.0) * alpha;
        let half = x / 2.0;
        let d = 2.0 * (half - half.round()).abs();
        if d < best {
            best = d;
        }
    }
    Ok(best)
}

/// Exact N-fractionality on rationals, for the popcorn cross-checks.
pub fn alpha_n_exact(alpha: Ratio<i64>, n: u32) -> Result<Ratio<i64>> {
    if n < 2 {
        return Err(CoreError::invalid("alpha_n requires N >= 2"));
    }
    let two = Ratio::from_integer(2);
    let mut best: Option<Ratio<i64>> = None;
    for p in 0..=(n - 2) {
        let x = alpha * Ratio::from_integer(2 * p as i64 + 1);
        // nearest even integer to x
        let q = (x / two).round();
        let d = (x - two * q).abs();
        if best.map_or(true, |b| d < b) {
            best = Some(d);
        }
    }
    Ok(best.unwrap())
}

/// Infinity-fractionality (odd popcorn function).
///
/// Requires the exact rational form: `u/v` reduced with odd numerator
/// gives `1/v`, even numerator gives 0. A parameter constructed via
/// [`StatisticsParameter::irrational`] gives 0. Plain float input is
/// rejected, since no float can decide rationality.
pub fn alpha_infinity(alpha: &StatisticsParameter) -> Result<f64> {
    match alpha.rational {
        Some(r) => {
            if r.numer() % 2 == 0 {
                Ok(0.0)
            } else {
                Ok(1.0 / (*r.denom() as f64))
            }
        }
        None => Err(CoreError::ExactnessRequired(
            "alpha_infinity needs a rational form or an explicit irrational mark".into(),
        )),
    }
}

/// Infinity-fractionality accepting the irrational mark.
///
/// Same as [`alpha_infinity`] but with the convention that a parameter
/// without a rational form is treated as irrational (value 0). Used by
/// the extended-gas functional, where the popcorn term enters a lower
/// bound and 0 is the safe value.
pub fn alpha_infinity_or_zero(alpha: &StatisticsParameter) -> f64 {
    match alpha.rational {
        Some(r) => {
            if r.numer() % 2 == 0 {
                0.0
            } else {
                1.0 / (*r.denom() as f64)
            }
        }
        None => 0.0,
    }
}

/// Exact popcorn value as a rational.
pub fn alpha_infinity_exact(alpha: Ratio<i64>) -> Ratio<i64> {
    if alpha.numer() % 2 == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(1, *alpha.denom())
    }
}
