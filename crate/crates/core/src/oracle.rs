//! Floating-point cross-validation of the symbolic calculus.
//!
//! `l(n)` is evaluated as a genuine iterated natural logarithm (`n > 0`),
//! iterated exponential (`n < 0`) or the identity (`n = 0`), and truncated
//! translation series are compared against direct evaluation at `x0 + y0`.
//! Doubles are a sanity witness here, not the proof; the exact symbolic
//! checks carry the actual verification. Tolerances are relative with an
//! absolute floor of one in the denominator so they behave near zero.

use crate::algebra::Element;
use crate::report::{Report, Verdict};
use crate::series::{translate, YSeries};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericDomainError {
    #[error("iterated log undefined: level {level} needs a positive argument, got {value}")]
    LogUndefined { level: i32, value: f64 },
    #[error("iterated exponential overflows doubles at level {level}")]
    ExpOverflow { level: i32 },
    #[error("fractional power {exponent} of negative base {base}")]
    FractionalPowerOfNegative { base: f64, exponent: String },
    #[error("evaluation did not stay finite")]
    NotFinite,
}

/// Where and how tightly to sample: a level window that must be numerically
/// valid, the base point, the translation offset and a relative tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplePoint {
    pub level_min: i32,
    pub level_max: i32,
    pub x0: f64,
    pub y0: f64,
    pub tolerance: f64,
}

impl SamplePoint {
    pub fn new(level_min: i32, level_max: i32, x0: f64, y0: f64, tolerance: f64) -> Self {
        SamplePoint {
            level_min,
            level_max,
            x0,
            y0,
            tolerance,
        }
    }

    /// Checks that every level in the window is defined at `x0` and `x0 + y0`.
    pub fn validate(&self) -> Result<(), NumericDomainError> {
        for level in self.level_min..=self.level_max {
            eval_level(level, self.x0)?;
            eval_level(level, self.x0 + self.y0)?;
        }
        Ok(())
    }
}

/// The levels touched by translating `l(n)`: the chain factors plus `n` itself.
fn level_window(n: i32) -> (i32, i32) {
    if n >= 0 {
        (0, n)
    } else {
        (n, -1)
    }
}

/// A sample point at which `l(n)` and its translates are comfortably
/// representable in doubles. Iterated exponentials overflow catastrophically,
/// and deep logarithms lose all significance, so only levels `-2..=2` have a
/// good point.
pub fn default_sample_point(n: i32) -> Option<SamplePoint> {
    let x0 = match n {
        0..=2 => 20.0,
        -1 => 3.0,
        -2 => 1.0,
        _ => return None,
    };
    let (lo, hi) = level_window(n);
    Some(SamplePoint::new(lo, hi, x0, 1e-3, 1e-9))
}

/// `l(n)` at `x0`: `n`-fold log for positive `n`, `(-n)`-fold exp for
/// negative `n`, `x0` itself for `n = 0`.
pub fn eval_level(n: i32, x0: f64) -> Result<f64, NumericDomainError> {
    let mut value = x0;
    if n > 0 {
        for level in 1..=n {
            if value <= 0.0 || !value.is_finite() {
                return Err(NumericDomainError::LogUndefined { level, value });
            }
            value = value.ln();
        }
    } else {
        for level in 1..=(-n) {
            value = value.exp();
            if !value.is_finite() {
                return Err(NumericDomainError::ExpOverflow { level: -level });
            }
        }
    }
    Ok(value)
}

/// Evaluates an element at `x0`: the sum over monomials of the coefficient
/// times the product of the evaluated levels raised to their exponents.
pub fn eval_element(e: &Element, x0: f64) -> Result<f64, NumericDomainError> {
    let mut sum = 0.0;
    for (exps, coeff) in e.iter() {
        let mut product = coeff.to_f64();
        for (level, exponent) in exps.iter() {
            let base = eval_level(level, x0)?;
            if base < 0.0 && !exponent.is_integer() {
                return Err(NumericDomainError::FractionalPowerOfNegative {
                    base,
                    exponent: exponent.to_string(),
                });
            }
            product *= base.powf(exponent.to_f64());
        }
        sum += product;
    }
    if !sum.is_finite() {
        return Err(NumericDomainError::NotFinite);
    }
    Ok(sum)
}

/// Evaluates a series at `(x0, y0)` by substituting `y0` for `y` and
/// evaluating every coefficient at `x0`.
pub fn eval_series(s: &YSeries, x0: f64, y0: f64) -> Result<f64, NumericDomainError> {
    let mut sum = 0.0;
    for (k, c) in s.coeffs().iter().enumerate() {
        sum += eval_element(c, x0)? * y0.powi(k as i32);
    }
    if !sum.is_finite() {
        return Err(NumericDomainError::NotFinite);
    }
    Ok(sum)
}

/// Compares the truncated translation series of `l(n)` against direct
/// evaluation at `x0 + y0`, at the point's relative tolerance.
pub fn crosscheck_translate(
    n: i32,
    order: usize,
    point: &SamplePoint,
) -> Result<Report, NumericDomainError> {
    let lhs = eval_series(&translate(&Element::level(n), order), point.x0, point.y0)?;
    let rhs = eval_level(n, point.x0 + point.y0)?;
    let error = (lhs - rhs).abs();
    let verdict = if error <= point.tolerance * rhs.abs().max(1.0) {
        Verdict::Pass
    } else {
        Verdict::FailNumeric { lhs, rhs, error }
    };
    Ok(Report::new(
        "translate-crosscheck",
        vec![
            ("n", n.to_string()),
            ("N", order.to_string()),
            ("x0", point.x0.to_string()),
            ("y0", point.y0.to_string()),
            ("tol", point.tolerance.to_string()),
        ],
        verdict,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn level_zero_is_identity() {
        assert_eq!(eval_level(0, 20.0).unwrap(), 20.0);
    }

    #[test]
    fn positive_levels_iterate_log() {
        let v = eval_level(1, 20.0).unwrap();
        assert!((v - 20.0_f64.ln()).abs() < 1e-15);
        let v2 = eval_level(2, 20.0).unwrap();
        assert!((v2 - 20.0_f64.ln().ln()).abs() < 1e-15);
    }

    #[test]
    fn negative_levels_iterate_exp() {
        let v = eval_level(-2, 1.0).unwrap();
        assert!((v - std::f64::consts::E.exp()).abs() < 1e-12);
    }

    #[test]
    fn third_log_of_two_is_undefined() {
        // ln ln 2 < 0, so the third log does not exist
        let err = eval_level(3, 2.0).unwrap_err();
        assert!(matches!(err, NumericDomainError::LogUndefined { level: 3, .. }));
    }

    #[test]
    fn deep_exponential_overflows() {
        let err = eval_level(-3, 100.0).unwrap_err();
        assert!(matches!(err, NumericDomainError::ExpOverflow { .. }));
    }

    #[test]
    fn element_evaluation() {
        // l(0)^-1 at 20 -> 0.05
        let inv = Element::power(0, Scalar::from_integer(-1));
        assert!((eval_element(&inv, 20.0).unwrap() - 0.05).abs() < 1e-17);

        // l(0) + l(1) at 20 -> 20 + ln 20
        let sum = &Element::level(0) + &Element::level(1);
        let expect = 20.0 + 20.0_f64.ln();
        assert!((eval_element(&sum, 20.0).unwrap() - expect).abs() < 1e-14);

        assert_eq!(eval_element(&Element::one(), 20.0).unwrap(), 1.0);
    }

    #[test]
    fn fractional_power_of_negative_base_is_rejected() {
        // ln ln 20 - something negative? use level 0 at a negative-valued level:
        // l(1) at x0 = 0.5 is negative; raise it to 1/2.
        let e = Element::power(1, Scalar::new(1, 2));
        let err = eval_element(&e, 0.5).unwrap_err();
        assert!(matches!(
            err,
            NumericDomainError::FractionalPowerOfNegative { .. }
        ));
    }

    #[test]
    fn crosscheck_log_series() {
        let p = SamplePoint::new(0, 1, 20.0, 1e-3, 1e-12);
        let report = crosscheck_translate(1, 6, &p).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn crosscheck_linear_case_is_exact() {
        // translate(l(0), 1) evaluates to exactly x0 + y0
        let p = SamplePoint::new(0, 0, 17.25, 1e-3, 1e-12);
        let report = crosscheck_translate(0, 1, &p).unwrap();
        assert!(report.passed(), "{report}");
        match report.verdict {
            Verdict::Pass => {}
            _ => unreachable!(),
        }
        let lhs = eval_series(&translate(&Element::level(0), 1), 17.25, 1e-3).unwrap();
        assert_eq!(lhs, 17.25 + 1e-3);
    }

    #[test]
    fn crosscheck_exponential_series() {
        let p = SamplePoint::new(-1, -1, 2.0, 1e-3, 1e-12);
        let report = crosscheck_translate(-1, 6, &p).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn crosscheck_detects_bad_tolerance() {
        // with a huge y0 and tiny order the truncation error is visible
        let p = SamplePoint::new(0, 1, 20.0, 5.0, 1e-12);
        let report = crosscheck_translate(1, 1, &p).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn default_points_are_valid() {
        for n in -2..=2 {
            let p = default_sample_point(n).unwrap();
            p.validate().unwrap();
        }
        assert!(default_sample_point(3).is_none());
        assert!(default_sample_point(-3).is_none());
    }
}
