//! Truncated formal power series in the translation variable `y`.
//!
//! A [`YSeries`] of order `N` keeps the coefficients of `y^0 .. y^N`
//! exactly; all arithmetic is modulo `y^(N+1)`. The translation operator
//! [`translate`] realizes `e^(y d/dx)`, whose coefficient of `y^k` is the
//! `k`-th derivative divided by `k!`. Composition with the formal series
//!
//! ```text
//! log(1+X) = sum_{i>=1} (-1)^(i-1)/i * X^i        e^X = sum_{i>=0} X^i/i!
//! ```
//!
//! is defined whenever `X` has no constant term, which keeps every
//! truncated sum finite. [`verify_log_recursion`] and
//! [`verify_exp_recursion`] check, coefficient by coefficient, that
//!
//! ```text
//! l(n+1)(x+y) = l(n+1)(x) + log(1 + (l(n)(x+y) - l(n)(x)) / l(n)(x))
//! l(n)(x+y)   = l(n)(x) * e^(l(n+1)(x+y) - l(n+1)(x))
//! ```
//!
//! hold identically up to the requested order.

use crate::algebra::Element;
use crate::report::{Report, Verdict};
use crate::scalar::Scalar;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series composition needs a zero constant term")]
    NotWellDefined,
}

/// A truncated power series in `y` with [`Element`] coefficients.
///
/// Order `N` means exactly `N + 1` coefficient slots; two series are equal
/// iff their orders match and all coefficients agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YSeries {
    coeffs: Vec<Element>,
}

impl YSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        YSeries {
            coeffs: vec![Element::zero(); order + 1],
        }
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        YSeries::constant(Element::one(), order)
    }

    /// A constant series with the given `y^0` coefficient.
    pub fn constant(c: Element, order: usize) -> Self {
        let mut coeffs = vec![Element::zero(); order + 1];
        coeffs[0] = c;
        YSeries { coeffs }
    }

    /// Builds a series from coefficients `c_0 .. c_N`; the vector length
    /// fixes the order and must be at least one.
    pub fn from_coeffs(coeffs: Vec<Element>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the y^0 slot");
        YSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `y^k`.
    pub fn coeff(&self, k: usize) -> &Element {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Element::is_zero)
    }

    fn check_orders(&self, rhs: &Self) -> Result<(), SeriesError> {
        if self.order() != rhs.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_orders(rhs)?;
        Ok(YSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_orders(rhs)?;
        Ok(YSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the shared order.
    pub fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_orders(rhs)?;
        let order = self.order();
        let mut coeffs = vec![Element::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(YSeries { coeffs })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        YSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect(),
        }
    }

    pub fn scale_by_element(&self, e: &Element) -> Self {
        YSeries {
            coeffs: self.coeffs.iter().map(|c| c * e).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        YSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// `log(1 + self)`, requiring a zero constant term.
    pub fn log1p(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NotWellDefined);
        }
        let order = self.order();
        let mut acc = YSeries::zero(order);
        let mut power = self.clone();
        for i in 1..=order {
            // (-1)^(i-1) / i
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let coef = Scalar::new(sign, i as i64);
            acc = acc.add(&power.scale(&coef)).expect("orders agree");
            if i < order {
                power = power.mul(self).expect("orders agree");
            }
        }
        Ok(acc)
    }

    /// `e^self`, requiring a zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NotWellDefined);
        }
        let order = self.order();
        let mut acc = YSeries::one(order);
        let mut power = YSeries::one(order);
        for i in 1..=order {
            power = power.mul(self).expect("orders agree");
            acc = acc
                .add(&power.scale(&Scalar::factorial(i).recip()))
                .expect("orders agree");
        }
        Ok(acc)
    }

    /// First power of `y` whose coefficient is nonzero, if any.
    pub fn first_nonzero(&self) -> Option<(usize, &Element)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c))
    }
}

/// The translation `e^(y d/dx)` applied to `e`, truncated at `order`:
/// the coefficient of `y^k` is `(d/dx)^k e / k!`.
pub fn translate(e: &Element, order: usize) -> YSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut derivative = e.clone();
    for k in 0..=order {
        if k > 0 {
            derivative = derivative.derive();
        }
        coeffs.push(derivative.scale(&Scalar::factorial(k).recip()));
    }
    YSeries { coeffs }
}

fn difference_report(identity: &str, params: Vec<(&'static str, String)>, diff: &YSeries) -> Report {
    let verdict = match diff.first_nonzero() {
        None => Verdict::Pass,
        Some((k, c)) => Verdict::Fail {
            power: Some(k),
            difference: c.clone(),
        },
    };
    Report::new(identity, params, verdict)
}

/// Checks `l(n+1)(x+y) = l(n+1)(x) + log(1 + (l(n)(x+y) - l(n)(x))/l(n)(x))`
/// exactly at every power of `y` up to `order`.
pub fn verify_log_recursion(n: i32, order: usize) -> Report {
    let ln = Element::level(n);
    let ln_next = Element::level(n + 1);

    let left = translate(&ln_next, order);

    let increment = translate(&ln, order)
        .sub(&YSeries::constant(ln.clone(), order))
        .expect("orders agree");
    let ratio = increment.scale_by_element(&ln.invert_unit().expect("l(n) is a unit monomial"));
    let right = YSeries::constant(ln_next, order)
        .add(&ratio.log1p().expect("constant term cancelled"))
        .expect("orders agree");

    let diff = left.sub(&right).expect("orders agree");
    difference_report(
        "log-recursion",
        vec![("n", n.to_string()), ("N", order.to_string())],
        &diff,
    )
}

/// Checks the solved form `l(n)(x+y) = l(n)(x) * e^(l(n+1)(x+y) - l(n+1)(x))`
/// exactly at every power of `y` up to `order`.
pub fn verify_exp_recursion(n: i32, order: usize) -> Report {
    let ln = Element::level(n);
    let ln_next = Element::level(n + 1);

    let left = translate(&ln, order);

    let increment = translate(&ln_next, order)
        .sub(&YSeries::constant(ln_next, order))
        .expect("orders agree");
    let right = increment
        .exp()
        .expect("constant term cancelled")
        .scale_by_element(&ln);

    let diff = left.sub(&right).expect("orders agree");
    difference_report(
        "exp-recursion",
        vec![("n", n.to_string()), ("N", order.to_string())],
        &diff,
    )
}
