//! Dense univariate polynomials in the parameter `r` over [`Scalar`].
//!
//! Coefficients are stored in ascending degree order with no trailing zeros,
//! so equality is coefficient-wise and the zero polynomial is the empty
//! vector.

use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct RPoly {
    coeffs: Vec<Scalar>,
}

impl RPoly {
    pub fn zero() -> Self {
        RPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        if c.is_zero() {
            RPoly::zero()
        } else {
            RPoly { coeffs: vec![c] }
        }
    }

    /// The variable `r`.
    pub fn var() -> Self {
        RPoly {
            coeffs: vec![Scalar::zero(), Scalar::one()],
        }
    }

    /// Builds from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        let mut p = RPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with the convention that constants (including zero) have degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `r^k` (zero when absent).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    pub fn eval_int(&self, at: i64) -> Scalar {
        self.eval(&Scalar::from_integer(at))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return RPoly::zero();
        }
        RPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

impl Add for &RPoly {
    type Output = RPoly;
    fn add(self, rhs: &RPoly) -> RPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) + &rhs.coeff(k));
        }
        RPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RPoly {
    type Output = RPoly;
    fn sub(self, rhs: &RPoly) -> RPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) - &rhs.coeff(k));
        }
        RPoly::from_coeffs(coeffs)
    }
}

impl Mul for &RPoly {
    type Output = RPoly;
    fn mul(self, rhs: &RPoly) -> RPoly {
        if self.is_zero() || rhs.is_zero() {
            return RPoly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        RPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RPoly {
    type Output = RPoly;
    fn neg(self) -> RPoly {
        RPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Prints in descending powers, e.g. `r^2 - 2*r + 1`; parseable by the CLI
/// expression grammar.
impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "r")?;
                    } else {
                        write!(f, "r^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
