//! The commutative algebra of iterated-logarithm monomials.
//!
//! Basis elements are finite products `l(i_1)^{r_1} * ... * l(i_k)^{r_k}`
//! where each level index is an integer and each exponent is an exact
//! rational. `l(0)(x)` stands for `x` itself, positive levels for iterated
//! natural logarithms and negative levels for iterated exponentials.
//! An [`Element`] is a finite rational linear combination of such monomials,
//! kept in a canonical sorted, merged, zero-free form so that structural
//! equality coincides with equality in the algebra.

mod derivation;

pub(crate) use derivation::chain_levels;
pub use derivation::derive_power;

use crate::scalar::Scalar;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Error returned when inverting anything but a single nonzero monomial.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("element is not a unit monomial (single term with nonzero coefficient)")]
pub struct NotAUnit;

/// A finitely supported map from level index to rational exponent.
///
/// Zero exponents are never stored, so two vectors are equal exactly when
/// they denote the same monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExponentVector {
    exps: BTreeMap<i32, Scalar>,
}

impl ExponentVector {
    pub fn empty() -> Self {
        ExponentVector {
            exps: BTreeMap::new(),
        }
    }

    /// A single `l(level)^exponent` factor. Zero exponents yield the empty vector.
    pub fn single(level: i32, exponent: Scalar) -> Self {
        let mut exps = BTreeMap::new();
        if !exponent.is_zero() {
            exps.insert(level, exponent);
        }
        ExponentVector { exps }
    }

    /// Builds a vector from `(level, exponent)` pairs, summing duplicates and
    /// dropping zero results.
    pub fn from_pairs<I: IntoIterator<Item = (i32, Scalar)>>(pairs: I) -> Self {
        let mut exps: BTreeMap<i32, Scalar> = BTreeMap::new();
        for (level, exp) in pairs {
            let entry = exps.entry(level).or_insert_with(Scalar::zero);
            *entry += &exp;
        }
        exps.retain(|_, e| !e.is_zero());
        ExponentVector { exps }
    }

    /// The exponent at `level`; zero when absent.
    pub fn get(&self, level: i32) -> Scalar {
        self.exps.get(&level).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    /// Supported levels in increasing order.
    pub fn levels(&self) -> impl Iterator<Item = i32> + '_ {
        self.exps.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &Scalar)> {
        self.exps.iter().map(|(l, e)| (*l, e))
    }

    /// Pointwise sum, dropping cancelled levels.
    pub fn add(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (level, exp) in &other.exps {
            let entry = exps.entry(*level).or_insert_with(Scalar::zero);
            *entry += exp;
        }
        exps.retain(|_, e| !e.is_zero());
        ExponentVector { exps }
    }

    pub fn negate(&self) -> Self {
        ExponentVector {
            exps: self.exps.iter().map(|(l, e)| (*l, -e)).collect(),
        }
    }

    /// This vector with the entry at `level` removed.
    pub fn without(&self, level: i32) -> Self {
        let mut exps = self.exps.clone();
        exps.remove(&level);
        ExponentVector { exps }
    }
}

/// Compares by walking the union of supports in increasing level order,
/// treating absent levels as exponent zero; the first differing exponent
/// decides. This is the fixed total order behind canonical element form.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.exps.iter();
        let mut b = other.exps.iter();
        let zero = Scalar::zero();
        let mut na = a.next();
        let mut nb = b.next();
        loop {
            match (na, nb) {
                (None, None) => return Ordering::Equal,
                // stored exponents are nonzero, so these decide immediately
                (Some((_, ea)), None) => return ea.cmp(&zero),
                (None, Some((_, eb))) => return zero.cmp(eb),
                (Some((la, ea)), Some((lb, eb))) => match la.cmp(lb) {
                    Ordering::Less => return ea.cmp(&zero),
                    Ordering::Greater => return zero.cmp(eb),
                    Ordering::Equal => {
                        let ord = ea.cmp(eb);
                        if ord != Ordering::Equal {
                            return ord;
                        }
                        na = a.next();
                        nb = b.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One term: a rational coefficient times a monomial in the `l(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coefficient: Scalar,
    pub exponents: ExponentVector,
}

impl Monomial {
    pub fn new(coefficient: Scalar, exponents: ExponentVector) -> Self {
        Monomial {
            coefficient,
            exponents,
        }
    }
}

/// A member of the algebra: a finite linear combination of monomials in
/// canonical form (sorted by exponent vector, merged, no zero coefficients).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<ExponentVector, Scalar>,
}

impl Element {
    /// The zero element (empty term list).
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    /// The unit: coefficient 1 on the empty monomial.
    pub fn one() -> Self {
        Element::from_scalar(Scalar::one())
    }

    pub fn from_scalar(s: Scalar) -> Self {
        Element::monomial(s, ExponentVector::empty())
    }

    /// The generator `l(level)`.
    pub fn level(level: i32) -> Self {
        Element::power(level, Scalar::one())
    }

    /// `l(level)^exponent`.
    pub fn power(level: i32, exponent: Scalar) -> Self {
        Element::monomial(Scalar::one(), ExponentVector::single(level, exponent))
    }

    pub fn monomial(coefficient: Scalar, exponents: ExponentVector) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponents, coefficient);
        }
        Element { terms }
    }

    /// Collects monomials into canonical form, merging duplicates.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(monomials: I) -> Self {
        let mut terms: BTreeMap<ExponentVector, Scalar> = BTreeMap::new();
        for m in monomials {
            let entry = terms.entry(m.exponents).or_insert_with(Scalar::zero);
            *entry += &m.coefficient;
        }
        terms.retain(|_, c| !c.is_zero());
        Element { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ExponentVector::empty())
                .is_some_and(|c| c.is_one())
    }

    /// Number of monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&ExponentVector, &Scalar)> {
        self.terms.iter()
    }

    /// Owned monomials in canonical order.
    pub fn monomials(&self) -> Vec<Monomial> {
        self.terms
            .iter()
            .map(|(e, c)| Monomial::new(c.clone(), e.clone()))
            .collect()
    }

    /// The single monomial, if this element has exactly one term.
    pub fn as_monomial(&self) -> Option<Monomial> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some(Monomial::new(c.clone(), e.clone()))
        } else {
            None
        }
    }

    /// Inverse of a unit monomial: reciprocal coefficient, negated exponents.
    pub fn invert_unit(&self) -> Result<Element, NotAUnit> {
        let m = self.as_monomial().ok_or(NotAUnit)?;
        Ok(Element::monomial(
            m.coefficient.recip(),
            m.exponents.negate(),
        ))
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        if s.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * s))
                .collect(),
        }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Scalar::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Element { terms }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Scalar::zero);
            *entry -= c;
        }
        terms.retain(|_, c| !c.is_zero());
        Element { terms }
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        let mut terms: BTreeMap<ExponentVector, Scalar> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps = ea.add(eb);
                let entry = terms.entry(exps).or_insert_with(Scalar::zero);
                *entry += &(ca * cb);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Element { terms }
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (level, exp) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if exp.is_one() {
                write!(f, "l({level})")?;
            } else {
                write!(f, "l({level})^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Renders a monomial without a leading sign; the caller supplies it.
fn fmt_magnitude(coeff: &Scalar, exps: &ExponentVector, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mag = coeff.abs();
    if exps.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{exps}")
    } else {
        write!(f, "{mag}*{exps}")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, coeff)) in self.terms.iter().enumerate() {
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            fmt_magnitude(coeff, exps, f)?;
        }
        Ok(())
    }
}
