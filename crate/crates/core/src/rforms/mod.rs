//! Formal polynomial forms in a positive-integer parameter `r`.
//!
//! An [`RForm`] is a finite sum of terms `q(r) * prod_i l(i)^(p_i(r))` with
//! polynomial coefficient and exponents; substituting any integer `r >= 1`
//! yields an [`Element`]. A form is *reduced* when its exponent-polynomial
//! tuples are pairwise distinct; every function representable by a form has
//! exactly one reduced representation, which is what makes the substitution
//! `r -> 0` (the formal limit) well defined.
//!
//! The derivation lifts to forms symbolically: the power rule multiplies the
//! coefficient by the exponent polynomial and decrements the exponent by the
//! constant one. [`derive_power_over_r`] builds the iterated derivatives of
//! `l(n)^r / r` — the quotient itself is not a form, but its first derivative
//! `l(n)^(r-1) * d/dx l(n)` is, and the verifiers check that its limit
//! recovers the derivatives of `l(n+1)` and that limits commute with `d/dx`.

mod poly;

pub use poly::RPoly;

use crate::algebra::{chain_levels, Element, ExponentVector, Monomial};
use crate::report::{Report, Verdict};
use crate::scalar::Scalar;
use crate::series::translate;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RFormError {
    #[error("substitution point must be a positive integer, got {0}")]
    OutOfDomain(i64),
    #[error("l(n)^r/r is not itself a formal polynomial form; need m >= 1")]
    NotAPolynomialForm,
}

/// One summand `q(r) * prod_i l(i)^(p_i(r))`.
///
/// Identically-zero exponent polynomials are never stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RMonomial {
    coefficient: RPoly,
    exponents: BTreeMap<i32, RPoly>,
}

impl RMonomial {
    /// Builds a summand, summing duplicate levels and dropping zero
    /// exponent polynomials.
    pub fn new<I: IntoIterator<Item = (i32, RPoly)>>(coefficient: RPoly, exponents: I) -> Self {
        RMonomial {
            coefficient,
            exponents: merge_exponents(exponents),
        }
    }

    pub fn coefficient(&self) -> &RPoly {
        &self.coefficient
    }

    pub fn exponents(&self) -> impl Iterator<Item = (i32, &RPoly)> {
        self.exponents.iter().map(|(l, p)| (*l, p))
    }

    pub fn exponent(&self, level: i32) -> RPoly {
        self.exponents
            .get(&level)
            .cloned()
            .unwrap_or_else(RPoly::zero)
    }

    fn substitute(&self, at: &Scalar) -> Monomial {
        Monomial::new(
            self.coefficient.eval(at),
            ExponentVector::from_pairs(self.exponents.iter().map(|(l, p)| (*l, p.eval(at)))),
        )
    }
}

fn merge_exponents<I: IntoIterator<Item = (i32, RPoly)>>(pairs: I) -> BTreeMap<i32, RPoly> {
    let mut map: BTreeMap<i32, RPoly> = BTreeMap::new();
    for (level, p) in pairs {
        let entry = map.entry(level).or_default();
        *entry = &*entry + &p;
    }
    map.retain(|_, p| !p.is_zero());
    map
}

/// A formal polynomial form: a finite sum of [`RMonomial`]s.
///
/// Terms with identically-zero coefficient polynomial are never stored. The
/// `reduced` flag records that the exponent tuples are known to be pairwise
/// distinct (and the terms sorted), which [`RForm::reduce`] establishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RForm {
    terms: Vec<RMonomial>,
    reduced: bool,
}

impl RForm {
    pub fn zero() -> Self {
        RForm {
            terms: Vec::new(),
            reduced: true,
        }
    }

    pub fn one() -> Self {
        RForm::constant(RPoly::one())
    }

    /// The pure-coefficient form `q(r)`.
    pub fn constant(q: RPoly) -> Self {
        RForm::from_terms(vec![RMonomial::new(q, [])])
    }

    /// `l(level)^(p(r))`.
    pub fn power(level: i32, p: RPoly) -> Self {
        RForm::from_terms(vec![RMonomial::new(RPoly::one(), [(level, p)])])
    }

    pub fn from_terms(terms: Vec<RMonomial>) -> Self {
        let terms: Vec<RMonomial> = terms
            .into_iter()
            .filter(|t| !t.coefficient.is_zero())
            .collect();
        let reduced = terms.is_empty();
        RForm { terms, reduced }
    }

    pub fn terms(&self) -> &[RMonomial] {
        &self.terms
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Substitutes a positive integer for `r`.
    pub fn eval(&self, r: i64) -> Result<Element, RFormError> {
        if r < 1 {
            return Err(RFormError::OutOfDomain(r));
        }
        Ok(self.substitute(&Scalar::from_integer(r)))
    }

    fn substitute(&self, at: &Scalar) -> Element {
        Element::from_monomials(self.terms.iter().map(|t| t.substitute(at)))
    }

    /// The lifted derivation: term by term, level by level, the power rule
    /// with polynomial exponents. Commutes with every substitution `r >= 1`.
    pub fn derive(&self) -> RForm {
        let mut out = Vec::new();
        for term in &self.terms {
            for (level, p) in term.exponents.iter() {
                let coefficient = &term.coefficient * p;
                if coefficient.is_zero() {
                    continue;
                }
                let mut pairs: Vec<(i32, RPoly)> = term
                    .exponents
                    .iter()
                    .map(|(l, q)| (*l, q.clone()))
                    .collect();
                pairs.push((*level, &RPoly::zero() - &RPoly::one()));
                for (k, off) in chain_levels(*level) {
                    pairs.push((k, RPoly::constant(Scalar::from_integer(off))));
                }
                out.push(RMonomial::new(coefficient, pairs));
            }
        }
        RForm::from_terms(out)
    }

    /// Groups terms by exact equality of exponent-polynomial tuples, sums
    /// their coefficients and drops the cancelled ones. The result is the
    /// unique reduced representation, sorted deterministically.
    pub fn reduce(&self) -> RForm {
        let mut groups: BTreeMap<BTreeMap<i32, RPoly>, RPoly> = BTreeMap::new();
        for term in &self.terms {
            let entry = groups.entry(term.exponents.clone()).or_default();
            *entry = &*entry + &term.coefficient;
        }
        let terms: Vec<RMonomial> = groups
            .into_iter()
            .filter(|(_, q)| !q.is_zero())
            .map(|(exponents, coefficient)| RMonomial {
                coefficient,
                exponents,
            })
            .collect();
        RForm {
            terms,
            reduced: true,
        }
    }

    /// The formal limit `r -> 0`: substitute zero into the reduced form.
    pub fn limit(&self) -> Element {
        self.reduce().substitute(&Scalar::zero())
    }

    /// Term-list sum; no grouping is attempted.
    pub fn add(&self, rhs: &RForm) -> RForm {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        RForm::from_terms(terms)
    }

    /// Pairwise product: coefficients multiply, exponent polynomials add.
    pub fn mul(&self, rhs: &RForm) -> RForm {
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &rhs.terms {
                let coefficient = &a.coefficient * &b.coefficient;
                let pairs = a
                    .exponents
                    .iter()
                    .chain(b.exponents.iter())
                    .map(|(l, p)| (*l, p.clone()));
                terms.push(RMonomial::new(coefficient, pairs));
            }
        }
        RForm::from_terms(terms)
    }

    pub fn scale(&self, q: &RPoly) -> RForm {
        RForm::from_terms(
            self.terms
                .iter()
                .map(|t| RMonomial {
                    coefficient: &t.coefficient * q,
                    exponents: t.exponents.clone(),
                })
                .collect(),
        )
    }
}

/// `(d/dx)^m (l(n)^r / r)` as a formal polynomial form, for `m >= 1`.
///
/// The seed after one differentiation is `l(n)^(r-1) * d/dx l(n)` — the
/// power rule's factor `r` cancels the `1/r` — and further derivatives are
/// taken symbolically.
pub fn derive_power_over_r(n: i32, m: usize) -> Result<RForm, RFormError> {
    if m == 0 {
        return Err(RFormError::NotAPolynomialForm);
    }
    let r_minus_one = &RPoly::var() - &RPoly::one();
    let mut pairs = vec![(n, r_minus_one)];
    for (k, off) in chain_levels(n) {
        pairs.push((k, RPoly::constant(Scalar::from_integer(off))));
    }
    let mut form = RForm::from_terms(vec![RMonomial::new(RPoly::one(), pairs)]);
    for _ in 1..m {
        form = form.derive();
    }
    Ok(form)
}

/// Checks that the formal limit commutes with the derivation on `f`.
pub fn verify_lim_derive_commute(f: &RForm) -> Report {
    let left = f.derive().limit();
    let right = f.limit().derive();
    let diff = &left - &right;
    let verdict = if diff.is_zero() {
        Verdict::Pass
    } else {
        Verdict::Fail {
            power: None,
            difference: diff,
        }
    };
    Report::new(
        "limit-derive-commute",
        vec![("terms", f.terms.len().to_string())],
        verdict,
    )
}

/// Checks `lim_{r->0} (d/dx)^m (l(n)^r / r) = (d/dx)^m l(n+1)` exactly.
pub fn verify_itloglim(n: i32, m: usize) -> Result<Report, RFormError> {
    let left = derive_power_over_r(n, m)?.limit();
    let right = Element::level(n + 1).derive_n(m);
    let diff = &left - &right;
    let verdict = if diff.is_zero() {
        Verdict::Pass
    } else {
        Verdict::Fail {
            power: None,
            difference: diff,
        }
    };
    Ok(Report::new(
        "iterated-log-limit",
        vec![("n", n.to_string()), ("m", m.to_string())],
        verdict,
    ))
}

/// Checks, power by power, that the limits of `(d/dx)^k (l(n)^r / r) / k!`
/// are the series coefficients of the translated `l(n+1)`.
pub fn verify_translated_limit(n: i32, order: usize) -> Report {
    let translated = translate(&Element::level(n + 1), order);
    let mut verdict = Verdict::Pass;
    for k in 1..=order {
        let form = derive_power_over_r(n, k).expect("k >= 1");
        let left = form.limit().scale(&Scalar::factorial(k).recip());
        let diff = &left - translated.coeff(k);
        if !diff.is_zero() {
            verdict = Verdict::Fail {
                power: Some(k),
                difference: diff,
            };
            break;
        }
    }
    Report::new(
        "translated-limit",
        vec![("n", n.to_string()), ("N", order.to_string())],
        verdict,
    )
}

impl fmt::Display for RMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single_term = self
            .coefficient
            .coeffs()
            .iter()
            .filter(|c| !c.is_zero())
            .count()
            <= 1;
        let mut wrote = false;
        if self.exponents.is_empty() || !self.coefficient.is_constant() || !self.coefficient.coeff(0).is_one()
        {
            if single_term {
                write!(f, "{}", self.coefficient)?;
            } else {
                write!(f, "({})", self.coefficient)?;
            }
            wrote = true;
        }
        for (level, p) in self.exponents.iter() {
            if wrote {
                write!(f, "*")?;
            }
            wrote = true;
            if p.is_constant() {
                let c = p.coeff(0);
                if c.is_one() {
                    write!(f, "l({level})")?;
                } else {
                    write!(f, "l({level})^{c}")?;
                }
            } else if *p == RPoly::var() {
                write!(f, "l({level})^r")?;
            } else {
                write!(f, "l({level})^({p})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for RForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }

    fn r() -> RPoly {
        RPoly::var()
    }

    /// `q(r) = r`, exponent `r` at level 0: the form `r * l(0)^r`.
    fn r_l0_r() -> RForm {
        RForm::power(0, r()).scale(&r())
    }

    #[test]
    fn eval_substitutes_everywhere() {
        // r * l(0)^r at r=2 -> 2 * l(0)^2
        assert_eq!(
            r_l0_r().eval(2).unwrap(),
            Element::power(0, int(2)).scale(&int(2))
        );
    }

    #[test]
    fn eval_can_cancel() {
        // (r-1) * l(1)^r at r=1 -> 0
        let f = RForm::power(1, r()).scale(&(&r() - &RPoly::one()));
        assert_eq!(f.eval(1).unwrap(), Element::zero());
    }

    #[test]
    fn eval_exponent_can_vanish() {
        // l(0)^(r-1) at r=1 -> 1
        let f = RForm::power(0, &r() - &RPoly::one());
        assert_eq!(f.eval(1).unwrap(), Element::one());
    }

    #[test]
    fn eval_rejects_nonpositive_points() {
        assert_eq!(r_l0_r().eval(0), Err(RFormError::OutOfDomain(0)));
        assert_eq!(r_l0_r().eval(-3), Err(RFormError::OutOfDomain(-3)));
    }

    #[test]
    fn derive_power_rule_level_zero() {
        // d/dx l(0)^r = r * l(0)^(r-1)
        let d = RForm::power(0, r()).derive();
        let expected = RForm::from_terms(vec![RMonomial::new(
            r(),
            [(0, &r() - &RPoly::one())],
        )]);
        assert_eq!(d, expected);
    }

    #[test]
    fn derive_power_rule_level_one() {
        // d/dx l(1)^r = r * l(1)^(r-1) * l(0)^-1
        let d = RForm::power(1, r()).derive();
        let expected = RForm::from_terms(vec![RMonomial::new(
            r(),
            [
                (1, &r() - &RPoly::one()),
                (0, RPoly::constant(int(-1))),
            ],
        )]);
        assert_eq!(d, expected);
    }

    #[test]
    fn derive_of_pure_coefficient_is_zero() {
        assert_eq!(RForm::one().derive(), RForm::zero());
        assert_eq!(RForm::constant(r()).derive(), RForm::zero());
    }

    #[test]
    fn reduce_merges_identical_exponent_tuples() {
        let f = r_l0_r().add(&r_l0_r());
        let reduced = f.reduce();
        assert!(reduced.is_reduced());
        assert_eq!(
            reduced.terms(),
            &[RMonomial::new(r().scale(&int(2)), [(0, r())])]
        );
    }

    #[test]
    fn reduce_keeps_distinct_tuples() {
        // r*l(0)^r + r^2*l(0)^(r+1) is already reduced
        let a = RMonomial::new(r(), [(0, r())]);
        let b = RMonomial::new(&r() * &r(), [(0, &r() + &RPoly::one())]);
        let f = RForm::from_terms(vec![b.clone(), a.clone()]);
        let reduced = f.reduce();
        assert_eq!(reduced.terms(), &[a, b]);
    }

    #[test]
    fn reduce_sums_coefficients() {
        // r*l(1)^r + (1-r)*l(1)^r -> l(1)^r
        let f = RForm::power(1, r())
            .scale(&r())
            .add(&RForm::power(1, r()).scale(&(&RPoly::one() - &r())));
        assert_eq!(
            f.reduce().terms(),
            &[RMonomial::new(RPoly::one(), [(1, r())])]
        );
    }

    #[test]
    fn limit_of_seed_form() {
        // lim_{r->0} l(n)^(r-1) * d/dx l(n) = l(n)^-1 * d/dx l(n)
        for n in [-2, 0, 2] {
            let seed = derive_power_over_r(n, 1).unwrap();
            let expected =
                &Element::power(n, int(-1)) * &Element::level(n).derive();
            assert_eq!(seed.limit(), expected);
        }
    }

    #[test]
    fn limit_kills_vanishing_coefficient() {
        // lim r * l(2)^r = 0
        let f = RForm::power(2, r()).scale(&r());
        assert_eq!(f.limit(), Element::zero());
    }

    #[test]
    fn limit_of_vanishing_exponent() {
        // lim l(0)^r = 1
        assert_eq!(RForm::power(0, r()).limit(), Element::one());
    }

    #[test]
    fn seed_of_derivative_tower() {
        // (d/dx)(l(0)^r / r) = l(0)^(r-1)
        let f = derive_power_over_r(0, 1).unwrap();
        assert_eq!(f, RForm::power(0, &r() - &RPoly::one()));

        // (d/dx)(l(1)^r / r) = l(1)^(r-1) * l(0)^-1
        let g = derive_power_over_r(1, 1).unwrap();
        let expected = RForm::from_terms(vec![RMonomial::new(
            RPoly::one(),
            [
                (1, &r() - &RPoly::one()),
                (0, RPoly::constant(int(-1))),
            ],
        )]);
        assert_eq!(g, expected);
    }

    #[test]
    fn quotient_itself_is_rejected() {
        assert_eq!(derive_power_over_r(5, 0), Err(RFormError::NotAPolynomialForm));
    }

    #[test]
    fn commute_on_simple_forms() {
        // f = l(0)^r: both sides vanish
        let f = RForm::power(0, r());
        assert!(verify_lim_derive_commute(&f).passed());

        // f = l(1)^(r+1): both sides are l(0)^-1
        let g = RForm::power(1, &r() + &RPoly::one());
        let left = g.derive().limit();
        let right = g.limit().derive();
        assert_eq!(left, Element::power(0, int(-1)));
        assert_eq!(left, right);
        assert!(verify_lim_derive_commute(&g).passed());
    }

    #[test]
    fn iterated_log_limit_hand_cases() {
        // n=0, m=1: lim l(0)^(r-1) = l(0)^-1 = d/dx l(1)
        assert!(verify_itloglim(0, 1).unwrap().passed());
        // n=-1, m=1: lim l(-1)^r = 1 = d/dx l(0)
        assert!(verify_itloglim(-1, 1).unwrap().passed());
        // n=1, m=1: l(1)^-1 * l(0)^-1 = d/dx l(2)
        assert!(verify_itloglim(1, 1).unwrap().passed());
        assert_eq!(verify_itloglim(1, 0), Err(RFormError::NotAPolynomialForm));
    }

    #[test]
    fn translated_limit_small_grids() {
        assert!(verify_translated_limit(0, 3).passed());
        assert!(verify_translated_limit(-2, 2).passed());
        // vacuous at order zero
        assert!(verify_translated_limit(7, 0).passed());
    }

    #[test]
    fn display_round_shape() {
        let f = r_l0_r().add(&RForm::power(1, &r() - &RPoly::one()));
        assert_eq!(f.to_string(), "r*l(0)^r + l(1)^(r - 1)");
        assert_eq!(RForm::zero().to_string(), "0");
    }
}
