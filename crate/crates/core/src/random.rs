//! Seeded random generators for elements, forms and series.
//!
//! Verification sweeps and the randomized law checks all draw from here so
//! that a fixed seed reproduces a run exactly. The default bounds keep
//! inputs small enough for fast exact arithmetic while still exercising
//! merging, cancellation and grouping.

use crate::algebra::{Element, ExponentVector, Monomial};
use crate::rforms::{RForm, RMonomial, RPoly};
use crate::scalar::Scalar;
use crate::series::YSeries;
use rand::Rng;
use std::ops::RangeInclusive;

/// Size bounds for random [`Element`]s.
#[derive(Debug, Clone)]
pub struct ElementBounds {
    /// Maximum number of monomials.
    pub max_monomials: usize,
    /// Allowed level indices.
    pub levels: RangeInclusive<i32>,
    /// Maximum supported levels per monomial.
    pub max_support: usize,
    /// Coefficients are integers in `[-coeff_bound, coeff_bound]`, nonzero.
    pub coeff_bound: i64,
    /// Exponent numerators lie in `[-exponent_bound, exponent_bound]`.
    pub exponent_bound: i64,
    /// Also draw half-integer exponents, not just integers.
    pub half_exponents: bool,
}

impl Default for ElementBounds {
    fn default() -> Self {
        ElementBounds {
            max_monomials: 3,
            levels: -3..=3,
            max_support: 3,
            coeff_bound: 9,
            exponent_bound: 6,
            half_exponents: true,
        }
    }
}

/// Size bounds for random [`RForm`]s: at most four summands, levels in
/// `[-3, 3]`, polynomial degrees at most three, integer coefficients in
/// `[-9, 9]`.
#[derive(Debug, Clone)]
pub struct RFormBounds {
    pub max_terms: usize,
    pub levels: RangeInclusive<i32>,
    pub max_support: usize,
    pub max_degree: usize,
    pub coeff_bound: i64,
}

impl Default for RFormBounds {
    fn default() -> Self {
        RFormBounds {
            max_terms: 4,
            levels: -3..=3,
            max_support: 3,
            max_degree: 3,
            coeff_bound: 9,
        }
    }
}

fn nonzero_int<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let v = rng.random_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

/// A nonzero rational exponent, integer or half-integer per the bounds.
fn random_exponent<R: Rng + ?Sized>(rng: &mut R, bounds: &ElementBounds) -> Scalar {
    let numer = nonzero_int(rng, bounds.exponent_bound);
    let denom = if bounds.half_exponents && rng.random_bool(0.5) {
        2
    } else {
        1
    };
    Scalar::new(numer, denom)
}

/// A random element within the bounds; duplicate monomials may merge or
/// cancel, so the result can have fewer terms than drawn (even zero).
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, bounds: &ElementBounds) -> Element {
    let n_monomials = rng.random_range(1..=bounds.max_monomials);
    let mut monomials = Vec::with_capacity(n_monomials);
    for _ in 0..n_monomials {
        let support = rng.random_range(0..=bounds.max_support);
        let mut pairs = Vec::with_capacity(support);
        for _ in 0..support {
            let level = rng.random_range(bounds.levels.clone());
            pairs.push((level, random_exponent(rng, bounds)));
        }
        let coeff = Scalar::from_integer(nonzero_int(rng, bounds.coeff_bound));
        monomials.push(Monomial::new(coeff, ExponentVector::from_pairs(pairs)));
    }
    Element::from_monomials(monomials)
}

/// A random polynomial in `r` of degree at most `max_degree`; never zero.
pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, max_degree: usize, coeff_bound: i64) -> RPoly {
    loop {
        let degree = rng.random_range(0..=max_degree);
        let coeffs: Vec<Scalar> = (0..=degree)
            .map(|_| Scalar::from_integer(rng.random_range(-coeff_bound..=coeff_bound)))
            .collect();
        let p = RPoly::from_coeffs(coeffs);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random formal polynomial form within the bounds.
pub fn random_rform<R: Rng + ?Sized>(rng: &mut R, bounds: &RFormBounds) -> RForm {
    let n_terms = rng.random_range(1..=bounds.max_terms);
    let mut terms = Vec::with_capacity(n_terms);
    for _ in 0..n_terms {
        let coefficient = random_poly(rng, bounds.max_degree, bounds.coeff_bound);
        let support = rng.random_range(0..=bounds.max_support);
        let mut pairs = Vec::with_capacity(support);
        for _ in 0..support {
            let level = rng.random_range(bounds.levels.clone());
            pairs.push((
                level,
                random_poly(rng, bounds.max_degree, bounds.coeff_bound),
            ));
        }
        terms.push(RMonomial::new(coefficient, pairs));
    }
    RForm::from_terms(terms)
}

/// A random series of the given order with zero constant term, suitable as
/// input to `log(1+X)` and `e^X`. Kept sparse so that high powers stay
/// cheap under exact arithmetic.
pub fn random_admissible_series<R: Rng + ?Sized>(
    rng: &mut R,
    order: usize,
    bounds: &ElementBounds,
) -> YSeries {
    let mut coeffs = vec![Element::zero(); order + 1];
    if order >= 1 {
        let nonzero_slots = rng.random_range(1..=2.min(order));
        for _ in 0..nonzero_slots {
            let k = rng.random_range(1..=order);
            coeffs[k] = random_element(rng, bounds);
        }
    }
    YSeries::from_coeffs(coeffs)
}
