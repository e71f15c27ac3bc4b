//! The derivation `d/dx` on the algebra.
//!
//! On a single power it acts by
//!
//! ```text
//! d/dx l(0)^r = r * l(0)^(r-1)
//! d/dx l(n)^r = r * l(n)^(r-1) * l(0)^-1 * ... * l(n-1)^-1      (n > 0)
//! d/dx l(n)^r = r * l(n)^(r-1) * l(-1) * l(-2) * ... * l(n)     (n < 0)
//! ```
//!
//! and extends to products by the Leibniz rule and to sums linearly.

use super::{Element, ExponentVector};
use crate::scalar::Scalar;

/// The constant exponent offsets that `d/dx l(level)` carries besides
/// dropping the power by one: reciprocals of all shallower logarithms for
/// positive levels, the tower of exponentials down to `level` for negative
/// ones. Shared with the polynomial-exponent lifting in [`crate::rforms`].
pub(crate) fn chain_levels(level: i32) -> Vec<(i32, i64)> {
    if level > 0 {
        (0..level).map(|k| (k, -1)).collect()
    } else if level < 0 {
        (level..=-1).map(|k| (k, 1)).collect()
    } else {
        Vec::new()
    }
}

/// `d/dx l(level)^exponent` as a canonical element (zero when the exponent is).
pub fn derive_power(level: i32, exponent: &Scalar) -> Element {
    if exponent.is_zero() {
        return Element::zero();
    }
    let mut pairs = vec![(level, exponent - &Scalar::one())];
    for (k, off) in chain_levels(level) {
        pairs.push((k, Scalar::from_integer(off)));
    }
    Element::monomial(exponent.clone(), ExponentVector::from_pairs(pairs))
}

impl Element {
    /// Applies the derivation once.
    ///
    /// Each monomial contributes one term per supported level: the power rule
    /// at that level times the untouched remaining factors.
    pub fn derive(&self) -> Element {
        let mut out = Element::zero();
        for (exps, coeff) in self.iter() {
            for (level, exponent) in exps.iter() {
                let rest = Element::monomial(coeff.clone(), exps.without(level));
                out = &out + &(&derive_power(level, exponent) * &rest);
            }
        }
        out
    }

    /// `m`-fold application of [`Element::derive`]; `m = 0` is the identity.
    pub fn derive_n(&self, m: usize) -> Element {
        let mut e = self.clone();
        for _ in 0..m {
            e = e.derive();
        }
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }

    #[test]
    fn power_rule_at_level_zero() {
        // d/dx l(0)^5 = 5 * l(0)^4
        assert_eq!(
            derive_power(0, &int(5)),
            Element::power(0, int(4)).scale(&int(5))
        );
    }

    #[test]
    fn power_rule_positive_level() {
        // d/dx l(1) = l(0)^-1
        assert_eq!(derive_power(1, &Scalar::one()), Element::power(0, int(-1)));
    }

    #[test]
    fn power_rule_negative_level() {
        // d/dx l(-2) = l(-1) * l(-2)
        let expected = Element::monomial(
            Scalar::one(),
            ExponentVector::from_pairs([(-1, Scalar::one()), (-2, Scalar::one())]),
        );
        assert_eq!(derive_power(-2, &Scalar::one()), expected);
    }

    #[test]
    fn zero_exponent_kills_the_term() {
        assert_eq!(derive_power(3, &Scalar::zero()), Element::zero());
    }

    #[test]
    fn derive_deep_logarithm() {
        // d/dx l(2) = l(0)^-1 * l(1)^-1
        let expected = Element::monomial(
            Scalar::one(),
            ExponentVector::from_pairs([(0, int(-1)), (1, int(-1))]),
        );
        assert_eq!(Element::level(2).derive(), expected);
    }

    #[test]
    fn derive_product_by_leibniz() {
        // d/dx (l(0)*l(1)) = 1 + l(1)
        let e = &Element::level(0) * &Element::level(1);
        let expected = &Element::one() + &Element::level(1);
        assert_eq!(e.derive(), expected);
    }

    #[test]
    fn derive_constant_is_zero() {
        assert_eq!(Element::one().derive(), Element::zero());
        assert_eq!(Element::from_scalar(int(17)).derive(), Element::zero());
    }

    #[test]
    fn second_derivative_of_log() {
        // d^2/dx^2 l(1) = d/dx l(0)^-1 = -l(0)^-2
        assert_eq!(
            Element::level(1).derive_n(2),
            Element::power(0, int(-2)).scale(&int(-1))
        );
    }

    #[test]
    fn derive_n_zero_is_identity() {
        let e = &Element::level(2) + &Element::power(0, Scalar::new(1, 2));
        assert_eq!(e.derive_n(0), e);
    }

    #[test]
    fn exponential_is_derivation_fixed_point() {
        // d/dx l(-1) = l(-1), so every iterate is l(-1)
        let e = Element::level(-1);
        for m in 0..6 {
            assert_eq!(e.derive_n(m), e);
        }
    }
}
