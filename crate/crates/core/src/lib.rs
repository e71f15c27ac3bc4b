//! Exact symbolic calculus for iterated logarithms and iterated exponentials.
//!
//! The crate works in the commutative algebra spanned by monomials
//! `l(i_1)^{r_1} * ... * l(i_k)^{r_k}` over exact rationals, where `l(0)(x)`
//! stands for `x`, `l(n)` for the `n`-th iterated natural logarithm when
//! `n > 0` and for the `(-n)`-th iterated exponential when `n < 0`. On top of
//! the algebra it provides:
//!
//! - the derivation `d/dx` determined by the usual chain rules for these
//!   towers ([`algebra`]);
//! - truncated power series in a translation variable `y`, the translation
//!   operator `e^(y d/dx)`, formal `log(1+X)` / `e^X` composition, and exact
//!   coefficient-by-coefficient verification of the recursion identity
//!   linking `l(n+1)(x+y)` to `l(n)(x+y)` and its exponential inverse
//!   ([`series`]);
//! - formal polynomial forms in an integer parameter `r`, their reduced
//!   normal form, the substitution limit `r -> 0`, and verification that this
//!   limit commutes with `d/dx` and recovers the derivatives of the next
//!   logarithm level ([`rforms`]);
//! - a floating-point oracle that cross-checks the symbolic results against
//!   genuine iterated logs and exponentials ([`oracle`]).
//!
//! All symbolic arithmetic is exact rational arithmetic; verification
//! verdicts are decided by structural equality of canonical forms.

pub mod algebra;
pub mod oracle;
pub mod random;
pub mod report;
pub mod rforms;
pub mod scalar;
pub mod series;

pub use algebra::{derive_power, Element, ExponentVector, Monomial, NotAUnit};
pub use report::{Report, Verdict};
pub use scalar::Scalar;
pub use series::YSeries;
