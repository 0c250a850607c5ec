//! Exact base arithmetic: arbitrary-precision rationals, dense univariate
//! polynomials over ℚ and over prime fields, and rational factorization.

mod ffpoly;
mod qpoly;
mod rational;
mod zassenhaus;

pub use ffpoly::{is_prime_u64, FFPoly};
pub use qpoly::{resultant, QPoly};
pub use rational::Rational;
pub use zassenhaus::{
    hensel_lift, rational_irreducible, zassenhaus_factor, zassenhaus_factor_with, QFactorization,
};
