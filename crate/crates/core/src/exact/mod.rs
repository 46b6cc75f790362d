//! Exact scalars: rationals, Bernoulli and Euler numbers, even zeta values
//! and their alternating companions as polynomials in π².

mod numbers;
mod pipoly;

pub use numbers::{
    bernoulli, euler_number, zeta_bar_even, zeta_bar_even_coeff, zeta_even, zeta_even_coeff,
};
pub use pipoly::{PiPoly, PiTerm};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;
