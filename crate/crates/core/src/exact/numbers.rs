use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{PiPoly, Rational};
use crate::combinat::{binomial, factorial, pow2, rat};
use crate::error::{domain, Result};

/// Number of Bernoulli/Euler indices precomputed on first use.
const CACHE_LEN: usize = 65;

fn bernoulli_up_to(max: usize) -> Vec<Rational> {
    let mut table: Vec<Rational> = Vec::with_capacity(max + 1);
    table.push(Rational::one());
    for m in 1..=max {
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        let mut acc = Rational::zero();
        for (k, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += Rational::from_integer(binomial(m as i64 + 1, k as i64)) * b;
            }
        }
        table.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    table
}

fn euler_up_to(max_half: usize) -> Vec<BigInt> {
    let mut table: Vec<BigInt> = Vec::with_capacity(max_half + 1);
    table.push(BigInt::one());
    for n in 1..=max_half {
        // sum_{k=0}^{n} C(2n,2k) E_{2k} = 0
        let acc: BigInt = table
            .iter()
            .enumerate()
            .map(|(k, e)| binomial(2 * n as i64, 2 * k as i64) * e)
            .sum();
        table.push(-acc);
    }
    table
}

fn bernoulli_table() -> &'static [Rational] {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| bernoulli_up_to(CACHE_LEN - 1))
}

fn euler_table() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| euler_up_to((CACHE_LEN - 1) / 2))
}

/// Bernoulli number B_m from x/(eˣ−1) = Σ B_j xʲ/j!, so B₁ = −1/2.
pub fn bernoulli(m: usize) -> Rational {
    match bernoulli_table().get(m) {
        Some(b) => b.clone(),
        None => bernoulli_up_to(m).pop().expect("non-empty table"),
    }
}

/// Euler number E_m from sec x = Σ (−1)ʲ E₂ⱼ x²ʲ/(2j)!, so E₂ = −1, E₄ = 5.
///
/// Odd indices are rejected: every formula in this crate only indexes even
/// Euler numbers, so an odd index is a bug at the call site.
pub fn euler_number(m: usize) -> Result<BigInt> {
    if m % 2 == 1 {
        return domain(format!(
            "odd Euler number E_{m} is zero by convention; only even indices are accepted"
        ));
    }
    let half = m / 2;
    Ok(match euler_table().get(half) {
        Some(e) => e.clone(),
        None => euler_up_to(half).pop().expect("non-empty table"),
    })
}

/// Rational part of ζ(2m), i.e. ζ(2m)/π^{2m}; ζ(0) = −1/2.
pub fn zeta_even_coeff(m: usize) -> Rational {
    if m == 0 {
        return rat(-1, 2);
    }
    // (-1)^{m+1} B_{2m} 2^{2m} / (2 (2m)!)
    let b = bernoulli(2 * m);
    let mag = b * pow2(2 * m as i64) / Rational::from_integer(factorial(2 * m) * 2);
    if m % 2 == 1 {
        mag
    } else {
        -mag
    }
}

/// Rational part of ζ(2̄m) = (2^{1−2m} − 1)ζ(2m); ζ(0̄) = −1/2.
pub fn zeta_bar_even_coeff(m: usize) -> Rational {
    if m == 0 {
        return rat(-1, 2);
    }
    (pow2(1 - 2 * m as i64) - Rational::one()) * zeta_even_coeff(m)
}

/// ζ(2m) as an exact multiple of π^{2m}.
pub fn zeta_even(m: usize) -> PiPoly {
    PiPoly::monomial(zeta_even_coeff(m), m as u32)
}

/// ζ(2̄m) as an exact multiple of π^{2m}.
pub fn zeta_bar_even(m: usize) -> PiPoly {
    PiPoly::monomial(zeta_bar_even_coeff(m), m as u32)
}
