//! Small integer and rational combinatorics shared by the exact modules.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::Rational;

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient C(n, k) for integer `n`; zero when `k < 0`, `k > n`
/// or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial C(a, m) = a(a-1)...(a-m+1)/m! for rational `a`.
pub fn rational_binomial(a: &Rational, m: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..m {
        acc *= &term;
        term -= Rational::one();
    }
    acc / Rational::from_integer(factorial(m))
}

/// (-1)^e for any integer e.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// ⌊a/b⌋ for b > 0. Negative upper bounds of floor-bounded sums come out
/// negative, so `0..=floor_div(..)` ranges are empty.
pub fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Inclusive index range `0..=upper` that is empty when `upper < 0`.
pub fn upto(upper: i64) -> impl Iterator<Item = i64> {
    0..=upper.max(-1)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// 2^e as an exact rational, `e` may be negative.
pub fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// 4^e as an exact rational.
pub fn pow4(e: i64) -> Rational {
    pow2(2 * e)
}
