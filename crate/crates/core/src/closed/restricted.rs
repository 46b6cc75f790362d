//! Restricted sums A_α(2n,d) over even arguments with exactly α alternating
//! components.

use super::{check_depth, pi2, times, z, zb};
use crate::combinat::{
    binomial, factorial, floor_div, int, pow2, pow4, rat, rational_binomial, sign, upto,
};
use crate::error::{Error, Result};
use crate::exact::{bernoulli, PiPoly};

/// Number of alternating components α, with 0 ≤ α ≤ d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlphaCount(usize);

impl AlphaCount {
    pub fn new(alpha: usize, depth: usize) -> Result<Self> {
        if alpha > depth {
            return Err(Error::Domain(format!(
                "alternating count α = {alpha} exceeds depth d = {depth}"
            )));
        }
        Ok(Self(alpha))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// The Hoffman-type sum over j of C(2d−2j−1,d)ζ(2j)ζ(2n−2j)/((2j+1)B₂ⱼ),
/// shared by [`a0`] and [`a_total`].
fn hoffman_correction(n: i64, d: i64) -> PiPoly {
    (1..=floor_div(d - 1, 2))
        .map(|j| {
            let c =
                int(binomial(2 * d - 2 * j - 1, d)) / (int(2 * j + 1) * bernoulli(2 * j as usize));
            times(&(z(j) * z(n - j)), c)
        })
        .sum()
}

/// A₀(2n,d): the restricted sum of multiple zeta values (no alternating
/// component). At d = 1 this is ζ(2n).
pub fn a0(n: usize, d: usize) -> Result<PiPoly> {
    check_depth(n, d)?;
    let (n, d) = (n as i64, d as i64);
    let lead = times(&z(n), int(binomial(2 * d - 1, d)) / pow2(2 * (d - 1)));
    Ok(lead - times(&hoffman_correction(n, d), pow2(-(2 * d - 3))))
}

/// A(2n,d) = Σ_α A_α(2n,d), all sign patterns together.
pub fn a_total(n: usize, d: usize) -> Result<PiPoly> {
    check_depth(n, d)?;
    let (n, d) = (n as i64, d as i64);
    let lead = times(&z(n), int(binomial(2 * d - 1, d)) / pow2(2 * n + d - 2));
    Ok(lead - times(&hoffman_correction(n, d), pow2(-(2 * n + d - 3))))
}

/// A₁(2n,d): exactly one alternating component.
pub fn a1(n: usize, d: usize) -> Result<PiPoly> {
    check_depth(n, d)?;
    let (n, d) = (n as i64, d as i64);
    let mut total = zb(n);
    for j in upto(floor_div(d - 2, 2)) {
        let inner: crate::exact::Rational = (0..=2 * j + 1)
            .map(|k| {
                int(sign(d + j + k))
                    * int(binomial(2 * j + 1, k))
                    * rational_binomial(&rat(k - 3, 2), (d - 1) as usize)
            })
            .sum();
        let c = inner / int(factorial((2 * j + 1) as usize));
        total -= &times(&(z(n - j) * pi2(j)), c);
    }
    Ok(total)
}

/// A_d(2n,d): every component alternating.
pub fn a_d(n: usize, d: usize) -> Result<PiPoly> {
    check_depth(n, d)?;
    let (n, d) = (n as i64, d as i64);
    // z_{n,j,k} = ζ(2n−2j−2k)π^{2j+2k}
    let zz = |j: i64, k: i64| z(n - j - k) * pi2(j + k);
    let mut total = PiPoly::zero();

    for j in upto(floor_div(d - 1, 2)) {
        let c = int(sign(j)) * pow4(j - n - d + 1) * int(binomial(2 * d - 2 * j - 1, d))
            / int(factorial((2 * j + 1) as usize));
        total += &times(&(z(n - j) * pi2(j)), c);
    }
    for c in 1..=d {
        for j in upto(floor_div(c - 1, 2)) {
            for k in upto(floor_div(d - c, 2)) {
                let coef = int(sign(c + j + k))
                    * (int(1) - pow4(j + k - n))
                    * int(binomial(2 * c - 2 * j - 2, c - 1))
                    * int(binomial(2 * d - 2 * c - 2 * k, d - c))
                    / (int(c)
                        * int(factorial((2 * j) as usize))
                        * int(factorial((2 * k) as usize))
                        * pow4(d - 1));
                total += &times(&zz(j, k), coef);
            }
        }
        for j in 1..=floor_div(c, 2) {
            for k in upto(floor_div(d - c - 1, 2)) {
                let coef = int(sign(c + j + k))
                    * pow4(j + k - n - d + 1)
                    * int(binomial(2 * c - 2 * j - 1, c - 1))
                    * int(binomial(2 * d - 2 * c - 2 * k - 1, d - c))
                    / (int(c)
                        * int(factorial((2 * j - 1) as usize))
                        * int(factorial((2 * k + 1) as usize)));
                total += &times(&zz(j, k), coef);
            }
        }
    }
    Ok(total)
}

/// A_α(2n,d) where a closed form is known: α ∈ {0, 1, d} at any depth, plus
/// (d,α) ∈ {(3,2), (4,2), (4,3)}.
pub fn a_alpha_small_depth(n: usize, d: usize, alpha: usize) -> Result<PiPoly> {
    check_depth(n, d)?;
    let alpha = AlphaCount::new(alpha, d)?.get();
    let ni = n as i64;
    match (d, alpha) {
        (_, 0) => a0(n, d),
        (_, a) if a == d => a_d(n, d),
        (_, 1) => a1(n, d),
        (3, 2) => Ok(times(&z(ni), rat(7, 8)) + zb(ni)),
        (4, 2) => Ok(times(&z(ni), rat(57, 32)) + times(&zb(ni), rat(3, 2))
            - times(&(z(1) * z(ni - 1)), rat(3, 16))),
        (4, 3) => Ok(times(&z(ni), rat(11, 16)) + times(&zb(ni), rat(3, 2))
            - times(&(z(1) * zb(ni - 1)), rat(1, 2))),
        _ => Err(Error::Unsupported(format!(
            "no closed form for A_{alpha}(2n,{d}): restricted sums with 1 < α < d are only \
             available for depth d ≤ 4"
        ))),
    }
}

/// A₁(2n,d) rebuilt from A₀ and ζ(2̄ℓ) by the stuffle expansion
///
/// (−1)^{d−1}C(n−1,d−1)ζ(2̄n) + Σ_{k=1}^{d−1}(−1)^{k−1}Σ_ℓ C(ℓ−1,k−1)ζ(2̄ℓ)A₀(2n−2ℓ,d−k).
pub fn a1_via_recursion(n: usize, d: usize) -> Result<PiPoly> {
    check_depth(n, d)?;
    let (ni, di) = (n as i64, d as i64);
    let mut total = times(&zb(ni), int(sign(di - 1)) * int(binomial(ni - 1, di - 1)));
    for k in 1..di {
        for l in k..=(ni + k - di) {
            let inner = a0((ni - l) as usize, (di - k) as usize)?;
            let c = int(sign(k - 1)) * int(binomial(l - 1, k - 1));
            total += &times(&(zb(l) * inner), c);
        }
    }
    Ok(total)
}
