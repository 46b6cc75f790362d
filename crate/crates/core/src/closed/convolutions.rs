//! Convolution and moment identities among even zeta values, and the
//! Ramanujan–Grosswald convolution R_n(1).

use super::{times, z, zb};
use crate::combinat::{int, rat};
use crate::error::{domain, Error, Result};
use crate::exact::PiPoly;
use crate::oracle::NeumaierSum;

/// Default number of exponential terms in [`ramanujan_r1_numeric`].
pub const DEFAULT_GROSSWALD_TERMS: usize = 20;

fn check_moment(r: u32) -> Result<()> {
    if r > 2 {
        return Err(Error::Unsupported(format!(
            "moment r = {r}: only r ∈ {{0, 1, 2}} have closed forms"
        )));
    }
    Ok(())
}

/// A₁⁽ʳ⁾(2n,2) = Σ_{j=1}^{n−1} jʳζ(2j)ζ(2n−2j‾) by its closed form.
pub fn a1_moment(r: u32, n: usize) -> Result<PiPoly> {
    check_moment(r)?;
    if n < 1 {
        return domain("A₁ moments need n ≥ 1");
    }
    let ni = n as i64;
    let mix = zb(1) * zb(ni - 1);
    Ok(match r {
        0 => times(&z(ni), rat(1, 2)) + times(&zb(ni), int(ni)),
        1 => {
            times(&z(ni), rat(ni, 2)) + times(&zb(ni), rat(ni * (2 * ni - 1), 4))
                - times(&mix, rat(3, 2))
        }
        _ => {
            times(&z(ni), rat(ni * ni, 2))
                + times(&zb(ni), rat(ni * (2 * ni - 1) * (4 * ni - 1), 24))
                - times(&mix, rat(4 * ni + 3, 4))
        }
    })
}

/// Σ_{j=1}^{n−1} jʳζ(2j)ζ(2n−2j‾) summed term by term.
pub fn a1_moment_direct(r: u32, n: usize) -> PiPoly {
    let n = n as i64;
    (1..n)
        .map(|j| times(&(z(j) * zb(n - j)), int(j.pow(r))))
        .sum()
}

/// A₀⁽ʳ⁾(2n,2) = Σ_{ℓ=1}^{n−1} ℓʳζ(2ℓ)ζ(2n−2ℓ) by its closed form.
///
/// The identities hold for n ≥ 2; at n = 1 the sum is empty while the
/// formulas are not zero, so n = 1 is rejected.
pub fn a0_moment(r: u32, n: usize) -> Result<PiPoly> {
    check_moment(r)?;
    if n < 2 {
        return domain("A₀ moments need n ≥ 2");
    }
    let ni = n as i64;
    Ok(match r {
        0 => times(&z(ni), rat(2 * ni + 1, 2)),
        1 => times(&z(ni), rat(ni * (2 * ni + 1), 4)),
        _ => {
            times(&z(ni), rat(ni * (8 * ni * ni + 6 * ni + 1), 24))
                - times(&(z(1) * z(ni - 1)), rat(2 * ni - 3, 2))
        }
    })
}

/// Σ_{ℓ=1}^{n−1} ℓʳζ(2ℓ)ζ(2n−2ℓ) summed term by term.
pub fn a0_moment_direct(r: u32, n: usize) -> PiPoly {
    let n = n as i64;
    (1..n)
        .map(|l| times(&(z(l) * z(n - l)), int(l.pow(r))))
        .sum()
}

/// L₂(n) = Σ_{j=1}^{n−1} j²ζ(2̄j)ζ(2n−2j‾) by its closed form.
pub fn l2(n: usize) -> Result<PiPoly> {
    if n < 2 {
        return domain("L₂(n) needs n ≥ 2");
    }
    let ni = n as i64;
    Ok(times(&z(ni), rat(ni * (2 * ni - 1) * (4 * ni - 1), 24))
        + times(&(z(1) * z(ni - 1)), rat(2 * ni - 3, 4))
        + times(&zb(ni), rat(ni * ni, 2)))
}

pub fn l2_direct(n: usize) -> PiPoly {
    let n = n as i64;
    (1..n)
        .map(|j| times(&(zb(j) * zb(n - j)), int(j * j)))
        .sum()
}

/// Σ_{a+b=n, a,b>0} ζ(2̄a)ζ(2̄b) = (2n−1)/2·ζ(2n) + ζ(2̄n).
pub fn olzeta_conv(n: usize) -> Result<PiPoly> {
    if n < 2 {
        return domain("the ζ̄ convolution needs n ≥ 2");
    }
    let ni = n as i64;
    Ok(times(&z(ni), rat(2 * ni - 1, 2)) + zb(ni))
}

pub fn olzeta_conv_direct(n: usize) -> PiPoly {
    let n = n as i64;
    (1..n).map(|a| zb(a) * zb(n - a)).sum()
}

/// R_n(1) = Σ_{r+s=n, r,s≥0} (−1)ʳζ(2r)ζ(2s) with ζ(0) = −1/2. Zero for odd n.
pub fn ramanujan_r_exact(n: usize) -> PiPoly {
    let n = n as i64;
    (0..=n)
        .map(|r| times(&(z(r) * z(n - r)), int(crate::combinat::sign(r))))
        .sum()
}

/// ζ(s) for integer s ≥ 2 by direct summation: terms are added until they
/// drop below 1e-16, smallest first, plus the integral of x⁻ˢ from K+½.
fn zeta_odd_numeric(s: i32) -> f64 {
    let cutoff = 1e-16f64;
    let last = cutoff.powf(-1.0 / f64::from(s)).ceil() as u64;
    let mut acc = NeumaierSum::default();
    let k_tail = last as f64 + 0.5;
    acc += k_tail.powi(1 - s) / f64::from(s - 1);
    for k in (1..=last).rev() {
        acc += (k as f64).powi(-s);
    }
    acc.sum()
}

/// R_n(1) = −π(ζ(2n−1) + 2Σ_{k=1}^{K} k^{1−2n}/(e^{2kπ}−1)) in double
/// precision, for even n ≥ 2.
pub fn ramanujan_r1_numeric(n: usize, terms: usize) -> Result<f64> {
    if n < 2 || n % 2 == 1 {
        return domain(format!("the Grosswald series needs even n ≥ 2, got {n}"));
    }
    if terms < 1 {
        return domain("the Grosswald series needs at least one term");
    }
    let s = 2 * n as i32 - 1;
    let pi = std::f64::consts::PI;
    let mut exp_sum = NeumaierSum::default();
    for k in (1..=terms).rev() {
        let kf = k as f64;
        exp_sum += kf.powi(-s) / (2.0 * kf * pi).exp_m1();
    }
    Ok(-pi * (zeta_odd_numeric(s) + 2.0 * exp_sum.sum()))
}
