use std::fmt;
use std::str::FromStr;

use super::{check_depth, cot_tanh_convolution, pi2, times, z, zb};
use crate::combinat::{binomial, factorial, floor_div, int, pow2, pow4, sign, upto};
use crate::error::{domain, Error, Result};
use crate::exact::{euler_number, PiPoly, Rational};
use crate::genfun::phi_series;

/// ζ̃ₙ(2m): ζ(2m) when n is even, ζ(2̄m) when n is odd.
fn zeta_tilde(n: i64, m: i64) -> PiPoly {
    if n % 2 == 0 {
        z(m)
    } else {
        zb(m)
    }
}

/// Ξ(2n,d) by the two-sum closed form (the π²ʲζ̃ₙ part and the
/// cot·tanh convolution part).
pub fn xi_thm11(n: usize, d: usize) -> Result<PiPoly> {
    check_depth(n, d)?;
    let (n, d) = (n as i64, d as i64);
    let mut total = PiPoly::zero();
    for j in upto(floor_div(d - 1, 2)) {
        let c = int(sign(floor_div(j, 2))) * int(binomial(2 * d - 2 * j - 1, d))
            / (pow2(2 * d - j - 2) * int(factorial((2 * j + 1) as usize)));
        total += &times(&(pi2(j) * zeta_tilde(n, n - j)), c);
    }
    for j in upto(floor_div(d - 2, 4)) {
        let m = n - 2 * j;
        let c = int(sign(j)) * int(binomial(2 * d - 4 * j - 2, d))
            / (pow4(m) * pow2(2 * d - 2 * j - 5) * int(factorial((4 * j + 2) as usize)));
        total += &times(&(cot_tanh_convolution(m as usize) * pi2(2 * j)), c);
    }
    Ok(total)
}

/// Ξ(2n,d) by the long form, a single sum over ℓ = 0..n−d that is short when
/// d is close to n.
pub fn xi_thm13(n: usize, d: usize) -> Result<PiPoly> {
    check_depth(n, d)?;
    let (n, d) = (n as i64, d as i64);
    let mut total = PiPoly::zero();
    for l in 0..=(n - d) {
        let inner: PiPoly = (0..=l)
            .map(|j| {
                let e = int(euler_number(2 * j as usize).expect("even index"))
                    / int(factorial(2 * j as usize));
                times(&(zb(l - j) * pi2(n - l + j)), e)
            })
            .sum();
        let c = int(binomial(n - l, d)) * int(2 * sign(d + floor_div(l - n - 1, 2)))
            / (pow2(n + l) * int(factorial((2 * n - 2 * l + 1) as usize)));
        total += &times(&inner, c);
    }
    Ok(total)
}

/// Ξ(2n,d) read off the φ series.
pub fn xi_genfun(n: usize, d: usize) -> Result<PiPoly> {
    check_depth(n, d)?;
    let c = phi_series(n).coeff(n, d)?;
    Ok(PiPoly::monomial(c, n as u32))
}

/// Σ_{d=1}^{n} Ξ(2n,d) = (−2/4ⁿ)Σ_j ζ(2n−2j‾)E₂ⱼπ²ʲ/(2j)!.
pub fn xi_row_sum(n: usize) -> Result<PiPoly> {
    if n < 1 {
        return domain("row sum needs n ≥ 1");
    }
    let n = n as i64;
    let sum: PiPoly = (0..=n)
        .map(|j| {
            let e = int(euler_number(2 * j as usize).expect("even index"))
                / int(factorial(2 * j as usize));
            times(&(zb(n - j) * pi2(j)), e)
        })
        .sum();
    Ok(times(&sum, int(-2) / pow4(n)))
}

/// ζ({2̄}ⁿ) = (−1)^{⌊(n+1)/2⌋}π^{2n}/(2ⁿ(2n+1)!).
pub fn zeta_bar2_power(n: usize) -> PiPoly {
    let c: Rational =
        int(sign(floor_div(n as i64 + 1, 2))) / (pow2(n as i64) * int(factorial(2 * n + 1)));
    PiPoly::monomial(c, n as u32)
}

/// Which route computes Ξ(2n,d).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XiMethod {
    Thm11,
    Thm13,
    Genfun,
}

impl XiMethod {
    pub const ALL: [XiMethod; 3] = [XiMethod::Thm11, XiMethod::Thm13, XiMethod::Genfun];
}

impl fmt::Display for XiMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            XiMethod::Thm11 => "thm11",
            XiMethod::Thm13 => "thm13",
            XiMethod::Genfun => "genfun",
        })
    }
}

impl FromStr for XiMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thm11" => Ok(XiMethod::Thm11),
            "thm13" => Ok(XiMethod::Thm13),
            "genfun" => Ok(XiMethod::Genfun),
            other => Err(Error::Parse(format!(
                "unknown method {other:?}, expected thm11, thm13 or genfun"
            ))),
        }
    }
}

pub fn xi(n: usize, d: usize, method: XiMethod) -> Result<PiPoly> {
    match method {
        XiMethod::Thm11 => xi_thm11(n, d),
        XiMethod::Thm13 => xi_thm13(n, d),
        XiMethod::Genfun => xi_genfun(n, d),
    }
}
