//! Closed-form evaluators. Every value is an exact [`PiPoly`].

mod convolutions;
mod restricted;
mod xi;

pub use convolutions::{
    a0_moment, a0_moment_direct, a1_moment, a1_moment_direct, l2, l2_direct, olzeta_conv,
    olzeta_conv_direct, ramanujan_r1_numeric, ramanujan_r_exact, DEFAULT_GROSSWALD_TERMS,
};
pub use restricted::{a0, a1, a1_via_recursion, a_alpha_small_depth, a_d, a_total, AlphaCount};
pub use xi::{xi, xi_genfun, xi_row_sum, xi_thm11, xi_thm13, zeta_bar2_power, XiMethod};

use crate::combinat::int;
use crate::error::{domain, Result};
use crate::exact::{zeta_bar_even, zeta_even, PiPoly, Rational};

/// ζ(2m); callers guarantee m ≥ 0.
pub(crate) fn z(m: i64) -> PiPoly {
    debug_assert!(m >= 0, "ζ index {m} must be non-negative");
    zeta_even(m as usize)
}

/// ζ(2̄m); callers guarantee m ≥ 0.
pub(crate) fn zb(m: i64) -> PiPoly {
    debug_assert!(m >= 0, "ζ̄ index {m} must be non-negative");
    zeta_bar_even(m as usize)
}

/// π^{2k}
pub(crate) fn pi2(k: i64) -> PiPoly {
    PiPoly::pi_pow(k as u32)
}

pub(crate) fn times(p: &PiPoly, c: Rational) -> PiPoly {
    p.scale(&c)
}

pub(crate) fn check_depth(n: usize, d: usize) -> Result<()> {
    if d < 1 || d > n {
        return domain(format!("need 1 ≤ d ≤ n, got n = {n}, d = {d}"));
    }
    Ok(())
}

/// Σ_{r+s=m, r,s≥0} (−1)ʳ(4ʳ−1)ζ(2r)ζ(2s), the π²u/4-graded coefficient
/// series of x·cot√x·tanh√x (up to the factor 4/4ᵐ).
pub fn cot_tanh_convolution(m: usize) -> PiPoly {
    let m = m as i64;
    (0..=m)
        .map(|r| {
            let c = int(crate::combinat::sign(r)) * (crate::combinat::pow4(r) - int(1));
            times(&(z(r) * z(m - r)), c)
        })
        .sum()
}
