//! The three generating functions as truncated series, and the two recursive
//! polynomial systems together with their closed-form solutions.

use crate::combinat::{
    binomial, factorial, floor_div, int, pow2, rat, rational_binomial, sign, upto,
};
use crate::exact::Rational;
use crate::fps::{kernel_series, KernelKind, Series2};
use crate::poly::{Poly, PolyX};

fn one_minus_v() -> Poly {
    &Poly::one() - &Poly::var()
}

fn one_plus_v() -> Poly {
    &Poly::one() + &Poly::var()
}

/// K(q·p(v)·u) / K(q·u)
fn kernel_ratio(kind: KernelKind, p: &Poly, order: usize) -> Series2 {
    let q = rat(1, 4);
    kernel_series(kind, &q, p, order)
        .try_div(&kernel_series(kind, &q, &Poly::one(), order))
        .expect("every kernel has unit constant term")
}

/// φ(u,v) = 1 + Σ Ξ(2n,d)uⁿvᵈ.
///
/// Built as [S((1−v)u/4)/S(u/4)]·[Ch((1−v)u/4)/Ch(u/4)] with S the sinc and Ch
/// the cosh kernel.
pub fn phi_series(order: usize) -> Series2 {
    let sin_part = kernel_ratio(KernelKind::Sinc, &one_minus_v(), order);
    let cosh_part = kernel_ratio(KernelKind::Cosh, &one_minus_v(), order);
    sin_part.try_mul(&cosh_part).expect("equal orders")
}

/// ψ_tot(u,v) = 1 + Σ A_d(2n,d)uⁿvᵈ (all components alternating).
pub fn psi_tot_series(order: usize) -> Series2 {
    let sin_part = kernel_ratio(KernelKind::Sinc, &one_minus_v(), order);
    let cos_part = kernel_ratio(KernelKind::Cos, &one_plus_v(), order);
    sin_part.try_mul(&cos_part).expect("equal orders")
}

/// ψ₁(u,v) = Σ A₁(2n,d)uⁿvᵈ (exactly one alternating component).
///
/// Uses the form v/(2·S(u))·Σ_{j≥1} (−1)ʲuʲ(1−v)^{j−1}/(2j+1)!, which has
/// polynomial v-coefficients, instead of the quotient with (1−v)^{−3/2}.
pub fn psi1_series(order: usize) -> Series2 {
    let mut inner = vec![Poly::zero()];
    let mut pow = Poly::one();
    for j in 1..=order {
        inner.push(pow.scale(&KernelKind::Sinc.coeff(j)));
        pow = &pow * &one_minus_v();
    }
    let inner = Series2::from_coeffs(order, inner);
    let sinc = kernel_series(KernelKind::Sinc, &int(1), &Poly::one(), order);
    inner
        .try_div(&sinc)
        .expect("sinc kernel has unit constant term")
        .mul_poly(&Poly::var().scale(&rat(1, 2)))
}

/// X_d, Y_d, Z_d, W_d: the coefficients of √x·cot√x, √x·tanh√x,
/// cot√x·tanh√x and 1 in the depth-d part of φ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XyzwPolys {
    pub x: PolyX,
    pub y: PolyX,
    pub z: PolyX,
    pub w: PolyX,
}

/// Iterates the coupled recurrences from X₀ = Y₀ = Z₀ = 0, W₀ = 1:
///
/// ```text
/// (d+1)X_{d+1} = dX_d − xX_d' − Z_d/2 − W_d/2
/// (d+1)Y_{d+1} = dY_d − xY_d' + Z_d/2 − W_d/2
/// (d+1)Z_{d+1} = (2d+1)/2·Z_d − xZ_d' − x/2·X_d − x/2·Y_d
/// (d+1)W_{d+1} = (2d+1)/2·W_d − xW_d' + x/2·X_d − x/2·Y_d
/// ```
pub fn xyzw_polys_recursive(depth: usize) -> XyzwPolys {
    let half = rat(1, 2);
    let mut cur = XyzwPolys {
        x: Poly::zero(),
        y: Poly::zero(),
        z: Poly::zero(),
        w: Poly::one(),
    };
    for d in 0..depth {
        let dd = int(d as i64);
        let odd_half = rat(2 * d as i64 + 1, 2);
        let inv = rat(1, d as i64 + 1);
        let xd = |p: &Poly| p.derivative().shift();
        let half_z = cur.z.scale(&half);
        let half_w = cur.w.scale(&half);
        let half_xx = cur.x.shift().scale(&half);
        let half_xy = cur.y.shift().scale(&half);

        let x = &(&(&cur.x.scale(&dd) - &xd(&cur.x)) - &half_z) - &half_w;
        let y = &(&(&cur.y.scale(&dd) - &xd(&cur.y)) + &half_z) - &half_w;
        let z = &(&(&cur.z.scale(&odd_half) - &xd(&cur.z)) - &half_xx) - &half_xy;
        let w = &(&(&cur.w.scale(&odd_half) - &xd(&cur.w)) + &half_xx) - &half_xy;
        cur = XyzwPolys {
            x: x.scale(&inv),
            y: y.scale(&inv),
            z: z.scale(&inv),
            w: w.scale(&inv),
        };
    }
    cur
}

/// The explicit binomial-sum solutions of the XYZW system.
pub fn xyzw_polys_closed(depth: usize) -> XyzwPolys {
    let d = depth as i64;
    let term = |sgn: i64, x_pow: i64, two_pow: i64, fact: usize, binom: (i64, i64)| {
        // sgn·(8x)^x_pow / (2^two_pow·fact!)·C(binom)
        let c = int(sgn) * pow2(3 * x_pow) / (pow2(two_pow) * int(factorial(fact)))
            * int(binomial(binom.0, binom.1));
        Poly::monomial(c, x_pow as usize)
    };
    let mut out = XyzwPolys {
        x: Poly::zero(),
        y: Poly::zero(),
        z: Poly::zero(),
        w: Poly::zero(),
    };
    for j in upto(floor_div(d - 1, 2)) {
        let fact = (2 * j + 1) as usize;
        let binom = (2 * d - 2 * j - 1, d);
        out.x = &out.x + &term(sign(floor_div(j, 2) - 1), j, 2 * d - 1, fact, binom);
        out.y = &out.y + &term(sign(floor_div(j - 1, 2)), j, 2 * d - 1, fact, binom);
    }
    for j in upto(floor_div(d - 2, 4)) {
        let t = term(
            sign(j),
            2 * j + 1,
            2 * d,
            (4 * j + 2) as usize,
            (2 * d - 4 * j - 2, d),
        );
        out.z = &out.z + &t;
    }
    for j in upto(floor_div(d, 4)) {
        let t = term(sign(j), 2 * j, 2 * d, (4 * j) as usize, (2 * d - 4 * j, d));
        out.w = &out.w + &t;
    }
    out
}

/// P̃_d and Q̃_d of the one-alternating-component system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqPolys {
    pub p: PolyX,
    pub q: PolyX,
}

/// Iterates
///
/// ```text
/// P̃_{d+1} = (d+1)P̃_d − xP̃_d' − Q̃_d/2
/// Q̃_{d+1} = (2d+3)/2·Q̃_d − xQ̃_d' + x/2·P̃_d
/// ```
///
/// from P̃₀ = 0, Q̃₀ = 1.
pub fn pq_polys_recursive(depth: usize) -> PqPolys {
    let half = rat(1, 2);
    let mut cur = PqPolys {
        p: Poly::zero(),
        q: Poly::one(),
    };
    for d in 0..depth {
        let p =
            &(&cur.p.scale(&int(d as i64 + 1)) - &cur.p.derivative().shift()) - &cur.q.scale(&half);
        let q = &(&cur.q.scale(&rat(2 * d as i64 + 3, 2)) - &cur.q.derivative().shift())
            + &cur.p.shift().scale(&half);
        cur = PqPolys { p, q };
    }
    cur
}

/// The explicit double sums for P̃_d and Q̃_d, with half-integer binomials
/// C((k−3)/2, d) evaluated exactly.
pub fn pq_polys_closed(depth: usize) -> PqPolys {
    let d = depth as i64;
    let d_fact = int(factorial(depth));
    let half_binom = |k: i64| rational_binomial(&rat(k - 3, 2), depth);

    let mut p = Poly::zero();
    for j in upto(floor_div(d - 1, 2)) {
        let c: Rational = (0..=2 * j + 1)
            .map(|k| {
                int(sign(d + j + k + 1)) * int(binomial(2 * j + 1, k)) * half_binom(k)
                    / int(factorial((2 * j + 1) as usize))
            })
            .sum();
        p = &p + &Poly::monomial(&d_fact * c, j as usize);
    }
    let mut q = Poly::zero();
    for j in upto(floor_div(d, 2)) {
        let c: Rational = (0..=2 * j)
            .map(|k| {
                int(sign(d + j + k)) * int(binomial(2 * j, k)) * half_binom(k)
                    / int(factorial((2 * j) as usize))
            })
            .sum();
        q = &q + &Poly::monomial(&d_fact * c, j as usize);
    }
    PqPolys { p, q }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_coefficients() {
        let phi = phi_series(6);
        assert_eq!(phi.coeff(0, 0).unwrap(), int(1));
        assert_eq!(phi.coeff(1, 1).unwrap(), rat(-1, 12));
        assert_eq!(phi.coeff(3, 2).unwrap(), rat(1, 10080));
        for n in 1..=6 {
            assert_eq!(phi.coeff(n, 0).unwrap(), int(0));
        }
        assert!(phi.v_degree_bounded());
    }

    #[test]
    fn psi_tot_coefficients() {
        let psi = psi_tot_series(6);
        assert_eq!(psi.coeff(0, 0).unwrap(), int(1));
        assert_eq!(psi.coeff(2, 2).unwrap(), rat(-1, 480));
        for n in 1..=6 {
            let zb = crate::exact::zeta_bar_even_coeff(n);
            assert_eq!(psi.coeff(n, 1).unwrap(), zb);
        }
    }

    #[test]
    fn psi1_coefficients() {
        let psi = psi1_series(6);
        assert_eq!(psi.coeff(2, 2).unwrap(), rat(-1, 240));
        assert_eq!(psi.coeff(1, 1).unwrap(), rat(-1, 12));
        for n in 0..=6 {
            assert_eq!(psi.coeff(n, 0).unwrap(), int(0));
        }
    }

    #[test]
    fn v_degree_bound_at_sixteen() {
        assert!(phi_series(16).v_degree_bounded());
        assert!(psi_tot_series(16).v_degree_bounded());
        assert!(psi1_series(16).v_degree_bounded());
    }

    #[test]
    fn xyzw_first_steps() {
        let zero = xyzw_polys_recursive(0);
        assert_eq!(
            zero,
            XyzwPolys {
                x: Poly::zero(),
                y: Poly::zero(),
                z: Poly::zero(),
                w: Poly::one()
            }
        );
        assert_eq!(xyzw_polys_closed(0), zero);

        let one = xyzw_polys_recursive(1);
        assert_eq!(one.x, Poly::constant(rat(-1, 2)));
        assert_eq!(one.y, Poly::constant(rat(-1, 2)));
        assert!(one.z.is_zero());
        assert_eq!(one.w, Poly::constant(rat(1, 2)));

        assert_eq!(xyzw_polys_closed(2).x, Poly::constant(rat(-3, 8)));
    }

    #[test]
    fn xyzw_recursive_matches_closed() {
        for d in 0..=10 {
            assert_eq!(xyzw_polys_recursive(d), xyzw_polys_closed(d), "d = {d}");
        }
    }

    #[test]
    fn pq_first_steps() {
        assert_eq!(
            pq_polys_recursive(0),
            PqPolys {
                p: Poly::zero(),
                q: Poly::one()
            }
        );
        assert_eq!(pq_polys_closed(0), pq_polys_recursive(0));
        let one = pq_polys_recursive(1);
        assert_eq!(one.p, Poly::constant(rat(-1, 2)));
        assert_eq!(one.q, Poly::constant(rat(3, 2)));
    }

    #[test]
    fn pq_recursive_matches_closed() {
        for d in 0..=10 {
            assert_eq!(pq_polys_recursive(d), pq_polys_closed(d), "d = {d}");
        }
    }

    #[test]
    fn q_constant_term_is_double_factorial() {
        let mut dfact = int(1);
        for d in 0..=10i64 {
            if d > 0 {
                dfact *= int(2 * d + 1);
            }
            assert_eq!(pq_polys_recursive(d as usize).q.coeff(0), &dfact / pow2(d));
        }
    }
}
