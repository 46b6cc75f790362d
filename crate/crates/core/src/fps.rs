//! Truncated bivariate power series in u with polynomial-in-v coefficients.
//!
//! π never appears explicitly: the coefficient of uⁿ stands for a rational
//! multiple of π^{2n}. Every generating function built here is homogeneous in
//! that grading, so all arithmetic stays in ℚ.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poly::{Poly, PolyV};

/// Truncation order used when callers do not pick one.
pub const DEFAULT_ORDER: usize = 16;

/// The four even-part kernels, as series in z = x².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KernelKind {
    /// sin(x)/x: Σ(−1)ᵏzᵏ/(2k+1)!
    Sinc,
    /// cos(x): Σ(−1)ᵏzᵏ/(2k)!
    Cos,
    /// sinh(x)/x: Σzᵏ/(2k+1)!
    Sinhc,
    /// cosh(x): Σzᵏ/(2k)!
    Cosh,
}

impl KernelKind {
    /// Coefficient of zᵏ.
    pub fn coeff(self, k: usize) -> Rational {
        let (alternating, fact) = match self {
            KernelKind::Sinc => (true, 2 * k + 1),
            KernelKind::Cos => (true, 2 * k),
            KernelKind::Sinhc => (false, 2 * k + 1),
            KernelKind::Cosh => (false, 2 * k),
        };
        let mag = Rational::new(1.into(), crate::combinat::factorial(fact));
        if alternating && k % 2 == 1 {
            -mag
        } else {
            mag
        }
    }
}

/// Σ_{n ≤ order} cₙ(v)·uⁿ, with `coeffs.len() == order + 1` always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series2 {
    order: usize,
    coeffs: Vec<PolyV>,
}

impl Series2 {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Poly::one();
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// anything past `order` is dropped.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<PolyV>) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        Self { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The v-polynomial multiplying uⁿ.
    pub fn u_coeff(&self, n: usize) -> Result<&PolyV> {
        self.coeffs.get(n).ok_or(Error::TruncationOverflow {
            requested: n,
            order: self.order,
        })
    }

    /// Rational coefficient of uⁿvᵈ; the represented value is this times
    /// π^{2n}.
    pub fn coeff(&self, n: usize, d: usize) -> Result<Rational> {
        Ok(self.u_coeff(n)?.coeff(d))
    }

    /// Σ_d [uⁿvᵈ], i.e. the uⁿ coefficient at v = 1.
    pub fn row_sum(&self, n: usize) -> Result<Rational> {
        Ok(self.u_coeff(n)?.at_one())
    }

    /// True when every uⁿ coefficient has v-degree at most n.
    pub fn v_degree_bounded(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(n, p)| p.degree().map_or(true, |deg| deg <= n))
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(self.order + 1 - i).enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// self·other⁻¹, for `other` with constant term exactly 1.
    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        if !other.coeffs[0].is_one() {
            return Err(Error::NonInvertible);
        }
        // r_n = a_n − Σ_{k=1}^{n} b_k r_{n−k}
        let mut out: Vec<PolyV> = Vec::with_capacity(self.order + 1);
        for n in 0..=self.order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                if !other.coeffs[k].is_zero() && !out[n - k].is_zero() {
                    acc = &acc - &(&other.coeffs[k] * &out[n - k]);
                }
            }
            out.push(acc);
        }
        Ok(Self {
            order: self.order,
            coeffs: out,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplies every coefficient by the v-polynomial `p`.
    pub fn mul_poly(&self, p: &PolyV) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }
}

/// The kernel evaluated at z = q·p(v)·u: the uᵏ coefficient is
/// kernelₖ·qᵏ·p(v)ᵏ.
pub fn kernel_series(kind: KernelKind, q: &Rational, p: &PolyV, order: usize) -> Series2 {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut q_pow = Rational::one();
    let mut p_pow = Poly::one();
    for k in 0..=order {
        coeffs.push(p_pow.scale(&(kind.coeff(k) * &q_pow)));
        q_pow *= q;
        p_pow = &p_pow * p;
    }
    Series2 { order, coeffs }
}

/// √x·cot√x at x = π²u/4, built from the kernels.
pub fn x_cot_series(order: usize) -> Series2 {
    let q = crate::combinat::rat(1, 4);
    kernel_series(KernelKind::Cos, &q, &Poly::one(), order)
        .try_div(&kernel_series(KernelKind::Sinc, &q, &Poly::one(), order))
        .expect("sinc kernel has unit constant term")
}

/// √x·tanh√x at x = π²u/4, built from the kernels as x·(sinh√x/√x)/cosh√x.
pub fn x_tanh_series(order: usize) -> Series2 {
    let q = crate::combinat::rat(1, 4);
    kernel_series(KernelKind::Sinhc, &q, &Poly::one(), order)
        .try_div(&kernel_series(KernelKind::Cosh, &q, &Poly::one(), order))
        .expect("cosh kernel has unit constant term")
        .shift_u(&q)
}

impl Series2 {
    /// Multiplies by c·u (drops the top coefficient).
    pub fn shift_u(&self, c: &Rational) -> Self {
        let mut coeffs = Vec::with_capacity(self.order + 1);
        coeffs.push(Poly::zero());
        coeffs.extend(self.coeffs.iter().take(self.order).map(|p| p.scale(c)));
        Self {
            order: self.order,
            coeffs,
        }
    }
}
