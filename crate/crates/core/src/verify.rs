//! Verification suites: every identity the crate implements, checked
//! against an independent route.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::closed::{self, XiMethod};
use crate::combinat::{factorial, int, pow2};
use crate::error::{Error, Result};
use crate::exact::{zeta_bar_even, zeta_even, PiPoly};
use crate::genfun::{
    phi_series, pq_polys_closed, pq_polys_recursive, psi1_series, psi_tot_series,
    xyzw_polys_closed, xyzw_polys_recursive,
};
use crate::oracle::{eval_word_refined, restricted_sum_numeric, NumericResult, SumMode};
use crate::words::{stuffle, EulerWord, Letter};

/// Depth used by the exact suite when none is given.
pub const DEFAULT_EXACT_MAX_N: usize = 12;
/// Depth used by the numeric suite when none is given.
pub const DEFAULT_NUMERIC_MAX_N: usize = 5;
/// Number of random word pairs in the stuffle suite.
pub const STUFFLE_PAIRS: usize = 50;
const STUFFLE_SEED: u64 = 0x5eed_2024;
const POLY_SYSTEM_DEPTH: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Exact,
    Numeric,
    Stuffle,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Exact => "exact",
            Suite::Numeric => "numeric",
            Suite::Stuffle => "stuffle",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Suite::Exact),
            "numeric" => Ok(Suite::Numeric),
            "stuffle" => Ok(Suite::Stuffle),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!(
                "unknown suite {other:?}, expected exact, numeric, stuffle or all"
            ))),
        }
    }
}

/// One side of a check: an exact value or a float.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Side {
    Exact(PiPoly),
    Float(f64),
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Exact(p) => write!(f, "{p}"),
            Side::Float(x) => write!(f, "{x:e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub lhs: Side,
    pub passed: bool,
    pub rhs: Side,
}

impl Check {
    pub fn exact(id: impl Into<String>, lhs: PiPoly, rhs: PiPoly) -> Self {
        let passed = lhs == rhs;
        Self {
            id: id.into(),
            lhs: Side::Exact(lhs),
            passed,
            rhs: Side::Exact(rhs),
        }
    }

    /// Passes when |lhs − rhs| < tol.
    pub fn float(id: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let passed = (lhs - rhs).abs() < tol;
        Self {
            id: id.into(),
            lhs: Side::Float(lhs),
            passed,
            rhs: Side::Float(rhs),
        }
    }

    pub fn holds(id: impl Into<String>, passed: bool) -> Self {
        Self {
            id: id.into(),
            lhs: Side::Float(0.0),
            passed,
            rhs: Side::Float(0.0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub passed: bool,
    pub suite: String,
}

impl VerifyReport {
    fn new(suite: Suite, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Self {
            checks,
            passed,
            suite: suite.to_string(),
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// One summary line, then each failing check with both sides.
    pub fn to_text(&self) -> String {
        let failed = self.failures().count();
        let mut out = format!(
            "suite {}: {} ({} checks, {} failed)\n",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed
        );
        for c in self.failures() {
            out.push_str(&format!(
                "FAIL {}\n  lhs = {}\n  rhs = {}\n",
                c.id, c.lhs, c.rhs
            ));
        }
        out
    }
}

/// Runs a suite. `max_n` bounds n for the exact and numeric suites and
/// defaults to 12 and 5 respectively.
pub fn run_suite(suite: Suite, max_n: Option<usize>) -> Result<VerifyReport> {
    let checks = match suite {
        Suite::Exact => exact_checks(max_n.unwrap_or(DEFAULT_EXACT_MAX_N))?,
        Suite::Numeric => numeric_checks(max_n.unwrap_or(DEFAULT_NUMERIC_MAX_N))?,
        Suite::Stuffle => stuffle_checks(STUFFLE_PAIRS)?,
        Suite::All => {
            let mut all = exact_checks(max_n.unwrap_or(DEFAULT_EXACT_MAX_N))?;
            all.extend(numeric_checks(max_n.unwrap_or(DEFAULT_NUMERIC_MAX_N))?);
            all.extend(stuffle_checks(STUFFLE_PAIRS)?);
            all
        }
    };
    Ok(VerifyReport::new(suite, checks))
}

fn pairs(max_n: usize, max_d: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max_n).flat_map(move |n| (1..=n.min(max_d)).map(move |d| (n, d)))
}

fn monomial(c: crate::exact::Rational, n: usize) -> PiPoly {
    PiPoly::monomial(c, n as u32)
}

pub fn xi_checks(max_n: usize) -> Result<Vec<Check>> {
    let phi = phi_series(max_n);
    let mut out = Vec::new();
    for (n, d) in pairs(max_n, max_n) {
        let a = closed::xi_thm11(n, d)?;
        let b = closed::xi_thm13(n, d)?;
        let c = monomial(phi.coeff(n, d)?, n);
        out.push(Check::exact(
            format!("xi/{}-vs-{}/n={n},d={d}", XiMethod::Thm11, XiMethod::Thm13),
            a.clone(),
            b,
        ));
        out.push(Check::exact(
            format!("xi/{}-vs-{}/n={n},d={d}", XiMethod::Thm11, XiMethod::Genfun),
            a,
            c,
        ));
    }
    for n in 1..=max_n {
        let row: PiPoly = (1..=n)
            .map(|d| closed::xi_thm11(n, d))
            .sum::<Result<PiPoly>>()?;
        out.push(Check::exact(
            format!("xi/row-sum/n={n}"),
            row,
            closed::xi_row_sum(n)?,
        ));
    }
    Ok(out)
}

pub fn series_checks(max_n: usize) -> Result<Vec<Check>> {
    let tot = psi_tot_series(max_n);
    let one = psi1_series(max_n);
    let mut out = Vec::new();
    for (n, d) in pairs(max_n, max_n) {
        out.push(Check::exact(
            format!("psi_tot/n={n},d={d}"),
            monomial(tot.coeff(n, d)?, n),
            closed::a_d(n, d)?,
        ));
        out.push(Check::exact(
            format!("psi1/n={n},d={d}"),
            monomial(one.coeff(n, d)?, n),
            closed::a1(n, d)?,
        ));
    }
    Ok(out)
}

pub fn restricted_checks(max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let gkz = zeta_even(n).scale(&crate::combinat::rat(3, 4));
        out.push(Check::exact(
            format!("a0/depth-2/n={n}"),
            closed::a0(n, 2)?,
            gkz,
        ));
    }
    for (n, d) in pairs(max_n, 4).filter(|&(_, d)| d >= 2) {
        let by_alpha: PiPoly = (0..=d)
            .map(|a| closed::a_alpha_small_depth(n, d, a))
            .sum::<Result<PiPoly>>()?;
        out.push(Check::exact(
            format!("alpha-sum/n={n},d={d}"),
            by_alpha,
            closed::a_total(n, d)?,
        ));
    }
    for n in 2..=max_n {
        let col: PiPoly = (1..=n).map(|d| closed::a1(n, d)).sum::<Result<PiPoly>>()?;
        out.push(Check::exact(
            format!("a1/depth-sum/n={n}"),
            col,
            zeta_even(1) * zeta_bar_even(n - 1),
        ));
    }
    for (n, d) in pairs(max_n.min(10), 4) {
        out.push(Check::exact(
            format!("a1/recursion/n={n},d={d}"),
            closed::a1_via_recursion(n, d)?,
            closed::a1(n, d)?,
        ));
    }
    Ok(out)
}

pub fn polynomial_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for d in 0..=POLY_SYSTEM_DEPTH {
        out.push(Check::holds(
            format!("xyzw/d={d}"),
            xyzw_polys_recursive(d) == xyzw_polys_closed(d),
        ));
        let pq = pq_polys_recursive(d);
        out.push(Check::holds(format!("pq/d={d}"), pq == pq_polys_closed(d)));
        let double_factorial = int(factorial(2 * d + 1)) / (pow2(d as i64) * int(factorial(d)));
        out.push(Check::exact(
            format!("pq/q-at-zero/d={d}"),
            PiPoly::constant(pq.q.coeff(0)),
            PiPoly::constant(double_factorial / pow2(d as i64)),
        ));
    }
    out
}

pub fn convolution_checks(max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let bar = closed::zeta_bar2_power(n);
        out.push(Check::exact(
            format!("zeta-bar-power/xi/n={n}"),
            bar.clone(),
            closed::xi_thm13(n, n)?,
        ));
        out.push(Check::exact(
            format!("zeta-bar-power/a_d/n={n}"),
            bar,
            closed::a_d(n, n)?,
        ));
        for r in 0..=2 {
            out.push(Check::exact(
                format!("a1-moment/r={r}/n={n}"),
                closed::a1_moment(r, n)?,
                closed::a1_moment_direct(r, n),
            ));
        }
    }
    for n in 2..=max_n {
        out.push(Check::exact(
            format!("l2/n={n}"),
            closed::l2(n)?,
            closed::l2_direct(n),
        ));
        out.push(Check::exact(
            format!("olzeta-conv/n={n}"),
            closed::olzeta_conv(n)?,
            closed::olzeta_conv_direct(n),
        ));
        for r in 0..=2 {
            out.push(Check::exact(
                format!("a0-moment/r={r}/n={n}"),
                closed::a0_moment(r, n)?,
                closed::a0_moment_direct(r, n),
            ));
        }
    }
    for n in (1..=11).step_by(2) {
        out.push(Check::exact(
            format!("ramanujan/odd/n={n}"),
            closed::ramanujan_r_exact(n),
            PiPoly::zero(),
        ));
    }
    for n in [2, 4, 6] {
        out.push(Check::float(
            format!("ramanujan/grosswald/n={n}"),
            closed::ramanujan_r1_numeric(n, closed::DEFAULT_GROSSWALD_TERMS)?,
            closed::ramanujan_r_exact(n).to_f64(),
            1e-10,
        ));
    }
    Ok(out)
}

fn exact_checks(max_n: usize) -> Result<Vec<Check>> {
    let mut out = xi_checks(max_n)?;
    out.extend(series_checks(max_n)?);
    out.extend(restricted_checks(max_n)?);
    out.extend(polynomial_checks());
    out.extend(convolution_checks(max_n)?);
    Ok(out)
}

/// Pass band for an oracle value against an exact one.
pub fn oracle_band(r: &NumericResult) -> f64 {
    1e-5f64.max(3.0 * r.error_estimate)
}

/// Every (n, d, α) with d ≤ 4 that has a closed form, oracle against exact.
pub fn numeric_checks(max_n: usize) -> Result<Vec<Check>> {
    let mut cases = Vec::new();
    for (n, d) in pairs(max_n, 4) {
        for alpha in 0..=d {
            cases.push((n, d, Some(alpha)));
        }
        cases.push((n, d, None));
    }
    let mut out = cases
        .into_par_iter()
        .map(|(n, d, alpha)| {
            let (exact, mode, id) = match alpha {
                Some(a) => (
                    closed::a_alpha_small_depth(n, d, a)?,
                    SumMode::Alpha(a),
                    format!("oracle/alpha={a}/n={n},d={d}"),
                ),
                None => (
                    closed::xi_thm11(n, d)?,
                    SumMode::Xi,
                    format!("oracle/xi/n={n},d={d}"),
                ),
            };
            let r = restricted_sum_numeric(n, d, mode, None)?;
            Ok(Check::float(id, r.value, exact.to_f64(), oracle_band(&r)))
        })
        .collect::<Result<Vec<_>>>()?;
    let z2b: EulerWord = "2b".parse()?;
    let r = eval_word_refined(&z2b, 1e-8)?;
    out.push(Check::float(
        "oracle/zeta-2-bar",
        r.value,
        zeta_bar_even(1).to_f64(),
        1e-8,
    ));
    Ok(out)
}

/// A random admissible word with even exponents, depth ≤ 2 and weight ≤ 10.
pub fn random_even_word(rng: &mut impl Rng) -> EulerWord {
    let depth = rng.random_range(1..=2usize);
    let mut budget = 10u32;
    let mut letters = Vec::with_capacity(depth);
    for i in 0..depth {
        let reserve = 2 * (depth - i - 1) as u32;
        let exp = 2 * rng.random_range(1..=(budget - reserve) / 2);
        budget -= exp;
        letters.push(Letter::new(exp, rng.random_bool(0.5)));
    }
    EulerWord::new(letters).expect("even exponents are admissible")
}

/// Random stuffle products checked for commutativity, grading and numeric
/// soundness. Members are evaluated once each, at a common tolerance.
pub fn stuffle_checks(pairs: usize) -> Result<Vec<Check>> {
    let mut rng = StdRng::seed_from_u64(STUFFLE_SEED);
    let products: Vec<_> = (0..pairs)
        .map(|_| (random_even_word(&mut rng), random_even_word(&mut rng)))
        .collect();
    let mut words: Vec<EulerWord> = Vec::new();
    for (a, b) in &products {
        words.push(a.clone());
        words.push(b.clone());
        words.extend(stuffle(a, b).iter().map(|(w, _)| w.clone()));
    }
    words.sort();
    words.dedup();
    let values: BTreeMap<EulerWord, NumericResult> = words
        .into_par_iter()
        .map(|w| {
            let r = eval_word_refined(&w, 1e-8)?;
            Ok((w, r))
        })
        .collect::<Result<_>>()?;

    let mut out = Vec::new();
    for (i, (a, b)) in products.iter().enumerate() {
        let ab = stuffle(a, b);
        let tag = format!("stuffle/{i}/({a})*({b})");
        out.push(Check::holds(
            format!("{tag}/commutative"),
            ab == stuffle(b, a),
        ));
        out.push(Check::holds(
            format!("{tag}/weight"),
            ab.iter()
                .all(|(w, _)| w.weight() == a.weight() + b.weight()),
        ));
        let (ra, rb) = (values[a], values[b]);
        let lhs = ra.value * rb.value;
        let mut rhs = 0.0;
        let mut err = ra.value.abs() * rb.error_estimate
            + rb.value.abs() * ra.error_estimate
            + ra.error_estimate * rb.error_estimate;
        for (w, m) in ab.iter() {
            let r = values[w];
            rhs += m as f64 * r.value;
            err += m as f64 * r.error_estimate;
        }
        out.push(Check::float(
            format!("{tag}/numeric"),
            lhs,
            rhs,
            3.0 * err + 1e-12,
        ));
    }
    Ok(out)
}
