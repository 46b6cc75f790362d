//! Floating-point evaluation of alternating Euler sums by truncation.
//!
//! The nested sum over n₁ > ⋯ > n_d ≥ 1 is streamed in a single pass over
//! k = 1, 2, …, keeping for each level i the running sum
//! Tᵢ = Σ_{k' < k} fᵢ(k')·Tᵢ₊₁(k'), so a truncation at N costs O(d·N).
//! Accuracy is estimated by comparing the truncations at N and 2N.

use std::ops::AddAssign;

use rayon::prelude::*;
use serde::Serialize;

use crate::closed::check_depth;
use crate::error::{domain, Result};
use crate::words::{compositions, restricted_words, xi_word, EulerWord};

/// Smallest tolerance accepted by [`eval_word_refined`].
pub const MIN_TOLERANCE: f64 = 1e-12;
/// First truncation point of the doubling schedule.
pub const FIRST_TRUNCATION: u64 = 1 << 16;
/// Largest truncation point of the doubling schedule.
pub const MAX_TRUNCATION: u64 = 1 << 24;

/// Neumaier's variant of Kahan compensated summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn sum(&self) -> f64 {
        self.sum + self.comp
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::default();
        for x in iter {
            acc += x;
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NumericResult {
    pub error_estimate: f64,
    pub terms_used: u64,
    pub value: f64,
}

/// Truncated partial sums of one word, resumable at larger N.
struct Stream {
    exps: Vec<i32>,
    bars: Vec<bool>,
    levels: Vec<NeumaierSum>,
    done: u64,
}

impl Stream {
    fn new(w: &EulerWord) -> Self {
        let letters = w.letters();
        Self {
            exps: letters.iter().map(|l| l.exp as i32).collect(),
            bars: letters.iter().map(|l| l.bar).collect(),
            levels: vec![NeumaierSum::default(); letters.len()],
            done: 0,
        }
    }

    fn advance_to(&mut self, n: u64) {
        let depth = self.exps.len();
        for k in self.done + 1..=n {
            let inv = 1.0 / k as f64;
            let odd = k % 2 == 1;
            for i in 0..depth {
                let inner = if i + 1 < depth {
                    self.levels[i + 1].sum()
                } else {
                    1.0
                };
                if inner == 0.0 {
                    continue;
                }
                let mut f = inv.powi(self.exps[i]);
                if self.bars[i] && odd {
                    f = -f;
                }
                self.levels[i] += f * inner;
            }
        }
        self.done = self.done.max(n);
    }

    fn value(&self) -> f64 {
        self.levels[0].sum()
    }
}

/// The sum truncated to n₁ ≤ N.
pub fn eval_word(w: &EulerWord, n: u64) -> f64 {
    let mut s = Stream::new(w);
    s.advance_to(n);
    s.value()
}

/// Tolerance used when the caller gives none: 10⁻⁵ for words of weight at
/// most 4 with no barred letter, whose tails decay slowest, else 10⁻⁸.
pub fn default_tolerance(w: &EulerWord) -> f64 {
    if w.weight() <= 4 && w.alternating_count() == 0 {
        1e-5
    } else {
        1e-8
    }
}

/// Doubles N from 2¹⁶ until |S_2N − S_N| < tol or 2N reaches 2²⁴.
///
/// An unreachable tolerance is not an error: the last estimate is returned
/// and will be at least `tol`.
pub fn eval_word_refined(w: &EulerWord, tol: f64) -> Result<NumericResult> {
    if tol.is_nan() || tol < MIN_TOLERANCE {
        return domain(format!(
            "tolerance must be at least {MIN_TOLERANCE:e}, got {tol:e}"
        ));
    }
    let mut s = Stream::new(w);
    let mut n = FIRST_TRUNCATION;
    s.advance_to(n);
    let mut prev = s.value();
    loop {
        s.advance_to(2 * n);
        let value = s.value();
        let error_estimate = (value - prev).abs();
        if error_estimate < tol || 2 * n >= MAX_TRUNCATION {
            return Ok(NumericResult {
                error_estimate,
                terms_used: 2 * n,
                value,
            });
        }
        prev = value;
        n *= 2;
    }
}

/// Which restricted sum [`restricted_sum_numeric`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumMode {
    /// A_α(2n,d): exactly α barred entries.
    Alpha(usize),
    /// Ξ(2n,d): the ξ-words of all compositions.
    Xi,
}

/// Sums refined member evaluations over a restricted index set. Members are
/// evaluated in parallel and reduced in sorted word order; the error estimate
/// is the sum of member estimates and `terms_used` their maximum.
pub fn restricted_sum_numeric(
    n: usize,
    d: usize,
    mode: SumMode,
    tol: Option<f64>,
) -> Result<NumericResult> {
    check_depth(n, d)?;
    let mut words: Vec<EulerWord> = match mode {
        SumMode::Alpha(alpha) => {
            if alpha > d {
                return domain(format!("α = {alpha} exceeds depth d = {d}"));
            }
            restricted_words(n, d, alpha).collect()
        }
        SumMode::Xi => compositions(n, d).map(|c| xi_word(&c)).collect(),
    };
    words.sort();
    sum_words(&words, tol)
}

/// Refined evaluation of Σ w over a word list, in the list's order.
pub fn sum_words(words: &[EulerWord], tol: Option<f64>) -> Result<NumericResult> {
    let members = words
        .par_iter()
        .map(|w| eval_word_refined(w, tol.unwrap_or_else(|| default_tolerance(w))))
        .collect::<Result<Vec<_>>>()?;
    let value: NeumaierSum = members.iter().map(|r| r.value).collect();
    let error: NeumaierSum = members.iter().map(|r| r.error_estimate).collect();
    Ok(NumericResult {
        error_estimate: error.sum(),
        terms_used: members.iter().map(|r| r.terms_used).max().unwrap_or(0),
        value: value.sum(),
    })
}
