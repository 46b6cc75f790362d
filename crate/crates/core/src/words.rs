//! Alternating Euler sum indices as words over the alphabet of (s, ε) pairs.
//!
//! A word (s₁,ε₁)…(s_d,ε_d) stands for
//! ζ(s₁,…,s_d; ε₁,…,ε_d) = Σ_{n₁>⋯>n_d≥1} ε₁^{n₁}⋯ε_d^{n_d}/(n₁^{s₁}⋯n_d^{s_d}),
//! with a barred letter meaning ε = −1. Text form: `2b,4` is ζ(2̄,4).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub exp: u32,
    pub bar: bool,
}

impl Letter {
    pub fn new(exp: u32, bar: bool) -> Self {
        Self { exp, bar }
    }

    /// ε = ±1 as a float, for the oracle.
    pub fn sign(self) -> f64 {
        if self.bar {
            -1.0
        } else {
            1.0
        }
    }

    fn merge(self, other: Self) -> Self {
        Self::new(self.exp + other.exp, self.bar != other.bar)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.exp, if self.bar { "b" } else { "" })
    }
}

/// An admissible index word. Words compare lexicographically letter by
/// letter, which gives [`WordCombination`] a canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EulerWord(Vec<Letter>);

impl EulerWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Parse("a word needs at least one entry".into()));
        }
        if letters.iter().any(|l| l.exp == 0) {
            return Err(Error::Parse("exponents must be positive".into()));
        }
        let word = Self(letters);
        if word.0[0] == Letter::new(1, false) {
            return Err(Error::Inadmissible {
                word: word.to_string(),
            });
        }
        Ok(word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|l| l.exp).sum()
    }

    /// Number of barred letters.
    pub fn alternating_count(&self) -> usize {
        self.0.iter().filter(|l| l.bar).count()
    }
}

impl fmt::Display for EulerWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl FromStr for EulerWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let letters = compact
            .split(',')
            .map(|entry| {
                let (digits, bar) = match entry.strip_suffix('b') {
                    Some(d) => (d, true),
                    None => (entry, false),
                };
                match digits.parse::<u32>() {
                    Ok(exp) if exp > 0 && digits.bytes().all(|b| b.is_ascii_digit()) => {
                        Ok(Letter::new(exp, bar))
                    }
                    _ => Err(Error::Parse(format!(
                        "bad word entry {entry:?}: expected a positive integer with optional `b`"
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }
}

impl Serialize for EulerWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An ordered tuple of positive integers (j₁,…,j_d).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Domain(format!(
                "composition parts must be positive, got {parts:?}"
            )));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let parts = compact
            .split(',')
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad composition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// All compositions of n into d positive parts, in lexicographic order.
/// Empty when d = 0 or d > n.
pub fn compositions(n: usize, d: usize) -> impl Iterator<Item = Composition> + Clone {
    let cuts = if d == 0 || d > n { 0 } else { d - 1 };
    let live = d >= 1 && d <= n;
    (1..n)
        .combinations(cuts)
        .filter(move |_| live)
        .map(move |cut| {
            let mut parts = Vec::with_capacity(cut.len() + 1);
            let mut prev = 0;
            for c in cut {
                parts.push(c - prev);
                prev = c;
            }
            parts.push(n - prev);
            Composition(parts)
        })
}

/// All bar patterns of length d with exactly α bars, ordered by the
/// positions of the bars.
pub fn sign_assignments(d: usize, alpha: usize) -> impl Iterator<Item = Vec<bool>> + Clone {
    (0..d)
        .combinations(alpha)
        .filter(move |_| alpha <= d)
        .map(move |pos| {
            let mut pattern = vec![false; d];
            for p in pos {
                pattern[p] = true;
            }
            pattern
        })
}

/// The ξ-word of a composition: entry i is (2jᵢ, barred iff jᵢ is odd).
pub fn xi_word(c: &Composition) -> EulerWord {
    EulerWord(
        c.0.iter()
            .map(|&j| Letter::new(2 * j as u32, j % 2 == 1))
            .collect(),
    )
}

/// Words (2j₁,…,2j_d) with exactly α barred entries, for every composition
/// of n into d parts.
pub fn restricted_words(n: usize, d: usize, alpha: usize) -> impl Iterator<Item = EulerWord> {
    compositions(n, d)
        .cartesian_product(sign_assignments(d, alpha).collect::<Vec<_>>())
        .map(|(c, pattern)| {
            EulerWord(
                c.0.iter()
                    .zip(pattern)
                    .map(|(&j, bar)| Letter::new(2 * j as u32, bar))
                    .collect(),
            )
        })
}

/// A nonnegative integer combination of words, kept in word order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordCombination(BTreeMap<EulerWord, u64>);

impl WordCombination {
    pub fn multiplicity(&self, w: &EulerWord) -> u64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&EulerWord, u64)> {
        self.0.iter().map(|(w, &m)| (w, m))
    }

    /// Number of distinct words.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    fn add(&mut self, w: EulerWord, m: u64) {
        *self.0.entry(w).or_insert(0) += m;
    }
}

impl fmt::Display for WordCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.0.iter().map(|(w, &m)| {
            if m == 1 {
                format!("({w})")
            } else {
                format!("{m}·({w})")
            }
        });
        write!(f, "{}", terms.format(" + "))
    }
}

fn stuffle_rec(a: &[Letter], b: &[Letter]) -> Vec<Vec<Letter>> {
    let (Some((&x, a_rest)), Some((&y, b_rest))) = (a.split_first(), b.split_first()) else {
        return vec![a.iter().chain(b).copied().collect()];
    };
    let prepend = |head: Letter, tails: Vec<Vec<Letter>>| {
        tails
            .into_iter()
            .map(move |t| std::iter::once(head).chain(t).collect::<Vec<_>>())
    };
    prepend(x, stuffle_rec(a_rest, b))
        .chain(prepend(y, stuffle_rec(a, b_rest)))
        .chain(prepend(x.merge(y), stuffle_rec(a_rest, b_rest)))
        .collect()
}

/// The quasi-shuffle product with merge (s,ε)·(t,δ) = (s+t, εδ).
///
/// Every output word starts with a first letter of an input or a merge of
/// both, so outputs of admissible inputs are admissible.
pub fn stuffle(w1: &EulerWord, w2: &EulerWord) -> WordCombination {
    let mut out = WordCombination::default();
    for letters in stuffle_rec(&w1.0, &w2.0) {
        out.add(EulerWord(letters), 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::binomial;
    use proptest::prelude::*;

    fn w(s: &str) -> EulerWord {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(w(" 2b , 4 ").to_string(), "2b,4");
        assert_eq!(w("2b,4").weight(), 6);
        assert_eq!(w("2b,4").depth(), 2);
        assert_eq!(w("1b").letters(), &[Letter::new(1, true)]);
        assert_eq!(w("2,1").letters()[1], Letter::new(1, false));
        let err = "1".parse::<EulerWord>().unwrap_err();
        assert!(matches!(err, Error::Inadmissible { .. }));
        assert!(err.to_string().contains("(s₁,ε₁)≠(1,1)"));
        for bad in ["", "0", "2c", "b", "2,,4", "-2", "+2", "2bb"] {
            assert!(
                matches!(bad.parse::<EulerWord>(), Err(Error::Parse(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn composition_examples() {
        let c: Vec<_> = compositions(3, 2).map(|c| c.0).collect();
        assert_eq!(c, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(
            compositions(4, 1).map(|c| c.0).collect::<Vec<_>>(),
            vec![vec![4]]
        );
        assert_eq!(compositions(10, 4).count(), 84);
        assert_eq!(compositions(2, 3).count(), 0);
        assert_eq!(compositions(3, 0).count(), 0);
        let all: Vec<_> = compositions(8, 3).collect();
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        assert!(all.iter().all(|c| c.total() == 8 && c.depth() == 3));
        assert_eq!("1, 2".parse::<Composition>().unwrap().parts(), &[1, 2]);
        assert!("1,0".parse::<Composition>().is_err());
    }

    #[test]
    fn sign_examples() {
        let s: Vec<_> = sign_assignments(2, 1).collect();
        assert_eq!(s, vec![vec![true, false], vec![false, true]]);
        assert_eq!(
            sign_assignments(3, 0).collect::<Vec<_>>(),
            vec![vec![false; 3]]
        );
        assert_eq!(sign_assignments(4, 2).count(), 6);
        assert_eq!(sign_assignments(2, 3).count(), 0);
    }

    #[test]
    fn xi_words() {
        let c = |p: Vec<usize>| Composition::new(p).unwrap();
        assert_eq!(xi_word(&c(vec![1, 2])), w("2b,4"));
        assert_eq!(xi_word(&c(vec![2, 1])), w("4,2b"));
        assert_eq!(xi_word(&c(vec![2, 2])), w("4,4"));
    }

    #[test]
    fn restricted_word_sets() {
        assert_eq!(
            restricted_words(2, 2, 2).collect::<Vec<_>>(),
            vec![w("2b,2b")]
        );
        let mut got: Vec<_> = restricted_words(3, 2, 1).collect();
        got.sort();
        let mut want = vec![w("2b,4"), w("2,4b"), w("4b,2"), w("4,2b")];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(restricted_words(6, 3, 2).count(), 30);
        for n in 1..=8 {
            for d in 1..=n {
                for a in 0..=d {
                    let words: Vec<_> = restricted_words(n, d, a).collect();
                    let expect =
                        binomial(n as i64 - 1, d as i64 - 1) * binomial(d as i64, a as i64);
                    assert_eq!(num_bigint::BigInt::from(words.len()), expect);
                    assert!(words.iter().all(|x| x.weight() as usize == 2 * n
                        && x.depth() == d
                        && x.alternating_count() == a));
                }
            }
        }
    }

    #[test]
    fn stuffle_examples() {
        let p = stuffle(&w("2b"), &w("4"));
        assert_eq!(p.len(), 3);
        for x in ["2b,4", "4,2b", "6b"] {
            assert_eq!(p.multiplicity(&w(x)), 1);
        }
        let p = stuffle(&w("3b"), &w("5b"));
        assert_eq!(p.multiplicity(&w("8")), 1);
        let p = stuffle(&w("2"), &w("2,2"));
        assert_eq!(p.multiplicity(&w("2,2,2")), 3);
        assert_eq!(p.multiplicity(&w("4,2")), 1);
        assert_eq!(p.multiplicity(&w("2,4")), 1);
        assert_eq!(p.total(), 5);
        assert_eq!(p.to_string(), "3·(2,2,2) + (2,4) + (4,2)");
    }

    /// Number of quasi-shuffles of lengths a and b with exactly k merges.
    fn count_with_merges(a: usize, b: usize, k: usize) -> u64 {
        let c = |n: usize, r: usize| u64::try_from(binomial(n as i64, r as i64)).unwrap();
        c(a + b - k, k) * c(a + b - 2 * k, a - k)
    }

    fn arb_word(max_depth: usize, max_exp: u32) -> impl Strategy<Value = EulerWord> {
        prop::collection::vec((1..=max_exp, any::<bool>()), 1..=max_depth)
            .prop_filter_map("admissible", |v| {
                EulerWord::new(v.into_iter().map(|(e, b)| Letter::new(e, b)).collect()).ok()
            })
    }

    proptest! {
        #[test]
        fn stuffle_laws(a in arb_word(3, 5), b in arb_word(3, 5)) {
            let ab = stuffle(&a, &b);
            prop_assert_eq!(&ab, &stuffle(&b, &a));
            let (da, db) = (a.depth(), b.depth());
            for (x, _) in ab.iter() {
                prop_assert_eq!(x.weight(), a.weight() + b.weight());
                prop_assert!(x.depth() <= da + db && x.depth() >= da.max(db));
            }
            for k in 0..=da.min(db) {
                let got: u64 = ab.iter().filter(|(x, _)| x.depth() == da + db - k).map(|(_, m)| m).sum();
                prop_assert_eq!(got, count_with_merges(da, db, k));
            }
        }

        #[test]
        fn word_text_round_trip(a in arb_word(4, 9)) {
            prop_assert_eq!(a.to_string().parse::<EulerWord>().unwrap(), a);
        }
    }
}
