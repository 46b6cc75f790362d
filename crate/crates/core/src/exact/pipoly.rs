use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

/// Finite sum Σ cₖ·π^{2k} with rational coefficients.
///
/// Keys are the half-exponent `k`; only even powers of π are representable.
/// Zero coefficients are never stored, so structural equality is value
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PiPoly {
    terms: BTreeMap<u32, Rational>,
}

impl PiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// c·π^{2k}
    pub fn monomial(c: Rational, k: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    /// π^{2k}
    pub fn pi_pow(k: u32) -> Self {
        Self::monomial(Rational::one(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of π^{2k}.
    pub fn coeff(&self, k: u32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// (k, cₖ) pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Returns `(k, c)` when the value is a single term c·π^{2k}.
    pub fn as_monomial(&self) -> Option<(u32, &Rational)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    /// Rational part of a value that is homogeneous of weight 2k: zero gives
    /// `Some(0)`, a single π^{2k} term gives its coefficient, anything else
    /// `None`.
    pub fn graded_coeff(&self, k: u32) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&k).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, k: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c * factor)).collect(),
        }
    }

    /// Σ cₖ·π^{2k} in double precision, summed in increasing exponent order.
    pub fn to_f64(&self) -> f64 {
        let pi2 = std::f64::consts::PI * std::f64::consts::PI;
        self.terms
            .iter()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * pi2.powi(*k as i32))
            .sum()
    }

    /// Terms in their wire form, ascending by π exponent.
    pub fn to_wire(&self) -> Vec<PiTerm> {
        self.terms
            .iter()
            .map(|(k, c)| PiTerm {
                pi_exp: 2 * k,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_wire(terms: &[PiTerm]) -> Result<Self, String> {
        let mut p = Self::zero();
        for t in terms {
            if t.pi_exp % 2 != 0 {
                return Err(format!("odd π exponent {} is not representable", t.pi_exp));
            }
            let num: BigInt = t
                .num
                .parse()
                .map_err(|e| format!("bad numerator {:?}: {e}", t.num))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|e| format!("bad denominator {:?}: {e}", t.den))?;
            if !den.is_positive() {
                return Err(format!("denominator must be positive, got {den}"));
            }
            p.add_term(t.pi_exp / 2, Rational::new(num, den));
        }
        Ok(p)
    }
}

/// One term of the JSON encoding: `{"pi_exp":<even>,"num":"..","den":".."}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiTerm {
    pub pi_exp: u32,
    pub num: String,
    pub den: String,
}

#[derive(Serialize, Deserialize)]
struct PiPolyWire {
    terms: Vec<PiTerm>,
}

impl Serialize for PiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PiPolyWire {
            terms: self.to_wire(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = PiPolyWire::deserialize(deserializer)?;
        PiPoly::from_wire(&wire.terms).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for PiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}·π^2")?,
                _ => write!(f, "{mag}·π^{}", 2 * k)?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&PiPoly> for PiPoly {
    fn add_assign(&mut self, rhs: &PiPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl SubAssign<&PiPoly> for PiPoly {
    fn sub_assign(&mut self, rhs: &PiPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, -c);
        }
    }
}

impl Neg for PiPoly {
    type Output = PiPoly;
    fn neg(mut self) -> PiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &PiPoly {
    type Output = PiPoly;
    fn neg(self) -> PiPoly {
        -self.clone()
    }
}

impl Mul for &PiPoly {
    type Output = PiPoly;
    fn mul(self, rhs: &PiPoly) -> PiPoly {
        let mut out = PiPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul<&Rational> for &PiPoly {
    type Output = PiPoly;
    fn mul(self, rhs: &Rational) -> PiPoly {
        self.scale(rhs)
    }
}

impl Mul<Rational> for PiPoly {
    type Output = PiPoly;
    fn mul(self, rhs: Rational) -> PiPoly {
        self.scale(&rhs)
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $assign:ident) => {
        impl $imp<PiPoly> for PiPoly {
            type Output = PiPoly;
            fn $method(mut self, rhs: PiPoly) -> PiPoly {
                self.$assign(&rhs);
                self
            }
        }
        impl $imp<&PiPoly> for PiPoly {
            type Output = PiPoly;
            fn $method(mut self, rhs: &PiPoly) -> PiPoly {
                self.$assign(rhs);
                self
            }
        }
        impl $imp<&PiPoly> for &PiPoly {
            type Output = PiPoly;
            fn $method(self, rhs: &PiPoly) -> PiPoly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $imp<PiPoly> for &PiPoly {
            type Output = PiPoly;
            fn $method(self, rhs: PiPoly) -> PiPoly {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Mul<PiPoly> for PiPoly {
    type Output = PiPoly;
    fn mul(self, rhs: PiPoly) -> PiPoly {
        &self * &rhs
    }
}

impl Mul<&PiPoly> for PiPoly {
    type Output = PiPoly;
    fn mul(self, rhs: &PiPoly) -> PiPoly {
        &self * rhs
    }
}

impl Mul<PiPoly> for &PiPoly {
    type Output = PiPoly;
    fn mul(self, rhs: PiPoly) -> PiPoly {
        self * &rhs
    }
}

impl Sum for PiPoly {
    fn sum<I: Iterator<Item = PiPoly>>(iter: I) -> PiPoly {
        iter.fold(PiPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a PiPoly> for PiPoly {
    fn sum<I: Iterator<Item = &'a PiPoly>>(iter: I) -> PiPoly {
        iter.fold(PiPoly::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::rat;
    use proptest::prelude::*;

    fn m(n: i64, d: i64, k: u32) -> PiPoly {
        PiPoly::monomial(rat(n, d), k)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(m(1, 6, 1) + m(-1, 12, 1), m(1, 12, 1));
        assert_eq!(m(1, 6, 1) * m(1, 90, 2), m(1, 540, 3));
        assert!(m(1, 6, 1).scale(&rat(0, 1)).is_zero());
        assert!((m(1, 6, 1) - m(1, 6, 1)).is_zero());
    }

    #[test]
    fn float_evaluation() {
        assert!((m(-1, 12, 1).to_f64() + 0.822_467_033_424_113_2).abs() < 1e-12);
        assert_eq!(PiPoly::zero().to_f64(), 0.0);
        assert!((m(1, 10080, 3).to_f64() - 0.095_375_9).abs() < 1e-7);
    }

    #[test]
    fn json_encoding_is_bit_exact() {
        let p = m(1, 10080, 3);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"terms":[{"pi_exp":6,"num":"1","den":"10080"}]}"#
        );
        let q = m(-1, 2, 0) + m(3, 7, 2);
        assert_eq!(
            serde_json::to_string(&q).unwrap(),
            r#"{"terms":[{"pi_exp":0,"num":"-1","den":"2"},{"pi_exp":4,"num":"3","den":"7"}]}"#
        );
        assert_eq!(
            serde_json::to_string(&PiPoly::zero()).unwrap(),
            r#"{"terms":[]}"#
        );
    }

    #[test]
    fn json_rejects_odd_exponent() {
        let bad = r#"{"terms":[{"pi_exp":3,"num":"1","den":"2"}]}"#;
        assert!(serde_json::from_str::<PiPoly>(bad).is_err());
        let neg_den = r#"{"terms":[{"pi_exp":2,"num":"1","den":"-2"}]}"#;
        assert!(serde_json::from_str::<PiPoly>(neg_den).is_err());
    }

    #[test]
    fn display() {
        assert_eq!((m(-1, 2, 0) + m(1, 6, 1)).to_string(), "-1/2 + 1/6·π^2");
        assert_eq!(m(-1, 480, 2).to_string(), "-1/480·π^4");
        assert_eq!(PiPoly::zero().to_string(), "0");
    }

    fn arb_pipoly() -> impl Strategy<Value = PiPoly> {
        prop::collection::vec((0u32..6, -50i64..50, 1i64..30), 0..5).prop_map(|ts| {
            ts.into_iter()
                .map(|(k, n, d)| PiPoly::monomial(rat(n, d), k))
                .sum()
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_pipoly(), b in arb_pipoly(), c in arb_pipoly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn json_round_trip(a in arb_pipoly()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: PiPoly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
