//! Exact and numerical evaluation of restricted sums of alternating Euler
//! sums at even arguments.
//!
//! Every closed form evaluates to a [`PiPoly`], an exact rational
//! combination of even powers of π. Generating functions are truncated
//! bivariate series with exact coefficients, and an independent
//! floating-point [`oracle`] evaluates the underlying nested series.

pub mod closed;
pub mod combinat;
pub mod error;
pub mod exact;
pub mod fps;
pub mod genfun;
pub mod oracle;
pub mod poly;
pub mod verify;
pub mod words;

pub use closed::XiMethod;
pub use error::{Error, Result};
pub use exact::{PiPoly, PiTerm, Rational};
pub use fps::Series2;
pub use oracle::{NumericResult, SumMode};
pub use verify::{Suite, VerifyReport};
pub use words::{Composition, EulerWord, Letter, WordCombination};
