//! Exact arithmetic: arbitrary-precision rationals, the field Q(phi) in the
//! phi-power basis, and the measure module spanned by `{1, pi, sqrt 2}`.
//!
//! Everything here is immutable and pure; values can be shared and sent
//! between threads freely.

mod decimal;
mod golden;
mod measure;
mod parse;

pub use golden::{GoldenNumber, Rational, Sign, ZeroInverse};
pub use measure::SpiralMeasure;
pub use parse::ParseGoldenError;

pub(crate) use decimal::{converge, round_significant, sqrt_interval, RatInterval};
