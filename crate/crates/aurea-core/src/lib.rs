//! Exact subdivision of rectangles into squares, and the golden spiral's
//! measures, without a single floating-point decision.
//!
//! A rectangle with side ratio `m` in `(1, 2]` loses its largest square over
//! and over; the residual side lengths obey `x(k) = x(k-2) - x(k-1)`. The
//! sequence stays positive forever exactly when `m` is the golden ratio —
//! every other admissible ratio has a finite degree, the number of squares it
//! yields. The quarter arcs drawn in the squares form the familiar spiral,
//! and their lengths and the related region areas live exactly in the module
//! spanned by `{1, pi, sqrt 2}` over Q(phi).
//!
//! Layers:
//!
//! - [`exactnum`]: arbitrary-precision rationals, Q(phi) in the phi basis,
//!   and the three-component measure algebra with correctly rounded decimal
//!   output.
//! - [`fibonacci`]: the sequence, its convergents, and a machine-checked
//!   verdict table for eighteen classical identities.
//! - [`subdivision`]: the x-sequence, ratio classification, and exact square
//!   and arc geometry.
//! - [`measures`]: per-step and cumulative spiral measures, closed forms and
//!   golden limits.
//! - [`render`]: SVG, CSV and JSON emitters.
//! - [`errata`]: the machine-checked record of source-formula defects.
//!
//! Batch sweeps (`identity_ledger`, `degree_sweep`) run on rayon when the
//! default `parallel` feature is on and fall back to plain iteration without
//! it; `*_seq` twins stay sequential for benchmark baselines.

mod batch;

pub mod errata;
pub mod exactnum;
pub mod fibonacci;
pub mod measures;
pub mod render;
pub mod subdivision;

pub use exactnum::{GoldenNumber, Rational, Sign, SpiralMeasure};
pub use subdivision::{RatioClass, SubdivisionTrace};
