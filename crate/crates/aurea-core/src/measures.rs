//! Spiral measures of a subdivision: per-step and cumulative arc length,
//! quarter-disc area, residual-rectangle area, square complement and square
//! diagonal, as exact elements of the `{1, pi, sqrt 2}` measure module, plus
//! the closed forms that collapse the cumulative sums.
//!
//! For a step with sides `x` (previous) and `y` (current):
//!
//! ```text
//! arc length     (pi/2) x        quarter disc   (pi/4) x^2
//! residual area  x y             complement     x^2 (1 - pi/4)
//! diagonal       sqrt(2) x
//! ```
//!
//! The closed forms are the oracle-corrected ones; they agree with direct
//! summation exactly, with parity folded into `tau` and the alternating-sum
//! term.

use crate::exactnum::{converge, round_significant, sqrt_interval, GoldenNumber, Rational, Sign, SpiralMeasure};
use crate::fibonacci::{fib, tau_closed};
use crate::subdivision::SubdivisionTrace;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeasuresError {
    #[error("step measures need a strictly positive previous side")]
    NonpositiveSide,
    #[error("requested step {requested} but the trace holds {available}")]
    StepOutOfRange { requested: u32, available: u32 },
    #[error("ratio {m} is outside [1, 2]")]
    RatioOutOfRange { m: String },
    #[error("closed forms need at least one step")]
    ZeroSteps,
    #[error("expected a measure with only a pi component")]
    NotPurePi,
}

/// The five measures at one step (or their totals; `k = 0` marks an
/// infinite-sum total).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepMeasures {
    pub k: u32,
    pub arc_length: SpiralMeasure,
    pub quarter_disc: SpiralMeasure,
    pub residual_area: SpiralMeasure,
    pub complement: SpiralMeasure,
    pub diagonal: SpiralMeasure,
}

impl StepMeasures {
    fn zero(k: u32) -> Self {
        Self {
            k,
            arc_length: SpiralMeasure::zero(),
            quarter_disc: SpiralMeasure::zero(),
            residual_area: SpiralMeasure::zero(),
            complement: SpiralMeasure::zero(),
            diagonal: SpiralMeasure::zero(),
        }
    }

    fn add_assign(&mut self, other: &StepMeasures) {
        self.arc_length = &self.arc_length + &other.arc_length;
        self.quarter_disc = &self.quarter_disc + &other.quarter_disc;
        self.residual_area = &self.residual_area + &other.residual_area;
        self.complement = &self.complement + &other.complement;
        self.diagonal = &self.diagonal + &other.diagonal;
    }
}

fn half() -> GoldenNumber {
    GoldenNumber::from_parts(1, 2, 0, 1)
}

fn quarter() -> GoldenNumber {
    GoldenNumber::from_parts(1, 4, 0, 1)
}

/// Exact measures of step `k`, from the previous and current residual sides.
pub fn step_measures(
    x_prev: &GoldenNumber,
    x_cur: &GoldenNumber,
    k: u32,
) -> Result<StepMeasures, MeasuresError> {
    if x_prev.sign() != Sign::Positive {
        return Err(MeasuresError::NonpositiveSide);
    }
    let x_sq = x_prev * x_prev;
    Ok(StepMeasures {
        k,
        arc_length: SpiralMeasure::from_pi_coeff(x_prev * half()),
        quarter_disc: SpiralMeasure::from_pi_coeff(&x_sq * quarter()),
        residual_area: SpiralMeasure::from_unit(x_prev * x_cur),
        complement: SpiralMeasure::new(x_sq.clone(), -(&x_sq * quarter()), GoldenNumber::zero()),
        diagonal: SpiralMeasure::from_sqrt2_coeff(x_prev.clone()),
    })
}

/// Componentwise exact sums of the step measures over steps `1..=n`.
pub fn cumulative(trace: &SubdivisionTrace, n: u32) -> Result<StepMeasures, MeasuresError> {
    let available = trace.steps.len() as u32;
    if n == 0 || n > available {
        return Err(MeasuresError::StepOutOfRange {
            requested: n,
            available,
        });
    }
    let mut total = StepMeasures::zero(n);
    for k in 1..=n as usize {
        let step = step_measures(&trace.xs[k - 1], &trace.xs[k], k as u32)?;
        total.add_assign(&step);
    }
    Ok(total)
}

/// The five infinite-sum totals for the golden ratio, exactly:
///
/// ```text
/// arc length    (pi/2) b phi^2     quarter disc  (pi/4) b^2 phi
/// residual      b^2                complement    b^2 (1 - pi/4) phi
/// diagonal      sqrt(2) b phi^2
/// ```
pub fn golden_totals(b: &GoldenNumber) -> Result<StepMeasures, MeasuresError> {
    if b.sign() != Sign::Positive {
        return Err(MeasuresError::NonpositiveSide);
    }
    let phi = GoldenNumber::phi();
    let phi_sq = GoldenNumber::phi_pow(2);
    let b_sq = b * b;
    Ok(StepMeasures {
        k: 0,
        arc_length: SpiralMeasure::from_pi_coeff(b * &phi_sq * half()),
        quarter_disc: SpiralMeasure::from_pi_coeff(&b_sq * &phi * quarter()),
        residual_area: SpiralMeasure::from_unit(b_sq.clone()),
        complement: SpiralMeasure::new(
            &b_sq * &phi,
            -(&b_sq * &phi * quarter()),
            GoldenNumber::zero(),
        ),
        diagonal: SpiralMeasure::from_sqrt2_coeff(b * phi_sq),
    })
}

fn validate_closed_form_inputs(m: &GoldenNumber, n: u32) -> Result<(), MeasuresError> {
    if n == 0 {
        return Err(MeasuresError::ZeroSteps);
    }
    // The formulas extend continuously to the degenerate unit ratio, which
    // the Fibonacci-quotient families reach at their first index.
    let at_least_one = (m - &GoldenNumber::one()).sign() != Sign::Negative;
    let at_most_two = (GoldenNumber::from_int(2) - m).sign() != Sign::Negative;
    if at_least_one && at_most_two {
        Ok(())
    } else {
        Err(MeasuresError::RatioOutOfRange { m: m.to_string() })
    }
}

fn fib_gn(n: i64) -> GoldenNumber {
    GoldenNumber::from_rational(Rational::from_integer(fib(n)))
}

/// Closed form of the cumulative arc length over `n` steps at unit short
/// side: `(pi/2) [1 + m + (-1)^n (F(n-2) m - F(n-1))]`.
pub fn closed_form_arc_length(
    m: &GoldenNumber,
    n: u32,
) -> Result<SpiralMeasure, MeasuresError> {
    validate_closed_form_inputs(m, n)?;
    let ni = n as i64;
    let signed = fib_gn(ni - 2) * m - fib_gn(ni - 1);
    let signed = if n % 2 == 0 { signed } else { -signed };
    let bracket = GoldenNumber::one() + m + signed;
    Ok(SpiralMeasure::from_pi_coeff(bracket * half()))
}

/// Closed form of the cumulative quarter-disc area over `n` steps at unit
/// short side: `(pi/4) [m^2 F(n-1) F(n) - 2 m tau(n) + F(n) F(n+1)]`, with
/// `tau` taken through its parity closed form.
pub fn closed_form_quarter_disc(
    m: &GoldenNumber,
    n: u32,
) -> Result<SpiralMeasure, MeasuresError> {
    validate_closed_form_inputs(m, n)?;
    let ni = n as i64;
    let tau = GoldenNumber::from_rational(Rational::from_integer(tau_closed(n as u64)));
    let bracket = m * m * fib_gn(ni - 1) * fib_gn(ni)
        - GoldenNumber::from_int(2) * m * tau
        + fib_gn(ni) * fib_gn(ni + 1);
    Ok(SpiralMeasure::from_pi_coeff(bracket * quarter()))
}

/// Closed form of the cumulative residual-rectangle area over `n` steps at
/// unit short side:
/// `m - tau(n)(m^2 + 1) + m (2 F(n) F(n+1) - 1 + alt(n)) - F(n) F(n+1)`
/// where `alt(n)` is the alternating sum `0` (even n) or `-1` (odd n).
pub fn closed_form_residual_area(
    m: &GoldenNumber,
    n: u32,
) -> Result<SpiralMeasure, MeasuresError> {
    validate_closed_form_inputs(m, n)?;
    let ni = n as i64;
    let tau = GoldenNumber::from_rational(Rational::from_integer(tau_closed(n as u64)));
    let ff = fib_gn(ni) * fib_gn(ni + 1);
    let alt = if n % 2 == 0 {
        GoldenNumber::zero()
    } else {
        GoldenNumber::from_int(-1)
    };
    let value = m.clone() - tau * (m * m + GoldenNumber::one())
        + m * (GoldenNumber::from_int(2) * &ff - GoldenNumber::one() + alt)
        - ff;
    Ok(SpiralMeasure::from_unit(value))
}

fn pure_pi_coeff(total: &SpiralMeasure) -> Result<&GoldenNumber, MeasuresError> {
    if total.unit_coeff().is_zero() && total.sqrt2_coeff().is_zero() {
        Ok(total.pi_coeff())
    } else {
        Err(MeasuresError::NotPurePi)
    }
}

/// Complement total from the quarter-disc total, at the coefficient level:
/// `(4/pi - 1) (v pi) = 4v - v pi`.
pub fn derive_complement(
    quarter_disc_total: &SpiralMeasure,
) -> Result<SpiralMeasure, MeasuresError> {
    let v = pure_pi_coeff(quarter_disc_total)?;
    Ok(SpiralMeasure::new(
        GoldenNumber::from_int(4) * v,
        -v,
        GoldenNumber::zero(),
    ))
}

/// Diagonal total from the arc-length total, at the coefficient level:
/// `(2 sqrt 2 / pi) (v pi) = 2 v sqrt 2`.
pub fn derive_diagonal(
    arc_length_total: &SpiralMeasure,
) -> Result<SpiralMeasure, MeasuresError> {
    let v = pure_pi_coeff(arc_length_total)?;
    Ok(SpiralMeasure::from_sqrt2_coeff(
        GoldenNumber::from_int(2) * v,
    ))
}

/// High-precision comparison of `pi / phi^2` with `6/5`, and of `phi` with
/// `sqrt(5 pi / 6)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiPhiReport {
    /// `pi / phi^2` to 30 significant digits.
    pub pi_over_phi_squared: String,
    /// `|pi / phi^2 - 6/5|` to 30 significant digits.
    pub gap_to_six_fifths: String,
    /// Rigorous check that the gap is at most `3 * 10^-5`.
    pub gap_within_bound: bool,
    /// `phi` to 30 significant digits.
    pub phi_decimal: String,
    /// `sqrt(5 pi / 6)` to 30 significant digits.
    pub sqrt_five_pi_sixths: String,
    /// Decimal places on which the two previous strings agree (the
    /// approximation is good to about four places; it is not an identity).
    pub agreement_decimals: u32,
}

const REPORT_DIGITS: u32 = 30;

pub fn pi_phi_check() -> PiPhiReport {
    // 1/phi^2 = 2 - phi, so pi/phi^2 is a pure-pi measure.
    let inv_phi_sq = GoldenNumber::from_int(2) - GoldenNumber::phi();
    let ratio = SpiralMeasure::from_pi_coeff(inv_phi_sq);
    let six_fifths = GoldenNumber::from_parts(6, 5, 0, 1);
    let gap = &ratio - &SpiralMeasure::from_unit(six_fifths);

    let bound = Rational::new(3.into(), 100_000.into());
    let (lo, hi) = gap.to_rational_bounds(40);
    let gap_within_bound = hi <= bound && lo >= -bound;
    // The gap is negative (pi/phi^2 < 6/5); render its magnitude.
    let gap_to_six_fifths = (-gap).to_decimal(REPORT_DIGITS);

    let five_pi_sixths = Rational::new(5.into(), 6.into());
    let sqrt_five_pi_sixths = converge(
        |p| {
            let pi = SpiralMeasure::from_pi_coeff(GoldenNumber::one()).interval(p);
            let scaled = pi.scale(&five_pi_sixths);
            // sqrt is monotone, so bounding the endpoints bounds the root.
            let lo_root = sqrt_interval(&scaled.lo, p);
            let hi_root = sqrt_interval(&scaled.hi, p);
            crate::exactnum::RatInterval {
                lo: lo_root.lo,
                hi: hi_root.hi,
            }
        },
        |x| round_significant(x, REPORT_DIGITS),
        REPORT_DIGITS + 10,
    );
    let phi_decimal = GoldenNumber::phi().to_decimal(REPORT_DIGITS);
    let agreement_decimals = decimal_agreement(&phi_decimal, &sqrt_five_pi_sixths);

    PiPhiReport {
        pi_over_phi_squared: ratio.to_decimal(REPORT_DIGITS),
        gap_to_six_fifths,
        gap_within_bound,
        phi_decimal,
        sqrt_five_pi_sixths,
        agreement_decimals,
    }
}

/// Decimal places after the point on which two aligned decimal strings agree.
fn decimal_agreement(a: &str, b: &str) -> u32 {
    let (ia, fa) = a.split_once('.').unwrap_or((a, ""));
    let (ib, fb) = b.split_once('.').unwrap_or((b, ""));
    if ia != ib {
        return 0;
    }
    fa.chars()
        .zip(fb.chars())
        .take_while(|(x, y)| x == y)
        .count() as u32
}

/// Everything the report emitters need: per-step measures, exact cumulative
/// totals, closed-form totals, and their (identically zero) differences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureReport {
    pub trace: SubdivisionTrace,
    pub per_step: Vec<StepMeasures>,
    pub cumulative: StepMeasures,
    pub closed_form: StepMeasures,
    pub deviation: StepMeasures,
}

/// Build the full report over the first `n` steps of a trace.
///
/// Closed forms are evaluated at unit short side and rescaled: lengths by
/// `b`, areas by `b^2`.
pub fn measure_report(trace: &SubdivisionTrace, n: u32) -> Result<MeasureReport, MeasuresError> {
    let cumulative = cumulative(trace, n)?;
    let per_step: Vec<StepMeasures> = (1..=n)
        .map(|k| step_measures(&trace.xs[(k - 1) as usize], &trace.xs[k as usize], k))
        .collect::<Result<_, _>>()?;

    let b = &trace.b;
    let b_sq = b * b;
    let arc_length = closed_form_arc_length(&trace.m, n)?.scale(b);
    let quarter_disc = closed_form_quarter_disc(&trace.m, n)?.scale(&b_sq);
    let residual_area = closed_form_residual_area(&trace.m, n)?.scale(&b_sq);
    let complement = derive_complement(&quarter_disc)?;
    let diagonal = derive_diagonal(&arc_length)?;
    let closed_form = StepMeasures {
        k: n,
        arc_length,
        quarter_disc,
        residual_area,
        complement,
        diagonal,
    };

    let deviation = StepMeasures {
        k: n,
        arc_length: &closed_form.arc_length - &cumulative.arc_length,
        quarter_disc: &closed_form.quarter_disc - &cumulative.quarter_disc,
        residual_area: &closed_form.residual_area - &cumulative.residual_area,
        complement: &closed_form.complement - &cumulative.complement,
        diagonal: &closed_form.diagonal - &cumulative.diagonal,
    };

    Ok(MeasureReport {
        trace: trace.clone(),
        per_step,
        cumulative,
        closed_form,
        deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subdivision::layout;

    fn one() -> GoldenNumber {
        GoldenNumber::one()
    }

    fn ratio(p: i64, q: i64) -> GoldenNumber {
        GoldenNumber::from_parts(p, q, 0, 1)
    }

    #[test]
    fn golden_first_step_measures() {
        let phi = GoldenNumber::phi();
        let x1 = &phi - &one();
        let s = step_measures(&one(), &x1, 1).unwrap();
        assert_eq!(*s.arc_length.pi_coeff(), half());
        assert_eq!(*s.diagonal.sqrt2_coeff(), one());
        // B1 = (m - 1) b^2 = b^2 / phi.
        assert_eq!(
            *s.residual_area.unit_coeff(),
            GoldenNumber::phi().inv().unwrap()
        );
    }

    #[test]
    fn zero_current_side_is_allowed_but_zero_previous_is_not() {
        let s = step_measures(&one(), &GoldenNumber::zero(), 3).unwrap();
        assert!(s.residual_area.is_zero());
        assert_eq!(
            step_measures(&GoldenNumber::zero(), &one(), 1),
            Err(MeasuresError::NonpositiveSide)
        );
    }

    #[test]
    fn cumulative_single_step_equals_the_step() {
        let trace = layout(&GoldenNumber::phi(), &one(), 3).unwrap();
        let total = cumulative(&trace, 1).unwrap();
        let step = step_measures(&trace.xs[0], &trace.xs[1], 1).unwrap();
        assert_eq!(total.arc_length, step.arc_length);
        assert_eq!(total.residual_area, step.residual_area);
    }

    #[test]
    fn residual_total_for_three_halves() {
        let trace = layout(&ratio(3, 2), &one(), 3).unwrap();
        let total = cumulative(&trace, 3).unwrap();
        assert_eq!(
            *total.residual_area.unit_coeff(),
            GoldenNumber::from_parts(3, 4, 0, 1)
        );
    }

    #[test]
    fn cumulative_bounds_checking() {
        let trace = layout(&ratio(3, 2), &one(), 3).unwrap();
        assert!(matches!(
            cumulative(&trace, 4),
            Err(MeasuresError::StepOutOfRange {
                requested: 4,
                available: 3
            })
        ));
    }

    #[test]
    fn golden_totals_at_unit_side() {
        let t = golden_totals(&one()).unwrap();
        assert_eq!(*t.residual_area.unit_coeff(), one());
        assert_eq!(
            *t.quarter_disc.pi_coeff(),
            GoldenNumber::phi() * quarter()
        );
        assert_eq!(
            *t.arc_length.pi_coeff(),
            GoldenNumber::phi_pow(2) * half()
        );
        assert_eq!(*t.diagonal.sqrt2_coeff(), GoldenNumber::phi_pow(2));
        assert_eq!(*t.complement.unit_coeff(), GoldenNumber::phi());
        assert_eq!(
            *t.complement.pi_coeff(),
            -(GoldenNumber::phi() * quarter())
        );
    }

    #[test]
    fn totals_scale_with_the_side() {
        let unit = golden_totals(&one()).unwrap();
        let double = golden_totals(&GoldenNumber::from_int(2)).unwrap();
        let four = GoldenNumber::from_int(4);
        let two = GoldenNumber::from_int(2);
        assert_eq!(double.quarter_disc, unit.quarter_disc.scale(&four));
        assert_eq!(double.residual_area, unit.residual_area.scale(&four));
        assert_eq!(double.complement, unit.complement.scale(&four));
        assert_eq!(double.arc_length, unit.arc_length.scale(&two));
        assert_eq!(double.diagonal, unit.diagonal.scale(&two));
    }

    #[test]
    fn arc_length_closed_form_small_cases() {
        // Two steps: (pi/2) m for any admissible m.
        let m = ratio(7, 5);
        let l2 = closed_form_arc_length(&m, 2).unwrap();
        assert_eq!(*l2.pi_coeff(), &m * &half());
        // Three steps at m = 3/2: (pi/2) * 2.
        let l3 = closed_form_arc_length(&ratio(3, 2), 3).unwrap();
        assert_eq!(*l3.pi_coeff(), one());
    }

    #[test]
    fn quarter_disc_closed_form_small_case() {
        let a3 = closed_form_quarter_disc(&ratio(3, 2), 3).unwrap();
        assert_eq!(
            *a3.pi_coeff(),
            GoldenNumber::from_parts(3, 2, 0, 1) * quarter()
        );
    }

    #[test]
    fn residual_area_closed_form_small_cases() {
        let b3 = closed_form_residual_area(&ratio(3, 2), 3).unwrap();
        assert_eq!(*b3.unit_coeff(), GoldenNumber::from_parts(3, 4, 0, 1));
        // Two steps: x0 x1 + x1 x2 = (m-1) + (m-1)(2-m).
        let m = ratio(9, 5);
        let b2 = closed_form_residual_area(&m, 2).unwrap();
        let x1 = &m - &one();
        let x2 = GoldenNumber::from_int(2) - &m;
        assert_eq!(*b2.unit_coeff(), &x1 + &x1 * &x2);
    }

    #[test]
    fn derivations_at_the_first_step() {
        let a1 = SpiralMeasure::from_pi_coeff(quarter());
        let c1 = derive_complement(&a1).unwrap();
        assert_eq!(*c1.unit_coeff(), one());
        assert_eq!(*c1.pi_coeff(), -quarter());

        let l = SpiralMeasure::from_pi_coeff(GoldenNumber::phi_pow(2) * half());
        let d = derive_diagonal(&l).unwrap();
        assert_eq!(*d.sqrt2_coeff(), GoldenNumber::phi_pow(2));

        assert_eq!(
            derive_complement(&SpiralMeasure::zero()).unwrap(),
            SpiralMeasure::zero()
        );
        let impure = SpiralMeasure::from_unit(one());
        assert_eq!(derive_complement(&impure), Err(MeasuresError::NotPurePi));
        assert_eq!(derive_diagonal(&impure), Err(MeasuresError::NotPurePi));
    }

    #[test]
    fn pi_phi_report_values() {
        let report = pi_phi_check();
        assert!(report.pi_over_phi_squared.starts_with("1.19998"));
        assert!(report.gap_within_bound);
        assert_eq!(report.agreement_decimals, 4);
        assert!(report.phi_decimal.starts_with("1.61803398874989484820"));
        assert!(report.sqrt_five_pi_sixths.starts_with("1.6180"));
    }

    #[test]
    fn report_deviations_vanish() {
        for (m, steps) in [(ratio(3, 2), 3u32), (ratio(8, 5), 4), (ratio(7, 4), 4)] {
            let trace = layout(&m, &one(), steps).unwrap();
            let report = measure_report(&trace, steps).unwrap();
            assert!(report.deviation.arc_length.is_zero(), "L at {m:?}");
            assert!(report.deviation.quarter_disc.is_zero(), "A at {m:?}");
            assert!(report.deviation.residual_area.is_zero(), "B at {m:?}");
            assert!(report.deviation.complement.is_zero(), "C at {m:?}");
            assert!(report.deviation.diagonal.is_zero(), "D at {m:?}");
        }
    }

    #[test]
    fn report_scales_with_the_side() {
        let b = GoldenNumber::from_int(3);
        let trace = layout(&ratio(3, 2), &b, 3).unwrap();
        let report = measure_report(&trace, 3).unwrap();
        assert!(report.deviation.residual_area.is_zero());
        assert_eq!(
            *report.cumulative.residual_area.unit_coeff(),
            GoldenNumber::from_parts(27, 4, 0, 1)
        );
    }
}
