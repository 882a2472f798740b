//! Square removal from a rectangle of ratio `m`, all in exact arithmetic.
//!
//! A rectangle with sides `m*b` by `b` (`1 < m <= 2`) loses one maximal-width
//! square per step, cutting from the left, top, right and bottom in turn. The
//! residual side lengths follow `x(k) = x(k-2) - x(k-1)` with `x(-1) = m*b`,
//! `x(0) = b`, equivalently the closed form
//! `x(k) = (-1)^(k-1) (F(k) m - F(k+1)) b`. The sequence stays positive
//! forever exactly when `m` is the golden ratio; otherwise the number of
//! positive terms is the ratio's degree. A terminal zero means the squares
//! tile the rectangle exactly; a terminal negative value means the next cut
//! no longer fits and the subdivision jams.
//!
//! The left/top/right/bottom cycle is a rendering convention (the measures
//! are orientation-independent); it matches the usual inward-curling spiral
//! figure.

use crate::batch;
use crate::exactnum::{GoldenNumber, Sign};
use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioClass {
    /// The ratio is exactly the golden ratio; subdivision never terminates.
    GoldenInfinite,
    /// The subdivision produces exactly this many squares.
    FiniteDegree(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubdivisionError {
    #[error("ratio {m} is outside the admissible interval (1, 2]")]
    RatioOutOfRange { m: String },
    #[error("side length must be positive")]
    NonpositiveSide,
    #[error("requested {requested} steps but the subdivision terminates after {degree}")]
    StepsExceedDegree { requested: u32, degree: u32 },
}

/// Quarter-circle arc inside one removed square.
///
/// The arc spans exactly the angular quadrant `start_quadrant` (0 covers
/// angles 0..90 degrees and so on counterclockwise) and is traversed from the
/// quadrant's upper boundary angle down to its lower one, so consecutive arcs
/// chain head to tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarterArc {
    pub center: (GoldenNumber, GoldenNumber),
    pub radius: GoldenNumber,
    pub start_quadrant: u8,
}

impl QuarterArc {
    fn axis_point(&self, angle_index: u8) -> (GoldenNumber, GoldenNumber) {
        let (cx, cy) = &self.center;
        match angle_index % 4 {
            0 => (cx + &self.radius, cy.clone()),
            1 => (cx.clone(), cy + &self.radius),
            2 => (cx - &self.radius, cy.clone()),
            _ => (cx.clone(), cy - &self.radius),
        }
    }

    /// Where the pen lands when this arc begins.
    pub fn start_point(&self) -> (GoldenNumber, GoldenNumber) {
        self.axis_point(self.start_quadrant + 1)
    }

    /// Where this arc hands over to the next one.
    pub fn end_point(&self) -> (GoldenNumber, GoldenNumber) {
        self.axis_point(self.start_quadrant)
    }
}

/// One removed square with its spiral arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareStep {
    /// 1-based step index.
    pub k: u32,
    pub side: GoldenNumber,
    /// Lower-left corner in rectangle coordinates (origin bottom-left).
    pub origin: (GoldenNumber, GoldenNumber),
    pub arc: QuarterArc,
}

/// Axis-aligned rectangle, kept for the residual after the last step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rect {
    pub origin: (GoldenNumber, GoldenNumber),
    pub width: GoldenNumber,
    pub height: GoldenNumber,
}

/// Full record of a subdivision run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionTrace {
    pub m: GoldenNumber,
    pub b: GoldenNumber,
    /// `x(0) ..= x(n)`, scaled by `b`; every entry but possibly the last is
    /// strictly positive.
    pub xs: Vec<GoldenNumber>,
    pub steps: Vec<SquareStep>,
    /// The run reached a nonpositive term, i.e. the subdivision is complete.
    pub terminated: bool,
    /// Terminated with a final zero: the squares tile the rectangle exactly.
    pub exact_tiling: bool,
    /// Rectangle left over after the last step.
    pub residual: Rect,
}

impl SubdivisionTrace {
    /// Exact sum of the square areas.
    pub fn square_area_sum(&self) -> GoldenNumber {
        self.steps
            .iter()
            .fold(GoldenNumber::zero(), |acc, s| acc + &s.side * &s.side)
    }

    /// Signed residual area `x(n-1) * x(n)`; zero for an exact tiling and
    /// negative when the subdivision jammed on an impossible cut.
    pub fn residual_area(&self) -> GoldenNumber {
        let n = self.xs.len();
        if n < 2 {
            return &self.m * &self.b * &self.b;
        }
        &self.xs[n - 2] * &self.xs[n - 1]
    }
}

fn validate_ratio(m: &GoldenNumber) -> Result<(), SubdivisionError> {
    let above_one = (m - &GoldenNumber::one()).sign() == Sign::Positive;
    let at_most_two = (GoldenNumber::from_int(2) - m).sign() != Sign::Negative;
    if above_one && at_most_two {
        Ok(())
    } else {
        Err(SubdivisionError::RatioOutOfRange { m: m.to_string() })
    }
}

fn validate_side(b: &GoldenNumber) -> Result<(), SubdivisionError> {
    if b.sign() == Sign::Positive {
        Ok(())
    } else {
        Err(SubdivisionError::NonpositiveSide)
    }
}

/// Residual side lengths `x(0) ..= x(n)` where `n` is `max_steps` or the
/// first index with a nonpositive value, whichever comes first.
pub fn x_sequence(
    m: &GoldenNumber,
    b: &GoldenNumber,
    max_steps: u32,
) -> Result<Vec<GoldenNumber>, SubdivisionError> {
    validate_ratio(m)?;
    validate_side(b)?;
    let mut xs = vec![b.clone()];
    let mut before_prev = m * b; // x(-1)
    let mut prev = b.clone(); // x(0)
    while xs.len() <= max_steps as usize {
        let next = &before_prev - &prev;
        xs.push(next.clone());
        if next.sign() != Sign::Positive {
            break;
        }
        before_prev = prev;
        prev = next;
    }
    Ok(xs)
}

/// Classify a ratio: golden (infinite subdivision) or its finite degree, the
/// count of strictly positive terms of the x-sequence.
pub fn aureness_degree(m: &GoldenNumber) -> Result<RatioClass, SubdivisionError> {
    if *m == GoldenNumber::phi() {
        return Ok(RatioClass::GoldenInfinite);
    }
    validate_ratio(m)?;
    let one = GoldenNumber::one();
    let mut before_prev = m.clone(); // x(-1), with b = 1
    let mut prev = one.clone(); // x(0)
    let mut degree = 1u32; // counts x(0)
    loop {
        let next = &before_prev - &prev;
        if next.sign() != Sign::Positive {
            return Ok(RatioClass::FiniteDegree(degree));
        }
        degree += 1;
        before_prev = prev;
        prev = next;
    }
}

/// Lay out `steps` squares with exact coordinates and spiral arcs.
pub fn layout(
    m: &GoldenNumber,
    b: &GoldenNumber,
    steps: u32,
) -> Result<SubdivisionTrace, SubdivisionError> {
    validate_ratio(m)?;
    validate_side(b)?;
    let degree = match aureness_degree(m)? {
        RatioClass::GoldenInfinite => None,
        RatioClass::FiniteDegree(d) => Some(d),
    };
    if let Some(d) = degree {
        if steps > d {
            return Err(SubdivisionError::StepsExceedDegree {
                requested: steps,
                degree: d,
            });
        }
    }
    let xs = x_sequence(m, b, steps)?;

    let zero = GoldenNumber::zero;
    let mut rect = Rect {
        origin: (zero(), zero()),
        width: m * b,
        height: b.clone(),
    };
    let mut square_steps = Vec::with_capacity(steps as usize);
    for k in 1..=steps {
        let (ox, oy) = rect.origin.clone();
        let (w, h) = (rect.width.clone(), rect.height.clone());
        // Cut cycle: left, top, right, bottom.
        let (side, sq_origin, next_rect) = match (k - 1) % 4 {
            0 => (
                h.clone(),
                (ox.clone(), oy.clone()),
                Rect {
                    origin: (&ox + &h, oy),
                    width: &w - &h,
                    height: h,
                },
            ),
            1 => (
                w.clone(),
                (ox.clone(), &oy + &h - &w),
                Rect {
                    origin: (ox, oy),
                    width: w.clone(),
                    height: &h - &w,
                },
            ),
            2 => (
                h.clone(),
                (&ox + &w - &h, oy.clone()),
                Rect {
                    origin: (ox, oy),
                    width: &w - &h,
                    height: h,
                },
            ),
            _ => (
                w.clone(),
                (ox.clone(), oy.clone()),
                Rect {
                    origin: (ox, &oy + &w),
                    width: w.clone(),
                    height: &h - &w,
                },
            ),
        };
        debug_assert_eq!(side, xs[(k - 1) as usize], "cut side at step {k}");

        // The arc's center is the square corner shared with the residual
        // rectangle, on the side the residual keeps; centers of consecutive
        // arcs stay collinear with the junction point, so the spiral is
        // tangent-continuous.
        let (sx, sy) = &sq_origin;
        let center = match (k - 1) % 4 {
            0 => (sx + &side, sy.clone()),            // bottom-right
            1 => (sx.clone(), sy.clone()),            // bottom-left
            2 => (sx.clone(), sy + &side),            // top-left
            _ => (sx + &side, sy + &side),            // top-right
        };
        let start_quadrant = (2i64 - k as i64).rem_euclid(4) as u8;
        square_steps.push(SquareStep {
            k,
            side: side.clone(),
            origin: sq_origin,
            arc: QuarterArc {
                center,
                radius: side,
                start_quadrant,
            },
        });
        rect = next_rect;
    }

    let terminated = xs
        .last()
        .is_some_and(|x| x.sign() != Sign::Positive);
    let exact_tiling = terminated && xs.last().is_some_and(GoldenNumber::is_zero);
    Ok(SubdivisionTrace {
        m: m.clone(),
        b: b.clone(),
        xs,
        steps: square_steps,
        terminated,
        exact_tiling,
        residual: rect,
    })
}

/// One row of a ratio-family sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeEntry {
    pub p: u64,
    pub q: u64,
    pub degree: u32,
}

fn reduced_ratios(max: u64) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for q in 1..=max {
        for p in (q + 1)..=max.min(2 * q) {
            if p.gcd(&q) == 1 {
                pairs.push((p, q));
            }
        }
    }
    pairs
}

/// Degrees of every reduced ratio `p/q` in `(1, 2]` with `p, q <= max`.
pub fn degree_sweep(max: u64) -> Vec<DegreeEntry> {
    batch::map_collect(reduced_ratios(max), |(p, q)| DegreeEntry {
        p,
        q,
        degree: rational_degree(p, q),
    })
}

/// Sequential twin of [`degree_sweep`], kept as the benchmark baseline.
pub fn degree_sweep_seq(max: u64) -> Vec<DegreeEntry> {
    reduced_ratios(max)
        .into_iter()
        .map(|(p, q)| DegreeEntry {
            p,
            q,
            degree: rational_degree(p, q),
        })
        .collect()
}

fn rational_degree(p: u64, q: u64) -> u32 {
    let m = GoldenNumber::new(
        crate::exactnum::Rational::new(p.into(), q.into()),
        crate::exactnum::Rational::from_integer(0.into()),
    );
    match aureness_degree(&m).expect("sweep ratios lie in (1, 2]") {
        RatioClass::FiniteDegree(d) => d,
        RatioClass::GoldenInfinite => unreachable!("rational ratios are never golden"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn ratio(p: i64, q: i64) -> GoldenNumber {
        GoldenNumber::from_parts(p, q, 0, 1)
    }

    fn one() -> GoldenNumber {
        GoldenNumber::one()
    }

    #[test]
    fn golden_first_terms() {
        let xs = x_sequence(&GoldenNumber::phi(), &one(), 2).unwrap();
        assert_eq!(xs[1], GoldenNumber::phi() - one()); // x1 = m - 1
        assert_eq!(xs[2], GoldenNumber::from_int(2) - GoldenNumber::phi());
        // x2 = 1/phi^2
        assert_eq!(
            xs[2],
            GoldenNumber::phi_pow(-2),
        );
    }

    #[test]
    fn three_halves_terminates_exactly() {
        let xs = x_sequence(&ratio(3, 2), &one(), 10).unwrap();
        let expect: Vec<GoldenNumber> = [(1, 1), (1, 2), (1, 2), (0, 1)]
            .iter()
            .map(|&(n, d)| GoldenNumber::from_parts(n, d, 0, 1))
            .collect();
        assert_eq!(xs, expect);
    }

    #[test]
    fn out_of_range_ratios_are_rejected() {
        for bad in [ratio(5, 2), ratio(1, 1), ratio(2, 3)] {
            assert!(matches!(
                x_sequence(&bad, &one(), 4),
                Err(SubdivisionError::RatioOutOfRange { .. })
            ));
        }
        assert!(matches!(
            x_sequence(&ratio(3, 2), &GoldenNumber::zero(), 4),
            Err(SubdivisionError::NonpositiveSide)
        ));
    }

    #[test]
    fn degree_classification() {
        assert_eq!(
            aureness_degree(&GoldenNumber::phi()).unwrap(),
            RatioClass::GoldenInfinite
        );
        assert_eq!(
            aureness_degree(&ratio(2, 1)).unwrap(),
            RatioClass::FiniteDegree(2)
        );
        assert_eq!(
            aureness_degree(&ratio(3, 2)).unwrap(),
            RatioClass::FiniteDegree(3)
        );
        // A jamming ratio: the sequence ends strictly negative.
        assert_eq!(
            aureness_degree(&ratio(7, 4)).unwrap(),
            RatioClass::FiniteDegree(4)
        );
    }

    #[test]
    fn fibonacci_ratios_have_degree_one_less_than_the_index() {
        use crate::fibonacci::fib;
        for k in 3..=20i64 {
            let m = GoldenNumber::new(
                Rational::new(fib(k), fib(k - 1)),
                Rational::from_integer(0.into()),
            );
            assert_eq!(
                aureness_degree(&m).unwrap(),
                RatioClass::FiniteDegree(k as u32 - 1),
                "F({k})/F({})",
                k - 1
            );
        }
    }

    #[test]
    fn first_golden_cut_is_the_unit_square() {
        let trace = layout(&GoldenNumber::phi(), &one(), 1).unwrap();
        let step = &trace.steps[0];
        assert_eq!(step.side, one());
        assert_eq!(step.origin, (GoldenNumber::zero(), GoldenNumber::zero()));
        // Residual: a vertical strip of width phi - 1 and height 1.
        assert_eq!(trace.residual.origin.0, one());
        assert_eq!(trace.residual.width, GoldenNumber::phi() - one());
        assert_eq!(trace.residual.height, one());
        assert!(!trace.terminated);
    }

    #[test]
    fn golden_areas_are_conserved() {
        let trace = layout(&GoldenNumber::phi(), &one(), 4).unwrap();
        let total = trace.square_area_sum() + trace.residual_area();
        assert_eq!(total, GoldenNumber::phi());
    }

    #[test]
    fn exact_tiling_of_three_halves() {
        let trace = layout(&ratio(3, 2), &one(), 3).unwrap();
        assert!(trace.terminated);
        assert!(trace.exact_tiling);
        assert!(trace.residual_area().is_zero());
        let sides: Vec<_> = trace.steps.iter().map(|s| s.side.clone()).collect();
        assert_eq!(
            sides,
            vec![
                one(),
                GoldenNumber::from_parts(1, 2, 0, 1),
                GoldenNumber::from_parts(1, 2, 0, 1)
            ]
        );
    }

    #[test]
    fn steps_beyond_the_degree_are_refused_by_name() {
        let err = layout(&ratio(3, 2), &one(), 4).unwrap_err();
        assert_eq!(
            err,
            SubdivisionError::StepsExceedDegree {
                requested: 4,
                degree: 3
            }
        );
    }

    #[test]
    fn arcs_chain_head_to_tail() {
        let trace = layout(&GoldenNumber::phi(), &one(), 12).unwrap();
        for pair in trace.steps.windows(2) {
            assert_eq!(
                pair[0].arc.end_point(),
                pair[1].arc.start_point(),
                "junction after step {}",
                pair[0].k
            );
        }
    }

    #[test]
    fn sweeps_agree_between_parallel_and_sequential() {
        assert_eq!(degree_sweep(24), degree_sweep_seq(24));
    }
}
