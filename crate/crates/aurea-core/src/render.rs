//! SVG output for subdivision traces and CSV/JSON emission of measure
//! reports.
//!
//! Exact values are serialized losslessly (`p/q+p/q phi` coefficient strings
//! and `(u; v; w)` measure triples); decimal columns are advisory. All three
//! emitters are pure functions of their inputs, so repeated calls produce
//! byte-identical documents.

use crate::exactnum::GoldenNumber;
use crate::measures::{MeasureReport, StepMeasures};
use crate::subdivision::SubdivisionTrace;
use crate::exactnum::SpiralMeasure;
use serde::Serialize;
use std::fmt::Write as _;
use thiserror::Error;

/// Region colors, loosely after the usual figure: a pale yellow square so the
/// quarter-disc region reads against it, a purple residual strip, a blue arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    pub square_fill: String,
    pub residual_fill: String,
    pub arc_stroke: String,
    pub frame_stroke: String,
    pub label_fill: String,
}

impl Default for Palette {
    fn default() -> Self {
        Self {
            square_fill: "#fdf3c9".into(),
            residual_fill: "#d9c7ee".into(),
            arc_stroke: "#2456a5".into(),
            frame_stroke: "#43404a".into(),
            label_fill: "#43404a".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub width_px: u32,
    pub palette: Palette,
    pub show_arcs: bool,
    pub show_labels: bool,
    /// Decimal places for every coordinate; at least 6 so rounding stays
    /// below SVG visual resolution.
    pub float_digits: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            width_px: 640,
            palette: Palette::default(),
            show_arcs: true,
            show_labels: false,
            float_digits: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("cannot render a trace with no steps")]
    EmptyTrace,
    #[error("rendered width must be at least 64 pixels")]
    WidthTooSmall,
    #[error("coordinates need at least 6 decimal places")]
    TooFewDigits,
}

struct Canvas {
    height: GoldenNumber,
    places: u32,
}

impl Canvas {
    fn x(&self, v: &GoldenNumber) -> String {
        v.to_decimal_places(self.places)
    }

    /// Flip the vertical axis: exact geometry keeps the origin bottom-left,
    /// SVG wants it top-left.
    fn y(&self, v: &GoldenNumber) -> String {
        (&self.height - v).to_decimal_places(self.places)
    }
}

/// Emit the subdivision (squares, residual strip, spiral arcs, optional step
/// labels) as a standalone SVG 1.1 document.
pub fn emit_svg(trace: &SubdivisionTrace, opts: &RenderOptions) -> Result<String, RenderError> {
    if trace.steps.is_empty() {
        return Err(RenderError::EmptyTrace);
    }
    if opts.width_px < 64 {
        return Err(RenderError::WidthTooSmall);
    }
    if opts.float_digits < 6 {
        return Err(RenderError::TooFewDigits);
    }

    let canvas = Canvas {
        height: trace.b.clone(),
        places: opts.float_digits,
    };
    let outer_width = &trace.m * &trace.b;
    let width_attr = opts.width_px;
    let m_f = trace.m.to_f64();
    let height_attr = (width_attr as f64 / m_f).round().max(1.0) as u32;
    let stroke = format!("{:.*}", opts.float_digits as usize, outer_width.to_f64() / width_attr as f64 * 1.5);
    let pal = &opts.palette;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width_attr}" height="{height_attr}" viewBox="0 0 {} {}">"#,
        canvas.x(&outer_width),
        canvas.x(&trace.b),
    );
    let _ = writeln!(
        svg,
        r#"<rect class="frame" x="0" y="0" width="{}" height="{}" fill="none" stroke="{}" stroke-width="{stroke}"/>"#,
        canvas.x(&outer_width),
        canvas.x(&trace.b),
        pal.frame_stroke,
    );

    for step in &trace.steps {
        let (ox, oy) = &step.origin;
        let top = oy + &step.side;
        let _ = writeln!(
            svg,
            r#"<rect class="square" x="{}" y="{}" width="{}" height="{}" fill="{}" stroke="{}" stroke-width="{stroke}"/>"#,
            canvas.x(ox),
            canvas.y(&top),
            canvas.x(&step.side),
            canvas.x(&step.side),
            pal.square_fill,
            pal.frame_stroke,
        );
    }

    if !trace.exact_tiling {
        let res = &trace.residual;
        if res.width.sign() == crate::exactnum::Sign::Positive
            && res.height.sign() == crate::exactnum::Sign::Positive
        {
            let top = &res.origin.1 + &res.height;
            let _ = writeln!(
                svg,
                r#"<rect class="residual" x="{}" y="{}" width="{}" height="{}" fill="{}" stroke="{}" stroke-width="{stroke}"/>"#,
                canvas.x(&res.origin.0),
                canvas.y(&top),
                canvas.x(&res.width),
                canvas.x(&res.height),
                pal.residual_fill,
                pal.frame_stroke,
            );
        }
    }

    if opts.show_arcs {
        for step in &trace.steps {
            let (sx, sy) = step.arc.start_point();
            let (ex, ey) = step.arc.end_point();
            let r = canvas.x(&step.arc.radius);
            // The exact arcs run clockwise in rectangle coordinates; the
            // vertical flip turns them into sweep-direction 1 for SVG.
            let _ = writeln!(
                svg,
                r#"<path class="arc" d="M {} {} A {r} {r} 0 0 1 {} {}" fill="none" stroke="{}" stroke-width="{stroke}"/>"#,
                canvas.x(&sx),
                canvas.y(&sy),
                canvas.x(&ex),
                canvas.y(&ey),
                pal.arc_stroke,
            );
        }
    }

    if opts.show_labels {
        let half = GoldenNumber::from_parts(1, 2, 0, 1);
        let third = GoldenNumber::from_parts(3, 10, 0, 1);
        for step in &trace.steps {
            let cx = &step.origin.0 + &step.side * &half;
            let cy = &step.origin.1 + &step.side * &half;
            let size = &step.side * &third;
            let _ = writeln!(
                svg,
                r#"<text class="label" x="{}" y="{}" font-size="{}" text-anchor="middle" dominant-baseline="middle" fill="{}">{}</text>"#,
                canvas.x(&cx),
                canvas.y(&cy),
                canvas.x(&size),
                pal.label_fill,
                step.k,
            );
        }
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

/// Emit a measure report as RFC 4180 CSV (per-step table) or as JSON with
/// cumulative, closed-form and deviation sections.
pub fn emit_report(report: &MeasureReport, format: ReportFormat, float_digits: u32) -> String {
    match format {
        ReportFormat::Csv => emit_csv(report, float_digits),
        ReportFormat::Json => emit_json(report, float_digits),
    }
}

const CSV_HEADER: &str = "k,x_side_exact,x_side_float,arc_length_exact,arc_length_float,\
quarter_disc_exact,quarter_disc_float,residual_area_exact,residual_area_float,\
complement_exact,complement_float,diagonal_exact,diagonal_float";

fn emit_csv(report: &MeasureReport, digits: u32) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push_str("\r\n");
    for step in &report.per_step {
        let x = &report.trace.xs[(step.k - 1) as usize];
        let cells = [
            step.k.to_string(),
            x.to_string(),
            x.to_decimal(digits),
            step.arc_length.to_string(),
            step.arc_length.to_decimal(digits),
            step.quarter_disc.to_string(),
            step.quarter_disc.to_decimal(digits),
            step.residual_area.to_string(),
            step.residual_area.to_decimal(digits),
            step.complement.to_string(),
            step.complement.to_decimal(digits),
            step.diagonal.to_string(),
            step.diagonal.to_decimal(digits),
        ];
        debug_assert!(cells.iter().all(|c| !c.contains([',', '"', '\n'])));
        out.push_str(&cells.join(","));
        out.push_str("\r\n");
    }
    out
}

#[derive(Serialize)]
struct JsonValue {
    exact: String,
    float: String,
}

impl JsonValue {
    fn golden(x: &GoldenNumber, digits: u32) -> Self {
        Self {
            exact: x.to_string(),
            float: x.to_decimal(digits),
        }
    }
}

#[derive(Serialize)]
struct JsonMeasure {
    u: String,
    v: String,
    w: String,
    float: String,
}

impl JsonMeasure {
    fn new(m: &SpiralMeasure, digits: u32) -> Self {
        Self {
            u: m.unit_coeff().to_string(),
            v: m.pi_coeff().to_string(),
            w: m.sqrt2_coeff().to_string(),
            float: m.to_decimal(digits),
        }
    }
}

#[derive(Serialize)]
struct JsonTotals {
    arc_length: JsonMeasure,
    quarter_disc: JsonMeasure,
    residual_area: JsonMeasure,
    complement: JsonMeasure,
    diagonal: JsonMeasure,
}

impl JsonTotals {
    fn new(t: &StepMeasures, digits: u32) -> Self {
        Self {
            arc_length: JsonMeasure::new(&t.arc_length, digits),
            quarter_disc: JsonMeasure::new(&t.quarter_disc, digits),
            residual_area: JsonMeasure::new(&t.residual_area, digits),
            complement: JsonMeasure::new(&t.complement, digits),
            diagonal: JsonMeasure::new(&t.diagonal, digits),
        }
    }
}

#[derive(Serialize)]
struct JsonStep {
    k: u32,
    x_side: JsonValue,
    #[serde(flatten)]
    measures: JsonTotals,
}

#[derive(Serialize)]
struct JsonReport {
    ratio: JsonValue,
    side: JsonValue,
    steps: u32,
    terminated: bool,
    exact_tiling: bool,
    per_step: Vec<JsonStep>,
    cumulative: JsonTotals,
    closed_form: JsonTotals,
    deviation: JsonTotals,
}

fn emit_json(report: &MeasureReport, digits: u32) -> String {
    let trace = &report.trace;
    let doc = JsonReport {
        ratio: JsonValue::golden(&trace.m, digits),
        side: JsonValue::golden(&trace.b, digits),
        steps: report.per_step.len() as u32,
        terminated: trace.terminated,
        exact_tiling: trace.exact_tiling,
        per_step: report
            .per_step
            .iter()
            .map(|s| JsonStep {
                k: s.k,
                x_side: JsonValue::golden(&trace.xs[(s.k - 1) as usize], digits),
                measures: JsonTotals::new(s, digits),
            })
            .collect(),
        cumulative: JsonTotals::new(&report.cumulative, digits),
        closed_form: JsonTotals::new(&report.closed_form, digits),
        deviation: JsonTotals::new(&report.deviation, digits),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("report serialization");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::measure_report;
    use crate::subdivision::layout;

    fn golden_trace(steps: u32) -> SubdivisionTrace {
        layout(&GoldenNumber::phi(), &GoldenNumber::one(), steps).unwrap()
    }

    #[test]
    fn one_square_and_one_arc_per_step() {
        let svg = emit_svg(&golden_trace(8), &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches(r#"class="square""#).count(), 8);
        assert_eq!(svg.matches(r#"class="arc""#).count(), 8);
        assert_eq!(svg.matches("<path").count(), 8);
    }

    #[test]
    fn exact_tiling_omits_the_residual() {
        let m = GoldenNumber::from_parts(3, 2, 0, 1);
        let trace = layout(&m, &GoldenNumber::one(), 3).unwrap();
        let svg = emit_svg(&trace, &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches(r#"class="square""#).count(), 3);
        assert!(!svg.contains(r#"class="residual""#));
    }

    #[test]
    fn golden_trace_keeps_its_residual() {
        let svg = emit_svg(&golden_trace(3), &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches(r#"class="residual""#).count(), 1);
    }

    #[test]
    fn side_ratio_of_consecutive_squares() {
        let svg = emit_svg(&golden_trace(2), &RenderOptions::default()).unwrap();
        let sides: Vec<f64> = svg
            .lines()
            .filter(|l| l.contains(r#"class="square""#))
            .map(|l| {
                let tail = l.split(r#"width=""#).nth(1).unwrap();
                tail.split('"').next().unwrap().parse().unwrap()
            })
            .collect();
        assert_eq!(sides.len(), 2);
        assert!((sides[1] / sides[0] - 0.618034).abs() < 1e-6);
    }

    #[test]
    fn byte_identical_across_runs() {
        let opts = RenderOptions {
            show_labels: true,
            ..RenderOptions::default()
        };
        let a = emit_svg(&golden_trace(6), &opts).unwrap();
        let b = emit_svg(&golden_trace(6), &opts).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn option_validation() {
        let trace = golden_trace(1);
        let narrow = RenderOptions {
            width_px: 32,
            ..RenderOptions::default()
        };
        assert_eq!(emit_svg(&trace, &narrow), Err(RenderError::WidthTooSmall));
        let coarse = RenderOptions {
            float_digits: 3,
            ..RenderOptions::default()
        };
        assert_eq!(emit_svg(&trace, &coarse), Err(RenderError::TooFewDigits));
        let empty = layout(&GoldenNumber::phi(), &GoldenNumber::one(), 0).unwrap();
        assert_eq!(
            emit_svg(&empty, &RenderOptions::default()),
            Err(RenderError::EmptyTrace)
        );
    }

    #[test]
    fn csv_has_one_row_per_step_and_a_stable_header() {
        let trace = golden_trace(3);
        let report = measure_report(&trace, 3).unwrap();
        let csv = emit_report(&report, ReportFormat::Csv, 6);
        let lines: Vec<&str> = csv.split("\r\n").filter(|l| !l.is_empty()).collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("k,x_side_exact"));
        assert!(lines[1].starts_with("1,1,1.00000,(0; 1/2; 0),1.57080,"));
    }

    #[test]
    fn json_round_trips_exact_sides() {
        let trace = golden_trace(4);
        let report = measure_report(&trace, 4).unwrap();
        let json = emit_report(&report, ReportFormat::Json, 6);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        for (i, step) in doc["per_step"].as_array().unwrap().iter().enumerate() {
            let exact = step["x_side"]["exact"].as_str().unwrap();
            let parsed: GoldenNumber = exact.parse().unwrap();
            assert_eq!(parsed, trace.xs[i], "step {}", i + 1);
            for key in [
                "arc_length",
                "quarter_disc",
                "residual_area",
                "complement",
                "diagonal",
            ] {
                for comp in ["u", "v", "w"] {
                    let text = step[key][comp].as_str().unwrap();
                    assert!(text.parse::<GoldenNumber>().is_ok(), "{key}.{comp}");
                }
            }
        }
        assert_eq!(doc["deviation"]["residual_area"]["u"], "0");
    }

    #[test]
    fn empty_report_is_header_only() {
        // A single-step trace reported over one step, then the per-step list
        // emptied: the CSV collapses to its header.
        let trace = golden_trace(1);
        let mut report = measure_report(&trace, 1).unwrap();
        report.per_step.clear();
        let csv = emit_report(&report, ReportFormat::Csv, 6);
        assert_eq!(csv, format!("{CSV_HEADER}\r\n"));
    }
}
