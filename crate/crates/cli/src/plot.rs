//! Deterministic SVG plots of result records.

use std::fmt::Write;
use std::str::FromStr;

use crate::error::CliError;
use crate::record::{DensityRow, Payload, ProfileRows, Record};

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 500.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 60.0;
const TICKS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    ErrorProfile,
    DensityCurve,
}

impl PlotKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PlotKind::ErrorProfile => "error_profile",
            PlotKind::DensityCurve => "density_curve",
        }
    }
}

impl FromStr for PlotKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "error_profile" => Ok(PlotKind::ErrorProfile),
            "density_curve" => Ok(PlotKind::DensityCurve),
            other => Err(CliError::config(format!("unknown plot kind '{other}'"))),
        }
    }
}

fn profile_of(payload: &Payload) -> Option<&ProfileRows> {
    match payload {
        Payload::Profile(p) => Some(&p.profile),
        Payload::Density(d) => Some(&d.profile),
        Payload::Recurrence(r) => Some(&r.profile),
        Payload::Eval { .. } | Payload::Gdelta(_) => None,
    }
}

fn curve_of(payload: &Payload) -> Option<&[DensityRow]> {
    match payload {
        Payload::Profile(p) => Some(&p.curve),
        Payload::Density(d) => Some(&d.curve),
        Payload::Recurrence(r) => Some(&r.curve),
        Payload::Eval { .. } | Payload::Gdelta(_) => None,
    }
}

/// Linear map of `[lo, hi]` onto `[a, b]`; a degenerate range maps to the middle.
struct Axis {
    lo: f64,
    hi: f64,
    a: f64,
    b: f64,
}

impl Axis {
    fn new(lo: f64, hi: f64, a: f64, b: f64) -> Self {
        let (lo, hi) = if hi > lo { (lo, hi) } else { (lo - 0.5, lo + 0.5) };
        Self { lo, hi, a, b }
    }

    fn map(&self, x: f64) -> f64 {
        self.a + (x - self.lo) / (self.hi - self.lo) * (self.b - self.a)
    }

    fn tick(&self, k: usize) -> f64 {
        self.lo + (self.hi - self.lo) * k as f64 / TICKS as f64
    }
}

fn label(x: f64) -> String {
    if x != 0.0 && (x.abs() < 1e-3 || x.abs() >= 1e5) {
        format!("{x:.2e}")
    } else {
        format!("{x:.3}")
    }
}

struct Canvas {
    svg: String,
    x: Axis,
    y: Axis,
}

impl Canvas {
    fn new(title: &str, digest: &str, x_label: &str, y_label: &str, x: (f64, f64), y: (f64, f64)) -> Self {
        let x = Axis::new(x.0, x.1, LEFT, WIDTH - RIGHT);
        let y = Axis::new(y.0, y.1, HEIGHT - BOTTOM, TOP);
        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
        );
        let _ = writeln!(svg, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
        let _ = writeln!(
            svg,
            r#"<text x="{LEFT}" y="24" font-family="monospace" font-size="14">{title}</text>"#
        );
        let _ = writeln!(
            svg,
            r##"<text x="{LEFT}" y="40" font-family="monospace" font-size="10" fill="#555">config sha256 {digest}</text>"##
        );
        let (x0, x1, y0, y1) = (LEFT, WIDTH - RIGHT, HEIGHT - BOTTOM, TOP);
        let _ = writeln!(
            svg,
            r#"<path d="M{x0} {y1} L{x0} {y0} L{x1} {y0}" stroke="black" fill="none"/>"#
        );
        for k in 0..=TICKS {
            let tx = x.tick(k);
            let px = x.map(tx);
            let _ = writeln!(
                svg,
                r#"<line x1="{px:.3}" y1="{y0}" x2="{px:.3}" y2="{:.3}" stroke="black"/><text x="{px:.3}" y="{:.3}" font-family="monospace" font-size="10" text-anchor="middle">{}</text>"#,
                y0 + 5.0,
                y0 + 18.0,
                label(tx)
            );
            let ty = y.tick(k);
            let py = y.map(ty);
            let _ = writeln!(
                svg,
                r#"<line x1="{:.3}" y1="{py:.3}" x2="{x0}" y2="{py:.3}" stroke="black"/><text x="{:.3}" y="{:.3}" font-family="monospace" font-size="10" text-anchor="end">{}</text>"#,
                x0 - 5.0,
                x0 - 8.0,
                py + 3.0,
                label(ty)
            );
        }
        let _ = writeln!(
            svg,
            r#"<text x="{:.3}" y="{:.3}" font-family="monospace" font-size="12" text-anchor="middle">{x_label}</text>"#,
            (x0 + x1) / 2.0,
            HEIGHT - 15.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="16" y="{:.3}" font-family="monospace" font-size="12" text-anchor="middle" transform="rotate(-90 16 {:.3})">{y_label}</text>"#,
            (y0 + y1) / 2.0,
            (y0 + y1) / 2.0
        );
        Self { svg, x, y }
    }

    fn polyline(&mut self, points: &[(f64, f64)], colour: &str) {
        let coords: Vec<String> = points
            .iter()
            .map(|&(a, b)| format!("{:.3},{:.3}", self.x.map(a), self.y.map(b)))
            .collect();
        let _ = writeln!(
            self.svg,
            r#"<polyline points="{}" stroke="{colour}" stroke-width="1" fill="none"/>"#,
            coords.join(" ")
        );
    }

    /// A cross on the horizontal axis for each failed sample.
    fn error_markers(&mut self, taus: &[(f64, &str)]) {
        let y = HEIGHT - BOTTOM;
        for &(tau, class) in taus {
            let x = self.x.map(tau);
            let _ = writeln!(
                self.svg,
                r#"<path class="error-sample" d="M{:.3} {:.3} L{:.3} {:.3} M{:.3} {:.3} L{:.3} {:.3}" stroke="red"><title>{class}</title></path>"#,
                x - 3.0,
                y - 3.0,
                x + 3.0,
                y + 3.0,
                x - 3.0,
                y + 3.0,
                x + 3.0,
                y - 3.0
            );
        }
    }

    fn finish(mut self) -> String {
        self.svg.push_str("</svg>\n");
        self.svg
    }
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

/// Render `record` as an SVG document on a fixed 800 x 500 canvas.
pub fn emit_plot(record: &Record, kind: PlotKind) -> Result<String, CliError> {
    match kind {
        PlotKind::ErrorProfile => {
            let profile = profile_of(&record.payload).ok_or_else(|| {
                CliError::Plot(format!("{} records carry no error profile", record.command))
            })?;
            let ok: Vec<(f64, f64)> = profile
                .samples
                .iter()
                .filter_map(|(tau, e, _)| e.map(|e| (tau.0, e.0)))
                .collect();
            if ok.is_empty() {
                return Err(CliError::EmptyProfile);
            }
            let errors: Vec<(f64, &str)> = profile
                .samples
                .iter()
                .filter(|(_, e, _)| e.is_none())
                .map(|(tau, _, class)| (tau.0, *class))
                .collect();
            let x = bounds(profile.samples.iter().map(|s| s.0 .0));
            let (_, y_hi) = bounds(ok.iter().map(|p| p.1));
            let mut canvas = Canvas::new(
                &format!("{} error profile", record.command),
                &record.config_digest,
                "tau",
                "E(tau)",
                x,
                (0.0, y_hi),
            );
            canvas.polyline(&ok, "#1f4e9c");
            canvas.error_markers(&errors);
            Ok(canvas.finish())
        }
        PlotKind::DensityCurve => {
            let curve = curve_of(&record.payload).ok_or_else(|| {
                CliError::Plot(format!("{} records carry no density curve", record.command))
            })?;
            if curve.is_empty() {
                return Err(CliError::Plot("density curve is empty (set epsilon)".into()));
            }
            let points: Vec<(f64, f64)> = curve.iter().map(|d| (d.horizon.0, d.hit_fraction.0)).collect();
            let x = bounds(points.iter().map(|p| p.0));
            let mut canvas = Canvas::new(
                &format!("{} hit fraction, epsilon = {}", record.command, label(curve[0].epsilon.0)),
                &record.config_digest,
                "horizon",
                "hit fraction",
                (0.0, x.1),
                (0.0, 1.0),
            );
            canvas.polyline(&points, "#1f4e9c");
            Ok(canvas.finish())
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::record::{PrecisionRow, ProfilePayload, Real};

    fn record(samples: Vec<(Real, Option<Real>, &'static str)>) -> Record {
        Record {
            schema_version: 1,
            tool: "zetashift",
            library_version: "0",
            command: "sweep".into(),
            timestamp: None,
            config_digest: "00".repeat(32),
            config: BTreeMap::new(),
            precision: PrecisionRow {
                shift_terms: None,
                bernoulli_order: 12,
                target_tol: Real(1e-10),
            },
            grid_step: None,
            payload: Payload::Profile(ProfilePayload {
                profile: ProfileRows {
                    mode: "continuous",
                    spacing: Real(0.5),
                    sample_count: samples.len(),
                    ok_count: samples.iter().filter(|s| s.1.is_some()).count(),
                    error_count: samples.iter().filter(|s| s.1.is_none()).count(),
                    samples,
                    failures: Vec::new(),
                },
                best: None,
                density: None,
                curve: Vec::new(),
            }),
        }
    }

    #[test]
    fn three_vertices() {
        let r = record(vec![
            (Real(0.0), Some(Real(1.0)), "ok"),
            (Real(0.5), Some(Real(0.25)), "ok"),
            (Real(1.0), Some(Real(2.0)), "ok"),
        ]);
        let svg = emit_plot(&r, PlotKind::ErrorProfile).unwrap();
        let poly = svg.lines().find(|l| l.starts_with("<polyline")).unwrap();
        let points = poly.split('"').nth(1).unwrap();
        assert_eq!(points.split(' ').count(), 3);
        assert!(svg.contains(r#"width="800" height="500""#));
        assert_eq!(svg, emit_plot(&r, PlotKind::ErrorProfile).unwrap());
    }

    #[test]
    fn error_samples_get_markers() {
        let r = record(vec![(Real(0.0), None, "pole"), (Real(0.5), Some(Real(0.25)), "ok")]);
        let svg = emit_plot(&r, PlotKind::ErrorProfile).unwrap();
        assert_eq!(svg.matches("error-sample").count(), 1);
    }

    #[test]
    fn all_error_profile_is_rejected() {
        let r = record(vec![(Real(0.0), None, "pole")]);
        assert!(matches!(emit_plot(&r, PlotKind::ErrorProfile), Err(CliError::EmptyProfile)));
    }
}
