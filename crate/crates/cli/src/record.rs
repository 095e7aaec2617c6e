//! Result records: one JSON object per line, reals with 17 significant digits.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;
use sha2::{Digest, Sha256};

use zetashift_core::experiments::{ComparisonReport, GdeltaScanResult, PlantedBase, RecurrenceReport};
use zetashift_core::kernels::EvalPrecision;
use zetashift_core::orbit::{BestShift, DensityEstimate, ErrorProfile, ShiftMinimum, ShiftSpec};
use zetashift_core::Complex64;

use crate::error::CliError;

pub const TOOL: &str = "zetashift";
pub const LIBRARY_VERSION: &str = env!("CARGO_PKG_VERSION");

/// An `f64` written as `d.dddddddddddddddde±x` (17 significant digits), or
/// `null` when not finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            let raw = RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
            raw.serialize(s)
        } else {
            s.serialize_none()
        }
    }
}

pub fn complex(z: Complex64) -> [Real; 2] {
    [Real(z.re), Real(z.im)]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrecisionRow {
    pub shift_terms: Option<usize>,
    pub bernoulli_order: usize,
    pub target_tol: Real,
}

impl From<&EvalPrecision<f64>> for PrecisionRow {
    fn from(p: &EvalPrecision<f64>) -> Self {
        Self {
            shift_terms: p.shift_terms,
            bernoulli_order: p.bernoulli_order,
            target_tol: Real(p.target_tol),
        }
    }
}

/// `[tau, E or null, "ok" or error class]`.
pub type SampleRow = (Real, Option<Real>, &'static str);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FailureRow {
    pub index: usize,
    pub class: &'static str,
    pub point: Option<[Real; 2]>,
    pub component: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityRow {
    pub epsilon: Real,
    pub mode: &'static str,
    pub horizon: Real,
    pub hit_count: usize,
    pub counted: usize,
    pub error_count: usize,
    pub hit_fraction: Real,
}

impl From<&DensityEstimate<f64>> for DensityRow {
    fn from(d: &DensityEstimate<f64>) -> Self {
        Self {
            epsilon: Real(d.epsilon),
            mode: d.mode.as_str(),
            horizon: Real(d.horizon),
            hit_count: d.hit_count,
            counted: d.counted,
            error_count: d.error_count,
            hit_fraction: Real(d.hit_fraction),
        }
    }
}

fn minimum(m: &ShiftMinimum<f64>) -> [Real; 2] {
    [Real(m.tau), Real(m.error)]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BestRow {
    pub coarse: [Real; 2],
    pub refined: Option<[Real; 2]>,
}

impl From<&BestShift<f64>> for BestRow {
    fn from(b: &BestShift<f64>) -> Self {
        Self {
            coarse: minimum(&b.coarse),
            refined: b.refined.as_ref().map(minimum),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileRows {
    pub mode: &'static str,
    pub spacing: Real,
    pub sample_count: usize,
    pub ok_count: usize,
    pub error_count: usize,
    pub samples: Vec<SampleRow>,
    pub failures: Vec<FailureRow>,
}

impl From<&ErrorProfile<f64>> for ProfileRows {
    fn from(p: &ErrorProfile<f64>) -> Self {
        let mut failures = Vec::new();
        let samples = p
            .samples
            .iter()
            .enumerate()
            .map(|(index, s)| match s.outcome {
                Ok(e) => (Real(s.tau), Some(Real(e)), "ok"),
                Err(f) => {
                    failures.push(FailureRow {
                        index,
                        class: f.class.as_str(),
                        point: f.point.map(complex),
                        component: f.component,
                    });
                    (Real(s.tau), None, f.class.as_str())
                }
            })
            .collect();
        Self {
            mode: match p.spec {
                ShiftSpec::Continuous { .. } => "continuous",
                ShiftSpec::Discrete { .. } => "discrete",
            },
            spacing: Real(p.spec.spacing()),
            sample_count: p.samples.len(),
            ok_count: p.ok_count(),
            error_count: p.error_count(),
            samples,
            failures,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfilePayload {
    pub profile: ProfileRows,
    /// Absent when no sample evaluated successfully.
    pub best: Option<BestRow>,
    pub density: Option<DensityRow>,
    pub curve: Vec<DensityRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub h: Real,
    pub n_max: usize,
    pub subsampled: bool,
    pub continuous: DensityRow,
    pub discrete: DensityRow,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscreteRows {
    pub h: Real,
    pub subsampled: bool,
    pub profile: ProfileRows,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityPayload {
    pub epsilon: Real,
    pub entries: Vec<ComparisonRow>,
    pub curve: Vec<DensityRow>,
    pub profile: ProfileRows,
    pub discrete: Vec<DiscreteRows>,
}

impl From<&ComparisonReport<f64>> for DensityPayload {
    fn from(r: &ComparisonReport<f64>) -> Self {
        Self {
            epsilon: Real(r.epsilon),
            entries: r
                .entries
                .iter()
                .map(|e| ComparisonRow {
                    h: Real(e.h),
                    n_max: e.n_max,
                    subsampled: e.subsampled,
                    continuous: (&e.continuous).into(),
                    discrete: (&e.discrete).into(),
                })
                .collect(),
            curve: r.curve.iter().map(DensityRow::from).collect(),
            profile: (&r.profile).into(),
            discrete: r
                .discrete_runs
                .iter()
                .map(|d| DiscreteRows {
                    h: Real(d.h),
                    subsampled: d.subsampled,
                    profile: (&d.profile).into(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscreteDensityRow {
    pub h: Real,
    pub subsampled: bool,
    pub density: DensityRow,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecurrencePayload {
    pub epsilon: Real,
    pub horizon: Real,
    pub step: Real,
    pub continuous_density: DensityRow,
    pub discrete_densities: Vec<DiscreteDensityRow>,
    pub best_self_shifts: Vec<[Real; 2]>,
    pub curve: Vec<DensityRow>,
    pub profile: ProfileRows,
}

impl RecurrencePayload {
    pub fn new(r: &RecurrenceReport<f64>, curve: &[DensityEstimate<f64>]) -> Self {
        Self {
            epsilon: Real(r.epsilon),
            horizon: Real(r.horizon),
            step: Real(r.step),
            continuous_density: (&r.continuous_density).into(),
            discrete_densities: r
                .discrete_densities
                .iter()
                .zip(&r.discrete_runs)
                .map(|((h, d), run)| DiscreteDensityRow {
                    h: Real(*h),
                    subsampled: run.subsampled,
                    density: d.into(),
                })
                .collect(),
            best_self_shifts: r.best_self_shifts.iter().map(minimum).collect(),
            curve: curve.iter().map(DensityRow::from).collect(),
            profile: (&r.profile).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GdeltaRow {
    pub m: Option<u64>,
    pub n: u64,
    pub poly: String,
    pub first_hit_n: Option<u64>,
    pub best_error: Option<Real>,
    pub best_n: Option<u64>,
    pub scanned: u64,
    pub failures: Vec<(u64, &'static str)>,
    pub target_failure: Option<&'static str>,
    /// Independent re-evaluation of the error at the first hit.
    pub verified_error: Option<Real>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlantRow {
    pub n: u64,
    pub n0: u64,
    pub degree: usize,
    pub m: Option<u64>,
    pub poly: String,
    pub fit_residual: Real,
    pub rational_residual: Real,
}

impl PlantRow {
    pub fn new(p: &PlantedBase<f64>, n0: u64, degree: usize) -> Self {
        Self {
            n: p.n,
            n0,
            degree,
            m: p.m,
            poly: p.poly.to_string(),
            fit_residual: Real(p.fit_residual),
            rational_residual: Real(p.rational_residual),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GdeltaPayload {
    pub t0: Real,
    pub n_max: u64,
    pub grid_step: Real,
    pub entries: Vec<GdeltaRow>,
    pub planted: Option<PlantRow>,
}

impl GdeltaPayload {
    pub fn new(r: &GdeltaScanResult<f64>, verified: &[Option<f64>], planted: Option<PlantRow>) -> Self {
        Self {
            t0: Real(r.t0),
            n_max: r.n_max,
            grid_step: Real(r.grid_step),
            entries: r
                .entries
                .iter()
                .zip(verified)
                .map(|(e, v)| GdeltaRow {
                    m: e.m,
                    n: e.n,
                    poly: e.poly.to_string(),
                    first_hit_n: e.first_hit_n,
                    best_error: e.best_error.map(Real),
                    best_n: e.best_n,
                    scanned: e.scanned,
                    failures: e.failures.iter().map(|(n, c)| (*n, c.as_str())).collect(),
                    target_failure: e.target_failure.map(|c| c.as_str()),
                    verified_error: v.map(Real),
                })
                .collect(),
            planted,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Eval {
        subject: String,
        s: [Real; 2],
        value: [Real; 2],
        error_estimate: Option<Real>,
    },
    Profile(ProfilePayload),
    Density(DensityPayload),
    Recurrence(RecurrencePayload),
    Gdelta(GdeltaPayload),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub schema_version: u32,
    pub tool: &'static str,
    pub library_version: &'static str,
    pub command: String,
    /// Unix seconds; only set when requested, so records stay reproducible.
    pub timestamp: Option<u64>,
    pub config_digest: String,
    pub config: BTreeMap<String, String>,
    pub precision: PrecisionRow,
    pub grid_step: Option<Real>,
    pub payload: Payload,
}

/// SHA-256 of the echoed config as `key=value` lines.
pub fn config_digest(echo: &BTreeMap<String, String>) -> String {
    let mut hasher = Sha256::new();
    for (k, v) in echo {
        hasher.update(k.as_bytes());
        hasher.update(b"=");
        hasher.update(v.as_bytes());
        hasher.update(b"\n");
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl Record {
    /// The record as one JSON line, newline-terminated.
    pub fn to_line(&self) -> Result<String, CliError> {
        let mut line = serde_json::to_string(self).map_err(|e| CliError::Record(e.to_string()))?;
        line.push('\n');
        Ok(line)
    }
}
