//! Dispatch of a parsed config to the numerical core.

use std::path::{Path, PathBuf};

use zetashift_core::experiments::{
    density_comparison, gdelta_scan_pairs, joint_sweep, plant_base, self_recurrence, verify_hit,
    JointSpec, CURVE_POINTS,
};
use zetashift_core::kernels::{euler_maclaurin, log_zeta_tracked, EvalPrecision, RationalPolynomial};
use zetashift_core::orbit::{
    density_curve, hit_density, search_best_shift, sweep_source, Component, ErrorProfile,
    ProfileSource, ShiftSpec, Subject,
};
use zetashift_core::space::enumerate_base;
use zetashift_core::Error as CoreError;

use crate::config::{Command, RunConfig, SubjectConfig};
use crate::error::CliError;
use crate::plot::{emit_plot, PlotKind};
use crate::record::{
    complex, config_digest, DensityPayload, DensityRow, GdeltaPayload, Payload, PlantRow,
    PrecisionRow, ProfilePayload, Real, RecurrencePayload, Record, LIBRARY_VERSION, TOOL,
};

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "ZETASHIFT_THREADS";

/// `--threads`, then the config, then `ZETASHIFT_THREADS`, then 1.
pub fn resolve_threads(flag: Option<usize>, cfg: &RunConfig) -> Result<usize, CliError> {
    if let Some(t) = flag.or(cfg.threads) {
        return if t == 0 {
            Err(CliError::config("thread count must be at least 1"))
        } else {
            Ok(t)
        };
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|t| *t >= 1)
            .ok_or_else(|| CliError::config(format!("{THREADS_ENV}='{v}' is not a positive integer"))),
        Err(_) => Ok(1),
    }
}

fn required<T: Clone>(value: &Option<T>, key: &str) -> Result<T, CliError> {
    value
        .clone()
        .ok_or_else(|| CliError::config(format!("missing {key}")))
}

fn profile_payload(
    profile: &ErrorProfile<f64>,
    epsilon: Option<f64>,
    refine: bool,
) -> Result<ProfilePayload, CliError> {
    let best = match search_best_shift(profile, refine) {
        Ok(b) => Some((&b).into()),
        Err(CoreError::NoValidSample) => None,
        Err(e) => return Err(e.into()),
    };
    let (density, curve) = match epsilon {
        Some(eps) => (
            Some(DensityRow::from(&hit_density(profile, eps)?)),
            density_curve(profile, eps, CURVE_POINTS)?
                .iter()
                .map(DensityRow::from)
                .collect(),
        ),
        None => (None, Vec::new()),
    };
    Ok(ProfilePayload {
        profile: profile.into(),
        best,
        density,
        curve,
    })
}

fn eval_payload(cfg: &RunConfig, prec: &EvalPrecision<f64>) -> Result<Payload, CliError> {
    let subject = required(&cfg.subject, "subject")?;
    let s = required(&cfg.s, "s")?;
    let (name, value, estimate) = match subject {
        SubjectConfig::Riemann => {
            let e = euler_maclaurin(s, 1.0, prec)?;
            ("riemann", e.value, Some(e.error_estimate))
        }
        SubjectConfig::Hurwitz { alpha } => {
            subject.build()?;
            let e = euler_maclaurin(s, alpha, prec)?;
            ("hurwitz", e.value, Some(e.error_estimate))
        }
        SubjectConfig::LogRiemann => ("log_riemann", log_zeta_tracked(s, prec)?, None),
    };
    Ok(Payload::Eval {
        subject: name.to_string(),
        s: complex(s),
        value: complex(value),
        error_estimate: estimate.map(Real),
    })
}

fn single_component(cfg: &RunConfig) -> Result<(Subject<f64>, Component<f64>), CliError> {
    let subject = required(&cfg.subject, "subject")?.build()?;
    let patch = required(&cfg.patch, "patch")?.build()?;
    let target = match &cfg.target {
        Some(t) => t.build()?,
        None => subject.as_target(0.0),
    };
    Ok((subject, Component::new(subject, target, patch)))
}

fn continuous_parts(cfg: &RunConfig) -> Result<(f64, f64), CliError> {
    match required(&cfg.shift, "shift")? {
        ShiftSpec::Continuous { t_max, step } => Ok((t_max, step)),
        ShiftSpec::Discrete { .. } => Err(CliError::config("this command needs shift.mode=continuous")),
    }
}

fn gdelta_payload(cfg: &RunConfig, prec: &EvalPrecision<f64>, threads: usize) -> Result<Payload, CliError> {
    let g = required(&cfg.gdelta, "gdelta.*")?;
    let mut pairs: Vec<(u64, RationalPolynomial)> = Vec::new();
    if let Some(m_max) = g.m_max {
        pairs.extend((1..=m_max).map(|m| {
            let b = enumerate_base(m);
            (b.n, b.poly)
        }));
    }
    pairs.extend(g.pairs.iter().cloned());
    let planted = match g.plant {
        Some(p) => {
            let base = plant_base(p.n, g.t0, p.n0, p.degree, g.grid_step, prec)?;
            pairs.push((base.n, base.poly.clone()));
            Some(PlantRow::new(&base, p.n0, p.degree))
        }
        None => None,
    };
    let result = gdelta_scan_pairs(g.t0, &pairs, g.n_max, g.grid_step, prec, threads)?;
    let verified = result
        .entries
        .iter()
        .map(|e| verify_hit(e, g.t0, g.grid_step, prec))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Payload::Gdelta(GdeltaPayload::new(&result, &verified, planted)))
}

/// Execute `cfg` and build its record (without a timestamp).
pub fn run(cfg: &RunConfig, threads: usize) -> Result<Record, CliError> {
    let prec = cfg.precision.build()?;
    let threads = threads.max(1);
    let mut grid_step = None;
    let payload = match cfg.command {
        Command::Eval => eval_payload(cfg, &prec)?,
        Command::Sweep | Command::Orbit => {
            let (_, component) = single_component(cfg)?;
            grid_step = Some(component.patch.grid_step());
            let spec = required(&cfg.shift, "shift")?;
            let profile = sweep_source(ProfileSource::Single(component), spec, &prec, threads)?;
            Payload::Profile(profile_payload(&profile, cfg.epsilon, cfg.refine())?)
        }
        Command::Joint => {
            let components = cfg
                .joint
                .iter()
                .map(|c| c.build())
                .collect::<Result<Vec<_>, _>>()?;
            let spec = JointSpec {
                components,
                epsilon: cfg.epsilon,
            };
            let (t_max, step) = continuous_parts(cfg)?;
            let profile = joint_sweep(&spec, t_max, step, &prec, threads)?;
            grid_step = Some(profile.source.grid_step());
            Payload::Profile(profile_payload(&profile, cfg.epsilon, cfg.refine())?)
        }
        Command::Density => {
            let (subject, component) = single_component(cfg)?;
            grid_step = Some(component.patch.grid_step());
            let (t_max, step) = continuous_parts(cfg)?;
            let report = density_comparison(
                subject,
                component.target,
                component.patch,
                required(&cfg.epsilon, "epsilon")?,
                t_max,
                step,
                &cfg.h_list,
                &prec,
                threads,
            )?;
            Payload::Density(DensityPayload::from(&report))
        }
        Command::Recur => {
            let (subject, component) = single_component(cfg)?;
            grid_step = Some(component.patch.grid_step());
            let (t_max, step) = continuous_parts(cfg)?;
            let epsilon = required(&cfg.epsilon, "epsilon")?;
            let report = self_recurrence(
                subject,
                component.patch,
                epsilon,
                t_max,
                step,
                &cfg.h_list,
                &prec,
                threads,
            )?;
            let curve = density_curve(&report.profile, epsilon, CURVE_POINTS)?;
            Payload::Recurrence(RecurrencePayload::new(&report, &curve))
        }
        Command::Gdelta => {
            grid_step = cfg.gdelta.as_ref().map(|g| g.grid_step);
            gdelta_payload(cfg, &prec, threads)?
        }
    };
    let config = cfg.echo();
    Ok(Record {
        schema_version: cfg.schema_version,
        tool: TOOL,
        library_version: LIBRARY_VERSION,
        command: cfg.command.to_string(),
        timestamp: None,
        config_digest: config_digest(&config),
        config,
        precision: PrecisionRow::from(&prec),
        grid_step: grid_step.map(Real),
        payload,
    })
}

/// Where the plot of kind `kind` goes for a record written to `out`.
pub fn plot_path(out: Option<&Path>, kind: PlotKind) -> PathBuf {
    match out {
        Some(path) => path.with_extension(format!("{}.svg", kind.as_str())),
        None => PathBuf::from(format!("{}.svg", kind.as_str())),
    }
}

/// Write the record (or print it when `out` is `None`) and the optional plot.
pub fn write_outputs(
    record: &Record,
    out: Option<&Path>,
    plot: Option<PlotKind>,
) -> Result<Option<PathBuf>, CliError> {
    let svg = plot.map(|kind| emit_plot(record, kind)).transpose()?;
    let line = record.to_line()?;
    match out {
        Some(path) => std::fs::write(path, line).map_err(|e| CliError::io(path.display().to_string(), e))?,
        None => print!("{line}"),
    }
    match (plot, svg) {
        (Some(kind), Some(svg)) => {
            let path = plot_path(out, kind);
            std::fs::write(&path, svg).map_err(|e| CliError::io(path.display().to_string(), e))?;
            Ok(Some(path))
        }
        _ => Ok(None),
    }
}
