//! Flat `key=value` run configuration with dotted keys.
//!
//! One entry per line; blank lines and lines starting with `#` are ignored.
//! Reals use Rust's shortest round-trip formatting, complex numbers are
//! written `a+bi`, and every key must be consumed by the selected command.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use zetashift_core::kernels::rational_poly::split_complex_literal;
use zetashift_core::kernels::{EvalPrecision, HurwitzParams, RationalPolynomial};
use zetashift_core::orbit::{Component, ShiftSpec, Subject};
use zetashift_core::space::{CompactPatch, PatchShape, Polynomial, StripDomain, TargetFunction};
use zetashift_core::Complex64;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Keys that do not affect the payload and are left out of the config echo.
pub const NON_ECHOED_KEYS: [&str; 2] = ["output", "threads"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Eval,
    Sweep,
    Orbit,
    Density,
    Recur,
    Gdelta,
    Joint,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::Eval,
        Command::Sweep,
        Command::Orbit,
        Command::Density,
        Command::Recur,
        Command::Gdelta,
        Command::Joint,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Eval => "eval",
            Command::Sweep => "sweep",
            Command::Orbit => "orbit",
            Command::Density => "density",
            Command::Recur => "recur",
            Command::Gdelta => "gdelta",
            Command::Joint => "joint",
        }
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Command::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| CliError::config(format!("unknown command '{s}'")))
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SubjectConfig {
    Riemann,
    Hurwitz { alpha: f64 },
    LogRiemann,
}

impl SubjectConfig {
    pub fn build(&self) -> Result<Subject<f64>, CliError> {
        Ok(match *self {
            SubjectConfig::Riemann => Subject::Riemann,
            SubjectConfig::Hurwitz { alpha } => Subject::Hurwitz(HurwitzParams::new(alpha).map_err(invalid)?),
            SubjectConfig::LogRiemann => Subject::LogRiemann,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatchConfig {
    pub shape: PatchShape<f64>,
    pub step: f64,
    /// `(sigma_lo, sigma_hi)`; the classical strip when absent.
    pub strip: Option<(f64, f64)>,
}

impl PatchConfig {
    pub fn build(&self) -> Result<CompactPatch<f64>, CliError> {
        let domain = match self.strip {
            Some((lo, hi)) => StripDomain::new(lo, hi).map_err(invalid)?,
            None => StripDomain::classical(),
        };
        CompactPatch::build(self.shape, self.step, domain).map_err(invalid)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TargetConfig {
    Polynomial { center: Complex64, coeffs: Vec<Complex64> },
    ExpPolynomial(RationalPolynomial),
    ZetaShift { tau: f64 },
    HurwitzShift { alpha: f64, tau: f64 },
    LogZetaShift { tau: f64 },
}

impl TargetConfig {
    pub fn build(&self) -> Result<TargetFunction<f64>, CliError> {
        Ok(match self {
            TargetConfig::Polynomial { center, coeffs } => {
                TargetFunction::Polynomial(Polynomial::new(*center, coeffs.clone()))
            }
            TargetConfig::ExpPolynomial(p) => TargetFunction::ExpPolynomial(p.clone()),
            TargetConfig::ZetaShift { tau } => TargetFunction::ZetaShift { tau: *tau },
            TargetConfig::HurwitzShift { alpha, tau } => TargetFunction::HurwitzShift {
                params: HurwitzParams::new(*alpha).map_err(invalid)?,
                tau: *tau,
            },
            TargetConfig::LogZetaShift { tau } => TargetFunction::LogZetaShift { tau: *tau },
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PrecisionConfig {
    pub shift_terms: Option<usize>,
    pub bernoulli_order: Option<usize>,
    pub target_tol: Option<f64>,
}

impl PrecisionConfig {
    pub fn build(&self) -> Result<EvalPrecision<f64>, CliError> {
        let d = EvalPrecision::<f64>::default();
        EvalPrecision::new(
            self.shift_terms.or(d.shift_terms),
            self.bernoulli_order.unwrap_or(d.bernoulli_order),
            self.target_tol.unwrap_or(d.target_tol),
        )
        .map_err(invalid)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlantConfig {
    pub n: u64,
    pub n0: u64,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GdeltaConfig {
    pub t0: f64,
    pub n_max: u64,
    pub grid_step: f64,
    /// Scan `m = 1..=m_max` of the base enumeration.
    pub m_max: Option<u64>,
    /// Explicit `(N, P)` pairs, scanned after the enumerated ones.
    pub pairs: Vec<(u64, RationalPolynomial)>,
    /// A planted pair, scanned last.
    pub plant: Option<PlantConfig>,
}

pub const DEFAULT_GDELTA_GRID_STEP: f64 = 0.05;
pub const DEFAULT_PLANT_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct JointComponentConfig {
    pub subject: SubjectConfig,
    pub patch: PatchConfig,
    pub target: TargetConfig,
    pub h: f64,
}

impl JointComponentConfig {
    pub fn build(&self) -> Result<Component<f64>, CliError> {
        Ok(Component::new(self.subject.build()?, self.target.build()?, self.patch.build()?).with_rate(self.h))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub schema_version: u32,
    pub command: Command,
    pub subject: Option<SubjectConfig>,
    /// Evaluation point for `eval`.
    pub s: Option<Complex64>,
    pub patch: Option<PatchConfig>,
    pub target: Option<TargetConfig>,
    pub shift: Option<ShiftSpec<f64>>,
    pub epsilon: Option<f64>,
    pub h_list: Vec<f64>,
    /// Golden-section refinement of the best shift (sweep, orbit, joint).
    pub refine: Option<bool>,
    pub precision: PrecisionConfig,
    pub gdelta: Option<GdeltaConfig>,
    pub joint: Vec<JointComponentConfig>,
    pub threads: Option<usize>,
    pub output: Option<String>,
}

impl RunConfig {
    /// A config with only the command set, for building programmatically.
    pub fn new(command: Command) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command,
            subject: None,
            s: None,
            patch: None,
            target: None,
            shift: None,
            epsilon: None,
            h_list: Vec::new(),
            refine: None,
            precision: PrecisionConfig::default(),
            gdelta: None,
            joint: Vec::new(),
            threads: None,
            output: None,
        }
    }

    pub fn refine(&self) -> bool {
        self.refine.unwrap_or(true)
    }

    /// All keys, in sorted order.
    pub fn to_map(&self) -> BTreeMap<String, String> {
        let mut w = Writer::default();
        w.put("schema_version", self.schema_version);
        w.put("command", self.command);
        if let Some(subject) = &self.subject {
            w.subject("", subject);
        }
        if let Some(s) = self.s {
            w.put("s", fmt_complex(s));
        }
        if let Some(patch) = &self.patch {
            w.patch("", patch);
        }
        if let Some(target) = &self.target {
            w.target("", target);
        }
        if let Some(shift) = &self.shift {
            match *shift {
                ShiftSpec::Continuous { t_max, step } => {
                    w.put("shift.mode", "continuous");
                    w.put("shift.t_max", t_max);
                    w.put("shift.step", step);
                }
                ShiftSpec::Discrete { h, n_max } => {
                    w.put("shift.mode", "discrete");
                    w.put("shift.h", h);
                    w.put("shift.n_max", n_max);
                }
            }
        }
        if let Some(eps) = self.epsilon {
            w.put("epsilon", eps);
        }
        if !self.h_list.is_empty() {
            w.put("h_list", join(&self.h_list));
        }
        if let Some(refine) = self.refine {
            w.put("search.refine", refine);
        }
        let p = &self.precision;
        if let Some(m) = p.shift_terms {
            w.put("precision.shift_terms", m);
        }
        if let Some(k) = p.bernoulli_order {
            w.put("precision.bernoulli_order", k);
        }
        if let Some(tol) = p.target_tol {
            w.put("precision.target_tol", tol);
        }
        if let Some(g) = &self.gdelta {
            w.put("gdelta.t0", g.t0);
            w.put("gdelta.n_max", g.n_max);
            w.put("gdelta.grid_step", g.grid_step);
            if let Some(m) = g.m_max {
                w.put("gdelta.m_max", m);
            }
            for (i, (n, poly)) in g.pairs.iter().enumerate() {
                w.put(&format!("gdelta.pair.{}.n", i + 1), n);
                w.put(&format!("gdelta.pair.{}.poly", i + 1), poly);
            }
            if let Some(plant) = &g.plant {
                w.put("gdelta.plant.n", plant.n);
                w.put("gdelta.plant.n0", plant.n0);
                w.put("gdelta.plant.degree", plant.degree);
            }
        }
        if !self.joint.is_empty() {
            w.put("joint.components", self.joint.len());
            for (i, c) in self.joint.iter().enumerate() {
                let prefix = format!("joint.{}.", i + 1);
                w.subject(&prefix, &c.subject);
                w.patch(&prefix, &c.patch);
                w.target(&prefix, &c.target);
                w.put(&format!("{prefix}h"), c.h);
            }
        }
        if let Some(t) = self.threads {
            w.put("threads", t);
        }
        if let Some(out) = &self.output {
            w.put("output", out);
        }
        w.0
    }

    /// Config text: one `key=value` per line, keys sorted.
    pub fn to_text(&self) -> String {
        self.to_map()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect()
    }

    /// Keys that determine the payload (everything except output and threads).
    pub fn echo(&self) -> BTreeMap<String, String> {
        let mut map = self.to_map();
        for key in NON_ECHOED_KEYS {
            map.remove(key);
        }
        map
    }
}

impl FromStr for RunConfig {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        parse(text)
    }
}

/// Parse and validate a config.
pub fn parse(text: &str) -> Result<RunConfig, CliError> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        // No value contains '#', so everything after it is a comment.
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::config(format!("line {}: expected key=value", lineno + 1)))?;
        let key = key.trim().to_string();
        if map.insert(key.clone(), value.trim().to_string()).is_some() {
            return Err(CliError::config(format!("duplicate key '{key}'")));
        }
    }
    from_map(map)
}

/// Build a config from already split keys.
pub fn from_map(map: BTreeMap<String, String>) -> Result<RunConfig, CliError> {
    let mut r = Reader {
        map,
        used: BTreeSet::new(),
    };
    let schema_version = r.opt::<u32>("schema_version")?.unwrap_or(SCHEMA_VERSION);
    if schema_version != SCHEMA_VERSION {
        return Err(CliError::config(format!(
            "unsupported schema_version {schema_version}, expected {SCHEMA_VERSION}"
        )));
    }
    let command: Command = r.req("command")?;
    let mut cfg = RunConfig::new(command);
    cfg.threads = r.opt("threads")?;
    if cfg.threads == Some(0) {
        return Err(CliError::config("threads must be at least 1"));
    }
    cfg.output = r.opt::<String>("output")?;
    cfg.precision = PrecisionConfig {
        shift_terms: r.opt("precision.shift_terms")?,
        bernoulli_order: r.opt("precision.bernoulli_order")?,
        target_tol: r.opt_real("precision.target_tol")?,
    };
    cfg.precision.build()?;

    match command {
        Command::Eval => {
            cfg.subject = Some(r.subject("")?);
            cfg.s = Some(r.complex("s")?);
        }
        Command::Sweep | Command::Orbit => {
            cfg.subject = Some(r.subject("")?);
            cfg.patch = Some(r.patch("")?);
            cfg.target = Some(r.target("")?);
            let shift = r.shift()?;
            let want_continuous = command == Command::Sweep;
            if shift.is_continuous() != want_continuous {
                return Err(CliError::config(format!(
                    "command {command} needs shift.mode={}",
                    if want_continuous { "continuous" } else { "discrete" }
                )));
            }
            cfg.shift = Some(shift);
            cfg.epsilon = r.epsilon(false)?;
            cfg.refine = r.opt("search.refine")?;
        }
        Command::Density | Command::Recur => {
            cfg.subject = Some(r.subject("")?);
            cfg.patch = Some(r.patch("")?);
            if command == Command::Density {
                cfg.target = Some(r.target("")?);
            }
            cfg.shift = Some(r.continuous_shift()?);
            cfg.epsilon = r.epsilon(true)?;
            cfg.h_list = r.h_list(command == Command::Density)?;
        }
        Command::Gdelta => {
            cfg.gdelta = Some(r.gdelta()?);
        }
        Command::Joint => {
            let count: usize = r.req("joint.components")?;
            if count == 0 {
                return Err(CliError::config("joint.components must be at least 1"));
            }
            for i in 1..=count {
                let prefix = format!("joint.{i}.");
                let subject = r.subject(&prefix)?;
                let patch = r.patch(&prefix)?;
                let target = r.target(&prefix)?;
                let h = r.real(&format!("{prefix}h"))?;
                if !(h > 0.0 && h.is_finite()) {
                    return Err(CliError::config(format!("{prefix}h must be positive, got {h}")));
                }
                cfg.joint.push(JointComponentConfig {
                    subject,
                    patch,
                    target,
                    h,
                });
            }
            cfg.shift = Some(r.continuous_shift()?);
            cfg.epsilon = r.epsilon(false)?;
            cfg.refine = r.opt("search.refine")?;
        }
    }
    r.finish(command)?;
    Ok(cfg)
}

/// Core validation failures during config handling are config errors.
fn invalid(e: zetashift_core::Error) -> CliError {
    CliError::config(e.to_string())
}

pub fn fmt_complex(z: Complex64) -> String {
    if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

pub fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    let bad = || CliError::config(format!("bad complex literal '{text}'"));
    let (re, im) = split_complex_literal(text).ok_or_else(bad)?;
    let im = match im.trim() {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re: f64 = re.trim().trim_start_matches('+').parse().map_err(|_| bad())?;
    let im: f64 = im.trim_start_matches('+').parse().map_err(|_| bad())?;
    if !(re.is_finite() && im.is_finite()) {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Default)]
struct Writer(BTreeMap<String, String>);

impl Writer {
    fn put(&mut self, key: &str, value: impl fmt::Display) {
        self.0.insert(key.to_string(), value.to_string());
    }

    fn subject(&mut self, prefix: &str, subject: &SubjectConfig) {
        let key = format!("{prefix}subject");
        match *subject {
            SubjectConfig::Riemann => self.put(&key, "riemann"),
            SubjectConfig::Hurwitz { alpha } => {
                self.put(&key, "hurwitz");
                self.put(&format!("{key}.alpha"), alpha);
            }
            SubjectConfig::LogRiemann => self.put(&key, "log_riemann"),
        }
    }

    fn patch(&mut self, prefix: &str, patch: &PatchConfig) {
        let k = |name: &str| format!("{prefix}patch.{name}");
        match patch.shape {
            PatchShape::Disc { center, radius } => {
                self.put(&k("shape"), "disc");
                self.put(&k("center"), fmt_complex(center));
                self.put(&k("radius"), radius);
            }
            PatchShape::Rectangle {
                sigma_lo,
                sigma_hi,
                t_lo,
                t_hi,
            } => {
                self.put(&k("shape"), "rectangle");
                self.put(&k("sigma_lo"), sigma_lo);
                self.put(&k("sigma_hi"), sigma_hi);
                self.put(&k("t_lo"), t_lo);
                self.put(&k("t_hi"), t_hi);
            }
        }
        self.put(&k("step"), patch.step);
        if let Some((lo, hi)) = patch.strip {
            self.put(&format!("{prefix}strip.sigma_lo"), lo);
            self.put(&format!("{prefix}strip.sigma_hi"), hi);
        }
    }

    fn target(&mut self, prefix: &str, target: &TargetConfig) {
        let k = |name: &str| format!("{prefix}target.{name}");
        match target {
            TargetConfig::Polynomial { center, coeffs } => {
                self.put(&k("kind"), "polynomial");
                self.put(&k("center"), fmt_complex(*center));
                let coeffs: Vec<String> = coeffs.iter().map(|c| fmt_complex(*c)).collect();
                self.put(&k("coeffs"), coeffs.join(","));
            }
            TargetConfig::ExpPolynomial(p) => {
                self.put(&k("kind"), "exp_polynomial");
                self.put(&k("poly"), p);
            }
            TargetConfig::ZetaShift { tau } => {
                self.put(&k("kind"), "zeta_shift");
                self.put(&k("tau"), tau);
            }
            TargetConfig::HurwitzShift { alpha, tau } => {
                self.put(&k("kind"), "hurwitz_shift");
                self.put(&k("alpha"), alpha);
                self.put(&k("tau"), tau);
            }
            TargetConfig::LogZetaShift { tau } => {
                self.put(&k("kind"), "log_zeta_shift");
                self.put(&k("tau"), tau);
            }
        }
    }
}

struct Reader {
    map: BTreeMap<String, String>,
    used: BTreeSet<String>,
}

impl Reader {
    fn raw(&mut self, key: &str) -> Option<String> {
        let v = self.map.get(key).cloned();
        if v.is_some() {
            self.used.insert(key.to_string());
        }
        v
    }

    fn opt<T: FromStr>(&mut self, key: &str) -> Result<Option<T>, CliError> {
        match self.raw(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| CliError::config(format!("{key}: cannot parse '{v}'"))),
        }
    }

    fn req<T: FromStr>(&mut self, key: &str) -> Result<T, CliError> {
        self.opt(key)?
            .ok_or_else(|| CliError::config(format!("missing required key '{key}'")))
    }

    fn opt_real(&mut self, key: &str) -> Result<Option<f64>, CliError> {
        match self.opt::<f64>(key)? {
            Some(x) if !x.is_finite() => Err(CliError::config(format!("{key} must be finite"))),
            other => Ok(other),
        }
    }

    fn real(&mut self, key: &str) -> Result<f64, CliError> {
        self.opt_real(key)?
            .ok_or_else(|| CliError::config(format!("missing required key '{key}'")))
    }

    fn complex(&mut self, key: &str) -> Result<Complex64, CliError> {
        let v: String = self.req(key)?;
        parse_complex(&v).map_err(|e| CliError::config(format!("{key}: {e}")))
    }

    fn subject(&mut self, prefix: &str) -> Result<SubjectConfig, CliError> {
        let key = format!("{prefix}subject");
        let kind: String = self.req(&key)?;
        let subject = match kind.as_str() {
            "riemann" => SubjectConfig::Riemann,
            "hurwitz" => SubjectConfig::Hurwitz {
                alpha: self.real(&format!("{key}.alpha"))?,
            },
            "log_riemann" => SubjectConfig::LogRiemann,
            other => return Err(CliError::config(format!("{key}: unknown subject '{other}'"))),
        };
        subject.build()?;
        Ok(subject)
    }

    fn patch(&mut self, prefix: &str) -> Result<PatchConfig, CliError> {
        let k = |name: &str| format!("{prefix}patch.{name}");
        let shape_kind: String = self.req(&k("shape"))?;
        let shape = match shape_kind.as_str() {
            "disc" => PatchShape::disc(self.complex(&k("center"))?, self.real(&k("radius"))?),
            "rectangle" => PatchShape::rectangle(
                self.real(&k("sigma_lo"))?,
                self.real(&k("sigma_hi"))?,
                self.real(&k("t_lo"))?,
                self.real(&k("t_hi"))?,
            ),
            other => return Err(CliError::config(format!("{}: unknown shape '{other}'", k("shape")))),
        };
        let step = self.real(&k("step"))?;
        let lo = self.opt_real(&format!("{prefix}strip.sigma_lo"))?;
        let hi = self.opt_real(&format!("{prefix}strip.sigma_hi"))?;
        let strip = match (lo, hi) {
            (Some(lo), Some(hi)) => Some((lo, hi)),
            (None, None) => None,
            _ => {
                return Err(CliError::config(format!(
                    "{prefix}strip needs both sigma_lo and sigma_hi"
                )))
            }
        };
        let patch = PatchConfig { shape, step, strip };
        patch.build()?;
        Ok(patch)
    }

    fn target(&mut self, prefix: &str) -> Result<TargetConfig, CliError> {
        let k = |name: &str| format!("{prefix}target.{name}");
        let kind: String = self.req(&k("kind"))?;
        let target = match kind.as_str() {
            "polynomial" => {
                let center = match self.raw(&k("center")) {
                    Some(v) => parse_complex(&v)?,
                    None => Complex64::new(0.0, 0.0),
                };
                let text: String = self.req(&k("coeffs"))?;
                let coeffs = text
                    .split(',')
                    .map(parse_complex)
                    .collect::<Result<Vec<_>, _>>()?;
                TargetConfig::Polynomial { center, coeffs }
            }
            "exp_polynomial" => {
                let text: String = self.req(&k("poly"))?;
                TargetConfig::ExpPolynomial(text.parse().map_err(invalid)?)
            }
            "zeta_shift" => TargetConfig::ZetaShift {
                tau: self.real(&k("tau"))?,
            },
            "hurwitz_shift" => TargetConfig::HurwitzShift {
                alpha: self.real(&k("alpha"))?,
                tau: self.real(&k("tau"))?,
            },
            "log_zeta_shift" => TargetConfig::LogZetaShift {
                tau: self.real(&k("tau"))?,
            },
            other => return Err(CliError::config(format!("{}: unknown target '{other}'", k("kind")))),
        };
        target.build()?;
        Ok(target)
    }

    fn shift(&mut self) -> Result<ShiftSpec<f64>, CliError> {
        let mode: String = self.req("shift.mode")?;
        let spec = match mode.as_str() {
            "continuous" => ShiftSpec::continuous(self.real("shift.t_max")?, self.real("shift.step")?)
                .map_err(invalid)?,
            "discrete" => ShiftSpec::discrete(self.real("shift.h")?, self.req("shift.n_max")?)
                .map_err(invalid)?,
            other => return Err(CliError::config(format!("shift.mode: unknown mode '{other}'"))),
        };
        Ok(spec)
    }

    fn continuous_shift(&mut self) -> Result<ShiftSpec<f64>, CliError> {
        let spec = self.shift()?;
        if !spec.is_continuous() {
            return Err(CliError::config("this command needs shift.mode=continuous"));
        }
        Ok(spec)
    }

    fn epsilon(&mut self, required: bool) -> Result<Option<f64>, CliError> {
        let eps = if required {
            Some(self.real("epsilon")?)
        } else {
            self.opt_real("epsilon")?
        };
        if let Some(e) = eps {
            if !(e > 0.0) {
                return Err(CliError::config(format!("epsilon must be positive, got {e}")));
            }
        }
        Ok(eps)
    }

    fn h_list(&mut self, required: bool) -> Result<Vec<f64>, CliError> {
        let Some(text) = self.raw("h_list") else {
            return if required {
                Err(CliError::config("missing required key 'h_list'"))
            } else {
                Ok(Vec::new())
            };
        };
        let list = text
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|h| *h > 0.0 && h.is_finite())
                    .ok_or_else(|| CliError::config(format!("h_list: '{x}' is not a positive real")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(list)
    }

    fn gdelta(&mut self) -> Result<GdeltaConfig, CliError> {
        let t0 = self.real("gdelta.t0")?;
        if !(t0 > 0.0) {
            return Err(CliError::config(format!("gdelta.t0 must be positive, got {t0}")));
        }
        let n_max: u64 = self.req("gdelta.n_max")?;
        if n_max == 0 {
            return Err(CliError::config("gdelta.n_max must be at least 1"));
        }
        let grid_step = self.opt_real("gdelta.grid_step")?.unwrap_or(DEFAULT_GDELTA_GRID_STEP);
        if !(grid_step > 0.0) {
            return Err(CliError::config("gdelta.grid_step must be positive"));
        }
        let m_max: Option<u64> = self.opt("gdelta.m_max")?;
        if m_max == Some(0) {
            return Err(CliError::config("gdelta.m_max must be at least 1"));
        }
        let mut pairs = Vec::new();
        for i in 1.. {
            let n: Option<u64> = self.opt(&format!("gdelta.pair.{i}.n"))?;
            let poly: Option<String> = self.opt(&format!("gdelta.pair.{i}.poly"))?;
            match (n, poly) {
                (None, None) => break,
                (Some(n), Some(poly)) if n >= 1 => pairs.push((n, poly.parse().map_err(invalid)?)),
                _ => {
                    return Err(CliError::config(format!(
                        "gdelta.pair.{i} needs n >= 1 and poly"
                    )))
                }
            }
        }
        let plant = match self.opt::<u64>("gdelta.plant.n")? {
            None => None,
            Some(n) => {
                let n0: u64 = self.req("gdelta.plant.n0")?;
                let degree = self.opt("gdelta.plant.degree")?.unwrap_or(DEFAULT_PLANT_DEGREE);
                if n == 0 || n0 == 0 {
                    return Err(CliError::config("gdelta.plant.n and n0 must be at least 1"));
                }
                Some(PlantConfig { n, n0, degree })
            }
        };
        if m_max.is_none() && pairs.is_empty() && plant.is_none() {
            return Err(CliError::config(
                "gdelta needs gdelta.m_max, gdelta.pair.<i>.* or gdelta.plant.*",
            ));
        }
        Ok(GdeltaConfig {
            t0,
            n_max,
            grid_step,
            m_max,
            pairs,
            plant,
        })
    }

    fn finish(self, command: Command) -> Result<(), CliError> {
        let unused: Vec<&String> = self.map.keys().filter(|k| !self.used.contains(*k)).collect();
        if unused.is_empty() {
            Ok(())
        } else {
            Err(CliError::config(format!(
                "unknown key(s) for command {command}: {}",
                unused.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(", ")
            )))
        }
    }
}
