use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::Parser;

use zetashift::config::{parse, Command};
use zetashift::error::CliError;
use zetashift::plot::PlotKind;
use zetashift::run::{resolve_threads, run, write_outputs};

#[derive(Debug, Parser)]
#[command(name = "zetashift", version, about = "Vertical-shift experiments with zeta-functions")]
struct Args {
    /// eval | sweep | orbit | density | recur | gdelta | joint
    command: String,
    /// Run configuration (key=value lines)
    #[arg(long)]
    config: PathBuf,
    /// Record output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: config `threads`, then ZETASHIFT_THREADS, then 1)
    #[arg(long)]
    threads: Option<usize>,
    /// Also write an SVG plot: error_profile | density_curve
    #[arg(long)]
    plot: Option<String>,
    /// Record the wall-clock time (SOURCE_DATE_EPOCH takes precedence)
    #[arg(long)]
    stamp: bool,
}

fn timestamp(stamp: bool) -> Option<u64> {
    if let Some(epoch) = std::env::var("SOURCE_DATE_EPOCH").ok().and_then(|v| v.trim().parse().ok()) {
        return Some(epoch);
    }
    stamp.then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    })
}

fn execute(args: &Args) -> Result<(), CliError> {
    let command: Command = args.command.parse()?;
    let plot = args.plot.as_deref().map(str::parse::<PlotKind>).transpose()?;
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| CliError::io(args.config.display().to_string(), e))?;
    let text = if text
        .lines()
        .any(|l| l.split('#').next().and_then(|l| l.split_once('=')).is_some_and(|(k, _)| k.trim() == "command")) {
        text
    } else {
        format!("command={command}\n{text}")
    };
    let cfg = parse(&text)?;
    if cfg.command != command {
        return Err(CliError::config(format!(
            "config is for command '{}', not '{command}'",
            cfg.command
        )));
    }
    let threads = resolve_threads(args.threads, &cfg)?;
    let mut record = run(&cfg, threads)?;
    record.timestamp = timestamp(args.stamp);
    let out = args.out.clone().or_else(|| cfg.output.clone().map(PathBuf::from));
    write_outputs(&record, out.as_deref(), plot)?;
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let report = serde_json::json!({
                "error": e.class(),
                "message": e.to_string(),
            });
            eprintln!("{report}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
