//! Config parsing, experiment dispatch, result records and plots for the
//! `zetashift` command-line tool.

pub mod config;
pub mod error;
pub mod plot;
pub mod record;
pub mod run;

pub use config::{parse, Command, RunConfig};
pub use error::CliError;
pub use plot::{emit_plot, PlotKind};
pub use record::Record;
pub use run::run;
