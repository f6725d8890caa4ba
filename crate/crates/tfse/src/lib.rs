//! Command-line front end for `tfse-core`.
//!
//! `tfse <ml|free|well|green|fracderiv> [flags]` resolves its settings from
//! flags, an optional TOML file and defaults, echoes the resolved settings to
//! standard error and writes a CSV or JSON table. Exit status is 0 on success,
//! 1 on a numerical or I/O failure and 2 on a usage error.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod output;
pub mod run;

use std::ffi::OsString;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

pub use config::{resolve, Cli, RunConfig};
pub use run::{run, Outcome};

#[derive(Debug)]
pub enum Failure {
    /// Bad flag or setting; the message starts with the flag name.
    Usage(String),
    Numerical(tfse_core::Error),
    Io(std::io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Numerical(_) | Failure::Io(_) => 1,
        }
    }

    /// One JSON line for standard error.
    pub fn to_json(&self) -> String {
        let v = match self {
            Failure::Usage(m) => json!({ "error": "usage", "message": m }),
            Failure::Io(e) => json!({ "error": "io", "message": e.to_string() }),
            Failure::Numerical(e) => {
                let mut v = json!({ "error": error_name(e), "message": e.to_string() });
                match e {
                    tfse_core::Error::NonConvergent { best, bound } => {
                        v["best_re"] = json!(best.re);
                        v["best_im"] = json!(best.im);
                        v["bound"] = json!(bound);
                    }
                    tfse_core::Error::QuadratureFailure { estimate, tolerance } => {
                        v["estimate"] = json!(estimate);
                        v["tolerance"] = json!(tolerance);
                    }
                    tfse_core::Error::SectorUnsupported { arg } => v["arg"] = json!(arg),
                    _ => {}
                }
                v
            }
        };
        v.to_string()
    }
}

fn error_name(e: &tfse_core::Error) -> &'static str {
    use tfse_core::Error::*;
    match e {
        NonConvergent { .. } => "NonConvergent",
        QuadratureFailure { .. } => "QuadratureFailure",
        SectorUnsupported { .. } => "SectorUnsupported",
        _ => "Error",
    }
}

/// Core errors that are not numerical trace back to the inputs.
impl From<tfse_core::Error> for Failure {
    fn from(e: tfse_core::Error) -> Self {
        if e.is_numerical() {
            Failure::Numerical(e)
        } else {
            Failure::Usage(format!("invalid input: {e}"))
        }
    }
}

/// Runs a resolved configuration and writes its output.
pub fn execute(cfg: &RunConfig) -> Result<(), Failure> {
    let text = run(cfg)?.render(cfg.format);
    match &cfg.output {
        Some(path) => output::write_atomic(path, &text).map_err(Failure::Io),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(Failure::Io)
        }
    }
}

/// The whole program: parse, echo, run, report.
pub fn main_with(args: impl IntoIterator<Item = impl Into<OsString> + Clone>) -> ExitCode {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = resolve(&cli).and_then(|cfg| {
        eprint!("{}", cfg.echo());
        execute(&cfg)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Failure::Usage(m) = &f {
                eprintln!("error: {m}");
            } else {
                eprintln!("{}", f.to_json());
            }
            ExitCode::from(f.exit_code())
        }
    }
}
