//! Command-line front end for the `yangian_qchar` engine.
//!
//! [`dispatch`] parses an argument vector, runs the requested command and
//! returns the exit code together with everything destined for stdout and
//! stderr, so the binary is a thin wrapper and tests need no subprocess.
//!
//! Exit codes: `0` every requested check passed, `1` a verification
//! failed, `2` usage error, `3` the engine hit its term budget or found no
//! stable limit below the KR ceiling.

pub mod args;
mod commands;
pub mod config;

use clap::Parser;
use serde_json::Value;
use yangian_qchar::EngineError;

use args::{Cli, Format};
use config::CliConfig;

/// Version of the JSON envelope written by every command.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Engine(EngineError),
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError::Engine(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Engine(e) if e.is_resource_limit() => 3,
            CliError::Engine(
                EngineError::IllegalType { .. }
                | EngineError::InvalidNode { .. }
                | EngineError::InvalidParameters(_)
                | EngineError::NonDominant { .. }
                | EngineError::Parse(_),
            ) => 2,
            CliError::Engine(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Engine(e) => e.to_string(),
        }
    }
}

/// A finished command: JSON payload, text rendering and exit status.
#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub exit: i32,
    pub json: Value,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dispatch {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn dispatch<I, T>(argv: I) -> Dispatch
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Dispatch { code, stdout: text, stderr: String::new() }
            } else {
                Dispatch { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let config = match &cli.common.config {
        Some(path) => match CliConfig::load(path) {
            Ok(c) => c,
            Err(e) => return failure(&e),
        },
        None => CliConfig::default(),
    };
    let format = cli.common.format.unwrap_or(config.output_format);
    match commands::run(&cli, &config) {
        Ok(report) => Dispatch {
            code: report.exit,
            stdout: render(&report, format),
            stderr: String::new(),
        },
        Err(e) => failure(&e),
    }
}

fn failure(e: &CliError) -> Dispatch {
    Dispatch {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {}\n", e.message()),
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut envelope = serde_json::Map::new();
            envelope.insert("schema_version".into(), SCHEMA_VERSION.into());
            envelope.insert("command".into(), report.command.clone().into());
            if let Value::Object(fields) = &report.json {
                envelope.extend(fields.clone());
            } else {
                envelope.insert("result".into(), report.json.clone());
            }
            let mut s = serde_json::to_string_pretty(&Value::Object(envelope)).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = report.text.clone();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    }
}
