//! Batch command-line frontend.
//!
//! Exit codes: 0 when every check passed, 1 when at least one identity was
//! refuted, 2 for usage, parse, IO and internal errors.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{catalog_consistency, series_by_name, SERIES_NAMES};
use crate::dsl::{parse_identity_file, verify_ast};
use crate::identities::{
    errata_specs, verify_range, Form, IdentityId, IdentitySpec, SweepOptions, VerifyReport,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Environment variable supplying the default worker count.
pub const JOBS_ENV: &str = "CBC_IDENT_JOBS";

/// Default sweep range of the `errata` command.
pub const ERRATA_RANGE: NRange = NRange { lo: 0, hi: 300 };

/// Inclusive range `lo..hi`; a single integer means `lo = hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: u64,
    pub hi: u64,
}

impl FromStr for NRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid range {s:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(NRange { lo, hi })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Printed,
    Corrected,
}

impl From<FormArg> for Form {
    fn from(f: FormArg) -> Form {
        match f {
            FormArg::Printed => Form::Printed,
            FormArg::Corrected => Form::Corrected,
        }
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct SweepArgs {
    /// Inclusive range of n, as lo..hi or a single integer.
    #[arg(long = "n", value_name = "LO..HI")]
    pub range: NRange,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, clap::Args)]
pub struct OutputArgs {
    /// Write a structured report to this path.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
    /// Worker threads for range sweeps.
    #[arg(long, env = JOBS_ENV, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    /// Keep sweeping after the first failure.
    #[arg(long)]
    pub keep_going: bool,
}

impl OutputArgs {
    fn sweep_options(&self) -> SweepOptions {
        SweepOptions {
            keep_going: self.keep_going,
            jobs: self.jobs as usize,
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Verify built-in identities over a range of n.
    Verify {
        /// Comma-separated identity ids.
        #[arg(long = "id", value_delimiter = ',', required = true)]
        ids: Vec<String>,
        #[arg(long, value_enum)]
        form: Option<FormArg>,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Verify identities read from a file, one per line.
    VerifyFile {
        path: PathBuf,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Print the coefficients of a named series.
    Series {
        name: String,
        #[arg(long)]
        order: usize,
    },
    /// Check every printed display and its corrected form.
    Errata {
        #[arg(long = "n", value_name = "LO..HI", default_value_t = ERRATA_RANGE)]
        range: NRange,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the series-level consistency checks.
    Consistency {
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "cbc-ident",
    version,
    about = "Exact verifier for central binomial coefficient identities"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{err}")]
    Parse {
        path: PathBuf,
        err: crate::dsl::ParseError,
    },
    #[error(transparent)]
    Identity(#[from] crate::identities::IdentityError),
    #[error(transparent)]
    Catalog(#[from] crate::catalog::CatalogError),
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn cli_main<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match run(&config, out) {
        Ok(all_passed) => {
            if all_passed {
                EXIT_PASS
            } else {
                EXIT_REFUTED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn run(config: &RunConfig, out: &mut dyn Write) -> Result<bool, CliError> {
    match &config.command {
        Command::Verify { ids, form, sweep } => {
            let specs = ids
                .iter()
                .map(|id| {
                    let id: IdentityId = id.trim().parse()?;
                    Ok(IdentitySpec::new(id, form.map(Form::from))?)
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let opts = sweep.output.sweep_options();
            let reports = specs
                .iter()
                .map(|s| verify_range(s, sweep.range.lo, sweep.range.hi, opts))
                .collect::<Result<Vec<_>, _>>()?;
            finish(&reports, &sweep.output, out)
        }
        Command::VerifyFile { path, sweep } => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            let items = parse_identity_file(&text).map_err(|err| CliError::Parse {
                path: path.clone(),
                err,
            })?;
            if items.is_empty() {
                return Err(CliError::Usage(format!(
                    "{}: no identities found",
                    path.display()
                )));
            }
            let opts = sweep.output.sweep_options();
            let reports = items
                .iter()
                .map(|item| {
                    verify_ast(
                        &item.label(),
                        &item.ast,
                        sweep.range.lo,
                        sweep.range.hi,
                        opts,
                    )
                })
                .collect::<Result<Vec<_>, _>>()?;
            finish(&reports, &sweep.output, out)
        }
        Command::Series { name, order } => {
            if *order == 0 {
                return Err(CliError::Usage("--order must be positive".into()));
            }
            let series = series_by_name(name, *order).map_err(|e| match e {
                crate::catalog::CatalogError::UnknownSeries(n) => CliError::Usage(format!(
                    "unknown series {n:?}; expected one of {}",
                    SERIES_NAMES.join(", ")
                )),
                other => CliError::Catalog(other),
            })?;
            write_out(out, &series.to_tsv())?;
            Ok(true)
        }
        Command::Errata { range, output } => {
            let opts = output.sweep_options();
            let reports = errata_specs()
                .iter()
                .map(|s| verify_range(s, range.lo, range.hi, opts))
                .collect::<Result<Vec<_>, _>>()?;
            finish(&reports, output, out)
        }
        Command::Consistency { order, output } => {
            let reports = catalog_consistency(*order)?;
            finish(&reports, output, out)
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
}

fn finish(
    reports: &[VerifyReport],
    output: &OutputArgs,
    out: &mut dyn Write,
) -> Result<bool, CliError> {
    let mut summary = String::new();
    for r in reports {
        summary.push_str(&r.to_string());
        summary.push('\n');
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    summary.push_str(&format!(
        "{} checked, {} passed, {} refuted\n",
        reports.len(),
        reports.len() - failed,
        failed
    ));
    write_out(out, &summary)?;
    if let Some(path) = &output.report {
        write_report(path, output.format, reports)?;
    }
    Ok(failed == 0)
}

/// Serializes `reports` as a JSON array or as CSV with a header row.
pub fn render_report(format: ReportFormat, reports: &[VerifyReport]) -> String {
    match format {
        ReportFormat::Json => {
            let values: Vec<_> = reports.iter().map(VerifyReport::to_json).collect();
            let mut s = serde_json::to_string_pretty(&values).expect("report json");
            s.push('\n');
            s
        }
        ReportFormat::Csv => {
            let mut s = String::from(VerifyReport::CSV_HEADER);
            s.push('\n');
            for r in reports {
                s.push_str(&r.to_csv_row());
                s.push('\n');
            }
            s
        }
    }
}

fn write_report(
    path: &Path,
    format: ReportFormat,
    reports: &[VerifyReport],
) -> Result<(), CliError> {
    fs::write(path, render_report(format, reports)).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
