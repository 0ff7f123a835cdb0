//! Command-line front end. [`run`] parses arguments, dispatches, and writes
//! the payload to `out` and diagnostics to `err`, returning the exit code:
//! 0 on success, 1 on a domain error, 2 on a usage or parse error.
//!
//! Output formats are `pretty` (default), `json` (alias `json-records`),
//! `tsv` (for `search`) and `dot` (for `web`). JSON output is one object with
//! `"schema_version": "1"`; all numbers in it are decimal strings.

mod args;
mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::geometry::{DivisorPieces, LedgerStep, WeightedPlane};
pub use args::List;
use args::{
    parse_divisor, parse_list_arg, parse_pair, parse_plane, parse_range, parse_term, parse_triple, parse_tuple,
};

#[derive(Parser, Debug)]
#[command(name = "graded-rings", version, about = "Graded rings of Calabi-Yau threefold orbifolds")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Pretty)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Pretty,
    #[value(alias = "json-records")]
    Json,
    Tsv,
    Dot,
}

#[derive(Args, Debug, Clone)]
pub struct SeriesArgs {
    /// h^0(A).
    #[arg(long)]
    pub p1: u32,
    /// h^0(2A).
    #[arg(long)]
    pub p2: u32,
    /// Basket such as "4x1/3(1,1,1),1x1/5(1,1,3)"; empty for none.
    #[arg(long, default_value = "")]
    pub basket: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Assemble the Hilbert series from orbifold Riemann-Roch data.
    Rr {
        #[command(flatten)]
        series: SeriesArgs,
        /// Print coefficients of t^0..t^N.
        #[arg(long)]
        expand: Option<usize>,
    },
    /// Recognise the assembled series as a weighted embedding.
    Recognize {
        #[command(flatten)]
        series: SeriesArgs,
        /// Hint weights cleared first, e.g. "3,3"; disables the automatic retry ladder.
        #[arg(long, value_parser = parse_list_arg)]
        hints: Option<List>,
        #[arg(long, default_value_t = 10)]
        max_weights: usize,
        /// Expansion order examined.
        #[arg(long, default_value_t = 80)]
        order: usize,
    },
    /// Analyse every (P1, P2, n, m) with basket n x 1/3(1,1,1) + m x 1/5(1,1,3).
    Search {
        #[arg(long, value_parser = parse_range)]
        p1: Option<RangeInclusive<u32>>,
        #[arg(long, value_parser = parse_range)]
        p2: Option<RangeInclusive<u32>>,
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<u32>>,
        #[arg(long, value_parser = parse_range)]
        m: Option<RangeInclusive<u32>>,
        /// Explicit tuple "P1,P2,n,m"; repeatable, replaces the ranges.
        #[arg(long = "tuple", value_parser = parse_tuple)]
        tuples: Vec<[u32; 4]>,
        #[arg(long, default_value_t = 10)]
        max_weights: usize,
    },
    /// Entry weights, Pfaffian degrees and numerator of a 5x5 degree matrix.
    Pfaffian {
        /// Upper triangle "b12,b13,b14,b15;b23,b24,b25;b34,b35;b45".
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
    },
    /// Check Tom and Jerry formats of a matrix file.
    Format {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatCheck::All)]
        check: FormatCheck,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
    },
    /// Node counts on divisors.
    Nodes {
        #[command(subcommand)]
        command: NodesCommand,
    },
    /// Hilbert series after unprojecting planes, optionally on top of a complete intersection.
    Unproject {
        /// "W1,W2,W3@S"; repeatable.
        #[arg(long = "term", value_parser = parse_term, required = true)]
        terms: Vec<(WeightedPlane, u32)>,
        /// Ambient weights of a complete intersection to start from.
        #[arg(long, value_parser = parse_list_arg)]
        ambient: Option<List>,
        /// Equation degrees of that complete intersection.
        #[arg(long, value_parser = parse_list_arg)]
        equations: Option<List>,
        /// Also write the numerator over prod (1 - t^w) for these weights.
        #[arg(long, value_parser = parse_list_arg)]
        over: Option<List>,
        /// Compare with the series of these orbifold data.
        #[arg(long)]
        p1: Option<u32>,
        #[arg(long)]
        p2: Option<u32>,
        #[arg(long)]
        basket: Option<String>,
        #[arg(long)]
        expand: Option<usize>,
    },
    /// Euler characteristic through nodes, blowups and contractions.
    Chi {
        /// Starting Euler characteristic.
        #[arg(long, allow_hyphen_values = true)]
        start: i64,
        /// "nodes:N", "crepant" or "contract"; repeatable, applied in order.
        #[arg(long = "step")]
        steps: Vec<LedgerStep>,
    },
    /// Projection graph of the realised families for fixed P1, P2.
    Web {
        #[arg(long, default_value_t = 3)]
        p1: u32,
        #[arg(long, default_value_t = 6)]
        p2: u32,
        #[arg(long, value_parser = parse_range, default_value = "0..6")]
        n: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range, default_value = "0..3")]
        m: RangeInclusive<u32>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatCheck {
    Tom,
    Jerry,
    All,
}

#[derive(Subcommand, Debug)]
pub enum NodesCommand {
    /// Weighted Bezout number d e / (w1 w2 w3).
    Bezout {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        e: u32,
        #[arg(long, value_parser = parse_plane, default_value = "1,1,1")]
        plane: WeightedPlane,
    },
    /// Length of the rank-drop locus of a 2x3 matrix with entry degrees r_i + c_j.
    Determinantal {
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true, default_value = "0,0")]
        rows: [i64; 2],
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        cols: [i64; 3],
        #[arg(long, value_parser = parse_plane, default_value = "1,1,1")]
        plane: WeightedPlane,
    },
    /// Nodes from complete-intersection pieces on each divisor.
    StandardChoice {
        /// "NAME:W1,W2,W3:DxE,DxE,..."; repeatable.
        #[arg(long = "divisor", value_parser = parse_divisor, required = true)]
        divisors: Vec<DivisorPieces>,
        /// Nodes lying on more than one divisor.
        #[arg(long, default_value_t = 0)]
        shared: i64,
    },
}

/// Failure of a command, mapped to the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

/// Output of a command in every format it supports.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub command: &'static str,
    pub fields: Map<String, Value>,
    pub pretty: String,
    pub tsv: Option<String>,
    pub dot: Option<String>,
    /// Set when the payload is complete but describes a domain failure.
    pub failure: Option<String>,
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::Pretty => Ok(self.pretty.clone()),
            OutputFormat::Json => {
                let mut doc = Map::new();
                doc.insert("schema_version".into(), "1".into());
                doc.insert("command".into(), self.command.into());
                doc.extend(self.fields.clone());
                let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("serialisable");
                s.push('\n');
                Ok(s)
            }
            OutputFormat::Tsv => {
                self.tsv.clone().ok_or_else(|| CliError::Usage(format!("`{}` has no tsv output", self.command)))
            }
            OutputFormat::Dot => {
                self.dot.clone().ok_or_else(|| CliError::Usage(format!("`{}` has no dot output", self.command)))
            }
        }
    }
}

/// Runs the command `cli`.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    commands::dispatch(&cli.command)
}

/// Parses `argv` (program name first), runs it and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    let rendered = execute(&cli).and_then(|r| r.render(cli.format).map(|s| (s, r.failure)));
    match rendered {
        Ok((text, failure)) => {
            let _ = out.write_all(text.as_bytes());
            match failure {
                Some(reason) => {
                    let _ = writeln!(err, "error: {reason}");
                    1
                }
                None => 0,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}
