//! `gstar`: correction factors for standardized mean differences.
//!
//! Subcommands: `jfactor` (one correction value), `effect` (two-group effect
//! sizes from CSV), `table` (the six-row accuracy table), `sweep` (error
//! curves over an m grid as CSV/TSV/JSON-lines/SVG).
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain or numerical
//! error.

mod fmt;
mod input;
mod svg;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use gstar_core::{
    approx_value, hedges_g_star, min_valid_m, reference_table, summarize, sweep, ApproxKind,
    DegreesOfFreedom, Error as CoreError, ErrorRow, SweepConfig,
};

#[derive(Parser)]
#[command(name = "gstar", version, about = "Correction factors for standardized mean differences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the correction factor at a given m
    Jfactor {
        /// Degrees of freedom (> 1)
        #[arg(long)]
        m: f64,
        /// exact, hedges, or p1..p6
        #[arg(long, default_value = "exact", value_parser = parse_kind)]
        kind: ApproxKind,
    },
    /// Compute effect sizes from a two-group CSV file (header `group,value`)
    Effect {
        /// Input CSV path
        #[arg(long)]
        input: PathBuf,
        /// exact, hedges, or p1..p6
        #[arg(long, default_value = "exact", value_parser = parse_kind)]
        kind: ApproxKind,
        #[arg(long, value_enum, default_value_t = EffectFormat::Text)]
        format: EffectFormat,
    },
    /// Print the reference accuracy table (m = 10..200) as CSV
    Table,
    /// Absolute errors over an m grid, as CSV/TSV/JSON-lines or an SVG chart
    Sweep {
        #[arg(long)]
        start: f64,
        #[arg(long)]
        end: f64,
        #[arg(long)]
        step: f64,
        /// Comma-separated kinds (default: all of hedges,p1..p6)
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
        format: SweepFormat,
        /// Write to a file (atomically) instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum EffectFormat {
    Text,
    JsonLines,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum SweepFormat {
    Csv,
    Tsv,
    JsonLines,
    Svg,
}

fn parse_kind(s: &str) -> Result<ApproxKind, String> {
    s.parse()
}

/// CLI failure with its exit code: 1 for usage/parse, 2 for domain/numeric.
pub struct CliError {
    message: String,
    code: i32,
}

impl CliError {
    pub fn usage(message: String) -> Self {
        CliError { message, code: 1 }
    }

    pub fn domain(message: String) -> Self {
        CliError { message, code: 2 }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidSweepRange { .. } | CoreError::InvalidSweepKinds => {
                CliError::usage(e.to_string())
            }
            _ => CliError::domain(e.to_string()),
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not errors
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                std::process::exit(0);
            }
            let _ = e.print();
            std::process::exit(1);
        }
    };
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.message);
        std::process::exit(e.code);
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Jfactor { m, kind } => cmd_jfactor(m, kind),
        Command::Effect { input, kind, format } => cmd_effect(&input, kind, format),
        Command::Table => cmd_table(),
        Command::Sweep { start, end, step, kind, format, output } => {
            cmd_sweep(start, end, step, kind.as_deref(), format, output.as_deref())
        }
    }
}

fn cmd_jfactor(m: f64, kind: ApproxKind) -> Result<(), CliError> {
    // report the kind-specific domain edge even when m is below the general
    // m > 1 bound, so the message names the smallest usable m
    if let ApproxKind::Mortici(order) = kind {
        let min_m = min_valid_m(order)?;
        if min_m > 1.0 && m.is_finite() && m <= min_m {
            return Err(CliError::domain(format!(
                "radicand nonpositive; p{order} requires m > {min_m}"
            )));
        }
    }
    let dof = DegreesOfFreedom::new(m)?;
    let value = approx_value(kind, dof)?;
    println!("{}", fmt::sig17(value));
    Ok(())
}

fn cmd_effect(path: &Path, kind: ApproxKind, format: EffectFormat) -> Result<(), CliError> {
    let groups = input::read_groups(path)?;
    let gi = summarize(&groups.values_i)?;
    let gj = summarize(&groups.values_j)?;
    let r = hedges_g_star(&gi, &gj, kind)?;
    match format {
        EffectFormat::Text => {
            println!("mean_difference={}", fmt::sig17(r.mean_difference));
            println!("pooled_sd={}", fmt::sig17(r.pooled_sd));
            println!("cohens_d={}", fmt::sig17(r.cohens_d));
            println!("m={}", fmt::sig17(r.m));
            println!("correction_value={}", fmt::sig17(r.correction_value));
            println!("g_star={}", fmt::sig17(r.g_star));
        }
        EffectFormat::JsonLines => {
            println!(
                "{{\"mean_difference\":{},\"pooled_sd\":{},\"cohens_d\":{},\"m\":{},\"correction_value\":{},\"g_star\":{}}}",
                fmt::sig17(r.mean_difference),
                fmt::sig17(r.pooled_sd),
                fmt::sig17(r.cohens_d),
                fmt::sig17(r.m),
                fmt::sig17(r.correction_value),
                fmt::sig17(r.g_star),
            );
        }
    }
    Ok(())
}

fn cmd_table() -> Result<(), CliError> {
    let mut out = String::from("m,delta0,delta1,delta2,delta3,delta4,delta5,delta6\n");
    for row in reference_table() {
        out.push_str(&format_row(&row, ","));
        out.push('\n');
    }
    print!("{out}");
    Ok(())
}

fn format_row(row: &ErrorRow, sep: &str) -> String {
    let mut fields = vec![format!("{}", row.m)];
    fields.extend(row.deltas.iter().map(|&(_, d)| match d {
        Some(d) => fmt::sci6(d),
        None => String::new(),
    }));
    fields.join(sep)
}

fn cmd_sweep(
    start: f64,
    end: f64,
    step: f64,
    kind: Option<&str>,
    format: SweepFormat,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let kinds: Vec<ApproxKind> = match kind {
        None => ApproxKind::non_exact().to_vec(),
        Some(list) => list
            .split(',')
            .map(|s| s.trim().parse::<ApproxKind>().map_err(CliError::usage))
            .collect::<Result<_, _>>()?,
    };
    if kinds.contains(&ApproxKind::Exact) {
        return Err(CliError::usage(
            "sweep plots approximation errors; `exact` has none".into(),
        ));
    }
    let config = SweepConfig::new(start, end, step, kinds.clone())?;
    let rows = sweep(&config);

    let rendered = match format {
        SweepFormat::Csv => render_delimited(&rows, &kinds, ","),
        SweepFormat::Tsv => render_delimited(&rows, &kinds, "\t"),
        SweepFormat::JsonLines => render_json_lines(&rows, &kinds),
        SweepFormat::Svg => svg::render(&rows, &kinds),
    };
    write_output(output, rendered.as_bytes())
}

fn render_delimited(rows: &[ErrorRow], kinds: &[ApproxKind], sep: &str) -> String {
    let mut header = vec!["m".to_string()];
    header.extend(kinds.iter().map(|k| k.to_string()));
    let mut out = header.join(sep);
    out.push('\n');
    for row in rows {
        out.push_str(&format_row(row, sep));
        out.push('\n');
    }
    out
}

fn render_json_lines(rows: &[ErrorRow], kinds: &[ApproxKind]) -> String {
    let mut out = String::new();
    for row in rows {
        let mut fields = vec![format!("\"m\":{}", row.m)];
        for &kind in kinds {
            match row.delta(kind) {
                Some(d) => fields.push(format!("\"{kind}\":{}", fmt::sci6(d))),
                None => fields.push(format!("\"{kind}\":null")),
            }
        }
        out.push('{');
        out.push_str(&fields.join(","));
        out.push_str("}\n");
    }
    out
}

/// Whole-file atomic write: temp file in the destination directory, then
/// rename over the target.
fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        None => {
            std::io::stdout()
                .write_all(bytes)
                .map_err(|e| CliError::usage(format!("cannot write to stdout: {e}")))?;
        }
        Some(path) => {
            let mut tmp = path.as_os_str().to_owned();
            tmp.push(".tmp");
            let tmp = PathBuf::from(tmp);
            fs::write(&tmp, bytes)
                .map_err(|e| CliError::usage(format!("cannot write {}: {e}", tmp.display())))?;
            fs::rename(&tmp, path)
                .map_err(|e| CliError::usage(format!("cannot rename onto {}: {e}", path.display())))?;
        }
    }
    Ok(())
}
