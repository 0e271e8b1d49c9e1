//! Command-line front end: generate matrix truncations, run TP/STP and
//! sequence checks, execute registered statements, and export LDL
//! factorizations. Exit codes: 0 = everything holds, 1 = a failure or
//! counterexample was found, 2 = usage or resource error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use totpos::exactmat::{rat_from_str, rat_to_string, Rat};
use totpos::families::{build_matrix, MatrixFamilyId, MatrixShape, SequenceFamilyId};
use totpos::harness::{self, RunParams};
use totpos::tpkit::{
    check_stp, check_tp, is_pf_truncated, is_sm_truncated, CheckMethod, Sequence,
};
use totpos::Error;

#[derive(Parser)]
#[command(name = "totpos", version, about = "exact total-positivity toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family id: pascal, narayana-a, narayana-b, m-narayana,
    /// fuss-narayana-a, fuss-narayana-b, delannoy, eulerian
    #[arg(long)]
    family: String,
    /// Parameter m (required for m-narayana and fuss-narayana families)
    #[arg(long)]
    m: Option<u64>,
}

impl FamilyArgs {
    fn resolve(&self) -> totpos::Result<MatrixFamilyId> {
        MatrixFamilyId::parse(&self.family, self.m)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a matrix truncation as CSV or JSON
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        /// Shape: triangle, reversed, or square
        #[arg(long)]
        shape: String,
        #[arg(long)]
        size: usize,
        /// Output format: csv or json
        #[arg(long, default_value = "csv")]
        format: String,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a matrix truncation for total positivity
    Check {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        size: usize,
        /// Property: tp or stp
        #[arg(long)]
        property: String,
        /// Method: brute, fekete, or neville
        #[arg(long, default_value = "brute")]
        method: String,
        /// Cap on minor order for tp checks (default: full size)
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Check a sequence for the truncated PF or SM property
    Seq {
        /// Sequence id: factorial, factorial-shift-product, factorial-squared,
        /// inv-factorial, inv-factorial-shift-product, inv-factorial-squared,
        /// inv-pochhammer-factorial
        #[arg(long)]
        seq: String,
        /// Parameter t as an exact rational p/q (inv-pochhammer-factorial only)
        #[arg(long)]
        t: Option<String>,
        /// Test: pf or sm
        #[arg(long)]
        test: String,
        #[arg(long)]
        order: usize,
    },
    /// Run a registered statement (or the whole registry) and report
    Verify {
        /// Statement id; omit to run every registered statement
        #[arg(long)]
        statement: Option<String>,
        /// Restrict parameterized statements to these m values
        #[arg(long, value_delimiter = ',')]
        m: Option<Vec<u64>>,
        #[arg(long)]
        size: Option<usize>,
        /// Directory to write JSON reports into
        #[arg(long)]
        report: Option<PathBuf>,
        /// Plain-text config presetting size/m/t; flags override it
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Emit the exact LDL factorization of a symmetric square truncation
    Decomp {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        size: usize,
    },
}

/// Minimal `key = value` config: keys `size`, `m` (comma list), `t` (comma
/// list of rationals). Blank lines and `#` comments are ignored.
fn load_config(path: &PathBuf) -> totpos::Result<RunParams> {
    let text = std::fs::read_to_string(path)?;
    let mut params = RunParams::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Param(format!("config line {}: expected key = value", lineno + 1)))?;
        let value = value.trim();
        match key.trim() {
            "size" => {
                params.size = Some(value.parse().map_err(|_| {
                    Error::Param(format!("config line {}: bad size {value:?}", lineno + 1))
                })?);
            }
            "m" => {
                let ms = value
                    .split(',')
                    .map(|v| v.trim().parse::<u64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| {
                        Error::Param(format!("config line {}: bad m list {value:?}", lineno + 1))
                    })?;
                params.m_values = Some(ms);
            }
            "t" => {
                let ts = value
                    .split(',')
                    .map(rat_from_str)
                    .collect::<totpos::Result<Vec<Rat>>>()?;
                params.t_values = Some(ts);
            }
            other => {
                return Err(Error::Param(format!(
                    "config line {}: unknown key {other:?}",
                    lineno + 1
                )));
            }
        }
    }
    Ok(params)
}

fn emit(text: String, out: Option<PathBuf>) -> totpos::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(Into::into),
        None => {
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            Ok(())
        }
    }
}

/// Runs one subcommand; `Ok(true)` means the checked property holds.
fn run(cli: Cli) -> totpos::Result<bool> {
    match cli.command {
        Command::Gen { family, shape, size, format, out } => {
            let fam = family.resolve()?;
            let shape = MatrixShape::parse(&shape)?;
            let matrix = build_matrix(fam, shape, size)?;
            let text = match format.as_str() {
                "csv" => matrix.to_csv(),
                "json" => {
                    let rows: Vec<Vec<String>> = (0..matrix.rows())
                        .map(|r| (0..matrix.cols()).map(|c| rat_to_string(matrix.get(r, c))).collect())
                        .collect();
                    serde_json::to_string_pretty(&json!({
                        "family": fam.to_string(),
                        "shape": shape.to_string(),
                        "size": size,
                        "entries": rows,
                    }))
                    .expect("matrix serializes")
                }
                other => return Err(Error::Param(format!("unknown format {other:?}"))),
            };
            emit(text, out)?;
            Ok(true)
        }
        Command::Check { family, shape, size, property, method, max_order } => {
            let fam = family.resolve()?;
            let shape = MatrixShape::parse(&shape)?;
            let matrix = build_matrix(fam, shape, size)?;
            let method = CheckMethod::parse(&method)?;
            let verdict = match property.as_str() {
                "tp" => check_tp(&matrix, method, max_order.unwrap_or(size))?,
                "stp" => check_stp(&matrix, method)?,
                other => return Err(Error::Param(format!("unknown property {other:?}"))),
            };
            let witness = verdict.witness.as_ref().map(|w| {
                json!({
                    "rows": w.spec.rows(),
                    "cols": w.spec.cols(),
                    "value": rat_to_string(&w.value),
                })
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "family": fam.to_string(),
                    "shape": shape.to_string(),
                    "size": size,
                    "property": verdict.property,
                    "status": verdict.status,
                    "method": verdict.method,
                    "maxMinorOrder": verdict.max_minor_order,
                    "witness": witness,
                }))
                .expect("verdict serializes")
            );
            Ok(verdict.holds())
        }
        Command::Seq { seq, t, test, order } => {
            let t = t.as_deref().map(rat_from_str).transpose()?;
            let id = SequenceFamilyId::parse(&seq, t)?;
            let sequence: Sequence = id.into();
            let verdict = match test.as_str() {
                "pf" => is_pf_truncated(&sequence, order, order)?,
                "sm" => is_sm_truncated(&sequence, order)?,
                other => return Err(Error::Param(format!("unknown test {other:?}"))),
            };
            let witness = verdict.witness.as_ref().map(|w| {
                json!({
                    "offset": w.offset,
                    "rows": w.spec.rows(),
                    "cols": w.spec.cols(),
                    "value": rat_to_string(&w.value),
                })
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "sequence": sequence.label(),
                    "property": verdict.property,
                    "order": verdict.order,
                    "status": verdict.status,
                    "witness": witness,
                }))
                .expect("verdict serializes")
            );
            Ok(verdict.holds())
        }
        Command::Verify { statement, m, size, report, config } => {
            let mut params = match &config {
                Some(path) => load_config(path)?,
                None => RunParams::default(),
            };
            if size.is_some() {
                params.size = size;
            }
            if m.is_some() {
                params.m_values = m;
            }
            let reports = match statement.as_deref() {
                Some(id) => vec![harness::run_statement(id, &params)?],
                None => harness::run_all(&params)?,
            };
            if reports.iter().any(|r| r.any_resource_error) {
                for r in reports.iter().filter(|r| r.any_resource_error) {
                    eprintln!("resource error while running {}", r.statement_id);
                }
                return Err(Error::Resource("one or more sub-jobs were aborted".into()));
            }
            if let Some(dir) = report {
                harness::write_reports(&reports, &dir)?;
            }
            let mut all_pass = true;
            for r in &reports {
                println!("{}\t{}", r.statement_id, r.status);
                all_pass &= r.passed();
            }
            Ok(all_pass)
        }
        Command::Decomp { family, size } => {
            let fam = family.resolve()?;
            let v = harness::decomp_json(fam, size)?;
            let ok = v["reconstruction"]["status"] == "verified";
            println!("{}", serde_json::to_string_pretty(&v).expect("decomp serializes"));
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
