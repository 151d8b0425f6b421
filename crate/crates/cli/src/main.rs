mod args;
mod render;

use args::{Cli, Command, Format, MapArgs, SweepArgs};
use clap::Parser;
use monocurve_core::invariants::InvariantError;
use monocurve_core::sweep;
use monocurve_core::{
    cross_check, full_report, is_ci_presentable, CheckReport, ConsistentPlaneMap, InvariantReport,
    ModelError, MonomialCurve, NumericalSemigroup, SemigroupError, SweepConfig, SweepError,
    SweepFailure, SweepSummary,
};
use render::RenderError;
use serde::Serialize;
use serde_json::Value;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Sweep(#[from] SweepError),
    #[error("expected exactly two degrees L1,L2, got {0}")]
    BadDegrees(usize),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    fn name(&self) -> &'static str {
        match self {
            CliError::Semigroup(e) => e.name(),
            CliError::Model(e) => e.name(),
            CliError::Invariant(e) => e.name(),
            CliError::Sweep(e) => e.name(),
            CliError::BadDegrees(_) => "BadDegrees",
            CliError::Render(_) => "Render",
            CliError::Io { .. } => "Io",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            // A violated identity among the formulas is a verified mismatch,
            // not bad input.
            CliError::Invariant(_) => EXIT_MISMATCH,
            CliError::Render(_) | CliError::Io { .. } => 1,
            _ => EXIT_INPUT,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Render(e.into())
    }
}

const EXIT_INPUT: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

/// Rendered output and whether every check in it passed.
struct Output {
    text: String,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Semigroup { gens } => semigroup(gens, cli.format),
        Command::Invariants { map, oracle } => invariants(map, *oracle, cli.format),
        Command::Verify { map } => verify(map, cli.format),
        Command::Sweep(args) => run_sweep(args, cli.format),
    };
    let result = result.and_then(|out| {
        emit(cli.out.as_deref(), &out.text)?;
        Ok(out.pass)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_MISMATCH),
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

#[derive(Serialize)]
struct SemigroupFacts {
    generators: Vec<u32>,
    gaps: Vec<u32>,
    frobenius: i64,
    conductor: u32,
    genus: u32,
    symmetric: bool,
    ci_presentable: bool,
}

fn semigroup(gens: &[u32], format: Format) -> Result<Output, CliError> {
    let sg = NumericalSemigroup::from_generators(gens)?;
    let facts = SemigroupFacts {
        generators: gens.to_vec(),
        gaps: sg.gaps().to_vec(),
        frobenius: sg.frobenius(),
        conductor: sg.conductor(),
        genus: sg.genus(),
        symmetric: sg.is_symmetric(),
        ci_presentable: is_ci_presentable(gens)?,
    };
    let text = match format {
        Format::Json => render::json(&facts)?,
        Format::Csv => render::csv(&[facts])?,
        Format::Table => render::key_values(&facts)?,
    };
    Ok(Output { text, pass: true })
}

fn build_map(args: &MapArgs) -> Result<ConsistentPlaneMap, CliError> {
    let &[l1, l2] = args.degrees.as_slice() else {
        return Err(CliError::BadDegrees(args.degrees.len()));
    };
    let curve = if args.strict {
        MonomialCurve::new_strict(&args.weights)?
    } else {
        MonomialCurve::new(&args.weights)?
    };
    if let Some(degrees) = &args.equation_degrees {
        curve.check_equation_degrees(degrees)?;
    }
    Ok(ConsistentPlaneMap::new(curve, l1, l2)?)
}

#[derive(Serialize)]
struct InvariantOutput {
    #[serde(flatten)]
    report: InvariantReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<CheckReport>,
}

fn invariants(args: &MapArgs, with_oracle: bool, format: Format) -> Result<Output, CliError> {
    let m = build_map(args)?;
    let out = InvariantOutput {
        report: full_report(&m)?,
        oracle: with_oracle.then(|| cross_check(&m)),
    };
    let pass = out.oracle.as_ref().is_none_or(CheckReport::all_pass);
    let text = match format {
        Format::Json => render::json(&out)?,
        Format::Csv => render::csv(&[&out])?,
        Format::Table => {
            let mut s = render::key_values(&out.report)?;
            if let Some(check) = &out.oracle {
                s.push('\n');
                s += &check_table(check);
            }
            s
        }
    };
    Ok(Output { text, pass })
}

fn check_table(check: &CheckReport) -> String {
    let verdict = |ok: bool| if ok { "pass" } else { "FAIL" }.to_string();
    let rows: Vec<Vec<String>> = check
        .identities
        .iter()
        .map(|c| {
            vec![
                c.name.to_string(),
                c.formula.to_string(),
                c.oracle.to_string(),
                verdict(c.pass),
            ]
        })
        .collect();
    let mut s = render::table(&["identity", "formula", "oracle", "result"], &rows);
    for c in &check.containments {
        s += &format!("containment {}: {}\n", c.name, verdict(c.holds));
    }
    s += &format!("{}/{} pass\n", check.passed(), check.identities.len());
    s
}

fn verify(args: &MapArgs, format: Format) -> Result<Output, CliError> {
    let m = build_map(args)?;
    let check = cross_check(&m);
    let pass = check.all_pass();
    let text = match format {
        Format::Json => {
            let containments = render::object(
                check
                    .containments
                    .iter()
                    .map(|c| (c.name.to_string(), Value::Bool(c.holds))),
            );
            let v = serde_json::json!({
                "weights": m.curve().weights(),
                "l1": m.l1(),
                "l2": m.l2(),
                "passed": check.passed(),
                "total": check.identities.len(),
                "identities": check,
                "containments": containments,
            });
            render::json(&v)?
        }
        Format::Csv => render::csv(&check.identities.iter().map(|c| {
            serde_json::json!({"identity": c.name, "formula": c.formula, "oracle": c.oracle, "pass": c.pass})
        }).collect::<Vec<_>>())?,
        Format::Table => check_table(&check),
    };
    Ok(Output { text, pass })
}

fn run_sweep(args: &SweepArgs, format: Format) -> Result<Output, CliError> {
    let config = SweepConfig {
        max_weight: args.max_weight,
        max_degree: args.max_degree,
        max_ambient_dim: args.max_ambient_dim,
        require_ci: args.require_ci,
        parallelism: args.parallelism,
    };
    let outcome = sweep::run(&config)?;
    let pass = outcome.all_pass();
    let text = match format {
        Format::Json => render::json(&outcome)?,
        Format::Csv => render::csv(&outcome.records)?,
        Format::Table => sweep_table(&outcome.summary, &outcome.failures),
    };
    Ok(Output { text, pass })
}

fn sweep_table(summary: &SweepSummary, failures: &[SweepFailure]) -> String {
    let mut s = format!(
        "curves     {}\ninstances  {}\npassed     {}\nfailures   {}\n",
        summary.curves, summary.instances, summary.passed, summary.failures
    );
    if !failures.is_empty() {
        let rows: Vec<Vec<String>> = failures
            .iter()
            .map(|f| {
                let weights: Vec<String> = f.weights.iter().map(u32::to_string).collect();
                vec![
                    weights.join(","),
                    format!("{},{}", f.l1, f.l2),
                    f.reason.clone(),
                ]
            })
            .collect();
        s.push('\n');
        s += &render::table(&["weights", "degrees", "reason"], &rows);
    }
    s
}
