//! `famalg`: exact family-algebra computations from the command line.

mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use famalg_core::expr::{parse_any, Parsed};
use famalg_core::family::Family;
use famalg_core::matpoly::MatPoly;
use famalg_core::suites::{SuiteOptions, SuiteRunner, ALL_SUITES};

use config::LoadedSpec;
use report::{Report, ReportResult};

#[derive(Parser)]
#[command(
    name = "famalg",
    about = "Exact kernel for classical and quantum family algebras",
    long_about = "Computes in End(V) (x) S(g) and End(V) (x) U_t(g) over exact rationals: \
                  invariant bases, Poisson brackets, PBW star products, nabla and Chern \
                  operators, and zero-residual identity suites."
)]
struct Cli {
    /// Algebra/representation spec file (TOML)
    #[arg(long, global = true, conflicts_with = "preset")]
    spec: Option<PathBuf>,

    /// Algebra preset: sl2 | heisenberg3 | affine2 | abelian(n)
    #[arg(long, global = true)]
    preset: Option<String>,

    /// Representation preset: trivial | standard | adjoint
    #[arg(long, global = true, default_value = "standard")]
    rep: String,

    /// Write the machine-readable JSON report to this file
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the algebra axioms and the representation relations
    Check,
    /// Exact basis of the classical invariants up to a degree bound
    Invariants {
        #[arg(long, default_value_t = 2)]
        degree: u32,
    },
    /// Star product a *_t b (full t-expansion, or one coefficient)
    Star {
        a: String,
        b: String,
        /// Only the coefficient of t^k
        #[arg(long)]
        order: Option<usize>,
    },
    /// Poisson bracket {a, b} (noncommutative bracket on matrices)
    Poisson { a: String, b: String },
    /// Apply nabla (matrix argument, or a scalar embedded as Id (x) a)
    Nabla { a: String },
    /// Apply nabla' (the left-multiplied variant)
    #[command(name = "nabla-prime")]
    NablaPrime { a: String },
    /// Apply the first Chern class
    C1 { a: String },
    /// Entrywise PBW symmetrization into End(V) (x) U_t(g)
    Fpbw { a: String },
    /// Run one identity suite by name, or `all`
    Suite {
        /// Suite id (see the README for the list) or `all`
        name: String,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Max tuples per check (full enumeration below this)
        #[arg(long, default_value_t = 2000)]
        budget: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(cli: &Cli) -> Result<LoadedSpec, String> {
    match (&cli.spec, &cli.preset) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            config::parse_spec(&text)
        }
        (None, Some(preset)) => config::load_preset(preset, &cli.rep),
        (None, None) => Err("give either --spec FILE or --preset NAME".to_string()),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    }
}

fn workers_from_env() -> usize {
    std::env::var("FAMALG_WORKERS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&w| w >= 1)
        .unwrap_or(1)
}

/// Returns whether every checked residual was zero (informational commands
/// count as all-zero).
fn run(cli: Cli) -> Result<bool, String> {
    let spec = load(&cli)?;
    let names = spec.lie.names().to_vec();
    let fam = Arc::new(Family::new(spec.lie.clone(), spec.rep.clone()));

    let (result, all_zero) = match &cli.command {
        Command::Check => {
            // load() already rejects invalid specs; re-run for the record.
            let av = spec.lie.validate().violations;
            let rv = spec.rep.validate(&spec.lie).violations;
            let valid = av.is_empty() && rv.is_empty();
            (
                ReportResult::Check {
                    valid,
                    algebra_violations: av,
                    representation_violations: rv,
                },
                valid,
            )
        }
        Command::Invariants { degree } => {
            let basis = fam.invariant_basis(*degree);
            let elements: Vec<String> = basis.iter().map(|b| b.display(&names)).collect();
            (
                ReportResult::InvariantBasis {
                    degree: *degree,
                    dimension: basis.len(),
                    elements,
                },
                true,
            )
        }
        Command::Star { a, b, order } => {
            let (ma, mb) = parse_pair(&fam, a, b)?;
            let value = match (ma, mb) {
                (Parsed::Scalar(pa), Parsed::Scalar(pb)) => match order {
                    Some(k) => fam.star_coefficient(&pa, &pb, *k).display(&names),
                    None => fam.star(&pa, &pb).display(&names),
                },
                (Parsed::Matrix(xa), Parsed::Matrix(xb)) => match order {
                    Some(k) => fam.mat_star_coefficient(&xa, &xb, *k).display(&names),
                    None => fam.mat_star(&xa, &xb).display(&names),
                },
                _ => unreachable!("parse_pair unifies kinds"),
            };
            (expression_result("star", &[a, b], value), true)
        }
        Command::Poisson { a, b } => {
            let (ma, mb) = parse_pair(&fam, a, b)?;
            let value = match (ma, mb) {
                (Parsed::Scalar(pa), Parsed::Scalar(pb)) => {
                    fam.lie().poisson(&pa, &pb).display(&names)
                }
                (Parsed::Matrix(xa), Parsed::Matrix(xb)) => {
                    fam.nc_poisson(&xa, &xb).display(&names)
                }
                _ => unreachable!("parse_pair unifies kinds"),
            };
            (expression_result("poisson", &[a, b], value), true)
        }
        Command::Nabla { a } => {
            let m = parse_matrix_arg(&fam, a, true)?;
            (
                expression_result("nabla", &[a], fam.nabla(&m).display(&names)),
                true,
            )
        }
        Command::NablaPrime { a } => {
            let m = parse_matrix_arg(&fam, a, true)?;
            (
                expression_result("nabla_prime", &[a], fam.nabla_prime(&m).display(&names)),
                true,
            )
        }
        Command::C1 { a } => {
            let m = parse_matrix_arg(&fam, a, false)?;
            (
                expression_result("c1", &[a], fam.chern_c1(&m).display(&names)),
                true,
            )
        }
        Command::Fpbw { a } => {
            let m = parse_matrix_arg(&fam, a, false)?;
            (
                expression_result("fpbw", &[a], fam.fpbw(&m).display(&names)),
                true,
            )
        }
        Command::Suite {
            name,
            degree,
            seed,
            budget,
        } => {
            if *budget == 0 {
                return Err("--budget must be at least 1".to_string());
            }
            let opts = SuiteOptions {
                degree: *degree,
                seed: *seed,
                budget: *budget,
                workers: workers_from_env(),
            };
            let runner = SuiteRunner::new(fam.clone(), &spec.algebra_label, &spec.rep_label);
            let reports = if name == "all" {
                runner.run_all(&opts).map_err(|e| e.to_string())?
            } else {
                if !ALL_SUITES.contains(&name.as_str()) {
                    return Err(format!(
                        "unknown suite `{name}`; expected one of: {}, or all",
                        ALL_SUITES.join(", ")
                    ));
                }
                vec![runner.run(name, &opts).map_err(|e| e.to_string())?]
            };
            let all_zero = reports.iter().all(|r| r.all_zero);
            (ReportResult::Suites { all_zero, reports }, all_zero)
        }
    };

    let report = Report::new(
        command_name(&cli.command),
        &spec.algebra_label,
        &spec.rep_label,
        result,
    );
    print!("{}", report.render_text());
    if let Some(path) = &cli.out {
        let json = serde_json::to_string_pretty(&report)
            .map_err(|e| format!("serialization failed: {e}"))?;
        std::fs::write(path, json.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(all_zero)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check => "check",
        Command::Invariants { .. } => "invariants",
        Command::Star { .. } => "star",
        Command::Poisson { .. } => "poisson",
        Command::Nabla { .. } => "nabla",
        Command::NablaPrime { .. } => "nabla-prime",
        Command::C1 { .. } => "c1",
        Command::Fpbw { .. } => "fpbw",
        Command::Suite { .. } => "suite",
    }
}

fn expression_result(op: &str, inputs: &[&String], value: String) -> ReportResult {
    ReportResult::Expression {
        operation: op.to_string(),
        inputs: inputs.iter().map(|s| s.to_string()).collect(),
        value,
    }
}

/// Parse two expressions and unify their kinds: a scalar paired with a
/// matrix is embedded as `Id (x) a` at the matrix dimension.
fn parse_pair(fam: &Family, a: &str, b: &str) -> Result<(Parsed, Parsed), String> {
    let pa = parse_any(fam.lie(), a).map_err(|e| e.to_string())?;
    let pb = parse_any(fam.lie(), b).map_err(|e| e.to_string())?;
    Ok(match (pa, pb) {
        (Parsed::Scalar(x), Parsed::Matrix(m)) => {
            let d = m.dim();
            (Parsed::Matrix(MatPoly::scalar(d, &x)), Parsed::Matrix(m))
        }
        (Parsed::Matrix(m), Parsed::Scalar(x)) => {
            let d = m.dim();
            (Parsed::Matrix(m), Parsed::Matrix(MatPoly::scalar(d, &x)))
        }
        (x, y) => {
            if let (Parsed::Matrix(ma), Parsed::Matrix(mb)) = (&x, &y) {
                if ma.dim() != mb.dim() {
                    return Err(format!(
                        "matrix dimensions differ: {} vs {}",
                        ma.dim(),
                        mb.dim()
                    ));
                }
            }
            (x, y)
        }
    })
}

/// Parse one expression as a matrix; scalars embed as `Id (x) a` at the
/// representation dimension. Operators using `tau` require the matrix size
/// to match the representation.
fn parse_matrix_arg(fam: &Family, text: &str, needs_rep: bool) -> Result<MatPoly, String> {
    let m = match parse_any(fam.lie(), text).map_err(|e| e.to_string())? {
        Parsed::Matrix(m) => m,
        Parsed::Scalar(x) => MatPoly::scalar(fam.mat_dim(), &x),
    };
    if needs_rep && m.dim() != fam.mat_dim() {
        return Err(format!(
            "matrix dimension {} does not match the representation dimension {}",
            m.dim(),
            fam.mat_dim()
        ));
    }
    Ok(m)
}
