use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use humbert_core::asym::ExpansionVariant;
use humbert_core::C64;
use humbert_verify::config::resolve;
use humbert_verify::crosscheck::cmd_crosscheck;
use humbert_verify::error::{VerifyError, VerifyResult};
use humbert_verify::evaluate::{eval_pfq, eval_psi1, format_result, Psi1Route};
use humbert_verify::parse::{parse_complex, parse_complex_list, parse_real_list};
use humbert_verify::sweep::{cmd_sweep, SweepParams, SweepSpec};
use humbert_verify::table::{cmd_table, TableId, TableSpec};

#[derive(Parser)]
#[command(name = "humbert-verify", version, about = "Numerical verification of Ψ₁ and hypergeometric expansions")]
struct Cli {
    /// Relative tolerance for series and quadrature.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Term limit for every series.
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    /// JSON file with series controls and dispatch thresholds.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ratio of Ψ₁ to its leading approximant along y = γ(1 - x).
    Table {
        /// Table number, 1 or 2.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
        id: u32,
        /// Comma-separated abscissae; the reference ones by default.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Error of a truncated expansion against a direct sum as the large
    /// parameter grows.
    Sweep {
        /// large-lambda, minus-n, pfq-all-down, pfp-one-down, f22-a-down or
        /// f22-both-down.
        #[arg(long)]
        target: String,
        /// Comma-separated truncation orders.
        #[arg(long, default_value = "1,2,3")]
        orders: String,
        /// Comma-separated, increasing values of λ or n.
        #[arg(long)]
        scales: Option<String>,
        /// Comma-separated values of the parameter group a.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Comma-separated values of the parameter group b.
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Comma-separated values of the parameter group c.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        /// Comma-separated values of the parameter group d.
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
        /// Argument of the function.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<f64>,
    },
    /// Pairwise agreement of the Ψ₁ representations at random points.
    Crosscheck {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// Evaluates one function value.
    Eval {
        #[command(subcommand)]
        function: EvalFunction,
    },
}

#[derive(Subcommand)]
enum EvalFunction {
    /// Ψ₁[a, b; c, c'; x, y].
    Psi1 {
        #[arg(allow_hyphen_values = true, value_parser = parse_complex)]
        a: C64,
        #[arg(allow_hyphen_values = true, value_parser = parse_complex)]
        b: C64,
        #[arg(allow_hyphen_values = true, value_parser = parse_complex)]
        c: C64,
        #[arg(allow_hyphen_values = true, value_parser = parse_complex)]
        c_prime: C64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        x: C64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        y: C64,
        /// auto, double_series, single_series, integral, near_unit, large_x
        /// or kummer+<method>.
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// pFq[num; den; z].
    Pfq {
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        num: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        den: String,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        z: C64,
    },
}

fn usage(e: String) -> VerifyError {
    VerifyError::Usage(e)
}

fn sweep_spec(
    target: &str,
    orders: &str,
    scales: Option<&str>,
    groups: [Option<&str>; 4],
    z: Option<f64>,
) -> VerifyResult<SweepSpec> {
    let variant = ExpansionVariant::from_name(target).ok_or_else(|| usage(format!("unknown target '{target}'")))?;
    let orders = parse_real_list(orders)
        .map_err(usage)?
        .into_iter()
        .map(|v| {
            if v >= 1.0 && v.fract() == 0.0 {
                Ok(v as usize)
            } else {
                Err(usage(format!("order must be a positive integer, got {v}")))
            }
        })
        .collect::<VerifyResult<Vec<usize>>>()?;
    let scales = match scales {
        Some(s) => parse_real_list(s).map_err(usage)?,
        None if variant == ExpansionVariant::LargeLambda => vec![25.0, 50.0, 100.0, 200.0],
        None => vec![20.0, 40.0, 80.0, 160.0],
    };
    let mut params = SweepParams::default_for(variant);
    let [a, b, c, d] = groups;
    for (slot, given) in [(&mut params.a, a), (&mut params.b, b), (&mut params.c, c), (&mut params.d, d)] {
        if let Some(s) = given {
            *slot = parse_real_list(s).map_err(usage)?;
        }
    }
    if let Some(z) = z {
        params.z = z;
    }
    SweepSpec::new(variant, params, scales, orders)
}

fn run(cli: Cli) -> VerifyResult<()> {
    let cfg = resolve(cli.config.as_deref(), cli.tol, cli.max_terms)?;
    let mut buf: Vec<u8> = Vec::new();
    let outcome = match cli.command {
        Command::Table { id, x } => {
            let id = TableId::from_number(id).expect("clap restricts the range");
            let mut spec = TableSpec::new(id);
            if let Some(x) = x {
                spec = spec.with_x(parse_real_list(&x).map_err(usage)?);
            }
            cmd_table(&spec, &cfg, &mut buf)
        }
        Command::Sweep {
            target,
            orders,
            scales,
            a,
            b,
            c,
            d,
            z,
        } => {
            let groups = [a.as_deref(), b.as_deref(), c.as_deref(), d.as_deref()];
            let spec = sweep_spec(&target, &orders, scales.as_deref(), groups, z)?;
            cmd_sweep(&spec, &mut buf).map(|_| ())
        }
        Command::Crosscheck { seed, count } => cmd_crosscheck(seed, count, &cfg, &mut buf).map(|_| ()),
        Command::Eval { function } => {
            let r = match function {
                EvalFunction::Psi1 {
                    a,
                    b,
                    c,
                    c_prime,
                    x,
                    y,
                    method,
                } => {
                    let route = Psi1Route::parse(&method)?;
                    eval_psi1([a, b, c, c_prime], x, y, route, &cfg)?
                }
                EvalFunction::Pfq { num, den, z } => {
                    let num = parse_complex_list(&num).map_err(usage)?;
                    let den = parse_complex_list(&den).map_err(usage)?;
                    eval_pfq(&num, &den, z, &cfg)?
                }
            };
            writeln!(buf, "{}", format_result(&r))?;
            Ok(())
        }
    };
    // rows are written even when an acceptance check fails
    if !buf.is_empty() {
        match &cli.out {
            Some(path) => std::fs::write(path, &buf)?,
            None => std::io::stdout().write_all(&buf)?,
        }
    }
    outcome
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
