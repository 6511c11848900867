//! `skein`: exact computations in the Kauffman skein algebra of the torus.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage or input errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use skein_cli::eval::{evaluate, Value};
use skein_cli::expr::{parse, Context};
use skein_cli::suite::{run_suite, Limits};
use skein_core::annulus::{meridian_eigenvalue, project_empty, Partition};
use skein_core::bracket::{cheb, phi_map, ChebKind};
use skein_core::torus::Certificate;

#[derive(Parser)]
#[command(name = "skein", version, about = "Kauffman skein algebra of the torus")]
struct Cli {
    /// Output format for results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a torus-algebra expression.
    Nf { expr: String },
    /// Commutator of two generators, e.g. `skein comm 1,0 0,2`.
    Comm { x: String, y: String },
    /// Build and validate a certificate that a pair of curves commutes as
    /// the presentation prescribes.
    Certify {
        x: String,
        y: String,
        /// Emit the full certificate tree in the given format.
        #[arg(long, value_parser = ["json"])]
        emit: Option<String>,
    },
    /// Project the curve D[(a,b)] onto the empty link of the annulus.
    Project { a: i64, b: i64 },
    /// Meridian eigenvalue of a partition, e.g. `skein eig 3,2,1`.
    Eig { partition: Option<String> },
    /// Chebyshev polynomial of the first (T) or second-like (S) kind.
    Cheb {
        n: u32,
        #[arg(long, value_enum, default_value_t = ChebArg::T)]
        kind: ChebArg,
    },
    /// Map a torus expression into the Kauffman bracket algebra.
    MapBracket { expr: String },
    /// Run a deterministic verification suite.
    Verify {
        #[arg(long, value_parser = ["field", "torus", "certificates", "annulus", "bmw2", "bracket", "all"])]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 4)]
        coord_bound: i64,
        #[arg(long, default_value_t = 20)]
        max_det: i64,
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        /// Print per-check timings to stderr.
        #[arg(long, default_value_t = false)]
        timings: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChebArg {
    T,
    S,
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected a pair like `1,0`, got `{s}`"));
    }
    let a = parts[0].trim().parse().map_err(|_| format!("bad integer in `{s}`"))?;
    let b = parts[1].trim().parse().map_err(|_| format!("bad integer in `{s}`"))?;
    Ok((a, b))
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<u32>, _> = trimmed.split(',').map(|p| p.trim().parse()).collect();
    let parts = parts.map_err(|_| format!("bad partition `{s}`"))?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn eval_command(src: &str, ctx: Context, format: Format) -> Result<String, String> {
    let ast = parse(src).map_err(|e| e.to_string())?;
    let value = evaluate(&ast, ctx).map_err(|e| e.to_string())?;
    let value = value.into_element(ctx);
    Ok(match format {
        Format::Text => value.render(),
        Format::Json => value.to_json().to_string(),
    })
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Nf { expr } => {
            println!("{}", eval_command(&expr, Context::Torus, cli.format)?);
        }
        Command::Comm { x, y } => {
            let (a, b) = parse_pair(&x)?;
            let (c, d) = parse_pair(&y)?;
            let src = format!("D[{a},{b}]*D[{c},{d}] - D[{c},{d}]*D[{a},{b}]");
            println!("{}", eval_command(&src, Context::Torus, cli.format)?);
        }
        Command::Certify { x, y, emit } => {
            let x = parse_pair(&x)?;
            let y = parse_pair(&y)?;
            let cert = Certificate::build(x, y).map_err(|e| e.to_string())?;
            cert.validate().map_err(|e| e.to_string())?;
            if emit.as_deref() == Some("json") || cli.format == Format::Json {
                println!("{}", cert.to_json());
            } else {
                println!(
                    "valid certificate for ({},{}) and ({},{}): depth {}, {} nodes",
                    x.0,
                    x.1,
                    y.0,
                    y.1,
                    cert.depth(),
                    cert.node_count()
                );
            }
        }
        Command::Project { a, b } => {
            let e = project_empty((a, b)).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => println!("{e}"),
                Format::Json => println!("{}", e.to_json()),
            }
        }
        Command::Eig { partition } => {
            let lam = parse_partition(partition.as_deref().unwrap_or(""))?;
            let value = meridian_eigenvalue(&lam);
            match cli.format {
                Format::Text => println!("{value}"),
                Format::Json => println!("{}", value.to_json()),
            }
        }
        Command::Cheb { n, kind } => {
            let kind = match kind {
                ChebArg::T => ChebKind::T,
                ChebArg::S => ChebKind::S,
            };
            println!("{}", cheb(n, kind));
        }
        Command::MapBracket { expr } => {
            let ast = parse(&expr).map_err(|e| e.to_string())?;
            let value = evaluate(&ast, Context::Torus).map_err(|e| e.to_string())?;
            let p = match value.into_element(Context::Torus) {
                Value::Skein(p) => p,
                _ => unreachable!("torus evaluation promotes to a torus element"),
            };
            let image = phi_map(&p).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => println!("{image}"),
                Format::Json => println!("{}", image.to_json()),
            }
        }
        Command::Verify {
            suite,
            seed,
            samples,
            coord_bound,
            max_det,
            n_max,
            timings,
        } => {
            let limits = Limits {
                seed,
                samples,
                coord_bound,
                max_det,
                n_max,
            };
            let report = run_suite(&suite, limits).ok_or_else(|| format!("unknown suite `{suite}`"))?;
            match cli.format {
                Format::Text => print!("{}", report.render_text()),
                Format::Json => println!("{}", report.render_json()),
            }
            if timings {
                eprint!("{}", report.render_timings());
            }
            if !report.ok() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
