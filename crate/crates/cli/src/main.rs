//! `cyalg`: run the verification checks from the command line.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use cyalg::budget::Budget;
use cyalg::checks::{self, Options};
use cyalg::env::{self, EnvAlgebra, Kind};
use cyalg::oracle::{lr_multiplicity, MatrixRep};
use cyalg::{Error, Report};

#[derive(Parser)]
#[command(
    name = "cyalg",
    version,
    about = "Exact verification of a Calabi-Yau algebra, the sl(3) diagonal centraliser and its E6 symmetry"
)]
struct Cli {
    /// Print one JSON object per report instead of summary lines.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomised screens and differential tests.
    #[arg(long, global = true, default_value_t = checks::DEFAULT_SEED)]
    seed: u64,
    /// Memory limit in MB for heavy reductions.
    #[arg(long, global = true, value_name = "MB")]
    budget_mem: Option<u64>,
    /// Time limit in seconds for heavy reductions.
    #[arg(long, global = true, value_name = "S")]
    budget_time: Option<u64>,
    /// Directory for the E6 group cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Record wall time and peak memory in reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks.
    Verify {
        #[command(subcommand)]
        target: Target,
    },
    /// Hilbert-Poincaré series of the centraliser against its presentation.
    Series,
    /// Canonical text of a polarised trace in U(sl(3))⊗U(sl(3)), e.g. `1,1,2`.
    Trace { spec: String },
    /// Multiplicity of `m''` in `m ⊗ m'` for sl(3), weights as `m1,m2`.
    Lr {
        m: String,
        m_prime: String,
        target: String,
    },
}

#[derive(Subcommand)]
enum Target {
    /// Overlap resolution of every rewrite system and Hilbert counts.
    Pbw,
    /// Centrality of the Casimir with symbolic parameters.
    Omega,
    /// Cyclic derivatives of the potential and the PBW identity.
    Potential,
    /// Polarised traces commute with the diagonal action.
    Centraliser,
    /// The reduction identity for T^(1,1,2,2,1,2).
    TraceReduction,
    /// The algebra relations for X, Y, Z in U(sl(3))⊗U(sl(3)).
    Phi,
    /// The Casimir image identity.
    OmegaImage {
        #[arg(long, value_enum, default_value_t = Mode::Oracle)]
        mode: Mode,
    },
    /// The twelve parameter automorphisms.
    Aut0,
    /// Weyl group of E6 and the invariants.
    E6 {
        #[arg(value_enum)]
        part: Option<E6Part>,
    },
    /// Heun-type realisations in the Racah and Hahn algebras.
    Heun {
        #[arg(value_enum)]
        algebra: Option<HeunAlgebra>,
    },
    /// Normal forms against independent evaluation.
    Differential,
    /// Every check; symbolic Ω image only with `--mode symbolic`.
    All {
        #[arg(long, value_enum, default_value_t = Mode::Oracle)]
        mode: Mode,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Oracle,
    Symbolic,
}

#[derive(Clone, Copy, ValueEnum)]
enum E6Part {
    Group,
    Roots,
    Invariants,
    Theorem53,
    Invariance,
}

#[derive(Clone, Copy, ValueEnum)]
enum HeunAlgebra {
    Racah,
    Hahn,
}

fn check_names(target: &Target) -> Vec<&'static str> {
    match target {
        Target::Pbw => vec!["pbw"],
        Target::Omega => vec!["omega"],
        Target::Potential => vec!["potential"],
        Target::Centraliser => vec!["centraliser"],
        Target::TraceReduction => vec!["trace-reduction"],
        Target::Phi => vec!["phi"],
        Target::OmegaImage { .. } => vec!["omega-image"],
        Target::Aut0 => vec!["aut0"],
        Target::E6 { part } => match part {
            None => vec![
                "e6-roots",
                "e6-group",
                "e6-invariants",
                "e6-theorem",
                "e6-invariance",
            ],
            Some(E6Part::Group) => vec!["e6-group"],
            Some(E6Part::Roots) => vec!["e6-roots"],
            Some(E6Part::Invariants) => vec!["e6-invariants"],
            Some(E6Part::Theorem53) => vec!["e6-theorem"],
            Some(E6Part::Invariance) => vec!["e6-invariance"],
        },
        Target::Heun { algebra } => match algebra {
            None => vec!["heun-racah", "heun-hahn"],
            Some(HeunAlgebra::Racah) => vec!["heun-racah"],
            Some(HeunAlgebra::Hahn) => vec!["heun-hahn"],
        },
        Target::Differential => vec!["differential"],
        Target::All { .. } => checks::CHECK_NAMES.to_vec(),
    }
}

fn emit(r: &Report, json: bool) {
    if json {
        println!("{}", serde_json::to_string(r).expect("reports serialise"));
    } else {
        println!("{}", r.summary_line());
    }
}

fn fail_exit(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        Error::Usage(_) | Error::Parse(_) => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn verify(cli: &Cli, target: &Target) -> ExitCode {
    let symbolic = matches!(
        target,
        Target::OmegaImage {
            mode: Mode::Symbolic
        } | Target::All {
            mode: Mode::Symbolic
        }
    );
    let budget = (cli.budget_mem.is_some() || cli.budget_time.is_some())
        .then(|| Budget::new(cli.budget_time.map(Duration::from_secs), cli.budget_mem));
    let opts = Options {
        seed: cli.seed,
        symbolic,
        budget,
        cache_dir: cli.cache_dir.clone(),
    };
    let mut all_pass = true;
    for name in check_names(target) {
        let start = Instant::now();
        let reports = match checks::run_check(name, &opts) {
            Ok(r) => r,
            Err(Error::Budget(msg)) => vec![Report::fail(name, format!("budget exceeded: {msg}"))],
            Err(e) => return fail_exit(e),
        };
        for mut r in reports {
            if cli.timing {
                r = r.timed(start);
            }
            all_pass &= r.passed();
            emit(&r, cli.json);
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn parse_weight(s: &str) -> Result<(i64, i64), Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(x), Ok(y)) => Ok((x, y)),
            _ => Err(Error::Usage(format!("weight `{s}` is not two integers"))),
        },
        _ => Err(Error::Usage(format!("weight `{s}` should look like `2,1`"))),
    }
}

fn trace(spec: &str) -> Result<String, Error> {
    let idx: Vec<usize> = spec
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Usage(format!("bad trace index `{x}`")))
        })
        .collect::<Result<_, _>>()?;
    let e = env::sl3_squared()?;
    if idx.is_empty() || idx.iter().any(|&a| a == 0 || a > e.l) {
        return Err(Error::Usage(format!(
            "trace indices must be in 1..={}",
            e.l
        )));
    }
    let t = e.polarised_trace(&idx)?;
    Ok(e.sys.to_text(&t))
}

fn lr(m: &str, mp: &str, target: &str) -> Result<usize, Error> {
    let e = EnvAlgebra::new(3, 2, Kind::Sl)?;
    let r1 = MatrixRep::standard(&e, parse_weight(m)?)?;
    let r2 = MatrixRep::standard(&e, parse_weight(mp)?)?;
    lr_multiplicity(&e, &r1, &r2, parse_weight(target)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify { target } => verify(&cli, target),
        Command::Series => {
            let r = env::series_consistency();
            emit(&r, cli.json);
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Trace { spec } => match trace(spec) {
            Ok(t) => {
                if cli.json {
                    println!("{}", serde_json::json!({ "trace": spec, "text": t }));
                } else {
                    println!("{t}");
                }
                ExitCode::SUCCESS
            }
            Err(e) => fail_exit(e),
        },
        Command::Lr { m, m_prime, target } => match lr(m, m_prime, target) {
            Ok(n) => {
                if cli.json {
                    println!(
                        "{}",
                        serde_json::json!({ "m": m, "m_prime": m_prime, "target": target, "multiplicity": n })
                    );
                } else {
                    println!("{n}");
                }
                ExitCode::SUCCESS
            }
            Err(e) => fail_exit(e),
        },
    }
}
