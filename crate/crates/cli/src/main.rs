//! `pit`: identity tests and hitting sets for read-once ABPs and the circuit
//! classes that reduce to them.
//!
//! Verdict commands exit with 0 for ZERO, 1 for NONZERO and 2 on any error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use pit_core::diagonal::{blackbox_pit_diagonal, diagonal_to_roabp, DiagShape, DiagonalCircuit};
use pit_core::generator::GenParams;
use pit_core::linalg::Mat;
use pit_core::noncomm::{blackbox_pit_ncabp, NcAbp, NcShape};
use pit_core::pit::{
    blackbox_pit_roabp, bruteforce_pit, grid_search, schwartz_zippel, whitebox_pit_roabp, Exec,
    PitVerdict, RoabpShape,
};
use pit_core::roabp::{Roabp, SmAbp};
use pit_core::Field;

#[derive(Parser, Debug)]
#[command(
    name = "pit",
    version,
    about = "Deterministic identity testing for read-once ABPs"
)]
struct Cli {
    /// Worker threads for black-box scans; 0 uses every core.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test an ROABP file.
    RoabpTest {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Blackbox)]
        mode: Mode,
        #[command(flatten)]
        sz: SzArgs,
    },
    /// Kronecker-reduce a set-multilinear ABP file, then test it as an ROABP.
    SmabpTest {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Blackbox)]
        mode: Mode,
        #[command(flatten)]
        sz: SzArgs,
    },
    /// Test a non-commutative ABP file over staircase matrices.
    NcabpTest { file: PathBuf },
    /// Test a (semi-)diagonal circuit file.
    DiagTest {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = DiagMode::Blackbox)]
        mode: DiagMode,
    },
    /// Enumerate the hitting set for width r, depth D, individual degree < n.
    HittingSet {
        #[command(flatten)]
        params: GenArgs,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        limit: Option<u128>,
        #[arg(long, default_value_t = 0)]
        start: u128,
    },
    /// Evaluate the generator at a seed `alpha_0, .., alpha_d`.
    GenEval {
        #[command(flatten)]
        params: GenArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<u64>,
    },
}

#[derive(clap::Args, Debug)]
struct GenArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    r: usize,
    #[arg(long = "D")]
    depth: usize,
    #[arg(long)]
    n: usize,
}

#[derive(clap::Args, Debug)]
struct SzArgs {
    /// Random points for `--mode sz`.
    #[arg(long, default_value_t = 20)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    Blackbox,
    Whitebox,
    Brute,
    Sz,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DiagMode {
    Blackbox,
    Whitebox,
    Brute,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(&cli, &mut out) {
        Ok(code) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> Result<u8> {
    let exec = Exec::from_jobs(cli.jobs);
    match &cli.command {
        Command::RoabpTest { file, mode, sz } => {
            let a = Roabp::parse(&read(file)?)?;
            test_roabp(&a, *mode, sz, exec, out)
        }
        Command::SmabpTest { file, mode, sz } => {
            let a = SmAbp::parse(&read(file)?)?.to_roabp();
            test_roabp(&a, *mode, sz, exec, out)
        }
        Command::NcabpTest { file } => {
            let a = NcAbp::parse(&read(file)?)?;
            let shape = NcShape {
                nvars: a.nvars(),
                width: a.width(),
                depth: a.depth(),
            };
            let v = blackbox_pit_ncabp(*a.field(), shape, exec, |xs| {
                a.eval_matrices(xs).expect("staircase shape matches")
            })?;
            Ok(report_matrices(&v, out))
        }
        Command::DiagTest { file, mode } => {
            let c = DiagonalCircuit::parse(&read(file)?)?;
            let v = match mode {
                DiagMode::Blackbox => blackbox_pit_diagonal_file(&c, exec)?,
                DiagMode::Whitebox => whitebox_pit_roabp(&diagonal_to_roabp(&c)?),
                DiagMode::Brute => {
                    let side = (DiagShape::of(&c).roabp_degree() as u64).min(c.field().modulus());
                    grid_search(c.nvars(), side, exec, |x| c.eval(x).expect("arity matches"))?
                }
            };
            Ok(report(&v, out))
        }
        Command::HittingSet {
            params,
            count_only,
            limit,
            start,
        } => {
            let field = Field::new(params.p)?;
            let shape = RoabpShape {
                width: params.r,
                depth: params.depth,
                degree: params.n,
            };
            let hs = shape.hitting_set(field)?;
            if *count_only {
                writeln!(out, "{}", hs.count())?;
                return Ok(0);
            }
            for pt in hs.points(*start, limit.unwrap_or(u128::MAX)) {
                writeln!(out, "{}", join(&pt[..params.depth]))?;
            }
            Ok(0)
        }
        Command::GenEval { params, alpha } => {
            let field = Field::new(params.p)?;
            let g = GenParams::new(field, params.depth, params.n, params.r)?;
            writeln!(out, "{}", join(&g.gen_eval_all(alpha)?))?;
            Ok(0)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn test_roabp(a: &Roabp, mode: Mode, sz: &SzArgs, exec: Exec, out: &mut String) -> Result<u8> {
    let v = match mode {
        Mode::Blackbox => blackbox_pit_roabp(*a.field(), RoabpShape::of(a), exec, |x| {
            a.eval(x).expect("arity matches")
        })?,
        Mode::Whitebox => whitebox_pit_roabp(a),
        Mode::Brute => bruteforce_pit(a)?,
        Mode::Sz => {
            let total = (a.depth() as u64) * (a.degree() as u64 - 1);
            schwartz_zippel(*a.field(), a.depth(), total, sz.trials, sz.seed, |x| {
                a.eval(x).expect("arity matches")
            })?
        }
    };
    Ok(report(&v, out))
}

fn blackbox_pit_diagonal_file(c: &DiagonalCircuit, exec: Exec) -> Result<PitVerdict> {
    Ok(blackbox_pit_diagonal(
        *c.field(),
        DiagShape::of(c),
        exec,
        |x| c.eval(x).expect("arity matches"),
    )?)
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn report(v: &PitVerdict, out: &mut String) -> u8 {
    match &v.witness {
        Some(w) if !v.is_zero => {
            let _ = writeln!(
                out,
                "NONZERO witness={} points_tested={}",
                join(w),
                v.points_tested
            );
            1
        }
        _ if !v.is_zero => {
            let _ = writeln!(out, "NONZERO points_tested={}", v.points_tested);
            1
        }
        _ => {
            let _ = writeln!(out, "ZERO points_tested={}", v.points_tested);
            0
        }
    }
}

/// Matrices as `X<i>=` followed by rows separated by `;`.
fn report_matrices(v: &PitVerdict<Vec<Mat>>, out: &mut String) -> u8 {
    if v.is_zero {
        let _ = writeln!(out, "ZERO points_tested={}", v.points_tested);
        return 0;
    }
    let _ = writeln!(out, "NONZERO points_tested={}", v.points_tested);
    for (i, m) in v.witness.iter().flatten().enumerate() {
        let rows: Vec<String> = (0..m.rows()).map(|r| join(m.row(r))).collect();
        let _ = writeln!(out, "X{i}={}", rows.join(";"));
    }
    1
}
