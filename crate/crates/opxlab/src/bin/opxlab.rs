//! Thin front end: flag parsing only, everything else lives in the library.

use clap::{Args, Parser, Subcommand};
use opxlab::cli::{self, Command, OutFormat, RunConfig, SeqSource};
use opxlab::verify::Suite;

#[derive(Parser)]
#[command(
    name = "opxlab",
    version,
    about = "Orthogonal-polynomial chains, their boundary analysis, and the mapped tridiagonal systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// Sequence file (JSON) or `preset:<name>` with name one of
    /// single_large, appended_geronimus, classical_zero, random_szego
    #[arg(long)]
    seq: String,
    /// Largest chain degree
    #[arg(long, default_value_t = 16)]
    nmax: usize,
    /// Boundary grid size (power of two, >= 16)
    #[arg(long, default_value_t = 512)]
    grid: usize,
    /// Quadrature / truncation tolerance
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// csv or json
    #[arg(long, default_value = "csv")]
    format: String,
    /// Seed for the random presets
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dump the first- and second-kind chains with the signed weights
    Recur(Common),
    /// Sample the boundary-quadrature outer function D at given points
    Szego {
        #[command(flatten)]
        common: Common,
        /// Sample points as "re,im;re,im;..."
        #[arg(long, default_value = "0,0")]
        z: String,
    },
    /// Emit the mapped recurrence data (b, c, signature) and P coefficients
    Map(Common),
    /// Run a verification suite and write the report
    Verify {
        /// algebraic, asymptotic, map, examples, or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, default_value = "csv")]
        format: String,
    },
}

fn common_config(command: Command, common: &Common) -> Result<RunConfig, String> {
    Ok(RunConfig {
        command,
        seq: Some(SeqSource::parse(&common.seq)),
        nmax: common.nmax,
        grid_m: common.grid,
        tol: common.tol,
        out: common.out.clone(),
        format: common
            .format
            .parse::<OutFormat>()
            .map_err(|e| e.to_string())?,
        seed: common.seed,
        ..RunConfig::default()
    })
}

fn build_config(cmd: &Cmd) -> Result<RunConfig, String> {
    match cmd {
        Cmd::Recur(common) => common_config(Command::Recur, common),
        Cmd::Map(common) => common_config(Command::Map, common),
        Cmd::Szego { common, z } => {
            let mut config = common_config(Command::Szego, common)?;
            config.z_list = cli::parse_z_list(z).map_err(|e| e.to_string())?;
            Ok(config)
        }
        Cmd::Verify {
            suite,
            seed,
            out,
            format,
        } => Ok(RunConfig {
            command: Command::Verify,
            suite: suite.parse::<Suite>().map_err(|e| e.to_string())?,
            seed: *seed,
            out: out.clone(),
            format: format.parse::<OutFormat>().map_err(|e| e.to_string())?,
            ..RunConfig::default()
        }),
    }
}

fn main() {
    let args = Cli::parse();
    let config = match build_config(&args.command) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    };
    std::process::exit(cli::run(&config));
}
