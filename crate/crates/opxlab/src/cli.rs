//! Command execution behind the `opxlab` binary.
//!
//! Exit codes: 0 on success (verify: all checks pass), 1 when a
//! verification check fails, 2 for validation, configuration, or IO
//! problems.
//!
//! All numbers in CSV output carry 17 significant digits so binary64
//! values round-trip; identical config and seed give byte-identical files.

use std::io::Write;
use std::path::PathBuf;

use num_complex::Complex64;
use serde::Serialize;

use crate::coeffs::{self, preset, weights, Preset, VerblunskySequence};
use crate::error::{Error, Result};
use crate::poly::{second_kind_chain, szego_chain};
use crate::szegofn::{CircleGrid, SzegoEvaluator};
use crate::szegomap::{build_system, geronimus, map_p};
use crate::verify::{run_suite, CheckResult, Suite};

/// Largest chain degree the binary will compute; binary64 certification of
/// the coupled recursion is documented up to here.
pub const NMAX_CEILING: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Recur,
    Szego,
    Map,
    Verify,
}

impl std::fmt::Display for Command {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Command::Recur => "recur",
            Command::Szego => "szego",
            Command::Map => "map",
            Command::Verify => "verify",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutFormat::Csv),
            "json" => Ok(OutFormat::Json),
            other => Err(Error::Config(format!("unknown format `{other}`"))),
        }
    }
}

/// Where the sequence comes from: a JSON file or a named preset.
#[derive(Clone, Debug)]
pub enum SeqSource {
    Path(PathBuf),
    Preset(String),
}

impl SeqSource {
    pub fn parse(s: &str) -> SeqSource {
        match s.strip_prefix("preset:") {
            Some(name) => SeqSource::Preset(name.to_string()),
            None => SeqSource::Path(PathBuf::from(s)),
        }
    }

    fn describe(&self) -> String {
        match self {
            SeqSource::Path(p) => p.display().to_string(),
            SeqSource::Preset(name) => format!("preset:{name}"),
        }
    }
}

/// Everything a run needs; the binary maps its flags onto this.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub seq: Option<SeqSource>,
    pub nmax: usize,
    pub grid_m: usize,
    pub tol: f64,
    pub out: Option<PathBuf>,
    pub format: OutFormat,
    pub suite: Suite,
    pub seed: u64,
    pub z_list: Vec<Complex64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: Command::Verify,
            seq: None,
            nmax: 16,
            grid_m: 512,
            tol: 1e-9,
            out: None,
            format: OutFormat::Csv,
            suite: Suite::All,
            seed: 1,
            z_list: vec![Complex64::ZERO],
        }
    }
}

/// Parse `"re,im;re,im;..."`.
pub fn parse_z_list(s: &str) -> Result<Vec<Complex64>> {
    let mut out = Vec::new();
    for part in s.split(';').filter(|p| !p.trim().is_empty()) {
        let mut it = part.split(',');
        let re = it
            .next()
            .ok_or_else(|| Error::Config(format!("bad z entry `{part}`")))?
            .trim()
            .parse::<f64>()
            .map_err(|e| Error::Config(format!("bad z entry `{part}`: {e}")))?;
        let im = it
            .next()
            .unwrap_or("0")
            .trim()
            .parse::<f64>()
            .map_err(|e| Error::Config(format!("bad z entry `{part}`: {e}")))?;
        if it.next().is_some() {
            return Err(Error::Config(format!("bad z entry `{part}`")));
        }
        out.push(Complex64::new(re, im));
    }
    if out.is_empty() {
        return Err(Error::Config("empty z list".into()));
    }
    Ok(out)
}

fn load_sequence(config: &RunConfig) -> Result<VerblunskySequence> {
    let source = config
        .seq
        .as_ref()
        .ok_or_else(|| Error::Config("this command needs --seq".into()))?;
    match source {
        SeqSource::Path(path) => {
            let text = std::fs::read_to_string(path)?;
            if text.trim().is_empty() {
                return Err(Error::Config(format!(
                    "sequence file {} is empty",
                    path.display()
                )));
            }
            coeffs::from_json_str(&text)
        }
        SeqSource::Preset(name) => {
            let p = match name.parse::<Preset>()? {
                Preset::RandomSzego { decay, spikes, .. } => Preset::RandomSzego {
                    seed: config.seed,
                    decay,
                    spikes,
                },
                other => other,
            };
            preset(&p)
        }
    }
}

fn validate_config(config: &RunConfig) -> Result<()> {
    if config.nmax > NMAX_CEILING {
        return Err(Error::Config(format!(
            "nmax {} exceeds the certified ceiling {NMAX_CEILING}",
            config.nmax
        )));
    }
    if !config.grid_m.is_power_of_two() || config.grid_m < 16 {
        return Err(Error::Config(format!(
            "grid size must be a power of two >= 16, got {}",
            config.grid_m
        )));
    }
    if !(config.tol > 0.0 && config.tol.is_finite()) {
        return Err(Error::Config(format!("tolerance must be positive, got {}", config.tol)));
    }
    Ok(())
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
        None => Box::new(std::io::stdout().lock()),
    })
}

// 17 significant digits: round-trip safe for binary64
fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Serialize)]
pub struct ConfigEcho {
    command: String,
    seq: Option<String>,
    nmax: usize,
    grid_m: usize,
    tol: f64,
    format: String,
    suite: String,
    seed: u64,
    z_list: Vec<[f64; 2]>,
}

fn echo(config: &RunConfig) -> ConfigEcho {
    ConfigEcho {
        command: config.command.to_string(),
        seq: config.seq.as_ref().map(|s| s.describe()),
        nmax: config.nmax,
        grid_m: config.grid_m,
        tol: config.tol,
        format: match config.format {
            OutFormat::Csv => "csv".into(),
            OutFormat::Json => "json".into(),
        },
        suite: config.suite.to_string(),
        seed: config.seed,
        z_list: config.z_list.iter().map(|z| [z.re, z.im]).collect(),
    }
}

fn cmd_recur(config: &RunConfig) -> Result<()> {
    let seq = load_sequence(config)?;
    let phi = szego_chain(&seq, config.nmax);
    let psi = second_kind_chain(&seq, config.nmax);
    let w = weights(&seq, config.nmax);
    let mut out = sink(&config.out)?;
    match config.format {
        OutFormat::Csv => {
            writeln!(out, "n,kind,coeff_index,re,im,omega,epsilon")?;
            for n in 0..=config.nmax {
                let omega = fmt_f64(w.omega(n as i64));
                let eps = w.epsilon(n as i64);
                let rows: [(&str, &crate::poly::CPoly); 4] = [
                    ("phi", &phi.pairs[n].phi),
                    ("phi_star", &phi.pairs[n].phi_star),
                    ("psi", &psi.pairs[n].phi),
                    ("psi_star", &psi.pairs[n].phi_star),
                ];
                for (kind, poly) in rows {
                    for k in 0..=n {
                        let c = poly.coeff(k);
                        writeln!(
                            out,
                            "{n},{kind},{k},{},{},{omega},{eps}",
                            fmt_f64(c.re),
                            fmt_f64(c.im)
                        )?;
                    }
                }
            }
        }
        OutFormat::Json => {
            #[derive(Serialize)]
            struct Row {
                n: usize,
                kind: &'static str,
                coeffs: Vec<[f64; 2]>,
                omega: f64,
                epsilon: f64,
            }
            let mut rows = Vec::new();
            for n in 0..=config.nmax {
                let entries: [(&'static str, &crate::poly::CPoly); 4] = [
                    ("phi", &phi.pairs[n].phi),
                    ("phi_star", &phi.pairs[n].phi_star),
                    ("psi", &psi.pairs[n].phi),
                    ("psi_star", &psi.pairs[n].phi_star),
                ];
                for (kind, poly) in entries {
                    rows.push(Row {
                        n,
                        kind,
                        coeffs: (0..=n).map(|k| [poly.coeff(k).re, poly.coeff(k).im]).collect(),
                        omega: w.omega(n as i64),
                        epsilon: w.epsilon(n as i64),
                    });
                }
            }
            #[derive(Serialize)]
            struct Doc {
                config: ConfigEcho,
                certified_to: usize,
                rows: Vec<Row>,
            }
            let doc = Doc {
                config: echo(config),
                certified_to: phi.certified_to,
                rows,
            };
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn cmd_szego(config: &RunConfig) -> Result<()> {
    let seq = load_sequence(config)?;
    let ev = SzegoEvaluator::for_sequence(&seq, CircleGrid::new(config.grid_m)?)?;
    let samples: Vec<(Complex64, Complex64)> = config
        .z_list
        .iter()
        .map(|&z| ev.szego_d(z, config.tol).map(|d| (z, d)))
        .collect::<Result<_>>()?;
    let mut out = sink(&config.out)?;
    match config.format {
        OutFormat::Csv => {
            writeln!(out, "z_re,z_im,d_re,d_im")?;
            for (z, d) in samples {
                writeln!(
                    out,
                    "{},{},{},{}",
                    fmt_f64(z.re),
                    fmt_f64(z.im),
                    fmt_f64(d.re),
                    fmt_f64(d.im)
                )?;
            }
        }
        OutFormat::Json => {
            #[derive(Serialize)]
            struct Doc {
                config: ConfigEcho,
                sign: i8,
                samples: Vec<Sample>,
            }
            #[derive(Serialize)]
            struct Sample {
                z: [f64; 2],
                d: [f64; 2],
            }
            let doc = Doc {
                config: echo(config),
                sign: ev.sign(),
                samples: samples
                    .into_iter()
                    .map(|(z, d)| Sample {
                        z: [z.re, z.im],
                        d: [d.re, d.im],
                    })
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn cmd_map(config: &RunConfig) -> Result<()> {
    let seq = load_sequence(config)?;
    let (b, c) = geronimus(&seq, config.nmax)?;
    let sys = build_system(&b, &c)?;
    let chain = szego_chain(&seq, 2 * config.nmax.min(25));
    let p_count = config.nmax.min(25);
    let ps: Vec<crate::szegomap::RealPoly> =
        (0..=p_count).map(|n| map_p(&chain.pairs, n)).collect::<Result<_>>()?;
    match config.format {
        OutFormat::Csv => {
            let mut out = sink(&config.out)?;
            writeln!(out, "n,b_n,c_n,delta_n")?;
            for n in 1..=config.nmax {
                writeln!(
                    out,
                    "{n},{},{},{}",
                    fmt_f64(b[n - 1]),
                    fmt_f64(c[n - 1]),
                    sys.delta()[n - 1]
                )?;
            }
            // P coefficients travel in a sibling file (or a second stdout
            // section) so the main table stays a flat CSV
            match &config.out {
                Some(path) => {
                    let mut p_path = path.clone();
                    let stem = p_path
                        .file_stem()
                        .map(|s| s.to_string_lossy().to_string())
                        .unwrap_or_else(|| "map".into());
                    p_path.set_file_name(format!("{stem}_pcoeffs.csv"));
                    let mut pout = std::io::BufWriter::new(std::fs::File::create(p_path)?);
                    writeln!(pout, "n,coeff_index,value")?;
                    for (n, p) in ps.iter().enumerate() {
                        for k in 0..=n {
                            writeln!(pout, "{n},{k},{}", fmt_f64(p.coeff(k)))?;
                        }
                    }
                }
                None => {
                    writeln!(out)?;
                    writeln!(out, "n,coeff_index,value")?;
                    for (n, p) in ps.iter().enumerate() {
                        for k in 0..=n {
                            writeln!(out, "{n},{k},{}", fmt_f64(p.coeff(k)))?;
                        }
                    }
                }
            }
        }
        OutFormat::Json => {
            #[derive(Serialize)]
            struct Doc {
                config: ConfigEcho,
                b: Vec<f64>,
                c: Vec<f64>,
                delta: Vec<i8>,
                p: Vec<Vec<f64>>,
            }
            let doc = Doc {
                config: echo(config),
                b,
                c,
                delta: sys.delta().to_vec(),
                p: ps.iter().map(|p| p.coeffs().to_vec()).collect(),
            };
            let mut out = sink(&config.out)?;
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Verification report: the config echo plus one row per check.
#[derive(Serialize)]
pub struct VerifyReport {
    pub version: String,
    pub config: ConfigEcho,
    pub checks: Vec<ReportRow>,
}

#[derive(Serialize)]
pub struct ReportRow {
    pub id: String,
    pub suite: String,
    pub status: String,
    pub measured: f64,
    pub threshold: f64,
    pub detail: String,
}

fn report_rows(results: &[CheckResult]) -> Vec<ReportRow> {
    results
        .iter()
        .map(|r| ReportRow {
            id: r.id.to_string(),
            suite: r.suite.to_string(),
            status: if r.passed { "pass" } else { "fail" }.to_string(),
            measured: r.measured,
            threshold: r.threshold,
            detail: r.detail.clone(),
        })
        .collect()
}

fn cmd_verify(config: &RunConfig) -> Result<bool> {
    let results = run_suite(config.suite, config.seed);
    for r in &results {
        eprintln!(
            "[{}] {:<28} measured {:>12.4e}  threshold {:>9.1e}  {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.measured,
            r.threshold,
            r.detail
        );
    }
    let mut out = sink(&config.out)?;
    match config.format {
        OutFormat::Csv => {
            writeln!(out, "check_id,suite,status,measured,threshold")?;
            for r in &results {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.id,
                    r.suite,
                    if r.passed { "pass" } else { "fail" },
                    fmt_f64(r.measured),
                    fmt_f64(r.threshold)
                )?;
            }
        }
        OutFormat::Json => {
            let report = VerifyReport {
                version: env!("CARGO_PKG_VERSION").to_string(),
                config: echo(config),
                checks: report_rows(&results),
            };
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
        }
    }
    Ok(results.iter().all(|r| r.passed))
}

fn apply_thread_cap() {
    if let Ok(s) = std::env::var("OPXLAB_THREADS") {
        if let Ok(n) = s.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

/// Run a command; returns the process exit code.
pub fn run(config: &RunConfig) -> i32 {
    apply_thread_cap();
    if let Err(e) = validate_config(config) {
        eprintln!("error: {e}");
        return 2;
    }
    let outcome = match config.command {
        Command::Recur => cmd_recur(config).map(|()| true),
        Command::Szego => cmd_szego(config).map(|()| true),
        Command::Map => cmd_map(config).map(|()| true),
        Command::Verify => cmd_verify(config),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        // a closed pipe on the consumer side is not our error
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_list_parsing() {
        let z = parse_z_list("0.1,0.2;0.3,-0.4").unwrap();
        assert_eq!(z.len(), 2);
        assert_eq!(z[1], Complex64::new(0.3, -0.4));
        let z = parse_z_list("0.5").unwrap();
        assert_eq!(z[0], Complex64::new(0.5, 0.0));
        assert!(parse_z_list("").is_err());
        assert!(parse_z_list("a,b").is_err());
    }

    #[test]
    fn config_validation() {
        let mut config = RunConfig {
            command: Command::Recur,
            seq: Some(SeqSource::Preset("single_large".into())),
            ..RunConfig::default()
        };
        config.nmax = 500;
        assert_eq!(run(&config), 2);
        config.nmax = 16;
        config.grid_m = 100;
        assert_eq!(run(&config), 2);
    }

    #[test]
    fn seq_source_parse() {
        assert!(matches!(
            SeqSource::parse("preset:single_large"),
            SeqSource::Preset(_)
        ));
        assert!(matches!(SeqSource::parse("seq.json"), SeqSource::Path(_)));
    }
}
