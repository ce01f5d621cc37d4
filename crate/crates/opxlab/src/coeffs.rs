//! Coefficient sequences driving the recursion, with the sign bookkeeping
//! needed once some entries leave the closed unit disk.
//!
//! A sequence is stored as an explicit head plus a tail rule. The only hard
//! requirement is that no coefficient is unimodular and that from some index
//! `N` on every coefficient lies strictly inside the disk; `N` is always
//! computed, never supplied.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficients with `||alpha| - 1|` at or below this are rejected outright:
/// the recursion weights vanish there and nothing downstream is defined.
pub const UNIMODULAR_TOL: f64 = 1e-14;

/// Head length used by the seeded random generators.
pub const RANDOM_HEAD_LEN: usize = 24;

/// Rule for the coefficients beyond the explicitly stored head.
#[derive(Clone, Debug, PartialEq)]
pub enum TailSpec {
    /// `alpha_n = 0` for every `n >= m`.
    ZeroBeyond(usize),
    /// Tail of the weight `(1 - a cos t) dt/2pi` with `0 < a < 1`; every
    /// coefficient is available in closed form.
    ClosedFormGeronimus(f64),
    /// The stored head is a truncation of something longer: the Schur chain
    /// starts from zero at `depth` and the induced error in F must stay
    /// below `tol`.
    Truncate { depth: usize, tol: f64 },
}

/// `mu_+` and `mu_-` for the closed-form tail: roots of `z^2 - (2/a) z + 1`.
pub(crate) fn geronimus_mu(a: f64) -> (f64, f64) {
    let s = (1.0 - a * a).sqrt();
    ((1.0 + s) / a, (1.0 - s) / a)
}

/// Tail coefficient at offset `m` (so the full-sequence index is
/// `tail_start + m`) for the closed-form tail with parameter `a`.
pub(crate) fn geronimus_tail_alpha(a: f64, m: usize) -> f64 {
    let (mp, mm) = geronimus_mu(a);
    let den = mp.powi(m as i32 + 2) - mm.powi(m as i32 + 2);
    if den.is_finite() {
        -(mp - mm) / den
    } else {
        0.0
    }
}

/// A validated coefficient sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct VerblunskySequence {
    head: Vec<Complex64>,
    tail: TailSpec,
    indefinite_len: usize,
}

impl VerblunskySequence {
    pub fn head(&self) -> &[Complex64] {
        &self.head
    }

    pub fn tail(&self) -> &TailSpec {
        &self.tail
    }

    /// The first index `N` from which every coefficient lies strictly inside
    /// the open unit disk. `N = 0` for a classical sequence.
    pub fn indefinite_len(&self) -> usize {
        self.indefinite_len
    }

    /// Index where the explicit data ends and the tail rule takes over.
    /// This is also where the Schur chain is seeded.
    pub fn tail_start(&self) -> usize {
        match self.tail {
            TailSpec::ZeroBeyond(m) => m.max(self.head.len()),
            TailSpec::ClosedFormGeronimus(_) => self.head.len(),
            TailSpec::Truncate { depth, .. } => depth,
        }
    }

    /// Coefficient at any index, tail rule included.
    pub fn alpha(&self, n: usize) -> Complex64 {
        if n < self.head.len() {
            self.head[n]
        } else {
            match self.tail {
                TailSpec::ZeroBeyond(_) | TailSpec::Truncate { .. } => Complex64::ZERO,
                TailSpec::ClosedFormGeronimus(a) => {
                    Complex64::new(geronimus_tail_alpha(a, n - self.head.len()), 0.0)
                }
            }
        }
    }

    pub fn is_real(&self) -> bool {
        self.head.iter().all(|a| a.im == 0.0)
    }

    pub fn alpha_real(&self, n: usize) -> Result<f64> {
        let a = self.alpha(n);
        if a.im != 0.0 {
            return Err(Error::NonRealCoefficients(n));
        }
        Ok(a.re)
    }
}

/// Validate a raw head against a tail rule and compute the minimal `N`.
pub fn validate(raw: Vec<Complex64>, tail: TailSpec) -> Result<VerblunskySequence> {
    match &tail {
        TailSpec::ZeroBeyond(m) => {
            for (n, a) in raw.iter().enumerate().skip(*m) {
                if a.norm() >= 1.0 {
                    return Err(Error::LargeTailCoefficient(n));
                }
                if *a != Complex64::ZERO {
                    return Err(Error::InvalidTailParameter(format!(
                        "tail is zero beyond {m} but alpha_{n} = {a}"
                    )));
                }
            }
        }
        TailSpec::ClosedFormGeronimus(a) => {
            if !(a.is_finite() && *a > 0.0 && *a < 1.0) {
                return Err(Error::InvalidTailParameter(format!(
                    "closed-form tail needs 0 < a < 1, got {a}"
                )));
            }
        }
        TailSpec::Truncate { tol, .. } => {
            if !(tol.is_finite() && *tol > 0.0) {
                return Err(Error::InvalidTailParameter(format!(
                    "truncation tolerance must be positive, got {tol}"
                )));
            }
        }
    }
    for (n, a) in raw.iter().enumerate() {
        if !a.re.is_finite() || !a.im.is_finite() {
            return Err(Error::Config(format!("alpha_{n} is not finite")));
        }
        if (a.norm() - 1.0).abs() <= UNIMODULAR_TOL {
            return Err(Error::UnimodularCoefficient(n));
        }
    }
    let indefinite_len = raw
        .iter()
        .enumerate()
        .rev()
        .find(|(_, a)| a.norm() > 1.0)
        .map(|(n, _)| n + 1)
        .unwrap_or(0);
    Ok(VerblunskySequence {
        head: raw,
        tail,
        indefinite_len,
    })
}

/// Signed products `omega_n = prod_{j<=n} (1 - |alpha_j|^2)` together with
/// their signs and the moduli `|rho_n| = sqrt|1 - |alpha_n|^2|`.
///
/// Indexing runs from -1: `omega(-1) = 1`, `epsilon(-1) = +1`.
#[derive(Clone, Debug)]
pub struct SignedWeights {
    omega: Vec<f64>,
    epsilon: Vec<i8>,
    rho_abs: Vec<f64>,
    nmax: usize,
}

impl SignedWeights {
    pub fn nmax(&self) -> usize {
        self.nmax
    }

    pub fn omega(&self, n: i64) -> f64 {
        assert!(n >= -1 && n <= self.nmax as i64, "omega index out of range");
        self.omega[(n + 1) as usize]
    }

    pub fn epsilon(&self, n: i64) -> f64 {
        assert!(n >= -1 && n <= self.nmax as i64, "epsilon index out of range");
        f64::from(self.epsilon[(n + 1) as usize])
    }

    pub fn rho_abs(&self, n: usize) -> f64 {
        self.rho_abs[n]
    }
}

/// Accumulate the signed weights up to index `nmax`.
pub fn weights(seq: &VerblunskySequence, nmax: usize) -> SignedWeights {
    let mut omega = Vec::with_capacity(nmax + 2);
    let mut epsilon = Vec::with_capacity(nmax + 2);
    let mut rho_abs = Vec::with_capacity(nmax + 1);
    omega.push(1.0);
    epsilon.push(1);
    let mut acc = 1.0f64;
    for n in 0..=nmax {
        let factor = 1.0 - seq.alpha(n).norm_sqr();
        acc *= factor;
        omega.push(acc);
        epsilon.push(if acc < 0.0 { -1 } else { 1 });
        rho_abs.push(factor.abs().sqrt());
    }
    SignedWeights {
        omega,
        epsilon,
        rho_abs,
        nmax,
    }
}

/// Built-in sequences used throughout the examples and the verification
/// suites.
#[derive(Clone, Debug, PartialEq)]
pub enum Preset {
    /// `{2, 0, 0, ...}`.
    SingleLarge,
    /// `2 sqrt 2` followed by the closed-form tail with `a = 1/sqrt 2`.
    AppendedGeronimus,
    /// The all-zero sequence.
    ClassicalZero,
    /// Seeded decaying sequence with a few prescribed large entries.
    RandomSzego {
        seed: u64,
        decay: f64,
        spikes: usize,
    },
}

impl std::str::FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "single_large" => Ok(Preset::SingleLarge),
            "appended_geronimus" => Ok(Preset::AppendedGeronimus),
            "classical_zero" => Ok(Preset::ClassicalZero),
            "random_szego" => Ok(Preset::RandomSzego {
                seed: 1,
                decay: 0.6,
                spikes: 1,
            }),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }
}

/// Instantiate a preset sequence.
pub fn preset(p: &Preset) -> Result<VerblunskySequence> {
    match p {
        Preset::SingleLarge => validate(vec![Complex64::new(2.0, 0.0)], TailSpec::ZeroBeyond(1)),
        Preset::AppendedGeronimus => validate(
            vec![Complex64::new(2.0 * 2.0f64.sqrt(), 0.0)],
            TailSpec::ClosedFormGeronimus(std::f64::consts::FRAC_1_SQRT_2),
        ),
        Preset::ClassicalZero => validate(Vec::new(), TailSpec::ZeroBeyond(0)),
        Preset::RandomSzego {
            seed,
            decay,
            spikes,
        } => random_szego(*seed, *decay, *spikes),
    }
}

fn random_head(seed: u64, decay: f64, spikes: usize, real: bool) -> Result<Vec<Complex64>> {
    if !(decay > 0.0 && decay < 1.0) {
        return Err(Error::Config(format!("decay must be in (0,1), got {decay}")));
    }
    if spikes > 8 {
        return Err(Error::Config("at most 8 spikes are supported".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut head = Vec::with_capacity(RANDOM_HEAD_LEN);
    for n in 0..RANDOM_HEAD_LEN {
        let r = 0.85 * decay.powi(n as i32) * rng.gen::<f64>();
        let v = if real {
            let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
            Complex64::new(sign * r, 0.0)
        } else {
            let phase = std::f64::consts::TAU * rng.gen::<f64>();
            Complex64::from_polar(r, phase)
        };
        head.push(v);
    }
    // spikes land in the first 8 slots; modulus kept off the circle so the
    // weights stay well conditioned
    let mut chosen: Vec<usize> = Vec::new();
    while chosen.len() < spikes {
        let idx = rng.gen_range(0..8usize);
        if !chosen.contains(&idx) {
            chosen.push(idx);
        }
    }
    for idx in chosen {
        let r = 1.1 + 1.9 * rng.gen::<f64>();
        head[idx] = if real {
            let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
            Complex64::new(sign * r, 0.0)
        } else {
            Complex64::from_polar(r, std::f64::consts::TAU * rng.gen::<f64>())
        };
    }
    Ok(head)
}

/// Seeded random sequence: `|alpha_n| <= 0.85 decay^n` apart from `spikes`
/// entries among the first eight indices with modulus in `[1.1, 3]`.
pub fn random_szego(seed: u64, decay: f64, spikes: usize) -> Result<VerblunskySequence> {
    validate(
        random_head(seed, decay, spikes, false)?,
        TailSpec::ZeroBeyond(RANDOM_HEAD_LEN),
    )
}

/// Same construction restricted to real values, for the real-line suites.
pub fn random_szego_real(seed: u64, decay: f64, spikes: usize) -> Result<VerblunskySequence> {
    validate(
        random_head(seed, decay, spikes, true)?,
        TailSpec::ZeroBeyond(RANDOM_HEAD_LEN),
    )
}

#[derive(Serialize, Deserialize)]
struct SeqFile {
    alphas: Vec<[f64; 2]>,
    tail: TailFile,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum TailFile {
    Zero {
        #[serde(default)]
        m: Option<usize>,
    },
    Geronimus {
        a: f64,
    },
    Truncate {
        depth: usize,
        tol: f64,
    },
}

/// Parse the JSON wire format: complex numbers are two-element arrays.
pub fn from_json_str(s: &str) -> Result<VerblunskySequence> {
    let file: SeqFile = serde_json::from_str(s)?;
    let raw: Vec<Complex64> = file
        .alphas
        .iter()
        .map(|[re, im]| Complex64::new(*re, *im))
        .collect();
    let tail = match file.tail {
        TailFile::Zero { m } => TailSpec::ZeroBeyond(m.unwrap_or(raw.len())),
        TailFile::Geronimus { a } => TailSpec::ClosedFormGeronimus(a),
        TailFile::Truncate { depth, tol } => TailSpec::Truncate { depth, tol },
    };
    validate(raw, tail)
}

pub fn to_json_string(seq: &VerblunskySequence) -> Result<String> {
    let file = SeqFile {
        alphas: seq.head().iter().map(|a| [a.re, a.im]).collect(),
        tail: match *seq.tail() {
            TailSpec::ZeroBeyond(m) => TailFile::Zero { m: Some(m) },
            TailSpec::ClosedFormGeronimus(a) => TailFile::Geronimus { a },
            TailSpec::Truncate { depth, tol } => TailFile::Truncate { depth, tol },
        },
    };
    Ok(serde_json::to_string_pretty(&file)?)
}
