//! Rational Schur iterates `f_n`, the associated function
//! `F = (1 + z f)/(1 - z f)`, and the boundary identity tying the real part
//! of `F` to the chain data.
//!
//! The chain is built by a downward rational Moebius descent
//! `f_n = (alpha_n + z f_{n+1})/(1 + conj(alpha_n) z f_{n+1})` from a tail
//! seed: identically zero for finite sequences, or the closed form of the
//! `(1 - a cos t)` weight. For that closed-form tail every iterate is known
//! exactly: with `D_k = mu_+^k - mu_-^k`,
//! `f_m = -D_1 / (D_{m+2} - D_{m+1} z)`.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::coeffs::{geronimus_mu, weights, TailSpec, VerblunskySequence};
use crate::error::{Error, Result};
use crate::poly::{szego_chain, CPoly, MonicPair};
use crate::szegofn::CircleGrid;

/// Leading coefficients below `1e-13 * max|coeff|` are treated as numerical
/// zeros when composing rationals; without the strip the representation
/// degree only grows.
const STRIP_TOL: f64 = 1e-13;

/// `|1 - z f|` below this counts as a pole of `F`.
const POLE_TOL: f64 = 1e-13;

/// Ratio of polynomials; chain members keep `den(0) = 1`.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: CPoly,
    den: CPoly,
}

impl RationalFn {
    pub fn new(num: CPoly, den: CPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Config("rational with zero denominator".into()));
        }
        Ok(RationalFn { num, den })
    }

    pub fn zero() -> Self {
        RationalFn {
            num: CPoly::zero(),
            den: CPoly::one(),
        }
    }

    pub fn constant(c: Complex64) -> Self {
        RationalFn {
            num: CPoly::constant(c),
            den: CPoly::one(),
        }
    }

    pub fn num(&self) -> &CPoly {
        &self.num
    }

    pub fn den(&self) -> &CPoly {
        &self.den
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let d = self.den.eval(z);
        if d.norm() <= POLE_TOL * self.den.max_coeff_norm().max(1.0) {
            return Err(Error::PoleEncountered(z));
        }
        Ok(self.num.eval(z) / d)
    }

    /// Strip numerically-zero leading coefficients and rescale to `den(0) = 1`.
    fn normalized(self) -> Result<Self> {
        let scale = self.num.max_coeff_norm().max(self.den.max_coeff_norm());
        let strip = |p: &CPoly| -> CPoly {
            let mut v = p.coeffs().to_vec();
            while let Some(last) = v.last() {
                if last.norm() <= STRIP_TOL * scale {
                    v.pop();
                } else {
                    break;
                }
            }
            CPoly::new(v)
        };
        let num = strip(&self.num);
        let den = strip(&self.den);
        let d0 = den.coeff(0);
        if d0.norm() <= STRIP_TOL * scale.max(1.0) {
            return Err(Error::Config("denominator vanished at the origin".into()));
        }
        let inv = d0.finv();
        Ok(RationalFn {
            num: num.scaled(inv),
            den: den.scaled(inv),
        })
    }
}

/// The rational iterates `f_0 ..= f_M` plus the tail rule for indices past
/// the seed `M`.
#[derive(Clone, Debug)]
pub struct SchurChain {
    f: Vec<RationalFn>,
    tail: TailSpec,
    tail_start: usize,
    truncation_error: Option<f64>,
}

fn geronimus_iterate(a: f64, m: usize) -> RationalFn {
    let (mp, mm) = geronimus_mu(a);
    let d1 = mp - mm;
    let dm1 = mp.powi(m as i32 + 1) - mm.powi(m as i32 + 1);
    let dm2 = mp.powi(m as i32 + 2) - mm.powi(m as i32 + 2);
    if dm2.is_finite() {
        RationalFn {
            num: CPoly::from_real(&[-d1 / dm2]),
            den: CPoly::from_real(&[1.0, -dm1 / dm2]),
        }
    } else {
        // far tail: ratios saturate at 1/mu_+ and the value underflows
        RationalFn {
            num: CPoly::zero(),
            den: CPoly::from_real(&[1.0, -1.0 / mp]),
        }
    }
}

fn tail_iterate(tail: &TailSpec, offset: usize) -> RationalFn {
    match tail {
        TailSpec::ZeroBeyond(_) | TailSpec::Truncate { .. } => RationalFn::zero(),
        TailSpec::ClosedFormGeronimus(a) => geronimus_iterate(*a, offset),
    }
}

fn moebius_step(a: Complex64, f_next: &RationalFn) -> Result<RationalFn> {
    let zp = f_next.num.mul_z(1);
    let num = f_next.den.scaled(a).add(&zp);
    let den = f_next.den.add(&zp.scaled(a.conj()));
    RationalFn { num, den }.normalized()
}

fn descend(seq: &VerblunskySequence, start: usize, seed: RationalFn) -> Result<Vec<RationalFn>> {
    let mut f = vec![RationalFn::zero(); start + 1];
    f[start] = seed;
    for n in (0..start).rev() {
        f[n] = moebius_step(seq.alpha(n), &f[n + 1])?;
    }
    Ok(f)
}

/// Build the chain from the tail rule of `seq`.
///
/// For a `Truncate` tail the error induced in `F` by starting the descent at
/// `depth` instead of `depth + 8` is measured on a boundary grid and must
/// stay below the user tolerance.
pub fn schur_chain(seq: &VerblunskySequence) -> Result<SchurChain> {
    let m = seq.tail_start();
    let f = descend(seq, m, tail_iterate(seq.tail(), 0))?;
    let mut chain = SchurChain {
        f,
        tail: seq.tail().clone(),
        tail_start: m,
        truncation_error: None,
    };
    if let TailSpec::Truncate { depth, tol } = *seq.tail() {
        let finer = SchurChain {
            f: descend(seq, depth + 8, RationalFn::zero())?,
            tail: TailSpec::ZeroBeyond(depth + 8),
            tail_start: depth + 8,
            truncation_error: None,
        };
        let grid = CircleGrid::new(256)?;
        let mut worst = 0.0f64;
        for k in 0..grid.len() {
            let z = grid.node(k);
            let a = chain.eval_caratheodory(z)?;
            let b = finer.eval_caratheodory(z)?;
            worst = worst.max((a - b).norm());
        }
        if worst > tol {
            return Err(Error::TruncationNotConverged(worst));
        }
        chain.truncation_error = Some(worst);
    }
    Ok(chain)
}

impl SchurChain {
    pub fn tail_start(&self) -> usize {
        self.tail_start
    }

    /// Estimated error in `F` for `Truncate` tails; `None` otherwise.
    pub fn truncation_error(&self) -> Option<f64> {
        self.truncation_error
    }

    /// The iterate `f_n`, exact for any index (tail rule included).
    pub fn schur_fn(&self, n: usize) -> RationalFn {
        if n <= self.tail_start {
            self.f[n].clone()
        } else {
            tail_iterate(&self.tail, n - self.tail_start)
        }
    }

    pub fn eval_schur(&self, n: usize, z: Complex64) -> Result<Complex64> {
        if n <= self.tail_start {
            self.f[n].eval(z)
        } else {
            tail_iterate(&self.tail, n - self.tail_start).eval(z)
        }
    }

    /// `F = (1 + z f)/(1 - z f)` as a ratio of polynomials with value 1 at 0.
    pub fn caratheodory_rational(&self) -> RationalFn {
        let f0 = &self.f[0];
        let zp = f0.num.mul_z(1);
        RationalFn {
            num: f0.den.add(&zp),
            den: f0.den.sub(&zp),
        }
    }

    /// Evaluate `F`; near-vanishing `1 - z f` reports a pole.
    pub fn eval_caratheodory(&self, z: Complex64) -> Result<Complex64> {
        let f0 = &self.f[0];
        let q = f0.den.eval(z);
        let zp = z * f0.num.eval(z);
        let num = q + zp;
        let den = q - zp;
        if den.norm() <= POLE_TOL * q.norm().max(num.norm()) {
            return Err(Error::PoleOfF(z));
        }
        Ok(num / den)
    }

    /// `F` of the n-times stripped sequence, evaluated through `f_n`.
    pub fn eval_caratheodory_stripped(&self, n: usize, z: Complex64) -> Result<Complex64> {
        let fv = self.eval_schur(n, z)?;
        let den = Complex64::new(1.0, 0.0) - z * fv;
        if den.norm() <= POLE_TOL {
            return Err(Error::PoleOfF(z));
        }
        Ok((Complex64::new(1.0, 0.0) + z * fv) / den)
    }
}

/// Evaluate `F` at a point.
pub fn f_eval(chain: &SchurChain, z: Complex64) -> Result<Complex64> {
    chain.eval_caratheodory(z)
}

/// Closed-form boundary real parts for the built-in sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedReF {
    /// `Re F = 1` (the all-zero sequence).
    One,
    /// `Re F = -3/|1 - 2 e^(it)|^2`.
    SingleLarge,
    /// `Re F = 7 (1 - |w - 2 sqrt 2|^2) / |(w - 2 sqrt 2)(1 - w (2 sqrt 2 + 1))|^2`.
    AppendedGeronimus,
}

impl ClosedReF {
    pub fn eval(self, theta: f64) -> f64 {
        match self {
            ClosedReF::One => 1.0,
            ClosedReF::SingleLarge => -3.0 / (5.0 - 4.0 * theta.cos()),
            ClosedReF::AppendedGeronimus => {
                let s = 2.0 * 2.0f64.sqrt();
                let t = s + 1.0;
                let w_minus_s = 9.0 - 2.0 * s * theta.cos();
                let one_minus_tw = 1.0 + t * t - 2.0 * t * theta.cos();
                7.0 * (1.0 - w_minus_s) / (w_minus_s * one_minus_tw)
            }
        }
    }
}

/// Where a boundary trace of `Re F` comes from.
pub enum BoundarySource {
    /// Direct evaluation of the rational `F`.
    Rational(SchurChain),
    /// The identity `Re F = omega_{n-1} (1 - |f_n|^2)/|Phi_n* - z Phi_n f_n|^2`
    /// at a fixed index `n`.
    Khrushchev {
        chain: SchurChain,
        pair: MonicPair,
        omega_nm1: f64,
    },
    /// A preset closed form.
    Closed(ClosedReF),
}

impl BoundarySource {
    pub fn re_f(&self, theta: f64) -> Result<f64> {
        let w = Complex64::from_polar(1.0, theta);
        match self {
            BoundarySource::Rational(chain) => Ok(chain.eval_caratheodory(w)?.re),
            BoundarySource::Khrushchev {
                chain,
                pair,
                omega_nm1,
            } => {
                let fv = chain.eval_schur(pair.n, w)?;
                let den = pair.phi_star.eval(w) - w * pair.phi.eval(w) * fv;
                let d2 = den.norm_sqr();
                if d2 <= 1e-280 {
                    return Err(Error::PoleEncountered(w));
                }
                Ok(omega_nm1 * (1.0 - fv.norm_sqr()) / d2)
            }
            BoundarySource::Closed(c) => Ok(c.eval(theta)),
        }
    }
}

/// Boundary trace of `Re F` on a midpoint grid.
#[derive(Clone, Debug)]
pub struct BoundaryFunction {
    pub grid: CircleGrid,
    pub values: Vec<f64>,
    pub sign_flag: i8,
}

/// Sample `Re F` at the grid nodes. `sign_flag` is `epsilon_{N-1}` and is
/// carried along so consumers can form `sign * Re F > 0`.
pub fn re_f_boundary(
    src: &BoundarySource,
    grid: &CircleGrid,
    sign_flag: i8,
) -> Result<BoundaryFunction> {
    let values: Vec<Result<f64>> = (0..grid.len())
        .into_par_iter()
        .map(|k| src.re_f(grid.theta(k)))
        .collect();
    let mut out = Vec::with_capacity(values.len());
    for (k, v) in values.into_iter().enumerate() {
        match v {
            Ok(x) if x.is_finite() => out.push(x),
            _ => return Err(Error::SingularNode(k)),
        }
    }
    Ok(BoundaryFunction {
        grid: grid.clone(),
        values: out,
        sign_flag,
    })
}

/// Max deviation over the grid between `Re F` from the rational chain and
/// the index-`n` boundary identity. The identity holds for every natural
/// `n`, so this is a pure numerics gauge.
pub fn khrushchev_residual(
    seq: &VerblunskySequence,
    n: usize,
    grid: &CircleGrid,
) -> Result<f64> {
    if n == 0 {
        return Err(Error::Config("the boundary identity needs n >= 1".into()));
    }
    let chain = schur_chain(seq)?;
    let pairs = szego_chain(seq, n);
    let w = weights(seq, n);
    let omega_nm1 = w.omega(n as i64 - 1);
    let pair = pairs.pairs[n].clone();
    let mut worst = 0.0f64;
    for k in 0..grid.len() {
        let theta = grid.theta(k);
        let z = Complex64::from_polar(1.0, theta);
        let direct = chain.eval_caratheodory(z)?.re;
        let fv = chain.eval_schur(n, z)?;
        let den = pair.phi_star.eval(z) - z * pair.phi.eval(z) * fv;
        let d2 = den.norm_sqr();
        if d2 <= 1e-280 {
            return Err(Error::SingularNode(k));
        }
        let via_identity = omega_nm1 * (1.0 - fv.norm_sqr()) / d2;
        worst = worst.max((direct - via_identity).abs());
    }
    Ok(worst)
}

/// First `k + 1` Taylor coefficients of `F` at the origin, by series
/// division of the rational representation.
pub fn maclaurin_f(chain: &SchurChain, k: usize) -> Result<Vec<Complex64>> {
    let rat = chain.caratheodory_rational();
    let den0 = rat.den.coeff(0);
    if den0.norm() <= 1e-300 {
        return Err(Error::PoleAtOrigin);
    }
    let inv = den0.finv();
    let num: Vec<Complex64> = (0..=k).map(|i| rat.num.coeff(i) * inv).collect();
    let den: Vec<Complex64> = (0..=k).map(|i| rat.den.coeff(i) * inv).collect();
    let mut out = vec![Complex64::ZERO; k + 1];
    for n in 0..=k {
        let mut acc = num[n];
        for j in 1..=n {
            acc -= den[j] * out[n - j];
        }
        out[n] = acc;
    }
    Ok(out)
}
