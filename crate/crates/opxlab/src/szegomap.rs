//! Transport to the real line: moments of the distribution, the mapped
//! monic polynomials `P_n`, their three-term recurrence data, and the
//! signed tridiagonal system those data generate.
//!
//! Conventions used throughout (the recurrence-extraction oracle on the
//! worked examples forces them): `alpha_{-1} = -1`, `alpha_{-2} = 0`, and
//! the mean-value relations
//! `c_{n+1} = (1 - a_{2n-1})(1 - a_{2n}^2)(1 + a_{2n+1})`,
//! `b_{n+1} = (1 - a_{2n-1}) a_{2n} - (1 + a_{2n-1}) a_{2n-2}`.

use num_complex::Complex64;

use crate::coeffs::VerblunskySequence;
use crate::error::{Error, Result};
use crate::poly::{CPoly, MonicPair};
use crate::schur::SchurChain;

/// Moments past this magnitude are no longer trustworthy in binary64;
/// the table truncates there and records why.
const MOMENT_CAP: f64 = 1e12;

// ---------------------------------------------------------------------------
// Double-double helpers. The moment recursion feeds pairings that cancel
// from moment scale down to order one, so the whole chain from moments to
// pairings accumulates in roughly 32 digits and rounds once at the end.

#[derive(Clone, Copy, Debug, Default)]
struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd {
        hi: s,
        lo: (a - (s - bb)) + (b - bb),
    }
}

fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: f64::mul_add(a, b, -p),
    }
}

impl Dd {
    fn from_f64(v: f64) -> Dd {
        Dd { hi: v, lo: 0.0 }
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }

    fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        quick_two_sum(s.hi, s.lo + self.lo + o.lo)
    }

    fn mul_f64(self, v: f64) -> Dd {
        let p = two_prod(self.hi, v);
        quick_two_sum(p.hi, p.lo + self.lo * v)
    }

    fn mul(self, o: Dd) -> Dd {
        let p = two_prod(self.hi, o.hi);
        quick_two_sum(p.hi, p.lo + self.hi * o.lo + self.lo * o.hi)
    }

    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct DdC {
    re: Dd,
    im: Dd,
}

impl DdC {
    fn one() -> DdC {
        DdC {
            re: Dd::from_f64(1.0),
            im: Dd::from_f64(0.0),
        }
    }

    fn value(self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    fn conj(self) -> DdC {
        DdC {
            re: self.re,
            im: self.im.neg(),
        }
    }

    fn add(self, o: DdC) -> DdC {
        DdC {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    fn mul_c64(self, c: Complex64) -> DdC {
        DdC {
            re: self.re.mul_f64(c.re).add(self.im.mul_f64(c.im).neg()),
            im: self.re.mul_f64(c.im).add(self.im.mul_f64(c.re)),
        }
    }

    fn mul_f64(self, v: f64) -> DdC {
        DdC {
            re: self.re.mul_f64(v),
            im: self.im.mul_f64(v),
        }
    }
}

/// Real polynomial, ascending coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

impl RealPoly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        RealPoly { coeffs }
    }

    pub fn one() -> Self {
        RealPoly { coeffs: vec![1.0] }
    }

    pub fn zero() -> Self {
        RealPoly { coeffs: Vec::new() }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul_x(&self) -> Self {
        if self.coeffs.is_empty() {
            return RealPoly::zero();
        }
        let mut v = vec![0.0];
        v.extend_from_slice(&self.coeffs);
        RealPoly { coeffs: v }
    }

    pub fn sub(&self, other: &RealPoly) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        RealPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scaled(&self, s: f64) -> Self {
        RealPoly::new(self.coeffs.iter().map(|&c| c * s).collect())
    }
}

/// Exact binomial coefficient as f64; valid while the value fits 2^53.
fn binom(n: usize, k: usize) -> f64 {
    let k = k.min(n - k.min(n));
    let mut acc = 1.0f64;
    for j in 0..k {
        acc = acc * (n - j) as f64 / (j + 1) as f64;
    }
    acc
}

/// Moments `mu(z^n)` generated from the chain coefficients by
/// `mu(z^n) = -sum_{j<n} t_j mu(z^j)` with `mu(1) = 1`, where
/// `Phi_n = z^n + sum t_j z^j`. Negative indices conjugate.
///
/// Stored in double-double precision: downstream pairings cancel from the
/// moment scale down to order one, and the extra digits are what keeps
/// those pairings meaningful.
#[derive(Clone, Debug)]
pub struct MomentTable {
    mu: Vec<DdC>,
    requested: usize,
    truncation: Option<String>,
}

impl MomentTable {
    /// Highest stored index.
    pub fn k_max(&self) -> usize {
        self.mu.len() - 1
    }

    pub fn requested(&self) -> usize {
        self.requested
    }

    pub fn truncation(&self) -> Option<&str> {
        self.truncation.as_deref()
    }

    fn mu_dd(&self, n: i64) -> Result<DdC> {
        let idx = n.unsigned_abs() as usize;
        if idx >= self.mu.len() {
            return Err(Error::InsufficientMoments {
                have: self.k_max(),
                want: idx,
            });
        }
        Ok(if n >= 0 {
            self.mu[idx]
        } else {
            self.mu[idx].conj()
        })
    }

    pub fn mu_at(&self, n: i64) -> Result<Complex64> {
        Ok(self.mu_dd(n)?.value())
    }
}

pub fn mu_moments(pairs: &[MonicPair], k: usize) -> Result<MomentTable> {
    if pairs.len() <= k {
        return Err(Error::InsufficientMoments {
            have: pairs.len().saturating_sub(1),
            want: k,
        });
    }
    let mut mu = vec![DdC::one()];
    let mut truncation = None;
    for (n, pair) in pairs.iter().enumerate().take(k + 1).skip(1) {
        let phi = &pair.phi;
        let mut acc = DdC::default();
        for (j, m) in mu.iter().enumerate() {
            acc = acc.add(m.mul_c64(phi.coeff(j)));
        }
        let next = DdC {
            re: acc.re.neg(),
            im: acc.im.neg(),
        };
        if next.value().norm() >= MOMENT_CAP {
            truncation = Some(format!(
                "moment {n} reached |mu| = {:.3e}; binary64 certification stops at {MOMENT_CAP:e}",
                next.value().norm()
            ));
            break;
        }
        mu.push(next);
    }
    Ok(MomentTable {
        mu,
        requested: k,
        truncation,
    })
}

fn gamma_moment_dd(table: &MomentTable, k: usize) -> Result<Dd> {
    if k > 60 {
        return Err(Error::Config(
            "binomial weights overflow binary64 past k = 60".into(),
        ));
    }
    let mut acc = DdC::default();
    for j in 0..=k {
        acc = acc.add(table.mu_dd(k as i64 - 2 * j as i64)?.mul_f64(binom(k, j)));
    }
    Ok(acc.re)
}

/// `<x^k, gamma> = sum_j binom(k, j) mu(z^{k-2j})`.
///
/// The sum pairs `j` with `k - j`, so it is real up to rounding; the real
/// part is returned.
pub fn gamma_moment(table: &MomentTable, k: usize) -> Result<f64> {
    Ok(gamma_moment_dd(table, k)?.value())
}

/// `<p(x) q(x), gamma>` with compensated accumulation all the way down.
pub fn gamma_pair(table: &MomentTable, p: &RealPoly, q: &RealPoly) -> Result<f64> {
    let deg = p.degree().unwrap_or(0) + q.degree().unwrap_or(0);
    let gdd: Vec<Dd> = (0..=deg)
        .map(|k| gamma_moment_dd(table, k))
        .collect::<Result<_>>()?;
    let mut acc = Dd::default();
    for (i, &pi) in p.coeffs().iter().enumerate() {
        for (j, &qj) in q.coeffs().iter().enumerate() {
            acc = acc.add(gdd[i + j].mul(two_prod(pi, qj)));
        }
    }
    Ok(acc.value())
}

/// Convenience: the first `kmax + 1` transformed moments.
pub fn gamma_moments(table: &MomentTable, kmax: usize) -> Result<Vec<f64>> {
    (0..=kmax).map(|k| gamma_moment(table, k)).collect()
}

/// Coefficient vectors expressing `z^k + z^(-k)` in `x = z + 1/z`:
/// `T_0 = 2`, `T_1 = x`, `T_k = x T_{k-1} - T_{k-2}`. Integer arithmetic in
/// f64, exact for the sizes used here.
fn x_power_basis(n: usize) -> Vec<RealPoly> {
    let mut t = Vec::with_capacity(n + 1);
    t.push(RealPoly::new(vec![2.0]));
    if n >= 1 {
        t.push(RealPoly::new(vec![0.0, 1.0]));
    }
    for k in 2..=n {
        let next = t[k - 1].mul_x().sub(&t[k - 2]);
        t.push(next);
    }
    t
}

/// Monic mapped polynomial
/// `P_n(z + 1/z) = (1 - alpha_{2n-1})^{-1} z^{-n} (Phi_2n + Phi_2n*)`,
/// with `alpha_{-1} = -1`. Requires a real chain computed to degree `2n`.
pub fn map_p(pairs: &[MonicPair], n: usize) -> Result<RealPoly> {
    if pairs.len() <= 2 * n {
        return Err(Error::Config(format!(
            "chain holds degrees up to {}, P_{n} needs degree {}",
            pairs.len().saturating_sub(1),
            2 * n
        )));
    }
    if n == 0 {
        return Ok(RealPoly::one());
    }
    let phi = &pairs[2 * n].phi;
    let star = &pairs[2 * n].phi_star;
    let scale = phi.max_coeff_norm().max(star.max_coeff_norm()).max(1.0);
    for (idx, p) in [phi, star].into_iter().enumerate() {
        if p.max_imag() > 1e-12 * scale {
            return Err(Error::NonRealCoefficients(idx));
        }
    }
    let s: Vec<f64> = (0..=2 * n)
        .map(|j| phi.coeff(j).re + star.coeff(j).re)
        .collect();
    let asym = (0..=2 * n)
        .map(|j| (s[j] - s[2 * n - j]).abs())
        .fold(0.0, f64::max);
    if asym > 1e-10 * scale {
        return Err(Error::NotSymmetricLaurent(asym));
    }
    // alpha_{2n-1} enters only through 1 - alpha = s_{2n}; dividing by the
    // same float keeps P exactly monic
    let denom = s[2 * n];
    if denom.abs() < 1e-12 {
        return Err(Error::Config(format!(
            "1 - alpha_{} vanished; the mapped polynomial is undefined",
            2 * n - 1
        )));
    }
    let basis = x_power_basis(n);
    let mut out = vec![0.0f64; n + 1];
    out[0] = s[n];
    for k in 1..=n {
        let w = s[n + k];
        for (i, &b) in basis[k].coeffs().iter().enumerate() {
            out[i] += w * b;
        }
    }
    Ok(RealPoly::new(out.into_iter().map(|v| v / denom).collect()))
}

/// `z^n P_n(z + 1/z)` expanded as a polynomial in `z` (degree `2n`).
pub fn mapped_z_poly(p: &RealPoly, n: usize) -> CPoly {
    let mut out = vec![0.0f64; 2 * n + 1];
    for k in 0..=p.degree().unwrap_or(0).min(n) {
        let pk = p.coeff(k);
        if pk == 0.0 {
            continue;
        }
        for j in 0..=k {
            out[n - k + 2 * j] += pk * binom(k, j);
        }
    }
    CPoly::from_real(&out)
}

/// Read `b_{n+1}` and `c_n` off `x P_n - P_{n+1}` expanded in `P_n, P_{n-1}`.
/// Returns `(b_1..b_K, c_1..c_{K-1})` from `P_0..P_K`.
pub fn recurrence_from_p(ps: &[RealPoly]) -> Result<(Vec<f64>, Vec<f64>)> {
    if ps.len() < 2 {
        return Err(Error::Config("need at least P_0 and P_1".into()));
    }
    for (n, p) in ps.iter().enumerate() {
        if (p.coeff(n) - 1.0).abs() > 1e-9 {
            return Err(Error::DegenerateLeadingCoefficient(n));
        }
    }
    let mut b = Vec::new();
    let mut c = Vec::new();
    for n in 0..ps.len() - 1 {
        let r = ps[n].mul_x().sub(&ps[n + 1]);
        let bn = r.coeff(n);
        b.push(bn);
        if n >= 1 {
            let r2 = r.sub(&ps[n].scaled(bn));
            c.push(r2.coeff(n - 1));
        }
    }
    Ok((b, c))
}

fn alpha_with_conventions(seq: &VerblunskySequence, i: i64) -> Result<f64> {
    match i {
        -1 => Ok(-1.0),
        -2 => Ok(0.0),
        _ => seq.alpha_real(i as usize),
    }
}

/// Closed-form recurrence data `(b_1..b_kmax, c_1..c_kmax)` straight from
/// the coefficient sequence.
pub fn geronimus(seq: &VerblunskySequence, kmax: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut b = Vec::with_capacity(kmax);
    let mut c = Vec::with_capacity(kmax);
    for n in 0..kmax as i64 {
        let am1 = alpha_with_conventions(seq, 2 * n - 1)?;
        let a0 = alpha_with_conventions(seq, 2 * n)?;
        let ap1 = alpha_with_conventions(seq, 2 * n + 1)?;
        let am2 = alpha_with_conventions(seq, 2 * n - 2)?;
        c.push((1.0 - am1) * (1.0 - a0 * a0) * (1.0 + ap1));
        b.push((1.0 - am1) * a0 - (1.0 + am1) * am2);
    }
    Ok((b, c))
}

/// The tridiagonal system generated by `(b, c)`: diagonal `b_n`,
/// superdiagonal `sqrt|c_n|`, subdiagonal `c_n/sqrt|c_n|`, with the sign
/// cascade `Delta_1 = 1`, `Delta_{n+1} = Delta_n sign(c_n)`.
///
/// The subdiagonal is stored as `Delta_n Delta_{n+1} sqrt|c_n|`, which is
/// the same number and makes `G H` symmetric entrywise exactly.
#[derive(Clone, Debug)]
pub struct GenJacobiSystem {
    b: Vec<f64>,
    c: Vec<f64>,
    delta: Vec<i8>,
    sup: Vec<f64>,
    sub: Vec<f64>,
    p: Vec<RealPoly>,
    size: usize,
}

pub fn build_system(b: &[f64], c: &[f64]) -> Result<GenJacobiSystem> {
    let size = b.len();
    if size == 0 {
        return Err(Error::Config("empty recurrence data".into()));
    }
    for (i, &cv) in c.iter().enumerate() {
        if cv == 0.0 || cv.abs() < 1e-200 {
            return Err(Error::ZeroC(i + 1));
        }
    }
    let offdiag = size.saturating_sub(1);
    if c.len() < offdiag {
        return Err(Error::Config(format!(
            "need at least {offdiag} c values for a size-{size} system"
        )));
    }
    let mut delta: Vec<i8> = Vec::with_capacity(size);
    delta.push(1);
    for n in 1..size {
        let prev = delta[n - 1];
        delta.push(if c[n - 1] < 0.0 { -prev } else { prev });
    }
    let mut sup = Vec::with_capacity(offdiag);
    let mut sub = Vec::with_capacity(offdiag);
    for i in 0..offdiag {
        let s = c[i].abs().sqrt();
        sup.push(s);
        sub.push(f64::from(delta[i] * delta[i + 1]) * s);
    }
    // P_{n+1} = (x - b_{n+1}) P_n - c_n P_{n-1}
    let mut p = vec![RealPoly::one()];
    for n in 0..size {
        let mut next = p[n].mul_x().sub(&p[n].scaled(b[n]));
        if n >= 1 {
            next = next.sub(&p[n - 1].scaled(c[n - 1]));
        }
        p.push(next);
    }
    Ok(GenJacobiSystem {
        b: b.to_vec(),
        c: c[..offdiag.max(c.len().min(size))].to_vec(),
        delta,
        sup,
        sub,
        p,
        size,
    })
}

impl GenJacobiSystem {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn c(&self) -> &[f64] {
        &self.c
    }

    /// Signature diagonal, `delta()[0] = Delta_1 = 1`.
    pub fn delta(&self) -> &[i8] {
        &self.delta
    }

    pub fn polys(&self) -> &[RealPoly] {
        &self.p
    }

    /// Dense entry `H_{ij}` (1-indexed like the coefficients).
    pub fn h_entry(&self, i: usize, j: usize) -> f64 {
        if i == j {
            self.b[i - 1]
        } else if j == i + 1 {
            self.sup[i - 1]
        } else if i == j + 1 {
            self.sub[j - 1]
        } else {
            0.0
        }
    }

    /// Max entrywise asymmetry of `G H`; zero by construction.
    pub fn gh_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.size.saturating_sub(1) {
            let upper = f64::from(self.delta[i]) * self.sup[i];
            let lower = f64::from(self.delta[i + 1]) * self.sub[i];
            worst = worst.max((upper - lower).abs());
        }
        worst
    }

    fn resolvent_first(&self, z: Complex64, k: usize) -> Result<Complex64> {
        if k == 0 || k > self.size {
            return Err(Error::Config(format!(
                "truncation {k} outside 1..={}",
                self.size
            )));
        }
        // Thomas sweep on (H_k - z) w = e1; only w_0 is needed but the
        // back substitution runs anyway
        let mut diag = Vec::with_capacity(k);
        let mut rhs = Vec::with_capacity(k);
        diag.push(Complex64::new(self.b[0], 0.0) - z);
        rhs.push(Complex64::new(1.0, 0.0));
        for i in 1..k {
            let pivot = diag[i - 1];
            if pivot.norm() < 1e-12 {
                return Err(Error::SingularShift(pivot.norm()));
            }
            let l = self.sub[i - 1] / pivot;
            diag.push(Complex64::new(self.b[i], 0.0) - z - l * self.sup[i - 1]);
            let prev = rhs[i - 1];
            rhs.push(-l * prev);
        }
        let last = diag[k - 1];
        if last.norm() < 1e-12 {
            return Err(Error::SingularShift(last.norm()));
        }
        let mut w = rhs[k - 1] / last;
        for i in (0..k - 1).rev() {
            w = (rhs[i] - self.sup[i] * w) / diag[i];
        }
        Ok(w)
    }

    /// `m(z) = ((H_K - z)^{-1} e, e)_G`, checked against the `K + 16`
    /// truncation.
    pub fn m_function(&self, z: Complex64, k: usize) -> Result<Complex64> {
        if k + 16 > self.size {
            return Err(Error::Config(format!(
                "m-function needs K + 16 = {} rows, system has {}",
                k + 16,
                self.size
            )));
        }
        let coarse = self.resolvent_first(z, k)?;
        let fine = self.resolvent_first(z, k + 16)?;
        let diff = (coarse - fine).norm();
        if diff > 1e-8 * fine.norm().max(1.0) {
            return Err(Error::TruncationNotConverged(diff));
        }
        Ok(fine)
    }
}

/// `|F(z) - (z - 1/z) m_K(z + 1/z)|`.
pub fn cnr_residual(
    chain: &SchurChain,
    sys: &GenJacobiSystem,
    z: Complex64,
    k: usize,
) -> Result<f64> {
    let r = z.norm();
    if !(0.02..1.0).contains(&r) {
        return Err(Error::Config(format!(
            "sample point needs 0.02 <= |z| < 1, got {r}"
        )));
    }
    let f = chain.eval_caratheodory(z)?;
    let x = z + z.finv();
    let m = sys.m_function(x, k)?;
    Ok((f - (z - z.finv()) * m).norm())
}

/// Orthogonality of `P_n` against the transformed moments: the largest
/// pairing `<x^k P_n, gamma>` for `k < n`, and the diagonal `<x^n P_n, gamma>`.
pub fn gamma_orthogonality(
    table: &MomentTable,
    ps: &[RealPoly],
    n: usize,
) -> Result<(f64, f64)> {
    let p = &ps[n];
    let pair = |k: usize| -> Result<f64> {
        let mut acc = Dd::default();
        for (j, &coef) in p.coeffs().iter().enumerate() {
            acc = acc.add(gamma_moment_dd(table, k + j)?.mul_f64(coef));
        }
        Ok(acc.value())
    };
    let mut off = 0.0f64;
    for k in 0..n {
        off = off.max(pair(k)?.abs());
    }
    Ok((off, pair(n)?))
}

/// Circle-side orthogonality `<conj(w)^k Phi_n, mu> = sum_j t_j mu(z^{j-k})`.
pub fn mu_orthogonality(
    table: &MomentTable,
    pairs: &[MonicPair],
    n: usize,
) -> Result<(f64, f64)> {
    let phi = &pairs[n].phi;
    let pair = |k: i64| -> Result<Complex64> {
        let mut acc = Complex64::ZERO;
        for (j, &coef) in phi.coeffs().iter().enumerate() {
            acc += coef * table.mu_at(j as i64 - k)?;
        }
        Ok(acc)
    };
    let mut off = 0.0f64;
    for k in 0..n as i64 {
        off = off.max(pair(k)?.norm());
    }
    Ok((off, pair(n as i64)?.norm()))
}

/// `(max_{k >= kmin} |b_k|, max_{k >= kmin} |c_k - 1|)` over the given
/// 1-indexed arrays.
pub fn tail_limits(b: &[f64], c: &[f64], kmin: usize) -> Result<(f64, f64)> {
    if b.len() < kmin + 16 || c.len() < kmin + 16 {
        return Err(Error::Config(format!(
            "need arrays of length >= {} for kmin = {kmin}",
            kmin + 16
        )));
    }
    let sup_b = b[kmin - 1..].iter().map(|v| v.abs()).fold(0.0, f64::max);
    let sup_c = c[kmin - 1..]
        .iter()
        .map(|v| (v - 1.0).abs())
        .fold(0.0, f64::max);
    Ok((sup_b, sup_c))
}
