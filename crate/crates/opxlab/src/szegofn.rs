//! Boundary quadrature for the outer function
//! `D(z) = exp((1/4pi) int (e^(it)+z)/(e^(it)-z) log(eps Re F) dt)`
//! and the convergence gauges built on it.
//!
//! All integrals use midpoint nodes `t_k = 2 pi (k + 1/2)/M`, so roots of
//! unity (where boundary zeros of the presets sit) are never sampled, and
//! `M` doubles until two successive values of `D` agree.

use num_complex::Complex64;

use crate::coeffs::{weights, VerblunskySequence};
use crate::error::{Error, Result};
use crate::poly::{blaschke, classify_unit_roots, roots, szego_chain, BlaschkeProduct};
use crate::schur::{schur_chain, re_f_boundary, BoundarySource, SchurChain};

/// Default stop tolerance for the grid-doubling loop.
pub const DEFAULT_QUAD_TOL: f64 = 1e-9;

/// Hard ceiling for the doubling loop.
const MAX_GRID: usize = 1 << 20;

/// Roots within this band of the unit circle are reported as boundary-bound
/// and kept out of the Blaschke product.
pub const INSIDE_BAND: f64 = 1e-8;

/// Midpoint grid on the circle; `M` is a power of two, at least 16.
#[derive(Clone, Debug)]
pub struct CircleGrid {
    m: usize,
}

impl CircleGrid {
    pub fn new(m: usize) -> Result<Self> {
        if m < 16 || !m.is_power_of_two() {
            return Err(Error::Config(format!(
                "grid size must be a power of two >= 16, got {m}"
            )));
        }
        Ok(CircleGrid { m })
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn theta(&self, k: usize) -> f64 {
        std::f64::consts::TAU * (k as f64 + 0.5) / (self.m as f64)
    }

    pub fn node(&self, k: usize) -> Complex64 {
        Complex64::from_polar(1.0, self.theta(k))
    }
}

/// Snapshot of `log(eps_{N-1} Re F)` on a fixed grid, able to refine itself.
pub struct SzegoEvaluator {
    source: BoundarySource,
    sign: i8,
    grid: CircleGrid,
    log_values: Vec<f64>,
}

impl SzegoEvaluator {
    /// Sample the source; fails with `SingularNode` if the sign-corrected
    /// real part is not strictly positive somewhere.
    pub fn new(source: BoundarySource, sign: i8, grid: CircleGrid) -> Result<Self> {
        let bf = re_f_boundary(&source, &grid, sign)?;
        let mut log_values = Vec::with_capacity(bf.values.len());
        for (k, &v) in bf.values.iter().enumerate() {
            let t = f64::from(sign) * v;
            if t <= 0.0 {
                return Err(Error::SingularNode(k));
            }
            log_values.push(t.ln());
        }
        Ok(SzegoEvaluator {
            source,
            sign,
            grid,
            log_values,
        })
    }

    /// Build from a sequence via the rational `F`.
    pub fn for_sequence(seq: &VerblunskySequence, grid: CircleGrid) -> Result<Self> {
        let chain = schur_chain(seq)?;
        let w = weights(seq, seq.indefinite_len().max(1));
        let sign = w.epsilon(seq.indefinite_len() as i64 - 1) as i8;
        SzegoEvaluator::new(BoundarySource::Rational(chain), sign, grid)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn grid(&self) -> &CircleGrid {
        &self.grid
    }

    pub fn log_values(&self) -> &[f64] {
        &self.log_values
    }

    fn resampled(&self, m: usize) -> Result<Self> {
        let grid = CircleGrid::new(m)?;
        let bf = re_f_boundary(&self.source, &grid, self.sign)?;
        let mut log_values = Vec::with_capacity(m);
        for (k, &v) in bf.values.iter().enumerate() {
            let t = f64::from(self.sign) * v;
            if t <= 0.0 {
                return Err(Error::SingularNode(k));
            }
            log_values.push(t.ln());
        }
        Ok(SzegoEvaluator {
            source: self.source_clone()?,
            sign: self.sign,
            grid,
            log_values,
        })
    }

    fn source_clone(&self) -> Result<BoundarySource> {
        Ok(match &self.source {
            BoundarySource::Rational(c) => BoundarySource::Rational(c.clone()),
            BoundarySource::Closed(c) => BoundarySource::Closed(*c),
            BoundarySource::Khrushchev {
                chain,
                pair,
                omega_nm1,
            } => BoundarySource::Khrushchev {
                chain: chain.clone(),
                pair: pair.clone(),
                omega_nm1: *omega_nm1,
            },
        })
    }

    fn herglotz_exp(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for (k, &g) in self.log_values.iter().enumerate() {
            let w = self.grid.node(k);
            acc += (w + z) / (w - z) * g;
        }
        (acc / (2.0 * self.grid.len() as f64)).exp()
    }

    /// `D(z)` by grid doubling until two successive values differ by less
    /// than `tol`.
    pub fn szego_d(&self, z: Complex64, tol: f64) -> Result<Complex64> {
        if z.norm() >= 1.0 - 1e-6 {
            return Err(Error::Config(format!(
                "szego_d needs |z| < 1 - 1e-6, got |z| = {}",
                z.norm()
            )));
        }
        let mut cur = self.herglotz_exp(z);
        let mut m = self.grid.len();
        loop {
            let m2 = m * 2;
            if m2 > MAX_GRID {
                return Err(Error::QuadratureStall);
            }
            let finer = self.resampled(m2)?;
            let next = finer.herglotz_exp(z);
            if (next - cur).norm() < tol {
                return Ok(next);
            }
            cur = next;
            m = m2;
        }
    }

    /// `int e^(ikt) log(eps Re F) dt/2pi` on this evaluator's own grid.
    pub fn log_fourier(&self, k: i64) -> Result<Complex64> {
        if k.unsigned_abs() as usize > self.grid.len() / 4 {
            return Err(Error::Config(format!(
                "|k| = {} exceeds M/4 = {}",
                k.unsigned_abs(),
                self.grid.len() / 4
            )));
        }
        let mut acc = Complex64::ZERO;
        for (j, &g) in self.log_values.iter().enumerate() {
            let phase = Complex64::from_polar(1.0, k as f64 * self.grid.theta(j));
            acc += phase * g;
        }
        Ok(acc / self.grid.len() as f64)
    }
}

/// Relative factor
/// `(1 - conj(alpha_j) f_j)(1 - z f_{j+1}) / (|rho_j| (1 - z f_j))`.
pub fn relative_szego(
    seq: &VerblunskySequence,
    chain: &SchurChain,
    j: usize,
    z: Complex64,
) -> Result<Complex64> {
    let a = seq.alpha(j);
    let w = weights(seq, j);
    let rho = w.rho_abs(j);
    let fj = chain.eval_schur(j, z)?;
    let fj1 = chain.eval_schur(j + 1, z)?;
    let one = Complex64::new(1.0, 0.0);
    let den = rho * (one - z * fj);
    if den.norm() <= 1e-13 {
        return Err(Error::PoleEncountered(z));
    }
    Ok((one - a.conj() * fj) * (one - z * fj1) / den)
}

fn varphi_star_at(
    seq: &VerblunskySequence,
    n: usize,
    z: Complex64,
) -> (Complex64, f64) {
    let chain = szego_chain(seq, n);
    let w = weights(seq, n.max(1));
    let scale = 1.0 / w.omega(n as i64 - 1).abs().sqrt();
    (chain.pairs[n].phi_star.eval(z) * scale, scale)
}

fn check_sign_alignment(seq: &VerblunskySequence, n: usize) -> Result<f64> {
    let n_ind = seq.indefinite_len();
    let w = weights(seq, n.max(n_ind).max(1));
    let eps_n = w.epsilon(n as i64 - 1);
    let eps_head = w.epsilon(n_ind as i64 - 1);
    if eps_n != eps_head {
        return Err(Error::Config(format!(
            "epsilon_{} and epsilon_{} disagree; the log comparison is undefined below the indefinite head",
            n as i64 - 1,
            n_ind as i64 - 1
        )));
    }
    Ok(eps_n)
}

/// `int |log(eps_{n-1}/|varphi_n*|^2) - log Re F| dt/2pi` on the evaluator's
/// grid. Both quantities share the sign `eps_{n-1}`, so the integrand is the
/// absolute log of the positive product `|varphi_n*|^2 eps Re F`.
pub fn l1_error(seq: &VerblunskySequence, n: usize, ev: &SzegoEvaluator) -> Result<f64> {
    check_sign_alignment(seq, n)?;
    let chain = szego_chain(seq, n);
    let w = weights(seq, n.max(1));
    let scale = 1.0 / w.omega(n as i64 - 1).abs().sqrt();
    let grid = ev.grid();
    let mut acc = 0.0f64;
    for (k, &lv) in ev.log_values().iter().enumerate() {
        let v = chain.pairs[n].phi_star.eval(grid.node(k)).norm() * scale;
        if v <= 0.0 {
            return Err(Error::SingularNode(k));
        }
        acc += (2.0 * v.ln() + lv).abs();
    }
    Ok(acc / grid.len() as f64)
}

/// `|DFT_k(log(eps_{n-1}/|varphi_n*|^2)) - log_fourier(k)|` on the
/// evaluator's grid.
pub fn weak_error(
    seq: &VerblunskySequence,
    n: usize,
    k: i64,
    ev: &SzegoEvaluator,
) -> Result<f64> {
    check_sign_alignment(seq, n)?;
    let chain = szego_chain(seq, n);
    let w = weights(seq, n.max(1));
    let scale = 1.0 / w.omega(n as i64 - 1).abs().sqrt();
    let grid = ev.grid();
    let mut acc = Complex64::ZERO;
    for (j, &lv) in ev.log_values().iter().enumerate() {
        let v = chain.pairs[n].phi_star.eval(grid.node(j)).norm() * scale;
        if v <= 0.0 {
            return Err(Error::SingularNode(j));
        }
        let phase = Complex64::from_polar(1.0, k as f64 * grid.theta(j));
        acc += phase * (2.0 * v.ln() + lv);
    }
    Ok((acc / grid.len() as f64).norm())
}

/// `|varphi_n*(z) - B(z)/D(z)|` with `D` from the quadrature.
pub fn phi_star_limit_error(
    seq: &VerblunskySequence,
    n: usize,
    z: Complex64,
    b: &BlaschkeProduct,
    ev: &SzegoEvaluator,
    quad_tol: f64,
) -> Result<f64> {
    let (value, _) = varphi_star_at(seq, n, z);
    let d = ev.szego_d(z, quad_tol)?;
    Ok((value - b.eval(z) / d).norm())
}

/// `|Phi_{n+1}*(z)/Phi_n*(z) - 1|`.
pub fn star_ratio_error(seq: &VerblunskySequence, n: usize, z: Complex64) -> Result<f64> {
    let chain = szego_chain(seq, n + 1);
    let den = chain.pairs[n].phi_star.eval(z);
    let scale = chain.pairs[n].phi_star.max_coeff_norm().max(1.0);
    if den.norm() <= 1e-12 * scale {
        return Err(Error::NearZeroDenominator(z));
    }
    Ok((chain.pairs[n + 1].phi_star.eval(z) / den - Complex64::new(1.0, 0.0)).norm())
}

/// Limit Blaschke product: root counts of `Phi_n*` inside the disk are
/// scanned over even `n`; once the count holds for three consecutive even
/// indices the zeros at the largest computed `n` define the product.
///
/// Returns the product and the first even index where the count stabilized.
pub fn limit_blaschke(
    seq: &VerblunskySequence,
    nmax: usize,
) -> Result<(BlaschkeProduct, usize)> {
    if nmax < 2 {
        return Err(Error::Config("need nmax >= 2 to scan root counts".into()));
    }
    let chain = szego_chain(seq, nmax);
    let mut counts: Vec<(usize, usize)> = Vec::new();
    let mut last_inside: Vec<Complex64> = Vec::new();
    let mut n = 2;
    while n <= nmax {
        let star = &chain.pairs[n].phi_star;
        let inside: Vec<Complex64> = if star.degree().unwrap_or(0) >= 1 {
            let rts = roots(star, 1e-10)?;
            classify_unit_roots(&rts, INSIDE_BAND).0
        } else {
            Vec::new()
        };
        counts.push((n, inside.len()));
        last_inside = inside;
        n += 2;
    }
    let stabilized = counts
        .windows(3)
        .find(|w| w[0].1 == w[1].1 && w[1].1 == w[2].1)
        .map(|w| w[0].0);
    match stabilized {
        Some(idx) => Ok((blaschke(last_inside)?, idx)),
        None => Err(Error::NonConvergence(nmax)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{preset, random_szego, Preset};
    use crate::schur::ClosedReF;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn ev_for(p: &Preset, m: usize) -> SzegoEvaluator {
        let seq = preset(p).unwrap();
        SzegoEvaluator::for_sequence(&seq, CircleGrid::new(m).unwrap()).unwrap()
    }

    #[test]
    fn grid_rules() {
        assert!(CircleGrid::new(100).is_err());
        assert!(CircleGrid::new(8).is_err());
        let g = CircleGrid::new(16).unwrap();
        assert!((g.theta(0) - std::f64::consts::TAU * 0.5 / 16.0).abs() < 1e-16);
    }

    #[test]
    fn szego_d_single_large() {
        let ev = ev_for(&Preset::SingleLarge, 256);
        // D(z) = sqrt 3 / (2 - z)
        let d0 = ev.szego_d(Complex64::ZERO, 1e-10).unwrap();
        assert!((d0 - c(3.0f64.sqrt() / 2.0, 0.0)).norm() < 1e-10);
        assert!(d0.im.abs() < 1e-12);
        let z = c(0.3, 0.0);
        let dz = ev.szego_d(z, 1e-10).unwrap();
        assert!((dz - c(3.0f64.sqrt() / 1.7, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn szego_d_zero_sequence_is_one() {
        let ev = ev_for(&Preset::ClassicalZero, 64);
        for z in [Complex64::ZERO, c(0.5, 0.2), c(-0.7, 0.1)] {
            assert!((ev.szego_d(z, 1e-10).unwrap() - c(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn szego_d_appended_geronimus_origin() {
        let ev = ev_for(&Preset::AppendedGeronimus, 512);
        let s = 2.0f64.sqrt();
        let expect = 7.0f64.sqrt() / ((2.0 * s + 1.0) * (4.0 - 2.0 * s).sqrt());
        let d0 = ev.szego_d(Complex64::ZERO, 1e-10).unwrap();
        assert!((d0 - c(expect, 0.0)).norm() < 1e-8, "{d0} vs {expect}");
    }

    #[test]
    fn szego_d_rejects_near_boundary() {
        let ev = ev_for(&Preset::ClassicalZero, 64);
        assert!(ev.szego_d(c(0.9999999, 0.0), 1e-9).is_err());
    }

    #[test]
    fn quadrature_error_decays_geometrically() {
        let seq = preset(&Preset::SingleLarge).unwrap();
        let z = c(0.3, 0.0);
        let target = 3.0f64.sqrt() / 1.7;
        let mut errs = Vec::new();
        for m in [32usize, 64, 128, 256] {
            let ev =
                SzegoEvaluator::for_sequence(&seq, CircleGrid::new(m).unwrap()).unwrap();
            errs.push((ev.herglotz_exp(z) - c(target, 0.0)).norm());
        }
        for w in errs.windows(2) {
            if w[0] > 1e-12 {
                assert!(w[1] <= 0.5 * w[0], "no geometric decay: {errs:?}");
            }
        }
    }

    #[test]
    fn log_fourier_single_large() {
        let ev = ev_for(&Preset::SingleLarge, 1024);
        // mean of log(3/|1-2w|^2) is log(3/4)
        let k0 = ev.log_fourier(0).unwrap();
        assert!((k0 - c((3.0f64 / 4.0).ln(), 0.0)).norm() < 1e-12);
        for (k, expect) in [(1i64, 0.5), (-1, 0.5), (2, 0.125), (-2, 0.125)] {
            let v = ev.log_fourier(k).unwrap();
            assert!((v - c(expect, 0.0)).norm() < 1e-12, "k = {k}: {v}");
        }
    }

    #[test]
    fn log_fourier_against_brute_force() {
        // independent dense Riemann sum over the closed form
        let ev = ev_for(&Preset::SingleLarge, 1024);
        let m = 1_000_000usize;
        let mut acc = Complex64::ZERO;
        for j in 0..m {
            let theta = std::f64::consts::TAU * (j as f64 + 0.5) / m as f64;
            let g = (-ClosedReF::SingleLarge.eval(theta)).ln();
            acc += Complex64::from_polar(1.0, theta) * g;
        }
        let brute = acc / m as f64;
        let fast = ev.log_fourier(1).unwrap();
        assert!((fast - brute).norm() < 1e-10, "{fast} vs {brute}");
    }

    #[test]
    fn log_fourier_zero_sequence() {
        let ev = ev_for(&Preset::ClassicalZero, 64);
        for k in [-2i64, 0, 1] {
            assert!(ev.log_fourier(k).unwrap().norm() < 1e-15);
        }
        assert!(ev.log_fourier(40).is_err());
    }

    #[test]
    fn relative_szego_values() {
        let zero = preset(&Preset::ClassicalZero).unwrap();
        let chain = schur_chain(&zero).unwrap();
        for j in 0..3 {
            let v = relative_szego(&zero, &chain, j, c(0.3, -0.2)).unwrap();
            assert!((v - c(1.0, 0.0)).norm() < 1e-15);
        }

        let ex1 = preset(&Preset::SingleLarge).unwrap();
        let chain = schur_chain(&ex1).unwrap();
        let v = relative_szego(&ex1, &chain, 0, Complex64::ZERO).unwrap();
        assert!((v - c(-(3.0f64.sqrt()), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn relative_szego_telescopes_on_boundary() {
        // Re F = eps_{N-1} Re F_N |prod delta_j D|^2 on the circle
        for (p, tol) in [
            (Preset::SingleLarge, 1e-9),
            (Preset::AppendedGeronimus, 1e-9),
        ] {
            let seq = preset(&p).unwrap();
            let chain = schur_chain(&seq).unwrap();
            let n_ind = seq.indefinite_len();
            let w = weights(&seq, n_ind.max(1));
            let eps = w.epsilon(n_ind as i64 - 1);
            let grid = CircleGrid::new(128).unwrap();
            for k in 0..grid.len() {
                let z = grid.node(k);
                let mut prod = Complex64::new(1.0, 0.0);
                for j in 0..n_ind {
                    prod *= relative_szego(&seq, &chain, j, z).unwrap();
                }
                let lhs = chain.eval_caratheodory(z).unwrap().re;
                let rhs = eps
                    * chain.eval_caratheodory_stripped(n_ind, z).unwrap().re
                    * prod.norm_sqr();
                assert!((lhs - rhs).abs() < tol, "{p:?} node {k}: {lhs} vs {rhs}");
            }
        }
    }

    #[test]
    fn l1_error_values() {
        let ex1 = preset(&Preset::SingleLarge).unwrap();
        let ev = ev_for(&Preset::SingleLarge, 512);
        for n in 1..=8 {
            assert!(l1_error(&ex1, n, &ev).unwrap() <= 1e-10, "n = {n}");
        }

        let zero = preset(&Preset::ClassicalZero).unwrap();
        let ev = ev_for(&Preset::ClassicalZero, 64);
        assert!(l1_error(&zero, 3, &ev).unwrap() <= 1e-12);
    }

    #[test]
    fn l1_error_decreases_for_appended_geronimus() {
        let seq = preset(&Preset::AppendedGeronimus).unwrap();
        let ev = ev_for(&Preset::AppendedGeronimus, 1024);
        let e4 = l1_error(&seq, 4, &ev).unwrap();
        let e8 = l1_error(&seq, 8, &ev).unwrap();
        let e16 = l1_error(&seq, 16, &ev).unwrap();
        assert!(e8 < e4 && e16 < e8, "{e4} {e8} {e16}");
        assert!(e16 < 1e-3);
    }

    #[test]
    fn phi_star_limit_single_large() {
        let seq = preset(&Preset::SingleLarge).unwrap();
        let (b, stab) = limit_blaschke(&seq, 10).unwrap();
        assert_eq!(stab, 2);
        assert_eq!(b.len(), 1);
        assert!((b.zeros()[0] - c(0.5, 0.0)).norm() < 1e-12);
        let ev = ev_for(&Preset::SingleLarge, 256);
        let err = phi_star_limit_error(&seq, 5, c(0.3, 0.0), &b, &ev, 1e-10).unwrap();
        assert!(err <= 1e-9, "err = {err:e}");
    }

    #[test]
    fn phi_star_limit_zero_sequence() {
        let seq = preset(&Preset::ClassicalZero).unwrap();
        let (b, _) = limit_blaschke(&seq, 8).unwrap();
        assert!(b.is_empty());
        let ev = ev_for(&Preset::ClassicalZero, 64);
        let err = phi_star_limit_error(&seq, 4, c(0.2, 0.1), &b, &ev, 1e-10).unwrap();
        assert!(err < 1e-12);
    }

    #[test]
    fn ex2_inside_zero_approaches_limit() {
        let seq = preset(&Preset::AppendedGeronimus).unwrap();
        let (b, _) = limit_blaschke(&seq, 16).unwrap();
        assert_eq!(b.len(), 1);
        let target = 1.0 / (2.0 * 2.0f64.sqrt() + 1.0);
        assert!((b.zeros()[0] - c(target, 0.0)).norm() < 1e-3);

        // already at n = 12 there is exactly one interior root, this close
        let chain12 = szego_chain(&seq, 12);
        let inside: Vec<Complex64> = roots(&chain12.pairs[12].phi_star, 1e-10)
            .unwrap()
            .into_iter()
            .filter(|r| r.norm() < 1.0 - INSIDE_BAND)
            .collect();
        assert_eq!(inside.len(), 1);
        assert!((inside[0] - c(target, 0.0)).norm() < 1e-3);

        // distance to the limit shrinks along the chain
        let chain = szego_chain(&seq, 16);
        let dist = |n: usize| -> f64 {
            roots(&chain.pairs[n].phi_star, 1e-10)
                .unwrap()
                .into_iter()
                .filter(|r| r.norm() < 1.0 - INSIDE_BAND)
                .map(|r| (r - c(target, 0.0)).norm())
                .fold(f64::INFINITY, f64::min)
        };
        let (d4, d8, d16) = (dist(4), dist(8), dist(16));
        assert!(d8 < d4 && d16 < d8, "{d4} {d8} {d16}");
    }

    #[test]
    fn star_ratio_values() {
        let ex1 = preset(&Preset::SingleLarge).unwrap();
        // Phi_n* is constant in n for n >= 1
        for n in 1..=6 {
            assert_eq!(star_ratio_error(&ex1, n, c(0.2, 0.3)).unwrap(), 0.0);
        }
        // at the inside zero the ratio is undefined
        assert!(matches!(
            star_ratio_error(&ex1, 3, c(0.5, 0.0)),
            Err(Error::NearZeroDenominator(_))
        ));

        let zero = preset(&Preset::ClassicalZero).unwrap();
        assert_eq!(star_ratio_error(&zero, 4, c(0.3, -0.6)).unwrap(), 0.0);

        let ex2 = preset(&Preset::AppendedGeronimus).unwrap();
        let z = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3);
        let e4 = star_ratio_error(&ex2, 4, z).unwrap();
        let e8 = star_ratio_error(&ex2, 8, z).unwrap();
        let e16 = star_ratio_error(&ex2, 16, z).unwrap();
        assert!(e8 < e4 && e16 < e8, "{e4} {e8} {e16}");
    }

    #[test]
    fn weak_error_decreases_for_appended_geronimus() {
        let seq = preset(&Preset::AppendedGeronimus).unwrap();
        let ev = ev_for(&Preset::AppendedGeronimus, 1024);
        for k in [-2i64, -1, 0, 1, 2] {
            let e4 = weak_error(&seq, 4, k, &ev).unwrap();
            let e8 = weak_error(&seq, 8, k, &ev).unwrap();
            let e16 = weak_error(&seq, 16, k, &ev).unwrap();
            assert!(e8 < e4 && e16 < e8, "k = {k}: {e4} {e8} {e16}");
        }
    }

    #[test]
    fn random_sequences_have_positive_sign_corrected_log_argument() {
        for seed in 0..5 {
            let seq = random_szego(seed, 0.55, (seed % 3) as usize).unwrap();
            let ev =
                SzegoEvaluator::for_sequence(&seq, CircleGrid::new(128).unwrap()).unwrap();
            assert!(ev.log_values().iter().all(|v| v.is_finite()));
        }
    }
}
