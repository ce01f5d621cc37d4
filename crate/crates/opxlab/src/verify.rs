//! The cross-check battery: every closed form the worked sequences admit,
//! plus identity suites over seeded random sequences.
//!
//! Each check reports a single `measured` number and passes iff
//! `measured <= threshold`; monotone-decay requirements are encoded as
//! ratio checks so that rule stays uniform.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::coeffs::{
    preset, random_szego, random_szego_real, weights, Preset, VerblunskySequence,
};
use crate::error::Result;
use crate::poly::{reverse, second_kind_chain, szego_chain, CPoly};
use crate::schur::{khrushchev_residual, maclaurin_f, schur_chain};
use crate::szegofn::{
    l1_error, limit_blaschke, weak_error, CircleGrid, SzegoEvaluator, INSIDE_BAND,
};
use crate::szegomap::{
    build_system, cnr_residual, gamma_pair, geronimus, map_p, mapped_z_poly, mu_moments,
    recurrence_from_p, RealPoly,
};

/// Which slice of the battery to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Algebraic,
    Asymptotic,
    Map,
    Examples,
    All,
}

impl std::str::FromStr for Suite {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "algebraic" => Ok(Suite::Algebraic),
            "asymptotic" => Ok(Suite::Asymptotic),
            "map" => Ok(Suite::Map),
            "examples" => Ok(Suite::Examples),
            "all" => Ok(Suite::All),
            other => Err(crate::error::Error::Config(format!(
                "unknown suite `{other}` (expected algebraic|asymptotic|map|examples|all)"
            ))),
        }
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Suite::Algebraic => "algebraic",
            Suite::Asymptotic => "asymptotic",
            Suite::Map => "map",
            Suite::Examples => "examples",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

/// One verification row.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: &'static str,
    pub suite: Suite,
    pub passed: bool,
    pub measured: f64,
    pub threshold: f64,
    pub detail: String,
}

fn check(
    id: &'static str,
    suite: Suite,
    threshold: f64,
    body: impl FnOnce() -> Result<(f64, String)>,
) -> CheckResult {
    match body() {
        Ok((measured, detail)) => CheckResult {
            id,
            suite,
            passed: measured <= threshold,
            measured,
            threshold,
            detail,
        },
        Err(e) => CheckResult {
            id,
            suite,
            passed: false,
            measured: f64::INFINITY,
            threshold,
            detail: format!("error: {e}"),
        },
    }
}

fn fmt_list(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| format!("{v:.3e}"))
        .collect::<Vec<_>>()
        .join(", ")
}

// ---------------------------------------------------------------------------
// closed forms for the two worked sequences

pub fn ex1_d_closed(z: Complex64) -> Complex64 {
    Complex64::new(3.0f64.sqrt(), 0.0) / (Complex64::new(2.0, 0.0) - z)
}

pub fn ex1_limit(z: Complex64) -> Complex64 {
    Complex64::new(1.0, 0.0) - 2.0 * z
}

pub fn ex2_d_closed(z: Complex64) -> Complex64 {
    let s = 2.0f64.sqrt();
    let num =
        Complex64::new(28.0f64.sqrt(), 0.0) * (Complex64::new(1.0, 0.0) - z * (s - 1.0));
    let den = Complex64::new((2.0 - s).sqrt(), 0.0)
        * (Complex64::new(2.0 * s, 0.0) - z)
        * (Complex64::new(2.0 * s + 1.0, 0.0) - z);
    num / den
}

pub fn ex2_limit(z: Complex64) -> Complex64 {
    let s = 2.0f64.sqrt();
    let num = -(6.0 + 5.0 * s)
        * (z - Complex64::new((2.0 * s - 1.0) / 7.0, 0.0))
        * (z - Complex64::new(2.0 * s, 0.0));
    num / (4.0 * (z - Complex64::new(s + 1.0, 0.0)))
}

/// The weighted pairing that realizes orthogonality for the single-large
/// chain: circle integral against `1/|w - 2|^2` plus point masses of weight
/// `m_const` coupling the values at 2 and 1/2.
pub fn gt_pairing(f: &CPoly, g: &CPoly, m_const: f64, nodes: usize) -> Complex64 {
    let mut acc = Complex64::ZERO;
    for k in 0..nodes {
        let theta = std::f64::consts::TAU * (k as f64 + 0.5) / nodes as f64;
        let w = Complex64::from_polar(1.0, theta);
        let weight = (w - Complex64::new(2.0, 0.0)).norm_sqr();
        acc += f.eval(w) * g.eval(w).conj() / weight;
    }
    acc /= nodes as f64;
    let two = Complex64::new(2.0, 0.0);
    let half = Complex64::new(0.5, 0.0);
    acc + m_const * (f.eval(two) * g.eval(half).conj() + f.eval(half) * g.eval(two).conj())
}

// ---------------------------------------------------------------------------
// sample-point sets (fixed, so reports are reproducible byte for byte)

fn disk_points_10() -> Vec<Complex64> {
    (0..10)
        .map(|j| {
            Complex64::from_polar(
                0.08 * (j as f64 + 1.0),
                std::f64::consts::TAU * j as f64 / 10.0 + 0.3,
            )
        })
        .collect()
}

fn disk_points_20() -> Vec<Complex64> {
    let mut pts = Vec::with_capacity(20);
    for (i, r) in [0.2, 0.4, 0.6, 0.8].into_iter().enumerate() {
        for k in 0..5 {
            pts.push(Complex64::from_polar(
                r,
                std::f64::consts::TAU * k as f64 / 5.0 + 0.17 * (i as f64 + 1.0),
            ));
        }
    }
    pts
}

fn cnr_points() -> Vec<Complex64> {
    vec![
        Complex64::new(0.1, 0.0),
        Complex64::new(-0.12, 0.0),
        Complex64::new(0.0, 0.2),
        Complex64::new(0.0, -0.25),
        Complex64::new(0.15, 0.15),
        Complex64::new(-0.2, 0.1),
    ]
}

// ---------------------------------------------------------------------------
// the checks

/// Chain of the single-large sequence is `z^(n-1)(z - 2)` for `n <= 30`.
pub fn c01_ex1_chain() -> CheckResult {
    check("c01_ex1_chain", Suite::Examples, 1e-12, || {
        let seq = preset(&Preset::SingleLarge)?;
        let chain = szego_chain(&seq, 30);
        let mut worst = 0.0f64;
        for n in 1..=30usize {
            let mut expect = vec![Complex64::ZERO; n + 1];
            expect[n] = Complex64::new(1.0, 0.0);
            expect[n - 1] = Complex64::new(-2.0, 0.0);
            let diff = chain.pairs[n].phi.sub(&CPoly::new(expect)).max_coeff_norm();
            worst = worst.max(diff);
        }
        Ok((
            worst,
            format!(
                "max coefficient deviation over n <= 30, certified_to = {}",
                chain.certified_to
            ),
        ))
    })
}

/// Weighted pairing with mass -1/3: `(Phi_0, Phi_0) = -1/3`, all other
/// pairs up to degree 10 orthonormal.
pub fn c02_ex1_bilinear() -> CheckResult {
    check("c02_ex1_bilinear", Suite::Examples, 1e-9, || {
        let seq = preset(&Preset::SingleLarge)?;
        let chain = szego_chain(&seq, 10);
        let m_const = -1.0 / 3.0;
        let mut worst = 0.0f64;
        for n in 0..=10usize {
            for m in 0..=10usize {
                let v = gt_pairing(&chain.pairs[n].phi, &chain.pairs[m].phi, m_const, 2048);
                let expect = if n == 0 && m == 0 {
                    Complex64::new(-1.0 / 3.0, 0.0)
                } else if n == m {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::ZERO
                };
                worst = worst.max((v - expect).norm());
            }
        }
        Ok((
            worst,
            "max deviation of (Phi_n, Phi_m) from the orthogonality table".into(),
        ))
    })
}

/// Quadrature `D` against `sqrt 3/(2 - z)` at ten disk points.
pub fn c03a_ex1_szego_d() -> CheckResult {
    check("c03a_ex1_szego_d", Suite::Examples, 1e-8, || {
        let seq = preset(&Preset::SingleLarge)?;
        let ev = SzegoEvaluator::for_sequence(&seq, CircleGrid::new(256)?)?;
        let mut worst = 0.0f64;
        for z in disk_points_10() {
            worst = worst.max((ev.szego_d(z, 1e-10)? - ex1_d_closed(z)).norm());
        }
        Ok((worst, "max |D_quad - closed| over 10 points".into()))
    })
}

/// The limit Blaschke product of the single-large chain has `B(0) = 1/2`.
pub fn c03b_ex1_blaschke_origin() -> CheckResult {
    check("c03b_ex1_blaschke_origin", Suite::Examples, 1e-10, || {
        let seq = preset(&Preset::SingleLarge)?;
        let (b, stab) = limit_blaschke(&seq, 12)?;
        let v = (b.eval(Complex64::ZERO) - Complex64::new(0.5, 0.0)).norm();
        Ok((v, format!("|B(0) - 1/2|, root count stabilized at n = {stab}")))
    })
}

/// Mapped polynomials of the single-large chain in the `z` variable.
pub fn c04a_ex1_mapped_coeffs() -> CheckResult {
    check("c04a_ex1_mapped_coeffs", Suite::Asymptotic, 1e-12, || {
        let seq = preset(&Preset::SingleLarge)?;
        let chain = szego_chain(&seq, 30);
        let mut worst = 0.0f64;
        for n in 1..=15usize {
            let p = map_p(&chain.pairs, n)?;
            let mz = mapped_z_poly(&p, n);
            let mut expect = vec![0.0f64; 2 * n + 1];
            expect[0] = 1.0;
            expect[2 * n] = 1.0;
            expect[1] += -2.0;
            expect[2 * n - 1] += -2.0;
            let diff = mz.sub(&CPoly::from_real(&expect)).max_coeff_norm();
            worst = worst.max(diff);
        }
        Ok((
            worst,
            "max coefficient deviation of z^n P_n(z + 1/z) for n <= 15".into(),
        ))
    })
}

/// The sup-distance to the limit on `|z| = 1/2` contracts by at least 4x
/// per unit of `n`.
pub fn c04b_ex1_sup_decay() -> CheckResult {
    check("c04b_ex1_sup_decay", Suite::Asymptotic, 0.2500001, || {
        let seq = preset(&Preset::SingleLarge)?;
        let chain = szego_chain(&seq, 32);
        let sup = |n: usize| -> Result<f64> {
            let p = map_p(&chain.pairs, n)?;
            let mz = mapped_z_poly(&p, n);
            let mut worst = 0.0f64;
            for k in 0..64 {
                let z = Complex64::from_polar(
                    0.5,
                    std::f64::consts::TAU * (k as f64 + 0.5) / 64.0,
                );
                worst = worst.max((mz.eval(z) - ex1_limit(z)).norm());
            }
            Ok(worst)
        };
        let mut prev = sup(1)?;
        let mut worst_ratio = 0.0f64;
        for n in 2..=15 {
            let cur = sup(n)?;
            worst_ratio = worst_ratio.max(cur / prev);
            prev = cur;
        }
        Ok((
            worst_ratio,
            "max e_{n+1}/e_n on |z| = 1/2 (4x contraction means <= 1/4)".into(),
        ))
    })
}

/// At the interior pole the mapped values die out: `|z^n P_n(z + 1/z)|` at
/// `z = 1/2` is below 1e-6 by `n = 12`.
pub fn c05_ex1_pole_limit() -> CheckResult {
    check("c05_ex1_pole_limit", Suite::Asymptotic, 1e-6, || {
        let seq = preset(&Preset::SingleLarge)?;
        let chain = szego_chain(&seq, 24);
        let p = map_p(&chain.pairs, 12)?;
        let v = mapped_z_poly(&p, 12).eval(Complex64::new(0.5, 0.0)).norm();
        Ok((v, "|z^12 P_12(z + 1/z)| at z = 1/2".into()))
    })
}

/// Closed-form recurrence data against the coefficient-comparison readout
/// on the presets and 100 seeded random real sequences.
pub fn c06a_geronimus_oracle(seed: u64) -> CheckResult {
    check("c06a_geronimus_oracle", Suite::Map, 1e-9, || {
        let mut sequences: Vec<VerblunskySequence> = vec![
            preset(&Preset::SingleLarge)?,
            preset(&Preset::AppendedGeronimus)?,
            preset(&Preset::ClassicalZero)?,
        ];
        for i in 0..100u64 {
            sequences.push(random_szego_real(
                seed.wrapping_mul(1000) + i,
                0.55,
                (i % 4) as usize,
            )?);
        }
        let mut worst = 0.0f64;
        for seq in &sequences {
            let chain = szego_chain(seq, 16);
            let ps: Vec<RealPoly> =
                (0..=7).map(|n| map_p(&chain.pairs, n)).collect::<Result<_>>()?;
            let (ob, oc) = recurrence_from_p(&ps)?;
            let (gb, gc) = geronimus(seq, 7)?;
            for n in 0..7 {
                worst = worst.max((ob[n] - gb[n]).abs() / gb[n].abs().max(1.0));
            }
            for n in 0..6 {
                worst = worst.max((oc[n] - gc[n]).abs() / gc[n].abs().max(1.0));
            }
        }
        Ok((
            worst,
            "max relative deviation over presets + 100 random real sequences".into(),
        ))
    })
}

/// Frozen single-large recurrence values.
pub fn c06b_ex1_recurrence_values() -> CheckResult {
    check("c06b_ex1_recurrence_values", Suite::Map, 1e-12, || {
        let seq = preset(&Preset::SingleLarge)?;
        let (b, c) = geronimus(&seq, 4)?;
        let worst = (b[0] - 4.0)
            .abs()
            .max((b[1] + 2.0).abs())
            .max((c[0] + 6.0).abs())
            .max((c[1] - 1.0).abs());
        Ok((worst, "b_1 = 4, b_2 = -2, c_1 = -6, c_2 = 1".into()))
    })
}

/// Quadrature `D` for the appended sequence against its closed form.
pub fn c07a_ex2_szego_d() -> CheckResult {
    check("c07a_ex2_szego_d", Suite::Examples, 1e-7, || {
        let seq = preset(&Preset::AppendedGeronimus)?;
        let ev = SzegoEvaluator::for_sequence(&seq, CircleGrid::new(512)?)?;
        let mut worst = 0.0f64;
        for z in disk_points_10() {
            worst = worst.max((ev.szego_d(z, 1e-10)? - ex2_d_closed(z)).norm());
        }
        Ok((worst, "max |D_quad - closed| over 10 points".into()))
    })
}

pub fn c07b_ex2_d_origin() -> CheckResult {
    check("c07b_ex2_d_origin", Suite::Examples, 1e-8, || {
        let seq = preset(&Preset::AppendedGeronimus)?;
        let ev = SzegoEvaluator::for_sequence(&seq, CircleGrid::new(512)?)?;
        let s = 2.0f64.sqrt();
        let expect = 7.0f64.sqrt() / ((2.0 * s + 1.0) * (4.0 - 2.0 * s).sqrt());
        let v = (ev.szego_d(Complex64::ZERO, 1e-10)? - Complex64::new(expect, 0.0)).norm();
        Ok((v, "|D(0) - sqrt7/((2 sqrt2 + 1) sqrt(4 - 2 sqrt2))|".into()))
    })
}

/// The interior root of the reversed chain settles at `1/(2 sqrt2 + 1)`.
pub fn c07c_ex2_inside_zero() -> CheckResult {
    check("c07c_ex2_inside_zero", Suite::Examples, 1e-3, || {
        let seq = preset(&Preset::AppendedGeronimus)?;
        let (b, stab) = limit_blaschke(&seq, 16)?;
        if b.len() != 1 {
            return Ok((
                f64::INFINITY,
                format!("expected one interior zero, found {}", b.len()),
            ));
        }
        let target = 1.0 / (2.0 * 2.0f64.sqrt() + 1.0);
        let v = (b.zeros()[0] - Complex64::new(target, 0.0)).norm();
        Ok((
            v,
            format!("distance of the n = 16 interior zero to the limit, stabilized at n = {stab}"),
        ))
    })
}

fn ex2_asymp_errors() -> Result<Vec<f64>> {
    let seq = preset(&Preset::AppendedGeronimus)?;
    let chain = szego_chain(&seq, 32);
    let pts = disk_points_20();
    let mut errs = Vec::new();
    for n in [4usize, 8, 12, 16] {
        let p = map_p(&chain.pairs, n)?;
        let mz = mapped_z_poly(&p, n);
        let mut worst = 0.0f64;
        for &z in &pts {
            worst = worst.max((mz.eval(z) - ex2_limit(z)).norm());
        }
        errs.push(worst);
    }
    Ok(errs)
}

/// The mapped chain approaches the rational limit function: errors at
/// `n = 4, 8, 12, 16` strictly decrease.
pub fn c08a_ex2_asymp_decreasing() -> CheckResult {
    check(
        "c08a_ex2_asymp_decreasing",
        Suite::Asymptotic,
        0.9999999,
        || {
            let errs = ex2_asymp_errors()?;
            let mut worst = 0.0f64;
            for w in errs.windows(2) {
                worst = worst.max(w[1] / w[0]);
            }
            Ok((
                worst,
                format!("max step ratio of [{}] over n = 4, 8, 12, 16", fmt_list(&errs)),
            ))
        },
    )
}

pub fn c08b_ex2_asymp_final() -> CheckResult {
    check("c08b_ex2_asymp_final", Suite::Asymptotic, 5e-3, || {
        let errs = ex2_asymp_errors()?;
        Ok((
            errs[3],
            "max |z^16 P_16(z + 1/z) - L(z)| over 20 disk samples".into(),
        ))
    })
}

/// The limit function is normalized: `L(0) = 1`.
pub fn c08c_ex2_limit_origin() -> CheckResult {
    check("c08c_ex2_limit_origin", Suite::Asymptotic, 1e-14, || {
        Ok((
            (ex2_limit(Complex64::ZERO) - Complex64::new(1.0, 0.0)).norm(),
            "|L(0) - 1|".into(),
        ))
    })
}

/// Boundary identity residual for `n = 1, 2, 3` on the presets and 50
/// seeded random finite-tail sequences.
pub fn c09_khrushchev(seed: u64) -> CheckResult {
    check("c09_khrushchev", Suite::Algebraic, 1e-9, || {
        let grid = CircleGrid::new(512)?;
        let mut sequences: Vec<VerblunskySequence> = vec![
            preset(&Preset::SingleLarge)?,
            preset(&Preset::AppendedGeronimus)?,
        ];
        for i in 0..50u64 {
            sequences.push(random_szego(
                seed.wrapping_mul(2000) + i,
                0.6,
                (i % 4) as usize,
            )?);
        }
        let worst = sequences
            .par_iter()
            .map(|seq| {
                let mut local = 0.0f64;
                for n in 1..=3usize {
                    local =
                        local.max(khrushchev_residual(seq, n, &grid).unwrap_or(f64::INFINITY));
                }
                local
            })
            .reduce(|| 0.0, f64::max);
        Ok((
            worst,
            "max residual over presets + 50 random sequences, n in {1,2,3}".into(),
        ))
    })
}

fn cnr_worst(p: &Preset, k: usize) -> Result<f64> {
    let seq = preset(p)?;
    let chain = schur_chain(&seq)?;
    let (b, c) = geronimus(&seq, k + 32)?;
    let sys = build_system(&b, &c)?;
    let mut worst = 0.0f64;
    for z in cnr_points() {
        worst = worst.max(cnr_residual(&chain, &sys, z, k)?);
    }
    Ok(worst)
}

/// `F(z)` against `(z - 1/z) m(z + 1/z)` for the single-large and all-zero
/// sequences (truncation at most 128 rows including the convergence check).
pub fn c10a_cnr_ex1_zero() -> CheckResult {
    check("c10a_cnr_ex1_zero", Suite::Map, 1e-6, || {
        let a = cnr_worst(&Preset::SingleLarge, 112)?;
        let b = cnr_worst(&Preset::ClassicalZero, 112)?;
        Ok((
            a.max(b),
            "max residual over 6 points, K = 112 (checked against K + 16 = 128)".into(),
        ))
    })
}

pub fn c10b_cnr_ex2() -> CheckResult {
    check("c10b_cnr_ex2", Suite::Map, 1e-5, || {
        let v = cnr_worst(&Preset::AppendedGeronimus, 112)?;
        Ok((v, "max residual over 6 points, K = 112".into()))
    })
}

/// Beyond a zero tail the recurrence data sit exactly at their limits:
/// `b_k = 0`, `c_k = 1` for `k > M + 2`.
pub fn c11a_tail_exact(seed: u64) -> CheckResult {
    check("c11a_tail_exact", Suite::Map, 0.0, || {
        let mut worst = 0.0f64;
        let single = preset(&Preset::SingleLarge)?;
        let (b, c) = geronimus(&single, 24)?;
        let (sb, sc) = crate::szegomap::tail_limits(&b, &c, 4)?;
        worst = worst.max(sb).max(sc);
        for i in 0..20u64 {
            let seq = random_szego_real(seed.wrapping_mul(3000) + i, 0.5, (i % 4) as usize)?;
            let m = seq.tail_start();
            let (b, c) = geronimus(&seq, m + 3 + 16)?;
            let (sb, sc) = crate::szegomap::tail_limits(&b, &c, m + 3)?;
            worst = worst.max(sb).max(sc);
        }
        Ok((
            worst,
            "max |b_k| and |c_k - 1| past M + 2 over 21 finite-tail sequences".into(),
        ))
    })
}

/// The appended sequence reaches the same limits to 1e-6 by `k = 20`.
pub fn c11b_ex2_tail() -> CheckResult {
    check("c11b_ex2_tail", Suite::Map, 1e-6, || {
        let seq = preset(&Preset::AppendedGeronimus)?;
        let (b, c) = geronimus(&seq, 40)?;
        let (sb, sc) = crate::szegomap::tail_limits(&b, &c, 20)?;
        Ok((sb.max(sc), "max |b_k| and |c_k - 1| for k >= 20".into()))
    })
}

/// The single-large normalized chain reproduces `Re F` exactly, so the L1
/// gauge vanishes for every `n >= 1`.
pub fn c12a_ex1_l1() -> CheckResult {
    check("c12a_ex1_l1", Suite::Asymptotic, 1e-10, || {
        let seq = preset(&Preset::SingleLarge)?;
        let ev = SzegoEvaluator::for_sequence(&seq, CircleGrid::new(512)?)?;
        let mut worst = 0.0f64;
        for n in 1..=12usize {
            worst = worst.max(l1_error(&seq, n, &ev)?);
        }
        Ok((worst, "max L1 gauge over n = 1..12".into()))
    })
}

fn ex2_ev() -> Result<(VerblunskySequence, SzegoEvaluator)> {
    let seq = preset(&Preset::AppendedGeronimus)?;
    let ev = SzegoEvaluator::for_sequence(&seq, CircleGrid::new(1024)?)?;
    Ok((seq, ev))
}

pub fn c12b_ex2_l1_decreasing() -> CheckResult {
    check(
        "c12b_ex2_l1_decreasing",
        Suite::Asymptotic,
        0.9999999,
        || {
            let (seq, ev) = ex2_ev()?;
            let errs: Vec<f64> = [4usize, 8, 16]
                .iter()
                .map(|&n| l1_error(&seq, n, &ev))
                .collect::<Result<_>>()?;
            let worst = (errs[1] / errs[0]).max(errs[2] / errs[1]);
            Ok((
                worst,
                format!("step ratios of L1 gauge [{}] over n = 4, 8, 16", fmt_list(&errs)),
            ))
        },
    )
}

pub fn c12c_ex2_l1_final() -> CheckResult {
    check("c12c_ex2_l1_final", Suite::Asymptotic, 1e-3, || {
        let (seq, ev) = ex2_ev()?;
        Ok((l1_error(&seq, 16, &ev)?, "L1 gauge at n = 16".into()))
    })
}

/// Fourier coefficients `k = 0, +-1, +-2` of the log comparison decrease
/// along `n = 4, 8, 16`.
pub fn c12d_ex2_weak_decreasing() -> CheckResult {
    check(
        "c12d_ex2_weak_decreasing",
        Suite::Asymptotic,
        0.9999999,
        || {
            let (seq, ev) = ex2_ev()?;
            let mut worst = 0.0f64;
            let mut detail = String::new();
            for k in [-2i64, -1, 0, 1, 2] {
                let errs: Vec<f64> = [4usize, 8, 16]
                    .iter()
                    .map(|&n| weak_error(&seq, n, k, &ev))
                    .collect::<Result<_>>()?;
                worst = worst.max(errs[1] / errs[0]).max(errs[2] / errs[1]);
                detail.push_str(&format!("k={k}: [{}]; ", fmt_list(&errs)));
            }
            Ok((worst, detail))
        },
    )
}

struct AlgebraicWorst {
    monic_star: f64,
    reversal: f64,
    involution: f64,
    wronskian: f64,
    realness: f64,
    gh: f64,
    cascade: f64,
    quasi: f64,
}

fn algebraic_battery(seed: u64) -> Result<AlgebraicWorst> {
    let mut w = AlgebraicWorst {
        monic_star: 0.0,
        reversal: 0.0,
        involution: 0.0,
        wronskian: 0.0,
        realness: 0.0,
        gh: 0.0,
        cascade: 0.0,
        quasi: 0.0,
    };
    for i in 0..100u64 {
        let real = i % 2 == 1;
        let s = seed.wrapping_mul(4000) + i;
        let spikes = (i % 4) as usize;
        let seq = if real {
            random_szego_real(s, 0.55, spikes)?
        } else {
            random_szego(s, 0.55, spikes)?
        };
        let nmax = 10usize;
        let phi = szego_chain(&seq, nmax);
        let psi = second_kind_chain(&seq, nmax);
        let wt = weights(&seq, nmax);
        for n in 0..=nmax {
            let pair = &phi.pairs[n];
            w.monic_star = w
                .monic_star
                .max((pair.phi.coeff(n) - Complex64::new(1.0, 0.0)).norm())
                .max((pair.phi_star.coeff(0) - Complex64::new(1.0, 0.0)).norm());
            let rev = reverse(&pair.phi, n)?;
            let scale = pair.phi_star.max_coeff_norm().max(1.0);
            w.reversal = w
                .reversal
                .max(pair.phi_star.sub(&rev).max_coeff_norm() / scale);
            w.involution = w
                .involution
                .max(reverse(&rev, n)?.sub(&pair.phi).max_coeff_norm());
            if real {
                w.realness = w
                    .realness
                    .max(pair.phi.max_imag())
                    .max(pair.phi_star.max_imag());
            }
            if n >= 1 {
                let lhs = pair
                    .phi
                    .mul(&psi.pairs[n].phi_star)
                    .add(&pair.phi_star.mul(&psi.pairs[n].phi));
                let mut expect = vec![Complex64::ZERO; n + 1];
                expect[n] = Complex64::new(2.0 * wt.omega(n as i64 - 1), 0.0);
                let scale = (2.0 * wt.omega(n as i64 - 1)).abs().max(1.0);
                w.wronskian = w
                    .wronskian
                    .max(lhs.sub(&CPoly::new(expect)).max_coeff_norm() / scale);
            }
        }
        if real {
            let (b, c) = geronimus(&seq, 12)?;
            let sys = build_system(&b, &c)?;
            w.gh = w.gh.max(sys.gh_asymmetry());
            // signature cascade against the raw signs; the negative count
            // stays below the number of large entries
            let mut violations = 0usize;
            for n in 1..sys.delta().len() {
                let expect = if c[n - 1] < 0.0 {
                    -sys.delta()[n - 1]
                } else {
                    sys.delta()[n - 1]
                };
                if sys.delta()[n] != expect {
                    violations += 1;
                }
            }
            let negatives = c.iter().filter(|&&v| v < 0.0).count();
            let large = seq.head().iter().filter(|a| a.norm() > 1.0).count();
            if negatives > large {
                violations += 1;
            }
            w.cascade = w.cascade.max(violations as f64);

            let big = szego_chain(&seq, 16);
            let table = mu_moments(&big.pairs, 12)?;
            let ps: Vec<RealPoly> =
                (0..=6).map(|n| map_p(&big.pairs, n)).collect::<Result<_>>()?;
            for n in 1..=5usize {
                let acc = gamma_pair(&table, &ps[n], &ps[n])?;
                let prod: f64 = c[..n].iter().product();
                if prod.abs() <= 1e-8 {
                    w.quasi = f64::INFINITY;
                } else {
                    w.quasi = w.quasi.max((acc - prod).abs() / prod.abs().max(1.0));
                }
            }
        }
    }
    Ok(w)
}

macro_rules! algebraic_check {
    ($fn_name:ident, $id:literal, $field:ident, $thr:expr, $what:literal) => {
        pub fn $fn_name(seed: u64) -> CheckResult {
            check($id, Suite::Algebraic, $thr, || {
                let w = algebraic_battery(seed)?;
                Ok((w.$field, $what.into()))
            })
        }
    };
}

algebraic_check!(
    c13a_monic_star,
    "c13a_monic_star",
    monic_star,
    0.0,
    "leading coefficient and star value at 0, exact over 100 sequences"
);
algebraic_check!(
    c13b_reversal,
    "c13b_reversal",
    reversal,
    1e-10,
    "relative gap between the star line and reverse(phi)"
);
algebraic_check!(
    c13c_involution,
    "c13c_involution",
    involution,
    0.0,
    "reverse(reverse(p)) returns p exactly"
);
algebraic_check!(
    c13d_wronskian,
    "c13d_wronskian",
    wronskian,
    1e-10,
    "coefficientwise residual of Phi Psi* + Phi* Psi = 2 omega z^n"
);
algebraic_check!(
    c13e_realness,
    "c13e_realness",
    realness,
    1e-14,
    "imaginary content of chains from real sequences"
);
algebraic_check!(
    c13f_gh_symmetry,
    "c13f_gh_symmetry",
    gh,
    0.0,
    "entrywise asymmetry of G H"
);
algebraic_check!(
    c13g_delta_cascade,
    "c13g_delta_cascade",
    cascade,
    0.0,
    "signature cascade violations and negative-count bound"
);
algebraic_check!(
    c13h_quasi_definite,
    "c13h_quasi_definite",
    quasi,
    1e-8,
    "relative gap of <P_n^2, gamma> to c_1 ... c_n"
);

/// Moments from the recursion against a dense quadrature of the
/// finite-sequence density `1/|varphi_M*|^2`, over 20 classical sequences.
pub fn c14a_moment_quadrature(seed: u64) -> CheckResult {
    check("c14a_moment_quadrature", Suite::Algebraic, 1e-10, || {
        let worst = (0..20u64)
            .into_par_iter()
            .map(|i| {
                let run = || -> Result<f64> {
                    let seq = if i % 2 == 0 {
                        random_szego(seed.wrapping_mul(5000) + i, 0.7, 0)?
                    } else {
                        random_szego_real(seed.wrapping_mul(5000) + i, 0.7, 0)?
                    };
                    let m = seq.tail_start();
                    let chain = szego_chain(&seq, m.max(10) + 2);
                    let wt = weights(&seq, m.max(1));
                    let scale = 1.0 / wt.omega(m as i64 - 1).abs().sqrt();
                    let table = mu_moments(&chain.pairs, 10)?;
                    let nodes = 1usize << 13;
                    let mut local = 0.0f64;
                    for k in 0..=10i64 {
                        let mut acc = Complex64::ZERO;
                        for j in 0..nodes {
                            let theta =
                                std::f64::consts::TAU * (j as f64 + 0.5) / nodes as f64;
                            let z = Complex64::from_polar(1.0, theta);
                            let dens = 1.0
                                / (chain.pairs[m].phi_star.eval(z).norm() * scale).powi(2);
                            acc += Complex64::from_polar(1.0, k as f64 * theta) * dens;
                        }
                        local = local.max((acc / nodes as f64 - table.mu_at(k)?).norm());
                    }
                    Ok(local)
                };
                run().unwrap_or(f64::INFINITY)
            })
            .reduce(|| 0.0, f64::max);
        Ok((
            worst,
            "max |mu_quad - mu_recursion| over 20 classical sequences, k <= 10".into(),
        ))
    })
}

/// Taylor data of `F` against the conjugated moments (twice), same kind of
/// sequences.
pub fn c14b_maclaurin_moments(seed: u64) -> CheckResult {
    check("c14b_maclaurin_moments", Suite::Algebraic, 1e-10, || {
        let mut worst = 0.0f64;
        for i in 0..20u64 {
            let seq = if i % 2 == 0 {
                random_szego(seed.wrapping_mul(5000) + i, 0.7, 0)?
            } else {
                random_szego_real(seed.wrapping_mul(5000) + i, 0.7, 0)?
            };
            let chain = szego_chain(&seq, 12);
            let table = mu_moments(&chain.pairs, 10)?;
            let f = maclaurin_f(&schur_chain(&seq)?, 10)?;
            for n in 1..=10i64 {
                let expect = 2.0 * table.mu_at(n)?.conj();
                worst = worst.max((f[n as usize] - expect).norm());
            }
        }
        Ok((
            worst,
            "max |F coefficient - 2 conj(mu)| over 20 classical sequences".into(),
        ))
    })
}

/// Interior-zero trajectories converge to the interior poles of `F` for
/// both worked sequences (half stays put, the appended one contracts).
pub fn extra_blaschke_consistency() -> CheckResult {
    check(
        "x01_blaschke_pole_consistency",
        Suite::Asymptotic,
        0.9999999,
        || {
            let ex1 = preset(&Preset::SingleLarge)?;
            let chain = szego_chain(&ex1, 14);
            let mut worst_fixed = 0.0f64;
            for n in (2..=14usize).step_by(2) {
                let rts = crate::poly::roots(&chain.pairs[n].phi_star, 1e-10)?;
                let inside: Vec<_> = rts
                    .into_iter()
                    .filter(|r| r.norm() < 1.0 - INSIDE_BAND)
                    .collect();
                if inside.len() != 1 {
                    return Ok((
                        f64::INFINITY,
                        "single-large chain lost its interior zero".into(),
                    ));
                }
                worst_fixed = worst_fixed.max((inside[0] - Complex64::new(0.5, 0.0)).norm());
            }
            if worst_fixed > 1e-10 {
                return Ok((
                    f64::INFINITY,
                    format!("interior zero drifted from 1/2 by {worst_fixed:e}"),
                ));
            }
            let ex2 = preset(&Preset::AppendedGeronimus)?;
            let chain = szego_chain(&ex2, 16);
            let target = Complex64::new(1.0 / (2.0 * 2.0f64.sqrt() + 1.0), 0.0);
            let dist = |n: usize| -> Result<f64> {
                let rts = crate::poly::roots(&chain.pairs[n].phi_star, 1e-10)?;
                Ok(rts
                    .into_iter()
                    .filter(|r| r.norm() < 1.0 - INSIDE_BAND)
                    .map(|r| (r - target).norm())
                    .fold(f64::INFINITY, f64::min))
            };
            let (d4, d8, d16) = (dist(4)?, dist(8)?, dist(16)?);
            Ok((
                (d8 / d4).max(d16 / d8),
                format!("interior-zero distances {d4:.2e}, {d8:.2e}, {d16:.2e}"),
            ))
        },
    )
}

/// The full battery, optionally restricted to a suite. Checks run
/// concurrently; the report is ordered by id.
pub fn run_suite(suite: Suite, seed: u64) -> Vec<CheckResult> {
    let jobs: Vec<Box<dyn Fn() -> CheckResult + Send + Sync>> = vec![
        Box::new(c01_ex1_chain),
        Box::new(c02_ex1_bilinear),
        Box::new(c03a_ex1_szego_d),
        Box::new(c03b_ex1_blaschke_origin),
        Box::new(c04a_ex1_mapped_coeffs),
        Box::new(c04b_ex1_sup_decay),
        Box::new(c05_ex1_pole_limit),
        Box::new(move || c06a_geronimus_oracle(seed)),
        Box::new(c06b_ex1_recurrence_values),
        Box::new(c07a_ex2_szego_d),
        Box::new(c07b_ex2_d_origin),
        Box::new(c07c_ex2_inside_zero),
        Box::new(c08a_ex2_asymp_decreasing),
        Box::new(c08b_ex2_asymp_final),
        Box::new(c08c_ex2_limit_origin),
        Box::new(move || c09_khrushchev(seed)),
        Box::new(c10a_cnr_ex1_zero),
        Box::new(c10b_cnr_ex2),
        Box::new(move || c11a_tail_exact(seed)),
        Box::new(c11b_ex2_tail),
        Box::new(c12a_ex1_l1),
        Box::new(c12b_ex2_l1_decreasing),
        Box::new(c12c_ex2_l1_final),
        Box::new(c12d_ex2_weak_decreasing),
        Box::new(move || c13a_monic_star(seed)),
        Box::new(move || c13b_reversal(seed)),
        Box::new(move || c13c_involution(seed)),
        Box::new(move || c13d_wronskian(seed)),
        Box::new(move || c13e_realness(seed)),
        Box::new(move || c13f_gh_symmetry(seed)),
        Box::new(move || c13g_delta_cascade(seed)),
        Box::new(move || c13h_quasi_definite(seed)),
        Box::new(move || c14a_moment_quadrature(seed)),
        Box::new(move || c14b_maclaurin_moments(seed)),
        Box::new(extra_blaschke_consistency),
    ];
    let mut results: Vec<CheckResult> = jobs.par_iter().map(|job| job()).collect();
    results.retain(|r| suite == Suite::All || r.suite == suite);
    results.sort_by(|a, b| a.id.cmp(b.id));
    results
}
