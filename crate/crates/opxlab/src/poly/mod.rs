//! Complex polynomials and the coupled two-term recursion producing the
//! monic chain `Phi_n` together with the reversed chain `Phi_n*`.
//!
//! Both recursion lines are iterated independently and cross-checked against
//! the reversal identity at every step; a chain records up to which degree
//! that check stayed below 1e-9.

mod blaschke;
mod roots;

pub use blaschke::{blaschke, blaschke_eval, classify_unit_roots, BlaschkeProduct};
pub use roots::roots;

use num_complex::Complex64;

use crate::coeffs::{SignedWeights, VerblunskySequence};
use crate::error::{Error, Result};

/// Relative residual below which a chain degree counts as certified.
pub const CHAIN_CERTIFY_TOL: f64 = 1e-9;

/// Dense complex polynomial, coefficients in ascending degree order.
///
/// The zero polynomial is the empty coefficient vector; trailing exact zeros
/// are always trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct CPoly {
    coeffs: Vec<Complex64>,
}

impl CPoly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last() == Some(&Complex64::ZERO) {
            coeffs.pop();
        }
        CPoly { coeffs }
    }

    pub fn zero() -> Self {
        CPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        CPoly::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        CPoly::new(vec![c])
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        CPoly::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_imag(&self) -> f64 {
        self.coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        if c == Complex64::ZERO {
            return CPoly::zero();
        }
        CPoly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiply by `z^k`.
    pub fn mul_z(&self, k: usize) -> Self {
        if self.is_zero() {
            return CPoly::zero();
        }
        let mut coeffs = vec![Complex64::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        CPoly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return CPoly::zero();
        }
        CPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * (i as f64 + 1.0))
                .collect(),
        )
    }

    pub fn add(&self, other: &CPoly) -> CPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        CPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &CPoly) -> CPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        CPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        if self.is_zero() || other.is_zero() {
            return CPoly::zero();
        }
        let mut out = vec![Complex64::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == Complex64::ZERO {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CPoly::new(out)
    }
}

/// Conjugate-reversed polynomial of order `n`: `z^n conj(p(1/conj(z)))`.
pub fn reverse(p: &CPoly, n: usize) -> Result<CPoly> {
    if let Some(d) = p.degree() {
        if d > n {
            return Err(Error::DegreeExceedsN(n));
        }
    }
    let mut out = vec![Complex64::ZERO; n + 1];
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = p.coeff(n - k).conj();
    }
    Ok(CPoly::new(out))
}

/// One rung of a monic chain: the degree-`n` polynomial and its reverse.
#[derive(Clone, Debug)]
pub struct MonicPair {
    pub phi: CPoly,
    pub phi_star: CPoly,
    pub n: usize,
}

/// A full chain with its certification record.
#[derive(Clone, Debug)]
pub struct MonicChain {
    pub pairs: Vec<MonicPair>,
    /// Largest degree for which the independently iterated star line agreed
    /// with `reverse(phi)` within [`CHAIN_CERTIFY_TOL`] at every step so far.
    pub certified_to: usize,
    pub max_cross_residual: f64,
}

impl MonicChain {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

fn chain_with(alpha: impl Fn(usize) -> Complex64, nmax: usize) -> MonicChain {
    let mut phi = CPoly::one();
    let mut star = CPoly::one();
    let mut pairs = Vec::with_capacity(nmax + 1);
    pairs.push(MonicPair {
        phi: phi.clone(),
        phi_star: star.clone(),
        n: 0,
    });
    let mut certified_to = 0usize;
    let mut intact = true;
    let mut max_res = 0.0f64;
    for n in 0..nmax {
        let a = alpha(n);
        let z_phi = phi.mul_z(1);
        let next_phi = z_phi.sub(&star.scaled(a.conj()));
        let next_star = star.sub(&z_phi.scaled(a));
        let rev = reverse(&next_phi, n + 1).expect("chain member within degree bound");
        let scale = next_star.max_coeff_norm().max(1.0);
        let res = next_star.sub(&rev).max_coeff_norm() / scale;
        max_res = max_res.max(res);
        if intact && res <= CHAIN_CERTIFY_TOL {
            certified_to = n + 1;
        } else {
            intact = false;
        }
        phi = next_phi;
        star = next_star;
        pairs.push(MonicPair {
            phi: phi.clone(),
            phi_star: star.clone(),
            n: n + 1,
        });
    }
    MonicChain {
        pairs,
        certified_to,
        max_cross_residual: max_res,
    }
}

/// Iterate the coupled recursion
/// `Phi_{n+1} = z Phi_n - conj(alpha_n) Phi_n*`,
/// `Phi_{n+1}* = Phi_n* - alpha_n z Phi_n`, from `Phi_0 = 1`.
pub fn szego_chain(seq: &VerblunskySequence, nmax: usize) -> MonicChain {
    chain_with(|n| seq.alpha(n), nmax)
}

/// Second-kind chain: same recursion with every coefficient negated.
pub fn second_kind_chain(seq: &VerblunskySequence, nmax: usize) -> MonicChain {
    chain_with(|n| -seq.alpha(n), nmax)
}

/// Chain scaled by `1/sqrt|omega_{n-1}|`.
#[derive(Clone, Debug)]
pub struct NormalizedChain {
    pub varphi: Vec<CPoly>,
    pub varphi_star: Vec<CPoly>,
}

pub fn normalize(pairs: &[MonicPair], w: &SignedWeights) -> NormalizedChain {
    let mut varphi = Vec::with_capacity(pairs.len());
    let mut varphi_star = Vec::with_capacity(pairs.len());
    for pair in pairs {
        let scale = Complex64::new(1.0 / w.omega(pair.n as i64 - 1).abs().sqrt(), 0.0);
        varphi.push(pair.phi.scaled(scale));
        varphi_star.push(pair.phi_star.scaled(scale));
    }
    NormalizedChain {
        varphi,
        varphi_star,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{preset, random_szego, validate, weights, Preset, TailSpec};
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn coeff_close(p: &CPoly, expect: &[Complex64], tol: f64) {
        let n = expect.len().max(p.coeffs().len());
        for k in 0..n {
            let want = expect.get(k).copied().unwrap_or(Complex64::ZERO);
            assert!(
                (p.coeff(k) - want).norm() <= tol,
                "coeff {k}: {} vs {want}",
                p.coeff(k)
            );
        }
    }

    #[test]
    fn reverse_examples() {
        // z^3 - 2 z^2 reversed at order 3 is 1 - 2z
        let p = CPoly::from_real(&[0.0, 0.0, -2.0, 1.0]);
        let r = reverse(&p, 3).unwrap();
        coeff_close(&r, &[c(1.0, 0.0), c(-2.0, 0.0)], 0.0);

        let one = CPoly::one();
        assert_eq!(reverse(&one, 0).unwrap(), one);

        // (3+i) z^2 + 2 at order 2 -> 2 z^2 + (3-i)
        let p = CPoly::new(vec![c(2.0, 0.0), Complex64::ZERO, c(3.0, 1.0)]);
        let r = reverse(&p, 2).unwrap();
        coeff_close(&r, &[c(3.0, -1.0), Complex64::ZERO, c(2.0, 0.0)], 0.0);

        let p = CPoly::from_real(&[0.0, 0.0, 1.0]);
        assert!(matches!(
            reverse(&p, 1),
            Err(Error::DegreeExceedsN(1))
        ));
    }

    #[test]
    fn chain_single_large() {
        let seq = preset(&Preset::SingleLarge).unwrap();
        let chain = szego_chain(&seq, 5);
        // Phi_3 = z^3 - 2 z^2, Phi_3* = 1 - 2z
        coeff_close(
            &chain.pairs[3].phi,
            &[
                Complex64::ZERO,
                Complex64::ZERO,
                c(-2.0, 0.0),
                c(1.0, 0.0),
            ],
            1e-12,
        );
        coeff_close(&chain.pairs[3].phi_star, &[c(1.0, 0.0), c(-2.0, 0.0)], 1e-12);
        assert_eq!(chain.certified_to, 5);
    }

    #[test]
    fn chain_zero_sequence_is_monomials() {
        let seq = preset(&Preset::ClassicalZero).unwrap();
        let chain = szego_chain(&seq, 6);
        for (n, pair) in chain.pairs.iter().enumerate() {
            assert_eq!(pair.phi.degree(), Some(n));
            assert_eq!(pair.phi.coeff(n), c(1.0, 0.0));
            assert_eq!(pair.phi_star, CPoly::one());
        }
    }

    #[test]
    fn chain_half_step() {
        let seq = validate(vec![c(0.5, 0.0)], TailSpec::ZeroBeyond(1)).unwrap();
        let chain = szego_chain(&seq, 1);
        coeff_close(&chain.pairs[1].phi, &[c(-0.5, 0.0), c(1.0, 0.0)], 0.0);
        coeff_close(&chain.pairs[1].phi_star, &[c(1.0, 0.0), c(-0.5, 0.0)], 0.0);
    }

    #[test]
    fn second_kind_first_step() {
        let seq = preset(&Preset::SingleLarge).unwrap();
        let chain = second_kind_chain(&seq, 1);
        coeff_close(&chain.pairs[1].phi, &[c(2.0, 0.0), c(1.0, 0.0)], 0.0);
        coeff_close(&chain.pairs[1].phi_star, &[c(1.0, 0.0), c(2.0, 0.0)], 0.0);
    }

    #[test]
    fn wronskian_single_large_is_frozen() {
        // Phi_1 Psi_1* + Phi_1* Psi_1 = -6 z = 2 omega_0 z
        let seq = preset(&Preset::SingleLarge).unwrap();
        let phi = szego_chain(&seq, 1);
        let psi = second_kind_chain(&seq, 1);
        let w = phi.pairs[1]
            .phi
            .mul(&psi.pairs[1].phi_star)
            .add(&phi.pairs[1].phi_star.mul(&psi.pairs[1].phi));
        coeff_close(&w, &[Complex64::ZERO, c(-6.0, 0.0)], 1e-12);
    }

    fn wronskian_residual(seq: &VerblunskySequence, nmax: usize) -> f64 {
        let phi = szego_chain(seq, nmax);
        let psi = second_kind_chain(seq, nmax);
        let w = weights(seq, nmax);
        let mut worst = 0.0f64;
        for n in 1..=nmax {
            let lhs = phi.pairs[n]
                .phi
                .mul(&psi.pairs[n].phi_star)
                .add(&phi.pairs[n].phi_star.mul(&psi.pairs[n].phi));
            let mut expect = vec![Complex64::ZERO; n + 1];
            expect[n] = c(2.0 * w.omega(n as i64 - 1), 0.0);
            let scale = (2.0 * w.omega(n as i64 - 1)).abs().max(1.0);
            let res = lhs.sub(&CPoly::new(expect)).max_coeff_norm() / scale;
            worst = worst.max(res);
        }
        worst
    }

    #[test]
    fn wronskian_identity_random() {
        for seed in 0..10 {
            let seq = random_szego(seed, 0.6, (seed % 4) as usize).unwrap();
            assert!(wronskian_residual(&seq, 10) <= 1e-10, "seed {seed}");
        }
    }

    #[test]
    fn real_sequences_give_real_chains() {
        let seq = crate::coeffs::random_szego_real(5, 0.6, 2).unwrap();
        let phi = szego_chain(&seq, 12);
        let psi = second_kind_chain(&seq, 12);
        for n in 0..=12 {
            assert!(phi.pairs[n].phi.max_imag() <= 1e-14);
            assert!(psi.pairs[n].phi.max_imag() <= 1e-14);
        }
    }

    #[test]
    fn normalize_examples() {
        let seq = preset(&Preset::SingleLarge).unwrap();
        let chain = szego_chain(&seq, 2);
        let w = weights(&seq, 2);
        let norm = normalize(&chain.pairs, &w);
        // varphi_1 = (z - 2)/sqrt 3
        let s = 1.0 / 3.0f64.sqrt();
        coeff_close(&norm.varphi[1], &[c(-2.0 * s, 0.0), c(s, 0.0)], 1e-15);
        // scaling back reproduces the monic chain
        let back = norm.varphi[2].scaled(c(3.0f64.sqrt(), 0.0));
        assert!(back.sub(&chain.pairs[2].phi).max_coeff_norm() <= 1e-12);
    }

    #[test]
    fn monic_and_star_at_zero_exact() {
        for seed in 0..8 {
            let seq = random_szego(seed, 0.55, (seed % 3) as usize).unwrap();
            let chain = szego_chain(&seq, 15);
            for pair in &chain.pairs {
                assert_eq!(pair.phi.coeff(pair.n), c(1.0, 0.0));
                assert_eq!(pair.phi_star.coeff(0), c(1.0, 0.0));
            }
        }
    }

    proptest! {
        #[test]
        fn reverse_involution(coeffs in proptest::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 1..8)) {
            let p = CPoly::new(coeffs.iter().map(|&(re, im)| c(re, im)).collect());
            let n = 9usize;
            let twice = reverse(&reverse(&p, n).unwrap(), n).unwrap();
            prop_assert_eq!(twice, p);
        }
    }
}
