//! Simultaneous root iteration (Aberth-Ehrlich) on the monic normalization.
//!
//! The chains generated upstream can mix coefficient magnitudes badly once a
//! coefficient leaves the unit disk, so every root is accepted only after a
//! residual check against the original coefficients.

use num_complex::Complex64;

use super::CPoly;
use crate::error::{Error, Result};

const MAX_ITER: usize = 400;
const STEP_TOL: f64 = 1e-14;

/// All complex roots of `p`, each with residual `|p(root)| <= tol * max|coeff|`.
///
/// Constants have no roots and return an empty list. Exact zero constant
/// terms are factored out first, so chains like `z^k (z - a)` report the
/// origin exactly. Output is sorted by real then imaginary part.
pub fn roots(p: &CPoly, tol: f64) -> Result<Vec<Complex64>> {
    let coeffs = p.coeffs();
    if coeffs.len() <= 1 {
        return Ok(Vec::new());
    }
    let max_coeff = p.max_coeff_norm();

    let mut zero_roots = 0usize;
    while zero_roots < coeffs.len() - 1 && coeffs[zero_roots] == Complex64::ZERO {
        zero_roots += 1;
    }
    let work = &coeffs[zero_roots..];
    let n = work.len() - 1;

    let mut found = vec![Complex64::ZERO; zero_roots];
    if n == 0 {
        return Ok(found);
    }

    let lead = work[n];
    let monic: Vec<Complex64> = work.iter().map(|&c| c / lead).collect();
    let monic_poly = CPoly::new(monic.clone());
    let deriv = monic_poly.derivative();

    // initial guesses on a perturbed circle at the Cauchy bound
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| {
            let angle = std::f64::consts::TAU * (j as f64) / (n as f64) + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let mut converged = false;
    for _ in 0..MAX_ITER {
        let mut max_step = 0.0f64;
        for j in 0..n {
            let pv = monic_poly.eval(z[j]);
            if pv == Complex64::ZERO {
                continue;
            }
            let dv = deriv.eval(z[j]);
            if dv == Complex64::ZERO {
                // sitting on a critical point: nudge off and retry next sweep
                z[j] += Complex64::new(1e-6 * (1.0 + radius), 1e-6);
                max_step = f64::INFINITY;
                continue;
            }
            let newton = pv / dv;
            let mut rep = Complex64::ZERO;
            for (k, &zk) in z.iter().enumerate() {
                if k != j {
                    rep += (z[j] - zk).finv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * rep;
            let step = if denom.norm() < 1e-12 {
                newton
            } else {
                newton / denom
            };
            z[j] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[j].norm()));
        }
        if max_step < STEP_TOL {
            converged = true;
            break;
        }
    }

    let residual_ok = z.iter().all(|&r| p.eval(r).norm() <= tol * max_coeff);
    if !(converged || residual_ok) {
        return Err(Error::NonConvergence(MAX_ITER));
    }
    if !residual_ok {
        return Err(Error::NonConvergence(MAX_ITER));
    }

    found.extend(z);
    found.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn linear_root() {
        let p = CPoly::from_real(&[1.0, -2.0]);
        let r = roots(&p, 1e-12).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0] - c(0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn quadratic_roots() {
        let p = CPoly::from_real(&[1.0, -4.0, 1.0]);
        let r = roots(&p, 1e-12).unwrap();
        assert_eq!(r.len(), 2);
        let lo = 2.0 - 3.0f64.sqrt();
        let hi = 2.0 + 3.0f64.sqrt();
        assert!((r[0] - c(lo, 0.0)).norm() < 1e-12);
        assert!((r[1] - c(hi, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn factored_origin() {
        // z^3 (z - 2)
        let p = CPoly::from_real(&[0.0, 0.0, 0.0, -2.0, 1.0]);
        let r = roots(&p, 1e-12).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r[0], Complex64::ZERO);
        assert!((r[3] - c(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn constant_has_no_roots() {
        assert!(roots(&CPoly::one(), 1e-12).unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn residuals_hold(raw in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 2..9)) {
            let mut coeffs: Vec<Complex64> = raw.iter().map(|&(re, im)| c(re, im)).collect();
            // keep the polynomial honestly of the sampled degree
            let last = coeffs.last_mut().unwrap();
            if last.norm() < 0.1 {
                *last += c(1.0, 0.0);
            }
            let p = CPoly::new(coeffs);
            if p.degree().unwrap_or(0) >= 1 {
                let tol = 1e-9;
                let rs = roots(&p, tol).unwrap();
                prop_assert_eq!(rs.len(), p.degree().unwrap());
                for r in rs {
                    prop_assert!(p.eval(r).norm() <= tol * p.max_coeff_norm());
                }
            }
        }
    }
}
