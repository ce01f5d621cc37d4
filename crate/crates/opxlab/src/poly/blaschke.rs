//! Finite Blaschke products over zeros strictly inside the unit disk.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Zeros below this modulus lose a meaningful phase `|z|/z`; their factor is
/// taken as `z -> -z`.
const ORIGIN_TOL: f64 = 1e-14;

/// `B(z) = prod (|l|/l) (l - z)/(1 - conj(l) z)` over the stored zeros.
/// The empty product is the constant 1.
#[derive(Clone, Debug)]
pub struct BlaschkeProduct {
    zeros: Vec<Complex64>,
}

impl BlaschkeProduct {
    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for &l in &self.zeros {
            if l.norm() < ORIGIN_TOL {
                acc *= -z;
            } else {
                let prefactor = Complex64::new(l.norm(), 0.0) / l;
                acc *= prefactor * (l - z) / (Complex64::new(1.0, 0.0) - l.conj() * z);
            }
        }
        acc
    }
}

/// Split roots into interior, circle-band, and exterior classes.
///
/// The band is `||r| - 1| <= band`; band roots belong to neither side and
/// in particular must never enter a Blaschke product.
pub fn classify_unit_roots(
    roots: &[Complex64],
    band: f64,
) -> (Vec<Complex64>, Vec<Complex64>, Vec<Complex64>) {
    let mut inside = Vec::new();
    let mut boundary = Vec::new();
    let mut outside = Vec::new();
    for &r in roots {
        let d = r.norm() - 1.0;
        if d.abs() <= band {
            boundary.push(r);
        } else if d < 0.0 {
            inside.push(r);
        } else {
            outside.push(r);
        }
    }
    (inside, boundary, outside)
}

/// Build a product, rejecting zeros on or outside the unit circle.
pub fn blaschke(zeros_inside: Vec<Complex64>) -> Result<BlaschkeProduct> {
    for &l in &zeros_inside {
        if l.norm() >= 1.0 {
            return Err(Error::ZeroOnOrOutsideDisk(l));
        }
    }
    Ok(BlaschkeProduct {
        zeros: zeros_inside,
    })
}

pub fn blaschke_eval(b: &BlaschkeProduct, z: Complex64) -> Complex64 {
    b.eval(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn half_zero_values() {
        let b = blaschke(vec![c(0.5, 0.0)]).unwrap();
        assert!((b.eval(Complex64::ZERO) - c(0.5, 0.0)).norm() < 1e-15);
        // (1 - 2 z)/(2 - z) at z = 0.3 is 0.4/1.7
        assert!((b.eval(c(0.3, 0.0)) - c(0.4 / 1.7, 0.0)).norm() < 1e-15);
        assert!(b.eval(c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn empty_product_is_one() {
        let b = blaschke(vec![]).unwrap();
        assert_eq!(b.eval(c(0.9, -0.3)), c(1.0, 0.0));
    }

    #[test]
    fn origin_factor_is_minus_z() {
        let b = blaschke(vec![Complex64::ZERO]).unwrap();
        assert_eq!(b.eval(c(0.25, 0.1)), c(-0.25, -0.1));
    }

    #[test]
    fn classification_bands() {
        let roots = [
            c(0.3, 0.0),
            c(0.0, 1.0 - 1e-12),
            c(1.0 + 5e-9, 0.0),
            c(1.4, -0.2),
        ];
        let (inside, boundary, outside) = classify_unit_roots(&roots, 1e-8);
        assert_eq!(inside, vec![c(0.3, 0.0)]);
        assert_eq!(boundary.len(), 2);
        assert_eq!(outside, vec![c(1.4, -0.2)]);
    }

    #[test]
    fn rejects_outside_zero() {
        assert!(matches!(
            blaschke(vec![c(1.0, 0.0)]),
            Err(Error::ZeroOnOrOutsideDisk(_))
        ));
        assert!(matches!(
            blaschke(vec![c(0.9, 0.9)]),
            Err(Error::ZeroOnOrOutsideDisk(_))
        ));
    }

    proptest! {
        #[test]
        fn contractive_on_disk(
            zr in -0.95f64..0.95, zi in -0.95f64..0.95,
            lr in -0.6f64..0.6, li in -0.6f64..0.6,
        ) {
            let z = c(zr, zi);
            prop_assume!(z.norm() < 0.999);
            let b = blaschke(vec![c(lr, li)]).unwrap();
            prop_assert!(b.eval(z).norm() <= 1.0 + 1e-12);
        }
    }
}
