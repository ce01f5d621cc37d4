//! Orthogonal-polynomial chains on the unit circle whose driving
//! coefficients may leave the closed disk, and what survives of the
//! classical asymptotic picture on the way to the real line.
//!
//! The pipeline, end to end:
//!
//! 1. [`coeffs`] models coefficient sequences (explicit head + tail rule)
//!    and the signed weights `omega_n`, `epsilon_n`.
//! 2. [`poly`] runs the coupled recursion for the monic chain `Phi_n` /
//!    `Phi_n*`, the second-kind chain, root finding, Blaschke products.
//! 3. [`schur`] descends the rational iterates `f_n`, evaluates
//!    `F = (1 + z f)/(1 - z f)` and the boundary identity for `Re F`.
//! 4. [`szegofn`] integrates `log(eps Re F)` over the circle: the outer
//!    function `D`, its Fourier data, and the convergence gauges for the
//!    normalized chain.
//! 5. [`szegomap`] carries everything to `x = z + 1/z`: moments, mapped
//!    monic polynomials `P_n`, recurrence data `(b, c)`, the signed
//!    tridiagonal system and its m-function.
//! 6. [`verify`] packages the whole battery of cross-checks; [`cli`] is the
//!    front end behind the `opxlab` binary.
//!
//! Every capability has a runnable demo under `examples/`.

pub mod cli;
pub mod coeffs;
pub mod error;
pub mod poly;
pub mod schur;
pub mod szegofn;
pub mod szegomap;
pub mod verify;

pub use error::{Error, Result};
