use num_complex::Complex64;
use thiserror::Error;

/// Errors surfaced by the library.
///
/// Variants are deliberately specific so that callers (and the CLI) can report
/// which mathematical precondition broke, not just "numerics failed".
#[derive(Debug, Error)]
pub enum Error {
    #[error("coefficient alpha_{0} is unimodular within 1e-14; the recursion is undefined there")]
    UnimodularCoefficient(usize),
    #[error("tail coefficient alpha_{0} has modulus >= 1")]
    LargeTailCoefficient(usize),
    #[error("invalid tail specification: {0}")]
    InvalidTailParameter(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("polynomial degree exceeds reversal order n = {0}")]
    DegreeExceedsN(usize),
    #[error("root finder did not converge within {0} iterations")]
    NonConvergence(usize),
    #[error("Blaschke zero on or outside the unit disk: {0}")]
    ZeroOnOrOutsideDisk(Complex64),
    #[error("unsupported tail for the Schur chain: {0}")]
    UnsupportedTail(String),
    #[error("pole of F at z = {0}")]
    PoleOfF(Complex64),
    #[error("F would be singular at the origin")]
    PoleAtOrigin,
    #[error("singular value at boundary node {0}")]
    SingularNode(usize),
    #[error("quadrature did not stabilize below tolerance by M = 2^20 nodes")]
    QuadratureStall,
    #[error("pole encountered at z = {0}")]
    PoleEncountered(Complex64),
    #[error("moment table holds indices up to {have}, index {want} required")]
    InsufficientMoments { have: usize, want: usize },
    #[error("coefficient alpha_{0} is not real")]
    NonRealCoefficients(usize),
    #[error("Laurent polynomial is not symmetric (asymmetry {0:.3e})")]
    NotSymmetricLaurent(f64),
    #[error("degenerate leading coefficient in P_{0}")]
    DegenerateLeadingCoefficient(usize),
    #[error("recurrence coefficient c_{0} is zero")]
    ZeroC(usize),
    #[error("m-function truncation did not converge (|m_K - m_K+16| = {0:.3e})")]
    TruncationNotConverged(f64),
    #[error("singular shift in tridiagonal solve (pivot modulus {0:.3e})")]
    SingularShift(f64),
    #[error("denominator too close to zero at z = {0}")]
    NearZeroDenominator(Complex64),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
