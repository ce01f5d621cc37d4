//! Acceptance gate: every advertised numerical guarantee, one test per
//! criterion, each printing a single pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use opxlab::verify::{self, CheckResult};

const SEED: u64 = 1;

fn gate(criterion: &str, what: &str, checks: Vec<CheckResult>) {
    let passed = checks.iter().all(|c| c.passed);
    let worst = checks
        .iter()
        .map(|c| {
            if c.threshold > 0.0 {
                c.measured / c.threshold
            } else if c.measured == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        })
        .fold(0.0f64, f64::max);
    println!(
        "[{}] criterion {criterion}: {what} (worst measured/threshold = {worst:.3e})",
        if passed { "PASS" } else { "FAIL" },
    );
    for c in &checks {
        assert!(
            c.passed,
            "criterion {criterion} / {}: measured {:.6e} > threshold {:.1e} ({})",
            c.id, c.measured, c.threshold, c.detail
        );
    }
}

#[test]
fn criterion_01_ex1_chain_coefficients() {
    gate(
        "01",
        "single-large chain is z^(n-1)(z-2) to 1e-12 for n <= 30",
        vec![verify::c01_ex1_chain()],
    );
}

#[test]
fn criterion_02_ex1_bilinear_form() {
    gate(
        "02",
        "weighted pairing with mass -1/3 realizes the orthogonality table to 1e-9",
        vec![verify::c02_ex1_bilinear()],
    );
}

#[test]
fn criterion_03_ex1_szego_function() {
    gate(
        "03",
        "quadrature D matches sqrt3/(2-z) at 10 points (1e-8) and B(0) = 1/2 (1e-10)",
        vec![verify::c03a_ex1_szego_d(), verify::c03b_ex1_blaschke_origin()],
    );
}

#[test]
fn criterion_04_ex1_mapped_polynomials() {
    gate(
        "04",
        "z^n P_n(z+1/z) exact to 1e-12 for n <= 15 and 4x sup-contraction on |z| = 1/2",
        vec![verify::c04a_ex1_mapped_coeffs(), verify::c04b_ex1_sup_decay()],
    );
}

#[test]
fn criterion_05_ex1_limit_at_pole() {
    gate(
        "05",
        "|z^n P_n(z+1/z)| at z = 1/2 below 1e-6 by n = 12",
        vec![verify::c05_ex1_pole_limit()],
    );
}

#[test]
fn criterion_06_geronimus_vs_oracle() {
    gate(
        "06",
        "closed-form recurrence data match the coefficient-comparison oracle to 1e-9 \
         on presets and 100 random real sequences; frozen b_1=4, b_2=-2, c_1=-6, c_2=1",
        vec![
            verify::c06a_geronimus_oracle(SEED),
            verify::c06b_ex1_recurrence_values(),
        ],
    );
}

#[test]
fn criterion_07_ex2_szego_function() {
    gate(
        "07",
        "appended-sequence D at 10 points (1e-7), D(0) (1e-8), interior zero near \
         1/(2 sqrt2 + 1) by n = 16 (1e-3)",
        vec![
            verify::c07a_ex2_szego_d(),
            verify::c07b_ex2_d_origin(),
            verify::c07c_ex2_inside_zero(),
        ],
    );
}

#[test]
fn criterion_08_ex2_szego_asymptotics() {
    gate(
        "08",
        "mapped chain approaches the limit function: decreasing over n = 4, 8, 12, 16, \
         below 5e-3 at n = 16, L(0) = 1",
        vec![
            verify::c08a_ex2_asymp_decreasing(),
            verify::c08b_ex2_asymp_final(),
            verify::c08c_ex2_limit_origin(),
        ],
    );
}

#[test]
fn criterion_09_khrushchev_identity() {
    gate(
        "09",
        "boundary identity residual below 1e-9 for n = 1, 2, 3 on presets and 50 random sequences",
        vec![verify::c09_khrushchev(SEED)],
    );
}

#[test]
fn criterion_10_cnr_relation() {
    gate(
        "10",
        "|F(z) - (z - 1/z) m(z + 1/z)| below 1e-6 (single-large, zero) and 1e-5 (appended), K <= 128",
        vec![verify::c10a_cnr_ex1_zero(), verify::c10b_cnr_ex2()],
    );
}

#[test]
fn criterion_11_tail_limits() {
    gate(
        "11",
        "b_k = 0, c_k = 1 exactly past M + 2 for zero tails; appended sequence within 1e-6 at k = 20",
        vec![verify::c11a_tail_exact(SEED), verify::c11b_ex2_tail()],
    );
}

#[test]
fn criterion_12_l1_and_weak_convergence() {
    gate(
        "12",
        "single-large L1 gauge below 1e-10 for all n; appended L1 and Fourier gauges \
         strictly decreasing over n = 4, 8, 16",
        vec![
            verify::c12a_ex1_l1(),
            verify::c12b_ex2_l1_decreasing(),
            verify::c12c_ex2_l1_final(),
            verify::c12d_ex2_weak_decreasing(),
        ],
    );
}

#[test]
fn criterion_13_algebraic_suite() {
    gate(
        "13",
        "monicity, star normalization, reversal, Wronskian, realness, G H symmetry, \
         signature cascade, quasi-definiteness over 100 seeded sequences",
        vec![
            verify::c13a_monic_star(SEED),
            verify::c13b_reversal(SEED),
            verify::c13c_involution(SEED),
            verify::c13d_wronskian(SEED),
            verify::c13e_realness(SEED),
            verify::c13f_gh_symmetry(SEED),
            verify::c13g_delta_cascade(SEED),
            verify::c13h_quasi_definite(SEED),
        ],
    );
}

#[test]
fn criterion_14_moment_oracle() {
    gate(
        "14",
        "recursion moments match dense quadrature to 1e-10 on 20 classical sequences, \
         and F's Taylor data are twice the conjugated moments",
        vec![
            verify::c14a_moment_quadrature(SEED),
            verify::c14b_maclaurin_moments(SEED),
        ],
    );
}
