//! Build first- and second-kind chains from a JSON sequence description and
//! watch the cross-checks that certify them.
//!
//!     cargo run --example szego_recursion

use num_complex::Complex64;
use opxlab::coeffs::{from_json_str, weights};
use opxlab::poly::{normalize, reverse, second_kind_chain, szego_chain};

fn main() -> opxlab::Result<()> {
    // one coefficient outside the disk, two inside, zero tail
    let seq = from_json_str(
        r#"{
            "alphas": [[1.8, 0.6], [-0.3, 0.1], [0.05, -0.2]],
            "tail": {"type": "zero", "m": 3}
        }"#,
    )?;
    println!("indefinite head length N = {}", seq.indefinite_len());

    let nmax = 8;
    let phi = szego_chain(&seq, nmax);
    let psi = second_kind_chain(&seq, nmax);
    println!("chain certified through degree {} (max cross residual {:.2e})",
        phi.certified_to, phi.max_cross_residual);

    // the star line against the reversal identity
    let n = 5;
    let rev = reverse(&phi.pairs[n].phi, n)?;
    println!(
        "reversal check at n = {n}: max coefficient gap {:.2e}",
        phi.pairs[n].phi_star.sub(&rev).max_coeff_norm()
    );

    // Phi_n Psi_n* + Phi_n* Psi_n = 2 omega_(n-1) z^n
    let w = weights(&seq, nmax);
    let lhs = phi.pairs[n]
        .phi
        .mul(&psi.pairs[n].phi_star)
        .add(&phi.pairs[n].phi_star.mul(&psi.pairs[n].phi));
    println!(
        "pairing identity at n = {n}: z^{n} coefficient {:.12} vs 2 omega = {:.12}",
        lhs.coeff(n).re,
        2.0 * w.omega(n as i64 - 1)
    );

    let normalized = normalize(&phi.pairs, &w);
    let z = Complex64::new(0.3, -0.4);
    println!(
        "normalized chain at z = 0.3 - 0.4i: varphi_{n} = {:.6}",
        normalized.varphi[n].eval(z)
    );
    Ok(())
}
