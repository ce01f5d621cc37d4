//! From circle data to the real line: moments, mapped monic polynomials,
//! closed-form recurrence data, the signed tridiagonal system, and its
//! resolvent function.
//!
//!     cargo run --example szego_mapping

use num_complex::Complex64;
use opxlab::coeffs::random_szego_real;
use opxlab::poly::szego_chain;
use opxlab::schur::schur_chain;
use opxlab::szegomap::{
    build_system, cnr_residual, gamma_moment, gamma_orthogonality, geronimus, map_p,
    mu_moments, recurrence_from_p, RealPoly,
};

fn main() -> opxlab::Result<()> {
    let seq = random_szego_real(77, 0.55, 2)?;
    println!("random real sequence, N = {}", seq.indefinite_len());

    let chain = szego_chain(&seq, 16);
    let table = mu_moments(&chain.pairs, 12)?;
    println!("\nmoments:");
    for n in 0..4i64 {
        println!("  mu(z^{n}) = {:+.8}", table.mu_at(n)?.re);
    }
    println!("  <x^2, gamma> = {:+.8}", gamma_moment(&table, 2)?);

    let ps: Vec<RealPoly> = (0..=6).map(|n| map_p(&chain.pairs, n)).collect::<opxlab::Result<_>>()?;
    let (ob, oc) = recurrence_from_p(&ps)?;
    let (gb, gc) = geronimus(&seq, 6)?;
    println!("\nrecurrence data, coefficient comparison vs closed form:");
    for n in 0..4 {
        println!(
            "  b_{}: {:+.10} vs {:+.10}    c_{}: {:+.10} vs {:+.10}",
            n + 1,
            ob[n],
            gb[n],
            n + 1,
            oc.get(n).copied().unwrap_or(f64::NAN),
            gc[n]
        );
    }

    let (off, diag) = gamma_orthogonality(&table, &ps, 3)?;
    println!("\northogonality of P_3: max off-pairing {off:.2e}, diagonal {diag:+.6}");

    let (b, c) = geronimus(&seq, 160)?;
    let sys = build_system(&b, &c)?;
    println!(
        "\nsystem: signature flips at {:?}, G H asymmetry = {}",
        sys.delta()
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] != w[1])
            .map(|(i, _)| i + 2)
            .collect::<Vec<_>>(),
        sys.gh_asymmetry()
    );

    let x = Complex64::new(9.0, 0.5);
    println!("m({x}) = {:.10}", sys.m_function(x, 96)?);

    let schur = schur_chain(&seq)?;
    let z = Complex64::new(0.15, 0.1);
    println!(
        "|F(z) - (z - 1/z) m(z + 1/z)| at z = 0.15 + 0.1i: {:.3e}",
        cnr_residual(&schur, &sys, z, 96)?
    );
    Ok(())
}
