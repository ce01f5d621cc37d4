//! End-to-end tour of the simplest sequence with a coefficient outside the
//! closed unit disk: `{2, 0, 0, ...}`.
//!
//! The chain is `Phi_n = z^(n-1)(z - 2)`, everything downstream has a
//! closed form, and this example checks each stage against it.
//!
//!     cargo run --example single_large

use num_complex::Complex64;
use opxlab::coeffs::{preset, weights, Preset};
use opxlab::poly::szego_chain;
use opxlab::schur::{f_eval, schur_chain};
use opxlab::szegofn::{limit_blaschke, CircleGrid, SzegoEvaluator};
use opxlab::szegomap::{build_system, cnr_residual, geronimus, map_p, mapped_z_poly};

fn main() -> opxlab::Result<()> {
    let seq = preset(&Preset::SingleLarge)?;
    println!("sequence: alpha_0 = 2, zero tail, indefinite head length N = {}", seq.indefinite_len());

    let w = weights(&seq, 6);
    println!("weights:  omega_0 = {}, epsilon_0 = {}", w.omega(0), w.epsilon(0));

    let chain = szego_chain(&seq, 6);
    println!("\nchain (certified through degree {}):", chain.certified_to);
    for n in [1usize, 3, 6] {
        let phi = &chain.pairs[n].phi;
        let coeffs: Vec<String> = phi.coeffs().iter().map(|c| format!("{:+.0}", c.re)).collect();
        println!("  Phi_{n}: [{}]  (z^(n-1)(z-2))", coeffs.join(", "));
    }

    let schur = schur_chain(&seq)?;
    println!("\nF = (1 + 2z)/(1 - 2z):");
    for z in [0.0, 0.25, -0.3] {
        let v = f_eval(&schur, Complex64::new(z, 0.0))?;
        println!("  F({z:>5}) = {:.12}", v.re);
    }
    println!("  F(1/2) -> {:?}", f_eval(&schur, Complex64::new(0.5, 0.0)).unwrap_err());

    let ev = SzegoEvaluator::for_sequence(&seq, CircleGrid::new(256)?)?;
    let d0 = ev.szego_d(Complex64::ZERO, 1e-10)?;
    println!("\nouter function: D(0) = {:.12} (sqrt3/2 = {:.12})", d0.re, 3.0f64.sqrt() / 2.0);

    let (b, stab) = limit_blaschke(&seq, 12)?;
    println!("Blaschke data: interior zero at {:.12}, count stabilized at n = {stab}", b.zeros()[0].re);
    println!("B(0) = {:.12}", b.eval(Complex64::ZERO).re);

    let (bc_b, bc_c) = geronimus(&seq, 160)?;
    println!("\nmapped recurrence: b_1 = {}, b_2 = {}, c_1 = {}, c_2 = {}", bc_b[0], bc_b[1], bc_c[0], bc_c[1]);

    let p2 = map_p(&chain.pairs, 2)?;
    println!("P_2 coefficients (x^2 - 2x - 2): {:?}", p2.coeffs());
    let at_pole = mapped_z_poly(&map_p(&szego_chain(&seq, 24).pairs, 12)?, 12)
        .eval(Complex64::new(0.5, 0.0));
    println!("|z^12 P_12(z + 1/z)| at the pole z = 1/2: {:.3e}", at_pole.norm());

    let sys = build_system(&bc_b, &bc_c)?;
    let z = Complex64::new(0.1, 0.0);
    println!(
        "\nresolvent link: |F(z) - (z - 1/z) m(z + 1/z)| at z = 0.1 is {:.3e}",
        cnr_residual(&schur, &sys, z, 64)?
    );
    Ok(())
}
