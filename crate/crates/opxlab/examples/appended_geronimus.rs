//! The second worked sequence: `2 sqrt 2` prepended to the coefficients of
//! the weight `(1 - cos t / sqrt 2) dt/2pi`. The mapped polynomials then
//! converge to an explicit rational function.
//!
//!     cargo run --example appended_geronimus

use num_complex::Complex64;
use opxlab::coeffs::{preset, Preset};
use opxlab::poly::szego_chain;
use opxlab::szegofn::{limit_blaschke, CircleGrid, SzegoEvaluator};
use opxlab::szegomap::{geronimus, map_p, mapped_z_poly, tail_limits};
use opxlab::verify::{ex2_d_closed, ex2_limit};

fn main() -> opxlab::Result<()> {
    let seq = preset(&Preset::AppendedGeronimus)?;
    println!("first coefficients:");
    for n in 0..5 {
        println!("  alpha_{n} = {:+.12}", seq.alpha(n).re);
    }

    let ev = SzegoEvaluator::for_sequence(&seq, CircleGrid::new(512)?)?;
    let s = 2.0f64.sqrt();
    let d0_closed = 7.0f64.sqrt() / ((2.0 * s + 1.0) * (4.0 - 2.0 * s).sqrt());
    let d0 = ev.szego_d(Complex64::ZERO, 1e-10)?;
    println!("\nD(0) quadrature = {:.12}", d0.re);
    println!("D(0) closed     = {:.12}", d0_closed);
    let z = Complex64::new(0.35, -0.2);
    println!(
        "|D - closed| at z = 0.35 - 0.2i: {:.3e}",
        (ev.szego_d(z, 1e-10)? - ex2_d_closed(z)).norm()
    );

    let (b, stab) = limit_blaschke(&seq, 16)?;
    println!(
        "\ninterior zero of the reversed chain: {:.8} (limit 1/(2 sqrt2 + 1) = {:.8}, stabilized at n = {stab})",
        b.zeros()[0].re,
        1.0 / (2.0 * s + 1.0)
    );

    println!("\nconvergence of z^n P_n(z + 1/z) to the limit function:");
    let chain = szego_chain(&seq, 32);
    let sample = Complex64::new(0.4, 0.3);
    for n in [4usize, 8, 12, 16] {
        let mz = mapped_z_poly(&map_p(&chain.pairs, n)?, n);
        let err = (mz.eval(sample) - ex2_limit(sample)).norm();
        println!("  n = {n:>2}: error at z = 0.4 + 0.3i is {err:.3e}");
    }

    let (bb, cc) = geronimus(&seq, 40)?;
    let (sup_b, sup_c) = tail_limits(&bb, &cc, 20)?;
    println!("\nrecurrence tail from k = 20 on: max|b_k| = {sup_b:.3e}, max|c_k - 1| = {sup_c:.3e}");
    Ok(())
}
