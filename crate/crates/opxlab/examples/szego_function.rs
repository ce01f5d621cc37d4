//! The outer function from boundary data: midpoint quadrature with grid
//! doubling, its Fourier coefficients, and the convergence gauges for the
//! normalized chain.
//!
//!     cargo run --example szego_function

use num_complex::Complex64;
use opxlab::coeffs::{preset, Preset};
use opxlab::szegofn::{l1_error, limit_blaschke, phi_star_limit_error, weak_error, CircleGrid, SzegoEvaluator};

fn main() -> opxlab::Result<()> {
    let seq = preset(&Preset::AppendedGeronimus)?;
    let ev = SzegoEvaluator::for_sequence(&seq, CircleGrid::new(1024)?)?;
    println!("boundary sign epsilon_(N-1) = {}", ev.sign());

    println!("\nFourier data of log(eps Re F):");
    for k in [0i64, 1, 2, 3] {
        println!("  k = {k}: {:+.10}", ev.log_fourier(k)?.re);
    }

    let z = Complex64::new(0.25, 0.4);
    println!("\nD(0.25 + 0.4i) = {:.12}", ev.szego_d(z, 1e-10)?);

    println!("\nL1 gauge of the normalized chain against Re F:");
    for n in [4usize, 8, 16] {
        println!("  n = {n:>2}: {:.3e}", l1_error(&seq, n, &ev)?);
    }

    println!("\nweak (Fourier) gauge at k = 1:");
    for n in [4usize, 8, 16] {
        println!("  n = {n:>2}: {:.3e}", weak_error(&seq, n, 1, &ev)?);
    }

    let (b, _) = limit_blaschke(&seq, 16)?;
    let sample = Complex64::new(0.4, 0.0);
    println!("\n|varphi_n*(z) - B(z)/D(z)| at z = 0.4:");
    for n in [4usize, 8, 16] {
        println!(
            "  n = {n:>2}: {:.3e}",
            phi_star_limit_error(&seq, n, sample, &b, &ev, 1e-10)?
        );
    }
    Ok(())
}
