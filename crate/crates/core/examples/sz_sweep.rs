//! Lowest eigenvalues of XY + XZ + YZ with X, Y, Z at planar angles 0, θ, 2θ.

use std::f64::consts::PI;

use corrpoly::spectral::sz::{singlet_sum, sz_spectrum};

pub fn run() -> corrpoly::Result<()> {
    println!("{:>8} {:>12} {:>12} {:>12} {:>10}", "theta", "mu1", "mu2", "singlet", "x1 dist");
    for k in 0..=12 {
        let theta = PI * k as f64 / 12.0;
        let sp = sz_spectrum(theta)?;
        println!(
            "{:8.4} {:12.8} {:12.8} {:12.8} {:10.2e}{}",
            theta,
            sp.mu1_computed,
            sp.mu2_computed,
            singlet_sum(theta),
            sp.x1_agreement,
            if sp.degenerate { "  degenerate" } else { "" }
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> corrpoly::Result<()> {
    run()
}
