//! States of two spins that make one pair correlation extremal.

use corrpoly::spectral::pair_extremal_states;

pub fn run() -> corrpoly::Result<()> {
    for theta in [0.0, 0.7, std::f64::consts::FRAC_PI_2] {
        let p = pair_extremal_states(theta)?;
        println!("theta {theta:.4}: eigenspace distances {:.1e} / {:.1e}", p.min_distance, p.max_distance);
        for s in &p.min_states {
            let re: Vec<f64> = s.amplitudes().iter().map(|z| z.re).collect();
            println!("  <XY> = -1: {re:+.4?}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> corrpoly::Result<()> {
    run()
}
