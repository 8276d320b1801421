//! Quantum range of the CHSH expression: fixed angles, optimized angles,
//! and the angle convention under which (-1,1,1,1)/2 and (-1,-1,-1,1)/2
//! are the extremal eigenvectors.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use corrpoly::polytope::Scenario;
use corrpoly::quantum::Direction;
use corrpoly::spectral::{chsh_facet, optimize_angles, quantum_bound, tsirelson_eigenstates, SearchMode};

pub fn run() -> corrpoly::Result<()> {
    let scenario = Scenario::chsh();
    let facet = chsh_facet();

    let dirs = [0.0, FRAC_PI_2, FRAC_PI_4, 7.0 * FRAC_PI_4].map(Direction::planar);
    let fixed = quantum_bound(&facet, &dirs, &scenario)?;
    println!(
        "canonical angles: spectrum {:?}, singlet {:.12}",
        fixed.spectrum, fixed.singlet_value
    );

    let opt = optimize_angles(&facet, &scenario, None, SearchMode::Planar)?;
    let angles: Vec<f64> = opt.directions.iter().map(|d| d.theta()).collect();
    println!(
        "optimized: angles {angles:.6?}, lambda_min {:.12}, violation {:.12}",
        opt.report.lambda_min, opt.report.violation
    );

    let t = tsirelson_eigenstates()?;
    println!(
        "eigenvector convention at {:?}: <u|A|u> = {:.12}, <v|A|v> = {:.12}",
        t.angles, t.expectation_min, t.expectation_max
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> corrpoly::Result<()> {
    run()
}
