//! Three pairwise anti-correlations cannot all be perfect classically; the
//! singlet at small equal angles comes close and leaves the polytope.

use corrpoly::classical::{singlet_sz_profile, singlet_threshold, specker_check};
use corrpoly::polytope::{dd_hull, enumerate_vertices, Scenario};

pub fn run() -> corrpoly::Result<()> {
    let hull = dd_hull(&enumerate_vertices(&Scenario::suppes_zanotti())?)?;
    let r = specker_check(&[-1.0, -1.0, -1.0], &hull)?;
    println!("(-1,-1,-1): {} with worst margin {}", r.region.as_str(), r.worst_margin);

    for theta in [0.0, 0.2, 0.6, singlet_threshold(), 1.2] {
        let p = singlet_sz_profile(theta)?;
        let r = specker_check(&p.correlations, &hull)?;
        println!(
            "theta {theta:.6}: sum {:+.6}, worst margin {:+.6}, {}",
            p.sz_sum,
            r.worst_margin,
            r.region.as_str()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> corrpoly::Result<()> {
    run()
}
