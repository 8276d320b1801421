//! An urn of balls painted + or - in three colours: exact pairwise
//! expectations, the matching point of the polytope, and a sampled estimate.

use corrpoly::classical::{correlation_point, sample_urn, UrnDistribution};
use corrpoly::polytope::{dd_hull, enumerate_vertices, membership, rational_to_f64, Scenario};

pub fn run() -> corrpoly::Result<()> {
    let urn = UrnDistribution::from_json(r#"{"weights": {"+++": "1/4", "++-": "1/4", "--+": "1/2"}}"#)?;
    let scenario = Scenario::suppes_zanotti();
    let hull = dd_hull(&enumerate_vertices(&scenario)?)?;

    let point = correlation_point(&urn, &scenario)?;
    let m = membership(&hull, &point)?;
    let shown: Vec<String> = point.iter().map(|q| q.to_string()).collect();
    println!("exact point {shown:?}, region: {}", m.region.as_str());

    let sample = sample_urn(&urn, 1_000_000, 99)?;
    let empirical = sample.correlation_point(&scenario)?;
    for (e, q) in empirical.iter().zip(&point) {
        println!("  sampled {e:+.5}  exact {:+.5}", rational_to_f64(q));
    }
    for (ball, count) in &sample.counts {
        println!("  {ball}: {count}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> corrpoly::Result<()> {
    run()
}
