//! Facets of the three-observable pairwise correlation polytope.

use corrpoly::polytope::{dd_hull, enumerate_vertices, membership, Rational, Scenario};

pub fn run() -> corrpoly::Result<()> {
    let scenario = Scenario::suppes_zanotti();
    let vertices = enumerate_vertices(&scenario)?;
    println!("{} vertices:", vertices.len());
    for v in vertices.vertices() {
        let row: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        println!("  ({})", row.join(", "));
    }

    let hull = dd_hull(&vertices)?;
    let names: Vec<String> = (0..scenario.dimension()).map(|k| scenario.monomial_name(k)).collect();
    println!("{} facets:", hull.len());
    for f in hull.facets() {
        println!("  {}", f.describe(&names));
    }

    // perfect anti-correlation of all three pairs
    let minus_one = Rational::from_integer((-1).into());
    let report = membership(&hull, &vec![minus_one; 3])?;
    let margins: Vec<String> = report.margins.iter().map(|m| m.to_string()).collect();
    println!("(-1,-1,-1) is {}, margins [{}]", report.region.as_str(), margins.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> corrpoly::Result<()> {
    run()
}
