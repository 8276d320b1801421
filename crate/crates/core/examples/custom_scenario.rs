//! A scenario read from JSON: two observables with their single
//! expectations and their product.

use corrpoly::polytope::{dd_hull, enumerate_vertices, Scenario};

pub fn run() -> corrpoly::Result<()> {
    let scenario = Scenario::from_json(r#"{"observables": 2, "monomials": [[0], [1], [0, 1]], "labels": ["A", "B"]}"#)?;
    let hull = dd_hull(&enumerate_vertices(&scenario)?)?;
    let names: Vec<String> = (0..scenario.dimension()).map(|k| scenario.monomial_name(k)).collect();
    for f in hull.facets() {
        println!("{}", f.describe(&names));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> corrpoly::Result<()> {
    run()
}
