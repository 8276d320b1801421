//! Two parties, two settings each: 8 vertices, 16 facets.

use corrpoly::polytope::{dd_hull, enumerate_vertices, Scenario};

pub fn run() -> corrpoly::Result<()> {
    let scenario = Scenario::chsh();
    let vertices = enumerate_vertices(&scenario)?;
    let hull = dd_hull(&vertices)?;
    let names: Vec<String> = (0..scenario.dimension()).map(|k| scenario.monomial_name(k)).collect();
    println!("{} vertices, {} facets", vertices.len(), hull.len());
    for f in hull.facets() {
        let (offset, _) = f.to_integers().expect("small integer facets");
        let kind = if offset == 2 { "chsh" } else { "trivial" };
        println!("  {:8} {}", kind, f.describe(&names));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> corrpoly::Result<()> {
    run()
}
