// Unimodular triangulation as standard spanning trees, and h* from the in-edge count.
//
// cargo run --example standard_trees

use sepkit::triangulate::{enumerate_standard_trees, inedge, TriangulationConfig};
use sepkit::Signature;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sig: Signature = "1,1,1".parse()?;
    let trees = enumerate_standard_trees(&sig, &TriangulationConfig::default())?;
    let mut hist = vec![0usize; sig.dim() + 1];
    for t in &trees {
        let k = inedge(t, 1);
        hist[k] += 1;
        println!("{t}  in-edges toward 1: {k}");
    }
    println!("{} simplices, h* coefficients {:?}", trees.len(), hist);
    if hist != [1, 4, 1] {
        return Err("unexpected histogram".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
