// Facet labelings of a tripartite graph, split into the two facet types.
//
// cargo run --example facets

use sepkit::graphmodel::{classify_labeling, enumerate_facet_labelings, facet_count, facet_count_formula, FacetType};
use sepkit::Signature;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for s in ["1,1,1", "1,1,2", "2,2,2", "1,1,3"] {
        let sig: Signature = s.parse()?;
        let labs = enumerate_facet_labelings(&sig);
        let mut by_type = [0usize; 3];
        for l in &labs {
            by_type[match classify_labeling(&sig, l)? {
                FacetType::TypeI => 0,
                FacetType::TypeIIa => 1,
                FacetType::TypeIIb => 2,
            }] += 1;
        }
        if labs.len() as i64 != facet_count(&sig) {
            return Err(format!("{s}: enumeration gives {} facets", labs.len()).into());
        }
        println!(
            "K_{{{s}}}: {} facets (type i {}, type ii {}+{}); 2a_i-2 variant says {}",
            labs.len(),
            by_type[0],
            by_type[1],
            by_type[2],
            facet_count_formula(&sig)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
