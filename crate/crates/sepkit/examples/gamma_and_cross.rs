// γ-vectors and the expansion of Ehrhart polynomials in cross-polytope polynomials.
//
// cargo run --example gamma_and_cross

use sepkit::closedforms::hstar_bipartite;
use sepkit::exactpoly::{cross_coefficients, cross_recombine, ehrhart_from_hstar, gamma_vector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (a, b) in [(1, 1), (2, 3), (3, 3), (4, 6)] {
        // K_{a+1,b+1}
        let h = hstar_bipartite(a, b);
        let gamma = gamma_vector(&h)?;
        let e = ehrhart_from_hstar(&h);
        let cross = cross_coefficients(&e, h.dim())?;
        if cross_recombine(&cross, h.dim()) != e {
            return Err("cross expansion does not round trip".into());
        }
        println!(
            "K_{{{},{}}}: gamma {:?}  cross {:?}",
            a + 1,
            b + 1,
            gamma.to_strings(),
            cross.to_strings()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
