// Checkable identities: contraction, suspension, planar tree counts, reflexivity.
//
// cargo run --example identities

use sepkit::closedforms::{contraction_identity_check, suspension_identity_check};
use sepkit::exactpoly::binom;
use sepkit::oracle::reflexivity_check;
use sepkit::recursion::ehrhart_of;
use sepkit::triangulate::planar_trees;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let contraction = (1..=6).all(|m| (1..=6).all(|n| contraction_identity_check(m, n)));
    let suspension = (1..=8).all(suspension_identity_check);
    println!("h*(K_m+1,n+1) = (1+t) h*(K_1,m,n) for m,n <= 6: {contraction}");
    println!("suspension formula for K_1,1,1,n, n <= 8: {suspension}");
    for (a, b) in [(2, 3), (3, 3), (4, 2)] {
        let (count, _) = planar_trees(a, b);
        println!("planar trees {a}x{b}: {count} = binom({}, {})", a + b - 2, b - 1);
        if count != binom(a as i64 + b as i64 - 2, b as i64 - 1) {
            return Err("planar count".into());
        }
    }
    let e = ehrhart_of(&[2, 2, 3])?;
    let d = e.degree().unwrap_or(0);
    println!("E_2,2,3 reflexive: {}", reflexivity_check(&e, d));
    if !(contraction && suspension && reflexivity_check(&e, d)) {
        return Err("identity failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
