// Certify that every Ehrhart root lies on Re z = −1/2, with isolating intervals.
//
// cargo run --example cl_roots

use sepkit::clroots::is_cl;
use sepkit::exactpoly::rat_to_string;
use sepkit::recursion::ehrhart_of;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for parts in [vec![1, 5], vec![2, 4], vec![1, 1, 3], vec![1, 2, 6], vec![1, 1, 1, 4]] {
        let e = ehrhart_of(&parts)?;
        let cert = is_cl(&e);
        println!("E_{parts:?}: on the line = {}, parity {}", cert.on_cl, cert.parity);
        for iv in &cert.intervals {
            // w = u², u = 2z + 1
            println!("   w in ({}, {}]  x{}", rat_to_string(&iv.lo), rat_to_string(&iv.hi), iv.multiplicity);
        }
        if !cert.on_cl {
            return Err(format!("{parts:?} not certified").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
