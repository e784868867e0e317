// Reduced Gröbner basis of the toric ideal and the degree-3 element of K_{2,2,2}.
//
// cargo run --example groebner_basis

use sepkit::groebner::{build_basis, buchberger_verify, k222_order_scan, reducedness_check, Kind, DEFAULT_EDGE_BOUND};
use sepkit::Signature;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sig: Signature = "1,1,2".parse()?;
    let basis = build_basis(&sig)?;
    println!("K_{{1,1,2}}: {} binomials, max degree {}", basis.len(), basis.max_degree());
    print!("{}", basis.to_text());
    if !reducedness_check(&basis) || !buchberger_verify(&sig, DEFAULT_EDGE_BOUND)? {
        return Err("basis check failed".into());
    }

    let k222 = build_basis(&"2,2,2".parse()?)?;
    println!(
        "K_{{2,2,2}}: {} binomials, {} of them cubic (kind 5)",
        k222.len(),
        k222.count_kind(Kind::K5)
    );
    let rep = k222_order_scan(10, 7);
    if let Some(o) = &rep.canonical.obstruction {
        println!("cubic element not generated in degree 2: {}", o.binomial);
    }
    println!("found under all {} random edge orders: {}", rep.orders.len(), rep.all_found);
    if !rep.all_found {
        return Err("obstruction missing".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
