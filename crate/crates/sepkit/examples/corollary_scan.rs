// The bipartite corollary relations and the sign pattern of their coefficients.
//
// cargo run --example corollary_scan

use sepkit::exactpoly::rat_to_string;
use sepkit::recursion::{cor1_m4_alpha2, corollary_scan};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for m in 1..=5 {
        let n = 7;
        let rows = corollary_scan(m, n)?;
        let signs: String = rows[0].signs.iter().map(|&s| if s < 0 { '-' } else { '+' }).collect();
        println!("m={m} n={n}: cor1 signs {signs}");
    }
    for n in 4..=10 {
        let row = &corollary_scan(4, n)?[0];
        let closed = rat_to_string(&cor1_m4_alpha2(n));
        if row.coefficients[3] != closed {
            return Err(format!("α_2 mismatch at n={n}").into());
        }
        println!("m=4 n={n}: α_2 = {closed}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
