// Cross-degree bounds over all small graphs, under both readings of the sum.
//
// cargo run --example conjecture_scan

use sepkit::recursion::{conjecture_scan, ConjectureMode};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let apex = conjecture_scan(6, 10, 5, ConjectureMode::WithApex);
    let literal = conjecture_scan(6, 10, 5, ConjectureMode::Literal);
    println!("{} graphs scanned", apex.rows.len());
    println!("apex reading: {} violations", apex.violations.len());
    println!("literal reading: {} violations, first {:?}", literal.violations.len(), literal.violations.first());
    let ones_ok = apex.ones_interlacing.iter().all(|r| r.interlaces);
    println!("K_1^k,n interlacing ({} cases): {}", apex.ones_interlacing.len(), ones_ok);
    if !apex.violations.is_empty() || !ones_ok {
        return Err("apex reading violated".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
