// Solve the linear relations between Ehrhart polynomials exactly.
//
// cargo run --example recursions

use sepkit::exactpoly::rat_to_string;
use sepkit::recursion::{ehrhart_of, relation_row, residual, solve_recursion, RELATION_IDS};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // by hand: E_1,5 = α (2x+1) E_1,4 + α_0 E_1,3
    let f = ehrhart_of(&[1, 5])?;
    let g = ehrhart_of(&[1, 4])?;
    let h = [ehrhart_of(&[1, 3])?];
    let sol = solve_recursion(&f, &g, &h)?;
    let c = sol.coefficients().ok_or("no unique solution")?;
    let shown: Vec<String> = c.iter().map(rat_to_string).collect();
    println!("E_1,5 = α (2x+1) E_1,4 + α_0 E_1,3 with (α, α_0) = ({})", shown.join(", "));
    if !residual(&f, &g, &h, &c).is_zero() {
        return Err("residual not zero".into());
    }

    let n = 4;
    for id in RELATION_IDS {
        let row = relation_row(id, n)?;
        println!(
            "({id}) n={n}: [{}] nonnegative {} verified {}",
            row.coefficients.join(", "),
            row.nonnegative,
            row.verified
        );
        if !row.verified && !row.coefficients.is_empty() {
            return Err("substitution failed".into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
