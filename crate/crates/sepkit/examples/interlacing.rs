// Interlacing along the canonical line, including a pair that fails.
//
// cargo run --example interlacing

use sepkit::clroots::interlaces_on_cl;
use sepkit::recursion::ehrhart_of;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pairs: [(&[usize], &[usize], bool); 4] = [
        (&[1, 4], &[1, 5], true),
        (&[2, 3], &[2, 4], true),
        (&[1, 1, 3], &[1, 1, 1, 3], true),
        (&[1, 6], &[3, 5], false),
    ];
    for (g, f, expect) in pairs {
        let cert = interlaces_on_cl(&ehrhart_of(g)?, &ehrhart_of(f)?)?;
        println!("E_{g:?} interlaces E_{f:?}: {} ({} root positions)", cert.interlaces, cert.points.len());
        if cert.interlaces != expect {
            return Err("unexpected verdict".into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
