// h* of a few small graphs by closed form, triangulation and lattice-point counting.
//
// cargo run --example hstar_three_ways

use sepkit::closedforms::hstar_closed;
use sepkit::oracle::{hstar_oracle, OracleConfig};
use sepkit::triangulate::{hstar_triangulation, TriangulationConfig};
use sepkit::Signature;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for s in ["1,1,1", "2,2", "2,2,1", "1,1,1,1", "1,2,3"] {
        let sig: Signature = s.parse()?;
        let tri = hstar_triangulation(&sig, &TriangulationConfig::default())?;
        let ora = hstar_oracle(&sig, &OracleConfig::default())?;
        if tri != ora {
            return Err(format!("{s}: triangulation and oracle disagree").into());
        }
        let closed = hstar_closed(&sig);
        if let Some(c) = &closed {
            if c != &tri {
                return Err(format!("{s}: closed form disagrees").into());
            }
        }
        println!(
            "K_{{{s}}}  h* = {}  volume {}{}",
            tri.poly().pretty("t"),
            tri.volume(),
            if closed.is_some() { "  (closed form agrees)" } else { "" }
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
