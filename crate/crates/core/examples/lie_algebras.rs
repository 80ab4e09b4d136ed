// Derivations of the Heisenberg algebra and a quotient by an ideal closure.

use cocohopf::corpus::heisenberg;
use cocohopf::lie::{lie_derivations, quotient_by_ideal_closure};
use cocohopf::linalg::unit_vec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h3 = heisenberg();
    let der = lie_derivations(&h3);
    println!("dim Der(h3) = {}", der.len());
    for d in &der {
        println!("  {:?}", d.to_strings());
    }
    let q = quotient_by_ideal_closure(&h3, &[unit_vec(3, 0)]);
    println!("h3 / (x) has basis {:?} and ideal of dimension {}", q.quotient.names(), q.ideal.dim());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
