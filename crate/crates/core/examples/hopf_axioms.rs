// The Hopf structure of U(ℚx) ⋊ K[C2] with the generator acting by −1.

use cocohopf::corpus::sign;
use cocohopf::hopf::verify_hopf_axioms;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = sign();
    let g = h.grouplike(1);
    let x = h.letter(0);
    let xg = h.multiply(&x, &g);
    println!("g * x = {}", h.render(&h.multiply(&g, &x)));
    println!("Δ(x·g) = {}", h.render_tensor(&h.coproduct(&xg)));
    println!("S(x·g) = {}", h.render(&h.antipode(&xg)));

    let report = verify_hopf_axioms(&h, 3);
    for check in &report.checks {
        println!("  {:<28} {} cases", check.axiom, check.cases);
    }
    assert!(report.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
