// K[C2] acting on K[C3] by inversion, the smash product and its split sequence.

use cocohopf::action::{action_evaluate, smash_product, verify_action_axioms, verify_split_extension};
use cocohopf::corpus::inversion_action;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rho = inversion_action();
    let (b, a) = (rho.actor(), rho.target());
    let t = b.grouplike(1);
    let r = a.grouplike(1);
    println!("{} · {} = {}", b.render(&t), a.render(&r), a.render(&action_evaluate(&rho, &t, &r)));
    assert!(verify_action_axioms(&rho, 3).passed);

    let (total, ext) = smash_product(&rho)?;
    println!("K[C3] ⋊ K[C2] has grouplikes {:?}", total.group().names());
    let report = verify_split_extension(&ext, 3);
    for check in &report.checks {
        println!("  {}: {}", check.axiom, if check.passed { "ok" } else { "failed" });
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
