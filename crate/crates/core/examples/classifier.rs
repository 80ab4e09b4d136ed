// Split extension classifiers and the universal morphism of K[S3] over K[A3].

use cocohopf::classifier::{build_classifier, universal_morphism};
use cocohopf::corpus::{k_c3, s3_over_a3, sign};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cls = build_classifier(&k_c3(), 3)?;
    println!("[K[C3]]: {} derivations, {} automorphisms", cls.der_basis().len(), cls.aut_group().elements().map_or(0, |e| e.len()));

    let h = sign();
    let cls = build_classifier(&h, 3)?;
    for (i, psi) in cls.der_basis().iter().enumerate() {
        println!("  {} = {}", cls.der_lie().name(i), psi.render(&h));
    }

    let ext = s3_over_a3(3)?;
    let u = universal_morphism(&ext, 3)?;
    let b = ext.quotient();
    for &g in b.group().generators() {
        println!("χ({}) = {}", b.group().name(g), u.chi.target().group().name(u.chi.beta()[g]));
    }
    for check in &u.certification.checks {
        println!("  {} ({} cases)", check.axiom, check.cases);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
