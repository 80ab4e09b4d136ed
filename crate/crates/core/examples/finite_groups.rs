// Permutation groups, automorphisms and a semidirect product.

use cocohopf::group::{enumerate_automorphisms, find_isomorphism, semidirect_group, GroupAut, GroupTable, Perm};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s3 = GroupTable::from_permutations(3, &[Perm::parse_cycles(3, "(1 2 3)")?, Perm::parse_cycles(3, "(1 2)")?])?;
    println!("S3 has order {} and elements {:?}", s3.order(), s3.names());
    println!("|Aut(S3)| = {}", enumerate_automorphisms(&s3)?.len());

    let c3 = GroupTable::cyclic(3);
    let c2 = GroupTable::cyclic(2);
    let inversion: Vec<usize> = c3.elements().map(|x| c3.inv(x)).collect();
    let tau = vec![GroupAut::identity(&c3), GroupAut::new(&c3, inversion)?];
    let d3 = semidirect_group(&c3, &c2, &tau)?;
    let iso = find_isomorphism(&d3, &s3).ok_or("C3 ⋊ C2 should be S3")?;
    for g in d3.elements() {
        println!("  {} ↦ {}", d3.name(g), s3.name(iso[g]));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
