// Normal forms in U(h3) and U(sl2).

use cocohopf::corpus::heisenberg;
use cocohopf::lie::LieAlgebra;
use cocohopf::pbw::straighten;
use cocohopf::rational::q;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h3 = heisenberg();
    for word in [vec![1, 0], vec![2, 1, 0], vec![1, 1, 0, 0]] {
        let letters: Vec<&str> = word.iter().map(|&i| h3.name(i)).collect();
        println!("{} = {}", letters.join("*"), h3.render_u(&straighten(&h3, &word)));
    }

    let names = ["e", "h", "f"].map(String::from).to_vec();
    let v = |a, b, c| vec![q(a), q(b), q(c)];
    let sl2 = LieAlgebra::from_brackets(names, &[(1, 0, v(2, 0, 0)), (1, 2, v(0, 0, -2)), (0, 2, v(0, 1, 0))])?;
    println!("f*e = {}", sl2.render_u(&straighten(&sl2, &[2, 0])));
    println!("f*f*e = {}", sl2.render_u(&straighten(&sl2, &[2, 2, 0])));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
