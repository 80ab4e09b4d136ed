// Centralizers, centres and the comparison with the algebraic centre.

use cocohopf::center::{center, centralizer, hz_compare, is_normal};
use cocohopf::corpus::{k_s3, u_h3};
use cocohopf::hopf::HopfSubalgebra;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s3 = k_s3();
    let a3 = HopfSubalgebra::generated(&s3, &[s3.group().label("(1 2 3)").ok_or("no 3-cycle")?], vec![])?;
    let c = centralizer(&s3, &a3, 3)?;
    let names: Vec<&str> = c.subalgebra.subgroup().iter().map(|&g| s3.group().name(g)).collect();
    println!("C(K[S3], K[A3]) has grouplikes {names:?}");
    println!("it is normal: {}", is_normal(&s3, &c.subalgebra, 3)?.normal);

    let h = u_h3();
    let z = center(&h, 3)?;
    let lie: Vec<String> = z.subalgebra.lie().basis().iter().map(|v| h.lie().render(v)).collect();
    println!("Z(U(h3)) = U(span{{{}}})", lie.join(", "));
    let r = hz_compare(&h, 3)?;
    println!("graded dimensions: Z_alg {:?}, HZ {:?}, Z {:?}", r.z_alg, r.hz, r.center);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
