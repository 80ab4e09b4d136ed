//! Small standard algebras, split extensions and normal pairs.

use crate::action::{cgkmm_split_sequence, smash_product, HopfAction, SplitExtension};
use crate::center::conjugation_action;
use crate::endo::{HopfAutomorphism, HopfDerivation};
use crate::error::Result;
use crate::group::{GroupTable, LinearRep};
use crate::hopf::{morphism_make, CgkmmHopf, HopfSubalgebra};
use crate::lie::LieAlgebra;
use crate::linalg::{unit_vec, Matrix};
use crate::rational::q;

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

pub fn k_s3() -> CgkmmHopf {
    CgkmmHopf::group_algebra(GroupTable::symmetric(3))
}

pub fn k_c4() -> CgkmmHopf {
    CgkmmHopf::group_algebra(GroupTable::cyclic(4))
}

pub fn k_c3() -> CgkmmHopf {
    CgkmmHopf::group_algebra(GroupTable::cyclic(3))
}

pub fn k_c2() -> CgkmmHopf {
    CgkmmHopf::group_algebra(GroupTable::cyclic(2))
}

/// The Heisenberg algebra `[x, y] = z`.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_brackets(names(&["x", "y", "z"]), &[(0, 1, vec![q(0), q(0), q(1)])]).expect("Heisenberg")
}

pub fn u_h3() -> CgkmmHopf {
    CgkmmHopf::enveloping(heisenberg())
}

pub fn u_abelian2() -> CgkmmHopf {
    CgkmmHopf::enveloping(LieAlgebra::abelian(names(&["x", "y"])))
}

pub fn u_line() -> CgkmmHopf {
    CgkmmHopf::enveloping(LieAlgebra::abelian(names(&["x"])))
}

/// `U(ℚx) ⋊ K[C2]`, the generator acting by `−1`.
pub fn sign() -> CgkmmHopf {
    let c2 = GroupTable::cyclic(2);
    let tau = LinearRep::new(&c2, 1, vec![Matrix::identity(1), Matrix::scalar(1, q(-1))]).expect("sign");
    CgkmmHopf::new(c2, LieAlgebra::abelian(names(&["x"])), tau).expect("sign")
}

/// `U(ℚ²) ⋊ K[C2]`, the generator swapping `x` and `y`.
pub fn swap() -> CgkmmHopf {
    let c2 = GroupTable::cyclic(2);
    let s = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
    let tau = LinearRep::new(&c2, 2, vec![Matrix::identity(2), s]).expect("swap");
    CgkmmHopf::new(c2, LieAlgebra::abelian(names(&["x", "y"])), tau).expect("swap")
}

/// `K[C2]` acting on `K[C3]` by inversion.
pub fn inversion_action() -> HopfAction {
    let a = k_c3();
    let inv: Vec<usize> = a.group().elements().map(|x| a.group().inv(x)).collect();
    let phi = HopfAutomorphism::new(&a, Matrix::zeros(0, 0), inv).expect("inversion");
    HopfAction::from_generators(&k_c2(), &a, &[1], vec![phi], vec![]).expect("inversion")
}

/// `K[C2]` acting on `U(ℚx)` by `x ↦ −x`.
pub fn sign_action() -> HopfAction {
    let a = u_line();
    let neg = HopfAutomorphism::new(&a, Matrix::scalar(1, q(-1)), vec![0]).expect("negation");
    HopfAction::from_generators(&k_c2(), &a, &[1], vec![neg], vec![]).expect("sign action")
}

/// `K[C2]` acting on `U(ℚ²)` by swapping the coordinates.
pub fn swap_action() -> HopfAction {
    let a = u_abelian2();
    let s = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
    let phi = HopfAutomorphism::new(&a, s, vec![0]).expect("swap");
    HopfAction::from_generators(&k_c2(), &a, &[1], vec![phi], vec![]).expect("swap action")
}

/// `U(ℚl)` acting on `U(ℚm)` by `l · m = m`.
pub fn scaling_action() -> HopfAction {
    let a = CgkmmHopf::enveloping(LieAlgebra::abelian(names(&["m"])));
    let b = CgkmmHopf::enveloping(LieAlgebra::abelian(names(&["l"])));
    let psi = HopfDerivation::new(&a, Matrix::identity(1), vec![vec![q(0)]]).expect("identity derivation");
    crate::action::action_make(&b, &a, vec![HopfAutomorphism::identity(&a)], vec![psi]).expect("scaling action")
}

/// `K[C3] ⋊ K[C2]` by inversion.
pub fn k_c3_by_c2() -> CgkmmHopf {
    smash_product(&inversion_action()).expect("smash").0
}

/// The eight corpus algebras.
pub fn algebras() -> Vec<(&'static str, CgkmmHopf)> {
    vec![
        ("K[S3]", k_s3()),
        ("K[C4]", k_c4()),
        ("K[C3]", k_c3()),
        ("U(h3)", u_h3()),
        ("U(ab2)", u_abelian2()),
        ("sign", sign()),
        ("swap", swap()),
        ("K[C3]⋊K[C2]", k_c3_by_c2()),
    ]
}

/// `K[S3]` as `K[A3] ⋊ K[⟨(1 2)⟩]`, given by inclusion, quotient map and section.
pub fn s3_over_a3(d: u32) -> Result<SplitExtension> {
    let s3 = k_s3();
    let g = s3.group();
    let a3 = HopfSubalgebra::generated(&s3, &[g.label("(1 2 3)").expect("3-cycle")], vec![])?;
    let (_, k) = conjugation_action(&s3, &a3)?;
    let c2 = k_c2();
    let t = g.label("(1 2)").expect("transposition");
    let f_beta: Vec<usize> = g.elements().map(|x| usize::from(a3.subgroup().binary_search(&x).is_err())).collect();
    let f = morphism_make(&s3, &c2, Matrix::zeros(0, 0), f_beta)?;
    let s = morphism_make(&c2, &s3, Matrix::zeros(0, 0), vec![0, t])?;
    SplitExtension::from_maps(k, f, s, d)
}

/// The split extensions used throughout the test suite.
pub fn split_extensions(d: u32) -> Result<Vec<(&'static str, SplitExtension)>> {
    let trivial = HopfAction::trivial(&k_c2(), &u_line());
    Ok(vec![
        ("K[C3]⋊K[C2]", smash_product(&inversion_action())?.1),
        ("U(ℚx)⋊K[C2] sign", smash_product(&sign_action())?.1),
        ("U(ℚ²)⋊K[C2] swap", smash_product(&swap_action())?.1),
        ("U(ℚx)⊗K[C2] trivial", smash_product(&trivial)?.1),
        ("U(ℚm)⋊U(ℚl)", smash_product(&scaling_action())?.1),
        ("sign as U⋊K[G]", cgkmm_split_sequence(&sign(), d)?),
        ("swap as U⋊K[G]", cgkmm_split_sequence(&swap(), d)?),
        ("K[S3] over K[A3]", s3_over_a3(d)?),
    ])
}

/// Normal Hopf subalgebras of corpus algebras.
pub fn normal_pairs() -> Vec<(&'static str, CgkmmHopf, HopfSubalgebra)> {
    let mut out = Vec::new();
    for (name, a) in algebras() {
        out.push((name, a.clone(), HopfSubalgebra::whole(&a)));
        out.push((name, a.clone(), HopfSubalgebra::trivial(&a)));
    }
    let s3 = k_s3();
    let c = s3.group().label("(1 2 3)").expect("3-cycle");
    out.push(("K[S3]", s3.clone(), HopfSubalgebra::generated(&s3, &[c], vec![]).expect("A3")));
    let c4 = k_c4();
    let sq = c4.group().label("(1 3)(2 4)").expect("square");
    out.push(("K[C4]", c4.clone(), HopfSubalgebra::generated(&c4, &[sq], vec![]).expect("square")));
    let h3 = u_h3();
    out.push(("U(h3)", h3.clone(), HopfSubalgebra::generated(&h3, &[], vec![unit_vec(3, 2)]).expect("centre")));
    let ab = u_abelian2();
    out.push(("U(ab2)", ab.clone(), HopfSubalgebra::generated(&ab, &[], vec![unit_vec(2, 0)]).expect("line")));
    for (name, a) in [("sign", sign()), ("swap", swap())] {
        let n = a.lie_dim();
        let lie = (0..n).map(|i| unit_vec(n, i)).collect();
        out.push((name, a.clone(), HopfSubalgebra::generated(&a, &[], lie).expect("primitive part")));
    }
    let e = k_c3_by_c2();
    let normal: Vec<usize> = e.group().elements().filter(|&x| x < 3).collect();
    out.push(("K[C3]⋊K[C2]", e.clone(), HopfSubalgebra::new(&e, normal, vec![]).expect("K[C3]")));
    out
}
