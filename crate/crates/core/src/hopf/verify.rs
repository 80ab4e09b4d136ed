use super::{Basis, CgkmmHopf, HopfElement, TensorCubeElement, TensorSquareElement};
use rayon::prelude::*;
use serde::Serialize;

/// Outcome of one axiom over all test cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub cases: usize,
    pub passed: bool,
    /// The first failing case, in basis order.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub degree: u32,
    pub passed: bool,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    /// The first failing axiom with its witness.
    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

pub(crate) fn run_check<T: Sync>(axiom: &str, cases: &[T], fail: impl Fn(&T) -> Option<String> + Sync) -> AxiomCheck {
    let witness = cases.par_iter().map(&fail).collect::<Vec<_>>().into_iter().flatten().next();
    AxiomCheck {
        axiom: axiom.into(),
        cases: cases.len(),
        passed: witness.is_none(),
        witness,
    }
}

fn pairs(basis: &[Basis], d: u32) -> Vec<(Basis, Basis)> {
    let mut out = Vec::new();
    for a in basis {
        for b in basis {
            if a.mono.degree() + b.mono.degree() <= d {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn triples(basis: &[Basis], d: u32) -> Vec<(Basis, Basis, Basis)> {
    let mut out = Vec::new();
    for (a, b) in pairs(basis, d) {
        for c in basis {
            if a.mono.degree() + b.mono.degree() + c.mono.degree() <= d {
                out.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    out
}

impl CgkmmHopf {
    fn delta_left(&self, t: &TensorSquareElement) -> TensorCubeElement {
        let mut out = TensorCubeElement::zero();
        for ((a, b), c) in t.iter() {
            for ((a1, a2), c1) in self.coproduct_basis(a).iter() {
                out.add_term((a1.clone(), a2.clone(), b.clone()), c * c1);
            }
        }
        out
    }

    fn delta_right(&self, t: &TensorSquareElement) -> TensorCubeElement {
        let mut out = TensorCubeElement::zero();
        for ((a, b), c) in t.iter() {
            for ((b1, b2), c1) in self.coproduct_basis(b).iter() {
                out.add_term((a.clone(), b1.clone(), b2.clone()), c * c1);
            }
        }
        out
    }
}

/// Checks the bialgebra and Hopf axioms on every basis element (pairs, triples) of total PBW degree at most `d`.
pub fn verify_hopf_axioms(h: &CgkmmHopf, d: u32) -> AxiomReport {
    let basis = h.degree_basis(d);
    let pairs = pairs(&basis, d);
    let triples = triples(&basis, d);
    let el = |b: &Basis| HopfElement::basis(b.clone());
    let r = |b: &Basis| h.render_basis(b);
    let n = h.lie_dim();

    let letter_pairs: Vec<(usize, usize)> = if d >= 2 {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    } else {
        Vec::new()
    };

    let checks = vec![
        run_check("associativity", &triples, |(a, b, c)| {
            let left = h.multiply(&h.mul_basis(a, b), &el(c));
            let right = h.multiply(&el(a), &h.mul_basis(b, c));
            (left != right).then(|| format!("({})({})({})", r(a), r(b), r(c)))
        }),
        run_check("unit", &basis, |a| {
            let ok = h.multiply(&h.one(), &el(a)) == el(a) && h.multiply(&el(a), &h.one()) == el(a);
            (!ok).then(|| r(a))
        }),
        run_check("primitive-bracket", &letter_pairs, |&(i, j)| {
            // e_j e_i − e_i e_j = [e_i, e_j]
            let comm = h.multiply(&h.letter(j), &h.letter(i)).minus(&h.multiply(&h.letter(i), &h.letter(j)));
            (comm != h.primitive(h.lie().bracket_basis(i, j)))
                .then(|| format!("[{}, {}]", h.lie().name(i), h.lie().name(j)))
        }),
        run_check("coassociativity", &basis, |a| {
            let t = h.coproduct_basis(a);
            (h.delta_left(&t) != h.delta_right(&t)).then(|| r(a))
        }),
        run_check("counitality", &basis, |a| {
            let t = h.coproduct_basis(a);
            let left: HopfElement = t.iter().map(|((x, y), c)| (y.clone(), c * h.counit_basis(x))).collect();
            let right: HopfElement = t.iter().map(|((x, y), c)| (x.clone(), c * h.counit_basis(y))).collect();
            (left != el(a) || right != el(a)).then(|| r(a))
        }),
        run_check("coproduct-multiplicative", &pairs, |(a, b)| {
            let left = h.coproduct(&h.mul_basis(a, b));
            let right = h.multiply_tensor(&h.coproduct_basis(a), &h.coproduct_basis(b));
            (left != right).then(|| format!("({})({})", r(a), r(b)))
        }),
        run_check("counit-multiplicative", &pairs, |(a, b)| {
            let left = h.counit(&h.mul_basis(a, b));
            (left != h.counit_basis(a) * h.counit_basis(b)).then(|| format!("({})({})", r(a), r(b)))
        }),
        run_check("antipode", &basis, |a| {
            let t = h.coproduct_basis(a);
            let expected = h.scalar(h.counit_basis(a));
            let left = h.contract(&t, |x| h.antipode_basis(x), el);
            let right = h.contract(&t, el, |x| h.antipode_basis(x));
            (left != expected || right != expected).then(|| r(a))
        }),
        run_check("cocommutativity", &basis, |a| {
            let t = h.coproduct_basis(a);
            let flipped: TensorSquareElement = t.iter().map(|((x, y), c)| ((y.clone(), x.clone()), c.clone())).collect();
            (flipped != t).then(|| r(a))
        }),
    ];
    AxiomReport {
        degree: d,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupTable, LinearRep};
    use crate::lie::LieAlgebra;
    use crate::linalg::Matrix;
    use crate::rational::q;

    fn h3_c2() -> CgkmmHopf {
        let names = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let lie = LieAlgebra::from_brackets(names, &[(0, 1, vec![q(0), q(0), q(1)])]).unwrap();
        let c2 = GroupTable::cyclic(2);
        // x ↦ −x, y ↦ −y, z ↦ z
        let t = Matrix::from_rows(vec![
            vec![q(-1), q(0), q(0)],
            vec![q(0), q(-1), q(0)],
            vec![q(0), q(0), q(1)],
        ]);
        let tau = LinearRep::new(&c2, 3, vec![Matrix::identity(3), t]).unwrap();
        CgkmmHopf::new(c2, lie, tau).unwrap()
    }

    #[test]
    fn group_algebra_passes() {
        let h = CgkmmHopf::group_algebra(GroupTable::symmetric(3));
        assert!(verify_hopf_axioms(&h, 2).passed);
    }

    #[test]
    fn heisenberg_smash_passes() {
        let report = verify_hopf_axioms(&h3_c2(), 3);
        assert!(report.passed, "{:?}", report.first_failure());
    }

    #[test]
    fn corrupted_constants_are_located() {
        let bad = h3_c2().corrupt(1, 0, 2, q(0));
        let report = verify_hopf_axioms(&bad, 2);
        let fail = report.first_failure().expect("corruption detected");
        assert_eq!(fail.axiom, "primitive-bracket");
        assert_eq!(fail.witness.as_deref(), Some("[y, x]"));
    }
}
