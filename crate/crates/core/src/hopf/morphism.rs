use super::{index_of, Basis, CgkmmHopf, HopfElement, HopfSubalgebra, TensorSquareElement};
use crate::error::{Error, Result};
use crate::lie::LieHom;
use crate::linalg::{solve_homogeneous, Matrix, Subspace, Vector};
use serde::Serialize;
use std::collections::BTreeMap;

/// A morphism determined by its Lie part `α` and group part `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfMorphism {
    source: CgkmmHopf,
    target: CgkmmHopf,
    alpha: LieHom,
    beta: Vec<usize>,
}

impl Serialize for HopfMorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let beta: Vec<[&str; 2]> = self
            .source
            .group()
            .elements()
            .map(|g| [self.source.group().name(g), self.target.group().name(self.beta[g])])
            .collect();
        let mut st = s.serialize_struct("HopfMorphism", 2)?;
        st.serialize_field("lie", &self.alpha)?;
        st.serialize_field("group", &beta)?;
        st.end()
    }
}

/// Validates `β` multiplicative, `α` bracket-preserving, and `α ∘ τ(g) = τ(β g) ∘ α`.
pub fn morphism_make(source: &CgkmmHopf, target: &CgkmmHopf, alpha: Matrix, beta: Vec<usize>) -> Result<HopfMorphism> {
    if beta.len() != source.group().order() || beta.iter().any(|&b| b >= target.group().order()) {
        return Err(Error::DimensionMismatch("group map has the wrong shape".into()));
    }
    if let Some((a, b)) = source.group().hom_failure(&beta, target.group()) {
        return Err(Error::NotMultiplicative {
            what: "group map".into(),
            a: source.group().name(a).into(),
            b: source.group().name(b).into(),
        });
    }
    let alpha = LieHom::new(source.lie(), target.lie(), alpha)?;
    for g in source.group().elements() {
        let left = alpha.matrix().mul(source.tau().matrix(g));
        let right = target.tau().matrix(beta[g]).mul(alpha.matrix());
        if left != right {
            let x = (0..source.lie_dim()).find(|&c| left.column(c) != right.column(c)).unwrap_or(0);
            return Err(Error::Equivariance {
                g: source.group().name(g).into(),
                x: source.lie().name(x).into(),
            });
        }
    }
    Ok(HopfMorphism {
        source: source.clone(),
        target: target.clone(),
        alpha,
        beta,
    })
}

impl HopfMorphism {
    pub fn identity(h: &CgkmmHopf) -> Self {
        HopfMorphism {
            source: h.clone(),
            target: h.clone(),
            alpha: LieHom::identity(h.lie()),
            beta: h.group().elements().collect(),
        }
    }

    pub(crate) fn unchecked(source: &CgkmmHopf, target: &CgkmmHopf, alpha: Matrix, beta: Vec<usize>) -> Self {
        HopfMorphism {
            source: source.clone(),
            target: target.clone(),
            alpha: LieHom::unchecked(alpha),
            beta,
        }
    }

    pub fn source(&self) -> &CgkmmHopf {
        &self.source
    }

    pub fn target(&self) -> &CgkmmHopf {
        &self.target
    }

    pub fn alpha(&self) -> &LieHom {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn apply_basis(&self, b: &Basis) -> HopfElement {
        let vs: Vec<Vector> = b.mono.word().into_iter().map(|i| self.alpha.matrix().column(i)).collect();
        let u = self.target.lie().product_of_vectors(&vs);
        self.target.from_u(&u, self.beta[b.group])
    }

    pub fn apply(&self, x: &HopfElement) -> HopfElement {
        x.map_linear(|b| self.apply_basis(b))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &HopfMorphism) -> HopfMorphism {
        HopfMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            alpha: self.alpha.compose(&other.alpha),
            beta: other.beta.iter().map(|&g| self.beta[g]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.alpha.kernel().dim() == 0 && self.group_kernel() == vec![0]
    }

    pub fn group_kernel(&self) -> Vec<usize> {
        self.source.group().elements().filter(|&g| self.beta[g] == 0).collect()
    }

    /// `(φ ⊗ id)Δ(x) − 1 ⊗ x`, which vanishes exactly on the Hopf kernel.
    pub fn kernel_defect(&self, x: &HopfElement) -> TensorSquareElement {
        let mut out = TensorSquareElement::zero();
        for ((a, b), c) in self.source.coproduct(x).iter() {
            for (pa, cp) in self.apply_basis(a).iter() {
                out.add_term((pa.clone(), b.clone()), c * cp);
            }
        }
        let unit = Basis {
            mono: crate::pbw::Monomial::one(self.target.lie_dim()),
            group: 0,
        };
        for (b, c) in x.iter() {
            out.add_term((unit.clone(), b.clone()), -c.clone());
        }
        out
    }
}

/// `(ker β, ker α)`, certified against the defining condition on all elements of degree at most `d`.
pub fn hopf_kernel(phi: &HopfMorphism, d: u32) -> Result<HopfSubalgebra> {
    let kernel = HopfSubalgebra::new(phi.source(), phi.group_kernel(), phi.alpha().kernel().into_basis())?;
    certify_kernel(phi, &kernel, d)?;
    Ok(kernel)
}

/// Both inclusions between the claimed kernel and the solution space of the kernel condition, up to degree `d`.
pub(crate) fn certify_kernel(phi: &HopfMorphism, kernel: &HopfSubalgebra, d: u32) -> Result<()> {
    let a = phi.source();
    let basis = a.degree_basis(d);
    let index = index_of(&basis);
    for x in kernel.spanning_elements(d) {
        if !phi.kernel_defect(&x).is_zero() {
            return Err(Error::Certification {
                what: "kernel membership".into(),
                witness: a.render(&x),
            });
        }
    }
    let mut rows: BTreeMap<(Basis, Basis), Vector> = BTreeMap::new();
    for (j, b) in basis.iter().enumerate() {
        for (key, c) in phi.kernel_defect(&HopfElement::basis(b.clone())).iter() {
            rows.entry(key.clone()).or_insert_with(|| vec![crate::rational::zero(); basis.len()])[j] = c.clone();
        }
    }
    let solutions = Subspace::from_spanning(basis.len(), solve_homogeneous(basis.len(), rows.into_values().collect()));
    let claimed = kernel.span(d, &basis, &index);
    if solutions != claimed {
        let witness = solutions
            .basis()
            .iter()
            .find(|v| !claimed.contains(v))
            .map(|v| a.render(&element_from(&basis, v)))
            .unwrap_or_else(|| "claimed kernel element fails the condition".into());
        return Err(Error::Certification {
            what: "kernel completeness".into(),
            witness,
        });
    }
    Ok(())
}

pub(crate) fn element_from(basis: &[Basis], v: &[crate::rational::Q]) -> HopfElement {
    basis.iter().cloned().zip(v.iter().cloned()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupTable, LinearRep};
    use crate::lie::{quotient_by_ideal_closure, LieAlgebra};
    use crate::linalg::unit_vec;
    use crate::rational::q;

    #[test]
    fn identity_and_group_surjection() {
        let c4 = CgkmmHopf::group_algebra(GroupTable::cyclic(4));
        let id = morphism_make(&c4, &c4, Matrix::zeros(0, 0), (0..4).collect()).unwrap();
        assert_eq!(id, HopfMorphism::identity(&c4));
        let k = hopf_kernel(&id, 2).unwrap();
        assert_eq!(k.subgroup(), &[0]);

        let c2 = CgkmmHopf::group_algebra(GroupTable::cyclic(2));
        let beta: Vec<usize> = (0..4).map(|g| g % 2).collect();
        let phi = morphism_make(&c4, &c2, Matrix::zeros(0, 0), beta).unwrap();
        let k = hopf_kernel(&phi, 1).unwrap();
        let g2 = c4.group().label("(1 3)(2 4)").unwrap();
        assert_eq!(k.subgroup(), &[0, g2]);
    }

    #[test]
    fn equivariance_failure() {
        let c2 = GroupTable::cyclic(2);
        let x = LieAlgebra::abelian(vec!["x".into()]);
        let sign = LinearRep::new(&c2, 1, vec![Matrix::identity(1), Matrix::scalar(1, q(-1))]).unwrap();
        let src = CgkmmHopf::new(c2.clone(), x.clone(), sign).unwrap();
        let tgt = CgkmmHopf::new(c2.clone(), x, LinearRep::trivial(&c2, 1)).unwrap();
        let err = morphism_make(&src, &tgt, Matrix::identity(1), vec![0, 1]).unwrap_err();
        assert_eq!(err, Error::Equivariance { g: "(1 2)".into(), x: "x".into() });
    }

    #[test]
    fn heisenberg_projection_kernel() {
        let names = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let h3 = LieAlgebra::from_brackets(names, &[(0, 1, vec![q(0), q(0), q(1)])]).unwrap();
        let quot = quotient_by_ideal_closure(&h3, &[unit_vec(3, 2)]);
        let a = CgkmmHopf::enveloping(h3);
        let b = CgkmmHopf::enveloping(quot.quotient.clone());
        let phi = morphism_make(&a, &b, quot.projection.matrix().clone(), vec![0]).unwrap();
        let k = hopf_kernel(&phi, 3).unwrap();
        assert_eq!(k.lie(), &Subspace::from_spanning(3, vec![unit_vec(3, 2)]));
    }
}
