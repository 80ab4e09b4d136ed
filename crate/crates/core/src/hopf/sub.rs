use super::morphism::certify_kernel;
use super::{Basis, CgkmmHopf, HopfElement, HopfMorphism};
use crate::error::{Error, Result};
use crate::group::LinearRep;
use crate::lie::{quotient_by_ideal_closure, LieQuotient};
use crate::linalg::{unit_vec, vec_sub, Matrix, Subspace, Vector};
use crate::pbw::Monomial;
use serde::Serialize;
use std::collections::HashMap;

/// `U(L_H) ⋊ K[G_H]` inside an ambient algebra, as a subgroup and a `τ`-stable Lie subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfSubalgebra {
    ambient: CgkmmHopf,
    subgroup: Vec<usize>,
    lie: Subspace,
}

impl Serialize for HopfSubalgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let group: Vec<&str> = self.subgroup.iter().map(|&g| self.ambient.group().name(g)).collect();
        let lie: Vec<String> = self.lie.basis().iter().map(|v| self.ambient.lie().render(v)).collect();
        let mut st = s.serialize_struct("HopfSubalgebra", 2)?;
        st.serialize_field("group", &group)?;
        st.serialize_field("lie", &lie)?;
        st.end()
    }
}

impl HopfSubalgebra {
    pub fn new(ambient: &CgkmmHopf, subgroup: Vec<usize>, lie: Vec<Vector>) -> Result<Self> {
        let mut subgroup = subgroup;
        subgroup.sort_unstable();
        subgroup.dedup();
        if !ambient.group().is_subgroup(&subgroup) {
            return Err(Error::NotSubalgebra("group part is not a subgroup".into()));
        }
        let n = ambient.lie_dim();
        if lie.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch(format!("Lie vectors must have length {n}")));
        }
        let lie = Subspace::from_spanning(n, lie);
        if !ambient.lie().is_subalgebra(&lie) {
            return Err(Error::NotSubalgebra("Lie part is not closed under the bracket".into()));
        }
        for &h in &subgroup {
            if !lie.contains_subspace(&lie.image(ambient.tau().matrix(h))) {
                return Err(Error::NotSubalgebra(format!(
                    "Lie part is not stable under τ({})",
                    ambient.group().name(h)
                )));
            }
        }
        Ok(HopfSubalgebra {
            ambient: ambient.clone(),
            subgroup,
            lie,
        })
    }

    /// The smallest Hopf subalgebra containing the given grouplikes and primitives.
    pub fn generated(ambient: &CgkmmHopf, group_gens: &[usize], lie_gens: Vec<Vector>) -> Result<Self> {
        if group_gens.iter().any(|&g| g >= ambient.group().order()) {
            return Err(Error::DimensionMismatch("group generator out of range".into()));
        }
        let subgroup = ambient.group().generated(group_gens);
        let n = ambient.lie_dim();
        if lie_gens.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch(format!("Lie vectors must have length {n}")));
        }
        let mut span = Subspace::from_spanning(n, lie_gens);
        loop {
            let mut vs = span.basis().to_vec();
            for a in span.basis() {
                for b in span.basis() {
                    vs.push(ambient.lie().bracket(a, b));
                }
                for &h in &subgroup {
                    vs.push(ambient.tau().act(h, a));
                }
            }
            let next = Subspace::from_spanning(n, vs);
            if next.dim() == span.dim() {
                break;
            }
            span = next;
        }
        Self::new(ambient, subgroup, span.into_basis())
    }

    pub fn trivial(ambient: &CgkmmHopf) -> Self {
        HopfSubalgebra {
            ambient: ambient.clone(),
            subgroup: vec![0],
            lie: Subspace::zero(ambient.lie_dim()),
        }
    }

    pub fn whole(ambient: &CgkmmHopf) -> Self {
        HopfSubalgebra {
            ambient: ambient.clone(),
            subgroup: ambient.group().elements().collect(),
            lie: Subspace::full(ambient.lie_dim()),
        }
    }

    pub fn ambient(&self) -> &CgkmmHopf {
        &self.ambient
    }

    /// Sorted ambient labels.
    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    pub fn lie(&self) -> &Subspace {
        &self.lie
    }

    pub fn is_trivial(&self) -> bool {
        self.subgroup.len() == 1 && self.lie.dim() == 0
    }

    /// A spanning set of its elements of degree at most `d`: ordered products of Lie basis vectors times group elements.
    pub fn spanning_elements(&self, d: u32) -> Vec<HopfElement> {
        let k = self.lie.dim();
        let mut out = Vec::new();
        for m in Monomial::up_to_degree(k, d) {
            let vs: Vec<Vector> = m.word().into_iter().map(|i| self.lie.basis()[i].clone()).collect();
            let u = self.ambient.lie().product_of_vectors(&vs);
            for &h in &self.subgroup {
                out.push(self.ambient.from_u(&u, h));
            }
        }
        out
    }

    /// Coordinates of the degree-`d` part inside the ambient degree basis.
    pub fn span(&self, d: u32, basis: &[Basis], index: &HashMap<Basis, usize>) -> Subspace {
        let vs = self
            .spanning_elements(d)
            .iter()
            .map(|x| self.ambient.coordinates(basis, index, x).expect("degree-bounded"))
            .collect();
        Subspace::from_spanning(basis.len(), vs)
    }

    /// As a Hopf algebra in its own right, with the inclusion morphism.
    pub fn to_hopf(&self) -> Result<(CgkmmHopf, HopfMorphism)> {
        let sub_group = self.ambient.group().subgroup(&self.subgroup)?;
        let (lie, inclusion) = self.ambient.lie().subalgebra(&self.lie)?;
        let k = self.lie.dim();
        let matrices = sub_group
            .embedding
            .iter()
            .map(|&h| {
                let cols: Vec<Vector> = self
                    .lie
                    .basis()
                    .iter()
                    .map(|v| self.lie.coordinates(&self.ambient.tau().act(h, v)).expect("τ-stable"))
                    .collect();
                Matrix::from_columns(k, &cols)
            })
            .collect();
        let tau = LinearRep::new(&sub_group.group, k, matrices)?;
        let h = CgkmmHopf::new(sub_group.group, lie, tau)?;
        let inc = HopfMorphism::unchecked(&h, &self.ambient, inclusion, sub_group.embedding);
        Ok((h, inc))
    }

    /// First violated generator condition for normality, if any.
    ///
    /// `U(L_H) ⋊ K[G_H]` is normal iff `G_H ⊴ G`, `L_H` is an ideal stable under all `τ(g)`,
    /// and `x − τ(h)x ∈ L_H` for `h ∈ G_H`, `x ∈ L`.
    pub fn normality_failure(&self) -> Option<String> {
        let a = &self.ambient;
        let g = a.group();
        for &x in g.generators() {
            for &h in &self.subgroup {
                if self.subgroup.binary_search(&g.conjugate(x, h)).is_err() {
                    return Some(format!("{}·{}·{}⁻¹ ∉ G_H", g.name(x), g.name(h), g.name(x)));
                }
            }
        }
        let n = a.lie_dim();
        for v in self.lie.basis() {
            for i in 0..n {
                if !self.lie.contains(&a.lie().bracket(&unit_vec(n, i), v)) {
                    return Some(format!("[{}, {}] ∉ L_H", a.lie().name(i), a.lie().render(v)));
                }
            }
            for x in g.elements() {
                if !self.lie.contains(&a.tau().act(x, v)) {
                    return Some(format!("τ({})({}) ∉ L_H", g.name(x), a.lie().render(v)));
                }
            }
        }
        for &h in &self.subgroup {
            for i in 0..n {
                let e = unit_vec(n, i);
                if !self.lie.contains(&vec_sub(&e, &a.tau().act(h, &e))) {
                    return Some(format!("{} − τ({})({}) ∉ L_H", a.lie().name(i), g.name(h), a.lie().name(i)));
                }
            }
        }
        None
    }
}

/// `A / A H⁺ A` in coordinates: `G/G_H`, `L/L_H`, the induced action, and the projection.
///
/// The projection's Hopf kernel is certified to be `H` up to degree `d`.
pub fn quotient_by_normal(a: &CgkmmHopf, h: &HopfSubalgebra, d: u32) -> Result<(CgkmmHopf, HopfMorphism)> {
    if h.ambient() != a {
        return Err(Error::NotSubalgebra("subalgebra of a different algebra".into()));
    }
    if let Some(w) = h.normality_failure() {
        return Err(Error::NotNormal(w));
    }
    let (group, proj) = a.group().quotient(h.subgroup())?;
    let LieQuotient {
        quotient: lie,
        projection,
        complement,
        ..
    } = quotient_by_ideal_closure(a.lie(), h.lie().basis());
    let reps: Vec<usize> = group
        .elements()
        .map(|c| a.group().elements().find(|&g| proj[g] == c).expect("coset"))
        .collect();
    let k = lie.dim();
    let n = a.lie_dim();
    let matrices = reps
        .iter()
        .map(|&g| {
            let cols: Vec<Vector> = complement
                .iter()
                .map(|&c| projection.apply(&a.tau().act(g, &unit_vec(n, c))))
                .collect();
            Matrix::from_columns(k, &cols)
        })
        .collect();
    let tau = LinearRep::new(&group, k, matrices)?;
    let q = CgkmmHopf::new(group, lie, tau)?;
    let p = super::morphism_make(a, &q, projection.matrix().clone(), proj)?;
    certify_kernel(&p, h, d)?;
    Ok((q, p))
}

/// `L / I` with `I` the ideal generated by all `τ(g)x − x`.
pub fn functor_q(h: &CgkmmHopf) -> LieQuotient {
    let n = h.lie_dim();
    let mut gens = Vec::new();
    for g in h.group().elements().skip(1) {
        for i in 0..n {
            let e = unit_vec(n, i);
            gens.push(vec_sub(&h.tau().act(g, &e), &e));
        }
    }
    quotient_by_ideal_closure(h.lie(), &gens)
}
