//! Cocommutative Hopf algebras `U(L) ⋊ K[G]` with `G` acting on `L` through `τ`.

pub(crate) mod morphism;
mod sub;
pub(crate) mod verify;

pub use morphism::{hopf_kernel, morphism_make, HopfMorphism};
pub use sub::{functor_q, quotient_by_normal, HopfSubalgebra};
pub use verify::{verify_hopf_axioms, AxiomCheck, AxiomReport};

use crate::error::{Error, Result};
use crate::group::{GroupTable, LinearRep};
use crate::lie::{LieAlgebra, LieHom};
use crate::lincomb::LinComb;
use crate::linalg::{Matrix, Vector};
use crate::pbw::{Monomial, UEnvElement};
use crate::rational::Q;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// A basis element `m·g` with `m` a PBW monomial and `g` a group label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Basis {
    pub mono: Monomial,
    pub group: usize,
}

pub type HopfElement = LinComb<Basis>;
pub type TensorSquareElement = LinComb<(Basis, Basis)>;
pub type TensorCubeElement = LinComb<(Basis, Basis, Basis)>;

type ActionCache = RwLock<HashMap<(usize, Monomial), UEnvElement>>;

/// `U(L) ⋊ K[G]`, the element `m·g` multiplying as `(m g)(m' g') = m·τ(g)(m')·gg'`.
#[derive(Clone)]
pub struct CgkmmHopf {
    group: GroupTable,
    lie: LieAlgebra,
    tau: LinearRep,
    action_cache: Arc<ActionCache>,
}

impl PartialEq for CgkmmHopf {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.lie == other.lie && self.tau == other.tau
    }
}

impl Eq for CgkmmHopf {}

impl std::fmt::Debug for CgkmmHopf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CgkmmHopf")
            .field("group", &self.group.names())
            .field("lie", &self.lie)
            .finish()
    }
}

#[derive(Serialize)]
struct TauEntry<'a> {
    element: &'a str,
    matrix: &'a Matrix,
}

impl Serialize for CgkmmHopf {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let tau: Vec<TauEntry> = self
            .group
            .generators()
            .iter()
            .map(|&g| TauEntry {
                element: self.group.name(g),
                matrix: self.tau.matrix(g),
            })
            .collect();
        let mut st = s.serialize_struct("CgkmmHopf", 3)?;
        st.serialize_field("group", &self.group)?;
        st.serialize_field("lie", &self.lie)?;
        st.serialize_field("action", &tau)?;
        st.end()
    }
}

impl CgkmmHopf {
    /// Validates that every `τ(g)` is a Lie automorphism.
    pub fn new(group: GroupTable, lie: LieAlgebra, tau: LinearRep) -> Result<Self> {
        if tau.dim() != lie.dim() || tau.matrices().len() != group.order() {
            return Err(Error::DimensionMismatch(format!(
                "action of dimension {} on a Lie algebra of dimension {}",
                tau.dim(),
                lie.dim()
            )));
        }
        for g in group.elements() {
            let m = tau.matrix(g);
            if let Some((i, j)) = LieHom::unchecked(m.clone()).bracket_failure(&lie, &lie) {
                return Err(Error::NotBracketPreserving {
                    what: format!("τ({})", group.name(g)),
                    i: lie.name(i).into(),
                    j: lie.name(j).into(),
                });
            }
        }
        Ok(Self::unchecked(group, lie, tau))
    }

    pub(crate) fn unchecked(group: GroupTable, lie: LieAlgebra, tau: LinearRep) -> Self {
        CgkmmHopf {
            group,
            lie,
            tau,
            action_cache: Arc::default(),
        }
    }

    /// `K[G]`.
    pub fn group_algebra(group: GroupTable) -> Self {
        let tau = LinearRep::trivial(&group, 0);
        Self::unchecked(group, LieAlgebra::zero(), tau)
    }

    /// `U(L)`.
    pub fn enveloping(lie: LieAlgebra) -> Self {
        let group = GroupTable::trivial();
        let tau = LinearRep::trivial(&group, lie.dim());
        Self::unchecked(group, lie, tau)
    }

    /// Replaces one structure constant without validation; for negative tests only.
    #[doc(hidden)]
    pub fn corrupt(&self, i: usize, j: usize, k: usize, value: Q) -> Self {
        Self::unchecked(self.group.clone(), self.lie.corrupt(i, j, k, value), self.tau.clone())
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn tau(&self) -> &LinearRep {
        &self.tau
    }

    pub fn lie_dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn basis(&self, mono: Monomial, group: usize) -> Basis {
        Basis { mono, group }
    }

    pub fn one(&self) -> HopfElement {
        self.grouplike(0)
    }

    pub fn grouplike(&self, g: usize) -> HopfElement {
        HopfElement::basis(Basis {
            mono: Monomial::one(self.lie_dim()),
            group: g,
        })
    }

    /// The primitive element `v·e`.
    pub fn primitive(&self, v: &[Q]) -> HopfElement {
        self.from_u(&self.lie.u_vector(v), 0)
    }

    pub fn letter(&self, i: usize) -> HopfElement {
        HopfElement::basis(Basis {
            mono: Monomial::letter(self.lie_dim(), i),
            group: 0,
        })
    }

    /// `x·g` for `x ∈ U(L)`.
    pub fn from_u(&self, x: &UEnvElement, g: usize) -> HopfElement {
        x.iter()
            .map(|(m, c)| (Basis { mono: m.clone(), group: g }, c.clone()))
            .collect()
    }

    pub fn degree(&self, x: &HopfElement) -> u32 {
        x.keys().map(|b| b.mono.degree()).max().unwrap_or(0)
    }

    /// All basis elements with PBW degree at most `d`.
    pub fn degree_basis(&self, d: u32) -> Vec<Basis> {
        let monos = Monomial::up_to_degree(self.lie_dim(), d);
        let mut out = Vec::with_capacity(monos.len() * self.group.order());
        for m in monos {
            for g in self.group.elements() {
                out.push(Basis { mono: m.clone(), group: g });
            }
        }
        out
    }

    /// `τ(g)` extended to `U(L)` as an algebra automorphism, on one monomial.
    pub fn act_monomial(&self, g: usize, m: &Monomial) -> UEnvElement {
        if g == 0 || m.is_one() {
            return UEnvElement::basis(m.clone());
        }
        let key = (g, m.clone());
        if let Some(hit) = self.action_cache.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let t = self.tau.matrix(g);
        let vs: Vec<Vector> = m.word().into_iter().map(|i| t.column(i)).collect();
        let out = self.lie.product_of_vectors(&vs);
        self.action_cache.write().expect("cache lock").insert(key, out.clone());
        out
    }

    pub fn act_u(&self, g: usize, x: &UEnvElement) -> UEnvElement {
        x.map_linear(|m| self.act_monomial(g, m))
    }

    pub fn mul_basis(&self, a: &Basis, b: &Basis) -> HopfElement {
        let moved = self.act_monomial(a.group, &b.mono);
        let prod = self.lie.u_mul(&UEnvElement::basis(a.mono.clone()), &moved);
        self.from_u(&prod, self.group.mul(a.group, b.group))
    }

    pub fn multiply(&self, u: &HopfElement, v: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in v.iter() {
                out.add_scaled(&(ca * cb), &self.mul_basis(a, b));
            }
        }
        out
    }

    pub fn multiply_all(&self, factors: &[HopfElement]) -> HopfElement {
        factors.iter().fold(self.one(), |acc, f| self.multiply(&acc, f))
    }

    pub fn coproduct_basis(&self, b: &Basis) -> TensorSquareElement {
        b.mono
            .splittings()
            .into_iter()
            .map(|(l, r, c)| {
                (
                    (Basis { mono: l, group: b.group }, Basis { mono: r, group: b.group }),
                    c,
                )
            })
            .collect()
    }

    pub fn coproduct(&self, u: &HopfElement) -> TensorSquareElement {
        u.map_linear(|b| self.coproduct_basis(b))
    }

    pub fn counit_basis(&self, b: &Basis) -> Q {
        if b.mono.is_one() {
            Q::one()
        } else {
            Q::zero()
        }
    }

    pub fn counit(&self, u: &HopfElement) -> Q {
        u.iter()
            .filter(|(b, _)| b.mono.is_one())
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// `S(x·g) = τ(g⁻¹)(S_U(x))·g⁻¹`.
    pub fn antipode_basis(&self, b: &Basis) -> HopfElement {
        let gi = self.group.inv(b.group);
        let s = self.lie.u_antipode_monomial(&b.mono);
        self.from_u(&self.act_u(gi, &s), gi)
    }

    pub fn antipode(&self, u: &HopfElement) -> HopfElement {
        u.map_linear(|b| self.antipode_basis(b))
    }

    pub fn tensor(&self, a: &HopfElement, b: &HopfElement) -> TensorSquareElement {
        let mut out = TensorSquareElement::zero();
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                out.add_term((x.clone(), y.clone()), cx * cy);
            }
        }
        out
    }

    /// Componentwise product in `H ⊗ H`.
    pub fn multiply_tensor(&self, s: &TensorSquareElement, t: &TensorSquareElement) -> TensorSquareElement {
        let mut out = TensorSquareElement::zero();
        for ((a, b), c1) in s.iter() {
            for ((x, y), c2) in t.iter() {
                let left = self.mul_basis(a, x);
                let right = self.mul_basis(b, y);
                out.add_scaled(&(c1 * c2), &self.tensor(&left, &right));
            }
        }
        out
    }

    /// `m ∘ (f ⊗ g)` applied to a tensor.
    pub fn contract(
        &self,
        t: &TensorSquareElement,
        f: impl Fn(&Basis) -> HopfElement,
        g: impl Fn(&Basis) -> HopfElement,
    ) -> HopfElement {
        let mut out = HopfElement::zero();
        for ((a, b), c) in t.iter() {
            out.add_scaled(c, &self.multiply(&f(a), &g(b)));
        }
        out
    }

    pub fn render_basis(&self, b: &Basis) -> String {
        let m = b.mono.render(self.lie.names());
        if b.group == 0 {
            m
        } else if b.mono.is_one() {
            self.group.name(b.group).to_string()
        } else {
            format!("{m}·{}", self.group.name(b.group))
        }
    }

    pub fn render(&self, x: &HopfElement) -> String {
        x.render(|b| self.render_basis(b))
    }

    pub fn render_tensor(&self, t: &TensorSquareElement) -> String {
        t.render(|(a, b)| format!("{} ⊗ {}", self.render_basis(a), self.render_basis(b)))
    }

    /// Coordinates over a list of basis elements; `None` if `x` leaves their span.
    pub fn coordinates(&self, basis: &[Basis], index: &HashMap<Basis, usize>, x: &HopfElement) -> Option<Vector> {
        let mut v = vec![Q::zero(); basis.len()];
        for (b, c) in x.iter() {
            v[*index.get(b)?] = c.clone();
        }
        Some(v)
    }

    pub(crate) fn scalar(&self, c: Q) -> HopfElement {
        self.one().scaled(&c)
    }
}

pub(crate) fn index_of(basis: &[Basis]) -> HashMap<Basis, usize> {
    basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect()
}

/// `hopf_multiply`.
pub fn hopf_multiply(h: &CgkmmHopf, u: &HopfElement, v: &HopfElement) -> HopfElement {
    h.multiply(u, v)
}

/// `hopf_coproduct`.
pub fn hopf_coproduct(h: &CgkmmHopf, u: &HopfElement) -> TensorSquareElement {
    h.coproduct(u)
}

/// `hopf_antipode`.
pub fn hopf_antipode(h: &CgkmmHopf, u: &HopfElement) -> HopfElement {
    h.antipode(u)
}

pub fn hopf_counit(h: &CgkmmHopf, u: &HopfElement) -> Q {
    h.counit(u)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rational::q;

    /// `U(ℚx) ⋊ K[C2]` with the generator acting by `−1`.
    pub(crate) fn sign_algebra() -> CgkmmHopf {
        let c2 = GroupTable::cyclic(2);
        let tau = LinearRep::new(&c2, 1, vec![Matrix::identity(1), Matrix::scalar(1, q(-1))]).unwrap();
        CgkmmHopf::new(c2, LieAlgebra::abelian(vec!["x".into()]), tau).unwrap()
    }

    #[test]
    fn products() {
        let u = CgkmmHopf::enveloping(LieAlgebra::abelian(vec!["x".into()]));
        let x = u.letter(0);
        assert_eq!(u.render(&u.multiply(&x, &x)), "x^2");
        let h = sign_algebra();
        let s = h.grouplike(1);
        assert_eq!(h.render(&h.multiply(&s, &h.letter(0))), "-x·(1 2)");
        assert_eq!(h.multiply(&s, &s), h.one());
    }

    #[test]
    fn coproduct_and_counit() {
        let h = sign_algebra();
        let x = h.letter(0);
        assert_eq!(h.render_tensor(&h.coproduct(&x)), "1 ⊗ x + x ⊗ 1");
        let x2s = h.multiply(&h.multiply(&x, &x), &h.grouplike(1));
        assert_eq!(
            h.render_tensor(&h.coproduct(&x2s)),
            "(1 2) ⊗ x^2·(1 2) + 2 x·(1 2) ⊗ x·(1 2) + x^2·(1 2) ⊗ (1 2)"
        );
        assert_eq!(h.counit(&x), q(0));
        assert_eq!(h.counit(&h.grouplike(1)), q(1));
    }

    #[test]
    fn antipode_examples() {
        let h = sign_algebra();
        let xs = h.multiply(&h.letter(0), &h.grouplike(1));
        assert_eq!(h.antipode(&xs), xs);
        assert_eq!(h.antipode(&h.letter(0)), h.letter(0).negated());
        let m = h.contract(&h.coproduct(&xs), |b| h.antipode_basis(b), |b| HopfElement::basis(b.clone()));
        assert!(m.is_zero());
    }
}
