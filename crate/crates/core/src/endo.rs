//! Hopf derivations and Hopf automorphisms in `(Lie part, group part)` coordinates.
//!
//! A derivation is `ψ(x) = δ(x)` on primitives and `ψ(g) = d(g)·g` on grouplikes; an
//! automorphism is `φ(x) = α(x)`, `φ(g) = β(g)`.

use crate::error::{Error, Result};
use crate::group::{is_cocycle, GroupAut};
use crate::hopf::{verify::run_check, AxiomReport, Basis, CgkmmHopf, HopfElement, TensorSquareElement};
use crate::lie::{derivation_equations, matrix_from_flat, LieHom};
use crate::linalg::{is_zero_vec, solve_homogeneous, unit_vec, vec_sub, zero_vec, Matrix, Vector};
use crate::pbw::UEnvElement;
use crate::rational::{fmt_q, Q};
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HopfDerivation {
    delta: Matrix,
    /// `d[g]` for every group label.
    d: Vec<Vector>,
}

#[derive(Serialize)]
struct CocycleValue<'a> {
    element: &'a str,
    #[serde(with = "crate::rational::serde_vec_q")]
    value: &'a [Q],
}

impl HopfDerivation {
    /// Validates the Lie derivation, cocycle and twisted-equivariance conditions.
    pub fn new(h: &CgkmmHopf, delta: Matrix, d: Vec<Vector>) -> Result<Self> {
        let n = h.lie_dim();
        if delta.rows() != n || delta.cols() != n || d.len() != h.group().order() || d.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch("derivation data has the wrong shape".into()));
        }
        if let Some((i, j)) = h.lie().derivation_failure(&delta) {
            return Err(Error::NotDerivation {
                what: "δ".into(),
                i: h.lie().name(i).into(),
                j: h.lie().name(j).into(),
            });
        }
        if !is_cocycle(h.group(), h.tau(), &d) {
            return Err(Error::NotDerivation {
                what: "d (cocycle condition)".into(),
                i: String::new(),
                j: String::new(),
            });
        }
        let psi = HopfDerivation { delta, d };
        if let Some((g, x)) = psi.equivariance_failure(h) {
            return Err(Error::Equivariance {
                g: h.group().name(g).into(),
                x: h.lie().name(x).into(),
            });
        }
        Ok(psi)
    }

    /// `δ(τ(g)x) − τ(g)δ(x) = [τ(g)x, d(g)]`.
    fn equivariance_failure(&self, h: &CgkmmHopf) -> Option<(usize, usize)> {
        let n = h.lie_dim();
        for g in h.group().elements() {
            let t = h.tau().matrix(g);
            for c in 0..n {
                let tx = t.column(c);
                let left = vec_sub(&self.delta.mul_vec(&tx), &t.mul_vec(&self.delta.column(c)));
                if left != h.lie().bracket(&tx, &self.d[g]) {
                    return Some((g, c));
                }
            }
        }
        None
    }

    pub fn zero(h: &CgkmmHopf) -> Self {
        let n = h.lie_dim();
        HopfDerivation {
            delta: Matrix::zeros(n, n),
            d: vec![zero_vec(n); h.group().order()],
        }
    }

    pub(crate) fn unchecked(delta: Matrix, d: Vec<Vector>) -> Self {
        HopfDerivation { delta, d }
    }

    pub fn delta(&self) -> &Matrix {
        &self.delta
    }

    pub fn cocycle(&self) -> &[Vector] {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.delta.is_zero() && self.d.iter().all(|v| is_zero_vec(v))
    }

    /// `δ` row-major, then `d(g)` in label order.
    pub fn to_flat(&self) -> Vector {
        let n = self.delta.rows();
        let mut v = Vec::with_capacity(n * n + self.d.len() * n);
        for r in 0..n {
            v.extend_from_slice(self.delta.row(r));
        }
        for x in &self.d {
            v.extend_from_slice(x);
        }
        v
    }

    pub fn from_flat(h: &CgkmmHopf, v: &[Q]) -> Self {
        let n = h.lie_dim();
        let delta = matrix_from_flat(n, &v[..n * n]);
        let d = (0..h.group().order()).map(|g| v[n * n + g * n..n * n + (g + 1) * n].to_vec()).collect();
        HopfDerivation { delta, d }
    }

    pub fn linear_combination(h: &CgkmmHopf, coeffs: &[Q], basis: &[HopfDerivation]) -> Self {
        let mut acc = zero_vec(flat_len(h));
        for (c, b) in coeffs.iter().zip(basis) {
            crate::linalg::add_scaled(&mut acc, c, &b.to_flat());
        }
        Self::from_flat(h, &acc)
    }

    /// `ψ(m·g) = ψ(m)·g + m·d(g)·g`, with `ψ` on `U(L)` extended by the Leibniz rule.
    pub fn apply_basis(&self, h: &CgkmmHopf, b: &Basis) -> HopfElement {
        let lie = h.lie();
        let word = b.mono.word();
        let mut u = UEnvElement::zero();
        for j in 0..word.len() {
            let vs: Vec<Vector> = word
                .iter()
                .enumerate()
                .map(|(k, &i)| if k == j { self.delta.column(i) } else { unit_vec(lie.dim(), i) })
                .collect();
            u.add_assign(&lie.product_of_vectors(&vs));
        }
        if !is_zero_vec(&self.d[b.group]) {
            u.add_assign(&lie.u_mul(&UEnvElement::basis(b.mono.clone()), &lie.u_vector(&self.d[b.group])));
        }
        h.from_u(&u, b.group)
    }

    pub fn apply(&self, h: &CgkmmHopf, x: &HopfElement) -> HopfElement {
        x.map_linear(|b| self.apply_basis(h, b))
    }

    pub fn render(&self, h: &CgkmmHopf) -> String {
        let n = h.lie_dim();
        let mut parts = Vec::new();
        for c in 0..n {
            let v = self.delta.column(c);
            if !is_zero_vec(&v) {
                parts.push(format!("δ({}) = {}", h.lie().name(c), h.lie().render(&v)));
            }
        }
        for g in h.group().elements() {
            if !is_zero_vec(&self.d[g]) {
                parts.push(format!("d({}) = {}", h.group().name(g), h.lie().render(&self.d[g])));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(", ")
        }
    }

    pub fn serializable<'a>(&'a self, h: &'a CgkmmHopf) -> DerivationView<'a> {
        DerivationView { psi: self, h }
    }
}

/// A derivation paired with its algebra for serialization.
pub struct DerivationView<'a> {
    psi: &'a HopfDerivation,
    h: &'a CgkmmHopf,
}

impl Serialize for DerivationView<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let cocycle: Vec<CocycleValue> = self
            .h
            .group()
            .elements()
            .map(|g| CocycleValue {
                element: self.h.group().name(g),
                value: &self.psi.d[g],
            })
            .collect();
        let mut st = s.serialize_struct("HopfDerivation", 2)?;
        st.serialize_field("delta", &self.psi.delta)?;
        st.serialize_field("cocycle", &cocycle)?;
        st.end()
    }
}

fn flat_len(h: &CgkmmHopf) -> usize {
    let n = h.lie_dim();
    n * n + h.group().order() * n
}

/// Extracts `v` from an element known to equal `v·g`.
pub(crate) fn primitive_part(h: &CgkmmHopf, x: &HopfElement, g: usize) -> Option<Vector> {
    let n = h.lie_dim();
    let mut v = zero_vec(n);
    for (b, c) in x.iter() {
        if b.group != g || b.mono.degree() != 1 {
            return None;
        }
        let i = b.mono.exponents().iter().position(|&a| a == 1).expect("degree one");
        v[i] = c.clone();
    }
    Some(v)
}

/// Reduced-echelon basis of `Der_Hopf(H)`, each element certified at degree `d`.
pub fn hopf_derivations(h: &CgkmmHopf, d: u32) -> Result<Vec<HopfDerivation>> {
    let basis = hopf_derivations_uncertified(h);
    for psi in &basis {
        let report = certify_derivation(h, psi, d);
        if let Some(f) = report.first_failure() {
            return Err(Error::Certification {
                what: format!("Hopf derivation ({})", f.axiom),
                witness: format!("{} at {}", psi.render(h), f.witness.clone().unwrap_or_default()),
            });
        }
    }
    Ok(basis)
}

/// Solves the linear conditions on `(δ, d)` without the degree-bounded certification.
pub fn hopf_derivations_uncertified(h: &CgkmmHopf) -> Vec<HopfDerivation> {
    let n = h.lie_dim();
    let g = h.group();
    let total = flat_len(h);
    let dvar = |x: usize, m: usize| n * n + x * n + m;
    let mut rows = derivation_equations(h.lie(), 0, total);
    // d(x s) − d(x) − τ(x) d(s) = 0, and d(e) = 0.
    for x in g.elements() {
        for &s in g.generators() {
            for i in 0..n {
                let mut row = zero_vec(total);
                row[dvar(g.mul(x, s), i)] += Q::from_integer(1.into());
                row[dvar(x, i)] -= Q::from_integer(1.into());
                for j in 0..n {
                    row[dvar(s, j)] -= h.tau().matrix(x)[(i, j)].clone();
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    for i in 0..n {
        let mut row = zero_vec(total);
        row[dvar(0, i)] = Q::from_integer(1.into());
        rows.push(row);
    }
    // δ(τ(x)e_c) − τ(x)δ(e_c) − [τ(x)e_c, d(x)] = 0.
    for x in g.elements() {
        let t = h.tau().matrix(x);
        for c in 0..n {
            let tc = t.column(c);
            let brackets: Vec<Vector> = (0..n).map(|m| h.lie().bracket(&tc, &unit_vec(n, m))).collect();
            for k in 0..n {
                let mut row = zero_vec(total);
                for m in 0..n {
                    if !tc[m].is_zero() {
                        row[k * n + m] += &tc[m];
                    }
                    if !t[(k, m)].is_zero() {
                        row[m * n + c] -= &t[(k, m)];
                    }
                    if !brackets[m][k].is_zero() {
                        row[dvar(x, m)] -= &brackets[m][k];
                    }
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    solve_homogeneous(total, rows)
        .into_iter()
        .map(|v| HopfDerivation::from_flat(h, &v))
        .collect()
}

/// Leibniz and co-Leibniz rules of the induced endomorphism on basis elements of degree at most `d`,
/// plus `ψ(1) = 0` and `ε ∘ ψ = 0`.
pub fn certify_derivation(h: &CgkmmHopf, psi: &HopfDerivation, d: u32) -> AxiomReport {
    let basis = h.degree_basis(d);
    let pairs: Vec<(Basis, Basis)> = basis
        .iter()
        .flat_map(|a| basis.iter().map(move |b| (a.clone(), b.clone())))
        .filter(|(a, b)| a.mono.degree() + b.mono.degree() <= d)
        .collect();
    let el = |b: &Basis| HopfElement::basis(b.clone());
    let r = |b: &Basis| h.render_basis(b);
    let checks = vec![
        run_check("leibniz", &pairs, |(a, b)| {
            let left = psi.apply(h, &h.mul_basis(a, b));
            let right = h.multiply(&psi.apply_basis(h, a), &el(b)).plus(&h.multiply(&el(a), &psi.apply_basis(h, b)));
            (left != right).then(|| format!("({})({})", r(a), r(b)))
        }),
        run_check("co-leibniz", &basis, |a| {
            let left = h.coproduct(&psi.apply_basis(h, a));
            let mut right = TensorSquareElement::zero();
            for ((x, y), c) in h.coproduct_basis(a).iter() {
                right.add_scaled(c, &h.tensor(&psi.apply_basis(h, x), &el(y)));
                right.add_scaled(c, &h.tensor(&el(x), &psi.apply_basis(h, y)));
            }
            (left != right).then(|| r(a))
        }),
        run_check("unit", &[()], |_| (!psi.apply(h, &h.one()).is_zero()).then(|| "1".to_string())),
        run_check("counit", &basis, |a| (!h.counit(&psi.apply_basis(h, a)).is_zero()).then(|| r(a))),
    ];
    AxiomReport {
        degree: d,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

/// `ψ₁ ∘ ψ₂ − ψ₂ ∘ ψ₁`, computed by composing on primitives and grouplikes.
pub fn derivation_bracket(h: &CgkmmHopf, psi1: &HopfDerivation, psi2: &HopfDerivation) -> HopfDerivation {
    let comm = |x: &HopfElement| psi1.apply(h, &psi2.apply(h, x)).minus(&psi2.apply(h, &psi1.apply(h, x)));
    let n = h.lie_dim();
    let cols: Vec<Vector> = (0..n)
        .map(|c| primitive_part(h, &comm(&h.letter(c)), 0).expect("commutator of derivations is primitive"))
        .collect();
    let d = h
        .group()
        .elements()
        .map(|g| primitive_part(h, &comm(&h.grouplike(g)), g).expect("commutator of derivations is (g,g)-primitive"))
        .collect();
    HopfDerivation {
        delta: Matrix::from_columns(n, &cols),
        d,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HopfAutomorphism {
    alpha: Matrix,
    beta: GroupAut,
}

impl HopfAutomorphism {
    /// Validates `α ∈ Aut_Lie(L)`, `β ∈ Aut(G)`, and `α ∘ τ(g) = τ(β g) ∘ α`.
    pub fn new(h: &CgkmmHopf, alpha: Matrix, beta: Vec<usize>) -> Result<Self> {
        let beta = GroupAut::new(h.group(), beta)?;
        LieHom::new(h.lie(), h.lie(), alpha.clone())?;
        if alpha.inverse().is_none() {
            return Err(Error::NotInvertible("α is singular".into()));
        }
        let phi = HopfAutomorphism { alpha, beta };
        if let Some((g, x)) = phi.equivariance_failure(h) {
            return Err(Error::Equivariance {
                g: h.group().name(g).into(),
                x: h.lie().name(x).into(),
            });
        }
        Ok(phi)
    }

    fn equivariance_failure(&self, h: &CgkmmHopf) -> Option<(usize, usize)> {
        for g in h.group().elements() {
            let left = self.alpha.mul(h.tau().matrix(g));
            let right = h.tau().matrix(self.beta.apply(g)).mul(&self.alpha);
            if left != right {
                let x = (0..h.lie_dim()).find(|&c| left.column(c) != right.column(c)).unwrap_or(0);
                return Some((g, x));
            }
        }
        None
    }

    pub fn identity(h: &CgkmmHopf) -> Self {
        HopfAutomorphism {
            alpha: Matrix::identity(h.lie_dim()),
            beta: GroupAut::identity(h.group()),
        }
    }

    pub(crate) fn unchecked(alpha: Matrix, beta: GroupAut) -> Self {
        HopfAutomorphism { alpha, beta }
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &GroupAut {
        &self.beta
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &HopfAutomorphism) -> HopfAutomorphism {
        HopfAutomorphism {
            alpha: self.alpha.mul(&other.alpha),
            beta: self.beta.compose(&other.beta),
        }
    }

    pub fn inverse(&self) -> HopfAutomorphism {
        HopfAutomorphism {
            alpha: self.alpha.inverse().expect("automorphism"),
            beta: self.beta.inverse(),
        }
    }

    pub fn apply_basis(&self, h: &CgkmmHopf, b: &Basis) -> HopfElement {
        let vs: Vec<Vector> = b.mono.word().into_iter().map(|i| self.alpha.column(i)).collect();
        h.from_u(&h.lie().product_of_vectors(&vs), self.beta.apply(b.group))
    }

    pub fn apply(&self, h: &CgkmmHopf, x: &HopfElement) -> HopfElement {
        x.map_linear(|b| self.apply_basis(h, b))
    }

    /// Short label: generator images under `β`, then `α` if nontrivial.
    pub fn render(&self, h: &CgkmmHopf) -> String {
        if self.is_identity() {
            return "id".into();
        }
        let mut parts: Vec<String> = h
            .group()
            .generators()
            .iter()
            .filter(|&&g| self.beta.apply(g) != g)
            .map(|&g| format!("{}↦{}", h.group().name(g), h.group().name(self.beta.apply(g))))
            .collect();
        if !self.alpha.is_identity() {
            let rows: Vec<String> = self
                .alpha
                .to_rows()
                .iter()
                .map(|r| r.iter().map(fmt_q).collect::<Vec<_>>().join(" "))
                .collect();
            parts.push(format!("α=[{}]", rows.join("; ")));
        }
        parts.join(", ")
    }

    pub fn serializable<'a>(&'a self, h: &'a CgkmmHopf) -> AutomorphismView<'a> {
        AutomorphismView { phi: self, h }
    }
}

/// An automorphism paired with its algebra for serialization.
pub struct AutomorphismView<'a> {
    phi: &'a HopfAutomorphism,
    h: &'a CgkmmHopf,
}

impl Serialize for AutomorphismView<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let g = self.h.group();
        let beta: Vec<[&str; 2]> = g.elements().map(|x| [g.name(x), g.name(self.phi.beta.apply(x))]).collect();
        let mut st = s.serialize_struct("HopfAutomorphism", 2)?;
        st.serialize_field("alpha", &self.phi.alpha)?;
        st.serialize_field("beta", &beta)?;
        st.end()
    }
}

/// Membership in `Aut_Hopf(H)`.
pub fn aut_membership(h: &CgkmmHopf, alpha: &Matrix, beta: &[usize]) -> bool {
    HopfAutomorphism::new(h, alpha.clone(), beta.to_vec()).is_ok()
}

pub fn aut_compose(a: &HopfAutomorphism, b: &HopfAutomorphism) -> HopfAutomorphism {
    a.compose(b)
}

pub fn aut_invert(a: &HopfAutomorphism) -> HopfAutomorphism {
    a.inverse()
}

/// `φ ∘ ψ ∘ φ⁻¹ = (α δ α⁻¹, g ↦ α(d(β⁻¹ g)))`.
pub fn conjugate_derivation(phi: &HopfAutomorphism, psi: &HopfDerivation) -> HopfDerivation {
    let ai = phi.alpha.inverse().expect("automorphism");
    let bi = phi.beta.inverse();
    HopfDerivation {
        delta: phi.alpha.mul(&psi.delta).mul(&ai),
        d: (0..psi.d.len()).map(|g| phi.alpha.mul_vec(&psi.d[bi.apply(g)])).collect(),
    }
}

/// The Lie algebra `Der_Hopf(H)` on an echelon basis, with `[a, b] = b ∘ a − a ∘ b` so that
/// products in its enveloping algebra act by composition.
pub(crate) fn derivation_lie_algebra(h: &CgkmmHopf, basis: &[HopfDerivation]) -> Result<crate::lie::LieAlgebra> {
    let k = basis.len();
    let space = crate::linalg::Subspace::from_spanning(flat_len(h), basis.iter().map(|b| b.to_flat()).collect());
    let mut brackets = vec![vec![zero_vec(k); k]; k];
    for i in 0..k {
        for j in 0..k {
            let b = derivation_bracket(h, &basis[j], &basis[i]);
            brackets[i][j] = space.coordinates(&b.to_flat()).ok_or_else(|| Error::Certification {
                what: "Der_Hopf closed under the bracket".into(),
                witness: b.render(h),
            })?;
        }
    }
    let names = (0..k).map(|i| format!("ψ{}", i + 1)).collect();
    crate::lie::LieAlgebra::new(names, brackets)
}

pub(crate) fn der_coordinates(h: &CgkmmHopf, basis: &[HopfDerivation], psi: &HopfDerivation) -> Option<Vector> {
    let space = crate::linalg::Subspace::from_spanning(flat_len(h), basis.iter().map(|b| b.to_flat()).collect());
    space.coordinates(&psi.to_flat())
}
