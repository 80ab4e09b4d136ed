//! The split extension classifier `[H] = U(Der_Hopf H) ⋊ K[Aut_Hopf H]` and the universal morphism.

use crate::action::{ModuleAction, SplitExtension};
use crate::endo::{conjugate_derivation, der_coordinates, derivation_lie_algebra, hopf_derivations, HopfAutomorphism, HopfDerivation};
use crate::error::{Error, Result};
use crate::group::{enumerate_automorphisms, GroupTable, LinearRep};
use crate::hopf::{morphism_make, AxiomCheck, AxiomReport, Basis, CgkmmHopf, HopfElement, HopfMorphism};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Vector};
use crate::rational::q;
use serde::Serialize;
use std::collections::{HashMap, VecDeque};

/// Largest finite automorphism group materialized inside a classifier.
pub const MATERIALIZE_BOUND: usize = 4096;

/// `Aut_Hopf(H)` as a computable group; the element list is present only when `L = 0` and `Aut(G)` is enumerable.
#[derive(Clone, Debug)]
pub struct AutGroup {
    h: CgkmmHopf,
    elements: Option<Vec<HopfAutomorphism>>,
}

impl Serialize for AutGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let names: Option<Vec<String>> = self.elements().map(|els| els.iter().map(|a| a.render(&self.h)).collect());
        let mut st = s.serialize_struct("AutGroup", 3)?;
        st.serialize_field("enumerable", &self.is_enumerable())?;
        st.serialize_field("order", &names.as_ref().map(Vec::len))?;
        st.serialize_field("elements", &names)?;
        st.end()
    }
}

impl AutGroup {
    pub fn contains(&self, alpha: &Matrix, beta: &[usize]) -> bool {
        crate::endo::aut_membership(&self.h, alpha, beta)
    }

    pub fn compose(&self, a: &HopfAutomorphism, b: &HopfAutomorphism) -> HopfAutomorphism {
        a.compose(b)
    }

    pub fn invert(&self, a: &HopfAutomorphism) -> HopfAutomorphism {
        a.inverse()
    }

    pub fn is_enumerable(&self) -> bool {
        self.elements.is_some()
    }

    pub fn elements(&self) -> Option<&[HopfAutomorphism]> {
        self.elements.as_deref()
    }
}

/// A finite piece `U(Der_Hopf H) ⋊ K[Γ]` of the classifier, for a finite group `Γ` of automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Materialized {
    pub hopf: CgkmmHopf,
    /// `Γ`, indexed by group label of `hopf`.
    pub automorphisms: Vec<HopfAutomorphism>,
}

#[derive(Clone, Debug)]
pub struct Classifier {
    h: CgkmmHopf,
    der_basis: Vec<HopfDerivation>,
    der_lie: LieAlgebra,
    aut: AutGroup,
    materialized: Option<Materialized>,
}

impl Serialize for Classifier {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct D<'a> {
            name: &'a str,
            derivation: crate::endo::DerivationView<'a>,
        }
        let der: Vec<D> = self
            .der_basis
            .iter()
            .enumerate()
            .map(|(i, psi)| D {
                name: self.der_lie.name(i),
                derivation: psi.serializable(&self.h),
            })
            .collect();
        let mut st = s.serialize_struct("Classifier", 4)?;
        st.serialize_field("derivations", &der)?;
        st.serialize_field("der_lie", &self.der_lie)?;
        st.serialize_field("automorphisms", &self.aut)?;
        st.serialize_field("materialized", &self.materialized.as_ref().map(|m| &m.hopf))?;
        st.end()
    }
}

/// `Aut_Hopf(H)`, enumerated when `L = 0` and `Aut(G)` is within the enumeration bound.
pub fn hopf_automorphisms(h: &CgkmmHopf) -> AutGroup {
    let elements = if h.lie_dim() == 0 {
        enumerate_automorphisms(h.group()).ok().map(|auts| {
            auts.into_iter()
                .map(|b| HopfAutomorphism::new(h, Matrix::zeros(0, 0), b.map().to_vec()).expect("group automorphism"))
                .collect::<Vec<_>>()
        })
    } else {
        None
    };
    AutGroup { h: h.clone(), elements }
}

/// Derivations solved and certified at degree `d`; automorphisms enumerated when `L = 0`.
pub fn build_classifier(h: &CgkmmHopf, d: u32) -> Result<Classifier> {
    let der_basis = hopf_derivations(h, d)?;
    let der_lie = derivation_lie_algebra(h, &der_basis)?;
    let mut cls = Classifier {
        h: h.clone(),
        der_basis,
        der_lie,
        aut: hopf_automorphisms(h),
        materialized: None,
    };
    if let Some(els) = cls.aut.elements.clone() {
        cls.materialized = Some(cls.materialize(&els)?);
    }
    Ok(cls)
}

impl Classifier {
    pub fn hopf(&self) -> &CgkmmHopf {
        &self.h
    }

    pub fn der_basis(&self) -> &[HopfDerivation] {
        &self.der_basis
    }

    /// `Der_Hopf(H)` on the basis `ψ1, ψ2, …`.
    pub fn der_lie(&self) -> &LieAlgebra {
        &self.der_lie
    }

    pub fn aut_group(&self) -> &AutGroup {
        &self.aut
    }

    /// `[H]` itself, present when `Aut_Hopf(H)` was enumerated.
    pub fn materialized(&self) -> Option<&Materialized> {
        self.materialized.as_ref()
    }

    /// Coordinates of `ψ` in the derivation basis.
    pub fn der_coordinates(&self, psi: &HopfDerivation) -> Option<Vector> {
        der_coordinates(&self.h, &self.der_basis, psi)
    }

    /// `ρ̄(φ, ψ) = φ ψ φ⁻¹`.
    pub fn conj(&self, phi: &HopfAutomorphism, psi: &HopfDerivation) -> HopfDerivation {
        conjugate_derivation(phi, psi)
    }

    /// `U(Der_Hopf H) ⋊ K[Γ]` for the group `Γ` generated by `gens`.
    pub fn materialize(&self, gens: &[HopfAutomorphism]) -> Result<Materialized> {
        let one = HopfAutomorphism::identity(&self.h);
        let mut elements = vec![one.clone()];
        let mut index: HashMap<HopfAutomorphism, usize> = HashMap::from([(one, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for s in gens {
                let y = elements[x].compose(s);
                if !index.contains_key(&y) {
                    if elements.len() >= MATERIALIZE_BOUND {
                        return Err(Error::ClosureTooLarge { bound: MATERIALIZE_BOUND });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect())
            .collect();
        let names = elements.iter().map(|a| a.render(&self.h)).collect();
        let group = GroupTable::from_table(table, Some(names))?;
        let k = self.der_basis.len();
        let matrices = elements
            .iter()
            .map(|phi| {
                let cols = self
                    .der_basis
                    .iter()
                    .map(|psi| {
                        let moved = conjugate_derivation(phi, psi);
                        self.der_coordinates(&moved).ok_or_else(|| Error::Certification {
                            what: "Der_Hopf stable under conjugation".into(),
                            witness: moved.render(&self.h),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(k, &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        let tau = LinearRep::new(&group, k, matrices)?;
        let hopf = CgkmmHopf::new(group, self.der_lie.clone(), tau)?;
        Ok(Materialized {
            hopf,
            automorphisms: elements,
        })
    }
}

/// `(ψ_1 ⋯ ψ_k ⊗ φ) ⋆ h = ψ_1(⋯ψ_k(φ(h)))`; each `ψ` must lie in `Der_Hopf(H)` and `φ` in `Aut_Hopf(H)`.
pub fn star_action(cls: &Classifier, word: &[HopfDerivation], phi: &HopfAutomorphism, h: &HopfElement) -> Result<HopfElement> {
    let hh = &cls.h;
    if !cls.aut.contains(phi.alpha(), phi.beta().map()) {
        return Err(Error::InvalidAction {
            invariant: "automorphism".into(),
            witness: phi.render(hh),
        });
    }
    if let Some(psi) = word.iter().find(|p| cls.der_coordinates(p).is_none()) {
        return Err(Error::InvalidAction {
            invariant: "derivation".into(),
            witness: psi.render(hh),
        });
    }
    Ok(star_unchecked(hh, word, phi, h))
}

fn star_unchecked(h: &CgkmmHopf, word: &[HopfDerivation], phi: &HopfAutomorphism, x: &HopfElement) -> HopfElement {
    let mut y = phi.apply(h, x);
    for psi in word.iter().rev() {
        y = psi.apply(h, &y);
    }
    y
}

/// The `⋆` action of a materialized piece of `[H]` on `H`.
pub struct StarAction<'a> {
    cls: &'a Classifier,
    piece: &'a Materialized,
}

impl<'a> StarAction<'a> {
    pub fn new(cls: &'a Classifier, piece: &'a Materialized) -> Self {
        StarAction { cls, piece }
    }
}

impl ModuleAction for StarAction<'_> {
    fn actor(&self) -> &CgkmmHopf {
        &self.piece.hopf
    }

    fn target(&self) -> &CgkmmHopf {
        &self.cls.h
    }

    fn act_basis(&self, b: &Basis, a: &Basis) -> HopfElement {
        let word: Vec<HopfDerivation> = b.mono.word().into_iter().map(|i| self.cls.der_basis[i].clone()).collect();
        star_unchecked(&self.cls.h, &word, &self.piece.automorphisms[b.group], &HopfElement::basis(a.clone()))
    }
}

/// `χ : B → [H]` for a split extension with kernel `H`, landing in the piece of `[H]` generated by `χ_G(G_B)`.
#[derive(Clone, Debug, Serialize)]
pub struct UniversalMorphism {
    #[serde(skip)]
    pub classifier: Classifier,
    #[serde(skip)]
    pub piece: Materialized,
    pub chi: HopfMorphism,
    pub certification: AxiomReport,
}

/// Candidate values of a morphism `B → [H]` on generators: an automorphism per group generator of `B`
/// and a derivation per Lie basis vector of `B`.
#[derive(Clone, Debug)]
pub struct Competitor {
    pub group: Vec<HopfAutomorphism>,
    pub lie: Vec<HopfDerivation>,
}

pub fn universal_morphism(ext: &SplitExtension, d: u32) -> Result<UniversalMorphism> {
    universal_morphism_with(ext, d, &[])
}

/// Builds and certifies `χ`: it is a morphism, `k(χ(b) ⋆ h) = s(b₁) k(h) S(s(b₂))` on generators,
/// and every competitor that also satisfies this agrees with `χ` on generators.
/// Up to three perturbations of `χ` are always tried in addition to `competitors`.
pub fn universal_morphism_with(ext: &SplitExtension, d: u32, competitors: &[Competitor]) -> Result<UniversalMorphism> {
    let h = ext.kernel();
    let b = ext.quotient();
    let rho = ext.action();
    let cls = build_classifier(h, d)?;
    let gens: Vec<HopfAutomorphism> = b.group().generators().iter().map(|&g| rho.grp_part(g).clone()).collect();
    let piece = match cls.materialized() {
        Some(m) => m.clone(),
        None => cls.materialize(&gens)?,
    };
    let index: HashMap<&HopfAutomorphism, usize> = piece.automorphisms.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let beta = b
        .group()
        .elements()
        .map(|g| {
            index.get(rho.grp_part(g)).copied().ok_or_else(|| Error::Certification {
                what: "χ_G lands in Aut_Hopf(H)".into(),
                witness: b.group().name(g).into(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let cols = (0..b.lie_dim())
        .map(|i| {
            cls.der_coordinates(rho.lie_part(i)).ok_or_else(|| Error::Certification {
                what: "χ_L lands in Der_Hopf(H)".into(),
                witness: b.lie().name(i).into(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let alpha = Matrix::from_columns(cls.der_basis.len(), &cols);

    let validity = match morphism_make(b, &piece.hopf, alpha.clone(), beta.clone()) {
        Ok(_) => AxiomCheck {
            axiom: "χ is a morphism".into(),
            cases: b.group().order() + b.lie_dim(),
            passed: true,
            witness: None,
        },
        Err(err) => AxiomCheck {
            axiom: "χ is a morphism".into(),
            cases: b.group().order() + b.lie_dim(),
            passed: false,
            witness: Some(err.to_string()),
        },
    };
    let chi = HopfMorphism::unchecked(b, &piece.hopf, alpha, beta);

    let pairs = generator_pairs(b, h);
    let star = StarAction::new(&cls, &piece);
    let diagram = crate::hopf::verify::run_check("diagram commutes", &pairs, |(x, y)| {
        let conj = conjugate_in_total(ext, x, y);
        let via = ext.k().apply(&star.act(&chi.apply(x), y));
        (conj != via).then(|| format!("{} ⋆ {}", b.render(x), h.render(y)))
    });

    let own = Competitor {
        group: gens.clone(),
        lie: (0..b.lie_dim()).map(|i| rho.lie_part(i).clone()).collect(),
    };
    let mut all: Vec<Competitor> = perturbations(&cls, &own);
    all.extend(competitors.iter().cloned());
    let uniqueness = crate::hopf::verify::run_check("uniqueness", &all, |xi| {
        let commutes = pairs.iter().all(|(x, y)| conjugate_in_total(ext, x, y) == ext.k().apply(&competitor_act(&cls, b, xi, x, y)));
        let agrees = xi.group == own.group && xi.lie == own.lie;
        (commutes && !agrees).then(|| describe(&cls, b, xi))
    });

    let checks = vec![validity, diagram, uniqueness];
    let certification = AxiomReport {
        degree: d,
        passed: checks.iter().all(|c| c.passed),
        checks,
    };
    if let Some(f) = certification.first_failure() {
        return Err(Error::Certification {
            what: format!("universal morphism ({})", f.axiom),
            witness: f.witness.clone().unwrap_or_default(),
        });
    }
    Ok(UniversalMorphism {
        classifier: cls,
        piece,
        chi,
        certification,
    })
}

/// Grouplike generators (with `e`) and Lie basis vectors of `B`, against those of `H`.
fn generator_pairs(b: &CgkmmHopf, h: &CgkmmHopf) -> Vec<(HopfElement, HopfElement)> {
    let gens = |a: &CgkmmHopf| -> Vec<HopfElement> {
        let mut v = vec![a.one()];
        v.extend(a.group().generators().iter().map(|&g| a.grouplike(g)));
        v.extend((0..a.lie_dim()).map(|i| a.letter(i)));
        v
    };
    let hs = gens(h);
    gens(b)
        .into_iter()
        .flat_map(|x| hs.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

/// `s(x₁) k(y) S(s(x₂))` in the total algebra.
fn conjugate_in_total(ext: &SplitExtension, x: &HopfElement, y: &HopfElement) -> HopfElement {
    let e = ext.total();
    let ky = ext.k().apply(y);
    let mut out = HopfElement::zero();
    for ((x1, x2), c) in ext.quotient().coproduct(x).iter() {
        let left = e.multiply(&ext.s().apply_basis(x1), &ky);
        out.add_scaled(c, &e.multiply(&left, &e.antipode(&ext.s().apply_basis(x2))));
    }
    out
}

/// `ξ(x) ⋆ y` for `x` a generator of `B` as produced by `generator_pairs`.
fn competitor_act(cls: &Classifier, b: &CgkmmHopf, xi: &Competitor, x: &HopfElement, y: &HopfElement) -> HopfElement {
    let h = &cls.h;
    let (basis, _) = x.iter().next().expect("generator is a single basis element");
    if basis.mono.degree() == 1 {
        let i = basis.mono.word()[0];
        return xi.lie[i].apply(h, y);
    }
    match b.group().generators().iter().position(|&g| g == basis.group) {
        Some(p) => xi.group[p].apply(h, y),
        None => y.clone(),
    }
}

fn describe(cls: &Classifier, b: &CgkmmHopf, xi: &Competitor) -> String {
    let mut parts: Vec<String> = b
        .group()
        .generators()
        .iter()
        .zip(&xi.group)
        .map(|(&g, a)| format!("{} ↦ {}", b.group().name(g), a.render(&cls.h)))
        .collect();
    parts.extend((0..b.lie_dim()).map(|i| format!("{} ↦ {}", b.lie().name(i), xi.lie[i].render(&cls.h))));
    parts.join("; ")
}

/// Up to three competitors differing from `own` on exactly one generator.
fn perturbations(cls: &Classifier, own: &Competitor) -> Vec<Competitor> {
    let h = &cls.h;
    let mut out = Vec::new();
    if !own.lie.is_empty() && !cls.der_basis.is_empty() {
        let mut xi = own.clone();
        xi.lie[0] = HopfDerivation::linear_combination(h, &[q(1), q(1)], &[own.lie[0].clone(), cls.der_basis[0].clone()]);
        out.push(xi);
        if !own.lie[0].is_zero() {
            let mut xi = own.clone();
            xi.lie[0] = HopfDerivation::linear_combination(h, &[q(2)], &[own.lie[0].clone()]);
            out.push(xi);
        }
    }
    if !own.group.is_empty() {
        let replacement = if !own.group[0].is_identity() {
            Some(HopfAutomorphism::identity(h))
        } else {
            nontrivial_automorphism(h)
        };
        if let Some(phi) = replacement {
            let mut xi = own.clone();
            xi.group[0] = phi;
            out.push(xi);
        }
    }
    out.truncate(3);
    out
}

/// `−1` on `L` when that is an automorphism, otherwise a nontrivial inner automorphism.
fn nontrivial_automorphism(h: &CgkmmHopf) -> Option<HopfAutomorphism> {
    let n = h.lie_dim();
    if n > 0 {
        if let Ok(phi) = HopfAutomorphism::new(h, Matrix::scalar(n, q(-1)), h.group().elements().collect()) {
            return Some(phi);
        }
    }
    h.group().elements().find_map(|g| {
        let beta: Vec<usize> = h.group().elements().map(|x| h.group().conjugate(g, x)).collect();
        let phi = HopfAutomorphism::new(h, h.tau().matrix(g).clone(), beta).ok()?;
        (!phi.is_identity()).then_some(phi)
    })
}
