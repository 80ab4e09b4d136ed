//! Conjugation actions, normality, centralizers and centres.

use crate::action::{induced_action, HopfAction};
use crate::error::{Error, Result};
use crate::hopf::verify::run_check;
use crate::hopf::{index_of, AxiomReport, Basis, CgkmmHopf, HopfElement, HopfMorphism, HopfSubalgebra};
use crate::linalg::{solve_homogeneous, unit_vec, Matrix, Subspace, Vector};
use crate::rational::{zero, Q};
use serde::Serialize;
use std::collections::BTreeMap;

/// `a · h = a₁ h S(a₂)` of `A` on a normal Hopf subalgebra `H`, with `H` as a Hopf algebra in its own right.
pub fn conjugation_action(a: &CgkmmHopf, h: &HopfSubalgebra) -> Result<(HopfAction, HopfMorphism)> {
    if let Some(w) = h.normality_failure() {
        return Err(Error::NotNormal(w));
    }
    let (sub, inclusion) = h.to_hopf()?;
    let rho = induced_action(&inclusion, &HopfMorphism::identity(a))?;
    debug_assert_eq!(rho.target(), &sub);
    Ok((rho, inclusion))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalityReport {
    pub normal: bool,
    /// The violated generator condition, if any.
    pub witness: Option<String>,
    /// Number of `(a, h)` pairs checked directly.
    pub oracle_cases: usize,
}

/// Generator conditions, cross-checked against `a₁ h S(a₂), S(a₁) h a₂ ∈ H` for every basis `a` of degree at most `d`
/// (at least 1) and every generator `h` of `H`.
pub fn is_normal(a: &CgkmmHopf, h: &HopfSubalgebra, d: u32) -> Result<NormalityReport> {
    let d = d.max(1);
    let witness = h.normality_failure();
    let gens = subalgebra_generators(h);
    let basis = a.degree_basis(d + 1);
    let index = index_of(&basis);
    let span = h.span(d + 1, &basis, &index);
    let inside = |x: &HopfElement| a.coordinates(&basis, &index, x).is_some_and(|v| span.contains(&v));
    let pairs: Vec<(Basis, HopfElement)> = a
        .degree_basis(d)
        .into_iter()
        .flat_map(|b| gens.iter().map(move |g| (b.clone(), g.clone())))
        .filter(|(b, g)| b.mono.degree() + a.degree(g) <= d + 1)
        .collect();
    let oracle = run_check("normality oracle", &pairs, |(b, g)| {
        let mut left = HopfElement::zero();
        let mut right = HopfElement::zero();
        for ((b1, b2), c) in a.coproduct_basis(b).iter() {
            let (e1, e2) = (HopfElement::basis(b1.clone()), HopfElement::basis(b2.clone()));
            left.add_scaled(c, &a.multiply_all(&[e1.clone(), g.clone(), a.antipode(&e2)]));
            right.add_scaled(c, &a.multiply_all(&[a.antipode(&e1), g.clone(), e2]));
        }
        (!inside(&left) || !inside(&right)).then(|| format!("{} against {}", a.render_basis(b), a.render(g)))
    });
    if oracle.passed != witness.is_none() {
        return Err(Error::NormalityOracleDisagreement(format!(
            "generator conditions: {}; direct check: {}",
            witness.as_deref().unwrap_or("normal"),
            oracle.witness.as_deref().unwrap_or("normal")
        )));
    }
    Ok(NormalityReport {
        normal: oracle.passed,
        witness: witness.or(oracle.witness),
        oracle_cases: oracle.cases,
    })
}

/// All grouplikes of `G_H` and a basis of `L_H`, as ambient elements.
fn subalgebra_generators(h: &HopfSubalgebra) -> Vec<HopfElement> {
    let a = h.ambient();
    let mut out: Vec<HopfElement> = h.subgroup().iter().map(|&g| a.grouplike(g)).collect();
    out.extend(h.lie().basis().iter().map(|v| a.primitive(v)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerResult {
    pub subalgebra: HopfSubalgebra,
    pub ker_grp: Vec<usize>,
    #[serde(skip)]
    pub ker_lie: Subspace,
    pub certification: AxiomReport,
}

/// Solution space of `x ∈ A_{≤d}` subject to the linear conditions returned per basis column.
fn solve_columns<K: Ord + Clone>(basis: &[Basis], conditions: impl Fn(&Basis) -> Vec<(K, Q)>) -> Subspace {
    let mut rows: BTreeMap<K, Vector> = BTreeMap::new();
    for (j, b) in basis.iter().enumerate() {
        for (key, c) in conditions(b) {
            rows.entry(key).or_insert_with(|| vec![zero(); basis.len()])[j] += c;
        }
    }
    Subspace::from_spanning(basis.len(), solve_homogeneous(basis.len(), rows.into_values().collect()))
}

/// `x₂ h − h x₂` summed against `x₁`: vanishes for all generators `h` exactly on the categorical centralizer.
fn refined_commutator(a: &CgkmmHopf, gens: &[HopfElement], b: &Basis) -> Vec<((usize, Basis, Basis), Q)> {
    let mut out = Vec::new();
    for ((b1, b2), c) in a.coproduct_basis(b).iter() {
        let e2 = HopfElement::basis(b2.clone());
        for (k, g) in gens.iter().enumerate() {
            let comm = a.multiply(&e2, g).minus(&a.multiply(g, &e2));
            for (t, ct) in comm.iter() {
                out.push(((k, b1.clone(), t.clone()), c * ct));
            }
        }
    }
    out
}

/// `C_A(H) = U(ker χ_L) ⋊ K[ker χ_G]`, certified against the commutation conditions up to degree `d`.
pub fn centralizer(a: &CgkmmHopf, h: &HopfSubalgebra, d: u32) -> Result<CentralizerResult> {
    let report = is_normal(a, h, d)?;
    if !report.normal {
        return Err(Error::NotNormal(report.witness.unwrap_or_default()));
    }
    let g = a.group();
    let n = a.lie_dim();
    let ker_grp: Vec<usize> = g
        .elements()
        .filter(|&x| {
            h.subgroup().iter().all(|&y| g.mul(x, y) == g.mul(y, x))
                && h.lie().basis().iter().all(|v| &a.tau().act(x, v) == v)
        })
        .collect();
    // [x, v] = 0 for v ∈ L_H, and x − τ(y)x = 0 for y ∈ G_H.
    let mut eqs: Vec<Vector> = Vec::new();
    for v in h.lie().basis() {
        let ad: Vec<Vector> = (0..n).map(|i| a.lie().bracket(&unit_vec(n, i), v)).collect();
        eqs.extend((0..n).map(|k| ad.iter().map(|col| col[k].clone()).collect()));
    }
    for &y in h.subgroup() {
        let m = Matrix::identity(n).sub(a.tau().matrix(y));
        eqs.extend(m.to_rows());
    }
    let ker_lie = Subspace::from_spanning(n, solve_homogeneous(n, eqs));
    let subalgebra = HopfSubalgebra::new(a, ker_grp.clone(), ker_lie.basis().to_vec())?;

    let gens = subalgebra_generators(h);
    let elements = subalgebra.spanning_elements(d);
    let commute = run_check("commutes with H", &elements, |x| {
        gens.iter()
            .find(|y| a.multiply(x, y) != a.multiply(y, x))
            .map(|y| format!("{} against {}", a.render(x), a.render(y)))
    });
    let basis = a.degree_basis(d);
    let index = index_of(&basis);
    let claimed = subalgebra.span(d, &basis, &index);
    let solved = solve_columns(&basis, |b| refined_commutator(a, &gens, b));
    let complete = run_check("complete", &[()], |_| {
        (solved != claimed).then(|| {
            solved
                .basis()
                .iter()
                .chain(claimed.basis())
                .find(|v| !solved.contains(v) || !claimed.contains(v))
                .map(|v| a.render(&crate::hopf::morphism::element_from(&basis, v)))
                .unwrap_or_default()
        })
    });
    let checks = vec![commute, complete];
    let certification = AxiomReport {
        degree: d,
        passed: checks.iter().all(|c| c.passed),
        checks,
    };
    if let Some(f) = certification.first_failure() {
        return Err(Error::Certification {
            what: format!("centralizer ({})", f.axiom),
            witness: f.witness.clone().unwrap_or_default(),
        });
    }
    Ok(CentralizerResult {
        subalgebra,
        ker_grp,
        ker_lie,
        certification,
    })
}

/// `Z(A) = C_A(A)`.
pub fn center(a: &CgkmmHopf, d: u32) -> Result<CentralizerResult> {
    centralizer(a, &HopfSubalgebra::whole(a), d)
}

/// Graded dimensions of the algebraic centre, of `{x : Δx ∈ A ⊗ Z_alg}`, and of `Z(A)`, all truncated at degree `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HzReport {
    pub degree: u32,
    /// Commutation is tested against every basis element of degree at most `degree`.
    pub z_alg: Vec<usize>,
    pub hz: Vec<usize>,
    pub center: Vec<usize>,
    pub equal: bool,
}

/// `dim(V ∩ A_{≤k}) − dim(V ∩ A_{≤k−1})` for `k = 0..=d`.
fn graded_dims(v: &Subspace, basis: &[Basis], d: u32) -> Vec<usize> {
    let mut cumulative = Vec::new();
    for k in 0..=d {
        // Coefficients on V's basis that vanish in every column of degree above k.
        let rows: Vec<Vector> = basis
            .iter()
            .enumerate()
            .filter(|(_, b)| b.mono.degree() > k)
            .map(|(col, _)| v.basis().iter().map(|bv| bv[col].clone()).collect())
            .collect();
        cumulative.push(solve_homogeneous(v.dim(), rows).len());
    }
    let mut out = Vec::with_capacity(cumulative.len());
    let mut prev = 0;
    for c in cumulative {
        out.push(c - prev);
        prev = c;
    }
    out
}

pub fn hz_compare(a: &CgkmmHopf, d: u32) -> Result<HzReport> {
    let d = d.max(1);
    let basis = a.degree_basis(d);
    let index = index_of(&basis);
    let all: Vec<HopfElement> = basis.iter().map(|b| HopfElement::basis(b.clone())).collect();
    let commutator = |b: &Basis| -> Vec<((usize, Basis), Q)> {
        let e = HopfElement::basis(b.clone());
        let mut out = Vec::new();
        for (k, y) in all.iter().enumerate() {
            for (t, c) in a.multiply(&e, y).minus(&a.multiply(y, &e)).iter() {
                out.push(((k, t.clone()), c.clone()));
            }
        }
        out
    };
    let z_alg = solve_columns(&basis, commutator);
    // Δx ∈ A ⊗ Z_alg iff (id ⊗ M)Δx = 0 for the commutation matrix M cutting out Z_alg.
    let hz = solve_columns(&basis, |b| {
        let mut out = Vec::new();
        for ((l, r), c) in a.coproduct_basis(b).iter() {
            for (key, m) in commutator(r) {
                out.push(((l.clone(), key), c * &m));
            }
        }
        out
    });
    let z = center(a, d)?;
    let claimed = z.subalgebra.span(d, &basis, &index);
    let hz_dims = graded_dims(&hz, &basis, d);
    let center_dims = graded_dims(&claimed, &basis, d);
    Ok(HzReport {
        degree: d,
        z_alg: graded_dims(&z_alg, &basis, d),
        equal: hz == claimed && hz_dims == center_dims,
        hz: hz_dims,
        center: center_dims,
    })
}
