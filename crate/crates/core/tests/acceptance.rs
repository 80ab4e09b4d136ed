//! Acceptance criteria 1-10, one line each.

use cocohopf::action::{smash_product, verify_split_extension, HopfAction, SplitExtension};
use cocohopf::center::{center, centralizer, hz_compare, is_normal};
use cocohopf::classifier::{build_classifier, universal_morphism, universal_morphism_with, Competitor};
use cocohopf::corpus;
use cocohopf::endo::{certify_derivation, derivation_bracket, hopf_derivations, HopfAutomorphism, HopfDerivation};
use cocohopf::group::find_isomorphism;
use cocohopf::hopf::{functor_q, hopf_kernel, verify_hopf_axioms, Basis, CgkmmHopf, HopfElement, HopfMorphism, HopfSubalgebra};
use cocohopf::lie::LieAlgebra;
use cocohopf::linalg::{solve_homogeneous, unit_vec, Matrix, Subspace, Vector};
use cocohopf::rational::{q, qf};
use cocohopf::tasks::{parse_task, run_task, Report};
use cocohopf::workspace::{parse_workspace, Workspace};
use cocohopf::Q;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use std::collections::{BTreeMap, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

const D: u32 = 3;

type Outcome = std::result::Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, limit: u64, what: &str) -> std::result::Result<(), String> {
    let e = t.elapsed();
    ensure(e < Duration::from_secs(limit), || format!("{what} took {e:.2?}, limit {limit} s"))
}

fn index(basis: &[Basis]) -> HashMap<Basis, usize> {
    basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect()
}

/// Null space of linear conditions keyed by arbitrary labels, one column per basis element.
fn solve<K: Ord>(n: usize, entries: impl IntoIterator<Item = (K, usize, Q)>) -> Subspace {
    let mut rows: BTreeMap<K, Vector> = BTreeMap::new();
    for (key, col, c) in entries {
        rows.entry(key).or_insert_with(|| vec![Q::zero(); n])[col] += c;
    }
    Subspace::from_spanning(n, solve_homogeneous(n, rows.into_values().collect()))
}

fn same_span(a: &Subspace, b: &Subspace) -> bool {
    a.contains_subspace(b) && b.contains_subspace(a)
}

fn c1_hopf_axioms() -> Outcome {
    let t = Instant::now();
    let algebras = corpus::algebras();
    for (name, h) in &algebras {
        let r = verify_hopf_axioms(h, D);
        ensure(r.passed, || format!("{name}: {:?}", r.first_failure()))?;
        for axiom in ["coassociativity", "counit", "antipode", "cocommutativity"] {
            ensure(r.checks.iter().any(|c| c.axiom.contains(axiom)), || format!("{name}: no {axiom} check"))?;
        }
    }
    within(t, 10, "axiom suite")?;
    Ok(format!("{} algebras at degree {D}", algebras.len()))
}

fn c2_smash_closure() -> Outcome {
    let t = Instant::now();
    let actions = [
        ("inversion", corpus::inversion_action()),
        ("sign", corpus::sign_action()),
        ("swap", corpus::swap_action()),
        ("scaling", corpus::scaling_action()),
        ("trivial", HopfAction::trivial(&corpus::k_c2(), &corpus::u_line())),
    ];
    for (name, rho) in &actions {
        let (total, ext) = smash_product(rho).map_err(|e| format!("{name}: {e}"))?;
        let r = verify_hopf_axioms(&total, D);
        ensure(r.passed, || format!("{name}: {:?}", r.first_failure()))?;
        let s = verify_split_extension(&ext, D);
        ensure(s.passed, || format!("{name}: {:?}", s.first_failure()))?;
    }

    let e = corpus::k_c3_by_c2();
    let s3 = corpus::k_s3();
    let (ge, gs) = (e.group(), s3.group());
    let iso = find_isomorphism(ge, gs).ok_or("K[C3]⋊K[C2] ≇ K[S3]")?;
    let mut image = iso.clone();
    image.sort_unstable();
    image.dedup();
    ensure(image.len() == gs.order(), || "isomorphism is not bijective".into())?;
    for a in ge.elements() {
        for b in ge.elements() {
            ensure(iso[ge.mul(a, b)] == gs.mul(iso[a], iso[b]), || "table isomorphism fails".into())?;
        }
    }

    let (total, _) = smash_product(&corpus::scaling_action()).map_err(|e| e.to_string())?;
    let names = vec!["m".to_string(), "l".to_string()];
    let nonabelian = LieAlgebra::from_brackets(names, &[(0, 1, vec![q(1), q(0)])]).map_err(|e| e.to_string())?;
    ensure(total.group().order() == 1, || "U(ℚm)⋊U(ℚl) has grouplikes".into())?;
    ensure(total.lie() == &nonabelian, || "U(ℚm)⋊U(ℚl) is not U([m, l] = m)".into())?;
    within(t, 5, "smash closure")?;
    Ok(format!("{} smash products; C3⋊C2 ≅ S3; [m, l] = m", actions.len()))
}

/// Values on the generators of `B`: group generators first, then Lie basis vectors.
#[derive(Clone, PartialEq)]
enum Value {
    Group(Vec<(Q, HopfAutomorphism)>),
    Lie(HopfDerivation),
}

fn act(h: &CgkmmHopf, v: &Value, x: &HopfElement) -> HopfElement {
    match v {
        Value::Group(terms) => {
            let mut out = HopfElement::zero();
            for (c, phi) in terms {
                out.add_scaled(c, &phi.apply(h, x));
            }
            out
        }
        Value::Lie(psi) => psi.apply(h, x),
    }
}

/// Generators of `B` with the conjugation they induce on `k(H)` inside the total algebra.
fn conjugations(ext: &SplitExtension, y: &HopfElement) -> Vec<HopfElement> {
    let (b, e) = (ext.quotient(), ext.total());
    let ky = ext.k().apply(y);
    let mut out = Vec::new();
    for &g in b.group().generators() {
        let sg = ext.s().apply(&b.grouplike(g));
        let sgi = ext.s().apply(&b.grouplike(b.group().inv(g)));
        out.push(e.multiply(&e.multiply(&sg, &ky), &sgi));
    }
    for i in 0..b.lie_dim() {
        let sy = ext.s().apply(&b.letter(i));
        out.push(e.multiply(&sy, &ky).minus(&e.multiply(&ky, &sy)));
    }
    out
}

fn commutes(ext: &SplitExtension, values: &[Value]) -> bool {
    let h = ext.kernel();
    let mut hs = vec![h.one()];
    hs.extend(h.group().generators().iter().map(|&g| h.grouplike(g)));
    hs.extend((0..h.lie_dim()).map(|i| h.letter(i)));
    hs.iter().all(|y| {
        conjugations(ext, y)
            .iter()
            .zip(values)
            .all(|(c, v)| *c == ext.k().apply(&act(h, v, y)))
    })
}

fn alternatives(h: &CgkmmHopf, phi: &HopfAutomorphism) -> Vec<HopfAutomorphism> {
    let n = h.lie_dim();
    let all: Vec<usize> = h.group().elements().collect();
    let mut out = vec![HopfAutomorphism::identity(h)];
    for c in [q(-1), q(2)] {
        out.extend(HopfAutomorphism::new(h, Matrix::scalar(n, c), all.clone()).ok());
    }
    for g in h.group().elements() {
        let beta = all.iter().map(|&x| h.group().conjugate(g, x)).collect();
        out.extend(HopfAutomorphism::new(h, h.tau().matrix(g).clone(), beta).ok());
    }
    let composed: Vec<_> = out.iter().map(|a| phi.compose(a)).collect();
    out.extend(composed);
    out.retain(|a| a != phi);
    out
}

/// Three distinct perturbations of `own`, each changing one generator value.
fn perturb(h: &CgkmmHopf, der: &[HopfDerivation], own: &[Value]) -> Vec<Vec<Value>> {
    let mut out: Vec<Vec<Value>> = Vec::new();
    let mut push = |p: usize, v: Value| {
        let mut xi = own.to_vec();
        xi[p] = v;
        if xi != own && !out.contains(&xi) {
            out.push(xi);
        }
    };
    for (p, v) in own.iter().enumerate() {
        match v {
            Value::Group(terms) => {
                for alt in alternatives(h, &terms[0].1) {
                    push(p, Value::Group(vec![(q(1), alt)]));
                }
            }
            Value::Lie(psi) => {
                for c in [q(1), q(-2), q(2)] {
                    for basis in der {
                        push(p, Value::Lie(HopfDerivation::linear_combination(h, &[q(1), c.clone()], &[psi.clone(), basis.clone()])));
                    }
                }
                push(p, Value::Lie(HopfDerivation::linear_combination(h, &[q(2)], std::slice::from_ref(psi))));
                push(p, Value::Lie(HopfDerivation::zero(h)));
            }
        }
    }
    for (p, v) in own.iter().enumerate() {
        if let Value::Group(terms) = v {
            push(p, Value::Group(vec![(q(2), terms[0].1.clone())]));
            push(p, Value::Group(vec![(q(1), terms[0].1.clone()), (q(1), HopfAutomorphism::identity(h))]));
        }
    }
    out.truncate(3);
    out
}

fn as_competitor(xi: &[Value]) -> Option<Competitor> {
    let mut c = Competitor { group: vec![], lie: vec![] };
    for v in xi {
        match v {
            Value::Group(terms) if terms.len() == 1 && terms[0].0.is_one() => c.group.push(terms[0].1.clone()),
            Value::Group(_) => return None,
            Value::Lie(psi) => c.lie.push(psi.clone()),
        }
    }
    Some(c)
}

fn c3_classifier() -> Outcome {
    let exts = corpus::split_extensions(D).map_err(|e| e.to_string())?;
    let mut rejected = 0;
    for (name, ext) in &exts {
        let t = Instant::now();
        let u = universal_morphism(ext, D).map_err(|e| format!("{name}: {e}"))?;
        for check in ["χ is a morphism", "diagram commutes"] {
            ensure(u.certification.checks.iter().any(|c| c.axiom == check && c.passed), || format!("{name}: {check}"))?;
        }
        let (b, h, rho) = (ext.quotient(), ext.kernel(), ext.action());
        let mut own: Vec<Value> = b
            .group()
            .generators()
            .iter()
            .map(|&g| Value::Group(vec![(q(1), rho.grp_part(g).clone())]))
            .collect();
        own.extend((0..b.lie_dim()).map(|i| Value::Lie(rho.lie_part(i).clone())));
        ensure(commutes(ext, &own), || format!("{name}: χ fails the diagram"))?;

        let perturbed = perturb(h, u.classifier.der_basis(), &own);
        ensure(perturbed.len() == 3, || format!("{name}: only {} perturbations", perturbed.len()))?;
        for xi in &perturbed {
            ensure(!commutes(ext, xi), || format!("{name}: a perturbation commutes"))?;
            rejected += 1;
        }
        let competitors: Vec<Competitor> = perturbed.iter().filter_map(|xi| as_competitor(xi)).collect();
        universal_morphism_with(ext, D, &competitors).map_err(|e| format!("{name}: {e}"))?;
        within(t, 5, name)?;
    }
    Ok(format!("{} extensions, {rejected} perturbations rejected", exts.len()))
}

/// `Der(L)` by solving `D[eᵢ, eⱼ] = [Deᵢ, eⱼ] + [eᵢ, Deⱼ]` for the `n²` entries of `D`.
fn lie_derivation_dim(l: &LieAlgebra) -> usize {
    let n = l.dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = l.bracket_basis(i, j);
            for r in 0..n {
                // (D c)_r = Σ_k D[r][k] c_k
                for (k, ck) in c.iter().enumerate() {
                    entries.push(((i, j, r), r * n + k, ck.clone()));
                }
                // −[D eᵢ, eⱼ]_r = −Σ_k D[k][i] [e_k, e_j]_r
                for k in 0..n {
                    entries.push(((i, j, r), k * n + i, -l.bracket_basis(k, j)[r].clone()));
                    entries.push(((i, j, r), k * n + j, -l.bracket_basis(i, k)[r].clone()));
                }
            }
        }
    }
    solve(n * n, entries).dim()
}

fn random_automorphism(rng: &mut rand_chacha::ChaCha8Rng, h: &CgkmmHopf) -> HopfAutomorphism {
    let mut r = |lo: i64, hi: i64| qf(rng.gen_range(lo..=hi), rng.gen_range(1..=3));
    let all: Vec<usize> = h.group().elements().collect();
    loop {
        let alpha = if h.lie_dim() == 3 {
            let (a, b, c, d, u, v) = (r(-3, 3), r(-3, 3), r(-3, 3), r(-3, 3), r(-3, 3), r(-3, 3));
            let det = &a * &d - &b * &c;
            Matrix::from_rows(vec![vec![a, b, q(0)], vec![c, d, q(0)], vec![u, v, det]])
        } else {
            Matrix::scalar(h.lie_dim(), r(-3, 3))
        };
        if let Ok(phi) = HopfAutomorphism::new(h, alpha, all.clone()) {
            return phi;
        }
    }
}

fn c4_derivations() -> Outcome {
    let expected = [("K[S3]", corpus::k_s3(), 0), ("U(h3)", corpus::u_h3(), 6), ("sign", corpus::sign(), 2)];
    let mut bases = Vec::new();
    for (name, h, dim) in expected {
        let basis = hopf_derivations(&h, D).map_err(|e| format!("{name}: {e}"))?;
        ensure(basis.len() == dim, || format!("{name}: dim {} ≠ {dim}", basis.len()))?;
        for psi in &basis {
            let r = certify_derivation(&h, psi, D);
            ensure(r.passed, || format!("{name}: {} fails {:?}", psi.render(&h), r.first_failure()))?;
        }
        bases.push((name, h, basis));
    }
    ensure(lie_derivation_dim(&corpus::heisenberg()) == 6, || "Der(h3) oracle disagrees".into())?;
    let sign = &bases[2].1;
    let hand = [
        HopfDerivation::new(sign, Matrix::identity(1), vec![vec![q(0)], vec![q(0)]]),
        HopfDerivation::new(sign, Matrix::zeros(1, 1), vec![vec![q(0)], vec![q(1)]]),
    ];
    let cls = build_classifier(sign, D).map_err(|e| e.to_string())?;
    for psi in hand {
        let psi = psi.map_err(|e| e.to_string())?;
        ensure(cls.der_coordinates(&psi).is_some(), || "hand-derived derivation missing".into())?;
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20);
    let mut sampled = 0;
    for (name, h, basis) in &bases {
        let cls = build_classifier(h, D).map_err(|e| e.to_string())?;
        for a in basis {
            for b in basis {
                let br = derivation_bracket(h, a, b);
                ensure(cls.der_coordinates(&br).is_some(), || format!("{name}: bracket leaves Der"))?;
            }
        }
        if basis.is_empty() {
            continue;
        }
        for _ in 0..10 {
            let phi = random_automorphism(&mut rng, h);
            let psi = &basis[rng.gen_range(0..basis.len())];
            let moved = cls.conj(&phi, psi);
            ensure(cls.der_coordinates(&moved).is_some(), || format!("{name}: ρ̄ leaves Der"))?;
            sampled += 1;
        }
    }
    ensure(sampled == 20, || format!("{sampled} samples"))?;
    Ok("dims 0, 6, 2; certified; brackets closed; 20 ρ̄ samples closed".into())
}

/// `{x ∈ A_{≤d} : Σ x₁ ⊗ (x₂h − hx₂) = 0 for h in H}`.
fn refined_commutant(a: &CgkmmHopf, h: &HopfSubalgebra, basis: &[Basis]) -> Subspace {
    let mut gens: Vec<HopfElement> = h.subgroup().iter().map(|&g| a.grouplike(g)).collect();
    gens.extend(h.lie().basis().iter().map(|v| a.primitive(v)));
    let mut entries = Vec::new();
    for (col, b) in basis.iter().enumerate() {
        for ((x1, x2), c) in a.coproduct_basis(b).iter() {
            let x2 = HopfElement::basis(x2.clone());
            for (gi, y) in gens.iter().enumerate() {
                let w = a.multiply(&x2, y).minus(&a.multiply(y, &x2));
                for (z, cz) in w.iter() {
                    entries.push(((gi, x1.clone(), z.clone()), col, c * cz));
                }
            }
        }
    }
    solve(basis.len(), entries)
}

fn c5_centralizers() -> Outcome {
    let t = Instant::now();
    let s3 = corpus::k_s3();
    let a3 = HopfSubalgebra::generated(&s3, &[s3.group().label("(1 2 3)").unwrap()], vec![]).unwrap();
    let c = centralizer(&s3, &a3, D).map_err(|e| e.to_string())?;
    ensure(c.subalgebra == a3, || "C(K[S3], K[A3]) ≠ K[A3]".into())?;
    let h3 = corpus::u_h3();
    let c = centralizer(&h3, &HopfSubalgebra::whole(&h3), D).map_err(|e| e.to_string())?;
    let z = HopfSubalgebra::generated(&h3, &[], vec![unit_vec(3, 2)]).unwrap();
    ensure(c.subalgebra == z, || "C(U(h3), U(h3)) ≠ U(span{z})".into())?;

    let pairs = corpus::normal_pairs();
    for (name, a, h) in &pairs {
        let c = centralizer(a, h, D).map_err(|e| format!("{name}: {e}"))?;
        let basis = a.degree_basis(D);
        let idx = index(&basis);
        let oracle = refined_commutant(a, h, &basis);
        ensure(same_span(&c.subalgebra.span(D, &basis, &idx), &oracle), || format!("{name}: span ≠ commutant oracle"))?;
    }
    within(t, 10, "centralizers")?;
    Ok(format!("K[A3], U(span{{z}}); {} pairs match the oracle", pairs.len()))
}

/// Graded dimensions of `{x ∈ U(h3)_{≤3} : [x, e] = 0 for e = x, y, z}`.
fn h3_center_dims() -> Vec<usize> {
    let h = corpus::u_h3();
    (0..=D)
        .scan(0, |prev, k| {
            let basis = h.degree_basis(k);
            let mut entries = Vec::new();
            for (col, b) in basis.iter().enumerate() {
                let x = HopfElement::basis(b.clone());
                for i in 0..3 {
                    let e = h.letter(i);
                    for (w, c) in h.multiply(&x, &e).minus(&h.multiply(&e, &x)).iter() {
                        entries.push(((i, w.clone()), col, c.clone()));
                    }
                }
            }
            let dim = solve(basis.len(), entries).dim();
            let step = dim - *prev;
            *prev = dim;
            Some(step)
        })
        .collect()
}

fn c6_center() -> Outcome {
    for (name, a) in corpus::algebras() {
        let r = hz_compare(&a, D).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.equal, || format!("{name}: HZ {:?} ≠ Z {:?}", r.hz, r.center))?;
        if name == "U(h3)" {
            ensure(r.center == [1, 1, 1, 1], || format!("U(h3): {:?}", r.center))?;
        }
    }
    ensure(h3_center_dims() == [1, 1, 1, 1], || "U(h3) commutant oracle".into())?;
    Ok("HZ = Z on 8 algebras; U(h3) graded (1, 1, 1, 1)".into())
}

/// Solutions of `(p ⊗ id)Δx = 1 ⊗ x` (left) or `(id ⊗ p)Δx = x ⊗ 1` (right) in `A_{≤d}`.
fn kernel_oracle(p: &HopfMorphism, basis: &[Basis], left: bool) -> Subspace {
    let (a, b) = (p.source(), p.target());
    let mut entries = Vec::new();
    for (col, x) in basis.iter().enumerate() {
        let one = b.one();
        let (ob, _) = one.iter().next().unwrap();
        for ((x1, x2), c) in a.coproduct_basis(x).iter() {
            let (mapped, kept) = if left { (x1, x2) } else { (x2, x1) };
            for (m, cm) in p.apply_basis(mapped).iter() {
                entries.push(((m.clone(), kept.clone()), col, c * cm));
            }
        }
        entries.push(((ob.clone(), x.clone()), col, -Q::one()));
    }
    solve(basis.len(), entries)
}

fn c7_kernels(ws: &Workspace) -> Outcome {
    let cases = [("halve", vec!["()", "(1 3)(2 4)"], 0), ("forget", vec!["()"], 1)];
    for (name, group, lie_dim) in cases {
        let p = ws.morphism(name).map_err(|e| e.to_string())?;
        let k = hopf_kernel(p, D).map_err(|e| format!("{name}: {e}"))?;
        let a = p.source();
        let names: Vec<&str> = k.subgroup().iter().map(|&g| a.group().name(g)).collect();
        ensure(names == group, || format!("{name}: group part {names:?}"))?;
        ensure(k.lie().dim() == lie_dim, || format!("{name}: Lie part of dim {}", k.lie().dim()))?;
        if lie_dim == 1 {
            ensure(k.lie().contains(&unit_vec(3, 2)), || "Lie part is not span{z}".into())?;
        }
        let basis = a.degree_basis(D);
        let span = k.span(D, &basis, &index(&basis));
        for left in [true, false] {
            ensure(same_span(&kernel_oracle(p, &basis, left), &span), || format!("{name}: membership (left = {left})"))?;
        }
    }
    Ok("K[{e, g²}] and U(span{z}); membership two-sided at degree 3".into())
}

fn image_of_center(k: &HopfMorphism, d: u32) -> std::result::Result<HopfSubalgebra, String> {
    let z = center(k.source(), d).map_err(|e| e.to_string())?.subalgebra;
    let group: Vec<usize> = z.subgroup().iter().map(|&g| k.beta()[g]).collect();
    let lie: Vec<Vector> = z.lie().basis().iter().map(|v| k.alpha().apply(v)).collect();
    HopfSubalgebra::generated(k.target(), &group, lie).map_err(|e| e.to_string())
}

fn c8_normality() -> Outcome {
    let mut count = 0;
    for (name, a, h) in corpus::normal_pairs() {
        let c = centralizer(&a, &h, D).map_err(|e| format!("{name}: {e}"))?;
        let r = is_normal(&a, &c.subalgebra, D).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.normal, || format!("{name}: centralizer not normal: {:?}", r.witness))?;
        let (_, inc) = h.to_hopf().map_err(|e| e.to_string())?;
        let z = image_of_center(&inc, D)?;
        ensure(is_normal(&a, &z, D).map_err(|e| e.to_string())?.normal, || format!("{name}: Z(H) not normal"))?;
        count += 2;
    }
    for (name, ext) in corpus::split_extensions(D).map_err(|e| e.to_string())? {
        let z = image_of_center(ext.k(), D)?;
        ensure(is_normal(ext.total(), &z, D).map_err(|e| e.to_string())?.normal, || format!("{name}: k(Z(H)) not normal"))?;
        count += 1;
    }
    Ok(format!("{count} subalgebras normal"))
}

/// Linear forms on `L` killing `[L, L]` and every `τ(g)x − x`.
fn invariant_characters(h: &CgkmmHopf) -> Subspace {
    let (l, n) = (h.lie(), h.lie_dim());
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (c, v) in l.bracket_basis(i, j).iter().enumerate() {
                entries.push(((0, i, j), c, v.clone()));
            }
        }
        for g in h.group().elements() {
            let moved = h.tau().act(g, &unit_vec(n, i));
            for (c, v) in moved.iter().enumerate() {
                let delta = if c == i { v - Q::one() } else { v.clone() };
                entries.push(((1 + g, i, 0), c, delta));
            }
        }
    }
    solve(n, entries)
}

fn c9_functor_q() -> Outcome {
    ensure(functor_q(&corpus::sign()).quotient.dim() == 0, || "Q(sign) ≠ 0".into())?;
    let (triv, _) = smash_product(&HopfAction::trivial(&corpus::k_c2(), &corpus::u_line())).map_err(|e| e.to_string())?;
    let mut algebras = corpus::algebras();
    algebras.push(("trivial", triv.clone()));
    let q_triv = functor_q(&triv);
    ensure(q_triv.quotient == *triv.lie() && q_triv.ideal.dim() == 0, || "Q(trivial) ≠ L".into())?;
    for (name, h) in &algebras {
        let qq = functor_q(h);
        let quotient_chars = invariant_characters(&CgkmmHopf::enveloping(qq.quotient.clone()));
        let chars = invariant_characters(h);
        ensure(chars.dim() == quotient_chars.dim(), || format!("{name}: characters do not correspond"))?;
        for f in chars.basis() {
            let f_bar: Vector = qq.complement.iter().map(|&c| f[c].clone()).collect();
            for (i, fi) in f.iter().enumerate() {
                let through: Q = qq
                    .projection
                    .apply(&unit_vec(h.lie_dim(), i))
                    .iter()
                    .zip(&f_bar)
                    .map(|(a, b)| a * b)
                    .sum();
                ensure(through == *fi, || format!("{name}: a character does not factor through Q"))?;
            }
            ensure(quotient_chars.contains(&f_bar), || format!("{name}: induced form is not a Lie morphism"))?;
        }
    }
    Ok(format!("Q(sign) = 0, Q(trivial) = L, factorization on {} algebras", algebras.len()))
}

fn tutorial_tasks() -> Vec<&'static str> {
    vec![
        "check-hopf --algebra Uh3",
        "check-action --action neg",
        "smash --action inv",
        "split-sequence --algebra Swap",
        "derivations --algebra Uh3",
        "automorphisms --algebra KS3",
        "classifier --algebra KC3",
        "universal --action inv",
        "kernel --morphism halve",
        "quotient --algebra KS3 --sub A3",
        "centralizer --algebra KS3 --sub A3",
        "center --algebra Uh3",
        "hz-compare --algebra Uh3",
        "functor-q --algebra Sign",
    ]
}

/// The serialized result of calling the library directly for each tutorial task.
fn direct(ws: &Workspace, task: &str) -> String {
    use cocohopf::action::{cgkmm_split_sequence, verify_action_axioms};
    use cocohopf::classifier::hopf_automorphisms;
    use cocohopf::hopf::quotient_by_normal;
    match task {
        "check-hopf" => j(&verify_hopf_axioms(ws.hopf("Uh3").unwrap(), D)),
        "check-action" => j(&verify_action_axioms(ws.action("neg").unwrap(), D)),
        "smash" => j(&smash_product(ws.action("inv").unwrap()).unwrap().1),
        "split-sequence" => j(&cgkmm_split_sequence(ws.hopf("Swap").unwrap(), D).unwrap()),
        "derivations" => {
            let h = ws.hopf("Uh3").unwrap();
            let basis = hopf_derivations(h, D).unwrap();
            let views: Vec<_> = basis.iter().map(|p| p.serializable(h)).collect();
            j(&views)
        }
        "automorphisms" => j(&hopf_automorphisms(ws.hopf("KS3").unwrap())),
        "classifier" => j(&build_classifier(ws.hopf("KC3").unwrap(), D).unwrap()),
        "universal" => j(&universal_morphism(&smash_product(ws.action("inv").unwrap()).unwrap().1, D).unwrap()),
        "kernel" => j(&hopf_kernel(ws.morphism("halve").unwrap(), D).unwrap()),
        "quotient" => j(&quotient_by_normal(ws.hopf("KS3").unwrap(), ws.sub("A3").unwrap(), D).unwrap()),
        "centralizer" => j(&centralizer(ws.hopf("KS3").unwrap(), ws.sub("A3").unwrap(), D).unwrap()),
        "center" => j(&center(ws.hopf("Uh3").unwrap(), D).unwrap()),
        "hz-compare" => j(&hz_compare(ws.hopf("Uh3").unwrap(), D).unwrap()),
        "functor-q" => j(&functor_q(ws.hopf("Sign").unwrap())),
        other => panic!("no direct call for {other}"),
    }
}

fn j<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string(x).unwrap()
}

fn words(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cocohopf")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn c10_cli(root: &Path) -> Outcome {
    let tutorial = root.join("fixtures/tutorial.hopf");
    let text = std::fs::read_to_string(&tutorial).map_err(|e| e.to_string())?;
    let ws = parse_workspace(&text).map_err(|e| e.to_string())?;
    ensure(parse_workspace(&ws.to_text()).map_err(|e| e.to_string())? == ws, || "round trip".into())?;

    let tasks = tutorial_tasks();
    let kinds: std::collections::BTreeSet<&str> = tasks.iter().map(|t| t.split(' ').next().unwrap()).collect();
    ensure(kinds.len() == cocohopf::tasks::TASKS.len(), || "not every task kind is covered".into())?;
    for t in &tasks {
        let spec = parse_task(&words(t)).map_err(|e| e.to_string())?;
        let r = run_task(&ws, &spec, D);
        ensure(r.payload.get() == direct(&ws, &spec.name), || format!("{t}: payload differs from the library"))?;
    }

    let mut args = vec![tutorial.to_str().unwrap().to_string(), "--json".into()];
    for t in &tasks {
        args.push("--task".into());
        args.extend(words(t));
    }
    let (code, stdout) = run_cli(&args.iter().map(String::as_str).collect::<Vec<_>>());
    ensure(code == 0, || format!("tutorial run exited with {code}"))?;
    let reports: Vec<Report> = serde_json::from_str(&stdout).map_err(|e| e.to_string())?;
    ensure(reports.len() == tasks.len(), || "missing reports".into())?;
    for r in &reports {
        ensure(r.payload.get() == direct(&ws, &r.task), || format!("{}: CLI payload differs", r.task))?;
    }

    let fixtures = root.join("tests/fixtures");
    for (file, task, expected) in [
        ("pass.hopf", "check-hopf --algebra KC2", 0),
        ("fail.hopf", "quotient --algebra KS3 --sub T", 1),
        ("error.hopf", "check-hopf --algebra KS3", 2),
    ] {
        let path = fixtures.join(file);
        let mut args = vec![path.to_str().unwrap().to_string(), "--task".into()];
        args.extend(words(task));
        let (code, _) = run_cli(&args.iter().map(String::as_str).collect::<Vec<_>>());
        ensure(code == expected, || format!("{file}: exit {code}, expected {expected}"))?;
    }
    Ok("14 task kinds, payloads byte-identical, exit codes 0/1/2".into())
}

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let ws = parse_workspace(&std::fs::read_to_string(root.join("fixtures/tutorial.hopf")).unwrap()).unwrap();
    let criteria: Vec<Criterion> = vec![
        ("Hopf axiom suite", Box::new(c1_hopf_axioms)),
        ("smash closure", Box::new(c2_smash_closure)),
        ("split extension classifier", Box::new(c3_classifier)),
        ("Hopf derivation solver", Box::new(c4_derivations)),
        ("centralizer theorem", Box::new(c5_centralizers)),
        ("center comparison", Box::new(c6_center)),
        ("kernels", Box::new(|| c7_kernels(&ws))),
        ("normality", Box::new(c8_normality)),
        ("Q-functor", Box::new(c9_functor_q)),
        ("CLI", Box::new(|| c10_cli(root))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2}  {status}  {name}: {detail} ({:.2?})", i + 1, t.elapsed());
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
