use cocohopf::corpus;
use cocohopf::endo::{derivation_bracket, hopf_derivations, HopfDerivation};
use cocohopf::group::Perm;
use cocohopf::hopf::{Basis, CgkmmHopf, HopfElement, TensorSquareElement};
use cocohopf::lie::LieAlgebra;
use cocohopf::linalg::Matrix;
use cocohopf::pbw::{straighten, Monomial, UEnvElement};
use cocohopf::rational::{fmt_q, parse_q, q, qf};
use cocohopf::Q;
use num_traits::Zero;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

fn lie_algebras() -> Vec<LieAlgebra> {
    let v = |a: i64, b: i64, c: i64| vec![q(a), q(b), q(c)];
    vec![
        corpus::heisenberg(),
        // sl2: [h, e] = 2e, [h, f] = −2f, [e, f] = h
        LieAlgebra::from_brackets(names(&["e", "h", "f"]), &[(1, 0, v(2, 0, 0)), (1, 2, v(0, 0, -2)), (0, 2, v(0, 1, 0))]).unwrap(),
        // so3
        LieAlgebra::from_brackets(names(&["a", "b", "c"]), &[(0, 1, v(0, 0, 1)), (1, 2, v(1, 0, 0)), (2, 0, v(0, 1, 0))]).unwrap(),
        LieAlgebra::from_brackets(names(&["m", "l"]), &[(0, 1, vec![q(1), q(0)])]).unwrap(),
        LieAlgebra::abelian(names(&["x", "y", "z"])),
    ]
}

/// Rewrites words until sorted, always at the leftmost or always at the rightmost descent.
fn rewrite(l: &LieAlgebra, word: &[usize], leftmost: bool) -> BTreeMap<Vec<usize>, Q> {
    let mut pending: Vec<(Vec<usize>, Q)> = vec![(word.to_vec(), q(1))];
    let mut done: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
    while let Some((w, c)) = pending.pop() {
        let mut descents = (1..w.len()).filter(|&p| w[p - 1] > w[p]);
        let at = if leftmost { descents.next() } else { descents.next_back() };
        let Some(p) = at else {
            *done.entry(w).or_insert_with(Q::zero) += c;
            continue;
        };
        let (j, i) = (w[p - 1], w[p]);
        let mut swapped = w.clone();
        swapped.swap(p - 1, p);
        pending.push((swapped, c.clone()));
        for (k, ck) in l.bracket_basis(i, j).iter().enumerate() {
            if !ck.is_zero() {
                let mut shorter = w[..p - 1].to_vec();
                shorter.push(k);
                shorter.extend_from_slice(&w[p + 1..]);
                pending.push((shorter, &c * ck));
            }
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

fn as_words(x: &UEnvElement) -> BTreeMap<Vec<usize>, Q> {
    x.iter().map(|(m, c)| (m.word(), c.clone())).collect()
}

fn algebra_and_word(max_len: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..5usize).prop_flat_map(move |a| {
        let dim: usize = if a == 3 { 2 } else { 3 };
        (Just(a), prop::collection::vec(0..dim, 0..=max_len))
    })
}

fn element(h: &CgkmmHopf, seed: &[u8]) -> HopfElement {
    let basis = h.degree_basis(2);
    let mut x = HopfElement::zero();
    for (k, s) in seed.iter().enumerate() {
        let b: &Basis = &basis[(*s as usize + 7 * k) % basis.len()];
        x.add_term(b.clone(), qf(i64::from(*s % 5) - 2, 1 + k as i64));
    }
    x
}

fn flip(t: &TensorSquareElement) -> TensorSquareElement {
    t.iter().map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn straightening_is_independent_of_rewrite_order((a, word) in algebra_and_word(4)) {
        let l = &lie_algebras()[a];
        let normal = as_words(&straighten(l, &word));
        prop_assert_eq!(&rewrite(l, &word, true), &normal);
        prop_assert_eq!(&rewrite(l, &word, false), &normal);
    }

    #[test]
    fn straightening_is_associative((a, w1) in algebra_and_word(3), w2 in prop::collection::vec(0..2usize, 0..=2)) {
        let l = &lie_algebras()[a];
        let joined: Vec<usize> = w1.iter().chain(&w2).copied().collect();
        prop_assert_eq!(straighten(l, &joined), l.u_mul(&straighten(l, &w1), &straighten(l, &w2)));
    }

    #[test]
    fn normal_forms_are_sorted((a, word) in algebra_and_word(4)) {
        let l = &lie_algebras()[a];
        for (m, _) in straighten(l, &word).iter() {
            let w = m.word();
            prop_assert!(w.windows(2).all(|p| p[0] <= p[1]));
            prop_assert!(m.degree() as usize <= word.len());
            prop_assert_eq!(&Monomial::from_exponents(m.exponents().to_vec()), m);
        }
    }

    #[test]
    fn coproduct_and_antipode_respect_products(k in 0..8usize, s1 in prop::collection::vec(any::<u8>(), 1..3), s2 in prop::collection::vec(any::<u8>(), 1..3)) {
        let (_, h) = &corpus::algebras()[k];
        let (x, y) = (element(h, &s1), element(h, &s2));
        let xy = h.multiply(&x, &y);
        prop_assert_eq!(h.coproduct(&xy), h.multiply_tensor(&h.coproduct(&x), &h.coproduct(&y)));
        prop_assert_eq!(h.antipode(&xy), h.multiply(&h.antipode(&y), &h.antipode(&x)));
        prop_assert_eq!(h.counit(&xy), h.counit(&x) * h.counit(&y));
        prop_assert_eq!(flip(&h.coproduct(&x)), h.coproduct(&x));
        let unit = h.one().scaled(&h.counit(&x));
        prop_assert_eq!(h.contract(&h.coproduct(&x), |b| h.antipode_basis(b), |b| HopfElement::basis(b.clone())), unit);
    }

    #[test]
    fn rationals_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let x = qf(n, d);
        prop_assert_eq!(parse_q(&fmt_q(&x)), Some(x));
    }

    #[test]
    fn permutations_invert(images in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle()) {
        let p = Perm::from_images(images).unwrap();
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn nullspace_is_exact(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 4), 1..4)) {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect());
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.len(), m.cols());
        for v in &null {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn derivation_brackets_stay_in_der(c1 in prop::collection::vec(-2i64..3, 6), c2 in prop::collection::vec(-2i64..3, 6)) {
        let h = corpus::u_h3();
        let basis = hopf_derivations(&h, 2).unwrap();
        let combo = |c: &[i64]| HopfDerivation::linear_combination(&h, &c.iter().map(|&x| q(x)).collect::<Vec<_>>(), &basis);
        let (a, b) = (combo(&c1), combo(&c2));
        let ab = derivation_bracket(&h, &a, &b);
        let ba = derivation_bracket(&h, &b, &a);
        prop_assert_eq!(HopfDerivation::linear_combination(&h, &[q(-1)], &[ba]), ab.clone());
        let flat: Vec<Vec<Q>> = basis.iter().map(|p| p.to_flat()).collect();
        let m = Matrix::from_columns(ab.to_flat().len(), &flat);
        prop_assert!(m.solve(&ab.to_flat()).is_some());
    }
}
