//! PBW normal forms in the universal enveloping algebra `U(L)`.
//!
//! A monomial `e_0^{a_0} ⋯ e_{n-1}^{a_{n-1}}` is stored as its exponent vector. Out-of-order
//! letters are rewritten with `e_j e_i = e_i e_j + [e_i, e_j]` for `j > i`.

use crate::lie::LieAlgebra;
use crate::lincomb::LinComb;
use crate::rational::{one, Q};
use num_bigint::BigInt;
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::RwLock;

/// An ordered PBW monomial by exponent vector; the zero vector is `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Ord for Monomial {
    /// Degree first, then earlier letters before later ones.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn letter(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// The letters of the monomial in PBW order, with multiplicity.
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i, a as usize))
            .collect()
    }

    /// `x^2*y`-style text, or `1`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| if a == 1 { names[i].clone() } else { format!("{}^{a}", names[i]) })
            .collect();
        parts.join("*")
    }

    /// All monomials in `n` letters of degree at most `d`, in increasing order.
    pub fn up_to_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == cur.len() {
                out.push(Monomial(cur.clone()));
                return;
            }
            for a in 0..=left {
                cur[i] = a;
                rec(i + 1, left - a, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Pairs `(b, a − b)` with the product of binomial coefficients, for the coproduct.
    pub fn splittings(&self) -> Vec<(Monomial, Monomial, Q)> {
        let mut out = vec![(Vec::new(), Vec::new(), one())];
        for &a in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (a as usize + 1));
            for (l, r, c) in &out {
                for b in 0..=a {
                    let mut l2: Vec<u32> = l.clone();
                    l2.push(b);
                    let mut r2: Vec<u32> = r.clone();
                    r2.push(a - b);
                    next.push((l2, r2, c * Q::from_integer(binomial(a, b))));
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|(l, r, c)| (Monomial(l), Monomial(r), c))
            .collect()
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// An element of `U(L)` in the PBW basis.
pub type UEnvElement = LinComb<Monomial>;

pub(crate) type StraightenCache = RwLock<HashMap<(Monomial, usize), UEnvElement>>;

impl LieAlgebra {
    /// `m · e_i` in normal form; memoised per algebra.
    pub fn mul_monomial_letter(&self, m: &Monomial, i: usize) -> UEnvElement {
        let key = (m.clone(), i);
        if let Some(hit) = self.cache.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let result = self.mul_monomial_letter_uncached(m, i);
        self.cache.write().expect("cache lock").insert(key, result.clone());
        result
    }

    fn mul_monomial_letter_uncached(&self, m: &Monomial, i: usize) -> UEnvElement {
        let e = m.exponents();
        let Some(j) = (i + 1..e.len()).rev().find(|&j| e[j] > 0) else {
            let mut e = e.to_vec();
            e[i] += 1;
            return UEnvElement::basis(Monomial(e));
        };
        // m = m'·e_j, so m·e_i = (m'·e_i)·e_j + m'·[e_i, e_j].
        let mut rest = e.to_vec();
        rest[j] -= 1;
        let rest = Monomial(rest);
        let mut out = self.mul_element_letter(&self.mul_monomial_letter(&rest, i), j);
        for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &self.mul_monomial_letter(&rest, k));
            }
        }
        out
    }

    pub fn mul_element_letter(&self, x: &UEnvElement, i: usize) -> UEnvElement {
        x.map_linear(|m| self.mul_monomial_letter(m, i))
    }

    /// Normal form of the product of the word's letters.
    pub fn straighten(&self, word: &[usize]) -> UEnvElement {
        let mut acc = UEnvElement::basis(Monomial::one(self.dim()));
        for &i in word {
            acc = self.mul_element_letter(&acc, i);
        }
        acc
    }

    pub fn u_mul(&self, a: &UEnvElement, b: &UEnvElement) -> UEnvElement {
        let mut out = UEnvElement::zero();
        for (m2, c2) in b.iter() {
            let word = m2.word();
            let mut part = a.clone();
            for &i in &word {
                part = self.mul_element_letter(&part, i);
            }
            out.add_scaled(c2, &part);
        }
        out
    }

    pub fn u_one(&self) -> UEnvElement {
        UEnvElement::basis(Monomial::one(self.dim()))
    }

    /// The image of a Lie algebra vector in `U(L)`.
    pub fn u_vector(&self, v: &[Q]) -> UEnvElement {
        v.iter()
            .enumerate()
            .map(|(i, c)| (Monomial::letter(self.dim(), i), c.clone()))
            .collect()
    }

    /// `v₁ v₂ ⋯ v_k` in normal form.
    pub fn product_of_vectors(&self, vs: &[Vec<Q>]) -> UEnvElement {
        let mut acc = self.u_one();
        for v in vs {
            let mut next = UEnvElement::zero();
            for (i, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    next.add_scaled(c, &self.mul_element_letter(&acc, i));
                }
            }
            acc = next;
        }
        acc
    }

    /// Antipode of `U(L)`: reverses words and multiplies by `(−1)^degree`.
    pub fn u_antipode_monomial(&self, m: &Monomial) -> UEnvElement {
        let mut word = m.word();
        word.reverse();
        let s = self.straighten(&word);
        if m.degree() % 2 == 1 {
            s.negated()
        } else {
            s
        }
    }

    pub fn render_u(&self, x: &UEnvElement) -> String {
        x.render(|m| m.render(self.names()))
    }
}

/// `straighten`: PBW normal form of a word in basis indices.
pub fn straighten(l: &LieAlgebra, word: &[usize]) -> UEnvElement {
    l.straighten(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn h3() -> LieAlgebra {
        let names = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        LieAlgebra::from_brackets(names, &[(0, 1, vec![q(0), q(0), q(1)])]).unwrap()
    }

    #[test]
    fn heisenberg_rewrites() {
        let h = h3();
        assert_eq!(h.render_u(&h.straighten(&[1, 0])), "z + x*y");
        assert_eq!(h.render_u(&h.straighten(&[2, 1, 0])), "z^2 + x*y*z");
        let ab = LieAlgebra::abelian(vec!["x".into(), "y".into()]);
        assert_eq!(ab.render_u(&ab.straighten(&[1, 0])), "x*y");
    }

    #[test]
    fn monomial_enumeration() {
        let ms = Monomial::up_to_degree(2, 2);
        let names = vec!["x".to_string(), "y".to_string()];
        let r: Vec<String> = ms.iter().map(|m| m.render(&names)).collect();
        assert_eq!(r, ["1", "x", "y", "x^2", "x*y", "y^2"]);
    }

    #[test]
    fn splittings_sum_to_binomials() {
        let m = Monomial::from_exponents(vec![2, 1]);
        let total: Q = m.splittings().into_iter().map(|(_, _, c)| c).sum();
        assert_eq!(total, q(8));
    }
}
