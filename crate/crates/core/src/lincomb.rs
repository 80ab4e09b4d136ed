//! Finite ℚ-linear combinations over an ordered basis.

use crate::rational::{fmt_q, Q};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A finitely supported map `K → ℚ` with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Q>,
}

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(key: K, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, crate::rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Q {
        self.terms.get(key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Q, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-crate::rational::one(), other);
        out
    }

    pub fn scaled(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn negated(&self) -> Self {
        self.scaled(&-crate::rational::one())
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Renders with a caller-supplied basis formatter; basis "1" is rendered as the bare coefficient.
    pub fn render(&self, mut name: impl FnMut(&K) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let n = name(k);
            if n == "1" {
                let mut s = fmt_q(c);
                if i > 0 {
                    s = if let Some(rest) = s.strip_prefix('-') {
                        format!(" - {rest}")
                    } else {
                        format!(" + {s}")
                    };
                }
                out.push_str(&s);
            } else {
                out.push_str(&crate::rational::coeff_prefix(c, i == 0));
                out.push_str(&n);
            }
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for LinComb<K> {
    fn from_iter<T: IntoIterator<Item = (K, Q)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn zeros_are_dropped() {
        let mut a: LinComb<u8> = LinComb::term(1, q(2));
        a.add_term(1, q(-2));
        assert!(a.is_zero());
        a.add_term(3, q(0));
        assert!(a.is_zero());
    }

    #[test]
    fn render_terms() {
        let a: LinComb<u8> = [(0, q(1)), (1, q(-2)), (2, q(1))].into_iter().collect();
        let s = a.render(|k| match k {
            0 => "1".into(),
            1 => "x".into(),
            _ => "y".into(),
        });
        assert_eq!(s, "1 - 2 x + y");
    }
}
