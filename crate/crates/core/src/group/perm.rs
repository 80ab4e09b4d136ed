use crate::error::{Error, Result};
use std::fmt;

/// A permutation of `{0..n}`, stored as its image list.
///
/// Products compose right to left: `(p * q)(x) = p(q(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Parses cycle notation over `{1..degree}`, e.g. `(1 2 3)(4 5)`, `(1,2)` or `()`.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::InvalidPermutation(format!("expected `(` in `{text}`")));
            };
            let Some(end) = body.find(')') else {
                return Err(Error::InvalidPermutation(format!("unclosed cycle in `{text}`")));
            };
            let cycle: Vec<usize> = body[..end]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .ok()
                        .filter(|&p| p >= 1 && p <= degree)
                        .map(|p| p - 1)
                        .ok_or_else(|| {
                            Error::InvalidPermutation(format!("point `{s}` outside 1..{degree}"))
                        })
                })
                .collect::<Result<_>>()?;
            let mut distinct = cycle.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != cycle.len() {
                return Err(Error::InvalidPermutation(format!("repeated point in `{text}`")));
            }
            // Cycles compose right to left, like permutation products.
            let mut cyc: Vec<usize> = (0..degree).collect();
            for (k, &p) in cycle.iter().enumerate() {
                cyc[p] = cycle[(k + 1) % cycle.len()];
            }
            images = (0..degree).map(|x| images[cyc[x]]).collect();
            rest = body[end + 1..].trim_start();
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl fmt::Display for Perm {
    /// Disjoint cycle notation with 1-based points; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.0[x];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
