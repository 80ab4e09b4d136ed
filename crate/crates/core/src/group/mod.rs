//! Finite groups as dense Cayley tables.

mod aut;
mod perm;
mod rep;

pub use aut::{enumerate_automorphisms, find_isomorphism, semidirect_group, GroupAut, AUT_BOUND};
pub use perm::Perm;
pub use rep::{cocycle_space, is_cocycle, Cocycle, LinearRep};

use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use serde::Serialize;
use std::collections::{HashMap, VecDeque};

pub const CLOSURE_BOUND: usize = 1_000_000;
const EXHAUSTIVE_ASSOCIATIVITY: usize = 64;
const ASSOCIATIVITY_SAMPLES: usize = 200_000;

/// A finite group with elements labelled `0..order`, `0` the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    product: Vec<usize>,
    inverse: Vec<usize>,
    names: Vec<String>,
    generators: Vec<usize>,
}

impl Serialize for GroupTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GroupTable", 2)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("elements", &self.names)?;
        st.end()
    }
}

/// A subgroup together with its inclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subgroup {
    pub group: GroupTable,
    /// `embedding[i]` is the ambient label of the `i`-th subgroup element; increasing.
    pub embedding: Vec<usize>,
}

impl GroupTable {
    /// Closure of permutation generators, labelled breadth-first from the identity.
    pub fn from_permutations(degree: usize, generators: &[Perm]) -> Result<Self> {
        Self::from_permutations_bounded(degree, generators, CLOSURE_BOUND)
    }

    pub fn from_permutations_bounded(degree: usize, generators: &[Perm], bound: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let mut elements = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in generators {
                let p = elements[i].compose(s);
                if !index.contains_key(&p) {
                    if elements.len() >= bound {
                        return Err(Error::ClosureTooLarge { bound });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let n = elements.len();
        let mut product = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                product[a * n + b] = index[&elements[a].compose(&elements[b])];
            }
        }
        let inverse = (0..n).map(|a| index[&elements[a].inverse()]).collect();
        let names = elements.iter().map(|p| p.to_string()).collect();
        Ok(Self::assemble(n, product, inverse, names))
    }

    /// Builds from an explicit table, validating the group axioms.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroupTable("empty table".into()));
        }
        let mut product = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroupTable(format!("row {a} has length {}", row.len())));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || seen[x] {
                    return Err(Error::InvalidGroupTable(format!("row {a} is not a permutation")));
                }
                seen[x] = true;
            }
            product.extend_from_slice(row);
        }
        for a in 0..n {
            if product[a] != a || product[a * n] != a {
                return Err(Error::InvalidGroupTable("0 is not the identity".into()));
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            let Some(b) = (0..n).find(|&b| product[a * n + b] == 0 && product[b * n + a] == 0) else {
                return Err(Error::InvalidGroupTable(format!("{a} has no inverse")));
            };
            inverse[a] = b;
        }
        let names = match names {
            Some(v) if v.len() == n => v,
            Some(v) => {
                return Err(Error::InvalidGroupTable(format!("{} names for {n} elements", v.len())))
            }
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        let g = Self::assemble(n, product, inverse, names);
        g.check_associativity()?;
        Ok(g)
    }

    fn assemble(order: usize, product: Vec<usize>, inverse: Vec<usize>, names: Vec<String>) -> Self {
        let mut g = GroupTable {
            order,
            product,
            inverse,
            names,
            generators: Vec::new(),
        };
        g.generators = g.greedy_generators();
        g
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let bad = |a, b, c| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c));
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if bad(a, b, c) {
                            return Err(Error::InvalidGroupTable(format!("({a}, {b}, {c}) not associative")));
                        }
                    }
                }
            }
        } else {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6a09e667);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if bad(a, b, c) {
                    return Err(Error::InvalidGroupTable(format!("({a}, {b}, {c}) not associative")));
                }
            }
        }
        Ok(())
    }

    /// Greedy generating set: scan labels upward, keep any element outside the current span.
    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[0] = true;
        for g in 1..self.order {
            if !span[g] {
                gens.push(g);
                for h in self.generated(&gens) {
                    span[h] = true;
                }
            }
        }
        gens
    }

    pub fn trivial() -> Self {
        Self::assemble(1, vec![0], vec![0], vec!["()".into()])
    }

    /// The cyclic group generated by an `n`-cycle.
    pub fn cyclic(n: usize) -> Self {
        if n <= 1 {
            return Self::trivial();
        }
        let cycle = Perm::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("cycle");
        Self::from_permutations(n, &[cycle]).expect("cyclic group")
    }

    /// The symmetric group on `n` points, generated by `(1..n)` and `(1 2)`.
    pub fn symmetric(n: usize) -> Self {
        if n <= 1 {
            return Self::trivial();
        }
        let cycle = Perm::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("cycle");
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let swap = Perm::from_images(swap).expect("transposition");
        Self::from_permutations(n, &[cycle, swap]).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Sorted labels of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&g| seen[g]).collect()
    }

    /// Extends values on `gens` along right multiplication; `None` off the generated subgroup.
    ///
    /// Consistency is not checked; callers validate the result.
    pub fn extend_from_generators<T: Clone>(
        &self,
        gens: &[usize],
        images: &[T],
        one: T,
        mul: impl Fn(&T, &T) -> T,
    ) -> Vec<Option<T>> {
        let mut out: Vec<Option<T>> = vec![None; self.order];
        out[0] = Some(one);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (&s, img) in gens.iter().zip(images) {
                let y = self.mul(x, s);
                if out[y].is_none() {
                    out[y] = Some(mul(out[x].as_ref().expect("visited"), img));
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// First pair `(a, b)` with `f(ab) ≠ f(a)f(b)`.
    pub fn hom_failure(&self, f: &[usize], target: &GroupTable) -> Option<(usize, usize)> {
        for a in 0..self.order {
            for b in 0..self.order {
                if f[self.mul(a, b)] != target.mul(f[a], f[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Extends generator images to a homomorphism, if one exists.
    pub fn extend_hom(&self, gens: &[usize], images: &[usize], target: &GroupTable) -> Option<Vec<usize>> {
        let map = self.extend_from_generators(gens, images, 0, |&a, &b| target.mul(a, b));
        let map: Vec<usize> = map.into_iter().collect::<Option<_>>()?;
        self.hom_failure(&map, target).is_none().then_some(map)
    }

    pub fn is_subgroup(&self, s: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in s {
            if x >= self.order {
                return false;
            }
            member[x] = true;
        }
        member[0] && s.iter().all(|&a| s.iter().all(|&b| member[self.mul(a, self.inv(b))]))
    }

    pub fn is_normal_subgroup(&self, s: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        s.iter().for_each(|&x| member[x] = true);
        self.is_subgroup(s)
            && self
                .generators
                .iter()
                .all(|&g| s.iter().all(|&h| member[self.conjugate(g, h)]))
    }

    /// The subgroup on a closed set of labels, with induced table and names.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut emb = elements.to_vec();
        emb.sort_unstable();
        emb.dedup();
        if !self.is_subgroup(&emb) {
            return Err(Error::InvalidGroupTable(format!("{emb:?} is not a subgroup")));
        }
        let pos: HashMap<usize, usize> = emb.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let k = emb.len();
        let mut product = vec![0; k * k];
        for (i, &a) in emb.iter().enumerate() {
            for (j, &b) in emb.iter().enumerate() {
                product[i * k + j] = pos[&self.mul(a, b)];
            }
        }
        let inverse = emb.iter().map(|&a| pos[&self.inv(a)]).collect();
        let names = emb.iter().map(|&a| self.names[a].clone()).collect();
        Ok(Subgroup {
            group: Self::assemble(k, product, inverse, names),
            embedding: emb,
        })
    }

    /// `{g : gs = sg for all s ∈ S}`.
    pub fn centralizer(&self, s: &[usize]) -> Subgroup {
        let els: Vec<usize> = (0..self.order)
            .filter(|&g| s.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        self.subgroup(&els).expect("centralizer is a subgroup")
    }

    /// `G/N` with cosets ordered by minimal representative; returns the projection too.
    pub fn quotient(&self, normal: &[usize]) -> Result<(GroupTable, Vec<usize>)> {
        if !self.is_normal_subgroup(normal) {
            return Err(Error::NotNormal(format!("{normal:?} is not a normal subgroup")));
        }
        let mut proj = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if proj[g] == usize::MAX {
                for &n in normal {
                    proj[self.mul(g, n)] = reps.len();
                }
                reps.push(g);
            }
        }
        let k = reps.len();
        let mut product = vec![0; k * k];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                product[i * k + j] = proj[self.mul(a, b)];
            }
        }
        let inverse = reps.iter().map(|&a| proj[self.inv(a)]).collect();
        let names = reps.iter().map(|&a| format!("{}N", self.names[a])).collect();
        Ok((Self::assemble(k, product, inverse, names), proj))
    }

    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let trivial = vec![GroupAut::identity(self); other.order];
        semidirect_group(self, other, &trivial).expect("trivial action")
    }

    pub(crate) fn from_parts(order: usize, product: Vec<usize>, inverse: Vec<usize>, names: Vec<String>) -> Self {
        Self::assemble(order, product, inverse, names)
    }
}

/// `group_from_generators`: closure of permutations on `{1..degree}`.
pub fn group_from_generators(degree: usize, generators: &[Perm]) -> Result<GroupTable> {
    GroupTable::from_permutations(degree, generators)
}

/// `{g : gs = sg for all s ∈ S}` with its embedding.
pub fn group_centralizer(g: &GroupTable, s: &[usize]) -> Subgroup {
    g.centralizer(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: usize, s: &str) -> Perm {
        Perm::parse_cycles(d, s).unwrap()
    }

    #[test]
    fn closure_orders() {
        let s3 = GroupTable::from_permutations(3, &[p(3, "(1 2 3)"), p(3, "(1 2)")]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.name(1), "(1 2 3)");
        assert_eq!(s3.name(2), "(1 2)");
        assert!(!s3.is_abelian());
        assert_eq!(GroupTable::from_permutations(1, &[]).unwrap().order(), 1);
        let c4 = GroupTable::from_permutations(4, &[p(4, "(1 2 3 4)")]).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_abelian());
        assert_eq!(c4.generators(), &[1]);
    }

    #[test]
    fn closure_bound_is_enforced() {
        let err = GroupTable::from_permutations_bounded(4, &[p(4, "(1 2 3 4)"), p(4, "(1 2)")], 10);
        assert_eq!(err, Err(Error::ClosureTooLarge { bound: 10 }));
    }

    #[test]
    fn table_validation() {
        assert!(GroupTable::from_table(vec![vec![0, 1], vec![1, 0]], None).is_ok());
        assert!(GroupTable::from_table(vec![vec![0, 1], vec![1, 1]], None).is_err());
        assert!(GroupTable::from_table(vec![vec![1, 0], vec![0, 1]], None).is_err());
    }

    #[test]
    fn centralizers_in_s3() {
        let s3 = GroupTable::symmetric(3);
        let a3: Vec<usize> = s3.elements().filter(|&g| s3.element_order(g) != 2).collect();
        let c = s3.centralizer(&a3);
        assert_eq!(c.embedding, a3);
        assert_eq!(s3.centralizer(&[0]).group.order(), 6);
        let all: Vec<usize> = s3.elements().collect();
        assert_eq!(s3.centralizer(&all).embedding, vec![0]);
    }

    #[test]
    fn quotient_of_s3_by_a3() {
        let s3 = GroupTable::symmetric(3);
        let a3: Vec<usize> = s3.elements().filter(|&g| s3.element_order(g) != 2).collect();
        let (q, proj) = s3.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        assert!(s3.hom_failure(&proj, &q).is_none());
        let t = s3.label("(1 2)").unwrap();
        assert!(s3.quotient(&[0, t]).is_err());
    }
}
