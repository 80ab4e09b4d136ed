use super::GroupTable;
use crate::error::{Error, Result};
use serde::Serialize;

pub const AUT_BOUND: usize = 512;

/// An automorphism as a permutation of element labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GroupAut(Vec<usize>);

impl GroupAut {
    pub fn new(g: &GroupTable, map: Vec<usize>) -> Result<Self> {
        let n = g.order();
        if map.len() != n {
            return Err(Error::DimensionMismatch(format!("map of length {} on a group of order {n}", map.len())));
        }
        let mut seen = vec![false; n];
        for &x in &map {
            if x >= n || seen[x] {
                return Err(Error::InvalidGroupTable("automorphism is not bijective".into()));
            }
            seen[x] = true;
        }
        if let Some((a, b)) = g.hom_failure(&map, g) {
            return Err(Error::NotMultiplicative {
                what: "group automorphism".into(),
                a: g.name(a).into(),
                b: g.name(b).into(),
            });
        }
        Ok(GroupAut(map))
    }

    pub fn identity(g: &GroupTable) -> Self {
        GroupAut(g.elements().collect())
    }

    /// Inner automorphism `h ↦ g h g⁻¹`.
    pub fn inner(g: &GroupTable, x: usize) -> Self {
        GroupAut(g.elements().map(|h| g.conjugate(x, h)).collect())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupAut) -> GroupAut {
        GroupAut(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> GroupAut {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        GroupAut(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// Depth-first search over generator images, pruning partial maps that fail to be injective homomorphisms.
fn search_isomorphisms(g: &GroupTable, h: &GroupTable, first_only: bool) -> Vec<Vec<usize>> {
    let mut found = Vec::new();
    if g.order() != h.order() {
        return found;
    }
    let gens = g.generators().to_vec();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = g.element_order(s);
            h.elements().filter(|&x| h.element_order(x) == o).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    recurse(g, h, &gens, &candidates, &mut images, first_only, &mut found);
    found
}

fn recurse(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    first_only: bool,
    found: &mut Vec<Vec<usize>>,
) {
    let k = images.len();
    if k == gens.len() {
        let map = g.extend_from_generators(gens, images, 0, |&a, &b| h.mul(a, b));
        if let Some(map) = map.into_iter().collect::<Option<Vec<usize>>>() {
            found.push(map);
        }
        return;
    }
    for &c in &candidates[k] {
        images.push(c);
        if partial_is_injective_hom(g, h, &gens[..=k], images) {
            recurse(g, h, gens, candidates, images, first_only, found);
        }
        images.pop();
        if first_only && !found.is_empty() {
            return;
        }
    }
}

fn partial_is_injective_hom(g: &GroupTable, h: &GroupTable, gens: &[usize], images: &[usize]) -> bool {
    let map = g.extend_from_generators(gens, images, 0, |&a, &b| h.mul(a, b));
    let mut hit = vec![false; h.order()];
    for x in g.elements() {
        let Some(fx) = map[x] else { continue };
        if hit[fx] {
            return false;
        }
        hit[fx] = true;
        for (&s, &t) in gens.iter().zip(images) {
            if map[g.mul(x, s)] != Some(h.mul(fx, t)) {
                return false;
            }
        }
    }
    true
}

/// All automorphisms, identity first, then in lexicographic order of their label maps.
pub fn enumerate_automorphisms(g: &GroupTable) -> Result<Vec<GroupAut>> {
    enumerate_automorphisms_bounded(g, AUT_BOUND)
}

pub fn enumerate_automorphisms_bounded(g: &GroupTable, bound: usize) -> Result<Vec<GroupAut>> {
    if g.order() > bound {
        return Err(Error::EnumerationInfeasible { order: g.order(), bound });
    }
    let mut all: Vec<GroupAut> = search_isomorphisms(g, g, false).into_iter().map(GroupAut).collect();
    all.sort();
    Ok(all)
}

/// Some isomorphism `g → h` as a label map, if the groups are isomorphic.
pub fn find_isomorphism(g: &GroupTable, h: &GroupTable) -> Option<Vec<usize>> {
    search_isomorphisms(g, h, true).into_iter().next()
}

/// `N ⋊_τ M` on pairs `(n, m)` labelled `m·|N| + n`, with `(n₁,m₁)(n₂,m₂) = (n₁ τ(m₁)(n₂), m₁m₂)`.
pub fn semidirect_group(n: &GroupTable, m: &GroupTable, tau: &[GroupAut]) -> Result<GroupTable> {
    if tau.len() != m.order() {
        return Err(Error::DimensionMismatch(format!(
            "{} automorphisms for a group of order {}",
            tau.len(),
            m.order()
        )));
    }
    for t in tau {
        GroupAut::new(n, t.0.clone())?;
    }
    if !tau[0].is_identity() {
        return Err(Error::NotMultiplicative {
            what: "action".into(),
            a: m.name(0).into(),
            b: m.name(0).into(),
        });
    }
    for a in m.elements() {
        for b in m.elements() {
            if tau[m.mul(a, b)] != tau[a].compose(&tau[b]) {
                return Err(Error::NotMultiplicative {
                    what: "action".into(),
                    a: m.name(a).into(),
                    b: m.name(b).into(),
                });
            }
        }
    }
    let (nn, nm) = (n.order(), m.order());
    let order = nn * nm;
    let label = |x: usize, y: usize| y * nn + x;
    let mut product = vec![0; order * order];
    let mut inverse = vec![0; order];
    for m1 in 0..nm {
        for n1 in 0..nn {
            let a = label(n1, m1);
            for m2 in 0..nm {
                for n2 in 0..nn {
                    product[a * order + label(n2, m2)] = label(n.mul(n1, tau[m1].apply(n2)), m.mul(m1, m2));
                }
            }
            // (n, m)⁻¹ = (τ(m⁻¹)(n⁻¹), m⁻¹)
            let mi = m.inv(m1);
            inverse[a] = label(tau[mi].apply(n.inv(n1)), mi);
        }
    }
    let names = (0..order)
        .map(|a| format!("{}·{}", n.name(a % nn), m.name(a / nn)))
        .collect();
    Ok(GroupTable::from_parts(order, product, inverse, names))
}
