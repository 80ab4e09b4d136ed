//! Finite-dimensional Lie algebras over ℚ given by structure constants.

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vec, solve_homogeneous, unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::pbw::StraightenCache;
use crate::rational::{fmt_q, Q};
use num_traits::Zero;
use serde::Serialize;
use std::sync::Arc;

/// A Lie algebra with basis `e_0..e_{n-1}` and `[e_i, e_j] = Σ_k c^k_{ij} e_k`.
#[derive(Clone)]
pub struct LieAlgebra {
    names: Vec<String>,
    /// `brackets[i][j]` is the coordinate vector of `[e_i, e_j]`.
    brackets: Vec<Vec<Vector>>,
    pub(crate) cache: Arc<StraightenCache>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.brackets == other.brackets
    }
}

impl Eq for LieAlgebra {}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("names", &self.names)
            .field("brackets", &self.bracket_table())
            .finish()
    }
}

#[derive(Serialize)]
struct BracketEntry<'a> {
    left: &'a str,
    right: &'a str,
    #[serde(with = "crate::rational::serde_vec_q")]
    value: &'a [Q],
}

impl Serialize for LieAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut entries = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if !is_zero_vec(&self.brackets[i][j]) {
                    entries.push(BracketEntry {
                        left: &self.names[i],
                        right: &self.names[j],
                        value: &self.brackets[i][j],
                    });
                }
            }
        }
        let mut st = s.serialize_struct("LieAlgebra", 2)?;
        st.serialize_field("basis", &self.names)?;
        st.serialize_field("brackets", &entries)?;
        st.end()
    }
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity on all basis triples.
    pub fn new(names: Vec<String>, brackets: Vec<Vec<Vector>>) -> Result<Self> {
        let n = names.len();
        if brackets.len() != n || brackets.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::DimensionMismatch(format!("structure constants must be {n}x{n}x{n}")));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::DimensionMismatch("basis names must be distinct".into()));
        }
        let l = Self::unchecked(names, brackets);
        l.validate()?;
        Ok(l)
    }

    pub(crate) fn unchecked(names: Vec<String>, brackets: Vec<Vec<Vector>>) -> Self {
        LieAlgebra {
            names,
            brackets,
            cache: Arc::default(),
        }
    }

    /// Builds from the brackets `[e_i, e_j]` listed for some pairs; the rest follow by antisymmetry or are zero.
    pub fn from_brackets(names: Vec<String>, given: &[(usize, usize, Vector)]) -> Result<Self> {
        let n = names.len();
        let mut brackets = vec![vec![zero_vec(n); n]; n];
        let mut set = vec![vec![false; n]; n];
        for (i, j, v) in given {
            let (i, j) = (*i, *j);
            if i >= n || j >= n || v.len() != n {
                return Err(Error::DimensionMismatch(format!("bracket ({i}, {j}) out of range")));
            }
            let neg: Vector = v.iter().map(|x| -x).collect();
            for (a, b, w) in [(i, j, v.clone()), (j, i, neg)] {
                if set[a][b] && brackets[a][b] != w {
                    let k = (0..n).find(|&k| brackets[a][b][k] != w[k]).unwrap_or(0);
                    return Err(Error::Antisymmetry {
                        i: names[i].clone(),
                        j: names[j].clone(),
                        k: names[k].clone(),
                    });
                }
                set[a][b] = true;
                brackets[a][b] = w;
            }
        }
        Self::new(names, brackets)
    }

    pub fn abelian(names: Vec<String>) -> Self {
        let n = names.len();
        Self::unchecked(names, vec![vec![zero_vec(n); n]; n])
    }

    pub fn zero() -> Self {
        Self::abelian(Vec::new())
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.brackets[i][j][k] != -self.brackets[j][i][k].clone() {
                        return Err(Error::Antisymmetry {
                            i: self.names[i].clone(),
                            j: self.names[j].clone(),
                            k: self.names[k].clone(),
                        });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut s = self.bracket(&self.brackets[i][j], &unit_vec(n, k));
                    add_scaled(&mut s, &crate::rational::one(), &self.bracket(&self.brackets[j][k], &unit_vec(n, i)));
                    add_scaled(&mut s, &crate::rational::one(), &self.bracket(&self.brackets[k][i], &unit_vec(n, j)));
                    if !is_zero_vec(&s) {
                        return Err(Error::Jacobi {
                            i: self.names[i].clone(),
                            j: self.names[j].clone(),
                            k: self.names[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Overwrites one structure constant without validation; for negative tests only.
    #[doc(hidden)]
    pub fn corrupt(&self, i: usize, j: usize, k: usize, value: Q) -> Self {
        let mut brackets = self.brackets.clone();
        brackets[i][j][k] = value;
        Self::unchecked(self.names.clone(), brackets)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.brackets[i][j]
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().flatten().all(|v| is_zero_vec(v))
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                add_scaled(&mut out, &(xi * yj), &self.brackets[i][j]);
            }
        }
        out
    }

    /// `ad(x) = [x, -]` as a matrix.
    pub fn ad(&self, x: &[Q]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket(x, &unit_vec(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    fn bracket_table(&self) -> Vec<(String, String, String)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if !is_zero_vec(&self.brackets[i][j]) {
                    out.push((self.names[i].clone(), self.names[j].clone(), self.render(&self.brackets[i][j])));
                }
            }
        }
        out
    }

    /// Renders a coordinate vector using basis names, e.g. `x - 1/2 z`.
    pub fn render(&self, v: &[Q]) -> String {
        render_vector(&self.names, v)
    }

    /// First basis pair on which `d` fails the derivation rule.
    pub fn derivation_failure(&self, d: &Matrix) -> Option<(usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(&self.brackets[i][j]);
                let mut rhs = self.bracket(&d.column(i), &unit_vec(n, j));
                add_scaled(&mut rhs, &crate::rational::one(), &self.bracket(&unit_vec(n, i), &d.column(j)));
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_derivation(&self, d: &Matrix) -> bool {
        d.rows() == self.dim() && d.cols() == self.dim() && self.derivation_failure(d).is_none()
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|a| s.basis().iter().all(|b| s.contains(&self.bracket(a, b))))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let n = self.dim();
        s.basis().iter().all(|a| (0..n).all(|i| s.contains(&self.bracket(&unit_vec(n, i), a))))
    }

    /// The Lie algebra on the echelon basis of `s`, with its inclusion matrix (ambient × dim s).
    pub fn subalgebra(&self, s: &Subspace) -> Result<(LieAlgebra, Matrix)> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotSubalgebra("subspace is not closed under the bracket".into()));
        }
        let k = s.dim();
        let mut brackets = vec![vec![zero_vec(k); k]; k];
        for (i, a) in s.basis().iter().enumerate() {
            for (j, b) in s.basis().iter().enumerate() {
                brackets[i][j] = s.coordinates(&self.bracket(a, b)).expect("closed");
            }
        }
        let names = s.basis().iter().map(|v| self.vector_name(v)).collect();
        let inclusion = Matrix::from_columns(self.dim(), s.basis());
        Ok((Self::unchecked(names, brackets), inclusion))
    }

    /// A basis name for unit vectors, a parenthesised combination otherwise.
    pub(crate) fn vector_name(&self, v: &[Q]) -> String {
        let support: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        if support.len() == 1 && v[support[0]] == crate::rational::one() {
            self.names[support[0]].clone()
        } else {
            format!("({})", self.render(v))
        }
    }
}

pub fn render_vector(names: &[String], v: &[Q]) -> String {
    let lc: crate::lincomb::LinComb<usize> = v.iter().cloned().enumerate().collect();
    lc.render(|&i| names[i].clone())
}

/// Structure constants as strings, `[i][j][k] = c^k_{ij}`.
pub fn structure_constants(l: &LieAlgebra) -> Vec<Vec<Vec<String>>> {
    l.brackets
        .iter()
        .map(|r| r.iter().map(|v| v.iter().map(fmt_q).collect()).collect())
        .collect()
}

/// `lie_from_structure_constants`.
pub fn lie_from_structure_constants(names: Vec<String>, constants: Vec<Vec<Vector>>) -> Result<LieAlgebra> {
    LieAlgebra::new(names, constants)
}

/// A Lie algebra morphism given by its matrix (target × source).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LieHom {
    matrix: Matrix,
}

impl LieHom {
    pub fn new(source: &LieAlgebra, target: &LieAlgebra, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "Lie map is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let h = LieHom { matrix };
        if let Some((i, j)) = h.bracket_failure(source, target) {
            return Err(Error::NotBracketPreserving {
                what: "Lie map".into(),
                i: source.name(i).into(),
                j: source.name(j).into(),
            });
        }
        Ok(h)
    }

    pub(crate) fn unchecked(matrix: Matrix) -> Self {
        LieHom { matrix }
    }

    pub fn identity(l: &LieAlgebra) -> Self {
        LieHom {
            matrix: Matrix::identity(l.dim()),
        }
    }

    pub fn zero(source: &LieAlgebra, target: &LieAlgebra) -> Self {
        LieHom {
            matrix: Matrix::zeros(target.dim(), source.dim()),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Q]) -> Vector {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LieHom) -> LieHom {
        LieHom {
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn bracket_failure(&self, source: &LieAlgebra, target: &LieAlgebra) -> Option<(usize, usize)> {
        let n = source.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.apply(source.bracket_basis(i, j));
                let rhs = target.bracket(&self.matrix.column(i), &self.matrix.column(j));
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::from_spanning(self.matrix.cols(), self.matrix.nullspace())
    }
}

/// Linear equations on the entries of `D` (row-major, `D[r][c]` at `offset + r·n + c`) expressing the derivation rule.
pub(crate) fn derivation_equations(l: &LieAlgebra, offset: usize, unknowns: usize) -> Vec<Vector> {
    let n = l.dim();
    let var = |r: usize, c: usize| offset + r * n + c;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                // (D[e_i,e_j])_k - ([D e_i, e_j])_k - ([e_i, D e_j])_k = 0
                let mut row = zero_vec(unknowns);
                for m in 0..n {
                    let c = &l.brackets[i][j][m];
                    if !c.is_zero() {
                        row[var(k, m)] += c;
                    }
                    let c = &l.brackets[m][j][k];
                    if !c.is_zero() {
                        row[var(m, i)] -= c;
                    }
                    let c = &l.brackets[i][m][k];
                    if !c.is_zero() {
                        row[var(m, j)] -= c;
                    }
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

pub(crate) fn matrix_from_flat(n: usize, flat: &[Q]) -> Matrix {
    Matrix::from_rows_with_cols(n, flat.chunks(n.max(1)).take(n).map(|r| r.to_vec()).collect())
}

/// Reduced-echelon basis of `Der(L)`, entries flattened row-major.
pub fn lie_derivations(l: &LieAlgebra) -> Vec<Matrix> {
    let n = l.dim();
    solve_homogeneous(n * n, derivation_equations(l, 0, n * n))
        .into_iter()
        .map(|v| matrix_from_flat(n, &v))
        .collect()
}

/// `{x : [x, s] = 0 for all s ∈ S}`.
pub fn lie_centralizer(l: &LieAlgebra, s: &Subspace) -> Subspace {
    let n = l.dim();
    let mut rows = Vec::new();
    for v in s.basis() {
        // [x, v]_k = Σ_a x_a [e_a, v]_k
        let cols: Vec<Vector> = (0..n).map(|a| l.bracket(&unit_vec(n, a), v)).collect();
        for k in 0..n {
            let row: Vector = cols.iter().map(|c| c[k].clone()).collect();
            if !is_zero_vec(&row) {
                rows.push(row);
            }
        }
    }
    Subspace::from_spanning(n, solve_homogeneous(n, rows))
}

/// `M ⋊_ν L` on `M ⊕ L` (M's basis first) with `[(m₁,l₁),(m₂,l₂)] = ([m₁,m₂] + ν(l₁)m₂ − ν(l₂)m₁, [l₁,l₂])`.
///
/// `nu[i]` is the derivation of `M` assigned to the `i`-th basis vector of `L`; `ν` must satisfy
/// `ν([a,b]) = ν(a)ν(b) − ν(b)ν(a)`.
#[allow(clippy::needless_range_loop)]
pub fn semidirect_lie(m: &LieAlgebra, l: &LieAlgebra, nu: &[Matrix]) -> Result<LieAlgebra> {
    let (dm, dl) = (m.dim(), l.dim());
    if nu.len() != dl || nu.iter().any(|d| d.rows() != dm || d.cols() != dm) {
        return Err(Error::DimensionMismatch("ν must give one derivation of M per basis vector of L".into()));
    }
    for (a, d) in nu.iter().enumerate() {
        if let Some((i, j)) = m.derivation_failure(d) {
            return Err(Error::NotDerivation {
                what: format!("ν({})", l.name(a)),
                i: m.name(i).into(),
                j: m.name(j).into(),
            });
        }
    }
    let nu_of = |v: &[Q]| {
        let mut acc = Matrix::zeros(dm, dm);
        for (c, d) in v.iter().zip(nu) {
            if !c.is_zero() {
                acc = acc.add(&d.scale(c));
            }
        }
        acc
    };
    for a in 0..dl {
        for b in a + 1..dl {
            let lhs = nu_of(l.bracket_basis(a, b));
            let rhs = nu[a].mul(&nu[b]).sub(&nu[b].mul(&nu[a]));
            if lhs != rhs {
                return Err(Error::NotBracketPreserving {
                    what: "ν".into(),
                    i: l.name(a).into(),
                    j: l.name(b).into(),
                });
            }
        }
    }
    let n = dm + dl;
    let mut brackets = vec![vec![zero_vec(n); n]; n];
    for i in 0..dm {
        for j in 0..dm {
            brackets[i][j][..dm].clone_from_slice(m.bracket_basis(i, j));
        }
    }
    for a in 0..dl {
        for b in 0..dl {
            brackets[dm + a][dm + b][dm..].clone_from_slice(l.bracket_basis(a, b));
        }
        for j in 0..dm {
            let v = nu[a].column(j);
            for k in 0..dm {
                brackets[dm + a][j][k] = v[k].clone();
                brackets[j][dm + a][k] = -v[k].clone();
            }
        }
    }
    LieAlgebra::new(disjoint_names(m.names(), l.names()), brackets)
}

/// Concatenates name lists, priming right-hand names that clash.
pub(crate) fn disjoint_names(left: &[String], right: &[String]) -> Vec<String> {
    let mut out: Vec<String> = left.to_vec();
    for r in right {
        let mut name = r.clone();
        while out.contains(&name) {
            name.push('\'');
        }
        out.push(name);
    }
    out
}

/// Smallest ideal containing `S`, by iterating `I ← I + [L, I]` to a fixed point.
pub fn ideal_closure(l: &LieAlgebra, s: &[Vector]) -> Subspace {
    let n = l.dim();
    let mut ideal = Subspace::from_spanning(n, s.to_vec());
    loop {
        let mut vs = ideal.basis().to_vec();
        for v in ideal.basis() {
            for i in 0..n {
                vs.push(l.bracket(&unit_vec(n, i), v));
            }
        }
        let next = Subspace::from_spanning(n, vs);
        if next.dim() == ideal.dim() {
            return ideal;
        }
        ideal = next;
    }
}

/// `L/I` for the ideal closure `I` of `S`.
#[derive(Clone, Debug, Serialize)]
pub struct LieQuotient {
    pub quotient: LieAlgebra,
    pub projection: LieHom,
    pub ideal: Subspace,
    /// Ambient basis indices whose images form the quotient basis.
    pub complement: Vec<usize>,
}

/// Quotient by the ideal closure of `S`, using the non-pivot coordinates as the quotient basis.
pub fn quotient_by_ideal_closure(l: &LieAlgebra, s: &[Vector]) -> LieQuotient {
    let ideal = ideal_closure(l, s);
    let n = l.dim();
    let complement: Vec<usize> = (0..n).filter(|c| !ideal.pivots().contains(c)).collect();
    let project = |v: &[Q]| -> Vector {
        let r = ideal.reduce(v);
        complement.iter().map(|&c| r[c].clone()).collect()
    };
    let k = complement.len();
    let mut brackets = vec![vec![zero_vec(k); k]; k];
    for (a, &i) in complement.iter().enumerate() {
        for (b, &j) in complement.iter().enumerate() {
            brackets[a][b] = project(l.bracket_basis(i, j));
        }
    }
    let names = complement.iter().map(|&i| l.names[i].clone()).collect();
    let cols: Vec<Vector> = (0..n).map(|c| project(&unit_vec(n, c))).collect();
    LieQuotient {
        quotient: LieAlgebra::unchecked(names, brackets),
        projection: LieHom::unchecked(Matrix::from_columns(k, &cols)),
        ideal,
        complement,
    }
}
