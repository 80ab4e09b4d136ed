use super::GroupTable;
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vec, solve_homogeneous, zero_vec, Matrix, Vector};
use crate::rational::one;

/// A representation `G → GL_n(ℚ)`, one matrix per element label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRep {
    dim: usize,
    matrices: Vec<Matrix>,
}

/// A map `G → V` indexed by element label.
pub type Cocycle = Vec<Vector>;

impl LinearRep {
    pub fn new(g: &GroupTable, dim: usize, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != g.order() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for a group of order {}",
                matrices.len(),
                g.order()
            )));
        }
        for (i, m) in matrices.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "matrix for {} is {}x{}, expected {dim}x{dim}",
                    g.name(i),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if !matrices[0].is_identity() {
            return Err(Error::InvalidRepresentation("identity does not act trivially".into()));
        }
        for a in g.elements() {
            for b in g.elements() {
                if matrices[g.mul(a, b)] != matrices[a].mul(&matrices[b]) {
                    return Err(Error::NotMultiplicative {
                        what: "representation".into(),
                        a: g.name(a).into(),
                        b: g.name(b).into(),
                    });
                }
            }
        }
        // Multiplicativity with a finite group forces invertibility; checked anyway.
        if matrices.iter().any(|m| m.inverse().is_none()) {
            return Err(Error::InvalidRepresentation("singular matrix".into()));
        }
        Ok(LinearRep { dim, matrices })
    }

    /// Extends matrices given on the group's own generators.
    pub fn from_generators(g: &GroupTable, dim: usize, gens: &[usize], images: &[Matrix]) -> Result<Self> {
        if gens.len() != images.len() {
            return Err(Error::DimensionMismatch("generator and image counts differ".into()));
        }
        let ext = g.extend_from_generators(gens, images, Matrix::identity(dim), |a, b| a.mul(b));
        let matrices = ext
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidRepresentation("listed elements do not generate the group".into()))?;
        Self::new(g, dim, matrices)
    }

    pub fn trivial(g: &GroupTable, dim: usize) -> Self {
        LinearRep {
            dim,
            matrices: vec![Matrix::identity(dim); g.order()],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn act(&self, g: usize, v: &[crate::rational::Q]) -> Vector {
        self.matrices[g].mul_vec(v)
    }

    pub fn is_trivial(&self) -> bool {
        self.matrices.iter().all(Matrix::is_identity)
    }
}

/// `d(gh) = d(g) + g·d(h)` for all pairs.
pub fn is_cocycle(g: &GroupTable, v: &LinearRep, d: &[Vector]) -> bool {
    g.elements().all(|a| {
        g.elements().all(|b| {
            let mut rhs = d[a].clone();
            add_scaled(&mut rhs, &one(), &v.act(a, &d[b]));
            d[g.mul(a, b)] == rhs
        })
    })
}

/// Reduced-echelon basis of `Z¹(G, V)`, coordinates ordered by element label then vector index.
pub fn cocycle_space(g: &GroupTable, v: &LinearRep) -> Vec<Cocycle> {
    let n = g.order();
    let dim = v.dim();
    let unknowns = n * dim;
    // d(x s) - d(x) - x·d(s) = 0 for x ∈ G and s a generator determines Z¹ entirely.
    let mut rows = Vec::new();
    for x in g.elements() {
        for &s in g.generators() {
            for i in 0..dim {
                let mut row = zero_vec(unknowns);
                row[g.mul(x, s) * dim + i] += one();
                row[x * dim + i] -= one();
                for j in 0..dim {
                    row[s * dim + j] -= v.matrix(x)[(i, j)].clone();
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    for i in 0..dim {
        let mut row = zero_vec(unknowns);
        row[i] = one();
        rows.push(row);
    }
    solve_homogeneous(unknowns, rows)
        .into_iter()
        .map(|flat| flat.chunks(dim.max(1)).take(n).map(|c| c[..dim].to_vec()).collect())
        .collect()
}
