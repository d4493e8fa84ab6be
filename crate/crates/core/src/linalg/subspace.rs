use super::matrix::row_reduce;
use super::{axpy, is_zero_vector, FieldSpec, Scalar, Vector};

/// A subspace of `K^n` held by its reduced row echelon basis.
///
/// Two spanning sets of the same subspace produce identical values, so the
/// basis doubles as a canonical name for the subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_spanning(field: FieldSpec, ambient: usize, mut vectors: Vec<Vector>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient));
        let pivots = row_reduce(&mut vectors, ambient);
        vectors.truncate(pivots.len());
        Subspace {
            field,
            ambient,
            basis: vectors,
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Clears the pivot coordinates of `v` using the basis; the result is the
    /// canonical representative of `v` modulo this subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let coeff = -&out[p];
            axpy(&mut out, &coeff, row);
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// `Σ coords[i] · basis[i]`.
    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut out = vec![self.field.zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            axpy(&mut out, c, row);
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.field, self.ambient, vectors)
    }
}
