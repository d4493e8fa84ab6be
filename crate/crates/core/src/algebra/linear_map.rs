use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar, Vector};

/// A linear map `K^source → K^target` stored as a `target × source` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        LinearMap::new(Matrix::identity(field, n))
    }

    pub fn zero(field: FieldSpec, source: usize, target: usize) -> Self {
        LinearMap::new(Matrix::zeros(field, target, source))
    }

    pub fn from_images(field: FieldSpec, target: usize, images: &[Vector]) -> Result<Self> {
        Matrix::from_columns(field, target, images).map(LinearMap::new)
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    /// Image of the `i`-th source basis vector.
    pub fn image_of(&self, i: usize) -> Vector {
        self.matrix.column(i)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if self.source_dim() != inner.target_dim() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose a map from dimension {} after one into dimension {}",
                self.source_dim(),
                inner.target_dim()
            )));
        }
        self.matrix.mul(&inner.matrix).map(LinearMap::new)
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim() == self.target_dim() && self.matrix == Matrix::identity(self.field(), self.source_dim())
    }
}
