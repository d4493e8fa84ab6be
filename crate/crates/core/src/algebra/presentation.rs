use std::collections::HashSet;

use crate::error::{Error, Result, Witness};
use crate::linalg::{axpy, is_zero_vector, sub_vectors, zero_vector, FieldSpec, Matrix, Scalar, Vector};

/// Upper bound on the witnesses any axiom check reports.
pub const MAX_WITNESSES: usize = 16;

/// A finite-dimensional algebra given by structure constants:
/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    field: FieldSpec,
    basis_names: Vec<String>,
    constants: Vec<Scalar>,
}

/// Outcome of [`AlgebraPresentation::check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraKindReport {
    pub leibniz_left: bool,
    pub antisymmetric: bool,
    pub lie: bool,
    /// Basis triples `(i, j, k)` where `[x,[y,z]] − [[x,y],z] − [y,[x,z]]` is nonzero.
    pub violations: Vec<Witness>,
}

impl AlgebraPresentation {
    /// The abelian (zero bracket) algebra on the given basis.
    pub fn abelian(field: FieldSpec, basis_names: Vec<String>) -> Result<Self> {
        check_distinct(&basis_names)?;
        let n = basis_names.len();
        Ok(AlgebraPresentation {
            field,
            basis_names,
            constants: vec![field.zero(); n * n * n],
        })
    }

    pub fn new(field: FieldSpec, basis_names: Vec<String>, constants: Vec<Scalar>) -> Result<Self> {
        check_distinct(&basis_names)?;
        let n = basis_names.len();
        if constants.len() != n * n * n {
            return Err(Error::DimensionMismatch(format!(
                "{} structure constants for dimension {n}",
                constants.len()
            )));
        }
        if !constants.iter().all(|c| field.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        Ok(AlgebraPresentation {
            field,
            basis_names,
            constants,
        })
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vector) -> Result<()> {
        let n = self.dim();
        if i >= n || j >= n || value.len() != n {
            return Err(Error::DimensionMismatch(format!("bracket ({i}, {j}) in dimension {n}")));
        }
        if !value.iter().all(|c| self.field.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        let start = (i * n + j) * n;
        self.constants[start..start + n].clone_from_slice(&value);
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        let start = (i * n + j) * n;
        &self.constants[start..start + n]
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of length {} and {} in dimension {n}",
                x.len(),
                y.len()
            )));
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(self.field, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.bracket_basis(i, j));
            }
        }
        out
    }

    /// Matrix of `m ↦ [e_i, m]`.
    pub fn left_multiplication(&self, i: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|b| self.bracket_basis(i, b).to_vec()).collect();
        Matrix::from_columns(self.field, n, &cols).expect("square by construction")
    }

    /// Matrix of `m ↦ [m, e_i]`.
    pub fn right_multiplication(&self, i: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|b| self.bracket_basis(b, i).to_vec()).collect();
        Matrix::from_columns(self.field, n, &cols).expect("square by construction")
    }

    pub fn is_abelian(&self) -> bool {
        is_zero_vector(&self.constants)
    }

    /// Checks the left Leibniz identity on all basis triples and
    /// antisymmetry on all basis pairs.
    pub fn check(&self) -> AlgebraKindReport {
        let n = self.dim();
        let mut violations = Vec::new();
        let mut leibniz_left = true;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let residual = self.leibniz_residual(x, y, z);
                    if !is_zero_vector(&residual) {
                        leibniz_left = false;
                        if violations.len() < MAX_WITNESSES {
                            violations.push(Witness {
                                indices: vec![x, y, z],
                                residual,
                            });
                        }
                    }
                }
            }
        }
        let antisymmetric = (0..n).all(|i| {
            (i..n).all(|j| {
                let sum: Vector = self
                    .bracket_basis(i, j)
                    .iter()
                    .zip(self.bracket_basis(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                is_zero_vector(&sum)
            })
        });
        AlgebraKindReport {
            leibniz_left,
            antisymmetric,
            lie: leibniz_left && antisymmetric,
            violations,
        }
    }

    /// `[e_x,[e_y,e_z]] − [[e_x,e_y],e_z] − [e_y,[e_x,e_z]]`.
    pub fn leibniz_residual(&self, x: usize, y: usize, z: usize) -> Vector {
        let n = self.dim();
        let ex = unit(self.field, n, x);
        let ey = unit(self.field, n, y);
        let lhs = self.bracket_unchecked(&ex, self.bracket_basis(y, z));
        let first = self.bracket_unchecked(self.bracket_basis(x, y), &unit(self.field, n, z));
        let second = self.bracket_unchecked(&ey, self.bracket_basis(x, z));
        sub_vectors(&sub_vectors(&lhs, &first), &second)
    }

    pub(crate) fn require_leibniz(&self) -> Result<()> {
        let report = self.check();
        match report.violations.into_iter().next() {
            Some(w) => Err(Error::NotLeibniz(w)),
            None => Ok(()),
        }
    }

    pub(crate) fn require_lie(&self) -> Result<()> {
        self.require_leibniz()?;
        if !self.check().antisymmetric {
            return Err(Error::NotLie);
        }
        Ok(())
    }
}

fn unit(field: FieldSpec, n: usize, i: usize) -> Vector {
    crate::linalg::unit_vector(field, n, i)
}

fn check_distinct(names: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateBasisName(name.clone()));
        }
    }
    Ok(())
}
