//! Exact scalar arithmetic and dense linear algebra.

mod field;
mod matrix;
mod subspace;

pub use field::{sign, FieldSpec, Scalar};
pub use matrix::Matrix;
pub use subspace::Subspace;

/// Coordinate vector over a [`FieldSpec`].
pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: FieldSpec, len: usize) -> Vector {
    vec![field.zero(); len]
}

pub fn unit_vector(field: FieldSpec, len: usize, at: usize) -> Vector {
    let mut v = zero_vector(field, len);
    v[at] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += coeff * v`, skipping the work when `coeff` is zero.
pub fn axpy(acc: &mut [Scalar], coeff: &Scalar, v: &[Scalar]) {
    if coeff.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(coeff * x);
        }
    }
}

pub fn scale(coeff: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| coeff * x).collect()
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}
