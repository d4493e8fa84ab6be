use super::{AlgebraPresentation, LinearMap};
use crate::error::{Error, Result, Witness};
use crate::linalg::{unit_vector, Subspace, Vector};

/// The two-sided ideal generated by all squares `[x, x]`.
///
/// Generated by the symmetrized products `[e_i,e_j] + [e_j,e_i]` (plus the
/// diagonal squares in characteristic two) and closed under left and right
/// multiplication by basis elements.
pub fn leibniz_kernel(alg: &AlgebraPresentation) -> Subspace {
    let field = alg.field();
    let n = alg.dim();
    let mut generators: Vec<Vector> = Vec::new();
    for i in 0..n {
        for j in i..n {
            let sym = alg
                .bracket_basis(i, j)
                .iter()
                .zip(alg.bracket_basis(j, i))
                .map(|(a, b)| a + b)
                .collect();
            generators.push(sym);
        }
    }
    if field.characteristic() == 2 {
        for i in 0..n {
            generators.push(alg.bracket_basis(i, i).to_vec());
        }
    }
    ideal_closure(alg, Subspace::from_spanning(field, n, generators))
}

/// Smallest two-sided ideal containing `start`.
pub fn ideal_closure(alg: &AlgebraPresentation, start: Subspace) -> Subspace {
    let field = alg.field();
    let n = alg.dim();
    let mut current = start;
    loop {
        let mut vectors = current.basis().to_vec();
        for v in current.basis() {
            for i in 0..n {
                let e = unit_vector(field, n, i);
                vectors.push(alg.bracket_unchecked(&e, v));
                vectors.push(alg.bracket_unchecked(v, &e));
            }
        }
        let next = Subspace::from_spanning(field, n, vectors);
        if next.dim() == current.dim() {
            return next;
        }
        current = next;
    }
}

/// Returns the first product `[e_i, v]` or `[v, e_i]` escaping `ideal`.
fn ideal_witness(alg: &AlgebraPresentation, ideal: &Subspace) -> Option<Witness> {
    let field = alg.field();
    let n = alg.dim();
    for (b, v) in ideal.basis().iter().enumerate() {
        for i in 0..n {
            let e = unit_vector(field, n, i);
            for (side, product) in [(0, alg.bracket_unchecked(&e, v)), (1, alg.bracket_unchecked(v, &e))] {
                if !ideal.contains(&product) {
                    return Some(Witness {
                        indices: vec![b, i, side],
                        residual: product,
                    });
                }
            }
        }
    }
    None
}

/// Quotient of `alg` by a two-sided ideal, presented on the complement spanned
/// by the basis vectors at non-pivot positions of the ideal's echelon basis.
///
/// The returned projection sends `x` to the non-pivot coordinates of `x`
/// reduced modulo the ideal.
pub fn quotient_algebra(alg: &AlgebraPresentation, ideal: &Subspace) -> Result<(AlgebraPresentation, LinearMap)> {
    if ideal.ambient_dim() != alg.dim() || ideal.field() != alg.field() {
        return Err(Error::DimensionMismatch(format!(
            "ideal lives in dimension {}, algebra has dimension {}",
            ideal.ambient_dim(),
            alg.dim()
        )));
    }
    if let Some(w) = ideal_witness(alg, ideal) {
        return Err(Error::NotAnIdeal(w));
    }
    let field = alg.field();
    let n = alg.dim();
    let complement: Vec<usize> = (0..n).filter(|c| !ideal.pivots().contains(c)).collect();
    let project = |x: &[crate::linalg::Scalar]| -> Vector {
        let reduced = ideal.reduce(x);
        complement.iter().map(|&c| reduced[c].clone()).collect()
    };
    let images: Vec<Vector> = (0..n).map(|i| project(&unit_vector(field, n, i))).collect();
    let projection = LinearMap::from_images(field, complement.len(), &images)?;

    let names = complement.iter().map(|&c| alg.basis_names()[c].clone()).collect();
    let mut quotient = AlgebraPresentation::abelian(field, names)?;
    for (a, &i) in complement.iter().enumerate() {
        for (b, &j) in complement.iter().enumerate() {
            quotient.set_bracket(a, b, project(alg.bracket_basis(i, j)))?;
        }
    }
    Ok((quotient, projection))
}
