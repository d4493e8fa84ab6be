//! The Leibniz cochain complex `CLⁿ(𝔤; 𝔥) = Hom(𝔤^⊗n, 𝔥)` and its cohomology.
//!
//! Cochains are dense tables over basis tuples. Tuples are enumerated
//! lexicographically and the coefficient index varies fastest, so the flat
//! position of `(tuple, k)` is `index(tuple) · h + k`.
//!
//! The coboundary of an `n`-cochain is
//!
//! ```text
//! (δψ)(X₁,…,X_{n+1}) = Σ_{i≤n} (−1)^{i−1} [X_i, ψ(…, X̂_i, …)]
//!                    + (−1)^{n+1} [ψ(X₁,…,X_n), X_{n+1}]
//!                    + Σ_{i<j} (−1)^i ψ(…, X̂_i, …, [X_i, X_j], …)
//! ```
//!
//! where `[X_i, X_j]` replaces `X_j` in place. The first bracket is the left
//! action, the second the right action.

use std::ops::{Add, Neg, Sub};

use crate::algebra::Representation;
use crate::error::{Error, Result, Witness};
use crate::linalg::{axpy, is_zero_vector, sign, FieldSpec, Matrix, Scalar, Subspace, Vector};

/// Default upper bound on the cochain degree `n` of `δⁿ`.
pub const DEFAULT_MAX_DEGREE: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    field: FieldSpec,
    acting_dim: usize,
    coeff_dim: usize,
    degree: usize,
    values: Vec<Scalar>,
}

fn tuple_count(g: usize, n: usize) -> usize {
    g.pow(n as u32)
}

fn tuple_index(tuple: &[usize], g: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * g + x)
}

fn tuple_at(mut index: usize, g: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = index % g;
        index /= g;
    }
    out
}

impl Cochain {
    pub fn zero(rep: &Representation, degree: usize) -> Self {
        let field = rep.algebra().field();
        let (g, h) = (rep.algebra().dim(), rep.dim());
        Cochain {
            field,
            acting_dim: g,
            coeff_dim: h,
            degree,
            values: vec![field.zero(); h * tuple_count(g, degree)],
        }
    }

    pub fn from_flat(rep: &Representation, degree: usize, values: Vector) -> Result<Self> {
        let mut c = Cochain::zero(rep, degree);
        if values.len() != c.values.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for a degree-{degree} cochain with {} entries",
                values.len(),
                c.values.len()
            )));
        }
        if !values.iter().all(|s| c.field.contains(s)) {
            return Err(Error::FieldMismatch);
        }
        c.values = values;
        Ok(c)
    }

    /// Builds a cochain from its value on every basis tuple.
    pub fn from_fn(rep: &Representation, degree: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Result<Self> {
        let mut c = Cochain::zero(rep, degree);
        for t in 0..c.tuple_count() {
            let tuple = tuple_at(t, c.acting_dim, degree);
            c.set(&tuple, f(&tuple))?;
        }
        Ok(c)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn acting_dim(&self) -> usize {
        self.acting_dim
    }

    pub fn coeff_dim(&self) -> usize {
        self.coeff_dim
    }

    pub fn tuple_count(&self) -> usize {
        tuple_count(self.acting_dim, self.degree)
    }

    /// All basis tuples in storage order.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.tuple_count()).map(|t| tuple_at(t, self.acting_dim, self.degree))
    }

    pub fn flat(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, tuple: &[usize]) -> &[Scalar] {
        assert_eq!(tuple.len(), self.degree, "tuple length must equal the degree");
        let start = tuple_index(tuple, self.acting_dim) * self.coeff_dim;
        &self.values[start..start + self.coeff_dim]
    }

    pub fn set(&mut self, tuple: &[usize], value: Vector) -> Result<()> {
        if tuple.len() != self.degree || tuple.iter().any(|&x| x >= self.acting_dim) {
            return Err(Error::DimensionMismatch(format!(
                "tuple {tuple:?} for a degree-{} cochain on a {}-dimensional algebra",
                self.degree, self.acting_dim
            )));
        }
        if value.len() != self.coeff_dim {
            return Err(Error::DimensionMismatch(format!(
                "value of length {}, coefficients have dimension {}",
                value.len(),
                self.coeff_dim
            )));
        }
        if !value.iter().all(|s| self.field.contains(s)) {
            return Err(Error::FieldMismatch);
        }
        let start = tuple_index(tuple, self.acting_dim) * self.coeff_dim;
        self.values[start..start + self.coeff_dim].clone_from_slice(&value);
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.values)
    }

    pub fn scaled(&self, c: &Scalar) -> Cochain {
        Cochain {
            values: self.values.iter().map(|x| c * x).collect(),
            ..self.clone()
        }
    }

    /// True when this cochain lives in `CLⁿ(𝔤; 𝔥)` for the given representation.
    pub fn fits(&self, rep: &Representation) -> bool {
        self.field == rep.algebra().field() && self.acting_dim == rep.algebra().dim() && self.coeff_dim == rep.dim()
    }

    fn same_space(&self, other: &Cochain) -> bool {
        self.field == other.field
            && self.acting_dim == other.acting_dim
            && self.coeff_dim == other.coeff_dim
            && self.degree == other.degree
    }

    /// Reads a degree-1 cochain as the linear map `𝔤 → 𝔥`.
    pub fn as_linear_map(&self) -> Option<Matrix> {
        if self.degree != 1 {
            return None;
        }
        let cols: Vec<Vector> = (0..self.acting_dim).map(|i| self.value(&[i]).to_vec()).collect();
        Matrix::from_columns(self.field, self.coeff_dim, &cols).ok()
    }
}

impl Add for &Cochain {
    type Output = Cochain;

    /// Panics when the cochains live in different spaces.
    fn add(self, rhs: &Cochain) -> Cochain {
        assert!(self.same_space(rhs), "adding cochains from different spaces");
        Cochain {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(),
            ..self.clone()
        }
    }
}

impl Sub for &Cochain {
    type Output = Cochain;

    fn sub(self, rhs: &Cochain) -> Cochain {
        assert!(self.same_space(rhs), "subtracting cochains from different spaces");
        Cochain {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a - b).collect(),
            ..self.clone()
        }
    }
}

impl Neg for &Cochain {
    type Output = Cochain;

    fn neg(self) -> Cochain {
        Cochain {
            values: self.values.iter().map(|a| -a).collect(),
            ..self.clone()
        }
    }
}

/// Dimensions and canonical class representatives of `HLⁿ(𝔤; 𝔥)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
    pub representatives: Vec<Cochain>,
    coboundaries: Subspace,
    classes: Subspace,
}

impl CohomologyReport {
    /// Coordinates of the class of `f` in the basis `representatives`, or
    /// `None` when `f` is not a cocycle of this degree.
    pub fn class_coordinates(&self, f: &Cochain) -> Option<Vector> {
        if f.degree != self.degree || f.values.len() != self.dim_cochains {
            return None;
        }
        let reduced = self.coboundaries.reduce(&f.values);
        self.classes.coordinates(&reduced)
    }

    pub fn coboundary_space(&self) -> &Subspace {
        &self.coboundaries
    }
}

/// The cochain complex of a validated representation.
#[derive(Clone, Debug)]
pub struct CochainComplex<'a> {
    rep: &'a Representation,
    max_degree: usize,
}

impl<'a> CochainComplex<'a> {
    /// Fails with [`Error::InvalidRepresentation`] unless all three module
    /// axioms hold.
    pub fn new(rep: &'a Representation) -> Result<Self> {
        rep.require_valid()?;
        Ok(CochainComplex {
            rep,
            max_degree: DEFAULT_MAX_DEGREE,
        })
    }

    pub fn with_max_degree(mut self, max_degree: usize) -> Self {
        self.max_degree = max_degree;
        self
    }

    pub fn representation(&self) -> &'a Representation {
        self.rep
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::DegreeTooLarge {
                degree: n,
                cap: self.max_degree,
            });
        }
        Ok(())
    }

    fn check_fits(&self, c: &Cochain) -> Result<()> {
        if !c.fits(self.rep) {
            return Err(Error::DimensionMismatch(format!(
                "cochain with values in dimension {} on a {}-dimensional algebra does not fit \
                 this representation",
                c.coeff_dim, c.acting_dim
            )));
        }
        Ok(())
    }

    /// `δⁿψ`, evaluated tuple by tuple from the defining formula.
    pub fn coboundary(&self, psi: &Cochain) -> Result<Cochain> {
        self.check_fits(psi)?;
        let n = psi.degree;
        self.check_degree(n)?;
        let alg = self.rep.algebra();
        let field = alg.field();
        let h = self.rep.dim();
        let mut out = Cochain::zero(self.rep, n + 1);
        for t in 0..out.tuple_count() {
            let x = tuple_at(t, alg.dim(), n + 1);
            let mut acc = vec![field.zero(); h];
            for i in 1..=n {
                let mut rest = x.clone();
                rest.remove(i - 1);
                let term = self.rep.left(x[i - 1]).mul_vec(psi.value(&rest))?;
                axpy(&mut acc, &sign(field, i - 1), &term);
            }
            let term = self.rep.right(x[n]).mul_vec(psi.value(&x[..n]))?;
            axpy(&mut acc, &sign(field, n + 1), &term);
            for i in 1..=n + 1 {
                for j in i + 1..=n + 1 {
                    let s = sign(field, i);
                    for (k, c) in alg.bracket_basis(x[i - 1], x[j - 1]).iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut inserted = x.clone();
                        inserted[j - 1] = k;
                        inserted.remove(i - 1);
                        axpy(&mut acc, &(&s * c), psi.value(&inserted));
                    }
                }
            }
            out.set(&x, acc)?;
        }
        Ok(out)
    }

    /// Matrix of `δⁿ : CLⁿ → CLⁿ⁺¹` in the flat cochain coordinates.
    pub fn coboundary_matrix(&self, n: usize) -> Result<Matrix> {
        self.check_degree(n)?;
        let alg = self.rep.algebra();
        let field = alg.field();
        let (g, h) = (alg.dim(), self.rep.dim());
        let mut m = Matrix::zeros(field, h * tuple_count(g, n + 1), h * tuple_count(g, n));
        // adds `coeff · A` into the h×h block at (row tuple, column tuple)
        let add_block = |m: &mut Matrix, row_t: usize, col_t: usize, coeff: &Scalar, block: Option<&Matrix>| {
            for a in 0..h {
                match block {
                    Some(b) => {
                        for c in 0..h {
                            let entry = b.get(a, c);
                            if !entry.is_zero() {
                                m.add_to(row_t * h + a, col_t * h + c, &(coeff * entry));
                            }
                        }
                    }
                    None => m.add_to(row_t * h + a, col_t * h + a, coeff),
                }
            }
        };
        for row_t in 0..tuple_count(g, n + 1) {
            let x = tuple_at(row_t, g, n + 1);
            for i in 1..=n {
                let mut rest = x.clone();
                rest.remove(i - 1);
                add_block(
                    &mut m,
                    row_t,
                    tuple_index(&rest, g),
                    &sign(field, i - 1),
                    Some(self.rep.left(x[i - 1])),
                );
            }
            add_block(
                &mut m,
                row_t,
                tuple_index(&x[..n], g),
                &sign(field, n + 1),
                Some(self.rep.right(x[n])),
            );
            for i in 1..=n + 1 {
                for j in i + 1..=n + 1 {
                    for (k, c) in alg.bracket_basis(x[i - 1], x[j - 1]).iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut inserted = x.clone();
                        inserted[j - 1] = k;
                        inserted.remove(i - 1);
                        add_block(&mut m, row_t, tuple_index(&inserted, g), &(&sign(field, i) * c), None);
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn is_cocycle(&self, f: &Cochain) -> Result<bool> {
        Ok(self.coboundary(f)?.is_zero())
    }

    /// `Err(NotACocycle)` naming the first tuple where `δf` is nonzero.
    pub fn require_cocycle(&self, f: &Cochain) -> Result<()> {
        let df = self.coboundary(f)?;
        for tuple in df.tuples() {
            let v = df.value(&tuple);
            if !is_zero_vector(v) {
                return Err(Error::NotACocycle(Witness {
                    indices: tuple,
                    residual: v.to_vec(),
                }));
            }
        }
        Ok(())
    }

    /// A cochain `ψ` with `δψ = f`, or `None` when `f` is not a coboundary.
    pub fn is_coboundary(&self, f: &Cochain) -> Result<Option<Cochain>> {
        self.check_fits(f)?;
        if f.degree == 0 {
            return Err(Error::InvalidDegree(
                "degree-0 cochains have no coboundary preimage".into(),
            ));
        }
        let m = self.coboundary_matrix(f.degree - 1)?;
        match m.solve(&f.values)? {
            Some(x) => Ok(Some(Cochain::from_flat(self.rep, f.degree - 1, x)?)),
            None => Ok(None),
        }
    }

    /// `ZLⁿ` as a canonical subspace of the flat cochain space.
    pub fn cocycle_space(&self, n: usize) -> Result<Subspace> {
        Ok(self.coboundary_matrix(n)?.kernel())
    }

    /// `BLⁿ` as a canonical subspace of the flat cochain space.
    pub fn coboundary_space(&self, n: usize) -> Result<Subspace> {
        if n == 0 {
            let field = self.rep.algebra().field();
            return Ok(Subspace::zero(field, self.rep.dim()));
        }
        Ok(self.coboundary_matrix(n - 1)?.image())
    }

    pub fn cohomology(&self, n: usize) -> Result<CohomologyReport> {
        let field = self.rep.algebra().field();
        let cocycles = self.cocycle_space(n)?;
        let coboundaries = self.coboundary_space(n)?;
        let reduced = cocycles.basis().iter().map(|z| coboundaries.reduce(z)).collect();
        let classes = Subspace::from_spanning(field, cocycles.ambient_dim(), reduced);
        let representatives = classes
            .basis()
            .iter()
            .map(|v| Cochain::from_flat(self.rep, n, v.clone()))
            .collect::<Result<Vec<_>>>()?;
        debug_assert_eq!(classes.dim() + coboundaries.dim(), cocycles.dim());
        Ok(CohomologyReport {
            degree: n,
            dim_cochains: cocycles.ambient_dim(),
            dim_cocycles: cocycles.dim(),
            dim_coboundaries: coboundaries.dim(),
            dim_cohomology: classes.dim(),
            representatives,
            coboundaries,
            classes,
        })
    }

    /// A witness `ψ` with `δψ = f − f2` when the two cocycles are cohomologous.
    pub fn cohomologous(&self, f: &Cochain, f2: &Cochain) -> Result<Option<Cochain>> {
        self.check_fits(f)?;
        self.check_fits(f2)?;
        if f.degree != f2.degree {
            return Err(Error::DimensionMismatch(format!(
                "cochains of degree {} and {}",
                f.degree, f2.degree
            )));
        }
        self.require_cocycle(f)?;
        self.require_cocycle(f2)?;
        self.is_coboundary(&(f - f2))
    }
}

pub fn coboundary(rep: &Representation, psi: &Cochain) -> Result<Cochain> {
    CochainComplex::new(rep)?.coboundary(psi)
}

pub fn coboundary_matrix(rep: &Representation, n: usize) -> Result<Matrix> {
    CochainComplex::new(rep)?.coboundary_matrix(n)
}

pub fn is_cocycle(rep: &Representation, f: &Cochain) -> Result<bool> {
    CochainComplex::new(rep)?.is_cocycle(f)
}

pub fn is_coboundary(rep: &Representation, f: &Cochain) -> Result<Option<Cochain>> {
    CochainComplex::new(rep)?.is_coboundary(f)
}

pub fn cohomology(rep: &Representation, n: usize) -> Result<CohomologyReport> {
    CochainComplex::new(rep)?.cohomology(n)
}

pub fn cohomologous(rep: &Representation, f: &Cochain, f2: &Cochain) -> Result<Option<Cochain>> {
    CochainComplex::new(rep)?.cohomologous(f, f2)
}
