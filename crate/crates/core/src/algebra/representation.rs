use std::collections::HashSet;

use super::presentation::MAX_WITNESSES;
use super::AlgebraPresentation;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// Which argument of the Leibniz identity lies in the module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `[m,[x,y]] = [[m,x],y] + [x,[m,y]]`, i.e. `R_[x,y] = R_y R_x + L_x R_y`.
    ModuleFirst,
    /// `[x,[m,y]] = [[x,m],y] + [m,[x,y]]`, i.e. `L_x R_y = R_y L_x + R_[x,y]`.
    ModuleMiddle,
    /// `[x,[y,m]] = [[x,y],m] + [y,[x,m]]`, i.e. `L_x L_y = L_[x,y] + L_y L_x`.
    ModuleLast,
}

impl Axiom {
    pub fn label(&self) -> &'static str {
        match self {
            Axiom::ModuleFirst => "MLL",
            Axiom::ModuleMiddle => "LML",
            Axiom::ModuleLast => "LLM",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationViolation {
    pub axiom: Axiom,
    pub pair: (usize, usize),
    /// Left-hand side minus right-hand side of the axiom, as an operator on the module.
    pub residual: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationReport {
    pub valid: bool,
    pub violations: Vec<RepresentationViolation>,
}

/// A Leibniz representation of `algebra`: a module with left actions
/// `L_i : m ↦ [e_i, m]` and right actions `R_i : m ↦ [m, e_i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: AlgebraPresentation,
    basis_names: Vec<String>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        algebra: AlgebraPresentation,
        basis_names: Vec<String>,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Result<Self> {
        let mut seen = HashSet::new();
        for name in &basis_names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateBasisName(name.clone()));
            }
        }
        let g = algebra.dim();
        let h = basis_names.len();
        if left.len() != g || right.len() != g {
            return Err(Error::DimensionMismatch(format!(
                "expected {g} left and right action matrices, got {} and {}",
                left.len(),
                right.len()
            )));
        }
        for m in left.iter().chain(&right) {
            if m.rows() != h || m.cols() != h {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix is {}x{}, module has dimension {h}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(Representation {
            algebra,
            basis_names,
            left,
            right,
        })
    }

    /// Both actions zero.
    pub fn trivial(algebra: &AlgebraPresentation, basis_names: Vec<String>) -> Result<Self> {
        let h = basis_names.len();
        let zero = Matrix::zeros(algebra.field(), h, h);
        let g = algebra.dim();
        Representation::new(algebra.clone(), basis_names, vec![zero.clone(); g], vec![zero; g])
    }

    /// The algebra acting on itself by left and right multiplication.
    pub fn self_representation(algebra: &AlgebraPresentation) -> Self {
        let g = algebra.dim();
        let left = (0..g).map(|i| algebra.left_multiplication(i)).collect();
        let right = (0..g).map(|i| algebra.right_multiplication(i)).collect();
        Representation::new(algebra.clone(), algebra.basis_names().to_vec(), left, right)
            .expect("shapes match by construction")
    }

    /// Left action as given, right action zero.
    pub fn left_module(algebra: &AlgebraPresentation, basis_names: Vec<String>, left: Vec<Matrix>) -> Result<Self> {
        let h = basis_names.len();
        let zero = Matrix::zeros(algebra.field(), h, h);
        let right = vec![zero; algebra.dim()];
        Representation::new(algebra.clone(), basis_names, left, right)
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn left(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    pub fn right(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_actions(&self) -> &[Matrix] {
        &self.right
    }

    /// Same action matrices and acting algebra; basis names are ignored.
    pub fn same_actions(&self, other: &Representation) -> bool {
        self.algebra == other.algebra && self.left == other.left && self.right == other.right
    }

    fn combination(&self, actions: &[Matrix], coeffs: &[Scalar]) -> Matrix {
        let h = self.dim();
        let mut out = Matrix::zeros(self.algebra.field(), h, h);
        for (c, m) in coeffs.iter().zip(actions) {
            if !c.is_zero() {
                out = out.add(&m.scaled(c)).expect("same shape");
            }
        }
        out
    }

    /// Verifies the three representation axioms on all basis pairs.
    pub fn check(&self) -> RepresentationReport {
        let g = self.algebra.dim();
        let mut violations = Vec::new();
        let mut valid = true;
        let mut record = |axiom, pair, residual: Matrix| {
            if !residual.is_zero() {
                valid = false;
                if violations.len() < MAX_WITNESSES {
                    violations.push(RepresentationViolation { axiom, pair, residual });
                }
            }
        };
        for i in 0..g {
            for j in 0..g {
                let bracket = self.algebra.bracket_basis(i, j);
                let l_bracket = self.combination(&self.left, bracket);
                let r_bracket = self.combination(&self.right, bracket);
                let (li, lj, rj, ri) = (&self.left[i], &self.left[j], &self.right[j], &self.right[i]);
                let mul = |a: &Matrix, b: &Matrix| a.mul(b).expect("square");

                let last = mul(li, lj).sub(&l_bracket).and_then(|m| m.sub(&mul(lj, li)));
                record(Axiom::ModuleLast, (i, j), last.expect("square"));

                let middle = mul(li, rj).sub(&mul(rj, li)).and_then(|m| m.sub(&r_bracket));
                record(Axiom::ModuleMiddle, (i, j), middle.expect("square"));

                let first = r_bracket.sub(&mul(rj, ri)).and_then(|m| m.sub(&mul(li, rj)));
                record(Axiom::ModuleFirst, (i, j), first.expect("square"));
            }
        }
        RepresentationReport { valid, violations }
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let report = self.check();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidRepresentation(format!(
                "{} axiom fails on basis pair {:?}",
                v.axiom.label(),
                v.pair
            ))),
        }
    }
}
