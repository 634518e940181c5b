//! Finite-dimensional algebras given by structure constants, optionally with a
//! quiver presentation or at least a complete set of primitive idempotents.

mod modules;
mod quiver;
mod structure;

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::exactla::{kronecker, Field, Matrix, Subspace};

pub use modules::{
    dual_right_regular, duality_d, indec_injectives, indec_projectives, is_frobenius, is_selfinjective, regular_module,
    simple_modules,
};
pub use quiver::{path_algebra_quotient, QuiverArrow, QuiverPresentation, RelationTerm};
pub use structure::{Arrow, Word, WordBasis};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("relations are not admissible: {0}")]
    NotAdmissible(String),
    #[error("the quotient is infinite-dimensional")]
    InfiniteDimensional,
    #[error("malformed structure constants: {0}")]
    Shape(String),
    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("the unit is not a two-sided identity")]
    BadUnit,
    #[error("invalid basic data: {0}")]
    BasicData(String),
    #[error("the algebra carries no vertex idempotents")]
    NotBasic,
    #[error("the trace-form radical needs characteristic 0 or p > {dim}, got p = {p}")]
    UnsupportedCharacteristic { p: u64, dim: usize },
    #[error("the trace-form radical is not nilpotent")]
    RadicalNotNilpotent,
}

/// A complete set of primitive orthogonal idempotents of a basic algebra
/// together with its Jacobson radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicData<F> {
    pub idempotents: Vec<Vec<F>>,
    pub vertex_labels: Vec<String>,
    pub radical: Subspace<F>,
}

/// A two-sided ideal, stored as a subspace of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<F> {
    pub space: Subspace<F>,
}

impl<F: Field> Ideal<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

#[derive(Debug)]
pub struct Algebra<F> {
    labels: Vec<String>,
    /// `left[i]` is the matrix of `x ↦ b_i·x`; its column j is `b_i·b_j`.
    left: Vec<Matrix<F>>,
    unit: Vec<F>,
    basic: Option<BasicData<F>>,
    presentation: Option<QuiverPresentation>,
    right: OnceLock<Vec<Matrix<F>>>,
    shape: OnceLock<Result<structure::Shape<F>, AlgebraError>>,
    opposite: OnceLock<Arc<Algebra<F>>>,
}

impl<F: Field> Clone for Algebra<F> {
    fn clone(&self) -> Self {
        Algebra {
            labels: self.labels.clone(),
            left: self.left.clone(),
            unit: self.unit.clone(),
            basic: self.basic.clone(),
            presentation: self.presentation.clone(),
            right: OnceLock::new(),
            shape: OnceLock::new(),
            opposite: OnceLock::new(),
        }
    }
}

impl<F: Field> Algebra<F> {
    /// Builds an algebra from its left multiplication matrices, checking
    /// associativity and the unit.
    pub fn from_left_multiplication(labels: Vec<String>, left: Vec<Matrix<F>>, unit: Vec<F>) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if left.len() != dim || unit.len() != dim || left.iter().any(|m| m.shape() != (dim, dim)) {
            return Err(AlgebraError::Shape(format!("expected {dim} matrices of size {dim}x{dim}")));
        }
        let alg = Algebra {
            labels,
            left,
            unit,
            basic: None,
            presentation: None,
            right: OnceLock::new(),
            shape: OnceLock::new(),
            opposite: OnceLock::new(),
        };
        alg.check_axioms()?;
        Ok(alg)
    }

    /// `consts[i][j]` is the coordinate vector of `b_i·b_j`.
    pub fn from_structure_constants(labels: Vec<String>, consts: &[Vec<Vec<F>>], unit: Vec<F>) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if consts.len() != dim || consts.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim)) {
            return Err(AlgebraError::Shape(format!("expected a {dim}x{dim} table of vectors of length {dim}")));
        }
        let left = consts.iter().map(|row| Matrix::from_columns(row, dim)).collect();
        Self::from_left_multiplication(labels, left, unit)
    }

    fn check_axioms(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        let u = self.element_left_matrix(&self.unit);
        if !u.is_identity() {
            return Err(AlgebraError::BadUnit);
        }
        for j in 0..n {
            if self.mul(&self.basis_vector(j), &self.unit) != self.basis_vector(j) {
                return Err(AlgebraError::BadUnit);
            }
        }
        // L_i L_j = L_{b_i b_j}
        for i in 0..n {
            for j in 0..n {
                let lhs = self.left[i].mul(&self.left[j]);
                let rhs = self.element_left_matrix(&self.left[i].column(j));
                if lhs != rhs {
                    let k = (0..n).find(|&k| lhs.column(k) != rhs.column(k)).unwrap_or(0);
                    return Err(AlgebraError::NotAssociative(i, j, k));
                }
            }
        }
        Ok(())
    }

    /// Attaches and validates a complete set of primitive orthogonal idempotents
    /// and the radical, making the algebra usable as a basic algebra.
    pub fn with_basic_data(mut self, data: BasicData<F>) -> Result<Self, AlgebraError> {
        structure::validate_basic(&self, &data)?;
        self.basic = Some(data);
        self.shape = OnceLock::new();
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn presentation(&self) -> Option<&QuiverPresentation> {
        self.presentation.as_ref()
    }

    pub fn basic_data(&self) -> Option<&BasicData<F>> {
        self.basic.as_ref()
    }

    pub fn is_basic(&self) -> bool {
        self.basic.is_some()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    pub fn left_mult(&self, i: usize) -> &Matrix<F> {
        &self.left[i]
    }

    pub fn left_mults(&self) -> &[Matrix<F>] {
        &self.left
    }

    /// `right_mult(j)` is the matrix of `x ↦ x·b_j`.
    pub fn right_mult(&self, j: usize) -> &Matrix<F> {
        &self.right_mults()[j]
    }

    pub fn right_mults(&self) -> &[Matrix<F>] {
        self.right.get_or_init(|| {
            let n = self.dim();
            (0..n).map(|j| Matrix::from_fn(n, n, |k, i| self.left[i][(k, j)].clone())).collect()
        })
    }

    /// Coordinates of `b_i·b_j`.
    pub fn structure_constant(&self, i: usize, j: usize) -> Vec<F> {
        self.left[i].column(j)
    }

    pub fn element_left_matrix(&self, x: &[F]) -> Matrix<F> {
        combine(&self.left, x, self.dim())
    }

    pub fn element_right_matrix(&self, x: &[F]) -> Matrix<F> {
        combine(self.right_mults(), x, self.dim())
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.element_left_matrix(x).mul_vec(y)
    }

    /// Equal structure constants, basis labels aside.
    pub fn same_as(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || (self.left == other.left && self.unit == other.unit)
    }

    /// The opposite algebra on the same basis; computed once per `Arc`.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        self.opposite
            .get_or_init(|| {
                let right = self.right_mults().to_vec();
                Arc::new(Algebra {
                    labels: self.labels.clone(),
                    left: right,
                    unit: self.unit.clone(),
                    basic: self.basic.clone(),
                    presentation: None,
                    right: OnceLock::new(),
                    shape: OnceLock::new(),
                    opposite: OnceLock::new(),
                })
            })
            .clone()
    }

    /// The Jacobson radical.
    pub fn radical(&self) -> Result<Ideal<F>, AlgebraError> {
        if let Some(b) = &self.basic {
            return Ok(Ideal { space: b.radical.clone() });
        }
        structure::trace_form_radical(self).map(|space| Ideal { space })
    }

    pub fn vertex_idempotents(&self) -> Result<&[Vec<F>], AlgebraError> {
        self.basic.as_ref().map(|b| b.idempotents.as_slice()).ok_or(AlgebraError::NotBasic)
    }

    pub fn vertex_labels(&self) -> Result<&[String], AlgebraError> {
        self.basic.as_ref().map(|b| b.vertex_labels.as_slice()).ok_or(AlgebraError::NotBasic)
    }

    pub fn vertex_count(&self) -> usize {
        self.basic.as_ref().map_or(0, |b| b.idempotents.len())
    }

    fn shape(&self) -> Result<&structure::Shape<F>, AlgebraError> {
        self.shape.get_or_init(|| structure::Shape::compute(self)).as_ref().map_err(Clone::clone)
    }

    /// Arrows: lifts of a basis of each `e_t (R/R²) e_s`.
    pub fn arrows(&self) -> Result<&[Arrow<F>], AlgebraError> {
        Ok(&self.shape()?.arrows)
    }

    /// Algebra elements expressed through words in idempotents and arrows.
    pub fn word_basis(&self) -> Result<&WordBasis<F>, AlgebraError> {
        Ok(&self.shape()?.words)
    }

    /// Elements generating the algebra: idempotents and arrows for basic
    /// algebras, the whole basis otherwise.
    pub fn generators(&self) -> Vec<Vec<F>> {
        match self.shape() {
            Ok(s) => s.generators.clone(),
            Err(_) => (0..self.dim()).map(|i| self.basis_vector(i)).collect(),
        }
    }

    /// `A × B`, with basis `(a_i, 0)` then `(0, b_j)`.
    pub fn product(a: &Self, b: &Self) -> Result<Self, AlgebraError> {
        let (da, db) = (a.dim(), b.dim());
        let n = da + db;
        let mut left = Vec::with_capacity(n);
        for m in &a.left {
            left.push(Matrix::block_diag(&[m, &Matrix::zeros(db, db)]));
        }
        for m in &b.left {
            left.push(Matrix::block_diag(&[&Matrix::zeros(da, da), m]));
        }
        let labels = a.labels.iter().map(|l| format!("{l}@1")).chain(b.labels.iter().map(|l| format!("{l}@2"))).collect();
        let unit = a.unit.iter().chain(b.unit.iter()).cloned().collect();
        let alg = Self::from_left_multiplication(labels, left, unit)?;
        match (&a.basic, &b.basic) {
            (Some(ba), Some(bb)) => {
                let pad = |v: &[F], before: usize, after: usize| {
                    let mut w = vec![F::zero(); before];
                    w.extend_from_slice(v);
                    w.extend(std::iter::repeat_n(F::zero(), after));
                    w
                };
                let mut idempotents: Vec<Vec<F>> = ba.idempotents.iter().map(|e| pad(e, 0, db)).collect();
                idempotents.extend(bb.idempotents.iter().map(|e| pad(e, da, 0)));
                let mut rad: Vec<Vec<F>> = ba.radical.basis_vectors().iter().map(|r| pad(r, 0, db)).collect();
                rad.extend(bb.radical.basis_vectors().iter().map(|r| pad(r, da, 0)));
                let vertex_labels = ba
                    .vertex_labels
                    .iter()
                    .map(|l| format!("{l}@1"))
                    .chain(bb.vertex_labels.iter().map(|l| format!("{l}@2")))
                    .collect();
                alg.with_basic_data(BasicData { idempotents, vertex_labels, radical: Subspace::from_vectors(n, rad) })
            }
            _ => Ok(alg),
        }
    }

    /// `A ⊗ B`, with basis `a_i ⊗ b_j` at index `i·dim B + j`.
    pub fn tensor(a: &Self, b: &Self) -> Result<Self, AlgebraError> {
        let (da, db) = (a.dim(), b.dim());
        let mut left = Vec::with_capacity(da * db);
        let mut labels = Vec::with_capacity(da * db);
        for i in 0..da {
            for j in 0..db {
                left.push(kronecker(&a.left[i], &b.left[j]));
                labels.push(format!("{}#{}", a.labels[i], b.labels[j]));
            }
        }
        let unit = tensor_vec(&a.unit, &b.unit);
        let alg = Self::from_left_multiplication(labels, left, unit)?;
        match (&a.basic, &b.basic) {
            (Some(ba), Some(bb)) => {
                let mut idempotents = Vec::new();
                let mut vertex_labels = Vec::new();
                for (e, le) in ba.idempotents.iter().zip(&ba.vertex_labels) {
                    for (f, lf) in bb.idempotents.iter().zip(&bb.vertex_labels) {
                        idempotents.push(tensor_vec(e, f));
                        vertex_labels.push(format!("{le}#{lf}"));
                    }
                }
                let mut rad = Vec::new();
                for r in ba.radical.basis_vectors() {
                    for j in 0..db {
                        rad.push(tensor_vec(&r, &b.basis_vector(j)));
                    }
                }
                for i in 0..da {
                    for r in bb.radical.basis_vectors() {
                        rad.push(tensor_vec(&a.basis_vector(i), &r));
                    }
                }
                let radical = Subspace::from_vectors(da * db, rad);
                alg.with_basic_data(BasicData { idempotents, vertex_labels, radical })
            }
            _ => Ok(alg),
        }
    }

    /// `A ⊗ B^op`, whose left modules are `A`-`B`-bimodules.
    pub fn enveloping(a: &Arc<Self>, b: &Arc<Self>) -> Result<Self, AlgebraError> {
        Self::tensor(a, &b.opposite())
    }
}

pub(crate) fn tensor_vec<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a.clone() * b.clone());
        }
    }
    out
}

pub(crate) fn combine<F: Field>(mats: &[Matrix<F>], x: &[F], n: usize) -> Matrix<F> {
    let mut out = Matrix::zeros(n, n);
    for (m, c) in mats.iter().zip(x) {
        if !c.is_zero() {
            out.add_scaled(c, m);
        }
    }
    out
}

#[cfg(test)]
mod tests;
