//! Finite-dimensional left modules, their morphisms, and homological tools.

mod decompose;
mod enumerate;
mod hom;

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::algebra::{combine, Algebra, AlgebraError};
use crate::exactla::{Coordinates, Field, Matrix, Subspace};

pub use decompose::{decompose, is_indecomposable, is_isomorphic, Decomposition, Summand};
pub use enumerate::{enumerate_indecomposables, enumerate_with_dim_vector, DEFAULT_CEILING};
pub use hom::{
    ext_dim, ext_space, hom_basis, hom_space, injective_envelope, is_injective, is_projective, projective_cover,
    radical_submodule, socle, syzygy, top, ExtSpace,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("action matrices have the wrong shape: {0}")]
    Shape(String),
    #[error("the action is not compatible with multiplication (generator {generator}, basis element {basis})")]
    NotAModule { generator: usize, basis: usize },
    #[error("the unit does not act as the identity")]
    UnitAction,
    #[error("the matrix is not a module homomorphism")]
    NotAHomomorphism,
    #[error("operation needs a prime field")]
    UnsupportedField,
    #[error("dimension bound {bound} exceeds the ceiling {ceiling}")]
    BoundTooLarge { bound: usize, ceiling: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Basis adapted to the vertex decomposition `x = ⊕ e_v·x`.
#[derive(Debug)]
pub(crate) struct VertexForm<F> {
    pub dims: Vec<usize>,
    pub offsets: Vec<usize>,
    /// Columns: the adapted basis in original coordinates.
    pub basis: Matrix<F>,
    pub inverse: Matrix<F>,
    /// Per arrow `s → t`, the block `e_t·x ← e_s·x` in adapted coordinates.
    pub arrows: Vec<Matrix<F>>,
}

#[derive(Debug)]
struct Inner<F> {
    action: Vec<Matrix<F>>,
    vertex: OnceLock<Option<VertexForm<F>>>,
}

/// A left module: one `dim × dim` action matrix per algebra basis element.
#[derive(Clone, Debug)]
pub struct Module<F> {
    alg: Arc<Algebra<F>>,
    dim: usize,
    inner: Arc<Inner<F>>,
}

impl<F: Field> PartialEq for Module<F> {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.inner.action == other.inner.action
    }
}

impl<F: Field> Module<F> {
    /// Checks the unit and compatibility with multiplication.
    pub fn new(alg: &Arc<Algebra<F>>, dim: usize, action: Vec<Matrix<F>>) -> Result<Self, ModuleError> {
        if action.len() != alg.dim() || action.iter().any(|m| m.shape() != (dim, dim)) {
            return Err(ModuleError::Shape(format!("expected {} matrices of size {dim}x{dim}", alg.dim())));
        }
        let m = Module { alg: alg.clone(), dim, inner: Arc::new(Inner { action, vertex: OnceLock::new() }) };
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(alg: &Arc<Algebra<F>>, dim: usize, action: Vec<Matrix<F>>) -> Self {
        let m = Module { alg: alg.clone(), dim, inner: Arc::new(Inner { action, vertex: OnceLock::new() }) };
        debug_assert!(m.check().is_ok(), "internally built module violates the module axioms");
        m
    }

    /// Verifies `ρ(1) = 1` and `ρ(g·b_j) = ρ(g)ρ(b_j)` for generators `g`, which
    /// implies multiplicativity since the generators generate the algebra.
    pub fn check(&self) -> Result<(), ModuleError> {
        if !self.act(self.alg.unit()).is_identity() {
            return Err(ModuleError::UnitAction);
        }
        for (gi, g) in self.alg.generators().iter().enumerate() {
            let xg = self.act(g);
            let lg = self.alg.element_left_matrix(g);
            for j in 0..self.alg.dim() {
                if xg.mul(&self.inner.action[j]) != self.act(&lg.column(j)) {
                    return Err(ModuleError::NotAModule { generator: gi, basis: j });
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Arc<Algebra<F>>) -> Self {
        Self::new_unchecked(alg, 0, vec![Matrix::zeros(0, 0); alg.dim()])
    }

    /// Builds a module from a representation of the arrows: `dims[v] = dim e_v·x`
    /// and one `dims[t] × dims[s]` matrix per arrow `s → t`.
    pub fn from_representation(alg: &Arc<Algebra<F>>, dims: &[usize], arrows: &[Matrix<F>]) -> Result<Self, ModuleError> {
        let shape = alg.arrows()?;
        let nv = alg.vertex_count();
        if dims.len() != nv || arrows.len() != shape.len() {
            return Err(ModuleError::Shape(format!("expected {nv} vertex dimensions and {} arrow matrices", shape.len())));
        }
        for (a, m) in shape.iter().zip(arrows) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(ModuleError::Shape(format!(
                    "arrow matrix should be {}x{}, got {}x{}",
                    dims[a.target],
                    dims[a.source],
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        let (action, word_actions, arrow_actions) = representation_action(alg, dims, arrows)?;
        let dim: usize = dims.iter().sum();
        // ρ(a·w) = ρ(a)ρ(w) on arrows and basis words; idempotents hold by construction
        let coords = word_coordinates(alg)?;
        for (ai, a) in shape.iter().enumerate() {
            let la = alg.element_left_matrix(&a.element);
            for (wi, wv) in coords.iter().enumerate() {
                let lhs = arrow_actions[ai].mul(&word_actions[wi]);
                if lhs != combine(&action, &la.mul_vec(wv), dim) {
                    return Err(ModuleError::NotAModule { generator: nv + ai, basis: wi });
                }
            }
        }
        let m = Self::new_unchecked(alg, dim, action);
        Ok(m)
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self, i: usize) -> &Matrix<F> {
        &self.inner.action[i]
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.inner.action
    }

    /// The action of an arbitrary algebra element.
    pub fn act(&self, x: &[F]) -> Matrix<F> {
        combine(&self.inner.action, x, self.dim)
    }

    pub fn generator_actions(&self) -> Vec<Matrix<F>> {
        self.alg.generators().iter().map(|g| self.act(g)).collect()
    }

    pub(crate) fn vertex_form(&self) -> Option<&VertexForm<F>> {
        self.inner
            .vertex
            .get_or_init(|| {
                let es = self.alg.vertex_idempotents().ok()?;
                let arrows = self.alg.arrows().ok()?;
                let mut dims = Vec::new();
                let mut offsets = Vec::new();
                let mut cols = Vec::new();
                for e in es {
                    offsets.push(cols.len());
                    let img = self.act(e).image();
                    dims.push(img.dim());
                    cols.extend(img.basis_vectors());
                }
                let basis = Matrix::from_columns(&cols, self.dim);
                let inverse = basis.inverse().expect("vertex spaces span the module");
                let arrows = arrows
                    .iter()
                    .map(|a| {
                        let full = inverse.mul(&self.act(&a.element)).mul(&basis);
                        full.block(offsets[a.target], offsets[a.source], dims[a.target], dims[a.source])
                    })
                    .collect();
                Some(VertexForm { dims, offsets, basis, inverse, arrows })
            })
            .as_ref()
    }

    /// `dim e_v·x` for each vertex.
    pub fn dim_vector(&self) -> Result<Vec<usize>, ModuleError> {
        self.vertex_form().map(|v| v.dims.clone()).ok_or(ModuleError::Algebra(AlgebraError::NotBasic))
    }

    /// Arrow matrices in the vertex-adapted basis.
    pub fn representation(&self) -> Result<(Vec<usize>, Vec<Matrix<F>>), ModuleError> {
        self.vertex_form()
            .map(|v| (v.dims.clone(), v.arrows.clone()))
            .ok_or(ModuleError::Algebra(AlgebraError::NotBasic))
    }

    /// The same module viewed over a structurally identical algebra.
    pub fn retag(&self, alg: &Arc<Algebra<F>>) -> Result<Self, ModuleError> {
        if !self.alg.same_as(alg) {
            return Err(ModuleError::AlgebraMismatch);
        }
        Ok(Module { alg: alg.clone(), dim: self.dim, inner: self.inner.clone() })
    }

    pub fn same_algebra(&self, other: &Self) -> Result<(), ModuleError> {
        if self.alg.same_as(&other.alg) {
            Ok(())
        } else {
            Err(ModuleError::AlgebraMismatch)
        }
    }

    pub fn is_hom_to(&self, target: &Self, f: &Matrix<F>) -> bool {
        f.shape() == (target.dim, self.dim)
            && self.alg.generators().iter().all(|g| f.mul(&self.act(g)) == target.act(g).mul(f))
    }

    pub fn direct_sum(parts: &[&Self]) -> Result<Self, ModuleError> {
        let first = parts.first().ok_or_else(|| ModuleError::Shape("empty direct sum".into()))?;
        for p in parts {
            first.same_algebra(p)?;
        }
        let alg = &first.alg;
        let dim = parts.iter().map(|p| p.dim).sum();
        let action = (0..alg.dim())
            .map(|i| Matrix::block_diag(&parts.iter().map(|p| &p.inner.action[i]).collect::<Vec<_>>()))
            .collect();
        Ok(Self::new_unchecked(alg, dim, action))
    }

    /// `x^n`.
    pub fn power(&self, n: usize) -> Self {
        if n == 0 {
            return Self::zero(&self.alg);
        }
        Self::direct_sum(&vec![self; n]).expect("same algebra")
    }

    /// The submodule spanned by the columns of `span` (which must be invariant),
    /// together with its inclusion.
    pub fn submodule(&self, span: &Subspace<F>) -> (Self, Matrix<F>) {
        let incl = span.basis_columns();
        let family = span.basis_vectors();
        let coords = Coordinates::new(self.dim, &family);
        let k = family.len();
        let action = self
            .inner
            .action
            .iter()
            .map(|x| {
                let cols: Vec<Vec<F>> = family
                    .iter()
                    .map(|v| coords.coords(&x.mul_vec(v)).expect("subspace is invariant"))
                    .collect();
                Matrix::from_columns(&cols, k)
            })
            .collect();
        (Self::new_unchecked(&self.alg, k, action), incl)
    }

    /// Smallest submodule containing the given vectors.
    pub fn generated_submodule(&self, vectors: &[Vec<F>]) -> Subspace<F> {
        let mut span = Subspace::from_vectors(self.dim, vectors.to_vec());
        let gens = self.generator_actions();
        loop {
            let mut more = span.basis_vectors();
            for g in &gens {
                more.extend(span.basis_vectors().iter().map(|v| g.mul_vec(v)));
            }
            let next = Subspace::from_vectors(self.dim, more);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    /// `x / W` for an invariant subspace `W`, with the projection.
    pub fn quotient(&self, sub: &Subspace<F>) -> (Self, Matrix<F>) {
        let keep = sub.complement_indices();
        let k = keep.len();
        let proj = Matrix::from_fn(k, self.dim, |r, c| {
            let mut e = vec![F::zero(); self.dim];
            e[c] = F::one();
            sub.reduce(&e)[keep[r]].clone()
        });
        let section = Matrix::from_fn(self.dim, k, |r, c| if r == keep[c] { F::one() } else { F::zero() });
        let action = self.inner.action.iter().map(|x| proj.mul(x).mul(&section)).collect();
        (Self::new_unchecked(&self.alg, k, action), proj)
    }

    /// Image of a homomorphism as a submodule of the target.
    pub fn image_of(target: &Self, f: &Matrix<F>) -> (Self, Matrix<F>) {
        target.submodule(&f.image())
    }

    /// Transport of structure along an invertible matrix `p`: the result has action `p·X·p⁻¹`.
    pub fn change_basis(&self, p: &Matrix<F>) -> Self {
        let inv = p.inverse().expect("change of basis must be invertible");
        let action = self.inner.action.iter().map(|x| p.mul(x).mul(&inv)).collect();
        Self::new_unchecked(&self.alg, self.dim, action)
    }
}

/// A module homomorphism; `matrix` is `target.dim × source.dim`.
#[derive(Clone, Debug)]
pub struct ModuleHom<F> {
    pub source: Module<F>,
    pub target: Module<F>,
    pub matrix: Matrix<F>,
}

impl<F: Field> ModuleHom<F> {
    pub fn new(source: &Module<F>, target: &Module<F>, matrix: Matrix<F>) -> Result<Self, ModuleError> {
        source.same_algebra(target)?;
        if !source.is_hom_to(target, &matrix) {
            return Err(ModuleError::NotAHomomorphism);
        }
        Ok(ModuleHom { source: source.clone(), target: target.clone(), matrix })
    }

    pub(crate) fn new_unchecked(source: &Module<F>, target: &Module<F>, matrix: Matrix<F>) -> Self {
        debug_assert!(source.is_hom_to(target, &matrix));
        ModuleHom { source: source.clone(), target: target.clone(), matrix }
    }

    pub fn compose(&self, before: &Self) -> Self {
        ModuleHom::new_unchecked(&before.source, &self.target, self.matrix.mul(&before.matrix))
    }
}

/// Coordinate vectors (in the algebra basis) of the word basis.
fn word_coordinates<F: Field>(alg: &Algebra<F>) -> Result<Vec<Vec<F>>, AlgebraError> {
    let wb = alg.word_basis()?;
    let arrows = alg.arrows()?;
    let es = alg.vertex_idempotents()?;
    Ok(wb
        .words
        .iter()
        .map(|w| {
            let mut v = es[w.source].clone();
            for &a in w.arrows.iter().rev() {
                v = alg.mul(&arrows[a].element, &v);
            }
            v
        })
        .collect())
}

/// Actions of the algebra basis, of every word and of every arrow, from arrow matrices.
fn representation_action<F: Field>(
    alg: &Algebra<F>,
    dims: &[usize],
    arrows: &[Matrix<F>],
) -> Result<(Vec<Matrix<F>>, Vec<Matrix<F>>, Vec<Matrix<F>>), AlgebraError> {
    let wb = alg.word_basis()?;
    let shape = alg.arrows()?;
    let dim: usize = dims.iter().sum();
    let mut offsets = Vec::with_capacity(dims.len());
    let mut acc = 0;
    for d in dims {
        offsets.push(acc);
        acc += d;
    }
    let arrow_full: Vec<Matrix<F>> = shape
        .iter()
        .zip(arrows)
        .map(|(a, m)| {
            let mut full = Matrix::zeros(dim, dim);
            full.set_block(offsets[a.target], offsets[a.source], m);
            full
        })
        .collect();
    let word_actions: Vec<Matrix<F>> = wb
        .words
        .iter()
        .map(|w| {
            let mut m = Matrix::zeros(dim, dim);
            m.set_block(offsets[w.source], offsets[w.source], &Matrix::identity(dims[w.source]));
            for &a in w.arrows.iter().rev() {
                m = arrow_full[a].mul(&m);
            }
            m
        })
        .collect();
    let action = wb
        .expansion
        .iter()
        .map(|terms| {
            let mut m = Matrix::zeros(dim, dim);
            for (w, c) in terms {
                m.add_scaled(c, &word_actions[*w]);
            }
            m
        })
        .collect();
    Ok((action, word_actions, arrow_full))
}
