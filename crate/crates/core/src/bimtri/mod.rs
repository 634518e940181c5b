//! Bimodules `_A M_B`, the triangular algebra `Λ = [[A, M], [0, B]]`, and the
//! description of `Λ`-modules as triples `[X; Y]_φ`.

mod adjunction;
mod conditions;
mod triangular;

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{combine, Algebra, AlgebraError};
use crate::exactla::{kronecker, Field, Matrix, Subspace};
use crate::repmod::{Module, ModuleError};

pub use adjunction::{adjunction_eta, adjunction_eta_inverse, hom_a_m, hom_a_m_map, involution_phi, Adjunction, HomAM};
pub use conditions::{exchangeable_iso, is_left_projective, is_right_projective, satisfies_ip};
pub use triangular::{flat_to_triple, TriangularAlgebra, TripleHom, TripleModule};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BimoduleError {
    #[error("action matrices have the wrong shape: {0}")]
    Shape(String),
    #[error("left action is not an A-module structure")]
    NotLeftModule,
    #[error("right action is not a B-module structure")]
    NotRightModule,
    #[error("left and right actions do not commute")]
    NotCommuting,
    #[error("algebras do not match")]
    AlgebraMismatch,
    #[error("phi is not an A-map M⊗Y → X")]
    NotAMap,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// An `A`-`B`-bimodule. `right[j]` is the matrix of `m ↦ m·b_j`.
#[derive(Clone, Debug)]
pub struct Bimodule<F> {
    a: Arc<Algebra<F>>,
    b: Arc<Algebra<F>>,
    dim: usize,
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
}

impl<F: Field> Bimodule<F> {
    pub fn new(
        a: &Arc<Algebra<F>>,
        b: &Arc<Algebra<F>>,
        dim: usize,
        left: Vec<Matrix<F>>,
        right: Vec<Matrix<F>>,
    ) -> Result<Self, BimoduleError> {
        if left.len() != a.dim() || right.len() != b.dim() || left.iter().chain(&right).any(|m| m.shape() != (dim, dim)) {
            return Err(BimoduleError::Shape(format!(
                "expected {} left and {} right matrices of size {dim}x{dim}",
                a.dim(),
                b.dim()
            )));
        }
        let bm = Bimodule { a: a.clone(), b: b.clone(), dim, left, right };
        Module::new(a, dim, bm.left.clone()).map_err(|_| BimoduleError::NotLeftModule)?;
        Module::new(&b.opposite(), dim, bm.right.clone()).map_err(|_| BimoduleError::NotRightModule)?;
        for l in bm.left_generators() {
            for r in bm.right_generators() {
                if l.mul(&r) != r.mul(&l) {
                    return Err(BimoduleError::NotCommuting);
                }
            }
        }
        Ok(bm)
    }

    pub(crate) fn new_unchecked(
        a: &Arc<Algebra<F>>,
        b: &Arc<Algebra<F>>,
        dim: usize,
        left: Vec<Matrix<F>>,
        right: Vec<Matrix<F>>,
    ) -> Self {
        Bimodule { a: a.clone(), b: b.clone(), dim, left, right }
    }

    fn left_generators(&self) -> Vec<Matrix<F>> {
        self.a.generators().iter().map(|g| self.act_left(g)).collect()
    }

    fn right_generators(&self) -> Vec<Matrix<F>> {
        self.b.generators().iter().map(|g| self.act_right(g)).collect()
    }

    /// `_A A_A`.
    pub fn regular(a: &Arc<Algebra<F>>) -> Self {
        Self::new_unchecked(a, a, a.dim(), a.left_mults().to_vec(), a.right_mults().to_vec())
    }

    pub fn zero(a: &Arc<Algebra<F>>, b: &Arc<Algebra<F>>) -> Self {
        Self::new_unchecked(a, b, 0, vec![Matrix::zeros(0, 0); a.dim()], vec![Matrix::zeros(0, 0); b.dim()])
    }

    /// `A` as an `A`-`B`-bimodule, `B` acting on the right through an algebra
    /// map `B → A` given by the images of the basis of `B`.
    pub fn regular_via(a: &Arc<Algebra<F>>, b: &Arc<Algebra<F>>, images: &[Vec<F>]) -> Result<Self, BimoduleError> {
        if images.len() != b.dim() || images.iter().any(|v| v.len() != a.dim()) {
            return Err(BimoduleError::Shape("one image in A per basis element of B".into()));
        }
        let right = images.iter().map(|v| a.element_right_matrix(v)).collect();
        Self::new(a, b, a.dim(), a.left_mults().to_vec(), right)
    }

    /// A left `A`-module as an `A`-`k`-bimodule, `k` being a one-dimensional algebra.
    pub fn over_field(x: &Module<F>, k: &Arc<Algebra<F>>) -> Result<Self, BimoduleError> {
        if k.dim() != 1 {
            return Err(BimoduleError::Shape("the right algebra must be the ground field".into()));
        }
        let right = vec![Matrix::identity(x.dim()).scale(&k.unit()[0])];
        Ok(Self::new_unchecked(x.algebra(), k, x.dim(), x.actions().to_vec(), right))
    }

    /// `D(M)`, a `B`-`A`-bimodule.
    pub fn dual(&self) -> Self {
        Self::new_unchecked(
            &self.b,
            &self.a,
            self.dim,
            self.right.iter().map(Matrix::transpose).collect(),
            self.left.iter().map(Matrix::transpose).collect(),
        )
    }

    /// `M` as a `B^op`-`A^op`-bimodule.
    pub fn swap(&self) -> Self {
        Self::new_unchecked(&self.b.opposite(), &self.a.opposite(), self.dim, self.right.clone(), self.left.clone())
    }

    pub fn left_algebra(&self) -> &Arc<Algebra<F>> {
        &self.a
    }

    pub fn right_algebra(&self) -> &Arc<Algebra<F>> {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_action(&self, i: usize) -> &Matrix<F> {
        &self.left[i]
    }

    pub fn right_action(&self, j: usize) -> &Matrix<F> {
        &self.right[j]
    }

    pub fn left_actions(&self) -> &[Matrix<F>] {
        &self.left
    }

    pub fn right_actions(&self) -> &[Matrix<F>] {
        &self.right
    }

    pub fn act_left(&self, x: &[F]) -> Matrix<F> {
        combine(&self.left, x, self.dim)
    }

    pub fn act_right(&self, y: &[F]) -> Matrix<F> {
        combine(&self.right, y, self.dim)
    }

    /// `_A M`.
    pub fn left_module(&self) -> Module<F> {
        Module::new_unchecked(&self.a, self.dim, self.left.clone())
    }

    /// `M_B` as a left `B^op`-module.
    pub fn right_module(&self) -> Module<F> {
        Module::new_unchecked(&self.b.opposite(), self.dim, self.right.clone())
    }

    /// `M` as a left module over `env`, which must be `A ⊗ B^op`.
    pub fn enveloping_module(&self, env: &Arc<Algebra<F>>) -> Result<Module<F>, BimoduleError> {
        if env.dim() != self.a.dim() * self.b.dim() {
            return Err(BimoduleError::AlgebraMismatch);
        }
        let mut action = Vec::with_capacity(env.dim());
        for l in &self.left {
            for r in &self.right {
                action.push(l.mul(r));
            }
        }
        Ok(Module::new(env, self.dim, action)?)
    }
}

/// Coordinates of a balanced tensor product `N ⊗_B Y` as a quotient of the
/// plain tensor space, basis index `i·dim Y + j` for `n_i ⊗ y_j`.
#[derive(Clone, Debug)]
pub struct TensorData<F> {
    pub dim: usize,
    pub left_dim: usize,
    pub right_dim: usize,
    /// `dim × (left_dim·right_dim)`: reduction modulo the balancing relations.
    pub proj: Matrix<F>,
    /// `(left_dim·right_dim) × dim`: the kept basis tensors.
    pub section: Matrix<F>,
}

impl<F: Field> TensorData<F> {
    /// Balancing over `B` from the generator actions on both factors: the
    /// right action on `N` and the left action on `Y`.
    pub fn new(left_dim: usize, right_dim: usize, n_right: &[Matrix<F>], y_left: &[Matrix<F>]) -> Self {
        let plain = left_dim * right_dim;
        let mut vectors = Vec::new();
        for (r, l) in n_right.iter().zip(y_left) {
            let rel = kronecker(r, &Matrix::identity(right_dim)).sub(&kronecker(&Matrix::identity(left_dim), l));
            vectors.extend(rel.column_vectors());
        }
        let w = Subspace::from_vectors(plain, vectors);
        let keep = w.complement_indices();
        let dim = keep.len();
        let proj = Matrix::from_columns(
            &(0..plain)
                .map(|c| {
                    let mut e = vec![F::zero(); plain];
                    e[c] = F::one();
                    let r = w.reduce(&e);
                    keep.iter().map(|&k| r[k].clone()).collect()
                })
                .collect::<Vec<_>>(),
            dim,
        );
        let section = Matrix::from_fn(plain, dim, |r, c| if r == keep[c] { F::one() } else { F::zero() });
        TensorData { dim, left_dim, right_dim, proj, section }
    }

    /// The operator induced by `s ⊗ t` acting on the plain tensor space.
    pub fn induced(&self, s: &Matrix<F>, t: &Matrix<F>) -> Matrix<F> {
        self.proj.mul(&kronecker(s, t)).mul(&self.section)
    }

    /// `1 ⊗ f` from `self` to `target`, for `f` compatible with the balancing.
    pub fn map_right(&self, target: &Self, f: &Matrix<F>) -> Matrix<F> {
        target.proj.mul(&kronecker(&Matrix::identity(self.left_dim), f)).mul(&self.section)
    }

    /// `f ⊗ 1` from `self` to `target`.
    pub fn map_left(&self, target: &Self, f: &Matrix<F>) -> Matrix<F> {
        target.proj.mul(&kronecker(f, &Matrix::identity(self.right_dim))).mul(&self.section)
    }

    /// Coordinates of the class of `n_i ⊗ y_j`.
    pub fn class_of(&self, i: usize, j: usize) -> Vec<F> {
        self.proj.column(i * self.right_dim + j)
    }
}

/// `M ⊗_B Y` as a left `A`-module.
pub fn tensor_over_b<F: Field>(m: &Bimodule<F>, y: &Module<F>) -> Result<(Module<F>, TensorData<F>), BimoduleError> {
    if !y.algebra().same_as(&m.b) {
        return Err(BimoduleError::AlgebraMismatch);
    }
    let gens = m.b.generators();
    let n_right: Vec<Matrix<F>> = gens.iter().map(|g| m.act_right(g)).collect();
    let y_left: Vec<Matrix<F>> = gens.iter().map(|g| y.act(g)).collect();
    let t = TensorData::new(m.dim, y.dim(), &n_right, &y_left);
    let id = Matrix::identity(y.dim());
    let action = m.left.iter().map(|l| t.induced(l, &id)).collect();
    Ok((Module::new_unchecked(&m.a, t.dim, action), t))
}

/// `N ⊗_B M` for an `A`-`B`-bimodule `N` and a `B`-`C`-bimodule `M`.
pub fn tensor_bimodules<F: Field>(n: &Bimodule<F>, m: &Bimodule<F>) -> Result<(Bimodule<F>, TensorData<F>), BimoduleError> {
    if !n.b.same_as(&m.a) {
        return Err(BimoduleError::AlgebraMismatch);
    }
    let gens = n.b.generators();
    let n_right: Vec<Matrix<F>> = gens.iter().map(|g| n.act_right(g)).collect();
    let m_left: Vec<Matrix<F>> = gens.iter().map(|g| m.act_left(g)).collect();
    let t = TensorData::new(n.dim, m.dim, &n_right, &m_left);
    let (idn, idm) = (Matrix::identity(n.dim), Matrix::identity(m.dim));
    let left = n.left.iter().map(|l| t.induced(l, &idm)).collect();
    let right = m.right.iter().map(|r| t.induced(&idn, r)).collect();
    Ok((Bimodule::new_unchecked(&n.a, &m.b, t.dim, left, right), t))
}
