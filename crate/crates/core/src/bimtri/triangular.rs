use std::sync::Arc;

use crate::algebra::{indec_injectives, indec_projectives, regular_module, Algebra, BasicData};
use crate::exactla::{Field, Matrix, Subspace};
use crate::repmod::Module;

use super::adjunction::{hom_a_m, involution_phi};
use super::{tensor_over_b, Bimodule, BimoduleError, TensorData};

/// `Λ = [[A, M], [0, B]]` with flat basis `(A, M, B)`.
#[derive(Clone, Debug)]
pub struct TriangularAlgebra<F> {
    pub a: Arc<Algebra<F>>,
    pub m: Bimodule<F>,
    pub b: Arc<Algebra<F>>,
    pub flat: Arc<Algebra<F>>,
    pub e1: Vec<F>,
    pub e2: Vec<F>,
}

fn pad<F: Field>(v: &[F], before: usize, after: usize) -> Vec<F> {
    let mut w = vec![F::zero(); before];
    w.extend_from_slice(v);
    w.extend(std::iter::repeat_n(F::zero(), after));
    w
}

impl<F: Field> TriangularAlgebra<F> {
    /// Builds the flat algebra. Vertex data is inherited from `A` and `B` when
    /// both are basic, with radical `rad A ⊕ M ⊕ rad B`.
    pub fn new(a: &Arc<Algebra<F>>, m: &Bimodule<F>, b: &Arc<Algebra<F>>) -> Result<Self, BimoduleError> {
        if !m.a.same_as(a) || !m.b.same_as(b) {
            return Err(BimoduleError::AlgebraMismatch);
        }
        let (da, dm, db) = (a.dim(), m.dim, b.dim());
        let n = da + dm + db;
        let mut left = Vec::with_capacity(n);
        for i in 0..da {
            let mut l = Matrix::zeros(n, n);
            l.set_block(0, 0, a.left_mult(i));
            l.set_block(da, da, m.left_action(i));
            left.push(l);
        }
        for k in 0..dm {
            // (0, m_k, 0)·(a', m', b') = (0, m_k·b', 0)
            let mut l = Matrix::zeros(n, n);
            let block = Matrix::from_columns(&(0..db).map(|j| m.right_action(j).column(k)).collect::<Vec<_>>(), dm);
            l.set_block(da, da + dm, &block);
            left.push(l);
        }
        for j in 0..db {
            let mut l = Matrix::zeros(n, n);
            l.set_block(da + dm, da + dm, b.left_mult(j));
            left.push(l);
        }
        let labels = a
            .labels()
            .iter()
            .map(|l| format!("a:{l}"))
            .chain((0..dm).map(|k| format!("m{k}")))
            .chain(b.labels().iter().map(|l| format!("b:{l}")))
            .collect();
        let e1 = pad(a.unit(), 0, dm + db);
        let e2 = pad(b.unit(), da + dm, 0);
        let unit: Vec<F> = e1.iter().zip(&e2).map(|(x, y)| x.clone() + y.clone()).collect();
        let mut flat = Algebra::from_left_multiplication(labels, left, unit)?;
        if let (Some(ba), Some(bb)) = (a.basic_data(), b.basic_data()) {
            let mut idempotents: Vec<Vec<F>> = ba.idempotents.iter().map(|e| pad(e, 0, dm + db)).collect();
            idempotents.extend(bb.idempotents.iter().map(|e| pad(e, da + dm, 0)));
            let mut rad: Vec<Vec<F>> = ba.radical.basis_vectors().iter().map(|r| pad(r, 0, dm + db)).collect();
            rad.extend((0..dm).map(|k| {
                let mut v = vec![F::zero(); n];
                v[da + k] = F::one();
                v
            }));
            rad.extend(bb.radical.basis_vectors().iter().map(|r| pad(r, da + dm, 0)));
            let vertex_labels =
                ba.vertex_labels.iter().map(|l| format!("a:{l}")).chain(bb.vertex_labels.iter().map(|l| format!("b:{l}"))).collect();
            flat = flat.with_basic_data(BasicData { idempotents, vertex_labels, radical: Subspace::from_vectors(n, rad) })?;
        }
        Ok(TriangularAlgebra { a: a.clone(), m: m.clone(), b: b.clone(), flat: Arc::new(flat), e1, e2 })
    }

    /// `Λ' = [[B^op, M], [0, A^op]]`, whose left modules are the right `Λ`-modules.
    ///
    /// The flat basis of `Λ'` is `(B, M, A)`; see [`Self::opposite_permutation`].
    pub fn right_triangular(&self) -> Result<Self, BimoduleError> {
        Self::new(&self.b.opposite(), &self.m.swap(), &self.a.opposite())
    }

    /// `perm[i]` is the index in the flat basis of `Λ'` of the `i`-th flat basis
    /// element of `Λ`. With it `Λ^op ≅ Λ'` as algebras.
    pub fn opposite_permutation(&self) -> Vec<usize> {
        let (da, dm, db) = (self.a.dim(), self.m.dim, self.b.dim());
        (0..da).map(|i| db + dm + i).chain((0..dm).map(|k| db + k)).chain(0..db).collect()
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.a.dim(), self.m.dim, self.b.dim())
    }

    /// Embeds an element of `A`, `M` or `B` into the flat basis.
    pub fn embed_a(&self, x: &[F]) -> Vec<F> {
        pad(x, 0, self.m.dim + self.b.dim())
    }

    pub fn embed_m(&self, x: &[F]) -> Vec<F> {
        pad(x, self.a.dim(), self.b.dim())
    }

    pub fn embed_b(&self, x: &[F]) -> Vec<F> {
        pad(x, self.a.dim() + self.m.dim, 0)
    }

    /// Indecomposable projectives: `[Ae_i; 0]` then `[M ⊗ Be_j; Be_j]_Id`.
    pub fn projective_triples(self: &Arc<Self>) -> Result<Vec<TripleModule<F>>, BimoduleError> {
        let mut out = Vec::new();
        for (p, _) in indec_projectives(&self.a)? {
            let phi = Matrix::zeros(p.dim(), 0);
            out.push(TripleModule::new(self, p, Module::zero(&self.b), phi)?);
        }
        for (q, _) in indec_projectives(&self.b)? {
            out.push(TripleModule::induced_from_b(self, q)?);
        }
        Ok(out)
    }

    /// Indecomposable injectives: `[I; Hom_A(M, I)]` with the involution map,
    /// then `[0; J]`.
    pub fn injective_triples(self: &Arc<Self>) -> Result<Vec<TripleModule<F>>, BimoduleError> {
        let mut out = Vec::new();
        for i in indec_injectives(&self.a)? {
            out.push(TripleModule::coinduced_from_a(self, i)?);
        }
        for j in indec_injectives(&self.b)? {
            let phi = Matrix::zeros(0, self.m.dim * j.dim());
            out.push(TripleModule::new(self, Module::zero(&self.a), j, phi)?);
        }
        Ok(out)
    }

    /// `Λ` itself as a triple `[A ⊕ M; B]`.
    pub fn regular_triple(self: &Arc<Self>) -> Result<TripleModule<F>, BimoduleError> {
        Ok(flat_to_triple(self, &regular_module(&self.flat))?.0)
    }
}

/// A `Λ`-module `[X; Y]_φ` with `φ: M ⊗_B Y → X`.
#[derive(Clone, Debug)]
pub struct TripleModule<F> {
    pub lam: Arc<TriangularAlgebra<F>>,
    pub x: Module<F>,
    pub y: Module<F>,
    /// `dim X × dim (M ⊗_B Y)`.
    pub phi: Matrix<F>,
    pub tensor: Module<F>,
    pub tensor_data: TensorData<F>,
}

impl<F: Field> TripleModule<F> {
    /// `phi` may be given on the balanced tensor product or on the plain tensor
    /// space `M ⊗_k Y`, in which case it is restricted to the kept basis. When
    /// `X = 0` any `phi` is ignored.
    pub fn new(lam: &Arc<TriangularAlgebra<F>>, x: Module<F>, y: Module<F>, phi: Matrix<F>) -> Result<Self, BimoduleError> {
        if !x.algebra().same_as(&lam.a) || !y.algebra().same_as(&lam.b) {
            return Err(BimoduleError::AlgebraMismatch);
        }
        let (tensor, tensor_data) = tensor_over_b(&lam.m, &y)?;
        let phi = if x.dim() == 0 {
            Matrix::zeros(0, tensor_data.dim)
        } else if phi.shape() == (x.dim(), tensor_data.dim) {
            phi
        } else if phi.shape() == (x.dim(), lam.m.dim * y.dim()) {
            let plain = phi;
            let restricted = plain.mul(&tensor_data.section);
            if restricted.mul(&tensor_data.proj) != plain {
                return Err(BimoduleError::NotAMap);
            }
            restricted
        } else {
            return Err(BimoduleError::Shape(format!(
                "phi must be {}x{} (or {}x{} on the plain tensor space)",
                x.dim(),
                tensor_data.dim,
                x.dim(),
                lam.m.dim * y.dim()
            )));
        };
        if !tensor.is_hom_to(&x, &phi) {
            return Err(BimoduleError::NotAMap);
        }
        let x = x.retag(&lam.a)?;
        let y = y.retag(&lam.b)?;
        let tensor = tensor.retag(&lam.a)?;
        Ok(TripleModule { lam: lam.clone(), x, y, phi, tensor, tensor_data })
    }

    /// `[M ⊗_B Y; Y]_Id`.
    pub fn induced_from_b(lam: &Arc<TriangularAlgebra<F>>, y: Module<F>) -> Result<Self, BimoduleError> {
        let (t, data) = tensor_over_b(&lam.m, &y)?;
        TripleModule::new(lam, t, y, Matrix::identity(data.dim))
    }

    /// `[X; Hom_A(M, X)]` with the involution map.
    pub fn coinduced_from_a(lam: &Arc<TriangularAlgebra<F>>, x: Module<F>) -> Result<Self, BimoduleError> {
        let h = hom_a_m(&lam.m, &x)?;
        let phi = involution_phi(&lam.m, &x)?;
        TripleModule::new(lam, x, h.module, phi)
    }

    pub fn zero(lam: &Arc<TriangularAlgebra<F>>) -> Self {
        TripleModule::new(lam, Module::zero(&lam.a), Module::zero(&lam.b), Matrix::zeros(0, 0)).expect("zero triple")
    }

    pub fn dim(&self) -> usize {
        self.x.dim() + self.y.dim()
    }

    /// The action of `m_k` as a map `Y → X`.
    pub fn m_action(&self, k: usize) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.y.dim()).map(|j| self.phi.mul_vec(&self.tensor_data.class_of(k, j))).collect();
        Matrix::from_columns(&cols, self.x.dim())
    }

    /// The flat `Λ`-module with coordinates `(X, Y)`.
    pub fn to_flat(&self) -> Module<F> {
        let (dx, dy) = (self.x.dim(), self.y.dim());
        let n = dx + dy;
        let (da, dm, db) = self.lam.dims();
        let mut action = Vec::with_capacity(da + dm + db);
        for i in 0..da {
            let mut m = Matrix::zeros(n, n);
            m.set_block(0, 0, self.x.action(i));
            action.push(m);
        }
        for k in 0..dm {
            let mut m = Matrix::zeros(n, n);
            m.set_block(0, dx, &self.m_action(k));
            action.push(m);
        }
        for j in 0..db {
            let mut m = Matrix::zeros(n, n);
            m.set_block(dx, dx, self.y.action(j));
            action.push(m);
        }
        Module::new_unchecked(&self.lam.flat, n, action)
    }
}

/// Splits a flat `Λ`-module into `[e1 N; e2 N]_φ`. Also returns the basis
/// change `P` with `N·P = to_flat(result)`, i.e. columns of `P` are the chosen
/// bases of `e1 N` then `e2 N`.
pub fn flat_to_triple<F: Field>(
    lam: &Arc<TriangularAlgebra<F>>,
    n: &Module<F>,
) -> Result<(TripleModule<F>, Matrix<F>), BimoduleError> {
    if !n.algebra().same_as(&lam.flat) {
        return Err(BimoduleError::AlgebraMismatch);
    }
    let b1 = n.act(&lam.e1).image().basis_columns();
    let b2 = n.act(&lam.e2).image().basis_columns();
    let (dx, dy) = (b1.ncols(), b2.ncols());
    let p = Matrix::hstack(&[&b1, &b2]);
    let pinv = p.inverse().expect("e1 N ⊕ e2 N = N");
    let (da, dm, db) = lam.dims();
    let conj = |i: usize| pinv.mul(n.action(i)).mul(&p);
    let x = Module::new_unchecked(&lam.a, dx, (0..da).map(|i| conj(i).block(0, 0, dx, dx)).collect());
    let y = Module::new_unchecked(&lam.b, dy, (0..db).map(|j| conj(da + dm + j).block(dx, dx, dy, dy)).collect());
    let mut plain = Matrix::zeros(dx, dm * dy);
    for k in 0..dm {
        let block = conj(da + k).block(0, dx, dx, dy);
        plain.set_block(0, k * dy, &block);
    }
    Ok((TripleModule::new(lam, x, y, plain)?, p))
}

/// A `Λ`-map `(f1, f2)` between triples.
#[derive(Clone, Debug)]
pub struct TripleHom<F> {
    pub source: TripleModule<F>,
    pub target: TripleModule<F>,
    pub f1: Matrix<F>,
    pub f2: Matrix<F>,
}

impl<F: Field> TripleHom<F> {
    pub fn new(source: &TripleModule<F>, target: &TripleModule<F>, f1: Matrix<F>, f2: Matrix<F>) -> Result<Self, BimoduleError> {
        if f1.shape() != (target.x.dim(), source.x.dim()) || f2.shape() != (target.y.dim(), source.y.dim()) {
            return Err(BimoduleError::Shape("f1: X1 → X2 and f2: Y1 → Y2".into()));
        }
        if !source.x.is_hom_to(&target.x, &f1) || !source.y.is_hom_to(&target.y, &f2) {
            return Err(BimoduleError::NotAMap);
        }
        let one_f2 = source.tensor_data.map_right(&target.tensor_data, &f2);
        if f1.mul(&source.phi) != target.phi.mul(&one_f2) {
            return Err(BimoduleError::NotAMap);
        }
        Ok(TripleHom { source: source.clone(), target: target.clone(), f1, f2 })
    }

    /// The block-diagonal matrix of the map between flat modules.
    pub fn to_flat(&self) -> Matrix<F> {
        Matrix::block_diag(&[&self.f1, &self.f2])
    }

    /// Splits a map between `to_flat` modules, which is block diagonal since it
    /// commutes with `e1` and `e2`.
    pub fn from_flat(source: &TripleModule<F>, target: &TripleModule<F>, f: &Matrix<F>) -> Result<Self, BimoduleError> {
        let (sx, sy, tx, ty) = (source.x.dim(), source.y.dim(), target.x.dim(), target.y.dim());
        if f.shape() != (tx + ty, sx + sy) || !f.block(0, sx, tx, sy).is_zero() || !f.block(tx, 0, ty, sx).is_zero() {
            return Err(BimoduleError::NotAMap);
        }
        Self::new(source, target, f.block(0, 0, tx, sx), f.block(tx, sx, ty, sy))
    }
}
