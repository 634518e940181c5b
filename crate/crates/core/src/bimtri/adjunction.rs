use crate::exactla::{Coordinates, Field, Matrix};
use crate::repmod::{hom_basis, Module};

use super::{tensor_over_b, Bimodule, BimoduleError, TensorData};

/// `Hom_A(M, X)` as a left `B`-module via `(b·f)(m) = f(m·b)`.
#[derive(Clone, Debug)]
pub struct HomAM<F> {
    pub module: Module<F>,
    /// `dim X × dim M` matrices, one per basis vector of `module`.
    pub basis: Vec<Matrix<F>>,
    coords: Coordinates<F>,
}

impl<F: Field> HomAM<F> {
    /// Coordinates of an `A`-map `M → X`.
    pub fn coordinates(&self, f: &Matrix<F>) -> Option<Vec<F>> {
        self.coords.coords(&f.vectorize())
    }

    /// The `A`-map with the given coordinates.
    pub fn element(&self, v: &[F]) -> Matrix<F> {
        let (rows, cols) = self.basis.first().map_or((0, 0), Matrix::shape);
        let mut f = Matrix::zeros(rows, cols);
        for (b, c) in self.basis.iter().zip(v) {
            f.add_scaled(c, b);
        }
        f
    }
}

pub fn hom_a_m<F: Field>(m: &Bimodule<F>, x: &Module<F>) -> Result<HomAM<F>, BimoduleError> {
    if !x.algebra().same_as(&m.a) {
        return Err(BimoduleError::AlgebraMismatch);
    }
    let basis = hom_basis(&m.left_module(), &x.retag(&m.a)?)?;
    let coords = Coordinates::new(x.dim() * m.dim, &basis.iter().map(Matrix::vectorize).collect::<Vec<_>>());
    let action = m
        .right
        .iter()
        .map(|r| {
            let cols: Vec<Vec<F>> =
                basis.iter().map(|f| coords.coords(&f.mul(r).vectorize()).expect("f∘(-·b) is an A-map")).collect();
            Matrix::from_columns(&cols, basis.len())
        })
        .collect();
    let module = Module::new_unchecked(&m.b, basis.len(), action);
    Ok(HomAM { module, basis, coords })
}

/// `Hom_A(M, g)`: post-composition with an `A`-map `g: X → X'`.
pub fn hom_a_m_map<F: Field>(source: &HomAM<F>, target: &HomAM<F>, g: &Matrix<F>) -> Matrix<F> {
    let cols: Vec<Vec<F>> =
        source.basis.iter().map(|f| target.coordinates(&g.mul(f)).expect("g∘f is an A-map")).collect();
    Matrix::from_columns(&cols, target.basis.len())
}

/// The data for `η: Hom_A(M ⊗_B Y, X) → Hom_B(Y, Hom_A(M, X))`.
#[derive(Clone, Debug)]
pub struct Adjunction<F> {
    pub m: Bimodule<F>,
    pub x: Module<F>,
    pub y: Module<F>,
    pub tensor: Module<F>,
    pub tensor_data: TensorData<F>,
    pub hom: HomAM<F>,
}

impl<F: Field> Adjunction<F> {
    pub fn new(m: &Bimodule<F>, y: &Module<F>, x: &Module<F>) -> Result<Self, BimoduleError> {
        let (tensor, tensor_data) = tensor_over_b(m, y)?;
        let hom = hom_a_m(m, x)?;
        Ok(Adjunction { m: m.clone(), x: x.clone(), y: y.clone(), tensor, tensor_data, hom })
    }

    /// `η(φ)(y_j)` is the map `m_i ↦ φ(m_i ⊗ y_j)`; the result is `dim H × dim Y`.
    pub fn eta(&self, phi: &Matrix<F>) -> Matrix<F> {
        let (dm, dy) = (self.m.dim, self.y.dim());
        let cols: Vec<Vec<F>> = (0..dy)
            .map(|j| {
                let f = Matrix::from_columns(
                    &(0..dm).map(|i| phi.mul_vec(&self.tensor_data.class_of(i, j))).collect::<Vec<_>>(),
                    self.x.dim(),
                );
                self.hom.coordinates(&f).expect("φ(- ⊗ y) is an A-map")
            })
            .collect();
        Matrix::from_columns(&cols, self.hom.basis.len())
    }

    /// `η⁻¹(ψ)(m_i ⊗ y_j) = ψ(y_j)(m_i)`.
    pub fn eta_inverse(&self, psi: &Matrix<F>) -> Matrix<F> {
        let (dm, dy) = (self.m.dim, self.y.dim());
        let mut plain = Matrix::zeros(self.x.dim(), dm * dy);
        for j in 0..dy {
            let f = self.hom.element(&psi.column(j));
            for i in 0..dm {
                plain.set_block(0, i * dy + j, &Matrix::column_vector(&f.column(i)));
            }
        }
        plain.mul(&self.tensor_data.section)
    }

    /// `η` as a matrix between the `hom_basis` coordinates of both Hom spaces.
    pub fn eta_matrix(&self) -> Result<Matrix<F>, BimoduleError> {
        let src = hom_basis(&self.tensor, &self.x)?;
        let tgt = hom_basis(&self.y, &self.hom.module)?;
        let coords = Coordinates::new(self.hom.basis.len() * self.y.dim(), &tgt.iter().map(Matrix::vectorize).collect::<Vec<_>>());
        let cols: Vec<Vec<F>> =
            src.iter().map(|phi| coords.coords(&self.eta(phi).vectorize()).expect("η(φ) is a B-map")).collect();
        Ok(Matrix::from_columns(&cols, tgt.len()))
    }
}

pub fn adjunction_eta<F: Field>(m: &Bimodule<F>, y: &Module<F>, x: &Module<F>, phi: &Matrix<F>) -> Result<Matrix<F>, BimoduleError> {
    Ok(Adjunction::new(m, y, x)?.eta(phi))
}

pub fn adjunction_eta_inverse<F: Field>(
    m: &Bimodule<F>,
    y: &Module<F>,
    x: &Module<F>,
    psi: &Matrix<F>,
) -> Result<Matrix<F>, BimoduleError> {
    Ok(Adjunction::new(m, y, x)?.eta_inverse(psi))
}

/// The involution map `M ⊗_B Hom_A(M, X) → X`, `m ⊗ f ↦ f(m)`.
pub fn involution_phi<F: Field>(m: &Bimodule<F>, x: &Module<F>) -> Result<Matrix<F>, BimoduleError> {
    let h = hom_a_m(m, x)?;
    let adj = Adjunction::new(m, &h.module, x)?;
    Ok(adj.eta_inverse(&Matrix::identity(h.basis.len())))
}
