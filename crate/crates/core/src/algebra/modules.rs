use std::sync::Arc;

use crate::exactla::{Field, Matrix};
use crate::repmod::{injective_envelope, is_isomorphic, Module, ModuleError};

use super::{Algebra, AlgebraError};

/// `_A A`, acting by left multiplication.
pub fn regular_module<F: Field>(alg: &Arc<Algebra<F>>) -> Module<F> {
    Module::new_unchecked(alg, alg.dim(), alg.left_mults().to_vec())
}

/// `P(i) = A·e_i` for each vertex, with its inclusion into the regular module.
pub fn indec_projectives<F: Field>(alg: &Arc<Algebra<F>>) -> Result<Vec<(Module<F>, Matrix<F>)>, AlgebraError> {
    let reg = regular_module(alg);
    Ok(alg
        .vertex_idempotents()?
        .iter()
        .map(|e| reg.submodule(&alg.element_right_matrix(e).image()))
        .collect())
}

/// `I(i) = D(e_i·A)` for each vertex.
pub fn indec_injectives<F: Field>(alg: &Arc<Algebra<F>>) -> Result<Vec<Module<F>>, AlgebraError> {
    let op = alg.opposite();
    indec_projectives(&op)?
        .iter()
        .map(|(p, _)| duality_d(p).retag(alg).map_err(|_| AlgebraError::Shape("opposite of opposite differs".into())))
        .collect()
}

/// `S(i) = top P(i)`; one-dimensional since the algebra is basic.
pub fn simple_modules<F: Field>(alg: &Arc<Algebra<F>>) -> Result<Vec<Module<F>>, AlgebraError> {
    let nv = alg.vertex_count();
    if !alg.is_basic() {
        return Err(AlgebraError::NotBasic);
    }
    let arrows = alg.arrows()?;
    (0..nv)
        .map(|v| {
            let mut dims = vec![0; nv];
            dims[v] = 1;
            let zero: Vec<Matrix<F>> =
                arrows.iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
            Module::from_representation(alg, &dims, &zero).map_err(|e| match e {
                ModuleError::Algebra(a) => a,
                other => AlgebraError::BasicData(other.to_string()),
            })
        })
        .collect()
}

/// The dual space with transposed action, a module over the opposite algebra.
pub fn duality_d<F: Field>(x: &Module<F>) -> Module<F> {
    let op = x.algebra().opposite();
    let action = x.actions().iter().map(Matrix::transpose).collect();
    Module::new_unchecked(&op, x.dim(), action)
}

pub fn is_selfinjective<F: Field>(alg: &Arc<Algebra<F>>) -> Result<bool, ModuleError> {
    Ok(injective_envelope(&regular_module(alg))?.0.dim() == alg.dim())
}

/// `D(A_A)`, the dual of the right regular module; the sum of all `I(i)`.
pub fn dual_right_regular<F: Field>(alg: &Arc<Algebra<F>>) -> Module<F> {
    let action = alg.right_mults().iter().map(Matrix::transpose).collect();
    Module::new_unchecked(alg, alg.dim(), action)
}

/// `D(A_A) ≅ _A A`.
pub fn is_frobenius<F: Field>(alg: &Arc<Algebra<F>>) -> Result<bool, ModuleError> {
    Ok(is_isomorphic(&dual_right_regular(alg), &regular_module(alg))?.is_some())
}
