use std::sync::Arc;

use crate::algebra::{dual_right_regular, Algebra};
use crate::exactla::{Field, Matrix};
use crate::repmod::{is_injective, is_isomorphic, is_projective};

use super::{tensor_bimodules, tensor_over_b, Bimodule, BimoduleError};

/// `M_B` is projective.
pub fn is_right_projective<F: Field>(m: &Bimodule<F>) -> Result<bool, BimoduleError> {
    Ok(is_projective(&m.right_module())?)
}

/// `_A M` is projective.
pub fn is_left_projective<F: Field>(m: &Bimodule<F>) -> Result<bool, BimoduleError> {
    Ok(is_projective(&m.left_module())?)
}

/// `M_B` is projective and `M ⊗_B D(B_B)` is an injective left `A`-module.
pub fn satisfies_ip<F: Field>(m: &Bimodule<F>) -> Result<bool, BimoduleError> {
    if !is_right_projective(m)? {
        return Ok(false);
    }
    let (t, _) = tensor_over_b(m, &dual_right_regular(&m.b))?;
    Ok(is_injective(&t)?)
}

/// An isomorphism of `A`-`B`-bimodules `D(A) ⊗_A M → M ⊗_B D(B)`, provided
/// both `_A M` and `M_B` are projective.
pub fn exchangeable_iso<F: Field>(m: &Bimodule<F>) -> Result<Option<Matrix<F>>, BimoduleError> {
    if !is_left_projective(m)? || !is_right_projective(m)? {
        return Ok(None);
    }
    let da = Bimodule::regular(&m.a).dual();
    let db = Bimodule::regular(&m.b).dual();
    let (lhs, _) = tensor_bimodules(&da, m)?;
    let (rhs, _) = tensor_bimodules(m, &db)?;
    if lhs.dim != rhs.dim {
        return Ok(None);
    }
    let env = Arc::new(Algebra::enveloping(&m.a, &m.b)?);
    let x = lhs.enveloping_module(&env)?;
    let y = rhs.enveloping_module(&env)?;
    Ok(is_isomorphic(&x, &y)?)
}
