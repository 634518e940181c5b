//! The monomorphism category `S(A, M, B)` and the epimorphism category
//! `F(A, M, B)` inside `Λ`-mod, with their canonical cotilting and tilting
//! modules.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{dual_right_regular, indec_injectives, indec_projectives, regular_module, AlgebraError};
use crate::bimtri::{
    flat_to_triple, hom_a_m, is_left_projective, is_right_projective, tensor_over_b, Adjunction, BimoduleError,
    TriangularAlgebra, TripleHom, TripleModule,
};
use crate::exactla::{Field, Matrix, Subspace};
use crate::repmod::{
    decompose, ext_dim, hom_basis, injective_envelope, is_injective, is_isomorphic, is_projective, projective_cover,
    syzygy, Module, ModuleError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoError {
    #[error("M is not projective as a right B-module")]
    NotRightProjective,
    #[error("M is not projective as a left A-module")]
    NotLeftProjective,
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `φ: M ⊗_B Y → X` is injective.
pub fn in_s<F: Field>(t: &TripleModule<F>) -> bool {
    t.phi.rank() == t.tensor_data.dim
}

/// `η(φ): Y → Hom_A(M, X)`, the structure map used for `F`.
pub fn adjoint_structure_map<F: Field>(t: &TripleModule<F>) -> Result<Matrix<F>, MonoError> {
    Ok(Adjunction::new(&t.lam.m, &t.y, &t.x)?.eta(&t.phi))
}

/// `η(φ): Y → Hom_A(M, X)` is surjective.
pub fn in_f<F: Field>(t: &TripleModule<F>) -> Result<bool, MonoError> {
    let psi = adjoint_structure_map(t)?;
    Ok(psi.rank() == psi.nrows())
}

/// Coefficients `c` with `Σ c_i·images[i] = target`, if any.
pub fn solve_in_span<F: Field>(images: &[Matrix<F>], target: &Matrix<F>) -> Option<Vec<F>> {
    let v = target.vectorize();
    if images.is_empty() {
        return v.iter().all(|c| c.is_zero()).then(Vec::new);
    }
    if v.is_empty() {
        return Some(vec![F::zero(); images.len()]);
    }
    let a = Matrix::from_columns(&images.iter().map(Matrix::vectorize).collect::<Vec<_>>(), v.len());
    a.solve_vec(&v)
}

fn combination<F: Field>(basis: &[Matrix<F>], coeffs: &[F], rows: usize, cols: usize) -> Matrix<F> {
    let mut out = Matrix::zeros(rows, cols);
    for (b, c) in basis.iter().zip(coeffs) {
        out.add_scaled(c, b);
    }
    out
}

/// An `A`-map `g: source → target` with `g·incl = f`, the first solution of
/// the linear system in solver order.
pub fn extend_along<F: Field>(
    source: &Module<F>,
    target: &Module<F>,
    incl: &Matrix<F>,
    f: &Matrix<F>,
) -> Result<Option<Matrix<F>>, MonoError> {
    let basis = hom_basis(source, target)?;
    let images: Vec<Matrix<F>> = basis.iter().map(|h| h.mul(incl)).collect();
    Ok(solve_in_span(&images, f).map(|c| combination(&basis, &c, target.dim(), source.dim())))
}

/// A `Λ`-map `g: s → through` with `p·g = f`, if one exists.
pub fn factor_through<F: Field>(
    s: &Module<F>,
    through: &Module<F>,
    p: &Matrix<F>,
    f: &Matrix<F>,
) -> Result<Option<Matrix<F>>, MonoError> {
    let basis = hom_basis(s, through)?;
    let images: Vec<Matrix<F>> = basis.iter().map(|g| p.mul(g)).collect();
    Ok(solve_in_span(&images, f).map(|c| combination(&basis, &c, through.dim(), s.dim())))
}

/// `f: x → y` is right minimal: the endomorphisms `h` of `x` with `f·h = 0`
/// form a right ideal of `End(x)`, and `f` is right minimal iff that ideal is
/// nilpotent (so `1 + h` is always invertible).
pub fn is_right_minimal<F: Field>(x: &Module<F>, f: &Matrix<F>) -> Result<bool, MonoError> {
    let end = hom_basis(x, x)?;
    let n = x.dim();
    let images: Vec<Vec<F>> = end.iter().map(|h| f.mul(h).vectorize()).collect();
    if end.is_empty() {
        return Ok(true);
    }
    let rows = images[0].len();
    let kernel = if rows == 0 {
        Subspace::full(end.len())
    } else {
        Matrix::from_columns(&images, rows).kernel()
    };
    let ideal: Vec<Matrix<F>> = kernel.basis_vectors().iter().map(|c| combination(&end, c, n, n)).collect();
    let mut power = Subspace::from_vectors(n * n, ideal.iter().map(Matrix::vectorize).collect());
    loop {
        if power.is_zero() {
            return Ok(true);
        }
        let products: Vec<Vec<F>> = power
            .basis_vectors()
            .iter()
            .flat_map(|p| {
                let p = Matrix::unvectorize(p, n, n);
                ideal.iter().map(move |k| p.mul(k).vectorize()).collect::<Vec<_>>()
            })
            .collect();
        let next = Subspace::from_vectors(n * n, products);
        if next.dim() == power.dim() {
            return Ok(false);
        }
        power = next;
    }
}

/// A minimal right `S(A, M, B)`-approximation `Mimo(φ) → t`.
#[derive(Clone, Debug)]
pub struct Approximation<F> {
    pub object: TripleModule<F>,
    pub map: TripleHom<F>,
    /// `e: M ⊗_B Y → IK(φ)`, extending the envelope of `Ker φ`.
    pub extension: Matrix<F>,
    /// Right minimality of `map`, checked on the flat modules.
    pub minimal: bool,
    pub warnings: Vec<String>,
}

/// `Mimo(φ) = [X ⊕ IK(φ); Y]` with structure map `[φ; e]` and the map `[(1, 0); 1]`.
pub fn mimo<F: Field>(t: &TripleModule<F>) -> Result<Approximation<F>, MonoError> {
    let lam = &t.lam;
    let mut warnings = Vec::new();
    if !is_right_projective(&lam.m)? {
        warnings.push("M is not projective as a right B-module; the result need not be an approximation".into());
    }
    let (k, incl) = t.tensor.submodule(&t.phi.kernel());
    let (ik, iota) = injective_envelope(&k)?;
    let e = if ik.is_zero() {
        Matrix::zeros(0, t.tensor.dim())
    } else {
        extend_along(&t.tensor, &ik, &incl, &iota.matrix)?
            .ok_or_else(|| MonoError::Invariant("the envelope of Ker φ does not extend".into()))?
    };
    let mut ap = mimo_with_extension(t, &ik, &e)?;
    ap.warnings.extend(warnings);
    Ok(ap)
}

/// `Mimo(φ)` for a given injective `ik` and `A`-map `e: M ⊗_B Y → ik` that
/// restricts to an injective envelope of `Ker φ`.
pub fn mimo_with_extension<F: Field>(t: &TripleModule<F>, ik: &Module<F>, e: &Matrix<F>) -> Result<Approximation<F>, MonoError> {
    let lam = &t.lam;
    let (k, incl) = t.tensor.submodule(&t.phi.kernel());
    if !t.tensor.is_hom_to(ik, e) {
        return Err(MonoError::Invariant("e is not an A-map M ⊗_B Y → IK(φ)".into()));
    }
    let restricted = e.mul(&incl);
    if restricted.rank() != k.dim() || !is_injective(ik)? || injective_envelope(&k)?.0.dim() != ik.dim() {
        return Err(MonoError::Invariant("e does not restrict to an injective envelope of Ker φ".into()));
    }
    let x2 = Module::direct_sum(&[&t.x, ik])?;
    let phi2 = Matrix::vstack(&[&t.phi, e]);
    let object = TripleModule::new(lam, x2, t.y.clone(), phi2)?;
    if !in_s(&object) {
        return Err(MonoError::Invariant("Mimo(φ) is not in S".into()));
    }
    let f1 = Matrix::hstack(&[&Matrix::identity(t.x.dim()), &Matrix::zeros(t.x.dim(), ik.dim())]);
    let map = TripleHom::new(&object, t, f1, Matrix::identity(t.y.dim()))?;
    let minimal = is_right_minimal(&object.to_flat(), &map.to_flat())?;
    Ok(Approximation { object, map, extension: e.clone(), minimal, warnings: Vec::new() })
}

/// The cotilting module `T = [D(A); 0] ⊕ [E; D(B)]_e` with `e: M ⊗_B D(B) ↪ E`
/// an injective envelope.
#[derive(Clone, Debug)]
pub struct CotiltingModule<F> {
    pub module: Module<F>,
    pub summands: Vec<TripleModule<F>>,
    pub envelope: Matrix<F>,
}

/// An injective envelope of `M ⊗_B J`, the identity when the tensor product is
/// already injective.
fn envelope_of_tensor<F: Field>(
    lam: &TriangularAlgebra<F>,
    j: &Module<F>,
) -> Result<(Module<F>, Matrix<F>), MonoError> {
    let (tm, _) = tensor_over_b(&lam.m, j)?;
    let (e, iota) = injective_envelope(&tm)?;
    if e.dim() == tm.dim() {
        let n = tm.dim();
        return Ok((tm, Matrix::identity(n)));
    }
    Ok((e, iota.matrix))
}

/// The cokernel of an injective envelope.
pub(crate) fn cosyzygy<F: Field>(x: &Module<F>) -> Result<Module<F>, MonoError> {
    let (e, iota) = injective_envelope(x)?;
    Ok(e.quotient(&iota.matrix.image()).0)
}

fn distinct_indecomposable_summands<F: Field>(x: &Module<F>) -> Result<Option<usize>, MonoError> {
    if F::elements().is_none() {
        return Ok(None);
    }
    Ok(Some(decompose(x)?.classes.len()))
}

fn flat_sum<F: Field>(parts: &[TripleModule<F>]) -> Result<Module<F>, MonoError> {
    let flats: Vec<Module<F>> = parts.iter().map(TripleModule::to_flat).collect();
    Ok(Module::direct_sum(&flats.iter().collect::<Vec<_>>())?)
}

pub fn cotilting_t<F: Field>(lam: &Arc<TriangularAlgebra<F>>) -> Result<CotiltingModule<F>, MonoError> {
    if !is_right_projective(&lam.m)? {
        return Err(MonoError::NotRightProjective);
    }
    let da = dual_right_regular(&lam.a);
    let t1 = TripleModule::new(lam, da.clone(), Module::zero(&lam.b), Matrix::zeros(da.dim(), 0))?;
    let db = dual_right_regular(&lam.b);
    let (e, iota) = envelope_of_tensor(lam, &db)?;
    let t2 = TripleModule::new(lam, e, db, iota.clone())?;
    let summands = vec![t1, t2];
    let module = flat_sum(&summands)?;
    if ext_dim(1, &module, &module)? != 0 {
        return Err(MonoError::Invariant("Ext¹(T, T) ≠ 0".into()));
    }
    if !is_injective(&cosyzygy(&module)?)? {
        return Err(MonoError::Invariant("T has injective dimension above 1".into()));
    }
    if let Some(n) = distinct_indecomposable_summands(&module)? {
        if n != lam.flat.vertex_count() {
            return Err(MonoError::Invariant(format!("T has {n} summand classes, Λ has {} simples", lam.flat.vertex_count())));
        }
    }
    Ok(CotiltingModule { module, summands, envelope: iota })
}

/// `Ext¹(l, z) = 0`.
pub fn ext1_vanishes<F: Field>(l: &Module<F>, z: &Module<F>) -> Result<bool, MonoError> {
    Ok(ext_dim(1, l, z)? == 0)
}

/// `l ∈ ⊥T`. Degree 2 is only a consistency check since `inj.dim T ≤ 1`.
pub fn in_perp<F: Field>(l: &Module<F>, t: &CotiltingModule<F>) -> Result<bool, MonoError> {
    let ext1 = ext1_vanishes(l, &t.module)?;
    if ext_dim(2, l, &t.module)? != 0 {
        return Err(MonoError::Invariant("Ext²(L, T) ≠ 0 although inj.dim T ≤ 1".into()));
    }
    Ok(ext1)
}

/// `[I; 0]` for the indecomposable injective `A`-modules, then `[E_J; J]_e`
/// with `e: M ⊗_B J ↪ E_J` an injective envelope.
pub fn injective_objects_s<F: Field>(lam: &Arc<TriangularAlgebra<F>>) -> Result<Vec<TripleModule<F>>, MonoError> {
    if !is_right_projective(&lam.m)? {
        return Err(MonoError::NotRightProjective);
    }
    let mut out = Vec::new();
    for i in indec_injectives(&lam.a)? {
        let phi = Matrix::zeros(i.dim(), 0);
        out.push(TripleModule::new(lam, i, Module::zero(&lam.b), phi)?);
    }
    for j in indec_injectives(&lam.b)? {
        let (e, iota) = envelope_of_tensor(lam, &j)?;
        out.push(TripleModule::new(lam, e, j, iota)?);
    }
    Ok(out)
}

/// The projective objects of `S`: the projective `Λ`-modules.
pub fn projective_objects_s<F: Field>(lam: &Arc<TriangularAlgebra<F>>) -> Result<Vec<TripleModule<F>>, MonoError> {
    Ok(lam.projective_triples()?)
}

/// `[P; C]` with structure map `η⁻¹(θ)` for a projective cover
/// `θ: C ↠ Hom_A(M, P)`.
fn cover_triple<F: Field>(lam: &Arc<TriangularAlgebra<F>>, p: Module<F>) -> Result<TripleModule<F>, MonoError> {
    let h = hom_a_m(&lam.m, &p)?;
    let (c, theta) = projective_cover(&h.module)?;
    let phi = Adjunction::new(&lam.m, &c, &p)?.eta_inverse(&theta.matrix);
    Ok(TripleModule::new(lam, p, c, phi)?)
}

/// `[P; C]_{η⁻¹(θ)}` for the indecomposable projective `A`-modules, then `[0; Q]`.
pub fn projective_objects_f<F: Field>(lam: &Arc<TriangularAlgebra<F>>) -> Result<Vec<TripleModule<F>>, MonoError> {
    if !is_left_projective(&lam.m)? {
        return Err(MonoError::NotLeftProjective);
    }
    let mut out = Vec::new();
    for (p, _) in indec_projectives(&lam.a)? {
        out.push(cover_triple(lam, p)?);
    }
    for (q, _) in indec_projectives(&lam.b)? {
        out.push(TripleModule::new(lam, Module::zero(&lam.a), q, Matrix::zeros(0, 0))?);
    }
    Ok(out)
}

/// The injective objects of `F`: the injective `Λ`-modules.
pub fn injective_objects_f<F: Field>(lam: &Arc<TriangularAlgebra<F>>) -> Result<Vec<TripleModule<F>>, MonoError> {
    Ok(lam.injective_triples()?)
}

/// The tilting module `L = [A; C]_{η⁻¹(θ)} ⊕ [0; B]`.
#[derive(Clone, Debug)]
pub struct TiltingModule<F> {
    pub module: Module<F>,
    pub summands: Vec<TripleModule<F>>,
}

pub fn tilting_l<F: Field>(lam: &Arc<TriangularAlgebra<F>>) -> Result<TiltingModule<F>, MonoError> {
    if !is_left_projective(&lam.m)? {
        return Err(MonoError::NotLeftProjective);
    }
    let t1 = cover_triple(lam, regular_module(&lam.a))?;
    let t2 = TripleModule::new(lam, Module::zero(&lam.a), regular_module(&lam.b), Matrix::zeros(0, 0))?;
    let summands = vec![t1, t2];
    let module = flat_sum(&summands)?;
    if ext_dim(1, &module, &module)? != 0 {
        return Err(MonoError::Invariant("Ext¹(L, L) ≠ 0".into()));
    }
    if !is_projective(&syzygy(&module)?.0)? {
        return Err(MonoError::Invariant("L has projective dimension above 1".into()));
    }
    Ok(TiltingModule { module, summands })
}

/// `Λ' = [[B^op, M], [0, A^op]]`: a right `Λ`-module `(U, V)_ψ` with
/// `ψ: U ⊗_A M → V` is the `Λ'`-triple `[V; U]_ψ`.
pub fn right_lambda<F: Field>(lam: &TriangularAlgebra<F>) -> Result<Arc<TriangularAlgebra<F>>, MonoError> {
    Ok(Arc::new(lam.right_triangular()?))
}

/// Membership of a right module `(U, V)_ψ`, given as a `Λ'`-triple, in `S(A, M, B)_r`.
pub fn in_s_r<F: Field>(t: &TripleModule<F>) -> bool {
    in_s(t)
}

/// `U_Λ = (D(A), E_{D(A)})_e ⊕ (0, D(B))`, as a `Λ'`-module.
pub fn right_cotilting_u<F: Field>(lam_r: &Arc<TriangularAlgebra<F>>) -> Result<CotiltingModule<F>, MonoError> {
    cotilting_t(lam_r).map_err(|e| match e {
        MonoError::NotRightProjective => MonoError::NotLeftProjective,
        other => other,
    })
}

/// `D: S(A, M, B)_r → F(A, M, B)`, `(U, V)_ψ ↦ [DU; DV]`. The dual of a
/// `Λ'`-module is a `Λ`-module through `Λ' ≅ Λ^op`.
pub fn duality_sr_to_f<F: Field>(
    lam: &Arc<TriangularAlgebra<F>>,
    t: &TripleModule<F>,
) -> Result<TripleModule<F>, MonoError> {
    let perm = lam.opposite_permutation();
    if t.lam.flat.dim() != perm.len() {
        return Err(BimoduleError::AlgebraMismatch.into());
    }
    let n = t.to_flat();
    let action = perm.iter().map(|&j| n.action(j).transpose()).collect();
    let d = Module::new(&lam.flat, n.dim(), action)?;
    Ok(flat_to_triple(lam, &d)?.0)
}

/// The inverse duality `F(A, M, B) → S(A, M, B)_r`.
pub fn duality_f_to_sr<F: Field>(
    lam_r: &Arc<TriangularAlgebra<F>>,
    t: &TripleModule<F>,
) -> Result<TripleModule<F>, MonoError> {
    let perm = t.lam.opposite_permutation();
    if lam_r.flat.dim() != perm.len() {
        return Err(BimoduleError::AlgebraMismatch.into());
    }
    let mut inverse = vec![0; perm.len()];
    for (i, &j) in perm.iter().enumerate() {
        inverse[j] = i;
    }
    let n = t.to_flat();
    let action = inverse.iter().map(|&i| n.action(i).transpose()).collect();
    let d = Module::new(&lam_r.flat, n.dim(), action)?;
    Ok(flat_to_triple(lam_r, &d)?.0)
}

fn same_iso_classes<F: Field>(xs: &[Module<F>], ys: &[Module<F>]) -> Result<bool, MonoError> {
    for (a, b) in [(xs, ys), (ys, xs)] {
        for x in a {
            let mut found = false;
            for y in b {
                if is_isomorphic(x, y)?.is_some() {
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Injective and projective objects of `S(A, M, B)` agree up to isomorphism.
pub fn s_is_frobenius<F: Field>(lam: &Arc<TriangularAlgebra<F>>) -> Result<bool, MonoError> {
    let inj: Vec<Module<F>> = injective_objects_s(lam)?.iter().map(TripleModule::to_flat).collect();
    let proj: Vec<Module<F>> = projective_objects_s(lam)?.iter().map(TripleModule::to_flat).collect();
    same_iso_classes(&inj, &proj)
}
