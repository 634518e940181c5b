//! Stable categories modulo injective objects, the six functors between
//! `A-mod`, `S(A, M, B)` and `B-mod`, and an extensional check that they
//! form a recollement of the stable categories.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::bimtri::{flat_to_triple, satisfies_ip, tensor_over_b, BimoduleError, TriangularAlgebra, TripleModule};
use crate::exactla::{Coordinates, Field, Matrix, Subspace};
use crate::monocat::{cosyzygy, extend_along, injective_objects_s, MonoError};
use crate::repmod::{
    decompose, hom_basis, injective_envelope, is_injective, is_isomorphic, projective_cover, Module, ModuleError,
};

mod recollement;

pub use recollement::{verify_recollement, AxiomCheck, Corpus, RecollementReport, StableCounts};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StableError {
    #[error("M does not satisfy (IP): M_B projective and M ⊗_B D(B) injective")]
    NotIp,
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Mono(#[from] MonoError),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which maps are stably zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StableMode {
    ModInjectives,
    ModProjectives,
}

/// `Hom(x, y)` modulo the maps factoring through a fixed class of objects.
/// Maps are `rows × cols` matrices, compared through their column-major
/// vectorizations.
#[derive(Clone, Debug)]
pub struct StableHomSpace<F> {
    pub rows: usize,
    pub cols: usize,
    pub plain_hom: Vec<Matrix<F>>,
    pub factoring_subspace: Subspace<F>,
    pub quotient_dim: usize,
    /// Plain maps whose classes form a basis of the quotient.
    pub representatives: Vec<Matrix<F>>,
    coords: Coordinates<F>,
}

impl<F: Field> StableHomSpace<F> {
    /// Builds the quotient from a basis of `Hom(x, y)` and a spanning set of
    /// the factoring maps.
    pub fn from_parts(rows: usize, cols: usize, plain_hom: Vec<Matrix<F>>, factoring: &[Matrix<F>]) -> Self {
        let n = rows * cols;
        let factoring_subspace = Subspace::from_vectors(n, factoring.iter().map(Matrix::vectorize).collect());
        let mut span = factoring_subspace.clone();
        let mut representatives = Vec::new();
        for h in &plain_hom {
            let v = h.vectorize();
            if !span.contains(&v) {
                span = span.sum(&Subspace::from_vectors(n, vec![v]));
                representatives.push(h.clone());
            }
        }
        let mut family: Vec<Vec<F>> = representatives.iter().map(Matrix::vectorize).collect();
        family.extend(factoring_subspace.basis_vectors());
        let coords = Coordinates::new(n, &family);
        StableHomSpace {
            rows,
            cols,
            quotient_dim: representatives.len(),
            plain_hom,
            factoring_subspace,
            representatives,
            coords,
        }
    }

    pub fn is_stably_zero(&self, f: &Matrix<F>) -> bool {
        self.factoring_subspace.contains(&f.vectorize())
    }

    /// Coordinates of the class of `f` in the basis of representatives, or
    /// `None` if `f` is not a homomorphism.
    pub fn class_of(&self, f: &Matrix<F>) -> Option<Vec<F>> {
        let mut c = self.coords.coords(&f.vectorize())?;
        c.truncate(self.quotient_dim);
        Some(c)
    }

    /// The factoring maps, as matrices.
    pub fn factoring_maps(&self) -> Vec<Matrix<F>> {
        self.factoring_subspace
            .basis_vectors()
            .iter()
            .map(|v| Matrix::unvectorize(v, self.rows, self.cols))
            .collect()
    }
}

/// The stable Hom space of `A`-modules modulo injectives (maps extending
/// along the injective envelope of `x`) or projectives (maps lifting along
/// the projective cover of `y`).
pub fn stable_hom<F: Field>(x: &Module<F>, y: &Module<F>, mode: StableMode) -> Result<StableHomSpace<F>, StableError> {
    let plain = hom_basis(x, y)?;
    let factoring: Vec<Matrix<F>> = match mode {
        StableMode::ModInjectives => {
            let (e, iota) = injective_envelope(x)?;
            hom_basis(&e, y)?.iter().map(|g| g.mul(&iota.matrix)).collect()
        }
        StableMode::ModProjectives => {
            let (p, pi) = projective_cover(y)?;
            hom_basis(x, &p)?.iter().map(|h| pi.matrix.mul(h)).collect()
        }
    };
    Ok(StableHomSpace::from_parts(y.dim(), x.dim(), plain, &factoring))
}

/// The stable Hom space modulo maps factoring through `add` of `objects`.
pub fn stable_hom_through<F: Field>(
    x: &Module<F>,
    y: &Module<F>,
    objects: &[Module<F>],
) -> Result<StableHomSpace<F>, StableError> {
    let plain = hom_basis(x, y)?;
    let mut factoring = Vec::new();
    for z in objects {
        let into = hom_basis(x, z)?;
        if into.is_empty() {
            continue;
        }
        for g in hom_basis(z, y)? {
            factoring.extend(into.iter().map(|h| g.mul(h)));
        }
    }
    Ok(StableHomSpace::from_parts(y.dim(), x.dim(), plain, &factoring))
}

/// `x` with its injective direct summands removed.
pub fn strip_injective_summands<F: Field>(x: &Module<F>) -> Result<Module<F>, StableError> {
    strip_summands(x, |s| Ok(is_injective(s)?))
}

fn strip_summands<F: Field>(
    x: &Module<F>,
    mut drop: impl FnMut(&Module<F>) -> Result<bool, StableError>,
) -> Result<Module<F>, StableError> {
    let mut keep = Vec::new();
    for s in decompose(x)?.summands {
        if !drop(&s.module)? {
            keep.push(s.module);
        }
    }
    if keep.is_empty() {
        return Ok(Module::zero(x.algebra()));
    }
    Ok(Module::direct_sum(&keep.iter().collect::<Vec<_>>())?)
}

/// Isomorphic in `A-mod/inj(A)`: equal after stripping injective summands.
pub fn stably_isomorphic_modules<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<bool, StableError> {
    let (x, y) = (strip_injective_summands(x)?, strip_injective_summands(y)?);
    Ok(x.dim() == y.dim() && is_isomorphic(&x, &y)?.is_some())
}

/// The stable category of `S(A, M, B)` modulo its injective objects.
#[derive(Clone, Debug)]
pub struct StableS<F> {
    pub lam: Arc<TriangularAlgebra<F>>,
    pub injectives: Vec<TripleModule<F>>,
    flats: Vec<Module<F>>,
}

impl<F: Field> StableS<F> {
    /// Needs `M_B` projective so that `S` has enough injectives.
    pub fn new(lam: &Arc<TriangularAlgebra<F>>) -> Result<Self, StableError> {
        let injectives = injective_objects_s(lam)?;
        let flats = injectives.iter().map(TripleModule::to_flat).collect();
        Ok(StableS { lam: lam.clone(), injectives, flats })
    }

    /// Maps are flat matrices `t2.to_flat() ← t1.to_flat()`.
    pub fn stable_hom(&self, t1: &TripleModule<F>, t2: &TripleModule<F>) -> Result<StableHomSpace<F>, StableError> {
        stable_hom_through(&t1.to_flat(), &t2.to_flat(), &self.flats)
    }

    fn is_injective_indecomposable(&self, x: &Module<F>) -> Result<bool, StableError> {
        for i in &self.flats {
            if i.dim() == x.dim() && is_isomorphic(i, x)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Every indecomposable summand is an injective object of `S`.
    pub fn is_injective_object(&self, t: &TripleModule<F>) -> Result<bool, StableError> {
        for s in decompose(&t.to_flat())?.summands {
            if !self.is_injective_indecomposable(&s.module)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn strip_injective_summands(&self, t: &TripleModule<F>) -> Result<Module<F>, StableError> {
        strip_summands(&t.to_flat(), |s| self.is_injective_indecomposable(s))
    }

    pub fn stably_isomorphic(&self, t1: &TripleModule<F>, t2: &TripleModule<F>) -> Result<bool, StableError> {
        let (x, y) = (self.strip_injective_summands(t1)?, self.strip_injective_summands(t2)?);
        Ok(x.dim() == y.dim() && is_isomorphic(&x, &y)?.is_some())
    }

    /// The cokernel of the universal map from `t` to a sum of injective
    /// objects of `S`; a cosyzygy of `t` in `S` up to injective summands.
    pub fn cosyzygy(&self, t: &TripleModule<F>) -> Result<TripleModule<F>, StableError> {
        let flat = t.to_flat();
        let mut parts = Vec::new();
        let mut rows = Vec::new();
        for i in &self.flats {
            for h in hom_basis(&flat, i)? {
                parts.push(i);
                rows.push(h);
            }
        }
        if parts.is_empty() {
            if flat.dim() == 0 {
                return Ok(TripleModule::zero(&self.lam));
            }
            return Err(StableError::Invariant("no maps into injective objects of S".into()));
        }
        let sum = Module::direct_sum(&parts)?;
        let u = Matrix::vstack(&rows.iter().collect::<Vec<_>>());
        if u.rank() != flat.dim() {
            return Err(StableError::Invariant("the injective approximation is not a monomorphism".into()));
        }
        let (c, _) = sum.quotient(&u.image());
        Ok(flat_to_triple(&self.lam, &c)?.0)
    }
}

/// Functors of the recollement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctorTag {
    IUpperStar,
    ILowerStar,
    IShriek,
    JLowerShriek,
    JUpperStar,
    JLowerStar,
}

impl fmt::Display for FunctorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FunctorTag::IUpperStar => "i^*",
            FunctorTag::ILowerStar => "i_*",
            FunctorTag::IShriek => "i^!",
            FunctorTag::JLowerShriek => "j_!",
            FunctorTag::JUpperStar => "j^*",
            FunctorTag::JLowerStar => "j_*",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub enum FunctorOutput<F> {
    Module(Module<F>),
    Triple(TripleModule<F>),
}

/// The image of a named object under one of the six functors.
#[derive(Clone, Debug)]
pub struct StableFunctorImage<F> {
    pub tag: FunctorTag,
    pub input: String,
    pub output: FunctorOutput<F>,
}

impl<F: Field> StableFunctorImage<F> {
    /// Applies `i^*`, `i^!` or `j^*` to an object of `S`.
    pub fn of_triple(tag: FunctorTag, input: &str, t: &TripleModule<F>) -> Result<Self, StableError> {
        let output = match tag {
            FunctorTag::IUpperStar => functor_i_upper_star(t),
            FunctorTag::IShriek => functor_i_shriek(t),
            FunctorTag::JUpperStar => functor_j_upper_star(t),
            _ => return Err(StableError::Invariant(format!("{tag} is not defined on S"))),
        };
        Ok(StableFunctorImage { tag, input: input.to_string(), output: FunctorOutput::Module(output) })
    }

    /// Applies `i_*` to an `A`-module or `j_!`, `j_*` to a `B`-module.
    pub fn of_module(
        tag: FunctorTag,
        input: &str,
        lam: &Arc<TriangularAlgebra<F>>,
        x: &Module<F>,
    ) -> Result<Self, StableError> {
        let output = match tag {
            FunctorTag::ILowerStar => functor_i_lower_star(lam, x)?,
            FunctorTag::JLowerShriek => functor_j_lower_shriek(lam, x)?,
            FunctorTag::JLowerStar => functor_j_lower_star(lam, x)?,
            _ => return Err(StableError::Invariant(format!("{tag} is not defined on modules"))),
        };
        Ok(StableFunctorImage { tag, input: input.to_string(), output: FunctorOutput::Triple(output) })
    }
}

/// `i^*[X; Y]_φ = Coker φ`.
pub fn functor_i_upper_star<F: Field>(t: &TripleModule<F>) -> Module<F> {
    cokernel(t).0
}

/// `Coker φ` with the projection from `X`.
fn cokernel<F: Field>(t: &TripleModule<F>) -> (Module<F>, Matrix<F>) {
    t.x.quotient(&t.phi.image())
}

/// `i_* X = [X; 0]`.
pub fn functor_i_lower_star<F: Field>(
    lam: &Arc<TriangularAlgebra<F>>,
    x: &Module<F>,
) -> Result<TripleModule<F>, StableError> {
    Ok(TripleModule::new(lam, x.retag(&lam.a)?, Module::zero(&lam.b), Matrix::zeros(x.dim(), 0))?)
}

/// `i^![X; Y]_φ = X`.
pub fn functor_i_shriek<F: Field>(t: &TripleModule<F>) -> Module<F> {
    t.x.clone()
}

/// `j_! Y = [M ⊗_B Y; Y]_Id`.
pub fn functor_j_lower_shriek<F: Field>(
    lam: &Arc<TriangularAlgebra<F>>,
    y: &Module<F>,
) -> Result<TripleModule<F>, StableError> {
    Ok(TripleModule::induced_from_b(lam, y.retag(&lam.b)?)?)
}

/// `j^*[X; Y]_φ = Y`.
pub fn functor_j_upper_star<F: Field>(t: &TripleModule<F>) -> Module<F> {
    t.y.clone()
}

/// `j_* Y = [E_Y; Y]_ψ` with `ψ: M ⊗_B Y ↪ E_Y` an injective envelope.
pub fn functor_j_lower_star<F: Field>(
    lam: &Arc<TriangularAlgebra<F>>,
    y: &Module<F>,
) -> Result<TripleModule<F>, StableError> {
    if !satisfies_ip(&lam.m)? {
        return Err(StableError::NotIp);
    }
    let y = y.retag(&lam.b)?;
    let (tm, _) = tensor_over_b(&lam.m, &y)?;
    let (e, psi) = injective_envelope(&tm)?;
    Ok(TripleModule::new(lam, e, y, psi.matrix)?)
}

/// `[f; h]: t → j_* Y'` for `h: j^* t → Y'`, where `f` extends
/// `ψ'·(1 ⊗ h)` along the monomorphism `φ`.
pub fn lift_to_j_lower_star<F: Field>(
    t: &TripleModule<F>,
    target: &TripleModule<F>,
    h: &Matrix<F>,
) -> Result<Matrix<F>, StableError> {
    let one_h = t.tensor_data.map_right(&target.tensor_data, h);
    let rhs = target.phi.mul(&one_h);
    let f = extend_along(&t.x, &target.x, &t.phi, &rhs)?
        .ok_or_else(|| StableError::Invariant("ψ'·(1 ⊗ h) does not extend along φ".into()))?;
    Ok(Matrix::block_diag(&[&f, h]))
}

/// `j_!(h) = [1 ⊗ h; h]` as a flat matrix.
pub fn j_lower_shriek_map<F: Field>(s: &TripleModule<F>, t: &TripleModule<F>, h: &Matrix<F>) -> Matrix<F> {
    Matrix::block_diag(&[&s.tensor_data.map_right(&t.tensor_data, h), h])
}

/// The cokernel of an injective envelope.
pub fn module_cosyzygy<F: Field>(x: &Module<F>) -> Result<Module<F>, StableError> {
    Ok(cosyzygy(x)?)
}

/// Classes of an induced map between stable Hom spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InducedMap {
    /// Factoring maps go to factoring maps.
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
}

impl InducedMap {
    pub fn is_bijection(&self) -> bool {
        self.well_defined && self.injective && self.surjective
    }
}

/// The map `src → tgt` on stable Hom spaces induced by `image`, which must
/// be linear up to stably zero maps.
pub fn induced_map<F: Field>(
    src: &StableHomSpace<F>,
    tgt: &StableHomSpace<F>,
    mut image: impl FnMut(&Matrix<F>) -> Result<Matrix<F>, StableError>,
) -> Result<InducedMap, StableError> {
    let mut well_defined = true;
    for f in src.factoring_maps() {
        if !tgt.is_stably_zero(&image(&f)?) {
            well_defined = false;
        }
    }
    let mut columns = Vec::new();
    for r in &src.representatives {
        let c = tgt
            .class_of(&image(r)?)
            .ok_or_else(|| StableError::Invariant("induced map does not land in Hom".into()))?;
        columns.push(c);
    }
    let rank = if columns.is_empty() || tgt.quotient_dim == 0 {
        0
    } else {
        Matrix::from_columns(&columns, tgt.quotient_dim).rank()
    };
    Ok(InducedMap { well_defined, injective: rank == src.quotient_dim, surjective: rank == tgt.quotient_dim })
}
