//! The two-sided cotilting bimodule `T`, the functor `D Hom_Λ(−, T)` from
//! `S(A, M, B)` to `F(A, M, B)`, the Nakayama functor, and a corpus check of
//! the RSS property.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{dual_right_regular, regular_module};
use crate::bimtri::{
    flat_to_triple, tensor_bimodules, Bimodule, BimoduleError, TriangularAlgebra, TripleModule,
};
use crate::exactla::{Coordinates, Field, Matrix};
use crate::monocat::{cotilting_t, duality_f_to_sr, in_f, in_s, right_cotilting_u, right_lambda, MonoError};
use crate::repmod::{hom_basis, is_isomorphic, Module, ModuleError};
use crate::stablerec::{AxiomCheck, Corpus};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RssError {
    #[error("g is not an isomorphism of bimodules D(A) ⊗_A M → M ⊗_B D(B)")]
    NotBimoduleIso,
    #[error("M is not exchangeable")]
    NotExchangeable,
    #[error("the object is not in S(A, M, B)")]
    NotInS,
    #[error("certificate failed: {0}")]
    Certificate(String),
    #[error(transparent)]
    Mono(#[from] MonoError),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

type Res<T> = Result<T, RssError>;

/// `T = [D(A); 0] ⊕ [M ⊗_B D(B); D(B)]_Id` with its right `Λ`-action.
///
/// The flat basis is `D(A)`, then `M ⊗_B D(B)`, then `D(B)`. `right_action[i]`
/// is the matrix of `t ↦ t·λ_i`, so `λμ` acts by `right_action(μ)·right_action(λ)`.
#[derive(Clone, Debug)]
pub struct TwoSidedT<F> {
    pub lam: Arc<TriangularAlgebra<F>>,
    pub left_module: Module<F>,
    pub right_action: Vec<Matrix<F>>,
    pub g: Matrix<F>,
}

fn commutes<F: Field>(f: &Matrix<F>, src: &[Matrix<F>], tgt: &[Matrix<F>]) -> bool {
    src.iter().zip(tgt).all(|(s, t)| f.mul(s) == t.mul(f))
}

/// The left and right actions commute.
fn is_bimodule<F: Field>(left: &[Matrix<F>], right: &[Matrix<F>]) -> bool {
    left.iter().all(|l| right.iter().all(|r| l.mul(r) == r.mul(l)))
}

/// The right module `T_Λ` as a left module over `Λ' ≅ Λ^op`.
fn as_right_module<F: Field>(
    lam: &TriangularAlgebra<F>,
    lam_r: &Arc<TriangularAlgebra<F>>,
    dim: usize,
    right: &[Matrix<F>],
) -> Res<Module<F>> {
    let perm = lam.opposite_permutation();
    let mut actions = vec![Matrix::zeros(dim, dim); perm.len()];
    for (i, &j) in perm.iter().enumerate() {
        actions[j] = right[i].clone();
    }
    Ok(Module::new(&lam_r.flat, dim, actions)?)
}

/// Builds `T` with the right action `(α, m′⊗β, β′)·(a, m, b) = (αa, g(α⊗m) + m′⊗βb, β′b)`.
pub fn bimodule_t<F: Field>(lam: &Arc<TriangularAlgebra<F>>, g: &Matrix<F>) -> Res<TwoSidedT<F>> {
    let m = &lam.m;
    let da_bi = Bimodule::regular(&lam.a).dual();
    let db_bi = Bimodule::regular(&lam.b).dual();
    let (lhs, lhs_data) = tensor_bimodules(&da_bi, m)?;
    let (rhs, _) = tensor_bimodules(m, &db_bi)?;
    if g.shape() != (rhs.dim(), lhs.dim())
        || !g.is_invertible()
        || !commutes(g, lhs.left_actions(), rhs.left_actions())
        || !commutes(g, lhs.right_actions(), rhs.right_actions())
    {
        return Err(RssError::NotBimoduleIso);
    }
    let da = dual_right_regular(&lam.a);
    let t1 = TripleModule::new(lam, da.clone(), Module::zero(&lam.b), Matrix::zeros(da.dim(), 0))?;
    let t2 = TripleModule::induced_from_b(lam, dual_right_regular(&lam.b))?;
    let left_module = Module::direct_sum(&[&t1.to_flat(), &t2.to_flat()])?;

    let (na, dt, nb) = (lam.a.dim(), rhs.dim(), lam.b.dim());
    let n = na + dt + nb;
    let mut right_action = Vec::with_capacity(lam.flat.dim());
    for j in 0..na {
        let mut r = Matrix::zeros(n, n);
        r.set_block(0, 0, da_bi.right_action(j));
        right_action.push(r);
    }
    for k in 0..m.dim() {
        let mut r = Matrix::zeros(n, n);
        let cols: Vec<Vec<F>> = (0..na).map(|i| lhs_data.class_of(i, k)).collect();
        r.set_block(na, 0, &g.mul(&Matrix::from_columns(&cols, lhs.dim())));
        right_action.push(r);
    }
    for j in 0..nb {
        let mut r = Matrix::zeros(n, n);
        r.set_block(na, na, rhs.right_action(j));
        r.set_block(na + dt, na + dt, db_bi.right_action(j));
        right_action.push(r);
    }

    Module::new(&lam.flat.opposite(), n, right_action.clone())
        .map_err(|e| RssError::Certificate(format!("right action is not a Λ-action: {e}")))?;
    if !is_bimodule(left_module.actions(), &right_action) {
        return Err(RssError::Certificate("left and right actions on T do not commute".into()));
    }
    if is_isomorphic(&left_module, &cotilting_t(lam)?.module)?.is_none() {
        return Err(RssError::Certificate("_Λ T differs from the cotilting module".into()));
    }
    let lam_r = right_lambda(lam)?;
    let right = as_right_module(lam, &lam_r, n, &right_action)?;
    if is_isomorphic(&right, &right_cotilting_u(&lam_r)?.module)?.is_none() {
        return Err(RssError::Certificate("T_Λ differs from (D(A), D(A) ⊗_A M)_Id ⊕ (0, D(B))".into()));
    }
    Ok(TwoSidedT { lam: lam.clone(), left_module, right_action, g: g.clone() })
}

/// `T` for an exchangeable `M`, with the isomorphism `g` found by search.
pub fn exchangeable_t<F: Field>(lam: &Arc<TriangularAlgebra<F>>) -> Res<TwoSidedT<F>> {
    let g = crate::bimtri::exchangeable_iso(&lam.m)?.ok_or(RssError::NotExchangeable)?;
    bimodule_t(lam, &g)
}

impl<F: Field> TwoSidedT<F> {
    pub fn dim(&self) -> usize {
        self.left_module.dim()
    }

    /// `T_Λ` as a `Λ'`-module.
    pub fn right_module(&self) -> Res<Module<F>> {
        let lam_r = right_lambda(&self.lam)?;
        as_right_module(&self.lam, &lam_r, self.dim(), &self.right_action)
    }

    pub fn functor(&self) -> DualHomFunctor<F> {
        DualHomFunctor {
            lam: self.lam.clone(),
            left: self.left_module.clone(),
            right: self.right_action.clone(),
            label: "D Hom(−, T)".into(),
        }
    }
}

/// Evidence that `ρ: Λ → End_Λ(T)^op`, `λ ↦ (t ↦ tλ)`, is an algebra isomorphism.
#[derive(Clone, Debug)]
pub struct EndCertificate<F> {
    pub end_dim: usize,
    pub lambda_dim: usize,
    /// Column `i` holds the coordinates of `ρ(λ_i)` in the Hom basis.
    pub rho: Matrix<F>,
    /// Structure constants checked, `dim Λ²` of them.
    pub products_checked: usize,
}

pub fn end_iso_check<F: Field>(t: &TwoSidedT<F>) -> Res<EndCertificate<F>> {
    let n = t.dim();
    let end = hom_basis(&t.left_module, &t.left_module)?;
    let lambda_dim = t.lam.flat.dim();
    if end.len() != lambda_dim {
        return Err(RssError::Certificate(format!("dim End(T) = {} but dim Λ = {lambda_dim}", end.len())));
    }
    let coords = Coordinates::new(n * n, &end.iter().map(Matrix::vectorize).collect::<Vec<_>>());
    let mut cols = Vec::with_capacity(lambda_dim);
    for (i, r) in t.right_action.iter().enumerate() {
        let c = coords
            .coords(&r.vectorize())
            .ok_or_else(|| RssError::Certificate(format!("ρ(λ_{i}) is not a Λ-endomorphism")))?;
        cols.push(c);
    }
    let rho = Matrix::from_columns(&cols, end.len());
    if !rho.is_invertible() {
        return Err(RssError::Certificate("ρ is not bijective".into()));
    }
    let l = t.lam.flat.left_mults();
    let mut products_checked = 0;
    for i in 0..lambda_dim {
        for j in 0..lambda_dim {
            // λ_i λ_j = Σ_k (L_i)_{kj} λ_k acts by R_j R_i
            let mut expected = Matrix::zeros(n, n);
            for (k, r) in t.right_action.iter().enumerate() {
                expected.add_scaled(&l[i][(k, j)], r);
            }
            if t.right_action[j].mul(&t.right_action[i]) != expected {
                return Err(RssError::Certificate(format!("ρ(λ_{i} λ_{j}) ≠ ρ(λ_{i}) ∘op ρ(λ_{j})")));
            }
            products_checked += 1;
        }
    }
    let mut one = Matrix::zeros(n, n);
    for (u, r) in t.lam.flat.unit().iter().zip(&t.right_action) {
        one.add_scaled(u, r);
    }
    if !one.is_identity() {
        return Err(RssError::Certificate("ρ(1) is not the identity".into()));
    }
    Ok(EndCertificate { end_dim: end.len(), lambda_dim, rho, products_checked })
}

/// `Hom_Λ(N, W)` with a basis and the right `Λ`-action `(h·λ)(n) = h(n)·λ`.
#[derive(Clone, Debug)]
pub struct HomIntoBimodule<F> {
    pub basis: Vec<Matrix<F>>,
    /// `actions[i]` is the matrix of `h ↦ h·λ_i` in the basis.
    pub actions: Vec<Matrix<F>>,
    coords: Coordinates<F>,
}

impl<F: Field> HomIntoBimodule<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, h: &Matrix<F>) -> Option<Vec<F>> {
        self.coords.coords(&h.vectorize())
    }
}

/// The image of an object under a [`DualHomFunctor`], kept with the data
/// needed to apply the functor to maps.
#[derive(Clone, Debug)]
pub struct FunctorImage<F> {
    pub triple: TripleModule<F>,
    pub hom: HomIntoBimodule<F>,
    /// Columns are the bases of `e1` and `e2` parts of `D Hom(t, W)`.
    basis_change: Matrix<F>,
    basis_change_inverse: Matrix<F>,
}

/// `D Hom_Λ(−, W)` for a `Λ`-`Λ`-bimodule `W`: `T` for the RSS functor, `Λ`
/// for the Nakayama functor.
#[derive(Clone, Debug)]
pub struct DualHomFunctor<F> {
    pub lam: Arc<TriangularAlgebra<F>>,
    pub left: Module<F>,
    pub right: Vec<Matrix<F>>,
    pub label: String,
}

impl<F: Field> DualHomFunctor<F> {
    pub fn nakayama(lam: &Arc<TriangularAlgebra<F>>) -> Self {
        DualHomFunctor {
            lam: lam.clone(),
            left: regular_module(&lam.flat),
            right: lam.flat.right_mults().to_vec(),
            label: "Nakayama".into(),
        }
    }

    pub fn hom_into(&self, n: &Module<F>) -> Res<HomIntoBimodule<F>> {
        let basis = hom_basis(n, &self.left)?;
        let coords = Coordinates::new(self.left.dim() * n.dim(), &basis.iter().map(Matrix::vectorize).collect::<Vec<_>>());
        let actions = self
            .right
            .iter()
            .map(|r| {
                let cols: Vec<Vec<F>> =
                    basis.iter().map(|h| coords.coords(&r.mul(h).vectorize()).expect("h·λ is a Λ-map")).collect();
                Matrix::from_columns(&cols, basis.len())
            })
            .collect();
        Ok(HomIntoBimodule { basis, actions, coords })
    }

    /// `Hom_Λ(t, W)` as a right `Λ`-module, i.e. a `Λ'`-triple.
    pub fn hom_right_module(&self, t: &TripleModule<F>) -> Res<TripleModule<F>> {
        let h = self.hom_into(&t.to_flat())?;
        let lam_r = right_lambda(&self.lam)?;
        let m = as_right_module(&self.lam, &lam_r, h.dim(), &h.actions)?;
        Ok(flat_to_triple(&lam_r, &m)?.0)
    }

    pub fn apply(&self, t: &TripleModule<F>) -> Res<FunctorImage<F>> {
        let hom = self.hom_into(&t.to_flat())?;
        let action = hom.actions.iter().map(Matrix::transpose).collect();
        let d = Module::new(&self.lam.flat, hom.dim(), action)?;
        let (triple, p) = flat_to_triple(&self.lam, &d)?;
        let pinv = p.inverse().expect("basis change is invertible");
        Ok(FunctorImage { triple, hom, basis_change: p, basis_change_inverse: pinv })
    }

    /// The image of a map `u: t → t'` given on flat modules, as a flat map
    /// between the image triples.
    pub fn apply_map(&self, src: &FunctorImage<F>, tgt: &FunctorImage<F>, u: &Matrix<F>) -> Matrix<F> {
        let cols: Vec<Vec<F>> =
            tgt.hom.basis.iter().map(|h| src.hom.coords(&h.mul(u)).expect("h∘u is a Λ-map")).collect();
        let hu = Matrix::from_columns(&cols, src.hom.dim());
        tgt.basis_change_inverse.mul(&hu.transpose()).mul(&src.basis_change)
    }

    /// `Hom_{Λ^op}(D f, W_Λ)` with the left action from `W`: a quasi-inverse
    /// when `W = T`.
    pub fn quasi_inverse(&self, f: &TripleModule<F>) -> Res<TripleModule<F>> {
        let lam_r = right_lambda(&self.lam)?;
        let u = duality_f_to_sr(&lam_r, f)?.to_flat();
        let w = as_right_module(&self.lam, &lam_r, self.left.dim(), &self.right)?;
        let basis = hom_basis(&u, &w)?;
        let coords = Coordinates::new(w.dim() * u.dim(), &basis.iter().map(Matrix::vectorize).collect::<Vec<_>>());
        let actions = self
            .left
            .actions()
            .iter()
            .map(|l| {
                let cols: Vec<Vec<F>> =
                    basis.iter().map(|h| coords.coords(&l.mul(h).vectorize()).expect("λ·h is a Λ^op-map")).collect();
                Matrix::from_columns(&cols, basis.len())
            })
            .collect();
        let m = Module::new(&self.lam.flat, basis.len(), actions)?;
        Ok(flat_to_triple(&self.lam, &m)?.0)
    }
}

/// `D Hom_Λ(t, T)` for `t` in `S(A, M, B)`.
pub fn rss_functor<F: Field>(t_bimodule: &TwoSidedT<F>, t: &TripleModule<F>) -> Res<TripleModule<F>> {
    if !in_s(t) {
        return Err(RssError::NotInS);
    }
    Ok(t_bimodule.functor().apply(t)?.triple)
}

/// `Hom_Λ(t, T)` as a right `Λ`-module, written as a `Λ'`-triple.
pub fn hom_into_t<F: Field>(t_bimodule: &TwoSidedT<F>, t: &TripleModule<F>) -> Res<TripleModule<F>> {
    t_bimodule.functor().hom_right_module(t)
}

/// `N_Λ(m) = D Hom_Λ(m, Λ)`.
pub fn nakayama<F: Field>(lam: &Arc<TriangularAlgebra<F>>, m: &Module<F>) -> Res<Module<F>> {
    let hom = DualHomFunctor::nakayama(lam).hom_into(m)?;
    Ok(Module::new(&lam.flat, hom.dim(), hom.actions.iter().map(Matrix::transpose).collect())?)
}

/// Result of [`verify_rss_property`].
#[derive(Clone, Debug)]
pub struct RssReport {
    pub functor: String,
    pub checks: Vec<AxiomCheck>,
    /// Corpus `S` names with the corpus `F` name of their image, when one matches.
    pub pairing: Vec<(String, Option<String>)>,
}

impl RssReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for RssReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "functor: {}", self.functor)?;
        let width = self.checks.iter().map(|c| c.axiom.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            write!(f, "{:width$}  {status}  {}", c.axiom, c.ledger)?;
            if let Some(w) = &c.witness {
                write!(f, "  witness: {w}")?;
            }
            writeln!(f)?;
        }
        for (s, img) in &self.pairing {
            writeln!(f, "{s} ↦ {}", img.as_deref().unwrap_or("?"))?;
        }
        Ok(())
    }
}

struct Check {
    axiom: &'static str,
    checked: usize,
    witness: Option<String>,
}

impl Check {
    fn new(axiom: &'static str) -> Self {
        Check { axiom, checked: 0, witness: None }
    }

    fn record(&mut self, ok: bool, w: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(w());
        }
    }

    fn finish(self, what: &str) -> AxiomCheck {
        AxiomCheck {
            axiom: self.axiom.into(),
            passed: self.witness.is_none(),
            witness: self.witness,
            ledger: format!("{} {what}", self.checked),
        }
    }
}

fn iso<F: Field>(x: &TripleModule<F>, y: &TripleModule<F>) -> Res<bool> {
    Ok(is_isomorphic(&x.to_flat(), &y.to_flat())?.is_some())
}

/// Checks the RSS property of `functor` on the corpus: images of `S` lie in
/// `F`, `F[X; 0] ≅ [X; Hom_A(M, X)]_φ`, `F[M ⊗ Y; Y]_Id ≅ [0; Y]`, the functor
/// is bijective on Hom spaces and preserves composition, and every corpus
/// object of `F` is hit unless its preimage is larger than the corpus allows.
pub fn verify_rss_property<F: Field>(functor: &DualHomFunctor<F>, corpus: &Corpus<F>) -> Res<RssReport> {
    let lam = &functor.lam;
    let images: Vec<FunctorImage<F>> =
        corpus.s.par_iter().map(|(_, t)| functor.apply(t)).collect::<Res<Vec<_>>>()?;
    let mut checks = Vec::new();

    let mut c = Check::new("images lie in F");
    for ((name, _), img) in corpus.s.iter().zip(&images) {
        c.record(in_f(&img.triple)?, || name.clone());
    }
    checks.push(c.finish("objects"));

    let mut c = Check::new("F[X;0] ≅ [X; Hom(M,X)]");
    for (name, x) in &corpus.a {
        let t = TripleModule::new(lam, x.clone(), Module::zero(&lam.b), Matrix::zeros(x.dim(), 0))?;
        let ok = iso(&functor.apply(&t)?.triple, &TripleModule::coinduced_from_a(lam, x.clone())?)?;
        c.record(ok, || name.clone());
    }
    checks.push(c.finish("objects"));

    let mut c = Check::new("F[M⊗Y;Y] ≅ [0;Y]");
    for (name, y) in &corpus.b {
        let t = TripleModule::induced_from_b(lam, y.clone())?;
        let target = TripleModule::new(lam, Module::zero(&lam.a), y.clone(), Matrix::zeros(0, 0))?;
        c.record(iso(&functor.apply(&t)?.triple, &target)?, || name.clone());
    }
    checks.push(c.finish("objects"));

    // F on a Hom basis for every ordered pair
    let n = corpus.s.len();
    let maps: Vec<Vec<(Vec<Matrix<F>>, Vec<Matrix<F>>, usize)>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (si, sj) = (corpus.s[i].1.to_flat(), corpus.s[j].1.to_flat());
                    let us = hom_basis(&si, &sj)?;
                    let fus = us.iter().map(|u| functor.apply_map(&images[i], &images[j], u)).collect();
                    let target_dim = hom_basis(&images[i].triple.to_flat(), &images[j].triple.to_flat())?.len();
                    Ok((us, fus, target_dim))
                })
                .collect::<Res<Vec<_>>>()
        })
        .collect::<Res<Vec<_>>>()?;

    let mut c = Check::new("bijective on Hom spaces");
    for i in 0..n {
        for j in 0..n {
            let (us, fus, target_dim) = &maps[i][j];
            let rank = Matrix::from_columns(&fus.iter().map(Matrix::vectorize).collect::<Vec<_>>(), {
                let t = &images[j].triple;
                let s = &images[i].triple;
                t.dim() * s.dim()
            })
            .rank();
            c.record(rank == us.len() && rank == *target_dim, || {
                format!("({}, {}): dim {} vs {}, rank {rank}", corpus.s[i].0, corpus.s[j].0, us.len(), target_dim)
            });
        }
    }
    checks.push(c.finish("pairs"));

    let composition: Vec<Res<(usize, Option<String>)>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut count = 0;
            for j in 0..n {
                for k in 0..n {
                    let (us, fus, _) = &maps[i][j];
                    let (vs, fvs, _) = &maps[j][k];
                    for (u, fu) in us.iter().zip(fus) {
                        for (v, fv) in vs.iter().zip(fvs) {
                            count += 1;
                            if functor.apply_map(&images[i], &images[k], &v.mul(u)) != fv.mul(fu) {
                                let w = format!("{} → {} → {}", corpus.s[i].0, corpus.s[j].0, corpus.s[k].0);
                                return Ok((count, Some(w)));
                            }
                        }
                    }
                }
            }
            Ok((count, None))
        })
        .collect();
    let mut c = Check::new("preserves composition");
    for r in composition {
        let (count, w) = r?;
        c.checked += count;
        if let (Some(w), None) = (w, &c.witness) {
            c.witness = Some(w);
        }
    }
    checks.push(c.finish("composable pairs"));

    let mut pairing = Vec::with_capacity(n);
    let mut hit = vec![false; corpus.f.len()];
    for ((name, _), img) in corpus.s.iter().zip(&images) {
        let mut found = None;
        for (idx, (fname, ft)) in corpus.f.iter().enumerate() {
            if iso(&img.triple, ft)? {
                hit[idx] = true;
                found = Some(fname.clone());
                break;
            }
        }
        pairing.push((name.clone(), found));
    }
    // an object whose preimage is larger than every corpus object of S is
    // missed only because the corpus is truncated
    let largest = corpus.s.iter().map(|(_, t)| t.dim()).max().unwrap_or(0);
    let mut c = Check::new("corpus F objects are hit");
    let mut beyond = 0;
    for ((fname, ft), h) in corpus.f.iter().zip(&hit) {
        if !*h && functor.quasi_inverse(ft).is_ok_and(|pre| pre.dim() > largest) {
            beyond += 1;
            continue;
        }
        c.record(*h, || fname.clone());
    }
    checks.push(c.finish(&format!("objects, {beyond} with preimages beyond the corpus")));

    Ok(RssReport { functor: functor.label.clone(), checks, pairing })
}

/// A pair of objects whose Hom dimension an RSS equivalence would have to
/// preserve, with the two dimensions found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomObstruction {
    pub source: String,
    pub target: String,
    /// `dim Hom` between the objects of `S`.
    pub dim_s: usize,
    /// `dim Hom` between their prescribed images in `F`.
    pub dim_f: usize,
}

impl fmt::Display for HomObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim Hom({}, {}) = {} in S but {} in F", self.source, self.target, self.dim_s, self.dim_f)
    }
}

/// Any RSS equivalence sends `[X; 0]` to `[X; Hom_A(M, X)]_φ` and
/// `[M ⊗ Y; Y]_Id` to `[0; Y]`, so Hom dimensions between these objects must
/// agree on both sides. Lists the corpus pairs where they do not.
pub fn rss_obstructions<F: Field>(lam: &Arc<TriangularAlgebra<F>>, corpus: &Corpus<F>) -> Res<Vec<HomObstruction>> {
    let mut objects: Vec<(String, Module<F>, Module<F>)> = Vec::new();
    for (name, x) in &corpus.a {
        let s = TripleModule::new(lam, x.clone(), Module::zero(&lam.b), Matrix::zeros(x.dim(), 0))?;
        let f = TripleModule::coinduced_from_a(lam, x.clone())?;
        objects.push((format!("[{name};0]"), s.to_flat(), f.to_flat()));
    }
    for (name, y) in &corpus.b {
        let s = TripleModule::induced_from_b(lam, y.clone())?;
        let f = TripleModule::new(lam, Module::zero(&lam.a), y.clone(), Matrix::zeros(0, 0))?;
        objects.push((format!("[M⊗{name};{name}]"), s.to_flat(), f.to_flat()));
    }
    let found: Vec<Res<Vec<HomObstruction>>> = objects
        .par_iter()
        .map(|(n1, s1, f1)| {
            let mut out = Vec::new();
            for (n2, s2, f2) in &objects {
                let (dim_s, dim_f) = (hom_basis(s1, s2)?.len(), hom_basis(f1, f2)?.len());
                if dim_s != dim_f {
                    out.push(HomObstruction { source: n1.clone(), target: n2.clone(), dim_s, dim_f });
                }
            }
            Ok(out)
        })
        .collect();
    let mut out = Vec::new();
    for r in found {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
