use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactla::{Field, Matrix};

use super::hom::hom_basis;
use super::{Module, ModuleError};

/// Up to this many endomorphisms the locality test enumerates all of `End(x)`.
const EXHAUSTIVE_LIMIT: u128 = 1 << 14;
const RANDOM_SAMPLES: usize = 256;
const SEED: u64 = 0x7e1a_5eed;

/// One indecomposable summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand<F> {
    pub module: Module<F>,
    pub incl: Matrix<F>,
    pub proj: Matrix<F>,
}

#[derive(Clone, Debug)]
pub struct Decomposition<F> {
    pub summands: Vec<Summand<F>>,
    /// Indices into `summands`, one group per isomorphism class.
    pub classes: Vec<Vec<usize>>,
}

impl<F: Field> Decomposition<F> {
    /// Representatives with multiplicities.
    pub fn multiplicities(&self) -> Vec<(Module<F>, usize)> {
        self.classes.iter().map(|c| (self.summands[c[0]].module.clone(), c.len())).collect()
    }

    /// The isomorphism `x → ⊕ summands`.
    pub fn iso(&self) -> Matrix<F> {
        Matrix::vstack(&self.summands.iter().map(|s| &s.proj).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }
}

fn require_prime_field<F: Field>() -> Result<(), ModuleError> {
    if F::elements().is_some() {
        Ok(())
    } else {
        Err(ModuleError::UnsupportedField)
    }
}

/// `f^n` with `0 < rank < n` (Fitting), so that `x = ker ⊕ im` splits nontrivially.
fn fitting_power<F: Field>(f: &Matrix<F>, n: usize) -> Option<Matrix<F>> {
    let g = f.pow(n);
    let r = g.rank();
    (r > 0 && r < n).then_some(g)
}

fn combination<F: Field>(basis: &[Matrix<F>], coeffs: &[F], n: usize) -> Matrix<F> {
    let mut f = Matrix::zeros(n, n);
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            f.add_scaled(c, b);
        }
    }
    f
}

/// An endomorphism that is neither nilpotent nor invertible, if any exists.
///
/// Exact when `|End(x)|` is at most [`EXHAUSTIVE_LIMIT`]; beyond that a seeded
/// random search is used.
fn splitting_endomorphism<F: Field>(x: &Module<F>) -> Result<Option<Matrix<F>>, ModuleError> {
    let n = x.dim();
    let end = hom_basis(x, x)?;
    if end.len() <= 1 {
        return Ok(None);
    }
    for f in &end {
        if let Some(g) = fitting_power(f, n) {
            return Ok(Some(g));
        }
    }
    let elements = F::elements().ok_or(ModuleError::UnsupportedField)?;
    let p = elements.len() as u128;
    let total = (p as f64).powi(end.len() as i32);
    if total <= EXHAUSTIVE_LIMIT as f64 {
        let count = p.pow(end.len() as u32);
        let mut coeffs = vec![F::zero(); end.len()];
        for idx in 0..count {
            let mut k = idx;
            for c in coeffs.iter_mut() {
                *c = elements[(k % p) as usize].clone();
                k /= p;
            }
            if let Some(g) = fitting_power(&combination(&end, &coeffs, n), n) {
                return Ok(Some(g));
            }
        }
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_SAMPLES {
        let coeffs: Vec<F> = (0..end.len()).map(|_| F::random(&mut rng)).collect();
        if let Some(g) = fitting_power(&combination(&end, &coeffs, n), n) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// True iff `x ≠ 0` and `End(x)` is local.
pub fn is_indecomposable<F: Field>(x: &Module<F>) -> Result<bool, ModuleError> {
    require_prime_field::<F>()?;
    if x.is_zero() {
        return Ok(false);
    }
    Ok(splitting_endomorphism(x)?.is_none())
}

fn split<F: Field>(x: &Module<F>) -> Result<Vec<Summand<F>>, ModuleError> {
    let n = x.dim();
    let Some(g) = splitting_endomorphism(x)? else {
        return Ok(vec![Summand { module: x.clone(), incl: Matrix::identity(n), proj: Matrix::identity(n) }]);
    };
    let (k, ik) = x.submodule(&g.kernel());
    let (i, ii) = x.submodule(&g.image());
    let q = Matrix::hstack(&[&ik, &ii]).inverse().expect("Fitting decomposition is direct");
    let pk = q.block(0, 0, k.dim(), n);
    let pi = q.block(k.dim(), 0, i.dim(), n);
    let mut out = Vec::new();
    for (m, incl, proj) in [(k, ik, pk), (i, ii, pi)] {
        for s in split(&m)? {
            out.push(Summand { module: s.module, incl: incl.mul(&s.incl), proj: s.proj.mul(&proj) });
        }
    }
    Ok(out)
}

/// Splits `x` into indecomposables by Fitting's lemma and groups isomorphic summands.
pub fn decompose<F: Field>(x: &Module<F>) -> Result<Decomposition<F>, ModuleError> {
    require_prime_field::<F>()?;
    if x.is_zero() {
        return Ok(Decomposition { summands: Vec::new(), classes: Vec::new() });
    }
    let summands = split(x)?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'outer: for (i, s) in summands.iter().enumerate() {
        for c in classes.iter_mut() {
            if indecomposable_iso(&summands[c[0]].module, &s.module)?.is_some() {
                c.push(i);
                continue 'outer;
            }
        }
        classes.push(vec![i]);
    }
    Ok(Decomposition { summands, classes })
}

/// For indecomposable `x`, `y`: the non-isomorphisms form a proper subspace of
/// `Hom(x, y)` when `x ≅ y`, so some basis element is invertible.
pub(crate) fn indecomposable_iso<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<Option<Matrix<F>>, ModuleError> {
    if x.dim() != y.dim() || x.dim_vector().ok() != y.dim_vector().ok() {
        return Ok(None);
    }
    Ok(hom_basis(x, y)?.into_iter().find(Matrix::is_invertible))
}

/// Searches for an isomorphism `x → y`.
///
/// Over a prime field the answer is exact: a randomized search is backed by
/// comparing decompositions. Over `Q` only a sweep of small coefficient
/// combinations is tried, so `None` means no isomorphism was found.
pub fn is_isomorphic<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<Option<Matrix<F>>, ModuleError> {
    x.same_algebra(y)?;
    if x.dim() != y.dim() {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(Matrix::zeros(0, 0)));
    }
    if x.dim_vector().ok() != y.dim_vector().ok() {
        return Ok(None);
    }
    let hom = hom_basis(x, y)?;
    if hom.is_empty() {
        return Ok(None);
    }
    if hom.len() != hom_basis(x, x)?.len() || hom.len() != hom_basis(y, y)?.len() {
        return Ok(None);
    }
    if let Some(f) = hom.iter().find(|f| f.is_invertible()) {
        return Ok(Some(f.clone()));
    }
    let n = x.dim();
    match F::elements() {
        Some(_) => {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED);
            for _ in 0..32 {
                let coeffs: Vec<F> = (0..hom.len()).map(|_| F::random(&mut rng)).collect();
                let f = combination(&hom, &coeffs, n);
                if f.is_invertible() {
                    return Ok(Some(f));
                }
            }
            iso_by_decomposition(x, y)
        }
        None => Ok(sweep_small_coefficients(&hom, n)),
    }
}

fn iso_by_decomposition<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<Option<Matrix<F>>, ModuleError> {
    let dx = decompose(x)?;
    let dy = decompose(y)?;
    if dx.len() != dy.len() {
        return Ok(None);
    }
    let mut used = vec![false; dy.len()];
    let mut iso = Matrix::zeros(y.dim(), x.dim());
    for sx in &dx.summands {
        let mut found = false;
        for (j, sy) in dy.summands.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(phi) = indecomposable_iso(&sx.module, &sy.module)? {
                used[j] = true;
                iso = iso.add(&sy.incl.mul(&phi).mul(&sx.proj));
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    Ok(Some(iso))
}

/// Every combination with coefficients in `{-2, …, 2}`, or a seeded sample of
/// them when there are too many.
fn sweep_small_coefficients<F: Field>(hom: &[Matrix<F>], n: usize) -> Option<Matrix<F>> {
    const MAX_SWEEP: usize = 5usize.pow(6);
    let values: Vec<F> = (-2..=2).map(F::from_i64).collect();
    let k = hom.len();
    if k <= 6 {
        let total = 5usize.pow(k as u32);
        let mut coeffs = vec![F::zero(); k];
        for idx in 0..total.min(MAX_SWEEP) {
            let mut t = idx;
            for c in coeffs.iter_mut() {
                *c = values[t % 5].clone();
                t /= 5;
            }
            let f = combination(hom, &coeffs, n);
            if f.is_invertible() {
                return Some(f);
            }
        }
        None
    } else {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..MAX_SWEEP {
            let coeffs: Vec<F> = (0..k).map(|_| values[rng.gen_range(0..5)].clone()).collect();
            let f = combination(hom, &coeffs, n);
            if f.is_invertible() {
                return Some(f);
            }
        }
        None
    }
}
