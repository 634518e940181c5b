use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{Algebra, AlgebraError};
use crate::exactla::{Field, Matrix};

use super::decompose::{indecomposable_iso, is_indecomposable};
use super::hom::{hom_basis, radical_subspace, socle_subspace};
use super::{Module, ModuleError};

/// Largest total dimension accepted by [`enumerate_indecomposables`].
pub const DEFAULT_CEILING: usize = 6;

/// Candidate tuples of arrow matrices swept per dimension vector.
const MAX_CANDIDATES: u128 = 1 << 24;

/// One representative per isomorphism class of indecomposable modules of total
/// dimension at most `bound`, ordered by dimension vector.
///
/// The sweep is exhaustive over arrow matrices, so its cost grows like
/// `p^(Σ d_s·d_t)`.
pub fn enumerate_indecomposables<F: Field>(alg: &Arc<Algebra<F>>, bound: usize) -> Result<Vec<Module<F>>, ModuleError> {
    if bound > DEFAULT_CEILING {
        return Err(ModuleError::BoundTooLarge { bound, ceiling: DEFAULT_CEILING });
    }
    let nv = alg.vertex_count();
    if !alg.is_basic() {
        return Err(AlgebraError::NotBasic.into());
    }
    let mut out = Vec::new();
    for total in 1..=bound {
        for dims in compositions(total, nv) {
            out.extend(enumerate_with_dim_vector(alg, &dims)?);
        }
    }
    Ok(out)
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn connected_support<F: Field>(alg: &Algebra<F>, dims: &[usize]) -> Result<bool, AlgebraError> {
    let support: Vec<usize> = (0..dims.len()).filter(|&v| dims[v] > 0).collect();
    let Some(&start) = support.first() else { return Ok(false) };
    let arrows = alg.arrows()?;
    let mut seen = vec![false; dims.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for a in arrows {
            for (u, w) in [(a.source, a.target), (a.target, a.source)] {
                if u == v && dims[w] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    Ok(support.iter().all(|&v| seen[v]))
}

/// `[[I_r, 0], [0, 0]]`.
fn rank_normal_form<F: Field>(rows: usize, cols: usize, r: usize) -> Matrix<F> {
    Matrix::from_fn(rows, cols, |i, j| if i == j && i < r { F::one() } else { F::zero() })
}

/// Monic polynomials as coefficient lists, constant term first.
fn monic_polynomials<F: Field>(degree: usize, elements: &[F]) -> Vec<Vec<F>> {
    let mut out = vec![vec![F::one()]];
    for _ in 0..degree {
        let mut next = Vec::new();
        for tail in &out {
            for c in elements {
                let mut p = vec![c.clone()];
                p.extend_from_slice(tail);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn divides<F: Field>(d: &[F], p: &[F]) -> bool {
    let mut r = p.to_vec();
    let n = d.len() - 1;
    while r.len() > n {
        let lead = r.pop().expect("nonempty");
        let shift = r.len() - n;
        for (i, c) in d[..n].iter().enumerate() {
            r[shift + i] -= lead.clone() * c.clone();
        }
    }
    r.iter().all(|c| c.is_zero())
}

fn companion<F: Field>(p: &[F]) -> Matrix<F> {
    let n = p.len() - 1;
    Matrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -p[i].clone()
        } else if i == j + 1 {
            F::one()
        } else {
            F::zero()
        }
    })
}

/// One matrix per conjugacy class of `n × n` matrices: block sums of companion
/// matrices of invariant factors `f_1 | f_2 | … | f_k`.
fn rational_canonical_forms<F: Field>(n: usize, elements: &[F]) -> Vec<Matrix<F>> {
    fn extend<F: Field>(
        left: usize,
        prev: Option<&Vec<F>>,
        chosen: &mut Vec<Vec<F>>,
        by_degree: &[Vec<Vec<F>>],
        out: &mut Vec<Matrix<F>>,
    ) {
        if left == 0 {
            let blocks: Vec<Matrix<F>> = chosen.iter().map(|p| companion(p)).collect();
            out.push(Matrix::block_diag(&blocks.iter().collect::<Vec<_>>()));
            return;
        }
        let min_deg = prev.map_or(1, |p| p.len() - 1);
        for deg in min_deg..=left {
            for p in &by_degree[deg] {
                if prev.is_some_and(|q| !divides(q, p)) {
                    continue;
                }
                chosen.push(p.clone());
                extend(left - deg, Some(p), chosen, by_degree, out);
                chosen.pop();
            }
        }
    }
    let by_degree: Vec<Vec<Vec<F>>> = (0..=n).map(|d| monic_polynomials(d, elements)).collect();
    let mut out = Vec::new();
    extend(n, None, &mut Vec::new(), &by_degree, &mut out);
    out
}

/// Cheap isomorphism invariants used to bucket candidates before exact tests.
fn invariant<F: Field>(x: &Module<F>) -> Result<(usize, usize, usize), ModuleError> {
    Ok((hom_basis(x, x)?.len(), radical_subspace(x)?.dim(), socle_subspace(x)?.dim()))
}

/// All indecomposables with the given dimension vector, one per isomorphism class.
pub fn enumerate_with_dim_vector<F: Field>(alg: &Arc<Algebra<F>>, dims: &[usize]) -> Result<Vec<Module<F>>, ModuleError> {
    let elements = F::elements().ok_or(ModuleError::UnsupportedField)?;
    if dims.len() != alg.vertex_count() {
        return Err(ModuleError::Shape(format!("expected {} vertex dimensions", alg.vertex_count())));
    }
    if !connected_support(alg, dims)? {
        return Ok(Vec::new());
    }
    let arrows = alg.arrows()?;
    // basis changes at its ends put the largest arrow into rank normal form, or
    // rational canonical form for a loop
    let fixed = (0..arrows.len())
        .max_by_key(|&i| (dims[arrows[i].source] * dims[arrows[i].target], std::cmp::Reverse(i)))
        .filter(|&i| dims[arrows[i].source] * dims[arrows[i].target] > 0);
    let free: Vec<usize> = (0..arrows.len()).filter(|&i| Some(i) != fixed).collect();
    let entries: usize = free.iter().map(|&i| dims[arrows[i].source] * dims[arrows[i].target]).sum();
    let p = elements.len() as u128;
    let count = p.checked_pow(entries as u32).filter(|&c| c <= MAX_CANDIDATES).ok_or_else(|| {
        ModuleError::Shape(format!("dimension vector {dims:?} needs more than {MAX_CANDIDATES} candidates"))
    })? as u64;
    let forms: Vec<Matrix<F>> = match fixed {
        Some(i) if arrows[i].source == arrows[i].target => rational_canonical_forms(dims[arrows[i].source], &elements),
        Some(i) => {
            let (rows, cols) = (dims[arrows[i].target], dims[arrows[i].source]);
            (0..=rows.min(cols)).map(|r| rank_normal_form(rows, cols, r)).collect()
        }
        None => vec![Matrix::zeros(0, 0)],
    };

    let build = |g: u64| -> Option<Module<F>> {
        let (form, idx) = (&forms[(g / count) as usize], g % count);
        let mut k = idx;
        let mut mats: Vec<Matrix<F>> = Vec::with_capacity(arrows.len());
        for (ai, a) in arrows.iter().enumerate() {
            let (rows, cols) = (dims[a.target], dims[a.source]);
            if Some(ai) == fixed {
                mats.push(form.clone());
                continue;
            }
            let m = Matrix::from_fn(rows, cols, |_, _| {
                let e = elements[(k % p as u64) as usize].clone();
                k /= p as u64;
                e
            });
            mats.push(m);
        }
        let x = Module::from_representation(alg, dims, &mats).ok()?;
        is_indecomposable(&x).ok()?.then_some(x)
    };
    let found: Vec<Module<F>> = (0..forms.len() as u64 * count).into_par_iter().filter_map(build).collect();

    let mut reps: Vec<((usize, usize, usize), Module<F>)> = Vec::new();
    'outer: for x in found {
        let key = invariant(&x)?;
        for (k, y) in &reps {
            if *k == key && indecomposable_iso(y, &x)?.is_some() {
                continue 'outer;
            }
        }
        reps.push((key, x));
    }
    Ok(reps.into_iter().map(|(_, x)| x).collect())
}
