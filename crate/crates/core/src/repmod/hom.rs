use crate::algebra::{duality_d, indec_projectives};
use crate::exactla::{kronecker, Field, Matrix, Subspace};

use super::{Module, ModuleError, ModuleHom};

/// A basis of `Hom(x, y)` as `y.dim × x.dim` matrices.
pub fn hom_basis<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<Vec<Matrix<F>>, ModuleError> {
    x.same_algebra(y)?;
    if x.dim() == 0 || y.dim() == 0 {
        return Ok(Vec::new());
    }
    match (x.vertex_form(), y.vertex_form()) {
        (Some(vx), Some(vy)) => {
            let nv = vx.dims.len();
            let mut offsets = Vec::with_capacity(nv);
            let mut n = 0;
            for v in 0..nv {
                offsets.push(n);
                n += vx.dims[v] * vy.dims[v];
            }
            let arrows = x.algebra().arrows()?;
            let mut rows: Vec<Matrix<F>> = Vec::new();
            for (ai, a) in arrows.iter().enumerate() {
                let (s, t) = (a.source, a.target);
                let (xa, ya) = (&vx.arrows[ai], &vy.arrows[ai]);
                let r = vy.dims[t] * vx.dims[s];
                if r == 0 {
                    continue;
                }
                // f_t·X_a − Y_a·f_s = 0, vectorized column-major
                let mut block = Matrix::zeros(r, n);
                let lhs = kronecker(&xa.transpose(), &Matrix::identity(vy.dims[t]));
                let rhs = kronecker(&Matrix::identity(vx.dims[s]), ya);
                add_block(&mut block, offsets[t], &lhs, &F::one());
                add_block(&mut block, offsets[s], &rhs, &-F::one());
                rows.push(block);
            }
            let system = Matrix::vstack(&rows.iter().collect::<Vec<_>>());
            let kernel = if rows.is_empty() { Subspace::full(n) } else { system.kernel() };
            Ok(kernel
                .basis_vectors()
                .iter()
                .map(|k| {
                    let mut f = Matrix::zeros(y.dim(), x.dim());
                    for v in 0..nv {
                        let (dx, dy) = (vx.dims[v], vy.dims[v]);
                        if dx * dy == 0 {
                            continue;
                        }
                        let b = Matrix::unvectorize(&k[offsets[v]..offsets[v] + dx * dy], dy, dx);
                        f.set_block(vy.offsets[v], vx.offsets[v], &b);
                    }
                    vy.basis.mul(&f).mul(&vx.inverse)
                })
                .collect())
        }
        _ => Ok(generic_hom(x, y)),
    }
}

fn add_block<F: Field>(m: &mut Matrix<F>, col: usize, b: &Matrix<F>, c: &F) {
    for i in 0..b.nrows() {
        for j in 0..b.ncols() {
            if !b[(i, j)].is_zero() {
                m[(i, col + j)] += c.clone() * b[(i, j)].clone();
            }
        }
    }
}

/// Intersects the solution spaces generator by generator to keep systems small.
fn generic_hom<F: Field>(x: &Module<F>, y: &Module<F>) -> Vec<Matrix<F>> {
    let (dx, dy) = (x.dim(), y.dim());
    let n = dx * dy;
    let mut basis = Matrix::identity(n);
    for g in x.algebra().generators() {
        let sys = kronecker(&x.act(&g).transpose(), &Matrix::identity(dy)).sub(&kronecker(&Matrix::identity(dx), &y.act(&g)));
        let k = sys.mul(&basis).kernel();
        basis = basis.mul(&k.basis_columns());
        if basis.ncols() == 0 {
            break;
        }
    }
    basis.column_vectors().iter().map(|v| Matrix::unvectorize(v, dy, dx)).collect()
}

pub fn hom_space<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<Vec<ModuleHom<F>>, ModuleError> {
    Ok(hom_basis(x, y)?.into_iter().map(|m| ModuleHom::new_unchecked(x, y, m)).collect())
}

fn radical_generators<F: Field>(x: &Module<F>) -> Result<Vec<Matrix<F>>, ModuleError> {
    let alg = x.algebra();
    if alg.is_basic() {
        Ok(alg.arrows()?.iter().map(|a| x.act(&a.element)).collect())
    } else {
        Ok(alg.radical()?.space.basis_vectors().iter().map(|r| x.act(r)).collect())
    }
}

pub(crate) fn radical_subspace<F: Field>(x: &Module<F>) -> Result<Subspace<F>, ModuleError> {
    let mut v = Vec::new();
    for m in radical_generators(x)? {
        v.extend(m.column_vectors());
    }
    Ok(Subspace::from_vectors(x.dim(), v))
}

pub(crate) fn socle_subspace<F: Field>(x: &Module<F>) -> Result<Subspace<F>, ModuleError> {
    let gens = radical_generators(x)?;
    if gens.is_empty() {
        return Ok(Subspace::full(x.dim()));
    }
    Ok(Matrix::vstack(&gens.iter().collect::<Vec<_>>()).kernel())
}

/// `rad x` with its inclusion.
pub fn radical_submodule<F: Field>(x: &Module<F>) -> Result<(Module<F>, Matrix<F>), ModuleError> {
    Ok(x.submodule(&radical_subspace(x)?))
}

/// `x / rad x` with the projection.
pub fn top<F: Field>(x: &Module<F>) -> Result<(Module<F>, Matrix<F>), ModuleError> {
    Ok(x.quotient(&radical_subspace(x)?))
}

/// The annihilator of the radical, with its inclusion.
pub fn socle<F: Field>(x: &Module<F>) -> Result<(Module<F>, Matrix<F>), ModuleError> {
    Ok(x.submodule(&socle_subspace(x)?))
}

/// `⊕ P(i)^{m_i} ↠ x`, essential.
pub fn projective_cover<F: Field>(x: &Module<F>) -> Result<(Module<F>, ModuleHom<F>), ModuleError> {
    let alg = x.algebra();
    let es = alg.vertex_idempotents()?;
    let projectives = indec_projectives(alg)?;
    let rad = radical_subspace(x)?;
    let keep = rad.complement_indices();
    let mut parts: Vec<Module<F>> = Vec::new();
    let mut columns: Vec<Vec<F>> = Vec::new();
    for (i, e) in es.iter().enumerate() {
        let xe = x.act(e);
        // e_i·top(x), lifted: reduce the images of e_i modulo rad x and keep a basis
        let mut seen = rad.clone();
        for c in &keep {
            let mut u = vec![F::zero(); x.dim()];
            u[*c] = F::one();
            let v = xe.mul_vec(&u);
            if seen.contains(&v) {
                continue;
            }
            seen = seen.sum(&Subspace::from_vectors(x.dim(), vec![v.clone()]));
            let (p, incl) = &projectives[i];
            for col in incl.column_vectors() {
                columns.push(x.act(&col).mul_vec(&v));
            }
            parts.push(p.clone());
        }
    }
    if parts.is_empty() {
        let z = Module::zero(alg);
        let f = Matrix::zeros(x.dim(), 0);
        return Ok((z.clone(), ModuleHom::new_unchecked(&z, x, f)));
    }
    let p = Module::direct_sum(&parts.iter().collect::<Vec<_>>())?;
    let map = Matrix::from_columns(&columns, x.dim());
    Ok((p.clone(), ModuleHom::new_unchecked(&p, x, map)))
}

/// `x ↪ E`, essential, computed as the dual of a projective cover over the opposite algebra.
pub fn injective_envelope<F: Field>(x: &Module<F>) -> Result<(Module<F>, ModuleHom<F>), ModuleError> {
    let dx = duality_d(x);
    let (p, pi) = projective_cover(&dx)?;
    let e = duality_d(&p).retag(x.algebra())?;
    let mono = pi.matrix.transpose();
    Ok((e.clone(), ModuleHom::new_unchecked(x, &e, mono)))
}

/// `Ω x`, the kernel of the projective cover, with its inclusion into the cover.
pub fn syzygy<F: Field>(x: &Module<F>) -> Result<(Module<F>, Matrix<F>, Module<F>), ModuleError> {
    let (p, pi) = projective_cover(x)?;
    let (k, incl) = p.submodule(&pi.matrix.kernel());
    Ok((k, incl, p))
}

pub fn is_projective<F: Field>(x: &Module<F>) -> Result<bool, ModuleError> {
    Ok(projective_cover(x)?.0.dim() == x.dim())
}

pub fn is_injective<F: Field>(x: &Module<F>) -> Result<bool, ModuleError> {
    Ok(injective_envelope(x)?.0.dim() == x.dim())
}

/// `Ext^m(x, y)` as `Hom(Ω^m x, y)` modulo maps that extend to the projective cover.
#[derive(Clone, Debug)]
pub struct ExtSpace<F> {
    pub degree: usize,
    pub dim: usize,
    /// `Ω^m x`.
    pub syzygy: Module<F>,
    pub target: Module<F>,
    /// Maps `Ω^m x → y` whose classes form a basis.
    pub representatives: Vec<Matrix<F>>,
}

pub fn ext_space<F: Field>(m: usize, x: &Module<F>, y: &Module<F>) -> Result<ExtSpace<F>, ModuleError> {
    x.same_algebra(y)?;
    if m == 0 {
        let reps = hom_basis(x, y)?;
        return Ok(ExtSpace { degree: 0, dim: reps.len(), syzygy: x.clone(), target: y.clone(), representatives: reps });
    }
    let mut z = x.clone();
    for _ in 1..m {
        z = syzygy(&z)?.0;
    }
    let (k, incl, p) = syzygy(&z)?;
    let cocycles = hom_basis(&k, y)?;
    let coboundaries =
        Subspace::from_vectors(k.dim() * y.dim(), hom_basis(&p, y)?.iter().map(|f| f.mul(&incl).vectorize()).collect());
    let mut span = coboundaries.clone();
    let mut reps = Vec::new();
    for h in cocycles {
        let v = h.vectorize();
        if !span.contains(&v) {
            span = span.sum(&Subspace::from_vectors(v.len(), vec![v]));
            reps.push(h);
        }
    }
    Ok(ExtSpace { degree: m, dim: reps.len(), syzygy: k, target: y.clone(), representatives: reps })
}

pub fn ext_dim<F: Field>(m: usize, x: &Module<F>, y: &Module<F>) -> Result<usize, ModuleError> {
    if x.is_zero() || y.is_zero() {
        x.same_algebra(y)?;
        return Ok(0);
    }
    Ok(ext_space(m, x, y)?.dim)
}
