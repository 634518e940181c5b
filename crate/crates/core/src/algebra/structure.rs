use crate::exactla::{Coordinates, Field, Matrix, Subspace};

use super::{Algebra, AlgebraError, BasicData};

/// An element of `e_t·rad·e_s` that is not in `rad²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow<F> {
    pub source: usize,
    pub target: usize,
    pub element: Vec<F>,
}

/// A product of arrows in composition order, or a vertex idempotent when empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

/// A basis of the algebra made of words, and the change of coordinates to it.
#[derive(Clone, Debug)]
pub struct WordBasis<F> {
    pub words: Vec<Word>,
    /// `expansion[k]` lists `(word index, coefficient)` with `b_k = Σ c·word`.
    pub expansion: Vec<Vec<(usize, F)>>,
}

#[derive(Debug)]
pub(crate) struct Shape<F> {
    pub arrows: Vec<Arrow<F>>,
    pub words: WordBasis<F>,
    pub generators: Vec<Vec<F>>,
}

fn sandwich<F: Field>(alg: &Algebra<F>, e: &[F], x: &[F], f: &[F]) -> Vec<F> {
    alg.mul(&alg.mul(e, x), f)
}

fn span_products<F: Field>(alg: &Algebra<F>, xs: &[Vec<F>], ys: &[Vec<F>]) -> Subspace<F> {
    let mut v = Vec::with_capacity(xs.len() * ys.len());
    for x in xs {
        let lx = alg.element_left_matrix(x);
        for y in ys {
            v.push(lx.mul_vec(y));
        }
    }
    Subspace::from_vectors(alg.dim(), v)
}

fn is_nilpotent_ideal<F: Field>(alg: &Algebra<F>, rad: &Subspace<F>) -> bool {
    let gens = rad.basis_vectors();
    let mut power = rad.clone();
    for _ in 0..=alg.dim() {
        if power.is_zero() {
            return true;
        }
        power = span_products(alg, &power.basis_vectors(), &gens);
    }
    power.is_zero()
}

pub(crate) fn validate_basic<F: Field>(alg: &Algebra<F>, data: &BasicData<F>) -> Result<(), AlgebraError> {
    let n = alg.dim();
    let err = |m: &str| Err(AlgebraError::BasicData(m.to_string()));
    if data.idempotents.len() != data.vertex_labels.len() {
        return err("one label per idempotent is required");
    }
    if data.idempotents.iter().any(|e| e.len() != n) || data.radical.ambient_dim() != n {
        return err("vector length differs from the algebra dimension");
    }
    let mut sum = vec![F::zero(); n];
    for (i, e) in data.idempotents.iter().enumerate() {
        for (s, x) in sum.iter_mut().zip(e) {
            *s += x.clone();
        }
        for (j, f) in data.idempotents.iter().enumerate() {
            let p = alg.mul(e, f);
            let expected = if i == j { e.clone() } else { vec![F::zero(); n] };
            if p != expected {
                return err("idempotents are not orthogonal idempotents");
            }
        }
    }
    if sum != alg.unit() {
        return err("idempotents do not sum to the unit");
    }
    let rad = data.radical.basis_vectors();
    let basis: Vec<Vec<F>> = (0..n).map(|i| alg.basis_vector(i)).collect();
    let two_sided = span_products(alg, &basis, &rad).sum(&span_products(alg, &rad, &basis));
    if !data.radical.contains_subspace(&two_sided) {
        return err("radical is not a two-sided ideal");
    }
    if !is_nilpotent_ideal(alg, &data.radical) {
        return err("radical is not nilpotent");
    }
    // n nonzero orthogonal idempotents in an n-dimensional A/R force A/R ≅ k^n
    if data.idempotents.iter().any(|e| e.iter().all(|c| c.is_zero())) {
        return err("zero idempotent");
    }
    if n - data.radical.dim() != data.idempotents.len() {
        return err("the algebra modulo the radical is not a product of copies of the field");
    }
    Ok(())
}

pub(crate) fn trace_form_radical<F: Field>(alg: &Algebra<F>) -> Result<Subspace<F>, AlgebraError> {
    let n = alg.dim();
    let p = F::characteristic();
    if p != 0 && p <= n as u64 {
        return Err(AlgebraError::UnsupportedCharacteristic { p, dim: n });
    }
    let trace = |m: &Matrix<F>| (0..n).fold(F::zero(), |acc, i| acc + m[(i, i)].clone());
    let gram = Matrix::from_fn(n, n, |i, j| trace(&alg.left_mult(i).mul(alg.left_mult(j))));
    let rad = gram.kernel();
    if !is_nilpotent_ideal(alg, &rad) {
        return Err(AlgebraError::RadicalNotNilpotent);
    }
    Ok(rad)
}

impl<F: Field> Shape<F> {
    pub(crate) fn compute(alg: &Algebra<F>) -> Result<Self, AlgebraError> {
        let data = alg.basic_data().ok_or(AlgebraError::NotBasic)?;
        let n = alg.dim();
        let rad = data.radical.basis_vectors();
        let rad2 = span_products(alg, &rad, &rad);
        let es = &data.idempotents;

        let mut arrows = Vec::new();
        for (s, es_) in es.iter().enumerate() {
            for (t, et) in es.iter().enumerate() {
                let mut span = Subspace::from_vectors(
                    n,
                    rad2.basis_vectors().iter().map(|x| sandwich(alg, et, x, es_)).collect(),
                );
                for r in &rad {
                    let x = sandwich(alg, et, r, es_);
                    if !span.contains(&x) {
                        span = span.sum(&Subspace::from_vectors(n, vec![x.clone()]));
                        arrows.push(Arrow { source: s, target: t, element: x });
                    }
                }
            }
        }

        // breadth-first words, keeping those independent of the previous ones
        let mut words: Vec<Word> = Vec::new();
        let mut vectors: Vec<Vec<F>> = Vec::new();
        let mut span = Subspace::zero(n);
        let mut frontier: Vec<usize> = Vec::new();
        for (v, e) in es.iter().enumerate() {
            words.push(Word { source: v, target: v, arrows: Vec::new() });
            vectors.push(e.clone());
            span = span.sum(&Subspace::from_vectors(n, vec![e.clone()]));
            frontier.push(words.len() - 1);
        }
        while !frontier.is_empty() && span.dim() < n {
            let mut next = Vec::new();
            for &w in &frontier {
                for (ai, a) in arrows.iter().enumerate() {
                    if a.source != words[w].target {
                        continue;
                    }
                    let x = alg.mul(&a.element, &vectors[w]);
                    if span.contains(&x) {
                        continue;
                    }
                    span = span.sum(&Subspace::from_vectors(n, vec![x.clone()]));
                    let mut arrs = vec![ai];
                    arrs.extend_from_slice(&words[w].arrows);
                    words.push(Word { source: words[w].source, target: a.target, arrows: arrs });
                    vectors.push(x);
                    next.push(words.len() - 1);
                }
            }
            frontier = next;
        }
        if span.dim() < n {
            return Err(AlgebraError::BasicData("idempotents and arrows do not generate the algebra".into()));
        }
        let coords = Coordinates::new(n, &vectors);
        let expansion = (0..n)
            .map(|k| {
                coords
                    .coords(&alg.basis_vector(k))
                    .expect("words span the algebra")
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();

        let mut generators: Vec<Vec<F>> = es.clone();
        generators.extend(arrows.iter().map(|a| a.element.clone()));
        Ok(Shape { arrows, words: WordBasis { words, expansion }, generators })
    }
}
