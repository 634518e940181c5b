//! Algebras, bimodules and random objects shared by the property tests.

#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use trimat::algebra::{
    indec_projectives, path_algebra_quotient, regular_module, simple_modules, Algebra, QuiverArrow, QuiverPresentation,
    RelationTerm,
};
use trimat::bimtri::{tensor_over_b, Bimodule, TriangularAlgebra, TripleModule};
use trimat::repmod::{enumerate_indecomposables, hom_basis, Module};
use trimat::{Field, Matrix};

pub fn quiver_over<F: Field>(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&[&str]]) -> Arc<Algebra<F>> {
    let q = QuiverPresentation {
        vertices: vertices.iter().map(|v| v.to_string()).collect(),
        arrows: arrows
            .iter()
            .map(|(l, s, t)| QuiverArrow { label: l.to_string(), source: s.to_string(), target: t.to_string() })
            .collect(),
        relations: relations
            .iter()
            .map(|p| vec![RelationTerm { coeff: 1, path: p.iter().map(|s| s.to_string()).collect() }])
            .collect(),
    };
    Arc::new(path_algebra_quotient(&q).unwrap())
}

pub fn field<F: Field>() -> Arc<Algebra<F>> {
    quiver_over(&["k"], &[], &[])
}

/// `k(2 → 1)`.
pub fn a2<F: Field>() -> Arc<Algebra<F>> {
    quiver_over(&["1", "2"], &[("x", "2", "1")], &[])
}

/// `k(3 → 2 → 1)`.
pub fn a3<F: Field>() -> Arc<Algebra<F>> {
    quiver_over(&["1", "2", "3"], &[("x", "2", "1"), ("y", "3", "2")], &[])
}

pub fn dual_numbers<F: Field>() -> Arc<Algebra<F>> {
    quiver_over(&["1"], &[("alpha", "1", "1")], &[&["alpha", "alpha"]])
}

/// The Kronecker algebra, of infinite representation type.
pub fn kronecker<F: Field>() -> Arc<Algebra<F>> {
    quiver_over(&["1", "2"], &[("a", "2", "1"), ("b", "2", "1")], &[])
}

pub fn tri<F: Field>(m: &Bimodule<F>) -> Arc<TriangularAlgebra<F>> {
    Arc::new(TriangularAlgebra::new(m.left_algebra(), m, m.right_algebra()).unwrap())
}

/// Bimodules with names, covering the exchangeable, (IP) and neither cases.
pub fn bimodules<F: Field>() -> Vec<(&'static str, Bimodule<F>)> {
    let a = a2::<F>();
    let k = field::<F>();
    let p1 = indec_projectives(&a).unwrap()[0].0.clone();
    let s2 = simple_modules(&a).unwrap()[1].clone();
    let b = a2::<F>();
    let prod = Arc::new(Algebra::product(&b, &b).unwrap());
    let diagonal: Vec<Vec<F>> = (0..3)
        .map(|j| {
            let mut v = vec![F::zero(); 6];
            v[j] = F::one();
            v[3 + j] = F::one();
            v
        })
        .collect();
    vec![
        ("regular a2", Bimodule::regular(&a)),
        ("projective simple", Bimodule::over_field(&p1, &k).unwrap()),
        ("top simple", Bimodule::over_field(&s2, &k).unwrap()),
        ("dual numbers", Bimodule::over_field(&regular_module(&dual_numbers()), &k).unwrap()),
        ("diagonal product", Bimodule::regular_via(&prod, &b, &diagonal).unwrap()),
    ]
}

/// The first bimodules only: their triangular algebras are small enough for
/// random testing of Ext computations.
pub fn small_lambdas<F: Field>() -> Vec<(&'static str, Arc<TriangularAlgebra<F>>)> {
    bimodules::<F>().into_iter().take(4).map(|(n, m)| (n, tri(&m))).collect()
}

/// Scalars cycled from `seed`.
pub fn scalars<F: Field>(seed: &[i64], n: usize, offset: usize) -> Vec<F> {
    (0..n).map(|i| if seed.is_empty() { F::zero() } else { F::from_i64(seed[(i + offset) % seed.len()]) }).collect()
}

pub fn matrix<F: Field>(rows: usize, cols: usize, seed: &[i64], offset: usize) -> Matrix<F> {
    Matrix::from_vec(rows, cols, scalars(seed, rows * cols, offset))
}

/// `L·U` with unit diagonals, always invertible.
pub fn invertible<F: Field>(n: usize, seed: &[i64]) -> Matrix<F> {
    let l = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => F::one(),
        std::cmp::Ordering::Greater => F::from_i64(seed.get((i * n + j) % seed.len().max(1)).copied().unwrap_or(0)),
        std::cmp::Ordering::Less => F::zero(),
    });
    let u = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => F::one(),
        std::cmp::Ordering::Less => F::from_i64(seed.get((j * n + i + 7) % seed.len().max(1)).copied().unwrap_or(0)),
        std::cmp::Ordering::Greater => F::zero(),
    });
    l.mul(&u)
}

/// A direct sum of indecomposables of dimension at most `bound`, chosen by
/// `picks`, in a basis scrambled by `seed`.
pub fn random_module<F: Field>(alg: &Arc<Algebra<F>>, bound: usize, picks: &[usize], seed: &[i64]) -> Module<F> {
    let palette = enumerate_indecomposables(alg, bound).unwrap();
    let chosen: Vec<&Module<F>> = picks.iter().map(|p| &palette[p % palette.len()]).collect();
    let sum = if chosen.is_empty() { Module::zero(alg) } else { Module::direct_sum(&chosen).unwrap() };
    sum.change_basis(&invertible(sum.dim(), seed))
}

/// A random combination of the maps `x → y`.
pub fn random_hom<F: Field>(x: &Module<F>, y: &Module<F>, seed: &[i64]) -> Matrix<F> {
    let basis = hom_basis(x, y).unwrap();
    let mut f = Matrix::zeros(y.dim(), x.dim());
    for (b, c) in basis.iter().zip(scalars::<F>(seed, basis.len(), 3)) {
        f.add_scaled(&c, b);
    }
    f
}

/// `[X; Y]_φ` with random `X`, `Y` and a random `A`-map `φ: M ⊗_B Y → X`.
pub fn random_triple<F: Field>(lam: &Arc<TriangularAlgebra<F>>, picks: &[usize], seed: &[i64]) -> TripleModule<F> {
    let half = picks.len() / 2;
    let x = random_module(&lam.a, 2, &picks[..half], seed);
    let y = random_module(&lam.b, 2, &picks[half..], &seed[1..]);
    let (tensor, _) = tensor_over_b(&lam.m, &y).unwrap();
    let phi = random_hom(&tensor, &x, seed);
    TripleModule::new(lam, x, y, phi).unwrap()
}

pub fn seed() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..4, 8..24)
}

pub fn picks(max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..64, 0..=max)
}
