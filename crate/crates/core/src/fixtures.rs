//! Small algebras and bimodules shared by the unit tests.

use std::sync::Arc;

use crate::algebra::{
    indec_projectives, path_algebra_quotient, regular_module, simple_modules, Algebra, QuiverArrow, QuiverPresentation,
    RelationTerm,
};
use crate::bimtri::{Bimodule, TriangularAlgebra};
use crate::exactla::Field;

pub fn quiver(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&[&str]]) -> QuiverPresentation {
    QuiverPresentation {
        vertices: vertices.iter().map(|v| v.to_string()).collect(),
        arrows: arrows
            .iter()
            .map(|(l, s, t)| QuiverArrow { label: l.to_string(), source: s.to_string(), target: t.to_string() })
            .collect(),
        relations: relations
            .iter()
            .map(|p| vec![RelationTerm { coeff: 1, path: p.iter().map(|s| s.to_string()).collect() }])
            .collect(),
    }
}

pub fn alg<F: Field>(q: &QuiverPresentation) -> Arc<Algebra<F>> {
    Arc::new(path_algebra_quotient(q).unwrap())
}

pub fn field<F: Field>() -> Arc<Algebra<F>> {
    alg(&quiver(&["k"], &[], &[]))
}

/// `k(2 → 1)`, basis `e_1, e_2, x`.
pub fn a2<F: Field>() -> Arc<Algebra<F>> {
    alg(&quiver(&["1", "2"], &[("x", "2", "1")], &[]))
}

pub fn dual_numbers<F: Field>() -> Arc<Algebra<F>> {
    alg(&quiver(&["1"], &[("alpha", "1", "1")], &[&["alpha", "alpha"]]))
}

pub fn tri<F: Field>(m: &Bimodule<F>) -> Arc<TriangularAlgebra<F>> {
    Arc::new(TriangularAlgebra::new(m.left_algebra(), m, m.right_algebra()).unwrap())
}

/// `A = k(2 → 1)`, `B = k`, `M = Ae_1`; `Λ` is `k(2 → 1 ← 3)`.
pub fn projective_simple_bimodule<F: Field>() -> Bimodule<F> {
    let a = a2::<F>();
    let p1 = indec_projectives(&a).unwrap()[0].0.clone();
    Bimodule::over_field(&p1, &field()).unwrap()
}

/// `A = k(2 → 1)`, `B = k`, `M = S(2)`; `Λ` is `k(3 → 2 → 1)` modulo the composite.
pub fn top_simple_bimodule<F: Field>() -> Bimodule<F> {
    let a = a2::<F>();
    let s2 = simple_modules(&a).unwrap()[1].clone();
    Bimodule::over_field(&s2, &field()).unwrap()
}

/// `A = k[α]/α²`, `B = k`, `M = A`.
pub fn dual_numbers_over_field<F: Field>() -> Bimodule<F> {
    Bimodule::over_field(&regular_module(&dual_numbers()), &field()).unwrap()
}

/// `B = k(2 → 1)`, `A = B × B`, `M = A` with `B` acting diagonally.
pub fn diagonal_product_bimodule<F: Field>() -> Bimodule<F> {
    let b = a2::<F>();
    let a = Arc::new(Algebra::product(&b, &b).unwrap());
    let images: Vec<Vec<F>> = (0..3)
        .map(|j| {
            let mut v = vec![F::zero(); 6];
            v[j] = F::one();
            v[3 + j] = F::one();
            v
        })
        .collect();
    Bimodule::regular_via(&a, &b, &images).unwrap()
}
