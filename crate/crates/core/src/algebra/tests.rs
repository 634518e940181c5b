use std::sync::Arc;

use super::*;
use crate::exactla::Zero;
use crate::repmod::{is_isomorphic, socle};
use crate::{F2, F3, Q};

fn arrow(label: &str, s: &str, t: &str) -> QuiverArrow {
    QuiverArrow { label: label.into(), source: s.into(), target: t.into() }
}

fn term(coeff: i64, path: &[&str]) -> RelationTerm {
    RelationTerm { coeff, path: path.iter().map(|s| s.to_string()).collect() }
}

fn linear_a2() -> QuiverPresentation {
    QuiverPresentation { vertices: vec!["a".into(), "b".into()], arrows: vec![arrow("x", "b", "a")], relations: vec![] }
}

/// Vertex 1 with loop α, vertex 2 with β: 2 → 1, relation α².
fn loop_with_tail() -> QuiverPresentation {
    QuiverPresentation {
        vertices: vec!["1".into(), "2".into()],
        arrows: vec![arrow("alpha", "1", "1"), arrow("beta", "2", "1")],
        relations: vec![vec![term(1, &["alpha", "alpha"])]],
    }
}

fn dual_numbers() -> QuiverPresentation {
    QuiverPresentation {
        vertices: vec!["1".into()],
        arrows: vec![arrow("alpha", "1", "1")],
        relations: vec![vec![term(1, &["alpha", "alpha"])]],
    }
}

fn point() -> QuiverPresentation {
    QuiverPresentation { vertices: vec!["1".into()], arrows: vec![], relations: vec![] }
}

#[test]
fn path_algebra_of_a2_has_dim_3() {
    let a = path_algebra_quotient::<F2>(&linear_a2()).unwrap();
    assert_eq!(a.dim(), 3);
    assert_eq!(a.labels(), ["e_a", "e_b", "x"]);
}

#[test]
fn loop_with_tail_has_dim_5() {
    let a = path_algebra_quotient::<F2>(&loop_with_tail()).unwrap();
    assert_eq!(a.dim(), 5);
    assert_eq!(a.labels(), ["e_1", "e_2", "alpha", "beta", "alpha*beta"]);
    // α·β = αβ, β·α = 0
    let ab = a.mul(&a.basis_vector(2), &a.basis_vector(3));
    assert_eq!(ab, a.basis_vector(4));
    assert!(a.mul(&a.basis_vector(3), &a.basis_vector(2)).iter().all(|c| c.is_zero()));
}

#[test]
fn single_vertex_is_the_field() {
    let a = path_algebra_quotient::<Q>(&point()).unwrap();
    assert_eq!(a.dim(), 1);
    assert_eq!(a.radical().unwrap().dim(), 0);
}

#[test]
fn loop_without_relations_is_rejected() {
    let q = QuiverPresentation { relations: vec![], ..dual_numbers() };
    assert_eq!(path_algebra_quotient::<F2>(&q).unwrap_err(), AlgebraError::InfiniteDimensional);
}

#[test]
fn relation_of_length_one_is_rejected() {
    let q = QuiverPresentation { relations: vec![vec![term(1, &["alpha"])]], ..dual_numbers() };
    assert!(matches!(path_algebra_quotient::<F2>(&q), Err(AlgebraError::NotAdmissible(_))));
}

#[test]
fn commutativity_relation_identifies_paths() {
    // square 4 → 1, 4 → 2 → ... : a → b → d and a → c → d commute
    let q = QuiverPresentation {
        vertices: vec!["a".into(), "b".into(), "c".into(), "d".into()],
        arrows: vec![arrow("p", "a", "b"), arrow("q", "b", "d"), arrow("r", "a", "c"), arrow("s", "c", "d")],
        relations: vec![vec![term(1, &["q", "p"]), term(-1, &["s", "r"])]],
    };
    let a = path_algebra_quotient::<F3>(&q).unwrap();
    assert_eq!(a.dim(), 4 + 4 + 1);
}

#[test]
fn opposite_twice_has_identical_constants() {
    let a = Arc::new(path_algebra_quotient::<F2>(&loop_with_tail()).unwrap());
    let op = a.opposite();
    assert!(!op.same_as(&a));
    assert!(op.opposite().same_as(&a));
    let c = Arc::new(path_algebra_quotient::<F2>(&dual_numbers()).unwrap());
    assert!(c.opposite().same_as(&c));
}

#[test]
fn opposite_of_a2_reverses_the_arrow() {
    let a = Arc::new(path_algebra_quotient::<F2>(&linear_a2()).unwrap());
    let op = a.opposite();
    let arr = op.arrows().unwrap();
    assert_eq!(arr.len(), 1);
    // x goes b → a in the algebra, a → b in the opposite
    assert_eq!((arr[0].source, arr[0].target), (0, 1));
    let q = QuiverPresentation { vertices: vec!["a".into(), "b".into()], arrows: vec![arrow("x", "a", "b")], relations: vec![] };
    assert_eq!(path_algebra_quotient::<F2>(&q).unwrap().left_mults(), op.left_mults());
}

#[test]
fn radicals_of_small_algebras() {
    assert_eq!(path_algebra_quotient::<F2>(&dual_numbers()).unwrap().radical().unwrap().dim(), 1);
    assert_eq!(path_algebra_quotient::<F2>(&linear_a2()).unwrap().radical().unwrap().dim(), 1);
}

#[test]
fn trace_form_radical_of_unpresented_dual_numbers() {
    let p = path_algebra_quotient::<Q>(&dual_numbers()).unwrap();
    let bare = Algebra::from_left_multiplication(p.labels().to_vec(), p.left_mults().to_vec(), p.unit().to_vec()).unwrap();
    assert_eq!(bare.radical().unwrap().space, Subspace::from_vectors(2, vec![vec![Q::from_i64(0), Q::from_i64(1)]]));
    let p2 = path_algebra_quotient::<F2>(&dual_numbers()).unwrap();
    let bare2 = Algebra::from_left_multiplication(p2.labels().to_vec(), p2.left_mults().to_vec(), p2.unit().to_vec()).unwrap();
    assert!(matches!(bare2.radical(), Err(AlgebraError::UnsupportedCharacteristic { .. })));
}

#[test]
fn vertex_idempotents_are_complete_and_orthogonal() {
    let a = path_algebra_quotient::<F2>(&loop_with_tail()).unwrap();
    let es = a.vertex_idempotents().unwrap();
    assert_eq!(es.len(), 2);
    let mut sum = vec![F2::zero(); a.dim()];
    for (i, e) in es.iter().enumerate() {
        for (j, f) in es.iter().enumerate() {
            let p = a.mul(e, f);
            if i == j {
                assert_eq!(&p, e);
            } else {
                assert!(p.iter().all(|c| c.is_zero()));
            }
        }
        for (s, x) in sum.iter_mut().zip(e) {
            *s += *x;
        }
    }
    assert_eq!(sum, a.unit());
}

#[test]
fn projectives_and_injectives_of_a2() {
    let a = Arc::new(path_algebra_quotient::<F2>(&linear_a2()).unwrap());
    let p: Vec<usize> = indec_projectives(&a).unwrap().iter().map(|(m, _)| m.dim()).collect();
    let i: Vec<usize> = indec_injectives(&a).unwrap().iter().map(|m| m.dim()).collect();
    assert_eq!(p, [1, 2]);
    assert_eq!(i, [2, 1]);
    assert!(is_isomorphic(&indec_projectives(&a).unwrap()[1].0, &indec_injectives(&a).unwrap()[0]).unwrap().is_some());
}

#[test]
fn dual_of_projective_has_simple_socle() {
    let a = Arc::new(path_algebra_quotient::<F2>(&linear_a2()).unwrap());
    let pb = &indec_projectives(&a).unwrap()[1].0;
    let d = duality_d(pb);
    assert_eq!(d.dim(), 2);
    assert_eq!(socle(&d).unwrap().0.dim(), 1);
}

#[test]
fn selfinjective_and_frobenius_predicates() {
    let field = Arc::new(path_algebra_quotient::<F2>(&point()).unwrap());
    let dual = Arc::new(path_algebra_quotient::<F2>(&dual_numbers()).unwrap());
    let a2 = Arc::new(path_algebra_quotient::<F2>(&linear_a2()).unwrap());
    for (alg, expected) in [(&field, true), (&dual, true), (&a2, false)] {
        assert_eq!(is_selfinjective(alg).unwrap(), expected);
        assert_eq!(is_frobenius(alg).unwrap(), expected);
    }
    let dq = Arc::new(path_algebra_quotient::<Q>(&dual_numbers()).unwrap());
    assert!(is_frobenius(&dq).unwrap());
}

#[test]
fn tensor_with_opposite_is_basic() {
    let a = Arc::new(path_algebra_quotient::<F2>(&linear_a2()).unwrap());
    let env = Algebra::enveloping(&a, &a).unwrap();
    assert_eq!(env.dim(), 9);
    assert_eq!(env.vertex_count(), 4);
    assert_eq!(env.radical().unwrap().dim(), 5);
    let prod = Algebra::product(&a, &a).unwrap();
    assert_eq!(prod.vertex_count(), 4);
    assert_eq!(prod.arrows().unwrap().len(), 2);
}
