use std::sync::Arc;

use super::*;
use crate::algebra::{indec_injectives, indec_projectives, is_frobenius};
use crate::bimtri::{exchangeable_iso, Bimodule};
use crate::fixtures::*;
use crate::monocat::in_f;
use crate::repmod::{decompose, enumerate_indecomposables, enumerate_with_dim_vector};
use crate::F2;

fn named<F: Field>(prefix: &str, xs: Vec<Module<F>>) -> Vec<(String, Module<F>)> {
    xs.into_iter().enumerate().map(|(i, x)| (format!("{prefix}{i}"), x)).collect()
}

fn flat_dims(t: &TripleModule<F2>) -> Vec<usize> {
    t.to_flat().dim_vector().unwrap()
}

#[test]
fn t_over_dual_numbers_has_dimension_five() {
    let lam = tri(&dual_numbers_over_field::<F2>());
    let t = exchangeable_t(&lam).unwrap();
    assert_eq!(t.dim(), 5);
    let mut dims: Vec<usize> = decompose(&t.right_module().unwrap()).unwrap().summands.iter().map(|s| s.module.dim()).collect();
    dims.sort();
    assert_eq!(dims, vec![1, 4]);
    let cert = end_iso_check(&t).unwrap();
    assert_eq!((cert.end_dim, cert.lambda_dim, cert.products_checked), (5, 5, 25));
}

#[test]
fn t_over_a_field_is_three_dimensional() {
    let k = field::<F2>();
    let lam = tri(&Bimodule::regular(&k));
    let t = exchangeable_t(&lam).unwrap();
    assert_eq!(t.dim(), 3);
    assert_eq!(end_iso_check(&t).unwrap().end_dim, 3);
}

#[test]
fn t_over_regular_bimodule_triples_the_dimension() {
    let a = a2::<F2>();
    let lam = tri(&Bimodule::regular(&a));
    let t = exchangeable_t(&lam).unwrap();
    // dim D(A) + dim (A ⊗_A D(A)) + dim D(A)
    assert_eq!(t.dim(), 9);
    assert!(end_iso_check(&t).is_ok());
}

#[test]
fn g_must_be_a_bimodule_isomorphism() {
    let lam = tri(&Bimodule::regular(&a2::<F2>()));
    let g = exchangeable_iso(&lam.m).unwrap().unwrap();
    assert_eq!(bimodule_t(&lam, &Matrix::zeros(g.nrows(), g.ncols())).unwrap_err(), RssError::NotBimoduleIso);
    // swapping two basis vectors of D(A) ⊗_A A breaks A-linearity
    let mut swap = Matrix::identity(g.ncols());
    swap[(0, 0)] = F2::new(0);
    swap[(1, 1)] = F2::new(0);
    swap[(0, 1)] = F2::new(1);
    swap[(1, 0)] = F2::new(1);
    assert_eq!(bimodule_t(&lam, &g.mul(&swap)).unwrap_err(), RssError::NotBimoduleIso);
    assert_eq!(exchangeable_t(&tri(&top_simple_bimodule::<F2>())).unwrap_err(), RssError::NotExchangeable);
}

#[test]
fn appendix_identities_hold_as_right_modules() {
    for m in [dual_numbers_over_field::<F2>(), Bimodule::regular(&a2::<F2>()), diagonal_product_bimodule::<F2>()] {
        let lam = tri(&m);
        let lam_r = right_lambda(&lam).unwrap();
        let t = exchangeable_t(&lam).unwrap();
        for x in enumerate_indecomposables(&lam.a, 2).unwrap() {
            let s = TripleModule::new(&lam, x.clone(), Module::zero(&lam.b), Matrix::zeros(x.dim(), 0)).unwrap();
            let expected = duality_f_to_sr(&lam_r, &TripleModule::coinduced_from_a(&lam, x).unwrap()).unwrap();
            assert!(is_isomorphic(&hom_into_t(&t, &s).unwrap().to_flat(), &expected.to_flat()).unwrap().is_some());
        }
        for y in enumerate_indecomposables(&lam.b, 2).unwrap() {
            let s = TripleModule::induced_from_b(&lam, y.clone()).unwrap();
            let zy = TripleModule::new(&lam, Module::zero(&lam.a), y, Matrix::zeros(0, 0)).unwrap();
            let expected = duality_f_to_sr(&lam_r, &zy).unwrap();
            assert!(is_isomorphic(&hom_into_t(&t, &s).unwrap().to_flat(), &expected.to_flat()).unwrap().is_some());
        }
        assert_eq!(hom_into_t(&t, &TripleModule::zero(&lam)).unwrap().dim(), 0);
    }
}

#[test]
fn rss_functor_over_dual_numbers() {
    let lam = tri(&dual_numbers_over_field::<F2>());
    let t = exchangeable_t(&lam).unwrap();
    let corpus = Corpus::indecomposables(&lam, 5).unwrap();
    assert_eq!((corpus.s.len(), corpus.f.len()), (3, 3));
    let report = verify_rss_property(&t.functor(), &corpus).unwrap();
    assert!(report.all_passed(), "{report}");
    // 1 ↦ 2/1, 1/1 ↦ the 4-dimensional one, 2/1/1 ↦ 2, in (V1, V2) dimensions
    let mut pairs: Vec<(Vec<usize>, Vec<usize>)> =
        corpus.s.iter().map(|(_, s)| (flat_dims(s), flat_dims(&rss_functor(&t, s).unwrap()))).collect();
    pairs.sort();
    assert_eq!(pairs, vec![(vec![1, 0], vec![1, 1]), (vec![2, 0], vec![2, 2]), (vec![2, 1], vec![0, 1])]);
}

#[test]
fn rss_functor_refuses_objects_outside_s() {
    let lam = tri(&dual_numbers_over_field::<F2>());
    let t = exchangeable_t(&lam).unwrap();
    let k = &enumerate_indecomposables(&lam.b, 1).unwrap()[0];
    let only_y = TripleModule::new(&lam, Module::zero(&lam.a), k.clone(), Matrix::zeros(0, 0)).unwrap();
    assert_eq!(rss_functor(&t, &only_y).unwrap_err(), RssError::NotInS);
}

/// Columns `(X1, X3, X2)` written top row over bottom row, as flat dimensions
/// in vertex order `a:1@1, a:2@1, a:1@2, a:2@2, b:1, b:2`.
fn columns(top: &str, bottom: &str) -> Vec<usize> {
    let d = |s: &str, i: usize| s.as_bytes()[i] as usize - b'0' as usize;
    vec![d(bottom, 0), d(top, 0), d(bottom, 2), d(top, 2), d(bottom, 1), d(top, 1)]
}

fn unique_with(lam: &Arc<TriangularAlgebra<F2>>, dims: &[usize], keep: impl Fn(&TripleModule<F2>) -> bool) -> TripleModule<F2> {
    let found: Vec<TripleModule<F2>> = enumerate_with_dim_vector(&lam.flat, dims)
        .unwrap()
        .iter()
        .map(|n| flat_to_triple(lam, n).unwrap().0)
        .filter(|t| keep(t))
        .collect();
    assert_eq!(found.len(), 1, "{dims:?}");
    found.into_iter().next().unwrap()
}

#[test]
fn rss_functor_over_diagonal_product_matches_positions() {
    let lam = tri(&diagonal_product_bimodule::<F2>());
    let vertex_labels = lam.flat.vertex_labels().unwrap().to_vec();
    assert_eq!(vertex_labels, ["a:1@1", "a:2@1", "a:1@2", "a:2@2", "b:1", "b:2"]);
    let pairing = [
        (("100", "100"), ("110", "110")),
        (("000", "100"), ("000", "110")),
        (("100", "111"), ("110", "010")),
        (("001", "000"), ("011", "000")),
        (("000", "111"), ("000", "010")),
        (("101", "111"), ("121", "010")),
        (("111", "111"), ("010", "010")),
        (("111", "000"), ("010", "000")),
        (("000", "001"), ("000", "011")),
        (("001", "111"), ("011", "010")),
        (("100", "000"), ("110", "000")),
        (("001", "001"), ("011", "011")),
    ];
    let t = exchangeable_t(&lam).unwrap();
    let mut corpus = Corpus {
        a: named("a", enumerate_indecomposables(&lam.a, 2).unwrap()),
        b: named("b", enumerate_indecomposables(&lam.b, 2).unwrap()),
        s: Vec::new(),
        f: Vec::new(),
    };
    for ((st, sb), (ft, fb)) in pairing {
        let s = unique_with(&lam, &columns(st, sb), in_s);
        let f = unique_with(&lam, &columns(ft, fb), |t| in_f(t).unwrap());
        let image = rss_functor(&t, &s).unwrap();
        assert!(is_isomorphic(&image.to_flat(), &f.to_flat()).unwrap().is_some(), "{st}/{sb}");
        corpus.s.push((format!("{st}/{sb}"), s));
        corpus.f.push((format!("{ft}/{fb}"), f));
    }
    let report = verify_rss_property(&t.functor(), &corpus).unwrap();
    assert!(report.all_passed(), "{report}");
    for ((s, f), ((st, sb), (ft, fb))) in report.pairing.iter().zip(pairing) {
        assert_eq!((s.as_str(), f.as_deref()), (format!("{st}/{sb}").as_str(), Some(format!("{ft}/{fb}").as_str())));
    }
}

#[test]
fn quasi_inverse_recovers_inputs() {
    for m in [dual_numbers_over_field::<F2>(), Bimodule::regular(&a2::<F2>())] {
        let lam = tri(&m);
        let functor = exchangeable_t(&lam).unwrap().functor();
        for (_, s) in Corpus::indecomposables(&lam, 4).unwrap().s {
            let back = functor.quasi_inverse(&functor.apply(&s).unwrap().triple).unwrap();
            assert!(is_isomorphic(&back.to_flat(), &s.to_flat()).unwrap().is_some());
        }
    }
}

#[test]
fn nakayama_sends_projectives_to_injectives() {
    for m in [dual_numbers_over_field::<F2>(), projective_simple_bimodule::<F2>(), top_simple_bimodule::<F2>()] {
        let lam = tri(&m);
        let injectives = indec_injectives(&lam.flat).unwrap();
        for ((p, _), i) in indec_projectives(&lam.flat).unwrap().iter().zip(&injectives) {
            assert!(is_isomorphic(&nakayama(&lam, p).unwrap(), i).unwrap().is_some());
        }
        assert!(nakayama(&lam, &Module::zero(&lam.flat)).unwrap().is_zero());
    }
}

#[test]
fn nakayama_on_the_two_kinds_of_projectives() {
    // N[A; 0] = [D(A); D M]_Id and N[M; B]_Id = [0; D(B)]
    let lam = tri(&dual_numbers_over_field::<F2>());
    let a_part = TripleModule::new(&lam, regular_module(&lam.a), Module::zero(&lam.b), Matrix::zeros(2, 0)).unwrap();
    let n = flat_to_triple(&lam, &nakayama(&lam, &a_part.to_flat()).unwrap()).unwrap().0;
    assert_eq!((n.x.dim(), n.y.dim()), (2, 2));
    let b_part = TripleModule::induced_from_b(&lam, regular_module(&lam.b)).unwrap();
    let n = flat_to_triple(&lam, &nakayama(&lam, &b_part.to_flat()).unwrap()).unwrap().0;
    assert_eq!((n.x.dim(), n.y.dim()), (0, 1));
}

#[test]
fn nakayama_criterion_for_exchangeable_bimodules() {
    for m in [
        dual_numbers_over_field::<F2>(),
        Bimodule::regular(&a2::<F2>()),
        Bimodule::regular(&dual_numbers::<F2>()),
        Bimodule::regular(&field::<F2>()),
    ] {
        let lam = tri(&m);
        let corpus = Corpus::indecomposables(&lam, 4).unwrap();
        let report = verify_rss_property(&DualHomFunctor::nakayama(&lam), &corpus).unwrap();
        let frobenius = is_frobenius(&lam.a).unwrap() && is_frobenius(&lam.b).unwrap();
        assert_eq!(report.all_passed(), frobenius, "{report}");
        assert!(verify_rss_property(&exchangeable_t(&lam).unwrap().functor(), &corpus).unwrap().all_passed());
    }
}

#[test]
fn nakayama_fails_over_diagonal_product() {
    let lam = tri(&diagonal_product_bimodule::<F2>());
    let corpus = Corpus {
        a: named("a", enumerate_indecomposables(&lam.a, 2).unwrap()),
        b: named("b", enumerate_indecomposables(&lam.b, 2).unwrap()),
        s: Vec::new(),
        f: Vec::new(),
    };
    assert!(!verify_rss_property(&DualHomFunctor::nakayama(&lam), &corpus).unwrap().all_passed());
}

#[test]
fn projective_simple_bimodule_has_five_s_and_four_f() {
    let lam = tri(&projective_simple_bimodule::<F2>());
    let corpus = Corpus::indecomposables(&lam, 3).unwrap();
    assert_eq!((corpus.s.len(), corpus.f.len()), (5, 4));
    assert!(exchangeable_t(&lam).is_err());
}

#[test]
fn top_simple_bimodule_has_a_hom_obstruction() {
    // Hom(11/0, 10/1) ≠ 0 while Hom(11/0, 00/1) = 0, with 11/0 = [P(2); 0]
    let lam = tri(&top_simple_bimodule::<F2>());
    let corpus = Corpus::indecomposables(&lam, 3).unwrap();
    let p2 = corpus.a.iter().find(|(_, x)| x.dim_vector().unwrap() == vec![1, 1]).unwrap().0.clone();
    let obstructions = rss_obstructions(&lam, &corpus).unwrap();
    assert!(obstructions.iter().any(|o| o.source == format!("[{p2};0]") && o.target.starts_with("[M⊗") && (o.dim_s, o.dim_f) == (1, 0)));
    // exchangeable bimodules have none
    let lam = tri(&dual_numbers_over_field::<F2>());
    assert!(rss_obstructions(&lam, &Corpus::indecomposables(&lam, 3).unwrap()).unwrap().is_empty());
}
