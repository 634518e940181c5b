use std::sync::Arc;

use proptest::prelude::*;
use trimat::algebra::is_frobenius;
use trimat::bimtri::{exchangeable_iso, TriangularAlgebra};
use trimat::monocat::{in_f, mimo};
use trimat::repmod::{hom_basis, is_isomorphic};
use trimat::rss::{exchangeable_t, verify_rss_property, DualHomFunctor};
use trimat::stablerec::Corpus;
use trimat::F2;

mod common;
use common::*;

fn exchangeable_lambdas() -> Vec<Arc<TriangularAlgebra<F2>>> {
    bimodules::<F2>().into_iter().map(|(_, m)| tri(&m)).filter(|l| exchangeable_iso(&l.m).unwrap().is_some()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn functor_is_fully_faithful_with_a_quasi_inverse(pick in 0usize..8, p in picks(4), q in picks(2), s in seed()) {
        let lams = exchangeable_lambdas();
        let lam = &lams[pick % lams.len()];
        let functor = exchangeable_t(lam).unwrap().functor();
        let s1 = mimo(&random_triple(lam, &p, &s)).unwrap().object;
        let s2 = mimo(&random_triple(lam, &q, &s[2..])).unwrap().object;
        let (f1, f2) = (functor.apply(&s1).unwrap(), functor.apply(&s2).unwrap());
        prop_assert!(in_f(&f1.triple).unwrap());

        let maps = hom_basis(&s1.to_flat(), &s2.to_flat()).unwrap();
        let images: Vec<Vec<F2>> = maps.iter().map(|u| functor.apply_map(&f1, &f2, u).vectorize()).collect();
        let image_maps = hom_basis(&f1.triple.to_flat(), &f2.triple.to_flat()).unwrap();
        prop_assert_eq!(maps.len(), image_maps.len());
        prop_assert_eq!(trimat::Subspace::from_vectors(images.first().map_or(0, Vec::len), images).dim(), maps.len());

        let back = functor.quasi_inverse(&f1.triple).unwrap();
        prop_assert!(is_isomorphic(&back.to_flat(), &s1.to_flat()).unwrap().is_some());
    }

    #[test]
    fn functor_respects_composition(pick in 0usize..8, p in picks(3), s in seed()) {
        let lams = exchangeable_lambdas();
        let lam = &lams[pick % lams.len()];
        let functor = exchangeable_t(lam).unwrap().functor();
        let t = mimo(&random_triple(lam, &p, &s)).unwrap().object;
        let flat = t.to_flat();
        let image = functor.apply(&t).unwrap();
        let u = random_hom(&flat, &flat, &s);
        let v = random_hom(&flat, &flat, &s[1..]);
        let composed = functor.apply_map(&image, &image, &u.mul(&v));
        let separately = functor.apply_map(&image, &image, &u).mul(&functor.apply_map(&image, &image, &v));
        prop_assert_eq!(composed, separately);
    }
}

#[test]
fn nakayama_functor_works_exactly_for_frobenius_sides() {
    let lams = exchangeable_lambdas();
    assert!(lams.len() >= 2);
    for lam in lams {
        let corpus = Corpus::indecomposables(&lam, 3).unwrap();
        let report = verify_rss_property(&DualHomFunctor::nakayama(&lam), &corpus).unwrap();
        let frobenius = is_frobenius(&lam.a).unwrap() && is_frobenius(&lam.b).unwrap();
        assert_eq!(report.all_passed(), frobenius);
    }
}
