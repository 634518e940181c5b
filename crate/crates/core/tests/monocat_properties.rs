use std::sync::Arc;

use proptest::prelude::*;
use trimat::bimtri::{flat_to_triple, is_right_projective, TriangularAlgebra, TripleModule};
use trimat::monocat::{cotilting_t, factor_through, in_f, in_perp, in_s, mimo};
use trimat::repmod::{decompose, hom_basis, Module};
use trimat::F2;

mod common;
use common::*;

/// The small triangular algebras whose `M` is projective over `B`.
fn lambdas() -> Vec<Arc<TriangularAlgebra<F2>>> {
    small_lambdas::<F2>().into_iter().map(|(_, l)| l).filter(|l| is_right_projective(&l.m).unwrap()).collect()
}

fn sum(a: &TripleModule<F2>, b: &TripleModule<F2>) -> TripleModule<F2> {
    let flat = Module::direct_sum(&[&a.to_flat(), &b.to_flat()]).unwrap();
    flat_to_triple(&a.lam, &flat).unwrap().0
}

fn summands(t: &TripleModule<F2>) -> Vec<TripleModule<F2>> {
    decompose(&t.to_flat()).unwrap().summands.iter().map(|s| flat_to_triple(&t.lam, &s.module).unwrap().0).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn monomorphisms_are_the_left_perpendicular_of_t(pick in 0usize..4, p in picks(4), s in seed()) {
        let lams = lambdas();
        let lam = &lams[pick % lams.len()];
        let cot = cotilting_t(lam).unwrap();
        let t = random_triple(lam, &p, &s);
        prop_assert_eq!(in_s(&t), in_perp(&t.to_flat(), &cot).unwrap());
        let approx = mimo(&t).unwrap().object;
        prop_assert!(in_perp(&approx.to_flat(), &cot).unwrap());
    }

    #[test]
    fn both_subcategories_are_closed_under_sums_and_summands(pick in 0usize..4, p in picks(4), s in seed()) {
        let lams = lambdas();
        let lam = &lams[pick % lams.len()];
        let t1 = random_triple(lam, &p, &s);
        let t2 = random_triple(lam, &p.iter().rev().copied().collect::<Vec<_>>(), &s[2..]);
        let both = sum(&t1, &t2);
        prop_assert_eq!(in_s(&both), in_s(&t1) && in_s(&t2));
        prop_assert_eq!(in_f(&both).unwrap(), in_f(&t1).unwrap() && in_f(&t2).unwrap());
        for part in summands(&both) {
            if in_s(&both) {
                prop_assert!(in_s(&part));
            }
            if in_f(&both).unwrap() {
                prop_assert!(in_f(&part).unwrap());
            }
        }
    }

    #[test]
    fn maps_from_s_factor_through_mimo(pick in 0usize..4, p in picks(4), q in picks(2), s in seed()) {
        let lams = lambdas();
        let lam = &lams[pick % lams.len()];
        let t = random_triple(lam, &p, &s);
        let approx = mimo(&t).unwrap();
        prop_assert!(in_s(&approx.object));
        prop_assert!(approx.minimal);
        let source = mimo(&random_triple(lam, &q, &s[3..])).unwrap().object.to_flat();
        let through = approx.object.to_flat();
        let p_map = approx.map.to_flat();
        for f in hom_basis(&source, &t.to_flat()).unwrap() {
            prop_assert!(factor_through(&source, &through, &p_map, &f).unwrap().is_some());
        }
        if in_s(&t) {
            prop_assert_eq!(approx.object.dim(), t.dim());
        }
    }
}
