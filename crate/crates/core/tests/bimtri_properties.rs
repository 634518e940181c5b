use proptest::prelude::*;
use trimat::algebra::{regular_module, Algebra};
use trimat::bimtri::{
    exchangeable_iso, hom_a_m, is_right_projective, satisfies_ip, tensor_bimodules, tensor_over_b, Adjunction, Bimodule,
};
use trimat::repmod::{hom_basis, injective_envelope};
use trimat::F3;

mod common;
use common::*;

fn pick_bimodule(pick: usize) -> Bimodule<F3> {
    let all = bimodules::<F3>();
    all[pick % all.len()].1.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn adjunction_is_a_natural_bijection(pick in 0usize..5, p in picks(4), s in seed()) {
        let m = pick_bimodule(pick);
        let half = p.len() / 2;
        let x = random_module(m.left_algebra(), 2, &p[..half], &s);
        let y = random_module(m.right_algebra(), 2, &p[half..], &s[1..]);
        let adj = Adjunction::new(&m, &y, &x).unwrap();
        let eta = adj.eta_matrix().unwrap();
        prop_assert!(eta.is_square() && eta.is_invertible());

        let phi = random_hom(&adj.tensor, &x, &s);
        prop_assert_eq!(adj.eta_inverse(&adj.eta(&phi)), phi);
        let psi = random_hom(&y, &adj.hom.module, &s[2..]);
        prop_assert_eq!(adj.eta(&adj.eta_inverse(&psi)), psi);
    }

    #[test]
    fn tensor_with_right_projective_preserves_monos(pick in 0usize..5, p in picks(3), s in seed()) {
        let m = pick_bimodule(pick);
        prop_assume!(is_right_projective(&m).unwrap());
        let y = random_module(m.right_algebra(), 2, &p, &s);
        let (envelope, iota) = injective_envelope(&y).unwrap();
        let (_, source) = tensor_over_b(&m, &y).unwrap();
        let (_, target) = tensor_over_b(&m, &envelope).unwrap();
        prop_assert!(source.map_right(&target, &iota.matrix).kernel().is_zero());
    }
}

#[test]
fn exchangeable_bimodules_satisfy_ip() {
    for (name, m) in bimodules::<F3>() {
        if exchangeable_iso(&m).unwrap().is_some() {
            assert!(satisfies_ip(&m).unwrap(), "{name}");
        }
    }
}

#[test]
fn dualized_tensors_match_hom_into_regular() {
    for (name, m) in bimodules::<F3>() {
        let (a, b) = (m.left_algebra(), m.right_algebra());
        let (da_m, _) = tensor_bimodules(&Bimodule::regular(a).dual(), &m).unwrap();
        assert_eq!(da_m.dim(), hom_a_m(&m, &regular_module(a)).unwrap().basis.len(), "{name}");
        let (m_db, _) = tensor_bimodules(&m, &Bimodule::regular(b).dual()).unwrap();
        let b_op: std::sync::Arc<Algebra<F3>> = b.opposite();
        let hom_right = hom_basis(&m.right_module(), &regular_module(&b_op)).unwrap().len();
        assert_eq!(m_db.dim(), hom_right, "{name}");
    }
}
