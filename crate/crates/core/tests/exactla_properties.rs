use proptest::prelude::*;
use trimat::exactla::kronecker;
use trimat::{Field, Matrix, F3, F5, Q};

mod common;
use common::{matrix, seed};

fn shape() -> impl Strategy<Value = (usize, usize)> {
    (0usize..6, 0usize..6)
}

fn rref_idempotent<F: Field>(rows: usize, cols: usize, s: &[i64]) {
    let m: Matrix<F> = matrix(rows, cols, s, 0);
    let once = m.rref();
    let twice = once.matrix.rref();
    assert_eq!(once.matrix, twice.matrix);
    assert_eq!(once.pivots, twice.pivots);
}

fn rank_nullity<F: Field>(rows: usize, cols: usize, s: &[i64]) {
    let m: Matrix<F> = matrix(rows, cols, s, 1);
    let kernel = m.kernel();
    assert_eq!(m.rank() + kernel.dim(), cols);
    for v in kernel.basis_vectors() {
        assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
    }
}

fn solve_is_exact<F: Field>(rows: usize, cols: usize, s: &[i64]) {
    let m: Matrix<F> = matrix(rows, cols, s, 2);
    // a right-hand side in the image is always solvable
    let x0: Matrix<F> = matrix(cols, 2, s, 5);
    let rhs = m.mul(&x0);
    let x = m.solve(&rhs).unwrap().expect("rhs lies in the image");
    assert_eq!(m.mul(&x), rhs);
    let other: Matrix<F> = matrix(rows, 1, s, 9);
    if let Some(y) = m.solve(&other).unwrap() {
        assert_eq!(m.mul(&y), other);
    } else {
        assert!(!m.image().contains(&other.column(0)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent((r, c) in shape(), s in seed()) {
        rref_idempotent::<F3>(r, c, &s);
        rref_idempotent::<Q>(r, c, &s);
    }

    #[test]
    fn rank_plus_nullity_is_the_column_count((r, c) in shape(), s in seed()) {
        rank_nullity::<F5>(r, c, &s);
        rank_nullity::<Q>(r, c, &s);
    }

    #[test]
    fn solutions_satisfy_the_system((r, c) in shape(), s in seed()) {
        solve_is_exact::<F3>(r, c, &s);
        solve_is_exact::<Q>(r, c, &s);
    }

    #[test]
    fn kronecker_is_multiplicative(dims in prop::collection::vec(1usize..4, 6), s in seed()) {
        let (p, q, r, u, v, w) = (dims[0], dims[1], dims[2], dims[3], dims[4], dims[5]);
        let a: Matrix<Q> = matrix(p, q, &s, 0);
        let b: Matrix<Q> = matrix(u, v, &s, 3);
        let c: Matrix<Q> = matrix(q, r, &s, 5);
        let d: Matrix<Q> = matrix(v, w, &s, 7);
        prop_assert_eq!(kronecker(&a, &b).mul(&kronecker(&c, &d)), kronecker(&a.mul(&c), &b.mul(&d)));
    }

    #[test]
    fn inverses_are_two_sided(n in 1usize..6, s in seed()) {
        let m: Matrix<F5> = common::invertible(n, &s);
        let inv = m.inverse().expect("unit triangular factors");
        prop_assert!(m.mul(&inv).is_identity() && inv.mul(&m).is_identity());
    }
}
