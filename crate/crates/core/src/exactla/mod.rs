//! Exact dense linear algebra over F_p and Q.

mod field;
mod matrix;
mod subspace;

pub use field::{BaseField, Field, Fp, ParseScalarError};
pub use num_traits::{One, Zero};
pub use matrix::{kronecker, DimensionMismatch, Matrix, Rref};
pub use subspace::{Coordinates, Subspace};

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type F2 = Fp<2>;

    #[test]
    fn rref_of_f2_rank_one() {
        let m = Matrix::<F2>::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let rr = m.rref();
        assert_eq!(rr.matrix, Matrix::from_i64_rows(&[&[1, 1], &[0, 0]]));
        assert_eq!(rr.rank(), 1);
        assert_eq!(rr.pivots, vec![0]);
    }

    #[test]
    fn rref_trivial_cases() {
        let id = Matrix::<F2>::identity(3);
        assert_eq!(id.rref().matrix, id);
        assert_eq!(id.rank(), 3);
        let z = Matrix::<F2>::zeros(2, 2);
        assert_eq!(z.rref().matrix, z);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::<F2>::identity(3).kernel().is_zero());
        assert_eq!(Matrix::<F2>::zeros(3, 3).kernel(), Subspace::full(3));
        let k = Matrix::<F2>::from_i64_rows(&[&[1, 1], &[1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[F2::new(1), F2::new(1)]));
    }

    #[test]
    fn solve_examples() {
        let rhs = Matrix::<F2>::from_i64_rows(&[&[1, 0], &[1, 1]]);
        assert_eq!(Matrix::identity(2).solve(&rhs).unwrap(), Some(rhs.clone()));
        assert_eq!(Matrix::zeros(2, 2).solve(&rhs).unwrap(), None);
        let two = Matrix::<BigRational>::from_i64_rows(&[&[2]]);
        let one = Matrix::<BigRational>::from_i64_rows(&[&[1]]);
        let x = two.solve(&one).unwrap().unwrap();
        assert_eq!(x[(0, 0)], BigRational::new(1.into(), 2.into()));
        assert!(Matrix::<F2>::identity(2).solve(&Matrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn kronecker_examples() {
        let k = kronecker(&Matrix::<F2>::identity(2), &Matrix::identity(3));
        assert_eq!(k, Matrix::identity(6));
        let a = Matrix::<F2>::from_i64_rows(&[&[0, 1], &[0, 0]]);
        assert!(kronecker(&a, &Matrix::zeros(2, 2)).is_zero());
        assert_eq!(kronecker(&a, &Matrix::identity(1)), a);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::<BigRational>::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::<F2>::from_i64_rows(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }
}
