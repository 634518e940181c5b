use super::field::Field;
use super::matrix::{pivot_mask, Matrix};

/// A subspace of `F^n`, stored by its reduced row-echelon basis so that
/// equality of subspaces is equality of the stored data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        Self::from_rows(&Matrix::from_rows_with_width(&vectors, ambient))
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Matrix<F>) -> Self {
        let rr = m.rref();
        let rank = rr.rank();
        Subspace { ambient: m.ncols(), basis: rr.matrix.block(0, 0, rank, m.ncols()), pivots: rr.pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis rows in reduced echelon form.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vectors()
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_columns(&self) -> Matrix<F> {
        self.basis.transpose()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the basis rows to clear every pivot coordinate.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (x, b) in w.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *x -= c.clone() * b.clone();
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![F::zero(); self.ambient];
        for (c, r) in coords.iter().zip(0..) {
            for (x, b) in recon.iter_mut().zip(self.basis.row(r)) {
                *x += c.clone() * b.clone();
            }
        }
        (recon == v).then_some(coords)
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::from_rows(&Matrix::vstack(&[&self.basis, &other.basis]))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Self::zero(self.ambient);
        }
        // x·U = y·W  <=>  (x, -y) in the left kernel of [U; W]
        let stacked = Matrix::vstack(&[&self.basis, &other.basis]);
        let left = stacked.transpose().kernel();
        let vectors = left
            .basis_vectors()
            .into_iter()
            .map(|k| {
                let mut v = vec![F::zero(); self.ambient];
                for (i, c) in k[..a].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, u) in v.iter_mut().zip(self.basis.row(i)) {
                        *x += c.clone() * u.clone();
                    }
                }
                v
            })
            .collect();
        Self::from_vectors(self.ambient, vectors)
    }

    /// The coordinate vectors `e_c` for non-pivot `c`; they span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mask = pivot_mask(&self.pivots, self.ambient);
        (0..self.ambient).filter(|&c| !mask[c]).collect()
    }

    /// Image of the subspace under a linear map given as a matrix acting on columns.
    pub fn map(&self, m: &Matrix<F>) -> Self {
        let vectors = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Self::from_vectors(m.nrows(), vectors)
    }
}

/// Coordinates with respect to a fixed linearly independent family of vectors.
#[derive(Clone, Debug)]
pub struct Coordinates<F> {
    ambient: usize,
    len: usize,
    /// rref of `[V^T | I]`, used to express a vector in the family.
    span: Subspace<F>,
    to_family: Matrix<F>,
}

impl<F: Field> Coordinates<F> {
    /// `family` must be linearly independent.
    pub fn new(ambient: usize, family: &[Vec<F>]) -> Self {
        let len = family.len();
        let vt = Matrix::from_rows_with_width(family, ambient);
        let span = Subspace::from_rows(&vt);
        assert_eq!(span.dim(), len, "coordinate family must be linearly independent");
        // echelon basis E = S · V for an invertible S; coords in V are coords in E times S
        let aug = Matrix::hstack(&[&vt, &Matrix::identity(len)]).rref();
        let s = aug.matrix.block(0, ambient, len, len);
        Coordinates { ambient, len, span, to_family: s.transpose() }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let e = self.span.coordinates(v)?;
        Some(self.to_family.mul_vec(&e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Fp;

    type F = Fp<3>;

    fn v(xs: &[i64]) -> Vec<F> {
        xs.iter().map(|&x| F::from_i64(x)).collect()
    }

    #[test]
    fn intersection_of_planes() {
        let u = Subspace::from_vectors(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let w = Subspace::from_vectors(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = u.intersection(&w);
        assert_eq!(i, Subspace::from_vectors(3, vec![v(&[0, 1, 0])]));
        assert_eq!(u.sum(&w), Subspace::full(3));
    }

    #[test]
    fn coordinates_in_a_skew_family() {
        let fam = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        let c = Coordinates::new(3, &fam);
        assert_eq!(c.coords(&v(&[2, 1, 2])), Some(v(&[2, 2])));
        assert_eq!(c.coords(&v(&[1, 0, 0])), None);
    }
}
