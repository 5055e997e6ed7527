//! Dense square matrices over an exact commutative ring.

use std::fmt;

use crate::exec;
use crate::poly::Ring;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<R> {
    dim: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, data: vec![R::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = R::one();
        }
        m
    }

    pub fn from_fn<F: Fn(usize, usize) -> R>(dim: usize, f: F) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: R) {
        self.data[row * self.dim + col] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / self.dim, k % self.dim, v))
    }

    pub fn map<S: Ring, F: Fn(&R) -> S>(&self, f: F) -> Matrix<S> {
        Matrix { dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg_ref)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    /// Product; rows are computed in the current execution mode.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let rows = exec::map_range(n, |i| {
            (0..n)
                .map(|j| {
                    let mut acc = R::zero();
                    for k in 0..n {
                        let a = self.get(i, k);
                        if a.is_zero() {
                            continue;
                        }
                        let b = rhs.get(k, j);
                        if !b.is_zero() {
                            acc = acc.add_ref(&a.mul_ref(b));
                        }
                    }
                    acc
                })
                .collect::<Vec<_>>()
        });
        Self { dim: n, data: rows.into_iter().flatten().collect() }
    }

    /// `[self, rhs]`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.adjoint() == *self
    }
}

impl<R: Ring + fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[R]> = self.data.chunks(self.dim.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, GaussRational};

    #[test]
    fn identity_is_neutral() {
        let m = Matrix::from_fn(3, |i, j| GaussRational::from_int((i * 3 + j) as i64));
        let id = Matrix::identity(3);
        assert_eq!(m.mul(&id), m);
        assert_eq!(id.mul(&m), m);
        assert!(m.commutator(&id).is_zero());
    }

    #[test]
    fn adjoint_conjugates() {
        let m = Matrix::from_fn(2, |i, j| GaussRational::new(rat(i as i64, 1), rat(j as i64, 1)));
        assert_eq!(*m.adjoint().get(0, 1), GaussRational::from_int(1));
        assert_eq!(m.adjoint().adjoint(), m);
    }
}
