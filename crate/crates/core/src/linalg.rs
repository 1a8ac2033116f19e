//! Dense exact linear algebra: matrices, echelon forms, kernels, and
//! row-space (subspace) arithmetic.
//!
//! Subspaces are kept in reduced row echelon form, which is a canonical
//! representative of the row space; subspace equality is matrix equality.

use crate::scalar::Scalar;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<F> {
        self.row(i).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in mul");
        let mut out: Matrix<F> = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a.clone() * b.clone();
                        out[(i, j)] = out[(i, j)].clone() + prod;
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![F::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = F::zero();
            for j in 0..self.cols {
                if !self[(i, j)].is_zero() && !v[j].is_zero() {
                    acc = acc + self[(i, j)].clone() * v[j].clone();
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() * c.clone()
        })
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + rhs[(i, j)].clone()
        })
    }

    /// In-place reduction to reduced row echelon form. Returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv();
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].clone() * inv.clone();
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in c..self.cols {
                        let sub = self[(r, j)].clone() * factor.clone();
                        self[(i, j)] = self[(i, j)].clone() - sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel `{x : self * x = 0}`, one vector per row.
    pub fn kernel(&self) -> Matrix<F> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_row: std::collections::HashMap<usize, usize> =
            pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_row.contains_key(c)).collect();
        let mut out = Matrix::zero(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out[(k, fc)] = F::one();
            for (&pc, &pr) in &pivot_row {
                out[(k, pc)] = -(m[(pr, fc)].clone());
            }
        }
        out
    }

    /// One solution of `self * x = b`, if consistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Square matrix invertibility test.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A subspace of `F^ambient` stored as an RREF basis; the representation is
/// canonical, so `==` is subspace equality.
#[derive(Clone, PartialEq)]
pub struct Subspace<F> {
    pub ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_spanning(ambient: usize, vectors: &[Vec<F>]) -> Self {
        let mut m = Matrix::from_rows(vectors.to_vec(), ambient);
        let pivots = m.rref();
        let rank = pivots.len();
        let mut basis = Matrix::zero(rank, ambient);
        for i in 0..rank {
            for j in 0..ambient {
                basis[(i, j)] = m[(i, j)].clone();
            }
        }
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` modulo the subspace; the result is zero iff `v` lies in it.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            if !v[c].is_zero() {
                let factor = v[c].clone();
                for j in 0..self.ambient {
                    let sub = self.basis[(r, j)].clone() * factor.clone();
                    v[j] = v[j].clone() - sub;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    /// Coordinates of `v` in the RREF basis (valid only when `v` is inside).
    pub fn coords(&self, v: &[F]) -> Vec<F> {
        debug_assert!(self.contains(v));
        self.pivots.iter().map(|&c| v[c].clone()).collect()
    }

    pub fn linear_combination(&self, coords: &[F]) -> Vec<F> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec![F::zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                for j in 0..self.ambient {
                    let add = self.basis[(i, j)].clone() * c.clone();
                    v[j] = v[j].clone() + add;
                }
            }
        }
        v
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient);
        let mut vecs = self.basis_vectors();
        vecs.extend(other.basis_vectors());
        Subspace::from_spanning(self.ambient, &vecs)
    }

    /// Grow the subspace by one vector; returns whether it actually grew.
    /// Used by the arrow-closure loops.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let red = self.reduce(v);
        let Some(lead) = red.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = red[lead].inv();
        let newrow: Vec<F> = red.iter().map(|x| x.clone() * inv.clone()).collect();
        // Clear the new pivot column from existing rows, then splice the row
        // in keeping pivot columns increasing.
        let at = self.pivots.partition_point(|&p| p < lead);
        let mut rows = self.basis_vectors();
        for row in rows.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let factor = row[lead].clone();
            for j in 0..self.ambient {
                let sub = newrow[j].clone() * factor.clone();
                row[j] = row[j].clone() - sub;
            }
        }
        rows.insert(at, newrow);
        self.pivots.insert(at, lead);
        self.basis = Matrix::from_rows(rows, self.ambient);
        true
    }
}

impl<F: Scalar> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

/// The quotient `ambient / sub`, with projection onto coordinates indexed by
/// the non-pivot columns of `sub`.
#[derive(Clone)]
pub struct QuotientSpace<F> {
    pub sub: Subspace<F>,
    free: Vec<usize>,
}

impl<F: Scalar> QuotientSpace<F> {
    pub fn new(sub: Subspace<F>) -> Self {
        let piv: std::collections::HashSet<usize> = sub.pivots.iter().copied().collect();
        let free = (0..sub.ambient).filter(|c| !piv.contains(c)).collect();
        QuotientSpace { sub, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn project(&self, v: &[F]) -> Vec<F> {
        let red = self.sub.reduce(v);
        self.free.iter().map(|&c| red[c].clone()).collect()
    }

    /// A representative in the ambient space of the class with the given
    /// quotient coordinates.
    pub fn lift(&self, coords: &[F]) -> Vec<F> {
        assert_eq!(coords.len(), self.free.len());
        let mut v = vec![F::zero(); self.sub.ambient];
        for (k, &c) in self.free.iter().enumerate() {
            v[c] = coords[k].clone();
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;
    use num_traits::Zero;

    fn q(n: i64) -> Q {
        use num_traits::FromPrimitive;
        Q::from_i64(n).unwrap()
    }

    #[test]
    fn rref_and_kernel() {
        let m = Matrix::from_rows(
            vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]],
            3,
        );
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.rows, 1);
        assert!(m.apply(k.row(0)).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn subspace_canonical_equality() {
        let a = Subspace::from_spanning(3, &[vec![q(1), q(1), q(0)], vec![q(0), q(0), q(1)]]);
        let b = Subspace::from_spanning(3, &[vec![q(2), q(2), q(2)], vec![q(0), q(0), q(-5)]]);
        assert_eq!(a, b);
        assert!(a.contains(&[q(3), q(3), q(7)]));
        assert!(!a.contains(&[q(1), q(0), q(0)]));
    }

    #[test]
    fn quotient_projection_round_trip() {
        let sub = Subspace::from_spanning(3, &[vec![q(1), q(1), q(0)]]);
        let quo = QuotientSpace::new(sub);
        assert_eq!(quo.dim(), 2);
        let v = vec![q(5), q(2), q(1)];
        let c = quo.project(&v);
        let w = quo.lift(&c);
        // v and w differ by an element of the subspace
        let diff: Vec<Q> = (0..3).map(|i| v[i].clone() - w[i].clone()).collect();
        assert!(quo.sub.contains(&diff));
    }

    #[test]
    fn insert_grows_until_full() {
        let mut s = Subspace::zero(2);
        assert!(s.insert(&[q(1), q(2)]));
        assert!(!s.insert(&[q(2), q(4)]));
        assert!(s.insert(&[q(0), q(1)]));
        assert_eq!(s.dim(), 2);
        assert_eq!(s, Subspace::full(2));
    }
}
