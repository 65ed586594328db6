//! Dense matrices over exact coefficient rings.

use std::fmt;

use crate::scalar::{Coefficient, EuclideanCoefficient, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Coefficient> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| R::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: R) {
        self.data[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[R] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn map<S: Coefficient, F: FnMut(&R) -> S>(&self, f: F) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
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

impl<R: fmt::Display> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rank over the fraction field, by Bareiss fraction-free elimination.
///
/// All intermediate entries stay in `R`; each division is exact.
pub fn rational_rank<R: EuclideanCoefficient>(m: &Matrix<R>) -> usize {
    let mut a = m.clone();
    let mut rank = 0;
    let mut prev = R::one();
    for col in 0..a.cols {
        if rank == a.rows {
            break;
        }
        let Some(pivot) = (rank..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(rank, pivot);
        let p = a.get(rank, col).clone();
        for r in rank + 1..a.rows {
            let factor = a.get(r, col).clone();
            for c in col..a.cols {
                let v = (p.clone() * a.get(r, c).clone() - factor.clone() * a.get(rank, c).clone()) / prev.clone();
                a.set(r, c, v);
            }
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// Reduced row echelon form over a field, returning the pivot columns.
pub fn row_reduce<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = F::one() / m.get(row, col).clone();
        for c in 0..m.cols {
            let v = m.get(row, c).clone() * inv.clone();
            m.set(row, c, v);
        }
        for r in 0..m.rows {
            if r == row || m.get(r, col).is_zero() {
                continue;
            }
            let factor = m.get(r, col).clone();
            for c in 0..m.cols {
                let v = m.get(r, c).clone() - factor.clone() * m.get(row, c).clone();
                m.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank_over_field<F: Field>(m: &Matrix<F>) -> usize {
    let mut a = m.clone();
    row_reduce(&mut a).len()
}

/// A basis of the right kernel `{x : m x = 0}`, one vector per free column.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let mut a = m.clone();
    let pivots = row_reduce(&mut a);
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); a.cols];
            v[f] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a.get(row, f).clone();
            }
            v
        })
        .collect()
}

/// Incremental echelon basis of a subspace of `F^n` that remembers, for each
/// stored vector, its expression in the vectors that were inserted.
#[derive(Clone, Debug)]
pub struct EchelonSpan<F> {
    dim: usize,
    // (pivot column, reduced vector, combination of inserted vectors)
    rows: Vec<(usize, Vec<F>, Vec<F>)>,
    inserted: usize,
}

impl<F: Field> EchelonSpan<F> {
    pub fn new(dim: usize) -> Self {
        EchelonSpan {
            dim,
            rows: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored basis; returns the remainder and the
    /// combination of inserted vectors that was subtracted.
    pub fn reduce(&self, v: &[F]) -> (Vec<F>, Vec<F>) {
        assert_eq!(v.len(), self.dim);
        let mut rem = v.to_vec();
        let mut combo = vec![F::zero(); self.inserted];
        for (pivot, row, provenance) in &self.rows {
            if rem[*pivot].is_zero() {
                continue;
            }
            let factor = rem[*pivot].clone() / row[*pivot].clone();
            for (x, y) in rem.iter_mut().zip(row) {
                *x = x.clone() - factor.clone() * y.clone();
            }
            for (i, p) in provenance.iter().enumerate() {
                combo[i] = combo[i].clone() + factor.clone() * p.clone();
            }
        }
        (rem, combo)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).0.iter().all(F::is_zero)
    }

    /// Inserts `v`; returns false (and records nothing new in the span) if it
    /// was already dependent. The insertion counter advances either way.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let (rem, combo) = self.reduce(v);
        let index = self.inserted;
        self.inserted += 1;
        for (_, _, p) in self.rows.iter_mut() {
            p.push(F::zero());
        }
        let Some(pivot) = rem.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let mut provenance: Vec<F> = combo.into_iter().map(|c| -c).collect();
        provenance.push(F::one());
        debug_assert_eq!(provenance.len(), index + 1);
        self.rows.push((pivot, rem, provenance));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::F2;
    use crate::Rational;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn rational_rank_examples() {
        assert_eq!(rational_rank(&Matrix::<BigInt>::identity(3)), 3);
        assert_eq!(rational_rank(&int(&[&[1, 1], &[2, 2]])), 1);
        // rows 1, x, x^2 on the points 1, 2, 3
        assert_eq!(rational_rank(&int(&[&[1, 1, 1], &[1, 2, 3], &[1, 4, 9]])), 3);
        assert_eq!(rational_rank(&Matrix::<BigInt>::zeros(2, 5)), 0);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m: Matrix<Rational> = Matrix::from_i64_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ker = kernel_basis(&m);
        assert_eq!(ker.len(), 2);
        for v in ker {
            let col = Matrix::from_rows(v.into_iter().map(|x| vec![x]).collect());
            assert!(m.mul(&col).is_zero());
        }
    }

    #[test]
    fn echelon_span_tracks_combinations() {
        let v = |bits: &[u8]| bits.iter().map(|&b| F2::new(b == 1)).collect::<Vec<_>>();
        let mut span = EchelonSpan::new(3);
        assert!(span.insert(&v(&[1, 1, 0])));
        assert!(span.insert(&v(&[0, 1, 1])));
        assert!(!span.insert(&v(&[1, 0, 1])));
        let (rem, combo) = span.reduce(&v(&[1, 0, 1]));
        assert!(rem.iter().all(|x| *x == F2::ZERO));
        assert_eq!(combo[..2], v(&[1, 1])[..]);
    }

    fn small_matrix() -> impl Strategy<Value = Matrix<BigInt>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                Matrix::from_rows(
                    v.chunks(c)
                        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                        .collect(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in small_matrix()) {
            prop_assert_eq!(rational_rank(&m), rational_rank(&m.transpose()));
        }

        #[test]
        fn bareiss_agrees_with_rational_elimination(m in small_matrix()) {
            let q: Matrix<Rational> = m.map(|x| Rational::from_integer(x.clone()));
            prop_assert_eq!(rational_rank(&m), rank_over_field(&q));
        }
    }
}
