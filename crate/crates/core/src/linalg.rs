//! Dense exact matrices and Gaussian elimination over a [`Scalar`] field.
//!
//! Small and unashamedly quadratic/cubic: the slices solved here are tiny
//! (tens of rows), but the coefficients are exact rational functions, so
//! pivot choice matters more than asymptotics. Pivots are chosen by the
//! scalar's own size measure ([`Scalar::pivot_cost`]), which for Q(q) is the
//! total q-degree — picking low-degree pivots keeps intermediate
//! coefficients from blowing up.

use std::ops::{Index, IndexMut};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.rows);
        let mut out: Matrix<K> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a.clone() * other[(k, j)].clone();
                    let cur = out[(i, j)].clone();
                    out[(i, j)] = cur + add;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.clone() - b.clone();
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(K::is_zero)
    }
}

impl<K> Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.data[i * self.cols + j]
    }
}

impl<K> IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.data[i * self.cols + j]
    }
}

/// Result of an exact least-effort solve of `A x = b`.
pub struct SolveOutcome<K> {
    /// A candidate solution: exact when `residual` is zero, otherwise the
    /// best the pivoted elimination produced (free variables set to zero).
    pub solution: Vec<K>,
    /// `b - A x` for the candidate; zero exactly when the system is solvable.
    pub residual: Vec<K>,
    pub solvable: bool,
}

/// Solves `A x = b` over the scalar field by fraction-free-ish Gaussian
/// elimination with full pivoting on [`Scalar::pivot_cost`].
///
/// When `b` is not in the column space, the returned residual is `b - A x`
/// for the partial solution; since `b` is outside the span, the residual is
/// nonzero and stays outside it too.
pub fn solve<K: Scalar>(a: &Matrix<K>, b: &[K]) -> SolveOutcome<K> {
    assert_eq!(a.rows(), b.len());
    let rows = a.rows();
    let cols = a.cols();
    let mut m = a.clone();
    let mut rhs = b.to_vec();
    let mut row_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut used_row = vec![false; rows];

    loop {
        // Cheapest nonzero pivot among unused rows/columns.
        let mut best: Option<(usize, usize, u64)> = None;
        for i in 0..rows {
            if used_row[i] {
                continue;
            }
            for j in 0..cols {
                if row_of_col[j].is_some() || m[(i, j)].is_zero() {
                    continue;
                }
                let cost = m[(i, j)].pivot_cost();
                if best.map_or(true, |(_, _, c)| cost < c) {
                    best = Some((i, j, cost));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        used_row[pi] = true;
        row_of_col[pj] = Some(pi);
        let pivot = m[(pi, pj)].clone();
        for i in 0..rows {
            if i == pi || m[(i, pj)].is_zero() {
                continue;
            }
            let factor = m[(i, pj)].clone() / pivot.clone();
            for j in 0..cols {
                let delta = factor.clone() * m[(pi, j)].clone();
                let cur = m[(i, j)].clone();
                m[(i, j)] = cur - delta;
            }
            let delta = factor * rhs[pi].clone();
            let cur = rhs[i].clone();
            rhs[i] = cur - delta;
        }
    }

    // Read the candidate off the eliminated system: each pivot column is
    // nonzero only in its pivot row now.
    let mut x = vec![K::zero(); cols];
    for j in 0..cols {
        if let Some(i) = row_of_col[j] {
            x[j] = rhs[i].clone() / m[(i, j)].clone();
        }
    }
    let mut residual = b.to_vec();
    for i in 0..rows {
        for j in 0..cols {
            if x[j].is_zero() || a[(i, j)].is_zero() {
                continue;
            }
            let delta = a[(i, j)].clone() * x[j].clone();
            let cur = residual[i].clone();
            residual[i] = cur - delta;
        }
    }
    let solvable = residual.iter().all(K::is_zero);
    SolveOutcome {
        solution: x,
        residual,
        solvable,
    }
}

/// Rank of `A` by the same pivoted elimination.
pub fn rank<K: Scalar>(a: &Matrix<K>) -> usize {
    let mut m = a.clone();
    eliminate_count(&mut m)
}

fn eliminate_count<K: Scalar>(m: &mut Matrix<K>) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut row_used = vec![false; rows];
    let mut col_used = vec![false; cols];
    let mut rank = 0;
    loop {
        let mut best: Option<(usize, usize, u64)> = None;
        for i in 0..rows {
            if row_used[i] {
                continue;
            }
            for j in 0..cols {
                if col_used[j] || m[(i, j)].is_zero() {
                    continue;
                }
                let cost = m[(i, j)].pivot_cost();
                if best.map_or(true, |(_, _, c)| cost < c) {
                    best = Some((i, j, cost));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        row_used[pi] = true;
        col_used[pj] = true;
        rank += 1;
        let pivot = m[(pi, pj)].clone();
        for i in 0..rows {
            if i == pi || m[(i, pj)].is_zero() {
                continue;
            }
            let factor = m[(i, pj)].clone() / pivot.clone();
            for j in 0..cols {
                let delta = factor.clone() * m[(pi, j)].clone();
                let cur = m[(i, j)].clone();
                m[(i, j)] = cur - delta;
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::QRat;
    use crate::Rational;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn matrix_product_and_identity() {
        let a = Matrix::from_rows(vec![
            vec![rat(1, 1), rat(2, 1)],
            vec![rat(0, 1), rat(1, 3)],
        ]);
        let id = Matrix::identity(2);
        assert_eq!(a.mul(&id), a);
        let b = a.mul(&a);
        assert_eq!(b[(0, 1)], rat(8, 3));
    }

    #[test]
    fn solve_exact_system() {
        // x + 2y = 5, 3y = 6 -> y = 2, x = 1
        let a = Matrix::from_rows(vec![
            vec![rat(1, 1), rat(2, 1)],
            vec![rat(0, 1), rat(3, 1)],
        ]);
        let out = solve(&a, &[rat(5, 1), rat(6, 1)]);
        assert!(out.solvable);
        assert_eq!(out.solution, vec![rat(1, 1), rat(2, 1)]);
    }

    #[test]
    fn solve_reports_residual_when_inconsistent() {
        // Two equal rows with different right-hand sides.
        let a = Matrix::from_rows(vec![vec![rat(1, 1)], vec![rat(1, 1)]]);
        let out = solve(&a, &[rat(1, 1), rat(2, 1)]);
        assert!(!out.solvable);
        assert!(out.residual.iter().any(|r| !num_traits::Zero::is_zero(r)));
    }

    #[test]
    fn solve_over_qrat_prefers_small_pivots() {
        // [q^5, 1; 1, 0] x = [q^5 + 2, 1]: solution x = (1, 2).
        let a = Matrix::from_rows(vec![
            vec![QRat::q_pow(5), QRat::from_int(1)],
            vec![QRat::from_int(1), QRat::from_int(0)],
        ]);
        let b = vec![
            &QRat::q_pow(5) + &QRat::from_int(2),
            QRat::from_int(1),
        ];
        let out = solve(&a, &b);
        assert!(out.solvable);
        assert_eq!(out.solution, vec![QRat::from_int(1), QRat::from_int(2)]);
    }

    #[test]
    fn rank_counts_pivots() {
        let a = Matrix::from_rows(vec![
            vec![rat(1, 1), rat(2, 1), rat(3, 1)],
            vec![rat(2, 1), rat(4, 1), rat(6, 1)],
            vec![rat(0, 1), rat(1, 1), rat(1, 1)],
        ]);
        assert_eq!(rank(&a), 2);
    }
}
