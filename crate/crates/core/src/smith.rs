//! Exact integer matrix kernels: Smith normal form, Bareiss determinants and
//! leading principal minors.
//!
//! Everything here is generic over the integer scalar, so the same code runs
//! on `i64`, `i128` or arbitrary precision integers.

use std::fmt::Debug;

use num_integer::Integer;
use num_traits::Signed;

/// Scalar requirements for the integer kernels.
pub trait IntScalar: Integer + Signed + Clone + Debug {}

impl<T> IntScalar for T where T: Integer + Signed + Clone + Debug {}

/// Dense row-major matrix.
pub type Matrix<T> = Vec<Vec<T>>;

pub fn identity<T: IntScalar>(n: usize) -> Matrix<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

pub fn mat_mul<T: IntScalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let k = b.len();
    let mut out = vec![vec![T::zero(); m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut acc = T::zero();
            for t in 0..k {
                acc = acc + a[i][t].clone() * b[t][j].clone();
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn mat_vec<T: IntScalar>(a: &Matrix<T>, v: &[T]) -> Vec<T> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
        })
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant<T: IntScalar>(a: &Matrix<T>) -> T {
    let n = a.len();
    if n == 0 {
        return T::one();
    }
    let mut m = a.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num / prev.clone();
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Leading principal minors `det(A[..k, ..k])` for `k = 1..=n`.
pub fn leading_minors<T: IntScalar>(a: &Matrix<T>) -> Vec<T> {
    (1..=a.len())
        .map(|k| {
            let sub: Matrix<T> = a[..k].iter().map(|row| row[..k].to_vec()).collect();
            determinant(&sub)
        })
        .collect()
}

/// Result of a Smith normal form computation: `u * a * v == d`.
///
/// `u_inv` is carried along so callers can map reduced coordinates back
/// without a second inversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith<T> {
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v: Matrix<T>,
    pub d: Matrix<T>,
}

impl<T: IntScalar> Smith<T> {
    /// Diagonal of `d`.
    pub fn invariants(&self) -> Vec<T> {
        (0..self.d.len().min(self.d.first().map_or(0, Vec::len)))
            .map(|i| self.d[i][i].clone())
            .collect()
    }
}

struct SnfState<T> {
    a: Matrix<T>,
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
}

impl<T: IntScalar> SnfState<T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        self.u.swap(i, j);
        for row in self.u_inv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        for row in self.v.iter_mut() {
            row.swap(i, j);
        }
    }

    /// row_i -= q * row_t
    fn sub_row(&mut self, i: usize, t: usize, q: &T) {
        for j in 0..self.a[0].len() {
            let x = self.a[t][j].clone() * q.clone();
            self.a[i][j] = self.a[i][j].clone() - x;
        }
        for j in 0..self.u[0].len() {
            let x = self.u[t][j].clone() * q.clone();
            self.u[i][j] = self.u[i][j].clone() - x;
        }
        // inverse op acts on the right of u_inv: col_t += q * col_i
        for row in self.u_inv.iter_mut() {
            let x = row[i].clone() * q.clone();
            row[t] = row[t].clone() + x;
        }
    }

    /// col_j -= q * col_t
    fn sub_col(&mut self, j: usize, t: usize, q: &T) {
        for row in self.a.iter_mut() {
            let x = row[t].clone() * q.clone();
            row[j] = row[j].clone() - x;
        }
        for row in self.v.iter_mut() {
            let x = row[t].clone() * q.clone();
            row[j] = row[j].clone() - x;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -x.clone();
        }
        for x in self.u[i].iter_mut() {
            *x = -x.clone();
        }
        for row in self.u_inv.iter_mut() {
            row[i] = -row[i].clone();
        }
    }
}

/// Smith normal form of an integer matrix.
///
/// Returns unimodular `u`, `v` with `u * a * v = diag(d_1, .., d_r, 0, ..)`,
/// `d_i >= 0` and `d_i | d_{i+1}`.
pub fn smith_normal_form<T: IntScalar>(a: &Matrix<T>) -> Smith<T> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut st = SnfState {
        a: a.clone(),
        u: identity(rows),
        u_inv: identity(rows),
        v: identity(cols),
    };
    if rows == 0 || cols == 0 {
        return Smith { u: st.u, u_inv: st.u_inv, v: st.v, d: st.a };
    }

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !st.a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| st.a[i][j].abs() < st.a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if st.a[i][t].is_zero() {
                    continue;
                }
                let q = st.a[i][t].div_floor(&st.a[t][t]);
                st.sub_row(i, t, &q);
                if !st.a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if st.a[t][j].is_zero() {
                    continue;
                }
                let q = st.a[t][j].div_floor(&st.a[t][t]);
                st.sub_col(j, t, &q);
                if !st.a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // move the smallest remainder in row/column t onto the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !st.a[i][t].is_zero() && st.a[i][t].abs() < st.a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !st.a[t][j].is_zero() && st.a[t][j].abs() < st.a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                st.swap_rows(t, best.0);
                st.swap_cols(t, best.1);
                continue;
            }
            // divisibility condition on the trailing block
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !st.a[i][j].mod_floor(&st.a[t][t]).is_zero())
            });
            match offender {
                Some(i) => {
                    let minus_one = -T::one();
                    st.sub_row(t, i, &minus_one);
                }
                None => break,
            }
        }
        if st.a[t][t].is_negative() {
            st.negate_row(t);
        }
    }

    Smith { u: st.u, u_inv: st.u_inv, v: st.v, d: st.a }
}
