//! Small dense square matrices: inversion by Gauss–Jordan elimination with
//! partial pivoting, symmetric eigenvalues by cyclic Jacobi rotations, and an
//! unpivoted `L·D·Lᵀ` factorization.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    order: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            data: vec![T::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from rows. Fails unless every row has `rows.len()`
    /// entries.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let order = rows.len();
        let mut data = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::DimensionMismatch {
                    left: order,
                    right: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Self { order, data })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.order).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.order;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.order != rhs.order {
            return Err(Error::DimensionMismatch {
                left: self.order,
                right: rhs.order,
            });
        }
        let n = self.order;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// `max |a_ij − b_ij|`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |acc, (&a, &b)| acc.max((a - b).abs()))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| (i + 1..n).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// `(M + Mᵀ) / 2`.
    pub fn symmetrized(&self) -> Self {
        let n = self.order;
        let half = T::of(0.5);
        let mut out = self.clone();
        for i in 0..n {
            for j in i + 1..n {
                let v = (self[(i, j)] + self[(j, i)]) * half;
                out[(i, j)] = v;
                out[(j, i)] = v;
            }
        }
        out
    }

    /// Inverse by Gauss–Jordan elimination with partial pivoting.
    ///
    /// A pivot whose magnitude falls below `order · ε · max|a_ij|` is
    /// treated as zero.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order;
        let scale = self.data.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        let threshold = T::of_usize(n.max(1)) * T::epsilon() * scale;
        let mut a = self.clone();
        let mut inv = Self::identity(n);

        for col in 0..n {
            let (pivot_row, pivot_abs) = (col..n)
                .map(|r| (r, a[(r, col)].abs()))
                .fold((col, -T::one()), |best, cur| if cur.1 > best.1 { cur } else { best });
            if !(pivot_abs > threshold) {
                return Err(Error::Singular {
                    column: col,
                    pivot: pivot_abs.to_f64_lossy(),
                });
            }
            if pivot_row != col {
                a.swap_rows(pivot_row, col);
                inv.swap_rows(pivot_row, col);
            }
            let p = a[(col, col)];
            for j in 0..n {
                a[(col, j)] = a[(col, j)] / p;
                inv[(col, j)] = inv[(col, j)] / p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[(r, col)];
                if f == T::zero() {
                    continue;
                }
                for j in 0..n {
                    a[(r, j)] = a[(r, j)] - f * a[(col, j)];
                    inv[(r, j)] = inv[(r, j)] - f * inv[(col, j)];
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        let n = self.order;
        for j in 0..n {
            self.data.swap(a * n + j, b * n + j);
        }
    }

    /// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
    /// ascending.
    pub fn symmetric_eigenvalues(&self) -> Vec<T> {
        let n = self.order;
        let mut a = self.symmetrized();
        let two = T::of(2.0);
        for _sweep in 0..64 {
            let off: T = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .fold(T::zero(), |s, (i, j)| s + a[(i, j)] * a[(i, j)]);
            if off == T::zero() {
                break;
            }
            let diag: T = (0..n).fold(T::zero(), |s, i| s + a[(i, i)] * a[(i, i)]);
            if off <= T::epsilon() * T::epsilon() * diag {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = a[(p, q)];
                    if apq == T::zero() {
                        continue;
                    }
                    let theta = (a[(q, q)] - a[(p, p)]) / (two * apq);
                    let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                    let c = T::one() / (t * t + T::one()).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        a[(k, p)] = c * akp - s * akq;
                        a[(k, q)] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[(p, k)];
                        let aqk = a[(q, k)];
                        a[(p, k)] = c * apk - s * aqk;
                        a[(q, k)] = s * apk + c * aqk;
                    }
                }
            }
        }
        let mut eig: Vec<T> = (0..n).map(|i| a[(i, i)]).collect();
        eig.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
        eig
    }

    /// Unpivoted `M = L·D·Lᵀ` for symmetric `M`, with `L` unit lower
    /// triangular. Returns `(L, d)`.
    pub fn ldlt(&self) -> Result<(Self, Vec<T>)> {
        let n = self.order;
        let scale = self.data.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        let threshold = T::of_usize(n.max(1)) * T::epsilon() * scale;
        let mut l = Self::identity(n);
        let mut d = vec![T::zero(); n];
        for j in 0..n {
            let mut dj = self[(j, j)];
            for k in 0..j {
                dj = dj - l[(j, k)] * l[(j, k)] * d[k];
            }
            if !(dj.abs() > threshold) {
                return Err(Error::Singular {
                    column: j,
                    pivot: dj.to_f64_lossy(),
                });
            }
            d[j] = dj;
            for i in j + 1..n {
                let mut v = self[(i, j)];
                for k in 0..j {
                    v = v - l[(i, k)] * l[(j, k)] * d[k];
                }
                l[(i, j)] = v / dj;
            }
        }
        Ok((l, d))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.order + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.order + j]
    }
}
