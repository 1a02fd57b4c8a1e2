use std::fmt;
use std::ops::{Index, IndexMut};

use super::Scalar;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from row vectors; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    /// Integer-entry convenience constructor. Panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        Matrix::from_rows(cols, rows).expect("ragged integer matrix")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let mut out = vec![Scalar::zero(); self.cols];
        for (k, vk) in v.iter().enumerate() {
            if vk.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let m = &self[(k, j)];
                if !m.is_zero() {
                    *o += &(vk * m);
                }
            }
        }
        out
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::Shape(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::Shape(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Reduced row-echelon form (same shape, zero rows at the bottom) and the
    /// pivot columns in increasing order.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.to_rows();
        let pivots = rref_rows(&mut a, self.cols);
        let data = a.into_iter().flatten().collect();
        (
            Matrix {
                rows: self.rows,
                cols: self.cols,
                data,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        rref_rows(&mut a, self.cols).len()
    }

    /// Basis (as rows) of `{ v : self * v = 0 }`, one vector per free column.
    pub fn kernel_rows(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(); n];
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, free)];
            }
            out.push(v);
        }
        Matrix::from_rows(n, out).expect("kernel rows have uniform length")
    }

    /// One solution `X` of `self * X = rhs`, or `None` when inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        if rhs.rows != self.rows {
            return Err(Error::Shape(format!(
                "solve: {} equations but rhs has {} rows",
                self.rows, rhs.rows
            )));
        }
        let aug = self.hstack(rhs)?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = r[(row, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            let inv = pivot.recip().expect("nonzero pivot");
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &inv;
                let (top, bottom) = a.split_at_mut(r);
                let src = &top[col];
                for (dst, s) in bottom[0][col..].iter_mut().zip(&src[col..]) {
                    if !s.is_zero() {
                        *dst -= &(&f * s);
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "inverse of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rank() < self.rows {
            return Ok(None);
        }
        self.solve(&Matrix::identity(self.rows))
    }
}

/// In-place Gauss-Jordan elimination; returns pivot columns.
fn rref_rows(a: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let m = a.len();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..cols {
        if pr >= m {
            break;
        }
        let Some(found) = (pr..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(found, pr);
        let inv = a[pr][col].recip().expect("nonzero pivot");
        if !inv.is_one() {
            for x in a[pr][col..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = a[pr].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == pr || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(col);
        pr += 1;
    }
    pivots
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for (i, r) in self.row_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r:?}")?;
        }
        write!(f, "]")
    }
}
