use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::Real;

/// Dense row-major complex matrix.
///
/// Square instances hold representation images and their symmetric
/// powers; rectangular ones hold boundary blocks of chain complexes.
#[derive(Clone, PartialEq)]
pub struct Matrix<T: Real> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

/// A matrix that callers expect to be square.
pub type SquareMatrix<T> = Matrix<T>;

impl<T: Real> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Complex::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_diagonal(diag: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = *d;
        }
        m
    }

    /// Builds from rows; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// 2x2 matrix from entries in reading order.
    pub fn from_2x2(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> Self {
        Matrix {
            rows: 2,
            cols: 2,
            data: vec![a, b, c, d],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Dimension of a square matrix.
    pub fn dim(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<Complex<T>> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| *z * s).collect(),
        }
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Entrywise max-norm.
    pub fn max_norm(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// `max |self - other|` entrywise.
    pub fn max_diff(&self, other: &Self) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }

    pub fn is_diagonal(&self, tol: T) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self[(r, c)].norm() <= tol))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)];
            }
            for c in 0..other.cols {
                m[(r, self.cols + c)] = other[(r, c)];
            }
        }
        m
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m[(r, j)] = self[(r, c)];
            }
        }
        m
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut m = Self::zeros(r1 - r0, c1 - c0);
        for r in r0..r1 {
            for c in c0..c1 {
                m[(r - r0, c - c0)] = self[(r, c)];
            }
        }
        m
    }

    /// Determinant by LU with partial pivoting.
    ///
    /// The pivot is the entry of largest modulus in the column; ties go to
    /// the lowest row index. A singular input returns zero.
    pub fn det(&self) -> Complex<T> {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = Complex::<T>::one();
        for k in 0..n {
            let mut piv = k;
            let mut best = a[k * n + k].norm();
            for r in k + 1..n {
                let v = a[r * n + k].norm();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best == T::zero() {
                return Complex::zero();
            }
            if piv != k {
                for c in 0..n {
                    a.swap(k * n + c, piv * n + c);
                }
                det = -det;
            }
            let p = a[k * n + k];
            det = det * p;
            for r in k + 1..n {
                let f = a[r * n + k] / p;
                if f.is_zero() {
                    continue;
                }
                for c in k + 1..n {
                    let t = a[k * n + c];
                    a[r * n + c] -= f * t;
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan with partial pivoting; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        if n == 2 {
            let d = self.det();
            if d.is_zero() {
                return None;
            }
            let e = &self.data;
            return Some(Matrix::from_2x2(e[3] / d, -e[1] / d, -e[2] / d, e[0] / d));
        }
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let mut piv = k;
            let mut best = a[(k, k)].norm();
            for r in k + 1..n {
                let v = a[(r, k)].norm();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best == T::zero() {
                return None;
            }
            a.swap_rows(k, piv);
            inv.swap_rows(k, piv);
            let p = a[(k, k)];
            for c in 0..n {
                a[(k, c)] = a[(k, c)] / p;
                inv[(k, c)] = inv[(k, c)] / p;
            }
            for r in 0..n {
                if r == k {
                    continue;
                }
                let f = a[(r, k)];
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let (ak, ik) = (a[(k, c)], inv[(k, c)]);
                    a[(r, c)] -= f * ak;
                    inv[(r, c)] -= f * ik;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.rows);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Some(acc)
    }

    /// Greedy pivot columns, in the order given by `order`.
    ///
    /// Columns are reduced against previously accepted ones (row-echelon
    /// elimination with partial pivoting). A column is accepted when its
    /// pivot exceeds `rel_tol` times the largest pivot seen so far, the
    /// first pivot being compared with the matrix max-norm.
    pub fn pivot_columns_in_order(&self, order: &[usize], rel_tol: T) -> Vec<usize> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        let mut scale = self.max_norm();
        if scale == T::zero() {
            return pivots;
        }
        for &c in order {
            if row == self.rows {
                break;
            }
            let mut piv = row;
            let mut best = a[(row, c)].norm();
            for r in row + 1..self.rows {
                let v = a[(r, c)].norm();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best <= rel_tol * scale {
                continue;
            }
            if pivots.is_empty() {
                scale = best;
            } else {
                scale = scale.max(best);
            }
            a.swap_rows(row, piv);
            let p = a[(row, c)];
            for r in row + 1..self.rows {
                let f = a[(r, c)] / p;
                if f.is_zero() {
                    continue;
                }
                for cc in 0..self.cols {
                    let t = a[(row, cc)];
                    a[(r, cc)] -= f * t;
                }
            }
            pivots.push(c);
            row += 1;
        }
        pivots
    }

    pub fn pivot_columns(&self, rel_tol: T) -> Vec<usize> {
        let order: Vec<usize> = (0..self.cols).collect();
        self.pivot_columns_in_order(&order, rel_tol)
    }

    /// Numerical rank (scale-invariant threshold).
    pub fn rank(&self, rel_tol: T) -> usize {
        self.pivot_columns(rel_tol).len()
    }
}

impl<T: Real> Index<(usize, usize)> for Matrix<T> {
    type Output = Complex<T>;

    fn index(&self, (r, c): (usize, usize)) -> &Complex<T> {
        &self.data[r * self.cols + c]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Real> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl<T: Real> Mul for Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: Matrix<T>) -> Matrix<T> {
        &self * &rhs
    }
}

impl<T: Real> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a + *b).collect(),
        }
    }
}

impl<T: Real> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a - *b).collect(),
        }
    }
}

impl<T: Real> Add for Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: Matrix<T>) -> Matrix<T> {
        &self + &rhs
    }
}

impl<T: Real> Sub for Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: Matrix<T>) -> Matrix<T> {
        &self - &rhs
    }
}

impl<T: Real> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| -*z).collect(),
        }
    }
}

impl<T: Real> Neg for Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        -&self
    }
}

impl<T: Real> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = self[(r, c)];
                write!(f, "{:+.6}{:+.6}i ", z.re.to_f64_lossy(), z.im.to_f64_lossy())?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
