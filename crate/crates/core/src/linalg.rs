//! Dense matrices over the rationals with exact elimination.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `p/q` in lowest terms, or `p` when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    /// Matrix whose j-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<Rational>], rows: usize) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
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

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// vᵀ M w.
    pub fn bilinear(&self, v: &[Rational], w: &[Rational]) -> Rational {
        v.iter()
            .zip(self.mul_vec(w))
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..=i).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    /// Reduced row echelon form in place; returns the pivot columns.
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
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let x = &self[(r, j)] * &inv;
                self[(r, j)] = x;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let x = &self[(i, j)] - &f * &self[(r, j)];
                    self[(i, j)] = x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Dimension of the right kernel.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Solve `self · x = b`; `None` when inconsistent. Free variables are 0.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Inertia (positive, negative, zero) of a symmetric matrix via
    /// symmetric Gaussian elimination.
    pub fn inertia(&self) -> (usize, usize, usize) {
        assert!(self.is_symmetric(), "inertia requires a symmetric matrix");
        let n = self.rows;
        let mut a = self.clone();
        let (mut pos, mut neg) = (0, 0);
        let mut k = 0;
        while k < n {
            // Bring a nonzero diagonal entry to position k, or manufacture
            // one from an off-diagonal pair.
            if a[(k, k)].is_zero() {
                if let Some(p) = (k + 1..n).find(|&i| !a[(i, i)].is_zero()) {
                    a.swap_sym(k, p);
                } else if let Some(p) = (k + 1..n).find(|&i| !a[(k, i)].is_zero()) {
                    // every remaining diagonal entry is zero, so the new
                    // pivot is 2·a[k][p]
                    a.add_sym(k, p);
                } else {
                    k += 1;
                    continue;
                }
            }
            let d = a[(k, k)].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] / &d;
                for j in k..n {
                    let x = &a[(i, j)] - &f * &a[(k, j)];
                    a[(i, j)] = x;
                }
                for j in k..n {
                    let x = &a[(j, i)] - &f * &a[(j, k)];
                    a[(j, i)] = x;
                }
            }
            k += 1;
        }
        (pos, neg, n - pos - neg)
    }

    fn swap_sym(&mut self, a: usize, b: usize) {
        self.swap_rows(a, b);
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn add_sym(&mut self, k: usize, p: usize) {
        for j in 0..self.cols {
            let x = &self[(k, j)] + &self[(p, j)];
            self[(k, j)] = x;
        }
        for i in 0..self.rows {
            let x = &self[(i, k)] + &self[(i, p)];
            self[(i, k)] = x;
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Rank of a matrix given as rows of small integers.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    Matrix::from_i64_rows(rows).rank()
}

/// Largest absolute numerator or denominator; used to keep random test
/// data in range.
pub fn height(q: &Rational) -> BigInt {
    q.numer().abs().max(q.denom().clone())
}
