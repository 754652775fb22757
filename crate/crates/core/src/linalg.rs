//! Exact rational linear algebra: dense matrices, inverses, and nullspaces.
//!
//! The nullspace routine is the workhorse behind every invariant-subspace
//! computation. Rows are cleared to integers and eliminated with the
//! fraction-free (Bareiss) pivoting scheme so intermediate entries stay
//! single-division exact instead of accumulating rational blowup.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::KernelError;
use crate::rat::Rat;

/// Dense matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Column vector.
    pub fn column(entries: Vec<Rat>) -> Self {
        let r = entries.len();
        QMatrix {
            rows: r,
            cols: 1,
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] += a * b;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Inverse by Gauss-Jordan elimination; `SingularMatrix` if none exists.
    pub fn inverse(&self) -> Result<QMatrix, KernelError> {
        if self.rows != self.cols {
            return Err(KernelError::DimensionMismatch(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a[(r, col)].is_zero());
            let pivot_row = pivot_row.ok_or(KernelError::SingularMatrix)?;
            a.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] /= &p;
                inv[(col, j)] /= &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in 0..n {
                    let x = &a[(col, j)] * &factor;
                    a[(r, j)] -= x;
                    let y = &inv[(col, j)] * &factor;
                    inv[(r, j)] -= y;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let (_, pivots) = bareiss_echelon(&to_integer_rows(self));
        pivots.len()
    }

    /// Exact basis of `{ v : M v = 0 }` as column vectors.
    ///
    /// Each basis vector is integer-primitive with positive leading entry,
    /// so the output is deterministic for a given input.
    pub fn nullspace(&self) -> Vec<QMatrix> {
        let int_rows = to_integer_rows(self);
        let (ech, pivots) = bareiss_echelon(&int_rows);
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let free_cols: Vec<usize> =
            (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();

        let mut basis = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![Rat::zero(); self.cols];
            v[fc] = Rat::one();
            // Back-substitute through the pivot rows, bottom up.
            for &(pr, pc) in pivots.iter().rev() {
                let mut sum = Rat::zero();
                for j in (pc + 1)..self.cols {
                    if !ech[pr][j].is_zero() && !v[j].is_zero() {
                        sum += Rat::from_integer(ech[pr][j].clone()) * &v[j];
                    }
                }
                v[pc] = -sum / Rat::from_integer(ech[pr][pc].clone());
            }
            basis.push(QMatrix::column(primitive(v)));
        }
        basis
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Clear denominators row by row; row scaling leaves the nullspace intact.
fn to_integer_rows(m: &QMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let mut lcm = BigInt::one();
            for j in 0..m.cols() {
                lcm = lcm.lcm(m[(i, j)].denom());
            }
            (0..m.cols())
                .map(|j| {
                    let r = &m[(i, j)];
                    r.numer() * (&lcm / r.denom())
                })
                .collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) row echelon form.
///
/// Returns the eliminated matrix together with the `(row, col)` positions of
/// the pivots. Pivot choice is the first nonzero entry in the column, which
/// keeps the routine deterministic.
fn bareiss_echelon(rows_in: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<(usize, usize)>) {
    let mut m: Vec<Vec<BigInt>> = rows_in.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev_pivot = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r >= nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let pivot = m[r][c].clone();
        for i in (r + 1)..nrows {
            for j in (c + 1)..ncols {
                let val = (&m[i][j] * &pivot - &m[i][c] * &m[r][j]) / &prev_pivot;
                m[i][j] = val;
            }
            m[i][c] = BigInt::zero();
        }
        pivots.push((r, c));
        prev_pivot = pivot;
        r += 1;
    }
    (m, pivots)
}

/// Scale a rational vector to a primitive integer vector with positive
/// leading nonzero entry.
fn primitive(v: Vec<Rat>) -> Vec<Rat> {
    let mut lcm = BigInt::one();
    for x in &v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        return v;
    }
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| if x.is_negative() { -BigInt::one() } else { BigInt::one() })
        .unwrap_or_else(BigInt::one);
    let div = gcd * sign;
    ints.into_iter()
        .map(|x| Rat::from_integer(x / &div))
        .collect()
}
