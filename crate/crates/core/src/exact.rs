//! Exact linear algebra over the integers, plus negative continued
//! fractions.
//!
//! The matrix kernel is generic over the integer scalar (anything
//! satisfying [`Scalar`], e.g. `i64` or `BigInt`); the crate root fixes the
//! concrete working types to arbitrary precision ([`crate::Int`],
//! [`crate::IntMatrix`]). All algorithms are fraction-free or
//! rational-exact; no floating point anywhere.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::{Int, Rational};

/// Integer scalars the kernel can work over.
pub trait Scalar: Integer + Signed + Clone + fmt::Debug + fmt::Display {}
impl<T: Integer + Signed + Clone + fmt::Debug + fmt::Display> Scalar for T {}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("continued-fraction argument must be < -1")]
    OutOfRange,
}

/// Dense square matrix over an integer scalar.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>, // row-major, n*n
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix({}x{}) [", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "  ")?;
            for j in 0..self.n {
                write!(f, "{:?} ", self.entries[i * self.n + j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> Matrix<T> {
    /// Builds a matrix from rows; every row must have length equal to the
    /// number of rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ExactError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(ExactError::DimensionMismatch(format!(
                "expected {} columns, found a row with {}",
                n,
                bad.len()
            )));
        }
        Ok(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds an `n`×`n` matrix from an entry function.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn rows_cloned(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every intermediate entry is a minor of the input, so divisions are
    /// exact and bit-growth stays polynomial.
    pub fn determinant(&self) -> T {
        let n = self.n;
        if n == 0 {
            return T::one();
        }
        let mut m = self.rows_cloned();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                    m[i][j] = num / prev.clone(); // exact by Sylvester's identity
                }
                m[i][k] = T::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Exact solution of `M x = v` for nonsingular `M`: fraction-free
    /// forward elimination on the augmented matrix, then rational back
    /// substitution.
    pub fn solve(&self, v: &[T]) -> Result<Vec<Ratio<T>>, ExactError> {
        let n = self.n;
        if v.len() != n {
            return Err(ExactError::DimensionMismatch(format!(
                "matrix is {}x{} but right-hand side has length {}",
                n,
                n,
                v.len()
            )));
        }
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut a: Vec<Vec<T>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.push(v[i].clone());
                row
            })
            .collect();
        let mut prev = T::one();
        for k in 0..n {
            let pivot = (k..n)
                .find(|&i| !a[i][k].is_zero())
                .ok_or(ExactError::SingularMatrix)?;
            a.swap(k, pivot);
            for i in k + 1..n {
                for j in k + 1..=n {
                    let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = num / prev.clone();
                }
                a[i][k] = T::zero();
            }
            prev = a[k][k].clone();
        }
        let mut x: Vec<Ratio<T>> = vec![Ratio::zero(); n];
        for k in (0..n).rev() {
            let mut acc = Ratio::from_integer(a[k][n].clone());
            for j in k + 1..n {
                acc = acc - Ratio::from_integer(a[k][j].clone()) * x[j].clone();
            }
            x[k] = acc / Ratio::from_integer(a[k][k].clone());
        }
        Ok(x)
    }

    /// Exact signature (positive minus negative eigenvalue count) of a
    /// symmetric nonsingular matrix.
    ///
    /// Symmetric Gaussian elimination over the rationals: each step applies
    /// a congruence, so by Sylvester's law of inertia the pivot signs give
    /// the signature. When a diagonal pivot vanishes we first try a
    /// symmetric row/column swap to a nonzero diagonal entry; if the whole
    /// remaining diagonal is zero, a congruence row+column addition
    /// manufactures the pivot 2a from any off-diagonal a ≠ 0. A remaining
    /// block that is identically zero means the input was singular.
    #[allow(clippy::needless_range_loop)] // index form keeps the row/column symmetry visible
    pub fn signature(&self) -> Result<i64, ExactError> {
        if !self.is_symmetric() {
            return Err(ExactError::NotSymmetric);
        }
        let n = self.n;
        let mut a: Vec<Vec<Ratio<T>>> = (0..n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|e| Ratio::from_integer(e.clone()))
                    .collect()
            })
            .collect();
        let sym_swap = |a: &mut Vec<Vec<Ratio<T>>>, i: usize, j: usize| {
            a.swap(i, j);
            for row in a.iter_mut() {
                row.swap(i, j);
            }
        };
        let mut sig = 0i64;
        for k in 0..n {
            if a[k][k].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                    sym_swap(&mut a, k, j);
                } else {
                    // whole remaining diagonal is zero
                    let off = (k..n)
                        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                        .find(|&(i, j)| !a[i][j].is_zero())
                        .ok_or(ExactError::SingularMatrix)?;
                    let (i, j) = off;
                    if i != k {
                        sym_swap(&mut a, k, i);
                    }
                    // now a[k][j] != 0 (j > i >= k, so the swap left column j alone)
                    for t in 0..n {
                        let add = a[j][t].clone();
                        a[k][t] = a[k][t].clone() + add;
                    }
                    for t in 0..n {
                        let add = a[t][j].clone();
                        a[t][k] = a[t][k].clone() + add;
                    }
                }
            }
            let d = a[k][k].clone();
            sig += if d.is_positive() { 1 } else { -1 };
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let fi = a[i][k].clone() / d.clone();
                for j in k + 1..n {
                    let delta = fi.clone() * a[k][j].clone();
                    a[i][j] = a[i][j].clone() - delta;
                }
            }
            for i in k + 1..n {
                a[i][k] = Ratio::zero();
                a[k][i] = Ratio::zero();
            }
        }
        Ok(sig)
    }

    /// `M x` for a rational vector, for residual checks.
    pub fn mul_vec(&self, x: &[Ratio<T>]) -> Vec<Ratio<T>> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Ratio::zero(), |acc, (m, xi)| {
                        acc + Ratio::from_integer(m.clone()) * xi.clone()
                    })
            })
            .collect()
    }
}

/// Negative continued fraction expansion of `r < -1`:
/// `r = a_0 - 1/(a_1 - 1/(...))` with every `a_j <= -2`.
///
/// This expansion exists and is unique; it is the Hirzebruch–Jung
/// expansion of `-r` with all entries negated.
pub fn neg_cf_expand<T: Scalar>(r: &Ratio<T>) -> Result<Vec<T>, ExactError> {
    if *r >= -Ratio::one() {
        return Err(ExactError::OutOfRange);
    }
    let mut x = -r.clone(); // x > 1
    let mut out = Vec::new();
    loop {
        let b = x.ceil(); // integer-valued Ratio, b >= 2
        out.push(-b.to_integer());
        if x == b {
            return Ok(out);
        }
        x = (b - x).recip(); // b - x in (0,1), so x stays > 1
    }
}

/// Evaluates a negative continued fraction `a_0 - 1/(a_1 - 1/(...))`.
pub fn neg_cf_eval<T: Scalar>(coeffs: &[T]) -> Result<Ratio<T>, ExactError> {
    let (last, init) = coeffs.split_last().ok_or(ExactError::OutOfRange)?;
    let mut val = Ratio::from_integer(last.clone());
    for c in init.iter().rev() {
        if val.is_zero() {
            return Err(ExactError::OutOfRange);
        }
        val = Ratio::from_integer(c.clone()) - val.recip();
    }
    Ok(val)
}

/// Convenience constructor for arbitrary-precision matrices from machine
/// integers.
pub fn mat(rows: &[&[i64]]) -> Matrix<Int> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect(),
    )
    .expect("rows of equal length")
}

/// Convenience constructor for reduced rationals from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Ratio::new(Int::from(numer), Int::from(denom))
}
