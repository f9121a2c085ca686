//! Dense matrices over an exact commutative ring.
//!
//! Determinants and characteristic polynomials use Berkowitz's
//! division-free algorithm, so Laurent-polynomial matrices never leave
//! their ring. Inversion goes through Cayley-Hamilton and only divides by
//! the determinant, which must be a unit.

use std::fmt;
use std::ops::{Index, IndexMut};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring::LaurentPoly;
use crate::scalar::{Field, Ring};
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Ring> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch {
                left_rows: nrows,
                left_cols: ncols,
                right_rows: 1,
                right_cols: bad.len(),
            });
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn diagonal(d: Vec<S>) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in d.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        m
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

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: Ring>(&self, f: impl Fn(&S) -> Result<T>) -> Result<Matrix<T>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|e| e.mul_ref(c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a -= b;
        }
        Ok(out)
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Result<Self> {
        self.require_square()?;
        let mut out = self.clone();
        for i in 0..self.rows {
            out[(i, i)] -= &S::one();
        }
        Ok(out)
    }

    /// Exact product; zero entries of `self` are skipped, which matters for
    /// the sparse generator matrices.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let n = other.cols;
        let row_product = |i: usize| -> Vec<S> {
            let mut acc = vec![S::zero(); n];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.row(k).iter().enumerate() {
                    if !b.is_zero() {
                        acc[j] += &a.mul_ref(b);
                    }
                }
            }
            acc
        };
        let entries: Vec<S> = if self.rows * self.cols * n >= 4096 {
            (0..self.rows).into_par_iter().flat_map_iter(row_product).collect()
        } else {
            (0..self.rows).flat_map(row_product).collect()
        };
        Ok(Matrix {
            rows: self.rows,
            cols: n,
            entries,
        })
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &a.mul_ref(b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<S> {
        self.require_square()?;
        let mut acc = S::zero();
        for i in 0..self.rows {
            acc += &self[(i, i)];
        }
        Ok(acc)
    }

    /// Characteristic polynomial `det(xI - A)` by Berkowitz's algorithm.
    pub fn char_poly(&self) -> Result<CharPoly<S>> {
        self.require_square()?;
        let n = self.rows;
        // coefficients of the running polynomial, highest degree first
        let mut p: Vec<S> = vec![S::one()];
        for k in 0..n {
            // leading (k+1)x(k+1) block [[A_k, C], [R, a]]
            let a = &self[(k, k)];
            let mut toeplitz = Vec::with_capacity(k + 2);
            toeplitz.push(S::one());
            toeplitz.push(-a.clone());
            let mut v: Vec<S> = (0..k).map(|i| self[(i, k)].clone()).collect();
            for _ in 0..k {
                let mut rv = S::zero();
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero() {
                        rv += &self[(k, j)].mul_ref(vj);
                    }
                }
                toeplitz.push(-rv);
                v = (0..k)
                    .map(|i| {
                        let mut acc = S::zero();
                        for (j, vj) in v.iter().enumerate() {
                            let e = &self[(i, j)];
                            if !e.is_zero() && !vj.is_zero() {
                                acc += &e.mul_ref(vj);
                            }
                        }
                        acc
                    })
                    .collect();
            }
            let mut next = vec![S::zero(); k + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (l, pl) in p.iter().enumerate().take(i + 1) {
                    let tcoef = &toeplitz[i - l];
                    if !tcoef.is_zero() && !pl.is_zero() {
                        *slot += &tcoef.mul_ref(pl);
                    }
                }
            }
            p = next;
        }
        p.reverse();
        Ok(CharPoly { coeffs: p })
    }

    pub fn det(&self) -> Result<S> {
        let cp = self.char_poly()?;
        let c0 = cp.coeffs[0].clone();
        Ok(if self.rows.is_multiple_of(2) { c0 } else { -c0 })
    }

    /// Inverse over the ring, `adj(A) / det(A)`, when `det(A)` is a unit.
    ///
    /// With `det(xI - A) = x^n + c_{n-1}x^{n-1} + ... + c_0`, Cayley-Hamilton
    /// gives `A^{-1} = -(A^{n-1} + c_{n-1}A^{n-2} + ... + c_1 I) / c_0`.
    pub fn inverse_unit(&self) -> Result<Self> {
        let cp = self.char_poly()?;
        let n = self.rows;
        let c0_inv = cp.coeffs[0].try_inverse().ok_or(Error::NotUnit)?;
        let mut acc = Self::identity(n);
        for k in (1..n).rev() {
            acc = acc.mul(self)?;
            let c = &cp.coeffs[k];
            if !c.is_zero() {
                for i in 0..n {
                    acc[(i, i)] += c;
                }
            }
        }
        Ok(acc.scale(&(-c0_inv)))
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            })
        }
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl<S: Ring> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<S: Field> Matrix<S> {
    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.entries.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m[(r, c)].try_inverse().expect("nonzero field element");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul_ref(&inv);
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let delta = factor.mul_ref(&m[(r, j)]);
                    m[(i, j)] -= &delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                S::one()
            } else {
                S::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::NotUnit);
        }
        Ok(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }
}

impl Matrix<LaurentPoly> {
    /// Entrywise specialisation of the variables to nonzero rationals.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Matrix<Rational>> {
        self.try_map(|p| p.evaluate(point))
    }
}

/// Monic univariate polynomial with coefficients in a ring, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly<S> {
    pub coeffs: Vec<S>,
}

impl<S: Ring> CharPoly<S> {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a S>) -> Self
    where
        S: 'a,
    {
        roots.into_iter().fold(CharPoly { coeffs: vec![S::one()] }, |acc, r| {
            acc.mul(&CharPoly {
                coeffs: vec![-r.clone(), S::one()],
            })
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &a.mul_ref(b);
            }
        }
        CharPoly { coeffs: out }
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix<S>) -> Result<Matrix<S>> {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m)?;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc += c;
        }
        acc
    }
}

/// JSON and LaTeX rendering of a matrix entry.
pub trait ExactScalar: Ring {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;
    fn to_latex(&self, names: &[&str]) -> String;
    fn to_text(&self, names: &[&str]) -> String;
}

impl ExactScalar for LaurentPoly {
    fn to_json(&self) -> Value {
        LaurentPoly::to_json(self)
    }
    fn from_json(value: &Value) -> Result<Self> {
        LaurentPoly::from_json(value, 1)
    }
    fn to_latex(&self, names: &[&str]) -> String {
        LaurentPoly::to_latex(self, names)
    }
    fn to_text(&self, names: &[&str]) -> String {
        self.display_with(names)
    }
}

impl ExactScalar for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(value: &Value) -> Result<Self> {
        let s = value
            .as_str()
            .ok_or_else(|| Error::Parse(format!("rational entry must be a \"P/Q\" string, got {value}")))?;
        crate::parse_rational(s)
    }
    fn to_latex(&self, _names: &[&str]) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else if self.numer().sign() == num_bigint::Sign::Minus {
            format!("-\\frac{{{}}}{{{}}}", -self.numer(), self.denom())
        } else {
            format!("\\frac{{{}}}{{{}}}", self.numer(), self.denom())
        }
    }
    fn to_text(&self, _names: &[&str]) -> String {
        self.to_string()
    }
}

impl<S: ExactScalar> Matrix<S> {
    /// `{"rows": r, "cols": c, "entries": [[...], ...]}`.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.rows)
            .map(|i| Value::Array(self.row(i).iter().map(ExactScalar::to_json).collect()))
            .collect();
        json!({ "rows": self.rows, "cols": self.cols, "entries": rows })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let dim = |key: &str| {
            value
                .get(key)
                .and_then(Value::as_u64)
                .map(|v| v as usize)
                .ok_or_else(|| Error::Parse(format!("missing \"{key}\"")))
        };
        let (rows, cols) = (dim("rows")?, dim("cols")?);
        let data = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"entries\"".into()))?;
        let parsed = data
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                    .iter()
                    .map(S::from_json)
                    .collect::<Result<Vec<S>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let m = Self::from_rows(parsed)?;
        if m.rows != rows || (rows > 0 && m.cols != cols) {
            return Err(Error::Parse(format!(
                "declared {rows}x{cols}, found {}x{}",
                m.rows, m.cols
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries: m.entries,
        })
    }

    /// Bracketed `array` environment.
    pub fn to_latex(&self, names: &[&str]) -> String {
        let mut out = format!("\\left[\\begin{{array}}{{{}}}\n", "c".repeat(self.cols));
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_latex(names)).collect();
            out.push_str(&row.join(" & "));
            out.push_str(if i + 1 < self.rows { " \\\\\n" } else { "\n" });
        }
        out.push_str("\\end{array}\\right]");
        out
    }
}
