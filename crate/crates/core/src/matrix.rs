//! Dense matrices of ring elements.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElem};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<RingElem>,
}

impl Matrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        Matrix { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    /// Builds a matrix from rows; every entry must belong to `ring`.
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<RingElem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let probe = ring.zero();
        let mut data = Vec::with_capacity(nrows * ncols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Shape(format!("row {} has {} entries, expected {ncols}", r + 1, row.len())));
            }
            for x in row {
                probe.check_same_ring(&x)?;
                data.push(x);
            }
        }
        Ok(Matrix { ring: ring.clone(), rows: nrows, cols: ncols, data })
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RingElem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { ring: ring.clone(), rows, cols, data }
    }

    /// Column vector.
    pub fn column(ring: &Ring, entries: Vec<RingElem>) -> Result<Self> {
        Matrix::from_rows(ring, entries.into_iter().map(|x| vec![x]).collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RingElem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: RingElem) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[RingElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[RingElem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RingElem::is_zero)
    }

    fn check_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.ring.to_string(), right: other.ring.to_string() })
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&RingElem, &RingElem) -> RingElem) -> Result<Matrix> {
        self.check_ring(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &RingElem) -> Matrix {
        self.map(|x| x * s)
    }

    pub fn map(&self, f: impl Fn(&RingElem) -> RingElem) -> Matrix {
        Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Entrywise conversion into another ring.
    pub fn try_map(&self, ring: &Ring, f: impl Fn(&RingElem) -> Result<RingElem>) -> Result<Matrix> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { ring: ring.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn coerce(&self, ring: &Ring) -> Result<Matrix> {
        self.try_map(ring, |x| x.coerce(ring))
    }

    /// Block matrix `(a_ij * other)`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let zero = self.ring.zero();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..self.rows {
            for k in 0..other.rows {
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        data.push(if a.is_zero() || b.is_zero() { zero.clone() } else { a * b });
                    }
                }
            }
        }
        Ok(Matrix { ring: self.ring.clone(), rows, cols, data })
    }

    /// Kronecker product of the given factors, left to right.
    pub fn kron_all(factors: &[&Matrix]) -> Result<Matrix> {
        let (first, rest) = factors.split_first().ok_or_else(|| Error::Shape("empty Kronecker product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, m| acc.kron(m))
    }

    pub fn kron_power(&self, n: usize) -> Result<Matrix> {
        let factors = vec![self; n];
        Matrix::kron_all(&factors)
    }

    /// Inverse over a field by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.ring.is_field() {
            return Err(Error::NotAField(self.ring.to_string()));
        }
        if self.rows != self.cols {
            return Err(Error::Shape(format!("{}x{} matrix is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(&self.ring, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let s = a.get(col, col).inv()?;
            for j in 0..n {
                let (x, y) = (a.get(col, j) * &s, inv.get(col, j) * &s);
                a.set(col, j, x);
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.get(r, j) - &(&f * a.get(col, j));
                    let y = inv.get(r, j) - &(&f * inv.get(col, j));
                    a.set(r, j, x);
                    inv.set(r, j, y);
                }
            }
        }
        Ok(inv)
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| self.row(r).iter().map(ToString::to_string).collect()).collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
