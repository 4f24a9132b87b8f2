//! Matrices of structure constants.
//!
//! An m-dimensional n-algebra is stored as an `m × m^n` matrix whose column
//! for the basis tuple `(i_1, …, i_n)` (0-based here) sits at index
//! `Σ_t i_t · m^(n−t)` and holds the coordinates of `e_{i_1} ⋯ e_{i_n}`.
//! For m = 2, n = 3 the column order is 111, 112, 121, 122, 211, 212, 221, 222.

use std::collections::HashMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Ring, RingElem};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Msc {
    dim: usize,
    arity: usize,
    entries: Matrix,
}

impl Msc {
    pub fn new(dim: usize, arity: usize, entries: Matrix) -> Result<Msc> {
        if dim == 0 {
            return Err(Error::Shape("dimension must be at least 1".into()));
        }
        if arity < 2 {
            return Err(Error::Shape(format!("arity must be at least 2, got {arity}")));
        }
        let cols = checked_pow(dim, arity)?;
        if entries.rows() != dim || entries.cols() != cols {
            return Err(Error::Shape(format!(
                "a {dim}-dimensional {arity}-algebra needs a {dim}x{cols} matrix, got {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        Ok(Msc { dim, arity, entries })
    }

    pub fn zero(ring: &Ring, dim: usize, arity: usize) -> Result<Msc> {
        let cols = checked_pow(dim, arity)?;
        Msc::new(dim, arity, Matrix::zeros(ring, dim, cols))
    }

    /// Parses rows of scalar strings in `ring`; the arity is inferred from the column count.
    pub fn parse_rows(ring: &Ring, rows: &[&[&str]]) -> Result<Msc> {
        let dim = rows.len();
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let entries = Matrix::from_rows(ring, parsed)?;
        let arity = infer_arity(dim, entries.cols())?;
        Msc::new(dim, arity, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn ring(&self) -> &Ring {
        self.entries.ring()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &RingElem {
        self.entries.get(row, col)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    /// Column holding the product of the basis tuple (0-based indices).
    pub fn column_index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    /// Inverse of [`Msc::column_index`].
    pub fn column_tuple(&self, mut col: usize) -> Vec<usize> {
        let mut t = vec![0; self.arity];
        for slot in t.iter_mut().rev() {
            *slot = col % self.dim;
            col /= self.dim;
        }
        t
    }

    /// Coordinates of the product of `args`, i.e. `A · (u_1 ⊗ … ⊗ u_n)`.
    pub fn eval_product(&self, args: &[Vec<RingElem>]) -> Result<Vec<RingElem>> {
        if args.len() != self.arity {
            return Err(Error::Shape(format!("expected {} arguments, got {}", self.arity, args.len())));
        }
        let ring = self.ring();
        let mut cols = Vec::with_capacity(args.len());
        for (k, v) in args.iter().enumerate() {
            if v.len() != self.dim {
                return Err(Error::Shape(format!(
                    "argument {} has length {}, expected {}",
                    k + 1,
                    v.len(),
                    self.dim
                )));
            }
            cols.push(Matrix::column(ring, v.clone())?);
        }
        let refs: Vec<&Matrix> = cols.iter().collect();
        let t = Matrix::kron_all(&refs)?;
        let out = self.entries.mul(&t)?;
        Ok((0..self.dim).map(|r| out.get(r, 0).clone()).collect())
    }

    /// The basis vector `e_i` (0-based) in this algebra's ring.
    pub fn basis_vector(&self, i: usize) -> Vec<RingElem> {
        let ring = self.ring();
        (0..self.dim).map(|j| if i == j { ring.one() } else { ring.zero() }).collect()
    }

    /// `g · A · (g⁻¹)^{⊗n}`: the structure constants after the change of basis `g`.
    pub fn transform(&self, g: &BasisChange) -> Result<Msc> {
        if g.dim() != self.dim {
            return Err(Error::Shape(format!(
                "basis change has dimension {}, algebra has {}",
                g.dim(),
                self.dim
            )));
        }
        if !self.ring().is_field() {
            return Err(Error::NotAField(self.ring().to_string()));
        }
        let k = g.inverse().kron_power(self.arity)?;
        let entries = g.matrix().mul(&self.entries)?.mul(&k)?;
        Msc::new(self.dim, self.arity, entries)
    }

    pub fn sub(&self, other: &Msc) -> Result<Msc> {
        self.check_shape(other)?;
        Msc::new(self.dim, self.arity, self.entries.sub(&other.entries)?)
    }

    pub fn check_shape(&self, other: &Msc) -> Result<()> {
        if self.dim != other.dim || self.arity != other.arity {
            return Err(Error::Shape(format!(
                "{}-dimensional {}-algebra vs {}-dimensional {}-algebra",
                self.dim, self.arity, other.dim, other.arity
            )));
        }
        Ok(())
    }

    pub fn coerce(&self, ring: &Ring) -> Result<Msc> {
        Msc::new(self.dim, self.arity, self.entries.coerce(ring)?)
    }

    /// Reduces a rational (or already modular) algebra into GF(p).
    pub fn reduce_mod(&self, p: u64) -> Result<Msc> {
        let ring = Ring::prime_field(p)?;
        self.coerce(&ring)
    }

    /// Specializes a symbolic algebra at a rational point.
    pub fn substitute(&self, assignment: &HashMap<String, BigRational>) -> Result<Msc> {
        let entries = self.entries.try_map(&Ring::Rationals, |x| x.substitute(assignment))?;
        Msc::new(self.dim, self.arity, entries)
    }

    pub fn to_document(&self) -> MscDocument {
        MscDocument {
            dim: self.dim,
            arity: self.arity,
            ring: RingDoc::from(self.ring()),
            entries: self.entries.to_string_rows(),
        }
    }

    pub fn from_document(doc: &MscDocument) -> Result<Msc> {
        let ring = doc.ring.to_ring()?;
        let cols = checked_pow(doc.dim, doc.arity)?;
        if doc.entries.len() != doc.dim {
            return Err(Error::Schema(format!("`entries` has {} rows, expected dim = {}", doc.entries.len(), doc.dim)));
        }
        let mut rows = Vec::with_capacity(doc.dim);
        for (r, row) in doc.entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Schema(format!(
                    "`entries` row {} has {} columns, expected dim^arity = {cols}",
                    r + 1,
                    row.len()
                )));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(c, s)| {
                    ring.parse(s).map_err(|e| {
                        Error::Schema(format!("`entries` row {} column {}: {e}", r + 1, c + 1))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        Msc::new(doc.dim, doc.arity, Matrix::from_rows(&ring, rows)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("msc document serializes")
    }

    pub fn from_json(text: &str) -> Result<Msc> {
        let doc: MscDocument = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Msc::from_document(&doc)
    }
}

fn checked_pow(dim: usize, arity: usize) -> Result<usize> {
    u32::try_from(arity)
        .ok()
        .and_then(|a| dim.checked_pow(a))
        .filter(|&c| c <= 1 << 24)
        .ok_or_else(|| Error::Shape(format!("{dim}^{arity} columns is too large")))
}

fn infer_arity(dim: usize, cols: usize) -> Result<usize> {
    if dim == 0 {
        return Err(Error::Shape("empty matrix".into()));
    }
    if dim == 1 {
        return if cols == 1 { Ok(2) } else { Err(Error::Shape("1-dimensional algebra needs 1 column".into())) };
    }
    let mut n = 0;
    let mut c = 1;
    while c < cols {
        c *= dim;
        n += 1;
    }
    if c != cols || n < 2 {
        return Err(Error::Shape(format!("{cols} columns is not a power dim^n with n >= 2 for dim = {dim}")));
    }
    Ok(n)
}

/// An invertible change of basis `g` with its cached inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChange {
    g: Matrix,
    g_inv: Matrix,
}

impl BasisChange {
    pub fn new(g: Matrix) -> Result<BasisChange> {
        let g_inv = g.inverse()?;
        Ok(BasisChange { g, g_inv })
    }

    pub fn identity(ring: &Ring, dim: usize) -> Result<BasisChange> {
        BasisChange::new(Matrix::identity(ring, dim))
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.g
    }

    pub fn inverse(&self) -> &Matrix {
        &self.g_inv
    }

    /// `g · v` for a coordinate vector.
    pub fn apply(&self, v: &[RingElem]) -> Result<Vec<RingElem>> {
        let col = Matrix::column(self.g.ring(), v.to_vec())?;
        let out = self.g.mul(&col)?;
        Ok((0..out.rows()).map(|r| out.get(r, 0).clone()).collect())
    }

    /// Composition `self · other`.
    pub fn compose(&self, other: &BasisChange) -> Result<BasisChange> {
        Ok(BasisChange { g: self.g.mul(&other.g)?, g_inv: other.g_inv.mul(&self.g_inv)? })
    }
}

/// `{"kind":"Q"} | {"kind":"GF","p":5} | {"kind":"poly","vars":[...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum RingDoc {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "GF")]
    PrimeField { p: u64 },
    #[serde(rename = "poly")]
    Polynomial { vars: Vec<String> },
}

impl RingDoc {
    pub fn to_ring(&self) -> Result<Ring> {
        match self {
            RingDoc::Rationals => Ok(Ring::Rationals),
            RingDoc::PrimeField { p } => Ring::prime_field(*p),
            RingDoc::Polynomial { vars } => Ring::polynomial(vars),
        }
    }
}

impl From<&Ring> for RingDoc {
    fn from(r: &Ring) -> Self {
        match r {
            Ring::Rationals => RingDoc::Rationals,
            Ring::PrimeField(p) => RingDoc::PrimeField { p: *p },
            Ring::Polynomial(v) => RingDoc::Polynomial { vars: v.to_vec() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MscDocument {
    pub dim: usize,
    pub arity: usize,
    pub ring: RingDoc,
    pub entries: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(rows: &[&[&str]]) -> Msc {
        Msc::parse_rows(&Ring::Rationals, rows).unwrap()
    }

    #[test]
    fn column_convention_matches_display_order() {
        let a = Msc::zero(&Ring::Rationals, 2, 3).unwrap();
        let labels: Vec<String> = (0..8)
            .map(|c| a.column_tuple(c).iter().map(|i| (i + 1).to_string()).collect())
            .collect();
        assert_eq!(labels, ["111", "112", "121", "122", "211", "212", "221", "222"]);
        for c in 0..8 {
            assert_eq!(a.column_index(&a.column_tuple(c)), c);
        }
    }

    #[test]
    fn eval_product_examples() {
        let b11 = rat(&[&["1", "0", "0", "-1", "-1", "1", "1", "0"], &["0", "1", "1", "0", "0", "0", "0", "1"]]);
        let e1 = b11.basis_vector(0);
        let e2 = b11.basis_vector(1);
        let r = Ring::Rationals;
        assert_eq!(b11.eval_product(&[e1.clone(), e1.clone(), e1.clone()]).unwrap(), vec![r.one(), r.zero()]);

        let ex52 = rat(&[&["1", "0", "0", "0", "0", "0", "0", "0"], &["0", "1", "0", "0", "0", "0", "0", "0"]]);
        assert_eq!(ex52.eval_product(&[e1.clone(), e1.clone(), e2.clone()]).unwrap(), vec![r.zero(), r.one()]);

        let zero = vec![r.zero(), r.zero()];
        let v = vec![r.from_int(3), r.from_int(-2)];
        assert_eq!(b11.eval_product(&[zero.clone(), v.clone(), v.clone()]).unwrap(), zero);
    }

    #[test]
    fn eval_product_argument_errors() {
        let a = Msc::zero(&Ring::Rationals, 2, 3).unwrap();
        let e1 = a.basis_vector(0);
        assert!(matches!(a.eval_product(&[e1.clone(), e1.clone()]), Err(Error::Shape(_))));
        let short = vec![Ring::Rationals.one()];
        assert!(matches!(a.eval_product(&[e1.clone(), e1, short]), Err(Error::Shape(_))));
    }

    #[test]
    fn transform_swap_relabels_basis() {
        let a4 = rat(&[&["1", "0", "0", "0"], &["0", "0", "0", "0"]]);
        let q = Ring::Rationals;
        let swap = Matrix::from_rows(&q, vec![vec![q.zero(), q.one()], vec![q.one(), q.zero()]]).unwrap();
        let g = BasisChange::new(swap).unwrap();
        let expected = rat(&[&["0", "0", "0", "0"], &["0", "0", "0", "1"]]);
        assert_eq!(a4.transform(&g).unwrap(), expected);
        assert_eq!(a4.transform(&BasisChange::identity(&q, 2).unwrap()).unwrap(), a4);
    }

    #[test]
    fn transform_rejects_polynomial_ring_and_bad_dim() {
        let r = Ring::polynomial(&["a1"]).unwrap();
        let a = Msc::parse_rows(&r, &[&["a1", "0", "0", "0"], &["0", "0", "0", "0"]]).unwrap();
        let g = BasisChange::identity(&Ring::Rationals, 2).unwrap();
        assert!(a.transform(&g).is_err());
        let g3 = BasisChange::identity(&Ring::Rationals, 3).unwrap();
        assert!(matches!(rat(&[&["1", "0", "0", "0"], &["0", "0", "0", "0"]]).transform(&g3), Err(Error::Shape(_))));
        assert!(BasisChange::new(Matrix::identity(&r, 2)).is_err());
    }

    #[test]
    fn codec_example() {
        let a12 = rat(&[&["0", "0", "0", "0"], &["1", "0", "0", "0"]]);
        let json = a12.to_json();
        assert_eq!(json, r#"{"dim":2,"arity":2,"ring":{"kind":"Q"},"entries":[["0","0","0","0"],["1","0","0","0"]]}"#);
        assert_eq!(Msc::from_json(&json).unwrap(), a12);
    }

    #[test]
    fn codec_rejects_wrong_column_count() {
        let doc = r#"{"dim":2,"arity":3,"ring":{"kind":"Q"},"entries":[["0","0","0","0","0","0","0"],["0","0","0","0","0","0","0"]]}"#;
        assert!(matches!(Msc::from_json(doc), Err(Error::Schema(_))));
        let bad_scalar = r#"{"dim":2,"arity":2,"ring":{"kind":"Q"},"entries":[["x","0","0","0"],["0","0","0","0"]]}"#;
        assert!(matches!(Msc::from_json(bad_scalar), Err(Error::Schema(_))));
        let missing = r#"{"dim":2,"ring":{"kind":"Q"},"entries":[]}"#;
        let err = Msc::from_json(missing).unwrap_err().to_string();
        assert!(err.contains("arity"), "{err}");
        let gf = r#"{"dim":1,"arity":2,"ring":{"kind":"GF","p":6},"entries":[["1"]]}"#;
        assert_eq!(Msc::from_json(gf), Err(Error::NotPrime(6)));
    }

    #[test]
    fn parse_rows_infers_arity() {
        assert_eq!(rat(&[&["0", "0", "0", "0"], &["1", "0", "0", "0"]]).arity(), 2);
        assert!(Msc::parse_rows(&Ring::Rationals, &[&["0", "0", "0"], &["0", "0", "0"]]).is_err());
    }
}
