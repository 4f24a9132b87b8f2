//! Total associativity of 3-algebras and associativity of binary algebras,
//! as matrix residuals and as a brute-force check on basis tuples.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::msc::Msc;

fn require_arity(a: &Msc, n: usize) -> Result<()> {
    if a.arity() != n {
        return Err(Error::Shape(format!("expected arity {n}, got {}", a.arity())));
    }
    Ok(())
}

/// The three residuals
/// `A(A⊗I⊗I − I⊗A⊗I)`, `A(A⊗I⊗I − I⊗I⊗A)`, `A(I⊗A⊗I − I⊗I⊗A)`,
/// each of shape `m × m⁵`.
pub fn total_assoc_residuals(a: &Msc) -> Result<[Matrix; 3]> {
    require_arity(a, 3)?;
    let id = Matrix::identity(a.ring(), a.dim());
    let am = a.matrix();
    let left = Matrix::kron_all(&[am, &id, &id])?;
    let middle = Matrix::kron_all(&[&id, am, &id])?;
    let right = Matrix::kron_all(&[&id, &id, am])?;
    Ok([
        am.mul(&left.sub(&middle)?)?,
        am.mul(&left.sub(&right)?)?,
        am.mul(&middle.sub(&right)?)?,
    ])
}

pub fn is_totally_associative(a: &Msc) -> Result<bool> {
    Ok(total_assoc_residuals(a)?.iter().all(Matrix::is_zero))
}

/// `M(M⊗I) − M(I⊗M)`, shape `m × m³`.
pub fn binary_assoc_residual(m: &Msc) -> Result<Matrix> {
    require_arity(m, 2)?;
    let id = Matrix::identity(m.ring(), m.dim());
    let mm = m.matrix();
    mm.mul(&mm.kron(&id)?)?.sub(&mm.mul(&id.kron(mm)?)?)
}

pub fn is_associative(m: &Msc) -> Result<bool> {
    Ok(binary_assoc_residual(m)?.is_zero())
}

/// Outcome of [`quintuple_oracle`]: the first basis 5-tuple (0-based,
/// lexicographic) where the three bracketings disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub associative: bool,
    pub violation: Option<[usize; 5]>,
}

/// Checks `(uvw)xy = u(vwx)y = uv(wxy)` on every basis 5-tuple using
/// [`Msc::eval_product`] only.
pub fn quintuple_oracle(a: &Msc) -> Result<OracleResult> {
    require_arity(a, 3)?;
    if !a.ring().is_field() {
        return Err(Error::NotAField(a.ring().to_string()));
    }
    let m = a.dim();
    let e: Vec<_> = (0..m).map(|i| a.basis_vector(i)).collect();
    let total = m.pow(5);
    for idx in 0..total {
        let mut t = [0usize; 5];
        let mut rest = idx;
        for slot in t.iter_mut().rev() {
            *slot = rest % m;
            rest /= m;
        }
        let [u, v, w, x, y] = t.map(|i| e[i].clone());
        let first = a.eval_product(&[a.eval_product(&[u.clone(), v.clone(), w.clone()])?, x.clone(), y.clone()])?;
        let second = a.eval_product(&[u.clone(), a.eval_product(&[v.clone(), w.clone(), x.clone()])?, y.clone()])?;
        let third = a.eval_product(&[u, v, a.eval_product(&[w, x, y])?])?;
        if first != second || second != third {
            return Ok(OracleResult { associative: false, violation: Some(t) });
        }
    }
    Ok(OracleResult { associative: true, violation: None })
}

/// A nonzero residual entry, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidualEntry {
    pub which: String,
    pub row: usize,
    pub col: usize,
    pub value: String,
}

/// Associativity verdict with full residuals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocReport {
    pub subject: Msc,
    pub residuals: Vec<Matrix>,
    pub verdict: bool,
    pub violating_tuple: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssocReportDocument {
    pub verdict: bool,
    pub residual_nonzeros: Vec<ResidualEntry>,
    pub violating_tuple: Option<Vec<usize>>,
}

impl AssocReport {
    /// Residual-based verdict for arity 2 or 3. Over a field the report also
    /// carries the first violating basis tuple (1-based).
    pub fn new(a: &Msc) -> Result<AssocReport> {
        let residuals: Vec<Matrix> = match a.arity() {
            2 => vec![binary_assoc_residual(a)?],
            3 => total_assoc_residuals(a)?.into(),
            n => return Err(Error::Shape(format!("associativity is checked for arity 2 or 3, got {n}"))),
        };
        let verdict = residuals.iter().all(Matrix::is_zero);
        let violating_tuple = if verdict || !a.ring().is_field() {
            None
        } else if a.arity() == 3 {
            quintuple_oracle(a)?.violation.map(|t| t.iter().map(|i| i + 1).collect())
        } else {
            first_binary_violation(a)?.map(|t| t.iter().map(|i| i + 1).collect())
        };
        Ok(AssocReport { subject: a.clone(), residuals, verdict, violating_tuple })
    }

    pub fn nonzeros(&self) -> Vec<ResidualEntry> {
        let names = if self.residuals.len() == 1 { vec!["binary"] } else { vec!["a", "b", "c"] };
        let mut out = Vec::new();
        for (name, r) in names.iter().zip(&self.residuals) {
            for row in 0..r.rows() {
                for col in 0..r.cols() {
                    let x = r.get(row, col);
                    if !x.is_zero() {
                        out.push(ResidualEntry { which: name.to_string(), row: row + 1, col: col + 1, value: x.to_string() });
                    }
                }
            }
        }
        out
    }

    pub fn to_document(&self) -> AssocReportDocument {
        AssocReportDocument {
            verdict: self.verdict,
            residual_nonzeros: self.nonzeros(),
            violating_tuple: self.violating_tuple.clone(),
        }
    }
}

/// First basis triple (0-based) with `(xy)z ≠ x(yz)`.
pub fn first_binary_violation(m: &Msc) -> Result<Option<[usize; 3]>> {
    require_arity(m, 2)?;
    let d = m.dim();
    let e: Vec<_> = (0..d).map(|i| m.basis_vector(i)).collect();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let lhs = m.eval_product(&[m.eval_product(&[e[i].clone(), e[j].clone()])?, e[k].clone()])?;
                let rhs = m.eval_product(&[e[i].clone(), m.eval_product(&[e[j].clone(), e[k].clone()])?])?;
                if lhs != rhs {
                    return Ok(Some([i, j, k]));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn rat(rows: &[&[&str]]) -> Msc {
        Msc::parse_rows(&Ring::Rationals, rows).unwrap()
    }

    #[test]
    fn example_algebra_is_totally_associative() {
        let a = rat(&[&["1", "0", "0", "0", "0", "0", "0", "0"], &["0", "1", "0", "0", "0", "0", "0", "0"]]);
        assert!(is_totally_associative(&a).unwrap());
        assert!(quintuple_oracle(&a).unwrap().associative);
        let zero = Msc::zero(&Ring::Rationals, 2, 3).unwrap();
        assert!(is_totally_associative(&zero).unwrap());
        assert_eq!(quintuple_oracle(&zero).unwrap(), OracleResult { associative: true, violation: None });
    }

    #[test]
    fn residual_shapes() {
        let zero = Msc::zero(&Ring::Rationals, 2, 3).unwrap();
        for r in total_assoc_residuals(&zero).unwrap() {
            assert_eq!((r.rows(), r.cols()), (2, 32));
        }
        let b = Msc::zero(&Ring::Rationals, 2, 2).unwrap();
        let r = binary_assoc_residual(&b).unwrap();
        assert_eq!((r.rows(), r.cols()), (2, 8));
        assert!(r.is_zero());
    }

    #[test]
    fn a2_000_binary_witness() {
        // A2(0,0,0): e1e2... e1e1 = 0, e2e1 = e2, e2e2 = e1
        let a2 = rat(&[&["0", "0", "0", "1"], &["0", "0", "1", "0"]]);
        assert!(!is_associative(&a2).unwrap());
        let report = AssocReport::new(&a2).unwrap();
        assert!(!report.verdict);
        // (e2 e1) e1 = e2 e1 = e2 while e2 (e1 e1) = 0
        let e1 = a2.basis_vector(0);
        let e2 = a2.basis_vector(1);
        let lhs = a2.eval_product(&[a2.eval_product(&[e2.clone(), e1.clone()]).unwrap(), e1.clone()]).unwrap();
        let rhs = a2.eval_product(&[e2.clone(), a2.eval_product(&[e1.clone(), e1]).unwrap()]).unwrap();
        assert_eq!(lhs, e2);
        assert!(rhs.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn wrong_arity_is_rejected() {
        let b = Msc::zero(&Ring::Rationals, 2, 2).unwrap();
        assert!(total_assoc_residuals(&b).is_err());
        assert!(quintuple_oracle(&b).is_err());
        let c = Msc::zero(&Ring::Rationals, 2, 3).unwrap();
        assert!(binary_assoc_residual(&c).is_err());
        let d = Msc::zero(&Ring::Rationals, 2, 4).unwrap();
        assert!(AssocReport::new(&d).is_err());
        let poly = Msc::zero(&Ring::polynomial(&["x"]).unwrap(), 2, 3).unwrap();
        assert!(quintuple_oracle(&poly).is_err());
    }
}
