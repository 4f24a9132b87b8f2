//! The n-algebra generated by a binary algebra through right-nested
//! products `μ(x₁, μ(x₂, …, μ(x_{n−1}, x_n)…))`, and the quadratic system
//! whose solutions are the binary algebras generating a given 3-algebra.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::msc::Msc;
use crate::polysolve::PolySystem;
use crate::ring::Ring;

/// A binary algebra together with the n-algebra it generates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationWitness {
    pub binary: Msc,
    pub generated: Msc,
}

impl GenerationWitness {
    pub fn new(binary: Msc, n: usize) -> Result<Self> {
        let generated = generate_nary(&binary, n)?;
        Ok(GenerationWitness { binary, generated })
    }
}

fn require_binary(m: &Msc) -> Result<()> {
    if m.arity() != 2 {
        return Err(Error::Shape(format!("expected a binary algebra, got arity {}", m.arity())));
    }
    Ok(())
}

/// `C₂ = M`, `C_k = M · (I ⊗ C_{k−1})`.
pub fn generate_nary(m: &Msc, n: usize) -> Result<Msc> {
    require_binary(m)?;
    if n < 2 {
        return Err(Error::Shape(format!("arity must be at least 2, got {n}")));
    }
    let id = Matrix::identity(m.ring(), m.dim());
    let mut c = m.matrix().clone();
    for _ in 2..n {
        c = m.matrix().mul(&id.kron(&c)?)?;
    }
    Msc::new(m.dim(), n, c)
}

/// `generate_nary(M, 3) − C`; zero exactly when `M` generates `C`.
pub fn expressibility_residual(m: &Msc, c: &Msc) -> Result<Msc> {
    require_binary(m)?;
    if c.arity() != 3 || c.dim() != m.dim() {
        return Err(Error::Shape(format!(
            "expected a {}-dimensional 3-algebra, got a {}-dimensional {}-algebra",
            m.dim(),
            c.dim(),
            c.arity()
        )));
    }
    if m.ring() != c.ring() {
        return Err(Error::RingMismatch { left: m.ring().to_string(), right: c.ring().to_string() });
    }
    generate_nary(m, 3)?.sub(c)
}

/// Names of the unknown binary structure constants `η^k_{rs}` as `h{k}{r}{s}`,
/// ordered by k, then r, then s.
pub fn unknown_names(dim: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(dim * dim * dim);
    for k in 1..=dim {
        for r in 1..=dim {
            for s in 1..=dim {
                out.push(format!("h{k}{r}{s}"));
            }
        }
    }
    out
}

/// The binary algebra whose structure constants are the unknowns `h{k}{r}{s}`.
pub fn symbolic_binary(ring: &Ring, dim: usize) -> Result<Msc> {
    let rows = (1..=dim)
        .map(|k| {
            let mut row = Vec::with_capacity(dim * dim);
            for r in 1..=dim {
                for s in 1..=dim {
                    row.push(ring.var(&format!("h{k}{r}{s}"))?);
                }
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Msc::new(dim, 2, Matrix::from_rows(ring, rows)?)
}

/// The 16 quadratics in `h111 … h222` whose common zeros are exactly the
/// binary algebras generating the 2-dimensional 3-algebra `c`.
pub fn symbolic_system(c: &Msc) -> Result<PolySystem> {
    if c.dim() != 2 {
        return Err(Error::Shape(format!("symbolic systems are built for dimension 2 only, got {}", c.dim())));
    }
    if c.arity() != 3 {
        return Err(Error::Shape(format!("expected a 3-algebra, got arity {}", c.arity())));
    }
    if *c.ring() != Ring::Rationals {
        return Err(Error::RingMismatch { left: c.ring().to_string(), right: "Q".into() });
    }
    let vars = unknown_names(2);
    let ring = Ring::polynomial(&vars)?;
    let m = symbolic_binary(&ring, 2)?;
    let residual = expressibility_residual(&m, &c.coerce(&ring)?)?;
    let polys = residual
        .matrix()
        .entries()
        .iter()
        .map(|x| x.as_poly().expect("polynomial ring").clone())
        .collect();
    PolySystem::new(vars, polys)
}
