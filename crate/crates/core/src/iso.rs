//! Isomorphism checks under `B = g A (g⁻¹)^{⊗n}` and exhaustive search over
//! GL(m, GF(p)).

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::msc::{BasisChange, Msc};
use crate::ring::{mul_mod, Ring};

/// `transform(source, g) = target`, checked exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub g: BasisChange,
    pub source: Msc,
    pub target: Msc,
}

pub fn iso_verify(a: &Msc, b: &Msc, g: &BasisChange) -> Result<bool> {
    a.check_shape(b)?;
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch { left: a.ring().to_string(), right: b.ring().to_string() });
    }
    if g.matrix().ring() != a.ring() {
        return Err(Error::RingMismatch { left: g.matrix().ring().to_string(), right: a.ring().to_string() });
    }
    Ok(a.transform(g)? == *b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Stop at the first witness in enumeration order.
    First,
    /// Enumerate every invertible g.
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoSearch {
    pub prime: u64,
    pub witnesses: Vec<IsoWitness>,
    /// True when every candidate was examined.
    pub exhaustive: bool,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoReportDocument {
    pub prime: u64,
    pub witness_count: usize,
    pub witnesses: Vec<Vec<Vec<String>>>,
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl IsoSearch {
    pub fn found(&self) -> bool {
        !self.witnesses.is_empty()
    }

    pub fn to_document(&self) -> IsoReportDocument {
        IsoReportDocument {
            prime: self.prime,
            witness_count: self.witnesses.len(),
            witnesses: self.witnesses.iter().map(|w| w.g.matrix().to_string_rows()).collect(),
            exhaustive: self.exhaustive,
            warnings: self.warnings.clone(),
        }
    }
}

/// Every witness `g ∈ GL(m, GF(p))` with `transform(A mod p, g) = B mod p`,
/// in row-major lexicographic order of g's entries.
pub fn iso_search(a: &Msc, b: &Msc, p: u64) -> Result<IsoSearch> {
    iso_search_with(a, b, p, SearchMode::All)
}

pub fn iso_search_with(a: &Msc, b: &Msc, p: u64, mode: SearchMode) -> Result<IsoSearch> {
    a.check_shape(b)?;
    let ring = Ring::prime_field(p)?;
    for x in [a, b] {
        match x.ring() {
            Ring::Rationals => {}
            Ring::PrimeField(q) if *q == p => {}
            other => return Err(Error::RingMismatch { left: other.to_string(), right: ring.to_string() }),
        }
    }
    let mut warnings = Vec::new();
    if p == 2 || p == 3 {
        warnings.push(format!("characteristic {p} is excluded by the classification; results are indicative only"));
    }
    let am = a.reduce_mod(p)?;
    let bm = b.reduce_mod(p)?;
    let m = a.dim();
    let cells = m * m;
    let total = (p as u128).checked_pow(cells as u32).filter(|&t| t <= 1 << 40).ok_or_else(|| {
        Error::Limit(format!("GL({m}, GF({p})) search space is too large"))
    })? as u64;
    if m > 2 {
        warnings.push(format!("searching {total} candidates for dimension {m}"));
    }
    let kernel = Kernel::new(&am, &bm, p);
    let decode = |idx: u64| -> Vec<u64> {
        let mut g = vec![0u64; cells];
        let mut rest = idx;
        for slot in g.iter_mut().rev() {
            *slot = rest % p;
            rest /= p;
        }
        g
    };
    let hits: Vec<Vec<u64>> = match mode {
        SearchMode::All => (0..total)
            .into_par_iter()
            .filter_map(|i| {
                let g = decode(i);
                kernel.matches(&g).then_some(g)
            })
            .collect(),
        SearchMode::First => (0..total)
            .into_par_iter()
            .map(decode)
            .find_first(|g| kernel.matches(g))
            .into_iter()
            .collect(),
    };
    let exhaustive = mode == SearchMode::All || hits.is_empty();
    let mut witnesses = Vec::with_capacity(hits.len());
    for g in hits {
        let rows = g
            .chunks(m)
            .map(|r| r.iter().map(|&x| ring.from_int(x as i64)).collect())
            .collect();
        let g = BasisChange::new(Matrix::from_rows(&ring, rows)?)?;
        // independent re-check through the generic transform
        if !iso_verify(&am, &bm, &g)? {
            return Err(Error::Limit("search kernel produced an unverifiable witness".into()));
        }
        witnesses.push(IsoWitness { g, source: am.clone(), target: bm.clone() });
    }
    Ok(IsoSearch { prime: p, witnesses, exhaustive, warnings })
}

/// Residue-level check of `B · g^{⊗n} = g · A` (equivalent to the defining
/// relation for invertible g).
struct Kernel {
    p: u64,
    m: usize,
    n: usize,
    a: Vec<u64>,
    b: Vec<u64>,
}

impl Kernel {
    fn new(a: &Msc, b: &Msc, p: u64) -> Self {
        let flat = |x: &Msc| x.matrix().entries().iter().map(|e| e.as_residue().unwrap()).collect();
        Kernel { p, m: a.dim(), n: a.arity(), a: flat(a), b: flat(b) }
    }

    fn matches(&self, g: &[u64]) -> bool {
        let (p, m) = (self.p, self.m);
        if det_mod(g, m, p) == 0 {
            return false;
        }
        let cols = self.a.len() / m;
        // g^{⊗n}, cols × cols
        let mut k = g.to_vec();
        let mut size = m;
        for _ in 1..self.n {
            let next = size * m;
            let mut out = vec![0u64; next * next];
            for i in 0..size {
                for j in 0..size {
                    let x = k[i * size + j];
                    if x == 0 {
                        continue;
                    }
                    for r in 0..m {
                        for c in 0..m {
                            out[(i * m + r) * next + j * m + c] = mul_mod(x, g[r * m + c], p);
                        }
                    }
                }
            }
            k = out;
            size = next;
        }
        for l in 0..m {
            for c in 0..cols {
                let mut lhs = 0u64;
                for t in 0..cols {
                    let x = self.b[l * cols + t];
                    if x != 0 {
                        lhs = (lhs + mul_mod(x, k[t * cols + c], p)) % p;
                    }
                }
                let mut rhs = 0u64;
                for t in 0..m {
                    rhs = (rhs + mul_mod(g[l * m + t], self.a[t * cols + c], p)) % p;
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

fn det_mod(g: &[u64], m: usize, p: u64) -> u64 {
    if m == 1 {
        return g[0] % p;
    }
    if m == 2 {
        return (mul_mod(g[0], g[3], p) + p - mul_mod(g[1], g[2], p)) % p;
    }
    let mut a = g.to_vec();
    let mut det = 1u64;
    for col in 0..m {
        let Some(piv) = (col..m).find(|&r| a[r * m + col] != 0) else {
            return 0;
        };
        if piv != col {
            for j in 0..m {
                a.swap(piv * m + j, col * m + j);
            }
            det = (p - det) % p;
        }
        let d = a[col * m + col];
        det = mul_mod(det, d, p);
        let inv = crate::ring::inv_mod(d, p);
        for r in col + 1..m {
            let f = mul_mod(a[r * m + col], inv, p);
            if f == 0 {
                continue;
            }
            for j in col..m {
                a[r * m + j] = (a[r * m + j] + p - mul_mod(f, a[col * m + j], p)) % p;
            }
        }
    }
    det
}
