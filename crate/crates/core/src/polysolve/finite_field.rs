use rayon::prelude::*;

use super::{Effort, PolySystem, SolveOutcome, SolveStatus};
use crate::error::{Error, Result};
use crate::ring::{mul_mod, pow_mod, rational_mod_p, Ring};

pub const MAX_FF_VARS: usize = 9;

/// Assignments are blocks of this many consecutive indices per worker task.
const BLOCK: u64 = 1 << 14;

/// A system with coefficients reduced mod p, terms as (coefficient, [(var, exp)]).
struct Compiled {
    p: u64,
    nvars: usize,
    polys: Vec<Vec<(u64, Vec<(usize, u32)>)>>,
}

impl Compiled {
    fn new(sys: &PolySystem, p: u64) -> Result<Compiled> {
        Ring::prime_field(p)?;
        if sys.vars().len() > MAX_FF_VARS {
            return Err(Error::Limit(format!(
                "exhaustive search supports at most {MAX_FF_VARS} variables, got {}",
                sys.vars().len()
            )));
        }
        let polys = sys
            .polys()
            .iter()
            .map(|f| {
                f.terms()
                    .iter()
                    .rev()
                    .map(|(m, c)| {
                        let pows = m
                            .exponents()
                            .iter()
                            .enumerate()
                            .filter(|(_, &e)| e > 0)
                            .map(|(i, &e)| (i, e))
                            .collect();
                        Ok((rational_mod_p(c, p)?, pows))
                    })
                    .filter(|t| !matches!(t, Ok((0, _))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Compiled { p, nvars: sys.vars().len(), polys })
    }

    fn total(&self) -> u64 {
        self.p.pow(self.nvars as u32)
    }

    /// Assignment for a lexicographic index; the first variable is most significant.
    fn decode(&self, idx: u64, out: &mut [u64]) {
        let mut rest = idx;
        for slot in out.iter_mut().rev() {
            *slot = rest % self.p;
            rest /= self.p;
        }
    }

    fn is_root(&self, x: &[u64]) -> bool {
        let p = self.p;
        self.polys.iter().all(|f| {
            let mut acc = 0u64;
            for (c, pows) in f {
                let mut t = *c;
                for &(i, e) in pows {
                    t = mul_mod(t, if e == 1 { x[i] } else { pow_mod(x[i], e as u64, p) }, p);
                    if t == 0 {
                        break;
                    }
                }
                acc += t;
                if acc >= p {
                    acc -= p;
                }
            }
            acc == 0
        })
    }

    fn block_roots(&self, block: u64, limit: usize) -> Vec<Vec<u64>> {
        let start = block * BLOCK;
        let end = (start + BLOCK).min(self.total());
        let mut x = vec![0u64; self.nvars];
        let mut out = Vec::new();
        for idx in start..end {
            self.decode(idx, &mut x);
            if self.is_root(&x) {
                out.push(x.clone());
                if out.len() >= limit {
                    break;
                }
            }
        }
        out
    }

    fn blocks(&self) -> u64 {
        self.total().div_ceil(BLOCK)
    }
}

/// First root of `sys` over GF(p) in lexicographic assignment order, or an
/// exhaustive proof that none exists mod p.
pub fn solve_ff_exhaustive(sys: &PolySystem, p: u64) -> Result<SolveOutcome> {
    let compiled = Compiled::new(sys, p)?;
    let first = (0..compiled.blocks())
        .into_par_iter()
        .map(|b| compiled.block_roots(b, 1))
        .find_first(|roots| !roots.is_empty())
        .and_then(|mut r| r.pop());
    let ring = Ring::PrimeField(p);
    let effort = Effort { assignments_checked: Some(compiled.total()), ..Effort::default() };
    Ok(match first {
        Some(x) => {
            let witness: Vec<_> = x.iter().map(|&v| ring.from_int(v as i64)).collect();
            debug_assert!(sys.is_root(&witness).unwrap());
            SolveOutcome {
                status: SolveStatus::Witness,
                witness: Some(witness),
                prime: Some(p),
                basis: None,
                exhaustive: false,
                effort: Effort { assignments_checked: None, ..effort },
            }
        }
        None => SolveOutcome {
            status: SolveStatus::NoSolutionModP,
            witness: None,
            prime: Some(p),
            basis: None,
            exhaustive: true,
            effort,
        },
    })
}

/// Roots mod p in lexicographic order, truncated to `limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FfSolutions {
    pub prime: u64,
    pub roots: Vec<Vec<u64>>,
    /// False when `limit` cut the list short.
    pub complete: bool,
}

pub fn solve_ff_all(sys: &PolySystem, p: u64, limit: usize) -> Result<FfSolutions> {
    let compiled = Compiled::new(sys, p)?;
    let per_block: Vec<Vec<Vec<u64>>> =
        (0..compiled.blocks()).into_par_iter().map(|b| compiled.block_roots(b, limit + 1)).collect();
    let mut roots: Vec<Vec<u64>> = per_block.into_iter().flatten().collect();
    let complete = roots.len() <= limit;
    roots.truncate(limit);
    Ok(FfSolutions { prime: p, roots, complete })
}
