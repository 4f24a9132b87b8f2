use serde::Serialize;

use super::{
    buchberger, lift_witness, solve_ff_all, solve_ff_exhaustive, Caps, PolySystem, SolveOutcome,
    SolveOutcomeDocument, SolveStatus,
};
use crate::error::{Error, Result};
use crate::generate::{symbolic_system, unknown_names};
use crate::matrix::Matrix;
use crate::msc::{Msc, MscDocument};
use crate::ring::{Ring, RingElem};

/// Denominator bound for rational reconstruction of lifted witnesses.
pub const LIFT_DENOMINATOR_BOUND: u64 = 64;

/// Mod-p roots tried for lifting, per prime.
const MAX_LIFT_CANDIDATES: usize = 4096;

/// The strongest outcome for one 3-algebra plus every piece of evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certification {
    pub vars: Vec<String>,
    pub outcome: SolveOutcome,
    /// Binary algebra over ℚ built from a rational witness.
    pub binary: Option<Msc>,
    pub finite_field: Vec<SolveOutcome>,
    pub groebner: Option<SolveOutcome>,
    pub lift_denominator_bound: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct EvidenceDocument {
    pub solver: String,
    #[serde(flatten)]
    pub outcome: SolveOutcomeDocument,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificationDocument {
    #[serde(flatten)]
    pub outcome: SolveOutcomeDocument,
    pub binary: Option<MscDocument>,
    pub evidence: Vec<EvidenceDocument>,
    pub lift_denominator_bound: u64,
}

impl Certification {
    pub fn to_document(&self) -> CertificationDocument {
        let mut evidence: Vec<EvidenceDocument> = self
            .finite_field
            .iter()
            .map(|o| EvidenceDocument {
                solver: format!("gf({})", o.prime.unwrap_or(0)),
                outcome: o.to_document(&self.vars),
            })
            .collect();
        if let Some(g) = &self.groebner {
            evidence.push(EvidenceDocument { solver: "groebner".into(), outcome: g.to_document(&self.vars) });
        }
        CertificationDocument {
            outcome: self.outcome.to_document(&self.vars),
            binary: self.binary.as_ref().map(Msc::to_document),
            evidence,
            lift_denominator_bound: self.lift_denominator_bound,
        }
    }
}

fn binary_from_values(values: &[RingElem]) -> Result<Msc> {
    let ring = Ring::Rationals;
    let rows = values.chunks(4).map(<[RingElem]>::to_vec).collect();
    Msc::new(2, 2, Matrix::from_rows(&ring, rows)?)
}

fn rational_witness(sys: &PolySystem, p: u64) -> Result<Option<Vec<RingElem>>> {
    let roots = solve_ff_all(sys, p, MAX_LIFT_CANDIDATES)?;
    for root in &roots.roots {
        if let Some(values) = lift_witness(sys, p, root, LIFT_DENOMINATOR_BOUND) {
            return Ok(Some(values.into_iter().map(RingElem::Rational).collect()));
        }
    }
    Ok(None)
}

/// Decides whether the 2-dimensional 3-algebra `c` is generated by a binary
/// algebra: exhaustive search mod each prime (with a rational lift attempt
/// for every mod-p root), then an optional Gröbner run over ℚ.
pub fn certify_expressibility(c: &Msc, primes: &[u64], caps: Option<Caps>) -> Result<Certification> {
    if c.dim() != 2 || c.arity() != 3 {
        return Err(Error::Shape(format!("expected a 2-dimensional 3-algebra, got a {}-dimensional {}-algebra", c.dim(), c.arity())));
    }
    let sys = symbolic_system(c)?;
    let vars = unknown_names(2);
    let mut finite_field = Vec::new();
    let mut rational: Option<Vec<RingElem>> = None;
    for &p in primes {
        let out = solve_ff_exhaustive(&sys, p)?;
        let found = out.status == SolveStatus::Witness;
        finite_field.push(out);
        if found {
            if let Some(w) = rational_witness(&sys, p)? {
                rational = Some(w);
                break;
            }
        }
    }
    let groebner = match (&rational, caps) {
        (None, Some(caps)) => Some(buchberger(&sys, caps)?),
        _ => None,
    };
    if rational.is_none() {
        if let Some(g) = &groebner {
            if g.status == SolveStatus::Witness {
                rational = g.witness.clone();
            }
        }
    }
    let outcome = if let Some(w) = &rational {
        debug_assert!(sys.is_root(w)?);
        SolveOutcome {
            status: SolveStatus::Witness,
            witness: Some(w.clone()),
            prime: None,
            basis: None,
            exhaustive: false,
            effort: Default::default(),
        }
    } else if let Some(g) = groebner.as_ref().filter(|g| {
        matches!(g.status, SolveStatus::CertifiedEmptyOverClosure | SolveStatus::ConsistentOverClosure)
    }) {
        g.clone()
    } else if !finite_field.is_empty() && finite_field.iter().all(|o| o.status == SolveStatus::NoSolutionModP) {
        finite_field[0].clone()
    } else {
        SolveOutcome {
            status: SolveStatus::Inconclusive,
            witness: None,
            prime: None,
            basis: None,
            exhaustive: false,
            effort: Default::default(),
        }
    };
    let binary = rational.as_deref().map(binary_from_values).transpose()?;
    Ok(Certification { vars, outcome, binary, finite_field, groebner, lift_denominator_bound: LIFT_DENOMINATOR_BOUND })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate_nary;

    #[test]
    fn zero_algebra_is_generated_by_zero() {
        let c = Msc::zero(&Ring::Rationals, 2, 3).unwrap();
        let cert = certify_expressibility(&c, &[5], None).unwrap();
        assert_eq!(cert.outcome.status, SolveStatus::Witness);
        let m = cert.binary.unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn witness_generates_target() {
        // A4(1,1)'s 3-algebra
        let a = Msc::parse_rows(&Ring::Rationals, &[&["1", "0", "0", "0"], &["0", "1", "0", "0"]]).unwrap();
        let c = generate_nary(&a, 3).unwrap();
        let cert = certify_expressibility(&c, &[5, 7], None).unwrap();
        assert_eq!(cert.outcome.status, SolveStatus::Witness);
        assert_eq!(generate_nary(cert.binary.as_ref().unwrap(), 3).unwrap(), c);
    }

    #[test]
    fn rejects_wrong_shape() {
        let c = Msc::zero(&Ring::Rationals, 2, 2).unwrap();
        assert!(certify_expressibility(&c, &[5], None).is_err());
    }
}
