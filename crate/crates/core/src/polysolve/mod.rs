//! Solvability of polynomial systems: exhaustive enumeration over GF(p),
//! a bounded Buchberger engine over ℚ, and the expressibility pipeline that
//! combines them.

mod certify;
mod finite_field;
mod groebner;
mod lift;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Polynomial, Ring, RingElem};

pub use certify::{certify_expressibility, Certification, LIFT_DENOMINATOR_BOUND};
pub use finite_field::{solve_ff_all, solve_ff_exhaustive, FfSolutions, MAX_FF_VARS};
pub use groebner::{buchberger, normal_form, s_polynomial, Caps};
pub use lift::lift_witness;

/// A finite list of polynomials over a common ordered variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    vars: Vec<String>,
    ring: Ring,
    polys: Vec<Polynomial>,
}

impl PolySystem {
    /// Re-expresses every polynomial over `vars` and drops zeros.
    pub fn new(vars: Vec<String>, polys: Vec<Polynomial>) -> Result<PolySystem> {
        let ring = Ring::polynomial(&vars)?;
        let Ring::Polynomial(shared) = &ring else { unreachable!() };
        let polys = polys
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.rename_into(shared.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolySystem { vars, ring, polys })
    }

    /// Parses polynomial strings over `vars`.
    pub fn parse<S: AsRef<str>>(vars: &[S], polys: &[&str]) -> Result<PolySystem> {
        let ring = Ring::polynomial(vars)?;
        let parsed = polys
            .iter()
            .map(|s| match ring.parse(s)? {
                RingElem::Poly(p) => Ok(p),
                _ => unreachable!(),
            })
            .collect::<Result<Vec<_>>>()?;
        PolySystem::new(vars.iter().map(|v| v.as_ref().to_string()).collect(), parsed)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub(crate) fn shared_vars(&self) -> Arc<[String]> {
        match &self.ring {
            Ring::Polynomial(v) => v.clone(),
            _ => unreachable!(),
        }
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    /// Evaluates every polynomial at `values` in the values' ring, independently
    /// of any solver's internal representation.
    pub fn evaluate(&self, values: &[RingElem]) -> Result<Vec<RingElem>> {
        if values.len() != self.vars.len() {
            return Err(Error::Shape(format!("{} values for {} variables", values.len(), self.vars.len())));
        }
        let ring = values.first().map(RingElem::ring).unwrap_or(Ring::Rationals);
        self.polys
            .iter()
            .map(|p| {
                let mut acc = ring.zero();
                for (m, c) in p.terms() {
                    let mut t = ring.from_rational(c)?;
                    for (i, &e) in m.exponents().iter().enumerate() {
                        if e > 0 {
                            t = &t * &values[i].pow(e);
                        }
                    }
                    acc = &acc + &t;
                }
                Ok(acc)
            })
            .collect()
    }

    /// True when every polynomial vanishes at `values`.
    pub fn is_root(&self, values: &[RingElem]) -> Result<bool> {
        Ok(self.evaluate(values)?.iter().all(RingElem::is_zero))
    }

    pub fn to_document(&self) -> PolySystemDocument {
        PolySystemDocument { vars: self.vars.clone(), polys: self.polys.iter().map(ToString::to_string).collect() }
    }

    pub fn from_document(doc: &PolySystemDocument) -> Result<PolySystem> {
        let polys: Vec<&str> = doc.polys.iter().map(String::as_str).collect();
        PolySystem::parse(&doc.vars, &polys)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolySystemDocument {
    pub vars: Vec<String>,
    pub polys: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Witness,
    NoSolutionModP,
    CertifiedEmptyOverClosure,
    /// The reduced Gröbner basis is complete and differs from {1}: common
    /// zeros exist over the algebraic closure, none was extracted.
    ConsistentOverClosure,
    Inconclusive,
}

/// Work counters; only the fields relevant to the solver that ran are set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Effort {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignments_checked: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs_considered: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs_reduced_to_zero: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree_reached: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap_hit: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// Values in variable order; residues for finite-field runs, rationals otherwise.
    pub witness: Option<Vec<RingElem>>,
    pub prime: Option<u64>,
    pub basis: Option<Vec<Polynomial>>,
    pub exhaustive: bool,
    pub effort: Effort,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveOutcomeDocument {
    pub status: SolveStatus,
    pub witness: Option<BTreeMap<String, String>>,
    pub prime: Option<u64>,
    pub basis: Option<Vec<String>>,
    pub exhaustive: bool,
    pub effort: Effort,
}

impl SolveOutcome {
    pub fn to_document(&self, vars: &[String]) -> SolveOutcomeDocument {
        SolveOutcomeDocument {
            status: self.status,
            witness: self
                .witness
                .as_ref()
                .map(|w| vars.iter().cloned().zip(w.iter().map(ToString::to_string)).collect()),
            prime: self.prime,
            basis: self.basis.as_ref().map(|b| b.iter().map(ToString::to_string).collect()),
            exhaustive: self.exhaustive,
            effort: self.effort.clone(),
        }
    }
}
