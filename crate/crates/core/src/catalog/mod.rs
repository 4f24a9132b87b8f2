//! Embedded families of binary algebras and the 3-algebras they generate,
//! plus the drivers that replay the published computations on them.

mod claims;
mod data;
mod report;
mod verify;

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use once_cell::sync::Lazy;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::msc::{Msc, MscDocument};
use crate::ring::{Ring, RingElem};

pub use claims::{claim_records, claims_verify, ClaimKind, ClaimPayload, ClaimRecord};
pub use report::{ClaimResult, ClaimStatus, Report, ReportDocument, Summary};
pub use verify::{
    default_grid, paper_replay, table1_rows, table1_verify, totassoc_scan, Table1Mismatch, Table1Row,
};

/// A named, possibly parameterized algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyEntry {
    pub name: String,
    pub params: Vec<String>,
    /// Over `Q[params]`, or over ℚ when there are no parameters.
    pub template: Msc,
    pub source: String,
}

impl FamilyEntry {
    /// The specialized algebra; `assignment` must cover every parameter and
    /// name no others.
    pub fn specialize(&self, assignment: &HashMap<String, BigRational>) -> Result<Msc> {
        if let Some(extra) = assignment.keys().filter(|k| !self.params.contains(k)).min() {
            return Err(Error::UnknownVariable(format!("{extra} (parameters of {}: {})", self.name, self.params.join(", "))));
        }
        if let Some(missing) = self.params.iter().find(|p| !assignment.contains_key(*p)) {
            return Err(Error::MissingVariable(missing.clone()));
        }
        self.template.substitute(assignment)
    }

    /// Specializes at values given in parameter order.
    pub fn at(&self, values: &[BigRational]) -> Result<Msc> {
        if values.len() != self.params.len() {
            return Err(Error::Shape(format!(
                "{} takes {} parameters, got {}",
                self.name,
                self.params.len(),
                values.len()
            )));
        }
        self.specialize(&self.params.iter().cloned().zip(values.iter().cloned()).collect())
    }
}

fn parse_rational(text: &str) -> Result<BigRational> {
    match Ring::Rationals.parse(text)? {
        RingElem::Rational(q) => Ok(q),
        _ => unreachable!(),
    }
}

pub(crate) fn parse_point(values: &[&str]) -> Vec<BigRational> {
    values.iter().map(|v| parse_rational(v).expect("embedded scalar")).collect()
}

fn build_entry(raw: &data::RawFamily) -> Result<FamilyEntry> {
    let ring = if raw.params.is_empty() { Ring::Rationals } else { Ring::polynomial(raw.params)? };
    let template = Msc::parse_rows(&ring, &raw.rows)?;
    Ok(FamilyEntry {
        name: raw.name.to_string(),
        params: raw.params.iter().map(|p| p.to_string()).collect(),
        template,
        source: raw.source.to_string(),
    })
}

static CATALOG: Lazy<Vec<FamilyEntry>> =
    Lazy::new(|| data::FAMILIES.iter().map(|f| build_entry(f).expect("embedded catalog data")).collect());

/// Every entry, in catalog order: A1–A12, B1–B11, Cstar, Cdagger, Ex52.
pub fn catalog() -> &'static [FamilyEntry] {
    &CATALOG
}

pub fn catalog_entry(name: &str) -> Result<&'static FamilyEntry> {
    CATALOG.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

/// The symbolic template, or the rational algebra at `assignment`.
pub fn catalog_get(name: &str, assignment: Option<&HashMap<String, BigRational>>) -> Result<Msc> {
    let entry = catalog_entry(name)?;
    match assignment {
        None => Ok(entry.template.clone()),
        Some(a) => entry.specialize(a),
    }
}

/// Parses `name=value,name=value` with values in the scalar grammar.
pub fn parse_assignment(text: &str) -> Result<HashMap<String, BigRational>> {
    let mut out = HashMap::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("expected name=value, got `{part}`") })?;
        let name = name.trim();
        if name.is_empty() {
            return Err(Error::Parse { pos: 0, msg: format!("missing parameter name in `{part}`") });
        }
        if out.insert(name.to_string(), parse_rational(value.trim())?).is_some() {
            return Err(Error::Parse { pos: 0, msg: format!("parameter `{name}` given twice") });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntryDocument {
    pub params: Vec<String>,
    pub source: String,
    pub msc: MscDocument,
}

/// Every entry as an msc document, keyed by name.
pub fn catalog_bundle() -> BTreeMap<String, CatalogEntryDocument> {
    CATALOG
        .iter()
        .map(|e| {
            (
                e.name.clone(),
                CatalogEntryDocument { params: e.params.clone(), source: e.source.clone(), msc: e.template.to_document() },
            )
        })
        .collect()
}

/// Three sample points per family, rotating fixed values through the
/// global parameter order so different parameters get different values.
pub fn sample_points(entry: &FamilyEntry) -> Vec<Vec<BigRational>> {
    if entry.params.is_empty() {
        return vec![Vec::new()];
    }
    let values = parse_point(&data::SAMPLE_VALUES);
    (0..3)
        .map(|s| {
            entry
                .params
                .iter()
                .map(|p| {
                    let j = data::PARAMETER_ORDER.iter().position(|q| q == p).expect("known parameter");
                    values[(s + j) % values.len()].clone()
                })
                .collect()
        })
        .collect()
}
