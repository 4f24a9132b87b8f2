//! Claim records about the catalog and their replay.

use std::collections::BTreeSet;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::report::{ClaimResult, ClaimStatus, Report};
use super::{catalog_entry, data, default_grid, parse_point, sample_points, totassoc_scan};
use crate::error::Result;
use crate::generate::{expressibility_residual, generate_nary};
use crate::identities::{binary_assoc_residual, is_totally_associative};
use crate::iso::{iso_search_with, iso_verify, SearchMode};
use crate::matrix::Matrix;
use crate::msc::{BasisChange, Msc};
use crate::polysolve::{certify_expressibility, Caps, SolveStatus};
use crate::ring::{rational_to_string, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    TableRow,
    Inexpressible,
    Collision,
    NonIso,
    IsomorphicForm,
    TotAssocScan,
    TotAssocList,
    AssocBinaryList,
    NonassocGenerators,
}

/// A labelled algebra, e.g. `A4(1/3,-1/3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedMsc {
    pub label: String,
    pub msc: Msc,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimPayload {
    /// No binary algebra generates `target`.
    Inexpressible { target: NamedMsc, primes: Vec<u64> },
    /// `source` is isomorphic to none of `targets`.
    NonIso { source: NamedMsc, targets: Vec<NamedMsc>, primes: Vec<u64> },
    /// Pairwise non-isomorphic generators of one 3-algebra.
    Collision { generators: Vec<NamedMsc>, target: NamedMsc, primes: Vec<u64> },
    /// Each pair is related by `diag(1, −1)`.
    IsomorphicForm { pairs: Vec<(NamedMsc, NamedMsc)>, primes: Vec<u64> },
    /// The totally associative points of `family` on the default grid.
    TotAssocScan { family: String, expected: Vec<Vec<BigRational>> },
    /// Each subject is totally associative and equals `display`.
    TotAssocList { subjects: Vec<NamedMsc>, display: Option<Msc>, errata: Vec<[usize; 4]> },
    /// `subject` is associative and equals `display`.
    AssocBinaryList { subject: NamedMsc, display: Msc },
    /// `generator` is not associative and generates the totally associative `expected`.
    NonassocGenerator { generator: NamedMsc, expected: NamedMsc },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimRecord {
    pub id: String,
    pub kind: ClaimKind,
    pub payload: ClaimPayload,
}

impl ClaimRecord {
    /// Every matrix the payload mentions.
    pub fn matrices(&self) -> Vec<&Msc> {
        match &self.payload {
            ClaimPayload::Inexpressible { target, .. } => vec![&target.msc],
            ClaimPayload::NonIso { source, targets, .. } => {
                std::iter::once(&source.msc).chain(targets.iter().map(|t| &t.msc)).collect()
            }
            ClaimPayload::Collision { generators, target, .. } => {
                generators.iter().map(|g| &g.msc).chain(std::iter::once(&target.msc)).collect()
            }
            ClaimPayload::IsomorphicForm { pairs, .. } => pairs.iter().flat_map(|(a, b)| [&a.msc, &b.msc]).collect(),
            ClaimPayload::TotAssocScan { family, .. } => {
                vec![&catalog_entry(family).expect("scanned family").template]
            }
            ClaimPayload::TotAssocList { subjects, display, .. } => {
                subjects.iter().map(|s| &s.msc).chain(display.iter()).collect()
            }
            ClaimPayload::AssocBinaryList { subject, display } => vec![&subject.msc, display],
            ClaimPayload::NonassocGenerator { generator, expected } => vec![&generator.msc, &expected.msc],
        }
    }
}

fn label(name: &str, point: &[BigRational]) -> String {
    if point.is_empty() {
        name.to_string()
    } else {
        format!("{name}({})", point.iter().map(rational_to_string).collect::<Vec<_>>().join(","))
    }
}

fn named(name: &str, point: &[BigRational]) -> NamedMsc {
    let msc = catalog_entry(name).and_then(|e| e.at(point)).expect("embedded specialization");
    NamedMsc { label: label(name, point), msc }
}

fn named_str(name: &str, point: &[&str]) -> NamedMsc {
    named(name, &parse_point(point))
}

fn display(rows: &[&[&str]; 2]) -> Msc {
    Msc::parse_rows(&Ring::Rationals, rows).expect("embedded display")
}

/// Every claim record, in id order.
pub fn claim_records() -> Vec<ClaimRecord> {
    let mut out = Vec::new();
    let cstar = named("Cstar", &[]);

    out.push(ClaimRecord {
        id: "inexpressible.Cstar".into(),
        kind: ClaimKind::Inexpressible,
        payload: ClaimPayload::Inexpressible { target: cstar.clone(), primes: vec![5, 7] },
    });

    for i in 1..=11 {
        let b = catalog_entry(&format!("B{i}")).expect("table family");
        let mut targets = Vec::new();
        for pt in sample_points(b) {
            targets.push(named(&b.name, &pt));
            let a = named(&format!("A{i}"), &pt);
            let generated = generate_nary(&a.msc, 3).expect("binary specialization");
            targets.push(NamedMsc { label: format!("T({})", a.label), msc: generated });
        }
        out.push(ClaimRecord {
            id: format!("non_iso.Cstar.B{i:02}"),
            kind: ClaimKind::NonIso,
            payload: ClaimPayload::NonIso { source: cstar.clone(), targets, primes: vec![5, 7] },
        });
    }

    out.push(ClaimRecord {
        id: "collision.Cdagger".into(),
        kind: ClaimKind::Collision,
        payload: ClaimPayload::Collision {
            generators: vec![named_str("A4", &["1/3", "-1/3"]), named_str("A5", &["1/3"])],
            target: named("Cdagger", &[]),
            primes: vec![5, 7, 11],
        },
    });
    out.push(ClaimRecord {
        id: "collision.B4(1,1)".into(),
        kind: ClaimKind::Collision,
        payload: ClaimPayload::Collision {
            generators: vec![named_str("A4", &["1", "1"]), named_str("A4", &["1", "-1"])],
            target: named_str("B4", &["1", "1"]),
            primes: vec![5, 7, 11],
        },
    });

    for (family, samples) in data::ALTERNATE_FORM_SAMPLES {
        let b1 = catalog_entry(family).expect("family").params.iter().position(|p| p == "b1").expect("b1 parameter");
        let pairs = samples
            .iter()
            .map(|s| {
                let pt = parse_point(s);
                let mut flipped = pt.clone();
                flipped[b1] = -flipped[b1].clone();
                (named(family, &pt), named(family, &flipped))
            })
            .collect();
        out.push(ClaimRecord {
            id: format!("isomorphic_form.{family}"),
            kind: ClaimKind::IsomorphicForm,
            payload: ClaimPayload::IsomorphicForm { pairs, primes: vec![5, 7] },
        });
    }

    for (family, points) in data::TOTASSOC_POINTS {
        out.push(ClaimRecord {
            id: format!("tot_assoc_scan.{family}"),
            kind: ClaimKind::TotAssocScan,
            payload: ClaimPayload::TotAssocScan {
                family: family.to_string(),
                expected: points.iter().map(|p| parse_point(p)).collect(),
            },
        });
    }

    let mut items: Vec<(&str, Vec<NamedMsc>, Option<Msc>)> = Vec::new();
    for d in data::TOTALLY_ASSOCIATIVE {
        let subject = named_str(d.family, d.point);
        match d.label.strip_suffix('\'') {
            Some(base) => items.iter_mut().find(|(l, ..)| *l == base).expect("primary item").1.push(subject),
            None => items.push((d.label, vec![subject], Some(display(&d.rows)))),
        }
    }
    items.push(("example", vec![named("Ex52", &[])], None));
    for (l, subjects, disp) in items {
        let errata = data::DISPLAY_ERRATA.iter().filter(|(e, _)| *e == l).map(|(_, p)| *p).collect();
        out.push(ClaimRecord {
            id: format!("tot_assoc_list.{l}"),
            kind: ClaimKind::TotAssocList,
            payload: ClaimPayload::TotAssocList { subjects, display: disp, errata },
        });
    }

    for d in data::ASSOCIATIVE_BINARY {
        out.push(ClaimRecord {
            id: format!("assoc_binary_list.{}", d.label),
            kind: ClaimKind::AssocBinaryList,
            payload: ClaimPayload::AssocBinaryList { subject: named_str(d.family, d.point), display: display(&d.rows) },
        });
    }

    for (n, (family, point, target)) in data::NONASSOC_GENERATORS.iter().enumerate() {
        out.push(ClaimRecord {
            id: format!("nonassoc_generators.{}", n + 1),
            kind: ClaimKind::NonassocGenerators,
            payload: ClaimPayload::NonassocGenerator {
                generator: named_str(family, point),
                expected: named_str(target, point),
            },
        });
    }

    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

fn point_json(pt: &[BigRational]) -> Vec<String> {
    pt.iter().map(rational_to_string).collect()
}

/// Positions (l, i, j, k), 1-based, where two 3-algebras differ.
fn differences(a: &Msc, b: &Msc) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for l in 0..a.dim() {
        for col in 0..a.matrix().cols() {
            if a.get(l, col) != b.get(l, col) {
                let t = a.column_tuple(col);
                out.push([l + 1, t[0] + 1, t[1] + 1, t[2] + 1]);
            }
        }
    }
    out
}

fn witness_count(a: &Msc, b: &Msc, p: u64) -> Result<usize> {
    Ok(iso_search_with(a, b, p, SearchMode::First)?.witnesses.len())
}

fn evaluate(record: &ClaimRecord) -> Result<(ClaimStatus, Value)> {
    use ClaimStatus::*;
    Ok(match &record.payload {
        ClaimPayload::Inexpressible { target, primes } => {
            let cert = certify_expressibility(&target.msc, primes, Some(Caps::default()))?;
            let status = match cert.outcome.status {
                SolveStatus::CertifiedEmptyOverClosure => Pass,
                SolveStatus::Witness | SolveStatus::ConsistentOverClosure => Fail,
                SolveStatus::NoSolutionModP | SolveStatus::Inconclusive => Inconclusive,
            };
            (status, json!({ "target": target.label, "certification": cert.to_document() }))
        }
        ClaimPayload::NonIso { source, targets, primes } => {
            let mut rows = Vec::new();
            let mut total = 0;
            for t in targets {
                let mut counts = serde_json::Map::new();
                for &p in primes {
                    let n = witness_count(&source.msc, &t.msc, p)?;
                    total += n;
                    counts.insert(p.to_string(), json!(n));
                }
                rows.push(json!({ "target": t.label, "witnesses": counts }));
            }
            (if total == 0 { Pass } else { Fail }, json!({ "source": source.label, "searches": rows }))
        }
        ClaimPayload::Collision { generators, target, primes } => {
            let mut residual_zero = Vec::new();
            let mut all_zero = true;
            for g in generators {
                let zero = expressibility_residual(&g.msc, &target.msc)?.is_zero();
                all_zero &= zero;
                residual_zero.push(json!({ "generator": g.label, "residual_zero": zero }));
            }
            let mut searches = Vec::new();
            let mut isomorphic = false;
            for (x, a) in generators.iter().enumerate() {
                for b in &generators[x + 1..] {
                    for &p in primes {
                        let n = witness_count(&a.msc, &b.msc, p)?;
                        isomorphic |= n > 0;
                        searches.push(json!({ "pair": [a.label, b.label], "prime": p, "witnesses": n }));
                    }
                }
            }
            let status = if all_zero && !isomorphic { Pass } else { Fail };
            (status, json!({ "target": target.label, "generators": residual_zero, "iso_searches": searches }))
        }
        ClaimPayload::IsomorphicForm { pairs, primes } => {
            let g = BasisChange::new(Matrix::from_rows(
                &Ring::Rationals,
                vec![
                    vec![Ring::Rationals.one(), Ring::Rationals.zero()],
                    vec![Ring::Rationals.zero(), Ring::Rationals.from_int(-1)],
                ],
            )?)?;
            let mut rows = Vec::new();
            let mut all = true;
            for (a, b) in pairs {
                let exact = iso_verify(&a.msc, &b.msc, &g)?;
                all &= exact;
                let mut counts = serde_json::Map::new();
                for &p in primes {
                    counts.insert(p.to_string(), json!(witness_count(&a.msc, &b.msc, p)?));
                }
                rows.push(json!({ "pair": [a.label, b.label], "diag_1_minus1": exact, "first_witness_found": counts }));
            }
            (if all { Pass } else { Fail }, json!({ "pairs": rows }))
        }
        ClaimPayload::TotAssocScan { family, expected } => {
            let entry = catalog_entry(family)?;
            let found = totassoc_scan(family, &default_grid(entry.params.len()))?;
            let status = if &found == expected { Pass } else { Fail };
            (
                status,
                json!({
                    "family": family,
                    "params": entry.params,
                    "found": found.iter().map(|p| point_json(p)).collect::<Vec<_>>(),
                    "expected": expected.iter().map(|p| point_json(p)).collect::<Vec<_>>(),
                }),
            )
        }
        ClaimPayload::TotAssocList { subjects, display, errata } => {
            let mut flags = Vec::new();
            let mut all = true;
            for s in subjects {
                let ta = is_totally_associative(&s.msc)?;
                all &= ta;
                flags.push(json!({ "subject": s.label, "totally_associative": ta }));
            }
            let mut evidence = json!({ "subjects": flags });
            let mut status = if all { Pass } else { Fail };
            if let Some(d) = display {
                let diffs = differences(&subjects[0].msc, d);
                let display_ta = is_totally_associative(d)?;
                if status == Pass && !diffs.is_empty() {
                    let found: BTreeSet<_> = diffs.iter().copied().collect();
                    let registered: BTreeSet<_> = errata.iter().copied().collect();
                    status = if found == registered { Erratum } else { Fail };
                }
                evidence["display_matches"] = json!(diffs.is_empty());
                evidence["display_differences"] = json!(diffs);
                evidence["display_totally_associative"] = json!(display_ta);
                evidence["registered_errata"] = json!(errata);
            }
            (status, evidence)
        }
        ClaimPayload::AssocBinaryList { subject, display } => {
            let residual_zero = binary_assoc_residual(&subject.msc)?.is_zero();
            let matches = subject.msc == *display;
            let status = if residual_zero && matches { Pass } else { Fail };
            (status, json!({ "subject": subject.label, "residual_zero": residual_zero, "display_matches": matches }))
        }
        ClaimPayload::NonassocGenerator { generator, expected } => {
            let residual_zero = binary_assoc_residual(&generator.msc)?.is_zero();
            let generated = generate_nary(&generator.msc, 3)?;
            let ta = is_totally_associative(&generated)?;
            let matches = generated == expected.msc;
            let status = if !residual_zero && ta && matches { Pass } else { Fail };
            (
                status,
                json!({
                    "generator": generator.label,
                    "expected": expected.label,
                    "generator_associative": residual_zero,
                    "generated_totally_associative": ta,
                    "generated_matches_expected": matches,
                }),
            )
        }
    })
}

/// Replays every claim record concurrently; results are ordered by id.
pub fn claims_verify() -> Report {
    let results = claim_records()
        .par_iter()
        .map(|r| {
            let (status, evidence) = evaluate(r).unwrap_or_else(|e| (ClaimStatus::Fail, json!({ "error": e.to_string() })));
            ClaimResult { id: r.id.clone(), kind: r.kind, status, evidence }
        })
        .collect();
    Report::new(results)
}
