//! One test per acceptance criterion; each prints a single PASS/FAIL line.

mod common;

use std::time::{Duration, Instant};

use rand::Rng;

use common::{all_gl2, random_gl, random_matrix, random_msc, rat, rng};
use trialg::catalog::{catalog_entry, catalog_get, sample_points, table1_rows, totassoc_scan, default_grid};
use trialg::generate::{expressibility_residual, generate_nary, symbolic_system};
use trialg::identities::{binary_assoc_residual, is_totally_associative, quintuple_oracle};
use trialg::iso::iso_search;
use trialg::polysolve::{buchberger, normal_form, s_polynomial, solve_ff_exhaustive, Caps, PolySystem, SolveStatus};
use trialg::{BasisChange, Msc, Ring};

fn verdict(n: u32, title: &str, limit: Duration, started: Instant, failures: Vec<String>, notes: &[String]) {
    let elapsed = started.elapsed();
    let mut failures = failures;
    if elapsed > limit {
        failures.push(format!("runtime {elapsed:.2?} exceeds {limit:?}"));
    }
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n} [{status}] {title} ({elapsed:.2?}, limit {limit:?})");
    for note in notes {
        println!("    note: {note}");
    }
    for f in &failures {
        println!("    failure: {f}");
    }
    assert!(failures.is_empty(), "criterion {n} failed: {failures:?}");
}

fn named(name: &str, point: &[&str]) -> Msc {
    let values: Vec<_> = point.iter().map(|v| rat(v)).collect();
    catalog_entry(name).unwrap().at(&values).unwrap()
}

#[test]
fn criterion_1_table_reproduction() {
    let started = Instant::now();
    let rows = table1_rows();
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for row in &rows {
        for m in &row.mismatches {
            notes.push(format!(
                "row {} γ^{}_{}{}{}: table {} vs computed {}",
                row.index, m.l, m.i, m.j, m.k, m.table, m.computed
            ));
        }
        match row.index {
            8 => {
                let flagged: Vec<_> = row.mismatches.iter().map(|m| ([m.l, m.i, m.j, m.k], m.table.as_str(), m.computed.as_str())).collect();
                if flagged != vec![([1, 2, 1, 1], "a1^2", "0")] {
                    failures.push(format!("row 8 should flag exactly γ^1_211 (a1^2 vs 0), flagged {}", flagged.len()));
                }
            }
            12 => {
                if !row.generated.is_zero() {
                    failures.push("A12 does not generate the zero 3-algebra".into());
                }
            }
            i if !row.mismatches.is_empty() => failures.push(format!("row {i} has {} mismatching entries", row.mismatches.len())),
            _ => {}
        }
    }
    verdict(1, "Table 1 reproduction", Duration::from_secs(1), started, failures, &notes);
}

#[test]
fn criterion_2_totally_associative_list() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let items: [(&str, &str, &[&str]); 9] = [
        ("i", "B2", &["0", "0", "0"]),
        ("ii", "B2", &["1/2", "0", "-1/2"]),
        ("iii", "B2", &["1/2", "0", "1/2"]),
        ("iv", "B4", &["1/2", "-1/2"]),
        ("v", "B4", &["1/2", "0"]),
        ("vi", "B4", &["1/2", "1/2"]),
        ("vii", "B4", &["1", "-1"]),
        ("vii", "B4", &["1", "1"]),
        ("viii", "B4", &["1", "0"]),
    ];
    for (label, family, point) in items {
        if !is_totally_associative(&named(family, point)).unwrap() {
            failures.push(format!("item ({label}) {family}{point:?} is not totally associative"));
        }
    }
    let expected: [(&str, Vec<Vec<&str>>); 2] = [
        ("B2", vec![vec!["0", "0", "0"], vec!["1/2", "0", "-1/2"], vec!["1/2", "0", "1/2"]]),
        (
            "B4",
            vec![
                vec!["0", "0"],
                vec!["1/2", "-1/2"],
                vec!["1/2", "0"],
                vec!["1/2", "1/2"],
                vec!["1", "-1"],
                vec!["1", "0"],
                vec!["1", "1"],
            ],
        ),
    ];
    for (family, points) in expected {
        let want: Vec<Vec<_>> = points.iter().map(|p| p.iter().map(|v| rat(v)).collect()).collect();
        let nparams = want[0].len();
        let got = totassoc_scan(family, &default_grid(nparams)).unwrap();
        if got != want {
            failures.push(format!("{family} scan returned {} points, expected {}", got.len(), want.len()));
        }
    }
    verdict(2, "totally associative list and scans", Duration::from_secs(1), started, failures, &[]);
}

#[test]
fn criterion_3_associative_binary_cross_check() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let associative: [(&str, &[&str]); 6] = [
        ("A2", &["1/2", "0", "1/2"]),
        ("A4", &["1", "0"]),
        ("A4", &["1/2", "1/2"]),
        ("A4", &["1", "1"]),
        ("A4", &["1/2", "0"]),
        ("A12", &[]),
    ];
    for (family, point) in associative {
        if !binary_assoc_residual(&named(family, point)).unwrap().is_zero() {
            failures.push(format!("{family}{point:?} has a nonzero associativity residual"));
        }
    }
    let generators: [(&str, &[&str]); 4] =
        [("A2", &["0", "0", "0"]), ("A2", &["1/2", "0", "-1/2"]), ("A4", &["1/2", "-1/2"]), ("A4", &["1", "-1"])];
    for (family, point) in generators {
        let m = named(family, point);
        if binary_assoc_residual(&m).unwrap().is_zero() {
            failures.push(format!("{family}{point:?} is associative"));
        }
        if !is_totally_associative(&generate_nary(&m, 3).unwrap()).unwrap() {
            failures.push(format!("{family}{point:?} generates a 3-algebra that is not totally associative"));
        }
    }
    verdict(3, "associative-binary cross-check", Duration::from_secs(1), started, failures, &[]);
}

#[test]
fn criterion_4_cstar_inexpressibility_evidence() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let sys = symbolic_system(&catalog_get("Cstar", None).unwrap()).unwrap();
    for p in [5u64, 7] {
        let out = solve_ff_exhaustive(&sys, p).unwrap();
        let expected = p.pow(8);
        if out.status != SolveStatus::NoSolutionModP || !out.exhaustive || out.effort.assignments_checked != Some(expected) {
            failures.push(format!("GF({p}): {:?} after {:?} assignments", out.status, out.effort.assignments_checked));
        }
    }
    let groebner = buchberger(&sys, Caps::default()).unwrap();
    let notes = vec![format!(
        "Gröbner run under default caps: {:?}, basis {:?}, {:?} pairs",
        groebner.status,
        groebner.basis.as_ref().map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>()),
        groebner.effort.pairs_considered
    )];
    if !matches!(groebner.status, SolveStatus::CertifiedEmptyOverClosure | SolveStatus::Inconclusive) {
        failures.push(format!("Gröbner run returned {:?}", groebner.status));
    }
    verdict(4, "C* has no solution over GF(5), GF(7)", Duration::from_secs(30), started, failures, &notes);
}

#[test]
fn criterion_5_collisions() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let cdagger = catalog_get("Cdagger", None).unwrap();
    let b4_11 = named("B4", &["1", "1"]);
    let a4_third = named("A4", &["1/3", "-1/3"]);
    let a5_third = named("A5", &["1/3"]);
    let a4_11 = named("A4", &["1", "1"]);
    let a4_1m1 = named("A4", &["1", "-1"]);
    for (label, m, c) in [
        ("A4(1/3,-1/3) -> C†", &a4_third, &cdagger),
        ("A5(1/3) -> C†", &a5_third, &cdagger),
        ("A4(1,1) -> B4(1,1)", &a4_11, &b4_11),
        ("A4(1,-1) -> B4(1,1)", &a4_1m1, &b4_11),
    ] {
        if !expressibility_residual(m, c).unwrap().is_zero() {
            failures.push(format!("{label}: residual is nonzero"));
        }
    }
    for p in [5u64, 7, 11] {
        for (label, a, b) in [("A4(1,1) vs A4(1,-1)", &a4_11, &a4_1m1), ("A4(1/3,-1/3) vs A5(1/3)", &a4_third, &a5_third)] {
            let n = iso_search(a, b, p).unwrap().witnesses.len();
            if n != 0 {
                failures.push(format!("{label} over GF({p}): {n} witnesses"));
            }
        }
    }
    verdict(5, "collision claims", Duration::from_secs(5), started, failures, &[]);
}

#[test]
fn criterion_6_cstar_not_isomorphic_to_generated() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let cstar = catalog_get("Cstar", None).unwrap();
    let mut checked = 0;
    for i in 1..=11 {
        let entry = catalog_entry(&format!("B{i}")).unwrap();
        for point in sample_points(entry) {
            let b = entry.at(&point).unwrap();
            for p in [5u64, 7] {
                checked += 1;
                let n = iso_search(&cstar, &b, p).unwrap().witnesses.len();
                if n != 0 {
                    failures.push(format!("C* ≅ B{i}{point:?} over GF({p}) ({n} witnesses)"));
                }
            }
        }
    }
    let notes = vec![format!("{checked} exhaustive GL(2, GF(p)) searches")];
    verdict(6, "C* is not isomorphic to any sampled B_i", Duration::from_secs(10), started, failures, &notes);
}

#[test]
fn criterion_7_property_suites() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let gf5 = Ring::PrimeField(5);

    let mut disagreements = 0;
    let mut associative = 0;
    for seed in 0..200 {
        let mut r = rng(seed);
        let a = if seed % 2 == 0 {
            random_msc(&mut r, &gf5, 2, 3)
        } else {
            generate_nary(&random_msc(&mut r, &gf5, 2, 2), 3).unwrap()
        };
        let ta = is_totally_associative(&a).unwrap();
        associative += ta as usize;
        if quintuple_oracle(&a).unwrap().associative != ta {
            disagreements += 1;
        }
    }
    if disagreements > 0 {
        failures.push(format!("oracle disagrees with the residuals on {disagreements} of 200"));
    }

    let mut equivariance = 0;
    for seed in 0..100 {
        let mut r = rng(1000 + seed);
        let ring = if seed % 2 == 0 { Ring::Rationals } else { gf5.clone() };
        let m = random_msc(&mut r, &ring, 2, 2);
        let g = random_gl(&mut r, &ring, 2);
        if generate_nary(&m.transform(&g).unwrap(), 3).unwrap() != generate_nary(&m, 3).unwrap().transform(&g).unwrap() {
            equivariance += 1;
        }
    }
    if equivariance > 0 {
        failures.push(format!("generation equivariance fails on {equivariance} of 100"));
    }

    let mut kron = 0;
    for seed in 0..100 {
        let mut r = rng(2000 + seed);
        let ring = if seed % 2 == 0 { Ring::Rationals } else { Ring::PrimeField(7) };
        let d: Vec<usize> = (0..6).map(|_| r.gen_range(1..=3)).collect();
        let a = random_matrix(&mut r, &ring, d[0], d[1]);
        let b = random_matrix(&mut r, &ring, d[2], d[3]);
        let c = random_matrix(&mut r, &ring, d[1], d[4]);
        let e = random_matrix(&mut r, &ring, d[3], d[5]);
        let lhs = a.kron(&b).unwrap().mul(&c.kron(&e).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&e).unwrap()).unwrap();
        if lhs != rhs {
            kron += 1;
        }
    }
    if kron > 0 {
        failures.push(format!("Kronecker mixed product fails on {kron} of 100"));
    }

    let gf3 = Ring::PrimeField(3);
    let group = all_gl2(3);
    let id = BasisChange::identity(&gf3, 2).unwrap();
    let mut action = 0;
    let mut r = rng(3);
    for arity in [2, 3] {
        let a = random_msc(&mut r, &gf3, 2, arity);
        if a.transform(&id).unwrap() != a {
            action += 1;
        }
        let moved: Vec<_> = group.iter().map(|g| a.transform(g).unwrap()).collect();
        for (gi, g) in group.iter().enumerate() {
            for h in &group {
                if moved[gi].transform(h).unwrap() != a.transform(&h.compose(g).unwrap()).unwrap() {
                    action += 1;
                }
            }
        }
    }
    if group.len() != 48 || action > 0 {
        failures.push(format!("group action laws: |GL(2,3)| = {}, {action} violations", group.len()));
    }
    let notes = vec![format!("{associative} of 200 oracle samples are totally associative")];
    verdict(7, "property suites", Duration::from_secs(10), started, failures, &notes);
}

#[test]
fn criterion_8_groebner_soundness() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let fixtures: [(&[&str], &[&str]); 6] = [
        (&["x"], &["x - 2"]),
        (&["x"], &["x", "x + 1"]),
        (&["x", "y"], &["x^2 - 1", "x*y - 1"]),
        (&["x", "y", "z"], &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]),
        (&["x", "y"], &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]),
        (&["x", "y"], &["x*y", "x^2 - y^2"]),
    ];
    for (vars, polys) in fixtures {
        let sys = PolySystem::parse(vars, polys).unwrap();
        let out = buchberger(&sys, Caps::default()).unwrap();
        let Some(basis) = out.basis.as_ref() else {
            failures.push(format!("{polys:?}: no basis ({:?})", out.status));
            continue;
        };
        for (i, f) in basis.iter().enumerate() {
            for g in &basis[i + 1..] {
                if !normal_form(&s_polynomial(f, g), basis).is_zero() {
                    failures.push(format!("{polys:?}: S({f}, {g}) does not reduce to zero"));
                }
            }
        }
    }
    let strings = |vars: &[&str], polys: &[&str]| -> (SolveStatus, Vec<String>) {
        let out = buchberger(&PolySystem::parse(vars, polys).unwrap(), Caps::default()).unwrap();
        (out.status, out.basis.unwrap_or_default().iter().map(ToString::to_string).collect())
    };
    let (status, basis) = strings(&["x"], &["x", "x + 1"]);
    if status != SolveStatus::CertifiedEmptyOverClosure || basis != ["1"] {
        failures.push(format!("{{x, x+1}} gave {status:?} {basis:?}"));
    }
    let (_, basis) = strings(&["x", "y"], &["x^2 - 1", "x*y - 1"]);
    if basis != ["x - y", "y^2 - 1"] {
        failures.push(format!("{{x^2-1, xy-1}} gave {basis:?}"));
    }
    verdict(8, "Gröbner engine soundness", Duration::from_secs(1), started, failures, &[]);
}
