mod common;

use std::collections::HashMap;

use proptest::prelude::*;
use rand::Rng;

use common::{random_gl, random_msc, rat, rng};
use trialg::catalog::{catalog_entry, catalog_get};
use trialg::generate::generate_nary;
use trialg::identities::{
    binary_assoc_residual, first_binary_violation, is_associative, is_totally_associative, quintuple_oracle,
    total_assoc_residuals, AssocReport,
};
use trialg::{Matrix, Msc, Ring};

/// A GF(5) 3-algebra that is totally associative about a third of the time.
fn mixed_msc(seed: u64) -> Msc {
    let ring = Ring::PrimeField(5);
    let mut r = rng(seed);
    match r.gen_range(0..3) {
        0 => random_msc(&mut r, &ring, 2, 3),
        1 => {
            let assoc = ["A2(1/2,0,1/2)", "A4(1,0)", "A4(1/2,1/2)", "A4(1,1)", "A4(1/2,0)"];
            let pick = assoc[r.gen_range(0..assoc.len())];
            let (name, rest) = pick.split_once('(').unwrap();
            let point: Vec<_> = rest.trim_end_matches(')').split(',').map(rat).collect();
            let m = catalog_entry(name).unwrap().at(&point).unwrap().reduce_mod(5).unwrap();
            let g = random_gl(&mut r, &ring, 2);
            generate_nary(&m.transform(&g).unwrap(), 3).unwrap()
        }
        _ => {
            // a single nonzero entry
            let mut m = Matrix::zeros(&ring, 2, 8);
            m.set(r.gen_range(0..2), r.gen_range(0..8), ring.from_int(r.gen_range(1..5)));
            Msc::new(2, 3, m).unwrap()
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn residuals_agree_with_quintuple_oracle(seed in any::<u64>()) {
        let a = mixed_msc(seed);
        let oracle = quintuple_oracle(&a).unwrap();
        prop_assert_eq!(oracle.associative, is_totally_associative(&a).unwrap());
        prop_assert_eq!(oracle.violation.is_none(), oracle.associative);
    }

    #[test]
    fn residual_identity(seed in any::<u64>()) {
        let [ra, rb, rc] = total_assoc_residuals(&mixed_msc(seed)).unwrap();
        prop_assert!(ra.sub(&rb).unwrap().add(&rc).unwrap().is_zero());
    }

    #[test]
    fn total_associativity_is_basis_invariant(seed in any::<u64>()) {
        let a = mixed_msc(seed);
        let g = random_gl(&mut rng(seed ^ 0x5eed), &Ring::PrimeField(5), 2);
        prop_assert_eq!(is_totally_associative(&a).unwrap(), is_totally_associative(&a.transform(&g).unwrap()).unwrap());
    }

    #[test]
    fn binary_residual_agrees_with_basis_triples(seed in any::<u64>()) {
        let m = random_msc(&mut rng(seed), &Ring::PrimeField(5), 2, 2);
        prop_assert_eq!(is_associative(&m).unwrap(), first_binary_violation(&m).unwrap().is_none());
    }
}

#[test]
fn symbolic_and_numeric_residuals_agree_for_b4() {
    let b4 = catalog_get("B4", None).unwrap();
    let at: HashMap<_, _> = [("a1".to_string(), rat("1/2")), ("b2".to_string(), rat("1/2"))].into();
    let symbolic = total_assoc_residuals(&b4).unwrap();
    let numeric = total_assoc_residuals(&b4.substitute(&at).unwrap()).unwrap();
    for (s, n) in symbolic.iter().zip(&numeric) {
        assert_eq!(&s.try_map(&Ring::Rationals, |x| x.substitute(&at)).unwrap(), n);
    }
}

#[test]
fn example_and_zero_are_totally_associative() {
    assert!(is_totally_associative(&catalog_get("Ex52", None).unwrap()).unwrap());
    assert!(is_totally_associative(&Msc::zero(&Ring::Rationals, 2, 3).unwrap()).unwrap());
    assert!(!is_totally_associative(&catalog_get("Cstar", None).unwrap()).unwrap());
}

#[test]
fn report_names_violating_triple() {
    let a2 = catalog_entry("A2").unwrap().at(&[rat("0"), rat("0"), rat("0")]).unwrap();
    let report = AssocReport::new(&a2).unwrap();
    assert!(!report.verdict);
    assert_eq!(report.violating_tuple, Some(vec![2, 1, 1]));
    assert!(!binary_assoc_residual(&a2).unwrap().is_zero());
    assert!(AssocReport::new(&generate_nary(&a2, 4).unwrap()).is_err());
}

#[test]
fn mixed_generator_covers_both_verdicts() {
    let verdicts: Vec<bool> = (0..200).map(|s| is_totally_associative(&mixed_msc(s)).unwrap()).collect();
    let yes = verdicts.iter().filter(|v| **v).count();
    assert!(yes >= 30 && yes <= 170, "{yes} of 200 totally associative");
}
