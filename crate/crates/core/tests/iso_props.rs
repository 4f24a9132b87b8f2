mod common;

use proptest::prelude::*;

use common::{random_gl, random_msc, rng};
use trialg::catalog::{catalog_entry, catalog_get};
use trialg::iso::{iso_search, iso_search_with, iso_verify, SearchMode};
use trialg::ring::q;
use trialg::{BasisChange, Ring};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn every_witness_verifies(seed in any::<u64>(), arity in 2usize..=3) {
        let ring = Ring::PrimeField(5);
        let mut r = rng(seed);
        let a = random_msc(&mut r, &ring, 2, arity);
        let g = random_gl(&mut r, &ring, 2);
        let b = a.transform(&g).unwrap();
        let search = iso_search(&a, &b, 5).unwrap();
        prop_assert!(search.exhaustive);
        prop_assert!(search.witnesses.iter().any(|w| w.g == g));
        for w in &search.witnesses {
            prop_assert!(iso_verify(&a, &b, &w.g).unwrap());
        }
    }

    #[test]
    fn search_is_symmetric_and_reflexive(seed in any::<u64>()) {
        let ring = Ring::PrimeField(5);
        let mut r = rng(seed);
        let a = random_msc(&mut r, &ring, 2, 2);
        let b = random_msc(&mut r, &ring, 2, 2);
        let ab = iso_search(&a, &b, 5).unwrap();
        let ba = iso_search(&b, &a, 5).unwrap();
        prop_assert_eq!(ab.witnesses.len(), ba.witnesses.len());
        for w in &ab.witnesses {
            let inv = BasisChange::new(w.g.inverse().clone()).unwrap();
            prop_assert!(ba.witnesses.iter().any(|v| v.g == inv));
        }
        let aa = iso_search(&a, &a, 5).unwrap();
        let id = BasisChange::identity(&ring, 2).unwrap();
        prop_assert!(aa.witnesses.iter().any(|w| w.g == id));
    }

    #[test]
    fn first_mode_returns_first_of_all(seed in any::<u64>()) {
        let ring = Ring::PrimeField(5);
        let mut r = rng(seed);
        let a = random_msc(&mut r, &ring, 2, 2);
        let b = a.transform(&random_gl(&mut r, &ring, 2)).unwrap();
        let all = iso_search(&a, &b, 5).unwrap();
        let first = iso_search_with(&a, &b, 5, SearchMode::First).unwrap();
        prop_assert_eq!(first.witnesses.len(), 1);
        prop_assert_eq!(&first.witnesses[0], &all.witnesses[0]);
    }
}

#[test]
fn alternate_sign_of_b1_is_isomorphic() {
    let a2 = catalog_entry("A2").unwrap();
    let a = a2.at(&[q(1, 1), q(1, 1), q(1, 1)]).unwrap();
    let b = a2.at(&[q(1, 1), q(-1, 1), q(1, 1)]).unwrap();
    let search = iso_search(&a, &b, 5).unwrap();
    assert_eq!(search.witnesses.len(), 1);
    assert_eq!(search.witnesses[0].g.matrix().to_string_rows(), vec![vec!["1", "0"], vec!["0", "4"]]);
}

#[test]
fn errors_and_warnings() {
    let a9 = catalog_get("A9", None).unwrap();
    assert!(iso_search(&a9, &a9, 3).is_err());
    assert!(iso_search(&a9, &a9, 4).is_err());
    let b4 = catalog_get("B4", None).unwrap();
    assert!(iso_search(&b4, &b4, 5).is_err());
    let zero = trialg::Msc::zero(&Ring::Rationals, 2, 2).unwrap();
    assert!(!iso_search(&zero, &zero, 2).unwrap().warnings.is_empty());
    let zero3 = trialg::Msc::zero(&Ring::Rationals, 2, 3).unwrap();
    assert!(iso_search(&zero, &zero3, 5).is_err());
}
