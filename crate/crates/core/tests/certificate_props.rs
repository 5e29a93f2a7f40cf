mod common;

use bicyc::certificate::{canonicalize, verify_certificate, CertificateError};
use bicyc::oracle::{find_cycle_exact, Constraints, SearchBudget};
use bicyc::params::{BicirculantParams, Vertex};
use common::{arb, check_cycle};
use proptest::prelude::*;

fn some_cycle(p: &BicirculantParams) -> Option<Vec<Vertex>> {
    find_cycle_exact(
        p,
        &Constraints::default(),
        SearchBudget::with_nodes(2_000_000),
    )
    .ok()
    .flatten()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn oracle_cycles_pass_both_checkers(p in arb::params(14, 2, 3)) {
        if let Some(c) = some_cycle(&p) {
            let cert = verify_certificate(&p, &c).unwrap();
            let counts = check_cycle(&p, &c).unwrap();
            prop_assert_eq!(counts.outer, cert.counts().outer);
            prop_assert_eq!(counts.inner, cert.counts().inner);
            prop_assert_eq!(counts.spoke, cert.counts().spoke);
            prop_assert_eq!(counts.outer, counts.inner);
        }
    }

    #[test]
    fn canonical_form_ignores_rotation_and_direction(p in arb::params(14, 2, 3), k in 0usize..64, rev in any::<bool>()) {
        if let Some(c) = some_cycle(&p) {
            let mut d = c.clone();
            d.rotate_left(k % c.len());
            if rev {
                d.reverse();
            }
            prop_assert_eq!(canonicalize(&c), canonicalize(&d));
            prop_assert_eq!(verify_certificate(&p, &c).unwrap(), verify_certificate(&p, &d).unwrap());
        }
    }

    #[test]
    fn transpositions_agree_with_reference(p in arb::params(12, 2, 3), i in 0usize..64, j in 0usize..64) {
        if let Some(mut c) = some_cycle(&p) {
            let n = c.len();
            c.swap(i % n, j % n);
            prop_assert_eq!(verify_certificate(&p, &c).is_ok(), check_cycle(&p, &c).is_ok());
        }
    }

    #[test]
    fn dropped_or_repeated_vertices_are_rejected(p in arb::params(12, 2, 3), i in 0usize..64) {
        if let Some(c) = some_cycle(&p) {
            let n = c.len();
            let mut short = c.clone();
            short.remove(i % n);
            let short_err = matches!(verify_certificate(&p, &short), Err(CertificateError::WrongLength { .. }));
            prop_assert!(short_err);
            let mut dup = c.clone();
            dup[i % n] = dup[(i + 1) % n];
            let dup_err = matches!(verify_certificate(&p, &dup), Err(CertificateError::RepeatedVertex(_)));
            prop_assert!(dup_err);
        }
    }
}
