mod common;

use std::collections::BTreeSet;

use bicyc::dispatch::{
    classify, enumerate_universe, sweep, theorem13_applicable, NonHamReason, Outcome,
    StrategyRegistry, SweepOptions,
};
use bicyc::oracle::SearchBudget;
use bicyc::params::{generalized_petersen, make_params};
use common::{bfs_components, check_cycle, is_hamiltonian};

#[test]
fn verdicts_match_reference_search() {
    let registry = StrategyRegistry::standard();
    for p in enumerate_universe(10, 5) {
        let out = registry.classify(&p, SearchBudget::default());
        let connected = bfs_components(&p).1 == 1;
        match &out {
            Outcome::Disconnected { .. } => assert!(!connected, "{p}"),
            Outcome::Hamiltonian { certificate, .. } => {
                let counts =
                    check_cycle(&p, certificate.vertices()).unwrap_or_else(|e| panic!("{p}: {e}"));
                assert_eq!(counts.outer, counts.inner, "{p}");
            }
            Outcome::NonHamiltonian { .. } => assert!(connected && !is_hamiltonian(&p), "{p}"),
            Outcome::Unknown { .. } => panic!("{p}: unknown"),
        }
    }
}

#[test]
fn prefer_oracle_gives_same_verdicts() {
    let a = StrategyRegistry::standard();
    let b = StrategyRegistry::prefer_oracle();
    for p in enumerate_universe(8, 4) {
        let (x, y) = (
            a.classify(&p, SearchBudget::default()),
            b.classify(&p, SearchBudget::default()),
        );
        assert_eq!(x.label(), y.label(), "{p}");
    }
}

#[test]
fn sweep_of_order_one_is_k2() {
    for d in 1..5 {
        let r = sweep(&SweepOptions::new(1, d));
        assert_eq!(r.exceptions, vec!["B(1; _; 0; _)".to_string()]);
        assert_eq!(r.universe_size, 1);
    }
}

#[test]
fn sweep_to_eleven_adds_only_the_petersen_family() {
    let r = sweep(&SweepOptions::new(11, 3));
    assert!(r.unknown.is_empty());
    let classes: BTreeSet<&str> = r.exception_classes.values().map(String::as_str).collect();
    assert_eq!(classes, BTreeSet::from(["K2", "GP(5,2)", "GP(11,2)"]));
    for e in &r.exceptions {
        let p = bicyc::cli::parse_params(e).unwrap();
        assert!(p.m() == 1 || (p.spokes() == [0] && p.degree() == 3), "{e}");
        if p.m() <= 11 {
            assert!(p.m() == 1 || !is_hamiltonian(&p), "{e}");
        }
    }
}

#[test]
fn sweep_is_deterministic() {
    let mut opts = SweepOptions::new(9, 4);
    opts.jobs = Some(1);
    let a = serde_json::to_string(&sweep(&opts)).unwrap();
    opts.jobs = Some(3);
    let b = serde_json::to_string(&sweep(&opts)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn known_exceptions_skip_search() {
    let out = classify(
        &generalized_petersen(23, 2).unwrap(),
        SearchBudget::with_nodes(0),
    );
    assert!(matches!(
        out,
        Outcome::NonHamiltonian {
            reason: NonHamReason::AlspachGP,
            ..
        }
    ));
    let swapped = make_params(17, &[2, 15], &[0], &[1, 16]).unwrap();
    let out = classify(&swapped, SearchBudget::with_nodes(0));
    assert!(matches!(
        out,
        Outcome::NonHamiltonian {
            reason: NonHamReason::AlspachGP,
            ..
        }
    ));
}

#[test]
fn two_spoke_witness_cycle_is_reused() {
    let p = make_params(12, &[3, 9], &[0, 4, 8], &[2, 10]).unwrap();
    let only = StrategyRegistry::standard()
        .with_order(&["two-spoke-subgraph", "exact-oracle"])
        .unwrap();
    let out = only.classify(&p, SearchBudget::default());
    assert_eq!(out.strategy(), Some("two-spoke-subgraph"));
    assert!(theorem13_applicable(&p).witness.is_some());
}

#[test]
fn open_case_is_found_heuristically() {
    let p = make_params(1155, &[105, 1050], &[0, 33, 110], &[315, 840]).unwrap();
    assert!(!theorem13_applicable(&p).applicable);
    let only = StrategyRegistry::standard()
        .with_order(&["heuristic"])
        .unwrap();
    let out = only.classify(&p, SearchBudget::default());
    let Outcome::Hamiltonian { certificate, .. } = out else {
        panic!("{out:?}")
    };
    let counts = check_cycle(&p, certificate.vertices()).unwrap();
    assert_eq!(counts.outer, counts.inner);
}
