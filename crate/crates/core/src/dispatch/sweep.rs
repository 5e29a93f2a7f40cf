//! Exhaustive classification of every small parameter set.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{Outcome, StrategyRegistry};
use crate::construct::{is_alspach_alias, is_canonical_alspach};
use crate::oracle::{find_cycle_exact, Constraints, SearchBudget};
use crate::params::BicirculantParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub m_max: usize,
    pub d_max: usize,
    pub budget: SearchBudget,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    /// Re-decides every verdict not produced by the exact search.
    pub cross_check: bool,
    pub prefer_oracle: bool,
}

impl SweepOptions {
    pub fn new(m_max: usize, d_max: usize) -> Self {
        SweepOptions {
            m_max,
            d_max,
            budget: SearchBudget::default(),
            jobs: None,
            cross_check: false,
            prefer_oracle: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub universe_size: usize,
    pub verdict_histogram: BTreeMap<String, usize>,
    pub strategy_histogram: BTreeMap<String, usize>,
    pub exceptions: Vec<String>,
    /// Isomorphism class of each exception, keyed by its parameters.
    pub exception_classes: BTreeMap<String, String>,
    pub unknown: Vec<String>,
    pub agreement_failures: Vec<String>,
    pub cross_checked: usize,
}

fn subsets<T: Clone>(items: &[T], max: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for x in items {
        let grown: Vec<Vec<T>> = out
            .iter()
            .filter(|s| s.len() < max)
            .map(|s| {
                let mut t = s.clone();
                t.push(x.clone());
                t
            })
            .collect();
        out.extend(grown);
    }
    out
}

/// Whether `s` (sorted, containing 0) is the least of its spoke shifts and
/// their negatives.
fn is_canonical_spokes(m: usize, s: &[usize]) -> bool {
    s.iter().all(|&c| {
        [false, true].into_iter().all(|neg| {
            let mut t: Vec<usize> = s
                .iter()
                .map(|&x| {
                    let d = (x + m - c) % m;
                    if neg {
                        (m - d) % m
                    } else {
                        d
                    }
                })
                .collect();
            t.sort_unstable();
            s <= t.as_slice()
        })
    })
}

/// Rim sets of `m`, grouped by size.
fn rim_sets(m: usize) -> BTreeMap<usize, Vec<Vec<usize>>> {
    let reps: Vec<usize> = (1..=m / 2).collect();
    let mut by_size: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for pick in subsets(&reps, reps.len()) {
        let mut set: Vec<usize> = pick.iter().flat_map(|&a| [a, m - a]).collect();
        set.sort_unstable();
        set.dedup();
        by_size.entry(set.len()).or_default().push(set);
    }
    by_size
}

/// Every valid `B(m; R, S, T)` with `m <= m_max` and degree at most
/// `d_max`, one per class of spoke shifts and spoke negation.
pub fn enumerate_universe(m_max: usize, d_max: usize) -> Vec<BicirculantParams> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        let rims = rim_sets(m);
        let others: Vec<usize> = (1..m).collect();
        let spoke_sets: Vec<Vec<usize>> = subsets(&others, d_max.saturating_sub(1).min(m - 1))
            .into_iter()
            .map(|rest| {
                let mut s = vec![0];
                s.extend(rest);
                s
            })
            .filter(|s| is_canonical_spokes(m, s))
            .collect();
        for s in &spoke_sets {
            for (&size, sets) in &rims {
                if size + s.len() > d_max {
                    continue;
                }
                for r in sets {
                    for t in sets {
                        out.push(BicirculantParams::subgraph(m, r, s, t));
                    }
                }
            }
        }
    }
    out
}

/// `K2`, `GP(m,2)` for exceptional `m`, or `other`.
pub fn exception_class(p: &BicirculantParams) -> String {
    if p.is_k2() {
        "K2".into()
    } else if is_canonical_alspach(p) || is_alspach_alias(p) {
        format!("GP({},2)", p.m())
    } else {
        "other".into()
    }
}

fn cross_check(
    p: &BicirculantParams,
    out: &Outcome,
    budget: SearchBudget,
) -> Option<Result<(), String>> {
    if out
        .strategy()
        .is_none_or(|s| s == "exact-oracle" || s == "small-order-oracle")
    {
        return None;
    }
    let expected = match find_cycle_exact(p, &Constraints::default(), budget) {
        Ok(c) => c.is_some(),
        Err(e) => return Some(Err(format!("{p}: oracle undecided ({e})"))),
    };
    if expected == out.is_hamiltonian() {
        Some(Ok(()))
    } else {
        Some(Err(format!(
            "{p}: {} by {}, oracle says hamiltonian = {expected}",
            out.label(),
            out.strategy().unwrap()
        )))
    }
}

/// Classifies the whole universe and aggregates the verdicts.
pub fn sweep(opts: &SweepOptions) -> SweepReport {
    let universe = enumerate_universe(opts.m_max, opts.d_max);
    let registry = if opts.prefer_oracle {
        StrategyRegistry::prefer_oracle()
    } else {
        StrategyRegistry::standard()
    };
    let work = || -> Vec<(Outcome, Option<Result<(), String>>)> {
        universe
            .par_iter()
            .map(|p| {
                let out = registry.classify(p, opts.budget);
                let check = if opts.cross_check {
                    cross_check(p, &out, opts.budget)
                } else {
                    None
                };
                (out, check)
            })
            .collect()
    };
    let results = match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    };

    let mut report = SweepReport {
        universe_size: universe.len(),
        verdict_histogram: BTreeMap::new(),
        strategy_histogram: BTreeMap::new(),
        exceptions: Vec::new(),
        exception_classes: BTreeMap::new(),
        unknown: Vec::new(),
        agreement_failures: Vec::new(),
        cross_checked: 0,
    };
    for (p, (out, check)) in universe.iter().zip(results) {
        *report
            .verdict_histogram
            .entry(out.label().to_string())
            .or_default() += 1;
        if let Some(s) = out.strategy() {
            *report.strategy_histogram.entry(s.to_string()).or_default() += 1;
        }
        match &out {
            Outcome::NonHamiltonian { .. } => {
                report.exceptions.push(p.to_string());
                report
                    .exception_classes
                    .insert(p.to_string(), exception_class(p));
            }
            Outcome::Unknown { .. } => report.unknown.push(p.to_string()),
            _ => {}
        }
        match check {
            Some(Ok(())) => report.cross_checked += 1,
            Some(Err(e)) => report.agreement_failures.push(e),
            None => {}
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_spokes() {
        assert!(is_canonical_spokes(6, &[0, 1]));
        assert!(!is_canonical_spokes(6, &[0, 5]));
        assert!(is_canonical_spokes(6, &[0, 1, 3]));
        assert!(!is_canonical_spokes(6, &[0, 2, 3]));
    }

    #[test]
    fn tiny_universe() {
        let u = enumerate_universe(1, 5);
        assert_eq!(u.len(), 1);
        assert!(u[0].is_k2());
        let report = sweep(&SweepOptions::new(1, 3));
        assert_eq!(report.exceptions, vec![u[0].to_string()]);
    }

    #[test]
    fn universe_respects_degree() {
        for p in enumerate_universe(8, 4) {
            assert!(p.degree() <= 4, "{p}");
            assert_eq!(p.outer().len(), p.inner().len());
        }
    }

    #[test]
    fn small_sweep() {
        let mut opts = SweepOptions::new(6, 3);
        opts.cross_check = true;
        let report = sweep(&opts);
        assert!(report.unknown.is_empty(), "{:?}", report.unknown);
        assert!(
            report.agreement_failures.is_empty(),
            "{:?}",
            report.agreement_failures
        );
        let classes: std::collections::BTreeSet<_> =
            report.exception_classes.values().cloned().collect();
        assert_eq!(
            classes.into_iter().collect::<Vec<_>>(),
            vec!["GP(5,2)".to_string(), "K2".to_string()]
        );
    }
}
