//! The standard strategies, in cascade order.

use super::{
    theorem13_applicable, Attempt, NonHamReason, Outcome, Strategy, StrategyRegistry, Witness,
};
use crate::arith::gcd;
use crate::construct::{
    half_type_construct, is_canonical_alspach, pipeline_combination, s1_classify_construct,
    ConstructError, ConstructionTrace, ExceptionKind, S1Outcome,
};
use crate::oracle::{
    find_cycle_exact, find_cycle_heuristic, Constraints, OracleError, SearchBudget,
};
use crate::params::{BicirculantParams, Side, Vertex};
use crate::structure::decompose;

pub fn standard_strategies() -> Vec<Box<dyn Strategy>> {
    vec![
        Box::new(Disconnected),
        Box::new(KnownException),
        Box::new(SmallOrder),
        Box::new(HaarSpanning),
        Box::new(SingleSpoke),
        Box::new(HalfType),
        Box::new(Pipeline),
        Box::new(TwoSpokeSubgraph),
        Box::new(RoseWindow),
        Box::new(ExactOracle),
        Box::new(Heuristic),
    ]
}

fn from_construction(
    p: &BicirculantParams,
    name: &str,
    r: Result<(crate::certificate::CycleCertificate, ConstructionTrace), ConstructError>,
) -> Attempt {
    match r {
        Ok((cert, trace)) => Attempt::hamiltonian(p, name, cert.vertices(), Some(trace)),
        Err(ConstructError::HypothesisUnmet(_)) => Attempt::NotApplicable,
        Err(e) => Attempt::Failed(e.to_string()),
    }
}

fn exact(p: &BicirculantParams, name: &str, budget: SearchBudget) -> Attempt {
    match find_cycle_exact(p, &Constraints::default(), budget) {
        Ok(Some(c)) => Attempt::hamiltonian(p, name, &c, None),
        Ok(None) => Attempt::non_hamiltonian(name, NonHamReason::ExhaustiveSearch),
        Err(OracleError::BudgetExceeded) => Attempt::Failed("budget exhausted".into()),
        Err(e) => Attempt::Failed(e.to_string()),
    }
}

struct Disconnected;

impl Strategy for Disconnected {
    fn name(&self) -> &'static str {
        "disconnected"
    }

    fn attempt(&self, p: &BicirculantParams, _: SearchBudget, _: &StrategyRegistry) -> Attempt {
        let d = decompose(p);
        if d.delta == 1 {
            return Attempt::NotApplicable;
        }
        Attempt::Decided(Outcome::Disconnected {
            components: d.delta,
            quotient: d.quotient.to_string(),
        })
    }
}

struct KnownException;

impl Strategy for KnownException {
    fn name(&self) -> &'static str {
        "known-exception"
    }

    fn attempt(&self, p: &BicirculantParams, _: SearchBudget, _: &StrategyRegistry) -> Attempt {
        if p.is_k2() {
            Attempt::non_hamiltonian(self.name(), NonHamReason::K2)
        } else if is_canonical_alspach(p) {
            Attempt::non_hamiltonian(self.name(), NonHamReason::AlspachGP)
        } else {
            Attempt::NotApplicable
        }
    }
}

/// Exhaustive search for `m <= 5`.
struct SmallOrder;

impl Strategy for SmallOrder {
    fn name(&self) -> &'static str {
        "small-order-oracle"
    }

    fn attempt(
        &self,
        p: &BicirculantParams,
        budget: SearchBudget,
        _: &StrategyRegistry,
    ) -> Attempt {
        if p.m() > 5 {
            return Attempt::NotApplicable;
        }
        exact(p, self.name(), budget)
    }
}

/// A hamilton cycle of the connected spoke subgraph `H(m; S)` spans `G`.
struct HaarSpanning;

impl Strategy for HaarSpanning {
    fn name(&self) -> &'static str {
        "haar-spanning"
    }

    fn attempt(
        &self,
        p: &BicirculantParams,
        budget: SearchBudget,
        _: &StrategyRegistry,
    ) -> Attempt {
        if p.spoke_gcd() != 1 || p.spokes().len() < 2 {
            return Attempt::NotApplicable;
        }
        let h = BicirculantParams::subgraph(p.m(), &[], p.spokes(), &[]);
        match find_cycle_exact(&h, &Constraints::default(), budget) {
            Ok(Some(c)) => Attempt::hamiltonian(p, self.name(), &c, None),
            Ok(None) => Attempt::Failed(format!("{h} has no hamilton cycle")),
            Err(e) => Attempt::Failed(e.to_string()),
        }
    }
}

/// Aliases of `GP(m, 2)` are left to the exact oracle.
struct SingleSpoke;

impl Strategy for SingleSpoke {
    fn name(&self) -> &'static str {
        "single-spoke"
    }

    fn attempt(
        &self,
        p: &BicirculantParams,
        budget: SearchBudget,
        _: &StrategyRegistry,
    ) -> Attempt {
        if p.spokes().len() != 1 {
            return Attempt::NotApplicable;
        }
        match s1_classify_construct(p, budget) {
            Ok(S1Outcome::Hamiltonian(cert, trace)) => {
                Attempt::hamiltonian(p, self.name(), cert.vertices(), Some(trace))
            }
            Ok(S1Outcome::Exception(ExceptionKind::K2)) => {
                Attempt::non_hamiltonian(self.name(), NonHamReason::K2)
            }
            Ok(S1Outcome::Exception(ExceptionKind::AlspachGP)) if is_canonical_alspach(p) => {
                Attempt::non_hamiltonian(self.name(), NonHamReason::AlspachGP)
            }
            Ok(S1Outcome::Exception(ExceptionKind::AlspachGP)) => Attempt::Failed(
                "isomorphic to an exceptional GP(m, 2), deferred to the exact search".into(),
            ),
            Ok(S1Outcome::CannotApply(why)) => Attempt::Failed(why),
            Err(ConstructError::HypothesisUnmet(_)) => Attempt::NotApplicable,
            Err(e) => Attempt::Failed(e.to_string()),
        }
    }
}

struct HalfType;

impl Strategy for HalfType {
    fn name(&self) -> &'static str {
        "half-type"
    }

    fn attempt(
        &self,
        p: &BicirculantParams,
        budget: SearchBudget,
        _: &StrategyRegistry,
    ) -> Attempt {
        from_construction(p, self.name(), half_type_construct(p, budget))
    }
}

struct Pipeline;

impl Strategy for Pipeline {
    fn name(&self) -> &'static str {
        "pipeline"
    }

    fn attempt(
        &self,
        p: &BicirculantParams,
        budget: SearchBudget,
        _: &StrategyRegistry,
    ) -> Attempt {
        from_construction(p, self.name(), pipeline_combination(p, budget))
    }
}

/// With three or more spokes, settles the connected spanning subgraph on two
/// spokes and reuses its cycle.
struct TwoSpokeSubgraph;

impl Strategy for TwoSpokeSubgraph {
    fn name(&self) -> &'static str {
        "two-spoke-subgraph"
    }

    fn attempt(
        &self,
        p: &BicirculantParams,
        budget: SearchBudget,
        registry: &StrategyRegistry,
    ) -> Attempt {
        if p.spokes().len() < 3 {
            return Attempt::NotApplicable;
        }
        let Some(Witness::TwoSpokeSubgraph { base, c }) = theorem13_applicable(p).witness else {
            return Attempt::NotApplicable;
        };
        let m = p.m();
        let q = BicirculantParams::subgraph(m, p.outer(), &[0, c], p.inner());
        match registry.classify(&q, budget) {
            Outcome::Hamiltonian { certificate, .. } => {
                let cycle: Vec<Vertex> = certificate
                    .vertices()
                    .iter()
                    .map(|&v| {
                        if v.side == Side::Inner {
                            v.shifted(base, m)
                        } else {
                            v
                        }
                    })
                    .collect();
                Attempt::hamiltonian(p, self.name(), &cycle, None)
            }
            other => Attempt::Failed(format!("{q}: {}", other.label())),
        }
    }
}

/// Two spokes with every rim type other than `m/2` coprime to `gcd(m, S)`:
/// the exact search on a connected sub-bicirculant with one rim pair.
struct RoseWindow;

impl Strategy for RoseWindow {
    fn name(&self) -> &'static str {
        "rose-window"
    }

    fn attempt(
        &self,
        p: &BicirculantParams,
        budget: SearchBudget,
        _: &StrategyRegistry,
    ) -> Attempt {
        if p.spokes().len() != 2 {
            return Attempt::NotApplicable;
        }
        let g = p.spoke_gcd();
        let h = p.half();
        let coprime = [Side::Outer, Side::Inner].into_iter().all(|s| {
            p.rim_reps(s)
                .into_iter()
                .all(|x| Some(x) == h || gcd(x, g) == 1)
        });
        if !coprime {
            return Attempt::NotApplicable;
        }
        let m = p.m();
        let sym = |x: usize| [x, (m - x) % m];
        let mut failures = Vec::new();
        for a in p.rim_reps(Side::Outer) {
            for b in p.rim_reps(Side::Inner) {
                let q = BicirculantParams::subgraph(m, &sym(a), p.spokes(), &sym(b));
                if q.component_count() != 1 {
                    continue;
                }
                match find_cycle_exact(&q, &Constraints::default(), budget) {
                    Ok(Some(c)) => return Attempt::hamiltonian(p, self.name(), &c, None),
                    Ok(None) => failures.push(format!("{q} is not hamiltonian")),
                    Err(e) => failures.push(format!("{q}: {e}")),
                }
            }
        }
        if failures.is_empty() {
            Attempt::NotApplicable
        } else {
            Attempt::Failed(failures.join("; "))
        }
    }
}

struct ExactOracle;

impl Strategy for ExactOracle {
    fn name(&self) -> &'static str {
        "exact-oracle"
    }

    fn attempt(
        &self,
        p: &BicirculantParams,
        budget: SearchBudget,
        _: &StrategyRegistry,
    ) -> Attempt {
        exact(p, self.name(), budget)
    }
}

struct Heuristic;

impl Strategy for Heuristic {
    fn name(&self) -> &'static str {
        "heuristic"
    }

    fn attempt(
        &self,
        p: &BicirculantParams,
        budget: SearchBudget,
        _: &StrategyRegistry,
    ) -> Attempt {
        match find_cycle_heuristic(p, budget) {
            Some(c) => Attempt::hamiltonian(p, self.name(), &c, None),
            None => Attempt::Failed(format!("no cycle found with seed {}", budget.seed)),
        }
    }
}
