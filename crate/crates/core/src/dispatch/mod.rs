//! Strategy selection.
//!
//! Each way of settling a graph is a [`Strategy`] registered by name in a
//! [`StrategyRegistry`]. [`classify`] runs the standard cascade: known
//! exceptions first, then the constructions, then the oracles.

mod strategies;
mod sweep;
mod witness;

use serde::Serialize;

use crate::certificate::{verify_certificate, CycleCertificate};
use crate::construct::ConstructionTrace;
use crate::oracle::SearchBudget;
use crate::params::{BicirculantParams, Vertex};

pub use strategies::standard_strategies;
pub use sweep::{enumerate_universe, exception_class, sweep, SweepOptions, SweepReport};
pub use witness::{theorem13_applicable, Applicability, Witness};

/// Why a graph has no hamilton cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NonHamReason {
    K2,
    #[serde(rename = "alspach-gp")]
    AlspachGP,
    ExhaustiveSearch,
}

/// Verdict of [`classify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Outcome {
    Hamiltonian {
        strategy: String,
        certificate: CycleCertificate,
        #[serde(skip_serializing_if = "Option::is_none")]
        trace: Option<ConstructionTrace>,
    },
    NonHamiltonian {
        strategy: String,
        reason: NonHamReason,
    },
    Disconnected {
        components: usize,
        quotient: String,
    },
    Unknown {
        budget: SearchBudget,
        attempts: Vec<String>,
    },
}

impl Outcome {
    pub fn is_hamiltonian(&self) -> bool {
        matches!(self, Outcome::Hamiltonian { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Outcome::Unknown { .. })
    }

    /// Short label used in histograms.
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Hamiltonian { .. } => "hamiltonian",
            Outcome::NonHamiltonian { .. } => "non-hamiltonian",
            Outcome::Disconnected { .. } => "disconnected",
            Outcome::Unknown { .. } => "unknown",
        }
    }

    pub fn strategy(&self) -> Option<&str> {
        match self {
            Outcome::Hamiltonian { strategy, .. } | Outcome::NonHamiltonian { strategy, .. } => {
                Some(strategy)
            }
            _ => None,
        }
    }
}

/// Result of one strategy on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Attempt {
    Decided(Outcome),
    NotApplicable,
    Failed(String),
}

impl Attempt {
    /// Verifies `cycle` against `p` before accepting it.
    pub fn hamiltonian(
        p: &BicirculantParams,
        strategy: &str,
        cycle: &[Vertex],
        trace: Option<ConstructionTrace>,
    ) -> Attempt {
        match verify_certificate(p, cycle) {
            Ok(certificate) => Attempt::Decided(Outcome::Hamiltonian {
                strategy: strategy.to_string(),
                certificate,
                trace,
            }),
            Err(e) => Attempt::Failed(format!("rejected cycle: {e}")),
        }
    }

    pub fn non_hamiltonian(strategy: &str, reason: NonHamReason) -> Attempt {
        Attempt::Decided(Outcome::NonHamiltonian {
            strategy: strategy.to_string(),
            reason,
        })
    }
}

pub trait Strategy: Send + Sync {
    fn name(&self) -> &'static str;

    /// Reads `registry` only to recurse into subgraphs.
    fn attempt(
        &self,
        p: &BicirculantParams,
        budget: SearchBudget,
        registry: &StrategyRegistry,
    ) -> Attempt;
}

/// Ordered, named strategies.
pub struct StrategyRegistry {
    strategies: Vec<Box<dyn Strategy>>,
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        StrategyRegistry {
            strategies: Vec::new(),
        }
    }

    /// The full cascade, constructions before the oracles.
    pub fn standard() -> Self {
        let mut r = Self::empty();
        for s in standard_strategies() {
            r.register(s);
        }
        r
    }

    /// The standard cascade with the exact oracle moved right after the
    /// exception checks.
    pub fn prefer_oracle() -> Self {
        let mut r = Self::standard();
        if let Some(i) = r.position("exact-oracle") {
            let oracle = r.strategies.remove(i);
            let at = r.position("known-exception").map_or(0, |k| k + 1);
            r.strategies.insert(at, oracle);
        }
        r
    }

    /// Appends `s`, replacing any strategy of the same name in place.
    pub fn register(&mut self, s: Box<dyn Strategy>) {
        match self.position(s.name()) {
            Some(i) => self.strategies[i] = s,
            None => self.strategies.push(s),
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn Strategy> {
        self.position(name).map(|i| self.strategies[i].as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.iter().map(|s| s.name()).collect()
    }

    /// Keeps only `names`, in that order. Unknown names are returned as
    /// the error.
    pub fn with_order(mut self, names: &[&str]) -> Result<Self, String> {
        let mut picked = Vec::new();
        for &n in names {
            let i = self.position(n).ok_or_else(|| n.to_string())?;
            picked.push(self.strategies.remove(i));
        }
        Ok(StrategyRegistry { strategies: picked })
    }

    fn position(&self, name: &str) -> Option<usize> {
        self.strategies.iter().position(|s| s.name() == name)
    }

    /// Runs the strategies in order until one decides.
    pub fn classify(&self, p: &BicirculantParams, budget: SearchBudget) -> Outcome {
        let mut attempts = Vec::new();
        for s in &self.strategies {
            match s.attempt(p, budget, self) {
                Attempt::Decided(out) => return out,
                Attempt::NotApplicable => {}
                Attempt::Failed(why) => attempts.push(format!("{}: {why}", s.name())),
            }
        }
        Outcome::Unknown { budget, attempts }
    }
}

/// Classifies `p` with the standard cascade.
pub fn classify(p: &BicirculantParams, budget: SearchBudget) -> Outcome {
    StrategyRegistry::standard().classify(p, budget)
}
