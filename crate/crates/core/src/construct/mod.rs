//! Hamilton cycle constructions.
//!
//! Every construction works on the component of a (possibly disconnected,
//! possibly irregular) spanning subgraph that contains `u_0`. Shifted copies
//! of a base cycle or path are cut into pieces and joined by rim edges. The
//! pieces and join edges are assembled into a single cycle, which is checked
//! before it is returned.

mod assemble;
mod haar;
mod half;
mod lift;
mod pipeline;
mod removal;
mod s1;
mod trace;

use thiserror::Error;

use crate::certificate::{verify_component_cycle, CertificateError};
use crate::oracle::OracleError;
use crate::params::{BicirculantParams, Side, Vertex};

pub(crate) use assemble::assemble;
pub(crate) use haar::haar_component;
pub use haar::{stitch_haar, stitch_haar_with, AnchorChoice};
pub use half::half_type_construct;
pub use lift::k2_lift;
pub(crate) use lift::lift_component;
pub use pipeline::PipelinePlan;
pub use pipeline::{pipeline_combination, plan_pipeline};
pub use removal::stitch_removal;
pub(crate) use removal::{chain_stitch, removal_component};
pub(crate) use s1::{is_alspach_alias, is_canonical_alspach};
pub use s1::{s1_classify_construct, ExceptionKind, S1Outcome};
pub use trace::{ConstructionTrace, Method, Stage};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("base cycle rejected: {0}")]
    BaseCycleInvalid(CertificateError),
    #[error("internal stitch failure: {0}")]
    InternalStitchFailure(String),
    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),
    #[error("oracle failed: {0}")]
    OracleFailed(String),
    #[error("base cycle has {found} rim edges on the {side:?} side, need 2")]
    TooFewRimEdges { side: Side, found: usize },
    #[error("wrong shape: {0}")]
    WrongShape(String),
    #[error("invalid path: {0}")]
    PathInvalid(String),
}

impl From<OracleError> for ConstructError {
    fn from(e: OracleError) -> Self {
        ConstructError::OracleFailed(e.to_string())
    }
}

/// Adds `offset` to every subscript.
pub(crate) fn shift_all(seq: &[Vertex], offset: usize, m: usize) -> Vec<Vertex> {
    seq.iter().map(|v| v.shifted(offset, m)).collect()
}

/// Checks a cycle of the component of `q` containing `u_0`.
pub(crate) fn check_component_cycle(
    q: &BicirculantParams,
    cycle: &[Vertex],
) -> Result<(), ConstructError> {
    verify_component_cycle(q, q.component_count(), cycle)
        .map(|_| ())
        .map_err(|e| ConstructError::InternalStitchFailure(format!("{q}: {e}")))
}

/// Number of cycle edges with both ends on `side`.
pub(crate) fn rim_edge_count(cycle: &[Vertex], side: Side) -> usize {
    let n = cycle.len();
    (0..n)
        .filter(|&i| cycle[i].side == side && cycle[(i + 1) % n].side == side)
        .count()
}

/// Rotates a cycle so it starts at position `i`.
pub(crate) fn rotated(cycle: &[Vertex], i: usize) -> Vec<Vertex> {
    let mut out = cycle[i..].to_vec();
    out.extend_from_slice(&cycle[..i]);
    out
}

/// Exchanges `u_i` and `v_i` throughout.
pub(crate) fn swap_all(seq: &[Vertex]) -> Vec<Vertex> {
    seq.iter().map(|v| v.swapped()).collect()
}

/// Maps a sequence on the quotient of a component onto component 0.
pub(crate) fn lift_from_quotient(seq: &[Vertex], delta: usize) -> Vec<Vertex> {
    seq.iter()
        .map(|v| Vertex {
            side: v.side,
            index: v.index * delta,
        })
        .collect()
}
