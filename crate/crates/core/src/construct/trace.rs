use serde::Serialize;

use super::{assemble, ConstructError};
use crate::certificate::{verify_certificate, CycleCertificate};
use crate::params::{BicirculantParams, Vertex};

/// Which stitching scheme produced a stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// One row of spoke-cycle copies joined along rim chords.
    HaarRow,
    /// A two-dimensional grid of spoke-cycle copies.
    HaarGrid,
    /// Copies of one cycle chained along a single rim type.
    RemovalChain,
    /// A chain along an inner type followed by a chain along an outer type.
    RemovalDoubleChain,
    /// Greedy type removal followed by repeated stitching.
    Pipeline,
    /// Prism traversal across the `m/2` edges.
    PrismLift,
    /// Zig-zag of hamilton paths across the `m/2` subgraph components.
    HalfTypeZigzag,
    /// Zig-zag followed by removal stitching.
    HalfTypeExtended,
    /// Induction on the degree for graphs with one spoke per vertex.
    SingleSpokeInduction,
    /// A cycle supplied directly by the exhaustive search.
    Oracle,
}

/// One stitching step: the pieces and the join edges that form its cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stage {
    pub method: Method,
    pub types: (usize, usize),
    pub subgraph: String,
    pub segments: Vec<Vec<Vertex>>,
    pub joins: Vec<(Vertex, Vertex)>,
}

impl Stage {
    pub(crate) fn new(
        method: Method,
        types: (usize, usize),
        subgraph: &BicirculantParams,
        segments: Vec<Vec<Vertex>>,
        joins: Vec<(Vertex, Vertex)>,
    ) -> Self {
        Stage {
            method,
            types,
            subgraph: subgraph.to_string(),
            segments,
            joins,
        }
    }

    /// A stage that adopts an existing cycle unchanged.
    pub(crate) fn whole(
        method: Method,
        types: (usize, usize),
        subgraph: &BicirculantParams,
        cycle: &[Vertex],
    ) -> Self {
        let closing = (*cycle.last().unwrap(), cycle[0]);
        Stage::new(method, types, subgraph, vec![cycle.to_vec()], vec![closing])
    }

    pub fn describe(&self) -> String {
        format!(
            "{:?} on {} with types {:?}: {} segments, {} joins",
            self.method,
            self.subgraph,
            self.types,
            self.segments.len(),
            self.joins.len()
        )
    }
}

/// Record of how a construction reached its cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub method: Method,
    pub stages: Vec<Stage>,
    pub log: Vec<String>,
}

impl ConstructionTrace {
    pub(crate) fn new(method: Method) -> Self {
        ConstructionTrace {
            method,
            stages: Vec::new(),
            log: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, stage: Stage) {
        self.log.push(stage.describe());
        self.stages.push(stage);
    }

    pub(crate) fn note(&mut self, line: impl Into<String>) {
        self.log.push(line.into());
    }

    pub(crate) fn extend(&mut self, other: ConstructionTrace) {
        self.stages.extend(other.stages);
        self.log.extend(other.log);
    }

    /// Reassembles the final stage and verifies it against `p`.
    pub fn replay(&self, p: &BicirculantParams) -> Result<CycleCertificate, ConstructError> {
        let last = self
            .stages
            .last()
            .ok_or_else(|| ConstructError::InternalStitchFailure("empty trace".into()))?;
        let cycle =
            assemble(&last.segments, &last.joins).map_err(ConstructError::InternalStitchFailure)?;
        verify_certificate(p, &cycle)
            .map_err(|e| ConstructError::InternalStitchFailure(e.to_string()))
    }
}
