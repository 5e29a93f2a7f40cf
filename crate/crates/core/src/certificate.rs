//! Hamilton cycle certificates and their independent verifier.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::{BicirculantParams, EdgeClass, Vertex};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCounts {
    pub outer: usize,
    pub inner: usize,
    pub spoke: usize,
}

impl EdgeCounts {
    pub fn get(&self, class: EdgeClass) -> usize {
        match class {
            EdgeClass::Outer => self.outer,
            EdgeClass::Inner => self.inner,
            EdgeClass::Spoke => self.spoke,
        }
    }

    fn bump(&mut self, class: EdgeClass) {
        match class {
            EdgeClass::Outer => self.outer += 1,
            EdgeClass::Inner => self.inner += 1,
            EdgeClass::Spoke => self.spoke += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("expected {expected} vertices, got {actual}")]
    WrongLength { expected: usize, actual: usize },
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),
    #[error("vertex {0} repeats")]
    RepeatedVertex(Vertex),
    #[error("step {0} does not follow an edge")]
    NonAdjacentStep(usize),
    #[error("{outer} outer edges but {inner} inner edges")]
    OuterInnerCountMismatch { outer: usize, inner: usize },
}

impl CertificateError {
    /// Short machine-readable reason.
    pub fn code(&self) -> &'static str {
        match self {
            CertificateError::WrongLength { .. } => "WrongLength",
            CertificateError::VertexOutOfRange(_) => "VertexOutOfRange",
            CertificateError::RepeatedVertex(_) => "RepeatedVertex",
            CertificateError::NonAdjacentStep(_) => "NonAdjacentStep",
            CertificateError::OuterInnerCountMismatch { .. } => "OuterInnerCountMismatch",
        }
    }
}

/// A verified hamilton cycle, stored in canonical orientation: the smallest
/// vertex first, then the lexicographically smaller of the two directions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleCertificate {
    #[serde(rename = "cycle")]
    vertices: Vec<Vertex>,
    counts: EdgeCounts,
}

impl CycleCertificate {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn counts(&self) -> EdgeCounts {
        self.counts
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive pairs including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }
}

/// Rotates the minimum vertex to the front and picks the smaller direction.
pub fn canonicalize(cycle: &[Vertex]) -> Vec<Vertex> {
    let n = cycle.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let forward: Vec<Vertex> = (0..n).map(|k| cycle[(start + k) % n]).collect();
    let backward: Vec<Vertex> = (0..n).map(|k| cycle[(start + n - k) % n]).collect();
    forward.min(backward)
}

/// Checks that `cycle` lists every vertex of `p` once with cyclically
/// consecutive vertices adjacent.
pub fn verify_certificate(
    p: &BicirculantParams,
    cycle: &[Vertex],
) -> Result<CycleCertificate, CertificateError> {
    let expected = p.order();
    check_cycle_on(p, cycle, expected, |_| true)?;
    let counts = count_edges(p, cycle);
    if counts.outer != counts.inner {
        return Err(CertificateError::OuterInnerCountMismatch {
            outer: counts.outer,
            inner: counts.inner,
        });
    }
    Ok(CycleCertificate {
        vertices: canonicalize(cycle),
        counts,
    })
}

/// Checks a hamilton cycle of the component `{u_i, v_i : i ≡ 0 (mod delta)}`
/// of `p`, where `delta` divides `m`.
pub(crate) fn verify_component_cycle(
    p: &BicirculantParams,
    delta: usize,
    cycle: &[Vertex],
) -> Result<EdgeCounts, CertificateError> {
    check_cycle_on(p, cycle, 2 * p.m() / delta, |v| v.index % delta == 0)?;
    Ok(count_edges(p, cycle))
}

fn check_cycle_on(
    p: &BicirculantParams,
    cycle: &[Vertex],
    expected: usize,
    member: impl Fn(Vertex) -> bool,
) -> Result<(), CertificateError> {
    if cycle.len() != expected || expected < 3 {
        return Err(CertificateError::WrongLength {
            expected,
            actual: cycle.len(),
        });
    }
    let mut seen = HashSet::with_capacity(cycle.len());
    for &v in cycle {
        if !p.contains_vertex(v) || !member(v) {
            return Err(CertificateError::VertexOutOfRange(v));
        }
        if !seen.insert(v) {
            return Err(CertificateError::RepeatedVertex(v));
        }
    }
    let n = cycle.len();
    for i in 0..n {
        if !p.is_edge(cycle[i], cycle[(i + 1) % n]) {
            return Err(CertificateError::NonAdjacentStep(i));
        }
    }
    Ok(())
}

pub(crate) fn count_edges(p: &BicirculantParams, cycle: &[Vertex]) -> EdgeCounts {
    let mut counts = EdgeCounts::default();
    let n = cycle.len();
    for i in 0..n {
        if let Ok(kind) = p.classify_edge(cycle[i], cycle[(i + 1) % n]) {
            counts.bump(kind.class());
        }
    }
    counts
}
