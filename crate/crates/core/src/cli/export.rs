//! DOT and edge-list output.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::certificate::{verify_certificate, CycleCertificate};
use crate::params::{BicirculantParams, EdgeClass, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    EdgeList,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExportError {
    #[error("the cycle is not a hamilton cycle of {params}: {reason}")]
    CycleParamMismatch { params: String, reason: String },
}

fn name(v: Vertex) -> String {
    format!("{}{}", v.side.letter(), v.index)
}

fn ordered(x: Vertex, y: Vertex) -> (Vertex, Vertex) {
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

/// Every edge once, smaller endpoint first, sorted.
pub fn edge_set(p: &BicirculantParams) -> BTreeSet<(Vertex, Vertex)> {
    p.vertices()
        .flat_map(|x| p.neighbors(x).into_iter().map(move |y| ordered(x, y)))
        .collect()
}

pub fn export_graph(
    p: &BicirculantParams,
    cycle: Option<&CycleCertificate>,
    format: ExportFormat,
) -> Result<String, ExportError> {
    let on_cycle: BTreeSet<(Vertex, Vertex)> = match cycle {
        Some(c) => {
            verify_certificate(p, c.vertices()).map_err(|e| ExportError::CycleParamMismatch {
                params: p.to_string(),
                reason: e.to_string(),
            })?;
            c.edges().map(|(x, y)| ordered(x, y)).collect()
        }
        None => BTreeSet::new(),
    };
    let edges = edge_set(p);
    let mut out = String::new();
    match format {
        ExportFormat::EdgeList => {
            for (x, y) in &edges {
                writeln!(out, "{} {}", name(*x), name(*y)).unwrap();
            }
        }
        ExportFormat::Dot => {
            writeln!(out, "graph \"{p}\" {{").unwrap();
            for v in p.vertices() {
                writeln!(out, "  {};", name(v)).unwrap();
            }
            for &(x, y) in &edges {
                let color = match p.classify_edge(x, y).expect("edge of p").class() {
                    EdgeClass::Outer => "blue",
                    EdgeClass::Inner => "red",
                    EdgeClass::Spoke => "gray40",
                };
                let style = if on_cycle.contains(&(x, y)) {
                    ", style=bold, penwidth=3"
                } else {
                    ""
                };
                writeln!(out, "  {} -- {} [color={color}{style}];", name(x), name(y)).unwrap();
            }
            out.push_str("}\n");
        }
    }
    Ok(out)
}
