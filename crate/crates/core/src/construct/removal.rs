//! Chaining translates of a cycle along one rim type.
//!
//! Take a cycle `C` with two edges `x_0 x_s` and `x_h x_k` on one side.
//! Cutting both edges leaves the paths `x_0..x_h` and `x_s..x_k`. The first
//! copy uses `C - x_0 x_s`, the middle copies use both short paths and the
//! last copy uses `C - x_0 x_s` or `C - x_h x_k` depending on parity.
//! Neighbouring copies are joined by rim edges of the chaining type at the
//! vertices `x_0, x_s` and `x_h, x_k` alternately.

use super::{
    assemble, check_component_cycle, rim_edge_count, rotated, shift_all, ConstructError,
    ConstructionTrace, Method, Stage,
};
use crate::certificate::{verify_certificate, verify_component_cycle, CycleCertificate};
use crate::params::{BicirculantParams, Side, Vertex};

pub(crate) struct Chained {
    pub cycle: Vec<Vertex>,
    pub pieces: Vec<Vec<Vertex>>,
    pub joins: Vec<(Vertex, Vertex)>,
}

/// Chains `copies` translates (by multiples of `step`) of `cycle` along
/// rim edges on `side`.
///
/// With `open_first` the closing pair `(cycle[last], cycle[0])` need not be
/// an edge: the input is then a path, and an even number of copies never
/// uses that pair.
pub(crate) fn chain_stitch(
    m: usize,
    cycle: &[Vertex],
    side: Side,
    step: usize,
    copies: usize,
    open_first: bool,
) -> Result<Chained, ConstructError> {
    let n = cycle.len();
    if copies <= 1 {
        return Ok(Chained {
            cycle: cycle.to_vec(),
            pieces: vec![cycle.to_vec()],
            joins: vec![(cycle[n - 1], cycle[0])],
        });
    }
    let on_side = |c: &[Vertex], i: usize| c[i].side == side && c[(i + 1) % n].side == side;
    let c: Vec<Vertex> = if open_first {
        if copies % 2 == 1 {
            return Err(ConstructError::PreconditionViolated(
                "open chain needs an even number of copies".into(),
            ));
        }
        if cycle[0].side != side || cycle[n - 1].side != side {
            return Err(ConstructError::PreconditionViolated(
                "open chain endpoints must lie on the chain side".into(),
            ));
        }
        rotated(cycle, n - 1)
    } else {
        let first = (0..n)
            .find(|&i| on_side(cycle, i))
            .ok_or(ConstructError::TooFewRimEdges { side, found: 0 })?;
        rotated(cycle, first)
    };
    let x = (1..n)
        .find(|&i| on_side(&c, i))
        .ok_or(ConstructError::TooFewRimEdges { side, found: 1 })?;

    let minus_first: Vec<Vertex> = c[1..].iter().chain(&c[..1]).copied().collect();
    let zero_to_h: Vec<Vertex> = c[x + 1..].iter().chain(&c[..1]).copied().collect();
    let s_to_k: Vec<Vertex> = c[1..=x].to_vec();
    let minus_second: Vec<Vertex> = c[x + 1..].iter().chain(&c[..=x]).copied().collect();

    let lambda = copies - 1;
    let at = |v: Vertex, j: usize| v.shifted(j * step % m, m);
    let mut pieces = vec![minus_first.clone()];
    for j in 1..lambda {
        pieces.push(shift_all(&zero_to_h, j * step % m, m));
        pieces.push(shift_all(&s_to_k, j * step % m, m));
    }
    let end = if lambda % 2 == 1 {
        &minus_first
    } else {
        &minus_second
    };
    pieces.push(shift_all(end, lambda * step % m, m));

    let mut joins = Vec::new();
    for j in 0..lambda {
        let (p, q) = if j % 2 == 0 {
            (c[0], c[1])
        } else {
            (c[(x + 1) % n], c[x])
        };
        joins.push((at(p, j), at(p, j + 1)));
        joins.push((at(q, j), at(q, j + 1)));
    }
    let cycle = assemble(&pieces, &joins).map_err(ConstructError::InternalStitchFailure)?;
    Ok(Chained {
        cycle,
        pieces,
        joins,
    })
}

/// One removal step on the component of `q` containing `u_0`. `base` is a
/// hamilton cycle of the component of `q - {a, b}` containing `u_0`.
pub(crate) fn removal_component(
    q: &BicirculantParams,
    a: usize,
    b: usize,
    base: &[Vertex],
) -> Result<(Vec<Vertex>, Stage), ConstructError> {
    let m = q.m();
    if q.half().is_some_and(|h| a % m == h || b % m == h) {
        return Err(ConstructError::PreconditionViolated("rim type m/2".into()));
    }
    if q.outer().binary_search(&(a % m)).is_err() || q.inner().binary_search(&(b % m)).is_err() {
        return Err(ConstructError::PreconditionViolated(format!(
            "types {a}, {b} are not both present"
        )));
    }
    let h = q.without_types(&[a], &[b]);
    let k = q.without_types(&[a], &[]);
    let (dg, dk, dh) = (
        q.component_count(),
        k.component_count(),
        h.component_count(),
    );
    verify_component_cycle(&h, dh, base).map_err(ConstructError::BaseCycleInvalid)?;
    let outer = rim_edge_count(base, Side::Outer);
    if outer < 2 && dh > dg {
        return Err(ConstructError::TooFewRimEdges {
            side: Side::Outer,
            found: outer,
        });
    }
    let (lambda, mu) = (dk / dg - 1, dh / dk - 1);
    let mut pieces = Vec::new();
    let mut joins = Vec::new();
    let mut cycle = base.to_vec();
    if mu > 0 {
        let inner = chain_stitch(m, &cycle, Side::Inner, b, mu + 1, false)?;
        cycle = inner.cycle;
        pieces = inner.pieces;
        joins = inner.joins;
    }
    if lambda > 0 {
        let outer = chain_stitch(m, &cycle, Side::Outer, a, lambda + 1, false)?;
        cycle = outer.cycle;
        pieces = outer.pieces;
        joins = outer.joins;
    }
    if pieces.is_empty() {
        return Ok((
            cycle.clone(),
            Stage::whole(Method::RemovalChain, (a, b), q, &cycle),
        ));
    }
    check_component_cycle(q, &cycle)?;
    let method = if mu > 0 && lambda > 0 {
        Method::RemovalDoubleChain
    } else {
        Method::RemovalChain
    };
    Ok((cycle, Stage::new(method, (a, b), q, pieces, joins)))
}

/// Hamilton cycle of connected `p` from a hamilton cycle `base` of the
/// component of `p - {a, b}` containing `u_0`. When that subgraph is
/// connected the base cycle is returned as is.
pub fn stitch_removal(
    p: &BicirculantParams,
    a: usize,
    b: usize,
    base: &[Vertex],
) -> Result<(CycleCertificate, ConstructionTrace), ConstructError> {
    if p.component_count() != 1 {
        return Err(ConstructError::PreconditionViolated(
            "graph is disconnected".into(),
        ));
    }
    let (cycle, stage) = removal_component(p, a, b, base)?;
    let cert = verify_certificate(p, &cycle)
        .map_err(|e| ConstructError::InternalStitchFailure(e.to_string()))?;
    let mut trace = ConstructionTrace::new(stage.method);
    trace.push(stage);
    Ok((cert, trace))
}
