//! Prism traversal across the `m/2` edges.
//!
//! When removing the `m/2` types splits a component into two translates by
//! `m/2`, the component is the cartesian product of one half with `K_2`. A
//! hamilton path `x_0..x_n` of one half gives the cycle
//! `x_0..x_n, x_n + m/2, .., x_0 + m/2`.

use std::collections::HashSet;

use super::{check_component_cycle, shift_all, ConstructError, Method, Stage};
use crate::certificate::{verify_certificate, CycleCertificate};
use crate::params::{BicirculantParams, Side, Vertex};

/// Lifts a hamilton path (or cycle) of the half of `q`'s component 0 that
/// contains `u_0`.
pub(crate) fn lift_component(
    q: &BicirculantParams,
    path: &[Vertex],
) -> Result<(Vec<Vertex>, Stage), ConstructError> {
    let m = q.m();
    let half = q
        .half()
        .filter(|_| q.has_half(Side::Outer) && q.has_half(Side::Inner))
        .ok_or_else(|| ConstructError::WrongShape("m/2 is not an outer and inner type".into()))?;
    let h = q.without_types(&[half], &[half]);
    let (dq, dh) = (q.component_count(), h.component_count());
    if dh != 2 * dq {
        return Err(ConstructError::WrongShape(format!(
            "removing m/2 gives {} components per component, expected 2",
            dh / dq
        )));
    }
    let expected = 2 * m / dh;
    if path.len() != expected {
        return Err(ConstructError::PathInvalid(format!(
            "expected {expected} vertices, got {}",
            path.len()
        )));
    }
    let mut seen = HashSet::new();
    for &v in path {
        if !q.contains_vertex(v) || v.index % dh != 0 {
            return Err(ConstructError::PathInvalid(format!(
                "{v} is outside the component"
            )));
        }
        if !seen.insert(v) {
            return Err(ConstructError::PathInvalid(format!("{v} repeats")));
        }
    }
    if let Some(w) = path.windows(2).find(|w| !h.is_edge(w[0], w[1])) {
        return Err(ConstructError::PathInvalid(format!(
            "{}-{} is not an edge",
            w[0], w[1]
        )));
    }
    let mut back = shift_all(path, half, m);
    back.reverse();
    let joins = vec![
        (path[path.len() - 1], back[0]),
        (back[back.len() - 1], path[0]),
    ];
    let mut cycle = path.to_vec();
    cycle.extend(&back);
    check_component_cycle(q, &cycle)?;
    let stage = Stage::new(
        Method::PrismLift,
        (half, half),
        q,
        vec![path.to_vec(), back],
        joins,
    );
    Ok((cycle, stage))
}

/// Hamilton cycle of connected `p` (with `m/2` in `R` and `T`) from a
/// hamilton path or cycle of the half containing `u_0`.
pub fn k2_lift(p: &BicirculantParams, path: &[Vertex]) -> Result<CycleCertificate, ConstructError> {
    if p.component_count() != 1 {
        return Err(ConstructError::WrongShape("graph is disconnected".into()));
    }
    let (cycle, _) = lift_component(p, path)?;
    verify_certificate(p, &cycle).map_err(|e| ConstructError::InternalStitchFailure(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{component_cycle, Constraints, SearchBudget};
    use crate::params::make_params;

    #[test]
    fn smallest_prism() {
        let p = make_params(2, &[1], &[0], &[1]).unwrap();
        let c = k2_lift(&p, &[Vertex::outer(0), Vertex::inner(0)]).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.counts().spoke, 2);
    }

    #[test]
    fn lifted_cycle_uses_two_half_edges() {
        let p = make_params(6, &[3], &[0, 2], &[3]).unwrap();
        let h = p.without_types(&[3], &[3]);
        let base = component_cycle(&h, 0, &Constraints::default(), SearchBudget::default())
            .unwrap()
            .unwrap();
        let c = k2_lift(&p, &base).unwrap();
        assert_eq!(c.len(), 12);
        let halves = c.edges().filter(|&(x, y)| x.side == y.side).count();
        assert_eq!(halves, 2);
    }

    #[test]
    fn rejects_wrong_shapes() {
        let p = make_params(4, &[2], &[0], &[2]).unwrap();
        assert!(matches!(
            k2_lift(&p, &[Vertex::outer(0), Vertex::inner(0)]),
            Err(ConstructError::WrongShape(_))
        ));
        let q = make_params(6, &[3], &[0, 2], &[3]).unwrap();
        let bad = [
            Vertex::outer(0),
            Vertex::inner(0),
            Vertex::outer(4),
            Vertex::inner(4),
            Vertex::outer(2),
            Vertex::outer(0),
        ];
        assert!(matches!(
            k2_lift(&q, &bad),
            Err(ConstructError::PathInvalid(_))
        ));
    }
}
