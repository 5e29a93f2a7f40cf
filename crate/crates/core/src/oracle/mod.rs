//! Exact and heuristic hamiltonicity search.

mod exact;
mod graph;
mod heuristic;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::{BicirculantParams, EdgeKind, Vertex};
use exact::SearchOutcome;
pub(crate) use graph::SearchGraph;

/// Search limits shared by every oracle entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_millis: u64,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 50_000_000,
            max_millis: 60_000,
            seed: 1,
        }
    }
}

impl SearchBudget {
    pub fn with_nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes,
            ..Self::default()
        }
    }
}

/// Lower bounds per edge class and edge kinds the cycle may not use.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Constraints {
    pub min_outer: usize,
    pub min_inner: usize,
    pub min_spoke: usize,
    pub forbidden: Vec<EdgeKind>,
}

impl Constraints {
    pub fn min_outer(k: usize) -> Self {
        Constraints {
            min_outer: k,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search budget exhausted before a decision")]
    BudgetExceeded,
    #[error("{0} and {1} lie in different components")]
    DifferentComponents(Vertex, Vertex),
    #[error("endpoints coincide")]
    SameVertex,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),
}

fn into_result(g: &SearchGraph, out: SearchOutcome) -> Result<Option<Vec<Vertex>>, OracleError> {
    match out {
        SearchOutcome::Found(ids) => Ok(Some(g.to_vertices(&ids))),
        SearchOutcome::Exhausted => Ok(None),
        SearchOutcome::OutOfBudget => Err(OracleError::BudgetExceeded),
    }
}

/// A hamilton cycle of `p` meeting `constraints`, `Ok(None)` after a
/// complete search, or `BudgetExceeded`. Disconnected graphs give `Ok(None)`.
pub fn find_cycle_exact(
    p: &BicirculantParams,
    constraints: &Constraints,
    budget: SearchBudget,
) -> Result<Option<Vec<Vertex>>, OracleError> {
    if p.component_count() != 1 {
        return Ok(None);
    }
    component_cycle(p, 0, constraints, budget)
}

/// A hamilton cycle of one component of `p` (possibly disconnected, possibly
/// irregular).
pub(crate) fn component_cycle(
    p: &BicirculantParams,
    component: usize,
    constraints: &Constraints,
    budget: SearchBudget,
) -> Result<Option<Vec<Vertex>>, OracleError> {
    let g = SearchGraph::component(p, component, &constraints.forbidden);
    into_result(&g, exact::search_cycle(&g, constraints, budget))
}

/// A hamilton path from `x` to `y` through the component containing both.
pub fn find_path_between(
    p: &BicirculantParams,
    x: Vertex,
    y: Vertex,
    budget: SearchBudget,
) -> Result<Option<Vec<Vertex>>, OracleError> {
    for v in [x, y] {
        if !p.contains_vertex(v) {
            return Err(OracleError::VertexOutOfRange(v));
        }
    }
    if x == y {
        return Err(OracleError::SameVertex);
    }
    let delta = p.component_count();
    if x.index % delta != y.index % delta {
        return Err(OracleError::DifferentComponents(x, y));
    }
    let g = SearchGraph::component(p, x.index % delta, &[]);
    let (from, to) = (g.local(x).unwrap() as u32, g.local(y).unwrap() as u32);
    if g.len() == 2 {
        return Ok(g.adj[from as usize].contains(&to).then(|| vec![x, y]));
    }
    into_result(&g, exact::search_path(&g, from, to, budget))
}

/// Randomized search; `None` only means the budget ran out.
pub fn find_cycle_heuristic(p: &BicirculantParams, budget: SearchBudget) -> Option<Vec<Vertex>> {
    if p.component_count() != 1 {
        return None;
    }
    let g = SearchGraph::component(p, 0, &[]);
    heuristic::search(&g, budget).map(|ids| g.to_vertices(&ids))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::params::{generalized_petersen, make_params};

    fn gp(m: usize, k: usize) -> BicirculantParams {
        generalized_petersen(m, k).unwrap()
    }

    #[test]
    fn petersen_has_no_cycle() {
        let r = find_cycle_exact(&gp(5, 2), &Constraints::default(), SearchBudget::default());
        assert_eq!(r, Ok(None));
    }

    #[test]
    fn gp11_has_no_cycle() {
        let r = find_cycle_exact(&gp(11, 2), &Constraints::default(), SearchBudget::default());
        assert_eq!(r, Ok(None));
    }

    #[test]
    fn gp7_cycle_verifies() {
        let p = gp(7, 2);
        let c = find_cycle_exact(&p, &Constraints::default(), SearchBudget::default())
            .unwrap()
            .unwrap();
        verify_certificate(&p, &c).unwrap();
    }

    #[test]
    fn min_outer_is_honoured() {
        let p = make_params(8, &[1, 7], &[0, 4], &[3, 5]).unwrap();
        let c = find_cycle_exact(&p, &Constraints::min_outer(4), SearchBudget::default())
            .unwrap()
            .unwrap();
        assert!(verify_certificate(&p, &c).unwrap().counts().outer >= 4);
    }

    #[test]
    fn forbidden_kinds_are_skipped() {
        let p = make_params(6, &[1, 5], &[0, 3], &[1, 5]).unwrap();
        let cons = Constraints {
            forbidden: vec![EdgeKind::SpokeType(3)],
            ..Default::default()
        };
        let c = find_cycle_exact(&p, &cons, SearchBudget::default())
            .unwrap()
            .unwrap();
        for w in c.windows(2) {
            assert_ne!(p.classify_edge(w[0], w[1]).unwrap(), EdgeKind::SpokeType(3));
        }
    }

    #[test]
    fn disconnected_gives_none() {
        let p = make_params(6, &[2, 4], &[0, 2], &[2, 4]).unwrap();
        assert_eq!(
            find_cycle_exact(&p, &Constraints::default(), SearchBudget::default()),
            Ok(None)
        );
    }

    #[test]
    fn tiny_budget_reports_exhaustion() {
        let r = find_cycle_exact(
            &gp(11, 2),
            &Constraints::default(),
            SearchBudget::with_nodes(5),
        );
        assert_eq!(r, Err(OracleError::BudgetExceeded));
    }

    #[test]
    fn petersen_path_between_nonadjacent() {
        let p = gp(5, 2);
        let path = find_path_between(
            &p,
            Vertex::outer(0),
            Vertex::outer(2),
            SearchBudget::default(),
        )
        .unwrap()
        .unwrap();
        assert_eq!(path.len(), 10);
        assert_eq!((path[0], path[9]), (Vertex::outer(0), Vertex::outer(2)));
        for w in path.windows(2) {
            assert!(p.is_edge(w[0], w[1]));
        }
    }

    #[test]
    fn k2_path() {
        let p = make_params(1, &[], &[0], &[]).unwrap();
        let path = find_path_between(
            &p,
            Vertex::outer(0),
            Vertex::inner(0),
            SearchBudget::default(),
        );
        assert_eq!(path, Ok(Some(vec![Vertex::outer(0), Vertex::inner(0)])));
    }

    #[test]
    fn path_endpoint_errors() {
        let p = make_params(6, &[2, 4], &[0, 2], &[2, 4]).unwrap();
        let b = SearchBudget::default();
        assert_eq!(
            find_path_between(&p, Vertex::outer(0), Vertex::outer(0), b),
            Err(OracleError::SameVertex)
        );
        assert!(matches!(
            find_path_between(&p, Vertex::outer(0), Vertex::outer(1), b),
            Err(OracleError::DifferentComponents(..))
        ));
    }

    #[test]
    fn heuristic_finds_gp7_and_not_petersen() {
        let p = gp(7, 2);
        let c = find_cycle_heuristic(&p, SearchBudget::default()).unwrap();
        verify_certificate(&p, &c).unwrap();
        assert!(find_cycle_heuristic(&gp(5, 2), SearchBudget::with_nodes(200_000)).is_none());
    }

    #[test]
    fn heuristic_is_reproducible() {
        let p = make_params(30, &[1, 29], &[0, 7], &[4, 26]).unwrap();
        let b = SearchBudget::default();
        assert_eq!(find_cycle_heuristic(&p, b), find_cycle_heuristic(&p, b));
    }
}
