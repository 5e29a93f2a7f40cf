//! Graphs with exactly one spoke per vertex, by induction on the degree.
//!
//! Cubic graphs come from the exhaustive search, with `K_2` and the
//! generalized Petersen graphs `GP(m, 2)`, `m ≡ 5 (mod 6)`, recognized as
//! exceptions. For odd degree a pair `(a, b)` is removed and the components
//! of the remainder are solved recursively on their quotient, then chained.
//! For even degree the `m/2` types are removed and the result lifted.

use serde::Serialize;

use super::{
    chain_stitch, check_component_cycle, lift_component, lift_from_quotient, removal_component,
    ConstructError, ConstructionTrace, Method, Stage,
};
use crate::arith::gcd;
use crate::certificate::{verify_certificate, CycleCertificate};
use crate::oracle::{component_cycle, find_path_between, Constraints, SearchBudget};
use crate::params::{BicirculantParams, Side, Vertex};
use crate::structure::decompose;

/// Known non-hamiltonian connected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExceptionKind {
    K2,
    #[serde(rename = "alspach-gp")]
    AlspachGP,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum S1Outcome {
    Hamiltonian(CycleCertificate, ConstructionTrace),
    Exception(ExceptionKind),
    CannotApply(String),
}

enum Solved {
    Cycle(Vec<Vertex>, ConstructionTrace),
    Exception(ExceptionKind),
    Stuck(String),
}

fn is_unit(x: usize, m: usize) -> bool {
    gcd(x, m) == 1
}

/// Whether a connected cubic `B(m; ±j, 0, ±k)` is isomorphic to `GP(m, 2)`
/// with `m ≡ 5 (mod 6)`.
pub(crate) fn is_alspach_alias(p: &BicirculantParams) -> bool {
    let m = p.m();
    if m % 6 != 5 || p.spokes().len() != 1 || p.outer().len() != 2 || p.inner().len() != 2 {
        return false;
    }
    let (j, k) = (p.outer()[0], p.inner()[0]);
    let pm = |x: usize, y: usize| (2 * x) % m == y || (2 * x + y).is_multiple_of(m);
    (is_unit(j, m) || is_unit(k, m)) && (pm(j, k) || pm(k, j))
}

pub(crate) fn is_canonical_alspach(p: &BicirculantParams) -> bool {
    let m = p.m();
    let one = [1, m - 1];
    let two = [2, m - 2];
    m % 6 == 5 && p.spokes() == [0] && {
        let (r, t) = (p.outer(), p.inner());
        (r == one && t == two) || (r == two && t == one)
    }
}

/// Classifies a graph with `|S| = 1` and builds a hamilton cycle when one
/// exists.
pub fn s1_classify_construct(
    p: &BicirculantParams,
    budget: SearchBudget,
) -> Result<S1Outcome, ConstructError> {
    if p.spokes().len() != 1 {
        return Err(ConstructError::PreconditionViolated(
            "more than one spoke type".into(),
        ));
    }
    if p.component_count() != 1 {
        return Err(ConstructError::PreconditionViolated(
            "graph is disconnected".into(),
        ));
    }
    Ok(match solve(p, budget)? {
        Solved::Cycle(c, trace) => {
            let cert = verify_certificate(p, &c)
                .map_err(|e| ConstructError::InternalStitchFailure(e.to_string()))?;
            S1Outcome::Hamiltonian(cert, trace)
        }
        Solved::Exception(k) => S1Outcome::Exception(k),
        Solved::Stuck(why) => S1Outcome::CannotApply(why),
    })
}

/// `q` is connected with `S = {0}`.
fn solve(q: &BicirculantParams, budget: SearchBudget) -> Result<Solved, ConstructError> {
    if q.is_k2() {
        return Ok(Solved::Exception(ExceptionKind::K2));
    }
    let d = q.degree();
    if d <= 3 {
        if is_canonical_alspach(q) {
            return Ok(Solved::Exception(ExceptionKind::AlspachGP));
        }
        return Ok(
            match component_cycle(q, 0, &Constraints::default(), budget)? {
                Some(c) => {
                    let mut trace = ConstructionTrace::new(Method::SingleSpokeInduction);
                    trace.push(Stage::whole(Method::Oracle, (0, 0), q, &c));
                    Solved::Cycle(c, trace)
                }
                None if is_alspach_alias(q) => Solved::Exception(ExceptionKind::AlspachGP),
                None => Solved::Stuck(format!("exhaustive search found no cycle in {q}")),
            },
        );
    }
    if d % 2 == 1 {
        odd_degree(q, budget)
    } else {
        even_degree(q, budget)
    }
}

fn sub_solve(
    h: &BicirculantParams,
    budget: SearchBudget,
) -> Result<(usize, BicirculantParams, Solved), ConstructError> {
    let dec = decompose(h);
    let solved = solve(&dec.quotient, budget)?;
    Ok((dec.delta, dec.quotient, solved))
}

fn odd_degree(q: &BicirculantParams, budget: SearchBudget) -> Result<Solved, ConstructError> {
    let mut reasons = Vec::new();
    for a in q.rim_reps(Side::Outer) {
        for b in q.rim_reps(Side::Inner) {
            let h = q.without_types(&[a], &[b]);
            let (delta, quotient, solved) = sub_solve(&h, budget)?;
            match solved {
                Solved::Cycle(c, sub) => {
                    let base = lift_from_quotient(&c, delta);
                    match removal_component(q, a, b, &base) {
                        Ok((cycle, stage)) => {
                            let mut trace = ConstructionTrace::new(Method::SingleSpokeInduction);
                            trace.note(format!(
                                "removed ({a}, {b}), components solved on {quotient}"
                            ));
                            trace.extend(sub);
                            trace.push(stage);
                            return Ok(Solved::Cycle(cycle, trace));
                        }
                        Err(e) => reasons.push(format!("({a}, {b}): {e}")),
                    }
                }
                Solved::Exception(ExceptionKind::AlspachGP) => {
                    match alspach_escape(q, &h, a, b, budget)? {
                        Some((cycle, trace)) => return Ok(Solved::Cycle(cycle, trace)),
                        None => {
                            reasons.push(format!("({a}, {b}): exceptional components, no escape"))
                        }
                    }
                }
                Solved::Exception(ExceptionKind::K2) => {
                    reasons.push(format!("({a}, {b}): single-edge components"))
                }
                Solved::Stuck(why) => reasons.push(format!("({a}, {b}): {why}")),
            }
        }
    }
    Ok(Solved::Stuck(format!(
        "no type pair of {q} works: {}",
        reasons.join("; ")
    )))
}

/// Components of `h = q - {a, b}` are exceptional: joins hamilton paths of
/// those components directly.
fn alspach_escape(
    q: &BicirculantParams,
    h: &BicirculantParams,
    a: usize,
    b: usize,
    budget: SearchBudget,
) -> Result<Option<(Vec<Vertex>, ConstructionTrace)>, ConstructError> {
    let m = q.m();
    let mut trace = ConstructionTrace::new(Method::SingleSpokeInduction);
    trace.note(format!("components of {h} are exceptional"));
    let (dq, dk, dh) = (
        q.component_count(),
        q.without_types(&[a], &[]).component_count(),
        h.component_count(),
    );
    if dh == dq {
        let Some(path) = find_path_between(h, Vertex::outer(0), Vertex::outer(a), budget)? else {
            return Ok(None);
        };
        check_component_cycle(q, &path)?;
        let closing = (Vertex::outer(a), Vertex::outer(0));
        trace.push(Stage::new(
            Method::SingleSpokeInduction,
            (a, b),
            q,
            vec![path.clone()],
            vec![closing],
        ));
        return Ok(Some((path, trace)));
    }
    let (lambda, mu) = (dk / dq - 1, dh / dk - 1);
    let open_path = |side: Side| -> Result<Option<Vec<Vertex>>, ConstructError> {
        let start = Vertex { side, index: 0 };
        for k in 1..m / dh {
            let end = Vertex {
                side,
                index: k * dh,
            };
            if h.is_edge(start, end) {
                continue;
            }
            if let Some(p) = find_path_between(h, start, end, budget)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    };
    let cycle = if mu == 0 && lambda % 2 == 1 {
        let Some(path) = open_path(Side::Outer)? else {
            return Ok(None);
        };
        let chained = chain_stitch(m, &path, Side::Outer, a, lambda + 1, true)?;
        trace.push(Stage::new(
            Method::RemovalChain,
            (a, b),
            q,
            chained.pieces,
            chained.joins,
        ));
        chained.cycle
    } else if mu % 2 == 1 {
        let Some(path) = open_path(Side::Inner)? else {
            return Ok(None);
        };
        let k = q.without_types(&[a], &[]);
        let inner = chain_stitch(m, &path, Side::Inner, b, mu + 1, true)?;
        check_component_cycle(&k, &inner.cycle)?;
        trace.push(Stage::new(
            Method::RemovalChain,
            (a, b),
            &k,
            inner.pieces,
            inner.joins,
        ));
        if lambda > 0 {
            let outer = chain_stitch(m, &inner.cycle, Side::Outer, a, lambda + 1, false)?;
            trace.push(Stage::new(
                Method::RemovalDoubleChain,
                (a, b),
                q,
                outer.pieces,
                outer.joins,
            ));
            outer.cycle
        } else {
            inner.cycle
        }
    } else {
        return Ok(None);
    };
    check_component_cycle(q, &cycle)?;
    Ok(Some((cycle, trace)))
}

fn even_degree(q: &BicirculantParams, budget: SearchBudget) -> Result<Solved, ConstructError> {
    let Some(half) = q
        .half()
        .filter(|_| q.has_half(Side::Outer) && q.has_half(Side::Inner))
    else {
        return Ok(Solved::Stuck(format!(
            "{q} has even degree without m/2 on both sides"
        )));
    };
    let h = q.without_types(&[half], &[half]);
    let (delta, quotient, solved) = sub_solve(&h, budget)?;
    let mut trace = ConstructionTrace::new(Method::SingleSpokeInduction);
    trace.note(format!("removed m/2, components solved on {quotient}"));
    if delta == 1 {
        return Ok(match solved {
            Solved::Cycle(c, sub) => {
                trace.extend(sub);
                Solved::Cycle(c, trace)
            }
            other => other,
        });
    }
    let base = match solved {
        Solved::Cycle(c, sub) => {
            trace.extend(sub);
            lift_from_quotient(&c, delta)
        }
        Solved::Exception(ExceptionKind::AlspachGP) => {
            let n = quotient.m();
            let mut found = None;
            for k in 2..n {
                if let Some(p) =
                    find_path_between(&quotient, Vertex::outer(0), Vertex::outer(k), budget)?
                {
                    found = Some(p);
                    break;
                }
            }
            match found {
                Some(p) => lift_from_quotient(&p, delta),
                None => return Ok(Solved::Stuck(format!("no hamilton path in {quotient}"))),
            }
        }
        other => return Ok(other),
    };
    let (cycle, stage) = lift_component(q, &base)?;
    trace.push(stage);
    Ok(Solved::Cycle(cycle, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{generalized_petersen, make_params};

    fn classify(p: &BicirculantParams) -> S1Outcome {
        s1_classify_construct(p, SearchBudget::default()).unwrap()
    }

    #[test]
    fn exceptions() {
        assert_eq!(
            classify(&generalized_petersen(11, 2).unwrap()),
            S1Outcome::Exception(ExceptionKind::AlspachGP)
        );
        assert_eq!(
            classify(&generalized_petersen(5, 2).unwrap()),
            S1Outcome::Exception(ExceptionKind::AlspachGP)
        );
        let k2 = make_params(1, &[], &[0], &[]).unwrap();
        assert_eq!(classify(&k2), S1Outcome::Exception(ExceptionKind::K2));
    }

    #[test]
    fn alias_of_petersen_family() {
        // I(11, 3, 5): 3 is a unit and 5 ≡ -2·3
        let p = make_params(11, &[3, 8], &[0], &[5, 6]).unwrap();
        assert!(is_alspach_alias(&p));
        assert_eq!(classify(&p), S1Outcome::Exception(ExceptionKind::AlspachGP));
        assert!(!is_alspach_alias(&generalized_petersen(11, 3).unwrap()));
    }

    #[test]
    fn cubic_hamiltonian() {
        assert!(matches!(
            classify(&generalized_petersen(7, 2).unwrap()),
            S1Outcome::Hamiltonian(..)
        ));
    }

    #[test]
    fn odd_degree_induction() {
        let p = make_params(7, &[1, 6, 2, 5], &[0], &[3, 4, 2, 5]).unwrap();
        let S1Outcome::Hamiltonian(cert, trace) = classify(&p) else {
            panic!()
        };
        assert_eq!(cert.len(), 14);
        assert_eq!(trace.method, Method::SingleSpokeInduction);
    }

    #[test]
    fn even_degree_lift() {
        let p = make_params(6, &[3, 1, 5], &[0], &[3, 2, 4]).unwrap();
        assert!(matches!(classify(&p), S1Outcome::Hamiltonian(..)));
    }

    #[test]
    fn exceptional_components_escape() {
        // removing (1, 1) leaves two copies of GP(11, 2)
        let p = make_params(22, &[1, 21, 2, 20], &[0], &[1, 21, 4, 18]).unwrap();
        assert!(matches!(classify(&p), S1Outcome::Hamiltonian(..)));
        // removing m/2 leaves two copies of GP(11, 2)
        let q = make_params(22, &[2, 20, 11], &[0], &[4, 18, 11]).unwrap();
        assert!(matches!(classify(&q), S1Outcome::Hamiltonian(..)));
    }
}
