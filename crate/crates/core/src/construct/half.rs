//! Graphs with `m/2` in both `R` and `T` and at least three spokes.
//!
//! `G' = B(m; m/2, S, m/2)` has `gcd(m/2, S)` components. With one component
//! the prism lift applies. Otherwise an outer type `a` links the components
//! of `G'` cyclically and hamilton paths `u_0 -> u_{m/2}` in each are joined
//! in a zig-zag. If no type is coprime to `gcd(m/2, S)` the zig-zag only
//! covers a component of `B(m; {±a, m/2}, S, m/2)` and the result is chained
//! along an inner type `b`, then extended by removal steps.

use super::{
    assemble, chain_stitch, check_component_cycle, lift_component, removal_component, shift_all,
    swap_all, ConstructError, ConstructionTrace, Method, Stage,
};
use crate::arith::gcd;
use crate::certificate::{verify_certificate, CycleCertificate};
use crate::oracle::{component_cycle, find_path_between, Constraints, SearchBudget};
use crate::params::{BicirculantParams, Side, Vertex};

fn path(
    q: &BicirculantParams,
    x: Vertex,
    y: Vertex,
    budget: SearchBudget,
) -> Result<Vec<Vertex>, ConstructError> {
    find_path_between(q, x, y, budget)?
        .ok_or_else(|| ConstructError::OracleFailed(format!("no hamilton path {x} -> {y} in {q}")))
}

/// Zig-zag through the `G'` components inside the component of
/// `q = B(m; {±a, m/2}, S, {m/2})` containing `u_0`.
pub(crate) fn zigzag_component(
    q: &BicirculantParams,
    a: usize,
    budget: SearchBudget,
) -> Result<(Vec<Vertex>, Stage), ConstructError> {
    let m = q.m();
    let h = m / 2;
    let g2 = gcd(h, q.spoke_gcd());
    let copies = g2 / gcd(g2, a);
    if copies < 2 {
        return Err(ConstructError::PreconditionViolated(format!(
            "type {a} stays inside one component"
        )));
    }
    let lambda = copies - 1;
    let gp = BicirculantParams::subgraph(m, &[h], q.spokes(), &[h]);
    let u = Vertex::outer;
    let at = |k: usize| (k * a) % m;
    let neg_a = m - a;

    let last_start = if lambda.is_multiple_of(2) {
        at(lambda)
    } else {
        (h + at(lambda)) % m
    };
    let collision = relabeled_entry(q, a);
    let x = match collision {
        Some(Some(x)) => x,
        Some(None) => {
            return Err(ConstructError::PreconditionViolated(
                "components too small to relabel".into(),
            ))
        }
        None => 0,
    };
    let collision = collision.is_some();

    let main = path(&gp, u(0), u(h), budget)?;
    let mut pieces: Vec<Vec<Vertex>> = (0..lambda).map(|i| shift_all(&main, at(i), m)).collect();
    let mut joins = Vec::new();
    for i in 0..lambda {
        let v = if i % 2 == 0 { h } else { 0 };
        joins.push((u((v + at(i)) % m), u((v + at(i + 1)) % m)));
    }
    let last = if collision {
        let rep = if lambda.is_multiple_of(2) {
            path(&gp, u(x), u(h), budget)?
        } else {
            path(&gp, u(0), u(x), budget)?
        };
        pieces[lambda - 1] = shift_all(&rep, at(lambda - 1), m);
        let entry = (x + at(lambda - 1)) % m;
        joins[lambda - 1] = (u(entry), u((x + at(lambda)) % m));
        path(&gp, u((x + at(lambda)) % m), u(neg_a), budget)?
    } else {
        path(&gp, u(last_start), u(neg_a), budget)?
    };
    pieces.push(last);
    joins.push((u(0), u(neg_a)));
    let cycle = assemble(&pieces, &joins).map_err(ConstructError::InternalStitchFailure)?;
    check_component_cycle(q, &cycle)?;
    Ok((
        cycle,
        Stage::new(Method::HalfTypeZigzag, (a, h), q, pieces, joins),
    ))
}

/// `Some` when `u_{-a}` coincides with the start of the last zig-zag path,
/// holding the replacement subscript if the component has one.
fn relabeled_entry(q: &BicirculantParams, a: usize) -> Option<Option<usize>> {
    let m = q.m();
    let h = m / 2;
    let g2 = gcd(h, q.spoke_gcd());
    let lambda = g2 / gcd(g2, a) - 1;
    let last_start = if lambda.is_multiple_of(2) {
        (lambda * a) % m
    } else {
        (h + lambda * a) % m
    };
    (last_start == m - a).then(|| (1..m / g2).map(|k| k * g2).find(|&x| x != h))
}

fn pick_type(
    p: &BicirculantParams,
    g2: usize,
    want: impl Fn(usize) -> bool,
) -> Option<(Side, usize)> {
    let h = p.half();
    [Side::Outer, Side::Inner].into_iter().find_map(|s| {
        p.rim_reps(s)
            .into_iter()
            .find(|&x| Some(x) != h && want(gcd(g2, x)))
            .map(|x| (s, x))
    })
}

/// Hamilton cycle of a connected `B(m; R, S, T)` with `m/2 ∈ R ∩ T` and
/// `|S| >= 3`.
pub fn half_type_construct(
    p: &BicirculantParams,
    budget: SearchBudget,
) -> Result<(CycleCertificate, ConstructionTrace), ConstructError> {
    let m = p.m();
    if m % 2 == 1 || m < 4 {
        return Err(ConstructError::HypothesisUnmet(
            "m must be even and at least 4".into(),
        ));
    }
    if !(p.has_half(Side::Outer) && p.has_half(Side::Inner)) {
        return Err(ConstructError::HypothesisUnmet(
            "m/2 is not in both R and T".into(),
        ));
    }
    if p.spokes().len() < 3 {
        return Err(ConstructError::HypothesisUnmet(
            "fewer than three spoke types".into(),
        ));
    }
    if p.component_count() != 1 {
        return Err(ConstructError::HypothesisUnmet(
            "graph is disconnected".into(),
        ));
    }
    let h = m / 2;
    let g = p.spoke_gcd();
    let g2 = gcd(h, g);

    if g == 1 {
        let haar = BicirculantParams::subgraph(m, &[], p.spokes(), &[]);
        let c = component_cycle(&haar, 0, &Constraints::default(), budget)?
            .ok_or_else(|| ConstructError::OracleFailed(format!("{haar} has no hamilton cycle")))?;
        let mut trace = ConstructionTrace::new(Method::Oracle);
        trace.push(Stage::whole(Method::Oracle, (0, 0), &haar, &c));
        return finish(p, c, trace);
    }
    if g2 == 1 {
        let haar = BicirculantParams::subgraph(m, &[], p.spokes(), &[]);
        let base =
            component_cycle(&haar, 0, &Constraints::default(), budget)?.ok_or_else(|| {
                ConstructError::OracleFailed(format!("{haar} has no hamilton cycle on component 0"))
            })?;
        let gp = BicirculantParams::subgraph(m, &[h], p.spokes(), &[h]);
        let (c, stage) = lift_component(&gp, &base)?;
        let mut trace = ConstructionTrace::new(Method::PrismLift);
        trace.push(stage);
        return finish(p, c, trace);
    }

    let (side, a, extended) = match pick_type(p, g2, |d| d == 1) {
        Some((s, a)) => (s, a, false),
        None => {
            let (s, a) = pick_type(p, g2, |d| d < g2).ok_or_else(|| {
                ConstructError::InternalStitchFailure("connected graph with no linking type".into())
            })?;
            (s, a, true)
        }
    };
    let work = if side == Side::Inner {
        p.swap_sides()
    } else {
        p.clone()
    };
    let method = if extended {
        Method::HalfTypeExtended
    } else {
        Method::HalfTypeZigzag
    };
    let mut trace = ConstructionTrace::new(method);
    if side == Side::Inner {
        trace.note("sides exchanged, stages use swapped labels");
    }

    let mut q = BicirculantParams::subgraph(m, &[a, m - a, h], work.spokes(), &[h]);
    let (mut cycle, stage) = match zigzag_component(&q, a, budget) {
        Ok(found) => {
            if let Some(Some(x)) = relabeled_entry(&q, a) {
                let copies = g2 / gcd(g2, a);
                trace.note(format!(
                    "relabeled: u_-{a} ends the last of {copies} paths, entry moved to u_{x}"
                ));
            }
            found
        }
        Err(ConstructError::OracleFailed(why)) => {
            // bipartite components of G' are not hamilton-connected
            trace.note(format!(
                "zig-zag unavailable ({why}), component cycle of {q} from the oracle"
            ));
            let c = component_cycle(&q, 0, &Constraints::default(), budget)?.ok_or_else(|| {
                ConstructError::OracleFailed(format!("{q} has no hamilton cycle on component 0"))
            })?;
            let stage = Stage::whole(Method::Oracle, (a, h), &q, &c);
            (c, stage)
        }
        Err(e) => return Err(e),
    };
    trace.push(stage);
    if extended {
        let b = *work
            .rim_reps(Side::Inner)
            .iter()
            .find(|&&b| b != h)
            .ok_or_else(|| {
                ConstructError::InternalStitchFailure("no inner type besides m/2".into())
            })?;
        let l1 = q.with_types(&[], &[b]);
        let copies = q.component_count() / l1.component_count();
        if copies > 1 {
            let chained = chain_stitch(m, &cycle, Side::Inner, b, copies, false)?;
            check_component_cycle(&l1, &chained.cycle)?;
            cycle = chained.cycle;
            trace.push(Stage::new(
                Method::RemovalChain,
                (a, b),
                &l1,
                chained.pieces,
                chained.joins,
            ));
        }
        q = l1;
        let outer: Vec<usize> = work
            .rim_reps(Side::Outer)
            .into_iter()
            .filter(|&x| x != a && x != h)
            .collect();
        let inner: Vec<usize> = work
            .rim_reps(Side::Inner)
            .into_iter()
            .filter(|&x| x != b && x != h)
            .collect();
        for (x, y) in outer.into_iter().zip(inner) {
            q = q.with_types(&[x], &[y]);
            let (next, stage) = removal_component(&q, x, y, &cycle)?;
            cycle = next;
            trace.push(stage);
        }
    }
    if side == Side::Inner {
        cycle = swap_all(&cycle);
    }
    finish(p, cycle, trace)
}

fn finish(
    p: &BicirculantParams,
    cycle: Vec<Vertex>,
    trace: ConstructionTrace,
) -> Result<(CycleCertificate, ConstructionTrace), ConstructError> {
    let cert = verify_certificate(p, &cycle)
        .map_err(|e| ConstructError::InternalStitchFailure(e.to_string()))?;
    Ok((cert, trace))
}
