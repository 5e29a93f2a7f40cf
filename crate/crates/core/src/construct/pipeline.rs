//! Greedy type removal followed by repeated stitching.
//!
//! Rim type pairs are removed from `G` while the graph stays connected,
//! coprime types first, giving a spanning subgraph `L`. The remaining pairs
//! `(a_1, b_1), .., (a_k, b_k)` define the chain `L_1 ⊂ .. ⊂ L_k`: `L_1` is
//! stitched from spoke components on a grid, every later step chains copies
//! along the new pair, and an `m/2` pair left in `L` is used by a prism lift.

use serde::Serialize;

use super::{
    haar_component, lift_component, removal_component, AnchorChoice, ConstructError,
    ConstructionTrace, Method, Stage,
};
use crate::arith::gcd;
use crate::certificate::{verify_certificate, CycleCertificate};
use crate::oracle::{component_cycle, Constraints, SearchBudget};
use crate::params::{BicirculantParams, Side};

/// How the pipeline decomposes a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelinePlan {
    /// Pairs removed from `G`, in removal order.
    pub removed: Vec<(usize, usize)>,
    /// Non-`m/2` pairs of `L`; the first one spans `L_1`.
    pub chain: Vec<(usize, usize)>,
    /// Whether `L` keeps the `m/2` pair.
    pub halves: bool,
}

fn non_half_reps(p: &BicirculantParams, side: Side) -> Vec<usize> {
    let h = p.half();
    p.rim_reps(side)
        .into_iter()
        .filter(|&x| Some(x) != h)
        .collect()
}

fn shares_factor(x: usize, g: usize) -> bool {
    gcd(x, g) > 1
}

fn sharing_count(p: &BicirculantParams, g: usize) -> usize {
    [Side::Outer, Side::Inner]
        .into_iter()
        .map(|s| {
            non_half_reps(p, s)
                .into_iter()
                .filter(|&x| shares_factor(x, g))
                .count()
        })
        .sum()
}

/// Checks the hypotheses and computes the removal order and chain.
pub fn plan_pipeline(p: &BicirculantParams) -> Result<PipelinePlan, ConstructError> {
    if p.component_count() != 1 {
        return Err(ConstructError::HypothesisUnmet(
            "graph is disconnected".into(),
        ));
    }
    if p.spokes().len() < 2 {
        return Err(ConstructError::HypothesisUnmet(
            "fewer than two spoke types".into(),
        ));
    }
    let g = p.spoke_gcd();
    if g == 1 {
        return Err(ConstructError::HypothesisUnmet(
            "spoke subgraph is connected".into(),
        ));
    }
    if sharing_count(p, g) == 0 {
        return Err(ConstructError::HypothesisUnmet(format!(
            "every rim type other than m/2 is coprime to gcd(m, S) = {g}"
        )));
    }

    let mut l = p.clone();
    let mut removed = Vec::new();
    loop {
        let mut candidates: Vec<(usize, (usize, usize))> = Vec::new();
        for a in non_half_reps(&l, Side::Outer) {
            for b in non_half_reps(&l, Side::Inner) {
                let score = usize::from(!shares_factor(a, g)) + usize::from(!shares_factor(b, g));
                candidates.push((2 - score, (a, b)));
            }
        }
        if let Some(h) = l
            .half()
            .filter(|_| l.has_half(Side::Outer) && l.has_half(Side::Inner))
        {
            candidates.push((2 - 2 * usize::from(!shares_factor(h, g)), (h, h)));
        }
        candidates.sort_unstable();
        let next = candidates
            .into_iter()
            .map(|(_, pair)| pair)
            .find(|&(a, b)| {
                let rest = l.without_types(&[a], &[b]);
                rest.component_count() == 1 && sharing_count(&rest, g) > 0
            });
        match next {
            Some((a, b)) => {
                l = l.without_types(&[a], &[b]);
                removed.push((a, b));
            }
            None => break,
        }
    }

    let outer = non_half_reps(&l, Side::Outer);
    let inner = non_half_reps(&l, Side::Inner);
    let halves = l
        .half()
        .is_some_and(|_| l.has_half(Side::Outer) && l.has_half(Side::Inner));
    let delta = |a: usize, b: usize| gcd(gcd(g, a), b);
    let grid_fits = |a: usize, b: usize| gcd(g, a) > delta(a, b) || gcd(g, b) > delta(a, b);
    let first = outer
        .iter()
        .flat_map(|&a| inner.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| grid_fits(a, b))
        .unwrap_or((outer[0], inner[0]));
    let mut rest_outer: Vec<usize> = outer.into_iter().filter(|&a| a != first.0).collect();
    let mut rest_inner: Vec<usize> = inner.into_iter().filter(|&b| b != first.1).collect();
    rest_outer.sort_unstable();
    rest_inner.sort_unstable();
    let mut chain = vec![first];
    chain.extend(rest_outer.into_iter().zip(rest_inner));
    Ok(PipelinePlan {
        removed,
        chain,
        halves,
    })
}

/// Hamilton cycle of `p` by the greedy removal pipeline.
pub fn pipeline_combination(
    p: &BicirculantParams,
    budget: SearchBudget,
) -> Result<(CycleCertificate, ConstructionTrace), ConstructError> {
    let plan = plan_pipeline(p)?;
    let mut trace = ConstructionTrace::new(Method::Pipeline);
    trace.note(format!("removal order {:?}", plan.removed));
    trace.note(format!(
        "chain {:?}, m/2 pair kept: {}",
        plan.chain, plan.halves
    ));
    let m = p.m();
    let h = BicirculantParams::subgraph(m, &[], p.spokes(), &[]);
    let base = component_cycle(&h, 0, &Constraints::default(), budget)?.ok_or_else(|| {
        ConstructError::HypothesisUnmet("spoke components are not hamiltonian".into())
    })?;

    let (a1, b1) = plan.chain[0];
    let mut q = BicirculantParams::subgraph(m, &[a1, m - a1], p.spokes(), &[b1, m - b1]);
    let (mut cycle, stage) = match haar_component(&q, &base, AnchorChoice::Default) {
        Ok(done) => done,
        Err(ConstructError::PreconditionViolated(why)) => {
            trace.note(format!(
                "grid stitch does not apply to {q} ({why}), using the exact search"
            ));
            let c =
                component_cycle(&q, 0, &Constraints::min_outer(2), budget)?.ok_or_else(|| {
                    ConstructError::OracleFailed(format!("no cycle with two outer edges in {q}"))
                })?;
            let stage = Stage::whole(Method::Oracle, (a1, b1), &q, &c);
            (c, stage)
        }
        Err(e) => return Err(e),
    };
    trace.push(stage);

    for &(a, b) in &plan.chain[1..] {
        q = q.with_types(&[a], &[b]);
        let (next, stage) = removal_component(&q, a, b, &cycle)?;
        cycle = next;
        trace.push(stage);
    }

    if q.component_count() > 1 {
        let half = m / 2;
        if !plan.halves {
            return Err(ConstructError::InternalStitchFailure(format!(
                "{q} is disconnected"
            )));
        }
        q = q.with_types(&[half], &[half]);
        let (next, stage) = lift_component(&q, &cycle)?;
        cycle = next;
        trace.push(stage);
    }
    let cert = verify_certificate(p, &cycle)
        .map_err(|e| ConstructError::InternalStitchFailure(e.to_string()))?;
    Ok((cert, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;

    fn run(p: &BicirculantParams) -> ConstructionTrace {
        let (cert, trace) = pipeline_combination(p, SearchBudget::default()).unwrap();
        assert_eq!(cert.len(), 2 * p.m());
        trace
    }

    #[test]
    fn grid_only() {
        let p = make_params(12, &[3, 9], &[0, 4, 8], &[2, 10]).unwrap();
        let trace = run(&p);
        assert_eq!(trace.stages.len(), 1);
    }

    #[test]
    fn coprime_pairs_go_first() {
        let p = make_params(16, &[2, 14, 5, 11], &[0, 8], &[2, 14, 3, 13]).unwrap();
        let plan = plan_pipeline(&p).unwrap();
        assert_eq!(plan.removed, vec![(2, 3)]);
        assert_eq!(plan.chain, vec![(5, 2)]);
        run(&p);
    }

    #[test]
    fn removal_chain_after_grid() {
        let p = make_params(36, &[2, 34, 3, 33], &[0, 12], &[6, 30, 12, 24]).unwrap();
        let plan = plan_pipeline(&p).unwrap();
        assert_eq!(plan.chain.len(), 2, "{plan:?}");
        let trace = run(&p);
        assert_eq!(trace.stages.len(), 2);
    }

    #[test]
    fn lift_tail() {
        let p = make_params(18, &[2, 9, 16], &[0, 6], &[4, 9, 14]).unwrap();
        let plan = plan_pipeline(&p).unwrap();
        assert!(plan.halves, "{plan:?}");
        let trace = run(&p);
        assert_eq!(trace.stages.last().unwrap().method, Method::PrismLift);
    }

    #[test]
    fn all_coprime_is_rejected() {
        let p = make_params(15, &[1, 14], &[0, 5], &[2, 13]).unwrap();
        assert!(matches!(
            plan_pipeline(&p),
            Err(ConstructError::HypothesisUnmet(_))
        ));
    }
}
