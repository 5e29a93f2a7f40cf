mod common;

use bicyc::construct::{
    half_type_construct, k2_lift, pipeline_combination, plan_pipeline, s1_classify_construct,
    stitch_haar, stitch_removal, ConstructError, ExceptionKind, Method, S1Outcome,
};
use bicyc::oracle::{find_cycle_exact, Constraints, SearchBudget};
use bicyc::params::{generalized_petersen, make_params, BicirculantParams, Vertex};
use bicyc::structure::{decompose, grid_shape, grid_shape_general};
use common::{check_cycle, is_hamiltonian};

fn sym(m: usize, reps: &[usize]) -> Vec<i64> {
    reps.iter()
        .flat_map(|&x| [x as i64, (m - x) as i64])
        .collect()
}

/// Hamilton cycle of the component of `p` containing `u_0`.
fn component_cycle(p: &BicirculantParams, constraints: &Constraints) -> Vec<Vertex> {
    let d = decompose(p);
    let c = find_cycle_exact(&d.quotient, constraints, SearchBudget::default())
        .unwrap()
        .unwrap();
    c.into_iter().map(|v| d.from_quotient(v, 0)).collect()
}

fn agrees_with_reference(p: &BicirculantParams, cycle: &[Vertex]) {
    let counts = check_cycle(p, cycle).unwrap();
    assert_eq!(counts.outer, counts.inner);
    if p.order() <= 24 {
        assert!(is_hamiltonian(p));
    }
}

#[test]
fn haar_grid_examples() {
    for (m, a, s, b, lambda, mu) in [
        (12, 3, [0, 4, 8].as_slice(), 2, 1, 1),
        (12, 1, &[0, 4, 8], 4, 3, 0),
        (8, 1, &[0, 4], 2, 1, 1),
    ] {
        let p = make_params(
            m,
            &sym(m, &[a]),
            &s.iter().map(|&x| x as i64).collect::<Vec<_>>(),
            &sym(m, &[b]),
        )
        .unwrap();
        let shape = grid_shape(&p, a, b).unwrap();
        assert_eq!((shape.lambda, shape.mu), (lambda, mu), "{p}");
        let h = BicirculantParams::clone(&p).without_rims();
        let (cert, trace) = stitch_haar(&p, &component_cycle(&h, &Constraints::default())).unwrap();
        agrees_with_reference(&p, cert.vertices());
        assert!(cert.counts().outer >= 2);
        assert_eq!(trace.replay(&p).unwrap(), cert);
    }
}

#[test]
fn removal_examples() {
    let p = make_params(12, &sym(12, &[1, 3]), &[0, 6], &sym(12, &[1, 3])).unwrap();
    let base = component_cycle(&p.without_pair(3, 3), &Constraints::min_outer(2));
    let (cert, _) = stitch_removal(&p, 3, 3, &base).unwrap();
    agrees_with_reference(&p, cert.vertices());

    let p = make_params(12, &sym(12, &[2, 3]), &[0, 4, 8], &sym(12, &[2, 3])).unwrap();
    let base = component_cycle(&p.without_pair(3, 3), &Constraints::min_outer(2));
    let (cert, _) = stitch_removal(&p, 3, 3, &base).unwrap();
    agrees_with_reference(&p, cert.vertices());
    assert!(cert.counts().outer >= 2);

    let p = make_params(20, &sym(20, &[4, 1]), &[0, 10], &sym(20, &[4, 3])).unwrap();
    let shape = grid_shape_general(&p, 1, 3).unwrap();
    assert!(shape.mu > 0, "{shape:?}");
    let base = component_cycle(&p.without_pair(1, 3), &Constraints::min_outer(2));
    let (cert, trace) = stitch_removal(&p, 1, 3, &base).unwrap();
    check_cycle(&p, cert.vertices()).unwrap();
    assert_ne!(trace.method, Method::Oracle);
}

#[test]
fn pipeline_examples() {
    let p = make_params(12, &[3, 9], &[0, 4, 8], &[2, 10]).unwrap();
    let (cert, _) = pipeline_combination(&p, SearchBudget::default()).unwrap();
    agrees_with_reference(&p, cert.vertices());

    let p = make_params(16, &sym(16, &[2, 5]), &[0, 8], &sym(16, &[2, 3])).unwrap();
    let plan = plan_pipeline(&p).unwrap();
    assert!(!plan.removed.is_empty());
    assert!(plan
        .removed
        .iter()
        .all(|&(a, b)| common::gcd(a, 8) == 1 || common::gcd(b, 8) == 1));
    let (cert, _) = pipeline_combination(&p, SearchBudget::default()).unwrap();
    check_cycle(&p, cert.vertices()).unwrap();

    let p = make_params(15, &[1, 14], &[0, 5], &[2, 13]).unwrap();
    assert!(matches!(
        pipeline_combination(&p, SearchBudget::default()),
        Err(ConstructError::HypothesisUnmet(_))
    ));
}

#[test]
fn prism_lift_examples() {
    let p = make_params(2, &[1], &[0], &[1]).unwrap();
    let cert = k2_lift(&p, &[Vertex::outer(0), Vertex::inner(0)]).unwrap();
    agrees_with_reference(&p, cert.vertices());

    let p = make_params(6, &[3], &[0, 2], &[3]).unwrap();
    let half = component_cycle(&p.without_pair(3, 3), &Constraints::default());
    let cert = k2_lift(&p, &half).unwrap();
    agrees_with_reference(&p, cert.vertices());
    let m_half = cert.edges().filter(|(x, y)| x.side == y.side).count();
    assert_eq!(m_half, 2);
}

#[test]
fn half_type_examples() {
    for (m, r, s, t) in [
        (8, vec![4], vec![0, 1, 2], vec![4]),
        (12, vec![1, 6, 11], vec![0, 2, 4], vec![2, 6, 10]),
        (24, vec![4, 12, 20], vec![0, 6, 18], vec![3, 12, 21]),
    ] {
        let p = make_params(m, &r, &s, &t).unwrap();
        let (cert, trace) = half_type_construct(&p, SearchBudget::default()).unwrap();
        agrees_with_reference(&p, cert.vertices());
        assert!(!trace.log.is_empty());
    }
}

#[test]
fn single_spoke_examples() {
    let gp = generalized_petersen(11, 2).unwrap();
    assert_eq!(
        s1_classify_construct(&gp, SearchBudget::default()).unwrap(),
        S1Outcome::Exception(ExceptionKind::AlspachGP)
    );
    for p in [
        make_params(7, &[1, 6, 2, 5], &[0], &[3, 4, 2, 5]).unwrap(),
        make_params(6, &[3, 1, 5], &[0], &[3, 2, 4]).unwrap(),
    ] {
        let S1Outcome::Hamiltonian(cert, _) =
            s1_classify_construct(&p, SearchBudget::default()).unwrap()
        else {
            panic!("{p}")
        };
        agrees_with_reference(&p, cert.vertices());
    }
}

trait Sub {
    fn without_rims(&self) -> BicirculantParams;
    fn without_pair(&self, a: usize, b: usize) -> BicirculantParams;
}

impl Sub for BicirculantParams {
    fn without_rims(&self) -> BicirculantParams {
        let spokes: Vec<i64> = self.spokes().iter().map(|&x| x as i64).collect();
        make_params(self.m(), &[], &spokes, &[]).unwrap()
    }

    fn without_pair(&self, a: usize, b: usize) -> BicirculantParams {
        let m = self.m();
        bicyc::structure::remove_types(self, &[a, m - a], &[b, m - b]).unwrap()
    }
}
