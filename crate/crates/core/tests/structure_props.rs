mod common;

use bicyc::structure::{decompose, is_connected};
use common::{arb, bfs_components};
use proptest::prelude::*;

proptest! {
    #[test]
    fn component_count_matches_bfs(p in arb::params(30, 3, 4)) {
        let (label, count) = bfs_components(&p);
        prop_assert_eq!(is_connected(&p), count == 1);
        let d = decompose(&p);
        prop_assert_eq!(d.delta, count);
        let m = p.m();
        for v in p.vertices() {
            let same = label[common::id(v, m)] == label[0];
            prop_assert_eq!(same, d.component_of(v) == 0);
        }
    }

    #[test]
    fn quotient_is_the_component_graph(p in arb::params(24, 3, 4)) {
        let d = decompose(&p);
        let q = &d.quotient;
        prop_assert_eq!(q.m() * d.delta, p.m());
        prop_assert!(bicyc::structure::is_connected(q));
        for v in p.vertices().filter(|v| d.component_of(*v) == 0) {
            let w = d.to_quotient(v);
            prop_assert_eq!(d.from_quotient(w, 0), v);
            for x in p.neighbors(v) {
                prop_assert!(q.is_edge(w, d.to_quotient(x)));
            }
        }
        prop_assert_eq!(d.component_size(), 2 * q.m());
    }

    #[test]
    fn neighbours_are_symmetric(p in arb::params(20, 3, 3)) {
        let adj = common::adjacency(&p);
        let m = p.m();
        for v in p.vertices() {
            let mine: std::collections::BTreeSet<usize> = p.neighbors(v).into_iter().map(|x| common::id(x, m)).collect();
            prop_assert_eq!(&mine, &adj[common::id(v, m)]);
            for x in p.neighbors(v) {
                prop_assert!(p.is_edge(x, v));
            }
        }
    }
}
