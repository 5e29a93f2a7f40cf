//! Reference implementations written against the definition of
//! `B(m; R, S, T)` only, used to cross-check the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use bicyc::params::{BicirculantParams, Side, Vertex};

/// Vertex ids: `u_i -> i`, `v_i -> m + i`.
pub fn id(v: Vertex, m: usize) -> usize {
    match v.side {
        Side::Outer => v.index,
        Side::Inner => m + v.index,
    }
}

/// Simple-graph adjacency built straight from the residue sets.
pub fn adjacency(p: &BicirculantParams) -> Vec<BTreeSet<usize>> {
    let m = p.m();
    let mut adj = vec![BTreeSet::new(); 2 * m];
    let mut add = |x: usize, y: usize| {
        if x != y {
            adj[x].insert(y);
            adj[y].insert(x);
        }
    };
    for i in 0..m {
        for &a in p.outer() {
            add(i, (i + a) % m);
        }
        for &b in p.inner() {
            add(m + i, m + (i + b) % m);
        }
        for &c in p.spokes() {
            add(i, m + (i + c) % m);
        }
    }
    adj
}

/// Component label per vertex id, and the number of components.
pub fn bfs_components(p: &BicirculantParams) -> (Vec<usize>, usize) {
    let adj = adjacency(p);
    let mut label = vec![usize::MAX; adj.len()];
    let mut count = 0;
    for s in 0..adj.len() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if label[y] == usize::MAX {
                    label[y] = count;
                    queue.push_back(y);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Counts {
    pub outer: usize,
    pub inner: usize,
    pub spoke: usize,
}

/// Checks a hamilton cycle of `p` and counts its edges by side.
pub fn check_cycle(p: &BicirculantParams, cycle: &[Vertex]) -> Result<Counts, String> {
    let m = p.m();
    let n = 2 * m;
    if cycle.len() != n {
        return Err(format!("{} vertices, expected {n}", cycle.len()));
    }
    let ids: Vec<usize> = cycle.iter().map(|&v| id(v, m)).collect();
    if ids.iter().any(|&x| x >= n) || ids.iter().collect::<BTreeSet<_>>().len() != n {
        return Err("not a permutation of the vertices".into());
    }
    let adj = adjacency(p);
    let mut counts = Counts::default();
    for k in 0..n {
        let (x, y) = (ids[k], ids[(k + 1) % n]);
        if !adj[x].contains(&y) {
            return Err(format!(
                "{} - {} is not an edge",
                cycle[k],
                cycle[(k + 1) % n]
            ));
        }
        match (x < m, y < m) {
            (true, true) => counts.outer += 1,
            (false, false) => counts.inner += 1,
            _ => counts.spoke += 1,
        }
    }
    if n == 2 {
        // K2 is not a cycle
        return Err("two vertices".into());
    }
    Ok(counts)
}

/// Held-Karp over vertex subsets; only for small graphs.
pub fn is_hamiltonian(p: &BicirculantParams) -> bool {
    let adj = adjacency(p);
    let n = adj.len();
    assert!(n <= 24, "reference search is exponential");
    if n < 3 {
        return false;
    }
    let nbr: Vec<u32> = adj
        .iter()
        .map(|s| s.iter().fold(0u32, |acc, &y| acc | (1 << y)))
        .collect();
    // reach[mask]: endpoints of paths from 0 covering exactly `mask`
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1usize..(1 << n) {
        let ends = reach[mask];
        if ends == 0 || mask & 1 == 0 {
            continue;
        }
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = nbr[v] & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    reach[(1 << n) - 1] & nbr[0] != 0
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub mod arb {
    use bicyc::params::{make_params, BicirculantParams};
    use proptest::prelude::*;

    /// Valid parameters with `m <= m_max` and at most `reps` rim
    /// representatives per side.
    pub fn params(
        m_max: usize,
        reps: usize,
        spokes: usize,
    ) -> impl Strategy<Value = BicirculantParams> {
        (2..=m_max)
            .prop_flat_map(move |m| {
                let rim = proptest::collection::btree_set(1..=m / 2, 0..=reps.min(m / 2));
                let s = proptest::collection::btree_set(1..m, 0..spokes.min(m));
                (Just(m), rim.clone(), s, rim)
            })
            .prop_filter_map("equal rim sizes", |(m, r, s, t)| {
                let sym = |xs: &std::collections::BTreeSet<usize>| -> Vec<i64> {
                    xs.iter()
                        .flat_map(|&x| [x as i64, (m - x) as i64])
                        .collect()
                };
                let mut spokes = vec![0i64];
                spokes.extend(s.iter().map(|&x| x as i64));
                make_params(m, &sym(&r), &spokes, &sym(&t)).ok()
            })
    }
}
