use crate::params::{BicirculantParams, EdgeClass, EdgeKind, Side, Vertex};

/// Explicit adjacency lists over one connected component, with dense local ids.
#[derive(Debug, Clone)]
pub(crate) struct SearchGraph {
    pub vertices: Vec<Vertex>,
    pub adj: Vec<Vec<u32>>,
    m: usize,
    delta: usize,
    component: usize,
}

impl SearchGraph {
    /// The component `{u_i, v_i : i ≡ component (mod delta)}` of `p`, with
    /// edges of a forbidden kind left out.
    pub fn component(p: &BicirculantParams, component: usize, forbidden: &[EdgeKind]) -> Self {
        let m = p.m();
        let delta = p.component_count();
        let per_side = m / delta;
        let vertices: Vec<Vertex> = [Side::Outer, Side::Inner]
            .into_iter()
            .flat_map(|side| {
                (0..per_side).map(move |k| Vertex {
                    side,
                    index: k * delta + component,
                })
            })
            .collect();
        let mut g = SearchGraph {
            vertices,
            adj: Vec::new(),
            m,
            delta,
            component,
        };
        g.adj = g
            .vertices
            .iter()
            .map(|&v| {
                let mut ns: Vec<u32> = p
                    .neighbors(v)
                    .into_iter()
                    .filter(|&w| {
                        forbidden.is_empty()
                            || p.classify_edge(v, w).is_ok_and(|k| !forbidden.contains(&k))
                    })
                    .map(|w| g.local(w).expect("neighbour in same component") as u32)
                    .collect();
                ns.sort_unstable();
                ns.dedup();
                ns
            })
            .collect();
        g
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn local(&self, v: Vertex) -> Option<usize> {
        if v.index >= self.m || v.index % self.delta != self.component {
            return None;
        }
        let per_side = self.m / self.delta;
        let k = v.index / self.delta;
        Some(match v.side {
            Side::Outer => k,
            Side::Inner => per_side + k,
        })
    }

    pub fn side(&self, id: u32) -> Side {
        self.vertices[id as usize].side
    }

    pub fn edge_class(&self, x: u32, y: u32) -> EdgeClass {
        match (self.side(x), self.side(y)) {
            (Side::Outer, Side::Outer) => EdgeClass::Outer,
            (Side::Inner, Side::Inner) => EdgeClass::Inner,
            _ => EdgeClass::Spoke,
        }
    }

    pub fn to_vertices(&self, ids: &[u32]) -> Vec<Vertex> {
        ids.iter().map(|&i| self.vertices[i as usize]).collect()
    }
}
