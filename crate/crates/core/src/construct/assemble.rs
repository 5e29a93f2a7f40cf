use std::collections::HashMap;

use crate::params::Vertex;

/// Joins path pieces and extra edges into one cycle.
///
/// A piece contributes the edges between its consecutive vertices; a
/// single-vertex piece contributes only the vertex. Every vertex must end
/// with exactly two distinct neighbours and the edges must form one cycle.
pub(crate) fn assemble(
    pieces: &[Vec<Vertex>],
    joins: &[(Vertex, Vertex)],
) -> Result<Vec<Vertex>, String> {
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    let mut order: Vec<Vertex> = Vec::new();
    let link = |adj: &mut HashMap<Vertex, Vec<Vertex>>, x: Vertex, y: Vertex| {
        adj.entry(x).or_default().push(y);
        adj.entry(y).or_default().push(x);
    };
    for piece in pieces {
        for &v in piece {
            if adj.insert(v, Vec::new()).is_some() {
                return Err(format!("{v} appears in two pieces"));
            }
            order.push(v);
        }
        for w in piece.windows(2) {
            link(&mut adj, w[0], w[1]);
        }
    }
    for &(x, y) in joins {
        if !adj.contains_key(&x) || !adj.contains_key(&y) {
            return Err(format!("join {x}-{y} touches a vertex outside every piece"));
        }
        link(&mut adj, x, y);
    }
    for &v in &order {
        let ns = &adj[&v];
        if ns.len() != 2 {
            return Err(format!("{v} has degree {}", ns.len()));
        }
        if ns[0] == ns[1] {
            return Err(format!("edge {v}-{} used twice", ns[0]));
        }
    }
    let Some(&start) = order.first() else {
        return Err("no pieces".into());
    };
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = adj[&start][0];
    while cur != start {
        cycle.push(cur);
        let ns = &adj[&cur];
        let next = if ns[0] == prev { ns[1] } else { ns[0] };
        prev = cur;
        cur = next;
    }
    if cycle.len() != order.len() {
        return Err(format!(
            "pieces close into a {}-cycle, expected {}",
            cycle.len(),
            order.len()
        ));
    }
    Ok(cycle)
}
