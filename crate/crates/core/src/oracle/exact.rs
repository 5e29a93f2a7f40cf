//! Exhaustive backtracking for hamilton cycles and for hamilton paths with
//! fixed endpoints.
//!
//! The search grows a path from a fixed start. Candidates that have exactly
//! two usable edges left are forced; otherwise the candidate with the fewest
//! usable edges goes first. A branch is cut as soon as some unvisited vertex
//! has fewer than two usable edges or the unvisited vertices stop being
//! connected to the path head.

use std::collections::VecDeque;
use std::time::Instant;

use super::graph::SearchGraph;
use super::{Constraints, SearchBudget};
use crate::params::EdgeClass;

pub(crate) enum SearchOutcome {
    Found(Vec<u32>),
    Exhausted,
    OutOfBudget,
}

struct Exceeded;

struct Search<'a> {
    g: &'a SearchGraph,
    n: usize,
    matrix: Vec<bool>,
    visited: Vec<bool>,
    free_deg: Vec<u32>,
    path: Vec<u32>,
    /// The vertex the path must close onto: the start for cycles, the far
    /// endpoint for paths.
    sentinel: u32,
    cycle_mode: bool,
    remaining: usize,
    counts: [usize; 3],
    mins: [usize; 3],
    nodes: u64,
    budget: SearchBudget,
    started: Instant,
    seen: Vec<u32>,
    stamp: u32,
    queue: VecDeque<u32>,
}

fn class_index(c: EdgeClass) -> usize {
    match c {
        EdgeClass::Outer => 0,
        EdgeClass::Inner => 1,
        EdgeClass::Spoke => 2,
    }
}

impl<'a> Search<'a> {
    fn new(g: &'a SearchGraph, budget: SearchBudget, constraints: &Constraints) -> Self {
        let n = g.len();
        let mut matrix = vec![false; n * n];
        for (x, ns) in g.adj.iter().enumerate() {
            for &y in ns {
                matrix[x * n + y as usize] = true;
            }
        }
        Search {
            g,
            n,
            matrix,
            visited: vec![false; n],
            free_deg: g.adj.iter().map(|a| a.len() as u32).collect(),
            path: Vec::with_capacity(n),
            sentinel: 0,
            cycle_mode: true,
            remaining: n,
            counts: [0; 3],
            mins: [
                constraints.min_outer,
                constraints.min_inner,
                constraints.min_spoke,
            ],
            nodes: 0,
            budget,
            started: Instant::now(),
            seen: vec![0; n],
            stamp: 0,
            queue: VecDeque::new(),
        }
    }

    fn adjacent(&self, x: u32, y: u32) -> bool {
        self.matrix[x as usize * self.n + y as usize]
    }

    fn mark(&mut self, v: u32) {
        self.visited[v as usize] = true;
        self.remaining -= 1;
        for &w in &self.g.adj[v as usize] {
            self.free_deg[w as usize] -= 1;
        }
    }

    fn unmark(&mut self, v: u32) {
        self.visited[v as usize] = false;
        self.remaining += 1;
        for &w in &self.g.adj[v as usize] {
            self.free_deg[w as usize] += 1;
        }
    }

    fn head(&self) -> u32 {
        *self.path.last().unwrap()
    }

    /// Edges still available to an unvisited vertex in a completed cycle.
    fn usable(&self, w: u32) -> u32 {
        let head = self.head();
        let mut u = self.free_deg[w as usize];
        if self.adjacent(w, head) {
            u += 1;
        }
        if self.sentinel != head && self.adjacent(w, self.sentinel) {
            u += 1;
        }
        u
    }

    fn locally_feasible(&self, old_head: u32) -> bool {
        let head = self.head();
        for &x in self.g.adj[head as usize]
            .iter()
            .chain(&self.g.adj[old_head as usize])
        {
            if !self.visited[x as usize] && self.usable(x) < 2 {
                return false;
            }
        }
        if self.remaining > 0 && self.free_deg[self.sentinel as usize] == 0 {
            return false;
        }
        if self.remaining > 0 {
            let remaining_edges = self.remaining + 1;
            for c in 0..3 {
                if self.counts[c] + remaining_edges < self.mins[c] {
                    return false;
                }
            }
        }
        true
    }

    fn unvisited_connected(&mut self) -> bool {
        if self.remaining == 0 {
            return true;
        }
        self.stamp += 1;
        let stamp = self.stamp;
        let head = self.head();
        self.queue.clear();
        for &w in &self.g.adj[head as usize] {
            if !self.visited[w as usize] && self.seen[w as usize] != stamp {
                self.seen[w as usize] = stamp;
                self.queue.push_back(w);
            }
        }
        let mut reached = 0;
        while let Some(x) = self.queue.pop_front() {
            reached += 1;
            for &w in &self.g.adj[x as usize] {
                if !self.visited[w as usize] && self.seen[w as usize] != stamp {
                    self.seen[w as usize] = stamp;
                    self.queue.push_back(w);
                }
            }
        }
        reached == self.remaining
    }

    fn tick(&mut self) -> Result<(), Exceeded> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Exceeded);
        }
        if self.nodes.is_multiple_of(4096)
            && self.started.elapsed().as_millis() as u64 > self.budget.max_millis
        {
            return Err(Exceeded);
        }
        Ok(())
    }

    fn closing_ok(&self) -> bool {
        let head = self.head();
        if !self.adjacent(head, self.sentinel) {
            return false;
        }
        let mut counts = self.counts;
        counts[class_index(self.g.edge_class(head, self.sentinel))] += 1;
        (0..3).all(|c| counts[c] >= self.mins[c])
    }

    fn extend(&mut self) -> Result<bool, Exceeded> {
        self.tick()?;
        if self.remaining == 0 {
            return Ok(self.closing_ok());
        }
        let head = self.head();
        let mut cands: Vec<(u32, u32)> = self.g.adj[head as usize]
            .iter()
            .filter(|&&w| !self.visited[w as usize])
            .map(|&w| (self.usable(w), w))
            .collect();
        let forced = cands.iter().filter(|(u, _)| *u <= 2).count();
        // At the start of a cycle one forced neighbour may be the last vertex.
        let allowed = if self.cycle_mode && head == self.sentinel {
            2
        } else {
            1
        };
        if forced > allowed && self.remaining > 1 {
            return Ok(false);
        }
        cands.sort_unstable();
        if forced >= 1 {
            cands.truncate(1);
        }
        for (_, w) in cands {
            let class = class_index(self.g.edge_class(head, w));
            self.counts[class] += 1;
            self.path.push(w);
            self.mark(w);
            let ok = self.locally_feasible(head) && self.unvisited_connected();
            if ok && self.extend()? {
                return Ok(true);
            }
            self.unmark(w);
            self.path.pop();
            self.counts[class] -= 1;
        }
        Ok(false)
    }

    fn run(mut self) -> SearchOutcome {
        match self.extend() {
            Ok(true) => {
                let mut path = self.path;
                if !self.cycle_mode {
                    path.push(self.sentinel);
                }
                SearchOutcome::Found(path)
            }
            Ok(false) => SearchOutcome::Exhausted,
            Err(Exceeded) => SearchOutcome::OutOfBudget,
        }
    }
}

/// Hamilton cycle through every vertex of `g`, as local ids starting at 0.
pub(crate) fn search_cycle(
    g: &SearchGraph,
    constraints: &Constraints,
    budget: SearchBudget,
) -> SearchOutcome {
    if g.len() < 3 {
        return SearchOutcome::Exhausted;
    }
    let mut available = [0usize; 3];
    for (x, ns) in g.adj.iter().enumerate() {
        for &y in ns.iter().filter(|&&y| y as usize > x) {
            available[class_index(g.edge_class(x as u32, y))] += 1;
        }
    }
    let mins = [
        constraints.min_outer,
        constraints.min_inner,
        constraints.min_spoke,
    ];
    if (0..3).any(|c| available[c] < mins[c]) {
        return SearchOutcome::Exhausted;
    }
    let mut s = Search::new(g, budget, constraints);
    s.sentinel = 0;
    s.path.push(0);
    s.mark(0);
    s.run()
}

/// Hamilton path from `from` to `to` (local ids).
pub(crate) fn search_path(
    g: &SearchGraph,
    from: u32,
    to: u32,
    budget: SearchBudget,
) -> SearchOutcome {
    if from == to {
        return SearchOutcome::Exhausted;
    }
    let mut s = Search::new(g, budget, &Constraints::default());
    s.cycle_mode = false;
    s.sentinel = to;
    s.mark(to);
    s.path.push(from);
    s.mark(from);
    if s.remaining > 0 && !s.unvisited_connected() {
        return SearchOutcome::Exhausted;
    }
    s.run()
}
