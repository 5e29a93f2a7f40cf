//! Randomized rotation-extension search with restarts.
//!
//! A path is extended greedily from its head. When the head has no unvisited
//! neighbour, a neighbour `w` on the path is picked and the segment after `w`
//! is reversed, which makes a new head. Once the path spans every vertex the
//! same rotations are used until the two ends are adjacent.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::graph::SearchGraph;
use super::SearchBudget;

struct PathState {
    path: Vec<u32>,
    pos: Vec<usize>,
}

const NOT_ON_PATH: usize = usize::MAX;

impl PathState {
    fn new(n: usize, start: u32) -> Self {
        let mut pos = vec![NOT_ON_PATH; n];
        pos[start as usize] = 0;
        PathState {
            path: vec![start],
            pos,
        }
    }

    fn push(&mut self, v: u32) {
        self.pos[v as usize] = self.path.len();
        self.path.push(v);
    }

    fn on_path(&self, v: u32) -> bool {
        self.pos[v as usize] != NOT_ON_PATH
    }

    /// Reverses `path[from..]`.
    fn rotate(&mut self, from: usize) {
        self.path[from..].reverse();
        for i in from..self.path.len() {
            self.pos[self.path[i] as usize] = i;
        }
    }

    fn reverse_all(&mut self) {
        self.rotate(0);
    }
}

/// Local ids of a hamilton cycle, or `None` when the budget runs out.
pub(crate) fn search(g: &SearchGraph, budget: SearchBudget) -> Option<Vec<u32>> {
    let n = g.len();
    if n < 3 || g.adj.iter().any(|a| a.len() < 2) {
        return None;
    }
    let started = Instant::now();
    let mut steps: u64 = 0;
    let per_restart = (n as u64).pow(2).max(10_000) * 4;
    let mut restart: u64 = 0;
    loop {
        let mut rng =
            ChaCha8Rng::seed_from_u64(budget.seed.wrapping_add(restart.wrapping_mul(0x9e37_79b9)));
        let start = rng.gen_range(0..n as u32);
        let mut st = PathState::new(n, start);
        let mut local_steps = 0;
        while local_steps < per_restart {
            local_steps += 1;
            steps += 1;
            if steps > budget.max_nodes {
                return None;
            }
            if steps.is_multiple_of(1024)
                && started.elapsed().as_millis() as u64 > budget.max_millis
            {
                return None;
            }
            let head = *st.path.last().unwrap();
            if st.path.len() == n {
                if g.adj[head as usize].contains(&st.path[0]) {
                    return Some(st.path);
                }
            } else {
                let mut best: Option<(usize, u32)> = None;
                let mut ties = 0u32;
                for &w in &g.adj[head as usize] {
                    if st.on_path(w) {
                        continue;
                    }
                    let free = g.adj[w as usize]
                        .iter()
                        .filter(|&&x| !st.on_path(x))
                        .count();
                    match best {
                        Some((f, _)) if free > f => {}
                        Some((f, _)) if free == f => {
                            ties += 1;
                            if rng.gen_range(0..=ties) == 0 {
                                best = Some((free, w));
                            }
                        }
                        _ => {
                            ties = 0;
                            best = Some((free, w));
                        }
                    }
                }
                if let Some((_, w)) = best {
                    st.push(w);
                    continue;
                }
            }
            if rng.gen_ratio(1, 8) {
                st.reverse_all();
                continue;
            }
            let prev = st.path[st.path.len() - 2];
            let choices: Vec<u32> = g.adj[head as usize]
                .iter()
                .copied()
                .filter(|&w| w != prev && st.on_path(w))
                .collect();
            match choices.choose(&mut rng) {
                Some(&w) => {
                    let i = st.pos[w as usize];
                    st.rotate(i + 1);
                }
                None => st.reverse_all(),
            }
        }
        restart += 1;
    }
}
