//! Spanning sub-bicirculants with two spokes.

use serde::Serialize;

use crate::arith::gcd;
use crate::params::BicirculantParams;
use crate::structure::{gcd_all, prime_power_factor_count};

/// A connected spanning subgraph certifying that the argument for `|S| >= 3`
/// goes through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `gcd(m, S) = 1`, so `H(m; S)` is connected.
    SpokeHaarConnected,
    /// Spokes `base` and `base + c` span a connected `B(m; R, {0, c}, T)`.
    TwoSpokeSubgraph { base: usize, c: usize },
}

impl Witness {
    /// The witness subgraph in the labels of `p`.
    pub fn subgraph(&self, p: &BicirculantParams) -> BicirculantParams {
        let m = p.m();
        match *self {
            Witness::SpokeHaarConnected => BicirculantParams::subgraph(m, &[], p.spokes(), &[]),
            Witness::TwoSpokeSubgraph { base, c } => {
                BicirculantParams::subgraph(m, p.outer(), &[base, (base + c) % m], p.inner())
            }
        }
    }

    /// Re-checks connectivity of the witness by its gcd.
    pub fn holds_for(&self, p: &BicirculantParams) -> bool {
        let m = p.m();
        match *self {
            Witness::SpokeHaarConnected => p.spoke_gcd() == 1,
            Witness::TwoSpokeSubgraph { base, c } => {
                p.spokes().contains(&base)
                    && p.spokes().contains(&((base + c) % m))
                    && c % m != 0
                    && gcd(gcd_all(m, [p.outer(), p.inner()]), c) == 1
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Applicability {
    /// `m` is a product of at most three prime powers.
    pub applicable: bool,
    pub witness: Option<Witness>,
}

/// Checks the prime-power bound on `m` and looks for a witness subgraph.
pub fn theorem13_applicable(p: &BicirculantParams) -> Applicability {
    let applicable = prime_power_factor_count(p.m()) <= 3;
    Applicability {
        applicable,
        witness: find_witness(p),
    }
}

fn find_witness(p: &BicirculantParams) -> Option<Witness> {
    if p.spoke_gcd() == 1 {
        return Some(Witness::SpokeHaarConnected);
    }
    let m = p.m();
    let s = p.spokes();
    for (i, &x) in s.iter().enumerate() {
        for &y in &s[i + 1..] {
            let w = Witness::TwoSpokeSubgraph { base: x, c: y - x };
            if w.holds_for(p) {
                return Some(w);
            }
            let w = Witness::TwoSpokeSubgraph {
                base: y,
                c: m - (y - x),
            };
            if w.holds_for(p) {
                return Some(w);
            }
        }
    }
    None
}
