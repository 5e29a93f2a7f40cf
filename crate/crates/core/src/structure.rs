//! Connectivity and component structure from gcd arithmetic.

use serde::Serialize;
use thiserror::Error;

use crate::arith::{distinct_prime_count, gcd};
use crate::params::{BicirculantParams, Side, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("dropped types are not closed under negation")]
    AsymmetricDrop,
    #[error("type {0} is not present")]
    NotASubset(usize),
    #[error("type {0} is not present")]
    TypeNotPresent(usize),
    #[error("type m/2 is not allowed here")]
    HalfTypeForbidden,
}

/// gcd of `m` and every listed residue. Empty sets contribute nothing, so
/// the gcd over no residues is `m`.
pub fn gcd_all<'a>(m: usize, sets: impl IntoIterator<Item = &'a [usize]>) -> usize {
    sets.into_iter().flatten().fold(m, |g, &x| gcd(g, x))
}

pub fn is_connected(p: &BicirculantParams) -> bool {
    p.component_count() == 1
}

/// Component structure of a bicirculant with `delta = gcd(m, R, S, T)`
/// components. `u_i` and `v_i` lie in component `i mod delta`, and each
/// component maps onto `quotient` by dividing subscripts by `delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub delta: usize,
    pub quotient: BicirculantParams,
}

impl Decomposition {
    pub fn component_of(&self, v: Vertex) -> usize {
        v.index % self.delta
    }

    /// Image of `v` in the quotient.
    pub fn to_quotient(&self, v: Vertex) -> Vertex {
        Vertex {
            side: v.side,
            index: v.index / self.delta,
        }
    }

    /// Preimage of a quotient vertex inside component `component`.
    pub fn from_quotient(&self, v: Vertex, component: usize) -> Vertex {
        Vertex {
            side: v.side,
            index: v.index * self.delta + component,
        }
    }

    pub fn component_size(&self) -> usize {
        2 * self.quotient.m()
    }
}

pub fn decompose(p: &BicirculantParams) -> Decomposition {
    let delta = p.component_count();
    let m = p.m();
    let div = |xs: &[usize]| -> Vec<usize> { xs.iter().map(|&x| x / delta).collect() };
    let quotient = BicirculantParams::subgraph(
        m / delta,
        &div(p.outer()),
        &div(p.spokes()),
        &div(p.inner()),
    );
    Decomposition { delta, quotient }
}

fn check_drop(p: &BicirculantParams, side: Side, drop: &[usize]) -> Result<(), StructureError> {
    let m = p.m();
    for &d in drop {
        let d = d % m;
        if p.rim(side).binary_search(&d).is_err() {
            return Err(StructureError::NotASubset(d));
        }
        if !drop.iter().any(|&e| e % m == (m - d) % m) {
            return Err(StructureError::AsymmetricDrop);
        }
    }
    Ok(())
}

/// Removes outer edges of the listed types and inner edges of the listed
/// types. Each drop list must be a symmetric subset of the rim set.
pub fn remove_types(
    p: &BicirculantParams,
    outer_drop: &[usize],
    inner_drop: &[usize],
) -> Result<BicirculantParams, StructureError> {
    check_drop(p, Side::Outer, outer_drop)?;
    check_drop(p, Side::Inner, inner_drop)?;
    Ok(p.without_types(outer_drop, inner_drop))
}

/// Grid dimensions for joining cyclic Haar components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridShape {
    pub a: usize,
    pub b: usize,
    pub lambda: usize,
    pub mu: usize,
}

fn check_pair(p: &BicirculantParams, a: usize, b: usize) -> Result<(), StructureError> {
    let m = p.m();
    if p.outer().binary_search(&(a % m)).is_err() {
        return Err(StructureError::TypeNotPresent(a));
    }
    if p.inner().binary_search(&(b % m)).is_err() {
        return Err(StructureError::TypeNotPresent(b));
    }
    if p.half().is_some_and(|h| a % m == h || b % m == h) {
        return Err(StructureError::HalfTypeForbidden);
    }
    Ok(())
}

/// `lambda = gcd(m,S,b) - 1`, `mu = gcd(m,S)/gcd(m,S,b) - 1`.
pub fn grid_shape(p: &BicirculantParams, a: usize, b: usize) -> Result<GridShape, StructureError> {
    check_pair(p, a, b)?;
    let g = p.spoke_gcd();
    let gb = gcd(g, b);
    Ok(GridShape {
        a,
        b,
        lambda: gb - 1,
        mu: g / gb - 1,
    })
}

/// The rim-augmented variant used when two rim types are removed at once:
/// `lambda + 1 = gcd(m, R∖±a, S, T)` and
/// `mu + 1 = gcd(m, R∖±a, S, T∖±b) / gcd(m, R∖±a, S, T)`.
pub fn grid_shape_general(
    p: &BicirculantParams,
    a: usize,
    b: usize,
) -> Result<GridShape, StructureError> {
    check_pair(p, a, b)?;
    let k = p.without_types(&[a], &[]).component_count();
    let h = p.without_types(&[a], &[b]).component_count();
    Ok(GridShape {
        a,
        b,
        lambda: k - 1,
        mu: h / k - 1,
    })
}

pub fn prime_power_factor_count(m: usize) -> usize {
    distinct_prime_count(m)
}
