//! The bicirculant graph model `B(m; R, S, T)`.
//!
//! Vertices are `u_0..u_{m-1}` (outer) and `v_0..v_{m-1}` (inner). Outer
//! edges join `u_i` and `u_{i+a}` for `a` in `R`, inner edges join `v_i` and
//! `v_{i+b}` for `b` in `T`, and spokes join `u_i` and `v_{i+c}` for `c` in
//! `S`. `R` and `T` are stored as full symmetric residue sets.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::gcd;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("m must be at least 1")]
    ZeroOrder,
    #[error("{set} is not closed under negation mod {m}")]
    NonSymmetricRimSet { set: RimSet, m: usize },
    #[error("0 appears in the {set} rim set")]
    ZeroInRim { set: RimSet },
    #[error("0 must be a spoke type")]
    MissingZeroSpoke,
    #[error("|R| = {outer} differs from |T| = {inner}")]
    UnequalRimSizes { outer: usize, inner: usize },
    #[error("the spoke set is empty")]
    EmptySpokes,
    #[error("spoke type {0} listed twice after reduction mod m")]
    DuplicateSpoke(usize),
    #[error("{0} is not a spoke type")]
    ShiftNotInS(usize),
    #[error("m is odd, so there is no type m/2")]
    OddM,
    #[error("type m/2 is already present")]
    HalfAlreadyPresent,
}

/// Which rim set an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RimSet {
    Outer,
    Inner,
}

impl fmt::Display for RimSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RimSet::Outer => f.write_str("R"),
            RimSet::Inner => f.write_str("T"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Outer,
    Inner,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Outer => Side::Inner,
            Side::Inner => Side::Outer,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Side::Outer => 'u',
            Side::Inner => 'v',
        }
    }
}

/// A vertex `u_i` or `v_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

/// Serialized as `["u", i]` or `["v", i]`.
impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let side = match self.side {
            Side::Outer => "u",
            Side::Inner => "v",
        };
        (side, self.index).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (side, index): (String, usize) = Deserialize::deserialize(deserializer)?;
        match side.as_str() {
            "u" => Ok(Vertex::outer(index)),
            "v" => Ok(Vertex::inner(index)),
            other => Err(serde::de::Error::custom(format!(
                "unknown side {other:?}, expected \"u\" or \"v\""
            ))),
        }
    }
}

impl Vertex {
    pub const fn outer(index: usize) -> Vertex {
        Vertex {
            side: Side::Outer,
            index,
        }
    }

    pub const fn inner(index: usize) -> Vertex {
        Vertex {
            side: Side::Inner,
            index,
        }
    }

    /// Adds `offset` to the subscript, keeping the side.
    pub fn shifted(self, offset: usize, m: usize) -> Vertex {
        Vertex {
            side: self.side,
            index: (self.index + offset % m) % m,
        }
    }

    pub fn swapped(self) -> Vertex {
        Vertex {
            side: self.side.other(),
            index: self.index,
        }
    }

    /// Dense id in `0..2m`: outer vertices first.
    pub fn id(self, m: usize) -> usize {
        match self.side {
            Side::Outer => self.index,
            Side::Inner => m + self.index,
        }
    }

    pub fn from_id(id: usize, m: usize) -> Vertex {
        if id < m {
            Vertex::outer(id)
        } else {
            Vertex::inner(id - m)
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side.letter(), self.index)
    }
}

/// Edge classification. Outer and inner types are stored as the canonical
/// representative `min(a, m - a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeKind {
    OuterType(usize),
    InnerType(usize),
    SpokeType(usize),
}

impl EdgeKind {
    pub fn class(self) -> EdgeClass {
        match self {
            EdgeKind::OuterType(_) => EdgeClass::Outer,
            EdgeKind::InnerType(_) => EdgeClass::Inner,
            EdgeKind::SpokeType(_) => EdgeClass::Spoke,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    Outer,
    Inner,
    Spoke,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{0} and {1} are not adjacent")]
pub struct NotAnEdge(pub Vertex, pub Vertex);

/// Parameters `(m, R, S, T)` of a bicirculant.
///
/// Residue sets are sorted and reduced to `[0, m)`. Values built through
/// [`make_params`] are regular (`|R| = |T|`); the construction code also
/// builds irregular spanning subgraphs through [`BicirculantParams::subgraph`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BicirculantParams {
    m: usize,
    outer: Vec<usize>,
    spokes: Vec<usize>,
    inner: Vec<usize>,
}

fn normalize(m: usize, xs: &[i64]) -> Vec<usize> {
    let mut out: Vec<usize> = xs
        .iter()
        .map(|&x| x.rem_euclid(m as i64) as usize)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn is_symmetric(m: usize, set: &[usize]) -> bool {
    set.iter()
        .all(|&a| set.binary_search(&((m - a) % m)).is_ok())
}

/// Validates and normalizes `B(m; R, S, T)`.
///
/// Residues may be negative or exceed `m`; they are reduced first. Rim sets
/// must already be symmetric, they are never completed silently.
pub fn make_params(
    m: usize,
    outer: &[i64],
    spokes: &[i64],
    inner: &[i64],
) -> Result<BicirculantParams, ParamsError> {
    if m == 0 {
        return Err(ParamsError::ZeroOrder);
    }
    let r = normalize(m, outer);
    let t = normalize(m, inner);
    let mut s: Vec<usize> = spokes
        .iter()
        .map(|&x| x.rem_euclid(m as i64) as usize)
        .collect();
    s.sort_unstable();
    if let Some(w) = s.windows(2).find(|w| w[0] == w[1]) {
        return Err(ParamsError::DuplicateSpoke(w[0]));
    }
    if s.is_empty() {
        return Err(ParamsError::EmptySpokes);
    }
    for (set, which) in [(&r, RimSet::Outer), (&t, RimSet::Inner)] {
        if set.first() == Some(&0) {
            return Err(ParamsError::ZeroInRim { set: which });
        }
        if !is_symmetric(m, set) {
            return Err(ParamsError::NonSymmetricRimSet { set: which, m });
        }
    }
    if s[0] != 0 {
        return Err(ParamsError::MissingZeroSpoke);
    }
    if r.len() != t.len() {
        return Err(ParamsError::UnequalRimSizes {
            outer: r.len(),
            inner: t.len(),
        });
    }
    Ok(BicirculantParams {
        m,
        outer: r,
        spokes: s,
        inner: t,
    })
}

/// Generalized Petersen graph `GP(m, k) = B(m; ±1; 0; ±k)`.
pub fn generalized_petersen(m: usize, k: usize) -> Result<BicirculantParams, ParamsError> {
    let (m_i, k_i) = (m as i64, k as i64);
    make_params(m, &[1, m_i - 1], &[0], &[k_i, m_i - k_i])
}

impl BicirculantParams {
    /// Builds a spanning subgraph description without the regularity check.
    /// Inputs must already be reduced, symmetric and sorted-deduplicable.
    pub(crate) fn subgraph(m: usize, outer: &[usize], spokes: &[usize], inner: &[usize]) -> Self {
        let fix = |xs: &[usize]| {
            let mut v: Vec<usize> = xs.iter().map(|x| x % m).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let p = BicirculantParams {
            m,
            outer: fix(outer),
            spokes: fix(spokes),
            inner: fix(inner),
        };
        debug_assert!(is_symmetric(m, &p.outer) && is_symmetric(m, &p.inner));
        p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `R`, sorted, full symmetric set.
    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    /// `S`, sorted.
    pub fn spokes(&self) -> &[usize] {
        &self.spokes
    }

    /// `T`, sorted, full symmetric set.
    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn r(&self) -> usize {
        self.outer.len()
    }

    pub fn s(&self) -> usize {
        self.spokes.len()
    }

    /// Degree of an outer vertex (`r + s`).
    pub fn degree(&self) -> usize {
        self.outer.len() + self.spokes.len()
    }

    pub fn order(&self) -> usize {
        2 * self.m
    }

    pub fn rim(&self, side: Side) -> &[usize] {
        match side {
            Side::Outer => &self.outer,
            Side::Inner => &self.inner,
        }
    }

    pub fn half(&self) -> Option<usize> {
        self.m.is_multiple_of(2).then_some(self.m / 2)
    }

    pub fn has_half(&self, side: Side) -> bool {
        self.half()
            .is_some_and(|h| self.rim(side).binary_search(&h).is_ok())
    }

    /// Rim types as canonical representatives `min(a, m-a)`, ascending.
    pub fn rim_reps(&self, side: Side) -> Vec<usize> {
        let m = self.m;
        self.rim(side)
            .iter()
            .copied()
            .filter(|&a| a <= m - a)
            .collect()
    }

    pub fn canonical_rep(&self, a: usize) -> usize {
        let a = a % self.m;
        a.min((self.m - a) % self.m)
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v.index < self.m
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.m)
            .map(Vertex::outer)
            .chain((0..self.m).map(Vertex::inner))
    }

    /// All neighbours of `v`.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let m = self.m;
        let i = v.index;
        let mut out = Vec::with_capacity(self.degree());
        match v.side {
            Side::Outer => {
                out.extend(self.outer.iter().map(|&a| Vertex::outer((i + a) % m)));
                out.extend(self.spokes.iter().map(|&c| Vertex::inner((i + c) % m)));
            }
            Side::Inner => {
                out.extend(self.inner.iter().map(|&b| Vertex::inner((i + b) % m)));
                out.extend(self.spokes.iter().map(|&c| Vertex::outer((i + m - c) % m)));
            }
        }
        out
    }

    pub fn is_edge(&self, x: Vertex, y: Vertex) -> bool {
        self.classify_edge(x, y).is_ok()
    }

    /// Classifies the edge `xy`.
    pub fn classify_edge(&self, x: Vertex, y: Vertex) -> Result<EdgeKind, NotAnEdge> {
        let m = self.m;
        if x.index >= m || y.index >= m || x == y {
            return Err(NotAnEdge(x, y));
        }
        let diff = (y.index + m - x.index) % m;
        let found = match (x.side, y.side) {
            (Side::Outer, Side::Outer) => self
                .outer
                .binary_search(&diff)
                .ok()
                .map(|_| EdgeKind::OuterType(self.canonical_rep(diff))),
            (Side::Inner, Side::Inner) => self
                .inner
                .binary_search(&diff)
                .ok()
                .map(|_| EdgeKind::InnerType(self.canonical_rep(diff))),
            (Side::Outer, Side::Inner) => self
                .spokes
                .binary_search(&diff)
                .ok()
                .map(|_| EdgeKind::SpokeType(diff)),
            (Side::Inner, Side::Outer) => {
                let c = (m - diff) % m;
                self.spokes
                    .binary_search(&c)
                    .ok()
                    .map(|_| EdgeKind::SpokeType(c))
            }
        };
        found.ok_or(NotAnEdge(x, y))
    }

    /// `B(m; R, S - c, T)`, isomorphic via `u_i -> u_i`, `v_i -> v_{i-c}`.
    pub fn shift_spokes(&self, c: usize) -> Result<BicirculantParams, ParamsError> {
        if self.spokes.binary_search(&(c % self.m)).is_err() {
            return Err(ParamsError::ShiftNotInS(c));
        }
        let m = self.m;
        let mut spokes: Vec<usize> = self.spokes.iter().map(|&x| (x + m - c % m) % m).collect();
        spokes.sort_unstable();
        Ok(BicirculantParams {
            spokes,
            ..self.clone()
        })
    }

    /// `G⁼ = B(m; R ∪ {m/2}, S, T ∪ {m/2})`.
    pub fn add_half_types(&self) -> Result<BicirculantParams, ParamsError> {
        let h = self.half().ok_or(ParamsError::OddM)?;
        if self.has_half(Side::Outer) || self.has_half(Side::Inner) {
            return Err(ParamsError::HalfAlreadyPresent);
        }
        let mut p = self.clone();
        p.outer.push(h);
        p.outer.sort_unstable();
        p.inner.push(h);
        p.inner.sort_unstable();
        Ok(p)
    }

    /// `B(m; T, -S, R)`: exchanging `u_i` and `v_i` is an isomorphism onto it.
    pub fn swap_sides(&self) -> BicirculantParams {
        let m = self.m;
        let mut spokes: Vec<usize> = self.spokes.iter().map(|&c| (m - c) % m).collect();
        spokes.sort_unstable();
        BicirculantParams {
            m,
            outer: self.inner.clone(),
            spokes,
            inner: self.outer.clone(),
        }
    }

    /// `B(m; R, -S, T)`: the map `i -> -i` on both rims is an isomorphism onto it.
    pub fn negate_spokes(&self) -> BicirculantParams {
        let m = self.m;
        let mut spokes: Vec<usize> = self.spokes.iter().map(|&c| (m - c) % m).collect();
        spokes.sort_unstable();
        BicirculantParams {
            spokes,
            ..self.clone()
        }
    }

    /// Removes rim types (and their negatives) from `R` and `T`.
    pub(crate) fn without_types(&self, outer_drop: &[usize], inner_drop: &[usize]) -> Self {
        let m = self.m;
        let keep = |set: &[usize], drop: &[usize]| -> Vec<usize> {
            set.iter()
                .copied()
                .filter(|&x| !drop.iter().any(|&d| d % m == x || (m - d % m) % m == x))
                .collect()
        };
        BicirculantParams {
            m,
            outer: keep(&self.outer, outer_drop),
            spokes: self.spokes.clone(),
            inner: keep(&self.inner, inner_drop),
        }
    }

    /// Adds rim types (and their negatives).
    pub(crate) fn with_types(&self, outer_add: &[usize], inner_add: &[usize]) -> Self {
        let m = self.m;
        let grow = |set: &[usize], add: &[usize]| -> Vec<usize> {
            let mut v = set.to_vec();
            for &a in add {
                v.push(a % m);
                v.push((m - a % m) % m);
            }
            v.sort_unstable();
            v.dedup();
            v
        };
        BicirculantParams {
            m,
            outer: grow(&self.outer, outer_add),
            spokes: self.spokes.clone(),
            inner: grow(&self.inner, inner_add),
        }
    }

    /// `gcd(m, R, S, T)`: the number of connected components.
    pub fn component_count(&self) -> usize {
        self.outer
            .iter()
            .chain(&self.spokes)
            .chain(&self.inner)
            .fold(self.m, |g, &x| gcd(g, x))
    }

    /// `gcd(m, S)`.
    pub fn spoke_gcd(&self) -> usize {
        self.spokes.iter().fold(self.m, |g, &x| gcd(g, x))
    }

    pub fn is_k2(&self) -> bool {
        self.m == 1
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    if xs.is_empty() {
        return f.write_str("_");
    }
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Renders the canonical `B(m; R; S; T)` form accepted by the parser.
impl fmt::Display for BicirculantParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({}; ", self.m)?;
        write_list(f, &self.outer)?;
        f.write_str("; ")?;
        write_list(f, &self.spokes)?;
        f.write_str("; ")?;
        write_list(f, &self.inner)?;
        f.write_str(")")
    }
}
