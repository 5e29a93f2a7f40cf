//! Grid stitching for `B(m; ±a, S, ±b)` from a hamilton cycle of one
//! component of the spoke subgraph `H(m; S)`.
//!
//! The components of `H` are the translates of the base component by
//! `i·y + j·x`, arranged in `rows + 1` rows and `cols + 1` columns. Edges of
//! the column type `x` join neighbouring columns and edges of the row type
//! `y` join neighbouring rows. When the row type is outer the picture is the
//! same with the two sides exchanged.

use std::collections::HashMap;

use super::{assemble, ConstructError, ConstructionTrace, Method, Stage};
use crate::arith::gcd;
use crate::certificate::{verify_certificate, verify_component_cycle, CycleCertificate};
use crate::params::{BicirculantParams, Side, Vertex};

/// Which vertex of the base path plays the free outer vertex of the grid
/// rows. Positions count from the start of the base path and must be odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AnchorChoice {
    #[default]
    Default,
    Position(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Roles {
    x_side: Side,
    x_step: usize,
    y_step: usize,
    cols: usize,
    rows: usize,
}

impl Roles {
    fn transposed(self) -> Roles {
        Roles {
            x_side: self.x_side.other(),
            x_step: self.y_step,
            y_step: self.x_step,
            cols: self.rows,
            rows: self.cols,
        }
    }
}

fn single_type(q: &BicirculantParams, side: Side) -> Result<usize, ConstructError> {
    let m = q.m();
    let rim = q.rim(side);
    let a = *rim
        .first()
        .ok_or_else(|| ConstructError::PreconditionViolated(format!("no {side:?} rim type")))?;
    if rim.iter().any(|&x| x != a && x != m - a) {
        return Err(ConstructError::PreconditionViolated(format!(
            "more than one {side:?} rim type"
        )));
    }
    if q.half() == Some(a) {
        return Err(ConstructError::PreconditionViolated("rim type m/2".into()));
    }
    Ok(a)
}

fn choose_roles(g: usize, delta: usize, a: usize, b: usize) -> Result<Roles, ConstructError> {
    let by_b = gcd(g, b);
    let by_a = gcd(g, a);
    let roles = if by_b > delta {
        Roles {
            x_side: Side::Outer,
            x_step: a,
            y_step: b,
            cols: by_b / delta - 1,
            rows: g / by_b - 1,
        }
    } else if by_a > delta {
        Roles {
            x_side: Side::Inner,
            x_step: b,
            y_step: a,
            cols: by_a / delta - 1,
            rows: g / by_a - 1,
        }
    } else {
        return Err(ConstructError::PreconditionViolated(
            "neither rim type shares a factor with gcd(m, S) beyond the component gcd".into(),
        ));
    };
    if roles.rows > 0 && roles.cols % 2 == 1 && roles.rows % 2 == 0 {
        Ok(roles.transposed())
    } else {
        Ok(roles)
    }
}

/// Hamilton cycle of `p = B(m; ±a, S, ±b)` from a hamilton cycle `base` of
/// the component of `H(m; S)` containing `u_0`.
pub fn stitch_haar(
    p: &BicirculantParams,
    base: &[Vertex],
) -> Result<(CycleCertificate, ConstructionTrace), ConstructError> {
    stitch_haar_with(p, base, AnchorChoice::Default)
}

/// [`stitch_haar`] with an explicit anchor position.
pub fn stitch_haar_with(
    p: &BicirculantParams,
    base: &[Vertex],
    anchor: AnchorChoice,
) -> Result<(CycleCertificate, ConstructionTrace), ConstructError> {
    if p.component_count() != 1 {
        return Err(ConstructError::PreconditionViolated(
            "graph is disconnected".into(),
        ));
    }
    let (cycle, stage) = haar_component(p, base, anchor)?;
    let cert = verify_certificate(p, &cycle)
        .map_err(|e| ConstructError::InternalStitchFailure(e.to_string()))?;
    let mut trace = ConstructionTrace::new(stage.method);
    trace.push(stage);
    Ok((cert, trace))
}

/// Grid stitch on the component of `q` containing `u_0`.
pub(crate) fn haar_component(
    q: &BicirculantParams,
    base: &[Vertex],
    anchor: AnchorChoice,
) -> Result<(Vec<Vertex>, Stage), ConstructError> {
    let m = q.m();
    let a = single_type(q, Side::Outer)?;
    let b = single_type(q, Side::Inner)?;
    if q.spokes().len() < 2 {
        return Err(ConstructError::PreconditionViolated(
            "fewer than two spoke types".into(),
        ));
    }
    let g = q.spoke_gcd();
    if g == 1 {
        return Err(ConstructError::PreconditionViolated(
            "spoke subgraph is connected".into(),
        ));
    }
    let h = BicirculantParams::subgraph(m, &[], q.spokes(), &[]);
    verify_component_cycle(&h, g, base).map_err(ConstructError::BaseCycleInvalid)?;
    let roles = choose_roles(g, q.component_count(), a, b)?;

    let n = base.len();
    let target = Vertex {
        side: roles.x_side,
        index: 0,
    };
    let t = base
        .iter()
        .position(|&v| v == target)
        .expect("component cycle contains index 0");
    let path = super::rotated(base, (t + 1) % n);

    let grid = Grid {
        m,
        roles,
        path: &path,
    };
    let (pieces, joins, method) = if roles.rows == 0 {
        grid.single_row()?
    } else {
        let z = match anchor {
            AnchorChoice::Default if n >= 6 => 3,
            AnchorChoice::Default => 1,
            AnchorChoice::Position(z) => z,
        };
        if z % 2 == 0 || z > n - 3 {
            return Err(ConstructError::PreconditionViolated(format!(
                "anchor position {z} is not usable"
            )));
        }
        grid.full_grid(z)
    };
    let cycle = assemble(&pieces, &joins).map_err(ConstructError::InternalStitchFailure)?;
    super::check_component_cycle(q, &cycle)?;
    Ok((cycle, Stage::new(method, (a, b), q, pieces, joins)))
}

type Pieces = (Vec<Vec<Vertex>>, Vec<(Vertex, Vertex)>, Method);

struct Grid<'a> {
    m: usize,
    roles: Roles,
    /// The base cycle cut open: ends at the column-side vertex with index 0,
    /// starts at its neighbour on the cycle.
    path: &'a [Vertex],
}

fn up(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

fn down(a: usize, b: usize) -> Vec<usize> {
    (b..=a).rev().collect()
}

fn cat(parts: &[Vec<usize>]) -> Vec<usize> {
    parts.concat()
}

impl Grid<'_> {
    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.roles.y_step + j * self.roles.x_step) % self.m
    }

    fn at(&self, i: usize, j: usize, pos: usize) -> Vertex {
        self.path[pos].shifted(self.offset(i, j), self.m)
    }

    fn piece(&self, i: usize, j: usize, positions: &[usize]) -> Vec<Vertex> {
        positions.iter().map(|&pos| self.at(i, j, pos)).collect()
    }

    fn across(&self, i: usize, j: usize, pos: usize) -> (Vertex, Vertex) {
        (self.at(i, j, pos), self.at(i, j + 1, pos))
    }

    fn below(&self, i: usize, j: usize, pos: usize) -> (Vertex, Vertex) {
        (self.at(i, j, pos), self.at(i + 1, j, pos))
    }

    /// One row: the cycle has chords of the row type inside its own copy.
    fn single_row(&self) -> Result<Pieces, ConstructError> {
        let n = self.path.len();
        let m = self.m;
        let pos: HashMap<Vertex, usize> =
            self.path.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let s = self.path[0];
        let find = |v: Vertex| {
            pos.get(&v).copied().ok_or_else(|| {
                ConstructError::InternalStitchFailure(format!(
                    "row chord endpoint {v} not on the base cycle"
                ))
            })
        };
        let mut pm = find(s.shifted(m - self.roles.y_step, m))?;
        let mut pp = find(s.shifted(self.roles.y_step, m))?;
        if pm > pp {
            std::mem::swap(&mut pm, &mut pp);
        }
        let (p, l) = (pp - 1, pm + 1);
        let last = n - 1;
        let start_to_p = cat(&[down(last, pp), up(0, p)]);
        let t_to_l = cat(&[up(1, pm), vec![0], down(last, l)]);
        let mid = up(l, p);
        let start_to_t = cat(&[down(last, pp), vec![0], down(pm, 1)]);

        let lambda = self.roles.cols;
        let mut pieces = vec![self.piece(0, 0, &start_to_p)];
        for j in 1..lambda {
            pieces.push(self.piece(0, j, &mid));
            pieces.push(self.piece(0, j, &start_to_t));
        }
        let end = if lambda.is_multiple_of(2) {
            &t_to_l
        } else {
            &start_to_p
        };
        pieces.push(self.piece(0, lambda, end));

        let mut joins = Vec::new();
        for j in 0..lambda {
            let (x, y) = if j % 2 == 0 { (last, p) } else { (1, l) };
            joins.push(self.across(0, j, x));
            joins.push(self.across(0, j, y));
        }
        Ok((pieces, joins, Method::HaarRow))
    }

    /// Several rows. Requires `rows > 0`, and `cols` even whenever `rows` is.
    fn full_grid(&self, z: usize) -> Pieces {
        let n = self.path.len();
        let (h, k, one, v0, u0) = (z - 1, z + 1, n - 3, n - 2, n - 1);
        let lambda = self.roles.cols;
        let mu = self.roles.rows;
        debug_assert!(lambda > 0 && mu > 0 && !(lambda % 2 == 1 && mu.is_multiple_of(2)));

        let full = up(0, u0);
        let minus_z = cat(&[down(h, 0), down(u0, k)]);
        let minus_zh = cat(&[down(h, 0), down(u0, z)]);
        let minus_u1v0 = cat(&[down(one, 0), vec![u0, v0]]);
        let minus_u0v0 = cat(&[vec![u0], up(0, v0)]);
        let u0_to_vh = cat(&[vec![u0], up(0, h)]);
        let v0_to_uz = up(z, v0);

        let mut pieces: Vec<Vec<Vertex>> = Vec::new();
        let mut add = |i: usize, j: usize, ps: &[&Vec<usize>]| {
            for positions in ps {
                pieces.push(self.piece(i, j, positions));
            }
        };

        // Column 0.
        add(0, 0, &[&full]);
        for i in 1..mu {
            add(i, 0, &[&up(0, h), &up(z, u0)]);
        }
        add(
            mu,
            0,
            &[if mu.is_multiple_of(2) {
                &minus_zh
            } else {
                &full
            }],
        );

        // Middle columns.
        for j in 1..lambda {
            add(0, j, &[&up(0, one), &vec![v0, u0]]);
            for i in 1..mu {
                add(i, j, &[&up(0, h), &up(k, v0), &vec![u0], &vec![z]]);
            }
            if mu.is_multiple_of(2) {
                add(mu, j, &[&vec![z], &minus_z]);
            } else {
                add(mu, j, &[&vec![u0], &up(0, v0)]);
            }
        }

        // Column lambda.
        add(
            0,
            lambda,
            &[if lambda.is_multiple_of(2) {
                &minus_u1v0
            } else {
                &minus_u0v0
            }],
        );
        for i in 1..mu {
            add(i, lambda, &[&u0_to_vh, &v0_to_uz]);
        }
        add(
            mu,
            lambda,
            &[if mu.is_multiple_of(2) {
                &minus_zh
            } else {
                &minus_u0v0
            }],
        );

        let mut joins = Vec::new();
        for i in 0..mu {
            for j in 1..lambda {
                let (x, y) = if i % 2 == 0 { (0, v0) } else { (h, k) };
                joins.push(self.below(i, j, x));
                joins.push(self.below(i, j, y));
            }
            joins.push(self.below(i, 0, if i % 2 == 0 { 0 } else { h }));
            joins.push(self.below(i, lambda, if i % 2 == 0 { v0 } else { h }));
        }
        for j in 1..lambda.saturating_sub(1) {
            joins.push(self.across(0, j, if j % 2 == 0 { u0 } else { one }));
        }
        for j in 0..lambda {
            for i in 1..mu {
                joins.push(self.across(i, j, u0));
                joins.push(self.across(i, j, z));
            }
            joins.push(self.across(mu, j, if mu % 2 == 1 { u0 } else { z }));
        }
        joins.push(self.across(0, 0, u0));
        if lambda > 1 {
            joins.push(self.across(0, lambda - 1, if lambda % 2 == 1 { u0 } else { one }));
        }
        (pieces, joins, Method::HaarGrid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{component_cycle, Constraints, SearchBudget};
    use crate::params::make_params;

    fn base_for(p: &BicirculantParams) -> Vec<Vertex> {
        let h = BicirculantParams::subgraph(p.m(), &[], p.spokes(), &[]);
        component_cycle(&h, 0, &Constraints::default(), SearchBudget::default())
            .unwrap()
            .unwrap()
    }

    fn check(m: usize, a: i64, s: &[i64], b: i64) -> ConstructionTrace {
        let mi = m as i64;
        let p = make_params(m, &[a, mi - a], s, &[b, mi - b]).unwrap();
        let (cert, trace) = stitch_haar(&p, &base_for(&p)).unwrap();
        assert!(cert.counts().outer >= 2);
        assert_eq!(trace.replay(&p).unwrap(), cert);
        trace
    }

    #[test]
    fn grid_one_by_one() {
        assert_eq!(check(12, 3, &[0, 4, 8], 2).method, Method::HaarGrid);
        check(8, 1, &[0, 4], 2);
    }

    #[test]
    fn single_row_odd_columns() {
        assert_eq!(check(12, 1, &[0, 4, 8], 4).method, Method::HaarRow);
    }

    #[test]
    fn single_row_even_columns() {
        assert_eq!(check(18, 1, &[0, 6, 12], 6).method, Method::HaarRow);
    }

    #[test]
    fn swapped_roles_when_only_outer_type_shares_a_factor() {
        check(12, 4, &[0, 4, 8], 1);
    }

    #[test]
    fn every_anchor_position() {
        let p = make_params(24, &[1, 23], &[0, 8, 16], &[2, 22]).unwrap();
        let base = base_for(&p);
        for z in (1..base.len() - 2).step_by(2) {
            let (c, _) = haar_component(&p, &base, AnchorChoice::Position(z)).unwrap();
            verify_certificate(&p, &c).unwrap();
        }
    }

    #[test]
    fn rejects_coprime_types() {
        let p = make_params(10, &[1, 9], &[0, 5], &[3, 7]).unwrap();
        assert!(matches!(
            stitch_haar(&p, &base_for(&p)),
            Err(ConstructError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn rejects_foreign_base() {
        let p = make_params(12, &[1, 11], &[0, 4, 8], &[4, 8]).unwrap();
        let mut base = base_for(&p);
        base.swap(0, 1);
        assert!(matches!(
            stitch_haar(&p, &base),
            Err(ConstructError::BaseCycleInvalid(_))
        ));
    }
}
