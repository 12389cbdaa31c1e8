//! Boundary extraction for intersections of halfplanes and disks.
//!
//! Vertices are the feasible pairwise intersections of constraint boundaries
//! (line-line, line-circle, circle-circle), merged when closer than the
//! feasibility tolerance. Along each constraint boundary the feasible
//! vertices split it into candidate pieces; a candidate belongs to the body
//! boundary when its midpoint is feasible. Pieces are chained through their
//! shared vertex indices, starting from the piece whose midpoint outward
//! normal has the smallest polar angle.

use super::constraints::{Disk, Halfplane};
use crate::error::{Error, Result};
use crate::geometry::{wrap_angle, BoundaryChain, BoundaryPiece, Point};
use std::f64::consts::{PI, TAU};

/// Feasibility and vertex-merge tolerance, relative to the scale of the constraint set.
pub(crate) const FEAS_REL_TOL: f64 = 1e-12;

/// Bodies thinner than this, relative to the scale, are reported degenerate.
pub const DEGENERATE_REL_TOL: f64 = 1e-10;

/// Extraction failures on bodies smaller than this, relative to the scale,
/// are rounding artifacts of a collapsing body and reported as degenerate.
const COLLAPSE_REL_TOL: f64 = 1e-6;

/// Closure tolerance floor for extracted chains, relative to the scale.
const CLOSURE_FLOOR_REL: f64 = 1e-13;

#[derive(Debug, Clone, Copy)]
pub(crate) enum Constraint {
    Half(Halfplane),
    Disk(Disk),
}

impl Constraint {
    /// Signed violation: positive outside, distance-like near the boundary.
    pub(crate) fn violation(&self, x: Point) -> f64 {
        match self {
            Constraint::Half(h) => h.normal.dot(x) - h.offset,
            Constraint::Disk(d) => x.dist(d.center) - d.radius,
        }
    }

    pub(crate) fn same_as(&self, other: &Constraint, tol: f64) -> bool {
        match (self, other) {
            (Constraint::Half(a), Constraint::Half(b)) => {
                a.normal.dist(b.normal) <= 1e-14 && (a.offset - b.offset).abs() <= tol
            }
            (Constraint::Disk(a), Constraint::Disk(b)) => {
                a.center.dist(b.center) <= tol && (a.radius - b.radius).abs() <= tol
            }
            _ => false,
        }
    }

    /// Position of a boundary point along the constraint boundary, increasing
    /// counterclockwise.
    fn param(&self, x: Point) -> f64 {
        match self {
            Constraint::Half(h) => h.normal.perp().dot(x),
            Constraint::Disk(d) => wrap_angle((x - d.center).angle()),
        }
    }
}

fn intersections(a: &Constraint, b: &Constraint, tol: f64) -> Vec<Point> {
    match (a, b) {
        (Constraint::Half(h1), Constraint::Half(h2)) => {
            let det = h1.normal.cross(h2.normal);
            if det.abs() < 1e-14 {
                return vec![];
            }
            vec![Point::new(
                (h1.offset * h2.normal.y - h2.offset * h1.normal.y) / det,
                (h1.normal.x * h2.offset - h2.normal.x * h1.offset) / det,
            )]
        }
        (Constraint::Half(h), Constraint::Disk(d)) | (Constraint::Disk(d), Constraint::Half(h)) => {
            let dist = h.normal.dot(d.center) - h.offset;
            if dist.abs() > d.radius + tol {
                return vec![];
            }
            let foot = d.center - h.normal * dist;
            let half = (d.radius * d.radius - dist * dist).max(0.0).sqrt();
            if half == 0.0 {
                return vec![foot];
            }
            let dir = h.normal.perp();
            vec![foot + dir * half, foot - dir * half]
        }
        (Constraint::Disk(d1), Constraint::Disk(d2)) => {
            let v = d2.center - d1.center;
            let dd = v.norm();
            if dd < tol {
                return vec![];
            }
            if dd > d1.radius + d2.radius + tol || dd < (d1.radius - d2.radius).abs() - tol {
                return vec![];
            }
            let a = (dd * dd + d1.radius * d1.radius - d2.radius * d2.radius) / (2.0 * dd);
            let h = (d1.radius * d1.radius - a * a).max(0.0).sqrt();
            let u = v * (1.0 / dd);
            let base = d1.center + u * a;
            if h == 0.0 {
                return vec![base];
            }
            vec![base + u.perp() * h, base - u.perp() * h]
        }
    }
}

pub(crate) struct Extraction {
    pub chain: BoundaryChain,
}

struct Candidate {
    constraint: usize,
    from: usize,
    to: usize,
    /// Angular span for arcs (radians); unused for segments.
    span: f64,
    mid_normal: f64,
}

fn bounded_halfplanes(cons: &[Constraint]) -> bool {
    let mut angles: Vec<f64> = cons
        .iter()
        .filter_map(|c| match c {
            Constraint::Half(h) => Some(wrap_angle(h.normal.angle())),
            Constraint::Disk(_) => None,
        })
        .collect();
    if angles.len() < 3 {
        return false;
    }
    angles.sort_by(f64::total_cmp);
    let mut max_gap = angles[0] + TAU - angles[angles.len() - 1];
    for w in angles.windows(2) {
        max_gap = max_gap.max(w[1] - w[0]);
    }
    max_gap < PI - 1e-12
}

/// Extracts the CCW boundary chain of the intersection of `cons`.
pub(crate) fn extract(cons: &[Constraint], scale: f64) -> Result<Extraction> {
    if cons.is_empty() {
        return Err(Error::invalid("no constraints"));
    }
    let has_disk = cons.iter().any(|c| matches!(c, Constraint::Disk(_)));
    if !has_disk && !bounded_halfplanes(cons) {
        return Err(Error::Unbounded);
    }
    let tol = FEAS_REL_TOL * scale;
    let feasible = |x: Point| cons.iter().all(|c| c.violation(x) <= tol);

    // Feasible vertices, merged.
    let mut verts: Vec<Point> = Vec::new();
    for i in 0..cons.len() {
        for j in i + 1..cons.len() {
            for p in intersections(&cons[i], &cons[j], tol) {
                if p.is_finite() && feasible(p) && !verts.iter().any(|v| v.dist(p) <= tol) {
                    verts.push(p);
                }
            }
        }
    }

    let mut candidates: Vec<Candidate> = Vec::new();
    let mut full_circle: Option<usize> = None;
    for (k, c) in cons.iter().enumerate() {
        let mut on: Vec<(f64, usize)> = verts
            .iter()
            .enumerate()
            .filter(|(_, v)| c.violation(**v).abs() <= tol)
            .map(|(i, v)| (c.param(*v), i))
            .collect();
        on.sort_by(|a, b| a.0.total_cmp(&b.0));
        match c {
            Constraint::Half(h) => {
                for w in on.windows(2) {
                    let (a, b) = (w[0].1, w[1].1);
                    let mid = verts[a].lerp(verts[b], 0.5);
                    if feasible(mid) {
                        candidates.push(Candidate {
                            constraint: k,
                            from: a,
                            to: b,
                            span: 0.0,
                            mid_normal: wrap_angle(h.normal.angle()),
                        });
                    }
                }
            }
            Constraint::Disk(d) => {
                if on.is_empty() {
                    if full_circle.is_none() && feasible(d.center + Point::new(d.radius, 0.0)) {
                        full_circle = Some(k);
                    }
                    continue;
                }
                let m = on.len();
                for i in 0..m {
                    let (ta, a) = on[i];
                    let (tb, b) = on[(i + 1) % m];
                    let span = if m == 1 { TAU } else { wrap_angle(tb - ta) };
                    if span <= 0.0 {
                        continue;
                    }
                    let mid_angle = ta + span / 2.0;
                    let mid = d.center + Point::polar(mid_angle) * d.radius;
                    if feasible(mid) {
                        candidates.push(Candidate {
                            constraint: k,
                            from: a,
                            to: b,
                            span,
                            mid_normal: wrap_angle(mid_angle),
                        });
                    }
                }
            }
        }
    }

    if candidates.is_empty() {
        if let Some(k) = full_circle {
            if let Constraint::Disk(d) = cons[k] {
                if d.radius <= DEGENERATE_REL_TOL * scale {
                    return Err(Error::Degenerate {
                        tol: DEGENERATE_REL_TOL * scale,
                    });
                }
                let chain =
                    BoundaryChain::new(vec![BoundaryPiece::full_circle(d.center, d.radius)])?;
                return Ok(Extraction { chain });
            }
        }
        return Err(if verts.is_empty() {
            Error::EmptyBody
        } else {
            Error::Degenerate { tol }
        });
    }

    let deg_tol = DEGENERATE_REL_TOL * scale;
    let assembled = assemble(cons, &verts, candidates).and_then(|pieces| {
        let area = pieces.iter().map(|q| q.green_area()).sum::<f64>() / 2.0;
        let perimeter: f64 = pieces.iter().map(BoundaryPiece::length).sum();
        if 2.0 * area <= deg_tol * perimeter {
            return Err(Error::Degenerate { tol: deg_tol });
        }
        BoundaryChain::with_floor(pieces, CLOSURE_FLOOR_REL * scale).map_err(|e| match e {
            Error::InvalidChain(d) => {
                Error::Consistency(format!("extracted boundary is invalid: {d}"))
            }
            other => other,
        })
    });
    match assembled {
        Ok(chain) => Ok(Extraction { chain }),
        Err(Error::Consistency(_)) if spread(&verts) <= COLLAPSE_REL_TOL * scale => {
            Err(Error::Degenerate { tol: deg_tol })
        }
        Err(e) => Err(e),
    }
}

fn spread(points: &[Point]) -> f64 {
    let Some(&first) = points.first() else {
        return 0.0;
    };
    let (lo, hi) = points.iter().fold((first, first), |(lo, hi), q| {
        (
            Point::new(lo.x.min(q.x), lo.y.min(q.y)),
            Point::new(hi.x.max(q.x), hi.y.max(q.y)),
        )
    });
    lo.dist(hi)
}

/// Chains the candidate pieces into a boundary, one outgoing piece per vertex.
fn assemble(
    cons: &[Constraint],
    verts: &[Point],
    mut candidates: Vec<Candidate>,
) -> Result<Vec<BoundaryPiece>> {
    // Coincident boundaries near tangency can offer several pieces.
    candidates.sort_by(|a, b| a.mid_normal.total_cmp(&b.mid_normal));
    let mut outgoing: Vec<Option<usize>> = vec![None; verts.len()];
    for (ci, c) in candidates.iter().enumerate() {
        if outgoing[c.from].is_none() {
            outgoing[c.from] = Some(ci);
        }
    }
    let first = 0;
    let mut order = vec![first];
    let mut cur = candidates[first].to;
    while cur != candidates[first].from {
        let next = outgoing[cur].ok_or_else(|| {
            Error::Consistency(format!(
                "boundary extraction: no piece leaves vertex {}",
                verts[cur]
            ))
        })?;
        if order.len() > candidates.len() {
            return Err(Error::Consistency(
                "boundary extraction did not close".into(),
            ));
        }
        order.push(next);
        cur = candidates[next].to;
    }

    Ok(order
        .iter()
        .map(|&ci| {
            let c = &candidates[ci];
            match cons[c.constraint] {
                Constraint::Half(_) => BoundaryPiece::segment(verts[c.from], verts[c.to]),
                Constraint::Disk(d) => BoundaryPiece::arc(
                    d.center,
                    d.radius,
                    (verts[c.from] - d.center).angle(),
                    c.span,
                ),
            }
        })
        .collect())
}
