use super::piece::BoundaryPiece;
use super::point::Point;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};
use std::fmt;

/// Relative positional tolerance for closure and convexity checks.
pub const CHAIN_REL_TOL: f64 = 1e-9;

/// Absolute tolerance on turning angles (radians).
const ANGLE_TOL: f64 = 1e-9;

/// A closed, counterclockwise, convex boundary made of segments and arcs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoundaryChain {
    pieces: Vec<BoundaryPiece>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    Empty,
    DegeneratePiece { piece: usize },
    ClosureGap { piece: usize, gap: f64 },
    NotCounterclockwise { signed_area: f64 },
    ReflexVertex { vertex: usize, at: Point, turn: f64 },
    TotalTurning { turning: f64 },
    FullCircleNotAlone { piece: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "chain has no pieces"),
            Violation::DegeneratePiece { piece } => {
                write!(f, "piece {piece} has zero length or invalid radius/extent")
            }
            Violation::ClosureGap { piece, gap } => {
                write!(
                    f,
                    "gap {gap:e} between end of piece {piece} and start of the next"
                )
            }
            Violation::NotCounterclockwise { signed_area } => {
                write!(f, "not counterclockwise (signed area {signed_area:e})")
            }
            Violation::ReflexVertex { vertex, at, turn } => {
                write!(f, "reflex vertex {vertex} at {at} (turn {turn:e} rad)")
            }
            Violation::TotalTurning { turning } => {
                write!(f, "total turning {turning} differs from 2*pi")
            }
            Violation::FullCircleNotAlone { piece } => {
                write!(f, "piece {piece} is a full circle but not the only piece")
            }
        }
    }
}

/// Result of [`validate`]: every violation found, with piece/vertex indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostics {
    pub tolerance: f64,
    pub violations: Vec<Violation>,
}

impl Diagnostics {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Signed turning from direction `a` to direction `b`, in (-pi, pi].
fn turn_between(a: Point, b: Point) -> f64 {
    let t = a.cross(b).atan2(a.dot(b));
    // A reversal is a convex turn of +pi, whatever the sign of the rounding.
    if t <= -PI + ANGLE_TOL {
        PI
    } else {
        t
    }
}

/// Checks closure, orientation and convexity of a piece list.
pub fn validate(pieces: &[BoundaryPiece]) -> Diagnostics {
    validate_with_floor(pieces, 0.0)
}

/// As [`validate`], with the closure tolerance at least `floor`.
pub(crate) fn validate_with_floor(pieces: &[BoundaryPiece], floor: f64) -> Diagnostics {
    let mut violations = Vec::new();
    if pieces.is_empty() {
        return Diagnostics {
            tolerance: 0.0,
            violations: vec![Violation::Empty],
        };
    }
    let diam = bbox_of(pieces).map(|(lo, hi)| lo.dist(hi)).unwrap_or(0.0);
    let tol = (CHAIN_REL_TOL * diam).max(floor).max(f64::MIN_POSITIVE);

    for (i, p) in pieces.iter().enumerate() {
        let ok = match *p {
            BoundaryPiece::Segment { start, end } => {
                start.is_finite() && end.is_finite() && start.dist(end) > 0.0
            }
            BoundaryPiece::Arc { center, radius, .. } => {
                let ext = p.extent();
                center.is_finite()
                    && radius.is_finite()
                    && radius > 0.0
                    && ext > 0.0
                    && ext <= TAU + ANGLE_TOL
                    && p.length() > 0.0
            }
        };
        if !ok {
            violations.push(Violation::DegeneratePiece { piece: i });
        }
        if p.extent() > TAU - ANGLE_TOL && pieces.len() > 1 {
            violations.push(Violation::FullCircleNotAlone { piece: i });
        }
    }
    if !violations.is_empty() {
        return Diagnostics {
            tolerance: tol,
            violations,
        };
    }

    let n = pieces.len();
    let mut turning = 0.0;
    for i in 0..n {
        let cur = &pieces[i];
        let next = &pieces[(i + 1) % n];
        let gap = cur.end().dist(next.start());
        if gap > tol {
            violations.push(Violation::ClosureGap { piece: i, gap });
        }
        turning += cur.extent();
        if n > 1 {
            let t = turn_between(cur.tangent_at(1.0), next.tangent_at(0.0));
            if t < -ANGLE_TOL {
                violations.push(Violation::ReflexVertex {
                    vertex: (i + 1) % n,
                    at: next.start(),
                    turn: t,
                });
            }
            turning += t;
        }
    }
    let area = signed_area_of(pieces);
    if area <= 0.0 {
        violations.push(Violation::NotCounterclockwise { signed_area: area });
    } else if (turning - TAU).abs() > 1e-7 {
        violations.push(Violation::TotalTurning { turning });
    }
    Diagnostics {
        tolerance: tol,
        violations,
    }
}

fn signed_area_of(pieces: &[BoundaryPiece]) -> f64 {
    pieces.iter().map(|p| p.green_area()).sum::<f64>() / 2.0
}

fn bbox_of(pieces: &[BoundaryPiece]) -> Option<(Point, Point)> {
    let mut it = pieces.iter().flat_map(|p| p.extreme_points());
    let first = it.next()?;
    Some(it.fold((first, first), |(lo, hi), q| {
        (
            Point::new(lo.x.min(q.x), lo.y.min(q.y)),
            Point::new(hi.x.max(q.x), hi.y.max(q.y)),
        )
    }))
}

impl BoundaryChain {
    /// Builds a chain, rejecting it if [`validate`] reports any violation.
    pub fn new(pieces: Vec<BoundaryPiece>) -> Result<Self> {
        Self::with_floor(pieces, 0.0)
    }

    /// As [`BoundaryChain::new`], with an absolute floor on the closure
    /// tolerance for chains far smaller than the coordinates they live at.
    pub(crate) fn with_floor(pieces: Vec<BoundaryPiece>, floor: f64) -> Result<Self> {
        let diag = validate_with_floor(&pieces, floor);
        if diag.is_valid() {
            Ok(BoundaryChain { pieces })
        } else {
            Err(Error::InvalidChain(diag))
        }
    }

    /// Closed polygon through `vertices` (counterclockwise).
    pub fn polygon(vertices: &[Point]) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::invalid(format!(
                "polygon needs at least 3 vertices, got {n}"
            )));
        }
        let pieces = (0..n)
            .map(|i| BoundaryPiece::segment(vertices[i], vertices[(i + 1) % n]))
            .collect();
        Self::new(pieces)
    }

    pub fn pieces(&self) -> &[BoundaryPiece] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn validate(&self) -> Diagnostics {
        validate(&self.pieces)
    }

    pub fn is_polygon(&self) -> bool {
        self.pieces.iter().all(|p| !p.is_arc())
    }

    /// Start points of the pieces (the polygon vertices for a polygon).
    pub fn vertices(&self) -> Vec<Point> {
        self.pieces.iter().map(|p| p.start()).collect()
    }

    pub fn area(&self) -> f64 {
        signed_area_of(&self.pieces)
    }

    pub fn perimeter(&self) -> f64 {
        self.pieces.iter().map(|p| p.length()).sum()
    }

    /// Area centroid.
    pub fn centroid(&self) -> Result<Point> {
        let a = self.area();
        if a.is_nan() || a <= 0.0 {
            return Err(Error::invalid("centroid of a body with zero area"));
        }
        let (mut mx, mut my) = (0.0, 0.0);
        for p in &self.pieces {
            let (x2dy, y2dx) = p.green_moments();
            mx += x2dy;
            my += y2dx;
        }
        Ok(Point::new(mx / (2.0 * a), -my / (2.0 * a)))
    }

    /// Distance from `x` to the boundary curve.
    pub fn distance_to_boundary(&self, x: Point) -> f64 {
        self.pieces
            .iter()
            .map(|p| p.distance_to(x))
            .fold(f64::INFINITY, f64::min)
    }

    /// Closest boundary point to `x`, as (piece index, parameter, point).
    pub fn nearest(&self, x: Point) -> (usize, f64, Point) {
        let mut best = (0, 0.0, self.pieces[0].start());
        let mut best_d = f64::INFINITY;
        for (i, p) in self.pieces.iter().enumerate() {
            let u = p.project(x);
            let q = p.point_at(u);
            let d = q.dist(x);
            if d < best_d {
                best_d = d;
                best = (i, u, q);
            }
        }
        best
    }

    /// Support function `max_{x in body} dir . x`.
    pub fn support(&self, dir: Point) -> f64 {
        self.pieces
            .iter()
            .map(|p| p.support(dir))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Containment in the (closed) body, with boundary tolerance `tol`.
    pub fn contains(&self, x: Point, tol: f64) -> bool {
        let (_, _, q) = self.nearest(x);
        let d = q.dist(x);
        if d <= tol {
            return true;
        }
        // For a convex body, x is outside iff the direction from its nearest
        // boundary point separates it from the body.
        let u = (x - q) * (1.0 / d);
        self.support(u) >= u.dot(x) - tol
    }

    /// Farthest boundary point from `q`.
    pub fn farthest_from(&self, q: Point) -> (Point, f64) {
        self.pieces
            .iter()
            .map(|p| p.farthest_from(q))
            .fold((q, f64::NEG_INFINITY), |a, b| if b.1 > a.1 { b } else { a })
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bbox(&self) -> (Point, Point) {
        bbox_of(&self.pieces).expect("validated chains are nonempty")
    }

    /// Diameter, from exact farthest-point queries at sampled boundary points.
    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for p in &self.pieces {
            for i in 0..=64 {
                let x = p.point_at(i as f64 / 64.0);
                d = d.max(self.farthest_from(x).1);
            }
        }
        d
    }

    /// Samples `per_piece + 1` points along every piece (shared endpoints repeat).
    pub fn sample(&self, per_piece: usize) -> Vec<Point> {
        self.pieces
            .iter()
            .flat_map(|p| (0..=per_piece).map(move |i| p.point_at(i as f64 / per_piece as f64)))
            .collect()
    }

    pub fn rotated_about(&self, pivot: Point, angle: f64) -> BoundaryChain {
        BoundaryChain {
            pieces: self
                .pieces
                .iter()
                .map(|p| p.rotated_about(pivot, angle))
                .collect(),
        }
    }

    pub fn translated(&self, by: Point) -> BoundaryChain {
        BoundaryChain {
            pieces: self.pieces.iter().map(|p| p.translated(by)).collect(),
        }
    }

    pub fn scaled(&self, k: f64) -> BoundaryChain {
        BoundaryChain {
            pieces: self.pieces.iter().map(|p| p.scaled(k)).collect(),
        }
    }

    /// Largest turning angle at a junction between consecutive pieces.
    pub fn max_junction_turn(&self) -> f64 {
        let n = self.pieces.len();
        if n < 2 {
            return 0.0;
        }
        (0..n)
            .map(|i| {
                turn_between(
                    self.pieces[i].tangent_at(1.0),
                    self.pieces[(i + 1) % n].tangent_at(0.0),
                )
                .abs()
            })
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> BoundaryChain {
        BoundaryChain::polygon(&[
            Point::new(-0.5, -0.5),
            Point::new(0.5, -0.5),
            Point::new(0.5, 0.5),
            Point::new(-0.5, 0.5),
        ])
        .unwrap()
    }

    #[test]
    fn square_measures() {
        let sq = unit_square();
        assert!((sq.area() - 1.0).abs() < 1e-15);
        assert!((sq.perimeter() - 4.0).abs() < 1e-15);
        let c = sq.centroid().unwrap();
        assert!(c.norm() < 1e-15);
    }

    #[test]
    fn disk_measures() {
        let d = BoundaryChain::new(vec![BoundaryPiece::full_circle(Point::new(2.0, 3.0), 1.0)])
            .unwrap();
        assert!((d.area() - PI).abs() < 1e-14);
        assert!((d.perimeter() - TAU).abs() < 1e-14);
        assert!(d.centroid().unwrap().dist(Point::new(2.0, 3.0)) < 1e-14);
    }

    #[test]
    fn triangle_centroid() {
        let t = BoundaryChain::polygon(&[
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let c = t.centroid().unwrap();
        assert!(c.dist(Point::new(1.0 / 3.0, 1.0 / 3.0)) < 1e-15);
    }

    #[test]
    fn distances_to_boundary() {
        let sq = unit_square();
        assert!((sq.distance_to_boundary(Point::ORIGIN) - 0.5).abs() < 1e-15);
        assert!(sq.distance_to_boundary(Point::new(0.5, 0.1)) < 1e-15);
        let d = BoundaryChain::new(vec![BoundaryPiece::full_circle(Point::ORIGIN, 1.0)]).unwrap();
        assert!((d.distance_to_boundary(Point::new(0.3, 0.0)) - 0.7).abs() < 1e-15);
    }

    #[test]
    fn reflex_vertex_is_reported() {
        let pts = [
            Point::new(-0.5, -0.5),
            Point::new(0.5, -0.5),
            Point::new(-0.1, -0.1),
            Point::new(-0.5, 0.5),
        ];
        let pieces: Vec<_> = (0..4)
            .map(|i| BoundaryPiece::segment(pts[i], pts[(i + 1) % 4]))
            .collect();
        let diag = validate(&pieces);
        assert!(diag
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ReflexVertex { vertex: 2, .. })));
        assert!(diag.to_string().contains("reflex vertex 2"));
    }

    #[test]
    fn closure_gap_is_reported() {
        let mut pieces = unit_square().pieces().to_vec();
        if let BoundaryPiece::Segment { end, .. } = &mut pieces[1] {
            end.y += 1e-3;
        }
        let diag = validate(&pieces);
        assert!(diag
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ClosureGap { piece: 1, .. })));
    }

    #[test]
    fn clockwise_is_rejected() {
        let mut v = unit_square().vertices();
        v.reverse();
        assert!(matches!(
            BoundaryChain::polygon(&v),
            Err(Error::InvalidChain(_))
        ));
    }

    #[test]
    fn containment() {
        let sq = unit_square();
        assert!(sq.contains(Point::new(0.49, -0.49), 0.0));
        assert!(!sq.contains(Point::new(0.51, 0.0), 1e-3));
        assert!(!sq.contains(Point::new(0.6, 0.6), 1e-3));
        assert!(sq.contains(Point::new(0.5005, 0.0), 1e-3));
    }

    #[test]
    fn square_diameter() {
        assert!((unit_square().diameter() - 2f64.sqrt()).abs() < 1e-12);
    }
}
