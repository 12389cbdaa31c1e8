use super::point::{wrap_angle, Point};
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

/// One piece of a boundary: a straight segment or a counterclockwise circular arc.
///
/// Arcs are always traversed counterclockwise from `start_angle` to
/// `end_angle`, with `end_angle > start_angle`. A full circle is an arc with
/// extent exactly `2*pi`; it is only meaningful as the sole piece of a chain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundaryPiece {
    Segment {
        start: Point,
        end: Point,
    },
    Arc {
        center: Point,
        radius: f64,
        start_angle: f64,
        end_angle: f64,
    },
}

impl BoundaryPiece {
    pub fn segment(start: Point, end: Point) -> Self {
        BoundaryPiece::Segment { start, end }
    }

    /// CCW arc from `start_angle` sweeping `extent` radians.
    pub fn arc(center: Point, radius: f64, start_angle: f64, extent: f64) -> Self {
        BoundaryPiece::Arc {
            center,
            radius,
            start_angle,
            end_angle: start_angle + extent,
        }
    }

    pub fn full_circle(center: Point, radius: f64) -> Self {
        Self::arc(center, radius, 0.0, TAU)
    }

    pub fn is_arc(&self) -> bool {
        matches!(self, BoundaryPiece::Arc { .. })
    }

    pub fn radius(&self) -> Option<f64> {
        match *self {
            BoundaryPiece::Arc { radius, .. } => Some(radius),
            BoundaryPiece::Segment { .. } => None,
        }
    }

    /// Angular extent of an arc; zero for segments.
    pub fn extent(&self) -> f64 {
        match *self {
            BoundaryPiece::Arc {
                start_angle,
                end_angle,
                ..
            } => end_angle - start_angle,
            BoundaryPiece::Segment { .. } => 0.0,
        }
    }

    pub fn start(&self) -> Point {
        self.point_at(0.0)
    }

    pub fn end(&self) -> Point {
        self.point_at(1.0)
    }

    pub fn midpoint(&self) -> Point {
        self.point_at(0.5)
    }

    /// Point at normalized parameter `u` in [0, 1] (uniform in arc length).
    pub fn point_at(&self, u: f64) -> Point {
        match *self {
            BoundaryPiece::Segment { start, end } => {
                if u == 1.0 {
                    end
                } else {
                    start.lerp(end, u)
                }
            }
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                end_angle,
            } => {
                let theta = start_angle + u * (end_angle - start_angle);
                center + Point::polar(theta) * radius
            }
        }
    }

    pub fn length(&self) -> f64 {
        match *self {
            BoundaryPiece::Segment { start, end } => start.dist(end),
            BoundaryPiece::Arc { radius, .. } => radius * self.extent(),
        }
    }

    /// Unit tangent (direction of travel) at parameter `u`.
    pub fn tangent_at(&self, u: f64) -> Point {
        match *self {
            BoundaryPiece::Segment { start, end } => (end - start).normalized(),
            BoundaryPiece::Arc {
                start_angle,
                end_angle,
                ..
            } => Point::polar(start_angle + u * (end_angle - start_angle)).perp(),
        }
    }

    /// Polar angle of the outward normal at parameter `u`, for a CCW boundary.
    pub fn normal_angle_at(&self, u: f64) -> f64 {
        match *self {
            BoundaryPiece::Segment { start, end } => {
                let d = end - start;
                Point::new(d.y, -d.x).angle()
            }
            BoundaryPiece::Arc {
                start_angle,
                end_angle,
                ..
            } => start_angle + u * (end_angle - start_angle),
        }
    }

    /// Whether polar angle `theta` (about the arc center) lies on the arc.
    fn arc_param_of_angle(start_angle: f64, extent: f64, theta: f64) -> Option<f64> {
        let rel = wrap_angle(theta - start_angle);
        if rel <= extent {
            Some(rel / extent)
        } else if extent >= TAU {
            Some(0.0)
        } else {
            None
        }
    }

    /// Parameter of the closest point on the piece to `x`.
    pub fn project(&self, x: Point) -> f64 {
        match *self {
            BoundaryPiece::Segment { start, end } => {
                let d = end - start;
                let l2 = d.dot(d);
                if l2 == 0.0 {
                    0.0
                } else {
                    ((x - start).dot(d) / l2).clamp(0.0, 1.0)
                }
            }
            BoundaryPiece::Arc { center, .. } => {
                let ext = self.extent();
                let v = x - center;
                if v.norm() == 0.0 {
                    return 0.0;
                }
                let rel = wrap_angle(v.angle() - self.start_angle());
                if rel <= ext {
                    rel / ext
                } else {
                    // Outside the arc's angular range: nearest endpoint.
                    let to_end = rel - ext;
                    let to_start = TAU - rel;
                    if to_end < to_start {
                        1.0
                    } else {
                        0.0
                    }
                }
            }
        }
    }

    fn start_angle(&self) -> f64 {
        match *self {
            BoundaryPiece::Arc { start_angle, .. } => start_angle,
            BoundaryPiece::Segment { .. } => 0.0,
        }
    }

    /// Euclidean distance from `x` to the piece.
    pub fn distance_to(&self, x: Point) -> f64 {
        match *self {
            BoundaryPiece::Segment { .. } => self.point_at(self.project(x)).dist(x),
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                end_angle,
            } => {
                let v = x - center;
                let r = v.norm();
                if r == 0.0 {
                    return radius;
                }
                match Self::arc_param_of_angle(start_angle, end_angle - start_angle, v.angle()) {
                    Some(_) => (r - radius).abs(),
                    None => self.start().dist(x).min(self.end().dist(x)),
                }
            }
        }
    }

    /// Farthest point of the piece from `q` and its distance.
    pub fn farthest_from(&self, q: Point) -> (Point, f64) {
        let (a, b) = (self.start(), self.end());
        let mut best = if a.dist(q) >= b.dist(q) {
            (a, a.dist(q))
        } else {
            (b, b.dist(q))
        };
        if let BoundaryPiece::Arc {
            center,
            radius,
            start_angle,
            end_angle,
        } = *self
        {
            let v = center - q;
            if v.norm() > 0.0
                && Self::arc_param_of_angle(start_angle, end_angle - start_angle, v.angle())
                    .is_some()
            {
                let p = center + v.normalized() * radius;
                let d = p.dist(q);
                if d > best.1 {
                    best = (p, d);
                }
            }
        }
        best
    }

    /// Support function: max of `dir . x` over the piece.
    pub fn support(&self, dir: Point) -> f64 {
        let mut h = self.start().dot(dir).max(self.end().dot(dir));
        if let BoundaryPiece::Arc {
            center,
            radius,
            start_angle,
            end_angle,
        } = *self
        {
            if Self::arc_param_of_angle(start_angle, end_angle - start_angle, dir.angle()).is_some()
            {
                h = h.max(center.dot(dir) + radius * dir.norm());
            }
        }
        h
    }

    /// Sub-piece between parameters `u0 < u1`.
    pub fn sub(&self, u0: f64, u1: f64) -> BoundaryPiece {
        match *self {
            BoundaryPiece::Segment { .. } => {
                BoundaryPiece::segment(self.point_at(u0), self.point_at(u1))
            }
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                end_angle,
            } => {
                let ext = end_angle - start_angle;
                BoundaryPiece::Arc {
                    center,
                    radius,
                    start_angle: start_angle + u0 * ext,
                    end_angle: start_angle + u1 * ext,
                }
            }
        }
    }

    pub fn translated(&self, by: Point) -> BoundaryPiece {
        match *self {
            BoundaryPiece::Segment { start, end } => BoundaryPiece::segment(start + by, end + by),
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                end_angle,
            } => BoundaryPiece::Arc {
                center: center + by,
                radius,
                start_angle,
                end_angle,
            },
        }
    }

    pub fn rotated_about(&self, pivot: Point, angle: f64) -> BoundaryPiece {
        match *self {
            BoundaryPiece::Segment { start, end } => BoundaryPiece::segment(
                start.rotated_about(pivot, angle),
                end.rotated_about(pivot, angle),
            ),
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                end_angle,
            } => BoundaryPiece::Arc {
                center: center.rotated_about(pivot, angle),
                radius,
                start_angle: start_angle + angle,
                end_angle: end_angle + angle,
            },
        }
    }

    /// Homothety about the origin with factor `k > 0`.
    pub fn scaled(&self, k: f64) -> BoundaryPiece {
        match *self {
            BoundaryPiece::Segment { start, end } => BoundaryPiece::segment(start * k, end * k),
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                end_angle,
            } => BoundaryPiece::Arc {
                center: center * k,
                radius: radius * k,
                start_angle,
                end_angle,
            },
        }
    }

    /// Line integral of `x dy - y dx` along the piece (twice the signed area
    /// swept relative to the origin).
    pub(crate) fn green_area(&self) -> f64 {
        match *self {
            BoundaryPiece::Segment { start, end } => start.cross(end),
            BoundaryPiece::Arc {
                center: c,
                radius: r,
                start_angle: a,
                end_angle: b,
            } => r * c.x * (b.sin() - a.sin()) - r * c.y * (b.cos() - a.cos()) + r * r * (b - a),
        }
    }

    /// Line integrals `(int x^2 dy, int y^2 dx)` along the piece.
    pub(crate) fn green_moments(&self) -> (f64, f64) {
        match *self {
            BoundaryPiece::Segment { start: p, end: q } => {
                let d = q - p;
                (
                    d.y * (p.x * p.x + p.x * d.x + d.x * d.x / 3.0),
                    d.x * (p.y * p.y + p.y * d.y + d.y * d.y / 3.0),
                )
            }
            BoundaryPiece::Arc {
                center: c,
                radius: r,
                start_angle: a,
                end_angle: b,
            } => {
                let ds = b.sin() - a.sin();
                let dc = b.cos() - a.cos();
                let cos2 = (b - a) / 2.0 + ((2.0 * b).sin() - (2.0 * a).sin()) / 4.0;
                let sin2 = (b - a) / 2.0 - ((2.0 * b).sin() - (2.0 * a).sin()) / 4.0;
                let cos3 = ds - (b.sin().powi(3) - a.sin().powi(3)) / 3.0;
                let sin3 = -dc + (b.cos().powi(3) - a.cos().powi(3)) / 3.0;
                let x2dy = r * (c.x * c.x * ds + 2.0 * c.x * r * cos2 + r * r * cos3);
                let y2dx = -r * (c.y * c.y * (-dc) + 2.0 * c.y * r * sin2 + r * r * sin3);
                (x2dy, y2dx)
            }
        }
    }

    /// Points that bound the piece: endpoints plus arc extremes along the axes.
    pub(crate) fn extreme_points(&self) -> Vec<Point> {
        let mut pts = vec![self.start(), self.end()];
        if let BoundaryPiece::Arc {
            center,
            radius,
            start_angle,
            end_angle,
        } = *self
        {
            for q in 0..4 {
                let theta = q as f64 * PI / 2.0;
                if Self::arc_param_of_angle(start_angle, end_angle - start_angle, theta).is_some() {
                    pts.push(center + Point::polar(theta) * radius);
                }
            }
        }
        pts
    }
}
