//! Exact area of inner parallel sets of convex polygons.
//!
//! Between edge-collapse events every edge of the offset polygon moves
//! inward at unit speed and each edge shrinks at rate
//! `cot(theta_a/2) + cot(theta_b/2)` from its two interior angles, so the
//! area is the quadratic `A - P*tau + T*tau^2` with `T = sum cot(theta_i/2)`.

use crate::error::{Error, Result};
use crate::geometry::{BoundaryChain, BoundaryPiece, Point};

#[derive(Debug, Clone, PartialEq)]
pub struct ScheduleInterval {
    /// Offset distance at which the interval starts.
    pub start: f64,
    pub end: f64,
    /// Vertices of the offset polygon at `start`.
    pub snapshot: Vec<Point>,
    pub area: f64,
    pub perimeter: f64,
    /// Sum of `cot(theta_i/2)` over the interior angles of the snapshot.
    pub corner_sum: f64,
}

impl ScheduleInterval {
    /// Area at offset `t` (only meaningful inside the interval).
    pub fn area_at(&self, t: f64) -> f64 {
        let tau = t - self.start;
        self.area - self.perimeter * tau + self.corner_sum * tau * tau
    }
}

/// Piecewise-quadratic description of `t -> A(body^t)` for a convex polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct OffsetSchedule {
    intervals: Vec<ScheduleInterval>,
}

#[derive(Debug, Clone, Copy)]
struct Line {
    normal: Point,
    offset: f64,
}

fn meet(a: &Line, b: &Line) -> Option<Point> {
    let det = a.normal.cross(b.normal);
    if det.abs() < 1e-14 {
        return None;
    }
    Some(Point::new(
        (a.offset * b.normal.y - b.offset * a.normal.y) / det,
        (a.normal.x * b.offset - b.normal.x * a.offset) / det,
    ))
}

fn half_turn_tan(a: Point, b: Point) -> f64 {
    (a.cross(b).atan2(a.dot(b)) / 2.0).tan()
}

impl OffsetSchedule {
    /// Builds the schedule of a polygon chain (segments only).
    pub fn new(polygon: &BoundaryChain) -> Result<Self> {
        let mut lines: Vec<Line> = Vec::with_capacity(polygon.len());
        for p in polygon.pieces() {
            match *p {
                BoundaryPiece::Segment { start, end } => {
                    let d = (end - start).normalized();
                    let normal = Point::new(d.y, -d.x);
                    lines.push(Line {
                        normal,
                        offset: normal.dot(start),
                    });
                }
                BoundaryPiece::Arc { .. } => {
                    return Err(Error::invalid(
                        "offset schedule requires a polygon (segments only)",
                    ))
                }
            }
        }
        let len_tol = 1e-12 * polygon.diameter();

        let mut intervals = Vec::new();
        let mut t = 0.0;
        while lines.len() >= 3 {
            let n = lines.len();
            let mut verts = Vec::with_capacity(n);
            for i in 0..n {
                match meet(&lines[(i + n - 1) % n], &lines[i]) {
                    Some(v) => verts.push(v),
                    None => break,
                }
            }
            if verts.len() < n {
                break;
            }
            let tans: Vec<f64> = (0..n)
                .map(|i| half_turn_tan(lines[(i + n - 1) % n].normal, lines[i].normal))
                .collect();
            let lens: Vec<f64> = (0..n)
                .map(|i| (verts[(i + 1) % n] - verts[i]).dot(lines[i].normal.perp()))
                .collect();
            let area = (0..n)
                .map(|i| verts[i].cross(verts[(i + 1) % n]))
                .sum::<f64>()
                / 2.0;
            if area <= len_tol * len_tol || lens.iter().any(|&l| l < -len_tol) {
                break;
            }
            let rates: Vec<f64> = (0..n).map(|i| tans[i] + tans[(i + 1) % n]).collect();
            let dt = (0..n)
                .map(|i| lens[i].max(0.0) / rates[i])
                .fold(f64::INFINITY, f64::min);
            if dt > 0.0 {
                intervals.push(ScheduleInterval {
                    start: t,
                    end: t + dt,
                    snapshot: verts,
                    area,
                    perimeter: lens.iter().sum(),
                    corner_sum: tans.iter().sum(),
                });
            }
            t += dt;
            lines = (0..n)
                .filter(|&i| lens[i] - rates[i] * dt > len_tol)
                .map(|i| Line {
                    normal: lines[i].normal,
                    offset: lines[i].offset - dt,
                })
                .collect();
        }
        if intervals.is_empty() {
            return Err(Error::Degenerate { tol: len_tol });
        }
        Ok(OffsetSchedule { intervals })
    }

    pub fn intervals(&self) -> &[ScheduleInterval] {
        &self.intervals
    }

    /// `0 = t_0 < t_1 < ... < t_m = inradius`.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut b: Vec<f64> = self.intervals.iter().map(|i| i.start).collect();
        b.push(self.inradius());
        b
    }

    /// Offset at which the polygon collapses to a point or segment.
    pub fn inradius(&self) -> f64 {
        self.intervals.last().map(|i| i.end).unwrap_or(0.0)
    }

    /// Interval index containing `t`, if `0 <= t < inradius`.
    pub fn interval_index(&self, t: f64) -> Option<usize> {
        if t < 0.0 || t >= self.inradius() {
            return None;
        }
        Some(
            self.intervals
                .partition_point(|i| i.end <= t)
                .min(self.intervals.len() - 1),
        )
    }

    /// `A(body^t)`, zero at and beyond the inradius.
    pub fn area_at(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return self.intervals[0].area;
        }
        match self.interval_index(t) {
            Some(j) => self.intervals[j].area_at(t).max(0.0),
            None => 0.0,
        }
    }
}
