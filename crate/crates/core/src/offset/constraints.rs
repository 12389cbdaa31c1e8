use crate::error::{Error, Result};
use crate::geometry::{BoundaryChain, Point};
use serde::{Deserialize, Serialize};

use super::extract::{extract, Constraint};

/// Constraints whose boundary is farther than this (relative to the
/// diameter) from the body are pruned.
pub const PRUNE_REL_TOL: f64 = 1e-12;

/// The halfplane `{x : normal . x <= offset}` with a unit normal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Halfplane {
    pub normal: Point,
    pub offset: f64,
}

/// The closed disk `{x : |x - center| <= radius}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

/// A convex body given as an intersection of halfplanes and disks.
///
/// Construction extracts the boundary, prunes constraints that do not touch
/// the body and caches the boundary. The `scale` is inherited by erosions so
/// that all tolerances stay tied to the original body.
#[derive(Debug, Clone)]
pub struct ConstraintSpec {
    halfplanes: Vec<Halfplane>,
    disks: Vec<Disk>,
    boundary: BoundaryChain,
    scale: f64,
}

impl ConstraintSpec {
    pub fn new(halfplanes: Vec<Halfplane>, disks: Vec<Disk>) -> Result<Self> {
        let mut hs = Vec::with_capacity(halfplanes.len());
        for (i, h) in halfplanes.iter().enumerate() {
            let len = h.normal.norm();
            if !(h.offset.is_finite() && h.normal.is_finite()) || (len - 1.0).abs() > 1e-6 {
                return Err(Error::invalid(format!(
                    "halfplane {i}: normal must be a finite unit vector and offset finite"
                )));
            }
            hs.push(Halfplane {
                normal: h.normal * (1.0 / len),
                offset: h.offset,
            });
        }
        for (i, d) in disks.iter().enumerate() {
            if !(d.center.is_finite() && d.radius.is_finite() && d.radius > 0.0) {
                return Err(Error::invalid(format!(
                    "disk {i}: center must be finite and radius positive"
                )));
            }
        }
        let scale = hs
            .iter()
            .map(|h| h.offset.abs())
            .chain(disks.iter().map(|d| d.center.norm() + d.radius))
            .fold(0.0, f64::max);
        let scale = if scale > 0.0 { scale } else { 1.0 };
        Self::with_scale(hs, disks, scale)
    }

    pub(crate) fn with_scale(
        halfplanes: Vec<Halfplane>,
        disks: Vec<Disk>,
        scale: f64,
    ) -> Result<Self> {
        let tol = 1e-12 * scale;
        let mut cons: Vec<Constraint> = Vec::new();
        for h in &halfplanes {
            let c = Constraint::Half(*h);
            if !cons.iter().any(|o| o.same_as(&c, tol)) {
                cons.push(c);
            }
        }
        for d in &disks {
            let c = Constraint::Disk(*d);
            if !cons.iter().any(|o| o.same_as(&c, tol)) {
                cons.push(c);
            }
        }
        let boundary = extract(&cons, scale)?.chain;

        let prune_tol = PRUNE_REL_TOL * boundary.diameter();
        let mut kept_h = Vec::new();
        let mut kept_d = Vec::new();
        for c in cons {
            match c {
                Constraint::Half(h) => {
                    if h.offset - boundary.support(h.normal) <= prune_tol {
                        kept_h.push(h);
                    }
                }
                Constraint::Disk(d) => {
                    if d.radius - boundary.farthest_from(d.center).1 <= prune_tol {
                        kept_d.push(d);
                    }
                }
            }
        }
        Ok(ConstraintSpec {
            halfplanes: kept_h,
            disks: kept_d,
            boundary,
            scale,
        })
    }

    pub fn halfplanes(&self) -> &[Halfplane] {
        &self.halfplanes
    }

    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    /// The extracted boundary of the body.
    pub fn boundary(&self) -> &BoundaryChain {
        &self.boundary
    }

    /// Length scale that all absolute tolerances are relative to.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// True when the body is a polygon (no disk constraints).
    pub fn is_polygon(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn area(&self) -> f64 {
        self.boundary.area()
    }

    /// Homothety about the origin.
    pub fn scaled(&self, k: f64) -> Result<Self> {
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::invalid("scale factor must be positive"));
        }
        Self::with_scale(
            self.halfplanes
                .iter()
                .map(|h| Halfplane {
                    normal: h.normal,
                    offset: h.offset * k,
                })
                .collect(),
            self.disks
                .iter()
                .map(|d| Disk {
                    center: d.center * k,
                    radius: d.radius * k,
                })
                .collect(),
            self.scale * k,
        )
    }

    pub fn rotated_about(&self, pivot: Point, angle: f64) -> Result<Self> {
        Self::new(
            self.halfplanes
                .iter()
                .map(|h| {
                    let normal = h.normal.rotated(angle);
                    Halfplane {
                        normal,
                        offset: h.offset + normal.dot(pivot) - h.normal.dot(pivot),
                    }
                })
                .collect(),
            self.disks
                .iter()
                .map(|d| Disk {
                    center: d.center.rotated_about(pivot, angle),
                    radius: d.radius,
                })
                .collect(),
        )
    }

    pub fn translated(&self, by: Point) -> Result<Self> {
        Self::new(
            self.halfplanes
                .iter()
                .map(|h| Halfplane {
                    normal: h.normal,
                    offset: h.offset + h.normal.dot(by),
                })
                .collect(),
            self.disks
                .iter()
                .map(|d| Disk {
                    center: d.center + by,
                    radius: d.radius,
                })
                .collect(),
        )
    }

    /// Whether `x` satisfies every constraint up to `tol`.
    pub fn contains(&self, x: Point, tol: f64) -> bool {
        self.halfplanes
            .iter()
            .all(|h| h.normal.dot(x) - h.offset <= tol)
            && self
                .disks
                .iter()
                .all(|d| x.dist(d.center) - d.radius <= tol)
    }
}
