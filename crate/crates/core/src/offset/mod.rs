//! Inner parallel sets by constraint erosion.
//!
//! Eroding an intersection of halfplanes and disks by a disk of radius `t`
//! is the intersection of the eroded constraints: every halfplane offset
//! drops by `t` and every disk radius by `t`. The result is the closure of
//! the inner parallel set at distance `t`.

mod constraints;
mod extract;
mod schedule;

pub use constraints::{ConstraintSpec, Disk, Halfplane, PRUNE_REL_TOL};
pub use schedule::{OffsetSchedule, ScheduleInterval};

use crate::error::{Error, Result};
use crate::geometry::{BoundaryChain, Point};

/// Outcome of an erosion.
#[derive(Debug, Clone)]
pub enum Erosion {
    Body(ConstraintSpec),
    /// The inner parallel set is empty, or thinner than the tolerance.
    Empty,
}

impl Erosion {
    pub fn is_empty(&self) -> bool {
        matches!(self, Erosion::Empty)
    }

    pub fn body(&self) -> Option<&ConstraintSpec> {
        match self {
            Erosion::Body(s) => Some(s),
            Erosion::Empty => None,
        }
    }
}

/// Erodes `spec` by distance `t >= 0`.
pub fn erode(spec: &ConstraintSpec, t: f64) -> Result<Erosion> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::invalid(format!(
            "erosion distance must be >= 0, got {t}"
        )));
    }
    if t == 0.0 {
        return Ok(Erosion::Body(spec.clone()));
    }
    let halfplanes = spec
        .halfplanes()
        .iter()
        .map(|h| Halfplane {
            normal: h.normal,
            offset: h.offset - t,
        })
        .collect();
    let mut disks = Vec::with_capacity(spec.disks().len());
    for d in spec.disks() {
        if d.radius - t <= 0.0 {
            return Ok(Erosion::Empty);
        }
        disks.push(Disk {
            center: d.center,
            radius: d.radius - t,
        });
    }
    match ConstraintSpec::with_scale(halfplanes, disks, spec.scale()) {
        Ok(s) => Ok(Erosion::Body(s)),
        Err(Error::EmptyBody) | Err(Error::Degenerate { .. }) => Ok(Erosion::Empty),
        Err(e) => Err(e),
    }
}

/// The CCW boundary chain of a nonempty spec.
pub fn extract_boundary(spec: &ConstraintSpec) -> BoundaryChain {
    spec.boundary().clone()
}

/// Largest `t` with a nonempty inner parallel set, and a witness point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InradiusResult {
    pub r: f64,
    pub witness: Point,
}

/// Absolute bisection tolerance of [`inradius`], relative to the diameter.
pub const INRADIUS_REL_TOL: f64 = 1e-12;

/// Inradius by bisection on the emptiness of [`erode`].
pub fn inradius(spec: &ConstraintSpec) -> Result<InradiusResult> {
    let chain = spec.boundary();
    let (lo_pt, hi_pt) = chain.bbox();
    let mut hi = 0.5 * (hi_pt.x - lo_pt.x).min(hi_pt.y - lo_pt.y) * (1.0 + 1e-9);
    while !erode(spec, hi)?.is_empty() {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    let mut witness = chain.centroid()?;
    let tol = INRADIUS_REL_TOL * chain.diameter();
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        match erode(spec, mid)? {
            Erosion::Body(s) => {
                lo = mid;
                witness = s.boundary().centroid()?;
            }
            Erosion::Empty => hi = mid,
        }
    }
    Ok(InradiusResult { r: lo, witness })
}

/// Offset schedule of a polygon chain.
pub fn polygon_offset_schedule(polygon: &BoundaryChain) -> Result<OffsetSchedule> {
    OffsetSchedule::new(polygon)
}

/// `A(body^t)`; zero when the erosion is empty.
///
/// Polygons use the closed-form offset schedule.
pub fn offset_area(spec: &ConstraintSpec, t: f64) -> Result<f64> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::invalid(format!(
            "offset distance must be >= 0, got {t}"
        )));
    }
    if spec.is_polygon() {
        return Ok(OffsetSchedule::new(spec.boundary())?.area_at(t));
    }
    offset_area_by_erosion(spec, t)
}

/// `A(body^t)` through erosion and boundary extraction only.
pub fn offset_area_by_erosion(spec: &ConstraintSpec, t: f64) -> Result<f64> {
    Ok(match erode(spec, t)? {
        Erosion::Body(s) => s.area(),
        Erosion::Empty => 0.0,
    })
}
