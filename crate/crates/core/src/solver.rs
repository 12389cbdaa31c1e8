//! Cheeger constant and Cheeger set of a convex body.
//!
//! The Cheeger set of a convex body `Omega` is `Omega^s + s*B`, where `s` is
//! the unique positive root of `A(Omega^s) = pi s^2` and `Omega^s` is the
//! inner parallel set at distance `s`. The Cheeger constant is `1/s`.

use crate::error::{Error, Result};
use crate::geometry::hausdorff::piece_to_chain;
use crate::geometry::{wrap_angle, BoundaryChain, BoundaryPiece, Point};
use crate::offset::{erode, offset_area, ConstraintSpec, Erosion, OffsetSchedule};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Corner arcs narrower than this (radians) are dropped.
pub const MIN_CORNER_EXTENT: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Absolute tolerance on `s`.
    pub root_tol: f64,
    /// Containment and contact tolerance, relative to the body diameter.
    pub containment_tol: f64,
    pub max_iters: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            root_tol: 1e-12,
            containment_tol: 1e-9,
            max_iters: 200,
        }
    }
}

impl SolverConfig {
    fn check(&self) -> Result<()> {
        if self.root_tol > 0.0 && self.containment_tol > 0.0 && self.max_iters > 0 {
            Ok(())
        } else {
            Err(Error::invalid(
                "solver tolerances and iteration budget must be positive",
            ))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContactKind {
    /// The piece lies on the boundary of the body.
    Boundary,
    /// A free arc of radius `s` inside the body.
    Interior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contact {
    pub piece: usize,
    pub kind: ContactKind,
}

#[derive(Debug, Clone)]
pub struct CheegerResult {
    pub s: f64,
    pub h: f64,
    pub area_omega: f64,
    /// Boundary of the inner parallel set at distance `s`.
    pub inner_set: BoundaryChain,
    pub cheeger_set: BoundaryChain,
    pub contacts: Vec<Contact>,
}

impl CheegerResult {
    /// Indices of the Cheeger set pieces lying on the body boundary.
    pub fn boundary_pieces(&self) -> impl Iterator<Item = &BoundaryPiece> {
        self.contacts
            .iter()
            .filter(|c| c.kind == ContactKind::Boundary)
            .map(|c| &self.cheeger_set.pieces()[c.piece])
    }
}

fn residual(spec: &ConstraintSpec, t: f64) -> Result<f64> {
    Ok(offset_area(spec, t)? - PI * t * t)
}

/// The unique positive root of `A(spec^s) = pi s^2`.
pub fn solve_s(spec: &ConstraintSpec, cfg: &SolverConfig) -> Result<f64> {
    cfg.check()?;
    if spec.is_polygon() {
        if let Some(s) = solve_polygon(spec)? {
            return Ok(s);
        }
    }
    solve_bisection(spec, cfg)
}

/// Closed-form root on the piecewise-quadratic offset schedule.
fn solve_polygon(spec: &ConstraintSpec) -> Result<Option<f64>> {
    let schedule = OffsetSchedule::new(spec.boundary())?;
    for iv in schedule.intervals() {
        let end_area = iv.area_at(iv.end).max(0.0);
        if end_area - PI * iv.end * iv.end > 0.0 {
            continue;
        }
        let t0 = iv.start;
        let a = iv.corner_sum - PI;
        let b = iv.perimeter + 2.0 * PI * t0;
        let c = iv.area - PI * t0 * t0;
        let disc = b * b - 4.0 * a * c;
        if disc < 0.0 || c < 0.0 {
            return Ok(None);
        }
        let tau = 2.0 * c / (b + disc.sqrt());
        let s = (t0 + tau).clamp(iv.start, iv.end);
        return Ok(Some(s));
    }
    Ok(None)
}

fn solve_bisection(spec: &ConstraintSpec, cfg: &SolverConfig) -> Result<f64> {
    let (lo_pt, hi_pt) = spec.boundary().bbox();
    let mut lo = 0.0;
    let mut hi = 0.5 * (hi_pt.x - lo_pt.x).min(hi_pt.y - lo_pt.y);
    if residual(spec, hi)? > 0.0 {
        return Err(Error::NumericFailure {
            msg: "residual does not change sign on the initial bracket".into(),
            lo,
            hi,
        });
    }
    for _ in 0..cfg.max_iters {
        if hi - lo <= cfg.root_tol {
            return Ok(0.5 * (lo + hi));
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return Ok(mid);
        }
        if residual(spec, mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NumericFailure {
        msg: format!(
            "bisection did not reach {} in {} iterations",
            cfg.root_tol, cfg.max_iters
        ),
        lo,
        hi,
    })
}

/// `h = 1 / s`.
pub fn cheeger_constant(spec: &ConstraintSpec, cfg: &SolverConfig) -> Result<f64> {
    Ok(1.0 / solve_s(spec, cfg)?)
}

/// Outward parallel body of a convex chain at distance `s`, with a corner
/// arc of radius `s` at every vertex.
pub fn dilate(chain: &BoundaryChain, s: f64) -> Result<BoundaryChain> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::invalid(format!(
            "dilation radius must be positive, got {s}"
        )));
    }
    let pieces = chain.pieces();
    let n = pieces.len();
    let mut out = Vec::with_capacity(2 * n);
    for (i, p) in pieces.iter().enumerate() {
        out.push(match *p {
            BoundaryPiece::Segment { start, end } => {
                let d = (end - start).normalized();
                let shift = Point::new(d.y, -d.x) * s;
                BoundaryPiece::segment(start + shift, end + shift)
            }
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                end_angle,
            } => BoundaryPiece::Arc {
                center,
                radius: radius + s,
                start_angle,
                end_angle,
            },
        });
        if n == 1 && p.is_arc() {
            break;
        }
        let next = &pieces[(i + 1) % n];
        let a0 = p.normal_angle_at(1.0);
        let a1 = next.normal_angle_at(0.0);
        let mut ext = wrap_angle(a1 - a0);
        if ext > 2.0 * PI - MIN_CORNER_EXTENT {
            ext = 0.0;
        }
        if ext >= MIN_CORNER_EXTENT {
            out.push(BoundaryPiece::arc(p.end(), s, a0, ext));
        }
    }
    BoundaryChain::new(out)
}

/// `Omega^s + s*B` as a boundary chain.
pub fn build_cheeger_set(spec: &ConstraintSpec, s: f64) -> Result<BoundaryChain> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::invalid(format!("s must be positive, got {s}")));
    }
    match erode(spec, s)? {
        Erosion::Body(inner) => dilate(inner.boundary(), s),
        Erosion::Empty => Err(Error::invalid(format!(
            "s = {s} is not below the inradius: the inner parallel set is empty"
        ))),
    }
}

/// Labels each Cheeger set piece as lying on the body boundary or as a free
/// arc of radius `s`.
pub fn classify_contacts(
    omega: &BoundaryChain,
    cheeger: &BoundaryChain,
    s: f64,
    tol: f64,
) -> Result<Vec<Contact>> {
    let mut contacts = Vec::with_capacity(cheeger.len());
    for (i, p) in cheeger.pieces().iter().enumerate() {
        for u in [0.0, 0.5, 1.0] {
            let x = p.point_at(u);
            if !omega.contains(x, tol) {
                return Err(Error::Consistency(format!(
                    "Cheeger set piece {i} leaves the body at {x}"
                )));
            }
        }
        let (gap, _) = piece_to_chain(p, omega);
        let kind = if gap <= tol {
            ContactKind::Boundary
        } else {
            match p.radius() {
                Some(r) if (r - s).abs() <= tol => ContactKind::Interior,
                _ => {
                    return Err(Error::Consistency(format!(
                        "Cheeger set piece {i} is neither on the boundary (gap {gap:e}) \
                         nor an arc of radius {s}"
                    )))
                }
            }
        };
        contacts.push(Contact { piece: i, kind });
    }
    if !contacts.iter().any(|c| c.kind == ContactKind::Boundary) {
        return Err(Error::Consistency(
            "Cheeger set does not touch the boundary".into(),
        ));
    }
    Ok(contacts)
}

/// Solves for `s` and builds and classifies the Cheeger set.
pub fn solve(spec: &ConstraintSpec, cfg: &SolverConfig) -> Result<CheegerResult> {
    let tol = cfg.containment_tol * spec.boundary().diameter();
    solve_with_contact_tol(spec, cfg, tol)
}

/// As [`solve`], with an absolute contact tolerance.
pub fn solve_with_contact_tol(
    spec: &ConstraintSpec,
    cfg: &SolverConfig,
    contact_tol: f64,
) -> Result<CheegerResult> {
    let s = solve_s(spec, cfg)?;
    let inner = match erode(spec, s)? {
        Erosion::Body(b) => b.boundary().clone(),
        Erosion::Empty => {
            return Err(Error::NumericFailure {
                msg: "inner parallel set at the root is empty".into(),
                lo: s,
                hi: s,
            })
        }
    };
    let cheeger_set = dilate(&inner, s)?;
    let contacts = classify_contacts(spec.boundary(), &cheeger_set, s, contact_tol)?;
    Ok(CheegerResult {
        s,
        h: 1.0 / s,
        area_omega: spec.area(),
        inner_set: inner,
        cheeger_set,
        contacts,
    })
}

/// `|P(C) s / A(C) - 1|`, zero when `P(C)/A(C) = h`.
pub fn verify_ratio(result: &CheegerResult) -> f64 {
    let c = &result.cheeger_set;
    (c.perimeter() * result.s / c.area() - 1.0).abs()
}

/// Inner parallel curve of a tangent-continuous convex chain at distance
/// `t`, no larger than its smallest arc radius: segments shift inward and
/// keep their length, arcs shrink, and arcs of radius `t` vanish.
pub fn smooth_inner_parallel(chain: &BoundaryChain, t: f64) -> Result<BoundaryChain> {
    let tol = 1e-12 * chain.diameter();
    let mut out = Vec::with_capacity(chain.len());
    for p in chain.pieces() {
        match *p {
            BoundaryPiece::Segment { start, end } => {
                let d = (end - start).normalized();
                let shift = Point::new(-d.y, d.x) * t;
                out.push(BoundaryPiece::segment(start + shift, end + shift));
            }
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                end_angle,
            } => {
                if radius < t - tol {
                    return Err(Error::invalid(format!(
                        "arc radius {radius} is below the offset distance {t}"
                    )));
                }
                if radius > t + tol {
                    out.push(BoundaryPiece::Arc {
                        center,
                        radius: radius - t,
                        start_angle,
                        end_angle,
                    });
                }
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Degenerate { tol });
    }
    BoundaryChain::new(out)
}

/// Area of the opening of the Cheeger set by `s` minus its own area.
pub fn opening_defect(result: &CheegerResult) -> Result<f64> {
    let inner = smooth_inner_parallel(&result.cheeger_set, result.s)?;
    let reopened = dilate(&inner, result.s)?;
    Ok((reopened.area() - result.cheeger_set.area()).abs())
}
