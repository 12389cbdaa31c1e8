//! Example convex bodies, each built both as an explicit boundary chain and
//! as a constraint spec.
//!
//! Every body is centered at the origin. Where the body has a unique
//! farthest point per symmetry sector on the positive x-axis (disks, regular
//! and Reuleaux polygons, disk-capped polygons) it is placed there.
//!
//! Parameter choices for bodies whose exact proportions are not canonical:
//!
//! * `disk_cap_regular_polygon`: the unit disk (`radius`) intersected with
//!   the regular `k`-gon of apothem `apothem`, which defaults to
//!   `radius * (1 + cos(pi/k)) / 2` so that each polygon side cuts the disk
//!   and every polygon vertex lies outside it. Polygon vertices point along
//!   the directions `2*pi*j/k`.
//! * `capped_rectangle`: the horizontal strip `|y| <= h/2` intersected with
//!   two disks of radius `cap_radius` whose circles pass through the
//!   rectangle corners `(+-w/2, +-h/2)`; the caps bulge outward past the short
//!   sides. A 2-rotationally symmetric stand-in for a body with two straight
//!   sides and two curved caps. Defaults `w = 2`, `h = 1`,
//!   `cap_radius = 1.25`.
//! * `cut_corner_triangle`: the equilateral triangle of side `side` with
//!   each corner cut off at distance `cut * side` from the corner along both
//!   sides, a hexagon with three long and three short sides.

use super::{BoundaryChain, BoundaryPiece, Point};
use crate::error::{Error, Result};
use crate::offset::{ConstraintSpec, Disk, Halfplane};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeName {
    Disk,
    RegularPolygon,
    Rectangle,
    ReuleauxPolygon,
    DiskCapRegularPolygon,
    CutCornerTriangle,
    CappedRectangle,
}

impl ShapeName {
    pub const ALL: [ShapeName; 7] = [
        ShapeName::Disk,
        ShapeName::RegularPolygon,
        ShapeName::Rectangle,
        ShapeName::ReuleauxPolygon,
        ShapeName::DiskCapRegularPolygon,
        ShapeName::CutCornerTriangle,
        ShapeName::CappedRectangle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ShapeName::Disk => "disk",
            ShapeName::RegularPolygon => "regular_polygon",
            ShapeName::Rectangle => "rectangle",
            ShapeName::ReuleauxPolygon => "reuleaux_polygon",
            ShapeName::DiskCapRegularPolygon => "disk_cap_regular_polygon",
            ShapeName::CutCornerTriangle => "cut_corner_triangle",
            ShapeName::CappedRectangle => "capped_rectangle",
        }
    }

    /// Parameter names with their defaults (`None` = depends on other params).
    pub fn parameters(self) -> &'static [(&'static str, Option<f64>)] {
        match self {
            ShapeName::Disk => &[("radius", Some(1.0))],
            ShapeName::RegularPolygon => &[("n", Some(4.0)), ("circumradius", Some(1.0))],
            ShapeName::Rectangle => &[("w", Some(1.0)), ("h", Some(1.0))],
            ShapeName::ReuleauxPolygon => &[("k", Some(3.0)), ("width", Some(1.0))],
            ShapeName::DiskCapRegularPolygon => {
                &[("k", Some(3.0)), ("radius", Some(1.0)), ("apothem", None)]
            }
            ShapeName::CutCornerTriangle => &[("side", Some(1.0)), ("cut", Some(0.2))],
            ShapeName::CappedRectangle => &[
                ("w", Some(2.0)),
                ("h", Some(1.0)),
                ("cap_radius", Some(1.25)),
            ],
        }
    }
}

impl fmt::Display for ShapeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ShapeName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ShapeName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::invalid(format!("unknown catalog shape '{s}'")))
    }
}

/// A named catalog body with its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogShape {
    pub name: ShapeName,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
}

impl CatalogShape {
    pub fn new(name: ShapeName) -> Self {
        CatalogShape {
            name,
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: f64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn disk(radius: f64) -> Self {
        Self::new(ShapeName::Disk).with("radius", radius)
    }

    pub fn regular_polygon(n: usize, circumradius: f64) -> Self {
        Self::new(ShapeName::RegularPolygon)
            .with("n", n as f64)
            .with("circumradius", circumradius)
    }

    pub fn rectangle(w: f64, h: f64) -> Self {
        Self::new(ShapeName::Rectangle).with("w", w).with("h", h)
    }

    pub fn reuleaux_polygon(k: usize, width: f64) -> Self {
        Self::new(ShapeName::ReuleauxPolygon)
            .with("k", k as f64)
            .with("width", width)
    }

    pub fn disk_cap_regular_polygon(k: usize) -> Self {
        Self::new(ShapeName::DiskCapRegularPolygon).with("k", k as f64)
    }

    pub fn cut_corner_triangle(side: f64, cut: f64) -> Self {
        Self::new(ShapeName::CutCornerTriangle)
            .with("side", side)
            .with("cut", cut)
    }

    pub fn capped_rectangle(w: f64, h: f64, cap_radius: f64) -> Self {
        Self::new(ShapeName::CappedRectangle)
            .with("w", w)
            .with("h", h)
            .with("cap_radius", cap_radius)
    }

    /// Short label such as `regular_polygon(n=5, circumradius=1)`.
    pub fn label(&self) -> String {
        let ps: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("{}({})", self.name, ps.join(", "))
    }

    fn get(&self, key: &str) -> Result<f64> {
        if let Some(v) = self.params.get(key) {
            return Ok(*v);
        }
        self.name
            .parameters()
            .iter()
            .find(|(k, _)| *k == key)
            .and_then(|(_, d)| *d)
            .ok_or_else(|| Error::invalid(format!("{}: missing parameter '{key}'", self.name)))
    }

    fn positive(&self, key: &str) -> Result<f64> {
        let v = self.get(key)?;
        if v > 0.0 && v.is_finite() {
            Ok(v)
        } else {
            Err(Error::invalid(format!(
                "{}: '{key}' must be positive, got {v}",
                self.name
            )))
        }
    }

    fn integer(&self, key: &str, min: usize) -> Result<usize> {
        let v = self.get(key)?;
        if v.fract() != 0.0 || v < min as f64 || v > 1e6 {
            return Err(Error::invalid(format!(
                "{}: '{key}' must be an integer >= {min}, got {v}",
                self.name
            )));
        }
        Ok(v as usize)
    }

    fn check_keys(&self) -> Result<()> {
        for k in self.params.keys() {
            if !self.name.parameters().iter().any(|(p, _)| p == k) {
                return Err(Error::invalid(format!(
                    "{}: unknown parameter '{k}'",
                    self.name
                )));
            }
        }
        Ok(())
    }
}

fn unit_halfplane(angle: f64, offset: f64) -> Halfplane {
    Halfplane {
        normal: Point::polar(angle),
        offset,
    }
}

/// Builds a catalog body as `(boundary chain, constraint spec)`.
pub fn make_catalog(shape: &CatalogShape) -> Result<(BoundaryChain, ConstraintSpec)> {
    shape.check_keys()?;
    match shape.name {
        ShapeName::Disk => {
            let r = shape.positive("radius")?;
            let chain = BoundaryChain::new(vec![BoundaryPiece::full_circle(Point::ORIGIN, r)])?;
            let spec = ConstraintSpec::new(
                vec![],
                vec![Disk {
                    center: Point::ORIGIN,
                    radius: r,
                }],
            )?;
            Ok((chain, spec))
        }
        ShapeName::RegularPolygon => {
            let n = shape.integer("n", 3)?;
            let r = shape.positive("circumradius")?;
            let step = TAU / n as f64;
            let verts: Vec<Point> = (0..n).map(|j| Point::polar(j as f64 * step) * r).collect();
            let chain = BoundaryChain::polygon(&verts)?;
            let apothem = r * (PI / n as f64).cos();
            let hs = (0..n)
                .map(|j| unit_halfplane((j as f64 + 0.5) * step, apothem))
                .collect();
            Ok((chain, ConstraintSpec::new(hs, vec![])?))
        }
        ShapeName::Rectangle => {
            let (w, h) = (shape.positive("w")?, shape.positive("h")?);
            let (a, b) = (w / 2.0, h / 2.0);
            let chain = BoundaryChain::polygon(&[
                Point::new(a, -b),
                Point::new(a, b),
                Point::new(-a, b),
                Point::new(-a, -b),
            ])?;
            let hs = vec![
                unit_halfplane(0.0, a),
                unit_halfplane(PI / 2.0, b),
                unit_halfplane(PI, a),
                unit_halfplane(1.5 * PI, b),
            ];
            Ok((chain, ConstraintSpec::new(hs, vec![])?))
        }
        ShapeName::ReuleauxPolygon => {
            let k = shape.integer("k", 3)?;
            if k % 2 == 0 {
                return Err(Error::invalid(format!(
                    "reuleaux_polygon: k must be odd, got {k}"
                )));
            }
            let width = shape.positive("width")?;
            let m = (k - 1) / 2;
            let rho = width / (2.0 * (PI * m as f64 / k as f64).sin());
            let v: Vec<Point> = (0..k)
                .map(|j| Point::polar(j as f64 * TAU / k as f64) * rho)
                .collect();
            let pieces = (0..k)
                .map(|i| {
                    let c = v[(i + m + 1) % k];
                    BoundaryPiece::arc(c, width, (v[i] - c).angle(), PI / k as f64)
                })
                .collect();
            let chain = BoundaryChain::new(pieces)?;
            let disks = v
                .iter()
                .map(|&center| Disk {
                    center,
                    radius: width,
                })
                .collect();
            Ok((chain, ConstraintSpec::new(vec![], disks)?))
        }
        ShapeName::DiskCapRegularPolygon => {
            let k = shape.integer("k", 3)?;
            let r = shape.positive("radius")?;
            let half = PI / k as f64;
            let apothem = match shape.params.get("apothem") {
                Some(&a) => a,
                None => r * (1.0 + half.cos()) / 2.0,
            };
            if !(apothem > r * half.cos() && apothem < r) {
                return Err(Error::invalid(format!(
                    "disk_cap_regular_polygon: apothem must lie in ({}, {r}), got {apothem}",
                    r * half.cos()
                )));
            }
            let beta = (apothem / r).acos();
            let step = TAU / k as f64;
            let mut pieces = Vec::with_capacity(2 * k);
            for j in 0..k {
                let dir = j as f64 * step;
                // Arc around the vertex direction, then the side after it.
                pieces.push(BoundaryPiece::arc(
                    Point::ORIGIN,
                    r,
                    dir - half + beta,
                    2.0 * (half - beta),
                ));
                let side = dir + half;
                pieces.push(BoundaryPiece::segment(
                    Point::polar(side - beta) * r,
                    Point::polar(side + beta) * r,
                ));
            }
            let chain = BoundaryChain::new(pieces)?;
            let hs = (0..k)
                .map(|j| unit_halfplane(j as f64 * step + half, apothem))
                .collect();
            let spec = ConstraintSpec::new(
                hs,
                vec![Disk {
                    center: Point::ORIGIN,
                    radius: r,
                }],
            )?;
            Ok((chain, spec))
        }
        ShapeName::CutCornerTriangle => {
            let side = shape.positive("side")?;
            let cut = shape.get("cut")?;
            if !(cut > 0.0 && cut < 0.5) {
                return Err(Error::invalid(format!(
                    "cut_corner_triangle: cut must lie in (0, 1/2), got {cut}"
                )));
            }
            let rt = side / 3f64.sqrt();
            let tv: Vec<Point> = (0..3)
                .map(|j| Point::polar(j as f64 * TAU / 3.0) * rt)
                .collect();
            let d = cut * side;
            let mut verts = Vec::with_capacity(6);
            for j in 0..3 {
                let v = tv[j];
                verts.push(v + (tv[(j + 2) % 3] - v).normalized() * d);
                verts.push(v + (tv[(j + 1) % 3] - v).normalized() * d);
            }
            let chain = BoundaryChain::polygon(&verts)?;
            let mut hs = Vec::with_capacity(6);
            for j in 0..3 {
                let a = j as f64 * TAU / 3.0;
                hs.push(unit_halfplane(a, rt - d * (PI / 6.0).cos()));
                hs.push(unit_halfplane(a + PI / 3.0, rt / 2.0));
            }
            Ok((chain, ConstraintSpec::new(hs, vec![])?))
        }
        ShapeName::CappedRectangle => {
            let (w, h) = (shape.positive("w")?, shape.positive("h")?);
            let rc = shape.positive("cap_radius")?;
            let min_rc = 0.5 * w.hypot(h);
            if rc < min_rc {
                return Err(Error::invalid(format!(
                    "capped_rectangle: cap_radius must be at least {min_rc}, got {rc}"
                )));
            }
            let e = (rc * rc - h * h / 4.0).sqrt();
            let alpha = (h / 2.0 / rc).asin();
            let right = Point::new(w / 2.0 - e, 0.0);
            let left = Point::new(-w / 2.0 + e, 0.0);
            let chain = BoundaryChain::new(vec![
                BoundaryPiece::arc(right, rc, -alpha, 2.0 * alpha),
                BoundaryPiece::segment(Point::new(w / 2.0, h / 2.0), Point::new(-w / 2.0, h / 2.0)),
                BoundaryPiece::arc(left, rc, PI - alpha, 2.0 * alpha),
                BoundaryPiece::segment(
                    Point::new(-w / 2.0, -h / 2.0),
                    Point::new(w / 2.0, -h / 2.0),
                ),
            ])?;
            let spec = ConstraintSpec::new(
                vec![
                    unit_halfplane(PI / 2.0, h / 2.0),
                    unit_halfplane(1.5 * PI, h / 2.0),
                ],
                vec![
                    Disk {
                        center: right,
                        radius: rc,
                    },
                    Disk {
                        center: left,
                        radius: rc,
                    },
                ],
            )?;
            Ok((chain, spec))
        }
    }
}
