//! Rotational symmetry, dots and edges, and Cheeger-regularity.
//!
//! A body is `k`-rotationally symmetric about `p` when the rotation by
//! `2*pi/k` about `p` maps it onto itself. Its circumradius `R` is the largest
//! distance from `p` to the boundary. The dots `x_1, ..., x_k` are boundary
//! points at distance `R` forming one orbit of the rotation, and the edges are
//! the boundary arcs between consecutive dots. The body is Cheeger-regular
//! when its Cheeger set touches every edge.

use crate::error::{Error, Result};
use crate::geometry::hausdorff::hausdorff;
use crate::geometry::{wrap_angle, BoundaryChain, BoundaryPiece, Point};
use crate::solver::{CheegerResult, ContactKind};
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Default symmetry acceptance tolerance, relative to the diameter.
pub const SYM_REL_TOL: f64 = 1e-8;
/// Default edge contact tolerance, relative to the diameter.
pub const CONTACT_REL_TOL: f64 = 1e-7;

const CONTACT_SAMPLES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotationalSymmetry {
    pub k: usize,
    pub center: Point,
    /// Hausdorff distance between the boundary and its rotation.
    pub residual: f64,
}

impl RotationalSymmetry {
    pub fn angle(&self) -> f64 {
        TAU / self.k as f64
    }

    /// The generating rotation applied `j` times to `x`.
    pub fn rotate(&self, x: Point, j: usize) -> Point {
        x.rotated_about(self.center, j as f64 * self.angle())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Detection {
    Accepted(RotationalSymmetry),
    Rejected { k: usize, residual: f64, tol: f64 },
}

impl Detection {
    pub fn accepted(&self) -> Option<&RotationalSymmetry> {
        match self {
            Detection::Accepted(s) => Some(s),
            Detection::Rejected { .. } => None,
        }
    }

    pub fn residual(&self) -> f64 {
        match *self {
            Detection::Accepted(s) => s.residual,
            Detection::Rejected { residual, .. } => residual,
        }
    }
}

/// Tests `k`-fold rotational symmetry about the centroid.
pub fn detect_symmetry(chain: &BoundaryChain, k: usize, tol: f64) -> Result<Detection> {
    if k < 2 {
        return Err(Error::invalid(format!(
            "symmetry order must be at least 2, got {k}"
        )));
    }
    let center = chain.centroid()?;
    let rotated = chain.rotated_about(center, TAU / k as f64);
    let residual = hausdorff(&rotated, chain);
    Ok(if residual <= tol {
        Detection::Accepted(RotationalSymmetry {
            k,
            center,
            residual,
        })
    } else {
        Detection::Rejected { k, residual, tol }
    })
}

/// The boundary between two consecutive dots.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub pieces: Vec<BoundaryPiece>,
}

impl Edge {
    pub fn length(&self) -> f64 {
        self.pieces.iter().map(BoundaryPiece::length).sum()
    }

    pub fn distance_to(&self, x: Point) -> f64 {
        self.pieces
            .iter()
            .map(|p| p.distance_to(x))
            .fold(f64::INFINITY, f64::min)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DotsEdges {
    pub circumradius: f64,
    pub dots: Vec<Point>,
    pub edges: Vec<Edge>,
}

/// Polar angle about `p` of the first dot: the smallest angle in
/// `[0, 2*pi/k)` at which the boundary reaches the circumradius.
fn first_dot_angle(chain: &BoundaryChain, sym: &RotationalSymmetry, r: f64, tol: f64) -> f64 {
    let sector = sym.angle();
    let reduce = |a: f64| {
        let m = wrap_angle(a).rem_euclid(sector);
        if m > sector - 1e-9 {
            0.0
        } else {
            m
        }
    };
    let mut best = f64::INFINITY;
    for piece in chain.pieces() {
        if let BoundaryPiece::Arc {
            center,
            radius,
            start_angle,
            end_angle,
        } = *piece
        {
            if center.dist(sym.center) <= tol && (radius - r).abs() <= tol {
                // The whole arc is at distance R; it reaches the next sector
                // boundary if it spans a multiple of the sector angle.
                let lo = reduce(start_angle);
                let spans =
                    end_angle - start_angle >= sector || lo + (end_angle - start_angle) >= sector;
                best = best.min(if spans { 0.0 } else { lo });
                continue;
            }
        }
        for q in [
            piece.farthest_from(sym.center).0,
            piece.start(),
            piece.end(),
        ] {
            if q.dist(sym.center) >= r - tol {
                best = best.min(reduce((q - sym.center).angle()));
            }
        }
    }
    best
}

/// Circumradius, canonical dots and the edges between them.
pub fn dots_and_edges(chain: &BoundaryChain, sym: &RotationalSymmetry) -> Result<DotsEdges> {
    let tol = 1e-9 * chain.diameter();
    let r = chain.farthest_from(sym.center).1;
    let phi = first_dot_angle(chain, sym, r, tol);
    dots_and_edges_from(chain, sym, sym.center + Point::polar(phi) * r)
}

/// As [`dots_and_edges`], with a prescribed first dot.
pub fn dots_and_edges_from(
    chain: &BoundaryChain,
    sym: &RotationalSymmetry,
    first: Point,
) -> Result<DotsEdges> {
    let tol = 1e-7 * chain.diameter();
    let r = chain.farthest_from(sym.center).1;
    if (first.dist(sym.center) - r).abs() > tol || chain.distance_to_boundary(first) > tol {
        return Err(Error::invalid(format!(
            "{first} is not a boundary point at the circumradius {r}"
        )));
    }
    let n = chain.len();
    let mut locs: Vec<(usize, f64)> = Vec::with_capacity(sym.k);
    let mut dots = Vec::with_capacity(sym.k);
    for j in 0..sym.k {
        let (mut i, mut u, q) = chain.nearest(sym.rotate(first, j));
        if u >= 1.0 - 1e-12 {
            i = (i + 1) % n;
            u = 0.0;
        }
        locs.push((i, u));
        dots.push(q);
    }
    let edges = (0..sym.k)
        .map(|j| {
            let to = (j + 1) % sym.k;
            Edge {
                from: j,
                to,
                pieces: merge_arcs(subchain(chain, locs[j], locs[to], tol)),
            }
        })
        .collect();
    Ok(DotsEdges {
        circumradius: r,
        dots,
        edges,
    })
}

/// Pieces of the chain from location `a` to location `b`, walking CCW.
fn subchain(
    chain: &BoundaryChain,
    a: (usize, f64),
    b: (usize, f64),
    tol: f64,
) -> Vec<BoundaryPiece> {
    let pieces = chain.pieces();
    let n = pieces.len();
    let mut out = Vec::new();
    let mut push = |p: BoundaryPiece| {
        if p.length() > tol {
            out.push(p);
        }
    };
    if a.0 == b.0 && b.1 > a.1 {
        push(pieces[a.0].sub(a.1, b.1));
        return out;
    }
    push(pieces[a.0].sub(a.1, 1.0));
    let mut j = (a.0 + 1) % n;
    while j != b.0 {
        push(pieces[j]);
        j = (j + 1) % n;
    }
    push(pieces[b.0].sub(0.0, b.1));
    out
}

fn merge_arcs(pieces: Vec<BoundaryPiece>) -> Vec<BoundaryPiece> {
    let mut out: Vec<BoundaryPiece> = Vec::with_capacity(pieces.len());
    for p in pieces {
        if let (
            Some(BoundaryPiece::Arc {
                center: c0,
                radius: r0,
                end_angle: e0,
                ..
            }),
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                end_angle,
            },
        ) = (out.last_mut(), p)
        {
            let same = c0.dist(center) <= 1e-12 * r0.max(1.0)
                && (*r0 - radius).abs() <= 1e-12 * r0.max(1.0);
            let gap = wrap_angle(start_angle - *e0);
            if same && !(1e-12..=TAU - 1e-12).contains(&gap) {
                *e0 += end_angle - start_angle;
                continue;
            }
        }
        out.push(p);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeContact {
    pub edge: usize,
    pub touched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Point>,
}

/// Which edges the boundary-contact pieces of the Cheeger set touch.
///
/// The witness for an edge is the touching sample point farthest from the
/// edge's two dots.
pub fn check_edge_contacts(de: &DotsEdges, result: &CheegerResult, tol: f64) -> Vec<EdgeContact> {
    let samples: Vec<Point> = result
        .contacts
        .iter()
        .filter(|c| c.kind == ContactKind::Boundary)
        .flat_map(|c| {
            let p = result.cheeger_set.pieces()[c.piece];
            (0..=CONTACT_SAMPLES).map(move |i| p.point_at(i as f64 / CONTACT_SAMPLES as f64))
        })
        .collect();
    de.edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let (a, b) = (de.dots[e.from], de.dots[e.to]);
            let witness = samples
                .iter()
                .filter(|&&x| e.distance_to(x) <= tol)
                .map(|&x| (x.dist(a).min(x.dist(b)), x))
                .fold(None, |best: Option<(f64, Point)>, c| match best {
                    Some(bb) if bb.0 >= c.0 => Some(bb),
                    _ => Some(c),
                })
                .map(|(_, x)| x);
            EdgeContact {
                edge: i,
                touched: witness.is_some(),
                witness,
            }
        })
        .collect()
}

/// Hausdorff distance between the Cheeger set boundary and its rotation.
pub fn check_rotation_inheritance(cheeger: &BoundaryChain, sym: &RotationalSymmetry) -> f64 {
    hausdorff(&cheeger.rotated_about(sym.center, sym.angle()), cheeger)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeRef {
    pub from: usize,
    pub to: usize,
}

/// Outcome of checking Cheeger-regularity of a symmetric body.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub k: usize,
    pub center: Point,
    pub circumradius: f64,
    pub dots: Vec<Point>,
    pub edges: Vec<EdgeRef>,
    pub edge_contacts: Vec<EdgeContact>,
    pub cheeger_regular: bool,
    pub rotation_gap: f64,
}

/// Assembles the report from the pieces computed above.
pub fn regularity_report(
    sym: &RotationalSymmetry,
    de: &DotsEdges,
    result: &CheegerResult,
    contact_tol: f64,
) -> RegularityReport {
    let edge_contacts = check_edge_contacts(de, result, contact_tol);
    RegularityReport {
        k: sym.k,
        center: sym.center,
        circumradius: de.circumradius,
        dots: de.dots.clone(),
        edges: de
            .edges
            .iter()
            .map(|e| EdgeRef {
                from: e.from,
                to: e.to,
            })
            .collect(),
        cheeger_regular: edge_contacts.iter().all(|c| c.touched),
        edge_contacts,
        rotation_gap: check_rotation_inheritance(&result.cheeger_set, sym),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Body, CatalogShape};
    use crate::solver::{solve, SolverConfig};
    use std::f64::consts::PI;

    fn accept(b: &Body, k: usize) -> RotationalSymmetry {
        let tol = SYM_REL_TOL * b.chain.diameter();
        *detect_symmetry(&b.chain, k, tol)
            .unwrap()
            .accepted()
            .unwrap()
    }

    #[test]
    fn square_has_four_fold_not_three_fold() {
        let b = Body::from_catalog(&CatalogShape::rectangle(1.0, 1.0)).unwrap();
        let sym = accept(&b, 4);
        assert!(sym.residual < 1e-12);
        let d = detect_symmetry(&b.chain, 3, 1e-8).unwrap();
        assert!(d.accepted().is_none());
        assert!(d.residual() > 0.1);
    }

    #[test]
    fn square_dots_are_corners() {
        let b = Body::from_catalog(&CatalogShape::rectangle(1.0, 1.0)).unwrap();
        let de = dots_and_edges(&b.chain, &accept(&b, 4)).unwrap();
        assert!((de.circumradius - 0.5f64.sqrt()).abs() < 1e-15);
        let expect = [(0.5, 0.5), (-0.5, 0.5), (-0.5, -0.5), (0.5, -0.5)];
        for (d, e) in de.dots.iter().zip(expect) {
            assert!(d.dist(Point::new(e.0, e.1)) < 1e-12, "{d}");
        }
        for e in &de.edges {
            assert_eq!(e.pieces.len(), 1);
            assert!((e.length() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn disk_dots_start_at_angle_zero() {
        let b = Body::from_catalog(&CatalogShape::disk(1.0)).unwrap();
        let de = dots_and_edges(&b.chain, &accept(&b, 5)).unwrap();
        for (j, d) in de.dots.iter().enumerate() {
            assert!(d.dist(Point::polar(j as f64 * TAU / 5.0)) < 1e-12);
        }
        for e in &de.edges {
            assert_eq!(e.pieces.len(), 1);
            assert!((e.pieces[0].extent() - TAU / 5.0).abs() < 1e-12);
        }
    }

    #[test]
    fn cut_corner_triangle_edges_span_two_sides() {
        let b = Body::from_catalog(&CatalogShape::cut_corner_triangle(1.0, 0.2)).unwrap();
        let de = dots_and_edges(&b.chain, &accept(&b, 3)).unwrap();
        assert_eq!(de.dots.len(), 3);
        let total: f64 = de.edges.iter().map(Edge::length).sum();
        assert!((total - b.chain.perimeter()).abs() < 1e-12);
        assert!(de.edges.iter().all(|e| e.pieces.len() == 2));
    }

    #[test]
    fn square_contact_witnesses_are_side_midpoints() {
        let b = Body::from_catalog(&CatalogShape::rectangle(1.0, 1.0)).unwrap();
        let sym = accept(&b, 4);
        let de = dots_and_edges(&b.chain, &sym).unwrap();
        let r = solve(&b.spec, &SolverConfig::default()).unwrap();
        let report = regularity_report(&sym, &de, &r, 1e-7);
        assert!(report.cheeger_regular);
        let mids = [(0.0, 0.5), (-0.5, 0.0), (0.0, -0.5), (0.5, 0.0)];
        for (c, m) in report.edge_contacts.iter().zip(mids) {
            assert!(c.witness.unwrap().dist(Point::new(m.0, m.1)) < 1e-12);
        }
        assert!(report.rotation_gap < 1e-12);
    }

    #[test]
    fn rectangle_two_fold() {
        let b = Body::from_catalog(&CatalogShape::rectangle(2.0, 1.0)).unwrap();
        let sym = accept(&b, 2);
        let de = dots_and_edges(&b.chain, &sym).unwrap();
        assert!(de.dots[0].dist(Point::new(1.0, 0.5)) < 1e-12);
        assert!(de.dots[1].dist(Point::new(-1.0, -0.5)) < 1e-12);
        let r = solve(&b.spec, &SolverConfig::default()).unwrap();
        assert!(regularity_report(&sym, &de, &r, 1e-7).cheeger_regular);
    }

    #[test]
    fn custom_dots_on_the_disk() {
        let b = Body::from_catalog(&CatalogShape::disk(1.0)).unwrap();
        let sym = accept(&b, 3);
        let de = dots_and_edges_from(&b.chain, &sym, Point::polar(PI / 7.0)).unwrap();
        assert!(de.dots[1].dist(Point::polar(PI / 7.0 + TAU / 3.0)) < 1e-12);
        let total: f64 = de.edges.iter().map(Edge::length).sum();
        assert!((total - TAU).abs() < 1e-12);
        assert!(dots_and_edges_from(&b.chain, &sym, Point::new(0.5, 0.0)).is_err());
    }
}
