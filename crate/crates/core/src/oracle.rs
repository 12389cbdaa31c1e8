//! Brute-force Cheeger constant from a raster of the body.
//!
//! The body is sampled at cell centers with a direct containment test on its
//! halfplanes and disks, an exact squared Euclidean distance transform is
//! taken over the mask, and the inner parallel areas are read off as counts
//! of cells. Nothing here goes through the exact offset or solver code; the
//! boundary chain is only used to frame the grid.

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::offset::ConstraintSpec;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;
use std::io::Write;

pub const MIN_GRID: usize = 64;
pub const MAX_GRID: usize = 8192;
const PAD: usize = 2;
const BIG: f64 = 1e20;

#[derive(Debug, Clone)]
pub struct RasterBody {
    /// Resolution along the longer side of the bounding box.
    pub n: usize,
    pub cell: f64,
    /// Lower-left corner of cell `(0, 0)`.
    pub origin: Point,
    pub nx: usize,
    pub ny: usize,
    /// Row-major (`y` outer) inside mask.
    pub inside: Vec<bool>,
    /// Distance of each inside cell to the outside cells, zero outside.
    pub dist: Vec<f64>,
}

impl RasterBody {
    pub fn cell_center(&self, i: usize, j: usize) -> Point {
        Point::new(
            self.origin.x + (i as f64 + 0.5) * self.cell,
            self.origin.y + (j as f64 + 0.5) * self.cell,
        )
    }

    pub fn inside_count(&self) -> usize {
        self.inside.iter().filter(|&&b| b).count()
    }

    pub fn area(&self) -> f64 {
        self.inside_count() as f64 * self.cell * self.cell
    }

    pub fn max_dist(&self) -> f64 {
        self.dist.iter().copied().fold(0.0, f64::max)
    }

    /// Distance value of the cell containing `x`.
    pub fn dist_at(&self, x: Point) -> f64 {
        let i = ((x.x - self.origin.x) / self.cell).floor();
        let j = ((x.y - self.origin.y) / self.cell).floor();
        if i < 0.0 || j < 0.0 || i as usize >= self.nx || j as usize >= self.ny {
            return 0.0;
        }
        self.dist[j as usize * self.nx + i as usize]
    }

    /// Binary PGM (P5, maxval 255), top row first, with the distance field
    /// scaled so that the largest distance maps to 255.
    pub fn write_pgm<W: Write>(&self, mut w: W) -> Result<()> {
        let max = self.max_dist();
        write!(w, "P5\n{} {}\n255\n", self.nx, self.ny)?;
        let mut row = vec![0u8; self.nx];
        for j in (0..self.ny).rev() {
            for (i, px) in row.iter_mut().enumerate() {
                let d = self.dist[j * self.nx + i];
                *px = if max > 0.0 {
                    (255.0 * d / max).round() as u8
                } else {
                    0
                };
            }
            w.write_all(&row)?;
        }
        Ok(())
    }
}

fn contains(spec: &ConstraintSpec, x: Point) -> bool {
    spec.halfplanes()
        .iter()
        .all(|h| h.normal.x * x.x + h.normal.y * x.y <= h.offset)
        && spec.disks().iter().all(|d| {
            let (dx, dy) = (x.x - d.center.x, x.y - d.center.y);
            dx * dx + dy * dy <= d.radius * d.radius
        })
}

/// One-dimensional squared distance transform of `f` (lower envelope of
/// parabolas), written into `out`.
fn edt_1d(f: &[f64], out: &mut [f64], v: &mut [usize], z: &mut [f64]) {
    let n = f.len();
    let mut k = 0;
    v[0] = 0;
    z[0] = f64::NEG_INFINITY;
    z[1] = f64::INFINITY;
    let meet = |q: usize, p: usize| {
        ((f[q] + (q * q) as f64) - (f[p] + (p * p) as f64)) / (2.0 * (q as f64 - p as f64))
    };
    for q in 1..n {
        let mut s = meet(q, v[k]);
        while s <= z[k] {
            k -= 1;
            s = meet(q, v[k]);
        }
        k += 1;
        v[k] = q;
        z[k] = s;
        z[k + 1] = f64::INFINITY;
    }
    k = 0;
    for (q, o) in out.iter_mut().enumerate() {
        while z[k + 1] < q as f64 {
            k += 1;
        }
        let d = q as f64 - v[k] as f64;
        *o = d * d + f[v[k]];
    }
}

fn edt_lines(lines: &mut [Vec<f64>]) {
    lines.par_iter_mut().for_each(|line| {
        let n = line.len();
        let mut out = vec![0.0; n];
        let mut v = vec![0usize; n];
        let mut z = vec![0.0; n + 1];
        edt_1d(line, &mut out, &mut v, &mut z);
        *line = out;
    });
}

/// Rasterizes `spec` with `n` cells along the longer bounding-box side.
pub fn rasterize(spec: &ConstraintSpec, n: usize) -> Result<RasterBody> {
    if !(MIN_GRID..=MAX_GRID).contains(&n) {
        return Err(Error::invalid(format!(
            "grid size must lie in [{MIN_GRID}, {MAX_GRID}], got {n}"
        )));
    }
    let (lo, hi) = spec.boundary().bbox();
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    let cell = w.max(h) / n as f64;
    let nx = (w / cell).ceil() as usize + 2 * PAD;
    let ny = (h / cell).ceil() as usize + 2 * PAD;
    let origin = Point::new(
        0.5 * (lo.x + hi.x) - 0.5 * nx as f64 * cell,
        0.5 * (lo.y + hi.y) - 0.5 * ny as f64 * cell,
    );

    let inside: Vec<bool> = (0..ny)
        .into_par_iter()
        .flat_map_iter(|j| {
            (0..nx).map(move |i| {
                let x = Point::new(
                    origin.x + (i as f64 + 0.5) * cell,
                    origin.y + (j as f64 + 0.5) * cell,
                );
                contains(spec, x)
            })
        })
        .collect();
    let ring = (0..ny).any(|j| {
        (0..nx).any(|i| {
            let edge = i < PAD || j < PAD || i >= nx - PAD || j >= ny - PAD;
            edge && inside[j * nx + i]
        })
    });
    if ring {
        return Err(Error::Consistency(
            "raster padding contains inside cells".into(),
        ));
    }

    let mut cols: Vec<Vec<f64>> = (0..nx)
        .map(|i| {
            (0..ny)
                .map(|j| if inside[j * nx + i] { BIG } else { 0.0 })
                .collect()
        })
        .collect();
    edt_lines(&mut cols);
    let mut rows: Vec<Vec<f64>> = (0..ny)
        .map(|j| (0..nx).map(|i| cols[i][j]).collect())
        .collect();
    drop(cols);
    edt_lines(&mut rows);

    // Distance to the outside cell centers, less half a cell, estimates the
    // distance to the boundary between them.
    let dist = rows
        .into_iter()
        .flatten()
        .map(|d2| {
            if d2 > 0.0 {
                d2.sqrt() * cell - 0.5 * cell
            } else {
                0.0
            }
        })
        .collect();
    Ok(RasterBody {
        n,
        cell,
        origin,
        nx,
        ny,
        inside,
        dist,
    })
}

/// `cell^2` times the number of cells with distance above `t`.
pub fn oracle_offset_area(raster: &RasterBody, t: f64) -> f64 {
    let count = raster.dist.iter().filter(|&&d| d > t).count();
    count as f64 * raster.cell * raster.cell
}

/// Oracle estimates of `s` and `h = 1/s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleCheeger {
    pub s: f64,
    pub h: f64,
}

/// Bisection on `oracle_offset_area(t) - pi t^2` over `(0, max dist]`.
pub fn oracle_cheeger_raster(raster: &RasterBody) -> Result<OracleCheeger> {
    let mut d: Vec<f64> = raster.dist.iter().copied().filter(|&x| x > 0.0).collect();
    d.sort_by(f64::total_cmp);
    let cell2 = raster.cell * raster.cell;
    let g = |t: f64| {
        let above = d.len() - d.partition_point(|&x| x <= t);
        above as f64 * cell2 - PI * t * t
    };
    let mut lo = 0.0;
    let mut hi = d.last().copied().unwrap_or(0.0);
    if hi <= 0.0 || g(hi) > 0.0 {
        return Err(Error::NumericFailure {
            msg: "oracle residual does not change sign".into(),
            lo,
            hi,
        });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let s = 0.5 * (lo + hi);
    Ok(OracleCheeger { s, h: 1.0 / s })
}

pub fn oracle_cheeger(spec: &ConstraintSpec, n: usize) -> Result<OracleCheeger> {
    oracle_cheeger_raster(&rasterize(spec, n)?)
}
