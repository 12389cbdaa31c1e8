//! SVG figures of a body, its inner parallel set and its Cheeger set.

use crate::geometry::{BoundaryChain, BoundaryPiece, Point};
use std::f64::consts::{PI, TAU};
use std::fmt::Write;

/// What to draw. Only `body` is required.
#[derive(Debug, Clone, Default)]
pub struct Figure<'a> {
    pub body: Option<&'a BoundaryChain>,
    pub inner: Option<&'a BoundaryChain>,
    pub cheeger: Option<&'a BoundaryChain>,
    pub dots: &'a [Point],
    pub witnesses: &'a [Point],
}

fn num(x: f64) -> String {
    let s = format!("{x:.9}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn arc_to(out: &mut String, r: f64, ext: f64, to: Point) {
    let large = u8::from(ext > PI);
    let _ = write!(
        out,
        " A {} {} 0 {large} 1 {} {}",
        num(r),
        num(r),
        num(to.x),
        num(to.y)
    );
}

/// SVG path data for a closed chain in mathematical coordinates. Arcs are
/// counterclockwise, so they use sweep flag 1; full circles are split in two.
pub fn path_data(chain: &BoundaryChain) -> String {
    let pieces = chain.pieces();
    let p0 = pieces[0].start();
    let mut d = format!("M {} {}", num(p0.x), num(p0.y));
    for p in pieces {
        match *p {
            BoundaryPiece::Segment { end, .. } => {
                let _ = write!(d, " L {} {}", num(end.x), num(end.y));
            }
            BoundaryPiece::Arc { radius, .. } => {
                let ext = p.extent();
                if ext >= TAU - 1e-12 {
                    arc_to(&mut d, radius, ext / 2.0, p.point_at(0.5));
                    arc_to(&mut d, radius, ext / 2.0, p.end());
                } else {
                    arc_to(&mut d, radius, ext, p.end());
                }
            }
        }
    }
    d.push_str(" Z");
    d
}

/// Renders the figure; the view box fits the body with a 5% margin and the
/// y-axis points up.
pub fn render(fig: &Figure<'_>) -> String {
    let frame = fig.body.or(fig.cheeger).or(fig.inner);
    let (lo, hi) = frame
        .map(BoundaryChain::bbox)
        .unwrap_or((Point::new(-1.0, -1.0), Point::new(1.0, 1.0)));
    let size = (hi.x - lo.x).max(hi.y - lo.y);
    let m = 0.05 * size;
    let (x0, y0) = (lo.x - m, -hi.y - m);
    let (w, h) = (hi.x - lo.x + 2.0 * m, hi.y - lo.y + 2.0 * m);
    let stroke = num(0.004 * size);
    let dot_r = num(0.012 * size);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="600" height="{}">"#,
        num(x0),
        num(y0),
        num(w),
        num(h),
        (600.0 * h / w).round()
    );
    let _ = writeln!(s, r#"<g transform="scale(1,-1)" stroke-width="{stroke}">"#);
    let layers = [
        ("body", fig.body, "none", "black"),
        ("cheeger", fig.cheeger, "#9ecae1", "#08519c"),
        ("inner", fig.inner, "none", "#d94801"),
    ];
    for (id, chain, fill, color) in layers {
        if let Some(c) = chain {
            let dash = if id == "inner" {
                format!(
                    r#" stroke-dasharray="{} {}""#,
                    num(0.02 * size),
                    num(0.01 * size)
                )
            } else {
                String::new()
            };
            let _ = writeln!(
                s,
                r#"<path id="{id}" d="{}" fill="{fill}" stroke="{color}"{dash}/>"#,
                path_data(c)
            );
        }
    }
    for (class, pts, color) in [
        ("dot", fig.dots, "black"),
        ("witness", fig.witnesses, "#cb181d"),
    ] {
        for p in pts {
            let _ = writeln!(
                s,
                r#"<circle class="{class}" cx="{}" cy="{}" r="{dot_r}" fill="{color}"/>"#,
                num(p.x),
                num(p.y)
            );
        }
    }
    s.push_str("</g>\n</svg>\n");
    s
}
