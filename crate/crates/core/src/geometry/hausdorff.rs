//! Hausdorff distances between boundary chains.

use super::{BoundaryChain, BoundaryPiece, Point};

const SAMPLES: usize = 32;
const REFINE: usize = 8;
const GOLDEN_ITERS: usize = 80;

/// Largest distance from a point of `piece` to the curve `to`, with the
/// point where it is attained.
pub fn piece_to_chain(piece: &BoundaryPiece, to: &BoundaryChain) -> (f64, Point) {
    let f = |u: f64| to.distance_to_boundary(piece.point_at(u));

    let mut us: Vec<f64> = (0..=SAMPLES).map(|i| i as f64 / SAMPLES as f64).collect();
    for q in to.pieces() {
        us.push(piece.project(q.start()));
        us.push(piece.project(q.end()));
    }
    us.sort_by(f64::total_cmp);
    us.dedup();
    let vals: Vec<f64> = us.iter().map(|&u| f(u)).collect();

    let n = us.len();
    let mut best = (0usize, vals[0]);
    for (i, &v) in vals.iter().enumerate() {
        if v > best.1 {
            best = (i, v);
        }
    }
    let mut peaks: Vec<usize> = (0..n)
        .filter(|&i| {
            let l = if i > 0 {
                vals[i - 1]
            } else {
                f64::NEG_INFINITY
            };
            let r = if i + 1 < n {
                vals[i + 1]
            } else {
                f64::NEG_INFINITY
            };
            vals[i] >= l && vals[i] >= r && vals[i] >= 0.5 * best.1
        })
        .collect();
    peaks.sort_by(|&a, &b| vals[b].total_cmp(&vals[a]));
    peaks.truncate(REFINE);

    let mut out = (best.1, piece.point_at(us[best.0]));
    for i in peaks {
        let a = if i > 0 { us[i - 1] } else { us[0] };
        let b = if i + 1 < n { us[i + 1] } else { us[n - 1] };
        let u = golden_max(&f, a, b);
        let v = f(u);
        if v > out.0 {
            out = (v, piece.point_at(u));
        }
    }
    out
}

fn golden_max(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..GOLDEN_ITERS {
        if b - a <= 1e-15 {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        c
    } else {
        d
    }
}

/// `sup_{x in a} dist(x, b)`.
pub fn directed_hausdorff(a: &BoundaryChain, b: &BoundaryChain) -> f64 {
    a.pieces()
        .iter()
        .map(|p| piece_to_chain(p, b).0)
        .fold(0.0, f64::max)
}

/// Symmetric Hausdorff distance between two boundary curves.
pub fn hausdorff(a: &BoundaryChain, b: &BoundaryChain) -> f64 {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(h: f64) -> BoundaryChain {
        BoundaryChain::polygon(&[
            Point::new(-h, -h),
            Point::new(h, -h),
            Point::new(h, h),
            Point::new(-h, h),
        ])
        .unwrap()
    }

    #[test]
    fn identical_chains() {
        let s = square(1.0);
        assert!(hausdorff(&s, &s) < 1e-15);
    }

    #[test]
    fn square_vs_inscribed_disk() {
        let s = square(1.0);
        let d = BoundaryChain::new(vec![BoundaryPiece::full_circle(Point::ORIGIN, 1.0)]).unwrap();
        let exact = 2f64.sqrt() - 1.0;
        assert!((directed_hausdorff(&s, &d) - exact).abs() < 1e-12);
        assert!((directed_hausdorff(&d, &s) - (1.0 - 0.5f64.sqrt())).abs() < 1e-12);
        assert!((hausdorff(&s, &d) - exact).abs() < 1e-12);
    }

    #[test]
    fn rotated_square() {
        let s = square(1.0);
        let r = s.rotated_about(Point::ORIGIN, std::f64::consts::FRAC_PI_4);
        // The rotated corner at distance sqrt(2) sits sqrt(2) - 1 outside the side.
        assert!((hausdorff(&s, &r) - (2f64.sqrt() - 1.0)).abs() < 1e-12);
    }
}
