#![allow(dead_code)]

use cheeger::geometry::{Body, CatalogShape};

pub fn body(shape: CatalogShape) -> Body {
    Body::from_catalog(&shape).unwrap_or_else(|e| panic!("{}: {e}", shape.label()))
}

pub fn equilateral_triangle() -> CatalogShape {
    CatalogShape::regular_polygon(3, 1.0 / 3f64.sqrt())
}

pub fn unit_square() -> CatalogShape {
    CatalogShape::rectangle(1.0, 1.0)
}

/// Every catalog body used by the property suites, with a label.
pub fn catalog() -> Vec<(String, Body)> {
    let mut shapes = vec![
        CatalogShape::disk(1.0),
        unit_square(),
        CatalogShape::rectangle(2.0, 1.0),
        equilateral_triangle(),
    ];
    shapes.extend((3..=12).map(|n| CatalogShape::regular_polygon(n, 1.0)));
    shapes.extend([3, 5, 7].map(|k| CatalogShape::reuleaux_polygon(k, 1.0)));
    shapes.extend([3, 5].map(CatalogShape::disk_cap_regular_polygon));
    shapes.push(CatalogShape::cut_corner_triangle(1.0, 0.2));
    shapes.push(CatalogShape::cut_corner_triangle(1.0, 1.0 / 3.0));
    shapes.push(CatalogShape::capped_rectangle(2.0, 1.0, 1.25));
    shapes.into_iter().map(|s| (s.label(), body(s))).collect()
}

/// Polygonal members of [`catalog`].
pub fn polygons() -> Vec<(String, Body)> {
    catalog()
        .into_iter()
        .filter(|(_, b)| b.spec.is_polygon())
        .collect()
}

/// Rotationally symmetric bodies with their symmetry order.
pub fn symmetric_cases() -> Vec<(String, Body, usize)> {
    let mut cases: Vec<(CatalogShape, usize)> = Vec::new();
    cases.extend((3..=12).map(|n| (CatalogShape::regular_polygon(n, 1.0), n)));
    cases.extend([3, 5, 7].map(|k| (CatalogShape::reuleaux_polygon(k, 1.0), k)));
    cases.extend([3, 5].map(|k| (CatalogShape::disk_cap_regular_polygon(k), k)));
    cases.push((CatalogShape::cut_corner_triangle(1.0, 0.2), 3));
    cases.push((CatalogShape::rectangle(2.0, 1.0), 2));
    cases.extend((2..=8).map(|k| (CatalogShape::disk(1.0), k)));
    cases
        .into_iter()
        .map(|(s, k)| (format!("{} k={k}", s.label()), body(s), k))
        .collect()
}
