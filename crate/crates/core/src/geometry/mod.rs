//! Planar convex bodies bounded by segments and circular arcs.

mod body;
mod catalog;
mod chain;
pub mod hausdorff;
mod piece;
mod point;

pub use body::{Body, BodyInput};
pub use catalog::{make_catalog, CatalogShape, ShapeName};
pub use chain::{validate, BoundaryChain, Diagnostics, Violation, CHAIN_REL_TOL};
pub use piece::BoundaryPiece;
pub use point::{wrap_angle, Point};
