//! Cheeger constants and Cheeger sets of planar convex bodies.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod json;
pub mod offset;
pub mod oracle;
pub mod solver;
pub mod svg;
pub mod symmetry;

pub use error::{Error, Result};
