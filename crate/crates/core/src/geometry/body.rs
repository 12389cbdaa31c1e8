//! JSON body format.
//!
//! ```json
//! {"kind":"polygon","vertices":[[x,y],...]}
//! {"kind":"constraints","halfplanes":[{"normal":[nx,ny],"offset":c},...],
//!                       "disks":[{"center":[cx,cy],"radius":r},...]}
//! {"kind":"catalog","name":"...","params":{...}}
//! ```
//!
//! A halfplane is `{x : n . x <= c}` with `|n| = 1`.

use super::catalog::{make_catalog, CatalogShape, ShapeName};
use super::{BoundaryChain, Point};
use crate::error::{Error, Result};
use crate::offset::{ConstraintSpec, Disk, Halfplane};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BodyInput {
    Polygon {
        vertices: Vec<Point>,
    },
    Constraints {
        #[serde(default)]
        halfplanes: Vec<Halfplane>,
        #[serde(default)]
        disks: Vec<Disk>,
    },
    Catalog {
        name: ShapeName,
        #[serde(default)]
        params: BTreeMap<String, f64>,
    },
}

/// A validated convex body: its boundary plus an equivalent constraint spec.
#[derive(Debug, Clone)]
pub struct Body {
    pub chain: BoundaryChain,
    pub spec: ConstraintSpec,
}

impl Body {
    pub fn from_catalog(shape: &CatalogShape) -> Result<Self> {
        let (chain, spec) = make_catalog(shape)?;
        Ok(Body { chain, spec })
    }

    /// A convex polygon from its counterclockwise vertices.
    pub fn polygon(vertices: &[Point]) -> Result<Self> {
        let chain = BoundaryChain::polygon(vertices)?;
        let halfplanes = chain
            .pieces()
            .iter()
            .map(|p| {
                let d = (p.end() - p.start()).normalized();
                let normal = Point::new(d.y, -d.x);
                Halfplane {
                    normal,
                    offset: normal.dot(p.start()),
                }
            })
            .collect();
        let spec = ConstraintSpec::new(halfplanes, vec![])?;
        Ok(Body { chain, spec })
    }

    pub fn from_constraints(halfplanes: Vec<Halfplane>, disks: Vec<Disk>) -> Result<Self> {
        let spec = ConstraintSpec::new(halfplanes, disks)?;
        Ok(Body {
            chain: spec.boundary().clone(),
            spec,
        })
    }

    pub fn from_input(input: &BodyInput) -> Result<Self> {
        match input {
            BodyInput::Polygon { vertices } => Self::polygon(vertices),
            BodyInput::Constraints { halfplanes, disks } => {
                Self::from_constraints(halfplanes.clone(), disks.clone())
            }
            BodyInput::Catalog { name, params } => Self::from_catalog(&CatalogShape {
                name: *name,
                params: params.clone(),
            }),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let input: BodyInput =
            serde_json::from_str(text).map_err(|e| Error::invalid(format!("body JSON: {e}")))?;
        Self::from_input(&input)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// The constraint form of this body, suitable for writing back out.
    pub fn to_input(&self) -> BodyInput {
        BodyInput::Constraints {
            halfplanes: self.spec.halfplanes().to_vec(),
            disks: self.spec.disks().to_vec(),
        }
    }
}
