//! Constructions: planar fans and polygons, pyramids and bipyramids, flaps,
//! the spiral-ribbon bipyramid, and apex-limit sequences.

mod flaps;
mod polygons;
mod sequences;
mod solids;
mod spiral;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::EmbeddedComplex;
use crate::error::Result;
use crate::geometry::angle_sum;

pub use flaps::{flap_from_pages, mirror_flap, n_flap, shrink_flap_angles, FlapPage, SHRUNK_ANGLE};
pub use polygons::{
    prescribed_angle_polygon, quadrilateral_with_angle, regular_polygon_fan, PrescribedPolygon,
    ANGLE_TOLERANCE,
};
pub use sequences::{centroid_limit_bipyramids, pyramid_apex_sequence};
pub use solids::{
    bipyramid, csaszar_torus, icosahedron, octahedron, pyramid, regular_polygon, regular_tetrahedron,
};
pub use spiral::{spiral_bipyramid, spiral_ribbon, SpiralBipyramid, MAX_BISECTION_STEPS, SAMPLES_PER_TURN};

/// Parameters for one construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    Fan { n: usize },
    Polygon { angles: Vec<f64> },
    Quad { beta: f64 },
    /// Regular `n`-gon fan with an apex at `height` above its centre.
    Pyramid { n: usize, height: f64 },
    /// Regular `m`-gon suspended from `(0, 0, ±height)`.
    Bipyramid { m: usize, height: f64 },
    Flap { angles: Vec<f64> },
    /// [`mirror_flap`] applied at vertex 0 of `n_flap(angles)`.
    MirrorFlap { angles: Vec<f64> },
    Spiral { omega: f64, turns: usize, width: f64 },
}

/// A generated complex plus the quantities worth reporting about it.
#[derive(Debug, Clone)]
pub struct Generated {
    pub complex: EmbeddedComplex,
    pub realized: BTreeMap<String, f64>,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Generated> {
        let mut realized = BTreeMap::new();
        let complex = match self {
            GeneratorSpec::Fan { n } => {
                let k = regular_polygon_fan(*n)?;
                realized.insert("corner_angle".into(), angle_sum(&k, 1)?);
                k
            }
            GeneratorSpec::Polygon { angles } => {
                let p = prescribed_angle_polygon(angles)?;
                realized.insert("closure_error".into(), p.closure_error);
                realized.insert("max_angle_error".into(), p.max_angle_error);
                p.complex
            }
            GeneratorSpec::Quad { beta } => {
                let k = quadrilateral_with_angle(*beta)?;
                realized.insert("angle_at_e".into(), angle_sum(&k, 0)?);
                k
            }
            GeneratorSpec::Pyramid { n, height } => {
                let k = pyramid(&regular_polygon_fan(*n)?, [0.0, 0.0, *height])?;
                realized.insert("apex_angle_sum".into(), angle_sum(&k, *n)?);
                k
            }
            GeneratorSpec::Bipyramid { m, height } => {
                let k = bipyramid(&regular_polygon(*m), [0.0, 0.0, *height], [0.0, 0.0, -*height])?;
                realized.insert("apex_angle_sum".into(), angle_sum(&k, *m)?);
                k
            }
            GeneratorSpec::Flap { angles } => {
                let k = n_flap(angles.len(), angles)?;
                realized.insert("end_angle_sum".into(), angle_sum(&k, 0)?);
                k
            }
            GeneratorSpec::MirrorFlap { angles } => {
                let k = mirror_flap(&n_flap(angles.len(), angles)?, 0)?;
                realized.insert("end_angle_sum".into(), angle_sum(&k, 0)?);
                for i in 0..angles.len() {
                    realized.insert(format!("middle_angle_sum_{i}"), angle_sum(&k, 2 + i)?);
                }
                k
            }
            GeneratorSpec::Spiral { omega, turns, width } => {
                let s = spiral_bipyramid(*omega, *turns, *width)?;
                realized.insert("achieved_omega".into(), s.achieved_omega);
                realized.insert("height".into(), s.height);
                realized.insert("iterations".into(), s.iterations as f64);
                realized.insert("max_ribbon_angle_sum".into(), s.max_ribbon_angle_sum);
                s.complex
            }
        };
        realized.insert("euler_characteristic".into(), complex.euler_characteristic() as f64);
        Ok(Generated { complex, realized })
    }
}
