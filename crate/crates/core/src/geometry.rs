//! Normalized angles and lengths on embedded simplices.
//!
//! Angles are measured in turns: a full turn is 1, a straight angle 1/2.

use rand::Rng;

use crate::complex::{EmbeddedComplex, Edge, Simplex, Triangle};
use crate::error::{Error, Result};
use crate::vector;

/// Interior angle of the triangle `face` at its vertex `v`.
pub fn interior_angle(k: &EmbeddedComplex, v: usize, face: Triangle) -> Result<f64> {
    k.check_vertex(v)?;
    let Some(id) = k.triangle_id(&face) else {
        return Err(Error::NoSuchSimplex(face.to_vec()));
    };
    let t = k.triangles()[id];
    if !t.contains(&v) {
        return Err(Error::NotIncident {
            vertex: v,
            simplex: t.to_vec(),
        });
    }
    Ok(angle_at(k, v, &t))
}

/// Angle at `v` in triangle `t`; both assumed valid.
pub(crate) fn angle_at(k: &EmbeddedComplex, v: usize, t: &Triangle) -> f64 {
    let [a, b] = crate::complex::opposite(t, v);
    let p = k.point(v);
    vector::angle_between(&vector::sub(k.point(a), p), &vector::sub(k.point(b), p))
}

/// Sum of the interior angles at `v` over all triangles containing `v`.
pub fn angle_sum(k: &EmbeddedComplex, v: usize) -> Result<f64> {
    k.check_vertex(v)?;
    Ok(k
        .incident_triangles(v)
        .iter()
        .map(|&i| angle_at(k, v, &k.triangles()[i]))
        .sum())
}

/// Exterior angle of `simplex` at `v`: 1 for the vertex itself, 1/2 for an
/// edge, and 1/2 minus the interior angle for a triangle.
pub fn exterior_angle(k: &EmbeddedComplex, v: usize, simplex: &Simplex) -> Result<f64> {
    k.check_vertex(v)?;
    if !k.contains(simplex) {
        return Err(Error::NoSuchSimplex(simplex.vertices().to_vec()));
    }
    if !simplex.contains(v) {
        return Err(Error::NotIncident {
            vertex: v,
            simplex: simplex.vertices().to_vec(),
        });
    }
    Ok(match simplex {
        Simplex::Vertex(_) => 1.0,
        Simplex::Edge(_) => 0.5,
        Simplex::Triangle(t) => 0.5 - angle_at(k, v, t),
    })
}

pub fn edge_length(k: &EmbeddedComplex, e: Edge) -> Result<f64> {
    k.edge_id(e[0], e[1])
        .map(|_| vector::distance(k.point(e[0]), k.point(e[1])))
        .ok_or(Error::NoSuchEdge(e[0], e[1]))
}

pub fn triangle_area(k: &EmbeddedComplex, t: &Triangle) -> f64 {
    vector::triangle_area(k.point(t[0]), k.point(t[1]), k.point(t[2]))
}

/// Total area of the realized 2-simplices.
pub fn total_area(k: &EmbeddedComplex) -> f64 {
    k.triangles().iter().map(|t| triangle_area(k, t)).sum()
}

pub fn min_edge_length(k: &EmbeddedComplex) -> Option<f64> {
    k.edges()
        .iter()
        .map(|e| vector::distance(k.point(e[0]), k.point(e[1])))
        .min_by(|a, b| a.total_cmp(b))
}

/// An orthogonal map followed by a translation in R³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidMotion {
    pub rotation: [[f64; 3]; 3],
    pub translation: [f64; 3],
}

impl RigidMotion {
    pub fn identity() -> Self {
        RigidMotion {
            rotation: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            translation: [0.0; 3],
        }
    }

    /// Rotation by `angle` turns about `axis` (Rodrigues).
    pub fn rotation(axis: [f64; 3], angle: f64) -> Self {
        let n = vector::norm(&axis);
        let [x, y, z] = axis.map(|c| c / n);
        let (s, c) = (angle * std::f64::consts::TAU).sin_cos();
        let t = 1.0 - c;
        RigidMotion {
            rotation: [
                [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
                [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
                [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
            ],
            translation: [0.0; 3],
        }
    }

    /// A random rotation, optionally composed with a reflection, plus a
    /// translation with coordinates in `[-scale, scale]`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> Self {
        let axis = loop {
            let a = [
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            ];
            if vector::norm(&a) > 0.1 {
                break a;
            }
        };
        let mut m = Self::rotation(axis, rng.gen_range(0.0..1.0));
        if rng.gen_bool(0.5) {
            for row in &mut m.rotation {
                row[2] = -row[2];
            }
        }
        m.translation = [
            rng.gen_range(-scale..scale),
            rng.gen_range(-scale..scale),
            rng.gen_range(-scale..scale),
        ];
        m
    }

    pub fn apply_point(&self, p: &[f64]) -> [f64; 3] {
        let p = vector::lift3(p);
        let mut out = self.translation;
        for (i, row) in self.rotation.iter().enumerate() {
            out[i] += row[0] * p[0] + row[1] * p[1] + row[2] * p[2];
        }
        out
    }

    /// Moves every vertex; 2D complexes are lifted into R³ first.
    pub fn apply(&self, k: &EmbeddedComplex) -> Result<EmbeddedComplex> {
        if k.ambient_dim() > 3 {
            return Err(Error::BadParameter("rigid motions act on R³ only".into()));
        }
        k.map_coordinates(|_, p| self.apply_point(p).to_vec())
    }
}

/// Uniform scaling about the origin.
pub fn scaled(k: &EmbeddedComplex, factor: f64) -> Result<EmbeddedComplex> {
    k.map_coordinates(|_, p| p.iter().map(|x| x * factor).collect())
}
