//! Subdivision by splitting one edge, splitting one triangle, or taking the
//! first barycentric subdivision.
//!
//! Vertices of the input keep their indices and coordinates; new vertices
//! are appended.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::{edge, triangle, triangle_edges, EmbeddedComplex, Edge, Triangle};
use crate::curvature::parse_number;
use crate::error::{Error, Result};
use crate::vector;

/// Relative tolerance for "lies in the relative interior".
const INTERIOR_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubdivisionScheme {
    SplitEdge { edge: Edge, point: Vec<f64> },
    SplitFace { face: Triangle, point: Vec<f64> },
    Barycentric,
}

impl SubdivisionScheme {
    /// Splits `e` at `a + t (b − a)` where `e = [a, b]` sorted.
    pub fn edge_at(k: &EmbeddedComplex, e: Edge, t: f64) -> Result<Self> {
        let e = edge(e[0], e[1]);
        k.edge_id(e[0], e[1]).ok_or(Error::NoSuchEdge(e[0], e[1]))?;
        Ok(SubdivisionScheme::SplitEdge {
            edge: e,
            point: vector::lerp(k.point(e[0]), k.point(e[1]), t),
        })
    }

    /// Splits `face` at the point with barycentric coordinates `weights`.
    pub fn face_at(k: &EmbeddedComplex, face: Triangle, weights: [f64; 3]) -> Result<Self> {
        let face = triangle(face[0], face[1], face[2]);
        k.triangle_id(&face)
            .ok_or_else(|| Error::NoSuchSimplex(face.to_vec()))?;
        let total: f64 = weights.iter().sum();
        let mut point = vec![0.0; k.ambient_dim()];
        for (&v, w) in face.iter().zip(weights) {
            for (p, x) in point.iter_mut().zip(k.point(v)) {
                *p += w / total * x;
            }
        }
        Ok(SubdivisionScheme::SplitFace { face, point })
    }

    /// Parses `face:<i>:centroid`, `face:<i>:<b0>,<b1>,<b2>`,
    /// `edge:<i>:midpoint`, `edge:<i>:<t>` or `barycentric`, where `<i>`
    /// indexes the sorted triangle or edge list of `k`.
    pub fn parse(spec: &str, k: &EmbeddedComplex) -> Result<Self> {
        let bad = || Error::BadParameter(format!("bad subdivision scheme `{spec}`"));
        if spec == "barycentric" {
            return Ok(SubdivisionScheme::Barycentric);
        }
        let mut parts = spec.splitn(3, ':');
        let (kind, index, at) = (parts.next(), parts.next(), parts.next());
        let (Some(kind), Some(index), Some(at)) = (kind, index, at) else {
            return Err(bad());
        };
        let index: usize = index.parse().map_err(|_| bad())?;
        match kind {
            "face" => {
                let face = *k
                    .triangles()
                    .get(index)
                    .ok_or_else(|| Error::BadParameter(format!("no triangle #{index}")))?;
                let weights = if at == "centroid" {
                    [1.0; 3]
                } else {
                    let w = at.split(',').map(parse_number).collect::<Result<Vec<_>>>()?;
                    <[f64; 3]>::try_from(w).map_err(|_| bad())?
                };
                Self::face_at(k, face, weights)
            }
            "edge" => {
                let e = *k
                    .edges()
                    .get(index)
                    .ok_or_else(|| Error::BadParameter(format!("no edge #{index}")))?;
                let t = if at == "midpoint" { 0.5 } else { parse_number(at)? };
                Self::edge_at(k, e, t)
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for SubdivisionScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubdivisionScheme::SplitEdge { edge, .. } => write!(f, "split edge {edge:?}"),
            SubdivisionScheme::SplitFace { face, .. } => write!(f, "split face {face:?}"),
            SubdivisionScheme::Barycentric => write!(f, "barycentric"),
        }
    }
}

impl FromStr for SubdivisionScheme {
    type Err = Error;

    /// Only `barycentric` is complex-independent; use [`SubdivisionScheme::parse`].
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "barycentric" => Ok(SubdivisionScheme::Barycentric),
            _ => Err(Error::BadParameter(format!(
                "scheme `{s}` needs a complex to resolve against"
            ))),
        }
    }
}

struct Builder {
    dim: usize,
    coords: Vec<f64>,
    edges: BTreeSet<Edge>,
    triangles: BTreeSet<Triangle>,
}

impl Builder {
    fn new(k: &EmbeddedComplex) -> Self {
        Builder {
            dim: k.ambient_dim(),
            coords: k.points().flatten().copied().collect(),
            edges: k.edges().iter().copied().collect(),
            triangles: k.triangles().iter().copied().collect(),
        }
    }

    fn push(&mut self, p: &[f64]) -> usize {
        let v = self.coords.len() / self.dim;
        self.coords.extend_from_slice(p);
        v
    }

    fn add_triangle(&mut self, a: usize, b: usize, c: usize) {
        let t = triangle(a, b, c);
        self.edges.extend(triangle_edges(&t));
        self.triangles.insert(t);
    }

    fn finish(self) -> Result<EmbeddedComplex> {
        EmbeddedComplex::assemble(self.dim, self.coords, self.edges, self.triangles)
    }
}

pub fn subdivide(k: &EmbeddedComplex, scheme: &SubdivisionScheme) -> Result<EmbeddedComplex> {
    match scheme {
        SubdivisionScheme::SplitEdge { edge: e, point } => split_edge(k, edge(e[0], e[1]), point),
        SubdivisionScheme::SplitFace { face, point } => {
            split_face(k, triangle(face[0], face[1], face[2]), point)
        }
        SubdivisionScheme::Barycentric => barycentric(k),
    }
}

fn check_dim(k: &EmbeddedComplex, p: &[f64]) -> Result<()> {
    if p.len() != k.ambient_dim() {
        return Err(Error::DimensionMismatch {
            vertex: k.num_vertices(),
            expected: k.ambient_dim(),
            got: p.len(),
        });
    }
    Ok(())
}

fn split_edge(k: &EmbeddedComplex, e: Edge, p: &[f64]) -> Result<EmbeddedComplex> {
    let id = k.edge_id(e[0], e[1]).ok_or(Error::NoSuchEdge(e[0], e[1]))?;
    check_dim(k, p)?;
    let (a, b) = (k.point(e[0]), k.point(e[1]));
    let ab = vector::sub(b, a);
    let ap = vector::sub(p, a);
    let len2 = vector::dot(&ab, &ab);
    let t = vector::dot(&ap, &ab) / len2;
    let off_line = vector::wedge_norm(&ab, &ap) / len2;
    if !(t > INTERIOR_TOLERANCE && t < 1.0 - INTERIOR_TOLERANCE && off_line <= INTERIOR_TOLERANCE) {
        return Err(Error::PointNotInRelativeInterior(e.to_vec()));
    }
    let mut out = Builder::new(k);
    let n = out.push(p);
    out.edges.remove(&e);
    out.edges.insert(edge(e[0], n));
    out.edges.insert(edge(e[1], n));
    for &ti in k.edge_cofaces(id) {
        let t = k.triangles()[ti];
        let c = *t.iter().find(|&&x| x != e[0] && x != e[1]).expect("third vertex");
        out.triangles.remove(&t);
        out.add_triangle(e[0], n, c);
        out.add_triangle(n, e[1], c);
    }
    out.finish()
}

fn barycentric_coordinates(a: &[f64], b: &[f64], c: &[f64], p: &[f64]) -> ([f64; 3], f64) {
    let v0 = vector::sub(b, a);
    let v1 = vector::sub(c, a);
    let v2 = vector::sub(p, a);
    let (d00, d01, d11) = (vector::dot(&v0, &v0), vector::dot(&v0, &v1), vector::dot(&v1, &v1));
    let (d20, d21) = (vector::dot(&v2, &v0), vector::dot(&v2, &v1));
    let den = d00 * d11 - d01 * d01;
    let y = (d11 * d20 - d01 * d21) / den;
    let z = (d00 * d21 - d01 * d20) / den;
    // Distance from p to the plane of the triangle, relative to its size.
    let proj = vector::add_scaled(&vector::add_scaled(a, &v0, y), &v1, z);
    let off_plane = vector::distance(&proj, p) / d00.max(d11).sqrt();
    ([1.0 - y - z, y, z], off_plane)
}

fn split_face(k: &EmbeddedComplex, t: Triangle, p: &[f64]) -> Result<EmbeddedComplex> {
    k.triangle_id(&t).ok_or_else(|| Error::NoSuchSimplex(t.to_vec()))?;
    check_dim(k, p)?;
    let (w, off_plane) = barycentric_coordinates(k.point(t[0]), k.point(t[1]), k.point(t[2]), p);
    if w.iter().any(|&x| !(x > INTERIOR_TOLERANCE)) || off_plane > INTERIOR_TOLERANCE {
        return Err(Error::PointNotInRelativeInterior(t.to_vec()));
    }
    let mut out = Builder::new(k);
    let n = out.push(p);
    out.triangles.remove(&t);
    out.add_triangle(n, t[0], t[1]);
    out.add_triangle(n, t[1], t[2]);
    out.add_triangle(n, t[0], t[2]);
    out.finish()
}

/// New vertices: edge midpoints in edge order, then triangle centroids in
/// triangle order.
fn barycentric(k: &EmbeddedComplex) -> Result<EmbeddedComplex> {
    let mut out = Builder::new(k);
    out.edges.clear();
    out.triangles.clear();
    let mut midpoint = Vec::with_capacity(k.edges().len());
    for e in k.edges() {
        let m = out.push(&vector::lerp(k.point(e[0]), k.point(e[1]), 0.5));
        out.edges.insert(edge(e[0], m));
        out.edges.insert(edge(e[1], m));
        midpoint.push(m);
    }
    for t in k.triangles() {
        let g = out.push(&vector::centroid(t.iter().map(|&v| k.point(v))));
        for e in triangle_edges(t) {
            let m = midpoint[k.edge_id(e[0], e[1]).expect("triangle edge")];
            out.add_triangle(g, e[0], m);
            out.add_triangle(g, m, e[1]);
        }
    }
    out.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::FVector;
    use crate::generators::regular_tetrahedron;
    use crate::geometry::angle_sum;

    #[test]
    fn face_split_of_tetrahedron() {
        let k = regular_tetrahedron();
        let s = SubdivisionScheme::parse("face:0:centroid", &k).unwrap();
        let j = subdivide(&k, &s).unwrap();
        assert_eq!(j.f_vector(), FVector::new(5, 9, 6));
        assert!((angle_sum(&j, 4).unwrap() - 1.0).abs() < 1e-12);
        for v in 0..4 {
            assert_eq!(j.point(v), k.point(v));
        }
    }

    #[test]
    fn edge_split_adds_two_triangles() {
        let k = regular_tetrahedron();
        let j = subdivide(&k, &SubdivisionScheme::parse("edge:2:midpoint", &k).unwrap()).unwrap();
        assert_eq!(j.f_vector(), FVector::new(5, 9, 6));
        assert!((angle_sum(&j, 4).unwrap() - 1.0).abs() < 1e-12);
        let j = subdivide(&k, &SubdivisionScheme::parse("edge:0:0.3", &k).unwrap()).unwrap();
        assert_eq!(j.euler_characteristic(), 2);
    }

    #[test]
    fn barycentric_of_triangle() {
        let k = EmbeddedComplex::from_triangles(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]], &[[0, 1, 2]])
            .unwrap();
        let j = subdivide(&k, &SubdivisionScheme::Barycentric).unwrap();
        assert_eq!(j.f_vector(), FVector::new(7, 12, 6));
        assert!((angle_sum(&j, 6).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_boundary_points() {
        let k = regular_tetrahedron();
        let t = k.triangles()[0];
        let on_vertex = SubdivisionScheme::SplitFace {
            face: t,
            point: k.point(t[0]).to_vec(),
        };
        assert!(matches!(subdivide(&k, &on_vertex), Err(Error::PointNotInRelativeInterior(_))));
        let off_plane = SubdivisionScheme::SplitFace {
            face: t,
            point: vec![0.0, 0.0, 0.0],
        };
        assert!(matches!(subdivide(&k, &off_plane), Err(Error::PointNotInRelativeInterior(_))));
        assert!(matches!(
            SubdivisionScheme::edge_at(&k, [0, 1], 1.0).and_then(|s| subdivide(&k, &s)),
            Err(Error::PointNotInRelativeInterior(_))
        ));
        assert!(SubdivisionScheme::parse("face:9:centroid", &k).is_err());
        assert!(SubdivisionScheme::parse("blob", &k).is_err());
    }
}
