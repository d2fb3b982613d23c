//! Pyramids, bipyramids, the Platonic solids used in the corpus, and a
//! vertex-minimal torus.

use crate::complex::{triangle, EmbeddedComplex, Triangle};
use crate::error::{Error, Result};
use crate::vector;

/// Apices closer to the base plane than this (relative to the base size)
/// count as lying in it.
const PLANE_TOLERANCE: f64 = 1e-12;

struct Plane {
    origin: [f64; 3],
    normal: [f64; 3],
    scale: f64,
}

impl Plane {
    fn signed_distance(&self, p: &[f64; 3]) -> f64 {
        vector::dot(&vector::sub(p, &self.origin), &self.normal)
    }
}

fn base_plane(points: &[[f64; 3]], triangles: &[Triangle]) -> Result<Plane> {
    let t = triangles
        .first()
        .ok_or_else(|| Error::BadParameter("base has no triangles".into()))?;
    let (p, q, r) = (&points[t[0]], &points[t[1]], &points[t[2]]);
    let n = vector::cross3(&vector::sub(q, p), &vector::sub(r, p));
    let len = vector::norm(&n);
    let scale = points
        .iter()
        .map(|x| vector::distance(x, p))
        .fold(0.0, f64::max);
    Ok(Plane {
        origin: *p,
        normal: n.map(|c| c / len),
        scale,
    })
}

fn lifted_points(k: &EmbeddedComplex) -> Result<Vec<[f64; 3]>> {
    if k.ambient_dim() > 3 {
        return Err(Error::BadParameter("base must live in R² or R³".into()));
    }
    Ok(k.points().map(vector::lift3).collect())
}

/// Boundary of the cone on a planar disk: the disk's triangles plus one
/// triangle from `apex` over every boundary edge. The apex gets the next
/// free index.
pub fn pyramid(base: &EmbeddedComplex, apex: [f64; 3]) -> Result<EmbeddedComplex> {
    if !base.is_planar() {
        return Err(Error::BadParameter("pyramid base is not planar".into()));
    }
    let mut pts = lifted_points(base)?;
    let plane = base_plane(&pts, base.triangles())?;
    if plane.signed_distance(&apex).abs() <= PLANE_TOLERANCE * plane.scale.max(1.0) {
        return Err(Error::ApexInPlane);
    }
    let a = pts.len();
    let mut triangles = base.triangles().to_vec();
    for (e, edge) in base.edges().iter().enumerate() {
        if base.edge_cofaces(e).len() == 1 {
            triangles.push(triangle(edge[0], edge[1], a));
        }
    }
    pts.push(apex);
    EmbeddedComplex::from_triangles(&pts, &triangles)
}

/// Suspension of a simple polygon in the plane z = 0 from `top` (z > 0) and
/// `bottom` (z < 0). Polygon vertices keep their indices; the apices are
/// `m` and `m + 1`.
pub fn bipyramid(polygon: &[[f64; 2]], top: [f64; 3], bottom: [f64; 3]) -> Result<EmbeddedComplex> {
    let m = polygon.len();
    if m < 3 {
        return Err(Error::BadParameter(format!("polygon needs at least 3 vertices, got {m}")));
    }
    if !is_simple_polygon(polygon) {
        return Err(Error::BadParameter("polygon is not simple".into()));
    }
    let scale = polygon
        .iter()
        .map(|p| p[0].hypot(p[1]))
        .fold(1.0, f64::max);
    let tol = PLANE_TOLERANCE * scale;
    if top[2].abs() <= tol || bottom[2].abs() <= tol {
        return Err(Error::ApexInPlane);
    }
    if top[2].signum() == bottom[2].signum() {
        return Err(Error::ApicesSameSide);
    }
    suspension(polygon, top, bottom)
}

/// Suspension without the apex position checks; used for limits where an
/// apex reaches the plane.
pub(crate) fn suspension(
    polygon: &[[f64; 2]],
    top: [f64; 3],
    bottom: [f64; 3],
) -> Result<EmbeddedComplex> {
    let m = polygon.len();
    let mut pts: Vec<[f64; 3]> = polygon.iter().map(|p| [p[0], p[1], 0.0]).collect();
    pts.push(top);
    pts.push(bottom);
    let mut triangles = Vec::with_capacity(2 * m);
    for i in 0..m {
        let j = (i + 1) % m;
        triangles.push(triangle(i, j, m));
        triangles.push(triangle(i, j, m + 1));
    }
    EmbeddedComplex::from_triangles(&pts, &triangles)
}

/// Regular `m`-gon with circumradius 1 in the plane z = 0.
pub fn regular_polygon(m: usize) -> Vec<[f64; 2]> {
    (0..m)
        .map(|i| {
            let (s, c) = (std::f64::consts::TAU * i as f64 / m as f64).sin_cos();
            [c, s]
        })
        .collect()
}

fn segments_cross(a: &[f64; 2], b: &[f64; 2], c: &[f64; 2], d: &[f64; 2]) -> bool {
    let orient = |p: &[f64; 2], q: &[f64; 2], r: &[f64; 2]| {
        (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    };
    let on_segment = |p: &[f64; 2], q: &[f64; 2], r: &[f64; 2]| {
        r[0] >= p[0].min(q[0]) && r[0] <= p[0].max(q[0]) && r[1] >= p[1].min(q[1]) && r[1] <= p[1].max(q[1])
    };
    let (d1, d2) = (orient(c, d, a), orient(c, d, b));
    let (d3, d4) = (orient(a, b, c), orient(a, b, d));
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && on_segment(c, d, a))
        || (d2 == 0.0 && on_segment(c, d, b))
        || (d3 == 0.0 && on_segment(a, b, c))
        || (d4 == 0.0 && on_segment(a, b, d))
}

/// No two non-adjacent edges meet and no vertex repeats.
pub(crate) fn is_simple_polygon(p: &[[f64; 2]]) -> bool {
    let m = p.len();
    for i in 0..m {
        for j in (i + 1)..m {
            if p[i] == p[j] {
                return false;
            }
            let adjacent = j == i + 1 || (i == 0 && j == m - 1);
            if !adjacent && segments_cross(&p[i], &p[(i + 1) % m], &p[j], &p[(j + 1) % m]) {
                return false;
            }
        }
    }
    true
}

/// Closed triangles among `pts` whose three sides all have the minimum
/// pairwise distance; used for the Platonic solids.
fn shortest_edge_faces(pts: &[[f64; 3]]) -> Vec<Triangle> {
    let n = pts.len();
    let mut min = f64::INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            min = min.min(vector::distance(&pts[i], &pts[j]));
        }
    }
    let close = |i: usize, j: usize| (vector::distance(&pts[i], &pts[j]) - min).abs() < 1e-9 * min;
    let mut faces = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if close(i, j) && close(j, k) && close(i, k) {
                    faces.push([i, j, k]);
                }
            }
        }
    }
    faces
}

pub fn regular_tetrahedron() -> EmbeddedComplex {
    let pts = [
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ];
    EmbeddedComplex::from_triangles(&pts, &shortest_edge_faces(&pts)).expect("tetrahedron")
}

pub fn octahedron() -> EmbeddedComplex {
    let pts = [
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ];
    EmbeddedComplex::from_triangles(&pts, &shortest_edge_faces(&pts)).expect("octahedron")
}

pub fn icosahedron() -> EmbeddedComplex {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut pts = Vec::with_capacity(12);
    for a in [-1.0, 1.0] {
        for b in [-phi, phi] {
            pts.push([0.0, a, b]);
            pts.push([a, b, 0.0]);
            pts.push([b, 0.0, a]);
        }
    }
    EmbeddedComplex::from_triangles(&pts, &shortest_edge_faces(&pts)).expect("icosahedron")
}

/// Seven-vertex torus with straight edges, embedded in R³ with integer
/// coordinates.
pub fn csaszar_torus() -> EmbeddedComplex {
    let pts = [
        [3.0, -3.0, 0.0],
        [-3.0, 3.0, 0.0],
        [-1.0, -2.0, 3.0],
        [3.0, 3.0, 1.0],
        [0.0, 0.0, 15.0],
        [-3.0, -3.0, 1.0],
        [1.0, 2.0, 3.0],
    ];
    let mut faces = Vec::with_capacity(14);
    for i in 0..7 {
        faces.push(triangle(i, (i + 1) % 7, (i + 3) % 7));
        faces.push(triangle(i, (i + 2) % 7, (i + 3) % 7));
    }
    EmbeddedComplex::from_triangles(&pts, &faces).expect("torus")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::FVector;
    use crate::generators::regular_polygon_fan;

    #[test]
    fn platonic_counts() {
        assert_eq!(regular_tetrahedron().f_vector(), FVector::new(4, 6, 4));
        assert_eq!(octahedron().f_vector(), FVector::new(6, 12, 8));
        assert_eq!(icosahedron().f_vector(), FVector::new(12, 30, 20));
        let t = csaszar_torus();
        assert_eq!(t.f_vector(), FVector::new(7, 21, 14));
        assert_eq!(t.euler_characteristic(), 0);
        for k in [regular_tetrahedron(), octahedron(), icosahedron(), t] {
            assert!(k.is_surface());
        }
    }

    #[test]
    fn square_pyramid() {
        let base = regular_polygon_fan(4).unwrap();
        let k = pyramid(&base, [0.0, 0.0, 1.0]).unwrap();
        assert_eq!(k.f_vector(), FVector::new(5, 9, 6));
        assert!(k.is_surface());
        assert!(matches!(pyramid(&base, [0.3, 0.2, 0.0]), Err(Error::ApexInPlane)));
    }

    #[test]
    fn bipyramid_checks() {
        let tri = regular_polygon(3);
        let k = bipyramid(&tri, [0.0, 0.0, 1.0], [0.0, 0.0, -1.0]).unwrap();
        assert_eq!(k.f_vector(), FVector::new(5, 9, 6));
        assert!(matches!(
            bipyramid(&tri, [0.0, 0.0, 1.0], [0.0, 0.0, 2.0]),
            Err(Error::ApicesSameSide)
        ));
        assert!(matches!(
            bipyramid(&tri, [0.0, 0.0, 0.0], [0.0, 0.0, -2.0]),
            Err(Error::ApexInPlane)
        ));
        let bowtie = [[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]];
        assert!(bipyramid(&bowtie, [0.0, 0.0, 1.0], [0.0, 0.0, -1.0]).is_err());
        for m in 3..13 {
            let k = bipyramid(&regular_polygon(m), [0.0, 0.0, 0.7], [0.1, 0.0, -1.3]).unwrap();
            assert_eq!(k.euler_characteristic(), 2);
            assert!(k.is_surface());
        }
    }
}
