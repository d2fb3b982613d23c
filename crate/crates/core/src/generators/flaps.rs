//! n-flaps (books of triangles on a common edge) and the two flap
//! modifications: mirroring across a perpendicular plane, and pulling the
//! page vertices toward one end.

use std::f64::consts::TAU;

use crate::complex::{EmbeddedComplex, Triangle};
use crate::error::{Error, Result};
use crate::geometry::angle_at;
use crate::vector;

/// One triangle of a flap: its angle at the end-vertex `v` and the length of
/// its third vertex from `v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlapPage {
    pub angle: f64,
    pub length: f64,
}

/// An n-flap on the edge from `v = (0,0,0)` (index 0) to `w = (1,0,0)`
/// (index 1). Page `i` gets vertex `2 + i` at unit distance from `v`, making
/// angle `apex_angles[i]` with the edge, rotated about it by `(i + ½)/n` of a
/// turn.
pub fn n_flap(n: usize, apex_angles: &[f64]) -> Result<EmbeddedComplex> {
    if apex_angles.len() != n {
        return Err(Error::BadParameter(format!(
            "{n}-flap needs {n} angles, got {}",
            apex_angles.len()
        )));
    }
    let pages: Vec<FlapPage> = apex_angles
        .iter()
        .map(|&angle| FlapPage { angle, length: 1.0 })
        .collect();
    let dihedrals: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
    flap_from_pages(1.0, &pages, &dihedrals)
}

/// General flap on an edge of length `edge_length` along the x-axis; page `i`
/// is rotated about that axis by `dihedrals[i]` turns.
pub fn flap_from_pages(edge_length: f64, pages: &[FlapPage], dihedrals: &[f64]) -> Result<EmbeddedComplex> {
    if pages.len() != dihedrals.len() {
        return Err(Error::BadParameter("one dihedral per page required".into()));
    }
    if !(edge_length > 0.0) {
        return Err(Error::BadParameter(format!("edge length {edge_length} must be positive")));
    }
    let mut pts = vec![[0.0, 0.0, 0.0], [edge_length, 0.0, 0.0]];
    let mut triangles: Vec<Triangle> = Vec::with_capacity(pages.len());
    for (i, (page, rot)) in pages.iter().zip(dihedrals).enumerate() {
        if !(page.angle > 0.0 && page.angle < 0.5) {
            return Err(Error::BadParameter(format!("flap angle {} outside (0, 1/2)", page.angle)));
        }
        if !(page.length > 0.0) {
            return Err(Error::BadParameter(format!("page length {} must be positive", page.length)));
        }
        let (s, c) = (TAU * page.angle).sin_cos();
        let (rs, rc) = (TAU * rot).sin_cos();
        pts.push([page.length * c, page.length * s * rc, page.length * s * rs]);
        triangles.push([0, 1, 2 + i]);
    }
    if triangles.is_empty() {
        return EmbeddedComplex::build(&pts, &[[0usize, 1]], Default::default());
    }
    EmbeddedComplex::from_triangles(&pts, &triangles)
}

/// End-vertices of `k` as `(v, other)` with `v` the requested one.
fn flap_ends(k: &EmbeddedComplex, v: usize) -> Result<(usize, usize)> {
    let info = k
        .classify()
        .flap
        .ok_or_else(|| Error::BadParameter("complex is not an n-flap".into()))?;
    match info.ends {
        (a, b) if a == v => Ok((a, b)),
        (a, b) if b == v => Ok((b, a)),
        _ => Err(Error::BadParameter(format!("vertex {v} is not an end-vertex of the flap"))),
    }
}

/// Third vertices of the flap pages, in triangle order.
fn page_vertices(k: &EmbeddedComplex, v: usize, w: usize) -> Vec<usize> {
    k.triangles()
        .iter()
        .map(|t| *t.iter().find(|&&x| x != v && x != w).expect("flap page"))
        .collect()
}

/// The doubled flap: cut every page of `k` by the plane perpendicular to the
/// edge `vw` at distance `t` from `v`, and reflect the part near `v` across
/// that plane. The result is an n-flap with ends `v` (index 0) and its mirror
/// image `x` (index 1); page `i` keeps its angle at `v`, and its far vertex
/// `d_i` (index `2 + i`) has angle `½ − 2·angle_i`.
pub fn mirror_flap(k: &EmbeddedComplex, v: usize) -> Result<EmbeddedComplex> {
    let (v, w) = flap_ends(k, v)?;
    let pv = k.point(v).to_vec();
    let axis = vector::sub(k.point(w), &pv);
    let len = vector::norm(&axis);
    let u: Vec<f64> = axis.iter().map(|c| c / len).collect();

    let pages = page_vertices(k, v, w);
    let mut projections = Vec::with_capacity(pages.len());
    for (t, &e) in k.triangles().iter().zip(&pages) {
        let angle = angle_at(k, v, t);
        if angle >= 0.25 {
            return Err(Error::AngleTooLarge { vertex: e, angle });
        }
        projections.push(vector::dot(&vector::sub(k.point(e), &pv), &u));
    }
    let t = 0.5 * projections.iter().copied().fold(len, f64::min);

    let mut pts = vec![pv.clone(), vector::add_scaled(&pv, &u, 2.0 * t)];
    let mut triangles: Vec<Triangle> = Vec::with_capacity(pages.len());
    for (i, (&e, proj)) in pages.iter().zip(&projections).enumerate() {
        let dir = vector::sub(k.point(e), &pv);
        pts.push(vector::add_scaled(&pv, &dir, t / proj));
        triangles.push([0, 1, 2 + i]);
    }
    if triangles.is_empty() {
        return EmbeddedComplex::build(&pts, &[[0usize, 1]], Default::default());
    }
    EmbeddedComplex::from_triangles(&pts, &triangles)
}

/// Largest angle at an end-vertex after [`shrink_flap_angles`].
pub const SHRUNK_ANGLE: f64 = 0.24;

/// Slides every page vertex whose angle at `w` is at least 1/4 along its
/// segment toward the other end `v` until that angle is [`SHRUNK_ANGLE`].
/// Angles at `v` do not change.
pub fn shrink_flap_angles(k: &EmbeddedComplex, w: usize) -> Result<EmbeddedComplex> {
    let (w, v) = flap_ends(k, w)?;
    let pv = k.point(v).to_vec();
    let pw = k.point(w).to_vec();
    let pages = page_vertices(k, v, w);
    let mut pts: Vec<Vec<f64>> = k.points().map(<[f64]>::to_vec).collect();
    for (t, &e) in k.triangles().iter().zip(&pages) {
        if angle_at(k, w, t) < 0.25 {
            continue;
        }
        let pe = k.point(e).to_vec();
        let angle_w = |s: f64| {
            let q = vector::lerp(&pv, &pe, s);
            vector::angle_between(&vector::sub(&pv, &pw), &vector::sub(&q, &pw))
        };
        // The angle at w increases with s, from 0 at s = 0.
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if angle_w(mid) < SHRUNK_ANGLE {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-15 {
                break;
            }
        }
        pts[e] = vector::lerp(&pv, &pe, lo);
    }
    k.with_coordinates(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::angle_sum;

    #[test]
    fn flap_shapes() {
        let k = n_flap(0, &[]).unwrap();
        assert_eq!(k.f_vector().f1, 1);
        assert!(k.classify().is_n_flap(0));
        let k = n_flap(1, &[1.0 / 6.0]).unwrap();
        assert_eq!(k.triangles().len(), 1);
        let k = n_flap(3, &[1.0 / 6.0; 3]).unwrap();
        assert!((angle_sum(&k, 0).unwrap() - 0.5).abs() < 1e-12);
        let c = k.classify();
        assert!(c.is_n_flap(3) && c.is_cone());
        assert_eq!(c.flap.unwrap().ends, (0, 1));
        assert!(n_flap(2, &[0.1]).is_err());
        assert!(n_flap(1, &[0.5]).is_err());
    }

    #[test]
    fn mirror_preserves_apex_angles() {
        let k = n_flap(2, &[0.125, 0.125]).unwrap();
        let y = mirror_flap(&k, 0).unwrap();
        assert!(y.classify().is_n_flap(2));
        for d in 2..4 {
            assert!((angle_sum(&y, d).unwrap() - 0.25).abs() < 1e-12);
        }
        assert!((angle_sum(&y, 0).unwrap() - 0.25).abs() < 1e-12);
        assert!((angle_sum(&y, 1).unwrap() - 0.25).abs() < 1e-12);

        let k = n_flap(1, &[1.0 / 6.0]).unwrap();
        let y = mirror_flap(&k, 0).unwrap();
        assert!((angle_sum(&y, 2).unwrap() - 1.0 / 6.0).abs() < 1e-12);

        let k = n_flap(2, &[0.1, 0.3]).unwrap();
        assert!(matches!(mirror_flap(&k, 0), Err(Error::AngleTooLarge { .. })));
        assert!(mirror_flap(&k, 2).is_err());
    }

    #[test]
    fn shrink_keeps_v_angles() {
        // A page vertex far beyond w makes a wide angle at w.
        let pages = [
            FlapPage { angle: 0.05, length: 3.0 },
            FlapPage { angle: 0.2, length: 0.5 },
        ];
        let k = flap_from_pages(1.0, &pages, &[0.1, 0.6]).unwrap();
        let t = k.triangles().to_vec();
        assert!(angle_at(&k, 1, &t[0]) > 0.25);
        let z = shrink_flap_angles(&k, 1).unwrap();
        for tri in &t {
            assert!(angle_at(&z, 1, tri) < 0.25);
            assert!((angle_at(&z, 0, tri) - angle_at(&k, 0, tri)).abs() < 1e-12);
        }
        let unchanged = n_flap(2, &[0.1, 0.1]).unwrap();
        assert_eq!(shrink_flap_angles(&unchanged, 1).unwrap(), unchanged);
    }
}
