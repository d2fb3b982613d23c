//! Families of pyramids and bipyramids whose apex approaches a point of the
//! base plane.

use crate::complex::EmbeddedComplex;
use crate::error::{Error, Result};
use crate::generators::solids::{pyramid, suspension};
use crate::vector;

/// Pyramids over `base` with apex at height `1/j` above `limit_point`,
/// for `j = 1..=k`. The limit point must lie in the base plane, inside the
/// disk and off its boundary.
pub fn pyramid_apex_sequence(
    base: &EmbeddedComplex,
    limit_point: [f64; 3],
    k: usize,
) -> Result<Vec<EmbeddedComplex>> {
    if k == 0 {
        return Err(Error::BadParameter("sequence length must be at least 1".into()));
    }
    let normal = interior_normal(base, &limit_point)?;
    (1..=k)
        .map(|j| {
            let h = 1.0 / j as f64;
            pyramid(base, [0, 1, 2].map(|i| limit_point[i] + h * normal[i]))
        })
        .collect()
}

/// Unit normal of the base plane, after checking that `p` is in the
/// relative interior of the planar disk `base`.
fn interior_normal(base: &EmbeddedComplex, p: &[f64; 3]) -> Result<[f64; 3]> {
    if !base.is_planar() || base.triangles().is_empty() {
        return Err(Error::BadParameter("base must be a planar disk".into()));
    }
    let pts: Vec<[f64; 3]> = base.points().map(vector::lift3).collect();
    let t = base.triangles()[0];
    let n = vector::cross3(&vector::sub(&pts[t[1]], &pts[t[0]]), &vector::sub(&pts[t[2]], &pts[t[0]]));
    let len = vector::norm(&n);
    let normal = n.map(|c| c / len);
    let scale = pts.iter().map(|q| vector::distance(q, &pts[0])).fold(1.0, f64::max);
    if vector::dot(&vector::sub(p, &pts[0]), &normal).abs() > 1e-12 * scale {
        return Err(Error::BadParameter("limit point is not in the base plane".into()));
    }

    let tol = 1e-12;
    let mut inside = false;
    for tri in base.triangles() {
        let b = barycentric(&pts[tri[0]], &pts[tri[1]], &pts[tri[2]], p);
        if b.iter().all(|&x| x >= -tol) {
            inside = true;
            // On a boundary edge of the disk: the opposite coordinate vanishes.
            for (i, &x) in b.iter().enumerate() {
                if x.abs() <= tol {
                    let [a, c] = crate::complex::opposite(tri, tri[i]);
                    let e = base.edge_id(a, c).expect("triangle edge");
                    if base.edge_cofaces(e).len() < 2 {
                        return Err(Error::BadParameter("limit point is on the base boundary".into()));
                    }
                }
            }
        }
    }
    if !inside {
        return Err(Error::BadParameter("limit point is outside the base".into()));
    }
    Ok(normal)
}

fn barycentric(a: &[f64; 3], b: &[f64; 3], c: &[f64; 3], p: &[f64; 3]) -> [f64; 3] {
    let v0 = vector::sub(b, a);
    let v1 = vector::sub(c, a);
    let v2 = vector::sub(p, a);
    let (d00, d01, d11) = (vector::dot(&v0, &v0), vector::dot(&v0, &v1), vector::dot(&v1, &v1));
    let (d20, d21) = (vector::dot(&v2, &v0), vector::dot(&v2, &v1));
    let den = d00 * d11 - d01 * d01;
    let v = (d11 * d20 - d01 * d21) / den;
    let w = (d00 * d21 - d01 * d20) / den;
    [1.0 - v - w, v, w]
}

/// A bipyramid over an equilateral triangle whose top apex makes a regular
/// tetrahedron and whose bottom apex sits at depth `heights[j]` below the
/// centroid. Also returns the limit complex with the bottom apex at the
/// centroid, where it becomes a flat vertex. Vertex 4 is the bottom apex.
pub fn centroid_limit_bipyramids(heights: &[f64]) -> Result<(EmbeddedComplex, Vec<EmbeddedComplex>)> {
    let tri = crate::generators::regular_polygon(3);
    let side = 3f64.sqrt();
    let top = [0.0, 0.0, side * (2.0f64 / 3.0).sqrt()];
    let limit = suspension(&tri, top, [0.0, 0.0, 0.0])?;
    let members = heights
        .iter()
        .map(|&h| {
            if !(h > 0.0) {
                return Err(Error::BadParameter(format!("height {h} must be positive")));
            }
            suspension(&tri, top, [0.0, 0.0, -h])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((limit, members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::regular_polygon_fan;
    use crate::geometry::angle_sum;

    #[test]
    fn apex_sums_increase_toward_one() {
        let base = regular_polygon_fan(3).unwrap();
        let c = vector::centroid(base.points());
        let seq = pyramid_apex_sequence(&base, vector::lift3(&c), 20).unwrap();
        let sums: Vec<f64> = seq.iter().map(|k| angle_sum(k, 3).unwrap()).collect();
        assert!(sums.windows(2).all(|w| w[0] < w[1]));
        assert!(sums[19] < 1.0 && sums[19] > 0.9);
        assert!(pyramid_apex_sequence(&base, vector::lift3(&c), 0).is_err());
        assert!(pyramid_apex_sequence(&base, [1.0, 0.0, 0.0], 3).is_err());
        assert!(pyramid_apex_sequence(&base, [5.0, 0.0, 0.0], 3).is_err());
    }

    #[test]
    fn limit_apex_is_flat() {
        let (limit, seq) = centroid_limit_bipyramids(&[0.5, 0.25]).unwrap();
        assert!((angle_sum(&limit, 4).unwrap() - 1.0).abs() < 1e-12);
        assert!(seq.iter().all(|k| angle_sum(k, 4).unwrap() < 1.0));
        assert!(limit.is_surface());
    }
}
