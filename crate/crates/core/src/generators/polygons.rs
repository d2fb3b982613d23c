//! Planar fans: regular polygons, polygons with prescribed angles, and the
//! one-angle quadrilateral.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::complex::{EmbeddedComplex, Triangle};
use crate::error::{Error, Result};
use crate::geometry::angle_sum;

/// Realized angles must match requested ones within this.
pub const ANGLE_TOLERANCE: f64 = 1e-9;

fn fan_triangles(m: usize) -> Vec<Triangle> {
    (1..m - 1).map(|i| [0, i, i + 1]).collect()
}

/// Regular `n`-gon with unit circumradius, coned from vertex 0.
pub fn regular_polygon_fan(n: usize) -> Result<EmbeddedComplex> {
    if n < 3 {
        return Err(Error::BadParameter(format!("a polygon needs at least 3 vertices, got {n}")));
    }
    let pts: Vec<[f64; 2]> = (0..n)
        .map(|i| {
            let (s, c) = (TAU * i as f64 / n as f64).sin_cos();
            [c, s]
        })
        .collect();
    EmbeddedComplex::from_triangles(&pts, &fan_triangles(n))
}

#[derive(Debug, Clone, Serialize)]
pub struct PrescribedPolygon {
    #[serde(skip)]
    pub complex: EmbeddedComplex,
    pub lengths: Vec<f64>,
    /// Distance between the start point and the end of the edge walk.
    pub closure_error: f64,
    /// Largest `|realized − requested|` over all corners.
    pub max_angle_error: f64,
}

/// Convex polygon whose corner `i` has interior angle `angles[i]`, fan
/// triangulated from corner 0.
pub fn prescribed_angle_polygon(angles: &[f64]) -> Result<PrescribedPolygon> {
    let m = angles.len();
    if m < 3 {
        return Err(Error::BadParameter(format!("need at least 3 angles, got {m}")));
    }
    if let Some(a) = angles.iter().find(|a| !(**a > 0.0 && **a < 0.5)) {
        return Err(Error::BadParameter(format!("polygon angle {a} outside (0, 1/2)")));
    }
    let exterior: f64 = angles.iter().map(|a| 0.5 - a).sum();
    if (exterior - 1.0).abs() > ANGLE_TOLERANCE {
        return Err(Error::InfeasibleAngles(format!(
            "exterior angles sum to {exterior}, not 1"
        )));
    }

    // Edge i runs from corner i to corner i+1; it turns by the exterior
    // angle at corner i+1.
    let mut heading = 0.0;
    let mut directions = Vec::with_capacity(m);
    for (i, a) in angles.iter().enumerate() {
        if i > 0 {
            heading += 0.5 - a;
        }
        directions.push(heading);
    }
    let lengths = close_polygon(&directions)?;

    let mut pts = vec![[0.0, 0.0]];
    let mut p = [0.0, 0.0];
    for (theta, len) in directions.iter().zip(&lengths) {
        let (s, c) = (TAU * theta).sin_cos();
        p = [p[0] + len * c, p[1] + len * s];
        pts.push(p);
    }
    let closure_error = p[0].hypot(p[1]);
    pts.pop();

    let complex = EmbeddedComplex::from_triangles(&pts, &fan_triangles(m))?;
    let mut max_angle_error: f64 = 0.0;
    for (v, a) in angles.iter().enumerate() {
        max_angle_error = max_angle_error.max((angle_sum(&complex, v)? - a).abs());
    }
    if closure_error > ANGLE_TOLERANCE || max_angle_error > ANGLE_TOLERANCE {
        return Err(Error::ClosureFailure(format!(
            "closure error {closure_error:e}, angle error {max_angle_error:e}"
        )));
    }
    Ok(PrescribedPolygon {
        complex,
        lengths,
        closure_error,
        max_angle_error,
    })
}

/// Positive edge lengths `L` with `Σ L_i (cos, sin)(2π θ_i) = 0`.
///
/// First tries the all-ones vector projected onto the solution space; if that
/// leaves a short or negative edge, every `-d_i` is written as a nonnegative
/// combination of the two directions bracketing it, and those are summed.
fn close_polygon(directions: &[f64]) -> Result<Vec<f64>> {
    let d: Vec<[f64; 2]> = directions
        .iter()
        .map(|t| {
            let (s, c) = (TAU * t).sin_cos();
            [c, s]
        })
        .collect();

    let (mut g00, mut g01, mut g11, mut r0, mut r1) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for v in &d {
        g00 += v[0] * v[0];
        g01 += v[0] * v[1];
        g11 += v[1] * v[1];
        r0 += v[0];
        r1 += v[1];
    }
    let det = g00 * g11 - g01 * g01;
    if det.abs() > 1e-12 {
        let y0 = (g11 * r0 - g01 * r1) / det;
        let y1 = (g00 * r1 - g01 * r0) / det;
        let lengths: Vec<f64> = d.iter().map(|v| 1.0 - v[0] * y0 - v[1] * y1).collect();
        if lengths.iter().all(|&l| l > 1e-3) {
            return Ok(lengths);
        }
    }
    bracketing_closure(directions, &d)
}

fn bracketing_closure(directions: &[f64], d: &[[f64; 2]]) -> Result<Vec<f64>> {
    let mut lengths = vec![1.0; directions.len()];
    for (i, t) in directions.iter().enumerate() {
        let target = (t + 0.5).rem_euclid(1.0);
        let (j, k) = bracket(directions, target)
            .ok_or_else(|| Error::ClosureFailure("directions do not wrap around".into()))?;
        let (a, b) = nonnegative_combination(&d[j], &d[k], &[-d[i][0], -d[i][1]])
            .ok_or_else(|| Error::ClosureFailure(format!("cannot balance edge {i}")))?;
        lengths[j] += a;
        lengths[k] += b;
    }
    Ok(lengths)
}

/// Indices of consecutive directions (cyclically) whose arc contains `target`.
fn bracket(directions: &[f64], target: f64) -> Option<(usize, usize)> {
    let m = directions.len();
    (0..m).find_map(|j| {
        let k = (j + 1) % m;
        let start = directions[j].rem_euclid(1.0);
        let span = (directions[k] - directions[j]).rem_euclid(1.0);
        let offset = (target - start).rem_euclid(1.0);
        (span < 0.5 && offset <= span + 1e-15).then_some((j, k))
    })
}

fn nonnegative_combination(u: &[f64; 2], v: &[f64; 2], w: &[f64; 2]) -> Option<(f64, f64)> {
    let det = u[0] * v[1] - u[1] * v[0];
    if det.abs() < 1e-15 {
        // Parallel bracket: w points along u.
        let a = u[0] * w[0] + u[1] * w[1];
        return (a >= 0.0).then_some((a, 0.0));
    }
    let a = (w[0] * v[1] - w[1] * v[0]) / det;
    let b = (u[0] * w[1] - u[1] * w[0]) / det;
    (a >= -1e-12 && b >= -1e-12).then_some((a.max(0.0), b.max(0.0)))
}

/// Kite-shaped quadrilateral `e, a, b, c` (vertex 0 is `e`) with angle `beta`
/// at `e` and `(1 − beta)/3` at the other corners, fanned from `e`.
pub fn quadrilateral_with_angle(beta: f64) -> Result<EmbeddedComplex> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::BadParameter(format!("beta = {beta} outside (0, 1)")));
    }
    let gamma = (1.0 - beta) / 3.0;
    // Triangle e-a-b has angles beta/2 at e, gamma at a, gamma/2 at b, |eb| = 1.
    let ea = (PI * gamma).sin() / (TAU * gamma).sin();
    let (s, c) = (PI * beta).sin_cos();
    let pts = [[0.0, 0.0], [ea * c, ea * s], [1.0, 0.0], [ea * c, -ea * s]];
    EmbeddedComplex::from_triangles(&pts, &[[0, 1, 2], [0, 2, 3]])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_fans() {
        assert!(regular_polygon_fan(2).is_err());
        for n in 3..10 {
            let k = regular_polygon_fan(n).unwrap();
            assert_eq!(k.triangles().len(), n - 2);
            let corner = (n as f64 - 2.0) / (2.0 * n as f64);
            for v in 0..n {
                assert!((angle_sum(&k, v).unwrap() - corner).abs() < 1e-12);
            }
            assert!(k.classify().is_planar_fan());
        }
    }

    #[test]
    fn prescribed_rejects_bad_input() {
        assert!(matches!(
            prescribed_angle_polygon(&[0.2, 0.2, 0.2]),
            Err(Error::InfeasibleAngles(_))
        ));
        assert!(matches!(
            prescribed_angle_polygon(&[0.5, 0.25, 0.25]),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn bracketing_closure_balances() {
        let mut dirs = vec![0.0];
        dirs.extend((0..30).map(|i| 0.34 + 0.001 * i as f64));
        dirs.push(0.67);
        let d: Vec<[f64; 2]> = dirs.iter().map(|t| [(TAU * t).cos(), (TAU * t).sin()]).collect();
        let lengths = bracketing_closure(&dirs, &d).unwrap();
        assert!(lengths.iter().all(|&l| l > 0.0));
        let (x, y) = dirs.iter().zip(&lengths).fold((0.0, 0.0), |(x, y), (t, l)| {
            (x + l * (TAU * t).cos(), y + l * (TAU * t).sin())
        });
        assert!(x.hypot(y) < 1e-9);
    }

    #[test]
    fn quadrilateral_angles() {
        for beta in [0.25, 0.5, 0.7, 0.999, 0.01] {
            let k = quadrilateral_with_angle(beta).unwrap();
            let gamma = (1.0 - beta) / 3.0;
            assert!((angle_sum(&k, 0).unwrap() - beta).abs() < 1e-12);
            for v in 1..4 {
                assert!((angle_sum(&k, v).unwrap() - gamma).abs() < 1e-12);
            }
            assert!(k.classify().is_planar_fan());
        }
    }
}
