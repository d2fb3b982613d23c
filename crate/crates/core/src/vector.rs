//! Small dense-vector helpers on coordinate slices of any length.

use std::f64::consts::TAU;

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_scaled(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + t * y).collect()
}

pub fn lerp(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Norm of the bivector `a ∧ b`, i.e. `|a||b| sin θ`, via the Lagrange identity.
pub fn wedge_norm(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len();
    let mut acc = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let m = a[i] * b[j] - a[j] * b[i];
            acc += m * m;
        }
    }
    acc.sqrt()
}

/// Unsigned angle between two nonzero vectors, normalized so a full turn is 1.
pub fn angle_between(a: &[f64], b: &[f64]) -> f64 {
    wedge_norm(a, b).atan2(dot(a, b)) / TAU
}

pub fn triangle_area(p: &[f64], q: &[f64], r: &[f64]) -> f64 {
    0.5 * wedge_norm(&sub(q, p), &sub(r, p))
}

pub fn centroid<'a>(points: impl IntoIterator<Item = &'a [f64]>) -> Vec<f64> {
    let mut acc: Vec<f64> = Vec::new();
    let mut count = 0usize;
    for p in points {
        if acc.is_empty() {
            acc = vec![0.0; p.len()];
        }
        for (a, x) in acc.iter_mut().zip(p) {
            *a += x;
        }
        count += 1;
    }
    if count > 0 {
        for a in &mut acc {
            *a /= count as f64;
        }
    }
    acc
}

pub fn cross3(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Pads or keeps a point as a 3-vector (2D points get `z = 0`).
pub fn lift3(p: &[f64]) -> [f64; 3] {
    [
        p.first().copied().unwrap_or(0.0),
        p.get(1).copied().unwrap_or(0.0),
        p.get(2).copied().unwrap_or(0.0),
    ]
}
