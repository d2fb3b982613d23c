//! Independent reference computations: law-of-cosines angles and brute-force
//! star and link counts, written without the library's geometry code.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::f64::consts::TAU;

use angle_defect::EmbeddedComplex;
use rand::Rng;

fn dist(p: &[f64], q: &[f64]) -> f64 {
    p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
}

/// Normalized angle at `p` of triangle `p q r`, by the law of cosines.
pub fn angle(p: &[f64], q: &[f64], r: &[f64]) -> f64 {
    let (a, b, c) = (dist(p, q), dist(p, r), dist(q, r));
    ((a * a + b * b - c * c) / (2.0 * a * b)).clamp(-1.0, 1.0).acos() / TAU
}

pub fn angle_sum(k: &EmbeddedComplex, v: usize) -> f64 {
    k.triangles()
        .iter()
        .filter(|t| t.contains(&v))
        .map(|t| {
            let others: Vec<usize> = t.iter().copied().filter(|&u| u != v).collect();
            angle(k.point(v), k.point(others[0]), k.point(others[1]))
        })
        .sum()
}

pub fn degree(k: &EmbeddedComplex, v: usize) -> usize {
    k.edges().iter().filter(|e| e.contains(&v)).count()
}

pub fn triangles_at(k: &EmbeddedComplex, v: usize) -> usize {
    k.triangles().iter().filter(|t| t.contains(&v)).count()
}

/// `(f0, f1)` of the link, by enumeration.
pub fn link_counts(k: &EmbeddedComplex, v: usize) -> (usize, usize) {
    let verts: BTreeSet<usize> = k
        .edges()
        .iter()
        .filter(|e| e.contains(&v))
        .map(|e| if e[0] == v { e[1] } else { e[0] })
        .collect();
    (verts.len(), triangles_at(k, v))
}

/// `(f0, f1, f2)` of the star, by enumeration.
pub fn star_counts(k: &EmbeddedComplex, v: usize) -> (usize, usize, usize) {
    let d = degree(k, v);
    let t = triangles_at(k, v);
    (1 + d, d + t, t)
}

pub fn euler(k: &EmbeddedComplex) -> i64 {
    k.num_vertices() as i64 - k.edges().len() as i64 + k.triangles().len() as i64
}

/// Alternating sum of exterior angles: 1 for the vertex, ½ per edge,
/// ½ − angle per triangle.
pub fn standard_curvature(k: &EmbeddedComplex, v: usize) -> f64 {
    let mut kappa = 1.0 - 0.5 * degree(k, v) as f64;
    for t in k.triangles().iter().filter(|t| t.contains(&v)) {
        let others: Vec<usize> = t.iter().copied().filter(|&u| u != v).collect();
        kappa += 0.5 - angle(k.point(v), k.point(others[0]), k.point(others[1]));
    }
    kappa
}

/// Sorted edge lengths of the star, divided by the longest.
pub fn star_length_profile(k: &EmbeddedComplex, v: usize) -> Vec<f64> {
    let mut lengths: Vec<f64> = k
        .edges()
        .iter()
        .filter(|e| {
            e.contains(&v)
                || k
                    .triangles()
                    .iter()
                    .any(|t| t.contains(&v) && t.contains(&e[0]) && t.contains(&e[1]))
        })
        .map(|e| dist(k.point(e[0]), k.point(e[1])))
        .collect();
    lengths.sort_by(f64::total_cmp);
    lengths
}

/// Checks a claimed vertex bijection between stars: every star edge maps to
/// an edge of equal length and every star triangle to a triangle.
pub fn verify_star_bijection(
    k: &EmbeddedComplex,
    v: usize,
    l: &EmbeddedComplex,
    w: usize,
    pairs: &[(usize, usize)],
    tol: f64,
) -> bool {
    let map = |u: usize| pairs.iter().find(|p| p.0 == u).map(|p| p.1);
    if map(v) != Some(w) {
        return false;
    }
    let star_tris: Vec<_> = k.triangles().iter().filter(|t| t.contains(&v)).collect();
    let star_tris_l = l.triangles().iter().filter(|t| t.contains(&w)).count();
    if star_tris.len() != star_tris_l || degree(k, v) != degree(l, w) {
        return false;
    }
    let mut edges = BTreeSet::new();
    for e in k.edges().iter().filter(|e| e.contains(&v)) {
        edges.insert((e[0], e[1]));
    }
    for t in &star_tris {
        let Some(img) = t.iter().map(|&u| map(u)).collect::<Option<Vec<_>>>() else {
            return false;
        };
        let mut img = img;
        img.sort_unstable();
        if !l.triangles().iter().any(|s| s[..] == img[..]) {
            return false;
        }
        edges.insert((t[0], t[1]));
        edges.insert((t[0], t[2]));
        edges.insert((t[1], t[2]));
    }
    edges.iter().all(|&(a, b)| {
        let (Some(x), Some(y)) = (map(a), map(b)) else {
            return false;
        };
        if l.edge_id(x, y).is_none() {
            return false;
        }
        let la = dist(k.point(a), k.point(b));
        let lb = dist(l.point(x), l.point(y));
        (la - lb).abs() <= tol * la.max(lb)
    })
}

/// Moves every coordinate by a uniform amount in `±amplitude`; `None` when
/// the result no longer validates.
pub fn jitter<R: Rng>(k: &EmbeddedComplex, rng: &mut R, amplitude: f64) -> Option<EmbeddedComplex> {
    let pts: Vec<Vec<f64>> = k
        .points()
        .map(|p| p.iter().map(|x| x + rng.gen_range(-amplitude..=amplitude)).collect())
        .collect();
    k.with_coordinates(&pts).ok()
}

pub fn min_edge(k: &EmbeddedComplex) -> f64 {
    k.edges()
        .iter()
        .map(|e| dist(k.point(e[0]), k.point(e[1])))
        .fold(f64::INFINITY, f64::min)
}
