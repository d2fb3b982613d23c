//! Simplicial isometries between complexes and between vertex stars, found
//! by exhaustive backtracking, plus common refinements of fan-like stars.

use serde::Serialize;

use crate::complex::{triangle, EmbeddedComplex, LinkShape};
use crate::error::{Error, Result};
use crate::geometry::{angle_at, angle_sum};
use crate::subdivision::{subdivide, SubdivisionScheme};
use crate::vector;

/// Edge lengths match when they agree to this relative precision.
pub const LENGTH_TOLERANCE: f64 = 1e-9;
/// Backtracking nodes explored before giving up.
pub const SEARCH_BUDGET: u64 = 10_000_000;
/// Angle sums within this count as equal for fan refinement.
pub const ANGLE_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsometryWitness {
    /// `(vertex of K, vertex of L)` pairs, sorted by the first entry.
    pub vertex_bijection: Vec<(usize, usize)>,
    pub preserves_simplices: bool,
    /// Largest relative edge length difference under the bijection.
    pub max_length_deviation: f64,
}

impl IsometryWitness {
    pub fn image(&self, v: usize) -> Option<usize> {
        self.vertex_bijection
            .binary_search_by_key(&v, |p| p.0)
            .ok()
            .map(|i| self.vertex_bijection[i].1)
    }
}

fn lengths_match(a: f64, b: f64) -> bool {
    (a - b).abs() <= LENGTH_TOLERANCE * a.max(b)
}

fn relative_deviation(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.max(b)
}

struct Signature {
    degree: usize,
    triangles: usize,
    lengths: Vec<f64>,
}

fn signatures(k: &EmbeddedComplex) -> Vec<Signature> {
    (0..k.num_vertices())
        .map(|v| {
            let mut lengths: Vec<f64> = k
                .neighbors(v)
                .map(|w| vector::distance(k.point(v), k.point(w)))
                .collect();
            lengths.sort_by(f64::total_cmp);
            Signature {
                degree: k.incident_edges(v).len(),
                triangles: k.incident_triangles(v).len(),
                lengths,
            }
        })
        .collect()
}

fn compatible(a: &Signature, b: &Signature) -> bool {
    a.degree == b.degree
        && a.triangles == b.triangles
        && a.lengths.iter().zip(&b.lengths).all(|(x, y)| lengths_match(*x, *y))
}

struct Search<'a> {
    k: &'a EmbeddedComplex,
    l: &'a EmbeddedComplex,
    candidates: Vec<Vec<usize>>,
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn consistent(&self, u: usize, x: usize) -> bool {
        let (k, l) = (self.k, self.l);
        for w in k.neighbors(u) {
            if let Some(y) = self.map[w] {
                let Some(_) = l.edge_id(x, y) else {
                    return false;
                };
                let a = vector::distance(k.point(u), k.point(w));
                let b = vector::distance(l.point(x), l.point(y));
                if !lengths_match(a, b) {
                    return false;
                }
            }
        }
        // Adjacency must be reflected: mapped neighbours of x come from
        // neighbours of u.
        let mapped_k = k.neighbors(u).filter(|&w| self.map[w].is_some()).count();
        let mapped_l = l.neighbors(x).filter(|&y| self.used[y]).count();
        if mapped_k != mapped_l {
            return false;
        }
        for &ti in k.incident_triangles(u) {
            let t = k.triangles()[ti];
            let [a, b] = crate::complex::opposite(&t, u);
            if let (Some(fa), Some(fb)) = (self.map[a], self.map[b]) {
                if l.triangle_id(&triangle(x, fa, fb)).is_none() {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let u = self.order[depth];
        for i in 0..self.candidates[u].len() {
            let x = self.candidates[u][i];
            if self.used[x] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            if !self.consistent(u, x) {
                continue;
            }
            self.map[u] = Some(x);
            self.used[x] = true;
            if self.run(depth + 1)? {
                return Ok(true);
            }
            self.map[u] = None;
            self.used[x] = false;
        }
        Ok(false)
    }
}

/// Breadth-first order, starting each component at its most constrained
/// vertex, so that every vertex after the first has a mapped neighbour.
fn search_order(k: &EmbeddedComplex, candidates: &[Vec<usize>], pinned: Option<usize>) -> Vec<usize> {
    let n = k.num_vertices();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (Some(v) != pinned, candidates[v].len()));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut i = order.len();
        order.push(s);
        while i < order.len() {
            let v = order[i];
            i += 1;
            let mut next: Vec<usize> = k.neighbors(v).filter(|&w| !seen[w]).collect();
            next.sort_by_key(|&w| candidates[w].len());
            for w in next {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order
}

fn search(
    k: &EmbeddedComplex,
    l: &EmbeddedComplex,
    pin: Option<(usize, usize)>,
    budget: u64,
) -> Result<Option<IsometryWitness>> {
    if k.f_vector() != l.f_vector() {
        return Ok(None);
    }
    let (sk, sl) = (signatures(k), signatures(l));
    let mut candidates: Vec<Vec<usize>> = sk
        .iter()
        .map(|a| (0..sl.len()).filter(|&x| compatible(a, &sl[x])).collect())
        .collect();
    if let Some((u, x)) = pin {
        if !candidates[u].contains(&x) {
            return Ok(None);
        }
        candidates[u] = vec![x];
    }
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let order = search_order(k, &candidates, pin.map(|p| p.0));
    let mut s = Search {
        k,
        l,
        candidates,
        order,
        map: vec![None; k.num_vertices()],
        used: vec![false; l.num_vertices()],
        nodes: 0,
        budget,
    };
    if !s.run(0)? {
        return Ok(None);
    }
    let map: Vec<usize> = s.map.into_iter().map(|x| x.expect("complete map")).collect();
    Ok(Some(witness(k, l, &map)))
}

fn witness(k: &EmbeddedComplex, l: &EmbeddedComplex, map: &[usize]) -> IsometryWitness {
    let mut max_length_deviation: f64 = 0.0;
    let mut preserves = true;
    for e in k.edges() {
        let (x, y) = (map[e[0]], map[e[1]]);
        if l.edge_id(x, y).is_none() {
            preserves = false;
            continue;
        }
        let a = vector::distance(k.point(e[0]), k.point(e[1]));
        let b = vector::distance(l.point(x), l.point(y));
        max_length_deviation = max_length_deviation.max(relative_deviation(a, b));
    }
    for t in k.triangles() {
        preserves &= l.triangle_id(&triangle(map[t[0]], map[t[1]], map[t[2]])).is_some();
    }
    IsometryWitness {
        vertex_bijection: map.iter().copied().enumerate().collect(),
        preserves_simplices: preserves,
        max_length_deviation,
    }
}

/// A length-preserving simplicial isomorphism `K → L`, if one exists.
pub fn find_isometry(k: &EmbeddedComplex, l: &EmbeddedComplex) -> Result<Option<IsometryWitness>> {
    search(k, l, None, SEARCH_BUDGET)
}

/// A simplicial isometry `star(v, K) → star(w, L)` taking `v` to `w`, with
/// the bijection expressed in the parent complexes' vertex indices.
pub fn find_star_isometry(
    k: &EmbeddedComplex,
    v: usize,
    l: &EmbeddedComplex,
    w: usize,
) -> Result<Option<IsometryWitness>> {
    find_star_isometry_with_budget(k, v, l, w, SEARCH_BUDGET)
}

pub fn find_star_isometry_with_budget(
    k: &EmbeddedComplex,
    v: usize,
    l: &EmbeddedComplex,
    w: usize,
    budget: u64,
) -> Result<Option<IsometryWitness>> {
    let (sk, ck, old_k) = k.star(v)?.to_complex()?;
    let (sl, cl, old_l) = l.star(w)?.to_complex()?;
    let found = search(&sk, &sl, Some((ck, cl)), budget)?;
    Ok(found.map(|mut wit| {
        for pair in &mut wit.vertex_bijection {
            *pair = (old_k[pair.0], old_l[pair.1]);
        }
        wit.vertex_bijection.sort_unstable();
        wit
    }))
}

/// Subdivisions `K'`, `L'` whose stars at `v` and `w` are isometric.
#[derive(Debug, Clone)]
pub struct CommonRefinement {
    pub k: EmbeddedComplex,
    pub l: EmbeddedComplex,
    pub witness: IsometryWitness,
}

fn arc_link(k: &EmbeddedComplex, v: usize) -> Result<Vec<usize>> {
    let link = k.link(v)?;
    match link.shape() {
        LinkShape::Arc => Ok(link.arc_order().expect("arc")),
        _ => Err(Error::UnsupportedLinkShape(v)),
    }
}

/// Whether stars with arc links at `v` and `w` admit isometric subdivisions:
/// exactly when their angle sums agree.
pub fn common_refinement_exists(k: &EmbeddedComplex, v: usize, l: &EmbeddedComplex, w: usize) -> Result<bool> {
    arc_link(k, v)?;
    arc_link(l, w)?;
    Ok((angle_sum(k, v)? - angle_sum(l, w)?).abs() <= ANGLE_SUM_TOLERANCE)
}

/// Cumulative angle at `v` where each link vertex sits, in arc order.
fn breakpoints(k: &EmbeddedComplex, v: usize, arc: &[usize]) -> Vec<f64> {
    let mut acc = 0.0;
    let mut out = vec![0.0];
    for pair in arc.windows(2) {
        let t = triangle(v, pair[0], pair[1]);
        acc += angle_at(k, v, &t);
        out.push(acc);
    }
    out
}

/// Rays closer than this (in turns) are treated as one.
const CUT_MERGE: f64 = 1e-12;

/// Splits every star triangle at the rays through `cuts` (cumulative angles),
/// then cuts every ray from `v` at distance `radius`. Returns the refined
/// complex.
fn refine_fan(k: &EmbeddedComplex, v: usize, cuts: &[f64], radius: f64) -> Result<EmbeddedComplex> {
    let arc = arc_link(k, v)?;
    let marks = breakpoints(k, v, &arc);
    let mut out = k.clone();
    let mut rays = vec![arc[0]];
    for (i, pair) in arc.windows(2).enumerate() {
        let (a, b) = (pair[0], pair[1]);
        let t = triangle(v, a, b);
        let beta = angle_at(k, a, &t);
        let va = vector::distance(k.point(v), k.point(a));
        let ab = vector::distance(k.point(a), k.point(b));
        let mut last = a;
        let inside = |c: f64| c > marks[i] + CUT_MERGE && c < marks[i + 1] - CUT_MERGE;
        for &c in cuts.iter().filter(|&&c| inside(c)) {
            let theta = (c - marks[i]) * std::f64::consts::TAU;
            let along = va * theta.sin() / (theta + beta * std::f64::consts::TAU).sin();
            let point = vector::lerp(k.point(a), k.point(b), along / ab);
            let n = out.num_vertices();
            out = subdivide(&out, &SubdivisionScheme::SplitEdge { edge: crate::complex::edge(last, b), point })?;
            rays.push(n);
            last = n;
        }
        rays.push(b);
    }
    for r in rays {
        let pv = out.point(v).to_vec();
        let dir = vector::sub(out.point(r), &pv);
        let point = vector::add_scaled(&pv, &dir, radius / vector::norm(&dir));
        out = subdivide(&out, &SubdivisionScheme::SplitEdge { edge: crate::complex::edge(v, r), point })?;
    }
    Ok(out)
}

/// Builds the subdivisions the preliminary observation promises for stars
/// whose links are arcs: rays at every angle where either fan has an edge,
/// then every ray cut at a common radius. `None` when the angle sums differ.
pub fn common_refinement(
    k: &EmbeddedComplex,
    v: usize,
    l: &EmbeddedComplex,
    w: usize,
) -> Result<Option<CommonRefinement>> {
    if !common_refinement_exists(k, v, l, w)? {
        return Ok(None);
    }
    let (arc_k, arc_l) = (arc_link(k, v)?, arc_link(l, w)?);
    let (bk, bl) = (breakpoints(k, v, &arc_k), breakpoints(l, w, &arc_l));
    let mut cuts: Vec<f64> = bk.iter().chain(&bl).copied().collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() <= CUT_MERGE);

    let reach = |c: &EmbeddedComplex, center: usize, arc: &[usize]| {
        arc.windows(2)
            .map(|p| segment_distance(c.point(center), c.point(p[0]), c.point(p[1])))
            .fold(f64::INFINITY, f64::min)
    };
    let radius = 0.5 * reach(k, v, &arc_k).min(reach(l, w, &arc_l));

    let k2 = refine_fan(k, v, &cuts, radius)?;
    let l2 = refine_fan(l, w, &cuts, radius)?;
    let witness = find_star_isometry(&k2, v, &l2, w)?;
    Ok(witness.map(|witness| CommonRefinement { k: k2, l: l2, witness }))
}

fn segment_distance(p: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let ab = vector::sub(b, a);
    let t = (vector::dot(&vector::sub(p, a), &ab) / vector::dot(&ab, &ab)).clamp(0.0, 1.0);
    vector::distance(p, &vector::add_scaled(a, &ab, t))
}
