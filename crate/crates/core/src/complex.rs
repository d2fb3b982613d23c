//! Embedded 2-dimensional simplicial complexes.
//!
//! An [`EmbeddedComplex`] is immutable once built. Every coordinate row is a
//! vertex; edges and triangles are stored as sorted index tuples. Validation
//! covers index ranges, face closure, and per-simplex non-degeneracy. Global
//! embedding (pairwise non-intersection of simplices) is not checked.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector;

pub type Edge = [usize; 2];
pub type Triangle = [usize; 3];

/// A triangle is degenerate when its area is below this fraction of the
/// squared length of its longest edge.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

/// A simplex of dimension 0, 1 or 2 with sorted vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Simplex {
    Vertex(usize),
    Edge(Edge),
    Triangle(Triangle),
}

impl Simplex {
    /// Parses an unsorted index tuple. Repeated indices are degenerate.
    pub fn from_slice(indices: &[usize]) -> Result<Self> {
        let mut s = indices.to_vec();
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DegenerateSimplex(indices.to_vec()));
        }
        match s.len() {
            0 => Err(Error::EmptySimplex),
            1 => Ok(Simplex::Vertex(s[0])),
            2 => Ok(Simplex::Edge([s[0], s[1]])),
            3 => Ok(Simplex::Triangle([s[0], s[1], s[2]])),
            _ => Err(Error::SimplexTooLarge(indices.to_vec())),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        match self {
            Simplex::Vertex(v) => std::slice::from_ref(v),
            Simplex::Edge(e) => e,
            Simplex::Triangle(t) => t,
        }
    }

    pub fn dim(&self) -> usize {
        self.vertices().len() - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices().contains(&v)
    }
}

pub(crate) fn edge(a: usize, b: usize) -> Edge {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

pub(crate) fn triangle(a: usize, b: usize, c: usize) -> Triangle {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

pub(crate) fn triangle_edges(t: &Triangle) -> [Edge; 3] {
    [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]]
}

/// The two vertices of `t` other than `v`.
pub(crate) fn opposite(t: &Triangle, v: usize) -> Edge {
    match t.iter().position(|&x| x == v) {
        Some(0) => [t[1], t[2]],
        Some(1) => [t[0], t[2]],
        _ => [t[0], t[1]],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FVector {
    pub f0: usize,
    pub f1: usize,
    pub f2: usize,
}

impl FVector {
    pub fn new(f0: usize, f1: usize, f2: usize) -> Self {
        FVector { f0, f1, f2 }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f0 as i64 - self.f1 as i64 + self.f2 as i64
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BuildOptions {
    /// Insert missing edges of listed triangles instead of rejecting them.
    pub auto_close_faces: bool,
}

impl BuildOptions {
    pub fn closed() -> Self {
        BuildOptions {
            auto_close_faces: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedComplex {
    dim: usize,
    coords: Vec<f64>,
    edges: Vec<Edge>,
    triangles: Vec<Triangle>,
    edge_index: HashMap<Edge, usize>,
    triangle_index: HashMap<Triangle, usize>,
    vertex_edges: Vec<Vec<usize>>,
    vertex_triangles: Vec<Vec<usize>>,
    edge_triangles: Vec<Vec<usize>>,
}

impl EmbeddedComplex {
    /// Validates and builds a complex from coordinate rows and index tuples
    /// of size 1, 2 or 3.
    pub fn build<P, S>(vertices: &[P], simplices: &[S], options: BuildOptions) -> Result<Self>
    where
        P: AsRef<[f64]>,
        S: AsRef<[usize]>,
    {
        let (dim, coords) = flatten(vertices)?;
        let n = vertices.len();
        let mut seen = BTreeSet::new();
        let mut edges = BTreeSet::new();
        let mut triangles = BTreeSet::new();
        for raw in simplices {
            let raw = raw.as_ref();
            if let Some(&bad) = raw.iter().find(|&&i| i >= n) {
                return Err(Error::IndexOutOfRange { index: bad, len: n });
            }
            let s = Simplex::from_slice(raw)?;
            if !seen.insert(s) {
                return Err(Error::DuplicateSimplex(s.vertices().to_vec()));
            }
            match s {
                Simplex::Vertex(_) => {}
                Simplex::Edge(e) => {
                    edges.insert(e);
                }
                Simplex::Triangle(t) => {
                    triangles.insert(t);
                }
            }
        }
        for t in &triangles {
            for e in triangle_edges(t) {
                if !edges.contains(&e) {
                    if options.auto_close_faces {
                        edges.insert(e);
                    } else {
                        return Err(Error::DanglingFace {
                            face: e.to_vec(),
                            of: t.to_vec(),
                        });
                    }
                }
            }
        }
        Self::assemble(dim, coords, edges, triangles)
    }

    /// Builds a complex from triangles (and their faces) only.
    pub fn from_triangles<P: AsRef<[f64]>>(vertices: &[P], triangles: &[Triangle]) -> Result<Self> {
        Self::build(vertices, triangles, BuildOptions::closed())
    }

    /// Validates geometry of an already face-closed simplex set and builds
    /// the incidence tables.
    pub(crate) fn assemble(
        dim: usize,
        coords: Vec<f64>,
        edges: BTreeSet<Edge>,
        triangles: BTreeSet<Triangle>,
    ) -> Result<Self> {
        let n = coords.len() / dim;
        let point = |v: usize| &coords[v * dim..(v + 1) * dim];
        for e in &edges {
            if e[1] >= n {
                return Err(Error::IndexOutOfRange { index: e[1], len: n });
            }
            let len = vector::distance(point(e[0]), point(e[1]));
            if !(len > 0.0) {
                return Err(Error::DegenerateSimplex(e.to_vec()));
            }
        }
        for t in &triangles {
            if t[2] >= n {
                return Err(Error::IndexOutOfRange { index: t[2], len: n });
            }
            let (p, q, r) = (point(t[0]), point(t[1]), point(t[2]));
            let longest = vector::distance(p, q)
                .max(vector::distance(p, r))
                .max(vector::distance(q, r));
            let area = vector::triangle_area(p, q, r);
            if !(area >= DEGENERACY_TOLERANCE * longest * longest) || longest == 0.0 {
                return Err(Error::DegenerateSimplex(t.to_vec()));
            }
        }

        let edges: Vec<Edge> = edges.into_iter().collect();
        let triangles: Vec<Triangle> = triangles.into_iter().collect();
        let edge_index: HashMap<Edge, usize> =
            edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let triangle_index: HashMap<Triangle, usize> =
            triangles.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let mut vertex_edges = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            vertex_edges[e[0]].push(i);
            vertex_edges[e[1]].push(i);
        }
        let mut vertex_triangles = vec![Vec::new(); n];
        let mut edge_triangles = vec![Vec::new(); edges.len()];
        for (i, t) in triangles.iter().enumerate() {
            for &v in t {
                vertex_triangles[v].push(i);
            }
            for e in triangle_edges(t) {
                match edge_index.get(&e) {
                    Some(&ei) => edge_triangles[ei].push(i),
                    None => {
                        return Err(Error::DanglingFace {
                            face: e.to_vec(),
                            of: t.to_vec(),
                        })
                    }
                }
            }
        }
        Ok(EmbeddedComplex {
            dim,
            coords,
            edges,
            triangles,
            edge_index,
            triangle_index,
            vertex_edges,
            vertex_triangles,
            edge_triangles,
        })
    }

    /// Same abstract complex, new coordinates (re-validated).
    pub fn with_coordinates<P: AsRef<[f64]>>(&self, vertices: &[P]) -> Result<Self> {
        if vertices.len() != self.num_vertices() {
            return Err(Error::BadParameter(format!(
                "expected {} coordinate rows, got {}",
                self.num_vertices(),
                vertices.len()
            )));
        }
        let (dim, coords) = flatten(vertices)?;
        Self::assemble(
            dim,
            coords,
            self.edges.iter().copied().collect(),
            self.triangles.iter().copied().collect(),
        )
    }

    /// Applies `f` to every vertex position.
    pub fn map_coordinates(&self, mut f: impl FnMut(usize, &[f64]) -> Vec<f64>) -> Result<Self> {
        let pts: Vec<Vec<f64>> = (0..self.num_vertices())
            .map(|v| f(v, self.point(v)))
            .collect();
        self.with_coordinates(&pts)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.num_vertices();
        let mut check = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut check[p], true)) {
            return Err(Error::BadParameter("relabeling is not a permutation".into()));
        }
        let mut coords = vec![0.0; self.coords.len()];
        for v in 0..n {
            coords[perm[v] * self.dim..(perm[v] + 1) * self.dim].copy_from_slice(self.point(v));
        }
        let edges = self.edges.iter().map(|e| edge(perm[e[0]], perm[e[1]])).collect();
        let triangles = self
            .triangles
            .iter()
            .map(|t| triangle(perm[t[0]], perm[t[1]], perm[t[2]]))
            .collect();
        Self::assemble(self.dim, coords, edges, triangles)
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    /// Both complexes are lifted to the larger ambient dimension.
    pub fn disjoint_union(&self, other: &EmbeddedComplex) -> Result<Self> {
        let dim = self.dim.max(other.dim);
        let pad = |p: &[f64]| {
            let mut q = p.to_vec();
            q.resize(dim, 0.0);
            q
        };
        let mut pts: Vec<Vec<f64>> = (0..self.num_vertices()).map(|v| pad(self.point(v))).collect();
        pts.extend((0..other.num_vertices()).map(|v| pad(other.point(v))));
        let off = self.num_vertices();
        let mut simplices: Vec<Vec<usize>> = self.edges.iter().map(|e| e.to_vec()).collect();
        simplices.extend(self.triangles.iter().map(|t| t.to_vec()));
        simplices.extend(other.edges.iter().map(|e| vec![e[0] + off, e[1] + off]));
        simplices.extend(
            other
                .triangles
                .iter()
                .map(|t| vec![t[0] + off, t[1] + off, t[2] + off]),
        );
        Self::build(&pts, &simplices, BuildOptions::default())
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn point(&self, v: usize) -> &[f64] {
        &self.coords[v * self.dim..(v + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks(self.dim)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    /// All simplices, vertices first, then edges, then triangles.
    pub fn simplices(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.num_vertices())
            .map(Simplex::Vertex)
            .chain(self.edges.iter().map(|&e| Simplex::Edge(e)))
            .chain(self.triangles.iter().map(|&t| Simplex::Triangle(t)))
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        match s {
            Simplex::Vertex(v) => *v < self.num_vertices(),
            Simplex::Edge(e) => self.edge_index.contains_key(e),
            Simplex::Triangle(t) => self.triangle_index.contains_key(t),
        }
    }

    pub fn f_vector(&self) -> FVector {
        FVector::new(self.num_vertices(), self.edges.len(), self.triangles.len())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.num_vertices() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&edge(a, b)).copied()
    }

    pub fn triangle_id(&self, t: &Triangle) -> Option<usize> {
        self.triangle_index.get(&triangle(t[0], t[1], t[2])).copied()
    }

    /// Indices (into [`edges`](Self::edges)) of the edges containing `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    /// Indices (into [`triangles`](Self::triangles)) of the triangles containing `v`.
    pub fn incident_triangles(&self, v: usize) -> &[usize] {
        &self.vertex_triangles[v]
    }

    /// Indices of the triangles containing edge number `e`.
    pub fn edge_cofaces(&self, e: usize) -> &[usize] {
        &self.edge_triangles[e]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.vertex_edges[v].iter().map(move |&i| {
            let e = self.edges[i];
            if e[0] == v {
                e[1]
            } else {
                e[0]
            }
        })
    }

    /// Number of triangles containing the edge `⟨v, w⟩`.
    pub fn edge_order(&self, v: usize, w: usize) -> Result<usize> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        self.edge_id(v, w)
            .map(|e| self.edge_triangles[e].len())
            .ok_or(Error::NoSuchEdge(v, w))
    }

    /// Number of edges containing `v`.
    pub fn vertex_order(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.vertex_edges[v].len())
    }

    pub fn star(&self, v: usize) -> Result<StarView<'_>> {
        self.check_vertex(v)?;
        let mut vertices: Vec<usize> = std::iter::once(v).chain(self.neighbors(v)).collect();
        vertices.sort_unstable();
        let mut edges: Vec<Edge> = self.vertex_edges[v].iter().map(|&i| self.edges[i]).collect();
        let triangles: Vec<Triangle> = self.vertex_triangles[v]
            .iter()
            .map(|&i| self.triangles[i])
            .collect();
        edges.extend(triangles.iter().map(|t| opposite(t, v)));
        edges.sort_unstable();
        Ok(StarView {
            parent: self,
            center: v,
            simplices: SimplexSet {
                vertices,
                edges,
                triangles,
            },
        })
    }

    pub fn link(&self, v: usize) -> Result<LinkView<'_>> {
        self.check_vertex(v)?;
        let mut vertices: Vec<usize> = self.neighbors(v).collect();
        vertices.sort_unstable();
        let mut edges: Vec<Edge> = self.vertex_triangles[v]
            .iter()
            .map(|&i| opposite(&self.triangles[i], v))
            .collect();
        edges.sort_unstable();
        Ok(LinkView {
            parent: self,
            center: v,
            simplices: SimplexSet {
                vertices,
                edges,
                triangles: Vec::new(),
            },
        })
    }

    /// Extracts a subcomplex as a standalone complex. Returns the new complex
    /// and, for each new vertex index, the original index.
    pub fn extract(&self, set: &SimplexSet) -> Result<(EmbeddedComplex, Vec<usize>)> {
        let old_of_new = set.vertices.clone();
        let new_of_old: HashMap<usize, usize> =
            old_of_new.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let map = |v: &usize| new_of_old.get(v).copied().ok_or(Error::UnknownVertex(*v));
        let mut coords = Vec::with_capacity(old_of_new.len() * self.dim);
        for &v in &old_of_new {
            coords.extend_from_slice(self.point(v));
        }
        let edges = set
            .edges
            .iter()
            .map(|e| Ok(edge(map(&e[0])?, map(&e[1])?)))
            .collect::<Result<BTreeSet<_>>>()?;
        let triangles = set
            .triangles
            .iter()
            .map(|t| Ok(triangle(map(&t[0])?, map(&t[1])?, map(&t[2])?)))
            .collect::<Result<BTreeSet<_>>>()?;
        let k = Self::assemble(self.dim.max(1), coords, edges, triangles)?;
        Ok((k, old_of_new))
    }

    /// Connected components, as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// True if all vertices lie in a common affine plane (relative tolerance 1e-9).
    pub fn is_planar(&self) -> bool {
        if self.dim <= 2 {
            return true;
        }
        let pts: Vec<&[f64]> = self.points().collect();
        affinely_planar(&pts, 1e-9)
    }

    pub fn classify(&self) -> ComplexClass {
        crate::classify::classify(self)
    }

    pub fn is_surface(&self) -> bool {
        crate::classify::is_surface(self)
    }
}

fn flatten<P: AsRef<[f64]>>(vertices: &[P]) -> Result<(usize, Vec<f64>)> {
    let Some(first) = vertices.first() else {
        return Err(Error::BadParameter("complex has no vertices".into()));
    };
    let dim = first.as_ref().len();
    if dim == 0 {
        return Err(Error::DimensionMismatch {
            vertex: 0,
            expected: 1,
            got: 0,
        });
    }
    let mut coords = Vec::with_capacity(dim * vertices.len());
    for (i, p) in vertices.iter().enumerate() {
        let p = p.as_ref();
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                vertex: i,
                expected: dim,
                got: p.len(),
            });
        }
        if p.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFiniteCoordinate(i));
        }
        coords.extend_from_slice(p);
    }
    Ok((dim, coords))
}

/// Whether `points` lie in one affine plane, with tolerance relative to their
/// diameter.
pub(crate) fn affinely_planar(points: &[&[f64]], rel_tol: f64) -> bool {
    let Some(&p0) = points.first() else {
        return true;
    };
    let far = points
        .iter()
        .max_by(|a, b| {
            vector::distance(a, p0)
                .partial_cmp(&vector::distance(b, p0))
                .unwrap()
        })
        .unwrap();
    let scale = vector::distance(far, p0);
    if scale == 0.0 {
        return true;
    }
    let u: Vec<f64> = vector::sub(far, p0).iter().map(|x| x / scale).collect();
    // Gram-Schmidt: pick the point farthest from the line p0 + t u.
    let perp = |p: &[f64]| {
        let d = vector::sub(p, p0);
        let t = vector::dot(&d, &u);
        vector::add_scaled(&d, &u, -t)
    };
    let (best, best_norm) = points
        .iter()
        .map(|p| {
            let w = perp(p);
            let n = vector::norm(&w);
            (w, n)
        })
        .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .unwrap();
    if best_norm <= rel_tol * scale {
        return true;
    }
    let w: Vec<f64> = best.iter().map(|x| x / best_norm).collect();
    points.iter().all(|p| {
        let r = perp(p);
        let r = vector::add_scaled(&r, &w, -vector::dot(&r, &w));
        vector::norm(&r) <= rel_tol * scale
    })
}

/// A set of simplices referring to a parent complex's vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplexSet {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
    pub triangles: Vec<Triangle>,
}

impl SimplexSet {
    pub fn f_vector(&self) -> FVector {
        FVector::new(self.vertices.len(), self.edges.len(), self.triangles.len())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        match s {
            Simplex::Vertex(v) => self.vertices.binary_search(v).is_ok(),
            Simplex::Edge(e) => self.edges.binary_search(e).is_ok(),
            Simplex::Triangle(t) => self.triangles.binary_search(t).is_ok(),
        }
    }
}

/// The closed star of a vertex: every simplex containing it, plus faces.
#[derive(Debug, Clone)]
pub struct StarView<'a> {
    parent: &'a EmbeddedComplex,
    center: usize,
    simplices: SimplexSet,
}

impl<'a> StarView<'a> {
    pub fn parent(&self) -> &'a EmbeddedComplex {
        self.parent
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn simplices(&self) -> &SimplexSet {
        &self.simplices
    }

    pub fn f_vector(&self) -> FVector {
        self.simplices.f_vector()
    }

    /// The star as a standalone complex, with the index of the center in it
    /// and the original index of each of its vertices.
    pub fn to_complex(&self) -> Result<(EmbeddedComplex, usize, Vec<usize>)> {
        let (k, old) = self.parent.extract(&self.simplices)?;
        let c = old.binary_search(&self.center).expect("center is in its star");
        Ok((k, c, old))
    }
}

/// Shape of a vertex link, viewed as a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkShape {
    Empty,
    /// A single polygonal circle.
    Circle,
    /// A single polygonal arc with at least one edge.
    Arc,
    Other,
}

/// The link of a vertex: faces of star simplices that miss the center.
#[derive(Debug, Clone)]
pub struct LinkView<'a> {
    parent: &'a EmbeddedComplex,
    center: usize,
    simplices: SimplexSet,
}

impl<'a> LinkView<'a> {
    pub fn parent(&self) -> &'a EmbeddedComplex {
        self.parent
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn simplices(&self) -> &SimplexSet {
        &self.simplices
    }

    pub fn f_vector(&self) -> FVector {
        self.simplices.f_vector()
    }

    fn degree_map(&self) -> HashMap<usize, usize> {
        let mut deg: HashMap<usize, usize> =
            self.simplices.vertices.iter().map(|&v| (v, 0)).collect();
        for e in &self.simplices.edges {
            *deg.get_mut(&e[0]).unwrap() += 1;
            *deg.get_mut(&e[1]).unwrap() += 1;
        }
        deg
    }

    fn is_connected(&self) -> bool {
        let verts = &self.simplices.vertices;
        if verts.is_empty() {
            return true;
        }
        let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
        for e in &self.simplices.edges {
            adj.entry(e[0]).or_default().push(e[1]);
            adj.entry(e[1]).or_default().push(e[0]);
        }
        let mut seen = std::collections::HashSet::from([verts[0]]);
        let mut stack = vec![verts[0]];
        while let Some(v) = stack.pop() {
            for &w in adj.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == verts.len()
    }

    pub fn shape(&self) -> LinkShape {
        let f = self.f_vector();
        if f.f0 == 0 {
            return LinkShape::Empty;
        }
        if !self.is_connected() {
            return LinkShape::Other;
        }
        let deg = self.degree_map();
        let ones = deg.values().filter(|&&d| d == 1).count();
        let twos = deg.values().filter(|&&d| d == 2).count();
        if f.f0 >= 3 && f.f0 == f.f1 && twos == f.f0 {
            LinkShape::Circle
        } else if f.f1 >= 1 && f.f1 + 1 == f.f0 && ones == 2 && ones + twos == f.f0 {
            LinkShape::Arc
        } else {
            LinkShape::Other
        }
    }

    /// Link vertices in path order, when the link is an arc.
    pub fn arc_order(&self) -> Option<Vec<usize>> {
        if self.shape() != LinkShape::Arc {
            return None;
        }
        let deg = self.degree_map();
        let start = *self
            .simplices
            .vertices
            .iter()
            .find(|v| deg[v] == 1)
            .unwrap();
        let mut order = vec![start];
        let mut used = vec![false; self.simplices.edges.len()];
        let mut cur = start;
        while order.len() < self.simplices.vertices.len() {
            let (i, e) = self
                .simplices
                .edges
                .iter()
                .enumerate()
                .find(|(i, e)| !used[*i] && e.contains(&cur))?;
            used[i] = true;
            cur = if e[0] == cur { e[1] } else { e[0] };
            order.push(cur);
        }
        Some(order)
    }
}

/// Classification flags. Every flag is derived from the simplex set except
/// planarity, which consults coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexClass {
    pub is_surface: bool,
    pub is_pseudomanifold: bool,
    /// Some vertex whose star is the whole complex.
    pub cone_apex: Option<usize>,
    /// Cone apex of a planar fan.
    pub planar_fan_apex: Option<usize>,
    pub flap: Option<FlapInfo>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlapInfo {
    pub n: usize,
    pub ends: (usize, usize),
}

impl ComplexClass {
    pub fn is_cone(&self) -> bool {
        self.cone_apex.is_some()
    }

    pub fn is_planar_fan(&self) -> bool {
        self.planar_fan_apex.is_some()
    }

    pub fn is_n_flap(&self, n: usize) -> bool {
        self.flap.is_some_and(|f| f.n == n)
    }
}
