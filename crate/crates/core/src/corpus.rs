//! Named test complexes: closed surfaces, and non-manifold complexes such as
//! flaps, wedges and unions.

use crate::complex::{BuildOptions, EmbeddedComplex};
use crate::error::Result;
use crate::generators::{
    bipyramid, csaszar_torus, flap_from_pages, icosahedron, n_flap, octahedron,
    prescribed_angle_polygon, pyramid, quadrilateral_with_angle, regular_polygon, regular_polygon_fan,
    regular_tetrahedron, spiral_bipyramid, FlapPage,
};
use crate::subdivision::{subdivide, SubdivisionScheme};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub complex: EmbeddedComplex,
}

impl CorpusEntry {
    pub fn new(id: impl Into<String>, complex: EmbeddedComplex) -> Self {
        CorpusEntry {
            id: id.into(),
            complex,
        }
    }
}

/// Spiral targets included in [`surfaces`].
pub const SPIRAL_OMEGAS: [f64; 3] = [0.5, 1.0, 2.5];

/// Closed surfaces: Platonic solids, a square pyramid, bipyramids over
/// 3- to 12-gons, spiral bipyramids, the seven-vertex torus and a
/// subdivided tetrahedron.
pub fn surfaces() -> Result<Vec<CorpusEntry>> {
    let mut out = vec![
        CorpusEntry::new("tetrahedron", regular_tetrahedron()),
        CorpusEntry::new("octahedron", octahedron()),
        CorpusEntry::new("icosahedron", icosahedron()),
        CorpusEntry::new(
            "square-pyramid",
            pyramid(&regular_polygon_fan(4)?, [0.1, -0.05, 0.8])?,
        ),
    ];
    for m in 3..=12 {
        // Off-axis apices so the two halves are not mirror images.
        let k = bipyramid(&regular_polygon(m), [0.05, 0.1, 0.9], [-0.1, 0.02, -0.6])?;
        out.push(CorpusEntry::new(format!("bipyramid-{m}"), k));
    }
    for omega in SPIRAL_OMEGAS {
        let s = spiral_bipyramid(omega, 3, 0.4)?;
        out.push(CorpusEntry::new(format!("spiral-{omega}"), s.complex));
    }
    out.push(CorpusEntry::new("csaszar-torus", csaszar_torus()));
    let t = regular_tetrahedron();
    let split = subdivide(&t, &SubdivisionScheme::face_at(&t, t.triangles()[0], [1.0, 1.0, 1.0])?)?;
    out.push(CorpusEntry::new("tetrahedron-face-split", split));
    Ok(out)
}

/// Triangles `(0, 1, 2)` and `(0, 3, 4)` meeting only at vertex 0, in
/// different planes.
pub fn wedge_of_triangles() -> EmbeddedComplex {
    let pts = [
        [0.0, 0.0, 0.0],
        [1.0, 0.0, 0.0],
        [0.3, 1.0, 0.0],
        [-1.0, 0.2, 0.4],
        [-0.4, -0.3, 1.0],
    ];
    EmbeddedComplex::from_triangles(&pts, &[[0, 1, 2], [0, 3, 4]]).expect("wedge")
}

fn wedge_of_three() -> EmbeddedComplex {
    let pts = [
        [0.0, 0.0, 0.0],
        [1.0, 0.0, 0.0],
        [0.8, 0.7, 0.0],
        [-1.0, 0.2, 0.4],
        [-0.4, -0.3, 1.0],
        [0.1, -1.0, -0.5],
        [0.6, -0.9, -1.0],
    ];
    EmbeddedComplex::from_triangles(&pts, &[[0, 1, 2], [0, 3, 4], [0, 5, 6]]).expect("wedge")
}

/// A planar fan with an edge sticking out of the plane at its apex.
fn fan_with_dangling_edge() -> Result<EmbeddedComplex> {
    let fan = regular_polygon_fan(5)?;
    let mut pts: Vec<Vec<f64>> = fan.points().map(|p| vec![p[0], p[1], 0.0]).collect();
    pts.push(vec![1.2, 0.3, 1.0]);
    let mut simplices: Vec<Vec<usize>> = fan.triangles().iter().map(|t| t.to_vec()).collect();
    simplices.push(vec![0, 5]);
    EmbeddedComplex::build(&pts, &simplices, BuildOptions::closed())
}

/// Two tetrahedra sharing one vertex.
fn pinched_tetrahedra() -> Result<EmbeddedComplex> {
    let a = regular_tetrahedron();
    let b = a.map_coordinates(|_, p| vec![2.0 - p[0], 2.0 - p[1], 2.0 - p[2]])?;
    // Vertex 0 of both sits at (1, 1, 1); glue them there.
    let mut pts: Vec<Vec<f64>> = a.points().map(<[f64]>::to_vec).collect();
    pts.extend(b.points().skip(1).map(<[f64]>::to_vec));
    let shift = |v: usize| if v == 0 { 0 } else { v + 3 };
    let mut tris: Vec<[usize; 3]> = a.triangles().to_vec();
    tris.extend(b.triangles().iter().map(|t| t.map(shift)));
    EmbeddedComplex::from_triangles(&pts, &tris)
}

fn isolated_vertex() -> EmbeddedComplex {
    EmbeddedComplex::build(&[[0.0, 0.0, 0.0]], &[[0usize]], BuildOptions::default()).expect("point")
}

/// Flaps, books, wedges, planar fans, a fan with a dangling edge, a pinched
/// pair of tetrahedra and disjoint unions.
pub fn nonmanifold() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for n in 0..=6 {
        let angles: Vec<f64> = (0..n).map(|i| 0.08 + 0.045 * i as f64).collect();
        out.push(CorpusEntry::new(format!("flap-{n}"), n_flap(n, &angles)?));
    }
    let pages = [
        FlapPage { angle: 0.3, length: 0.6 },
        FlapPage { angle: 0.12, length: 2.0 },
        FlapPage { angle: 0.2, length: 1.1 },
        FlapPage { angle: 0.41, length: 0.9 },
    ];
    out.push(CorpusEntry::new("book-4", flap_from_pages(1.3, &pages, &[0.0, 0.2, 0.45, 0.7])?));
    out.push(CorpusEntry::new("wedge-2", wedge_of_triangles()));
    out.push(CorpusEntry::new("wedge-3", wedge_of_three()));
    out.push(CorpusEntry::new("fan-5", regular_polygon_fan(5)?));
    out.push(CorpusEntry::new("quad-0.7", quadrilateral_with_angle(0.7)?));
    out.push(CorpusEntry::new(
        "polygon-6",
        prescribed_angle_polygon(&[0.25, 0.4, 0.25, 0.35, 0.4, 0.35])?.complex,
    ));
    out.push(CorpusEntry::new("fan-dangling-edge", fan_with_dangling_edge()?));
    out.push(CorpusEntry::new("pinched-tetrahedra", pinched_tetrahedra()?));
    out.push(CorpusEntry::new("isolated-vertex", isolated_vertex()));

    let far = |k: &EmbeddedComplex, dx: f64| {
        k.map_coordinates(|_, p| {
            let mut q = crate::vector::lift3(p).to_vec();
            q[0] += dx;
            q
        })
    };
    let flap3 = n_flap(3, &[0.1, 0.2, 0.3])?;
    out.push(CorpusEntry::new(
        "flap-3+wedge-2",
        flap3.disjoint_union(&far(&wedge_of_triangles(), 5.0)?)?,
    ));
    out.push(CorpusEntry::new(
        "tetrahedron+flap-2+point",
        regular_tetrahedron()
            .disjoint_union(&far(&n_flap(2, &[0.15, 0.25])?, 6.0)?)?
            .disjoint_union(&far(&isolated_vertex(), -4.0)?)?,
    ));
    Ok(out)
}

/// [`surfaces`] followed by [`nonmanifold`].
pub fn full() -> Result<Vec<CorpusEntry>> {
    let mut out = surfaces()?;
    out.extend(nonmanifold()?);
    Ok(out)
}
