//! Surface, pseudomanifold, cone, planar-fan and n-flap detection.

use crate::complex::{ComplexClass, EmbeddedComplex, FlapInfo, LinkShape};

pub(crate) fn classify(k: &EmbeddedComplex) -> ComplexClass {
    let is_surface = is_surface(k);
    let is_pseudomanifold = is_surface || is_pseudomanifold(k);
    let cone_apices = cone_apices(k);
    let planar_fan_apex = if k.triangles().is_empty() || !k.is_planar() {
        None
    } else {
        cone_apices
            .iter()
            .copied()
            .find(|&a| k.link(a).map(|l| l.shape() == LinkShape::Arc).unwrap_or(false))
    };
    ComplexClass {
        is_surface,
        is_pseudomanifold,
        cone_apex: cone_apices.first().copied(),
        planar_fan_apex,
        flap: flap(k),
    }
}

pub(crate) fn is_surface(k: &EmbeddedComplex) -> bool {
    !k.triangles().is_empty()
        && (0..k.num_vertices()).all(|v| k.link(v).map(|l| l.shape() == LinkShape::Circle).unwrap_or(false))
}

fn is_pseudomanifold(k: &EmbeddedComplex) -> bool {
    if k.triangles().is_empty() {
        return false;
    }
    let pure = (0..k.num_vertices()).all(|v| !k.incident_triangles(v).is_empty())
        && (0..k.edges().len()).all(|e| !k.edge_cofaces(e).is_empty());
    if !pure || (0..k.edges().len()).any(|e| k.edge_cofaces(e).len() > 2) {
        return false;
    }
    // Strong connectivity within each connected component: triangles joined
    // through shared edges must reach every triangle of the component.
    let nt = k.triangles().len();
    let mut tri_comp = vec![usize::MAX; nt];
    let mut n_tri_comps = 0;
    for s in 0..nt {
        if tri_comp[s] != usize::MAX {
            continue;
        }
        tri_comp[s] = n_tri_comps;
        let mut stack = vec![s];
        while let Some(t) = stack.pop() {
            for e in crate::complex::triangle_edges(&k.triangles()[t]) {
                let ei = k.edge_id(e[0], e[1]).unwrap();
                for &u in k.edge_cofaces(ei) {
                    if tri_comp[u] == usize::MAX {
                        tri_comp[u] = n_tri_comps;
                        stack.push(u);
                    }
                }
            }
        }
        n_tri_comps += 1;
    }
    n_tri_comps == k.components().len()
}

/// Vertices whose closed star is the whole complex.
fn cone_apices(k: &EmbeddedComplex) -> Vec<usize> {
    let f = k.f_vector();
    (0..k.num_vertices())
        .filter(|&a| {
            let ord = k.incident_edges(a).len();
            let tris = k.incident_triangles(a).len();
            1 + ord == f.f0 && ord + tris == f.f1 && tris == f.f2
        })
        .collect()
}

/// An n-flap has an edge ⟨v,w⟩ such that every triangle contains it and every
/// other simplex is a face of one of those triangles.
fn flap(k: &EmbeddedComplex) -> Option<FlapInfo> {
    let f = k.f_vector();
    if f.f2 == 0 {
        return (f.f0 == 2 && f.f1 == 1).then(|| FlapInfo {
            n: 0,
            ends: (k.edges()[0][0], k.edges()[0][1]),
        });
    }
    if f.f0 != f.f2 + 2 || f.f1 != 2 * f.f2 + 1 {
        return None;
    }
    let first = k.triangles()[0];
    crate::complex::triangle_edges(&first).into_iter().find_map(|e| {
        let all = k
            .triangles()
            .iter()
            .all(|t| t.contains(&e[0]) && t.contains(&e[1]));
        all.then(|| FlapInfo {
            n: f.f2,
            ends: (e[0], e[1]),
        })
    })
}
