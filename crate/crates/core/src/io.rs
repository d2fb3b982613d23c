//! Reading and writing complexes (JSON and ASCII OFF), and the analysis
//! report.
//!
//! The JSON writer is canonical: simplices are listed by dimension and then
//! lexicographically, and every coordinate is written with 17 significant
//! digits so that parsing the output reproduces the same doubles.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::axioms::AxiomVerdict;
use crate::complex::{BuildOptions, EmbeddedComplex, FVector};
use crate::curvature::{classical_angle_defect, standard_curvature, ComplexFunction, VertexFunction};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::angle_sum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Off,
}

impl Format {
    /// `.off` files are OFF, everything else is JSON.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("off") => Format::Off,
            _ => Format::Json,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "off" => Ok(Format::Off),
            other => Err(Error::BadParameter(format!("unknown format {other:?}"))),
        }
    }
}

/// On-disk shape of a complex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<f64>>,
    pub simplices: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_labels: Option<Vec<String>>,
}

impl ComplexFile {
    /// Canonical file contents for `k`: every simplex, sorted.
    pub fn from_complex(k: &EmbeddedComplex) -> Self {
        let mut simplices: Vec<Vec<usize>> = k.simplices().map(|s| s.vertices().to_vec()).collect();
        simplices.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        ComplexFile {
            ambient_dim: k.ambient_dim(),
            vertices: k.points().map(<[f64]>::to_vec).collect(),
            simplices,
            name: None,
            vertex_labels: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Builds the complex, inserting missing faces of listed simplices.
    pub fn to_complex(&self) -> Result<EmbeddedComplex> {
        for (i, p) in self.vertices.iter().enumerate() {
            if p.len() != self.ambient_dim {
                return Err(Error::DimensionMismatch {
                    vertex: i,
                    expected: self.ambient_dim,
                    got: p.len(),
                });
            }
        }
        if let Some(labels) = &self.vertex_labels {
            if labels.len() != self.vertices.len() {
                return Err(Error::BadParameter(format!(
                    "{} vertex labels for {} vertices",
                    labels.len(),
                    self.vertices.len()
                )));
            }
        }
        EmbeddedComplex::build(&self.vertices, &self.simplices, BuildOptions::closed())
    }

    /// Canonical JSON text.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"ambient_dim\": {},", self.ambient_dim);
        if let Some(name) = &self.name {
            let _ = writeln!(out, "  \"name\": {},", json_string(name));
        }
        out.push_str("  \"vertices\": [");
        for (i, p) in self.vertices.iter().enumerate() {
            out.push_str(if i == 0 { "\n    [" } else { ",\n    [" });
            for (j, x) in p.iter().enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                let _ = write!(out, "{}", format_float(*x));
            }
            out.push(']');
        }
        out.push_str("\n  ],\n  \"simplices\": [");
        for (i, s) in self.simplices.iter().enumerate() {
            out.push_str(if i == 0 { "\n    " } else { ",\n    " });
            let idx: Vec<String> = s.iter().map(usize::to_string).collect();
            let _ = write!(out, "[{}]", idx.join(", "));
        }
        out.push_str("\n  ]");
        if let Some(labels) = &self.vertex_labels {
            let labels: Vec<String> = labels.iter().map(|l| json_string(l)).collect();
            let _ = write!(out, ",\n  \"vertex_labels\": [{}]", labels.join(", "));
        }
        out.push_str("\n}\n");
        out
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// 17 significant digits in scientific notation; valid JSON and exact for
/// every finite double.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Canonical JSON for `k`.
pub fn to_json(k: &EmbeddedComplex) -> String {
    ComplexFile::from_complex(k).to_json()
}

pub fn parse_json(text: &str) -> Result<ComplexFile> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })
}

/// ASCII OFF with triangular faces only. Missing edges are inserted; vertices
/// that lie on no face are kept as isolated vertices.
pub fn parse_off(text: &str) -> Result<EmbeddedComplex> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let eof = |what: &str| Error::Parse {
        line: text.lines().count() + 1,
        message: format!("unexpected end of file, expected {what}"),
    };
    let (line, header) = lines.next().ok_or_else(|| eof("OFF header"))?;
    let rest = header
        .strip_prefix("OFF")
        .ok_or_else(|| Error::Parse {
            line,
            message: "missing OFF header".into(),
        })?
        .trim();
    let (count_line, counts) = if rest.is_empty() {
        lines.next().ok_or_else(|| eof("vertex and face counts"))?
    } else {
        (line, rest)
    };
    let counts: Vec<usize> = parse_tokens(count_line, counts)?;
    let [nv, nf, ..] = counts[..] else {
        return Err(Error::Parse {
            line: count_line,
            message: "expected vertex and face counts".into(),
        });
    };

    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (line, l) = lines.next().ok_or_else(|| eof("vertex coordinates"))?;
        let xs: Vec<f64> = parse_tokens(line, l)?;
        if xs.len() < 3 {
            return Err(Error::Parse {
                line,
                message: format!("vertex has {} coordinates, expected 3", xs.len()),
            });
        }
        vertices.push([xs[0], xs[1], xs[2]]);
    }
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (line, l) = lines.next().ok_or_else(|| eof("face"))?;
        let mut tokens = l.split_whitespace();
        let sides: usize = parse_token(line, tokens.next().unwrap_or_default())?;
        if sides != 3 {
            return Err(Error::NonTriangularFace { line, sides });
        }
        let mut face = [0usize; 3];
        for slot in &mut face {
            let t = tokens.next().ok_or_else(|| Error::Parse {
                line,
                message: "face lists fewer than 3 vertices".into(),
            })?;
            *slot = parse_token(line, t)?;
        }
        faces.push(face);
    }
    EmbeddedComplex::build(&vertices, &faces, BuildOptions::closed())
}

fn parse_token<T: FromStr>(line: usize, token: &str) -> Result<T> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("cannot parse {token:?}"),
    })
}

fn parse_tokens<T: FromStr>(line: usize, text: &str) -> Result<Vec<T>> {
    text.split_whitespace().map(|t| parse_token(line, t)).collect()
}

/// OFF text for a complex whose simplices are all triangles or faces of
/// triangles, in at most three dimensions.
pub fn to_off(k: &EmbeddedComplex) -> Result<String> {
    if k.ambient_dim() > 3 {
        return Err(Error::BadParameter("OFF holds at most three coordinates".into()));
    }
    let covered = k.edges().iter().all(|e| !k.edge_cofaces(k.edge_id(e[0], e[1]).unwrap()).is_empty());
    if !covered {
        return Err(Error::BadParameter("OFF cannot store edges outside triangles".into()));
    }
    let mut out = format!("OFF\n{} {} {}\n", k.num_vertices(), k.triangles().len(), k.edges().len());
    for p in k.points() {
        let q = crate::vector::lift3(p);
        let _ = writeln!(out, "{} {} {}", format_float(q[0]), format_float(q[1]), format_float(q[2]));
    }
    for t in k.triangles() {
        let _ = writeln!(out, "3 {} {} {}", t[0], t[1], t[2]);
    }
    Ok(out)
}

pub fn parse_complex(text: &str, format: Format) -> Result<EmbeddedComplex> {
    match format {
        Format::Json => parse_json(text)?.to_complex(),
        Format::Off => parse_off(text),
    }
}

/// Reads a complex, taking the format from the extension unless given.
pub fn read_complex(path: impl AsRef<Path>, format: Option<Format>) -> Result<EmbeddedComplex> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    parse_complex(&text, format.unwrap_or_else(|| Format::from_path(path)))
}

pub fn write_complex(path: impl AsRef<Path>, k: &EmbeddedComplex) -> Result<()> {
    let path = path.as_ref();
    let text = match Format::from_path(path) {
        Format::Json => to_json(k),
        Format::Off => to_off(k)?,
    };
    fs::write(path, text)?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexRow {
    pub vertex: usize,
    pub angle_sum: f64,
    pub classical_defect: f64,
    pub standard_curvature: f64,
    pub phi: f64,
    pub ord: usize,
    pub link_f_vector: FVector,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GlobalBlock {
    pub f_vector: FVector,
    pub euler_characteristic: i64,
    pub total_angle_sum: f64,
    pub total_classical_defect: f64,
    pub total_standard_curvature: f64,
    pub total_phi: f64,
    pub lambda_value: f64,
    /// `total_phi − lambda_value`.
    pub residual: f64,
    pub classical_residual: f64,
    pub standard_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub function: String,
    pub lambda: String,
    pub vertices: Vec<VertexRow>,
    pub global: GlobalBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<AxiomVerdict>>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// Per-vertex table and global sums for `phi` against `lambda`.
pub fn analyze(k: &EmbeddedComplex, phi: &VertexFunction, lambda: &ComplexFunction, exec: Execution) -> Result<Report> {
    let phi_values = phi.evaluate_all(k, exec)?;
    let vertices: Vec<usize> = (0..k.num_vertices()).collect();
    let vertices = exec.try_map(&vertices, |&v| -> Result<VertexRow> {
        Ok(VertexRow {
            vertex: v,
            angle_sum: angle_sum(k, v)?,
            classical_defect: classical_angle_defect(k, v)?,
            standard_curvature: standard_curvature(k, v)?,
            phi: phi_values[v],
            ord: k.vertex_order(v)?,
            link_f_vector: k.link(v)?.f_vector(),
        })
    })?;
    let sum = |f: fn(&VertexRow) -> f64| vertices.iter().map(f).sum::<f64>();
    let chi = k.euler_characteristic();
    let lambda_value = lambda.evaluate(k);
    let total_classical_defect = sum(|r| r.classical_defect);
    let total_standard_curvature = sum(|r| r.standard_curvature);
    let total_phi = sum(|r| r.phi);
    let global = GlobalBlock {
        f_vector: k.f_vector(),
        euler_characteristic: chi,
        total_angle_sum: sum(|r| r.angle_sum),
        total_classical_defect,
        total_standard_curvature,
        total_phi,
        lambda_value,
        residual: total_phi - lambda_value,
        classical_residual: total_classical_defect - chi as f64,
        standard_residual: total_standard_curvature - chi as f64,
    };
    Ok(Report {
        function: phi.name(),
        lambda: lambda.to_string(),
        vertices,
        global,
        verdicts: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{n_flap, regular_tetrahedron};

    const TETRA_OFF: &str = "OFF\n# regular tetrahedron\n4 4 6\n1 1 1\n1 -1 -1\n-1 1 -1\n-1 -1 1\n3 0 1 2\n3 0 1 3\n3 0 2 3\n3 1 2 3\n";

    #[test]
    fn minimal_json_triangle() {
        let text = r#"{"ambient_dim": 2, "vertices": [[0,0],[1,0],[0,1]], "simplices": [[0,1,2]]}"#;
        let k = parse_complex(text, Format::Json).unwrap();
        assert_eq!(k.f_vector(), FVector::new(3, 3, 1));
    }

    #[test]
    fn off_tetrahedron() {
        let k = parse_off(TETRA_OFF).unwrap();
        assert_eq!(k.f_vector(), FVector::new(4, 6, 4));
        assert!(k.is_surface());
    }

    #[test]
    fn off_quad_is_rejected_with_line() {
        let text = "OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n";
        match parse_off(text) {
            Err(Error::NonTriangularFace { line, sides }) => assert_eq!((line, sides), (7, 4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn off_counts_on_header_line() {
        let text = TETRA_OFF.replacen("OFF\n# regular tetrahedron\n4 4 6", "OFF 4 4 6", 1);
        assert_eq!(parse_off(&text).unwrap().f_vector(), FVector::new(4, 6, 4));
    }

    #[test]
    fn truncated_off_reports_parse_error() {
        assert!(matches!(parse_off("OFF\n4 4 6\n1 1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_off("PLY\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn json_errors_carry_line() {
        match parse_json("{\n\"ambient_dim\": 2,\n\"vertices\": oops}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_dimension_must_match() {
        let text = r#"{"ambient_dim": 3, "vertices": [[0,0],[1,0]], "simplices": [[0,1]]}"#;
        assert!(matches!(
            parse_complex(text, Format::Json),
            Err(Error::DimensionMismatch { vertex: 0, .. })
        ));
    }

    #[test]
    fn canonical_roundtrip_is_exact() {
        let k = regular_tetrahedron()
            .map_coordinates(|_, p| p.iter().map(|x| x * std::f64::consts::PI / 7.0).collect())
            .unwrap();
        let text = to_json(&k);
        let back = parse_complex(&text, Format::Json).unwrap();
        assert_eq!(back, k);
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn name_and_labels_survive() {
        let mut f = ComplexFile::from_complex(&n_flap(1, &[0.2]).unwrap()).with_name("flap \"one\"");
        f.vertex_labels = Some(vec!["v".into(), "w".into(), "a".into()]);
        let back = parse_json(&f.to_json()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn off_roundtrip() {
        let k = regular_tetrahedron();
        assert_eq!(parse_off(&to_off(&k).unwrap()).unwrap(), k);
    }

    #[test]
    fn report_totals_match_columns() {
        let k = n_flap(3, &[0.1, 0.2, 0.3]).unwrap();
        let r = analyze(&k, &VertexFunction::StandardCurvature, &ComplexFunction::Euler, Execution::Sequential).unwrap();
        assert_eq!(r.global.euler_characteristic, 1);
        assert!(r.global.residual.abs() < 1e-9);
        let col: f64 = r.vertices.iter().map(|v| v.phi).sum();
        assert!((col - r.global.total_phi).abs() < 1e-9);
        let v0 = &r.vertices[0];
        assert_eq!(v0.ord, 4);
        assert_eq!(v0.link_f_vector, FVector::new(4, 3, 0));
    }
}
