//! Vertex-supported curvature functions, complex-supported functions, and
//! Gauss–Bonnet bookkeeping.
//!
//! All angle quantities are in turns, so the classical angle defect at `v` is
//! `1 − angle_sum(v)` and Gauss–Bonnet reads `Σ_v defect(v) = χ(K)`.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock};

use serde::Serialize;

use crate::complex::{EmbeddedComplex, Simplex};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::{angle_sum, exterior_angle};

/// A vertex counts as flat when its angle sum is within this of 1.
pub const FLATNESS_TOLERANCE: f64 = 1e-9;

pub fn classical_angle_defect(k: &EmbeddedComplex, v: usize) -> Result<f64> {
    Ok(1.0 - angle_sum(k, v)?)
}

/// Alternating sum over the simplices containing `v` of their exterior
/// angles at `v`.
pub fn standard_curvature(k: &EmbeddedComplex, v: usize) -> Result<f64> {
    let mut kappa = exterior_angle(k, v, &Simplex::Vertex(v))?;
    for &e in k.incident_edges(v) {
        kappa -= exterior_angle(k, v, &Simplex::Edge(k.edges()[e]))?;
    }
    for &t in k.incident_triangles(v) {
        kappa += exterior_angle(k, v, &Simplex::Triangle(k.triangles()[t]))?;
    }
    Ok(kappa)
}

/// Standard curvature through the link: `1 − f0(link)/2 + f1(link)/2 − angle_sum`.
pub fn link_formula_curvature(k: &EmbeddedComplex, v: usize) -> Result<f64> {
    let f = k.link(v)?.f_vector();
    Ok(1.0 - 0.5 * f.f0 as f64 + 0.5 * f.f1 as f64 - angle_sum(k, v)?)
}

/// `1 − c · ord(v)`. Only `c = 1/6` sums to χ on surfaces.
pub fn psi(k: &EmbeddedComplex, v: usize, c: f64) -> Result<f64> {
    Ok(1.0 - c * k.vertex_order(v)? as f64)
}

pub fn is_flat(k: &EmbeddedComplex, v: usize) -> Result<bool> {
    Ok((angle_sum(k, v)? - 1.0).abs() <= FLATNESS_TOLERANCE)
}

/// Number of vertices whose angle sum differs from 1.
pub fn non_flat_count(k: &EmbeddedComplex) -> usize {
    (0..k.num_vertices())
        .filter(|&v| !is_flat(k, v).unwrap_or(true))
        .count()
}

/// `χ(K)/n(K)` at non-flat vertices, 0 at flat ones; surfaces only.
pub fn mu(k: &EmbeddedComplex, v: usize) -> Result<f64> {
    k.check_vertex(v)?;
    let share = mu_share(k)?;
    Ok(if is_flat(k, v)? { 0.0 } else { share })
}

fn mu_share(k: &EmbeddedComplex) -> Result<f64> {
    if !k.is_surface() {
        return Err(Error::NotASurface);
    }
    match non_flat_count(k) {
        0 => Err(Error::AllVerticesFlat),
        n => Ok(k.euler_characteristic() as f64 / n as f64),
    }
}

type VertexFn = dyn Fn(&EmbeddedComplex, usize) -> Result<f64> + Send + Sync;
type ComplexFn = dyn Fn(&EmbeddedComplex) -> f64 + Send + Sync;

/// A vertex-supported function φ(v, K).
#[derive(Clone)]
pub enum VertexFunction {
    ClassicalDefect,
    StandardCurvature,
    Psi(f64),
    Mu,
    /// The constantly zero function.
    Zero,
    Custom { name: String, f: Arc<VertexFn> },
}

impl VertexFunction {
    pub fn custom(
        name: impl Into<String>,
        f: impl Fn(&EmbeddedComplex, usize) -> Result<f64> + Send + Sync + 'static,
    ) -> Self {
        VertexFunction::Custom {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn evaluate(&self, k: &EmbeddedComplex, v: usize) -> Result<f64> {
        match self {
            VertexFunction::ClassicalDefect => classical_angle_defect(k, v),
            VertexFunction::StandardCurvature => standard_curvature(k, v),
            VertexFunction::Psi(c) => psi(k, v, *c),
            VertexFunction::Mu => mu(k, v),
            VertexFunction::Zero => k.check_vertex(v).map(|_| 0.0),
            VertexFunction::Custom { f, .. } => f(k, v),
        }
    }

    /// Values at every vertex, in index order.
    pub fn evaluate_all(&self, k: &EmbeddedComplex, exec: Execution) -> Result<Vec<f64>> {
        if let VertexFunction::Mu = self {
            // n(K) and the surface test are global; compute them once.
            let share = mu_share(k)?;
            return exec
                .map_range(k.num_vertices(), |v| {
                    is_flat(k, v).map(|flat| if flat { 0.0 } else { share })
                })
                .into_iter()
                .collect();
        }
        exec.map_range(k.num_vertices(), |v| self.evaluate(k, v))
            .into_iter()
            .collect()
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for VertexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexFunction::ClassicalDefect => write!(f, "classical"),
            VertexFunction::StandardCurvature => write!(f, "standard"),
            VertexFunction::Psi(c) => write!(f, "psi:{c}"),
            VertexFunction::Mu => write!(f, "mu"),
            VertexFunction::Zero => write!(f, "zero"),
            VertexFunction::Custom { name, .. } => write!(f, "{name}"),
        }
    }
}

impl fmt::Debug for VertexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexFunction({self})")
    }
}

impl FromStr for VertexFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(VertexFunction::ClassicalDefect),
            "standard" => Ok(VertexFunction::StandardCurvature),
            "mu" => Ok(VertexFunction::Mu),
            "zero" => Ok(VertexFunction::Zero),
            _ => match s.strip_prefix("psi:") {
                Some(c) => parse_number(c).map(VertexFunction::Psi),
                None => Err(Error::BadParameter(format!("unknown vertex function `{s}`"))),
            },
        }
    }
}

/// Accepts decimals and simple fractions like `1/6`.
pub(crate) fn parse_number(s: &str) -> Result<f64> {
    let bad = || Error::BadParameter(format!("not a number: `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad())?;
            let q: f64 = q.trim().parse().map_err(|_| bad())?;
            Ok(p / q)
        }
        None => s.trim().parse().map_err(|_| bad()),
    }
}

/// A simplicial-complex-supported function Λ(K).
#[derive(Clone)]
pub enum ComplexFunction {
    Euler,
    Constant(f64),
    Custom { name: String, f: Arc<ComplexFn> },
}

impl ComplexFunction {
    pub fn custom(
        name: impl Into<String>,
        f: impl Fn(&EmbeddedComplex) -> f64 + Send + Sync + 'static,
    ) -> Self {
        ComplexFunction::Custom {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn evaluate(&self, k: &EmbeddedComplex) -> f64 {
        match self {
            ComplexFunction::Euler => k.euler_characteristic() as f64,
            ComplexFunction::Constant(c) => *c,
            ComplexFunction::Custom { f, .. } => f(k),
        }
    }

    /// Λ evaluated on generated members of the families it is assumed to be
    /// constant on.
    pub fn family_constants(&self) -> FamilyConstants {
        let fan = crate::generators::regular_polygon_fan(3).expect("triangle fan");
        let pyramid = crate::generators::regular_tetrahedron();
        FamilyConstants {
            fan: self.evaluate(&fan),
            pyramid: self.evaluate(&pyramid),
        }
    }
}

impl fmt::Display for ComplexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexFunction::Euler => write!(f, "euler"),
            ComplexFunction::Constant(c) => write!(f, "const:{c}"),
            ComplexFunction::Custom { name, .. } => write!(f, "{name}"),
        }
    }
}

impl fmt::Debug for ComplexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexFunction({self})")
    }
}

impl FromStr for ComplexFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euler" => Ok(ComplexFunction::Euler),
            _ => match s.strip_prefix("const:") {
                Some(c) => parse_number(c).map(ComplexFunction::Constant),
                None => Err(Error::BadParameter(format!("unknown complex function `{s}`"))),
            },
        }
    }
}

/// Values of Λ on planar fans and on pyramids/bipyramids.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FamilyConstants {
    pub fan: f64,
    pub pyramid: f64,
}

static EULER_CONSTANTS: LazyLock<FamilyConstants> =
    LazyLock::new(|| ComplexFunction::Euler.family_constants());

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvatureReport {
    pub per_vertex: Vec<f64>,
    pub total: f64,
    pub lambda_value: f64,
    /// `total − lambda_value`.
    pub residual: f64,
}

pub fn gauss_bonnet_report(
    k: &EmbeddedComplex,
    phi: &VertexFunction,
    lambda: &ComplexFunction,
) -> Result<CurvatureReport> {
    gauss_bonnet_report_with(k, phi, lambda, Execution::default())
}

pub fn gauss_bonnet_report_with(
    k: &EmbeddedComplex,
    phi: &VertexFunction,
    lambda: &ComplexFunction,
    exec: Execution,
) -> Result<CurvatureReport> {
    let per_vertex = phi.evaluate_all(k, exec)?;
    let total: f64 = per_vertex.iter().sum();
    let lambda_value = lambda.evaluate(k);
    Ok(CurvatureReport {
        per_vertex,
        total,
        lambda_value,
        residual: total - lambda_value,
    })
}

/// Right-hand side of the general characterization formula for φ(v, K):
///
/// `Λ(star v) − ½ Σ_{w ∈ link v} Λ(star_N w) + ½ Λ_fan f1(link v) − Λ_fan angle_sum(v)`
///
/// where `N = star(v)` and each `star_N w` is a `linkord(w,v)`-flap.
pub fn eq_aaa_prediction(
    k: &EmbeddedComplex,
    v: usize,
    lambda: &ComplexFunction,
    constants: &FamilyConstants,
) -> Result<f64> {
    let (star, center, _) = k.star(v)?.to_complex()?;
    let mut flap_sum = 0.0;
    for w in (0..star.num_vertices()).filter(|&w| w != center) {
        let (flap, _, _) = star.star(w)?.to_complex()?;
        flap_sum += lambda.evaluate(&flap);
    }
    let link_edges = k.link(v)?.f_vector().f1 as f64;
    Ok(lambda.evaluate(&star) - 0.5 * flap_sum + 0.5 * constants.fan * link_edges
        - constants.fan * angle_sum(k, v)?)
}

/// `|κ(v) − prediction|` with φ = standard curvature and Λ = χ.
pub fn eq_aaa_identity_residual(k: &EmbeddedComplex, v: usize) -> Result<f64> {
    let predicted = eq_aaa_prediction(k, v, &ComplexFunction::Euler, &EULER_CONSTANTS)?;
    Ok((standard_curvature(k, v)? - predicted).abs())
}

/// `½ Λ_pyramid (1 − angle_sum(v))`.
pub fn eq_aas_prediction(k: &EmbeddedComplex, v: usize, constants: &FamilyConstants) -> Result<f64> {
    Ok(0.5 * constants.pyramid * (1.0 - angle_sum(k, v)?))
}

/// `|defect(v) − ½ Λ_pyramid (1 − angle_sum(v))|` with Λ = χ; surfaces only.
pub fn eq_aas_identity_residual(k: &EmbeddedComplex, v: usize) -> Result<f64> {
    k.check_vertex(v)?;
    if !k.is_surface() {
        return Err(Error::NotASurface);
    }
    let predicted = eq_aas_prediction(k, v, &EULER_CONSTANTS)?;
    Ok((classical_angle_defect(k, v)? - predicted).abs())
}

/// [`eq_aas_identity_residual`] at every vertex, checking the surface once.
pub fn eq_aas_residuals(k: &EmbeddedComplex) -> Result<Vec<f64>> {
    if !k.is_surface() {
        return Err(Error::NotASurface);
    }
    (0..k.num_vertices())
        .map(|v| {
            let predicted = eq_aas_prediction(k, v, &EULER_CONSTANTS)?;
            Ok((classical_angle_defect(k, v)? - predicted).abs())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::BuildOptions;

    #[test]
    fn parse_functions() {
        assert!(matches!("classical".parse(), Ok(VertexFunction::ClassicalDefect)));
        match "psi:1/6".parse::<VertexFunction>().unwrap() {
            VertexFunction::Psi(c) => assert!((c - 1.0 / 6.0).abs() < 1e-16),
            other => panic!("{other:?}"),
        }
        assert!(matches!("psi:0.25".parse(), Ok(VertexFunction::Psi(c)) if c == 0.25));
        assert!("psi:x".parse::<VertexFunction>().is_err());
        assert!("nope".parse::<VertexFunction>().is_err());
        assert!(matches!("euler".parse(), Ok(ComplexFunction::Euler)));
        assert!(matches!("const:2".parse(), Ok(ComplexFunction::Constant(c)) if c == 2.0));
    }

    #[test]
    fn isolated_vertex_has_unit_curvature() {
        let k = EmbeddedComplex::build(&[[0.0, 0.0]], &[vec![0]], BuildOptions::default()).unwrap();
        assert_eq!(standard_curvature(&k, 0).unwrap(), 1.0);
        assert_eq!(link_formula_curvature(&k, 0).unwrap(), 1.0);
        assert!(eq_aaa_identity_residual(&k, 0).unwrap() < 1e-12);
    }

    #[test]
    fn bare_edge_endpoints() {
        let k = EmbeddedComplex::build(&[[0.0, 0.0], [2.0, 1.0]], &[vec![0, 1]], BuildOptions::default())
            .unwrap();
        assert_eq!(standard_curvature(&k, 0).unwrap(), 0.5);
        let r = gauss_bonnet_report(&k, &VertexFunction::StandardCurvature, &ComplexFunction::Euler)
            .unwrap();
        assert_eq!(r.total, 1.0);
        assert_eq!(r.residual, 0.0);
    }

    #[test]
    fn mu_rejects_non_surfaces() {
        let k = EmbeddedComplex::from_triangles(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]], &[[0, 1, 2]])
            .unwrap();
        assert!(matches!(mu(&k, 0), Err(Error::NotASurface)));
        assert!(matches!(eq_aas_identity_residual(&k, 0), Err(Error::NotASurface)));
    }

    #[test]
    fn euler_family_constants() {
        let c = ComplexFunction::Euler.family_constants();
        assert_eq!(c.fan, 1.0);
        assert_eq!(c.pyramid, 2.0);
        let c = ComplexFunction::Constant(3.5).family_constants();
        assert_eq!((c.fan, c.pyramid), (3.5, 3.5));
    }
}
