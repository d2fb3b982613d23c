//! Empirical checks of a vertex function against four axioms: invariance
//! under subdivision, invariance under isometries of stars, continuity, and
//! Gauss–Bonnet with respect to a complex function.
//!
//! A `Pass` means no violation was found on the inputs given; it is not a
//! proof. A `Fail` always carries the worst witnessed deviation.
//!
//! Functions that are only defined on surfaces report
//! [`Error::NotASurface`] elsewhere; those inputs are counted as skipped.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::EmbeddedComplex;
use crate::corpus::CorpusEntry;
use crate::curvature::{
    eq_aaa_prediction, eq_aas_prediction, gauss_bonnet_report_with, ComplexFunction, VertexFunction,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::generators::{
    bipyramid, centroid_limit_bipyramids, flap_from_pages, prescribed_angle_polygon, regular_polygon,
    regular_tetrahedron, FlapPage,
};
use crate::geometry::{min_edge_length, RigidMotion};
use crate::isometry::{common_refinement, find_star_isometry};
use crate::subdivision::{subdivide, SubdivisionScheme};

/// Tolerance for subdivision, star-isometry and Gauss–Bonnet deviations.
pub const AXIOM_TOLERANCE: f64 = 1e-9;
/// A continuous function's deviation must end below this.
pub const CONTINUITY_TOLERANCE: f64 = 1e-6;
/// Members of a jitter sequence; member `n` moves vertices by at most
/// `2^-n` times the amplitude.
pub const JITTER_STEPS: usize = 20;
/// Jitter amplitude as a fraction of the shortest edge.
pub const JITTER_SCALE: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Subdivision,
    StarIsometry,
    Continuity,
    GaussBonnet,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Subdivision => "subdivision",
            Axiom::StarIsometry => "star-isometry",
            Axiom::Continuity => "continuity",
            Axiom::GaussBonnet => "gauss-bonnet",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorstCase {
    pub complex_id: String,
    pub vertex: Option<usize>,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub status: Status,
    pub worst_case: Option<WorstCase>,
    pub trials: usize,
    pub skipped: usize,
    pub tolerance: f64,
    /// Per-member deviations, for a single continuity sequence.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub deviations: Vec<f64>,
}

impl AxiomVerdict {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for AxiomVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{:<14} {status:<4} trials={}", self.axiom, self.trials)?;
        if self.skipped > 0 {
            write!(f, " skipped={}", self.skipped)?;
        }
        if let Some(w) = &self.worst_case {
            write!(f, " worst={:.3e} at {}", w.deviation, w.complex_id)?;
            if let Some(v) = w.vertex {
                write!(f, " vertex {v}")?;
            }
        }
        Ok(())
    }
}

/// Running maximum of deviations with its location.
#[derive(Default)]
struct Tally {
    worst: Option<WorstCase>,
    trials: usize,
    skipped: usize,
}

impl Tally {
    fn record(&mut self, id: &str, vertex: Option<usize>, deviation: f64) {
        self.trials += 1;
        self.offer(WorstCase {
            complex_id: id.to_string(),
            vertex,
            deviation,
        });
    }

    fn offer(&mut self, candidate: WorstCase) {
        let worse = match &self.worst {
            None => true,
            Some(w) => candidate.deviation > w.deviation || candidate.deviation.is_nan(),
        };
        if worse {
            self.worst = Some(candidate);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.trials += other.trials;
        self.skipped += other.skipped;
        if let Some(w) = other.worst {
            self.offer(w);
        }
        self
    }

    fn verdict(self, axiom: Axiom, tolerance: f64) -> AxiomVerdict {
        let failed = self
            .worst
            .as_ref()
            .is_some_and(|w| !(w.deviation <= tolerance));
        AxiomVerdict {
            axiom,
            status: if failed { Status::Fail } else { Status::Pass },
            worst_case: self.worst,
            trials: self.trials,
            skipped: self.skipped,
            tolerance,
            deviations: Vec::new(),
        }
    }
}

fn merge_all(parts: Vec<Result<Tally>>) -> Result<Tally> {
    parts
        .into_iter()
        .try_fold(Tally::default(), |acc, t| Ok(acc.merge(t?)))
}

/// Evaluates `phi` at every vertex, mapping out-of-domain errors to `None`.
fn values(phi: &VertexFunction, k: &EmbeddedComplex) -> Result<Option<Vec<f64>>> {
    match phi.evaluate_all(k, Execution::Sequential) {
        Ok(v) => Ok(Some(v)),
        Err(Error::NotASurface) => Ok(None),
        Err(e) => Err(e),
    }
}

/// How to pick subdivisions of each corpus complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SchemeProbe {
    /// Split every triangle at its centroid.
    FaceCentroids,
    /// Split every triangle at barycentric weights (0.2, 0.3, 0.5).
    FaceOffCenter,
    EdgeMidpoints,
    /// Split every edge at 0.37 of its length.
    EdgeOffCenter,
    Barycentric,
}

impl SchemeProbe {
    pub const ALL: [SchemeProbe; 5] = [
        SchemeProbe::FaceCentroids,
        SchemeProbe::FaceOffCenter,
        SchemeProbe::EdgeMidpoints,
        SchemeProbe::EdgeOffCenter,
        SchemeProbe::Barycentric,
    ];

    pub fn schemes(&self, k: &EmbeddedComplex) -> Result<Vec<SubdivisionScheme>> {
        match self {
            SchemeProbe::FaceCentroids => k
                .triangles()
                .iter()
                .map(|&t| SubdivisionScheme::face_at(k, t, [1.0; 3]))
                .collect(),
            SchemeProbe::FaceOffCenter => k
                .triangles()
                .iter()
                .map(|&t| SubdivisionScheme::face_at(k, t, [0.2, 0.3, 0.5]))
                .collect(),
            SchemeProbe::EdgeMidpoints => k
                .edges()
                .iter()
                .map(|&e| SubdivisionScheme::edge_at(k, e, 0.5))
                .collect(),
            SchemeProbe::EdgeOffCenter => k
                .edges()
                .iter()
                .map(|&e| SubdivisionScheme::edge_at(k, e, 0.37))
                .collect(),
            SchemeProbe::Barycentric => Ok(vec![SubdivisionScheme::Barycentric]),
        }
    }
}

/// Largest `|φ(u, K) − φ(u, J)|` over original vertices `u` and
/// subdivisions `J` of `K` produced by `probes`.
pub fn check_subdivision(
    phi: &VertexFunction,
    corpus: &[CorpusEntry],
    probes: &[SchemeProbe],
    exec: Execution,
) -> Result<AxiomVerdict> {
    let parts = exec.map(corpus, |entry| -> Result<Tally> {
        let mut tally = Tally::default();
        let k = &entry.complex;
        let Some(before) = values(phi, k)? else {
            tally.skipped += 1;
            return Ok(tally);
        };
        for probe in probes {
            for scheme in probe.schemes(k)? {
                let j = subdivide(k, &scheme)?;
                let Some(after) = values(phi, &j)? else {
                    tally.skipped += 1;
                    continue;
                };
                let id = format!("{} / {}", entry.id, scheme);
                for (u, (a, b)) in before.iter().zip(&after).enumerate() {
                    tally.record(&id, Some(u), (a - b).abs());
                }
            }
        }
        Ok(tally)
    });
    Ok(merge_all(parts)?.verdict(Axiom::Subdivision, AXIOM_TOLERANCE))
}

/// Two vertices whose stars are claimed to be simplicially isometric.
#[derive(Debug, Clone)]
pub struct StarPair {
    pub id: String,
    pub k: EmbeddedComplex,
    pub v: usize,
    pub l: EmbeddedComplex,
    pub w: usize,
}

/// Verifies each pair with the isometry search, then compares φ at the two
/// centers. An unverifiable pair is an error, not a failure.
pub fn check_star_isometry(phi: &VertexFunction, pairs: &[StarPair], exec: Execution) -> Result<AxiomVerdict> {
    let parts = exec.map(pairs, |p| -> Result<Tally> {
        let mut tally = Tally::default();
        if find_star_isometry(&p.k, p.v, &p.l, p.w)?.is_none() {
            return Err(Error::NotIsometric(p.id.clone()));
        }
        let a = phi.evaluate(&p.k, p.v);
        let b = phi.evaluate(&p.l, p.w);
        match (a, b) {
            (Ok(a), Ok(b)) => tally.record(&p.id, Some(p.v), (a - b).abs()),
            (Err(Error::NotASurface), _) | (_, Err(Error::NotASurface)) => tally.skipped += 1,
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
        Ok(tally)
    });
    Ok(merge_all(parts)?.verdict(Axiom::StarIsometry, AXIOM_TOLERANCE))
}

/// Re-embeddings of one abstract complex converging to `base`.
#[derive(Debug, Clone)]
pub struct EmbeddingSequence {
    pub id: String,
    pub base: EmbeddedComplex,
    pub perturbations: Vec<Vec<Vec<f64>>>,
}

impl EmbeddingSequence {
    /// Member `n` (1-based) moves each coordinate of `base` by a seeded
    /// uniform amount in `±2^-n · JITTER_SCALE · shortest edge`.
    pub fn jitter(id: impl Into<String>, base: &EmbeddedComplex, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let amplitude = JITTER_SCALE * min_edge_length(base).unwrap_or(1.0);
        let perturbations = (1..=JITTER_STEPS)
            .map(|n| {
                let r = amplitude * 0.5f64.powi(n as i32);
                base.points()
                    .map(|p| p.iter().map(|x| x + rng.gen_range(-r..=r)).collect())
                    .collect()
            })
            .collect();
        EmbeddingSequence {
            id: id.into(),
            base: base.clone(),
            perturbations,
        }
    }

    pub fn from_members(id: impl Into<String>, base: &EmbeddedComplex, members: &[EmbeddedComplex]) -> Result<Self> {
        let perturbations = members
            .iter()
            .map(|m| {
                if m.edges() != base.edges() || m.triangles() != base.triangles() {
                    return Err(Error::BadParameter("sequence member differs combinatorially".into()));
                }
                Ok(m.points().map(<[f64]>::to_vec).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EmbeddingSequence {
            id: id.into(),
            base: base.clone(),
            perturbations,
        })
    }

    pub fn members(&self) -> impl Iterator<Item = Result<EmbeddedComplex>> + '_ {
        self.perturbations.iter().map(|p| self.base.with_coordinates(p))
    }
}

/// Deviations `|φ(v, K_n) − φ(v, K)|` along the sequence; fails when the
/// last one is not below [`CONTINUITY_TOLERANCE`].
pub fn check_continuity(phi: &VertexFunction, sequence: &EmbeddingSequence, vertex: usize) -> Result<AxiomVerdict> {
    let limit = phi.evaluate(&sequence.base, vertex)?;
    let deviations = sequence
        .members()
        .map(|m| Ok((phi.evaluate(&m?, vertex)? - limit).abs()))
        .collect::<Result<Vec<f64>>>()?;
    let last = deviations.last().copied().unwrap_or(0.0);
    let worst = deviations.iter().copied().fold(0.0, f64::max);
    Ok(AxiomVerdict {
        axiom: Axiom::Continuity,
        status: if last < CONTINUITY_TOLERANCE { Status::Pass } else { Status::Fail },
        worst_case: Some(WorstCase {
            complex_id: sequence.id.clone(),
            vertex: Some(vertex),
            deviation: if last < CONTINUITY_TOLERANCE { worst } else { last },
        }),
        trials: deviations.len(),
        skipped: 0,
        tolerance: CONTINUITY_TOLERANCE,
        deviations,
    })
}

/// [`check_continuity`] at every vertex of every sequence; the deviation
/// recorded per vertex is the one at the last member.
pub fn check_continuity_all(
    phi: &VertexFunction,
    sequences: &[EmbeddingSequence],
    exec: Execution,
) -> Result<AxiomVerdict> {
    let parts = exec.map(sequences, |s| -> Result<Tally> {
        let mut tally = Tally::default();
        let Some(limit) = values(phi, &s.base)? else {
            tally.skipped += 1;
            return Ok(tally);
        };
        let Some(last) = s.perturbations.last() else {
            return Ok(tally);
        };
        let Some(vals) = values(phi, &s.base.with_coordinates(last)?)? else {
            tally.skipped += 1;
            return Ok(tally);
        };
        for (v, (a, b)) in limit.iter().zip(&vals).enumerate() {
            tally.record(&s.id, Some(v), (a - b).abs());
        }
        Ok(tally)
    });
    let mut verdict = merge_all(parts)?.verdict(Axiom::Continuity, CONTINUITY_TOLERANCE);
    if verdict
        .worst_case
        .as_ref()
        .is_some_and(|w| w.deviation >= CONTINUITY_TOLERANCE)
    {
        verdict.status = Status::Fail;
    }
    Ok(verdict)
}

/// Largest `|Σ_v φ(v) − Λ(K)|` over the corpus.
pub fn check_gauss_bonnet(
    phi: &VertexFunction,
    lambda: &ComplexFunction,
    corpus: &[CorpusEntry],
    exec: Execution,
) -> Result<AxiomVerdict> {
    let parts = exec.map(corpus, |entry| -> Result<Tally> {
        let mut tally = Tally::default();
        match gauss_bonnet_report_with(&entry.complex, phi, lambda, Execution::Sequential) {
            Ok(r) => tally.record(&entry.id, None, r.residual.abs()),
            Err(Error::NotASurface) => tally.skipped += 1,
            Err(e) => return Err(e),
        }
        Ok(tally)
    });
    Ok(merge_all(parts)?.verdict(Axiom::GaussBonnet, AXIOM_TOLERANCE))
}

/// Star pairs built so that they are isometric by construction: each
/// corpus vertex against the same vertex of a rigidly moved copy.
pub fn rigid_motion_pairs(corpus: &[CorpusEntry], seed: u64) -> Result<Vec<StarPair>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for entry in corpus {
        if entry.complex.ambient_dim() > 3 {
            continue;
        }
        let moved = RigidMotion::random(&mut rng, 5.0).apply(&entry.complex)?;
        for v in 0..entry.complex.num_vertices() {
            out.push(StarPair {
                id: format!("{} moved, vertex {v}", entry.id),
                k: entry.complex.clone(),
                v,
                l: moved.clone(),
                w: v,
            });
        }
    }
    Ok(out)
}

/// Flaps with equal pages but different dihedral angles, at both ends.
pub fn flap_dihedral_pairs() -> Result<Vec<StarPair>> {
    let pages = [
        FlapPage { angle: 0.12, length: 1.0 },
        FlapPage { angle: 0.3, length: 0.7 },
        FlapPage { angle: 0.21, length: 1.6 },
    ];
    let a = flap_from_pages(1.2, &pages, &[0.1, 0.4, 0.75])?;
    let b = flap_from_pages(1.2, &pages, &[0.0, 0.15, 0.6])?;
    Ok((0..2)
        .map(|v| StarPair {
            id: format!("flap dihedrals, end {v}"),
            k: a.clone(),
            v,
            l: b.clone(),
            w: v,
        })
        .collect())
}

/// Fans with equal angle sums at vertex 0, refined until their stars match.
pub fn matched_fan_pairs() -> Result<Vec<StarPair>> {
    let specs: [(&[f64], &[f64]); 2] = [
        (&[0.2, 0.3, 0.25, 0.25], &[0.2, 0.15, 0.15]),
        (&[0.35, 0.3, 0.4, 0.25, 0.2], &[0.35, 0.1, 0.05]),
    ];
    let mut out = Vec::new();
    for (i, (a, b)) in specs.iter().enumerate() {
        let pa = prescribed_angle_polygon(a)?;
        let pb = prescribed_angle_polygon(b)?;
        if let Some(r) = common_refinement(&pa.complex, 0, &pb.complex, 0)? {
            out.push(StarPair {
                id: format!("matched fans {i}"),
                k: r.k,
                v: 0,
                l: r.l,
                w: 0,
            });
        }
    }
    Ok(out)
}

/// A regular-tetrahedron vertex and the top apex of the bipyramid made of
/// two regular tetrahedra: isometric stars in surfaces with different
/// numbers of non-flat vertices.
pub fn tetrahedron_bipyramid_pair() -> Result<StarPair> {
    // Edge length of the corpus tetrahedron.
    let side = 8f64.sqrt();
    let base: Vec<[f64; 2]> = regular_polygon(3)
        .iter()
        .map(|p| p.map(|c| c * side / 3f64.sqrt()))
        .collect();
    let h = side * (2.0f64 / 3.0).sqrt();
    let bp = bipyramid(&base, [0.0, 0.0, h], [0.0, 0.0, -h])?;
    Ok(StarPair {
        id: "tetrahedron vertex vs bipyramid apex".into(),
        k: regular_tetrahedron(),
        v: 0,
        l: bp,
        w: 3,
    })
}

/// Bipyramids over an equilateral triangle whose bottom apex approaches the
/// centroid at depths `2^(-0.6 j)`, `j = 1..=JITTER_STEPS`. The bottom apex
/// (vertex 4) is flat only in the limit.
///
/// Its defect shrinks like 0.8·depth², so the last member sits near 5e-8:
/// inside the continuity tolerance, yet well clear of the flatness
/// threshold.
pub fn centroid_limit_sequence() -> Result<EmbeddingSequence> {
    let heights: Vec<f64> = (1..=JITTER_STEPS).map(|j| (-0.6 * j as f64).exp2()).collect();
    let (limit, members) = centroid_limit_bipyramids(&heights)?;
    EmbeddingSequence::from_members("bipyramid apex to centroid", &limit, &members)
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub function: String,
    pub lambda: String,
    pub verdicts: Vec<AxiomVerdict>,
    /// Largest `|φ(v) − ½Λ_pyramid(1 − angle_sum(v))|`, when every axiom
    /// passed and the corpus consists of surfaces.
    pub surface_formula_residual: Option<f64>,
    /// Largest gap between φ and the general local formula, when every
    /// axiom passed.
    pub local_formula_residual: Option<f64>,
    pub note: String,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(AxiomVerdict::passed)
    }

    pub fn verdict(&self, axiom: Axiom) -> Option<&AxiomVerdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub seed: u64,
    pub exec: Execution,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0x5eed,
            exec: Execution::default(),
        }
    }
}

/// Runs all four checks on `corpus` plus fixed witness constructions, and
/// when everything passes compares φ against the local formulas.
pub fn run_characterization_suite(
    phi: &VertexFunction,
    lambda: &ComplexFunction,
    corpus: &[CorpusEntry],
    options: SuiteOptions,
) -> Result<SuiteReport> {
    if corpus.is_empty() {
        return Err(Error::BadParameter("corpus is empty".into()));
    }
    let exec = options.exec;

    let subdivision = check_subdivision(phi, corpus, &SchemeProbe::ALL, exec)?;

    let mut pairs = rigid_motion_pairs(corpus, options.seed)?;
    pairs.extend(flap_dihedral_pairs()?);
    pairs.extend(matched_fan_pairs()?);
    pairs.push(tetrahedron_bipyramid_pair()?);
    let isometry = check_star_isometry(phi, &pairs, exec)?;

    let mut sequences: Vec<EmbeddingSequence> = corpus
        .iter()
        .enumerate()
        .map(|(i, e)| EmbeddingSequence::jitter(format!("{} jitter", e.id), &e.complex, options.seed + i as u64))
        .collect();
    sequences.push(centroid_limit_sequence()?);
    let continuity = check_continuity_all(phi, &sequences, exec)?;

    let gauss_bonnet = check_gauss_bonnet(phi, lambda, corpus, exec)?;
    let verdicts = vec![subdivision, isometry, continuity, gauss_bonnet];

    let all_passed = verdicts.iter().all(AxiomVerdict::passed);
    let all_surfaces = corpus.iter().all(|e| e.complex.is_surface());
    let constants = lambda.family_constants();
    let mut surface_formula_residual = None;
    let mut local_formula_residual = None;
    if all_passed {
        let residuals = exec.map(corpus, |e| -> Result<(f64, f64)> {
            let k = &e.complex;
            let vals = phi.evaluate_all(k, Execution::Sequential)?;
            let (mut s, mut l) = (0.0f64, 0.0f64);
            for (v, val) in vals.iter().enumerate() {
                if all_surfaces {
                    s = s.max((val - eq_aas_prediction(k, v, &constants)?).abs());
                }
                l = l.max((val - eq_aaa_prediction(k, v, lambda, &constants)?).abs());
            }
            Ok((s, l))
        });
        let (mut s, mut l) = (0.0f64, 0.0f64);
        for r in residuals {
            let (a, b) = r?;
            s = s.max(a);
            l = l.max(b);
        }
        if all_surfaces {
            surface_formula_residual = Some(s);
        }
        local_formula_residual = Some(l);
    }
    Ok(SuiteReport {
        function: phi.name(),
        lambda: lambda.to_string(),
        verdicts,
        surface_formula_residual,
        local_formula_residual,
        note: "pass means no violation was found on this corpus; it is not a proof".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetra() -> Vec<CorpusEntry> {
        vec![CorpusEntry::new("tetrahedron", regular_tetrahedron())]
    }

    #[test]
    fn psi_fails_subdivision_on_face_split() {
        let v = check_subdivision(
            &VertexFunction::Psi(1.0 / 6.0),
            &tetra(),
            &[SchemeProbe::FaceCentroids],
            Execution::Sequential,
        )
        .unwrap();
        assert_eq!(v.status, Status::Fail);
        assert!((v.worst_case.unwrap().deviation - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn psi_third_gauss_bonnet_residual_is_two() {
        let v = check_gauss_bonnet(
            &VertexFunction::Psi(1.0 / 3.0),
            &ComplexFunction::Euler,
            &tetra(),
            Execution::Sequential,
        )
        .unwrap();
        assert_eq!(v.status, Status::Fail);
        assert!((v.worst_case.unwrap().deviation - 2.0).abs() < 1e-12);
    }

    #[test]
    fn mu_star_witness() {
        let pair = tetrahedron_bipyramid_pair().unwrap();
        let v = check_star_isometry(&VertexFunction::Mu, &[pair], Execution::Sequential).unwrap();
        assert_eq!(v.status, Status::Fail);
        assert!((v.worst_case.unwrap().deviation - 0.1).abs() < 1e-12);
    }

    #[test]
    fn mu_jumps_in_the_limit() {
        let s = centroid_limit_sequence().unwrap();
        let v = check_continuity(&VertexFunction::Mu, &s, 4).unwrap();
        assert_eq!(v.status, Status::Fail);
        assert!(v.deviations.iter().all(|d| (d - 0.4).abs() < 1e-12));
    }

    #[test]
    fn jitter_is_reproducible() {
        let k = regular_tetrahedron();
        let a = EmbeddingSequence::jitter("a", &k, 7);
        let b = EmbeddingSequence::jitter("b", &k, 7);
        assert_eq!(a.perturbations, b.perturbations);
        let v = check_continuity(&VertexFunction::StandardCurvature, &a, 0).unwrap();
        assert!(v.passed());
    }

    #[test]
    fn unverified_pair_is_an_error() {
        let pair = StarPair {
            id: "bogus".into(),
            k: regular_tetrahedron(),
            v: 0,
            l: crate::generators::octahedron(),
            w: 0,
        };
        assert!(matches!(
            check_star_isometry(&VertexFunction::Zero, &[pair], Execution::Sequential),
            Err(Error::NotIsometric(_))
        ));
    }
}
