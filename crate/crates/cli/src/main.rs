//! Command-line front end: analyze, generate, subdivide, compare stars and
//! run the axiom checks.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use angle_defect::axioms::{run_characterization_suite, SuiteOptions};
use angle_defect::corpus::{self, CorpusEntry};
use angle_defect::generators::GeneratorSpec;
use angle_defect::io::{self, Format};
use angle_defect::isometry::find_star_isometry_with_budget;
use angle_defect::subdivision::{subdivide, SubdivisionScheme};
use angle_defect::{ComplexFunction, EmbeddedComplex, Error, Execution, VertexFunction};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_FAIL: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_GENERATOR: u8 = 4;
const EXIT_BUDGET: u8 = 5;

/// Residuals below this count as satisfying Gauss–Bonnet.
const RESIDUAL_TOLERANCE: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "angle-defect", version, about = "Discrete curvature on embedded 2-dimensional simplicial complexes")]
struct Cli {
    /// Run corpus sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-vertex curvature table and Gauss–Bonnet residual.
    Analyze {
        file: PathBuf,
        /// classical | standard | psi:<c> | mu | zero
        #[arg(long, default_value = "classical")]
        phi: VertexFunction,
        /// euler | const:<x>
        #[arg(long, default_value = "euler")]
        lambda: ComplexFunction,
        /// json | off; defaults to the file extension.
        #[arg(long)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build one of the constructions and write it as JSON.
    Generate {
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Comma-separated normalized angles.
        #[arg(long, value_delimiter = ',')]
        angles: Option<Vec<f64>>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        height: f64,
        #[arg(long)]
        omega: Option<f64>,
        #[arg(long, default_value_t = 3)]
        turns: usize,
        #[arg(long, default_value_t = 0.4)]
        width: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a subdivision scheme: face:<i>:centroid, face:<i>:b0,b1,b2,
    /// edge:<i>:midpoint, edge:<i>:<t> or barycentric.
    Subdivide {
        file: PathBuf,
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Search for a simplicial isometry between star(vA) and star(vB).
    Isometric {
        file_a: PathBuf,
        vertex_a: usize,
        file_b: PathBuf,
        vertex_b: usize,
        #[arg(long, default_value_t = angle_defect::isometry::SEARCH_BUDGET)]
        budget: u64,
    },
    /// Check a vertex function against the four axioms on a directory of
    /// complexes.
    AxiomCheck {
        phi: VertexFunction,
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value = "euler")]
        lambda: ComplexFunction,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the built-in test complexes to a directory.
    Corpus {
        #[arg(long, value_enum, default_value = "full")]
        set: CorpusSet,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Fan,
    Polygon,
    Quad,
    Pyramid,
    Bipyramid,
    Flap,
    MirrorFlap,
    Spiral,
}

#[derive(Clone, Copy, ValueEnum)]
enum CorpusSet {
    Surfaces,
    Nonmanifold,
    Full,
}

/// An error and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::Json(_) | Error::Parse { .. } | Error::NonTriangularFace { .. } => EXIT_IO,
            _ => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    match run(cli.command, exec) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, exec: Execution) -> Outcome {
    match command {
        Command::Analyze {
            file,
            phi,
            lambda,
            format,
            out,
        } => analyze(&file, &phi, &lambda, format, out.as_deref(), exec),
        Command::Generate {
            kind,
            n,
            m,
            angles,
            beta,
            height,
            omega,
            turns,
            width,
            out,
        } => {
            let spec = generator_spec(kind, n, m, angles, beta, height, omega, turns, width)
                .map_err(|msg| Failure::new(EXIT_GENERATOR, msg))?;
            generate(&spec, out.as_deref())
        }
        Command::Subdivide { file, scheme, out } => {
            let k = io::read_complex(&file, None)?;
            let scheme = SubdivisionScheme::parse(&scheme, &k)?;
            let refined = subdivide(&k, &scheme)?;
            io::write_complex(&out, &refined)?;
            let f = refined.f_vector();
            println!("wrote {} (f = ({}, {}, {}))", out.display(), f.f0, f.f1, f.f2);
            Ok(0)
        }
        Command::Isometric {
            file_a,
            vertex_a,
            file_b,
            vertex_b,
            budget,
        } => {
            let a = io::read_complex(&file_a, None)?;
            let b = io::read_complex(&file_b, None)?;
            match find_star_isometry_with_budget(&a, vertex_a, &b, vertex_b, budget) {
                Ok(Some(w)) => {
                    println!("{}", serde_json::to_string_pretty(&w).expect("witness serializes"));
                    Ok(0)
                }
                Ok(None) => {
                    eprintln!("no simplicial isometry of stars taking {vertex_a} to {vertex_b}");
                    Ok(EXIT_FAIL)
                }
                Err(e @ Error::SearchBudgetExceeded(_)) => Err(Failure::new(EXIT_BUDGET, e.to_string())),
                Err(e) => Err(e.into()),
            }
        }
        Command::AxiomCheck {
            phi,
            corpus,
            lambda,
            seed,
            out,
        } => axiom_check(&phi, &lambda, &corpus, seed, out.as_deref(), exec),
        Command::Corpus { set, out } => {
            let entries = match set {
                CorpusSet::Surfaces => corpus::surfaces()?,
                CorpusSet::Nonmanifold => corpus::nonmanifold()?,
                CorpusSet::Full => corpus::full()?,
            };
            fs::create_dir_all(&out).map_err(Error::from)?;
            for e in &entries {
                let text = io::ComplexFile::from_complex(&e.complex).with_name(&e.id).to_json();
                fs::write(out.join(format!("{}.json", e.id)), text).map_err(Error::from)?;
            }
            println!("wrote {} complexes to {}", entries.len(), out.display());
            Ok(0)
        }
    }
}

fn analyze(
    file: &Path,
    phi: &VertexFunction,
    lambda: &ComplexFunction,
    format: Option<Format>,
    out: Option<&Path>,
    exec: Execution,
) -> Outcome {
    let k = io::read_complex(file, format)?;
    let report = io::analyze(&k, phi, lambda, exec)?;
    let json = report.to_json();
    match out {
        Some(path) => fs::write(path, json + "\n").map_err(Error::from)?,
        None => println!("{json}"),
    }
    let g = &report.global;
    let ok = g.residual.abs() < RESIDUAL_TOLERANCE;
    let line = format!(
        "{}: sum = {:.12}, {} = {:.12}, residual = {:.3e}",
        report.function, g.total_phi, report.lambda, g.lambda_value, g.residual
    );
    if ok {
        eprintln!("{line}");
        Ok(0)
    } else {
        eprintln!("{line}; Gauss–Bonnet fails");
        Ok(EXIT_FAIL)
    }
}

#[allow(clippy::too_many_arguments)]
fn generator_spec(
    kind: Kind,
    n: Option<usize>,
    m: Option<usize>,
    angles: Option<Vec<f64>>,
    beta: Option<f64>,
    height: f64,
    omega: Option<f64>,
    turns: usize,
    width: f64,
) -> Result<GeneratorSpec, String> {
    let need = |name: &str| format!("--{name} is required");
    // Flap pages default to 0.2 each, which also keeps mirror flaps valid.
    let pages = |angles: Option<Vec<f64>>| -> Result<Vec<f64>, String> {
        match (angles, n) {
            (Some(a), Some(n)) if a.len() != n => Err(format!("--n {n} but {} angles given", a.len())),
            (Some(a), _) => Ok(a),
            (None, Some(n)) => Ok(vec![0.2; n]),
            (None, None) => Err(need("n")),
        }
    };
    Ok(match kind {
        Kind::Fan => GeneratorSpec::Fan { n: n.ok_or_else(|| need("n"))? },
        Kind::Polygon => GeneratorSpec::Polygon {
            angles: angles.ok_or_else(|| need("angles"))?,
        },
        Kind::Quad => GeneratorSpec::Quad {
            beta: beta.ok_or_else(|| need("beta"))?,
        },
        Kind::Pyramid => GeneratorSpec::Pyramid {
            n: n.ok_or_else(|| need("n"))?,
            height,
        },
        Kind::Bipyramid => GeneratorSpec::Bipyramid {
            m: m.or(n).ok_or_else(|| need("m"))?,
            height,
        },
        Kind::Flap => GeneratorSpec::Flap { angles: pages(angles)? },
        Kind::MirrorFlap => GeneratorSpec::MirrorFlap { angles: pages(angles)? },
        Kind::Spiral => GeneratorSpec::Spiral {
            omega: omega.ok_or_else(|| need("omega"))?,
            turns,
            width,
        },
    })
}

fn generate(spec: &GeneratorSpec, out: Option<&Path>) -> Outcome {
    let g = spec.generate().map_err(|e| Failure::new(EXIT_GENERATOR, e.to_string()))?;
    let text = io::to_json(&g.complex);
    match out {
        Some(path) => {
            fs::write(path, text).map_err(Error::from)?;
            let f = g.complex.f_vector();
            println!("wrote {} (f = ({}, {}, {}))", path.display(), f.f0, f.f1, f.f2);
        }
        None => print!("{text}"),
    }
    for (key, value) in &g.realized {
        // Adding zero turns a negative zero into a plain one.
        let value = value + 0.0;
        if out.is_some() {
            println!("{key} = {value}");
        } else {
            eprintln!("{key} = {value}");
        }
    }
    Ok(0)
}

fn read_corpus_dir(dir: &Path) -> Result<Vec<CorpusEntry>, Failure> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(Error::from)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            matches!(
                p.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref(),
                Some("json" | "off")
            )
        })
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let id = p.file_stem().and_then(|s| s.to_str()).unwrap_or("?").to_string();
            io::read_complex(p, None)
                .map(|k: EmbeddedComplex| CorpusEntry::new(id, k))
                .map_err(|e| {
                    let mut f = Failure::from(e);
                    f.message = format!("{}: {}", p.display(), f.message);
                    f
                })
        })
        .collect()
}

fn axiom_check(
    phi: &VertexFunction,
    lambda: &ComplexFunction,
    dir: &Path,
    seed: u64,
    out: Option<&Path>,
    exec: Execution,
) -> Outcome {
    let corpus = read_corpus_dir(dir)?;
    let report = run_characterization_suite(phi, lambda, &corpus, SuiteOptions { seed, exec })?;
    println!("{} against {} on {} complexes", report.function, report.lambda, corpus.len());
    for v in &report.verdicts {
        println!("  {v}");
        if let (false, Some(w)) = (v.passed(), &v.worst_case) {
            let at = w.vertex.map(|v| format!(" vertex {v}")).unwrap_or_default();
            eprintln!("witness for {}: {}{at}, deviation {:e}", v.axiom, w.complex_id, w.deviation);
        }
    }
    if let Some(r) = report.surface_formula_residual {
        println!("  surface formula residual {r:.3e}");
    }
    if let Some(r) = report.local_formula_residual {
        println!("  local formula residual {r:.3e}");
    }
    println!("  ({})", report.note);
    if let Some(path) = out {
        let json = serde_json::to_string_pretty(&report).expect("report serializes");
        fs::write(path, json + "\n").map_err(Error::from)?;
    }
    Ok(if report.all_passed() { 0 } else { EXIT_FAIL })
}
