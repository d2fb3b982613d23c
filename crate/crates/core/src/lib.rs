//! Discrete curvature on embedded 2-dimensional simplicial complexes.
//!
//! The crate computes the classical angle defect and the standard
//! (alternating exterior-angle) curvature, builds the geometric constructions
//! that exercise them, and checks vertex functions against four axioms:
//! invariance under subdivision, invariance under isometries of stars,
//! continuity, and a Gauss–Bonnet identity.
//!
//! Angles are normalized so that a full turn is 1.
//!
//! ```
//! use angle_defect::{generators, curvature};
//!
//! let k = generators::regular_tetrahedron();
//! let d = curvature::classical_angle_defect(&k, 0).unwrap();
//! assert!((d - 0.5).abs() < 1e-12);
//! ```

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod classify;
pub mod axioms;
pub mod complex;
pub mod corpus;
pub mod curvature;
pub mod error;
pub mod exec;
pub mod generators;
pub mod io;
pub mod isometry;
pub mod subdivision;
pub mod geometry;
pub mod vector;

pub use complex::{
    BuildOptions, ComplexClass, EmbeddedComplex, FVector, FlapInfo, LinkShape, LinkView, Simplex,
    SimplexSet, StarView,
};
pub use curvature::{ComplexFunction, CurvatureReport, VertexFunction};
pub use error::{Error, Result};
pub use exec::Execution;
