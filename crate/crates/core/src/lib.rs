//! Exact computation in module categories of bound quiver algebras.
//!
//! The crate builds finite-dimensional algebras kQ/I from a quiver with
//! relations over Q or F_p, represents finitely generated left modules as
//! quiver representations, and provides the homological toolkit on top:
//! kernels and cokernels, Hom and Ext^1 spaces, minimal projective
//! presentations, Krull-Schmidt decomposition with certificates, standard
//! modules and stratification tests, and fixed-point closures of module
//! classes under kernels, cokernels and extensions.
//!
//! Everything is exact (no floating point) and deterministic: identical
//! inputs, options and seeds reproduce identical outputs byte for byte.

pub mod algebra;
pub mod decomp;
pub mod hom;
pub mod matrix;
pub mod opts;
pub mod rep;
pub mod scalar;
pub mod strat;
pub mod wide;

pub use algebra::{Algebra, Arrow, BasisPath, Quiver, Relation};
pub use decomp::{decompose, endo_algebra, is_isomorphic, Decomposition, EndAlgebra, IsoAnswer, RingClass};
pub use hom::{ext1, global_dimension, hom_basis, middle_term, min_presentation, proj_dimension,
    regular_dual, Ext1, ExtClass, PdResult, Presentation, RealizedSes};
pub use matrix::{solve_space, Matrix, Rref, SolveMode};
pub use opts::{CertificateMode, ClosureOptions, SearchOpts, Verdict};
pub use rep::{direct_sum, dualize, factorize, injective, opposite, projective, projective_cover,
    quotient, regular, simple, sub_to_rep, trace, Factorization, Morphism, Rep, SubRep};
pub use scalar::{FieldSpec, Scalar};
pub use strat::{fdelta_member, idelta_member, standard_modules, stratified_flags, thickness_report,
    triangular_report, FdeltaAnswer, FdeltaEngine, FiltrationWitness, StandardSet, StratifiedFlags,
    ThicknessReport, TriangularReport};
pub use wide::{add_eq_wide, brute_universe, closure_check, nakayama_universe, pres_member,
    thm52_report, verify_certificates, wide_closure, AddWideReport, ClosureCheckReport, Member,
    Provenance, SubcatSet, Thm52Report};

/// Errors surfaced by the engine.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad field: {0}")]
    BadField(String),
    #[error("bad scalar literal: {0}")]
    BadScalar(String),
    #[error("bad relation: {0}")]
    BadRelation(String),
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),
    #[error("algebra not certified finite dimensional within path length bound {bound}")]
    InfiniteDimensional { bound: usize },
    #[error("path enumeration exceeded the safety cap {cap}")]
    PathSpaceExceeded { cap: usize },
    #[error("inconsistent linear system")]
    InconsistentSystem,
    #[error("enumeration needs {needed} cases, above the cap {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("indecomposability not certified (sampled splitters failed and the residue ring is not one dimensional)")]
    IndecomposabilityUncertified,
    #[error("algebra is not Nakayama: vertex {0} has multiple incoming or outgoing arrows")]
    NotNakayama(String),
    #[error("module is not projective")]
    NotProjective,
    #[error("operation needs a finite field")]
    NeedsFiniteField,
    #[error("spans are not arrow stable: not a submodule")]
    NotSubmodule,
    #[error("mismatched algebras (hashes differ)")]
    AlgebraMismatch,
    #[error("{0}")]
    Unsupported(String),
}
