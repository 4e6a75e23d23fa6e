//! Exact spectral toolkit for signed graphs.
//!
//! The crate is organised around a small number of building blocks:
//!
//! * [`graph`] — signed graphs, switching, canonical forms, equivalence
//!   witnesses and the `.sg` text format;
//! * [`matrix`], [`poly`], [`algebraic`], [`spectra`] — exact linear algebra:
//!   integer characteristic polynomials, Sturm-sequence root counting against
//!   quadratic-surd thresholds, exact positive-semidefinite tests and a
//!   floating Jacobi cross-check;
//! * [`hoffman`] — slim/fat labelled signed graphs, their `B`-matrix spectra,
//!   decompositions and the small catalog used throughout;
//! * [`lines`] — line signed graphs, signed incidence matrices and the
//!   unicyclic/double-edge constructions;
//! * [`limits`] — clique blow-ups, the block matrix family `A_t` and
//!   convergence experiments for the smallest eigenvalue;
//! * [`rootrep`] — root-system line systems, integral representation search
//!   and the shape classifier for representation graphs;
//! * [`enumerate`] — exhaustive enumeration of small signed graphs up to
//!   (switching-)isomorphism;
//! * [`verify`] — batch verification harnesses used by the CLI and the
//!   acceptance tests.
//!
//! All core operations are exact; floating point appears only in
//! [`spectra::jacobi_eigenvalues`] and the limit experiments, and is always
//! cross-checkable against the exact path.

pub mod algebraic;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod graph;
pub mod hoffman;
pub mod limits;
pub mod lines;
pub mod matrix;
pub mod poly;
pub mod rootrep;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};

/// Schema tag carried by every JSON report emitted by this crate.
pub const SCHEMA_VERSION: &str = "1";
