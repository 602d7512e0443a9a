//! Exact-arithmetic detection of non-bi-orderable knot groups.
//!
//! A knot group (or more generally a finitely generated group presented as a
//! suitable HNN extension) is certified not bi-orderable when its Alexander
//! polynomial has no positive real root and the relevant homological
//! hypotheses hold. This crate computes everything involved exactly, over
//! arbitrary-precision rationals:
//!
//! - Alexander polynomials by three routes: Seifert matrix `det(tV - V^T)`,
//!   reduced Burau representation of a braid closure, and Fox free
//!   differential calculus on a group presentation.
//! - Positive-real-root counting by Sturm chains, with Descartes prefilter.
//! - Constructive positivity certificates: a multiplier `(1+t)^N` making all
//!   coefficients of the product nonnegative, which is machine-checkable
//!   evidence that no positive real root exists.
//! - Isolating intervals with exact sign changes as counter-evidence when a
//!   positive root does exist.
//! - A verdict pipeline and batch corpus runner over a JSON record format.
//!
//! No floating point is used anywhere: every verdict is backed by exact
//! rational arithmetic and carries re-checkable evidence.

pub mod error;
pub mod exactnum;
pub mod ingest;
pub mod linalg;
pub mod pipeline;
pub mod realroots;
pub mod topology;

pub use error::{Error, Result};
pub use exactnum::{LaurentPoly, Rational};
pub use ingest::{KnotRecord, RecordSource};
pub use linalg::{PolyMatrix, RationalMatrix};
pub use pipeline::{analyze, run_corpus, Report, Status, Verdict};
pub use realroots::{PositivityCertificate, RootInterval, SturmChain};
pub use topology::{BraidWord, GroupPresentation, HnnData, SeifertMatrix};
