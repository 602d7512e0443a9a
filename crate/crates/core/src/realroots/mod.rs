//! Exact decision procedures about real roots on the positive axis, and
//! constructive positivity certificates.
//!
//! The central question downstream is "does this polynomial have a positive
//! real root?". It is answered three mutually checking ways:
//!
//! - [`count_positive_roots`] decides it exactly via Sturm chains;
//! - [`polya_certificate`] produces a multiplier `(1+t)^N` whose product with
//!   the polynomial has nonnegative coefficients, a certificate (checkable
//!   by [`verify_positive_combination`]) that no positive root exists;
//! - [`isolate_positive_root`] produces an interval with an exact sign
//!   change, a witness that a positive root does exist.

mod certificate;
mod isolate;
mod sturm;

pub use certificate::{polya_certificate, verify_positive_combination, PositivityCertificate};
pub use isolate::{isolate_positive_root, RootInterval};
pub use sturm::{cauchy_bound, count_positive_roots, descartes_bound, Parity, SturmChain};
