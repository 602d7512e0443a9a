//! Alexander polynomials by three routes (Seifert matrix, reduced Burau,
//! Fox calculus), the rationally-homologically-fibered test, and the
//! HNN-extension surjectivity hypothesis check.

mod braid;
mod fox;
mod hnn;
mod seifert;

pub use braid::BraidWord;
pub(crate) use fox::word_to_string;
pub use fox::{fox_derivative_phi, GroupPresentation, Letter, Word};
pub use hnn::{HnnData, Side, SurjectivityOutcome};
pub use seifert::{rhf_check, SeifertMatrix};
