//! Domination polynomials of powers of paths and cycles.
//!
//! [`dompoly`] evaluates `γ(P_n^ℓ, x)` and `γ(C_n^ℓ, x)` along several
//! independent recurrence routes, [`oracle`] counts dominating sets by brute
//! force on small graphs, and [`unimodal`] tests the resulting coefficient
//! sequences (unimodality, log-concavity, ultra-log-concavity) and certifies
//! mode sequences of polynomial families `f_n = x (f_(n-1) + ... + f_(n-k))`.

pub mod dompoly;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod recurrence;
pub mod unimodal;

pub use dompoly::{Family, GraphSpec};
pub use error::{Error, Result};
pub use poly::IntPolynomial;

#[cfg(feature = "cli")]
pub mod cli;
