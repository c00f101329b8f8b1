//! Exact symbolic computation for the Lecture Hall cone.
//!
//! - [`polyring`]: sparse Laurent polynomials with integer coefficients under
//!   the degree-lexicographic order and the odd/even bigrading.
//! - [`lhseq`]: the Lecture Hall sequence `l_1, l_2, ...`, solved one entry at
//!   a time from its corner-minor equations.
//! - [`minors`]: top-aligned minors of the Toeplitz matrix of the sequence,
//!   including the subset minors `l_S`.
//! - [`cone`]: Lecture Hall partitions, their Hilbert basis and both sides of
//!   the Lecture Hall theorem as truncated series.
//! - [`verify`]: the leading-term (SAGBI) check, the `phi` identities, and the
//!   shipped table of `phi` values.
//! - [`cli`]: the command-line front end used by the `lecture-hall` binary.

pub mod cli;
pub mod cone;
pub mod error;
pub mod lhseq;
pub mod minors;
pub mod polyring;
pub mod verify;

pub use error::{Error, Result};
pub use lhseq::LhSequence;
pub use minors::SubsetS;
pub use polyring::{BiDegree, LaurentPoly, Monomial, TermOrder};
