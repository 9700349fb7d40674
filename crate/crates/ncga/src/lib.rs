//! Exact-arithmetic engine for finitely presented connected graded algebras.
//!
//! All computations are over the rationals (arbitrary precision, no floating
//! point in any verdict path). The crate is organized around a pipeline:
//!
//! * [`freealg`] — words, weighted gradings, admissible orders and free
//!   noncommutative polynomial arithmetic;
//! * [`gbasis`] — rewrite rules, ambiguity resolution and degree-truncated
//!   completion, plus reduced-word enumeration and dimension counting;
//! * [`hilbert`] — rational Hilbert series, series fitting and the growth
//!   dichotomy via cyclotomic factor testing;
//! * [`regularity`] — truncated graded linear algebra: minimal free
//!   resolutions of the trivial module, duals, Gorenstein and regularity
//!   verdicts, and Nakayama data;
//! * [`pointscheme`] — multilinearization, truncated point schemes, the
//!   matrix method and finite-field probes;
//! * [`twist`] — Zhang twists of degree-one-generated presentations.

pub mod fixtures;
pub mod freealg;
pub mod gbasis;
pub mod hilbert;
pub mod linalg;
pub mod pointscheme;
pub mod quotient;
pub mod rat;
pub mod regularity;
pub mod twist;

pub use freealg::{FreePoly, GeneratorSet, OrderSpec, Presentation, Word};
pub use gbasis::{GBasis, RewriteRule};
pub use quotient::QuotientAlgebra;
pub use rat::Rat;
