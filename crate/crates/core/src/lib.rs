//! Exact-arithmetic engine for the Hilbert series of graded algebras
//! attached to layered directed graphs with a unique minimal vertex.
//!
//! The series `h(t)` of such an algebra satisfies `h(t) = (1 - t)/D(t)`
//! where the denominator `D(t)` depends only on the levels and the
//! reachability order of the graph. This crate computes `h` by three
//! independent routes and cross-validates them:
//!
//! - [`hilbert::denominator_mobius`]: Möbius inversion of the t-deformed
//!   zeta matrix of the vertex order;
//! - [`hilbert::denominator_chains`]: explicit signed enumeration of all
//!   strictly decreasing vertex chains;
//! - [`oracle::count_words`]: direct graded counting of the normal-word
//!   basis of the algebra by a transfer-matrix dynamic program.
//!
//! On top of the graph routes sit closed forms for the subset-lattice,
//! subspace-lattice, and complete-graph families, their Koszul duals, and
//! Gaussian binomials ([`hilbert`]). All coefficients are arbitrary
//! precision integers ([`series`]); nothing is ever rounded.
//!
//! Everything is immutable after construction and all operations are pure
//! functions, so values can be shared freely across threads.

pub mod cli;
pub mod graph;
pub mod hilbert;
pub mod oracle;
pub mod series;
