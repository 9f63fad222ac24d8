//! Faithfully balanced modules over the algebra of lower triangular n×n
//! matrices (the path algebra of the linearly oriented A_n quiver) and over
//! its quadratic Nakayama quotients.
//!
//! Indecomposable modules are interval modules `M_{ij}` with top `S[i]` and
//! socle `S[j]`, drawn as the boxes of a staircase Young diagram. A basic
//! module is a set of such intervals. The crate classifies which of these
//! modules are faithfully balanced (the natural map to the double centralizer
//! is bijective), counts them, maps the n-summand ones through four
//! combinatorial bijections (interleaved trees, increasing binary trees,
//! self-bounded functions, tree-like tableaux) and builds the lattice they
//! form.
//!
//! The combinatorial predicates are backed by an independent exact-rational
//! linear algebra oracle ([`oracle`]) that realizes modules as quiver
//! representations and computes the double centralizer directly.

pub mod accept;
pub mod approx;
pub mod biject;
pub mod count;
pub mod error;
pub mod fbcheck;
pub mod fixtures;
pub mod grid;
pub mod interval;
pub mod modcat;
pub mod module;
pub mod oracle;
pub mod poset;
pub mod presentation;
pub mod ratmat;

pub use error::FabalError;
pub use interval::{Interval, Leaf};
pub use module::BasicModule;
pub use presentation::NakayamaPresentation;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, FabalError>;
