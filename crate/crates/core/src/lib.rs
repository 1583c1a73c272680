//! Exact-arithmetic toolkit for algebraic graph theory, centered on
//! co-edge-regular graphs with a small number of distinct eigenvalues.
//!
//! Everything spectral runs over the integers and rationals: characteristic
//! polynomials are exact `BigInt` polynomials, eigenvalues are isolated-root
//! intervals that refine on demand, and every comparison of algebraic numbers
//! is decided exactly. No floating point enters any verdict.
//!
//! The crate is organized in layers:
//!
//! * [`graph`]: a bit-matrix graph type, the classical families used
//!   throughout (grids, triangular graphs, Shrikhande, Petersen, ...), and
//!   combinators such as clique extensions and cones.
//! * [`poly`] and [`roots`]: integer polynomial arithmetic, squarefree
//!   decomposition, Sturm chains, and exact real-root isolation.
//! * [`spectrum`] and [`quotient`]: characteristic polynomials, spectra with
//!   multiplicities, eigenvalue interlacing, and equitable partitions.
//! * [`regularity`], [`subgraph`], [`canon`]: the graph-parameter checks
//!   (co-edge-regularity, walk-regularity, strong regularity), induced
//!   subgraph search, and canonical forms.
//! * [`pipeline`]: end-to-end classification of strongly co-edge-regular
//!   graphs with four eigenvalues, plus small exhaustive searches.
//! * [`codec`] and [`report`]: graph6/edge-list I/O and a JSON report schema.

pub mod canon;
pub mod codec;
pub mod error;
pub mod graph;
pub mod pipeline;
pub mod poly;
pub mod quotient;
pub mod regularity;
pub mod report;
pub mod roots;
pub mod spectrum;
pub mod subgraph;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use poly::ExactPolynomial;
pub use roots::RootInterval;
pub use spectrum::Spectrum;

