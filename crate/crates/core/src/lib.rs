//! Exact verification toolkit for dimension counts of rational curves on
//! degree `n - 1` hypersurfaces in projective `n`-space.
//!
//! The crate is split along the objects it checks:
//!
//! - [`agraph`]: genus-zero stable A-graphs, their expected dimensions and the
//!   enumeration of nondegenerate basic graphs.
//! - [`ledger`]: the codimension chain of non-level loci and the resulting
//!   degree bound, computed two independent ways.
//! - [`hankel`]: catalecticant matrices, fraction-free rank and secant
//!   samples on the rational normal curve.
//! - [`strata`]: the four-case dimension audit of the multiplication map.
//! - [`comb`]: connectivity of line labellings on a comb under subset moves.
//!
//! All arithmetic is exact and every function is pure.

pub mod agraph;
pub mod comb;
pub mod error;
pub mod hankel;
pub mod ledger;
pub mod strata;

pub use error::{Error, Result};
