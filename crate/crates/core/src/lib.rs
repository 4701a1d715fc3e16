//! Exact enumerative combinatorics on the poset of Dyck paths ordered by
//! inclusion.
//!
//! Every quantity is computed with arbitrary-precision integers or exact
//! rationals, and most of them by two independent routes so that the routes
//! can be checked against each other:
//!
//! * [`path`] and [`catalan`]: Dyck paths, their statistics and Catalan counts.
//! * [`partition`]: Young diagrams above a path, arm/leg statistics.
//! * [`poset`]: the poset `D_n`, order ideals, antichains, Dilworth covers and
//!   the isomorphism with order ideals of the staircase point poset.
//! * [`matrix`] and [`incidence`]: exact incidence-algebra matrices, Möbius
//!   inversion and chain counting.
//! * [`tableau`]: hook lengths and standard Young tableaux.
//! * [`poly`] and [`qt`]: sparse polynomials, q-analogs and the q,t-Catalan
//!   polynomial.
//! * [`chromatic`]: chromatic polynomials by memoized deletion-contraction.
//! * [`parking`]: parking functions and labelled Dyck paths.
//! * [`oeis`]: vendored sequence snapshots and the verifier used by the CLI.

pub mod catalan;
pub mod chromatic;
pub mod cli;
pub mod config;
pub mod error;
pub mod incidence;
pub mod matrix;
pub mod oeis;
pub mod parking;
pub mod partition;
pub mod path;
pub mod poly;
pub mod poset;
pub mod qt;
pub mod tableau;

pub use config::Limits;
pub use error::{Error, Result};
pub use matrix::ExactMatrix;
pub use path::{DyckPath, PathStats, Step};
pub use partition::{CellStats, Partition};
pub use poly::{BiPoly, UniPoly};
pub use poset::Poset;
