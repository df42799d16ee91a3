//! Exact topological invariants for Hamiltonian circle actions and complete
//! intersections.
//!
//! - [`series`]: exact rationals and truncated power series.
//! - [`ci`]: Euler characteristic, Betti numbers, signature, `I_JR` and Chern
//!   numbers of complete intersections, plus classification scans.
//! - [`fixloc`]: localization of Betti numbers, signature and `I_JR` over the
//!   fixed set of a circle action, and validation of fixed-point data.
//! - [`gkm`]: GKM graph combinatorics and the two-quadrics obstruction.

pub mod ci;
pub mod fixloc;
pub mod gkm;
pub mod series;

pub use series::{Rational, TruncatedSeries};
