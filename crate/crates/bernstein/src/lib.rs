//! Exact symbolic computation for multi-parameter affine Hecke algebras of
//! type GL in the Bernstein presentation, their finite-group automorphisms,
//! crossed products and invariant subalgebras, twisted group algebras with
//! 2-cocycles, and the combinatorial data (Weyl groups, stabilizer groups,
//! quotient tori) attached to an inertial-class descriptor.
//!
//! The `examples/` directory of this crate contains one runnable example per
//! major capability; the `bernstein` binary exposes the same machinery as a
//! small command line tool (`analyze`, `verify`, `catalog`, `green`).

pub mod coeff;
pub mod fin;

pub use coeff::{QmodZ, Rat, Scalar};
pub use fin::{FinAbGroup, IntMatrix, Permutation, TwoCocycle};
