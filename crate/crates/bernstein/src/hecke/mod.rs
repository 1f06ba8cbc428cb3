//! Multi-parameter affine Hecke algebras of type GL in the Bernstein
//! presentation: basis elements, exact multiplication, center membership,
//! the torus-and-character automorphisms, crossed products, invariant
//! projections, and matrix amplifications.

mod amplified;
mod auto;
mod crossed;
mod datum;
mod element;
mod folklore;

pub use amplified::{CycMatrix, MatrixAmplified, ProjectiveAction, ProjectiveActionError};
pub use auto::{AutomorphismError, HeckeAction, HeckeAutomorphism};
pub use crossed::{CrossedProductElement, CrossedProductError};
pub use datum::{Block, RootDatumGL};
pub use element::{sample_element, HeckeElement, HeckeError};
pub use folklore::{folklore_iso_check, FolkloreAlgebra, FolkloreError};
