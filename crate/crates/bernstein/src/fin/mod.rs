//! Finite structures: permutations, finite abelian groups and their duals,
//! integer lattice linear algebra (Smith normal form), 2-cocycles and
//! twisted group algebras.

mod abelian;
mod cocycle;
mod matrix;
mod perm;

pub use abelian::{abelian_quotient_factors, FinAbElement, FinAbGroup};
pub use cocycle::{
    random_cocycle, twisted_algebra_structure, CocycleError, TwistedGroupAlgebra, TwoCocycle,
};
pub use matrix::{integer_kernel, lattice_quotient, snf, IntMatrix, Snf};
pub use perm::{all_permutations, PermError, Permutation};
