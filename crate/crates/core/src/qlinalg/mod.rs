//! Exact rational and integer linear algebra.

pub mod integer;
pub mod lattice;
pub mod matrix;
pub mod plucker;
pub mod subspace;

pub use integer::{hnf, hnf_with_transform, snf, IMatrix, Smith};
pub use lattice::{coset_offset, lattice_coset_membership, IntegerLattice};
pub use plucker::{plucker, schubert_equations, sigma_membership, PluckerVector, SchubertForm};
pub use subspace::RationalSubspace;
