//! Exact computation of Dwyer–Fried invariants from characteristic-variety
//! data: Fox calculus on presentations, exponential tangent cones, and
//! membership tests for rational planes against torsion-translated subtori.

pub mod datasets;
pub mod error;
pub mod fox;
pub mod json;
pub mod laurent;
pub mod omega;
pub mod qlinalg;
pub mod rational;
pub mod tcone;
pub mod tori;

pub use error::{Error, Result};
pub use fox::{AlexanderMatrix, FoxComplex, FreeWord, Presentation};
pub use laurent::{CycloLaurentPoly, CyclotomicNumber, LaurentPoly};
pub use omega::{OmegaVerdict, WitnessReport};
pub use qlinalg::{IntegerLattice, PluckerVector, RationalSubspace};
pub use rational::Q;
pub use tcone::{AdmissiblePartition, SubspaceArrangement};
pub use tori::{GradedDescription, TorsionCharacter, TranslatedTorus, VarietyDescription};
