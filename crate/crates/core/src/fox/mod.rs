//! Presentations, Fox calculus and depth-one jump loci.

pub mod abelian;
pub mod calculus;
pub mod parse;
pub mod rank;
pub mod word;

pub use abelian::{abelianize, Abelianization};
pub use calculus::{alexander_matrix, fox_derivative_abelianized, fundamental_identity_residuals, AlexanderMatrix};
pub use parse::{parse_presentation, parse_presentation_with, Presentation};
pub use rank::{
    bareiss_rank, contains_translated_torus, depth1_membership, generic_rank_on_torus, rank_at_character, FoxComplex,
};
pub use word::{CommutatorConvention, FreeWord};
