//! Torsion characters, translated subtori and descriptions of characteristic
//! varieties built from them.

pub mod character;
pub mod combinators;
pub mod description;
pub mod intersect;
pub mod orbifold;
pub mod torus;

pub use character::TorsionCharacter;
pub use combinators::{free_group_description, product_description, pushforward, wedge_description};
pub use description::{GradedDescription, VarietyDescription};
pub use intersect::{intersect_translated, sigma_rho_membership, TorusIntersection};
pub use orbifold::{orbifold_v1, OrbifoldCase, OrbifoldDatum, OrbifoldKind};
pub use torus::{canonical_translate, TranslatedTorus};
