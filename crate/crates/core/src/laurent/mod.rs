//! Laurent polynomials over `Q` and over cyclotomic fields.

pub mod cyclotomic;
pub mod parse;
pub mod poly;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicNumber};
pub use parse::parse_laurent;
pub use poly::{Coeff, CycloLaurentPoly, Exponent, Laurent, LaurentPoly};

use crate::error::Result;
use crate::tori::{TorsionCharacter, TranslatedTorus};

/// `f(ρ)` for the torsion character `ρ = exp(2πiλ)`.
pub fn evaluate_at_character<C: Coeff>(f: &Laurent<C>, lambda: &TorsionCharacter) -> Result<CyclotomicNumber> {
    f.evaluate_at(lambda.values())
}

/// `f` pulled back along `u ↦ ρ u^B`, with `B` the HNF basis of `L ∩ Z^n`.
/// It vanishes identically iff `f` vanishes on all of `ρT`.
pub fn restrict_to_translated_torus<C: Coeff>(f: &Laurent<C>, t: &TranslatedTorus) -> Result<CycloLaurentPoly> {
    f.substitute_translated(t.lambda(), &t.lattice_basis())
}
