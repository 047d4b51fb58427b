use std::fmt;

use num_bigint::BigInt;

use crate::error::{check_dim, Result};
use crate::qlinalg::lattice::{coset_section, lattice_coset_membership, orthogonal_lattice, IntegerLattice};
use crate::qlinalg::RationalSubspace;
use crate::rational::{frac, Q};

use super::character::TorsionCharacter;

/// The coset `ρ · exp(L ⊗ C)` with `λ` reduced to a canonical representative
/// of `Q^n / (L + Z^n)`, so equal cosets have identical fields.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TranslatedTorus {
    // Field order fixes the derived ordering: subspace first, then translate.
    l: RationalSubspace,
    lambda: TorsionCharacter,
}

/// Canonical representative of `λ` modulo `L + Z^n`.
///
/// `W λ mod Z^k` (rows of `W` spanning `L^⊥ ∩ Z^n`) is a complete invariant of
/// the class; a fixed section of `W` turns it back into a vector.
pub fn canonical_translate(lambda: &[Q], l: &RationalSubspace) -> Result<Vec<Q>> {
    let n = l.ambient_dim();
    check_dim(n, lambda.len())?;
    if l.is_full() {
        return Ok(vec![Q::default(); n]);
    }
    if l.is_zero() {
        return Ok(lambda.iter().map(frac).collect());
    }
    let w = orthogonal_lattice(l);
    let y: Vec<Q> = w
        .iter()
        .map(|row| frac(&row.iter().zip(lambda).map(|(a, x)| Q::from_integer(a.clone()) * x).sum::<Q>()))
        .collect();
    Ok(coset_section(l, &w, &y).iter().map(frac).collect())
}

impl TranslatedTorus {
    pub fn new(lambda: Vec<Q>, l: RationalSubspace) -> Result<Self> {
        let canon = canonical_translate(&lambda, &l)?;
        Ok(TranslatedTorus { l, lambda: TorsionCharacter::new(canon) })
    }

    pub fn from_character(rho: &TorsionCharacter, l: RationalSubspace) -> Result<Self> {
        Self::new(rho.values().to_vec(), l)
    }

    pub fn subtorus(l: RationalSubspace) -> Self {
        let n = l.ambient_dim();
        TranslatedTorus { l, lambda: TorsionCharacter::trivial(n) }
    }

    pub fn point(rho: TorsionCharacter) -> Self {
        let n = rho.ambient_dim();
        TranslatedTorus { l: RationalSubspace::zero(n), lambda: rho }
    }

    pub fn identity(n: usize) -> Self {
        Self::point(TorsionCharacter::trivial(n))
    }

    pub fn full(n: usize) -> Self {
        Self::subtorus(RationalSubspace::full(n))
    }

    pub fn ambient_dim(&self) -> usize {
        self.l.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.l.dim()
    }

    pub fn subspace(&self) -> &RationalSubspace {
        &self.l
    }

    pub fn character(&self) -> &TorsionCharacter {
        &self.lambda
    }

    pub fn lambda(&self) -> &[Q] {
        self.lambda.values()
    }

    /// Whether the coset passes through `1`, i.e. is a genuine subtorus.
    pub fn is_subtorus(&self) -> bool {
        self.lambda.is_trivial()
    }

    pub fn is_point(&self) -> bool {
        self.l.is_zero()
    }

    pub fn is_full(&self) -> bool {
        self.l.is_full()
    }

    /// HNF basis of `L ∩ Z^n`, the exponents of a parametrization `u ↦ ρ u^B`.
    pub fn lattice_basis(&self) -> Vec<Vec<BigInt>> {
        IntegerLattice::saturated(&self.l).basis().clone()
    }

    /// `other ⊆ self` as sets.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        if !self.l.contains(&other.l)? {
            return Ok(false);
        }
        let diff: Vec<Q> = other.lambda().iter().zip(self.lambda()).map(|(a, b)| a - b).collect();
        lattice_coset_membership(&diff, &self.l)
    }

    pub fn contains_point(&self, rho: &TorsionCharacter) -> Result<bool> {
        self.contains(&Self::point(rho.clone()))
    }
}

impl fmt::Display for TranslatedTorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_subtorus() {
            write!(f, "exp({:?})", self.l)
        } else {
            write!(f, "{}·exp({:?})", self.lambda, self.l)
        }
    }
}

impl fmt::Debug for TranslatedTorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
