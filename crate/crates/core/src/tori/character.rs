use std::fmt;

use num_bigint::BigInt;

use crate::error::{check_dim, Result};
use crate::rational::{denominator_lcm, format_rational, frac, Q};

/// `ρ = exp(2πiλ)` with `λ ∈ Q^n/Z^n`, stored with entries in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorsionCharacter {
    values: Vec<Q>,
}

impl TorsionCharacter {
    pub fn new(values: Vec<Q>) -> Self {
        TorsionCharacter { values: values.iter().map(frac).collect() }
    }

    pub fn trivial(n: usize) -> Self {
        TorsionCharacter { values: vec![Q::default(); n] }
    }

    pub fn ambient_dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|x| *x == Q::default())
    }

    /// Multiplicative order of `ρ`.
    pub fn order(&self) -> BigInt {
        denominator_lcm(&self.values)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.values.len(), other.values.len())?;
        Ok(Self::new(self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect()))
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.values.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for TorsionCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for TorsionCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ{self}")
    }
}
