//! Freely reduced words in syllable form.

use std::fmt;

/// How `[u, v]` expands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CommutatorConvention {
    /// `[u, v] = v u v^-1 u^-1`; reproduces the displayed Alexander matrix of
    /// the closed-form example verbatim under the left Fox convention.
    #[default]
    VUVinvUinv,
    /// `[u, v] = u v u^-1 v^-1`.
    UVUinvVinv,
}

/// A word as `(generator, exponent)` syllables; adjacent generators differ and
/// exponents are nonzero. Generators are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<(usize, i64)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(g: usize) -> Self {
        Self::letter(g, 1)
    }

    pub fn letter(g: usize, e: i64) -> Self {
        Self::from_syllables([(g, e)])
    }

    pub fn from_syllables(s: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = FreeWord::identity();
        for (g, e) in s {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((g, e));
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn num_syllables(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Total letter length `Σ |e|`.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Self {
        FreeWord { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(FreeWord::identity(), |acc, _| acc.mul(&base))
    }

    /// `u^w = w^-1 u w`.
    pub fn conjugate_by(&self, w: &Self) -> Self {
        w.inverse().mul(self).mul(w)
    }

    pub fn commutator(u: &Self, v: &Self, conv: CommutatorConvention) -> Self {
        match conv {
            CommutatorConvention::VUVinvUinv => v.mul(u).mul(&v.inverse()).mul(&u.inverse()),
            CommutatorConvention::UVUinvVinv => u.mul(v).mul(&u.inverse()).mul(&v.inverse()),
        }
    }

    /// Exponent sum of each of the first `q` generators.
    pub fn exponent_sums(&self, q: usize) -> Vec<i64> {
        let mut v = vec![0; q];
        for &(g, e) in &self.letters {
            v[g] += e;
        }
        v
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.0).max()
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { w: self, names }
    }
}

struct WordDisplay<'a> {
    w: &'a FreeWord,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.w.is_identity() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.w.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let name = self.names.get(g).cloned().unwrap_or_else(|| format!("x{}", g + 1));
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}
