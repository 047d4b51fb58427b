//! Characteristic varieties of orbifold fundamental groups, as abstract data
//! to be pulled back along an orbifold fibration.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::qlinalg::integer::{snf, IMatrix};

use super::character::TorsionCharacter;
use super::combinators::pushforward;
use super::description::VarietyDescription;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbifoldKind {
    /// `Σ_g` with marked points.
    Compact,
    /// `Σ_{g,s}`, `s >= 1` punctures, with marked points.
    Punctured,
}

/// Which branch of the `V^1` formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbifoldCase {
    /// `V^1 = Γ̂`.
    Full,
    /// `V^1 = (Γ̂ ∖ Γ̂°) ∪ {1}`.
    OffIdentityPlusOne,
    /// `V^1 = {1}`.
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbifoldDatum {
    pub kind: OrbifoldKind,
    pub free_rank: usize,
    /// Invariant factors of `Tors(Γ_ab)`.
    pub torsion: Vec<BigInt>,
    pub case: OrbifoldCase,
}

fn invariant_factors(rows: IMatrix, ncols: usize) -> Vec<BigInt> {
    if rows.is_empty() || ncols == 0 {
        return Vec::new();
    }
    snf(&rows, ncols).diagonal().into_iter().filter(|d| *d > BigInt::one()).collect()
}

pub fn orbifold_v1(kind: OrbifoldKind, g: usize, s: usize, m: &[u64]) -> Result<OrbifoldDatum> {
    if let Some(bad) = m.iter().find(|&&x| x < 2) {
        return Err(Error::InvalidArgument(format!("orbifold weights must be at least 2, got {bad}")));
    }
    let t = m.len();
    let diag = |extra: bool| {
        let mut rows: IMatrix = (0..t)
            .map(|i| (0..t).map(|j| if i == j { BigInt::from(m[i]) } else { BigInt::from(0) }).collect())
            .collect();
        if extra {
            rows.push(vec![BigInt::one(); t]);
        }
        rows
    };
    match kind {
        OrbifoldKind::Compact => {
            if s != 0 || g < 1 {
                return Err(Error::InvalidArgument("compact orbifolds need s = 0 and g >= 1".into()));
            }
            let case = if g >= 2 {
                OrbifoldCase::Full
            } else if t > 1 {
                OrbifoldCase::OffIdentityPlusOne
            } else {
                OrbifoldCase::Trivial
            };
            Ok(OrbifoldDatum { kind, free_rank: 2 * g, torsion: invariant_factors(diag(true), t), case })
        }
        OrbifoldKind::Punctured => {
            if s < 1 {
                return Err(Error::InvalidArgument("punctured orbifolds need s >= 1".into()));
            }
            let n = 2 * g + s - 1;
            let case = match n {
                0 => return Err(Error::InvalidArgument("Σ_{0,1} has free rank 0; no formula applies".into())),
                1 if t > 0 => OrbifoldCase::OffIdentityPlusOne,
                1 => OrbifoldCase::Trivial,
                _ => OrbifoldCase::Full,
            };
            Ok(OrbifoldDatum { kind, free_rank: n, torsion: invariant_factors(diag(false), t), case })
        }
    }
}

impl OrbifoldDatum {
    /// The pullback of `V^1(Γ)` to `Ĝ°` along a fibration whose map on free
    /// abelianizations is `phi` (`free_rank × n`), given the images in `Ĝ°` of
    /// the nontrivial characters of the torsion part.
    pub fn materialize(
        &self,
        phi: &[Vec<BigInt>],
        n: usize,
        nontrivial_torsion_images: &[TorsionCharacter],
    ) -> Result<VarietyDescription> {
        let k = self.free_rank;
        let whole = VarietyDescription::full(k);
        let trivial = TorsionCharacter::trivial(n);
        match self.case {
            OrbifoldCase::Full => {
                let mut taus = vec![trivial];
                taus.extend(nontrivial_torsion_images.iter().cloned());
                pushforward(&whole, phi, n, &taus)
            }
            OrbifoldCase::OffIdentityPlusOne => {
                let translated = if nontrivial_torsion_images.is_empty() {
                    VarietyDescription::empty(n)
                } else {
                    pushforward(&whole, phi, n, nontrivial_torsion_images)?
                };
                translated.union(&VarietyDescription::identity(n))
            }
            OrbifoldCase::Trivial => Ok(VarietyDescription::identity(n)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    #[test]
    fn compact_cases() {
        let a = orbifold_v1(OrbifoldKind::Compact, 2, 0, &[]).unwrap();
        assert_eq!((a.free_rank, a.case), (4, OrbifoldCase::Full));
        assert!(a.torsion.is_empty());
        let b = orbifold_v1(OrbifoldKind::Compact, 1, 0, &[2, 2]).unwrap();
        assert_eq!(b.case, OrbifoldCase::OffIdentityPlusOne);
        assert_eq!(b.torsion, vec![BigInt::from(2)]);
        let c = orbifold_v1(OrbifoldKind::Compact, 1, 0, &[3]).unwrap();
        assert_eq!(c.case, OrbifoldCase::Trivial);
        assert!(c.torsion.is_empty());
        // Z_2 ⊕ Z_4 ⊕ Z_6 / (1,1,1) has order 48 / 12 = 4.
        let d = orbifold_v1(OrbifoldKind::Compact, 1, 0, &[2, 4, 6]).unwrap();
        let order: BigInt = d.torsion.iter().product();
        assert_eq!(order, BigInt::from(4));
        assert!(orbifold_v1(OrbifoldKind::Compact, 0, 0, &[]).is_err());
        assert!(orbifold_v1(OrbifoldKind::Compact, 1, 0, &[1]).is_err());
    }

    #[test]
    fn punctured_cases() {
        let a = orbifold_v1(OrbifoldKind::Punctured, 0, 2, &[]).unwrap();
        assert_eq!((a.free_rank, a.case), (1, OrbifoldCase::Trivial));
        let b = orbifold_v1(OrbifoldKind::Punctured, 0, 2, &[3]).unwrap();
        assert_eq!(b.case, OrbifoldCase::OffIdentityPlusOne);
        let c = orbifold_v1(OrbifoldKind::Punctured, 1, 1, &[]).unwrap();
        assert_eq!((c.free_rank, c.case), (2, OrbifoldCase::Full));
        assert!(orbifold_v1(OrbifoldKind::Punctured, 0, 1, &[]).is_err());
    }

    #[test]
    fn materialize_one_torus_example() {
        // Z * Z_2 → the line {t2 = 1} direction plus its translate by (1,-1).
        let d = orbifold_v1(OrbifoldKind::Punctured, 0, 2, &[2]).unwrap();
        let phi = vec![vec![BigInt::from(1), BigInt::from(0)]];
        let w = d.materialize(&phi, 2, &[TorsionCharacter::new(vec![q(0), qr(1, 2)])]).unwrap();
        assert_eq!(w.components().len(), 2);
        assert!(w.contains_identity());
        assert!(!w.is_finite());
    }
}
