//! Exact ranks of Alexander matrices at torsion characters and at generic
//! points of translated subtori, and the depth-one membership tests built on them.

use super::abelian::{abelianize, Abelianization};
use super::calculus::{alexander_matrix_with, boundary_one, AlexanderMatrix};
use super::parse::Presentation;
use crate::error::{check_dim, Error, Result};
use crate::laurent::{Coeff, CyclotomicNumber, Laurent};
use crate::tori::{TorsionCharacter, TranslatedTorus};

/// Rank over `Q(ζ_m)` by Gaussian elimination.
pub fn cyclotomic_rank(mut a: Vec<Vec<CyclotomicNumber>>) -> usize {
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].inv().expect("nonzero pivot");
        let pivot_row: Vec<CyclotomicNumber> = a[rank].iter().map(|x| x.mul(&inv)).collect();
        for row in a.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = x.sub(&f.mul(y));
            }
        }
        a[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Rank over the fraction field of a Laurent ring, by fraction-free Bareiss
/// elimination with full pivoting. Every intermediate entry is a minor of the
/// input, so each division is exact.
pub fn bareiss_rank<C: Coeff>(mut a: Vec<Vec<Laurent<C>>>) -> Result<usize> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let Some(nvars) = a.first().and_then(|r| r.first()).map(Laurent::nvars) else {
        return Ok(0);
    };
    let mut prev = Laurent::<C>::one(nvars);
    let mut rank = 0;
    for k in 0..m.min(n) {
        let pivot = (k..m)
            .flat_map(|i| (k..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| (a[i][j].len(), i, j));
        let Some((pi, pj)) = pivot else {
            break;
        };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        for i in k + 1..m {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j])?.sub(&a[i][k].mul(&a[k][j])?)?;
                a[i][j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Internal("Bareiss step produced an inexact division".into()))?;
            }
            a[i][k] = Laurent::zero(nvars);
        }
        prev = a[k][k].clone();
        rank += 1;
    }
    Ok(rank)
}

pub fn rank_at_character(m: &AlexanderMatrix, lambda: &TorsionCharacter) -> Result<usize> {
    check_dim(m.nvars(), lambda.ambient_dim())?;
    let rows = m
        .rows()
        .iter()
        .map(|row| row.iter().map(|p| p.evaluate_at(lambda.values())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(cyclotomic_rank(rows))
}

/// Rank at a generic point of `ρT`.
pub fn generic_rank_on_torus(m: &AlexanderMatrix, t: &TranslatedTorus) -> Result<usize> {
    check_dim(m.nvars(), t.ambient_dim())?;
    let basis = t.lattice_basis();
    let rows = m
        .rows()
        .iter()
        .map(|row| row.iter().map(|p| p.substitute_translated(t.lambda(), &basis)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    bareiss_rank(rows)
}

/// Presentation data reused across membership queries.
#[derive(Debug, Clone)]
pub struct FoxComplex {
    presentation: Presentation,
    alpha: Abelianization,
    matrix: AlexanderMatrix,
}

impl FoxComplex {
    pub fn new(presentation: Presentation) -> Self {
        let alpha = abelianize(&presentation);
        let matrix = alexander_matrix_with(&presentation, &alpha);
        FoxComplex { presentation, alpha, matrix }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn abelianization(&self) -> &Abelianization {
        &self.alpha
    }

    pub fn alexander(&self) -> &AlexanderMatrix {
        &self.matrix
    }

    fn q(&self) -> usize {
        self.presentation.num_generators()
    }

    /// `ρ ∈ W^1(G)` iff `rank ∂_2(ρ) + rank ∂_1(ρ) <= q - 1`.
    pub fn depth1_membership(&self, lambda: &TorsionCharacter) -> Result<bool> {
        let r2 = rank_at_character(&self.matrix, lambda)?;
        let d1 = boundary_one(&self.alpha)
            .iter()
            .map(|p| p.evaluate_at(lambda.values()))
            .collect::<Result<Vec<_>>>()?;
        let r1 = usize::from(d1.iter().any(|x| !x.is_zero()));
        Ok(r2 + r1 < self.q())
    }

    /// Generic containment `ρT ⊆ W^1(G)`: the rank condition at a generic point
    /// of `ρT`. Since `W^1` is Zariski closed this is full containment.
    pub fn contains_translated_torus(&self, t: &TranslatedTorus) -> Result<bool> {
        let r2 = generic_rank_on_torus(&self.matrix, t)?;
        let basis = t.lattice_basis();
        let d1 = boundary_one(&self.alpha)
            .iter()
            .map(|p| p.substitute_translated(t.lambda(), &basis))
            .collect::<Result<Vec<_>>>()?;
        let r1 = usize::from(d1.iter().any(|x| !x.is_zero()));
        Ok(r2 + r1 < self.q())
    }
}

pub fn depth1_membership(p: &Presentation, lambda: &TorsionCharacter) -> Result<bool> {
    FoxComplex::new(p.clone()).depth1_membership(lambda)
}

pub fn contains_translated_torus(p: &Presentation, t: &TranslatedTorus) -> Result<bool> {
    FoxComplex::new(p.clone()).contains_translated_torus(t)
}
