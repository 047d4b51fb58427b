//! Fox derivatives pushed through the abelianization, and Alexander matrices.

use super::abelian::{abelianize, Abelianization};
use super::parse::Presentation;
use super::word::FreeWord;
use crate::laurent::LaurentPoly;
use crate::rational::Q;
use num_traits::One;

/// `α(∂w/∂x_j)` with the left convention `∂(uv) = ∂u + u ∂v`.
pub fn fox_derivative_abelianized(w: &FreeWord, j: usize, alpha: &Abelianization) -> LaurentPoly {
    let n = alpha.free_rank();
    let mut out = LaurentPoly::zero(n);
    let mut prefix = vec![0i64; n];
    for &(g, e) in w.syllables() {
        let step = alpha.image(g);
        if g == j {
            // x^e contributes Σ_{k=0}^{e-1} x^k for e > 0 and -Σ_{k=e}^{-1} x^k for e < 0.
            let (range, sign) = if e > 0 { (0..e, Q::one()) } else { (e..0, -Q::one()) };
            for k in range {
                let exp: Vec<i64> = prefix.iter().zip(step).map(|(p, s)| p + k * s).collect();
                out = out.add(&LaurentPoly::monomial(exp, sign.clone())).expect("same ring");
            }
        }
        for (p, s) in prefix.iter_mut().zip(step) {
            *p += e * s;
        }
    }
    out
}

/// `α(w)` as a monomial exponent.
pub fn abelian_image(w: &FreeWord, alpha: &Abelianization) -> Vec<i64> {
    let mut v = vec![0i64; alpha.free_rank()];
    for &(g, e) in w.syllables() {
        for (x, s) in v.iter_mut().zip(alpha.image(g)) {
            *x += e * s;
        }
    }
    v
}

/// The `m × q` matrix `α(∂r_i/∂x_j)` in `n = b_1` variables.
#[derive(Debug, Clone, PartialEq)]
pub struct AlexanderMatrix {
    nvars: usize,
    ncols: usize,
    rows: Vec<Vec<LaurentPoly>>,
}

impl AlexanderMatrix {
    pub fn new(nvars: usize, ncols: usize, rows: Vec<Vec<LaurentPoly>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols && r.iter().all(|p| p.nvars() == nvars)));
        AlexanderMatrix { nvars, ncols, rows }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.rows[i][j]
    }
}

pub fn alexander_matrix(p: &Presentation) -> AlexanderMatrix {
    alexander_matrix_with(p, &abelianize(p))
}

pub fn alexander_matrix_with(p: &Presentation, alpha: &Abelianization) -> AlexanderMatrix {
    let q = p.num_generators();
    let rows = p
        .relators()
        .iter()
        .map(|r| (0..q).map(|j| fox_derivative_abelianized(r, j, alpha)).collect())
        .collect();
    AlexanderMatrix::new(alpha.free_rank(), q, rows)
}

/// The column `t^{α(x_j)} - 1` of the boundary `∂_1`.
pub fn boundary_one(alpha: &Abelianization) -> Vec<LaurentPoly> {
    let n = alpha.free_rank();
    (0..alpha.num_generators())
        .map(|j| {
            LaurentPoly::monomial(alpha.image(j).to_vec(), Q::one()).sub(&LaurentPoly::one(n)).expect("same ring")
        })
        .collect()
}

/// `Σ_j M_ij (t^{α(x_j)} - 1)` for each row; all zero by the fundamental formula.
pub fn fundamental_identity_residuals(m: &AlexanderMatrix, alpha: &Abelianization) -> Vec<LaurentPoly> {
    let d1 = boundary_one(alpha);
    m.rows()
        .iter()
        .map(|row| {
            row.iter()
                .zip(&d1)
                .fold(LaurentPoly::zero(m.nvars()), |acc, (a, b)| acc.add(&a.mul(b).expect("same ring")).expect("same ring"))
        })
        .collect()
}
