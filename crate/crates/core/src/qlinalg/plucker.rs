//! Plücker coordinates of rational planes and the linear equations of
//! special Schubert varieties `σ_r(L) = {P : P ∩ L ≠ 0}`.

use itertools::Itertools;
use num_traits::{One, Zero};

use super::matrix;
use super::subspace::{require_same_ambient, RationalSubspace};
use crate::error::{Error, Result};
use crate::rational::Q;

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(r).collect()
}

pub fn subset_index(n: usize, r: usize, subset: &[usize]) -> Option<usize> {
    subsets(n, r).iter().position(|s| s == subset)
}

/// Projective Plücker vector, normalized so its first nonzero entry is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerVector {
    r: usize,
    n: usize,
    coords: Vec<Q>,
}

impl PluckerVector {
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    /// Coordinate at a sorted 0-based subset.
    pub fn coord(&self, subset: &[usize]) -> Q {
        subset_index(self.n, self.r, subset).map(|i| self.coords[i].clone()).unwrap_or_else(Q::zero)
    }

    /// Alternating extension of the coordinates to arbitrary index sequences.
    fn signed(&self, seq: &[usize]) -> Q {
        let mut s = seq.to_vec();
        let mut sign = 1;
        for i in 0..s.len() {
            for j in 0..s.len() - 1 - i {
                if s[j] == s[j + 1] {
                    return Q::zero();
                }
                if s[j] > s[j + 1] {
                    s.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Q::zero();
        }
        let c = self.coord(&s);
        if sign < 0 {
            -c
        } else {
            c
        }
    }

    /// Values of every Grassmann–Plücker relation
    /// `Σ_l (-1)^l p(I, j_l) p(J \ j_l)` with `|I| = r-1`, `|J| = r+1`.
    pub fn relation_residuals(&self) -> Vec<Q> {
        let (r, n) = (self.r, self.n);
        if r == 0 || r >= n {
            return Vec::new();
        }
        let mut out = Vec::new();
        for i_set in (0..n).combinations(r - 1) {
            for j_set in (0..n).combinations(r + 1) {
                let mut acc = Q::zero();
                for l in 0..j_set.len() {
                    let mut left = i_set.clone();
                    left.push(j_set[l]);
                    let right: Vec<usize> =
                        j_set.iter().enumerate().filter(|&(k, _)| k != l).map(|(_, &x)| x).collect();
                    let term = self.signed(&left) * self.signed(&right);
                    if l % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                out.push(acc);
            }
        }
        out
    }

    /// Rescale so that coordinate `idx` equals one (`None` if it vanishes).
    pub fn in_chart(&self, idx: usize) -> Option<Vec<Q>> {
        let c = self.coords.get(idx)?;
        if c.is_zero() {
            return None;
        }
        Some(self.coords.iter().map(|x| x / c).collect())
    }

    pub fn first_nonzero(&self) -> usize {
        self.coords.iter().position(|x| !x.is_zero()).expect("Plücker vectors are nonzero")
    }
}

/// `r x r` minors of an `r`-row matrix over all sorted column subsets.
pub fn maximal_minors(rows: &[Vec<Q>], n: usize) -> Vec<Q> {
    let r = rows.len();
    subsets(n, r)
        .iter()
        .map(|cols| {
            let sq: Vec<Vec<Q>> =
                rows.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
            matrix::det(&sq)
        })
        .collect()
}

pub fn plucker(p: &RationalSubspace) -> Result<PluckerVector> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("the zero subspace has no Plücker coordinates".into()));
    }
    let minors = maximal_minors(p.basis(), p.ambient_dim());
    let lead = minors.iter().find(|x| !x.is_zero()).cloned().expect("independent rows");
    let coords = minors.iter().map(|x| x / &lead).collect();
    Ok(PluckerVector { r: p.dim(), n: p.ambient_dim(), coords })
}

/// A linear form in the Plücker coordinates of `r`-planes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertForm {
    /// Columns of the maximal minor of `[L; P]` this form expands.
    pub minor_columns: Vec<usize>,
    /// Coefficient of `p_I`, indexed like [`subsets`]`(n, r)`.
    pub coeffs: Vec<Q>,
}

impl SchubertForm {
    pub fn evaluate(&self, p: &PluckerVector) -> Q {
        self.coeffs.iter().zip(p.coords()).map(|(a, b)| a * b).sum()
    }

    /// Human-readable form such as `p12 - 2*p34` (1-based indices).
    pub fn to_text(&self, n: usize, r: usize) -> String {
        let names: Vec<String> = subsets(n, r)
            .iter()
            .map(|s| {
                let sep = if n > 9 { "," } else { "" };
                format!("p{}", s.iter().map(|i| (i + 1).to_string()).join(sep))
            })
            .collect();
        let mut out = String::new();
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                out.push_str(&crate::rational::format_rational(&a));
                out.push('*');
            }
            out.push_str(&name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Linear equations cutting out `σ_r(L)` in Plücker coordinates.
///
/// Each nonzero form is the Laplace expansion, along the rows of `P`, of one
/// maximal minor of the stacked matrix `[L; P]`. When `dim L + r > n` every
/// `r`-plane meets `L` and the list is empty.
pub fn schubert_equations(l: &RationalSubspace, r: usize) -> Result<Vec<SchubertForm>> {
    let n = l.ambient_dim();
    if r == 0 || r > n {
        return Err(Error::InvalidArgument(format!("plane dimension {r} outside 1..={n}")));
    }
    if l.is_zero() {
        return Err(Error::InvalidArgument("Schubert conditions need a nonzero subspace".into()));
    }
    let s = l.dim();
    if s + r > n {
        return Ok(Vec::new());
    }
    let index = subsets(n, r);
    let mut forms = Vec::new();
    for k in (0..n).combinations(s + r) {
        let mut coeffs = vec![Q::zero(); index.len()];
        for pos in (0..s + r).combinations(r) {
            let i_cols: Vec<usize> = pos.iter().map(|&p| k[p]).collect();
            let rest: Vec<usize> = (0..s + r).filter(|p| !pos.contains(p)).map(|p| k[p]).collect();
            let sq: Vec<Vec<Q>> =
                l.basis().iter().map(|row| rest.iter().map(|&c| row[c].clone()).collect()).collect();
            let minor = matrix::det(&sq);
            if minor.is_zero() {
                continue;
            }
            // P occupies rows s+1..s+r of the stacked minor (1-based).
            let row_sum: usize = (s + 1..=s + r).sum();
            let col_sum: usize = pos.iter().map(|p| p + 1).sum();
            let signed = if (row_sum + col_sum) % 2 == 0 { minor } else { -minor };
            let idx = index.iter().position(|x| *x == i_cols).expect("subset present");
            coeffs[idx] += signed;
        }
        if coeffs.iter().any(|c| !c.is_zero()) {
            forms.push(SchubertForm { minor_columns: k, coeffs });
        }
    }
    Ok(forms)
}

/// `P ∈ σ_r(L)`, i.e. `P ∩ L ≠ {0}`.
pub fn sigma_membership(p: &RationalSubspace, l: &RationalSubspace) -> Result<bool> {
    require_same_ambient(p, l)?;
    Ok(!p.intersect(l)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qvec};

    fn sub(n: usize, rows: &[&[i64]]) -> RationalSubspace {
        RationalSubspace::from_int_rows(n, rows).unwrap()
    }

    #[test]
    fn coordinate_plane() {
        let p = sub(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let v = plucker(&p).unwrap();
        assert_eq!(v.coords(), &qvec(&[1, 0, 0, 0, 0, 0])[..]);
    }

    #[test]
    fn hand_computed_minors() {
        // Subset order: 12, 13, 14, 23, 24, 34.
        let p = sub(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
        let v = plucker(&p).unwrap();
        assert_eq!(v.coords(), &qvec(&[1, 0, 1, -1, 0, 1])[..]);
        let c = v.coords();
        // p12 p34 - p13 p24 + p23 p14 = 0 (subset order 12,13,14,23,24,34).
        assert_eq!(&c[0] * &c[5] - &c[1] * &c[4] + &c[3] * &c[2], q(0));
        assert!(v.relation_residuals().iter().all(|x| x == &q(0)));
    }

    #[test]
    fn generic_line_form_matches_laplace_pattern() {
        let l = sub(4, &[&[1, 2, 3, 5], &[0, 1, 7, 2]]);
        let forms = schubert_equations(&l, 2).unwrap();
        assert_eq!(forms.len(), 1);
        let lm = maximal_minors(l.basis(), 4); // L12 L13 L14 L23 L24 L34
        let expected = vec![
            lm[5].clone(),
            -lm[4].clone(),
            lm[3].clone(),
            lm[2].clone(),
            -lm[1].clone(),
            lm[0].clone(),
        ];
        // coefficient order 12,13,14,23,24,34 vs L34 p12 - L24 p13 + L23 p14 + L14 p23 - L13 p24 + L12 p34
        assert_eq!(forms[0].coeffs, expected);
    }

    #[test]
    fn coordinate_l_gives_single_coordinate() {
        let l = sub(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let forms = schubert_equations(&l, 2).unwrap();
        assert_eq!(forms.len(), 1);
        assert_eq!(forms[0].to_text(4, 2), "p34");
    }

    #[test]
    fn sigma_examples() {
        let l = sub(4, &[&[1, 1, 0, 2]]);
        assert!(sigma_membership(&l, &l).unwrap());
        let p = RationalSubspace::coordinate(4, &[0, 1]).unwrap();
        let l1 = RationalSubspace::coordinate(4, &[2, 3]).unwrap();
        assert!(!sigma_membership(&p, &l1).unwrap());
        assert!(schubert_equations(&l1, 5).is_err());
        assert!(schubert_equations(&RationalSubspace::zero(4), 2).is_err());
        // dim L + r > n: everything meets L.
        assert!(schubert_equations(&sub(3, &[&[1, 0, 0], &[0, 1, 0]]), 2).unwrap().is_empty());
    }
}
