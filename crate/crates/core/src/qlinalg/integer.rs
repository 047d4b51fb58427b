//! Hermite and Smith normal forms over the integers.
//!
//! HNF convention: row style, `H = U M` with `U` unimodular. Nonzero rows come
//! first and form an echelon staircase; each pivot is positive and the entries
//! above it are reduced into `[0, pivot)`. This form is unique per row lattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IMatrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> IMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn imat(rows: &[&[i64]]) -> IMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn imat_from_i64(rows: &[Vec<i64>]) -> IMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn itranspose(m: &IMatrix, ncols: usize) -> IMatrix {
    (0..ncols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn imul(a: &IMatrix, b: &IMatrix, inner: usize, ncols: usize) -> IMatrix {
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

// row_i <- row_i - f * row_j
fn row_axpy(m: &mut IMatrix, i: usize, j: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    let src = m[j].clone();
    for (x, s) in m[i].iter_mut().zip(src) {
        *x -= f * s;
    }
}

fn row_negate(m: &mut IMatrix, i: usize) {
    for x in m[i].iter_mut() {
        *x = -x.clone();
    }
}

/// Row Hermite normal form with transform: returns `(H, U)` with `H = U M`.
pub fn hnf_with_transform(m: &IMatrix, ncols: usize) -> (IMatrix, IMatrix) {
    let nrows = m.len();
    let mut h = m.clone();
    let mut u = identity(nrows);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        // Euclid down the column until a single nonzero entry remains at row r.
        loop {
            let best = (r..nrows)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&a, &b| h[a][c].abs().cmp(&h[b][c].abs()));
            let Some(p) = best else { break };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in r + 1..nrows {
                if h[i][c].is_zero() {
                    continue;
                }
                let f = h[i][c].div_floor(&h[r][c]);
                row_axpy(&mut h, i, r, &f);
                row_axpy(&mut u, i, r, &f);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            row_negate(&mut h, r);
            row_negate(&mut u, r);
        }
        for i in 0..r {
            let f = h[i][c].div_floor(&h[r][c]);
            row_axpy(&mut h, i, r, &f);
            row_axpy(&mut u, i, r, &f);
        }
        r += 1;
    }
    (h, u)
}

pub fn hnf(m: &IMatrix, ncols: usize) -> IMatrix {
    hnf_with_transform(m, ncols).0
}

/// Nonzero HNF rows: the canonical basis of the row lattice.
pub fn lattice_basis(m: &IMatrix, ncols: usize) -> IMatrix {
    hnf(m, ncols).into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

/// Canonical (HNF) basis of `{v in Z^ncols : M v = 0}`.
pub fn integer_kernel(m: &IMatrix, ncols: usize) -> IMatrix {
    let t = itranspose(m, ncols);
    let (h, u) = hnf_with_transform(&t, m.len());
    let kernel: IMatrix = h
        .iter()
        .zip(u)
        .filter(|(row, _)| row.iter().all(|x| x.is_zero()))
        .map(|(_, urow)| urow)
        .collect();
    lattice_basis(&kernel, ncols)
}

/// Smith normal form `S = U M V`, diagonal with `d_1 | d_2 | ...`, all `d_i >= 0`.
#[derive(Debug, Clone)]
pub struct Smith {
    pub s: IMatrix,
    pub u: IMatrix,
    pub v: IMatrix,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.s.len().min(self.s.first().map_or(0, |r| r.len()));
        (0..k).map(|i| self.s[i][i].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

fn col_axpy(m: &mut IMatrix, i: usize, j: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        let s = row[j].clone();
        row[i] -= f * s;
    }
}

fn col_swap(m: &mut IMatrix, i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

pub fn snf(m: &IMatrix, ncols: usize) -> Smith {
    let nrows = m.len();
    let mut s = m.clone();
    let mut u = identity(nrows);
    let mut v = identity(ncols);
    let k = nrows.min(ncols);
    for t in 0..k {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..nrows {
                for j in t..ncols {
                    if s[i][j].is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| s[i][j].abs() < s[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish_snf(s, u, v);
            };
            s.swap(t, pi);
            u.swap(t, pi);
            col_swap(&mut s, t, pj);
            col_swap(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..nrows {
                let f = s[i][t].div_floor(&s[t][t]);
                row_axpy(&mut s, i, t, &f);
                row_axpy(&mut u, i, t, &f);
                clean &= s[i][t].is_zero();
            }
            for j in t + 1..ncols {
                let f = s[t][j].div_floor(&s[t][t]);
                col_axpy(&mut s, j, t, &f);
                col_axpy(&mut v, j, t, &f);
                clean &= s[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            let offender = (t + 1..nrows)
                .find(|&i| (t + 1..ncols).any(|j| !s[i][j].is_multiple_of(&s[t][t])));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut s, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[t][t].is_negative() {
            row_negate(&mut s, t);
            row_negate(&mut u, t);
        }
    }
    finish_snf(s, u, v)
}

fn finish_snf(s: IMatrix, u: IMatrix, v: IMatrix) -> Smith {
    Smith { s, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_unimodular(u: &IMatrix) -> bool {
        let q: Vec<Vec<crate::rational::Q>> = u
            .iter()
            .map(|r| r.iter().map(|x| crate::rational::Q::from_integer(x.clone())).collect())
            .collect();
        let d = crate::qlinalg::matrix::det(&q);
        d == crate::rational::q(1) || d == crate::rational::q(-1)
    }

    #[test]
    fn hnf_of_identity_is_identity() {
        let i = identity(3);
        let (h, u) = hnf_with_transform(&i, 3);
        assert_eq!(h, i);
        assert_eq!(u, i);
    }

    #[test]
    fn hnf_shape_and_transform() {
        let m = imat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let (h, u) = hnf_with_transform(&m, 3);
        assert_eq!(imul(&u, &m, 3, 3), h);
        assert!(is_unimodular(&u));
        assert_eq!(h, imat(&[&[2, 4, 4], &[0, 6, 0], &[0, 0, 12]]));
    }

    #[test]
    fn snf_examples() {
        let m = imat(&[&[2, 4], &[6, 8]]);
        let sm = snf(&m, 2);
        assert_eq!(sm.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        let prod = imul(&imul(&sm.u, &m, 2, 2), &sm.v, 2, 2);
        assert_eq!(prod, sm.s);
        assert!(is_unimodular(&sm.u) && is_unimodular(&sm.v));

        let z = snf(&imat(&[&[0]]), 1);
        assert_eq!(z.diagonal(), vec![BigInt::from(0)]);
    }

    #[test]
    fn snf_divisibility_chain() {
        // diag(4, 6) is not in Smith form; its invariants are (2, 12).
        let m = imat(&[&[4, 0], &[0, 6]]);
        assert_eq!(snf(&m, 2).diagonal(), vec![BigInt::from(2), BigInt::from(12)]);
        let r = imat(&[&[2, 0], &[0, 2], &[1, 1]]);
        assert_eq!(snf(&r, 2).diagonal(), vec![BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn integer_kernel_is_saturated() {
        // 2x - 4y = 0 has kernel generated by (2, 1), not (4, 2).
        let k = integer_kernel(&imat(&[&[2, -4]]), 2);
        assert_eq!(k, imat(&[&[2, 1]]));
        let k = integer_kernel(&imat(&[&[0, 0, 0]]), 3);
        assert_eq!(k, identity(3));
    }
}
