//! Dense Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::rational::Q;

/// Reduced row-echelon form of `rows` (each of length `ncols`).
///
/// Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<Q>], ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : row . x = 0 for every row}`, one vector per free column.
pub fn kernel(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(rows, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn transpose<T: Clone>(rows: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    (0..ncols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect()
}

/// One solution `x` of `A x = b`, if any.
pub fn solve(a: &[Vec<Q>], b: &[Q], ncols: usize) -> Option<Vec<Q>> {
    let aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Coefficients `c` with `sum_i c_i rows_i = target`, if the target lies in the row span.
pub fn row_combination(rows: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let ncols = target.len();
    let t = transpose(rows, ncols);
    solve(&t, target, rows.len())
}

pub fn det(square: &[Vec<Q>]) -> Q {
    let n = square.len();
    let mut m = square.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        let inv = Q::one() / &m[c][c];
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                let v = &f * &m[c][j];
                m[i][j] -= v;
            }
        }
    }
    d
}

/// Row vector times matrix: `v . M`.
pub fn vec_mat(v: &[Q], m: &[Vec<Q>], ncols: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); ncols];
    for (vi, row) in v.iter().zip(m) {
        if vi.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            *o += vi * x;
        }
    }
    out
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qmat, qr};

    #[test]
    fn rref_scales_and_clears() {
        let (r, p) = rref(&qmat(&[&[2, 2, 0]]), 3);
        assert_eq!(r, qmat(&[&[1, 1, 0]]));
        assert_eq!(p, vec![0]);
        let (r, p) = rref(&qmat(&[&[1, 0], &[0, 1], &[1, 1]]), 2);
        assert_eq!(r, qmat(&[&[1, 0], &[0, 1]]));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = qmat(&[&[1, 2, 3], &[2, 4, 7]]);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 1);
        for row in &m {
            assert!(dot(row, &k[0]).is_zero());
        }
    }

    #[test]
    fn determinant_and_solve() {
        assert_eq!(det(&qmat(&[&[2, 1], &[4, 3]])), q(2));
        assert_eq!(det(&qmat(&[&[0, 1], &[1, 0]])), q(-1));
        let x = solve(&qmat(&[&[2, 0], &[0, 3]]), &[q(1), q(1)], 2).unwrap();
        assert_eq!(x, vec![qr(1, 2), qr(1, 3)]);
        assert!(solve(&qmat(&[&[1, 1], &[1, 1]]), &[q(0), q(1)], 2).is_none());
    }
}
