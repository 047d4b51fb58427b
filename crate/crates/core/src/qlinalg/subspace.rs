use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use super::matrix;
use crate::error::{check_dim, Error, Result};
use crate::rational::{format_rational, primitive_integer_vector, Q};
use num_bigint::BigInt;

/// A linear subspace of `Q^n`, stored by its reduced row-echelon basis.
///
/// The RREF basis is unique, so two values compare equal exactly when they are
/// the same subspace.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalSubspace {
    n: usize,
    basis: Vec<Vec<Q>>,
}

impl RationalSubspace {
    /// Row space of `rows`, each of which must have length `n`.
    pub fn canonicalize(n: usize, rows: &[Vec<Q>]) -> Result<Self> {
        for r in rows {
            check_dim(n, r.len())?;
        }
        let (basis, _) = matrix::rref(rows, n);
        Ok(RationalSubspace { n, basis })
    }

    pub fn from_int_rows(n: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::canonicalize(n, &crate::rational::qmat(rows))
    }

    /// Common zero set of the given linear forms.
    pub fn from_equations(n: usize, equations: &[Vec<Q>]) -> Result<Self> {
        for e in equations {
            check_dim(n, e.len())?;
        }
        Self::canonicalize(n, &matrix::kernel(equations, n))
    }

    /// The coordinate subspace `{x : x_i = 0 for i in zero_coords}` (0-based).
    pub fn coordinate(n: usize, zero_coords: &[usize]) -> Result<Self> {
        let rows: Vec<Vec<Q>> = (0..n)
            .filter(|i| !zero_coords.contains(i))
            .map(|i| unit(n, i))
            .collect();
        Self::canonicalize(n, &rows)
    }

    pub fn zero(n: usize) -> Self {
        RationalSubspace { n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        RationalSubspace { n, basis: (0..n).map(|i| unit(n, i)).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.n - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.n
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("RREF rows are nonzero"))
            .collect()
    }

    /// Basis rows scaled to primitive integer vectors.
    pub fn integer_basis(&self) -> Vec<Vec<BigInt>> {
        self.basis.iter().map(|r| primitive_integer_vector(r)).collect()
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        let rows: Vec<Vec<Q>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::canonicalize(self.n, &rows)
    }

    /// Intersection from the left kernel of the stacked bases:
    /// `a . A + c . B = 0` gives the common vector `a . A`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.n));
        }
        let stacked: Vec<Vec<Q>> = self.basis.iter().chain(&other.basis).cloned().collect();
        let t = matrix::transpose(&stacked, self.n);
        let k = matrix::kernel(&t, stacked.len());
        let da = self.dim();
        let rows: Vec<Vec<Q>> =
            k.iter().map(|c| matrix::vec_mat(&c[..da], &self.basis, self.n)).collect();
        Self::canonicalize(self.n, &rows)
    }

    /// Whether `other` is a subspace of `self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        check_dim(self.n, other.n)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        Ok(other.basis.iter().all(|v| self.contains_vector_unchecked(v)))
    }

    pub fn contains_vector(&self, v: &[Q]) -> Result<bool> {
        check_dim(self.n, v.len())?;
        Ok(self.contains_vector_unchecked(v))
    }

    // Reduce v against the RREF rows; v is in the span iff the residue vanishes.
    fn contains_vector_unchecked(&self, v: &[Q]) -> bool {
        let mut r = v.to_vec();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                *x -= &f * b;
            }
        }
        r.iter().all(Zero::is_zero)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn annihilator(&self) -> Self {
        let k = matrix::kernel(&self.basis, self.n);
        Self::canonicalize(self.n, &k).expect("kernel vectors have ambient length")
    }

    /// `self (+) other` inside `Q^(n + m)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in &self.basis {
            let mut v = r.clone();
            v.resize(n, Q::zero());
            rows.push(v);
        }
        for r in &other.basis {
            let mut v = vec![Q::zero(); self.n];
            v.extend(r.iter().cloned());
            rows.push(v);
        }
        Self::canonicalize(n, &rows).expect("direct sum rows have ambient length")
    }

    /// Image under the row-vector map `x -> x . M`, where `M` has `self.n` rows
    /// of length `target_dim`.
    pub fn map_rows(&self, m: &[Vec<Q>], target_dim: usize) -> Result<Self> {
        check_dim(self.n, m.len())?;
        let rows: Vec<Vec<Q>> =
            self.basis.iter().map(|b| matrix::vec_mat(b, m, target_dim)).collect();
        Self::canonicalize(target_dim, &rows)
    }
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

impl Ord for RationalSubspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.cmp(&other.basis))
    }
}

impl PartialOrd for RationalSubspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RationalSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{}[", self.n)?;
        for (i, r) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let s: Vec<String> = r.iter().map(format_rational).collect();
            write!(f, "({})", s.join(","))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for RationalSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub(crate) fn require_same_ambient(a: &RationalSubspace, b: &RationalSubspace) -> Result<()> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: a.ambient_dim(), found: b.ambient_dim() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qmat};
    use proptest::prelude::*;

    fn sub(n: usize, rows: &[&[i64]]) -> RationalSubspace {
        RationalSubspace::from_int_rows(n, rows).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let a = sub(3, &[&[2, 2, 0]]);
        assert_eq!(a.basis(), &qmat(&[&[1, 1, 0]])[..]);
        assert_eq!(sub(2, &[&[1, 0], &[0, 1], &[1, 1]]), RationalSubspace::full(2));
        let b3 = sub(8, &[&[-1, 1, 0, 0, 1, -1, -2, 2], &[1, 0, 1, 1, 0, 1, 0, 0]]);
        assert_eq!(b3.dim(), 2);
        assert!(RationalSubspace::canonicalize(3, &[vec![q(1)]]).is_err());
    }

    #[test]
    fn sums_and_intersections() {
        let a = RationalSubspace::coordinate(4, &[0, 1]).unwrap();
        let b = RationalSubspace::coordinate(4, &[2, 3]).unwrap();
        assert!(a.intersect(&b).unwrap().is_zero());
        assert!(a.sum(&b).unwrap().is_full());
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersect(&a).unwrap(), a);

        let l = sub(3, &[&[1, 1, 0]]);
        let p = sub(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(l.intersect(&p).unwrap(), l);
        assert_eq!(l.sum(&p).unwrap(), p);
        assert!(p.contains(&l).unwrap());
        assert!(!l.contains(&p).unwrap());
        assert!(a.sum(&RationalSubspace::zero(3)).is_err());
    }

    #[test]
    fn annihilator_is_involutive() {
        let l = sub(4, &[&[1, 2, 0, -1], &[0, 1, 1, 1]]);
        assert_eq!(l.annihilator().annihilator(), l);
        assert_eq!(l.annihilator().dim(), 2);
    }

    fn small_rows(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=n)
    }

    proptest! {
        #[test]
        fn modular_law(a in small_rows(4), b in small_rows(4)) {
            let to_q = |rows: &Vec<Vec<i64>>| rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<Vec<Q>>>();
            let a = RationalSubspace::canonicalize(4, &to_q(&a)).unwrap();
            let b = RationalSubspace::canonicalize(4, &to_q(&b)).unwrap();
            let s = a.sum(&b).unwrap();
            let i = a.intersect(&b).unwrap();
            prop_assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
            prop_assert!(a.contains(&i).unwrap() && b.contains(&i).unwrap());
            // Intersection via complements must agree with the stacked-kernel route.
            let via_perp = a.annihilator().sum(&b.annihilator()).unwrap().annihilator();
            prop_assert_eq!(i, via_perp);
        }

        #[test]
        fn canonical_form_is_basis_independent(rows in small_rows(3), mix in prop::collection::vec(-2i64..=2, 9)) {
            let qrows: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
            let v = RationalSubspace::canonicalize(3, &qrows).unwrap();
            // Another generating set: original rows plus random combinations of them.
            let mut other = qrows.clone();
            for k in 0..3 {
                let mut w = vec![q(0); 3];
                for (i, r) in qrows.iter().enumerate() {
                    let c = q(mix[(3 * k + i) % 9]);
                    for (x, y) in w.iter_mut().zip(r) { *x += &c * y; }
                }
                other.insert(0, w);
            }
            let w = RationalSubspace::canonicalize(3, &other).unwrap();
            prop_assert_eq!(&v, &w);
            prop_assert_eq!(RationalSubspace::canonicalize(3, v.basis()).unwrap(), v);
        }
    }
}
