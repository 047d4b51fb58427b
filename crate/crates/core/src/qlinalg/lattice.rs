//! Integer lattices and the coset test `lambda in L + Z^n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::integer::{self, IMatrix};
use super::subspace::RationalSubspace;
use crate::error::{check_dim, Result};
use crate::rational::{is_integral, Q};

/// A lattice in `Z^n` stored by its Hermite normal form basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    n: usize,
    basis: IMatrix,
}

impl IntegerLattice {
    pub fn from_generators(n: usize, gens: &IMatrix) -> Result<Self> {
        for g in gens {
            check_dim(n, g.len())?;
        }
        Ok(IntegerLattice { n, basis: integer::lattice_basis(gens, n) })
    }

    /// The saturated lattice `L ∩ Z^n`.
    pub fn saturated(l: &RationalSubspace) -> Self {
        let n = l.ambient_dim();
        if l.is_full() {
            return IntegerLattice { n, basis: integer::identity(n) };
        }
        let w = orthogonal_lattice(l);
        IntegerLattice { n, basis: integer::integer_kernel(&w, n) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &IMatrix {
        &self.basis
    }

    /// Integer coordinates of `v` in the HNF basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<BigInt>> {
        coordinates_in_hnf(&self.basis, v)
    }

    pub fn contains(&self, v: &[Q]) -> Result<bool> {
        check_dim(self.n, v.len())?;
        Ok(self.coordinates(v).is_some())
    }
}

// Back-substitution through an HNF staircase.
fn coordinates_in_hnf(h: &IMatrix, v: &[Q]) -> Option<Vec<BigInt>> {
    let mut residual = v.to_vec();
    let mut coords = Vec::with_capacity(h.len());
    for row in h {
        let p = row.iter().position(|x| !x.is_zero())?;
        let c = &residual[p] / Q::from_integer(row[p].clone());
        if !is_integral(&c) {
            return None;
        }
        let c = c.to_integer();
        for (r, x) in residual.iter_mut().zip(row) {
            *r -= Q::from_integer(&c * x);
        }
        coords.push(c);
    }
    residual.iter().all(Zero::is_zero).then_some(coords)
}

/// A basis of the saturated lattice `L^⊥ ∩ Z^n`, in HNF.
pub fn orthogonal_lattice(l: &RationalSubspace) -> IMatrix {
    let n = l.ambient_dim();
    if l.is_zero() {
        return integer::identity(n);
    }
    integer::integer_kernel(&l.integer_basis(), n)
}

/// An integer vector `z` with `lambda - z ∈ L`, if one exists.
///
/// With `W` spanning `L^⊥ ∩ Z^n`, `lambda ∈ L + Z^n` iff `W lambda` lies in the
/// image lattice `W Z^n`; the HNF transform of `W^T` turns lattice coordinates
/// back into a preimage `z`.
pub fn coset_offset(lambda: &[Q], l: &RationalSubspace) -> Result<Option<Vec<BigInt>>> {
    let n = l.ambient_dim();
    check_dim(n, lambda.len())?;
    if l.is_full() {
        return Ok(Some(vec![BigInt::zero(); n]));
    }
    let w = orthogonal_lattice(l);
    let target: Vec<Q> = w
        .iter()
        .map(|row| row.iter().zip(lambda).map(|(a, x)| Q::from_integer(a.clone()) * x).sum())
        .collect();
    let wt = integer::itranspose(&w, n);
    let (h, u) = integer::hnf_with_transform(&wt, w.len());
    let nonzero: IMatrix = h.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let Some(c) = coordinates_in_hnf(&nonzero, &target) else {
        return Ok(None);
    };
    // z = (c . U)^T, padding c with zeros for the zero rows of H.
    let mut z = vec![BigInt::zero(); n];
    for (ci, urow) in c.iter().zip(&u) {
        for (zj, uij) in z.iter_mut().zip(urow) {
            *zj += ci * uij;
        }
    }
    Ok(Some(z))
}

/// Whether `lambda ∈ L_Q + Z^n`.
pub fn lattice_coset_membership(lambda: &[Q], l: &RationalSubspace) -> Result<bool> {
    Ok(coset_offset(lambda, l)?.is_some())
}

/// Complete the saturated row system `w` (rows of `L^⊥ ∩ Z^n`) to a section of
/// `Q^n -> Q^n / (L + Z^n)`: returns a deterministic representative of the
/// class with `W lambda ≡ y (mod Z)`.
pub(crate) fn coset_section(l: &RationalSubspace, w: &IMatrix, y: &[Q]) -> Vec<Q> {
    let n = l.ambient_dim();
    let pivots = l.pivots();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    // Preferred section: zero on the pivot coordinates of L, when the
    // non-pivot block of W is unimodular.
    let block: Vec<Vec<Q>> = w
        .iter()
        .map(|row| free.iter().map(|&j| Q::from_integer(row[j].clone())).collect())
        .collect();
    let d = super::matrix::det(&block);
    if d == Q::one() || d == -Q::one() {
        let x = super::matrix::solve(&block, y, free.len()).expect("unimodular block is invertible");
        let mut out = vec![Q::zero(); n];
        for (&j, v) in free.iter().zip(x) {
            out[j] = v;
        }
        return out;
    }
    // General section from the HNF transform of W^T: W U^T = [I | 0].
    let wt = integer::itranspose(w, n);
    let (_, u) = integer::hnf_with_transform(&wt, w.len());
    let mut out = vec![Q::zero(); n];
    for (yi, urow) in y.iter().zip(&u) {
        for (o, x) in out.iter_mut().zip(urow) {
            *o += yi * Q::from_integer(x.clone());
        }
    }
    out
}
