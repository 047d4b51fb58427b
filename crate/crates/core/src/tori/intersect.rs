//! Intersections of translated subtori and the translated Schubert sets
//! `σ_r(L, ρ)`.

use crate::error::{check_dim, Result};
use crate::qlinalg::lattice::{coset_offset, lattice_coset_membership};
use crate::qlinalg::matrix::row_combination;
use crate::qlinalg::RationalSubspace;
use crate::rational::Q;

use super::character::TorsionCharacter;
use super::torus::TranslatedTorus;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusIntersection {
    /// Dimension of every component of the intersection.
    pub dim: usize,
    /// A torsion point lying in both cosets.
    pub witness: TorsionCharacter,
}

/// `ρ_1 T_1 ∩ ρ_2 T_2` is nonempty iff `λ_1 - λ_2 ∈ L_1 + L_2 + Z^n`, and then
/// is a finite union of translates of `T_1 ∩ T_2`.
pub fn intersect_translated(c1: &TranslatedTorus, c2: &TranslatedTorus) -> Result<Option<TorusIntersection>> {
    check_dim(c1.ambient_dim(), c2.ambient_dim())?;
    let (l1, l2) = (c1.subspace(), c2.subspace());
    let sum = l1.sum(l2)?;
    let d: Vec<Q> = c1.lambda().iter().zip(c2.lambda()).map(|(a, b)| a - b).collect();
    let Some(z) = coset_offset(&d, &sum)? else {
        return Ok(None);
    };
    // y = d - z ∈ L_1 + L_2; split y = y_1 + y_2 and move λ_1 back by y_1.
    let y: Vec<Q> = d.iter().zip(&z).map(|(a, b)| a - Q::from_integer(b.clone())).collect();
    let stacked: Vec<Vec<Q>> = l1.basis().iter().chain(l2.basis()).cloned().collect();
    let coeffs = row_combination(&stacked, &y).expect("y lies in L1 + L2");
    let mut y1 = vec![Q::default(); d.len()];
    for (c, row) in coeffs.iter().zip(l1.basis()) {
        for (acc, x) in y1.iter_mut().zip(row) {
            *acc += c * x;
        }
    }
    let witness = TorsionCharacter::new(c1.lambda().iter().zip(&y1).map(|(a, b)| a - b).collect());
    Ok(Some(TorusIntersection { dim: l1.intersect(l2)?.dim(), witness }))
}

/// `P ∈ σ_r(L, ρ)`: `ρ ∈ exp((P + L) ⊗ C)` and `P ∩ L ≠ 0`.
pub fn sigma_rho_membership(p: &RationalSubspace, l: &RationalSubspace, rho: &TorsionCharacter) -> Result<bool> {
    check_dim(l.ambient_dim(), rho.ambient_dim())?;
    if p.intersect(l)?.is_zero() {
        return Ok(false);
    }
    lattice_coset_membership(rho.values(), &p.sum(l)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    #[test]
    fn self_intersection() {
        let t = TranslatedTorus::new(vec![qr(1, 3), q(0)], RationalSubspace::from_int_rows(2, &[&[1, 2]]).unwrap())
            .unwrap();
        let i = intersect_translated(&t, &t).unwrap().unwrap();
        assert_eq!(i.dim, 1);
        assert!(t.contains_point(&i.witness).unwrap());
    }

    #[test]
    fn ccm_components_meet_in_points() {
        let l1 = RationalSubspace::coordinate(6, &[0, 1]).unwrap();
        let l2 = RationalSubspace::coordinate(6, &[2, 3, 4, 5]).unwrap();
        let t1 = TranslatedTorus::subtorus(l1);
        let mut lam = vec![q(0); 6];
        lam[2] = qr(1, 2);
        let t2 = TranslatedTorus::new(lam, l2).unwrap();
        let i = intersect_translated(&t1, &t2).unwrap().unwrap();
        assert_eq!(i.dim, 0);
        assert!(t1.contains_point(&i.witness).unwrap());
        assert!(t2.contains_point(&i.witness).unwrap());
    }

    #[test]
    fn parallel_translates_are_disjoint() {
        let e1 = RationalSubspace::from_int_rows(2, &[&[1, 0]]).unwrap();
        let a = TranslatedTorus::new(vec![qr(1, 2), q(0)], e1.clone()).unwrap();
        let b = TranslatedTorus::new(vec![q(0), qr(1, 3)], e1).unwrap();
        assert!(intersect_translated(&a, &b).unwrap().is_none());
    }

    #[test]
    fn deleted_b3_plane() {
        let mu = [-1, 1, 0, 0, 1, -1, -2, 2];
        let lam = [qr(1, 2), q(0), qr(1, 2), qr(1, 2), q(0), qr(1, 2), q(0), q(0)];
        let two_lam: Vec<Q> = lam.iter().map(|x| x * q(2)).collect();
        let mu_q: Vec<Q> = mu.iter().map(|&x| q(x)).collect();
        let p = RationalSubspace::canonicalize(8, &[mu_q.clone(), two_lam]).unwrap();
        let ell = RationalSubspace::canonicalize(8, &[mu_q]).unwrap();
        let rho = TorsionCharacter::new(lam.to_vec());
        assert!(sigma_rho_membership(&p, &ell, &rho).unwrap());
        let other = RationalSubspace::coordinate(8, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(!sigma_rho_membership(&other, &ell, &rho).unwrap());
    }
}
