//! Abelianization `G -> H_1(G)/Tors = Z^n` from the exponent-sum matrix.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::parse::Presentation;
use crate::qlinalg::integer::{imat_from_i64, integer_kernel, snf, IMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abelianization {
    /// `projection[j]` is `α(x_{j+1}) ∈ Z^n`.
    projection: Vec<Vec<i64>>,
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl Abelianization {
    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn projection(&self) -> &[Vec<i64>] {
        &self.projection
    }

    pub fn image(&self, generator: usize) -> &[i64] {
        &self.projection[generator]
    }

    pub fn torsion_invariants(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn num_generators(&self) -> usize {
        self.projection.len()
    }
}

pub fn exponent_sum_matrix(p: &Presentation) -> Vec<Vec<i64>> {
    p.relators().iter().map(|r| r.exponent_sums(p.num_generators())).collect()
}

/// The free quotient is dual to `Hom(H_1, Z) = ker E ⊂ Z^q`; a basis `f_1..f_n`
/// of that kernel gives `α(x_j) = (f_1(j), ..., f_n(j))`.
pub fn abelianize(p: &Presentation) -> Abelianization {
    let q = p.num_generators();
    let e: IMatrix = imat_from_i64(&exponent_sum_matrix(p));
    let k = integer_kernel(&e, q);
    let n = k.len();
    let projection = (0..q)
        .map(|j| (0..n).map(|i| k[i][j].to_i64().expect("exponent sums fit in i64")).collect())
        .collect();
    let torsion = if e.is_empty() {
        Vec::new()
    } else {
        snf(&e, q).diagonal().into_iter().filter(|d| *d > BigInt::one()).collect()
    };
    Abelianization { projection, free_rank: n, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fox::parse::parse_presentation;

    #[test]
    fn closed_example_is_free_abelian() {
        let p = parse_presentation("<x1,x2,x3 | [x1^2,x2], [x1,x3], x1 [x2,x3] x1^-1 [x2,x3]>").unwrap();
        let a = abelianize(&p);
        assert_eq!(a.free_rank(), 3);
        assert_eq!(a.projection(), &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(a.torsion_invariants().is_empty());
    }

    #[test]
    fn finite_cyclic() {
        let a = abelianize(&parse_presentation("<x | x^2>").unwrap());
        assert_eq!(a.free_rank(), 0);
        assert_eq!(a.torsion_invariants(), &[BigInt::from(2)]);
    }

    #[test]
    fn free_product_with_cyclics() {
        // F_2 * Z_2 * Z_3
        let a = abelianize(&parse_presentation("<a,b,c,d | c^2, d^3>").unwrap());
        assert_eq!(a.free_rank(), 2);
        assert_eq!(a.image(0), &[1, 0]);
        assert_eq!(a.image(2), &[0, 0]);
        let t: Vec<i64> = a.torsion_invariants().iter().map(|x| x.to_i64().unwrap()).collect();
        // Z_2 ⊕ Z_3 ≅ Z_6 in invariant-factor form.
        assert_eq!(t, vec![6]);
    }

    #[test]
    fn projection_kills_relators() {
        let p = parse_presentation("<a,b,c | a b^2 c^-1, a^3 b>").unwrap();
        let a = abelianize(&p);
        assert_eq!(a.free_rank(), 1);
        for row in exponent_sum_matrix(&p) {
            let img: i64 = row.iter().zip(a.projection()).map(|(e, v)| e * v[0]).sum();
            assert_eq!(img, 0);
        }
    }
}
