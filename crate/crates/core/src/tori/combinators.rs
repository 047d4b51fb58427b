//! Products, wedges and pushforwards of characteristic-variety descriptions.

use num_bigint::BigInt;

use crate::error::{check_dim, Error, Result};
use crate::qlinalg::matrix::{rank, vec_mat};
use crate::rational::Q;

use super::character::TorsionCharacter;
use super::description::{GradedDescription, VarietyDescription};
use super::torus::TranslatedTorus;

pub fn product_torus(a: &TranslatedTorus, b: &TranslatedTorus) -> Result<TranslatedTorus> {
    let lambda: Vec<Q> = a.lambda().iter().chain(b.lambda()).cloned().collect();
    TranslatedTorus::new(lambda, a.subspace().direct_sum(b.subspace()))
}

fn product_of(a: &VarietyDescription, b: &VarietyDescription) -> Result<Vec<TranslatedTorus>> {
    let mut out = Vec::new();
    for x in a.components() {
        for y in b.components() {
            out.push(product_torus(x, y)?);
        }
    }
    Ok(out)
}

/// `W^i(X_1 × X_2) = ∪_{p+q=i} W^p(X_1) × W^q(X_2)` for `i = 0..=k`.
pub fn product_description(a: &GradedDescription, b: &GradedDescription, k: usize) -> Result<GradedDescription> {
    let n = a.ambient_dim() + b.ambient_dim();
    let mut by_degree = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let mut comps = Vec::new();
        for p in 0..=i {
            comps.extend(product_of(a.degree(p)?, b.degree(i - p)?)?);
        }
        by_degree.push(VarietyDescription::new(n, comps)?);
    }
    GradedDescription::new(n, by_degree)
}

/// Wedge of two spaces with positive first Betti numbers: `{1}` in degree 0 and
/// the whole character torus in degrees `1..=k`.
pub fn wedge_description(a: &GradedDescription, b: &GradedDescription, k: usize) -> Result<GradedDescription> {
    let (p, q) = (a.ambient_dim(), b.ambient_dim());
    if p == 0 || q == 0 {
        return Err(Error::Precondition("wedge formula needs both first Betti numbers positive".into()));
    }
    let n = p + q;
    let mut by_degree = vec![VarietyDescription::identity(n)];
    by_degree.extend((1..=k).map(|_| VarietyDescription::full(n)));
    GradedDescription::new(n, by_degree)
}

/// Graded description of the free group `F_q` (a wedge of circles).
pub fn free_group_description(q: usize, k: usize) -> Result<GradedDescription> {
    let mut by_degree = vec![VarietyDescription::identity(q)];
    if q >= 2 {
        by_degree.extend((1..=k).map(|_| VarietyDescription::full(q)));
    } else {
        by_degree.extend((1..=k).map(|_| VarietyDescription::identity(q)));
    }
    GradedDescription::new(q, by_degree)
}

/// Push a description of `Q^m` along an epimorphism `G ↠ Q` whose map on free
/// abelianizations is the rank-`m` matrix `phi` (`m × n`, row `i` the image of
/// the `i`-th basis vector). Each component `(λ, L)` goes to `(λφ + τ, Lφ)` for
/// every supplied torsion image `τ` (only `τ = 0` if none are given).
pub fn pushforward(
    desc: &VarietyDescription,
    phi: &[Vec<BigInt>],
    n: usize,
    torsion_images: &[TorsionCharacter],
) -> Result<VarietyDescription> {
    let m = desc.ambient_dim();
    check_dim(m, phi.len())?;
    let phiq: Vec<Vec<Q>> = phi
        .iter()
        .map(|row| {
            check_dim(n, row.len())?;
            Ok(row.iter().map(|x| Q::from_integer(x.clone())).collect())
        })
        .collect::<Result<_>>()?;
    let r = rank(&phiq, n);
    if r != m {
        return Err(Error::RankDeficient { rank: r, expected: m });
    }
    let taus: Vec<TorsionCharacter> =
        if torsion_images.is_empty() { vec![TorsionCharacter::trivial(n)] } else { torsion_images.to_vec() };
    for t in &taus {
        check_dim(n, t.ambient_dim())?;
    }
    let mut out = Vec::new();
    for c in desc.components() {
        let image_l = c.subspace().map_rows(&phiq, n)?;
        let base = vec_mat(c.lambda(), &phiq, n);
        for t in &taus {
            let lambda: Vec<Q> = base.iter().zip(t.values()).map(|(a, b)| a + b).collect();
            out.push(TranslatedTorus::new(lambda, image_l.clone())?);
        }
    }
    VarietyDescription::new(n, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::RationalSubspace;
    use crate::rational::{q, qr};

    #[test]
    fn f2_times_f2() {
        let f2 = free_group_description(2, 2).unwrap();
        let g = product_description(&f2, &f2, 2).unwrap();
        let w1 = g.degree(1).unwrap();
        let l1 = RationalSubspace::coordinate(4, &[0, 1]).unwrap();
        let l2 = RationalSubspace::coordinate(4, &[2, 3]).unwrap();
        assert_eq!(w1.components(), &[TranslatedTorus::subtorus(l1), TranslatedTorus::subtorus(l2)]);
        assert_eq!(g.degree(0).unwrap(), &VarietyDescription::identity(4));
        assert_eq!(g.degree(2).unwrap(), &VarietyDescription::full(4));
    }

    #[test]
    fn wedge_rejects_zero_betti() {
        let circle = free_group_description(1, 1).unwrap();
        let point = GradedDescription::new(0, vec![VarietyDescription::identity(0)]).unwrap();
        assert!(wedge_description(&circle, &point, 1).is_err());
        let w = wedge_description(&circle, &circle, 1).unwrap();
        assert_eq!(w.degree(1).unwrap(), &VarietyDescription::full(2));
        let w0 = wedge_description(&circle, &circle, 0).unwrap();
        assert_eq!(w0.degree(0).unwrap(), &VarietyDescription::identity(2));
    }

    #[test]
    fn pushforward_examples() {
        let big = |rows: &[&[i64]]| rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect::<Vec<_>>();
        let d = VarietyDescription::new(
            2,
            vec![TranslatedTorus::new(vec![qr(1, 3), q(0)], RationalSubspace::from_int_rows(2, &[&[1, 2]]).unwrap())
                .unwrap()],
        )
        .unwrap();
        assert_eq!(pushforward(&d, &big(&[&[1, 0], &[0, 1]]), 2, &[]).unwrap(), d);

        let z = VarietyDescription::full(1);
        let tau = TorsionCharacter::new(vec![q(0), qr(1, 2)]);
        let img = pushforward(&z, &big(&[&[1, 0]]), 2, &[tau]).unwrap();
        let expect =
            TranslatedTorus::new(vec![q(0), qr(1, 2)], RationalSubspace::from_int_rows(2, &[&[1, 0]]).unwrap()).unwrap();
        assert_eq!(img.components(), &[expect]);

        assert!(matches!(
            pushforward(&d, &big(&[&[1, 0], &[2, 0]]), 2, &[]),
            Err(Error::RankDeficient { rank: 1, expected: 2 })
        ));
    }
}
