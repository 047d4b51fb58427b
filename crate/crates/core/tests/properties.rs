use std::collections::BTreeMap;

use num_bigint::BigInt;
use omega_core::fox::{alexander_matrix, generic_rank_on_torus, parse_presentation, rank_at_character};
use omega_core::json::DescriptionJson;
use omega_core::laurent::{evaluate_at_character, restrict_to_translated_torus, CyclotomicNumber};
use omega_core::omega::omega_membership;
use omega_core::qlinalg::{lattice_coset_membership, plucker, schubert_equations, sigma_membership};
use omega_core::rational::{frac, q, qr};
use omega_core::tcone::{admissible_partitions, partition_subspace, tangent_cone_poly};
use omega_core::tori::{canonical_translate, intersect_translated};
use omega_core::{LaurentPoly, RationalSubspace, TorsionCharacter, TranslatedTorus, VarietyDescription, Q};
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 200, ..ProptestConfig::default() }
}

fn poly_strategy(n: usize, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, n), -4i64..=4), 0..=max_terms)
        .prop_map(move |terms| LaurentPoly::from_terms(n, terms.into_iter().map(|(e, c)| (e, q(c)))).unwrap())
}

/// Polynomials with a planted zero-sum structure, so cones are nontrivial.
fn balanced_poly(n: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-1i64..=2, n), prop::collection::vec(-1i64..=2, n), 1i64..=3), 1..=3)
        .prop_map(move |pairs| {
            let mut terms = BTreeMap::new();
            for (a, b, c) in pairs {
                *terms.entry(a).or_insert_with(|| q(0)) += q(c);
                *terms.entry(b).or_insert_with(|| q(0)) -= q(c);
            }
            LaurentPoly::from_terms(n, terms).unwrap()
        })
}

fn rational() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=12).prop_map(|(a, b)| qr(a, b))
}

fn torsion(n: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((0i64..6, 1i64..=6).prop_map(|(a, b)| frac(&qr(a, b))), n)
}

fn subspace(n: usize, max_dim: usize) -> impl Strategy<Value = RationalSubspace> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=max_dim).prop_map(move |rows| {
        let rows: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        RationalSubspace::canonicalize(n, &rows).unwrap()
    })
}

fn integer_point_of(l: &RationalSubspace, coeffs: &[i64]) -> Vec<i64> {
    let basis = l.integer_basis();
    let mut out = vec![BigInt::from(0); l.ambient_dim()];
    for (row, c) in basis.iter().zip(coeffs) {
        for (o, x) in out.iter_mut().zip(row) {
            *o += x * c;
        }
    }
    out.iter().map(|x| i64::try_from(x).unwrap()).collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn evaluation_is_a_ring_homomorphism(f in poly_strategy(2, 5), g in poly_strategy(2, 5), lam in torsion(2)) {
        let ev = |p: &LaurentPoly| p.evaluate_at(&lam).unwrap();
        prop_assert_eq!(ev(&f.add(&g).unwrap()), ev(&f).add(&ev(&g)));
        prop_assert_eq!(ev(&f.mul(&g).unwrap()), ev(&f).mul(&ev(&g)));
        prop_assert_eq!(ev(&LaurentPoly::one(2)), CyclotomicNumber::one());
    }

    #[test]
    fn restriction_commutes_with_evaluation(
        f in poly_strategy(3, 5),
        lam in torsion(3),
        l in subspace(3, 2),
        mu in torsion(2),
    ) {
        let t = TranslatedTorus::new(lam.clone(), l).unwrap();
        let g = restrict_to_translated_torus(&f, &t).unwrap();
        let k = t.dim();
        let mu = &mu[..k];
        // The point exp(2πi(λ + μB)) of the torus, B the lattice basis.
        let mut point: Vec<Q> = t.lambda().to_vec();
        for (m, row) in mu.iter().zip(t.lattice_basis()) {
            for (p, x) in point.iter_mut().zip(row) {
                *p += m * Q::from_integer(x);
            }
        }
        prop_assert_eq!(g.evaluate_at(mu).unwrap(), f.evaluate_at(&point).unwrap());
        prop_assert_eq!(
            evaluate_at_character(&f, &TorsionCharacter::new(point.clone())).unwrap(),
            f.evaluate_at(&point).unwrap()
        );
    }

    #[test]
    fn one_parameter_subgroups_detect_the_cone(f in balanced_poly(3), z in prop::collection::vec(-3i64..=3, 3)) {
        prop_assume!(!f.is_zero());
        let cone = tangent_cone_poly(&f, 16).unwrap();
        // exp(s z) lies in V(f) for all s iff f(u^z) vanishes identically.
        let map: Vec<Vec<i64>> = z.iter().map(|&x| vec![x]).collect();
        let restricted = f.monomial_substitution(&map, 1).unwrap();
        let zq: Vec<Q> = z.iter().map(|&x| q(x)).collect();
        prop_assert_eq!(cone.contains_vector(&zq).unwrap(), restricted.is_zero());
        for l in cone.subspaces() {
            let coeffs: Vec<i64> = (1..=l.dim() as i64).collect();
            let v = integer_point_of(l, &coeffs);
            let map: Vec<Vec<i64>> = v.iter().map(|&x| vec![x]).collect();
            prop_assert!(f.monomial_substitution(&map, 1).unwrap().is_zero());
        }
    }

    #[test]
    fn refinement_enlarges_the_subspace(f in balanced_poly(3)) {
        prop_assume!(!f.is_zero());
        let parts = admissible_partitions(&f, 16).unwrap();
        for a in &parts {
            for b in &parts {
                if a.refines(b) {
                    let (la, lb) = (partition_subspace(a, &f).unwrap(), partition_subspace(b, &f).unwrap());
                    prop_assert!(la.contains(&lb).unwrap());
                }
            }
        }
    }

    #[test]
    fn canonical_translates_classify_cosets(l in subspace(3, 2), a in torsion(3), b in torsion(3), shift in prop::collection::vec(-3i64..=3, 3)) {
        let ca = canonical_translate(&a, &l).unwrap();
        let cb = canonical_translate(&b, &l).unwrap();
        let diff: Vec<Q> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        prop_assert_eq!(ca == cb, lattice_coset_membership(&diff, &l).unwrap());
        // The representative stays in the coset and ignores integer shifts.
        let back: Vec<Q> = ca.iter().zip(&a).map(|(x, y)| x - y).collect();
        prop_assert!(lattice_coset_membership(&back, &l).unwrap());
        let moved: Vec<Q> = a.iter().zip(&shift).map(|(x, s)| x + q(*s)).collect();
        prop_assert_eq!(canonical_translate(&moved, &l).unwrap(), ca);
    }

    #[test]
    fn intersection_witnesses_lie_in_both(
        l1 in subspace(3, 2), l2 in subspace(3, 2), a in torsion(3), b in torsion(3),
    ) {
        let c1 = TranslatedTorus::new(a, l1).unwrap();
        let c2 = TranslatedTorus::new(b, l2).unwrap();
        if let Some(i) = intersect_translated(&c1, &c2).unwrap() {
            prop_assert!(c1.contains_point(&i.witness).unwrap());
            prop_assert!(c2.contains_point(&i.witness).unwrap());
            prop_assert_eq!(i.dim, c1.subspace().intersect(c2.subspace()).unwrap().dim());
        }
        let sym = intersect_translated(&c2, &c1).unwrap();
        prop_assert_eq!(sym.is_some(), intersect_translated(&c1, &c2).unwrap().is_some());
    }

    #[test]
    fn schubert_forms_cut_out_sigma(l in subspace(5, 2), p in subspace(5, 3)) {
        prop_assume!(!l.is_zero() && !p.is_zero() && l.dim() + p.dim() <= 5);
        let forms = schubert_equations(&l, p.dim()).unwrap();
        let pl = plucker(&p).unwrap();
        let vanish = forms.iter().all(|f| f.evaluate(&pl) == q(0));
        prop_assert_eq!(vanish, sigma_membership(&p, &l).unwrap());
    }

    #[test]
    fn description_json_round_trips(ls in prop::collection::vec((subspace(3, 2), torsion(3)), 0..4)) {
        let comps = ls.into_iter().map(|(l, lam)| TranslatedTorus::new(lam, l).unwrap()).collect();
        let w = VarietyDescription::new(3, comps).unwrap();
        let j = DescriptionJson::from_core(&w, Some(1));
        let text = serde_json::to_string(&j).unwrap();
        let back: DescriptionJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_core().unwrap(), w);
    }

    #[test]
    fn omega_shrinks_with_the_variety(
        ls in prop::collection::vec((subspace(3, 2), torsion(3)), 1..4),
        extra in (subspace(3, 2), torsion(3)),
        p in subspace(3, 2),
    ) {
        prop_assume!(!p.is_zero());
        let comps: Vec<TranslatedTorus> = ls.into_iter().map(|(l, lam)| TranslatedTorus::new(lam, l).unwrap()).collect();
        let small = VarietyDescription::new(3, comps.clone()).unwrap();
        let mut more = comps;
        more.push(TranslatedTorus::new(extra.1, extra.0).unwrap());
        let big = VarietyDescription::new(3, more).unwrap();
        if omega_membership(&big, &p).unwrap().member {
            prop_assert!(omega_membership(&small, &p).unwrap().member);
        }
    }

    #[test]
    fn rationals_round_trip_through_strings(x in rational()) {
        let s = omega_core::rational::format_rational(&x);
        prop_assert_eq!(omega_core::rational::parse_rational(&s).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 60, ..ProptestConfig::default() })]

    #[test]
    fn generic_rank_bounds_every_specialization(lam in torsion(3), l in subspace(3, 2), mu in torsion(2)) {
        let m = alexander_matrix(&parse_presentation("<x1,x2,x3 | [x1^2,x2], [x1,x3], x1 [x2,x3] x1^-1 [x2,x3]>").unwrap());
        let t = TranslatedTorus::new(lam, l).unwrap();
        let generic = generic_rank_on_torus(&m, &t).unwrap();
        let mut point: Vec<Q> = t.lambda().to_vec();
        for (x, row) in mu.iter().zip(t.lattice_basis()) {
            for (p, b) in point.iter_mut().zip(row) {
                *p += x * Q::from_integer(b);
            }
        }
        prop_assert!(rank_at_character(&m, &TorsionCharacter::new(point)).unwrap() <= generic);
    }
}
