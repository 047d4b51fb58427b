use std::time::Instant;

use omega_core::datasets;
use omega_core::fox::{generic_rank_on_torus, rank_at_character, FoxComplex};
use omega_core::rational::{q, qr};
use omega_core::{RationalSubspace, TorsionCharacter, TranslatedTorus};

#[test]
fn omega_closed_ranks() {
    let g = FoxComplex::new(datasets::presentation(datasets::OMEGA_CLOSED));
    let m = g.alexander();
    let on_line = TranslatedTorus::new(vec![qr(1, 2), q(0), q(0)], RationalSubspace::coordinate(3, &[0]).unwrap()).unwrap();
    assert_eq!(generic_rank_on_torus(m, &on_line).unwrap(), 1);
    assert_eq!(generic_rank_on_torus(m, &TranslatedTorus::full(3)).unwrap(), 2);
    let rho = TorsionCharacter::new(vec![qr(1, 2), qr(1, 3), qr(1, 5)]);
    assert!(rank_at_character(m, &rho).unwrap() <= 1);
    assert_eq!(rank_at_character(m, &TorsionCharacter::new(vec![qr(1, 3), q(0), q(0)])).unwrap(), 2);
    assert!(g.contains_translated_torus(&on_line).unwrap());
    assert!(!g.contains_translated_torus(&TranslatedTorus::full(3)).unwrap());
    assert!(g.depth1_membership(&TorsionCharacter::trivial(3)).unwrap());
    assert!(!g.depth1_membership(&TorsionCharacter::new(vec![qr(1, 3), q(0), q(0)])).unwrap());
}

#[test]
fn one_torus_membership() {
    let g = FoxComplex::new(datasets::presentation(datasets::ONE_TORUS));
    assert!(g.depth1_membership(&TorsionCharacter::new(vec![q(0), qr(1, 2)])).unwrap());
    assert!(!g.depth1_membership(&TorsionCharacter::new(vec![qr(1, 2), q(0)])).unwrap());
    let f2 = FoxComplex::new(omega_core::Presentation::free(2));
    assert!(f2.depth1_membership(&TorsionCharacter::new(vec![qr(1, 7), qr(2, 3)])).unwrap());
}

#[test]
fn ccm_components() {
    let start = Instant::now();
    let g = FoxComplex::new(datasets::presentation(datasets::CCM));
    assert_eq!(g.abelianization().free_rank(), 6);
    assert!(g.contains_translated_torus(&datasets::ccm_t1()).unwrap());
    assert!(g.contains_translated_torus(&datasets::ccm_rho_t2()).unwrap());
    // T_2 itself (untranslated) is not a component.
    let t2 = TranslatedTorus::subtorus(datasets::ccm_rho_t2().subspace().clone());
    assert!(!g.contains_translated_torus(&t2).unwrap());
    eprintln!("ccm containment: {:?}", start.elapsed());
}
