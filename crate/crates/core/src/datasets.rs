//! Worked examples: presentations, polynomials and descriptions of jump loci.

use crate::error::Result;
use crate::fox::{parse_presentation, Presentation};
use crate::laurent::{parse_laurent, LaurentPoly};
use crate::qlinalg::RationalSubspace;
use crate::rational::{q, qr, Q};
use crate::tori::{free_group_description, product_description, GradedDescription, TranslatedTorus, VarietyDescription};

pub const CHAIN_LINK_POLY: &str = "t1+t2+t3-t1*t2-t1*t3-t2*t3";
pub const TOY_POLY: &str = "t1+t2-2";

pub const ONE_TORUS: &str = "<x1,x2 | x1 x2^2 x1^-1 x2^-2>";
pub const OMEGA_CLOSED: &str = "<x1,x2,x3 | [x1^2,x2], [x1,x3], x1 [x2,x3] x1^-1 [x2,x3]>";
pub const CCM: &str = "<x1,x2,x3,x4,x5,x6 | \
    [x3^2,x1], [x3^2,x2], [x2,x1] [x2^x3,x1^x3], [x3,x4] [x5,x6], \
    [x1,x4], [x2,x4], [x1,x5], [x2,x5], [x1,x6], [x2,x6], \
    [x1^x3,x4], [x2^x3,x4], [x1^x3,x5], [x2^x3,x5], [x1^x3,x6], [x2^x3,x6]>";
pub const STALLINGS: &str = "<a,b,c,x,y | [x,a], [y,a], [x,b], [y,b], [a^-1 x,c], [a^-1 y,c], [b^-1 a,c]>";

pub fn chain_link_poly() -> LaurentPoly {
    parse_laurent(CHAIN_LINK_POLY, None).expect("valid dataset")
}

pub fn presentation(text: &str) -> Presentation {
    parse_presentation(text).expect("valid dataset")
}

/// `W^1 = {1} ∪ {t_1 = -1}` for the closed-form example.
pub fn omega_closed_w1() -> VarietyDescription {
    let l = RationalSubspace::coordinate(3, &[0]).expect("valid");
    let c = TranslatedTorus::new(vec![qr(1, 2), q(0), q(0)], l).expect("valid");
    VarietyDescription::new(3, vec![TranslatedTorus::identity(3), c]).expect("valid")
}

/// `W^1 = {1} ∪ (1,-1)·exp(span{(1,1)})` for the link `4^2_1`.
pub fn link_421_w1() -> VarietyDescription {
    let l = RationalSubspace::from_int_rows(2, &[&[1, 1]]).expect("valid");
    let c = TranslatedTorus::new(vec![q(0), qr(1, 2)], l).expect("valid");
    VarietyDescription::new(2, vec![TranslatedTorus::identity(2), c]).expect("valid")
}

/// `T_1 = exp(L_1)`, `L_1 = {x_1 = x_2 = 0}`.
pub fn ccm_t1() -> TranslatedTorus {
    TranslatedTorus::subtorus(RationalSubspace::coordinate(6, &[0, 1]).expect("valid"))
}

/// `ρT_2` with `ρ = (1,1,-1,1,1,1)`, `L_2 = {x_3 = ... = x_6 = 0}`.
pub fn ccm_rho_t2() -> TranslatedTorus {
    let mut lambda = vec![q(0); 6];
    lambda[2] = qr(1, 2);
    TranslatedTorus::new(lambda, RationalSubspace::coordinate(6, &[2, 3, 4, 5]).expect("valid")).expect("valid")
}

pub fn ccm_w1() -> VarietyDescription {
    VarietyDescription::new(6, vec![ccm_t1(), ccm_rho_t2()]).expect("valid")
}

/// `(μ, λ)` for the deleted `B_3` arrangement.
pub fn deleted_b3() -> (Vec<Q>, Vec<Q>) {
    let mu = [-1, 1, 0, 0, 1, -1, -2, 2].iter().map(|&x| q(x)).collect();
    let lambda = vec![qr(1, 2), q(0), qr(1, 2), qr(1, 2), q(0), qr(1, 2), q(0), q(0)];
    (mu, lambda)
}

/// `W^•(F_2 × F_2)` through degree `k`.
pub fn f2_times_f2(k: usize) -> Result<GradedDescription> {
    let f2 = free_group_description(2, k)?;
    product_description(&f2, &f2, k)
}

/// `W^•(F_2 × F_2 × F_2)` through degree `k`.
pub fn f2_cubed(k: usize) -> Result<GradedDescription> {
    let f2 = free_group_description(2, k)?;
    product_description(&product_description(&f2, &f2, k)?, &f2, k)
}

/// Names accepted by `@name` references on the command line.
pub fn named_description(name: &str) -> Option<GradedDescription> {
    let single = |w: VarietyDescription| {
        let n = w.ambient_dim();
        GradedDescription::new(n, vec![VarietyDescription::identity(n), w]).ok()
    };
    match name {
        "omega-closed" => single(omega_closed_w1()),
        "link-421" => single(link_421_w1()),
        "ccm" => single(ccm_w1()),
        "f2xf2" => f2_times_f2(4).ok(),
        "f2-cubed" | "stallings" => f2_cubed(3).ok(),
        _ => None,
    }
}

pub fn named_presentation(name: &str) -> Option<&'static str> {
    match name {
        "one-torus" => Some(ONE_TORUS),
        "omega-closed" => Some(OMEGA_CLOSED),
        "ccm" => Some(CCM),
        "stallings" => Some(STALLINGS),
        _ => None,
    }
}

pub fn named_polynomial(name: &str) -> Option<&'static str> {
    match name {
        "chain-link" => Some(CHAIN_LINK_POLY),
        "toy" => Some(TOY_POLY),
        _ => None,
    }
}
