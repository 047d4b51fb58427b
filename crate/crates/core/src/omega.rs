//! Dwyer–Fried decisions for rational `r`-planes against torsion-translated
//! descriptions of `W^i(X)`.

use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::qlinalg::plucker::{plucker, sigma_membership};
use crate::qlinalg::RationalSubspace;
use crate::rational::{max_abs, primitive_integer_vector, Q};
use crate::tcone::{tangent_cone_description, SubspaceArrangement};
use crate::tori::{intersect_translated, sigma_rho_membership, GradedDescription, TranslatedTorus, VarietyDescription};

/// Why a component keeps a plane out of `Ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BlockReason {
    /// Translated component with `P ∈ σ_r(L, ρ)`.
    SigmaRho,
    /// Component through `1` meeting `exp(P ⊗ C)` in positive dimension.
    DimGeOne,
}

impl BlockReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            BlockReason::SigmaRho => "sigma_rho",
            BlockReason::DimGeOne => "dim_ge_1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blocker {
    pub component: TranslatedTorus,
    pub reason: BlockReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaVerdict {
    pub member: bool,
    pub blockers: Vec<Blocker>,
}

/// `P ∈ Ω^i_r` iff no positive-dimensional component `ρT` of `W^i` meets
/// `exp(P ⊗ C)` in infinitely many points, i.e. `P ∉ σ_r(L, ρ)`.
pub fn omega_membership(w: &VarietyDescription, p: &RationalSubspace) -> Result<OmegaVerdict> {
    check_dim(w.ambient_dim(), p.ambient_dim())?;
    if p.is_zero() {
        return Err(Error::InvalidArgument("the plane must have dimension at least 1".into()));
    }
    let mut blockers = Vec::new();
    let through_p = TranslatedTorus::subtorus(p.clone());
    for c in w.positive_dimensional() {
        let sigma = sigma_rho_membership(p, c.subspace(), c.character())?;
        let infinite = intersect_translated(&through_p, c)?.is_some_and(|i| i.dim >= 1);
        if sigma != infinite {
            return Err(Error::Internal(format!("σ_r(L,ρ) test and intersection dimension disagree on {c}")));
        }
        if sigma {
            let reason = if c.is_subtorus() { BlockReason::DimGeOne } else { BlockReason::SigmaRho };
            blockers.push(Blocker { component: c.clone(), reason });
        }
    }
    let verdict = OmegaVerdict { member: blockers.is_empty(), blockers };
    if p.dim() == 1 {
        let via_cone = omega1_line_member(&tangent_cone_description(w)?, p)?;
        if via_cone != verdict.member {
            return Err(Error::Internal(format!("line {p:?}: generic test and tangent-cone test disagree")));
        }
    }
    Ok(verdict)
}

/// The projective subspaces `P(L)`, `L ∈ C`, removed from `QP^{n-1}` to form
/// `Ω^i_1`.
pub fn omega1_r1_description(c: &SubspaceArrangement) -> Vec<RationalSubspace> {
    c.subspaces().iter().filter(|l| !l.is_zero()).cloned().collect()
}

/// Whether the line `P` avoids every subspace of the arrangement.
pub fn omega1_line_member(c: &SubspaceArrangement, p: &RationalSubspace) -> Result<bool> {
    if p.dim() != 1 {
        return Err(Error::InvalidArgument(format!("expected a line, got dimension {}", p.dim())));
    }
    for l in c.subspaces() {
        if l.contains(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Primitive integer representatives of excluded points when every excluded
/// projective subspace is a point.
pub fn excluded_points(c: &SubspaceArrangement) -> Option<Vec<Vec<num_bigint::BigInt>>> {
    omega1_r1_description(c)
        .iter()
        .map(|l| (l.dim() == 1).then(|| primitive_integer_vector(&l.basis()[0])))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedForm {
    /// Every `r`-plane.
    All,
    /// Exactly the `r`-planes inside `L`.
    Grass(RationalSubspace),
    Empty,
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::All => write!(f, "all r-planes"),
            ClosedForm::Grass(l) => write!(f, "Grass_r({l:?})"),
            ClosedForm::Empty => write!(f, "∅"),
        }
    }
}

/// `W` is a finite set plus translates `ρ_α T` of one codimension-one
/// subtorus `T = exp(L ⊗ C)`, all with `ρ_α ∉ T`.
pub fn omega_codim1_closed_form(w: &VarietyDescription, r: usize) -> Result<ClosedForm> {
    let n = w.ambient_dim();
    if n < 2 {
        return Err(Error::Precondition("needs first Betti number at least 2".into()));
    }
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let mut l: Option<&RationalSubspace> = None;
    for c in w.positive_dimensional() {
        if c.subspace().codim() != 1 {
            return Err(Error::Precondition(format!("component {c} is not of codimension one")));
        }
        match l {
            Some(prev) if prev != c.subspace() => {
                return Err(Error::Precondition("positive-dimensional components are not parallel".into()));
            }
            _ => l = Some(c.subspace()),
        }
        if c.is_subtorus() {
            return Err(Error::Precondition(format!("component {c} passes through 1")));
        }
    }
    let Some(l) = l else {
        return Err(Error::Precondition("no codimension-one translated component".into()));
    };
    Ok(if r == 1 {
        ClosedForm::All
    } else if r < n {
        ClosedForm::Grass(l.clone())
    } else {
        ClosedForm::Empty
    })
}

impl ClosedForm {
    pub fn contains(&self, p: &RationalSubspace) -> Result<bool> {
        match self {
            ClosedForm::All => Ok(true),
            ClosedForm::Grass(l) => l.contains(p),
            ClosedForm::Empty => Ok(false),
        }
    }
}

/// `P` survives the Schubert bound: `P ∉ σ_r(L)` for every `L ∈ C`.
pub fn schubert_upper_bound(c: &SubspaceArrangement, p: &RationalSubspace) -> Result<bool> {
    for l in c.subspaces() {
        if sigma_membership(p, l)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessStep {
    pub q: u64,
    pub plane: RationalSubspace,
    /// `‖p(P_q) − p(P)‖_∞` in the affine chart of `P`'s first nonzero coordinate.
    pub plucker_distance: Q,
    pub verdict: OmegaVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub plane: RationalSubspace,
    pub plane_verdict: OmegaVerdict,
    pub family: Vec<WitnessStep>,
}

fn hypothesis(which: &str, detail: impl Into<String>) -> Error {
    Error::Hypothesis { which: which.into(), detail: detail.into() }
}

/// Planes `P_q → P` with `P ∈ Ω` and every `P_q ∉ Ω`, built from the
/// translated component `β`: `P` spans the first `r` basis vectors of `L_β`
/// and `P_q` replaces `v_r` by `v_r + λ_β / q`.
pub fn nonopen_witness(w: &VarietyDescription, beta: usize, r: usize, qs: &[u64]) -> Result<WitnessReport> {
    let comps = w.components();
    let b = comps
        .get(beta)
        .ok_or_else(|| Error::InvalidArgument(format!("component index {beta} out of range ({})", comps.len())))?;
    let l = b.subspace();
    let d = l.dim();
    if d < 2 {
        return Err(hypothesis("(1)", format!("component {beta} has dimension {d} < 2")));
    }
    if !(2..=d).contains(&r) {
        return Err(Error::InvalidArgument(format!("need 2 <= r <= {d}, got {r}")));
    }
    for c in w.positive_dimensional() {
        if c.subspace() == l {
            if c.is_subtorus() {
                return Err(hypothesis("(1.5)", format!("component {c} parallel to L is not translated")));
            }
        } else if !c.subspace().intersect(l)?.is_zero() {
            return Err(hypothesis("(2)", format!("component {c} meets L nontrivially")));
        }
    }
    if qs.iter().any(|&q| q == 0) {
        return Err(Error::InvalidArgument("q must be positive".into()));
    }
    let n = w.ambient_dim();
    let v = l.basis();
    let p = RationalSubspace::canonicalize(n, &v[..r])?;
    let plane_verdict = omega_membership(w, &p)?;
    if !plane_verdict.member {
        return Err(Error::Internal(format!("P = {p:?} is blocked although the hypotheses hold")));
    }
    let pp = plucker(&p)?;
    let chart = pp.first_nonzero();
    let base = pp.in_chart(chart).expect("chart coordinate is nonzero");
    let mut family = Vec::with_capacity(qs.len());
    for &q in qs {
        let mut rows: Vec<Vec<Q>> = v[..r].to_vec();
        let qq = Q::from_integer(q.into());
        for (x, lam) in rows[r - 1].iter_mut().zip(b.lambda()) {
            *x += lam / &qq;
        }
        let pq = RationalSubspace::canonicalize(n, &rows)?;
        let verdict = omega_membership(w, &pq)?;
        let dist = match plucker(&pq)?.in_chart(chart) {
            Some(c) => max_abs(&c.iter().zip(&base).map(|(a, b)| a - b).collect::<Vec<_>>()),
            None => return Err(Error::Internal(format!("P_{q} leaves the affine chart of P"))),
        };
        family.push(WitnessStep { q, plane: pq, plucker_distance: dist, verdict });
    }
    Ok(WitnessReport { plane: p, plane_verdict, family })
}

/// `Ω^i_n ≠ ∅` iff `W^i` is finite.
pub fn maximal_cover_finiteness(w: &VarietyDescription) -> bool {
    w.is_finite()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpkReport {
    pub k: usize,
    pub r: usize,
    /// A component whose `σ_r` is the whole Grassmannian, if one was found.
    pub certificate: Option<TranslatedTorus>,
    pub statement: String,
}

/// Certify `Ω^k_r = ∅` from a full-torus component or a subtorus of
/// codimension at most `r - 1`, and state the consequence for kernels of
/// epimorphisms onto `Z^r`.
pub fn fpk_report(g: &GradedDescription, k: usize, r: usize) -> Result<FpkReport> {
    let n = g.ambient_dim();
    if r == 0 || r > n {
        return Err(Error::InvalidArgument(format!("need 1 <= r <= {n}, got {r}")));
    }
    let w = g.degree(k)?;
    let certificate = w
        .components()
        .iter()
        .find(|c| c.is_full() || (c.is_subtorus() && c.subspace().codim() < r))
        .cloned();
    let statement = match &certificate {
        Some(c) => format!(
            "Ω^{k}_{r} = ∅ (certified by {c}); for every epimorphism ν: G ↠ Z^{r} with kernel Γ of type FF_{}, \
             H_{k}(Γ, Z) is not finitely generated",
            k.saturating_sub(1)
        ),
        None => "emptiness not certified by this tool".to_string(),
    };
    Ok(FpkReport { k, r, certificate, statement })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};
    use crate::tori::free_group_description;

    fn sub(n: usize, rows: &[&[i64]]) -> RationalSubspace {
        RationalSubspace::from_int_rows(n, rows).unwrap()
    }

    fn closed_example() -> VarietyDescription {
        let l = RationalSubspace::coordinate(3, &[0]).unwrap();
        let c = TranslatedTorus::new(vec![qr(1, 2), q(0), q(0)], l).unwrap();
        VarietyDescription::new(3, vec![TranslatedTorus::identity(3), c]).unwrap()
    }

    #[test]
    fn closed_example_planes() {
        let w = closed_example();
        let x1_zero = RationalSubspace::coordinate(3, &[0]).unwrap();
        assert!(omega_membership(&w, &x1_zero).unwrap().member);
        let v = omega_membership(&w, &sub(3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        assert!(!v.member);
        assert_eq!(v.blockers[0].reason, BlockReason::SigmaRho);
        assert_eq!(omega_codim1_closed_form(&w, 2).unwrap(), ClosedForm::Grass(x1_zero));
        assert_eq!(omega_codim1_closed_form(&w, 1).unwrap(), ClosedForm::All);
        assert_eq!(omega_codim1_closed_form(&w, 3).unwrap(), ClosedForm::Empty);
    }

    #[test]
    fn closed_form_preconditions() {
        assert!(omega_codim1_closed_form(&VarietyDescription::identity(3), 2).is_err());
        let through_one = VarietyDescription::new(
            3,
            vec![TranslatedTorus::subtorus(RationalSubspace::coordinate(3, &[0]).unwrap())],
        )
        .unwrap();
        assert!(matches!(omega_codim1_closed_form(&through_one, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn link_and_finite_cases() {
        let line = TranslatedTorus::new(vec![q(0), qr(1, 2)], sub(2, &[&[1, 1]])).unwrap();
        let w = VarietyDescription::new(2, vec![TranslatedTorus::identity(2), line]).unwrap();
        assert!(!omega_membership(&w, &RationalSubspace::full(2)).unwrap().member);
        assert!(omega_membership(&w, &sub(2, &[&[1, 1]])).unwrap().member);
        assert!(!maximal_cover_finiteness(&w));
        assert!(maximal_cover_finiteness(&VarietyDescription::identity(2)));
        assert!(maximal_cover_finiteness(&VarietyDescription::empty(2)));
        let pts = VarietyDescription::identity(3);
        assert!(omega_membership(&pts, &RationalSubspace::full(3)).unwrap().member);
    }

    #[test]
    fn schubert_bound_cases() {
        let c = SubspaceArrangement::new(3, vec![RationalSubspace::zero(3)]).unwrap();
        assert!(schubert_upper_bound(&c, &RationalSubspace::full(3)).unwrap());
        let c = SubspaceArrangement::new(3, vec![RationalSubspace::coordinate(3, &[0]).unwrap()]).unwrap();
        assert!(!schubert_upper_bound(&c, &sub(3, &[&[1, 0, 0], &[0, 1, 1]])).unwrap());
        assert!(schubert_upper_bound(&c, &sub(3, &[&[1, 0, 0]])).unwrap());
    }

    #[test]
    fn witness_requires_translation() {
        let w = VarietyDescription::new(
            4,
            vec![TranslatedTorus::subtorus(RationalSubspace::coordinate(4, &[2, 3]).unwrap())],
        )
        .unwrap();
        match nonopen_witness(&w, 0, 2, &[1]) {
            Err(Error::Hypothesis { which, .. }) => assert_eq!(which, "(1.5)"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fpk_on_free_products() {
        let f2 = free_group_description(2, 3).unwrap();
        let r = fpk_report(&f2, 1, 1).unwrap();
        assert!(r.certificate.is_some());
        let finite = GradedDescription::new(2, vec![VarietyDescription::identity(2)]).unwrap();
        let r = fpk_report(&finite, 0, 1).unwrap();
        assert!(r.certificate.is_none());
        assert_eq!(r.statement, "emptiness not certified by this tool");
    }
}
