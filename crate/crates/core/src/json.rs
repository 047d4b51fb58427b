//! JSON shapes shared by the command line and golden tests. Rationals are
//! always `"p/q"` strings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fox::AlexanderMatrix;
use crate::laurent::LaurentPoly;
use crate::omega::{Blocker, FpkReport, OmegaVerdict, WitnessReport};
use crate::qlinalg::RationalSubspace;
use crate::rational::{format_rational, parse_rational, Q};
use crate::tcone::SubspaceArrangement;
use crate::tori::{GradedDescription, TranslatedTorus, VarietyDescription};

fn fmt_vec(v: &[Q]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn parse_vec(v: &[String]) -> Result<Vec<Q>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub n: usize,
    pub basis: Vec<Vec<String>>,
}

impl SubspaceJson {
    pub fn from_core(s: &RationalSubspace) -> Self {
        SubspaceJson { n: s.ambient_dim(), basis: s.basis().iter().map(|r| fmt_vec(r)).collect() }
    }

    pub fn to_core(&self) -> Result<RationalSubspace> {
        let rows = self.basis.iter().map(|r| parse_vec(r)).collect::<Result<Vec<_>>>()?;
        RationalSubspace::canonicalize(self.n, &rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub lambda: Vec<String>,
    pub basis: Vec<Vec<String>>,
}

impl ComponentJson {
    pub fn from_core(t: &TranslatedTorus) -> Self {
        ComponentJson {
            lambda: fmt_vec(t.lambda()),
            basis: t.subspace().basis().iter().map(|r| fmt_vec(r)).collect(),
        }
    }

    pub fn to_core(&self, n: usize) -> Result<TranslatedTorus> {
        let lambda = parse_vec(&self.lambda)?;
        let rows = self.basis.iter().map(|r| parse_vec(r)).collect::<Result<Vec<_>>>()?;
        TranslatedTorus::new(lambda, RationalSubspace::canonicalize(n, &rows)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptionJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub components: Vec<ComponentJson>,
}

impl DescriptionJson {
    pub fn from_core(w: &VarietyDescription, degree: Option<usize>) -> Self {
        DescriptionJson { n: w.ambient_dim(), degree, components: w.components().iter().map(ComponentJson::from_core).collect() }
    }

    pub fn to_core(&self) -> Result<VarietyDescription> {
        let comps = self.components.iter().map(|c| c.to_core(self.n)).collect::<Result<Vec<_>>>()?;
        VarietyDescription::new(self.n, comps)
    }
}

/// Either one description or a list of them keyed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DescriptionInput {
    Graded(Vec<DescriptionJson>),
    Single(DescriptionJson),
}

impl DescriptionInput {
    /// The description in degree `i`. A single description answers for its own
    /// degree (or any degree when it carries none).
    pub fn degree(&self, i: usize) -> Result<VarietyDescription> {
        match self {
            DescriptionInput::Single(d) => match d.degree {
                Some(k) if k != i => Err(Error::InvalidArgument(format!("description is for degree {k}, not {i}"))),
                _ => d.to_core(),
            },
            DescriptionInput::Graded(_) => self.graded()?.degree(i).cloned(),
        }
    }

    pub fn graded(&self) -> Result<GradedDescription> {
        match self {
            DescriptionInput::Single(d) => {
                let k = d.degree.unwrap_or(1);
                let mut by = vec![VarietyDescription::empty(d.n); k];
                by.push(d.to_core()?);
                GradedDescription::new(d.n, by)
            }
            DescriptionInput::Graded(list) => {
                let Some(first) = list.first() else {
                    return Err(Error::InvalidArgument("empty description list".into()));
                };
                let n = first.n;
                let top = list.iter().enumerate().map(|(i, d)| d.degree.unwrap_or(i)).max().unwrap_or(0);
                let mut by = vec![VarietyDescription::empty(n); top + 1];
                for (i, d) in list.iter().enumerate() {
                    let k = d.degree.unwrap_or(i);
                    by[k] = by[k].union(&d.to_core()?)?;
                }
                GradedDescription::new(n, by)
            }
        }
    }

    pub fn from_graded(g: &GradedDescription) -> Self {
        DescriptionInput::Graded(g.iter().map(|(i, d)| DescriptionJson::from_core(d, Some(i))).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<i64>,
    pub coeff: String,
}

pub fn laurent_to_json(p: &LaurentPoly) -> Vec<TermJson> {
    p.terms().map(|(e, c)| TermJson { exponents: e.clone(), coeff: format_rational(c) }).collect()
}

pub fn laurent_from_json(n: usize, terms: &[TermJson]) -> Result<LaurentPoly> {
    let parsed = terms.iter().map(|t| Ok((t.exponents.clone(), parse_rational(&t.coeff)?))).collect::<Result<Vec<_>>>()?;
    LaurentPoly::from_terms(n, parsed)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderJson {
    pub nvars: usize,
    pub rows: Vec<Vec<Vec<TermJson>>>,
    pub text: Vec<Vec<String>>,
}

impl AlexanderJson {
    pub fn from_core(m: &AlexanderMatrix) -> Self {
        AlexanderJson {
            nvars: m.nvars(),
            rows: m.rows().iter().map(|r| r.iter().map(laurent_to_json).collect()).collect(),
            text: m.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementJson {
    pub n: usize,
    /// Basis matrices; an empty list is the empty cone.
    pub subspaces: Vec<Vec<Vec<String>>>,
}

impl ArrangementJson {
    pub fn from_core(c: &SubspaceArrangement) -> Self {
        ArrangementJson {
            n: c.ambient_dim(),
            subspaces: c.subspaces().iter().map(|s| s.basis().iter().map(|r| fmt_vec(r)).collect()).collect(),
        }
    }

    pub fn to_core(&self) -> Result<SubspaceArrangement> {
        let subs = self
            .subspaces
            .iter()
            .map(|b| {
                let rows = b.iter().map(|r| parse_vec(r)).collect::<Result<Vec<_>>>()?;
                RationalSubspace::canonicalize(self.n, &rows)
            })
            .collect::<Result<Vec<_>>>()?;
        SubspaceArrangement::new(self.n, subs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockerJson {
    pub component: ComponentJson,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub member: bool,
    pub blockers: Vec<BlockerJson>,
}

impl VerdictJson {
    pub fn from_core(v: &OmegaVerdict) -> Self {
        VerdictJson {
            member: v.member,
            blockers: v
                .blockers
                .iter()
                .map(|Blocker { component, reason }| BlockerJson {
                    component: ComponentJson::from_core(component),
                    reason: reason.as_str().to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessStepJson {
    pub q: u64,
    pub plane: Vec<Vec<String>>,
    pub plucker_distance: String,
    pub verdict: VerdictJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    #[serde(rename = "P")]
    pub p: Vec<Vec<String>>,
    pub verdict: VerdictJson,
    pub family: Vec<WitnessStepJson>,
}

impl WitnessJson {
    pub fn from_core(w: &WitnessReport) -> Self {
        WitnessJson {
            p: w.plane.basis().iter().map(|r| fmt_vec(r)).collect(),
            verdict: VerdictJson::from_core(&w.plane_verdict),
            family: w
                .family
                .iter()
                .map(|s| WitnessStepJson {
                    q: s.q,
                    plane: s.plane.basis().iter().map(|r| fmt_vec(r)).collect(),
                    plucker_distance: format_rational(&s.plucker_distance),
                    verdict: VerdictJson::from_core(&s.verdict),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpkJson {
    pub k: usize,
    pub r: usize,
    pub certified_empty: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ComponentJson>,
    pub statement: String,
}

impl FpkJson {
    pub fn from_core(f: &FpkReport) -> Self {
        FpkJson {
            k: f.k,
            r: f.r,
            certified_empty: f.certificate.is_some(),
            certificate: f.certificate.as_ref().map(ComponentJson::from_core),
            statement: f.statement.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub kind: String,
    pub message: String,
}

impl ErrorJson {
    pub fn from_core(e: &Error) -> Self {
        ErrorJson { kind: e.kind().to_string(), message: e.to_string() }
    }
}
