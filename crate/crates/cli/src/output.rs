//! Report shapes for each subcommand and their plain-text renderings.

use std::fmt::Write;

use omega_core::json::{AlexanderJson, ArrangementJson, ComponentJson, FpkJson, VerdictJson, WitnessJson};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderOut {
    pub generators: Vec<String>,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub matrix: AlexanderJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharvarEntry {
    pub component: ComponentJson,
    pub contained: bool,
    /// `generic_rank` for positive-dimensional components, `depth1` for points.
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharvarOut {
    pub n: usize,
    pub degree: usize,
    pub components: Vec<CharvarEntry>,
    pub all_contained: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormJson {
    /// `all`, `grass` or `empty`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subspace: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescribeOut {
    pub n: usize,
    pub r: usize,
    pub tangent_cone: ArrangementJson,
    /// Projective subspaces removed from `QP^{n-1}` (lines only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub excluded: Option<Vec<Vec<Vec<String>>>>,
    /// Primitive integer points, when every excluded subspace is a point.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub excluded_points: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ClosedFormJson>,
    /// False when only the Schubert upper bound is known.
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    /// 1-based columns of the expanded maximal minor.
    pub minor_columns: Vec<usize>,
    pub coeffs: Vec<String>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertOut {
    pub n: usize,
    pub r: usize,
    pub subspace: Vec<Vec<String>>,
    pub forms: Vec<FormJson>,
}

fn row(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

fn span(rows: &[Vec<String>]) -> String {
    if rows.is_empty() {
        return "0".into();
    }
    format!("span{{{}}}", rows.iter().map(|r| row(r)).collect::<Vec<_>>().join(", "))
}

fn component(c: &ComponentJson) -> String {
    if c.lambda.iter().all(|x| x == "0") {
        format!("exp {}", span(&c.basis))
    } else {
        format!("{} . exp {}", row(&c.lambda), span(&c.basis))
    }
}

pub fn alexander_text(o: &AlexanderOut) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "generators: {}", o.generators.join(", "));
    let torsion = if o.torsion.is_empty() { String::new() } else { format!(" + torsion {}", o.torsion.join(", ")) };
    let _ = writeln!(s, "abelianization: Z^{}{torsion}", o.free_rank);
    let _ = writeln!(s, "alexander matrix ({} x {}):", o.matrix.text.len(), o.generators.len());
    for r in &o.matrix.text {
        let _ = writeln!(s, "  [ {} ]", r.join(" | "));
    }
    s
}

pub fn arrangement_text(a: &ArrangementJson) -> String {
    if a.subspaces.is_empty() {
        return format!("empty cone in Q^{}\n", a.n);
    }
    a.subspaces.iter().map(|b| format!("{}\n", span(b))).collect()
}

pub fn charvar_text(o: &CharvarOut) -> String {
    let mut s = String::new();
    for e in &o.components {
        let mark = if e.contained { "ok     " } else { "MISSING" };
        let _ = writeln!(s, "{mark} {} [{}]", component(&e.component), e.method);
    }
    let _ = writeln!(s, "all contained: {}", o.all_contained);
    s
}

pub fn verdict_text(v: &VerdictJson) -> String {
    let mut s = String::from(if v.member { "member\n" } else { "blocked\n" });
    for b in &v.blockers {
        let _ = writeln!(s, "  by {} ({})", component(&b.component), b.reason);
    }
    s
}

pub fn describe_text(o: &DescribeOut) -> String {
    let mut s = format!("r = {}, tangent cone:\n", o.r);
    for line in arrangement_text(&o.tangent_cone).lines() {
        let _ = writeln!(s, "  {line}");
    }
    if let Some(points) = &o.excluded_points {
        let _ = writeln!(s, "excluded points:");
        for p in points {
            let _ = writeln!(s, "  [{}]", p.join(" : "));
        }
    } else if let Some(ex) = &o.excluded {
        let _ = writeln!(s, "excluded projective subspaces:");
        for b in ex {
            let _ = writeln!(s, "  P({})", span(b));
        }
    }
    match &o.closed_form {
        Some(ClosedFormJson { kind, subspace: Some(b) }) => {
            let _ = writeln!(s, "closed form: {kind} {}", span(b));
        }
        Some(c) => {
            let _ = writeln!(s, "closed form: {}", c.kind);
        }
        None => {}
    }
    let _ = writeln!(s, "exact: {}", o.exact);
    s
}

pub fn schubert_text(o: &SchubertOut) -> String {
    if o.forms.is_empty() {
        return format!("every {}-plane meets the subspace\n", o.r);
    }
    o.forms.iter().map(|f| format!("{} = 0\n", f.text)).collect()
}

pub fn witness_text(w: &WitnessJson) -> String {
    let mut s = format!("P = {}: {}", span(&w.p), verdict_text(&w.verdict));
    for step in &w.family {
        let v = if step.verdict.member { "member" } else { "blocked" };
        let _ = writeln!(s, "q = {:>3}  distance {:>8}  {v}  {}", step.q, step.plucker_distance, span(&step.plane));
    }
    s
}

pub fn fpk_text(f: &FpkJson) -> String {
    let mut s = format!("{}\n", f.statement);
    if let Some(c) = &f.certificate {
        let _ = writeln!(s, "certificate: {}", component(c));
    }
    s
}
