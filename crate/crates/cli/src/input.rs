//! Resolving command-line operands: `@name` datasets, file paths, or inline text.

use std::fs;
use std::path::Path;

use omega_core::datasets;
use omega_core::fox::{parse_presentation_with, CommutatorConvention};
use omega_core::json::{DescriptionInput, SubspaceJson};
use omega_core::laurent::parse_laurent;
use omega_core::rational::parse_rational;
use omega_core::{GradedDescription, LaurentPoly, Presentation, RationalSubspace};
use serde::Deserialize;

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Presentation,
    Polynomial,
    Description,
}

impl Kind {
    fn label(self) -> &'static str {
        match self {
            Kind::Presentation => "presentation",
            Kind::Polynomial => "polynomial",
            Kind::Description => "description",
        }
    }
}

/// Text behind an operand, reading it from disk when it names a file.
fn read_operand(arg: &str) -> Result<String, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        return fs::read_to_string(path).map_err(|e| Failure::io(format!("cannot read `{arg}`: {e}")));
    }
    if looks_like_path(arg) {
        return Err(Failure::io(format!("cannot read `{arg}`: no such file")));
    }
    Ok(arg.to_string())
}

// Inline grammar never contains these, so a miss is an unreadable file.
fn looks_like_path(arg: &str) -> bool {
    let t = arg.trim();
    !t.starts_with(['{', '[', '<']) && (t.ends_with(".json") || t.ends_with(".txt") || t.contains('/') && !t.contains(' ') && t.contains('.'))
}

fn unknown(kind: Kind, name: &str) -> Failure {
    Failure::schema(format!("no built-in {} named `{name}`", kind.label()))
}

pub fn presentation(arg: &str, conv: CommutatorConvention) -> Result<Presentation, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(name) => datasets::named_presentation(name).ok_or_else(|| unknown(Kind::Presentation, name))?.to_string(),
        None => read_operand(arg)?,
    };
    Ok(parse_presentation_with(text.trim(), conv)?)
}

/// Polynomials share a variable count: the largest index seen across all of them.
pub fn polynomials(args: &[String]) -> Result<Vec<LaurentPoly>, Failure> {
    let mut texts = Vec::new();
    for arg in args {
        let text = match arg.strip_prefix('@') {
            Some(name) => datasets::named_polynomial(name).ok_or_else(|| unknown(Kind::Polynomial, name))?.to_string(),
            None => read_operand(arg)?,
        };
        // A file may hold several polynomials, one per line.
        texts.extend(text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from));
    }
    if texts.is_empty() {
        return Err(Failure::schema("no polynomial given".into()));
    }
    let mut n = 0;
    for t in &texts {
        n = n.max(parse_laurent(t, None)?.nvars());
    }
    Ok(texts.iter().map(|t| parse_laurent(t, Some(n))).collect::<omega_core::Result<_>>()?)
}

pub fn description(arg: &str) -> Result<GradedDescription, Failure> {
    if let Some(name) = arg.strip_prefix('@') {
        return datasets::named_description(name).ok_or_else(|| unknown(Kind::Description, name));
    }
    let text = read_operand(arg)?;
    let parsed: DescriptionInput = serde_json::from_str(&text).map_err(|e| Failure::schema(format!("description: {e}")))?;
    Ok(parsed.graded()?)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PlaneInput {
    Object(SubspaceJson),
    Rows(Vec<Vec<String>>),
}

/// A subspace given as `{"n":..,"basis":[..]}` or as a bare list of rows.
pub fn subspace(arg: &str) -> Result<RationalSubspace, Failure> {
    let text = read_operand(arg)?;
    let parsed: PlaneInput = serde_json::from_str(&text).map_err(|e| Failure::schema(format!("subspace: {e}")))?;
    match parsed {
        PlaneInput::Object(s) => Ok(s.to_core()?),
        PlaneInput::Rows(rows) => {
            let Some(n) = rows.first().map(Vec::len) else {
                return Err(Failure::schema("a bare row list cannot be empty; use {\"n\":..,\"basis\":[]}".into()));
            };
            let q = rows
                .iter()
                .map(|r| r.iter().map(|s| parse_rational(s)).collect::<omega_core::Result<Vec<_>>>())
                .collect::<omega_core::Result<Vec<_>>>()?;
            Ok(RationalSubspace::canonicalize(n, &q)?)
        }
    }
}

pub fn q_list(arg: &str) -> Result<Vec<u64>, Failure> {
    let mut out = Vec::new();
    for part in arg.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (parse_u64(a)?, parse_u64(b)?);
                out.extend(a..=b);
            }
            None => out.push(parse_u64(part)?),
        }
    }
    if out.is_empty() {
        return Err(Failure::usage("--q needs at least one value".into()));
    }
    Ok(out)
}

fn parse_u64(s: &str) -> Result<u64, Failure> {
    s.trim().parse().map_err(|_| Failure::usage(format!("`{s}` is not a nonnegative integer")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_ranges() {
        assert_eq!(q_list("1..3,7").unwrap(), vec![1, 2, 3, 7]);
        assert!(q_list("x").is_err());
        assert!(q_list("").is_err());
    }

    #[test]
    fn bare_rows() {
        let s = subspace(r#"[["1","0","0"],["0","2","0"]]"#).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.ambient_dim(), 3);
    }

    #[test]
    fn shared_variable_count() {
        let ps = polynomials(&["t1-1".into(), "t3-1".into()]).unwrap();
        assert!(ps.iter().all(|p| p.nvars() == 3));
    }

    #[test]
    fn missing_file_is_io() {
        let e = description("no/such/file.json").unwrap_err();
        assert_eq!(e.kind(), "io");
        assert!(description("@nope").is_err());
    }
}
