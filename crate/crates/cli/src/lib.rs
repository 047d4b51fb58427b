//! The `omega` command line. [`run`] is the whole program minus process exit,
//! so tests drive it in-process.

mod input;
pub mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use omega_core::fox::{CommutatorConvention, FoxComplex};
use omega_core::json::{ArrangementJson, ComponentJson, ErrorJson, FpkJson, VerdictJson, WitnessJson};
use omega_core::omega::{self, ClosedForm};
use omega_core::qlinalg::schubert_equations;
use omega_core::rational::format_rational;
use omega_core::tcone::{tangent_cone_description, tangent_cone_polys, DEFAULT_SUPPORT_LIMIT};
use omega_core::{Error, GradedDescription, VarietyDescription};
use serde::Serialize;

use output::*;

/// Why a run did not produce a report.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(ErrorJson),
}

impl Failure {
    fn usage(msg: String) -> Self {
        Failure::Usage(msg)
    }

    fn io(msg: String) -> Self {
        Failure::Domain(ErrorJson { kind: "io".into(), message: msg })
    }

    fn schema(msg: String) -> Self {
        Failure::Domain(ErrorJson { kind: "schema".into(), message: msg })
    }

    pub fn kind(&self) -> &str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Domain(e) => &e.kind,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(ErrorJson::from_core(&e))
    }
}

#[derive(Parser, Debug)]
#[command(name = "omega", version, about = "Dwyer-Fried sets from characteristic-variety data")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Convention {
    /// `[u,v] = v u v^-1 u^-1`
    Vuvu,
    /// `[u,v] = u v u^-1 v^-1`
    Uvuv,
}

impl From<Convention> for CommutatorConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Vuvu => CommutatorConvention::VUVinvUinv,
            Convention::Uvuv => CommutatorConvention::UVUinvVinv,
        }
    }
}

#[derive(Args, Debug)]
struct PresArgs {
    /// Presentation text, `@name`, or a file.
    #[arg(long)]
    pres: String,
    #[arg(long, value_enum, default_value_t = Convention::Vuvu)]
    commutator: Convention,
}

#[derive(Args, Debug)]
struct DescArgs {
    /// Description JSON, `@name`, or a file.
    #[arg(long)]
    desc: String,
    #[arg(long, default_value_t = 1)]
    degree: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Abelianization and abelianized Alexander matrix of a presentation.
    Alexander(PresArgs),
    /// Exponential tangent cone of polynomials or of a description.
    Tcone {
        /// Laurent polynomial text, `@name`, or a file (repeatable).
        #[arg(long)]
        poly: Vec<String>,
        #[arg(long, conflicts_with = "poly")]
        desc: Option<String>,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_SUPPORT_LIMIT)]
        max_support: usize,
    },
    /// Check that every component of a description lies in the depth-one variety.
    CharvarCheck {
        #[command(flatten)]
        pres: PresArgs,
        #[command(flatten)]
        desc: DescArgs,
    },
    /// Decide whether a rational plane lies in Omega.
    OmegaTest {
        #[command(flatten)]
        desc: DescArgs,
        /// Plane as JSON `{"n":..,"basis":..}`, a bare row list, or a file.
        #[arg(long)]
        plane: String,
        /// Expected plane dimension.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Describe Omega for one r: exactly when r = 1 or a closed form applies.
    OmegaDescribe {
        #[arg(long)]
        poly: Vec<String>,
        #[arg(long, conflicts_with = "poly")]
        desc: Option<String>,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = DEFAULT_SUPPORT_LIMIT)]
        max_support: usize,
    },
    /// Linear Plücker equations of the Schubert variety of a subspace.
    SchubertEqs {
        #[arg(long)]
        subspace: String,
        #[arg(long)]
        r: usize,
    },
    /// Non-openness witness built from a translated component.
    Witness {
        #[command(flatten)]
        desc: DescArgs,
        /// Index of the component in canonical order.
        #[arg(long)]
        beta: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Comma list, ranges `a..b` allowed.
        #[arg(long, default_value = "1..10")]
        q: String,
    },
    /// Certify emptiness of Omega and its finiteness consequence.
    Fpk {
        /// Description JSON, `@name`, or a file.
        #[arg(long)]
        desc: String,
        /// Homological degree k.
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        r: usize,
    },
}

/// Exit status with the captured streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let format = cli.format;
    match dispatch(cli.command) {
        Ok(report) => Outcome { code: 0, stdout: report.render(format), stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Domain(e)) => match format {
            Format::Json => Outcome { code: 1, stdout: to_json(&ErrorEnvelope { error: e }), stderr: String::new() },
            Format::Text => Outcome { code: 1, stdout: String::new(), stderr: format!("error[{}]: {}\n", e.kind, e.message) },
        },
    }
}

#[derive(Serialize)]
struct ErrorEnvelope {
    error: ErrorJson,
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

enum Report {
    Alexander(AlexanderOut),
    Arrangement(ArrangementJson),
    Charvar(CharvarOut),
    Verdict(VerdictJson),
    Describe(DescribeOut),
    Schubert(SchubertOut),
    Witness(WitnessJson),
    Fpk(FpkJson),
}

impl Report {
    fn render(&self, f: Format) -> String {
        match (self, f) {
            (Report::Alexander(o), Format::Json) => to_json(o),
            (Report::Alexander(o), Format::Text) => alexander_text(o),
            (Report::Arrangement(o), Format::Json) => to_json(o),
            (Report::Arrangement(o), Format::Text) => arrangement_text(o),
            (Report::Charvar(o), Format::Json) => to_json(o),
            (Report::Charvar(o), Format::Text) => charvar_text(o),
            (Report::Verdict(o), Format::Json) => to_json(o),
            (Report::Verdict(o), Format::Text) => verdict_text(o),
            (Report::Describe(o), Format::Json) => to_json(o),
            (Report::Describe(o), Format::Text) => describe_text(o),
            (Report::Schubert(o), Format::Json) => to_json(o),
            (Report::Schubert(o), Format::Text) => schubert_text(o),
            (Report::Witness(o), Format::Json) => to_json(o),
            (Report::Witness(o), Format::Text) => witness_text(o),
            (Report::Fpk(o), Format::Json) => to_json(o),
            (Report::Fpk(o), Format::Text) => fpk_text(o),
        }
    }
}

fn rows(basis: &[Vec<omega_core::Q>]) -> Vec<Vec<String>> {
    basis.iter().map(|r| r.iter().map(format_rational).collect()).collect()
}

fn degree(g: &GradedDescription, i: usize) -> Result<VarietyDescription, Failure> {
    Ok(g.degree(i)?.clone())
}

fn dispatch(cmd: Command) -> Result<Report, Failure> {
    match cmd {
        Command::Alexander(p) => {
            let pres = input::presentation(&p.pres, p.commutator.into())?;
            let fc = FoxComplex::new(pres);
            let ab = fc.abelianization();
            Ok(Report::Alexander(AlexanderOut {
                generators: fc.presentation().generators().to_vec(),
                free_rank: ab.free_rank(),
                torsion: ab.torsion_invariants().iter().map(ToString::to_string).collect(),
                matrix: omega_core::json::AlexanderJson::from_core(fc.alexander()),
            }))
        }
        Command::Tcone { poly, desc, degree: k, max_support } => {
            let cone = match desc {
                Some(d) => tangent_cone_description(&degree(&input::description(&d)?, k)?)?,
                None if poly.is_empty() => return Err(Failure::usage("tcone needs --poly or --desc".into())),
                None => tangent_cone_polys(&input::polynomials(&poly)?, max_support)?,
            };
            Ok(Report::Arrangement(ArrangementJson::from_core(&cone)))
        }
        Command::CharvarCheck { pres, desc } => {
            let fc = FoxComplex::new(input::presentation(&pres.pres, pres.commutator.into())?);
            let w = degree(&input::description(&desc.desc)?, desc.degree)?;
            let mut components = Vec::new();
            for c in w.components() {
                let (contained, method) = if c.is_point() {
                    (fc.depth1_membership(c.character())?, "depth1")
                } else {
                    (fc.contains_translated_torus(c)?, "generic_rank")
                };
                components.push(CharvarEntry { component: ComponentJson::from_core(c), contained, method: method.into() });
            }
            let all_contained = components.iter().all(|e| e.contained);
            Ok(Report::Charvar(CharvarOut { n: w.ambient_dim(), degree: desc.degree, components, all_contained }))
        }
        Command::OmegaTest { desc, plane, r } => {
            let w = degree(&input::description(&desc.desc)?, desc.degree)?;
            let p = input::subspace(&plane)?;
            if let Some(r) = r {
                if r != p.dim() {
                    return Err(Error::InvalidArgument(format!("--r {r} but the plane has dimension {}", p.dim())).into());
                }
            }
            Ok(Report::Verdict(VerdictJson::from_core(&omega::omega_membership(&w, &p)?)))
        }
        Command::OmegaDescribe { poly, desc, degree: k, r, max_support } => {
            let w = match desc {
                Some(d) => Some(degree(&input::description(&d)?, k)?),
                None if poly.is_empty() => return Err(Failure::usage("omega-describe needs --poly or --desc".into())),
                None => None,
            };
            let cone = match &w {
                Some(w) => tangent_cone_description(w)?,
                None => tangent_cone_polys(&input::polynomials(&poly)?, max_support)?,
            };
            let n = cone.ambient_dim();
            if r == 0 || r > n {
                return Err(Error::InvalidArgument(format!("need 1 <= r <= {n}, got {r}")).into());
            }
            let closed_form = match &w {
                Some(w) => match omega::omega_codim1_closed_form(w, r) {
                    Ok(ClosedForm::All) => Some(ClosedFormJson { kind: "all".into(), subspace: None }),
                    Ok(ClosedForm::Empty) => Some(ClosedFormJson { kind: "empty".into(), subspace: None }),
                    Ok(ClosedForm::Grass(l)) => Some(ClosedFormJson { kind: "grass".into(), subspace: Some(rows(l.basis())) }),
                    Err(Error::Precondition(_) | Error::Hypothesis { .. }) => None,
                    Err(e) => return Err(e.into()),
                },
                None => None,
            };
            let (excluded, excluded_points) = if r == 1 {
                let ex = omega::omega1_r1_description(&cone).iter().map(|l| rows(l.basis())).collect();
                let pts = omega::excluded_points(&cone)
                    .map(|ps| ps.iter().map(|p| p.iter().map(ToString::to_string).collect()).collect());
                (Some(ex), pts)
            } else {
                (None, None)
            };
            let exact = r == 1 || closed_form.is_some();
            Ok(Report::Describe(DescribeOut {
                n,
                r,
                tangent_cone: ArrangementJson::from_core(&cone),
                excluded,
                excluded_points,
                closed_form,
                exact,
            }))
        }
        Command::SchubertEqs { subspace, r } => {
            let l = input::subspace(&subspace)?;
            let n = l.ambient_dim();
            let forms = schubert_equations(&l, r)?
                .iter()
                .map(|f| FormJson {
                    minor_columns: f.minor_columns.iter().map(|c| c + 1).collect(),
                    coeffs: f.coeffs.iter().map(format_rational).collect(),
                    text: f.to_text(n, r),
                })
                .collect();
            Ok(Report::Schubert(SchubertOut { n, r, subspace: rows(l.basis()), forms }))
        }
        Command::Witness { desc, beta, r, q } => {
            let w = degree(&input::description(&desc.desc)?, desc.degree)?;
            let qs = input::q_list(&q)?;
            Ok(Report::Witness(WitnessJson::from_core(&omega::nonopen_witness(&w, beta, r, &qs)?)))
        }
        Command::Fpk { desc, degree: k, r } => {
            let g = input::description(&desc)?;
            Ok(Report::Fpk(FpkJson::from_core(&omega::fpk_report(&g, k, r)?)))
        }
    }
}
