use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use leibniz2::algebra::Element;
use leibniz2::check::Family;
use leibniz2::cohomology::{is_cocycle, Cochain};
use leibniz2::courant::{
    build_leibniz2, check_tca_axioms, default_forms, default_sections, ExactTca, GeneralizedSection, TcaLeibniz2,
};
use leibniz2::crossed_module::{
    check_crossed_module, check_leibniz, check_representation, crossed_to_dg, dg_to_crossed, quadruple_to_skeletal,
    skeletal_to_quadruple,
};
use leibniz2::dirac::{check_graph_dirac, check_lie2, check_twisted_poisson, l3_vanishing_reason, TwistedPoisson};
use leibniz2::exterior::{Alt, Form};
use leibniz2::generate::Generator;
use leibniz2::omni::{build_and_check_omni, build_end, check_dgla_automorphism};
use leibniz2::report::VerifyReport;
use leibniz2::sh_leibniz::{check_sh_leibniz, ShLeibnizOps};
use leibniz2::Error as CoreError;

use crate::file::{self, ExtraFamily, InputError, Kind, Structure};
use crate::report::{parse_report, Report};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

/// Random members appended to the section and form families by `--seed`.
const SEEDED_MEMBERS: usize = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Input { path: String, source: InputError },

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    /// A precondition of the requested operation does not hold.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => EXIT_FAIL,
            CliError::Input { .. } | CliError::Io { .. } => EXIT_INPUT,
        }
    }

    fn core(path: &str, e: CoreError) -> Self {
        match e {
            CoreError::Precondition(_) | CoreError::Violation { .. } | CoreError::Internal(_) => {
                CliError::Failed(e.to_string())
            }
            CoreError::Parse { .. } | CoreError::Shape(_) | CoreError::Degree(_) => {
                CliError::Input { path: path.into(), source: InputError::unpositioned(e.to_string()) }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Direction {
    #[value(name = "crossed-to-dg", alias = "crossed→dg")]
    CrossedToDg,
    #[value(name = "dg-to-crossed", alias = "dg→crossed")]
    DgToCrossed,
    #[value(name = "skeletal-to-quadruple", alias = "skeletal→quadruple")]
    SkeletalToQuadruple,
    #[value(name = "quadruple-to-skeletal", alias = "quadruple→skeletal")]
    QuadrupleToSkeletal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Construction {
    Omni,
    Leibniz2,
    Lie2,
}

pub struct Options {
    pub kind: Option<Kind>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub family: Option<PathBuf>,
    pub seed: Option<u64>,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn load(path: &Path) -> Result<Structure, CliError> {
    let text = read(path)?;
    file::parse(&text).map_err(|source| CliError::Input { path: path.display().to_string(), source })
}

fn load_expecting(path: &Path, expected: Option<Kind>) -> Result<Structure, CliError> {
    let s = load(path)?;
    match expected {
        Some(k) if k != s.kind() => Err(CliError::Input {
            path: path.display().to_string(),
            source: InputError::unpositioned(format!("expected kind {k}, file has kind {}", s.kind())),
        }),
        _ => Ok(s),
    }
}

fn wrong_kind(path: &Path, s: &Structure, wanted: &str) -> CliError {
    CliError::Input {
        path: path.display().to_string(),
        source: InputError::unpositioned(format!("expected {wanted}, file has kind {}", s.kind())),
    }
}

/// Section and form families: the coordinate defaults, members from
/// `--family`, and seeded random members.
struct Families {
    sections: Family<GeneralizedSection>,
    forms: Family<Form>,
}

impl Families {
    fn build(n: usize, opts: &Options) -> Result<Self, CliError> {
        let mut sections = default_sections(n);
        let mut forms = default_forms(n);
        if let Some(path) = &opts.family {
            let text = read(path)?;
            let extra: ExtraFamily = file::parse_family(&text)
                .map_err(|source| CliError::Input { path: path.display().to_string(), source })?;
            for s in extra.sections {
                sections.labels.push(s.to_string());
                sections.items.push(s);
            }
            for f in extra.forms {
                forms.labels.push(f.to_string());
                forms.items.push(f);
            }
        }
        if let Some(seed) = opts.seed {
            let mut gen = Generator::new(seed);
            for i in 1..=SEEDED_MEMBERS {
                sections.items.push(gen.section(n));
                sections.labels.push(format!("random{i}"));
                forms.items.push(gen.alt(n, 1));
                forms.labels.push(format!("random{i}"));
            }
        }
        Ok(Families { sections, forms })
    }
}

fn tca_notes(t: &ExactTca) -> Vec<String> {
    let n = t.nvars();
    if t.big_h().is_zero() {
        return vec!["l3 ≡ 0 (dh = 0)".into()];
    }
    let ops = TcaLeibniz2::new(t.clone());
    let v = |i: usize| GeneralizedSection::vector(Alt::basis(n, &[i]));
    vec![format!("l3(∂1,∂2,∂3) = {}", ops.l3(&v(0), &v(1), &v(2)))]
}

fn lie2_notes(p: &TwistedPoisson) -> Vec<String> {
    match l3_vanishing_reason(p) {
        Some(reason) => vec![format!("l3 ≡ 0 ({reason})")],
        None => vec!["l3 is not identically zero".into()],
    }
}

fn verify_structure(path: &Path, s: &Structure, opts: &Options) -> Result<(VerifyReport, Vec<String>), CliError> {
    let p = path.display().to_string();
    let core = |e| CliError::core(&p, e);
    match s {
        Structure::ShLeibniz(a) => {
            let c = a.classify();
            let note = format!("dg: {}, skeletal: {}, l-infinity: {}", c.dg, c.skeletal, c.l_infinity);
            Ok((check_sh_leibniz(a).map_err(core)?, vec![note]))
        }
        Structure::CrossedModule(c) => Ok((check_crossed_module(c).map_err(core)?, vec![])),
        Structure::Quadruple(q) => {
            let mut r = check_leibniz(&q.g).map_err(core)?.prefixed("g:");
            r.extend(check_representation(&q.rho).map_err(core)?.prefixed("rho:"));
            let (_, cocycle) = is_cocycle(&q.rho, &Cochain::Tensor(q.phi.clone())).map_err(core)?;
            r.extend(cocycle.prefixed("phi:"));
            Ok((r, vec![]))
        }
        Structure::EndAutomorphism(e) => {
            let end = build_end(&e.complex).map_err(core)?;
            Ok((check_dgla_automorphism(&e.automorphism, &end).map_err(core)?, vec![]))
        }
        Structure::ExactTca(t) => {
            let fam = Families::build(t.nvars(), opts)?;
            let mut r = check_tca_axioms(t, &fam.sections).map_err(core)?;
            r.extend(build_leibniz2(t, &fam.sections, &fam.forms).map_err(core)?);
            Ok((r, tca_notes(t)))
        }
        Structure::TwistedPoisson(tp) => {
            let fam = Families::build(tp.nvars(), opts)?;
            let mut r = check_twisted_poisson(tp).map_err(core)?;
            r.extend(check_graph_dirac(tp, &fam.forms).map_err(core)?);
            Ok((r, lie2_notes(tp)))
        }
    }
}

fn emit(report: &Report, format: Format, out: Option<&Path>) -> Result<(), CliError> {
    let text = match format {
        Format::Text => report.to_text(),
        Format::Structured => report.to_json(),
    };
    match out {
        Some(path) => write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn exit_for(report: &Report) -> u8 {
    if report.passed {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

pub fn verify(path: &Path, opts: &Options) -> Result<u8, CliError> {
    let start = Instant::now();
    let s = load_expecting(path, opts.kind)?;
    let (checks, notes) = verify_structure(path, &s, opts)?;
    let mut report = Report::new("verify", &path.display().to_string(), s.kind(), checks, notes);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    emit(&report, opts.format, opts.out.as_deref())?;
    Ok(exit_for(&report))
}

pub fn convert(path: &Path, direction: Direction, out: Option<&Path>) -> Result<u8, CliError> {
    let s = load(path)?;
    let p = path.display().to_string();
    let core = |e| CliError::core(&p, e);
    let converted = match (direction, &s) {
        (Direction::CrossedToDg, Structure::CrossedModule(c)) => Structure::ShLeibniz(crossed_to_dg(c).map_err(core)?),
        (Direction::DgToCrossed, Structure::ShLeibniz(a)) => Structure::CrossedModule(dg_to_crossed(a).map_err(core)?),
        (Direction::SkeletalToQuadruple, Structure::ShLeibniz(a)) => {
            Structure::Quadruple(skeletal_to_quadruple(a).map_err(core)?)
        }
        (Direction::QuadrupleToSkeletal, Structure::Quadruple(q)) => {
            Structure::ShLeibniz(quadruple_to_skeletal(q).map_err(core)?)
        }
        (Direction::CrossedToDg, _) => return Err(wrong_kind(path, &s, "a crossed-module file")),
        (Direction::QuadrupleToSkeletal, _) => return Err(wrong_kind(path, &s, "a quadruple file")),
        _ => return Err(wrong_kind(path, &s, "an sh-leibniz file")),
    };
    let text = file::render(&converted);
    match out {
        Some(o) => write(o, &text)?,
        None => print!("{text}"),
    }
    Ok(EXIT_PASS)
}

/// Builds the requested structure, writes it (omni) or the structured report
/// (leibniz2, lie2) to `--out`, and prints the report of its verification.
pub fn construct(what: Construction, path: &Path, opts: &Options) -> Result<u8, CliError> {
    let start = Instant::now();
    let s = load(path)?;
    let p = path.display().to_string();
    let core = |e| CliError::core(&p, e);
    let (checks, notes, built) = match (what, &s) {
        (Construction::Omni, Structure::EndAutomorphism(e)) => {
            let (a, r) = build_and_check_omni(&e.automorphism, &e.complex).map_err(core)?;
            (r, vec![], Some(Structure::ShLeibniz(a)))
        }
        (Construction::Leibniz2, Structure::ExactTca(t)) => {
            let fam = Families::build(t.nvars(), opts)?;
            (build_leibniz2(t, &fam.sections, &fam.forms).map_err(core)?, tca_notes(t), None)
        }
        (Construction::Lie2, Structure::TwistedPoisson(tp)) => {
            let fam = Families::build(tp.nvars(), opts)?;
            (check_lie2(tp, &fam.forms).map_err(core)?, lie2_notes(tp), None)
        }
        (Construction::Omni, _) => return Err(wrong_kind(path, &s, "an end-automorphism file")),
        (Construction::Leibniz2, _) => return Err(wrong_kind(path, &s, "an exact-tca file")),
        (Construction::Lie2, _) => return Err(wrong_kind(path, &s, "a twisted-poisson file")),
    };
    let command = match what {
        Construction::Omni => "construct omni",
        Construction::Leibniz2 => "construct leibniz2",
        Construction::Lie2 => "construct lie2",
    };
    let mut report = Report::new(command, &p, s.kind(), checks, notes);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    if let Some(out) = &opts.out {
        match &built {
            Some(structure) => write(out, &file::render(structure))?,
            None => write(out, &report.to_json())?,
        }
    }
    emit(&report, opts.format, None)?;
    Ok(exit_for(&report))
}

/// Re-renders a structured report; the exit code reflects its verdict.
pub fn report(path: &Path, format: Format) -> Result<u8, CliError> {
    let text = read(path)?;
    let report = parse_report(&text).map_err(|source| CliError::Input { path: path.display().to_string(), source })?;
    emit(&report, format, None)?;
    Ok(exit_for(&report))
}
