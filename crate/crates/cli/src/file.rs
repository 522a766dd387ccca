//! Structure files: TOML documents with a format version, a kind tag and a
//! kind-specific payload. Rationals are `"p/q"` strings and polynomial
//! coefficients use the exterior-calculus text syntax.

use std::fmt;

use leibniz2::courant::{ExactTca, GeneralizedSection};
use leibniz2::crossed_module::{CrossedModule, SkeletalQuadruple};
use leibniz2::dirac::TwistedPoisson;
use leibniz2::exterior::Form;
use leibniz2::omni::DglaAutomorphism;
use leibniz2::sh_leibniz::{ShLeibniz2, TwoTermComplex};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    ShLeibniz,
    CrossedModule,
    Quadruple,
    EndAutomorphism,
    ExactTca,
    TwistedPoisson,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::ShLeibniz => "sh-leibniz",
            Kind::CrossedModule => "crossed-module",
            Kind::Quadruple => "quadruple",
            Kind::EndAutomorphism => "end-automorphism",
            Kind::ExactTca => "exact-tca",
            Kind::TwistedPoisson => "twisted-poisson",
        };
        f.write_str(s)
    }
}

/// A complex together with an automorphism of its endomorphism DGLA.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndAutomorphismPayload {
    pub complex: TwoTermComplex,
    pub automorphism: DglaAutomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    ShLeibniz(ShLeibniz2),
    CrossedModule(CrossedModule),
    Quadruple(SkeletalQuadruple),
    EndAutomorphism(EndAutomorphismPayload),
    ExactTca(ExactTca),
    TwistedPoisson(TwistedPoisson),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::ShLeibniz(_) => Kind::ShLeibniz,
            Structure::CrossedModule(_) => Kind::CrossedModule,
            Structure::Quadruple(_) => Kind::Quadruple,
            Structure::EndAutomorphism(_) => Kind::EndAutomorphism,
            Structure::ExactTca(_) => Kind::ExactTca,
            Structure::TwistedPoisson(_) => Kind::TwistedPoisson,
        }
    }

    /// Shape and degree validation beyond what deserialization enforces.
    fn validate(&self) -> leibniz2::Result<()> {
        match self {
            Structure::ShLeibniz(a) => a.validate(),
            Structure::CrossedModule(c) => c.validate(),
            Structure::Quadruple(q) => q.rho.validate(),
            Structure::EndAutomorphism(e) => e.complex.validate(),
            Structure::ExactTca(t) => ExactTca::new(t.h.clone()).map(drop),
            Structure::TwistedPoisson(p) => TwistedPoisson::new(p.pi.clone(), p.h.clone()).map(drop),
        }
    }
}

/// An input error with a 1-based line and column when one is known.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct InputError {
    pub position: Option<(usize, usize)>,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.position {
            Some((line, col)) => write!(f, "line {line}, column {col}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl InputError {
    pub fn at_offset(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let before = &text[..offset.min(text.len())];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        InputError { position: Some((line, col)), message: message.into() }
    }

    pub fn unpositioned(message: impl Into<String>) -> Self {
        InputError { position: None, message: message.into() }
    }

    fn from_toml(text: &str, e: toml::de::Error) -> Self {
        let message = e.message().trim().to_string();
        match e.span() {
            Some(span) => Self::at_offset(text, span.start, message),
            None => Self::unpositioned(message),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Document<T> {
    format: u32,
    kind: Kind,
    payload: T,
}

#[derive(Deserialize)]
struct Header {
    format: u32,
    kind: Kind,
}

fn payload<T: DeserializeOwned>(text: &str) -> Result<T, InputError> {
    toml::from_str::<Document<T>>(text).map(|d| d.payload).map_err(|e| InputError::from_toml(text, e))
}

pub fn parse(text: &str) -> Result<Structure, InputError> {
    let header: Header = toml::from_str(text).map_err(|e| InputError::from_toml(text, e))?;
    if header.format != FORMAT_VERSION {
        return Err(InputError::unpositioned(format!(
            "unsupported format version {}, expected {FORMAT_VERSION}",
            header.format
        )));
    }
    let s = match header.kind {
        Kind::ShLeibniz => Structure::ShLeibniz(payload(text)?),
        Kind::CrossedModule => Structure::CrossedModule(payload(text)?),
        Kind::Quadruple => Structure::Quadruple(payload(text)?),
        Kind::EndAutomorphism => Structure::EndAutomorphism(payload(text)?),
        Kind::ExactTca => Structure::ExactTca(payload(text)?),
        Kind::TwistedPoisson => Structure::TwistedPoisson(payload(text)?),
    };
    s.validate().map_err(|e| InputError::unpositioned(format!("invalid payload: {e}")))?;
    Ok(s)
}

fn document<T: Serialize>(kind: Kind, payload: &T) -> String {
    toml::to_string(&Document { format: FORMAT_VERSION, kind, payload }).expect("payloads serialize to TOML")
}

pub fn render(s: &Structure) -> String {
    let kind = s.kind();
    match s {
        Structure::ShLeibniz(a) => document(kind, a),
        Structure::CrossedModule(c) => document(kind, c),
        Structure::Quadruple(q) => document(kind, q),
        Structure::EndAutomorphism(e) => document(kind, e),
        Structure::ExactTca(t) => document(kind, t),
        Structure::TwistedPoisson(p) => document(kind, p),
    }
}

/// Extra family members supplied with `--family`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtraFamily {
    #[serde(default)]
    pub sections: Vec<GeneralizedSection>,
    #[serde(default)]
    pub forms: Vec<Form>,
}

pub fn parse_family(text: &str) -> Result<ExtraFamily, InputError> {
    toml::from_str(text).map_err(|e| InputError::from_toml(text, e))
}
