#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use leibniz2::algebra::{int, Coords, Element, FinSpace, LinearMap, StructureTensor};
use leibniz2::courant::ExactTca;
use leibniz2::crossed_module::{catalog, crossed_to_dg, LeibnizAlgebra, SkeletalQuadruple};
use leibniz2::dirac::TwistedPoisson;
use leibniz2::exterior::{Alt, Form, Multivector, Poly};
use leibniz2::omni::{build_end, DglaAutomorphism};
use leibniz2::sh_leibniz::{ShLeibniz2, TwoTermComplex};
use leibniz2_cli::file::{EndAutomorphismPayload, Structure};
use serde::Deserialize;

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_leibniz2"))
}

#[derive(Debug, Deserialize)]
pub struct Manifest {
    pub fixture: Vec<Entry>,
}

#[derive(Debug, Deserialize)]
pub struct Entry {
    pub file: String,
    pub exit: i32,
    /// Text the report or error message must contain.
    #[serde(default)]
    pub expect: Vec<String>,
}

pub fn manifest() -> Manifest {
    let text = std::fs::read_to_string(fixtures_dir().join("manifest.toml")).unwrap();
    toml::from_str(&text).unwrap()
}

fn q(n: usize) -> FinSpace {
    FinSpace::new(n, "Q")
}

fn poly(n: usize, s: &str) -> Poly {
    Poly::parse(n, s).unwrap()
}

pub fn form(n: usize, idx: &[usize], coeff: &str) -> Form {
    Alt::term(n, idx, poly(n, coeff))
}

pub fn vector(n: usize, idx: &[usize], coeff: &str) -> Multivector {
    Alt::term(n, idx, poly(n, coeff))
}

pub fn abelian() -> ShLeibniz2 {
    ShLeibniz2::abelian(TwoTermComplex::skeletal(q(1), q(1)))
}

pub fn e2_dg() -> ShLeibniz2 {
    let mut a = ShLeibniz2::abelian(TwoTermComplex::skeletal(q(0), q(2)));
    a.l2_00.set(&[0, 0], &Coords::from_ints(&[0, 1])).unwrap();
    a
}

/// `[e1,e1] = e1` on `Q^2`: fails the Leibniz identity at `(e1,e1,e1)`.
pub fn bad_leibniz() -> ShLeibniz2 {
    let mut a = ShLeibniz2::abelian(TwoTermComplex::skeletal(q(0), q(2)));
    a.l2_00.set(&[0, 0], &Coords::from_ints(&[1, 0])).unwrap();
    a
}

/// Abelian `Q` acting trivially on `Q` with `l3(e1,e1,e1) = m1`.
pub fn skeletal_l3() -> ShLeibniz2 {
    let mut a = ShLeibniz2::abelian(TwoTermComplex::skeletal(q(1), q(1)));
    a.l3.set(&[0, 0, 0], &Coords::from_ints(&[1])).unwrap();
    a
}

pub fn zero_quadruple() -> SkeletalQuadruple {
    let g = LeibnizAlgebra::abelian(q(1));
    let rho = g.trivial_rep(q(1));
    let phi = StructureTensor::zeros(vec![q(1); 3], q(1));
    SkeletalQuadruple { v: q(1), g, rho, phi }
}

pub fn bad_crossed() -> leibniz2::crossed_module::CrossedModule {
    let mut c = catalog::e4();
    c.mu = c.mu.scale(&int(2));
    c
}

pub fn identity_complex() -> TwoTermComplex {
    TwoTermComplex::new(q(1), q(1), LinearMap::identity(q(1))).unwrap()
}

pub fn zero_complex() -> TwoTermComplex {
    TwoTermComplex::skeletal(q(1), q(1))
}

pub fn identity_automorphism() -> EndAutomorphismPayload {
    let complex = identity_complex();
    let e = build_end(&complex).unwrap();
    EndAutomorphismPayload { automorphism: DglaAutomorphism::identity(&e), complex }
}

/// `(id, 2 id, 0)` over `complex`.
pub fn scaling_automorphism(complex: TwoTermComplex) -> EndAutomorphismPayload {
    let e = build_end(&complex).unwrap();
    let mut f = DglaAutomorphism::identity(&e);
    f.f1 = f.f1.scale(&int(2));
    EndAutomorphismPayload { automorphism: f, complex }
}

pub fn tca_r3() -> ExactTca {
    ExactTca::new(form(3, &[0, 1, 2], "x1^2 + x2 x3")).unwrap()
}

pub fn tca_r4() -> ExactTca {
    ExactTca::new(form(4, &[1, 2, 3], "x1")).unwrap()
}

pub fn planar(n: usize, h: Form) -> TwistedPoisson {
    TwistedPoisson::new(Alt::basis(n, &[0, 1]), h).unwrap()
}

/// `π = ∂1∧∂2 + ∂3∧∂4 + x3 ∂1∧∂3` with `[π,π] = 2 ∂1∧∂3∧∂4`, twisted by
/// `h = dx2∧dx3∧dx4`.
pub fn twisted_r4() -> TwistedPoisson {
    let pi = Alt::basis(4, &[0, 1]).add(&Alt::basis(4, &[2, 3])).add(&vector(4, &[0, 2], "x3"));
    TwistedPoisson::new(pi, Alt::basis(4, &[1, 2, 3])).unwrap()
}

/// `π = ∂1∧∂2 + x2 ∂2∧∂3` with `[π,π] = -2 ∂1∧∂2∧∂3` and rank 2.
pub fn not_twisted_poisson() -> TwistedPoisson {
    let pi = Alt::basis(3, &[0, 1]).add(&vector(3, &[1, 2], "x2"));
    TwistedPoisson::new(pi, Alt::basis(3, &[0, 1, 2])).unwrap()
}

/// Every fixture that is a rendering of a domain object.
pub fn generated_fixtures() -> Vec<(&'static str, Structure)> {
    vec![
        ("abelian.alg", Structure::ShLeibniz(abelian())),
        ("e2-dg.alg", Structure::ShLeibniz(e2_dg())),
        ("bad-leibniz.alg", Structure::ShLeibniz(bad_leibniz())),
        ("skeletal-l3.alg", Structure::ShLeibniz(skeletal_l3())),
        ("e4.alg", Structure::CrossedModule(catalog::e4())),
        ("e4-dg.alg", Structure::ShLeibniz(crossed_to_dg(&catalog::e4()).unwrap())),
        ("bad-crossed.alg", Structure::CrossedModule(bad_crossed())),
        ("zero-quadruple.alg", Structure::Quadruple(zero_quadruple())),
        ("identity-automorphism.alg", Structure::EndAutomorphism(identity_automorphism())),
        ("scaling-automorphism.alg", Structure::EndAutomorphism(scaling_automorphism(zero_complex()))),
        ("bad-automorphism.alg", Structure::EndAutomorphism(scaling_automorphism(identity_complex()))),
        ("tca-r3.alg", Structure::ExactTca(tca_r3())),
        ("tca-r4.alg", Structure::ExactTca(tca_r4())),
        ("planar-poisson.alg", Structure::TwistedPoisson(planar(3, form(3, &[0, 1, 2], "x3")))),
        ("planar-poisson-r4.alg", Structure::TwistedPoisson(planar(4, form(4, &[1, 2, 3], "x1")))),
        ("twisted-poisson-r4.alg", Structure::TwistedPoisson(twisted_r4())),
        ("not-twisted-poisson.alg", Structure::TwistedPoisson(not_twisted_poisson())),
    ]
}

pub fn run(args: &[&str]) -> (i32, String, String) {
    let out = binary().args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

pub fn fixture(name: &str) -> String {
    fixtures_dir().join(name).display().to_string()
}
