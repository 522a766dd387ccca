//! The exact twisted Courant algebroid `TM ⊕ T*M` over `R^n` twisted by a
//! 3-form `h`, its Leibniz 2-algebra, and B-field transformations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{rat, Element};
use crate::check::{run_check, Family};
use crate::error::{shape, Error, Result};
use crate::exterior::{
    d, d_function, evaluate, interior, interior_multi, lie_derivative, vf_apply, vf_bracket, Alt, Form, Multivector,
    Poly,
};
use crate::report::{Residual, VerifyReport};
use crate::sh_leibniz::{verify_morphism_on_families, verify_on_families, MorphismMaps, ShLeibnizOps};

/// `X + ξ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneralizedSection {
    pub vf: Multivector,
    pub form: Form,
}

impl GeneralizedSection {
    pub fn new(vf: Multivector, form: Form) -> Result<Self> {
        if vf.degree() != 1 || form.degree() != 1 {
            return Err(Error::Degree("a section is a vector field plus a 1-form".into()));
        }
        if vf.nvars() != form.nvars() {
            return Err(shape("vector and form parts live on different spaces"));
        }
        Ok(GeneralizedSection { vf, form })
    }

    pub fn zero(n: usize) -> Self {
        GeneralizedSection { vf: Alt::zero(n, 1), form: Alt::zero(n, 1) }
    }

    pub fn vector(vf: Multivector) -> Self {
        let n = vf.nvars();
        GeneralizedSection { vf, form: Alt::zero(n, 1) }
    }

    pub fn covector(form: Form) -> Self {
        let n = form.nvars();
        GeneralizedSection { vf: Alt::zero(n, 1), form }
    }

    pub fn nvars(&self) -> usize {
        self.vf.nvars()
    }

    pub fn scale_poly(&self, f: &Poly) -> Self {
        GeneralizedSection { vf: self.vf.scale_poly(f), form: self.form.scale_poly(f) }
    }

    fn check_shape(&self, n: usize) -> Result<()> {
        if self.vf.degree() != 1 || self.form.degree() != 1 || self.vf.nvars() != n || self.form.nvars() != n {
            return Err(shape(format!("section {self} is not a section over R^{n}")));
        }
        Ok(())
    }
}

impl Element for GeneralizedSection {
    fn add(&self, other: &Self) -> Self {
        GeneralizedSection { vf: self.vf.add(&other.vf), form: self.form.add(&other.form) }
    }

    fn sub(&self, other: &Self) -> Self {
        GeneralizedSection { vf: self.vf.sub(&other.vf), form: self.form.sub(&other.form) }
    }

    fn neg(&self) -> Self {
        GeneralizedSection { vf: self.vf.neg(), form: self.form.neg() }
    }

    fn is_zero(&self) -> bool {
        self.vf.is_zero() && self.form.is_zero()
    }

    fn residual(&self) -> Residual {
        Residual::Symbolic(self.to_string())
    }
}

impl fmt::Display for GeneralizedSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.vf.is_zero(), self.form.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.vf),
            (true, false) => write!(f, "{}", self.form),
            (false, false) => write!(f, "{} + {}", self.vf, self.form),
        }
    }
}

/// `TM ⊕ T*M` over `R^n` with twisting 3-form `h`; `H = dh` is never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactTca {
    pub h: Form,
}

impl ExactTca {
    pub fn new(h: Form) -> Result<Self> {
        if h.degree() != 3 {
            return Err(Error::Degree(format!("h must be a 3-form, got degree {}", h.degree())));
        }
        Ok(ExactTca { h })
    }

    pub fn untwisted(n: usize) -> Self {
        ExactTca { h: Alt::zero(n, 3) }
    }

    pub fn nvars(&self) -> usize {
        self.h.nvars()
    }

    /// `H = dh`.
    pub fn big_h(&self) -> Form {
        d(&self.h)
    }

    fn check_family(&self, fam: &Family<GeneralizedSection>) -> Result<()> {
        if fam.is_empty() {
            return Err(Error::Precondition("section family is empty".into()));
        }
        fam.iter().try_for_each(|e| e.check_shape(self.nvars()))
    }
}

/// Which terms the bracket keeps. The mutants exist to show that the axiom
/// checks detect a wrong bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BracketVariant {
    Dorfman,
    /// Drops `- i_Y dξ`.
    WithoutInteriorD,
    /// Drops `L_X η`.
    WithoutLieDerivative,
}

/// `⟨X+ξ, Y+η⟩ = ξ(Y) + η(X)`.
pub fn pairing(e1: &GeneralizedSection, e2: &GeneralizedSection) -> Result<Poly> {
    if e1.nvars() != e2.nvars() {
        return Err(shape("sections live on different spaces"));
    }
    Ok(pair(e1, e2))
}

fn pair(e1: &GeneralizedSection, e2: &GeneralizedSection) -> Poly {
    evaluate(&e1.form, &e2.vf).add(&evaluate(&e2.form, &e1.vf))
}

/// `h(X,Y) = i_Y i_X h`, zero when either field vanishes.
fn h_term(h: &Form, x: &Multivector, y: &Multivector) -> Form {
    if h.is_zero() || x.is_zero() || y.is_zero() {
        return Alt::zero(h.nvars(), 1);
    }
    interior_multi(&[x, y], h).expect("degrees checked")
}

fn bracket_with(t: &ExactTca, v: BracketVariant, e1: &GeneralizedSection, e2: &GeneralizedSection) -> GeneralizedSection {
    let (x, xi) = (&e1.vf, &e1.form);
    let (y, eta) = (&e2.vf, &e2.form);
    let n = t.nvars();
    let mut form = h_term(&t.h, x, y);
    if v != BracketVariant::WithoutLieDerivative && !x.is_zero() && !eta.is_zero() {
        form = form.add(&lie_derivative(x, eta).expect("degrees checked"));
    }
    if v != BracketVariant::WithoutInteriorD && !y.is_zero() && !xi.is_zero() {
        form = form.sub(&interior(y, &d(xi)).expect("degrees checked"));
    }
    let vf = if x.is_zero() || y.is_zero() { Alt::zero(n, 1) } else { vf_bracket(x, y).expect("degrees checked") };
    GeneralizedSection { vf, form }
}

/// `⟦X+ξ, Y+η⟧ = [X,Y] + L_X η - i_Y dξ + i_Y i_X h`.
pub fn dorfman(t: &ExactTca, e1: &GeneralizedSection, e2: &GeneralizedSection) -> Result<GeneralizedSection> {
    dorfman_variant(t, BracketVariant::Dorfman, e1, e2)
}

pub fn dorfman_variant(
    t: &ExactTca,
    v: BracketVariant,
    e1: &GeneralizedSection,
    e2: &GeneralizedSection,
) -> Result<GeneralizedSection> {
    e1.check_shape(t.nvars())?;
    e2.check_shape(t.nvars())?;
    Ok(bracket_with(t, v, e1, e2))
}

/// Checks the three twisted Courant axioms on all tuples from `fam`:
///
/// - `nonskew`: `⟦e,e⟧ = ½ d⟨e,e⟩`
/// - `invariant-pairing`: `ρ(e1)⟨e2,e3⟩ = ⟨⟦e1,e2⟧,e3⟩ + ⟨e2,⟦e1,e3⟧⟩`
/// - `twisted-jacobi`: `i_{ρ(e1)∧ρ(e2)∧ρ(e3)} H = ⟦e1,⟦e2,e3⟧⟧ - ⟦⟦e1,e2⟧,e3⟧ - ⟦e2,⟦e1,e3⟧⟧`
pub fn check_tca_axioms(t: &ExactTca, fam: &Family<GeneralizedSection>) -> Result<VerifyReport> {
    check_tca_axioms_with(t, fam, BracketVariant::Dorfman)
}

pub fn check_tca_axioms_with(
    t: &ExactTca,
    fam: &Family<GeneralizedSection>,
    v: BracketVariant,
) -> Result<VerifyReport> {
    t.check_family(fam)?;
    let xs = &fam.items;
    let k = xs.len();
    let lab = &fam.labels[..];
    let big_h = t.big_h();
    let br = |a: &GeneralizedSection, b: &GeneralizedSection| bracket_with(t, v, a, b);
    let table = crate::check::Table2::build(k, k, |i, j| br(&xs[i], &xs[j]));
    let mut report = VerifyReport::new();
    report.push(run_check("nonskew", "⟦e,e⟧ = ½ d⟨e,e⟩", &[k], &[lab], |s| {
        let e = &xs[s[0]];
        table.get(s[0], s[0]).sub(&GeneralizedSection::covector(d_function(&pair(e, e)).scale(&rat(1, 2))))
    }));
    report.push(run_check(
        "invariant-pairing",
        "ρ(e1)⟨e2,e3⟩ = ⟨⟦e1,e2⟧,e3⟩ + ⟨e2,⟦e1,e3⟧⟩",
        &[k, k, k],
        &[lab, lab, lab],
        |s| {
            let (a, b, c) = (s[0], s[1], s[2]);
            vf_apply(&xs[a].vf, &pair(&xs[b], &xs[c]))
                .sub(&pair(table.get(a, b), &xs[c]))
                .sub(&pair(&xs[b], table.get(a, c)))
        },
    ));
    report.push(run_check(
        "twisted-jacobi",
        "⟦e1,⟦e2,e3⟧⟧ - ⟦⟦e1,e2⟧,e3⟧ - ⟦e2,⟦e1,e3⟧⟧ = i_{ρ(e1)∧ρ(e2)∧ρ(e3)} H",
        &[k, k, k],
        &[lab, lab, lab],
        |s| {
            let (a, b, c) = (s[0], s[1], s[2]);
            let j = br(&xs[a], table.get(b, c))
                .sub(&br(table.get(a, b), &xs[c]))
                .sub(&br(&xs[b], table.get(a, c)));
            j.sub(&GeneralizedSection::covector(triple_interior(&big_h, &xs[a].vf, &xs[b].vf, &xs[c].vf)))
        },
    ));
    Ok(report)
}

/// `i_{X∧Y∧Z} H` as a 1-form. `H = dh` is the zero 3-form when `n = 3`.
fn triple_interior(w: &Form, x: &Multivector, y: &Multivector, z: &Multivector) -> Form {
    if w.is_zero() || x.is_zero() || y.is_zero() || z.is_zero() {
        return Alt::zero(w.nvars(), 1);
    }
    interior_multi(&[x, y, z], w).expect("degree checked")
}

/// `Ω¹ --incl--> Γ(TM ⊕ T*M)` with `l2 = ⟦·,·⟧`, `l2(e, η) = L_X η`,
/// `l2(η, e) = -i_X dη` and `l3 = i_{X∧Y∧Z} dh`.
#[derive(Debug, Clone)]
pub struct TcaLeibniz2 {
    pub tca: ExactTca,
    big_h: Form,
}

impl TcaLeibniz2 {
    pub fn new(tca: ExactTca) -> Self {
        let big_h = tca.big_h();
        TcaLeibniz2 { tca, big_h }
    }

    fn n(&self) -> usize {
        self.tca.nvars()
    }
}

impl ShLeibnizOps for TcaLeibniz2 {
    type V0 = GeneralizedSection;
    type V1 = Form;

    fn zero0(&self) -> GeneralizedSection {
        GeneralizedSection::zero(self.n())
    }

    fn zero1(&self) -> Form {
        Alt::zero(self.n(), 1)
    }

    fn d(&self, m: &Form) -> GeneralizedSection {
        GeneralizedSection::covector(m.clone())
    }

    fn l2_00(&self, x: &GeneralizedSection, y: &GeneralizedSection) -> GeneralizedSection {
        bracket_with(&self.tca, BracketVariant::Dorfman, x, y)
    }

    fn l2_01(&self, x: &GeneralizedSection, m: &Form) -> Form {
        if x.vf.is_zero() || m.is_zero() {
            return self.zero1();
        }
        lie_derivative(&x.vf, m).expect("degrees checked")
    }

    fn l2_10(&self, m: &Form, x: &GeneralizedSection) -> Form {
        if x.vf.is_zero() || m.is_zero() {
            return self.zero1();
        }
        interior(&x.vf, &d(m)).expect("degrees checked").neg()
    }

    fn l3(&self, x: &GeneralizedSection, y: &GeneralizedSection, z: &GeneralizedSection) -> Form {
        if self.big_h.is_zero() {
            return self.zero1();
        }
        triple_interior(&self.big_h, &x.vf, &y.vf, &z.vf)
    }

    fn l3_vanishes(&self) -> bool {
        self.big_h.is_zero()
    }
}

/// Verifies conditions (a)-(f) for the Leibniz 2-algebra of `t` over the
/// section family and the 1-form family.
pub fn build_leibniz2(
    t: &ExactTca,
    fam: &Family<GeneralizedSection>,
    forms: &Family<Form>,
) -> Result<VerifyReport> {
    t.check_family(fam)?;
    check_forms(t.nvars(), forms)?;
    Ok(verify_on_families(&TcaLeibniz2::new(t.clone()), fam, forms))
}

fn check_forms(n: usize, forms: &Family<Form>) -> Result<()> {
    if forms.is_empty() {
        return Err(Error::Precondition("1-form family is empty".into()));
    }
    match forms.iter().find(|f| f.degree() != 1 || f.nvars() != n) {
        Some(f) => Err(shape(format!("{f} is not a 1-form on R^{n}"))),
        None => Ok(()),
    }
}

/// `e^B(X + ξ) = X + ξ + i_X B`.
pub fn b_transform(b: &Form, e: &GeneralizedSection) -> Result<GeneralizedSection> {
    if b.degree() != 2 {
        return Err(Error::Degree(format!("B must be a 2-form, got degree {}", b.degree())));
    }
    e.check_shape(b.nvars())?;
    Ok(apply_b(b, e))
}

fn apply_b(b: &Form, e: &GeneralizedSection) -> GeneralizedSection {
    if b.is_zero() || e.vf.is_zero() {
        return e.clone();
    }
    GeneralizedSection { vf: e.vf.clone(), form: e.form.add(&interior(&e.vf, b).expect("degree checked")) }
}

fn check_b(b: &Form, h: &Form) -> Result<()> {
    if b.degree() != 2 {
        return Err(Error::Degree(format!("B must be a 2-form, got degree {}", b.degree())));
    }
    if b.nvars() != h.nvars() {
        return Err(shape("B and h live on different spaces"));
    }
    Ok(())
}

/// `e^B ⟦e1,e2⟧_{h+dB} = ⟦e^B e1, e^B e2⟧_h` on all pairs from `fam`.
pub fn check_b_intertwine(b: &Form, t: &ExactTca, fam: &Family<GeneralizedSection>) -> Result<VerifyReport> {
    check_b(b, &t.h)?;
    t.check_family(fam)?;
    let shifted = ExactTca { h: t.h.add(&d(b)) };
    let xs = &fam.items;
    let k = xs.len();
    let lab = &fam.labels[..];
    let images: Vec<GeneralizedSection> = xs.iter().map(|e| apply_b(b, e)).collect();
    let mut report = VerifyReport::new();
    report.push(run_check(
        "b-intertwine",
        "e^B ⟦e1,e2⟧_{h+dB} = ⟦e^B e1, e^B e2⟧_h",
        &[k, k],
        &[lab, lab],
        |s| {
            let (i, j) = (s[0], s[1]);
            let lhs = apply_b(b, &bracket_with(&shifted, BracketVariant::Dorfman, &xs[i], &xs[j]));
            lhs.sub(&bracket_with(t, BracketVariant::Dorfman, &images[i], &images[j]))
        },
    ));
    Ok(report)
}

/// The morphism `(e^B, Id, f2)` with `f2(X+ξ, Y+η) = i_{X∧Y} dB` from the
/// Leibniz 2-algebra of `t` to itself, checked on the given families.
pub fn check_b_morphism(
    b: &Form,
    t: &ExactTca,
    fam: &Family<GeneralizedSection>,
    forms: &Family<Form>,
) -> Result<VerifyReport> {
    check_b(b, &t.h)?;
    t.check_family(fam)?;
    check_forms(t.nvars(), forms)?;
    let a = TcaLeibniz2::new(t.clone());
    let db = d(b);
    let f0 = |e: &GeneralizedSection| apply_b(b, e);
    let f1 = |m: &Form| m.clone();
    let f2 = |x: &GeneralizedSection, y: &GeneralizedSection| h_term(&db, &x.vf, &y.vf);
    let maps = MorphismMaps::<TcaLeibniz2, TcaLeibniz2> { f0: &f0, f1: &f1, f2: &f2 };
    Ok(verify_morphism_on_families(&a, &a, &maps, fam, forms))
}

/// `∂i`, `dxi`, `x_j ∂i`, `x_j dxi`.
pub fn default_sections(n: usize) -> Family<GeneralizedSection> {
    let mut items = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        items.push(GeneralizedSection::vector(Alt::basis(n, &[i])));
        labels.push(format!("∂{}", i + 1));
    }
    for i in 0..n {
        items.push(GeneralizedSection::covector(Alt::basis(n, &[i])));
        labels.push(format!("dx{}", i + 1));
    }
    for j in 0..n {
        for i in 0..n {
            items.push(GeneralizedSection::vector(Alt::term(n, &[i], Poly::var(n, j))));
            labels.push(format!("x{} ∂{}", j + 1, i + 1));
        }
    }
    for j in 0..n {
        for i in 0..n {
            items.push(GeneralizedSection::covector(Alt::term(n, &[i], Poly::var(n, j))));
            labels.push(format!("x{} dx{}", j + 1, i + 1));
        }
    }
    Family::new(items, labels)
}

/// `dxi`, `x_j dxi`.
pub fn default_forms(n: usize) -> Family<Form> {
    let mut items = Vec::new();
    for i in 0..n {
        items.push(Alt::basis(n, &[i]));
    }
    for j in 0..n {
        for i in 0..n {
            items.push(Alt::term(n, &[i], Poly::var(n, j)));
        }
    }
    Family::displayed(items)
}
