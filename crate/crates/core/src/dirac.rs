//! Graph Dirac structures of the exact model, twisted Poisson bivectors, the
//! bracket on 1-forms and the Lie 2-algebra it carries.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, Element, LinearSystem, Rational};
use crate::check::{run_check, Family};
use crate::courant::{dorfman, pairing, ExactTca, GeneralizedSection};
use crate::error::{shape, Error, Result};
use crate::exterior::{
    bivector_pair, d, d_function, interior_multi, lie_derivative, schouten_sq, sharp, triple_sharp, vf_apply,
    vf_bracket, wedge, Alt, Form, Monomial, Multivector, Poly,
};
use crate::report::{CheckRecord, VerifyReport, Witness};
use crate::sh_leibniz::{verify_on_families, ShLeibnizOps};

/// The coefficient `c` in `[π,π] = c ∧³π♯ h`. With the contraction and
/// Schouten conventions of [`crate::exterior`] and `h(X,Y) = i_Y i_X h`,
/// this is the value for which the graph of `π♯` is closed under the twisted
/// Dorfman bracket.
pub const TWISTED_POISSON_COEFF: (i64, i64) = (-2, 1);

fn coeff() -> Rational {
    rat(TWISTED_POISSON_COEFF.0, TWISTED_POISSON_COEFF.1)
}

/// A bivector `π` and a 3-form `h` on the same `R^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedPoisson {
    pub pi: Multivector,
    pub h: Form,
}

impl TwistedPoisson {
    pub fn new(pi: Multivector, h: Form) -> Result<Self> {
        if pi.degree() != 2 || h.degree() != 3 {
            return Err(Error::Degree("expected a bivector and a 3-form".into()));
        }
        if pi.nvars() != h.nvars() {
            return Err(shape("π and h live on different spaces"));
        }
        Ok(TwistedPoisson { pi, h })
    }

    pub fn nvars(&self) -> usize {
        self.pi.nvars()
    }

    /// `[π,π] - c ∧³π♯ h`.
    pub fn residual(&self) -> Result<Multivector> {
        residual_with(&self.pi, &self.h, &coeff())
    }

    fn sharp(&self, xi: &Form) -> Multivector {
        if xi.is_zero() || self.pi.is_zero() {
            return Alt::zero(self.nvars(), 1);
        }
        sharp(&self.pi, xi).expect("degrees checked")
    }

    fn check_forms(&self, fam: &Family<Form>) -> Result<()> {
        if fam.is_empty() {
            return Err(Error::Precondition("1-form family is empty".into()));
        }
        match fam.iter().find(|f| f.degree() != 1 || f.nvars() != self.nvars()) {
            Some(f) => Err(shape(format!("{f} is not a 1-form on R^{}", self.nvars()))),
            None => Ok(()),
        }
    }

    fn gate(&self) -> Result<()> {
        let r = self.residual()?;
        if !r.is_zero() {
            return Err(Error::Precondition(format!("π is not h-twisted Poisson: residual {r}")));
        }
        Ok(())
    }
}

fn residual_with(pi: &Multivector, h: &Form, c: &Rational) -> Result<Multivector> {
    let lhs = schouten_sq(pi)?;
    if pi.nvars() < 3 {
        return Ok(lhs);
    }
    Ok(lhs.sub(&triple_sharp(pi, h)?.scale(c)))
}

/// `[π,π] = c ∧³π♯ h` as an exact multivector identity.
pub fn check_twisted_poisson(p: &TwistedPoisson) -> Result<VerifyReport> {
    let r = p.residual()?;
    let mut record = CheckRecord::new("twisted-poisson", format!("[π,π] = {} ∧³π♯h", coeff()));
    if r.is_zero() {
        record.pass_one();
    } else {
        record.fail_with(Witness { tuple: vec!["π".into(), "h".into()], indices: vec![], residual: r.residual() });
    }
    let mut report = VerifyReport::new();
    report.push(record);
    Ok(report)
}

/// `[ξ,η]_{π,h} = L_{π♯ξ}η - L_{π♯η}ξ + d π(η,ξ) + i_{π♯ξ∧π♯η} h`.
pub fn pi_bracket(p: &TwistedPoisson, xi: &Form, eta: &Form) -> Result<Form> {
    for f in [xi, eta] {
        if f.degree() != 1 || f.nvars() != p.nvars() {
            return Err(shape(format!("{f} is not a 1-form on R^{}", p.nvars())));
        }
    }
    Ok(bracket(p, xi, eta))
}

fn bracket(p: &TwistedPoisson, xi: &Form, eta: &Form) -> Form {
    let n = p.nvars();
    let (sx, se) = (p.sharp(xi), p.sharp(eta));
    let mut out = Alt::zero(n, 1);
    if !sx.is_zero() && !eta.is_zero() {
        out = out.add(&lie_derivative(&sx, eta).expect("degrees checked"));
    }
    if !se.is_zero() && !xi.is_zero() {
        out = out.sub(&lie_derivative(&se, xi).expect("degrees checked"));
    }
    if !xi.is_zero() && !eta.is_zero() && !p.pi.is_zero() {
        out = out.add(&d_function(&bivector_pair(&p.pi, eta, xi).expect("degrees checked")));
    }
    if !sx.is_zero() && !se.is_zero() && !p.h.is_zero() {
        out = out.add(&interior_multi(&[&sx, &se], &p.h).expect("degrees checked"));
    }
    out
}

/// `π♯[ξ,η]_{π,h} = [π♯ξ, π♯η]` on all pairs from `fam`.
pub fn check_anchor_morphism(p: &TwistedPoisson, fam: &Family<Form>) -> Result<VerifyReport> {
    p.check_forms(fam)?;
    let k = fam.len();
    let lab = &fam.labels[..];
    let xs = &fam.items;
    let sharps: Vec<Multivector> = xs.iter().map(|x| p.sharp(x)).collect();
    let mut report = VerifyReport::new();
    report.push(run_check("anchor-morphism", "π♯[ξ,η] = [π♯ξ, π♯η]", &[k, k], &[lab, lab], |s| {
        let (i, j) = (s[0], s[1]);
        p.sharp(&bracket(p, &xs[i], &xs[j])).sub(&vf_bracket(&sharps[i], &sharps[j]).expect("degrees checked"))
    }));
    Ok(report)
}

/// `l3(ξ,η,γ) = i_{π♯ξ∧π♯η∧π♯γ} dh`.
pub fn l3_twisted(p: &TwistedPoisson, xi: &Form, eta: &Form, gamma: &Form) -> Result<Form> {
    for f in [xi, eta, gamma] {
        if f.degree() != 1 || f.nvars() != p.nvars() {
            return Err(shape(format!("{f} is not a 1-form on R^{}", p.nvars())));
        }
    }
    Ok(l3(p, &d(&p.h), &[p.sharp(xi), p.sharp(eta), p.sharp(gamma)]))
}

fn l3(p: &TwistedPoisson, dh: &Form, fields: &[Multivector; 3]) -> Form {
    if dh.is_zero() || fields.iter().any(Alt::is_zero) {
        return Alt::zero(p.nvars(), 1);
    }
    interior_multi(&[&fields[0], &fields[1], &fields[2]], dh).expect("degrees checked")
}

/// Why `l3` vanishes identically, when it does for structural reasons:
/// `h` is closed, or `π ∧ π = 0` so that `π` has rank at most 2 everywhere
/// and any three vectors `π♯ξ` are dependent.
pub fn l3_vanishing_reason(p: &TwistedPoisson) -> Option<&'static str> {
    if d(&p.h).is_zero() {
        return Some("dh = 0");
    }
    let n = p.nvars();
    if n < 4 || wedge(&p.pi, &p.pi).map_or(true, |w| w.is_zero()) {
        return Some("π has rank at most 2");
    }
    None
}

/// The 2-term L∞-algebra `Γ(Ker π♯) --incl--> Ω¹` with `l2 = [·,·]_{π,h}`
/// and `l3 = i_{π♯ξ∧π♯η∧π♯γ} dh`.
pub struct PoissonLie2 {
    pub data: TwistedPoisson,
    dh: Form,
    degenerate: bool,
}

impl PoissonLie2 {
    pub fn new(data: TwistedPoisson) -> Self {
        let dh = d(&data.h);
        let degenerate = l3_vanishing_reason(&data).is_some();
        PoissonLie2 { data, dh, degenerate }
    }
}

impl ShLeibnizOps for PoissonLie2 {
    type V0 = Form;
    type V1 = Form;

    fn zero0(&self) -> Form {
        Alt::zero(self.data.nvars(), 1)
    }

    fn zero1(&self) -> Form {
        Alt::zero(self.data.nvars(), 1)
    }

    fn d(&self, m: &Form) -> Form {
        m.clone()
    }

    fn l2_00(&self, x: &Form, y: &Form) -> Form {
        bracket(&self.data, x, y)
    }

    fn l2_01(&self, x: &Form, m: &Form) -> Form {
        bracket(&self.data, x, m)
    }

    fn l2_10(&self, m: &Form, x: &Form) -> Form {
        bracket(&self.data, m, x)
    }

    fn l3(&self, x: &Form, y: &Form, z: &Form) -> Form {
        if self.degenerate {
            return self.zero1();
        }
        let p = &self.data;
        l3(p, &self.dh, &[p.sharp(x), p.sharp(y), p.sharp(z)])
    }

    fn l3_vanishes(&self) -> bool {
        self.degenerate
    }
}

/// The members of `fam` annihilated by `π♯`.
pub fn kernel_members(p: &TwistedPoisson, fam: &Family<Form>) -> Family<Form> {
    let (items, labels) = fam
        .items
        .iter()
        .zip(&fam.labels)
        .filter(|(f, _)| p.sharp(f).is_zero())
        .map(|(f, l)| (f.clone(), l.clone()))
        .unzip();
    Family::new(items, labels)
}

/// Verifies the Lie 2-algebra of a twisted Poisson structure on `fam` and
/// its kernel members: conditions (a)-(f), skew-symmetry of `l2` and `l3`,
/// and that `l3` is kernel-valued.
pub fn check_lie2(p: &TwistedPoisson, fam: &Family<Form>) -> Result<VerifyReport> {
    p.check_forms(fam)?;
    p.gate()?;
    let a = PoissonLie2::new(p.clone());
    let ker = kernel_members(p, fam);
    let mut report = verify_on_families(&a, fam, &ker);
    let k = fam.len();
    let lab = &fam.labels[..];
    let xs = &fam.items;
    report.push(run_check("skew-l2", "[ξ,η] = -[η,ξ]", &[k, k], &[lab, lab], |s| {
        a.l2_00(&xs[s[0]], &xs[s[1]]).add(&a.l2_00(&xs[s[1]], &xs[s[0]]))
    }));
    let (skew, kernel) = skew_l3_and_kernel(&a, fam);
    report.push(skew);
    report.push(kernel);
    Ok(report)
}

fn skew_l3_and_kernel(a: &PoissonLie2, fam: &Family<Form>) -> (CheckRecord, CheckRecord) {
    let k = fam.len();
    let lab = &fam.labels[..];
    let xs = &fam.items;
    let dims = [k, k, k];
    let labels = [lab, lab, lab];
    let skew = run_check("skew-l3", "l3 changes sign under each transposition", &dims, &labels, |s| {
        let (x, y, z) = (&xs[s[0]], &xs[s[1]], &xs[s[2]]);
        let v = a.l3(x, y, z);
        vec![v.add(&a.l3(y, x, z)), v.add(&a.l3(x, z, y)), v.add(&a.l3(z, y, x))]
    });
    let kernel = run_check("l3-kernel", "π♯ l3(ξ,η,γ) = 0", &dims, &labels, |s| {
        a.data.sharp(&a.l3(&xs[s[0]], &xs[s[1]], &xs[s[2]]))
    });
    (skew, kernel)
}

/// For graph sections `π♯ξ + ξ` over `fam`: isotropy, closure under the
/// Dorfman bracket twisted by `h`, and `f0(π♯ξ + ξ) = ξ` intertwining the
/// Dorfman bracket with `[·,·]_{π,h}`.
pub fn check_graph_dirac(p: &TwistedPoisson, fam: &Family<Form>) -> Result<VerifyReport> {
    p.check_forms(fam)?;
    let t = ExactTca::new(p.h.clone())?;
    let xs = &fam.items;
    let graph: Vec<GeneralizedSection> =
        xs.iter().map(|x| GeneralizedSection { vf: p.sharp(x), form: x.clone() }).collect();
    let k = xs.len();
    let lab: Vec<String> = fam.labels.iter().map(|l| format!("π♯({l}) + {l}")).collect();
    let lab = &lab[..];
    let brackets = crate::check::Table2::build(k, k, |i, j| dorfman(&t, &graph[i], &graph[j]).expect("shapes checked"));
    let mut report = VerifyReport::new();
    report.push(run_check("isotropy", "⟨π♯ξ+ξ, π♯η+η⟩ = 0", &[k, k], &[lab, lab], |s| {
        pairing(&graph[s[0]], &graph[s[1]]).expect("shapes checked")
    }));
    report.push(run_check("closure", "⟦π♯ξ+ξ, π♯η+η⟧ lies in the graph", &[k, k], &[lab, lab], |s| {
        let b = brackets.get(s[0], s[1]);
        b.vf.sub(&p.sharp(&b.form))
    }));
    report.push(run_check(
        "graph-intertwine",
        "f0⟦π♯ξ+ξ, π♯η+η⟧ = [ξ,η]_{π,h}",
        &[k, k],
        &[lab, lab],
        |s| brackets.get(s[0], s[1]).form.sub(&bracket(p, &xs[s[0]], &xs[s[1]])),
    ));
    Ok(report)
}

/// The H-twisted Lie algebroid axioms for `(T*M, [·,·]_{π,h}, π♯, l3)`:
/// the Jacobi anomaly, the anchored Leibniz rule against each function in
/// `functions`, `DH = 0`, and that `H` takes values in `Ker π♯`.
pub fn check_h_twisted_lie_algebroid(
    p: &TwistedPoisson,
    fam: &Family<Form>,
    functions: &Family<Poly>,
) -> Result<VerifyReport> {
    p.check_forms(fam)?;
    p.gate()?;
    let a = PoissonLie2::new(p.clone());
    let xs = &fam.items;
    let k = xs.len();
    let lab = &fam.labels[..];
    let br = crate::check::Table2::build(k, k, |i, j| a.l2_00(&xs[i], &xs[j]));
    let big_h = crate::check::Table3::build(k, |i, j, l| a.l3(&xs[i], &xs[j], &xs[l]));
    let mut report = VerifyReport::new();
    report.push(run_check(
        "jacobi-anomaly",
        "[e1,[e2,e3]] + c.p. = H(e1,e2,e3)",
        &[k, k, k],
        &[lab, lab, lab],
        |s| {
            let (i, j, l) = (s[0], s[1], s[2]);
            a.l2_00(&xs[i], br.get(j, l))
                .add(&a.l2_00(&xs[j], br.get(l, i)))
                .add(&a.l2_00(&xs[l], br.get(i, j)))
                .sub(big_h.get(i, j, l))
        },
    ));
    let flab = &functions.labels[..];
    report.push(run_check(
        "anchored-leibniz",
        "[e1, f e2] = f[e1,e2] + ρ(e1)(f) e2",
        &[k, k, functions.len()],
        &[lab, lab, flab],
        |s| {
            let (i, j, f) = (s[0], s[1], &functions.items[s[2]]);
            let lhs = a.l2_00(&xs[i], &xs[j].scale_poly(f));
            let rhs = br.get(i, j).scale_poly(f).add(&xs[j].scale_poly(&vf_apply(&p.sharp(&xs[i]), f)));
            lhs.sub(&rhs)
        },
    ));
    if a.l3_vanishes() {
        let mut record = CheckRecord::new("DH", "DH = 0");
        record.evaluated = k.pow(4);
        report.push(record);
    } else {
        report.push(run_check("DH", "DH = 0", &[k, k, k, k], &[lab, lab, lab, lab], |s| {
            let e = [s[0], s[1], s[2], s[3]];
            let mut total = a.zero1();
            for i in 0..4 {
                let rest: Vec<usize> = (0..4).filter(|&m| m != i).map(|m| e[m]).collect();
                let term = a.l2_00(&xs[e[i]], big_h.get(rest[0], rest[1], rest[2]));
                total = if i % 2 == 0 { total.add(&term) } else { total.sub(&term) };
            }
            for i in 0..4 {
                for j in i + 1..4 {
                    let rest: Vec<&Form> = (0..4).filter(|&m| m != i && m != j).map(|m| &xs[e[m]]).collect();
                    let term = a.l3(br.get(e[i], e[j]), rest[0], rest[1]);
                    // (-1)^{i+j} with 1-based i, j
                    total = if (i + j) % 2 == 0 { total.add(&term) } else { total.sub(&term) };
                }
            }
            total
        }));
    }
    report.push(skew_l3_and_kernel(&a, fam).1);
    Ok(report)
}

/// Coordinate functions `x1..xn`, the default test functions for the
/// anchored Leibniz rule.
pub fn coordinate_functions(n: usize) -> Family<Poly> {
    Family::displayed((0..n).map(|i| Poly::var(n, i)).collect())
}

/// All monomials of total degree at most `max_degree` in `n` variables.
fn monomials(n: usize, max_degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for _ in 0..max_degree {
        let mut next = out.clone();
        for m in &out {
            for i in 0..n {
                let mut m2 = *m;
                m2.0[i] += 1;
                if !next.contains(&m2) {
                    next.push(m2);
                }
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Solutions `h` of `[π,π] = c ∧³π♯ h` whose coefficients are polynomials of
/// degree at most `max_degree`, as `particular + span(kernel)`. `None` when
/// no such `h` exists.
pub fn search_twisted_h(pi: &Multivector, max_degree: u32) -> Result<Option<(Form, Vec<Form>)>> {
    search_twisted_h_with(pi, max_degree, &coeff())
}

fn search_twisted_h_with(pi: &Multivector, max_degree: u32, c: &Rational) -> Result<Option<(Form, Vec<Form>)>> {
    if pi.degree() != 2 {
        return Err(Error::Degree("expected a bivector".into()));
    }
    let n = pi.nvars();
    if n < 3 {
        return Err(shape("3-forms need at least 3 variables"));
    }
    let monos = monomials(n, max_degree);
    let mut slots: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                slots.push(vec![i, j, k]);
            }
        }
    }
    // unknown (slot, monomial) -> the 3-form with that single term
    let unknowns: Vec<Form> = slots
        .iter()
        .flat_map(|s| monos.iter().map(move |m| Alt::term(n, s, Poly::monomial(n, *m, rat(1, 1)))))
        .collect();
    let images: Vec<Multivector> =
        unknowns.iter().map(|h| triple_sharp(pi, h).map(|t| t.scale(c))).collect::<Result<_>>()?;
    let target = schouten_sq(pi)?;
    // one equation per (output index triple, output monomial)
    let mut rows: std::collections::BTreeMap<(Vec<usize>, Monomial), Vec<(usize, Rational)>> = Default::default();
    for (u, img) in images.iter().enumerate() {
        for (idx, poly) in img.components() {
            for (m, v) in poly.terms() {
                rows.entry((idx.to_vec(), *m)).or_default().push((u, v.clone()));
            }
        }
    }
    let mut rhs: std::collections::BTreeMap<(Vec<usize>, Monomial), Rational> = Default::default();
    for (idx, poly) in target.components() {
        for (m, v) in poly.terms() {
            rhs.insert((idx.to_vec(), *m), v.clone());
            rows.entry((idx.to_vec(), *m)).or_default();
        }
    }
    let mut sys = LinearSystem::new(unknowns.len());
    for (key, row) in rows {
        let b = rhs.get(&key).cloned().unwrap_or_else(Rational::zero);
        sys.add_equation(row, b);
    }
    let Some(sol) = sys.solve() else { return Ok(None) };
    let combine = |coeffs: &[Rational]| {
        let mut h = Alt::zero(n, 3);
        for (c, f) in coeffs.iter().zip(&unknowns) {
            if !c.is_zero() {
                h = h.add(&f.scale(c));
            }
        }
        h
    };
    let particular = combine(&sol.particular.0);
    let kernel = sol.kernel.iter().map(|k| combine(&k.0)).collect();
    Ok(Some((particular, kernel)))
}
