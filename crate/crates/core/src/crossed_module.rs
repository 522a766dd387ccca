//! Leibniz algebras, their representations and crossed modules, together
//! with the correspondences between dg / skeletal 2-term algebras and
//! crossed modules / cohomology quadruples.

use serde::{Deserialize, Serialize};

use crate::algebra::{Coords, Element, FinSpace, LinearMap, StructureTensor};
use crate::check::{run_check, Family};
use crate::cohomology::{is_cocycle, Cochain};
use crate::error::{shape, Error, Result};
use crate::report::VerifyReport;
use crate::sh_leibniz::{check_sh_leibniz, ShLeibniz2, TwoTermComplex};

/// A (left) Leibniz algebra: `[x,[y,z]] = [[x,y],z] + [y,[x,z]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeibnizAlgebra {
    pub space: FinSpace,
    pub bracket: StructureTensor,
}

impl LeibnizAlgebra {
    pub fn new(space: FinSpace, bracket: StructureTensor) -> Result<Self> {
        let a = LeibnizAlgebra { space, bracket };
        a.validate()?;
        Ok(a)
    }

    pub fn abelian(space: FinSpace) -> Self {
        let bracket = StructureTensor::zeros(vec![space.clone(), space.clone()], space.clone());
        LeibnizAlgebra { space, bracket }
    }

    /// Builds an algebra from nonzero brackets of basis vectors
    /// `(i, j, [e_i, e_j])`, indices 0-based.
    pub fn from_brackets(space: FinSpace, brackets: &[(usize, usize, &[i64])]) -> Result<Self> {
        let mut a = Self::abelian(space);
        for (i, j, v) in brackets {
            a.bracket.set(&[*i, *j], &Coords::from_ints(v))?;
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.space.dim;
        if self.bracket.dims() != [n, n] || self.bracket.target.dim != n {
            return Err(shape(format!("bracket on a space of dimension {n} has the wrong shape")));
        }
        Ok(())
    }

    pub fn bracket(&self, x: &Coords, y: &Coords) -> Coords {
        self.bracket.eval(&[x, y])
    }

    pub fn basis_family(&self, prefix: &str) -> Family<Coords> {
        Family::numbered(self.space.basis(), prefix)
    }

    /// Adjoint representation: `l_x u = [x,u]`, `r_x u = [u,x]`.
    pub fn adjoint(&self) -> LeibnizRep {
        LeibnizRep {
            algebra: self.clone(),
            module: self.space.clone(),
            left: self.bracket.clone(),
            right: self.bracket.clone(),
        }
    }

    /// Trivial representation on `module`.
    pub fn trivial_rep(&self, module: FinSpace) -> LeibnizRep {
        LeibnizRep {
            algebra: self.clone(),
            left: StructureTensor::zeros(vec![self.space.clone(), module.clone()], module.clone()),
            right: StructureTensor::zeros(vec![module.clone(), self.space.clone()], module.clone()),
            module,
        }
    }
}

/// A representation: left action `l_g u = [g,u]` and right action
/// `r_g u = [u,g]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeibnizRep {
    pub algebra: LeibnizAlgebra,
    pub module: FinSpace,
    /// `g x V -> V`
    pub left: StructureTensor,
    /// `V x g -> V`
    pub right: StructureTensor,
}

impl LeibnizRep {
    pub fn validate(&self) -> Result<()> {
        self.algebra.validate()?;
        let (n, k) = (self.algebra.dim(), self.module.dim);
        if self.left.dims() != [n, k] || self.left.target.dim != k {
            return Err(shape("left action has the wrong shape"));
        }
        if self.right.dims() != [k, n] || self.right.target.dim != k {
            return Err(shape("right action has the wrong shape"));
        }
        Ok(())
    }

    pub fn l(&self, g: &Coords, u: &Coords) -> Coords {
        self.left.eval(&[g, u])
    }

    pub fn r(&self, g: &Coords, u: &Coords) -> Coords {
        self.right.eval(&[u, g])
    }
}

/// `mu: g -> h` with an action of `h` on `g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedModule {
    pub g: LeibnizAlgebra,
    pub h: LeibnizAlgebra,
    pub mu: LinearMap,
    /// Representation of `h` on the underlying space of `g`.
    pub action: LeibnizRep,
}

impl CrossedModule {
    pub fn validate(&self) -> Result<()> {
        self.g.validate()?;
        self.h.validate()?;
        self.action.validate()?;
        if self.action.algebra != self.h {
            return Err(shape("the action must be a representation of h"));
        }
        if !self.action.module.same_shape(&self.g.space) {
            return Err(shape("the action must act on the underlying space of g"));
        }
        if !self.mu.source.same_shape(&self.g.space) || !self.mu.target.same_shape(&self.h.space) {
            return Err(shape("mu must map g to h"));
        }
        Ok(())
    }
}

/// `(g, V, rho, phi)` with `phi` a 3-cocycle of `g` with values in `V`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletalQuadruple {
    pub g: LeibnizAlgebra,
    pub v: FinSpace,
    pub rho: LeibnizRep,
    pub phi: StructureTensor,
}

pub fn check_leibniz(a: &LeibnizAlgebra) -> Result<VerifyReport> {
    a.validate()?;
    let fam = a.basis_family("e");
    let b = |x: &Coords, y: &Coords| a.bracket(x, y);
    let items = &fam.items;
    let mut report = VerifyReport::new();
    report.push(run_check(
        "leibniz",
        "[x,[y,z]] = [[x,y],z] + [y,[x,z]]",
        &[a.dim(); 3],
        &[&fam.labels, &fam.labels, &fam.labels],
        |t| {
            let (x, y, z) = (&items[t[0]], &items[t[1]], &items[t[2]]);
            b(x, &b(y, z)).sub(&b(&b(x, y), z)).sub(&b(y, &b(x, z)))
        },
    ));
    Ok(report)
}

/// `l_[g1,g2] = [l_g1, l_g2]`, `r_[g1,g2] = [l_g1, r_g2]`,
/// `r_g2 l_g1 = -r_g2 r_g1`, on basis pairs applied to basis module vectors.
pub fn check_representation(r: &LeibnizRep) -> Result<VerifyReport> {
    r.validate()?;
    let g = r.algebra.basis_family("e");
    let v = Family::numbered(r.module.basis(), "v");
    let (n, k) = (g.len(), v.len());
    let labels: [&[String]; 3] = [&g.labels, &g.labels, &v.labels];
    let arg = |t: &[usize]| (&g.items[t[0]], &g.items[t[1]], &v.items[t[2]]);
    let mut report = VerifyReport::new();
    report.push(run_check("(rep.1)", "l_[g1,g2] = [l_g1, l_g2]", &[n, n, k], &labels, |t| {
        let (g1, g2, u) = arg(t);
        let b = r.algebra.bracket(g1, g2);
        r.l(&b, u).sub(&r.l(g1, &r.l(g2, u))).add(&r.l(g2, &r.l(g1, u)))
    }));
    report.push(run_check("(rep.2)", "r_[g1,g2] = [l_g1, r_g2]", &[n, n, k], &labels, |t| {
        let (g1, g2, u) = arg(t);
        let b = r.algebra.bracket(g1, g2);
        r.r(&b, u).sub(&r.l(g1, &r.r(g2, u))).add(&r.r(g2, &r.l(g1, u)))
    }));
    report.push(run_check("(rep.3)", "r_g2 l_g1 = -r_g2 r_g1", &[n, n, k], &labels, |t| {
        let (g1, g2, u) = arg(t);
        r.r(g2, &r.l(g1, u)).add(&r.r(g2, &r.r(g1, u)))
    }));
    Ok(report)
}

/// Component checks (both algebras, the action) followed by the morphism
/// property of `mu` and conditions (1)-(5).
pub fn check_crossed_module(c: &CrossedModule) -> Result<VerifyReport> {
    c.validate()?;
    let mut report = VerifyReport::new();
    report.extend(check_leibniz(&c.g)?.prefixed("g:"));
    report.extend(check_leibniz(&c.h)?.prefixed("h:"));
    report.extend(check_representation(&c.action)?.prefixed("action:"));

    let g = c.g.basis_family("e");
    let h = c.h.basis_family("h");
    let (n, p) = (g.len(), h.len());
    let gb = |x: &Coords, y: &Coords| c.g.bracket(x, y);
    let hb = |x: &Coords, y: &Coords| c.h.bracket(x, y);
    let mu = |x: &Coords| c.mu.eval(x);
    let l = |u: &Coords, x: &Coords| c.action.l(u, x);
    let r = |u: &Coords, x: &Coords| c.action.r(u, x);
    let (gl, hl) = (&g.labels[..], &h.labels[..]);
    let (gi, hi) = (&g.items, &h.items);

    report.push(run_check("morphism", "mu[g,g'] = [mu g, mu g']", &[n, n], &[gl, gl], |t| {
        let (x, y) = (&gi[t[0]], &gi[t[1]]);
        mu(&gb(x, y)).sub(&hb(&mu(x), &mu(y)))
    }));
    report.push(run_check("(1.l)", "mu(l_h g) = [h, mu g]", &[p, n], &[hl, gl], |t| {
        let (u, x) = (&hi[t[0]], &gi[t[1]]);
        mu(&l(u, x)).sub(&hb(u, &mu(x)))
    }));
    report.push(run_check("(1.r)", "mu(r_h g) = [mu g, h]", &[p, n], &[hl, gl], |t| {
        let (u, x) = (&hi[t[0]], &gi[t[1]]);
        mu(&r(u, x)).sub(&hb(&mu(x), u))
    }));
    report.push(run_check("(2.l)", "l_{mu g} g' = [g,g']", &[n, n], &[gl, gl], |t| {
        let (x, y) = (&gi[t[0]], &gi[t[1]]);
        l(&mu(x), y).sub(&gb(x, y))
    }));
    report.push(run_check("(2.r)", "[g,g'] = r_{mu g'} g", &[n, n], &[gl, gl], |t| {
        let (x, y) = (&gi[t[0]], &gi[t[1]]);
        gb(x, y).sub(&r(&mu(y), x))
    }));
    report.push(run_check(
        "(3)",
        "l_h[g,g'] = [l_h g, g'] + [g, l_h g']",
        &[p, n, n],
        &[hl, gl, gl],
        |t| {
            let (u, x, y) = (&hi[t[0]], &gi[t[1]], &gi[t[2]]);
            l(u, &gb(x, y)).sub(&gb(&l(u, x), y)).sub(&gb(x, &l(u, y)))
        },
    ));
    report.push(run_check(
        "(4)",
        "r_h[g,g'] = [g, r_h g'] - [g', r_h g]",
        &[p, n, n],
        &[hl, gl, gl],
        |t| {
            let (u, x, y) = (&hi[t[0]], &gi[t[1]], &gi[t[2]]);
            r(u, &gb(x, y)).sub(&gb(x, &r(u, y))).add(&gb(y, &r(u, x)))
        },
    ));
    report.push(run_check("(5)", "[l_h g + r_h g, g'] = 0", &[p, n, n], &[hl, gl, gl], |t| {
        let (u, x, y) = (&hi[t[0]], &gi[t[1]], &gi[t[2]]);
        gb(&l(u, x).add(&r(u, x)), y)
    }));
    Ok(report)
}

fn precondition(what: &str, report: &VerifyReport) -> Error {
    Error::Precondition(format!("{what}: failing {}", report.failing_names().join(", ")))
}

/// `g = V1` with `[m,n] = l2(m, dn)`, `h = (V0, l2)`, `mu = d`,
/// `l_u m = l2(u,m)`, `r_u m = l2(m,u)`.
pub fn dg_to_crossed(a: &ShLeibniz2) -> Result<CrossedModule> {
    let report = check_sh_leibniz(a)?;
    if !report.passed() {
        return Err(precondition("not a 2-term sh Leibniz algebra", &report));
    }
    if !a.l3.is_zero() {
        return Err(Error::Precondition("l3 nonzero".into()));
    }
    let v1 = a.v1().clone();
    let g_bracket = StructureTensor::from_fn(vec![v1.clone(), v1.clone()], v1.clone(), |t| {
        let m = Coords::basis(v1.dim, t[0]);
        let dn = a.d().column(t[1]);
        Ok(a.l2_10.eval(&[&m, &dn]))
    })?;
    let g = LeibnizAlgebra { space: v1.clone(), bracket: g_bracket };
    let h = LeibnizAlgebra { space: a.v0().clone(), bracket: a.l2_00.clone() };
    let action = LeibnizRep {
        algebra: h.clone(),
        module: v1,
        left: a.l2_01.clone(),
        right: a.l2_10.clone(),
    };
    Ok(CrossedModule { g, h, mu: a.d().clone(), action })
}

/// `V1 = g`, `V0 = h`, `d = mu`, `l2` from the bracket of `h` and the two
/// actions, `l3 = 0`.
pub fn crossed_to_dg(c: &CrossedModule) -> Result<ShLeibniz2> {
    let report = check_crossed_module(c)?;
    if !report.passed() {
        return Err(precondition("not a crossed module", &report));
    }
    let complex = TwoTermComplex::new(c.g.space.clone(), c.h.space.clone(), c.mu.clone())?;
    let mut a = ShLeibniz2::abelian(complex);
    a.l2_00 = c.h.bracket.clone();
    a.l2_01 = c.action.left.clone();
    a.l2_10 = c.action.right.clone();
    a.validate()?;
    Ok(a)
}

/// `g = (V0, l2)`, `V = V1`, `rho` from the mixed brackets, `phi = l3`.
pub fn skeletal_to_quadruple(a: &ShLeibniz2) -> Result<SkeletalQuadruple> {
    let report = check_sh_leibniz(a)?;
    if !report.passed() {
        return Err(precondition("not a 2-term sh Leibniz algebra", &report));
    }
    if !a.d().is_zero() {
        return Err(Error::Precondition("d nonzero, algebra is not skeletal".into()));
    }
    let g = LeibnizAlgebra { space: a.v0().clone(), bracket: a.l2_00.clone() };
    let rho = LeibnizRep {
        algebra: g.clone(),
        module: a.v1().clone(),
        left: a.l2_01.clone(),
        right: a.l2_10.clone(),
    };
    let phi = a.l3.clone();
    let (closed, cocycle_report) = is_cocycle(&rho, &Cochain::Tensor(phi.clone()))?;
    if !closed {
        return Err(Error::Internal(format!(
            "l3 of a verified skeletal algebra is not a cocycle:\n{cocycle_report}"
        )));
    }
    Ok(SkeletalQuadruple { g, v: a.v1().clone(), rho, phi })
}

pub fn quadruple_to_skeletal(q: &SkeletalQuadruple) -> Result<ShLeibniz2> {
    q.rho.validate()?;
    if q.rho.algebra != q.g || !q.rho.module.same_shape(&q.v) {
        return Err(shape("representation does not match the quadruple"));
    }
    let leibniz = check_leibniz(&q.g)?;
    if !leibniz.passed() {
        return Err(precondition("g is not a Leibniz algebra", &leibniz));
    }
    let rep = check_representation(&q.rho)?;
    if !rep.passed() {
        return Err(precondition("rho is not a representation", &rep));
    }
    let (closed, _) = is_cocycle(&q.rho, &Cochain::Tensor(q.phi.clone()))?;
    if !closed {
        return Err(Error::Precondition("phi is not a 3-cocycle".into()));
    }
    let mut a = ShLeibniz2::abelian(TwoTermComplex::skeletal(q.v.clone(), q.g.space.clone()));
    a.l2_00 = q.g.bracket.clone();
    a.l2_01 = q.rho.left.clone();
    a.l2_10 = q.rho.right.clone();
    a.l3 = q.phi.clone();
    a.validate()?;
    Ok(a)
}

/// Catalog algebras used by fixtures, tests and generators.
pub mod catalog {
    use super::*;

    fn q(n: usize) -> FinSpace {
        FinSpace::new(n, "g")
    }

    /// `[e1,e1] = e2`: Leibniz, not Lie.
    pub fn e2() -> LeibnizAlgebra {
        LeibnizAlgebra::from_brackets(q(2), &[(0, 0, &[0, 1])]).expect("static shape")
    }

    /// `[e1,e2] = e2 = -[e2,e1]`: the non-abelian 2-dimensional Lie algebra.
    pub fn e3() -> LeibnizAlgebra {
        LeibnizAlgebra::from_brackets(q(2), &[(0, 1, &[0, 1]), (1, 0, &[0, -1])]).expect("static shape")
    }

    /// Heisenberg algebra `[e1,e2] = e3`.
    pub fn heisenberg() -> LeibnizAlgebra {
        LeibnizAlgebra::from_brackets(q(3), &[(0, 1, &[0, 0, 1]), (1, 0, &[0, 0, -1])])
            .expect("static shape")
    }

    /// `sl2` in the basis `(e, f, h)`.
    pub fn sl2() -> LeibnizAlgebra {
        LeibnizAlgebra::from_brackets(
            q(3),
            &[
                (0, 1, &[0, 0, 1]),
                (1, 0, &[0, 0, -1]),
                (2, 0, &[2, 0, 0]),
                (0, 2, &[-2, 0, 0]),
                (2, 1, &[0, -2, 0]),
                (1, 2, &[0, 2, 0]),
            ],
        )
        .expect("static shape")
    }

    /// The crossed module `E2 --id--> E2` with the adjoint action.
    pub fn e4() -> CrossedModule {
        let g = e2();
        CrossedModule { h: g.clone(), mu: LinearMap::identity(g.space.clone()), action: g.adjoint(), g }
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;
    use crate::report::Residual;

    #[test]
    fn check_leibniz_examples() {
        assert!(check_leibniz(&e2()).unwrap().passed());
        assert!(check_leibniz(&e3()).unwrap().passed());
        assert!(check_leibniz(&heisenberg()).unwrap().passed());
        assert!(check_leibniz(&sl2()).unwrap().passed());
        let bad = LeibnizAlgebra::from_brackets(FinSpace::new(2, "g"), &[(0, 0, &[1, 0])]).unwrap();
        let r = check_leibniz(&bad).unwrap();
        let rec = r.check("leibniz").unwrap();
        assert_eq!(rec.failures, 1);
        assert_eq!(rec.witnesses[0].tuple, vec!["e1", "e1", "e1"]);
        assert_eq!(rec.witnesses[0].residual, Residual::Coords(Coords::from_ints(&[-1, 0])));
    }

    #[test]
    fn representation_examples() {
        let g = e2();
        assert!(check_representation(&g.trivial_rep(FinSpace::new(2, "V"))).unwrap().passed());
        assert!(check_representation(&g.adjoint()).unwrap().passed());
        // left = bracket, right = 0
        let mut half = g.adjoint();
        half.right = StructureTensor::zeros(vec![g.space.clone(), g.space.clone()], g.space.clone());
        let r = check_representation(&half).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn e4_is_a_crossed_module() {
        let r = check_crossed_module(&e4()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn zero_actions_fail_condition_2() {
        let mut c = e4();
        c.action = c.h.trivial_rep(c.g.space.clone());
        let r = check_crossed_module(&c).unwrap();
        let rec = r.check("(2.l)").unwrap();
        assert!(!rec.passed());
        assert_eq!(rec.witnesses[0].tuple, vec!["e1", "e1"]);
        assert_eq!(rec.witnesses[0].residual, Residual::Coords(Coords::from_ints(&[0, -1])));
    }

    #[test]
    fn abelian_with_zero_mu_passes() {
        let g = LeibnizAlgebra::abelian(FinSpace::new(2, "g"));
        let h = e3();
        let c = CrossedModule {
            mu: LinearMap::zero(g.space.clone(), h.space.clone()),
            action: h.trivial_rep(g.space.clone()),
            g,
            h,
        };
        assert!(check_crossed_module(&c).unwrap().passed());
    }

    #[test]
    fn e4_round_trips() {
        let a = crossed_to_dg(&e4()).unwrap();
        assert!(check_sh_leibniz(&a).unwrap().passed());
        assert_eq!(dg_to_crossed(&a).unwrap(), e4());
        assert_eq!(crossed_to_dg(&dg_to_crossed(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn dg_to_crossed_gates_on_l3() {
        let mut a = ShLeibniz2::abelian(TwoTermComplex::skeletal(FinSpace::new(1, "Q"), FinSpace::new(1, "Q")));
        a.l3.set_entry(&[0, 0, 0], 0, crate::algebra::int(1));
        assert!(check_sh_leibniz(&a).unwrap().passed());
        assert_eq!(dg_to_crossed(&a).unwrap_err(), Error::Precondition("l3 nonzero".into()));
    }

    #[test]
    fn degenerate_v1() {
        let mut a = ShLeibniz2::abelian(TwoTermComplex::skeletal(FinSpace::new(0, "0"), FinSpace::new(2, "Q")));
        a.l2_00 = e2().bracket;
        let c = dg_to_crossed(&a).unwrap();
        assert_eq!(c.g.dim(), 0);
        assert_eq!(c.h, LeibnizAlgebra { space: a.v0().clone(), bracket: e2().bracket });
    }

    #[test]
    fn skeletal_extraction() {
        let mut a = ShLeibniz2::abelian(TwoTermComplex::skeletal(FinSpace::new(1, "V"), FinSpace::new(2, "g")));
        a.l2_00 = e2().bracket;
        let q = skeletal_to_quadruple(&a).unwrap();
        assert_eq!(q.g.bracket, e2().bracket);
        assert!(q.rho.left.is_zero() && q.rho.right.is_zero() && q.phi.is_zero());
        assert_eq!(quadruple_to_skeletal(&q).unwrap(), a);
    }
}
