//! The 2-term DGLA `End(V)` of a 2-term complex, its automorphisms, and the
//! Leibniz 2-algebra `End(V) ⊕ V` twisted by an automorphism.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{int, Coords, Element, FinSpace, LinearMap, LinearSystem, Rational, StructureTensor};
use crate::check::run_check;
use crate::error::{shape, Error, Result};
use crate::report::{CheckRecord, Residual, VerifyReport, Witness};
use crate::sh_leibniz::{check_morphism, check_sh_leibniz, ShLeibniz2, ShMorphism, TwoTermComplex};

/// `End^1(V) --δ--> End^0_d(V)` with the graded commutator.
///
/// Degree 0 is the constraint space `{(A0, A1) : A0 d = d A1}`; its basis is
/// the reduced-echelon kernel basis of the constraint system in the unknowns
/// `(A0 row-major, A1 row-major)`, and the coordinates of an element are its
/// values at the free columns. Degree 1 is `Hom(V0, V1)` with matrix units in
/// row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndDgla {
    pub base: TwoTermComplex,
    pub deg0: FinSpace,
    pub deg1: FinSpace,
    deg0_basis: Vec<Coords>,
    deg0_free: Vec<usize>,
    pub delta: LinearMap,
    /// `[A, B]` on degree 0.
    pub bracket00: StructureTensor,
    /// `[A, φ] = A1 φ - φ A0`.
    pub bracket01: StructureTensor,
}

fn matrix(source: &FinSpace, target: &FinSpace, flat: &[Rational]) -> LinearMap {
    LinearMap::new(source.clone(), target.clone(), flat.to_vec()).expect("flat length matches")
}

impl EndDgla {
    fn n0(&self) -> usize {
        self.base.v0.dim
    }

    fn n1(&self) -> usize {
        self.base.v1.dim
    }

    /// The pair `(A0, A1)` with degree-0 coordinates `c`.
    pub fn deg0_pair(&self, c: &Coords) -> (LinearMap, LinearMap) {
        let (n0, n1) = (self.n0(), self.n1());
        let mut flat = Coords::zeros(n0 * n0 + n1 * n1);
        for (i, v) in c.support() {
            flat.add_scaled(v, &self.deg0_basis[i]);
        }
        let (a0, a1) = flat.split_at(n0 * n0);
        (matrix(&self.base.v0, &self.base.v0, &a0.0), matrix(&self.base.v1, &self.base.v1, &a1.0))
    }

    /// Degree-0 coordinates of `(A0, A1)`, or an error if `A0 d != d A1`.
    pub fn deg0_coords(&self, a0: &LinearMap, a1: &LinearMap) -> Result<Coords> {
        if a0.compose(&self.base.d)? != self.base.d.compose(a1)? {
            return Err(Error::Precondition("pair does not commute with d".into()));
        }
        let flat: Vec<Rational> = a0.coeffs().iter().chain(a1.coeffs()).cloned().collect();
        Ok(Coords(self.deg0_free.iter().map(|&f| flat[f].clone()).collect()))
    }

    pub fn deg1_map(&self, c: &Coords) -> LinearMap {
        matrix(&self.base.v0, &self.base.v1, &c.0)
    }

    pub fn deg1_coords(&self, phi: &LinearMap) -> Coords {
        Coords(phi.coeffs().to_vec())
    }

    /// The DGLA as a dg Leibniz 2-algebra: `d = δ`, `l2 = [·,·]`,
    /// `l2(φ, A) = [φ, A] = -[A, φ]`, `l3 = 0`.
    pub fn as_sh_leibniz(&self) -> ShLeibniz2 {
        let complex = TwoTermComplex {
            v1: self.deg1.clone(),
            v0: self.deg0.clone(),
            d: self.delta.clone(),
        };
        let mut a = ShLeibniz2::abelian(complex);
        a.l2_00 = self.bracket00.clone();
        a.l2_01 = self.bracket01.clone();
        a.l2_10 = StructureTensor::from_fn(
            vec![self.deg1.clone(), self.deg0.clone()],
            self.deg1.clone(),
            |t| Ok(self.bracket01.get(&[t[1], t[0]]).neg()),
        )
        .expect("shapes fixed by construction");
        a
    }
}

pub fn build_end(c: &TwoTermComplex) -> Result<EndDgla> {
    c.validate()?;
    let (n0, n1) = (c.v0.dim, c.v1.dim);
    let d = &c.d;
    let a1_offset = n0 * n0;
    let mut sys = LinearSystem::new(n0 * n0 + n1 * n1);
    for i in 0..n0 {
        for j in 0..n1 {
            // (A0 d)[i,j] - (d A1)[i,j] = 0
            let mut row = Vec::new();
            for k in 0..n0 {
                row.push((i * n0 + k, d.get(k, j).clone()));
            }
            for k in 0..n1 {
                row.push((a1_offset + k * n1 + j, -d.get(i, k).clone()));
            }
            sys.add_equation(row, Rational::zero());
        }
    }
    let sol = sys.solve().expect("homogeneous systems are consistent");
    let deg0 = FinSpace::new(sol.kernel.len(), "End0");
    let deg1 = FinSpace::new(n0 * n1, "End1");
    let mut e = EndDgla {
        base: c.clone(),
        deg0: deg0.clone(),
        deg1: deg1.clone(),
        deg0_basis: sol.kernel,
        deg0_free: sol.free,
        delta: LinearMap::zero(deg1.clone(), deg0.clone()),
        bracket00: StructureTensor::zeros(vec![deg0.clone(), deg0.clone()], deg0.clone()),
        bracket01: StructureTensor::zeros(vec![deg0.clone(), deg1.clone()], deg1.clone()),
    };
    let delta_cols: Vec<Coords> = (0..deg1.dim)
        .map(|k| {
            let phi = e.deg1_map(&Coords::basis(deg1.dim, k));
            e.deg0_coords(&d.compose(&phi)?, &phi.compose(d)?)
        })
        .collect::<Result<_>>()?;
    e.delta = LinearMap::from_columns(deg1.clone(), deg0.clone(), &delta_cols)?;
    let pairs: Vec<(LinearMap, LinearMap)> =
        (0..deg0.dim).map(|i| e.deg0_pair(&Coords::basis(deg0.dim, i))).collect();
    let b00 = StructureTensor::from_fn(vec![deg0.clone(), deg0.clone()], deg0.clone(), |t| {
        let ((a0, a1), (b0, b1)) = (&pairs[t[0]], &pairs[t[1]]);
        let c0 = a0.compose(b0)?.sub(&b0.compose(a0)?)?;
        let c1 = a1.compose(b1)?.sub(&b1.compose(a1)?)?;
        e.deg0_coords(&c0, &c1)
    })?;
    let b01 = StructureTensor::from_fn(vec![deg0.clone(), deg1.clone()], deg1.clone(), |t| {
        let (a0, a1) = &pairs[t[0]];
        let phi = e.deg1_map(&Coords::basis(deg1.dim, t[1]));
        Ok(e.deg1_coords(&a1.compose(&phi)?.sub(&phi.compose(a0)?)?))
    })?;
    e.bracket00 = b00;
    e.bracket01 = b01;
    Ok(e)
}

/// A morphism `(f0, f1, f2)` of `End(V)` to itself, in the bases of
/// [`EndDgla`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DglaAutomorphism {
    pub f0: LinearMap,
    pub f1: LinearMap,
    pub f2: StructureTensor,
}

impl DglaAutomorphism {
    pub fn identity(e: &EndDgla) -> Self {
        DglaAutomorphism {
            f0: LinearMap::identity(e.deg0.clone()),
            f1: LinearMap::identity(e.deg1.clone()),
            f2: StructureTensor::zeros(vec![e.deg0.clone(), e.deg0.clone()], e.deg1.clone()),
        }
    }

    /// Conjugation by a chain automorphism `(P0, P1)`:
    /// `A -> P A P^{-1}`, `φ -> P1 φ P0^{-1}`, `f2 = 0`.
    pub fn conjugation(e: &EndDgla, p0: &LinearMap, p1: &LinearMap) -> Result<Self> {
        let (q0, q1) = match (p0.inverse(), p1.inverse()) {
            (Some(q0), Some(q1)) => (q0, q1),
            _ => return Err(Error::Precondition("conjugating maps are not invertible".into())),
        };
        if p0.compose(&e.base.d)? != e.base.d.compose(p1)? {
            return Err(Error::Precondition("conjugating maps do not commute with d".into()));
        }
        let f0_cols: Vec<Coords> = (0..e.deg0.dim)
            .map(|i| {
                let (a0, a1) = e.deg0_pair(&Coords::basis(e.deg0.dim, i));
                e.deg0_coords(&p0.compose(&a0)?.compose(&q0)?, &p1.compose(&a1)?.compose(&q1)?)
            })
            .collect::<Result<_>>()?;
        let f1_cols: Vec<Coords> = (0..e.deg1.dim)
            .map(|k| {
                let phi = e.deg1_map(&Coords::basis(e.deg1.dim, k));
                Ok(e.deg1_coords(&p1.compose(&phi)?.compose(&q0)?))
            })
            .collect::<Result<_>>()?;
        Ok(DglaAutomorphism {
            f0: LinearMap::from_columns(e.deg0.clone(), e.deg0.clone(), &f0_cols)?,
            f1: LinearMap::from_columns(e.deg1.clone(), e.deg1.clone(), &f1_cols)?,
            f2: StructureTensor::zeros(vec![e.deg0.clone(), e.deg0.clone()], e.deg1.clone()),
        })
    }

    fn as_morphism(&self) -> ShMorphism {
        ShMorphism { f0: self.f0.clone(), f1: self.f1.clone(), f2: self.f2.clone() }
    }
}

/// The morphism identities of `f` on `End(V)` (with `l3 = 0`), plus
/// invertibility of `(f0, f1)` reported as its own check.
pub fn check_dgla_automorphism(f: &DglaAutomorphism, e: &EndDgla) -> Result<VerifyReport> {
    let a = e.as_sh_leibniz();
    let mut report = check_morphism(&f.as_morphism(), &a, &a)?;
    let mut inv = CheckRecord::new("invertible", "f0 and f1 have full rank");
    for (name, m) in [("f0", &f.f0), ("f1", &f.f1)] {
        if m.is_invertible() {
            inv.pass_one();
        } else {
            inv.fail_with(Witness {
                tuple: vec![name.into()],
                indices: vec![],
                residual: Residual::Message(format!("{name} has rank {} < {}", m.rank(), m.rows())),
            });
        }
    }
    report.push(inv);
    Ok(report)
}

/// `End(V) ⊕ V` with `l2(A+u, B+v) = [A,B] + f0(A)(v)`,
/// `l2(A+u, φ+m) = [A,φ] + f0(A)(m)`, `l2(φ+m, A+u) = [φ,A] + f1(φ)(u)` and
/// `l3(A+u, B+v, C+w) = f2(A,B)(w)`.
///
/// Coordinates are `(End part, V part)` in both degrees.
pub fn build_omni(f: &DglaAutomorphism, c: &TwoTermComplex) -> Result<ShLeibniz2> {
    let e = build_end(c)?;
    let report = check_dgla_automorphism(f, &e)?;
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "not an automorphism of End(V): failing {}",
            report.failing_names().join(", ")
        )));
    }
    let (k0, k1) = (e.deg0.dim, e.deg1.dim);
    let (n0, n1) = (c.v0.dim, c.v1.dim);
    let w0 = FinSpace::new(k0 + n0, "End0+V0");
    let w1 = FinSpace::new(k1 + n1, "End1+V1");
    let mut d = LinearMap::zero(w1.clone(), w0.clone());
    for i in 0..k0 {
        for j in 0..k1 {
            d.set(i, j, e.delta.get(i, j).clone());
        }
    }
    for i in 0..n0 {
        for j in 0..n1 {
            d.set(k0 + i, k1 + j, c.d.get(i, j).clone());
        }
    }
    // f0(A) and f1(φ) for basis A, φ.
    let f0a: Vec<(LinearMap, LinearMap)> =
        (0..k0).map(|i| e.deg0_pair(&f.f0.column(i))).collect();
    let f1p: Vec<LinearMap> = (0..k1).map(|i| e.deg1_map(&f.f1.column(i))).collect();

    let unit = |n: usize, i: usize| Coords::basis(n, i);
    let l2_00 = StructureTensor::from_fn(vec![w0.clone(), w0.clone()], w0.clone(), |t| {
        let (x, y) = (t[0], t[1]);
        Ok(match (x < k0, y < k0) {
            (true, true) => e.bracket00.get(&[x, y]).concat(&Coords::zeros(n0)),
            (true, false) => Coords::zeros(k0).concat(&f0a[x].0.column(y - k0)),
            _ => Coords::zeros(k0 + n0),
        })
    })?;
    let l2_01 = StructureTensor::from_fn(vec![w0.clone(), w1.clone()], w1.clone(), |t| {
        let (x, m) = (t[0], t[1]);
        Ok(match (x < k0, m < k1) {
            (true, true) => e.bracket01.get(&[x, m]).concat(&Coords::zeros(n1)),
            (true, false) => Coords::zeros(k1).concat(&f0a[x].1.column(m - k1)),
            _ => Coords::zeros(k1 + n1),
        })
    })?;
    let l2_10 = StructureTensor::from_fn(vec![w1.clone(), w0.clone()], w1.clone(), |t| {
        let (m, x) = (t[0], t[1]);
        Ok(match (m < k1, x < k0) {
            (true, true) => e.bracket01.get(&[x, m]).neg().concat(&Coords::zeros(n1)),
            (true, false) => Coords::zeros(k1).concat(&f1p[m].eval(&unit(n0, x - k0))),
            _ => Coords::zeros(k1 + n1),
        })
    })?;
    let l3 = StructureTensor::from_fn(vec![w0.clone(), w0.clone(), w0.clone()], w1.clone(), |t| {
        let (a, b, w) = (t[0], t[1], t[2]);
        Ok(if a < k0 && b < k0 && w >= k0 {
            let phi = e.deg1_map(&f.f2.get(&[a, b]));
            Coords::zeros(k1).concat(&phi.eval(&unit(n0, w - k0)))
        } else {
            Coords::zeros(k1 + n1)
        })
    })?;
    ShLeibniz2::new(TwoTermComplex::new(w1, w0, d)?, l2_00, l2_01, l2_10, l3)
}

/// Solutions `f2` of the morphism equations for fixed `(f0, f1)`, as an
/// affine family `particular + span(kernel)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Solutions {
    pub particular: StructureTensor,
    pub kernel: Vec<StructureTensor>,
}

/// Every residual of the morphism equations, flattened. Affine in `f2`.
fn morphism_residuals(e: &EndDgla, a: &ShLeibniz2, f: &DglaAutomorphism) -> Vec<Rational> {
    let (k0, k1) = (e.deg0.dim, e.deg1.dim);
    let mut out = Vec::new();
    let b0 = |i: usize| Coords::basis(k0, i);
    let b1 = |i: usize| Coords::basis(k1, i);
    let f0 = |x: &Coords| f.f0.eval(x);
    let f1 = |x: &Coords| f.f1.eval(x);
    let f2 = |x: &Coords, y: &Coords| f.f2.eval(&[x, y]);
    let br = |x: &Coords, y: &Coords| a.l2_00.eval(&[x, y]);
    let br01 = |x: &Coords, m: &Coords| a.l2_01.eval(&[x, m]);
    let br10 = |m: &Coords, x: &Coords| a.l2_10.eval(&[m, x]);
    let d = |m: &Coords| a.d().eval(m);
    for i in 0..k0 {
        for j in 0..k0 {
            let (x, y) = (b0(i), b0(j));
            let r = br(&f0(&x), &f0(&y)).sub(&f0(&br(&x, &y))).sub(&d(&f2(&x, &y)));
            out.extend(r.0);
        }
        for m in 0..k1 {
            let (x, mm) = (b0(i), b1(m));
            let r = br01(&f0(&x), &f1(&mm)).sub(&f1(&br01(&x, &mm))).sub(&f2(&x, &d(&mm)));
            out.extend(r.0);
            let r = br10(&f1(&mm), &f0(&x)).sub(&f1(&br10(&mm, &x))).sub(&f2(&d(&mm), &x));
            out.extend(r.0);
        }
    }
    for i in 0..k0 {
        for j in 0..k0 {
            for k in 0..k0 {
                let (x, y, z) = (b0(i), b0(j), b0(k));
                let r = br01(&f0(&x), &f2(&y, &z))
                    .sub(&br01(&f0(&y), &f2(&x, &z)))
                    .sub(&br10(&f2(&x, &y), &f0(&z)))
                    .sub(&f2(&br(&x, &y), &z))
                    .add(&f2(&x, &br(&y, &z)))
                    .sub(&f2(&y, &br(&x, &z)));
                out.extend(r.0);
            }
        }
    }
    out
}

/// Solves the morphism equations for `f2` with `(f0, f1)` fixed. Returns
/// `None` when `f0 δ != δ f1` or the equations have no solution.
pub fn search_f2(e: &EndDgla, f0: &LinearMap, f1: &LinearMap) -> Result<Option<F2Solutions>> {
    if !f0.source.same_shape(&e.deg0) || !f0.target.same_shape(&e.deg0) {
        return Err(shape("f0 must be an endomorphism of End0"));
    }
    if !f1.source.same_shape(&e.deg1) || !f1.target.same_shape(&e.deg1) {
        return Err(shape("f1 must be an endomorphism of End1"));
    }
    if f0.compose(&e.delta)? != e.delta.compose(f1)? {
        return Ok(None);
    }
    let a = e.as_sh_leibniz();
    let sources = vec![e.deg0.clone(), e.deg0.clone()];
    let zero_f2 = StructureTensor::zeros(sources.clone(), e.deg1.clone());
    let unknowns = zero_f2.coeffs().len();
    let mut f = DglaAutomorphism { f0: f0.clone(), f1: f1.clone(), f2: zero_f2.clone() };
    let r0 = morphism_residuals(e, &a, &f);
    let mut columns = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let mut coeffs = vec![Rational::zero(); unknowns];
        coeffs[u] = int(1);
        f.f2 = StructureTensor::new(sources.clone(), e.deg1.clone(), coeffs)?;
        let ru = morphism_residuals(e, &a, &f);
        columns.push(ru.iter().zip(&r0).map(|(x, y)| x - y).collect::<Vec<_>>());
    }
    let mut sys = LinearSystem::new(unknowns);
    for (row, rhs) in r0.iter().enumerate() {
        let entries: Vec<(usize, Rational)> = columns
            .iter()
            .enumerate()
            .filter(|(_, col)| !col[row].is_zero())
            .map(|(u, col)| (u, col[row].clone()))
            .collect();
        if entries.is_empty() && rhs.is_zero() {
            continue;
        }
        sys.add_equation(entries, -rhs.clone());
    }
    let Some(sol) = sys.solve() else { return Ok(None) };
    let tensor = |c: Coords| StructureTensor::new(sources.clone(), e.deg1.clone(), c.0);
    Ok(Some(F2Solutions {
        particular: tensor(sol.particular)?,
        kernel: sol.kernel.into_iter().map(tensor).collect::<Result<_>>()?,
    }))
}

/// Verifies the DGLA identities of `End(V)`: Jacobi on degree 0,
/// `[δφ, ψ] = [φ, δψ]` and `δ[A, φ] = [A, δφ]`.
pub fn check_end_identities(e: &EndDgla) -> VerifyReport {
    let (k0, k1) = (e.deg0.dim, e.deg1.dim);
    let l0: Vec<String> = (1..=k0).map(|i| format!("A{i}")).collect();
    let l1: Vec<String> = (1..=k1).map(|i| format!("φ{i}")).collect();
    let b0 = |i: usize| Coords::basis(k0, i);
    let b1 = |i: usize| Coords::basis(k1, i);
    let br = |x: &Coords, y: &Coords| e.bracket00.eval(&[x, y]);
    let br01 = |x: &Coords, m: &Coords| e.bracket01.eval(&[x, m]);
    let mut report = VerifyReport::new();
    report.push(run_check("jacobi", "[A,[B,C]] = [[A,B],C] + [B,[A,C]]", &[k0; 3], &[&l0, &l0, &l0], |t| {
        let (a, b, c) = (b0(t[0]), b0(t[1]), b0(t[2]));
        br(&a, &br(&b, &c)).sub(&br(&br(&a, &b), &c)).sub(&br(&b, &br(&a, &c)))
    }));
    report.push(run_check("delta-symmetric", "[δφ, ψ] = [φ, δψ]", &[k1, k1], &[&l1, &l1], |t| {
        let (p, q) = (b1(t[0]), b1(t[1]));
        // [φ, δψ] = -[δψ, φ]
        br01(&e.delta.eval(&p), &q).add(&br01(&e.delta.eval(&q), &p))
    }));
    report.push(run_check("delta-equivariant", "δ[A, φ] = [A, δφ]", &[k0, k1], &[&l0, &l1], |t| {
        let (a, p) = (b0(t[0]), b1(t[1]));
        e.delta.eval(&br01(&a, &p)).sub(&br(&a, &e.delta.eval(&p)))
    }));
    report
}

/// Builds `End(V) ⊕ V` and runs the full verifier on it.
pub fn build_and_check_omni(f: &DglaAutomorphism, c: &TwoTermComplex) -> Result<(ShLeibniz2, VerifyReport)> {
    let a = build_omni(f, c)?;
    let report = check_sh_leibniz(&a)?;
    Ok((a, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize) -> FinSpace {
        FinSpace::new(n, "Q")
    }

    fn complex(n1: usize, n0: usize, d: &[&[i64]]) -> TwoTermComplex {
        TwoTermComplex::new(q(n1), q(n0), LinearMap::from_int_rows(q(n1), q(n0), d).unwrap()).unwrap()
    }

    #[test]
    fn end_of_identity_complex() {
        let e = build_end(&complex(1, 1, &[&[1]])).unwrap();
        assert_eq!((e.deg0.dim, e.deg1.dim), (1, 1));
        // basis of End0 is (A0, A1) = (1, 1) and δφ = (φ, φ)
        assert_eq!(e.deg0_pair(&Coords::from_ints(&[1])).0.coeffs(), &[int(1)]);
        assert_eq!(e.delta.coeffs(), &[int(1)]);
    }

    #[test]
    fn end_of_zero_complex() {
        let e = build_end(&complex(1, 1, &[&[0]])).unwrap();
        assert_eq!((e.deg0.dim, e.deg1.dim), (2, 1));
        assert!(e.delta.is_zero());
    }

    #[test]
    fn end_with_trivial_v1_is_gl_v0() {
        let c = TwoTermComplex::skeletal(q(0), q(2));
        let e = build_end(&c).unwrap();
        assert_eq!((e.deg0.dim, e.deg1.dim), (4, 0));
        assert!(check_end_identities(&e).passed());
    }

    #[test]
    fn end_identities_hold() {
        for c in [complex(1, 1, &[&[1]]), complex(2, 2, &[&[1, 0], &[0, 0]]), complex(2, 1, &[&[1, 2]])] {
            let e = build_end(&c).unwrap();
            let r = check_end_identities(&e);
            assert!(r.passed(), "{r}");
            assert!(check_sh_leibniz(&e.as_sh_leibniz()).unwrap().passed());
        }
    }

    #[test]
    fn automorphism_examples() {
        let zero_d = complex(1, 1, &[&[0]]);
        let e = build_end(&zero_d).unwrap();
        assert!(check_dgla_automorphism(&DglaAutomorphism::identity(&e), &e).unwrap().passed());
        let mut o1 = DglaAutomorphism::identity(&e);
        o1.f1 = o1.f1.scale(&int(2));
        assert!(check_dgla_automorphism(&o1, &e).unwrap().passed());

        let id_d = complex(1, 1, &[&[1]]);
        let e = build_end(&id_d).unwrap();
        let mut f = DglaAutomorphism::identity(&e);
        f.f1 = f.f1.scale(&int(2));
        let r = check_dgla_automorphism(&f, &e).unwrap();
        assert_eq!(r.failing_names(), vec!["chain"]);
    }

    #[test]
    fn singular_map_is_reported_separately() {
        let e = build_end(&complex(1, 1, &[&[0]])).unwrap();
        let mut f = DglaAutomorphism::identity(&e);
        f.f1 = f.f1.scale(&int(0));
        let r = check_dgla_automorphism(&f, &e).unwrap();
        assert!(r.failing_names().contains(&"invertible"));
    }

    #[test]
    fn omni_of_o1() {
        let c = complex(1, 1, &[&[0]]);
        let e = build_end(&c).unwrap();
        let mut f = DglaAutomorphism::identity(&e);
        f.f1 = f.f1.scale(&int(2));
        let (a, r) = build_and_check_omni(&f, &c).unwrap();
        assert!(r.passed(), "{r}");
        // l2(φ + m, A + u) = [φ, A] + 2 φ(u): take φ = 1, u = 1, A = 0.
        let phi_m = Coords::from_ints(&[1, 0]);
        let a_u = Coords::from_ints(&[0, 0, 1]);
        assert_eq!(a.l2_10.apply(&[&phi_m, &a_u]).unwrap(), Coords::from_ints(&[0, 2]));
    }

    #[test]
    fn omni_of_identity_is_dg() {
        for c in [complex(1, 1, &[&[1]]), TwoTermComplex::skeletal(q(0), q(2))] {
            let e = build_end(&c).unwrap();
            let (a, r) = build_and_check_omni(&DglaAutomorphism::identity(&e), &c).unwrap();
            assert!(r.passed(), "{r}");
            assert!(a.classify().dg);
        }
    }

    #[test]
    fn conjugation_is_an_automorphism() {
        let c = complex(2, 2, &[&[1, 0], &[0, 0]]);
        let e = build_end(&c).unwrap();
        let p0 = LinearMap::from_int_rows(q(2), q(2), &[&[1, 0], &[0, 3]]).unwrap();
        let p1 = LinearMap::from_int_rows(q(2), q(2), &[&[1, 0], &[2, 1]]).unwrap();
        let f = DglaAutomorphism::conjugation(&e, &p0, &p1).unwrap();
        let r = check_dgla_automorphism(&f, &e).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn f2_search_contains_zero_for_identity() {
        let c = complex(1, 1, &[&[0]]);
        let e = build_end(&c).unwrap();
        let sol = search_f2(&e, &LinearMap::identity(e.deg0.clone()), &LinearMap::identity(e.deg1.clone()))
            .unwrap()
            .unwrap();
        assert!(sol.particular.is_zero());
        for k in &sol.kernel {
            let f = DglaAutomorphism {
                f0: LinearMap::identity(e.deg0.clone()),
                f1: LinearMap::identity(e.deg1.clone()),
                f2: k.clone(),
            };
            assert!(check_dgla_automorphism(&f, &e).unwrap().passed());
        }
    }
}
