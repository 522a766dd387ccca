use serde::{Deserialize, Serialize};

use super::verify::signed_sum;
use super::{ShLeibniz2, ShLeibnizOps};
use crate::algebra::{Coords, Element, LinearMap, StructureTensor};
use crate::check::{run_check, Family, Table2};
use crate::error::{shape, Result};
use crate::report::VerifyReport;

/// A morphism `(f0, f1, f2)` between finite-dimensional algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShMorphism {
    /// `V0 -> V0'`
    pub f0: LinearMap,
    /// `V1 -> V1'`
    pub f1: LinearMap,
    /// `V0 x V0 -> V1'`
    pub f2: StructureTensor,
}

/// The three component maps of a morphism, for element types other than
/// coordinate vectors.
pub struct MorphismMaps<'a, S: ShLeibnizOps, T: ShLeibnizOps> {
    pub f0: &'a (dyn Fn(&S::V0) -> T::V0 + Sync),
    pub f1: &'a (dyn Fn(&S::V1) -> T::V1 + Sync),
    pub f2: &'a (dyn Fn(&S::V0, &S::V0) -> T::V1 + Sync),
}

impl ShMorphism {
    pub fn identity(a: &ShLeibniz2) -> Self {
        ShMorphism {
            f0: LinearMap::identity(a.v0().clone()),
            f1: LinearMap::identity(a.v1().clone()),
            f2: StructureTensor::zeros(vec![a.v0().clone(), a.v0().clone()], a.v1().clone()),
        }
    }

    /// Checks that the component shapes fit `src -> dst`.
    pub fn validate(&self, src: &ShLeibniz2, dst: &ShLeibniz2) -> Result<()> {
        let ok = self.f0.source.same_shape(src.v0())
            && self.f0.target.same_shape(dst.v0())
            && self.f1.source.same_shape(src.v1())
            && self.f1.target.same_shape(dst.v1())
            && self.f2.dims() == [src.v0().dim, src.v0().dim]
            && self.f2.target.same_shape(dst.v1());
        if !ok {
            return Err(shape("morphism components do not match source and target algebras"));
        }
        Ok(())
    }
}

/// Checks `f0 d = d' f1`, the three equations of (c1) and equation (c2) on
/// all tuples from the source families.
pub fn verify_morphism_on_families<S: ShLeibnizOps, T: ShLeibnizOps>(
    src: &S,
    dst: &T,
    maps: &MorphismMaps<'_, S, T>,
    fam0: &Family<S::V0>,
    fam1: &Family<S::V1>,
) -> VerifyReport {
    let (x0, x1) = (&fam0.items, &fam1.items);
    let (n0, n1) = (x0.len(), x1.len());
    let (lab0, lab1) = (&fam0.labels[..], &fam1.labels[..]);
    let f0x: Vec<T::V0> = crate::exec::map_range(n0, |i| (maps.f0)(&x0[i]));
    let f1m: Vec<T::V1> = crate::exec::map_range(n1, |i| (maps.f1)(&x1[i]));
    let dm: Vec<S::V0> = crate::exec::map_range(n1, |i| src.d(&x1[i]));
    let f2t = Table2::build(n0, n0, |i, j| (maps.f2)(&x0[i], &x0[j]));
    let l2s = Table2::build(n0, n0, |i, j| src.l2_00(&x0[i], &x0[j]));

    let mut report = VerifyReport::new();
    report.push(run_check("chain", "f0 d = d' f1", &[n1], &[lab1], |t| {
        (maps.f0)(&dm[t[0]]).sub(&dst.d(&f1m[t[0]]))
    }));
    report.push(run_check(
        "(c1.1)",
        "l2'(f0 x, f0 y) - f0 l2(x,y) = d' f2(x,y)",
        &[n0, n0],
        &[lab0, lab0],
        |t| {
            let (x, y) = (t[0], t[1]);
            signed_sum(
                dst.zero0(),
                &[
                    (1, dst.l2_00(&f0x[x], &f0x[y])),
                    (-1, (maps.f0)(l2s.get(x, y))),
                    (-1, dst.d(f2t.get(x, y))),
                ],
            )
        },
    ));
    report.push(run_check(
        "(c1.2)",
        "l2'(f0 x, f1 m) - f1 l2(x,m) = f2(x, dm)",
        &[n0, n1],
        &[lab0, lab1],
        |t| {
            let (x, m) = (t[0], t[1]);
            signed_sum(
                dst.zero1(),
                &[
                    (1, dst.l2_01(&f0x[x], &f1m[m])),
                    (-1, (maps.f1)(&src.l2_01(&x0[x], &x1[m]))),
                    (-1, (maps.f2)(&x0[x], &dm[m])),
                ],
            )
        },
    ));
    report.push(run_check(
        "(c1.3)",
        "l2'(f1 m, f0 x) - f1 l2(m,x) = f2(dm, x)",
        &[n1, n0],
        &[lab1, lab0],
        |t| {
            let (m, x) = (t[0], t[1]);
            signed_sum(
                dst.zero1(),
                &[
                    (1, dst.l2_10(&f1m[m], &f0x[x])),
                    (-1, (maps.f1)(&src.l2_10(&x1[m], &x0[x]))),
                    (-1, (maps.f2)(&dm[m], &x0[x])),
                ],
            )
        },
    ));
    report.push(run_check(
        "(c2)",
        "f1 l3 + l2'(f0,f2) terms - f2(l2) terms - l3'(f0,f0,f0) = 0",
        &[n0, n0, n0],
        &[lab0, lab0, lab0],
        |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            signed_sum(
                dst.zero1(),
                &[
                    (1, (maps.f1)(&src.l3(&x0[x], &x0[y], &x0[z]))),
                    (1, dst.l2_01(&f0x[x], f2t.get(y, z))),
                    (-1, dst.l2_01(&f0x[y], f2t.get(x, z))),
                    (-1, dst.l2_10(f2t.get(x, y), &f0x[z])),
                    (-1, (maps.f2)(l2s.get(x, y), &x0[z])),
                    (1, (maps.f2)(&x0[x], l2s.get(y, z))),
                    (-1, (maps.f2)(&x0[y], l2s.get(x, z))),
                    (-1, dst.l3(&f0x[x], &f0x[y], &f0x[z])),
                ],
            )
        },
    ));
    report
}

pub fn check_morphism(f: &ShMorphism, src: &ShLeibniz2, dst: &ShLeibniz2) -> Result<VerifyReport> {
    src.validate()?;
    dst.validate()?;
    f.validate(src, dst)?;
    let f0 = |x: &Coords| f.f0.eval(x);
    let f1 = |m: &Coords| f.f1.eval(m);
    let f2 = |x: &Coords, y: &Coords| f.f2.eval(&[x, y]);
    let maps = MorphismMaps::<ShLeibniz2, ShLeibniz2> { f0: &f0, f1: &f1, f2: &f2 };
    Ok(verify_morphism_on_families(src, dst, &maps, &src.basis_family0(), &src.basis_family1()))
}

/// `(g f)_0 = g0 f0`, `(g f)_1 = g1 f1`, `(g f)_2(x,y) = g1 f2(x,y) + g2(f0 x, f0 y)`.
pub fn compose_morphisms(g: &ShMorphism, f: &ShMorphism) -> Result<ShMorphism> {
    if !f.f0.target.same_shape(&g.f0.source) || !f.f1.target.same_shape(&g.f1.source) {
        return Err(shape("cannot compose: target of f is not the source of g"));
    }
    if g.f2.dims() != [f.f0.target.dim, f.f0.target.dim] {
        return Err(shape("cannot compose: g2 does not act on the target of f0"));
    }
    let f0 = g.f0.compose(&f.f0)?;
    let f1 = g.f1.compose(&f.f1)?;
    let sources = f.f2.sources.clone();
    let f2 = StructureTensor::from_fn(sources, g.f1.target.clone(), |multi| {
        let a = g.f1.eval(&f.f2.get(multi));
        let x = f.f0.column(multi[0]);
        let y = f.f0.column(multi[1]);
        Ok(a.add(&g.f2.eval(&[&x, &y])))
    })?;
    Ok(ShMorphism { f0, f1, f2 })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::TwoTermComplex;
    use super::*;
    use crate::algebra::int;

    #[test]
    fn identity_morphism_passes() {
        for a in [e1(), e2_dg(), e2_identity_complex()] {
            let r = check_morphism(&ShMorphism::identity(&a), &a, &a).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn chain_maps_between_abelian_algebras_pass() {
        let a = ShLeibniz2::abelian(TwoTermComplex::skeletal(q(1), q(2)));
        let b = ShLeibniz2::abelian(TwoTermComplex::skeletal(q(2), q(1)));
        let f = ShMorphism {
            f0: LinearMap::from_int_rows(q(2), q(1), &[&[3, -1]]).unwrap(),
            f1: LinearMap::from_int_rows(q(1), q(2), &[&[2], &[5]]).unwrap(),
            f2: StructureTensor::zeros(vec![q(2), q(2)], q(2)),
        };
        assert!(check_morphism(&f, &a, &b).unwrap().passed());
    }

    #[test]
    fn nonzero_f2_between_abelian_algebras_fails_c1() {
        let a = e1();
        let mut f = ShMorphism::identity(&a);
        let d = LinearMap::identity(q(1));
        let b = ShLeibniz2::abelian(TwoTermComplex::new(q(1), q(1), d).unwrap());
        f.f2.set_entry(&[0, 0], 0, int(1));
        // d' f2 = 1 while both brackets vanish.
        let r = check_morphism(&f, &a, &b).unwrap();
        assert!(r.failing_names().contains(&"(c1.1)"));
    }

    #[test]
    fn compose_with_identity() {
        let a = e2_identity_complex();
        let id = ShMorphism::identity(&a);
        let mut f = id.clone();
        f.f0.set(1, 1, int(1));
        assert_eq!(compose_morphisms(&id, &f).unwrap(), f);
        assert_eq!(compose_morphisms(&f, &id).unwrap(), f);
    }
}
