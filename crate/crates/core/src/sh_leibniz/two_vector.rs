use serde::{Deserialize, Serialize};

use super::ShLeibnizOps;
use crate::algebra::{Coords, Element};
use crate::error::{Error, Result};

/// An element `v + m` of the 2-vector space `V0 ⊕ V1`: an object `v` and a
/// morphism `m` with source `v` and target `v + dm`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoVector<X, M> {
    pub object: X,
    pub morphism: M,
}

pub type TwoVectorElement = TwoVector<Coords, Coords>;

impl<X: Element, M: Element> TwoVector<X, M> {
    pub fn new(object: X, morphism: M) -> Self {
        TwoVector { object, morphism }
    }

    pub fn source(&self) -> X {
        self.object.clone()
    }

    pub fn target<O: ShLeibnizOps<V0 = X, V1 = M>>(&self, ops: &O) -> X {
        self.object.add(&ops.d(&self.morphism))
    }
}

/// `[[x+m, y+n]] = l2(x,y) + l2(x,n) + l2(m,y) + l2(m,dn)`.
pub fn functor_bracket<O: ShLeibnizOps>(
    ops: &O,
    p: &TwoVector<O::V0, O::V1>,
    q: &TwoVector<O::V0, O::V1>,
) -> TwoVector<O::V0, O::V1> {
    let (x, m) = (&p.object, &p.morphism);
    let (y, n) = (&q.object, &q.morphism);
    let morphism = ops
        .l2_01(x, n)
        .add(&ops.l2_10(m, y))
        .add(&ops.l2_10(m, &ops.d(n)));
    TwoVector { object: ops.l2_00(x, y), morphism }
}

/// `J_{x,y,z} = [[[[x,y]],z]] + l3(x,y,z)`, a morphism from
/// `l2(l2(x,y),z)` to `l2(x,l2(y,z)) - l2(y,l2(x,z))`.
///
/// Fails with a `(d)` violation when the target is not the one condition
/// (d) predicts.
pub fn jacobiator<O: ShLeibnizOps>(
    ops: &O,
    x: &O::V0,
    y: &O::V0,
    z: &O::V0,
) -> Result<TwoVector<O::V0, O::V1>> {
    let j = TwoVector { object: ops.l2_00(&ops.l2_00(x, y), z), morphism: ops.l3(x, y, z) };
    let expected = ops.l2_00(x, &ops.l2_00(y, z)).sub(&ops.l2_00(y, &ops.l2_00(x, z)));
    let residual = j.target(ops).sub(&expected);
    if !residual.is_zero() {
        return Err(Error::Violation {
            condition: "(d)".into(),
            detail: format!("jacobiator target is off by {}", residual.residual()),
        });
    }
    Ok(j)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn functor_bracket_examples() {
        let a = e2_identity_complex();
        let zero = TwoVector::new(Coords::zeros(2), Coords::zeros(2));
        assert_eq!(functor_bracket(&a, &zero, &zero), zero);

        let e1 = Coords::basis(2, 0);
        let objects = TwoVector::new(e1.clone(), Coords::zeros(2));
        let b = functor_bracket(&a, &objects, &objects);
        assert_eq!(b.object, Coords::basis(2, 1));
        assert!(b.morphism.is_zero());

        // p = q = 0 + e1: only l2(m, dn) = [e1, e1] survives.
        let p = TwoVector::new(Coords::zeros(2), e1);
        let b = functor_bracket(&a, &p, &p);
        assert!(b.object.is_zero());
        assert_eq!(b.morphism, Coords::basis(2, 1));
    }

    #[test]
    fn bracket_source_is_bracket_of_sources() {
        let a = e2_identity_complex();
        let p = TwoVector::new(Coords::from_ints(&[1, 2]), Coords::from_ints(&[3, -1]));
        let q = TwoVector::new(Coords::from_ints(&[-2, 1]), Coords::from_ints(&[1, 1]));
        let sp = TwoVector::new(p.source(), Coords::zeros(2));
        let sq = TwoVector::new(q.source(), Coords::zeros(2));
        assert_eq!(functor_bracket(&a, &p, &q).source(), functor_bracket(&a, &sp, &sq).object);
    }

    #[test]
    fn jacobiator_of_strict_and_bad_algebras() {
        let a = e1();
        let x = Coords::basis(1, 0);
        let j = jacobiator(&a, &x, &x, &x).unwrap();
        assert!(j.object.is_zero() && j.morphism.is_zero());

        let b = e2_dg();
        let e1 = Coords::basis(2, 0);
        assert!(jacobiator(&b, &e1, &e1, &e1).unwrap().morphism.is_zero());

        let bad = bad_leibniz();
        let err = jacobiator(&bad, &e1, &e1, &e1).unwrap_err();
        assert!(matches!(err, Error::Violation { ref condition, .. } if condition == "(d)"));
    }
}
