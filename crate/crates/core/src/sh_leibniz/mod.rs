//! 2-term sh Leibniz algebras: data, verification of the defining identities,
//! classification, morphisms, and the 2-vector-space view.

mod morphism;
mod two_vector;
mod verify;

pub use morphism::{
    check_morphism, compose_morphisms, verify_morphism_on_families, MorphismMaps, ShMorphism,
};
pub use two_vector::{functor_bracket, jacobiator, TwoVector, TwoVectorElement};
pub use verify::{check_rep1, check_sh_leibniz, verify_on_families};

use serde::{Deserialize, Serialize};

use crate::algebra::{Coords, Element, FinSpace, LinearMap, StructureTensor};
use crate::check::Family;
use crate::error::{shape, Result};

/// The operations of a 2-term sh Leibniz algebra, abstracted over how
/// elements are represented.
///
/// Finite-dimensional algebras use coordinate vectors; the geometric
/// constructions use polynomial sections. `l2` on `V1 x V1` is zero and has
/// no method.
pub trait ShLeibnizOps: Sync {
    type V0: Element;
    type V1: Element;

    fn zero0(&self) -> Self::V0;
    fn zero1(&self) -> Self::V1;
    fn d(&self, m: &Self::V1) -> Self::V0;
    fn l2_00(&self, x: &Self::V0, y: &Self::V0) -> Self::V0;
    fn l2_01(&self, x: &Self::V0, m: &Self::V1) -> Self::V1;
    fn l2_10(&self, m: &Self::V1, x: &Self::V0) -> Self::V1;
    fn l3(&self, x: &Self::V0, y: &Self::V0, z: &Self::V0) -> Self::V1;

    /// True when `l3` is known to vanish identically, not just on a family.
    fn l3_vanishes(&self) -> bool {
        false
    }
}

/// `V1 --d--> V0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoTermComplex {
    pub v1: FinSpace,
    pub v0: FinSpace,
    pub d: LinearMap,
}

impl TwoTermComplex {
    pub fn new(v1: FinSpace, v0: FinSpace, d: LinearMap) -> Result<Self> {
        let c = TwoTermComplex { v1, v0, d };
        c.validate()?;
        Ok(c)
    }

    /// The complex with zero differential.
    pub fn skeletal(v1: FinSpace, v0: FinSpace) -> Self {
        let d = LinearMap::zero(v1.clone(), v0.clone());
        TwoTermComplex { v1, v0, d }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.d.source.same_shape(&self.v1) || !self.d.target.same_shape(&self.v0) {
            return Err(shape(format!(
                "differential is {}x{}, complex is {} -> {}",
                self.d.target.dim, self.d.source.dim, self.v1.dim, self.v0.dim
            )));
        }
        Ok(())
    }
}

/// A finite-dimensional 2-term sh Leibniz algebra given by structure
/// constants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShLeibniz2 {
    pub complex: TwoTermComplex,
    /// `V0 x V0 -> V0`
    pub l2_00: StructureTensor,
    /// `V0 x V1 -> V1`
    pub l2_01: StructureTensor,
    /// `V1 x V0 -> V1`
    pub l2_10: StructureTensor,
    /// `V0 x V0 x V0 -> V1`
    pub l3: StructureTensor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub dg: bool,
    pub skeletal: bool,
    pub l_infinity: bool,
}

impl ShLeibniz2 {
    pub fn new(
        complex: TwoTermComplex,
        l2_00: StructureTensor,
        l2_01: StructureTensor,
        l2_10: StructureTensor,
        l3: StructureTensor,
    ) -> Result<Self> {
        let a = ShLeibniz2 { complex, l2_00, l2_01, l2_10, l3 };
        a.validate()?;
        Ok(a)
    }

    /// All brackets zero.
    pub fn abelian(complex: TwoTermComplex) -> Self {
        let (v0, v1) = (complex.v0.clone(), complex.v1.clone());
        ShLeibniz2 {
            l2_00: StructureTensor::zeros(vec![v0.clone(), v0.clone()], v0.clone()),
            l2_01: StructureTensor::zeros(vec![v0.clone(), v1.clone()], v1.clone()),
            l2_10: StructureTensor::zeros(vec![v1.clone(), v0.clone()], v1.clone()),
            l3: StructureTensor::zeros(vec![v0.clone(), v0.clone(), v0], v1),
            complex,
        }
    }

    pub fn v0(&self) -> &FinSpace {
        &self.complex.v0
    }

    pub fn v1(&self) -> &FinSpace {
        &self.complex.v1
    }

    pub fn d(&self) -> &LinearMap {
        &self.complex.d
    }

    pub fn validate(&self) -> Result<()> {
        self.complex.validate()?;
        let (n0, n1) = (self.v0().dim, self.v1().dim);
        let expect = |t: &StructureTensor, name: &str, src: &[usize], tgt: usize| -> Result<()> {
            if t.dims() != src || t.target.dim != tgt {
                return Err(shape(format!(
                    "{name} has shape {:?} -> {}, expected {src:?} -> {tgt}",
                    t.dims(),
                    t.target.dim
                )));
            }
            Ok(())
        };
        expect(&self.l2_00, "l2 on V0 x V0", &[n0, n0], n0)?;
        expect(&self.l2_01, "l2 on V0 x V1", &[n0, n1], n1)?;
        expect(&self.l2_10, "l2 on V1 x V0", &[n1, n0], n1)?;
        expect(&self.l3, "l3", &[n0, n0, n0], n1)
    }

    pub fn basis_family0(&self) -> Family<Coords> {
        Family::numbered(self.v0().basis(), "e")
    }

    pub fn basis_family1(&self) -> Family<Coords> {
        Family::numbered(self.v1().basis(), "m")
    }

    /// dg: `l3 = 0`; skeletal: `d = 0`; L-infinity: `l2` antisymmetric on
    /// `V0 x V0`, `l2(x,m) = -l2(m,x)`, and `l3` totally antisymmetric.
    pub fn classify(&self) -> Classification {
        let n0 = self.v0().dim;
        let n1 = self.v1().dim;
        let mut anti = true;
        for i in 0..n0 {
            for j in 0..n0 {
                if self.l2_00.get(&[i, j]) != self.l2_00.get(&[j, i]).neg() {
                    anti = false;
                }
            }
            for m in 0..n1 {
                if self.l2_01.get(&[i, m]) != self.l2_10.get(&[m, i]).neg() {
                    anti = false;
                }
            }
        }
        for i in 0..n0 {
            for j in 0..n0 {
                for k in 0..n0 {
                    let v = self.l3.get(&[i, j, k]);
                    let swaps = [[j, i, k], [i, k, j], [k, j, i]];
                    if swaps.iter().any(|s| self.l3.get(s) != v.neg()) {
                        anti = false;
                    }
                }
            }
        }
        Classification { dg: self.l3.is_zero(), skeletal: self.d().is_zero(), l_infinity: anti }
    }
}

impl ShLeibnizOps for ShLeibniz2 {
    type V0 = Coords;
    type V1 = Coords;

    fn zero0(&self) -> Coords {
        Coords::zeros(self.v0().dim)
    }

    fn zero1(&self) -> Coords {
        Coords::zeros(self.v1().dim)
    }

    fn d(&self, m: &Coords) -> Coords {
        self.complex.d.eval(m)
    }

    fn l2_00(&self, x: &Coords, y: &Coords) -> Coords {
        self.l2_00.eval(&[x, y])
    }

    fn l2_01(&self, x: &Coords, m: &Coords) -> Coords {
        self.l2_01.eval(&[x, m])
    }

    fn l2_10(&self, m: &Coords, x: &Coords) -> Coords {
        self.l2_10.eval(&[m, x])
    }

    fn l3(&self, x: &Coords, y: &Coords, z: &Coords) -> Coords {
        self.l3.eval(&[x, y, z])
    }

    fn l3_vanishes(&self) -> bool {
        self.l3.is_zero()
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn classify_examples() {
        let c = e1().classify();
        assert!(c.dg && c.skeletal && c.l_infinity);
        let c = e2_dg().classify();
        assert!(c.dg && c.skeletal && !c.l_infinity);
        let c = e2_identity_complex().classify();
        assert!(c.dg && !c.skeletal && !c.l_infinity);
    }

    #[test]
    fn validate_rejects_bad_shapes() {
        let mut a = e1();
        a.l3 = StructureTensor::zeros(vec![q(1), q(1)], q(1));
        assert!(matches!(a.validate(), Err(crate::Error::Shape(_))));
    }
}
