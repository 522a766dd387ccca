use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{rational_strings, Coords, FinSpace, Rational};
use crate::error::{shape, Result};
use crate::exec::{rank, unrank};

/// Structure constants of a multilinear map `S_1 x ... x S_k -> T`.
///
/// Coefficients are stored densely, one target vector per source basis
/// multi-index, multi-indices ordered with the first slot most significant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureTensor {
    pub sources: Vec<FinSpace>,
    pub target: FinSpace,
    #[serde(with = "rational_strings")]
    coeffs: Vec<Rational>,
}

impl StructureTensor {
    pub fn zeros(sources: Vec<FinSpace>, target: FinSpace) -> Self {
        let n = sources.iter().map(|s| s.dim).product::<usize>() * target.dim;
        StructureTensor { sources, target, coeffs: vec![Rational::zero(); n] }
    }

    pub fn new(sources: Vec<FinSpace>, target: FinSpace, coeffs: Vec<Rational>) -> Result<Self> {
        let expected = sources.iter().map(|s| s.dim).product::<usize>() * target.dim;
        if sources.is_empty() {
            return Err(shape("a structure tensor needs at least one source"));
        }
        if coeffs.len() != expected {
            return Err(shape(format!(
                "structure tensor has {} coefficients, expected {expected}",
                coeffs.len()
            )));
        }
        Ok(StructureTensor { sources, target, coeffs })
    }

    /// Fills every basis multi-index with `f(multi)`.
    pub fn from_fn<F>(sources: Vec<FinSpace>, target: FinSpace, mut f: F) -> Result<Self>
    where
        F: FnMut(&[usize]) -> Result<Coords>,
    {
        let mut t = Self::zeros(sources, target);
        let dims = t.dims();
        for lin in 0..t.tuple_count() {
            let multi = unrank(lin, &dims);
            let v = f(&multi)?;
            t.set(&multi, &v)?;
        }
        Ok(t)
    }

    pub fn arity(&self) -> usize {
        self.sources.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.sources.iter().map(|s| s.dim).collect()
    }

    pub fn tuple_count(&self) -> usize {
        self.sources.iter().map(|s| s.dim).product()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn offset(&self, multi: &[usize]) -> usize {
        rank(multi, &self.dims()) * self.target.dim
    }

    /// Value on a tuple of basis vectors.
    pub fn get(&self, multi: &[usize]) -> Coords {
        let o = self.offset(multi);
        Coords(self.coeffs[o..o + self.target.dim].to_vec())
    }

    pub fn entry(&self, multi: &[usize], target_index: usize) -> &Rational {
        &self.coeffs[self.offset(multi) + target_index]
    }

    pub fn set(&mut self, multi: &[usize], value: &Coords) -> Result<()> {
        if multi.len() != self.arity() || value.dim() != self.target.dim {
            return Err(shape("tensor entry does not match the declared spaces"));
        }
        if multi.iter().zip(&self.sources).any(|(&i, s)| i >= s.dim) {
            return Err(shape("basis index out of range"));
        }
        let o = self.offset(multi);
        self.coeffs[o..o + self.target.dim].clone_from_slice(&value.0);
        Ok(())
    }

    pub fn set_entry(&mut self, multi: &[usize], target_index: usize, value: Rational) {
        let o = self.offset(multi);
        self.coeffs[o + target_index] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Multilinear evaluation, expanding only over the supports of the
    /// arguments.
    pub fn apply(&self, args: &[&Coords]) -> Result<Coords> {
        if args.len() != self.arity() {
            return Err(shape(format!(
                "tensor of arity {} applied to {} arguments",
                self.arity(),
                args.len()
            )));
        }
        for (slot, (a, s)) in args.iter().zip(&self.sources).enumerate() {
            if a.dim() != s.dim {
                return Err(shape(format!(
                    "argument {slot} has length {}, expected {}",
                    a.dim(),
                    s.dim
                )));
            }
        }
        Ok(self.eval(args))
    }

    /// [`apply`](Self::apply) without shape validation, for callers whose
    /// shapes were validated at construction.
    pub(crate) fn eval(&self, args: &[&Coords]) -> Coords {
        debug_assert_eq!(args.len(), self.arity());
        let supports: Vec<Vec<(usize, &Rational)>> = args.iter().map(|a| a.support().collect()).collect();
        let mut out = Coords::zeros(self.target.dim);
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let dims = self.dims();
        let mut pos = vec![0usize; supports.len()];
        loop {
            let mut scalar = supports[0][pos[0]].1.clone();
            for (slot, p) in pos.iter().enumerate().skip(1) {
                scalar *= supports[slot][*p].1;
            }
            let multi: Vec<usize> = pos.iter().enumerate().map(|(s, &p)| supports[s][p].0).collect();
            let o = rank(&multi, &dims) * self.target.dim;
            for (i, c) in self.coeffs[o..o + self.target.dim].iter().enumerate() {
                if !c.is_zero() {
                    out.0[i] += &scalar * c;
                }
            }
            // advance the odometer, last slot fastest
            let mut slot = pos.len();
            loop {
                if slot == 0 {
                    return out;
                }
                slot -= 1;
                pos[slot] += 1;
                if pos[slot] < supports[slot].len() {
                    break;
                }
                pos[slot] = 0;
            }
        }
    }

    /// Applies a linear map to every output vector.
    pub fn map_target(&self, m: &super::LinearMap) -> Result<StructureTensor> {
        if !m.source.same_shape(&self.target) {
            return Err(shape("target map does not match tensor target"));
        }
        Self::from_fn(self.sources.clone(), m.target.clone(), |multi| m.apply(&self.get(multi)))
    }

    /// Nonzero basis values as `(multi-index, value)` pairs.
    pub fn nonzero_entries(&self) -> Vec<(Vec<usize>, Coords)> {
        let dims = self.dims();
        (0..self.tuple_count())
            .filter_map(|lin| {
                let multi = unrank(lin, &dims);
                let v = self.get(&multi);
                v.0.iter().any(|c| !c.is_zero()).then_some((multi, v))
            })
            .collect()
    }
}
