use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{int, rational_strings, Coords, FinSpace, LinearSystem, Rational};
use crate::error::{shape, Result};

/// A linear map stored as a dense `dim(target) x dim(source)` matrix,
/// row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMap {
    pub source: FinSpace,
    pub target: FinSpace,
    #[serde(with = "rational_strings")]
    coeffs: Vec<Rational>,
}

impl LinearMap {
    pub fn new(source: FinSpace, target: FinSpace, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != source.dim * target.dim {
            return Err(shape(format!(
                "matrix has {} entries, expected {}x{}",
                coeffs.len(),
                target.dim,
                source.dim
            )));
        }
        Ok(LinearMap { source, target, coeffs })
    }

    pub fn zero(source: FinSpace, target: FinSpace) -> Self {
        let n = source.dim * target.dim;
        LinearMap { source, target, coeffs: vec![Rational::zero(); n] }
    }

    pub fn identity(space: FinSpace) -> Self {
        let mut m = Self::zero(space.clone(), space);
        for i in 0..m.source.dim {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a map from integer rows (one row per target coordinate).
    pub fn from_int_rows(source: FinSpace, target: FinSpace, rows: &[&[i64]]) -> Result<Self> {
        if rows.len() != target.dim || rows.iter().any(|r| r.len() != source.dim) {
            return Err(shape("row layout does not match the declared spaces"));
        }
        let coeffs = rows.iter().flat_map(|r| r.iter().map(|&v| int(v))).collect();
        Self::new(source, target, coeffs)
    }

    /// Builds the map whose j-th column is `columns[j]`.
    pub fn from_columns(source: FinSpace, target: FinSpace, columns: &[Coords]) -> Result<Self> {
        if columns.len() != source.dim || columns.iter().any(|c| c.dim() != target.dim) {
            return Err(shape("column layout does not match the declared spaces"));
        }
        let mut m = Self::zero(source, target);
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.0.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.target.dim
    }

    pub fn cols(&self) -> usize {
        self.source.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.coeffs[row * self.source.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        let cols = self.source.dim;
        self.coeffs[row * cols + col] = value;
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn column(&self, col: usize) -> Coords {
        Coords((0..self.rows()).map(|r| self.get(r, col).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn apply(&self, v: &Coords) -> Result<Coords> {
        if v.dim() != self.source.dim {
            return Err(shape(format!(
                "vector of length {} applied to map with source dimension {}",
                v.dim(),
                self.source.dim
            )));
        }
        Ok(self.eval(v))
    }

    pub(crate) fn eval(&self, v: &Coords) -> Coords {
        debug_assert_eq!(v.dim(), self.source.dim);
        let mut out = Coords::zeros(self.target.dim);
        for (j, x) in v.support() {
            for i in 0..self.target.dim {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out.0[i] += a * x;
                }
            }
        }
        out
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if !inner.target.same_shape(&self.source) {
            return Err(shape(format!(
                "cannot compose: inner target has dimension {}, outer source {}",
                inner.target.dim, self.source.dim
            )));
        }
        let mut out = LinearMap::zero(inner.source.clone(), self.target.clone());
        for i in 0..self.rows() {
            for k in 0..self.cols() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..inner.cols() {
                    let b = inner.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.source.dim + j;
                        out.coeffs[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> LinearMap {
        LinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        if !self.source.same_shape(&other.source) || !self.target.same_shape(&other.target) {
            return Err(shape("cannot add maps of different shapes"));
        }
        Ok(LinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn rank(&self) -> usize {
        let mut sys = LinearSystem::new(self.cols());
        for i in 0..self.rows() {
            let row = (0..self.cols()).map(|j| (j, self.get(i, j).clone()));
            sys.add_equation(row, Rational::zero());
        }
        sys.rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows() == self.cols() && self.rank() == self.rows()
    }

    /// Exact inverse by Gauss-Jordan elimination on `[A | I]`.
    pub fn inverse(&self) -> Option<LinearMap> {
        let n = self.rows();
        if n != self.cols() {
            return None;
        }
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x -= &f * p;
                    }
                }
            }
        }
        let coeffs = a.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
        Some(LinearMap { source: self.target.clone(), target: self.source.clone(), coeffs })
    }

    /// Basis of the kernel, in reduced-echelon free-variable order.
    pub fn kernel(&self) -> Vec<Coords> {
        let mut sys = LinearSystem::new(self.cols());
        for i in 0..self.rows() {
            let row = (0..self.cols()).map(|j| (j, self.get(i, j).clone()));
            sys.add_equation(row, Rational::zero());
        }
        sys.solve().map(|s| s.kernel).unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;

    fn q(n: usize) -> FinSpace {
        FinSpace::new(n, "Q")
    }

    #[test]
    fn apply_identity_zero_and_swap() {
        let id = LinearMap::identity(q(2));
        assert_eq!(id.apply(&Coords::from_ints(&[1, 3])).unwrap(), Coords::from_ints(&[1, 3]));
        let zero = LinearMap::zero(q(2), q(2));
        assert_eq!(zero.apply(&Coords::from_ints(&[5, 7])).unwrap(), Coords::from_ints(&[0, 0]));
        let swap = LinearMap::from_int_rows(q(2), q(2), &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(swap.apply(&Coords::from_ints(&[2, 3])).unwrap(), Coords::from_ints(&[3, 2]));
    }

    #[test]
    fn apply_rejects_wrong_length() {
        let id = LinearMap::identity(q(2));
        assert!(matches!(id.apply(&Coords::from_ints(&[1])), Err(crate::Error::Shape(_))));
    }

    #[test]
    fn compose_examples() {
        let a = LinearMap::from_int_rows(q(2), q(2), &[&[0, 1], &[0, 0]]).unwrap();
        assert!(a.compose(&a).unwrap().is_zero());
        assert_eq!(a.compose(&LinearMap::identity(q(2))).unwrap(), a);
        assert!(LinearMap::zero(q(2), q(2)).compose(&a).unwrap().is_zero());
        let wide = LinearMap::zero(q(3), q(1));
        assert!(a.compose(&wide).is_err());
    }

    #[test]
    fn inverse_and_rank() {
        let m = LinearMap::from_int_rows(q(2), q(2), &[&[2, 1], &[1, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv).unwrap(), LinearMap::identity(q(2)));
        let singular = LinearMap::from_int_rows(q(2), q(2), &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(singular.rank(), 1);
        assert!(singular.inverse().is_none());
        let k = singular.kernel();
        assert_eq!(k.len(), 1);
        assert!(singular.apply(&k[0]).unwrap().is_zero());
    }
}
