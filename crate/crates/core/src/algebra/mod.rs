//! Exact linear and multilinear algebra over the rationals on based
//! finite-dimensional spaces.

mod linear;
mod solve;
mod tensor;

pub use linear::LinearMap;
pub use solve::{AffineSolution, LinearSystem};
pub use tensor::StructureTensor;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::report::Residual;

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let value: Rational = text.parse().ok()?;
    // BigRational::from_str accepts "p/0" by panicking later; reject it here.
    (!text.contains('/') || !value.denom().is_zero()).then_some(value)
}

/// Serializes rationals as `"p/q"` strings so exact values survive JSON/TOML.
pub mod rational_strings {
    use super::{parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(values.iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .collect()
    }
}

/// Values that the generic checkers can add, subtract and test for zero.
///
/// Implemented by coordinate vectors and by the polynomial section types of
/// the geometric modules.
pub trait Element: Clone + Send + Sync + PartialEq {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn residual(&self) -> Residual;
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinSpace {
    pub dim: usize,
    pub label: String,
}

impl FinSpace {
    pub fn new(dim: usize, label: impl Into<String>) -> Self {
        FinSpace { dim, label: label.into() }
    }

    /// Spaces are identified by dimension; the label is cosmetic.
    pub fn same_shape(&self, other: &FinSpace) -> bool {
        self.dim == other.dim
    }

    pub fn basis(&self) -> Vec<Coords> {
        (0..self.dim).map(|i| Coords::basis(self.dim, i)).collect()
    }
}

/// A coordinate vector with respect to the positional basis e_1..e_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coords(#[serde(with = "rational_strings")] pub Vec<Rational>);

impl Coords {
    pub fn zeros(dim: usize) -> Self {
        Coords(vec![Rational::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Coords(values.iter().map(|&v| int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Coords(self.0.iter().map(|x| x * c).collect())
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Coords) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    /// Nonzero entries as `(index, value)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().enumerate().filter(|(_, v)| !v.is_zero())
    }

    /// Concatenation, used for direct sums.
    pub fn concat(&self, other: &Coords) -> Coords {
        Coords(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn split_at(&self, k: usize) -> (Coords, Coords) {
        (Coords(self.0[..k].to_vec()), Coords(self.0[k..].to_vec()))
    }
}

impl Element for Coords {
    fn add(&self, other: &Self) -> Self {
        Coords(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        Coords(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn neg(&self) -> Self {
        Coords(self.0.iter().map(|a| -a).collect())
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn residual(&self) -> Residual {
        Residual::Coords(self.clone())
    }
}

/// Several residuals checked together, e.g. one per argument transposition.
impl<E: Element + std::fmt::Display> Element for Vec<E> {
    fn add(&self, other: &Self) -> Self {
        self.iter().zip(other).map(|(a, b)| a.add(b)).collect()
    }

    fn sub(&self, other: &Self) -> Self {
        self.iter().zip(other).map(|(a, b)| a.sub(b)).collect()
    }

    fn neg(&self) -> Self {
        self.iter().map(Element::neg).collect()
    }

    fn is_zero(&self) -> bool {
        self.iter().all(Element::is_zero)
    }

    fn residual(&self) -> Residual {
        let parts: Vec<String> = self.iter().map(ToString::to_string).collect();
        Residual::Symbolic(format!("[{}]", parts.join("; ")))
    }
}

impl std::fmt::Display for Coords {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat(2, 4), rat(1, 2));
    }

    #[test]
    fn rational_sum_is_exact_both_ways() {
        // a/b + c/d computed directly and through a common denominator.
        let (a, b, c, d) = (7i64, 12i64, -5i64, 18i64);
        let direct = rat(a, b) + rat(c, d);
        let common = rat(a * d + c * b, b * d);
        assert_eq!(direct, common);
        assert_eq!(direct, rat(11, 36));
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert_eq!(parse_rational("3/4"), Some(rat(3, 4)));
        assert_eq!(parse_rational("-2"), Some(int(-2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
