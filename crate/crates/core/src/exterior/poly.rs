use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{int, parse_rational, Element, Rational};
use crate::error::{Error, Result};
use crate::report::Residual;

pub const MAX_VARS: usize = 8;

/// Exponent vector of a monomial, ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::default();
        m.0[i] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a += b;
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `x1..xn` with rational coefficients. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Poly::monomial(n, Monomial::one(), c)
    }

    pub fn one(n: usize) -> Self {
        Poly::constant(n, int(1))
    }

    /// The coordinate function `x_{i+1}`.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index out of range");
        Poly::monomial(n, Monomial::var(i), int(1))
    }

    pub fn monomial(n: usize, m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero(n);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Terms in increasing graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Poly) {
        debug_assert_eq!(self.n, other.n);
        for (m, v) in &other.terms {
            self.add_term(*m, c * v);
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly { n: self.n, terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.n, other.n);
        let mut out = Poly::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }

    /// `∂/∂x_{i+1}`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut m2 = *m;
                m2.0[i] -= 1;
                out.add_term(m2, c * int(e as i64));
            }
        }
        out
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let mut m2 = Monomial::default();
            for i in 0..self.n {
                m2.0[perm[i]] = m.0[i];
            }
            out.add_term(m2, c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0[..self.n].iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            total += t;
        }
        total
    }

    /// Parses text such as `3/2 x1^2 x3 - x2 + 1`. `x`, `y`, `z`, `w` are
    /// accepted for `x1..x4`; factors may be separated by spaces or `*`.
    pub fn parse(n: usize, text: &str) -> Result<Poly> {
        Parser { n, text, pos: 0 }.poly()
    }
}

struct Parser<'a> {
    n: usize,
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: message.into() })
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        let len: usize = self.rest().chars().take_while(|&c| f(c)).map(char::len_utf8).sum();
        self.pos += len;
        &self.text[start..self.pos]
    }

    fn poly(mut self) -> Result<Poly> {
        let mut p = Poly::zero(self.n);
        self.skip_ws();
        if self.rest().is_empty() {
            return self.err("empty polynomial");
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let mut sign = int(1);
            match self.peek() {
                None => break,
                Some('+') => self.pos += 1,
                Some('-') => {
                    self.pos += 1;
                    sign = int(-1);
                }
                Some(_) if first => {}
                Some(c) => return self.err(format!("expected '+' or '-', found {c:?}")),
            }
            first = false;
            let (m, c) = self.term()?;
            p.add_term(m, sign * c);
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        self.skip_ws();
        let mut coeff = int(1);
        let mut saw_factor = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            let lit = self.take_while(|c| c.is_ascii_digit() || c == '/').to_string();
            match parse_rational(&lit) {
                Some(v) => coeff = v,
                None => {
                    self.pos = start;
                    return self.err(format!("bad coefficient {lit:?}"));
                }
            }
            saw_factor = true;
        }
        let mut m = Monomial::one();
        loop {
            self.skip_ws();
            let star = self.peek() == Some('*');
            if star {
                if !saw_factor {
                    return self.err("'*' must follow a factor");
                }
                self.pos += 1;
                self.skip_ws();
            }
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {}
                _ if star => return self.err("expected a variable after '*'"),
                _ => break,
            }
            let start = self.pos;
            let name = self.take_while(|c| c.is_ascii_alphanumeric()).to_string();
            let index = match name.as_str() {
                "x" => 0,
                "y" => 1,
                "z" => 2,
                "w" => 3,
                _ => match name.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                    Some(k) if k >= 1 => k - 1,
                    _ => {
                        self.pos = start;
                        return self.err(format!("unknown variable {name:?}"));
                    }
                },
            };
            if index >= self.n {
                self.pos = start;
                return self.err(format!("variable {name:?} outside {} variables", self.n));
            }
            let mut e = 1u16;
            if self.peek() == Some('^') {
                self.pos += 1;
                let digits = self.take_while(|c| c.is_ascii_digit());
                e = match digits.parse() {
                    Ok(v) => v,
                    Err(_) => return self.err("expected an exponent after '^'"),
                };
            }
            m.0[index] += e;
            saw_factor = true;
        }
        if !saw_factor {
            return self.err("expected a coefficient or variable");
        }
        Ok((m, coeff))
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, n: usize) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0[..n].iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let is_const = *m == Monomial::one();
            if is_const {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs} ")?;
                }
                write_monomial(f, m, self.n)?;
            }
        }
        Ok(())
    }
}

impl Element for Poly {
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&int(1), other);
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&int(-1), other);
        out
    }

    fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn residual(&self) -> Residual {
        Residual::Symbolic(self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn grlex_order() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        let xy = x.mul(&y);
        assert!(Monomial::one() < y && y < x && x < xy);
        let yy = y.mul(&y);
        assert!(yy < xy);
    }

    #[test]
    fn parse_and_display() {
        let p = Poly::parse(3, "3/2 x1^2 x3 - x2 + 1").unwrap();
        assert_eq!(p.to_string(), "3/2 x1^2 x3 - x2 + 1");
        assert_eq!(Poly::parse(3, "x*y - 2").unwrap().to_string(), "x1 x2 - 2");
        assert_eq!(Poly::parse(2, "x - x").unwrap().to_string(), "0");
        assert_eq!(Poly::parse(2, "-x2").unwrap(), Poly::var(2, 1).neg());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match Poly::parse(2, "x1 + x3") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("{other:?}"),
        }
        assert!(Poly::parse(2, "").is_err());
        assert!(Poly::parse(2, "1/0").is_err());
        assert!(Poly::parse(2, "x1 x2 +").is_err());
        assert!(Poly::parse(2, "x1 +* x2").is_err());
        assert!(Poly::parse(2, "x1 *").is_err());
        assert_eq!(Poly::parse(2, "2 * x2").unwrap(), Poly::var(2, 1).scale(&int(2)));
    }

    #[test]
    fn arithmetic() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p, Poly::parse(2, "x1^2 - x2^2").unwrap());
        assert_eq!(p.partial(0), x.scale(&int(2)));
        assert_eq!(p.eval(&[int(3), rat(1, 2)]), rat(35, 4));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(Poly::zero(2).degree(), None);
    }
}
