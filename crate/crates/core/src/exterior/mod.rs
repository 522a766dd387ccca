//! Cartan calculus on `R^n` with polynomial coefficients.
//!
//! Conventions: `i_X` contracts the first slot,
//! `i_X(dx_{i1}∧…∧dx_{ik}) = Σ_j (-1)^{j-1} X^{ij} dx_{i1}∧…(omit ij)…∧dx_{ik}`,
//! and `i_{X∧Y∧Z} = i_Z i_Y i_X`. A 3-form evaluated on two fields is
//! `h(X,Y) = i_Y i_X h`.

mod poly;

pub use poly::{Monomial, Poly, MAX_VARS};

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{int, Element, Rational};
use crate::error::{shape, Error, Result};
use crate::report::Residual;

pub trait Kind: Copy + Eq + Send + Sync + fmt::Debug + 'static {
    /// Basis symbol prefix used when rendering, `dx` or `∂`.
    const SYMBOL: &'static str;
    type Dual: Kind;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VectorKind;

impl Kind for FormKind {
    const SYMBOL: &'static str = "dx";
    type Dual = VectorKind;
}

impl Kind for VectorKind {
    const SYMBOL: &'static str = "∂";
    type Dual = FormKind;
}

/// A homogeneous element of `Λ^k` over polynomials: a differential form or a
/// multivector field, keyed by strictly increasing 0-based index tuples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alt<K: Kind> {
    n: usize,
    degree: usize,
    comps: BTreeMap<Vec<usize>, Poly>,
    kind: PhantomData<K>,
}

pub type Form = Alt<FormKind>;
pub type Multivector = Alt<VectorKind>;

/// Sorts `idx` in place and returns the sign of the sorting permutation, or
/// `None` when an index repeats.
fn sort_with_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    idx.windows(2).all(|w| w[0] < w[1]).then_some(sign)
}

impl<K: Kind> Alt<K> {
    pub fn zero(n: usize, degree: usize) -> Self {
        assert!(n <= MAX_VARS && degree <= n, "degree {degree} on {n} variables");
        Alt { n, degree, comps: BTreeMap::new(), kind: PhantomData }
    }

    /// A degree-0 element.
    pub fn function(f: Poly) -> Self {
        let mut a = Alt::zero(f.nvars(), 0);
        a.add_term(vec![], f);
        a
    }

    /// `dx_{i1}∧…` (or `∂_{i1}∧…`) for 0-based, not necessarily sorted indices.
    pub fn basis(n: usize, idx: &[usize]) -> Self {
        Alt::term(n, idx, Poly::one(n))
    }

    /// `f dx_{i1}∧…` for 0-based, not necessarily sorted indices.
    pub fn term(n: usize, idx: &[usize], f: Poly) -> Self {
        let mut a = Alt::zero(n, idx.len());
        a.add_term(idx.to_vec(), f);
        a
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> impl Iterator<Item = (&[usize], &Poly)> {
        self.comps.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// The coefficient on an arbitrary index tuple, with the alternating sign.
    pub fn coeff(&self, idx: &[usize]) -> Poly {
        let mut sorted = idx.to_vec();
        match sort_with_sign(&mut sorted) {
            Some(sign) => match self.comps.get(&sorted) {
                Some(p) if sign == 1 => p.clone(),
                Some(p) => p.neg(),
                None => Poly::zero(self.n),
            },
            None => Poly::zero(self.n),
        }
    }

    /// Adds `f` on an arbitrary index tuple, sorting it with sign.
    pub fn add_term(&mut self, mut idx: Vec<usize>, f: Poly) {
        debug_assert_eq!(idx.len(), self.degree);
        debug_assert!(idx.iter().all(|&i| i < self.n));
        if f.is_zero() {
            return;
        }
        let Some(sign) = sort_with_sign(&mut idx) else { return };
        let entry = self.comps.entry(idx.clone()).or_insert_with(|| Poly::zero(self.n));
        entry.add_scaled(&int(sign), &f);
        if entry.is_zero() {
            self.comps.remove(&idx);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Multiplication by a function.
    pub fn scale_poly(&self, f: &Poly) -> Self {
        self.map(|p| p.mul(f))
    }

    fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        let mut out = Alt::zero(self.n, self.degree);
        for (k, v) in &self.comps {
            let p = f(v);
            if !p.is_zero() {
                out.comps.insert(k.clone(), p);
            }
        }
        out
    }

    fn combine(&self, other: &Self, c: i64) -> Self {
        assert!(
            self.n == other.n && self.degree == other.degree,
            "adding elements of different shape"
        );
        let mut out = self.clone();
        for (k, v) in &other.comps {
            let entry = out.comps.entry(k.clone()).or_insert_with(|| Poly::zero(self.n));
            entry.add_scaled(&int(c), v);
            if entry.is_zero() {
                out.comps.remove(k);
            }
        }
        out
    }

    /// The degree-0 value as a function (zero for higher degree elements
    /// that vanish).
    pub fn as_function(&self) -> Poly {
        debug_assert_eq!(self.degree, 0);
        self.comps.get(&Vec::new()).cloned().unwrap_or_else(|| Poly::zero(self.n))
    }

    /// Renames variable and index `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Alt::zero(self.n, self.degree);
        for (k, v) in &self.comps {
            out.add_term(k.iter().map(|&i| perm[i]).collect(), v.permute(perm));
        }
        out
    }

    fn same_space<L: Kind>(&self, other: &Alt<L>) -> Result<()> {
        if self.n != other.n {
            return Err(shape(format!("{} variables against {}", self.n, other.n)));
        }
        Ok(())
    }
}

impl<K: Kind> Element for Alt<K> {
    fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    fn residual(&self) -> Residual {
        Residual::Symbolic(self.to_string())
    }
}

impl<K: Kind> fmt::Display for Alt<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, v)) in self.comps.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let basis = k.iter().map(|i| format!("{}{}", K::SYMBOL, i + 1)).collect::<Vec<_>>().join("∧");
            let coeff = v.to_string();
            match (basis.is_empty(), v.len() == 1, coeff.as_str()) {
                (true, _, _) => write!(f, "{coeff}")?,
                (false, _, "1") => f.write_str(&basis)?,
                (false, true, _) => write!(f, "{coeff} {basis}")?,
                (false, false, _) => write!(f, "({coeff}) {basis}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ComponentRepr {
    /// 1-based, strictly increasing.
    index: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct AltRepr {
    vars: usize,
    degree: usize,
    #[serde(default)]
    components: Vec<ComponentRepr>,
}

impl<K: Kind> Serialize for Alt<K> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AltRepr {
            vars: self.n,
            degree: self.degree,
            components: self
                .comps
                .iter()
                .map(|(k, v)| ComponentRepr { index: k.iter().map(|i| i + 1).collect(), coeff: v.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, K: Kind> Deserialize<'de> for Alt<K> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = AltRepr::deserialize(d)?;
        Alt::from_repr(repr).map_err(D::Error::custom)
    }
}

impl<K: Kind> Alt<K> {
    fn from_repr(repr: AltRepr) -> Result<Self> {
        if repr.vars > MAX_VARS || repr.degree > repr.vars {
            return Err(shape(format!("degree {} on {} variables", repr.degree, repr.vars)));
        }
        let mut a = Alt::zero(repr.vars, repr.degree);
        for c in repr.components {
            if c.index.len() != repr.degree {
                return Err(Error::Degree(format!("index {:?} has length {}", c.index, repr.degree)));
            }
            if c.index.iter().any(|&i| i == 0 || i > repr.vars) || !c.index.windows(2).all(|w| w[0] < w[1]) {
                return Err(shape(format!("index {:?} is not strictly increasing in 1..={}", c.index, repr.vars)));
            }
            let p = Poly::parse(repr.vars, &c.coeff)?;
            a.add_term(c.index.iter().map(|i| i - 1).collect(), p);
        }
        Ok(a)
    }
}

/// `α ∧ β`.
pub fn wedge<K: Kind>(a: &Alt<K>, b: &Alt<K>) -> Result<Alt<K>> {
    a.same_space(b)?;
    if a.degree + b.degree > a.n {
        return Err(Error::Degree(format!("wedge of degree {} on {} variables", a.degree + b.degree, a.n)));
    }
    let mut out = Alt::zero(a.n, a.degree + b.degree);
    for (i, p) in &a.comps {
        for (j, q) in &b.comps {
            let idx: Vec<usize> = i.iter().chain(j).copied().collect();
            out.add_term(idx, p.mul(q));
        }
    }
    Ok(out)
}

/// Contraction of a degree-1 element of the dual kind into the first slot.
pub fn contract<K: Kind>(v: &Alt<K::Dual>, w: &Alt<K>) -> Result<Alt<K>> {
    w.same_space(v)?;
    if v.degree != 1 {
        return Err(Error::Degree(format!("contracting element has degree {}", v.degree)));
    }
    if w.degree == 0 {
        return Err(Error::Degree("cannot contract into a degree-0 element".into()));
    }
    let mut out = Alt::zero(w.n, w.degree - 1);
    for (idx, p) in &w.comps {
        for (slot, &i) in idx.iter().enumerate() {
            let vi = v.coeff(&[i]);
            if vi.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx.iter().enumerate().filter(|(s, _)| *s != slot).map(|(_, &x)| x).collect();
            let term = p.mul(&vi);
            out.add_term(rest, if slot % 2 == 0 { term } else { term.neg() });
        }
    }
    Ok(out)
}

/// `i_X ω`.
pub fn interior(x: &Multivector, w: &Form) -> Result<Form> {
    contract(x, w)
}

/// `i_{X1∧…∧Xr} ω = i_{Xr} … i_{X1} ω`.
pub fn interior_multi(xs: &[&Multivector], w: &Form) -> Result<Form> {
    if w.degree < xs.len() {
        return Err(Error::Degree(format!("{} contractions into a {}-form", xs.len(), w.degree)));
    }
    let mut out = w.clone();
    for x in xs {
        out = interior(x, &out)?;
    }
    Ok(out)
}

/// The de Rham differential.
pub fn d(w: &Form) -> Form {
    if w.degree == w.n {
        return Alt::zero(w.n, w.n);
    }
    let mut out = Alt::zero(w.n, w.degree + 1);
    for (idx, p) in &w.comps {
        for j in 0..w.n {
            let dp = p.partial(j);
            if dp.is_zero() {
                continue;
            }
            let mut full = Vec::with_capacity(idx.len() + 1);
            full.push(j);
            full.extend_from_slice(idx);
            out.add_term(full, dp);
        }
    }
    out
}

/// `df` for a function.
pub fn d_function(f: &Poly) -> Form {
    d(&Alt::function(f.clone()))
}

/// `X(f) = Σ X^j ∂_j f`.
pub fn vf_apply(x: &Multivector, f: &Poly) -> Poly {
    debug_assert_eq!(x.degree, 1);
    let mut out = Poly::zero(f.nvars());
    for (idx, c) in &x.comps {
        let df = f.partial(idx[0]);
        if !df.is_zero() {
            out.add_scaled(&int(1), &c.mul(&df));
        }
    }
    out
}

/// `L_X ω = i_X dω + d i_X ω`.
pub fn lie_derivative(x: &Multivector, w: &Form) -> Result<Form> {
    w.same_space(x)?;
    if x.degree != 1 {
        return Err(Error::Degree(format!("Lie derivative along a degree-{} field", x.degree)));
    }
    if w.degree == 0 {
        return Ok(Alt::function(vf_apply(x, &w.as_function())));
    }
    let a = if w.degree < w.n { interior(x, &d(w))? } else { Alt::zero(w.n, w.degree) };
    Ok(a.add(&d(&interior(x, w)?)))
}

/// `[X, Y]^i = X(Y^i) - Y(X^i)`.
pub fn vf_bracket(x: &Multivector, y: &Multivector) -> Result<Multivector> {
    x.same_space(y)?;
    if x.degree != 1 || y.degree != 1 {
        return Err(Error::Degree("vector field bracket needs two degree-1 fields".into()));
    }
    let mut out = Alt::zero(x.n, 1);
    for i in 0..x.n {
        let c = vf_apply(x, &y.coeff(&[i])).sub(&vf_apply(y, &x.coeff(&[i])));
        out.add_term(vec![i], c);
    }
    Ok(out)
}

/// `ξ(X)` for a 1-form and a vector field.
pub fn evaluate(xi: &Form, x: &Multivector) -> Poly {
    let mut out = Poly::zero(xi.n);
    for (idx, p) in &xi.comps {
        let xc = x.coeff(idx);
        if !xc.is_zero() {
            out.add_scaled(&int(1), &p.mul(&xc));
        }
    }
    out
}

fn require_bivector(pi: &Multivector) -> Result<()> {
    if pi.degree != 2 {
        return Err(Error::Degree(format!("expected a bivector, got degree {}", pi.degree)));
    }
    Ok(())
}

/// `π♯ξ = i_ξ π`, so `(π♯ξ)^j = Σ_i ξ_i π^{ij}`.
pub fn sharp(pi: &Multivector, xi: &Form) -> Result<Multivector> {
    require_bivector(pi)?;
    contract(xi, pi)
}

/// `π(ξ, η) = Σ π^{ij} ξ_i η_j`.
pub fn bivector_pair(pi: &Multivector, xi: &Form, eta: &Form) -> Result<Poly> {
    Ok(evaluate(eta, &sharp(pi, xi)?))
}

/// `[π,π]^{ijk} = 2 Σ_l (π^{li} ∂_l π^{jk} + π^{lj} ∂_l π^{ki} + π^{lk} ∂_l π^{ij})`.
pub fn schouten_sq(pi: &Multivector) -> Result<Multivector> {
    require_bivector(pi)?;
    let n = pi.n;
    let mut out = Alt::zero(n, 3.min(n));
    if n < 3 {
        return Ok(out);
    }
    let c = |a: usize, b: usize| pi.coeff(&[a, b]);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut total = Poly::zero(n);
                for l in 0..n {
                    for (p, q, r) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let a = c(l, p);
                        if a.is_zero() {
                            continue;
                        }
                        let b = c(q, r).partial(l);
                        total.add_scaled(&int(2), &a.mul(&b));
                    }
                }
                out.add_term(vec![i, j, k], total);
            }
        }
    }
    Ok(out)
}

/// `(∧³π♯ h)^{ijk} = Σ_{lmn} h_{lmn} π^{li} π^{mj} π^{nk}`.
pub fn triple_sharp(pi: &Multivector, h: &Form) -> Result<Multivector> {
    require_bivector(pi)?;
    pi.same_space(h)?;
    if h.degree != 3 {
        return Err(Error::Degree(format!("expected a 3-form, got degree {}", h.degree)));
    }
    let n = pi.n;
    let mut out = Alt::zero(n, 3);
    if h.is_zero() || pi.is_zero() {
        return Ok(out);
    }
    let c = |a: usize, b: usize| pi.coeff(&[a, b]);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut total = Poly::zero(n);
                for (idx, hv) in &h.comps {
                    // h_{lmn} over all orderings of each stored component
                    for (perm, sign) in PERMS3 {
                        let (l, m, nn) = (idx[perm[0]], idx[perm[1]], idx[perm[2]]);
                        let a = c(l, i);
                        if a.is_zero() {
                            continue;
                        }
                        let b = c(m, j);
                        if b.is_zero() {
                            continue;
                        }
                        let t = a.mul(&b).mul(&c(nn, k)).mul(hv);
                        total.add_scaled(&int(sign), &t);
                    }
                }
                out.add_term(vec![i, j, k], total);
            }
        }
    }
    Ok(out)
}

const PERMS3: [([usize; 3], i64); 6] = [
    ([0, 1, 2], 1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([1, 0, 2], -1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
];

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Poly {
        Poly::parse(n, s).unwrap()
    }

    fn dx(n: usize, idx: &[usize]) -> Form {
        Alt::basis(n, idx)
    }

    fn del(n: usize, i: usize) -> Multivector {
        Alt::basis(n, &[i])
    }

    #[test]
    fn d_examples() {
        assert!(d(&Alt::function(p(2, "3"))).is_zero());
        assert_eq!(d(&Alt::term(2, &[1], p(2, "x"))), dx(2, &[0, 1]));
        assert_eq!(d(&Alt::term(4, &[1, 2, 3], p(4, "x1"))), dx(4, &[0, 1, 2, 3]));
    }

    #[test]
    fn wedge_examples() {
        let a = dx(2, &[0]);
        assert!(wedge(&a, &a).unwrap().is_zero());
        assert_eq!(wedge(&dx(2, &[0]), &dx(2, &[1])).unwrap(), wedge(&dx(2, &[1]), &dx(2, &[0])).unwrap().neg());
        let l: Form = Alt::term(3, &[1], p(3, "x"));
        let r = Alt::term(3, &[2], p(3, "y"));
        assert_eq!(wedge(&l, &r).unwrap(), Alt::term(3, &[1, 2], p(3, "x y")));
        assert!(wedge(&dx(2, &[0]), &dx(3, &[0])).is_err());
    }

    #[test]
    fn interior_examples() {
        assert_eq!(interior(&del(2, 0), &dx(2, &[0])).unwrap(), Alt::function(p(2, "1")));
        assert_eq!(interior(&del(2, 1), &dx(2, &[0, 1])).unwrap(), dx(2, &[0]).neg());
        assert!(interior(&del(3, 0), &Alt::term(3, &[1, 2], p(3, "x"))).unwrap().is_zero());
        assert!(matches!(interior(&del(2, 0), &Alt::function(p(2, "x"))), Err(Error::Degree(_))));
    }

    #[test]
    fn interior_multi_examples() {
        let r = interior_multi(&[&del(2, 0), &del(2, 1)], &dx(2, &[0, 1])).unwrap();
        assert_eq!(r, Alt::function(p(2, "1")));
        let r = interior_multi(&[&del(4, 0), &del(4, 1), &del(4, 2)], &dx(4, &[0, 1, 2, 3])).unwrap();
        assert_eq!(r, dx(4, &[3]));
        let x = Alt::term(3, &[0], p(3, "y")).add(&del(3, 2));
        assert!(interior_multi(&[&x, &x], &Alt::term(3, &[0, 2], p(3, "z"))).unwrap().is_zero());
        assert!(interior_multi(&[&x, &x], &dx(3, &[0])).is_err());
    }

    #[test]
    fn lie_derivative_examples() {
        assert!(lie_derivative(&del(2, 0), &dx(2, &[0])).unwrap().is_zero());
        assert_eq!(lie_derivative(&del(2, 0), &Alt::term(2, &[1], p(2, "x"))).unwrap(), dx(2, &[1]));
        assert_eq!(lie_derivative(&del(3, 0), &Alt::term(3, &[2], p(3, "x"))).unwrap(), dx(3, &[2]));
    }

    #[test]
    fn vf_bracket_examples() {
        assert!(vf_bracket(&del(2, 0), &del(2, 1)).unwrap().is_zero());
        assert_eq!(vf_bracket(&del(2, 0), &Alt::term(2, &[1], p(2, "x"))).unwrap(), del(2, 1));
        assert_eq!(vf_bracket(&Alt::term(2, &[0], p(2, "x")), &del(2, 0)).unwrap(), del(2, 0).neg());
    }

    #[test]
    fn schouten_examples() {
        let c = Alt::basis(3, &[0, 1]).add(&Alt::basis(3, &[1, 2]).scale(&int(5)));
        assert!(schouten_sq(&c).unwrap().is_zero());
        let pi = Alt::basis(3, &[0, 1]).add(&Alt::term(3, &[1, 2], p(3, "x2")));
        assert_eq!(schouten_sq(&pi).unwrap(), Alt::basis(3, &[0, 1, 2]).scale(&int(-2)));
        let pi = Alt::basis(3, &[0, 1]).add(&Alt::term(3, &[1, 2], p(3, "x1")));
        assert!(schouten_sq(&pi).unwrap().is_zero());
    }

    #[test]
    fn sharp_examples() {
        let pi = Alt::basis(3, &[0, 1]);
        assert_eq!(sharp(&pi, &dx(3, &[0])).unwrap(), del(3, 1));
        assert_eq!(sharp(&pi, &dx(3, &[1])).unwrap(), del(3, 0).neg());
        assert!(sharp(&pi, &dx(3, &[2])).unwrap().is_zero());
        assert_eq!(bivector_pair(&pi, &dx(3, &[0]), &Alt::term(3, &[1], p(3, "x"))).unwrap(), p(3, "x"));
    }

    #[test]
    fn triple_sharp_examples() {
        let pi = Alt::basis(3, &[0, 1]);
        assert!(triple_sharp(&pi, &Alt::zero(3, 3)).unwrap().is_zero());
        assert!(triple_sharp(&pi, &Alt::term(3, &[0, 1, 2], p(3, "x y + 3"))).unwrap().is_zero());
        assert!(triple_sharp(&Alt::zero(3, 2), &dx(3, &[0, 1, 2])).unwrap().is_zero());
        // nondegenerate π on R⁴ with h = dx1∧dx2∧dx3
        let pi4 = Alt::basis(4, &[0, 1]).add(&Alt::basis(4, &[2, 3]));
        let t = triple_sharp(&pi4, &dx(4, &[0, 1, 2])).unwrap();
        assert!(!t.is_zero());
    }

    #[test]
    fn display_and_serde_round_trip() {
        let w = Alt::term(4, &[1, 2, 3], p(4, "x1")).add(&Alt::term(4, &[0, 1, 2], p(4, "x2 - 1/2")));
        assert_eq!(w.to_string(), "(x2 - 1/2) dx1∧dx2∧dx3 + x1 dx2∧dx3∧dx4");
        let json = serde_json::to_string(&w).unwrap();
        let back: Form = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
        assert_eq!(del(2, 1).to_string(), "∂2");
    }

    #[test]
    fn bad_components_are_rejected() {
        let bad = r#"{"vars":3,"degree":2,"components":[{"index":[2,1],"coeff":"1"}]}"#;
        assert!(serde_json::from_str::<Form>(bad).is_err());
        let bad = r#"{"vars":3,"degree":2,"components":[{"index":[1,2],"coeff":"x9"}]}"#;
        assert!(serde_json::from_str::<Form>(bad).is_err());
    }
}
