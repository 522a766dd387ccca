//! Leibniz cochains `C^k(g, V) = Hom(g^{⊗k}, V)` and the coboundary
//!
//! ```text
//! ∂c(g_1..g_{k+1}) = Σ_{i=1..k} (-1)^{i+1} l_{g_i} c(g_1..ĝ_i..g_{k+1})
//!                  + (-1)^{k+1} r_{g_{k+1}} c(g_1..g_k)
//!                  + Σ_{i<j} (-1)^i c(g_1..ĝ_i..g_{j-1}, [g_i,g_j], g_{j+1}..g_{k+1})
//! ```

use serde::{Deserialize, Serialize};

use crate::algebra::{Coords, Element, FinSpace, StructureTensor};
use crate::check::run_check;
use crate::crossed_module::LeibnizRep;
use crate::error::{shape, Result};
use crate::report::VerifyReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "degree-kind", rename_all = "kebab-case")]
pub enum Cochain {
    /// A 0-cochain is a single module vector.
    Degree0 { vector: Coords },
    /// A k-cochain for k >= 1.
    Tensor(StructureTensor),
}

impl Cochain {
    pub fn degree(&self) -> usize {
        match self {
            Cochain::Degree0 { .. } => 0,
            Cochain::Tensor(t) => t.arity(),
        }
    }

    pub fn zero(rep: &LeibnizRep, degree: usize) -> Cochain {
        if degree == 0 {
            Cochain::Degree0 { vector: Coords::zeros(rep.module.dim) }
        } else {
            Cochain::Tensor(StructureTensor::zeros(
                vec![rep.algebra.space.clone(); degree],
                rep.module.clone(),
            ))
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Cochain::Degree0 { vector } => vector.is_zero(),
            Cochain::Tensor(t) => t.is_zero(),
        }
    }

    /// Value on arbitrary arguments (the empty list for degree 0).
    pub fn eval(&self, args: &[&Coords]) -> Coords {
        match self {
            Cochain::Degree0 { vector } => vector.clone(),
            Cochain::Tensor(t) => t.eval(args),
        }
    }

    fn validate(&self, rep: &LeibnizRep) -> Result<()> {
        rep.validate()?;
        match self {
            Cochain::Degree0 { vector } if vector.dim() != rep.module.dim => {
                Err(shape("0-cochain length differs from the module dimension"))
            }
            Cochain::Tensor(t)
                if t.sources.iter().any(|s| !s.same_shape(&rep.algebra.space))
                    || !t.target.same_shape(&rep.module) =>
            {
                Err(shape("cochain is not a map from tensor powers of g to V"))
            }
            _ => Ok(()),
        }
    }
}

fn sign(exp: usize) -> i64 {
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `∂c` evaluated on a tuple of elements `g[0..=k]`.
pub fn coboundary_at(rep: &LeibnizRep, c: &Cochain, g: &[&Coords]) -> Coords {
    let k = c.degree();
    debug_assert_eq!(g.len(), k + 1);
    let mut out = Coords::zeros(rep.module.dim);
    // i is 1-based in the formula; slot i-1 here.
    for i in 1..=k {
        let rest: Vec<&Coords> = g.iter().enumerate().filter(|(s, _)| *s != i - 1).map(|(_, v)| *v).collect();
        let v = c.eval(&rest);
        if !v.is_zero() {
            out.add_scaled(&crate::algebra::int(sign(i + 1)), &rep.l(g[i - 1], &v));
        }
    }
    let v = c.eval(&g[..k]);
    if !v.is_zero() {
        out.add_scaled(&crate::algebra::int(sign(k + 1)), &rep.r(g[k], &v));
    }
    for j in 2..=k + 1 {
        for i in 1..j {
            let b = rep.algebra.bracket(g[i - 1], g[j - 1]);
            if b.is_zero() {
                continue;
            }
            // delete slot i, put [g_i, g_j] where g_j was
            let args: Vec<&Coords> = (1..=k + 1)
                .filter(|&s| s != i)
                .map(|s| if s == j { &b } else { g[s - 1] })
                .collect();
            out.add_scaled(&crate::algebra::int(sign(i)), &c.eval(&args));
        }
    }
    out
}

pub fn coboundary(rep: &LeibnizRep, c: &Cochain) -> Result<Cochain> {
    c.validate(rep)?;
    let k = c.degree();
    let g = rep.algebra.space.clone();
    let t = StructureTensor::from_fn(vec![g.clone(); k + 1], rep.module.clone(), |multi| {
        let basis: Vec<Coords> = multi.iter().map(|&i| Coords::basis(g.dim, i)).collect();
        let refs: Vec<&Coords> = basis.iter().collect();
        Ok(coboundary_at(rep, c, &refs))
    })?;
    Ok(Cochain::Tensor(t))
}

/// Whether `∂c = 0`, with a report whose witnesses are the basis tuples on
/// which `∂c` is nonzero.
pub fn is_cocycle(rep: &LeibnizRep, c: &Cochain) -> Result<(bool, VerifyReport)> {
    let Cochain::Tensor(dc) = coboundary(rep, c)? else {
        unreachable!("coboundary always has positive degree")
    };
    let labels: Vec<String> = (1..=rep.algebra.dim()).map(|i| format!("e{i}")).collect();
    let slots: Vec<&[String]> = vec![&labels; dc.arity()];
    let record = run_check("cocycle", "∂c = 0", &dc.dims(), &slots, |t| dc.get(t));
    let mut report = VerifyReport::new();
    report.push(record);
    Ok((report.passed(), report))
}

/// Coordinate space of degree-`k` cochains, for building random cochains.
pub fn cochain_space_dim(rep: &LeibnizRep, degree: usize) -> usize {
    rep.algebra.dim().pow(degree as u32) * rep.module.dim
}

/// The cochain whose flattened coefficients are `coeffs`.
pub fn cochain_from_coeffs(rep: &LeibnizRep, degree: usize, coeffs: Coords) -> Result<Cochain> {
    if coeffs.dim() != cochain_space_dim(rep, degree) {
        return Err(shape("wrong number of cochain coefficients"));
    }
    if degree == 0 {
        return Ok(Cochain::Degree0 { vector: coeffs });
    }
    let sources: Vec<FinSpace> = vec![rep.algebra.space.clone(); degree];
    Ok(Cochain::Tensor(StructureTensor::new(sources, rep.module.clone(), coeffs.0)?))
}
