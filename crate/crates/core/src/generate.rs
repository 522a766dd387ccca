//! Seeded generators of valid finite-dimensional instances (dimensions at
//! most 3), for property suites and the `--seed` option of the CLI.
//!
//! Instances are assembled from catalog building blocks whose validity is
//! structural, with free parameters obtained by solving the linear part of
//! the constraints exactly, and then moved by a random change of basis.
//! Nothing is sampled blindly and filtered.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{int, Element, Coords, FinSpace, LinearMap, LinearSystem, Rational, StructureTensor};
use crate::courant::GeneralizedSection;
use crate::exterior::{Alt, Kind, Poly};
use crate::cohomology::{cochain_from_coeffs, cochain_space_dim, Cochain};
use crate::crossed_module::{catalog, CrossedModule, LeibnizAlgebra, LeibnizRep};
use crate::error::{shape, Result};

pub struct Generator {
    rng: ChaCha8Rng,
}

/// All catalog algebras of dimension at most 3.
pub fn small_algebras() -> Vec<(&'static str, LeibnizAlgebra)> {
    let g = |n| FinSpace::new(n, "g");
    let from = |n, b: &[(usize, usize, &[i64])]| LeibnizAlgebra::from_brackets(g(n), b).expect("static shape");
    vec![
        ("abelian-1", LeibnizAlgebra::abelian(g(1))),
        ("abelian-2", LeibnizAlgebra::abelian(g(2))),
        ("abelian-3", LeibnizAlgebra::abelian(g(3))),
        ("e2", catalog::e2()),
        ("e3", catalog::e3()),
        ("heisenberg", catalog::heisenberg()),
        ("sl2", catalog::sl2()),
        ("e2+1", from(3, &[(0, 0, &[0, 1, 0])])),
        ("e3+1", from(3, &[(0, 1, &[0, 1, 0]), (1, 0, &[0, -1, 0])])),
        ("square-sum", from(3, &[(0, 0, &[0, 0, 1]), (1, 1, &[0, 0, 1])])),
    ]
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A small integer in `-bound..=bound`.
    pub fn small(&mut self, bound: i64) -> Rational {
        int(self.rng.gen_range(-bound..=bound))
    }

    pub fn vector(&mut self, dim: usize, bound: i64) -> Coords {
        Coords((0..dim).map(|_| self.small(bound)).collect())
    }

    /// A random invertible matrix `L U` (unit lower times upper with unit
    /// diagonal up to sign) and its inverse.
    pub fn invertible(&mut self, space: &FinSpace) -> (LinearMap, LinearMap) {
        let n = space.dim;
        let mut lower = LinearMap::identity(space.clone());
        let mut upper = LinearMap::identity(space.clone());
        for i in 0..n {
            for j in 0..n {
                if i > j {
                    lower.set(i, j, self.small(2));
                } else if i < j {
                    upper.set(i, j, self.small(2));
                } else if self.rng.gen_bool(0.5) {
                    upper.set(i, j, int(-1));
                }
            }
        }
        let p = lower.compose(&upper).expect("square factors");
        let inv = p.inverse().expect("triangular factors are invertible");
        (p, inv)
    }

    fn pick_algebra(&mut self) -> LeibnizAlgebra {
        let all = small_algebras();
        all.choose(&mut self.rng).expect("nonempty catalog").1.clone()
    }

    /// A catalog algebra in a random basis.
    pub fn algebra(&mut self) -> LeibnizAlgebra {
        let a = self.pick_algebra();
        let (p, inv) = self.invertible(&a.space);
        transform_algebra(&a, &p, &inv)
    }

    /// A representation of `g` on a module of dimension at most 3.
    pub fn representation(&mut self, g: &LeibnizAlgebra) -> LeibnizRep {
        match self.rng.gen_range(0..5) {
            0 => g.adjoint(),
            1 => {
                let mut rep = g.adjoint();
                rep.right = StructureTensor::zeros(rep.right.sources.clone(), rep.module.clone());
                rep
            }
            2 => {
                let mut rep = g.adjoint();
                rep.right = rep.right_from_left_negated();
                rep
            }
            3 => {
                let k = self.rng.gen_range(1..=3);
                g.trivial_rep(FinSpace::new(k, "V"))
            }
            _ => {
                let k = self.rng.gen_range(2..=3);
                self.square_zero_rep(g, FinSpace::new(k, "V"))
            }
        }
    }

    /// `l = 0`, `r_x = λ(x) N` with `N² = 0` and `λ` vanishing on `[g,g]`.
    /// The representation identities reduce to these two conditions; the
    /// second is linear in `λ` and solved exactly.
    fn square_zero_rep(&mut self, g: &LeibnizAlgebra, module: FinSpace) -> LeibnizRep {
        let n = g.dim();
        let mut sys = LinearSystem::new(n);
        for i in 0..n {
            for j in 0..n {
                let b = g.bracket(&Coords::basis(n, i), &Coords::basis(n, j));
                sys.add_equation(b.0.iter().cloned().enumerate(), Rational::zero());
            }
        }
        let sol = sys.solve().expect("homogeneous system");
        let mut lambda = Coords::zeros(n);
        for k in &sol.kernel {
            lambda.add_scaled(&self.small(2), k);
        }
        // N = u w^T with w.u = 0.
        let dim = module.dim;
        let u = self.vector(dim, 2);
        let mut w = self.vector(dim, 2);
        let uu: Rational = u.0.iter().map(|x| x * x).sum();
        if !uu.is_zero() {
            let wu: Rational = w.0.iter().zip(&u.0).map(|(a, b)| a * b).sum();
            w.add_scaled(&-(wu / uu), &u);
        }
        let mut rep = g.trivial_rep(module.clone());
        rep.right = StructureTensor::from_fn(vec![module.clone(), g.space.clone()], module, |t| {
            let (v, x) = (t[0], t[1]);
            Ok(Coords(u.0.iter().map(|ui| &lambda.0[x] * ui * &w.0[v]).collect()))
        })
        .expect("static shape");
        rep
    }

    /// A crossed module with `dim g, dim h <= 3`, in random bases.
    pub fn crossed_module(&mut self) -> CrossedModule {
        let h = self.pick_algebra();
        let base = match self.rng.gen_range(0..3) {
            0 => identity_crossed(&h),
            1 => {
                let ideal = derived_ideal_coordinates(&h);
                ideal_inclusion(&h, &ideal).expect("derived ideal is a coordinate ideal")
            }
            _ => {
                let rep = self.representation(&h);
                central_extension_free(&rep)
            }
        };
        let (p, p_inv) = self.invertible(&base.g.space);
        let (q, q_inv) = self.invertible(&base.h.space);
        transform_crossed(&base, (&p, &p_inv), (&q, &q_inv))
    }

    /// A random cochain of the given degree with small integer coefficients.
    pub fn cochain(&mut self, rep: &LeibnizRep, degree: usize) -> Result<Cochain> {
        let dim = cochain_space_dim(rep, degree);
        let coeffs = self.vector(dim, 3);
        cochain_from_coeffs(rep, degree, coeffs)
    }

    /// A polynomial on `R^n` of degree at most 2 with few terms.
    pub fn poly(&mut self, n: usize) -> Poly {
        let mut p = Poly::constant(n, self.small(2));
        for i in 0..n {
            if self.rng.gen_bool(0.4) {
                p.add_scaled(&self.small(2), &Poly::var(n, i));
            }
        }
        if n > 0 && self.rng.gen_bool(0.5) {
            let (i, j) = (self.rng.gen_range(0..n), self.rng.gen_range(0..n));
            p.add_scaled(&self.small(2), &Poly::var(n, i).mul(&Poly::var(n, j)));
        }
        p
    }

    /// A `k`-form (or `k`-vector) on `R^n` with up to three nonzero
    /// components.
    pub fn alt<K: Kind>(&mut self, n: usize, k: usize) -> Alt<K> {
        let mut a = Alt::zero(n, k);
        for _ in 0..3 {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.shuffle(&mut self.rng);
            idx.truncate(k);
            idx.sort_unstable();
            let f = self.poly(n);
            a = a.add(&Alt::term(n, &idx, f));
        }
        a
    }

    pub fn section(&mut self, n: usize) -> GeneralizedSection {
        GeneralizedSection { vf: self.alt(n, 1), form: self.alt(n, 1) }
    }

    pub fn pair(&mut self) -> LeibnizRep {
        let g = self.algebra();
        self.representation(&g)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

impl LeibnizRep {
    /// The right action `r_x = -l_x`.
    fn right_from_left_negated(&self) -> StructureTensor {
        let (g, m) = (&self.algebra.space, &self.module);
        StructureTensor::from_fn(vec![m.clone(), g.clone()], m.clone(), |t| {
            let x = Coords::basis(g.dim, t[1]);
            let u = Coords::basis(m.dim, t[0]);
            Ok(self.l(&x, &u).scale(&int(-1)))
        })
        .expect("static shape")
    }
}

/// `h --id--> h` with the adjoint action.
pub fn identity_crossed(h: &LeibnizAlgebra) -> CrossedModule {
    CrossedModule { g: h.clone(), h: h.clone(), mu: LinearMap::identity(h.space.clone()), action: h.adjoint() }
}

/// `V --0--> h` with `V` abelian and any representation of `h` on it.
pub fn central_extension_free(rep: &LeibnizRep) -> CrossedModule {
    let g = LeibnizAlgebra::abelian(FinSpace::new(rep.module.dim, "g"));
    let mut action = rep.clone();
    action.module = g.space.clone();
    action.left.sources[1] = g.space.clone();
    action.left.target = g.space.clone();
    action.right.sources[0] = g.space.clone();
    action.right.target = g.space.clone();
    CrossedModule { mu: LinearMap::zero(g.space.clone(), rep.algebra.space.clone()), g, h: rep.algebra.clone(), action }
}

/// Coordinates spanning `[h,h]`, when that ideal is a coordinate subspace.
fn derived_ideal_coordinates(h: &LeibnizAlgebra) -> Vec<usize> {
    let n = h.dim();
    (0..n)
        .filter(|&k| {
            (0..n).any(|i| (0..n).any(|j| !h.bracket.entry(&[i, j], k).is_zero()))
        })
        .collect()
}

/// `I --incl--> h` for an ideal spanned by the basis vectors `indices`, with
/// the restricted adjoint action.
pub fn ideal_inclusion(h: &LeibnizAlgebra, indices: &[usize]) -> Result<CrossedModule> {
    let n = h.dim();
    let k = indices.len();
    let space = FinSpace::new(k, "g");
    let restrict = |v: &Coords| -> Result<Coords> {
        for (i, x) in v.0.iter().enumerate() {
            if !indices.contains(&i) && !x.is_zero() {
                return Err(shape("bracket leaves the proposed ideal"));
            }
        }
        Ok(Coords(indices.iter().map(|&i| v.0[i].clone()).collect()))
    };
    let embed = |a: usize| Coords::basis(n, indices[a]);
    let bracket = StructureTensor::from_fn(vec![space.clone(), space.clone()], space.clone(), |t| {
        restrict(&h.bracket(&embed(t[0]), &embed(t[1])))
    })?;
    let left = StructureTensor::from_fn(vec![h.space.clone(), space.clone()], space.clone(), |t| {
        restrict(&h.bracket(&Coords::basis(n, t[0]), &embed(t[1])))
    })?;
    let right = StructureTensor::from_fn(vec![space.clone(), h.space.clone()], space.clone(), |t| {
        restrict(&h.bracket(&embed(t[0]), &Coords::basis(n, t[1])))
    })?;
    let columns: Vec<Coords> = (0..k).map(embed).collect();
    let mu = LinearMap::from_columns(space.clone(), h.space.clone(), &columns)?;
    let g = LeibnizAlgebra { space: space.clone(), bracket };
    let action = LeibnizRep { algebra: h.clone(), module: space, left, right };
    Ok(CrossedModule { g, h: h.clone(), mu, action })
}

/// The same algebra in the basis given by the columns of `p`.
pub fn transform_algebra(a: &LeibnizAlgebra, p: &LinearMap, p_inv: &LinearMap) -> LeibnizAlgebra {
    let s = a.space.clone();
    let bracket = StructureTensor::from_fn(vec![s.clone(), s.clone()], s.clone(), |t| {
        Ok(p_inv.eval(&a.bracket(&p.column(t[0]), &p.column(t[1]))))
    })
    .expect("same shape");
    LeibnizAlgebra { space: s, bracket }
}

/// Transports a crossed module along `P: g' -> g` and `Q: h' -> h`.
pub fn transform_crossed(
    c: &CrossedModule,
    (p, p_inv): (&LinearMap, &LinearMap),
    (q, q_inv): (&LinearMap, &LinearMap),
) -> CrossedModule {
    let g = transform_algebra(&c.g, p, p_inv);
    let h = transform_algebra(&c.h, q, q_inv);
    let mu = q_inv.compose(&c.mu).and_then(|m| m.compose(p)).expect("compatible shapes");
    let (gs, hs) = (g.space.clone(), h.space.clone());
    let left = StructureTensor::from_fn(vec![hs.clone(), gs.clone()], gs.clone(), |t| {
        Ok(p_inv.eval(&c.action.l(&q.column(t[0]), &p.column(t[1]))))
    })
    .expect("same shape");
    let right = StructureTensor::from_fn(vec![gs.clone(), hs.clone()], gs.clone(), |t| {
        Ok(p_inv.eval(&c.action.r(&q.column(t[1]), &p.column(t[0]))))
    })
    .expect("same shape");
    let action = LeibnizRep { algebra: h.clone(), module: gs, left, right };
    CrossedModule { g, h, mu, action }
}
