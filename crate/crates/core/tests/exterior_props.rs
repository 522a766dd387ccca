use leibniz2::algebra::Element;
use leibniz2::exterior::{
    d, interior, lie_derivative, vf_apply, vf_bracket, wedge, Alt, Form, FormKind, Multivector, Poly, VectorKind,
};
use leibniz2::generate::Generator;
use proptest::prelude::*;

/// `(L_X ω)_I = X(ω_I) + Σ_s Σ_j ∂_{i_s} X^j ω_{I with i_s -> j}`, the
/// coordinate formula, independent of Cartan's formula.
fn lie_oracle(x: &Multivector, w: &Form) -> Form {
    let (n, k) = (w.nvars(), w.degree());
    let mut out = Alt::zero(n, k);
    for idx in increasing(n, k) {
        let mut c = vf_apply(x, &w.coeff(&idx));
        for s in 0..k {
            for j in 0..n {
                let dxj = x.coeff(&[j]).partial(idx[s]);
                if dxj.is_zero() {
                    continue;
                }
                let mut swapped = idx.clone();
                swapped[s] = j;
                c = c.add(&dxj.mul(&w.coeff(&swapped)));
            }
        }
        out.add_term(idx, c);
    }
    out
}

fn increasing(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in increasing(n, k - 1) {
        let start = rest.last().map_or(0, |&l| l + 1);
        for i in start..n {
            let mut v = rest.clone();
            v.push(i);
            out.push(v);
        }
    }
    out
}

fn setup(seed: u64) -> (Generator, usize) {
    (Generator::new(seed), 2 + (seed % 3) as usize)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn d_squared_vanishes(seed in any::<u64>(), k in 0usize..3) {
        let (mut gen, n) = setup(seed);
        let w: Form = gen.alt(n, k.min(n));
        if w.degree() + 2 <= n {
            prop_assert!(d(&d(&w)).is_zero());
        }
    }

    #[test]
    fn cartan_matches_coordinate_formula(seed in any::<u64>(), k in 0usize..4) {
        let (mut gen, n) = setup(seed);
        let x: Multivector = gen.alt(n, 1);
        let w: Form = gen.alt(n, k.min(n));
        prop_assert_eq!(lie_derivative(&x, &w).unwrap(), lie_oracle(&x, &w));
    }

    #[test]
    fn interior_of_bracket(seed in any::<u64>(), k in 1usize..4) {
        let (mut gen, n) = setup(seed);
        let (x, y): (Multivector, Multivector) = (gen.alt(n, 1), gen.alt(n, 1));
        let w: Form = gen.alt(n, k.min(n));
        let lhs = interior(&vf_bracket(&x, &y).unwrap(), &w).unwrap();
        let rhs = lie_derivative(&x, &interior(&y, &w).unwrap())
            .unwrap()
            .sub(&interior(&y, &lie_derivative(&x, &w).unwrap()).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_is_a_graded_derivation(seed in any::<u64>()) {
        let (mut gen, n) = setup(seed);
        let a: Form = gen.alt(n, 1);
        let b: Form = gen.alt(n, 1);
        if n >= 3 {
            let lhs = d(&wedge(&a, &b).unwrap());
            let rhs = wedge(&d(&a), &b).unwrap().sub(&wedge(&a, &d(&b)).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn wedge_of_one_forms_is_skew(seed in any::<u64>()) {
        let (mut gen, n) = setup(seed);
        let a: Form = gen.alt(n, 1);
        let b: Form = gen.alt(n, 1);
        prop_assert_eq!(wedge(&a, &b).unwrap(), wedge(&b, &a).unwrap().neg());
    }

    #[test]
    fn vector_field_jacobi(seed in any::<u64>()) {
        let (mut gen, n) = setup(seed);
        let (x, y, z): (Multivector, Multivector, Multivector) = (gen.alt(n, 1), gen.alt(n, 1), gen.alt(n, 1));
        let br = |a: &Multivector, b: &Multivector| vf_bracket(a, b).unwrap();
        let sum = br(&x, &br(&y, &z)).add(&br(&y, &br(&z, &x))).add(&br(&z, &br(&x, &y)));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn relabelling_commutes_with_d(seed in any::<u64>(), k in 0usize..3) {
        let (mut gen, n) = setup(seed);
        let w: Form = gen.alt(n, k.min(n - 1));
        let perm: Vec<usize> = (0..n).rev().collect();
        prop_assert_eq!(d(&w.permute(&perm)), d(&w).permute(&perm));
    }

    #[test]
    fn polynomial_text_round_trip(seed in any::<u64>()) {
        let (mut gen, n) = setup(seed);
        let p = gen.poly(n).mul(&gen.poly(n));
        prop_assert_eq!(Poly::parse(n, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn alt_serde_round_trip(seed in any::<u64>(), k in 0usize..3) {
        let (mut gen, n) = setup(seed);
        let w: Alt<FormKind> = gen.alt(n, k.min(n));
        let v: Alt<VectorKind> = gen.alt(n, k.min(n));
        let wj = serde_json::to_string(&w).unwrap();
        let vj = serde_json::to_string(&v).unwrap();
        prop_assert_eq!(serde_json::from_str::<Alt<FormKind>>(&wj).unwrap(), w);
        prop_assert_eq!(serde_json::from_str::<Alt<VectorKind>>(&vj).unwrap(), v);
    }
}
