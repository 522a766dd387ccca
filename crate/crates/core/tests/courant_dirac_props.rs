use leibniz2::algebra::Element;
use leibniz2::check::Family;
use leibniz2::courant::{b_transform, check_b_intertwine, check_tca_axioms, dorfman, ExactTca, GeneralizedSection};
use leibniz2::dirac::{check_anchor_morphism, l3_twisted, pi_bracket, TwistedPoisson};
use leibniz2::exterior::{d, interior, lie_derivative, Alt, Form, Multivector};
use leibniz2::generate::Generator;
use proptest::prelude::*;

fn tca(gen: &mut Generator, n: usize) -> ExactTca {
    ExactTca::new(gen.alt(n, 3)).unwrap()
}

/// `π = ∂1∧∂2 + ∂3∧∂4 + x3 ∂1∧∂3` twisted by `h = dx2∧dx3∧dx4`.
fn twisted_r4() -> TwistedPoisson {
    let x3 = leibniz2::exterior::Poly::var(4, 2);
    let pi: Multivector = Alt::basis(4, &[0, 1]).add(&Alt::basis(4, &[2, 3])).add(&Alt::term(4, &[0, 2], x3));
    TwistedPoisson::new(pi, Alt::basis(4, &[1, 2, 3])).unwrap()
}

/// `π = ∂1∧∂2` on `R^4` with a random, usually non-closed, `h`.
fn planar(gen: &mut Generator) -> TwistedPoisson {
    TwistedPoisson::new(Alt::basis(4, &[0, 1]), gen.alt(4, 3)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tca_axioms_hold_on_random_sections(seed in any::<u64>()) {
        let mut gen = Generator::new(seed);
        let n = 3 + (seed % 2) as usize;
        let t = tca(&mut gen, n);
        let fam = Family::numbered((0..3).map(|_| gen.section(n)).collect(), "e");
        let r = check_tca_axioms(&t, &fam).unwrap();
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn brackets_with_pure_forms(seed in any::<u64>()) {
        let mut gen = Generator::new(seed);
        let n = 3 + (seed % 2) as usize;
        let t = tca(&mut gen, n);
        let e = gen.section(n);
        let xi: Form = gen.alt(n, 1);
        let c = GeneralizedSection::covector(xi.clone());
        let left = dorfman(&t, &c, &e).unwrap();
        prop_assert_eq!(left, GeneralizedSection::covector(interior(&e.vf, &d(&xi)).unwrap().neg()));
        let right = dorfman(&t, &e, &c).unwrap();
        prop_assert_eq!(right, GeneralizedSection::covector(lie_derivative(&e.vf, &xi).unwrap()));
    }

    #[test]
    fn b_transform_is_invertible(seed in any::<u64>()) {
        let mut gen = Generator::new(seed);
        let b: Form = gen.alt(3, 2);
        let e = gen.section(3);
        let there = b_transform(&b, &e).unwrap();
        prop_assert_eq!(b_transform(&b.neg(), &there).unwrap(), e);
    }

    #[test]
    fn b_field_intertwines_random_data(seed in any::<u64>()) {
        let mut gen = Generator::new(seed);
        let t = tca(&mut gen, 3);
        let b: Form = gen.alt(3, 2);
        let fam = Family::numbered((0..3).map(|_| gen.section(3)).collect(), "e");
        prop_assert!(check_b_intertwine(&b, &t, &fam).unwrap().passed());
    }

    #[test]
    fn pi_bracket_and_l3_are_skew(seed in any::<u64>()) {
        let mut gen = Generator::new(seed);
        for p in [twisted_r4(), planar(&mut gen)] {
            let (a, b, c): (Form, Form, Form) = (gen.alt(4, 1), gen.alt(4, 1), gen.alt(4, 1));
            prop_assert!(pi_bracket(&p, &a, &b).unwrap().add(&pi_bracket(&p, &b, &a).unwrap()).is_zero());
            let l = l3_twisted(&p, &a, &b, &c).unwrap();
            prop_assert!(l.add(&l3_twisted(&p, &b, &a, &c).unwrap()).is_zero());
            prop_assert!(l.add(&l3_twisted(&p, &a, &c, &b).unwrap()).is_zero());
        }
    }

    #[test]
    fn jacobi_anomaly_is_l3(seed in any::<u64>()) {
        let mut gen = Generator::new(seed);
        for p in [twisted_r4(), planar(&mut gen)] {
            let (a, b, c): (Form, Form, Form) = (gen.alt(4, 1), gen.alt(4, 1), gen.alt(4, 1));
            let br = |x: &Form, y: &Form| pi_bracket(&p, x, y).unwrap();
            let anomaly = br(&a, &br(&b, &c)).sub(&br(&br(&a, &b), &c)).sub(&br(&b, &br(&a, &c)));
            prop_assert_eq!(anomaly, l3_twisted(&p, &a, &b, &c).unwrap());
        }
    }

    #[test]
    fn anchor_is_a_morphism(seed in any::<u64>()) {
        let mut gen = Generator::new(seed);
        for p in [twisted_r4(), planar(&mut gen)] {
            let fam = Family::numbered((0..3).map(|_| gen.alt(4, 1)).collect(), "ξ");
            prop_assert!(check_anchor_morphism(&p, &fam).unwrap().passed());
        }
    }
}
