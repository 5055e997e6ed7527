use proptest::prelude::*;
use nogo_core::clebsch::{cg, product_decompose};
use nogo_core::exactnum::{rat, Coefficient, GaussRational, Rational};
use nogo_core::harmonics::{component_by_projection, harmonic_decompose, ylm};
use nogo_core::pbw::{self, sym, sym_rat, NcPoly, Strategy as Order};
use nogo_core::sphere_poly::{canonicalize, Poly3, SpherePoly};
use nogo_core::spinrep::TwoJ;

fn coefficient() -> impl Strategy<Value = Coefficient> {
    (-6i64..=6, 1i64..=4, -3i64..=3, 1i64..=3, prop::sample::select(vec![1u64, 2, 3, 5, 6, 7, 10]), -2i32..=2).prop_map(
        |(a, b, c, d, root, s)| {
            let g = Coefficient::from_gauss(GaussRational::new(rat(a, b), rat(c, d)));
            (&g * &Coefficient::sqrt_int(root)).mul_s_pow(s)
        },
    )
}

fn sphere_poly(max_deg: u32) -> impl Strategy<Value = SpherePoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, 0..=max_deg, -5i64..=5, 1i64..=3), 1..=4).prop_map(move |terms| {
        let mut p = Poly3::zero();
        for (a, b, c, n, d) in terms {
            let b = b.min(max_deg - a);
            let c = c.min(max_deg - a - b);
            p = p.add(&Poly3::monomial([a, b, c], Coefficient::from_rational(rat(n, d))));
        }
        canonicalize(&p)
    })
}

fn nc_poly() -> impl Strategy<Value = NcPoly> {
    let term = (prop::collection::vec(0u8..3, 0..=4), -4i64..=4, 1i64..=3, prop::option::of(0usize..4));
    prop::collection::vec(term, 1..=4).prop_map(|terms| {
        let mut p = NcPoly::zero();
        for (w, n, d, s) in terms {
            let mut c = sym_rat(rat(n, d));
            if let Some(i) = s {
                c = &c * &sym(i);
            }
            p.add_term(w, &c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn coefficient_ring_axioms(x in coefficient(), y in coefficient(), z in coefficient()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&(&(&x + &y) - &y) - &x).is_zero());
    }

    #[test]
    fn square_root_squares_back(n in 1i64..=10_000, d in 1i64..=500) {
        let q = rat(n, d);
        let r = Coefficient::sqrt_rational(&q).unwrap();
        prop_assert_eq!(&r * &r, Coefficient::from_rational(q));
        prop_assert_eq!(r.square_if_rational(), Some(rat(n, d)));
    }

    #[test]
    fn bracket_is_a_poisson_bracket(f in sphere_poly(3), g in sphere_poly(3), h in sphere_poly(2)) {
        prop_assert_eq!(f.poisson(&g), -g.poisson(&f));
        prop_assert_eq!(f.poisson(&(&g * &h)), &(&f.poisson(&g) * &h) + &(&g * &f.poisson(&h)));
        let jacobi = &(&f.poisson(&g.poisson(&h)) + &g.poisson(&h.poisson(&f))) + &h.poisson(&f.poisson(&g));
        prop_assert!(jacobi.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decomposition_matches_projection(p in sphere_poly(4)) {
        let dec = harmonic_decompose(&p);
        prop_assert_eq!(dec.reconstruct(), p.clone());
        for l in 0..=4 {
            prop_assert_eq!(dec.component(l), component_by_projection(&p, l));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduction_is_order_independent(p in nc_poly(), seed in any::<u64>()) {
        let left = pbw::reduce(&p);
        prop_assert_eq!(&left, &pbw::reduce_with_strategy(&p, &mut Order::Rightmost));
        prop_assert_eq!(&left, &pbw::reduce_with_strategy(&p, &mut Order::random(seed)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn reduction_commutes_with_evaluation(p in nc_poly(), two_j in 1u32..=4) {
        let r = pbw::reduce(&p);
        prop_assert!(r.is_casimir_reduced());
        prop_assert_eq!(pbw::eval_at(&r, TwoJ(two_j)), pbw::eval_nc(&p, TwoJ(two_j)));
    }
}

#[test]
fn clebsch_gordan_orthogonality() {
    for l1 in 0..=4u32 {
        for l2 in 0..=4u32 {
            let range = l1.abs_diff(l2)..=l1 + l2;
            for big_l in range.clone() {
                for big_l2 in range.clone() {
                    let m_max = big_l.min(big_l2) as i64;
                    for big_m in -m_max..=m_max {
                        let mut sum = Coefficient::zero();
                        for m1 in -(l1 as i64)..=l1 as i64 {
                            let m2 = big_m - m1;
                            if m2.unsigned_abs() > l2 as u64 {
                                continue;
                            }
                            let x = cg(l1, l2, m1, m2, big_l, big_m).unwrap();
                            let y = cg(l1, l2, m1, m2, big_l2, big_m).unwrap();
                            sum = &sum + &(&x.value * &y.value);
                        }
                        let want = if big_l == big_l2 { Coefficient::one() } else { Coefficient::zero() };
                        assert_eq!(sum, want, "({l1},{l2}) L={big_l},{big_l2} M={big_m}");
                    }
                }
            }
        }
    }
}

#[test]
fn harmonic_products_follow_clebsch_gordan() {
    for l1 in 0..=4u32 {
        for l2 in 0..=l1 {
            for m1 in -(l1 as i64)..=l1 as i64 {
                for m2 in -(l2 as i64)..=l2 as i64 {
                    let prod = &ylm(l1, m1 as i32).unwrap().poly * &ylm(l2, m2 as i32).unwrap().poly;
                    let expect = product_decompose(l1, m1, l2, m2).unwrap();
                    let dec = harmonic_decompose(&prod);
                    for big_l in 0..=l1 + l2 {
                        let want = match expect.get(&big_l) {
                            Some(c) => ylm(big_l, (m1 + m2) as i32).unwrap().poly.scale(c),
                            None => SpherePoly::zero(),
                        };
                        assert_eq!(dec.component(big_l), want, "Y({l1},{m1}) Y({l2},{m2}) at L={big_l}");
                    }
                }
            }
        }
    }
}

#[test]
fn rational_square_roots_of_non_squares_are_irrational() {
    for n in [2i64, 3, 8, 12, 50] {
        let r = Coefficient::sqrt_rational(&Rational::from_integer(n.into())).unwrap();
        assert!(r.as_rational().is_none(), "sqrt({n})");
    }
}
