use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rowing_spectra::exactnum::{
    int, isolate_real_roots, quad_sign, rat, refine, sturm_count, BiPoly, QuadExt, Rational, Sign,
    UPoly,
};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-9i64..=9, 2..=7)
        .prop_filter("non-constant", |c| c[1..].iter().any(|&x| x != 0))
        .prop_map(|c| UPoly::from_ints(&c))
}

fn ordered_triple() -> impl Strategy<Value = (Rational, Rational, Rational)> {
    (small_rat(), small_rat(), small_rat()).prop_filter_map("distinct", |(a, b, c)| {
        let mut v = [a, b, c];
        v.sort();
        (v[0] < v[1] && v[1] < v[2]).then(|| (v[0].clone(), v[1].clone(), v[2].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sturm_count_is_additive(p in poly(), (lo, mid, hi) in ordered_triple()) {
        let whole = sturm_count(&p, &lo, &hi).unwrap();
        let left = sturm_count(&p, &lo, &mid).unwrap();
        let right = sturm_count(&p, &mid, &hi).unwrap();
        prop_assert_eq!(whole, left + right);
    }

    #[test]
    fn isolation_counts_every_root(p in poly()) {
        let roots = isolate_real_roots(&p).unwrap();
        let b = p.cauchy_bound().unwrap() + int(1);
        prop_assert_eq!(roots.len(), sturm_count(&p, &-b.clone(), &b).unwrap());
        for w in roots.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn refinement_stays_inside(p in poly(), k in 1u32..30) {
        let tol = rat(1, 1 << k.min(30));
        for r in isolate_real_roots(&p).unwrap() {
            let (lo, hi) = {
                let (a, b) = r.interval();
                (a.clone(), b.clone())
            };
            let (l2, h2) = refine(&r, &tol);
            prop_assert!(lo <= l2 && h2 <= hi);
            prop_assert!(&h2 - &l2 <= tol);
            let sf = p.square_free();
            if l2 == h2 {
                prop_assert!(p.eval(&l2).is_zero());
            } else {
                prop_assert_eq!(sturm_count(&sf, &l2, &h2).unwrap(), 1);
            }
        }
    }

    #[test]
    fn quad_sign_matches_float_when_clear(a in -50i64..50, b in -50i64..50, d in 2i64..60) {
        // perfect-square radicands are rejected by the constructor
        let q = QuadExt::new(int(a), int(b), int(d));
        prop_assume!(q.is_ok());
        let q = q.unwrap();
        let f = a as f64 + b as f64 * (d as f64).sqrt();
        let s = quad_sign(&q);
        if f > 1e-9 {
            prop_assert_eq!(s, Sign::Positive);
        } else if f < -1e-9 {
            prop_assert_eq!(s, Sign::Negative);
        }
    }

    #[test]
    fn reciprocal_substitution_agrees_pointwise(
        terms in prop::collection::vec((0u32..4, 0u32..4, -6i64..=6), 1..8),
        t in small_rat().prop_filter("nonzero", |t| !t.is_zero()),
    ) {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            p = &p + &BiPoly::term(int(c), i, j);
        }
        let (r, k) = p.substitute_reciprocal_sum();
        let x = &t + t.recip();
        let lhs = r.eval(&t);
        let rhs = p.eval(&x, &t) * num_traits::pow(t.clone(), k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sign_is_sign_of_value(r in small_rat()) {
        let s = Sign::of_rational(&r);
        prop_assert_eq!(s == Sign::Positive, r.is_positive());
        prop_assert_eq!(s == Sign::Negative, r.is_negative());
    }
}
