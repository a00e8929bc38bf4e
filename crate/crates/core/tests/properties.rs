use num_bigint::BigInt;
use proptest::prelude::*;

use boolschur::chern::{chern_plethysm, chern_roots, pragacz_check, BundleExpr, SymFn};
use boolschur::combinat::{partitions_of, Partition};
use boolschur::polyring::{Alphabets, Monomial, MultiPoly};
use boolschur::schurbasis::{pieri_e, pieri_h, restrict_to_vars, SchurVector};
use boolschur::symexpand::{
    is_symmetric, schur_coefficients_by_alternant, schur_expand, schur_poly, schur_poly_by_tableaux,
};

const N: usize = 3;

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u16..3, N), -4i64..=4), 0..6).prop_map(|terms| {
        MultiPoly::from_terms(
            Alphabets::single(N),
            terms.into_iter().map(|(e, c)| (Monomial::from_exps(0, &e), BigInt::from(c))),
        )
    })
}

fn shapes(max_size: usize, max_len: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|d| partitions_of(d, max_len)).collect()
}

fn schur_vector(max_size: usize) -> impl Strategy<Value = SchurVector> {
    let all = shapes(max_size, max_size);
    prop::collection::vec((prop::sample::select(all), -3i64..=3), 0..4)
        .prop_map(|ts| SchurVector::from_terms(ts.into_iter().map(|(l, c)| (l, BigInt::from(c)))))
}

fn bundle() -> impl Strategy<Value = BundleExpr> {
    let leaf = prop_oneof![
        (1usize..=2).prop_map(|r| BundleExpr::base("E", r)),
        (1usize..=2).prop_map(|r| BundleExpr::base("F", r)),
    ];
    leaf.prop_recursive(2, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| BundleExpr::oplus(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| BundleExpr::tensor(a, b)),
            (1usize..=2, inner.clone()).prop_map(|(k, a)| BundleExpr::wedge(k, a)),
            (1usize..=2, inner).prop_map(|(k, a)| BundleExpr::sym(k, a)),
        ]
    })
    .prop_filter("consistent small bundle", |e| {
        e.alphabets().is_ok() && e.rank() <= BigInt::from(12)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(
            (&a * &b).evaluate_all_ones(None),
            a.evaluate_all_ones(None) * b.evaluate_all_ones(None)
        );
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in poly()) {
        let back = MultiPoly::from_json_terms(a.alphabets(), &a.to_json_terms()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn expansion_recovers_schur_combination(v in schur_vector(5)) {
        let f = restrict_to_vars(&v, N);
        prop_assert!(is_symmetric(&f));
        let e = schur_expand(&f).unwrap();
        prop_assert_eq!(&e.terms, &v.truncate(N).terms);
        prop_assert_eq!(&schur_coefficients_by_alternant(&f).terms, &e.terms);
        prop_assert_eq!(e.to_polynomial(), f);
    }

    #[test]
    fn nonsymmetric_input_is_rejected(a in poly()) {
        prop_assume!(!is_symmetric(&a));
        prop_assert!(schur_expand(&a).is_err());
    }

    #[test]
    fn pieri_operators_commute(v in schur_vector(3), r in 0usize..3, s in 0usize..3) {
        prop_assert_eq!(pieri_h(&pieri_h(&v, r), s), pieri_h(&pieri_h(&v, s), r));
        prop_assert_eq!(pieri_e(&pieri_e(&v, r), s), pieri_e(&pieri_e(&v, s), r));
        prop_assert_eq!(pieri_h(&pieri_e(&v, r), s), pieri_e(&pieri_h(&v, s), r));
    }

    #[test]
    fn pieri_matches_polynomial_product(v in schur_vector(3), r in 0usize..3) {
        let h = restrict_to_vars(&SchurVector::h(r), N);
        let e = restrict_to_vars(&SchurVector::e(r), N);
        prop_assert_eq!(restrict_to_vars(&pieri_h(&v, r), N), &restrict_to_vars(&v, N) * &h);
        prop_assert_eq!(restrict_to_vars(&pieri_e(&v, r), N), &restrict_to_vars(&v, N) * &e);
    }

    #[test]
    fn root_count_is_rank(e in bundle()) {
        prop_assert_eq!(BigInt::from(chern_roots(&e).unwrap().len()), e.rank());
    }

    #[test]
    fn plethysm_is_a_ring_map(e in bundle(), f in schur_vector(2), g in schur_vector(2)) {
        let ev = |v: &SchurVector| chern_plethysm(&SymFn::Vector(v.clone()), &e).unwrap();
        prop_assert_eq!(ev(&f.add(&g)), &ev(&f) + &ev(&g));
        let product = g.terms().iter().fold(SchurVector::zero(), |acc, (l, c)| {
            acc.add(&schur_product(&f, l).scale(c))
        });
        prop_assert_eq!(ev(&product), &ev(&f) * &ev(&g));
    }

    #[test]
    fn direct_sum_is_alphabet_union(v in schur_vector(4), n in 1usize..=2, m in 1usize..=2) {
        let e = BundleExpr::oplus(BundleExpr::base("E", n), BundleExpr::base("F", m));
        let got = chern_plethysm(&SymFn::Vector(v.clone()), &e).unwrap();
        let merged = restrict_to_vars(&v, n + m);
        let want = MultiPoly::from_terms(Alphabets::double(n, m), merged.terms().clone());
        prop_assert_eq!(got, want);
    }

    #[test]
    fn degree_law(e in bundle(), d in 0usize..=4, idx in 0usize..64) {
        let all = partitions_of(d, d);
        let lambda = all[idx % all.len()].clone();
        let f = chern_plethysm(&SymFn::S(lambda), &e).unwrap();
        prop_assert!(f.is_zero() || (f.is_homogeneous() && f.degree() == Some(d)));
    }
}

/// `f · s_λ`, expanding `s_λ = det(h_{λ_i − i + j})` term by term.
fn schur_product(f: &SchurVector, lambda: &Partition) -> SchurVector {
    let l = lambda.len();
    let mut total = SchurVector::zero();
    for w in boolschur::combinat::permutations(l) {
        let mut v = f.clone();
        let mut ok = true;
        for i in 0..l {
            let j = w.apply(i + 1) - 1;
            let k = lambda.get(i) as i64 - i as i64 + j as i64;
            if k < 0 {
                ok = false;
                break;
            }
            v = pieri_h(&v, k as usize);
        }
        if ok {
            total = total.add(&v.scale(&BigInt::from(w.sign())));
        }
    }
    total
}

#[test]
fn bialternant_matches_tableaux() {
    for lambda in shapes(5, 4) {
        assert_eq!(*schur_poly(&lambda, 4), schur_poly_by_tableaux(&lambda, 4), "{lambda}");
    }
}

#[test]
fn pragacz_positive_through_rank_four() {
    let bundles = [
        BundleExpr::base("E", 1),
        BundleExpr::base("E", 3),
        BundleExpr::base("E", 4),
        BundleExpr::sym(2, BundleExpr::base("E", 2)),
        BundleExpr::wedge(2, BundleExpr::base("E", 3)),
        BundleExpr::oplus(BundleExpr::base("E", 1), BundleExpr::base("F", 1)),
        BundleExpr::oplus(BundleExpr::base("E", 2), BundleExpr::base("F", 2)),
        BundleExpr::oplus(BundleExpr::base("E", 3), BundleExpr::base("F", 1)),
        BundleExpr::tensor(BundleExpr::base("E", 2), BundleExpr::base("F", 2)),
        BundleExpr::tensor(BundleExpr::base("E", 1), BundleExpr::base("F", 3)),
    ];
    for e in &bundles {
        for lambda in shapes(6, 6).into_iter().filter(|l| !l.is_empty()) {
            let r = pragacz_check(&lambda, e).unwrap();
            assert!(r.positive, "s{lambda} at the roots of {e} has a negative coefficient");
        }
    }
}
