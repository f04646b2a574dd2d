// Property tests for the weight order, the Weyl group action, multiplicities,
// truncations and Ringel duality.

mod common;

use common::*;
use oinf::hecke::kl_poly;
use oinf::mult::{
    ext_delta_simple, ext_delta_simple_with_margin, graded_ext_table, hom_dim_verma, reduce, verma_mult,
    verma_mult_with_margin,
};
use oinf::ringel::{ringel_weight, tilting_flag, CoidealSpec};
use oinf::trunc::{cartan_matrix, idempotent_truncation_check, projective_flag, window_slice};
use oinf::weights::{ideal_contains, interval, leq, IdealSpec, IndexScheme, Weight};
use oinf::weyl::{
    block_id, bruhat_covers, bruhat_leq, classify, coatom, coatom_window, cover_count_invariant, same_block,
    IndexWindow, WeylElt,
};
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..=2, 5)
}

fn with_scheme<S: Strategy, F: Fn(IndexScheme) -> S>(f: F) -> impl Strategy<Value = (IndexScheme, S::Value)> {
    schemes().prop_flat_map(move |s| (Just(s), f(s)))
}

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn leq_partial_order((scheme, (a, c1, c2, other)) in with_scheme(|s| (weights_in(s), coeffs(), coeffs(), weights_in(s)))) {
        let _ = scheme;
        let b = raise(&a, &c1);
        let c = raise(&b, &c2);
        prop_assert!(leq(&a, &a)? && leq(&other, &other)?);
        prop_assert!(leq(&a, &b)? && leq(&b, &c)? && leq(&a, &c)?);
        if leq(&a, &other)? && leq(&other, &a)? {
            prop_assert_eq!(&a, &other);
        }
        if leq(&b, &a)? {
            prop_assert_eq!(&a, &b);
        }
        if leq(&a, &other)? && leq(&other, &c)? {
            prop_assert!(interval(&a, &c)?.contains(&other));
        }
    }

    #[test]
    fn interval_members_and_closure((scheme, (mu, c)) in with_scheme(|s| (weights_in(s), coeffs()))) {
        let lam = raise(&mu, &c.iter().map(|c| *c.min(&1)).collect::<Vec<_>>());
        let set = interval(&mu, &lam)?;
        prop_assert!(set.contains(&mu) && set.contains(&lam));
        let b = base(scheme);
        for nu in &set {
            prop_assert!(leq(&mu, nu)? && leq(nu, &lam)?);
            for k in b..b + 5 {
                let up = nu.add_simple_root(k)?;
                prop_assert_eq!(set.contains(&up), leq(&up, &lam)?);
            }
        }
        if mu != lam {
            prop_assert!(interval(&lam, &mu)?.is_empty());
        }
    }

    #[test]
    fn interval_translation_invariant((scheme, (mu, c, shift)) in with_scheme(|s| (weights_in(s), coeffs(), prop::collection::vec(-3i64..3, 6)))) {
        let lam = raise(&mu, &c.iter().map(|c| *c.min(&1)).collect::<Vec<_>>());
        let b = base(scheme);
        let t: Vec<(i64, i64)> = shift.iter().enumerate().map(|(i, &c)| (b + i as i64, c)).collect();
        let (mu2, lam2) = (mu.translate(&t)?, lam.translate(&t)?);
        prop_assert_eq!(interval(&mu, &lam)?.len(), interval(&mu2, &lam2)?.len());
    }

    #[test]
    fn ideals_are_downward_closed((scheme, (g, mu, k)) in with_scheme(|s| (weights_in(s), weights_in(s), 0i64..5))) {
        let ideal = IdealSpec::principal(g.clone());
        prop_assert!(ideal_contains(&ideal, &g)?);
        if ideal_contains(&ideal, &mu)? {
            prop_assert!(ideal_contains(&ideal, &mu.sub_simple_root(base(scheme) + k)?)?);
        }
    }
}

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn dot_is_a_group_action((_, (u, v, lam)) in with_scheme(|s| (words(s, 6, 6), words(s, 6, 6), weights_in(s)))) {
        let uv = u.compose(&v);
        prop_assert_eq!(apply(&uv, &lam), apply(&u, &apply(&v, &lam)));
        prop_assert_eq!(block_id(&apply(&u, &lam)), block_id(&lam));
        prop_assert!(same_block(&apply(&u, &lam), &lam));
        prop_assert_eq!(apply(&u.inverse(), &apply(&u, &lam)), lam);
    }

    #[test]
    fn bruhat_refines_leq((_, (mu, lam)) in with_scheme(|s| (orbit_weights(s, 5), orbit_weights(s, 5)))) {
        if bruhat_leq(&mu, &lam)? {
            prop_assert!(leq(&mu, &lam)?);
        }
        prop_assert!(bruhat_leq(&lam, &lam)?);
    }

    #[test]
    fn covers_stabilize(lam in orbit_weights(NAT, 5), hi in 2i64..5, extra in 1i64..3) {
        let small = IndexWindow::span(0, hi);
        let big = IndexWindow::span(0, hi + extra);
        let a = bruhat_covers(&lam, small)?;
        let b: Vec<Weight> = bruhat_covers(&lam, big)?
            .into_iter()
            .filter(|c| c.diff_support(&lam).iter().all(|&p| small.contains(p)))
            .collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn length_changes_by_one((scheme, (w, i)) in with_scheme(|s| (words(s, 6, 10), 0i64..5))) {
        let ws = w.compose(&WeylElt::simple(scheme, base(scheme) + i)?);
        prop_assert_eq!((ws.length() as i64 - w.length() as i64).abs(), 1);
    }

    #[test]
    fn cover_count_stable_beyond_two(scheme in prop_oneof![Just(NAT), Just(INT)], i in -2i64..5, m in 2usize..4) {
        prop_assume!(scheme.has_simple_root(i));
        let c = coatom(scheme, i)?;
        let a = cover_count_invariant(scheme, &c, coatom_window(scheme, i, 2))?;
        let b = cover_count_invariant(scheme, &c, coatom_window(scheme, i, m + 1))?;
        prop_assert_eq!(a, b);
        let expected = if scheme == NAT && i == 0 { 1 } else { 2 };
        prop_assert_eq!(a, expected);
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn multiplicities_stable_under_rank_growth(a in orbit_weights(NAT, 4), b in orbit_weights(NAT, 4)) {
        let m = verma_mult(&a, &b)?;
        let e = ext_delta_simple(&b, &a)?;
        for margin in 1..=2 {
            prop_assert_eq!(verma_mult_with_margin(&a, &b, margin)?, m);
            prop_assert_eq!(&ext_delta_simple_with_margin(&b, &a, margin)?, &e);
        }
    }

    #[test]
    fn bgg_theorem((_, (a, b)) in with_scheme(|s| (orbit_weights(s, 5), orbit_weights(s, 5)))) {
        let related = bruhat_leq(&b, &a)?;
        prop_assert_eq!(verma_mult(&a, &b)? != 0, related);
        prop_assert_eq!(hom_dim_verma(&b, &a)?, u64::from(related));
    }

    #[test]
    fn ext_vectors(a in orbit_weights(NAT, 5), b in orbit_weights(NAT, 5)) {
        let v = ext_delta_simple(&b, &a)?;
        prop_assert!(v.respects_parity());
        prop_assert!(graded_ext_table(&b, &a)?.is_diagonal());
        let r = reduce(&a, &b, 0)?.unwrap();
        let p = kl_poly(&r.x, &r.w)?;
        prop_assert_eq!(v.total(), p.coeffs_u64()?.iter().sum::<u64>());
        if r.x.bruhat_le(&r.w) {
            prop_assert_eq!(v.get(v.length_gap as usize), 1);
        } else {
            prop_assert!(v.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn cartan_and_projectives(g in orbit_weights(NAT, 3), extra in orbit_weights(NAT, 3)) {
        let zero = Weight::zero(NAT);
        let k = IdealSpec::principal(g.clone());
        let slice = window_slice(&k, &zero, IndexWindow::span(0, 2))?;
        prop_assume!(!slice.is_empty());
        let c = cartan_matrix(&k, &slice)?;
        prop_assert!(c.is_symmetric());
        prop_assert!(c.diagonal().iter().all(|&d| d >= 1));
        for mu in &slice {
            let flag = projective_flag(&k, mu)?;
            prop_assert_eq!(flag.get(mu), 1);
            for (nu, m) in flag.iter() {
                prop_assert!(bruhat_leq(mu, nu)?);
                prop_assert_eq!(m, verma_mult(nu, mu)?);
            }
        }
        let bigger = IdealSpec::new(vec![g, extra])?;
        let c2 = cartan_matrix(&bigger, &slice)?;
        for (r1, r2) in c.matrix.iter().zip(&c2.matrix) {
            prop_assert!(r1.iter().zip(r2).all(|(a, b)| a <= b));
        }
    }

    #[test]
    fn idempotent_truncation((inner, g) in (1i64..3).prop_flat_map(|i| (Just(i), orbit_weights(NAT, i as usize + 1))), grow in 1i64..2) {
        let zero = Weight::zero(NAT);
        let k = IdealSpec::principal(g);
        let (inner, outer) = (IndexWindow::span(0, inner), IndexWindow::span(0, inner + grow));
        prop_assert!(idempotent_truncation_check(&k, &zero, inner, outer)?);
    }

    #[test]
    fn ringel_duality((_, (a, b)) in with_scheme(|s| (orbit_weights(s, 5), orbit_weights(s, 5)))) {
        let (ra, rb) = (ringel_weight(&a), ringel_weight(&b));
        prop_assert_eq!(ringel_weight(&ra), a.clone());
        prop_assert_eq!(bruhat_leq(&a, &b)?, bruhat_leq(&rb, &ra)?);
        prop_assert_eq!(classify(&a)?.dominant, classify(&ra)?.antidominant);
    }

    #[test]
    fn tilting_flags(nu in orbit_weights(NAT, 3), g in orbit_weights(NAT, 3)) {
        let floor = nat("s0 s1 s0");
        prop_assume!(leq(&g, &nu)?);
        let c = CoidealSpec::principal(g.clone());
        let t = tilting_flag(&c, &nu, &floor)?;
        prop_assert_eq!(t.get(&nu), 1);
        for (k, _) in t.iter() {
            prop_assert!(c.contains(k)?);
            prop_assert!(bruhat_leq(&ringel_weight(&nu), &ringel_weight(k))?);
        }
        let own = tilting_flag(&CoidealSpec::principal(nu.clone()), &nu, &floor)?;
        prop_assert_eq!(own.iter().collect::<Vec<_>>(), vec![(&nu, 1)]);
    }
}
