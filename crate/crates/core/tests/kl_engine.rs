// The fast KL engine against the Hecke algebra construction, structural
// properties of KL polynomials, and the on-disk cache.

use std::io::Write;
use std::sync::Arc;

use oinf::hecke::{
    kl_poly, kl_poly_slow, mu_coeff, read_cache_file, write_cache_records, CacheRecord, KLPoly, KlEngine, Perm,
    CACHE_MAGIC,
};
use oinf::Error;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> Perm {
    s.parse().unwrap()
}

#[test]
fn fast_equals_slow_exhaustively_on_s3_and_s4() {
    for n in 3..=4 {
        let all = Perm::all(n);
        for x in &all {
            for w in &all {
                assert_eq!(kl_poly(x, w).unwrap(), kl_poly_slow(x, w).unwrap(), "P_({x},{w})");
            }
        }
    }
}

#[test]
fn fast_equals_slow_on_random_s5_pairs() {
    let all = Perm::all(5);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut comparable = 0;
    for _ in 0..150 {
        let x = all.choose(&mut rng).unwrap();
        let w = all.choose(&mut rng).unwrap();
        comparable += usize::from(x.bruhat_le(w));
        assert_eq!(kl_poly(x, w).unwrap(), kl_poly_slow(x, w).unwrap(), "P_({x},{w})");
    }
    // also force pairs below the longest element, where polynomials are richest
    let w0 = Perm::longest(5);
    for x in all.choose_multiple(&mut rng, 40) {
        assert_eq!(kl_poly(x, &w0).unwrap(), kl_poly_slow(x, &w0).unwrap());
        let w = all.choose(&mut rng).unwrap();
        if x.bruhat_le(w) {
            comparable += 1;
            assert_eq!(kl_poly(x, w).unwrap(), kl_poly_slow(x, w).unwrap());
        }
    }
    assert!(comparable >= 20);
}

#[test]
fn known_polynomials() {
    assert_eq!(kl_poly(&p("[1,2,3,4]"), &p("[3,4,1,2]")).unwrap(), KLPoly::from_u64(&[1, 1]));
    assert_eq!(kl_poly_slow(&p("[1,2,3,4]"), &p("[3,4,1,2]")).unwrap(), KLPoly::from_u64(&[1, 1]));
    assert_eq!(kl_poly(&p("[1,2,3,4]"), &p("[4,2,3,1]")).unwrap(), KLPoly::from_u64(&[1, 1]));
    assert_eq!(kl_poly(&p("[1,2,3]"), &p("[3,2,1]")).unwrap(), KLPoly::one());
    assert_eq!(kl_poly_slow(&p("[1,2]"), &p("[2,1]")).unwrap(), KLPoly::one());
    let w = p("[2,4,1,3]");
    assert_eq!(kl_poly(&w, &w).unwrap(), KLPoly::one());
    assert_eq!(kl_poly(&p("[2,1,3]"), &p("[1,3,2]")).unwrap(), KLPoly::zero());
    assert_eq!(mu_coeff(&p("[1,2]"), &p("[2,1]")).unwrap(), 1u32.into());
    assert_eq!(mu_coeff(&p("[1,2,3,4]"), &p("[3,4,1,2]")).unwrap(), 0u32.into());
    assert!(matches!(mu_coeff(&p("[2,1]"), &p("[1,2]")), Err(Error::NotStrictlyBelow(..))));
    assert!(matches!(kl_poly(&p("[1,2]"), &p("[1,2,3]")), Err(Error::WindowMismatch(2, 3))));
    // S6 has a polynomial with a q² term below the longest element
    let w0 = Perm::longest(6);
    let top = Perm::all(6).iter().map(|x| kl_poly(x, &w0).unwrap()).all(|p| p == KLPoly::one());
    assert!(top);
    let deg2 = Perm::all(6).iter().any(|w| kl_poly(&Perm::identity(6), w).unwrap().degree() == Some(2));
    assert!(deg2);
}

fn perm_pair(n: usize) -> impl Strategy<Value = (Perm, Perm)> {
    let all = Perm::all(n);
    let k = all.len();
    (0..k, 0..k).prop_map(move |(a, b)| (all[a].clone(), all[b].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn structural_properties((x, w) in prop_oneof![perm_pair(5), perm_pair(6)]) {
        let pxw = kl_poly(&x, &w)?;
        prop_assert_eq!(&pxw, &kl_poly(&x.inverse(), &w.inverse())?);
        prop_assert_eq!(!pxw.is_zero(), x.bruhat_le(&w));
        if !pxw.is_zero() {
            prop_assert_eq!(pxw.coeff(0), 1u32.into());
            let gap = w.length() - x.length();
            if gap > 0 {
                prop_assert!(2 * pxw.degree().unwrap() < gap);
            }
        }
    }

    #[test]
    fn embedding_stability((x, w) in perm_pair(5), k in 1usize..3) {
        let pxw = kl_poly(&x, &w)?;
        prop_assert_eq!(&kl_poly(&x.extend(k), &w.extend(k))?, &pxw);
        prop_assert_eq!(&kl_poly(&x.shift(k), &w.shift(k))?, &pxw);
    }
}

#[test]
fn cache_round_trip_across_engines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kl.bin");
    let first = KlEngine::new();
    assert_eq!(first.attach_cache_file(&path).unwrap(), 0);
    let pairs: Vec<(Perm, Perm)> = Perm::all(4).into_iter().map(|x| (x, Perm::longest(4))).collect();
    let expected: Vec<KLPoly> = pairs.iter().map(|(x, w)| first.kl_poly(x, w).unwrap()).collect();
    first.kl_poly(&Perm::identity(5), &p("[3,4,5,1,2]")).unwrap();
    let written = first.flush().unwrap();
    assert!(written > 0);
    assert_eq!(first.flush().unwrap(), 0);

    let second = KlEngine::new();
    assert_eq!(second.attach_cache_file(&path).unwrap(), read_cache_file(&path).unwrap().len());
    for ((x, w), want) in pairs.iter().zip(&expected) {
        assert_eq!(&second.kl_poly(x, w).unwrap(), want);
    }
}

#[test]
fn loaded_records_are_served_from_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kl.bin");
    // a deliberately wrong record proves the engine reads the file
    let bogus = CacheRecord { x: p("[1,2,3]"), w: p("[2,3,1]"), poly: KLPoly::from_u64(&[7]) };
    write_cache_records(&path, &[bogus]).unwrap();
    let engine = KlEngine::new();
    assert_eq!(engine.attach_cache_file(&path).unwrap(), 1);
    assert_eq!(engine.kl_poly(&p("[1,2,3]"), &p("[2,3,1]")).unwrap(), KLPoly::from_u64(&[7]));
}

#[test]
fn truncated_tail_is_ignored_and_foreign_files_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kl.bin");
    let rec = CacheRecord { x: Perm::identity(4), w: p("[3,4,1,2]"), poly: KLPoly::from_u64(&[1, 1]) };
    write_cache_records(&path, &[rec.clone(), rec.clone()]).unwrap();
    let full = std::fs::metadata(&path).unwrap().len();
    let file = std::fs::OpenOptions::new().write(true).open(&path).unwrap();
    file.set_len(full - 3).unwrap();
    assert_eq!(read_cache_file(&path).unwrap(), vec![rec]);

    let foreign = dir.path().join("other.bin");
    std::fs::File::create(&foreign).unwrap().write_all(b"not a cache").unwrap();
    assert!(matches!(read_cache_file(&foreign), Err(Error::CorruptCache(_))));
    assert!(matches!(KlEngine::new().attach_cache_file(&foreign), Err(Error::CorruptCache(_))));
    assert_eq!(&CACHE_MAGIC[..6], b"OINFKL");
}

#[test]
fn concurrent_queries_agree() {
    let engine = Arc::new(KlEngine::new());
    let all = Arc::new(Perm::all(5));
    let w0 = Perm::longest(5);
    let handles: Vec<_> = (0..4)
        .map(|t| {
            let (engine, all, w0) = (engine.clone(), all.clone(), w0.clone());
            std::thread::spawn(move || {
                all.iter().skip(t).step_by(2).map(|x| (x.clone(), engine.kl_poly(x, &w0).unwrap())).collect::<Vec<_>>()
            })
        })
        .collect();
    for h in handles {
        for (x, poly) in h.join().unwrap() {
            assert_eq!(poly, kl_poly_slow(&x, &w0).unwrap());
        }
    }
}
