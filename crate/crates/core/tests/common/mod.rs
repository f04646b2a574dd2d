// Helpers and proptest strategies shared by the integration tests.
#![allow(dead_code)]

use oinf::hecke::Perm;
use oinf::weights::{IndexScheme, Weight};
use oinf::weyl::{dot, dot_zero, WeylElt};
use proptest::prelude::*;

pub const NAT: IndexScheme = IndexScheme::Nat;
pub const INT: IndexScheme = IndexScheme::Int;

/// `w·0` for a word such as `"s0 s1"`.
pub fn orbit(scheme: IndexScheme, word: &str) -> Weight {
    dot_zero(&WeylElt::parse_word(scheme, word).unwrap())
}

pub fn nat(word: &str) -> Weight {
    orbit(NAT, word)
}

pub fn fin(values: &[i64]) -> Weight {
    Weight::finite(values).unwrap()
}

/// The block of 0 in `gl_n`, in lexicographic order of the permutations.
pub fn fin_block(n: usize) -> Vec<Weight> {
    Perm::all(n).iter().map(|p| fin(&p.one_line().iter().map(|&v| -(v as i64)).collect::<Vec<_>>())).collect()
}

/// `w·b` in `gl_n` for the antidominant `b = (−(n−1), …, −1, 0)`; the value at
/// position `i` is `b_{w⁻¹(i)}`.
pub fn fin_orbit(w: &Perm) -> Weight {
    let n = w.n() as i64;
    let inv = w.inverse();
    fin(&(0..w.n()).map(|i| inv.apply(i) as i64 - (n - 1)).collect::<Vec<_>>())
}

pub fn schemes() -> impl Strategy<Value = IndexScheme> {
    prop_oneof![Just(NAT), Just(INT), Just(IndexScheme::FiniteA(7))]
}

/// First position of the sampling window of a scheme.
pub fn base(scheme: IndexScheme) -> i64 {
    if scheme == INT {
        -3
    } else {
        0
    }
}

/// A word in the simple reflections `s_base .. s_{base+len-2}`.
pub fn words(scheme: IndexScheme, len: usize, max: usize) -> impl Strategy<Value = WeylElt> {
    let b = base(scheme);
    prop::collection::vec(0..(len as i64 - 1), 0..=max)
        .prop_map(move |idx| WeylElt::from_word(scheme, &idx.iter().map(|i| i + b).collect::<Vec<_>>()).unwrap())
}

/// An element `w·0` of the block of 0, with `w` supported on `len` positions.
pub fn orbit_weights(scheme: IndexScheme, len: usize) -> impl Strategy<Value = Weight> {
    words(scheme, len, 10).prop_map(|w| dot_zero(&w))
}

/// An integral weight: random shifted values on six positions.
pub fn weights_in(scheme: IndexScheme) -> impl Strategy<Value = Weight> {
    let b = base(scheme);
    prop::collection::vec(-4i64..4, 6).prop_map(move |vals| {
        Weight::zero(scheme).translate(&vals.iter().enumerate().map(|(i, &c)| (b + i as i64, c)).collect::<Vec<_>>()).unwrap()
    })
}

/// `λ + Σ_k c_k α_k` with `c_k ∈ 0..=max` over the sampling window.
pub fn raise(lam: &Weight, coeffs: &[i64]) -> Weight {
    let b = base(lam.scheme());
    let mut out = lam.clone();
    for (k, &c) in coeffs.iter().enumerate() {
        for _ in 0..c {
            out = out.add_simple_root(b + k as i64).unwrap();
        }
    }
    out
}

pub fn apply(w: &WeylElt, lam: &Weight) -> Weight {
    dot(w, lam).unwrap()
}
