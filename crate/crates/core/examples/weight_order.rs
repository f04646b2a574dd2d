// The order ≤ on weights, intervals, and finitely generated ideals.

use oinf::weights::{ideal_contains, ideal_slice, interval, leq, IdealSpec, IndexScheme, Weight};
use oinf::weyl::{dot_zero, WeylElt};

fn orbit(word: &str) -> oinf::Result<Weight> {
    Ok(dot_zero(&WeylElt::parse_word(IndexScheme::Nat, word)?))
}

pub fn run_example() -> oinf::Result<()> {
    let zero = Weight::zero(IndexScheme::Nat);
    let s0 = orbit("s0")?;
    assert!(leq(&s0, &zero)?);
    assert!(!leq(&zero, &s0)?);

    let eps0 = Weight::from_lambda(IndexScheme::Nat, &[(0, 1)])?;
    let eps1 = Weight::from_lambda(IndexScheme::Nat, &[(1, 1)])?;
    let between = interval(&eps1, &eps0)?;
    println!("[ε1, ε0] = {}", between.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    assert_eq!(between.len(), 2);

    let k = IdealSpec::principal(zero.clone());
    assert!(ideal_contains(&k, &orbit("s1 s0")?)?);
    let slice = ideal_slice(&k, &zero, &orbit("s0 s1 s0")?)?;
    println!("⟨0⟩ ∩ [[0]] above s0s1s0·0 has {} weights", slice.len());
    assert_eq!(slice.len(), 6);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("weight_order");
}
