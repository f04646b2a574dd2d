// Bruhat order and cover relations inside a finite window.

use oinf::weights::{IndexScheme, Weight};
use oinf::weyl::{bruhat_covers, bruhat_leq, dot_zero, IndexWindow, WeylElt};

pub fn run_example() -> oinf::Result<()> {
    let zero = Weight::zero(IndexScheme::Nat);
    let covers = bruhat_covers(&zero, IndexWindow::span(0, 3))?;
    println!("covers of 0 in positions 0..3:");
    for c in &covers {
        println!("  {c}");
    }
    assert_eq!(covers.len(), 3);

    let s0 = dot_zero(&WeylElt::parse_word(IndexScheme::Nat, "s0")?);
    let s1 = dot_zero(&WeylElt::parse_word(IndexScheme::Nat, "s1")?);
    let s0s1 = dot_zero(&WeylElt::parse_word(IndexScheme::Nat, "s0 s1")?);
    assert!(bruhat_leq(&s0s1, &s0)? && bruhat_leq(&s0s1, &s1)?);
    assert!(!bruhat_leq(&s0, &s1)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("bruhat_covers");
}
