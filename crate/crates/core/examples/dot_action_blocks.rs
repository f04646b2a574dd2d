// The dot action, classification of weights, blocks and minimal ranks.

use oinf::weights::{IndexScheme, Weight};
use oinf::weyl::{classify, dot, min_rank, same_block, WeylElt};

pub fn run_example() -> oinf::Result<()> {
    for scheme in [IndexScheme::FiniteA(3), IndexScheme::Nat, IndexScheme::Int] {
        let zero = Weight::zero(scheme);
        let w = WeylElt::parse_word(scheme, "s0 s1")?;
        let lam = dot(&w, &zero)?;
        let c = classify(&lam)?;
        println!("{scheme}: s0s1·0 = {lam}  regular={} dominant={}", c.regular, c.dominant);
        assert!(same_block(&lam, &zero));
        assert_eq!(min_rank(&lam, &zero)?.len, 3);
    }
    // 0 is dominant for both Borels; its negated tails make −2ρ antidominant
    for scheme in [IndexScheme::Nat, IndexScheme::Int] {
        let zero = Weight::zero(scheme);
        assert!(classify(&zero)?.dominant);
        assert!(classify(&oinf::ringel::ringel_weight(&zero))?.antidominant);
    }

    let eps0 = Weight::from_lambda(IndexScheme::Nat, &[(0, 1)])?;
    assert!(!same_block(&eps0, &Weight::zero(IndexScheme::Nat)));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("dot_action_blocks");
}
