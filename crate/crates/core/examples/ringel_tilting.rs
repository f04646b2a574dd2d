// Ringel duality on weights and the ∇-flags of tilting modules.

use oinf::ringel::{ringel_weight, tilting_flag, CoidealSpec};
use oinf::weights::{IndexScheme, Weight};
use oinf::weyl::{bruhat_leq, dot_zero, WeylElt};

pub fn run_example() -> oinf::Result<()> {
    let orbit = |w: &str| -> oinf::Result<Weight> { Ok(dot_zero(&WeylElt::parse_word(IndexScheme::Nat, w)?)) };
    let (zero, s0, s0s1) = (orbit("e")?, orbit("s0")?, orbit("s0 s1")?);
    let r = ringel_weight(&zero);
    println!("−0−2ρ = {r}");
    assert_eq!(ringel_weight(&r), zero);
    assert!(bruhat_leq(&s0s1, &s0)?);
    assert!(bruhat_leq(&ringel_weight(&s0), &ringel_weight(&s0s1))?);

    let c = CoidealSpec::principal(s0.clone());
    let t = tilting_flag(&c, &zero, &s0)?;
    for (k, m) in t.iter() {
        println!("(T_C(0):∇({k})) = {m}");
    }
    assert_eq!((t.get(&zero), t.get(&s0)), (1, 1));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ringel_tilting");
}
