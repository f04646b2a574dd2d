// 2ρ is the semi-infinite character of gl_n; ρ and 0 are not.

use std::collections::BTreeMap;

use oinf::ringel::{semiinfinite_check, two_rho};

pub fn run_example() -> oinf::Result<()> {
    for n in 2..=6 {
        assert!(semiinfinite_check(n, &two_rho(n))?);
    }
    let rho: BTreeMap<usize, i64> = BTreeMap::from([(0, 1)]);
    println!("2ρ: {}  ρ: {}  0: {}", semiinfinite_check(2, &two_rho(2))?, semiinfinite_check(2, &rho)?,
        semiinfinite_check(2, &BTreeMap::new())?);
    assert!(!semiinfinite_check(2, &rho)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("semiinfinite");
}
