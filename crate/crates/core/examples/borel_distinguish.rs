// The co-atom cover count c(s_i·0) tells the ℕ- and ℤ-indexed Dynkin Borels
// of gl(∞) apart: only the ℕ-indexed one has a co-atom with c = 1.

use oinf::weights::IndexScheme;
use oinf::weyl::cover_count_stable;

pub fn run_example() -> oinf::Result<()> {
    for (scheme, range) in [(IndexScheme::Nat, 0..5), (IndexScheme::Int, -3..5)] {
        let mut row = Vec::new();
        for i in range {
            let (c, stable) = cover_count_stable(scheme, i)?;
            assert!(stable);
            row.push(format!("s{i}:{c}"));
            let expected = if scheme == IndexScheme::Nat && i == 0 { 1 } else { 2 };
            assert_eq!(c, expected);
        }
        println!("{scheme}: {}", row.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("borel_distinguish");
}
