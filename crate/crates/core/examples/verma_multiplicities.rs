// Composition multiplicities [Δ(λ):L(μ)] and Hom spaces between Verma and
// dual Verma modules, for weights of gl(∞).

use oinf::mult::{hom_delta_nabla, hom_dim_verma, reduce, verma_mult, verma_mult_with_margin};
use oinf::weights::{IndexScheme, Weight};
use oinf::weyl::{dot_zero, WeylElt};

pub fn run_example() -> oinf::Result<()> {
    let zero = Weight::zero(IndexScheme::Nat);
    // λ = 0 and μ with w₀x = 3412 on positions 0..3
    let mu = zero.with_values([(0, -2), (1, -3), (2, 0), (3, -1)])?;
    let m = verma_mult(&zero, &mu)?;
    let r = reduce(&zero, &mu, 0)?.expect("same block");
    println!("[Δ(0):L({mu})] = {m}  (reduced to S{} with x = {})", r.w.n(), r.x);
    assert_eq!(m, 2);
    for margin in 1..=2 {
        assert_eq!(verma_mult_with_margin(&zero, &mu, margin)?, 2);
    }

    let s0 = dot_zero(&WeylElt::parse_word(IndexScheme::Nat, "s0")?);
    assert_eq!(hom_dim_verma(&s0, &zero)?, 1);
    assert_eq!(hom_dim_verma(&zero, &s0)?, 0);
    assert_eq!(hom_delta_nabla(&s0, &s0), 1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verma_multiplicities");
}
