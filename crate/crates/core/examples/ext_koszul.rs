// Ext groups between Verma and simple modules, their graded lift, and the
// Verma–Verma Ext of small blocks.

use oinf::mult::{ext_delta_simple, ext_delta_verma, graded_ext_table};
use oinf::weights::{IndexScheme, Weight};
use oinf::weyl::{dot_zero, WeylElt};

pub fn run_example() -> oinf::Result<()> {
    let orbit = |w: &str| -> oinf::Result<Weight> { Ok(dot_zero(&WeylElt::parse_word(IndexScheme::Nat, w)?)) };
    let zero = orbit("e")?;
    for word in ["e", "s0", "s0 s1", "s0 s1 s0"] {
        let mu = orbit(word)?;
        let v = ext_delta_simple(&mu, &zero)?;
        println!("Ext^•(Δ({word}·0), L(0)) = {:?}", v.dims);
        assert!(v.respects_parity());
        assert!(graded_ext_table(&mu, &zero)?.is_diagonal());
    }
    // P_(e,3412) = 1 + q: Ext² and Ext⁴ both one-dimensional
    let x = Weight::zero(IndexScheme::Nat).with_values([(0, -3), (1, -2), (2, -1), (3, 0)])?;
    let w = x.with_values([(0, -1), (1, 0), (2, -3), (3, -2)])?;
    let v = ext_delta_simple(&x, &w)?;
    println!("Ext^•(Δ(e·b), L(3412·b)) = {:?}", v.dims);
    assert_eq!((v.get(2), v.get(4)), (1, 1));

    println!("Ext^•(Δ(s0·0), Δ(0)) = {:?}", ext_delta_verma(&orbit("s0")?, &zero)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ext_koszul");
}
