// A truncation of the block of 0 computed inside a larger finite gl agrees
// with the one computed inside the smaller gl.

use oinf::trunc::idempotent_truncation_check;
use oinf::weights::{IdealSpec, IndexScheme, Weight};
use oinf::weyl::IndexWindow;

pub fn run_example() -> oinf::Result<()> {
    let zero = Weight::zero(IndexScheme::Nat);
    let k = IdealSpec::principal(zero.clone());
    for (inner, outer) in [((0, 1), (0, 2)), ((0, 2), (0, 3)), ((0, 1), (0, 3))] {
        let (inner, outer) = (IndexWindow::span(inner.0, inner.1), IndexWindow::span(outer.0, outer.1));
        let ok = idempotent_truncation_check(&k, &zero, inner, outer)?;
        println!("S{} ⊂ S{}: {ok}", inner.len, outer.len);
        assert!(ok);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("idempotent_truncation");
}
