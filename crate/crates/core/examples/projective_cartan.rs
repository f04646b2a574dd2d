// Standard flags of truncated projectives and the Cartan matrix of a slice.

use oinf::trunc::{cartan_matrix, projective_flag, window_slice};
use oinf::weights::{IdealSpec, IndexScheme, Weight};
use oinf::weyl::IndexWindow;

pub fn run_example() -> oinf::Result<()> {
    let zero = Weight::zero(IndexScheme::Nat);
    let k = IdealSpec::principal(zero.clone());
    let slice = window_slice(&k, &zero, IndexWindow::span(0, 2))?;
    for mu in slice.iter().take(3) {
        let flag = projective_flag(&k, mu)?;
        println!("P({mu}) has a Δ-flag with {} distinct factors", flag.len());
    }
    let c = cartan_matrix(&k, &slice)?;
    print!("{}", c.to_tsv());
    assert!(c.is_symmetric());
    let mut diag = c.diagonal();
    diag.sort_unstable();
    assert_eq!(diag, vec![1, 2, 2, 4, 4, 6]);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("projective_cartan");
}
