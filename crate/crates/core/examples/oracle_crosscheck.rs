// First-principles computations in gl₃ compared with the KL route.

use oinf::hecke::Perm;
use oinf::mult::{ext_delta_simple, hom_dim_verma, verma_mult};
use oinf::oracle::{ce_ext2_trivial, nplus_cohomology, shapovalov_rank, singular_vector_dim, verma_mult_oracle};
use oinf::weights::Weight;

pub fn run_example() -> oinf::Result<()> {
    let block: Vec<Weight> = Perm::all(3)
        .iter()
        .map(|p| Weight::finite(&p.one_line().iter().map(|&v| -(v as i64)).collect::<Vec<_>>()))
        .collect::<oinf::Result<_>>()?;
    let mut checked = 0;
    for lam in &block {
        for mu in &block {
            assert_eq!(verma_mult_oracle(3, lam, mu, 16)?, verma_mult(lam, mu)?);
            assert_eq!(singular_vector_dim(3, mu, lam)? as u64, hom_dim_verma(mu, lam)?);
            let ext = ext_delta_simple(mu, lam)?;
            for i in 0..=3 {
                assert_eq!(nplus_cohomology(3, lam, mu, i, 16)? as u64, ext.get(i));
            }
            checked += 1;
        }
    }
    println!("gl3 block of 0: {checked} ordered pairs agree");
    let zero = &block[0];
    println!("dim L(0)_(s0·0) = {}", shapovalov_rank(3, zero, &block[2])?);
    println!("Ext²(k,k) weight-zero kernel, n = 2..5: {:?}",
        (2..=5).map(ce_ext2_trivial).collect::<oinf::Result<Vec<_>>>()?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("oracle_crosscheck");
}
