// Kazhdan–Lusztig polynomials by the fast engine, checked against the Hecke
// algebra construction.

use oinf::hecke::{kl_poly, kl_poly_slow, mu_coeff, Perm};

pub fn run_example() -> oinf::Result<()> {
    let e: Perm = "[1,2,3,4]".parse()?;
    let w: Perm = "[3,4,1,2]".parse()?;
    let p = kl_poly(&e, &w)?;
    println!("P_(e,3412) = {p}");
    assert_eq!(p.to_string(), "1 + q");
    assert_eq!(p, kl_poly_slow(&e, &w)?);

    let w4: Perm = "[4,2,3,1]".parse()?;
    let x: Perm = "[2,1,3,4]".parse()?;
    println!("P_(2134,4231) = {}", kl_poly(&x, &w4)?);

    let mut nontrivial = 0;
    for x in Perm::all(4) {
        for w in Perm::all(4) {
            let p = kl_poly(&x, &w)?;
            assert_eq!(p, kl_poly_slow(&x, &w)?);
            if p.degree().unwrap_or(0) > 0 {
                nontrivial += 1;
            }
        }
    }
    println!("non-constant P_(x,w) in S4: {nontrivial}");
    let s1: Perm = "[2,1,3]".parse()?;
    let w0: Perm = "[3,2,1]".parse()?;
    assert_eq!(mu_coeff(&s1, &w0)?, 0u32.into());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("kl_polynomials");
}
