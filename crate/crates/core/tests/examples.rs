// Runs every program in examples/ as a test.

#[allow(dead_code)]
mod borel_distinguish {
    include!("../examples/borel_distinguish.rs");
}

#[allow(dead_code)]
mod bruhat_covers {
    include!("../examples/bruhat_covers.rs");
}

#[allow(dead_code)]
mod cli_session {
    include!("../examples/cli_session.rs");
}

#[allow(dead_code)]
mod dot_action_blocks {
    include!("../examples/dot_action_blocks.rs");
}

#[allow(dead_code)]
mod ext_koszul {
    include!("../examples/ext_koszul.rs");
}

#[allow(dead_code)]
mod idempotent_truncation {
    include!("../examples/idempotent_truncation.rs");
}

#[allow(dead_code)]
mod kl_cache {
    include!("../examples/kl_cache.rs");
}

#[allow(dead_code)]
mod kl_polynomials {
    include!("../examples/kl_polynomials.rs");
}

#[allow(dead_code)]
mod oracle_crosscheck {
    include!("../examples/oracle_crosscheck.rs");
}

#[allow(dead_code)]
mod projective_cartan {
    include!("../examples/projective_cartan.rs");
}

#[allow(dead_code)]
mod ringel_tilting {
    include!("../examples/ringel_tilting.rs");
}

#[allow(dead_code)]
mod semiinfinite {
    include!("../examples/semiinfinite.rs");
}

#[allow(dead_code)]
mod verma_multiplicities {
    include!("../examples/verma_multiplicities.rs");
}

#[allow(dead_code)]
mod weight_order {
    include!("../examples/weight_order.rs");
}


#[test]
fn borel_distinguish_runs() {
    borel_distinguish::run_example().unwrap();
}

#[test]
fn bruhat_covers_runs() {
    bruhat_covers::run_example().unwrap();
}

#[test]
fn cli_session_runs() {
    cli_session::run_example().unwrap();
}

#[test]
fn dot_action_blocks_runs() {
    dot_action_blocks::run_example().unwrap();
}

#[test]
fn ext_koszul_runs() {
    ext_koszul::run_example().unwrap();
}

#[test]
fn idempotent_truncation_runs() {
    idempotent_truncation::run_example().unwrap();
}

#[test]
fn kl_cache_runs() {
    kl_cache::run_example().unwrap();
}

#[test]
fn kl_polynomials_runs() {
    kl_polynomials::run_example().unwrap();
}

#[test]
fn oracle_crosscheck_runs() {
    oracle_crosscheck::run_example().unwrap();
}

#[test]
fn projective_cartan_runs() {
    projective_cartan::run_example().unwrap();
}

#[test]
fn ringel_tilting_runs() {
    ringel_tilting::run_example().unwrap();
}

#[test]
fn semiinfinite_runs() {
    semiinfinite::run_example().unwrap();
}

#[test]
fn verma_multiplicities_runs() {
    verma_multiplicities::run_example().unwrap();
}

#[test]
fn weight_order_runs() {
    weight_order::run_example().unwrap();
}
