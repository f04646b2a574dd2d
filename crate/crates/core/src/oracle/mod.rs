//! Small-rank ground truth computed from first principles.
//!
//! Everything here works inside one finite `gl_n` (weights of scheme
//! `FiniteA(n)`) with exact integer and rational arithmetic: Verma weight
//! spaces in a PBW basis, Shapovalov Gram matrices, singular vectors,
//! characters, and `n⁺`-cohomology from the Chevalley–Eilenberg complex.

mod cohom;
mod lie;

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

pub use cohom::{
    ce_ext2_trivial, cohomology_dim, DualVermaModule, SimpleModule, VermaModule, WeightModule,
};
pub use lie::{kostant_partition_count, Comb, Depth, Mono, RootSystem, Verma, DIM_LIMIT};

use crate::error::{Error, Result};
use crate::linalg::rank_int;
use crate::weights::{interval, IndexScheme, Weight};

/// Values of a character on finitely many weights.
pub type CharacterTable = BTreeMap<Weight, u64>;

/// Which module the cohomology is taken with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleKind {
    Verma,
    DualVerma,
    Simple,
}

fn check_rank(n: usize, weights: &[&Weight]) -> Result<()> {
    if n == 0 {
        return Err(Error::BadRank(0));
    }
    for w in weights {
        if w.scheme() != IndexScheme::FiniteA(n) {
            return Err(Error::SchemeMismatch(format!("fin{n}"), w.scheme().to_string()));
        }
    }
    Ok(())
}

/// Simple-root coordinates of `λ − ν`; some entry is negative or the total is
/// off unless `ν ≤ λ`.
pub fn depth(n: usize, nu: &Weight, lam: &Weight) -> Depth {
    let mut acc = 0;
    (0..n.saturating_sub(1) as i64)
        .map(|k| {
            acc += lam.shifted(k) - nu.shifted(k);
            acc
        })
        .collect()
}

fn below(n: usize, nu: &Weight, lam: &Weight) -> Option<Depth> {
    let total: i64 = (0..n as i64).map(|p| lam.shifted(p) - nu.shifted(p)).sum();
    let d = depth(n, nu, lam);
    (total == 0 && d.iter().all(|&c| c >= 0)).then_some(d)
}

/// `dim L(λ)_ν` as the rank of the Shapovalov form on `Δ(λ)_ν`.
pub fn shapovalov_rank(n: usize, lam: &Weight, nu: &Weight) -> Result<usize> {
    check_rank(n, &[lam, nu])?;
    let Some(gamma) = below(n, nu, lam) else {
        return Ok(0);
    };
    Ok(rank_int(&Verma::new(lam)?.gram(&gamma)?))
}

/// `ch L(λ)` on all weights `ν ≤ λ` of height at most `max_height`.
pub fn simple_character(n: usize, lam: &Weight, floor: &Weight) -> Result<CharacterTable> {
    check_rank(n, &[lam, floor])?;
    let mut verma = Verma::new(lam)?;
    let mut out = CharacterTable::new();
    for nu in interval(floor, lam)? {
        let gamma = depth(n, &nu, lam);
        out.insert(nu, rank_int(&verma.gram(&gamma)?) as u64);
    }
    Ok(out)
}

/// `ch Δ(λ)` on the interval `[floor, λ]`.
pub fn verma_character(n: usize, lam: &Weight, floor: &Weight) -> Result<CharacterTable> {
    check_rank(n, &[lam, floor])?;
    interval(floor, lam)?
        .into_iter()
        .map(|nu| {
            let c = kostant_partition_count(n, &depth(n, &nu, lam)) as u64;
            Ok((nu, c))
        })
        .collect()
}

fn height_guard(gamma: &[i64], depth_limit: usize) -> Result<()> {
    let h: i64 = gamma.iter().sum();
    let have = i64::try_from(depth_limit).unwrap_or(i64::MAX);
    if h > have {
        return Err(Error::WindowTooSmall { needed: h, have });
    }
    Ok(())
}

/// `[Δ(λ):L(μ)]` by solving `ch Δ(λ) = Σ_κ m_κ ch L(κ)` on `[μ, λ]`, top down.
/// `depth_limit` bounds the height of `λ − μ`.
pub fn verma_mult_oracle(n: usize, lam: &Weight, mu: &Weight, depth_limit: usize) -> Result<u64> {
    check_rank(n, &[lam, mu])?;
    let Some(gamma) = below(n, mu, lam) else {
        return Ok(0);
    };
    height_guard(&gamma, depth_limit)?;
    let mut weights = interval(mu, lam)?;
    // a linear extension of ≤: by height of λ − κ, ties lexicographic
    weights.sort_by_cached_key(|k| (depth(n, k, lam).iter().sum::<i64>(), k.clone()));
    let mut mult: Vec<(Weight, i64, CharacterTable)> = Vec::new();
    for kappa in &weights {
        let mut m = kostant_partition_count(n, &depth(n, kappa, lam)) as i64;
        for (_, mk, ch) in &mult {
            m -= mk * ch.get(kappa).copied().unwrap_or(0) as i64;
        }
        if m < 0 {
            return Err(Error::Parse(format!("negative multiplicity at {kappa}")));
        }
        if kappa == mu {
            return Ok(m as u64);
        }
        if m > 0 {
            mult.push((kappa.clone(), m, simple_character(n, kappa, mu)?));
        }
    }
    unreachable!("μ lies in its own interval")
}

/// `dim Hom(Δ(μ), Δ(λ))`: vectors of `Δ(λ)_μ` killed by every simple `e_i`.
pub fn singular_vector_dim(n: usize, mu: &Weight, lam: &Weight) -> Result<usize> {
    check_rank(n, &[lam, mu])?;
    let Some(gamma) = below(n, mu, lam) else {
        return Ok(0);
    };
    let mut verma = Verma::new(lam)?;
    let dim = verma.basis(&gamma)?.len();
    let mut stacked = Vec::new();
    for i in 0..n - 1 {
        stacked.extend(verma.matrix(i, i + 1, &gamma)?);
    }
    Ok(dim - rank_int(&stacked))
}

/// `dim H^i(n⁺, L(λ))_μ`, which equals `dim Ext^i(Δ(μ), L(λ))`.
pub fn nplus_cohomology(n: usize, lam: &Weight, mu: &Weight, degree: usize, depth_limit: usize) -> Result<usize> {
    nplus_cohomology_of(ModuleKind::Simple, n, lam, mu, degree, depth_limit)
}

/// `dim H^i(n⁺, M)_μ` for `M` one of `Δ(λ)`, `∇(λ)`, `L(λ)`.
///
/// Every weight space entering the complex at `μ` lies between `μ` and `λ`,
/// so the computation is admissible once the height of `λ − μ` is within
/// `depth_limit`; otherwise [`Error::WindowTooSmall`].
pub fn nplus_cohomology_of(
    kind: ModuleKind,
    n: usize,
    lam: &Weight,
    mu: &Weight,
    degree: usize,
    depth_limit: usize,
) -> Result<usize> {
    check_rank(n, &[lam, mu])?;
    let Some(gamma) = below(n, mu, lam) else {
        return Ok(0);
    };
    height_guard(&gamma, depth_limit)?;
    let verma = Verma::new(lam)?;
    let mut module: Box<dyn WeightModule> = match kind {
        ModuleKind::Verma => Box::new(VermaModule(verma)),
        ModuleKind::DualVerma => Box::new(DualVermaModule(verma)),
        ModuleKind::Simple => Box::new(SimpleModule::new(verma)),
    };
    cohomology_dim(module.as_mut(), &gamma, degree)
}

/// Converts a character value to `u64`.
pub fn to_u64(v: &num_bigint::BigInt) -> Result<u64> {
    v.to_u64().ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(v: &[i64]) -> Weight {
        Weight::finite(v).unwrap()
    }

    #[test]
    fn shapovalov_examples() {
        // gl₂: 0 = (0,−1), s₀·0 = (−1,0)
        assert_eq!(shapovalov_rank(2, &fin(&[0, -1]), &fin(&[-1, 0])).unwrap(), 0);
        // λ = ε₀, ν = ε₁
        assert_eq!(shapovalov_rank(2, &fin(&[1, -1]), &fin(&[0, 0])).unwrap(), 1);
        let anti = fin(&[-1, 0]);
        for k in 0..4 {
            let nu = fin(&[-1 - k, k]);
            assert_eq!(shapovalov_rank(2, &anti, &nu).unwrap(), 1);
        }
    }

    #[test]
    fn mult_and_singular_vectors_gl2() {
        let (zero, s0) = (fin(&[0, -1]), fin(&[-1, 0]));
        assert_eq!(verma_mult_oracle(2, &zero, &s0, 4).unwrap(), 1);
        assert_eq!(verma_mult_oracle(2, &zero, &zero, 4).unwrap(), 1);
        assert_eq!(singular_vector_dim(2, &s0, &zero).unwrap(), 1);
        assert_eq!(singular_vector_dim(2, &zero, &zero).unwrap(), 1);
        assert_eq!(singular_vector_dim(2, &fin(&[-2, 1]), &zero).unwrap(), 0);
    }

    #[test]
    fn cohomology_gl2() {
        let (zero, s0) = (fin(&[0, -1]), fin(&[-1, 0]));
        assert_eq!(nplus_cohomology(2, &zero, &s0, 1, 4).unwrap(), 1);
        assert_eq!(nplus_cohomology(2, &zero, &zero, 0, 4).unwrap(), 1);
        assert_eq!(nplus_cohomology(2, &zero, &s0, 0, 4).unwrap(), 0);
        assert!(matches!(
            nplus_cohomology(2, &zero, &s0, 1, 0),
            Err(Error::WindowTooSmall { needed: 1, have: 0 })
        ));
    }

    #[test]
    fn gl3_longest_element() {
        let zero = fin(&[0, -1, -2]);
        let w0 = fin(&[-2, -1, 0]);
        assert_eq!(verma_mult_oracle(3, &zero, &w0, 10).unwrap(), 1);
    }
}
