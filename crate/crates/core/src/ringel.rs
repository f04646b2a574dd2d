//! Ringel duality at the level of weights and multiplicities.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::mult::verma_mult;
use crate::trunc::FlagMultiset;
use crate::weights::{interval, leq, IndexScheme, Weight};
use crate::weyl::{classify, same_block};

/// A finitely generated coideal `{κ : κ ≥ g for some generator g}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoidealSpec {
    generators: Vec<Weight>,
}

impl CoidealSpec {
    pub fn new(generators: Vec<Weight>) -> Result<CoidealSpec> {
        let first = generators
            .first()
            .ok_or_else(|| Error::Parse("a coideal needs at least one generator".into()))?;
        for g in &generators[1..] {
            if g.scheme() != first.scheme() {
                return Err(Error::SchemeMismatch(first.scheme().to_string(), g.scheme().to_string()));
            }
        }
        Ok(CoidealSpec { generators })
    }

    pub fn principal(g: Weight) -> CoidealSpec {
        CoidealSpec { generators: vec![g] }
    }

    pub fn generators(&self) -> &[Weight] {
        &self.generators
    }

    pub fn contains(&self, kappa: &Weight) -> Result<bool> {
        for g in &self.generators {
            if leq(g, kappa)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// `−λ − 2ρ`: the shifted sequence negated, tails included.
pub fn ringel_weight(lam: &Weight) -> Weight {
    let negated = match lam.scheme() {
        IndexScheme::FiniteA(n) => {
            let vals: Vec<i64> = (0..n as i64).map(|p| -lam.shifted(p)).collect();
            Weight::finite(&vals)
        }
        scheme => Weight::new(scheme, lam.tails().negated(), lam.window().iter().map(|(&p, &v)| (p, -v)).collect()),
    };
    negated.expect("negation preserves well-formedness")
}

/// `κ ↦ (T_C(ν):∇(κ)) = [Δ(−κ−2ρ):L(−ν−2ρ)]` over `κ ∈ C ∩ [[ν]]` with
/// `floor ≤ κ ≤ ν`.
pub fn tilting_flag(coideal: &CoidealSpec, nu: &Weight, floor: &Weight) -> Result<FlagMultiset> {
    if !coideal.contains(nu)? {
        return Err(Error::NotInCoideal(nu.to_string()));
    }
    if !classify(nu)?.regular {
        return Err(Error::NonIntegralOrSingular(nu.to_string()));
    }
    let mut candidates = BTreeSet::new();
    for g in coideal.generators() {
        for k in interval(g, nu)? {
            if same_block(&k, nu) && leq(floor, &k)? {
                candidates.insert(k);
            }
        }
    }
    let target = ringel_weight(nu);
    let mut out = FlagMultiset::new();
    for k in candidates {
        out.insert(k.clone(), verma_mult(&ringel_weight(&k), &target)?);
    }
    Ok(out)
}

fn bracket(x: &[Vec<i64>], y: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = x.len();
    let mul = |a: &[Vec<i64>], b: &[Vec<i64>], i: usize, j: usize| (0..n).map(|k| a[i][k] * b[k][j]).sum::<i64>();
    (0..n).map(|i| (0..n).map(|j| mul(x, y, i, j) - mul(y, x, i, j)).collect()).collect()
}

fn unit(n: usize, a: usize, b: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    m[a][b] = 1;
    m
}

/// Checks `γ([e_i, f_j]) = tr(ad e_i ∘ ad f_j : h → h)` for all simple
/// Chevalley pairs of `gl_n`, where `character[i] = γ(E_ii − E_{i+1,i+1})`
/// (missing entries count as 0).
pub fn semiinfinite_check(n: usize, character: &BTreeMap<usize, i64>) -> Result<bool> {
    if n < 2 {
        return Err(Error::BadRank(n));
    }
    let gamma = |i: usize| character.get(&i).copied().unwrap_or(0);
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            let (e, f) = (unit(n, i, i + 1), unit(n, j + 1, j));
            let trace: i64 = (0..n)
                .map(|k| {
                    let h = unit(n, k, k);
                    let image = bracket(&e, &bracket(&f, &h));
                    image[k][k]
                })
                .sum();
            let ef = bracket(&e, &f);
            if (0..n).any(|a| (0..n).any(|b| a != b && ef[a][b] != 0)) {
                return Ok(false);
            }
            // diagonal of trace zero = Σ_k c_k H_k with c_k the partial sums
            let mut c = 0;
            let mut value = 0;
            for k in 0..n - 1 {
                c += ef[k][k];
                value += c * gamma(k);
            }
            if value != trace {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `2ρ` on the simple coroots of `gl_n`.
pub fn two_rho(n: usize) -> BTreeMap<usize, i64> {
    (0..n.saturating_sub(1)).map(|i| (i, 2)).collect()
}
