//! Multiplicities, Hom and Ext dimensions by reduction to a finite window.
//!
//! Two weights of one block differ only on a finite window. On that window
//! write `λ = w·b` and `μ = x·b`, where `b` lists the window values of `λ` in
//! increasing order. Then
//!
//! * `[Δ(λ):L(μ)] = P_{w₀w, w₀x}(1)`, and
//! * `dim Ext^{ℓ(w)−ℓ(x)−2i}(Δ(μ), L(λ))` is the `q^i` coefficient of `P_{x,w}`.
//!
//! Both conventions are pinned down by the `gl₄` regression tests against the
//! oracle (the pair `e < [3,4,1,2]` separates them).

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{kl_poly, Perm};
use crate::oracle::{self, ModuleKind};
use crate::weights::{IndexScheme, Weight};
use crate::weyl::{arrangement_perm, bruhat_leq, classify, min_rank, same_block, IndexWindow};

/// A pair of weights of one block, rewritten inside a finite `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub window: IndexWindow,
    /// `λ = w·b`.
    pub w: Perm,
    /// `μ = x·b`.
    pub x: Perm,
}

fn require_regular(lam: &Weight) -> Result<()> {
    if classify(lam)?.regular {
        Ok(())
    } else {
        Err(Error::NonIntegralOrSingular(lam.to_string()))
    }
}

/// Grows `window` by up to `margin` positions, stopping at the edge of a
/// finite scheme.
fn widen(window: IndexWindow, scheme: IndexScheme, margin: usize) -> IndexWindow {
    let mut w = window;
    if w.is_empty() {
        w = IndexWindow::new(0, 1);
    }
    for _ in 0..margin {
        match w.enlarged(scheme, 1) {
            Ok(bigger) => w = bigger,
            Err(_) => break,
        }
    }
    w
}

/// Reduces `(λ, μ)` to permutations on `min_rank(λ, μ)` widened by `margin`.
/// `None` when the weights lie in different blocks.
pub fn reduce(lam: &Weight, mu: &Weight, margin: usize) -> Result<Option<Reduction>> {
    lam.check_scheme(mu)?;
    require_regular(lam)?;
    require_regular(mu)?;
    if !same_block(lam, mu) {
        return Ok(None);
    }
    let window = widen(min_rank(lam, mu)?, lam.scheme(), margin);
    let w = arrangement_perm(lam, window)?;
    let x = arrangement_perm(mu, window)?;
    Ok(Some(Reduction { window, w, x }))
}

/// `[Δ(λ):L(μ)]`.
pub fn verma_mult(lam: &Weight, mu: &Weight) -> Result<u64> {
    verma_mult_with_margin(lam, mu, 0)
}

pub fn verma_mult_with_margin(lam: &Weight, mu: &Weight, margin: usize) -> Result<u64> {
    let Some(r) = reduce(lam, mu, margin)? else {
        return Ok(0);
    };
    let w0 = Perm::longest(r.w.n());
    let p = kl_poly(&w0.compose(&r.w)?, &w0.compose(&r.x)?)?;
    p.eval_at_one().to_u64().ok_or(Error::Overflow)
}

/// `dim Hom(Δ(μ), Δ(λ))`: 1 if `μ ↑ λ`, else 0.
pub fn hom_dim_verma(mu: &Weight, lam: &Weight) -> Result<u64> {
    mu.check_scheme(lam)?;
    require_regular(mu)?;
    require_regular(lam)?;
    if !same_block(mu, lam) {
        return Ok(0);
    }
    Ok(u64::from(bruhat_leq(mu, lam)?))
}

/// `dim Hom(Δ(λ), ∇(μ))`.
pub fn hom_delta_nabla(lam: &Weight, mu: &Weight) -> u64 {
    u64::from(lam == mu)
}

/// `i ↦ dim Ext^i(Δ(μ), L(λ))`, together with `ℓ(x,w) = ℓ(w) − ℓ(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ExtVector {
    pub dims: BTreeMap<usize, u64>,
    pub length_gap: i64,
}

impl ExtVector {
    pub fn get(&self, i: usize) -> u64 {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// `Σ_i dim Ext^i`, which is `P_{x,w}(1)`.
    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    /// Every supported degree has the parity of `ℓ(x,w)`.
    pub fn respects_parity(&self) -> bool {
        self.dims.keys().all(|&i| (i as i64 - self.length_gap) % 2 == 0)
    }
}

pub fn ext_delta_simple(mu: &Weight, lam: &Weight) -> Result<ExtVector> {
    ext_delta_simple_with_margin(mu, lam, 0)
}

pub fn ext_delta_simple_with_margin(mu: &Weight, lam: &Weight, margin: usize) -> Result<ExtVector> {
    let r = reduce(lam, mu, margin)?.ok_or_else(|| Error::DifferentBlocks(mu.to_string(), lam.to_string()))?;
    let gap = r.w.length() as i64 - r.x.length() as i64;
    let mut out = ExtVector { dims: BTreeMap::new(), length_gap: gap };
    let p = kl_poly(&r.x, &r.w)?;
    for (i, c) in p.coeffs_u64()?.into_iter().enumerate() {
        if c > 0 {
            out.dims.insert((gap - 2 * i as i64) as usize, c);
        }
    }
    Ok(out)
}

/// `(i, j) ↦ dim Ext^i(Δ(μ), L(λ)⟨j⟩)` in the graded lift.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct GradedExtTable {
    pub cells: BTreeMap<(usize, usize), u64>,
}

impl GradedExtTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.cells.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_diagonal(&self) -> bool {
        self.cells.keys().all(|(i, j)| i == j)
    }
}

pub fn graded_ext_table(mu: &Weight, lam: &Weight) -> Result<GradedExtTable> {
    graded_ext_table_with_margin(mu, lam, 0)
}

pub fn graded_ext_table_with_margin(mu: &Weight, lam: &Weight, margin: usize) -> Result<GradedExtTable> {
    let v = ext_delta_simple_with_margin(mu, lam, margin)?;
    Ok(GradedExtTable { cells: v.dims.into_iter().map(|(i, d)| ((i, i), d)).collect() })
}

/// The `gl_n` weight with the same shifted values as `λ` on `window`.
pub fn restrict_to_window(lam: &Weight, window: IndexWindow) -> Result<Weight> {
    Weight::finite(&window.positions().map(|p| lam.shifted(p)).collect::<Vec<_>>())
}

/// Largest reduction rank for which Verma–Verma Ext is computed.
pub const VERMA_EXT_MAX_RANK: usize = 3;

/// `i ↦ dim Ext^i(Δ(μ), Δ(λ))`, computed as `n⁺`-cohomology of `Δ(λ)` at
/// weight `μ` inside the reduction window (rank at most 3).
pub fn ext_delta_verma(mu: &Weight, lam: &Weight) -> Result<BTreeMap<usize, u64>> {
    let r = reduce(lam, mu, 0)?.ok_or_else(|| Error::DifferentBlocks(mu.to_string(), lam.to_string()))?;
    let n = r.window.len;
    if n > VERMA_EXT_MAX_RANK {
        return Err(Error::BadRank(n));
    }
    let (l, m) = (restrict_to_window(lam, r.window)?, restrict_to_window(mu, r.window)?);
    let mut out = BTreeMap::new();
    for i in 0..=n * (n - 1) / 2 {
        let d = oracle::nplus_cohomology_of(ModuleKind::Verma, n, &l, &m, i, usize::MAX)?;
        if d > 0 {
            out.insert(i, d as u64);
        }
    }
    Ok(out)
}
