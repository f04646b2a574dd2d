//! Truncated blocks: standard flags of projectives and Cartan matrices.

use std::collections::BTreeMap;

use serde_json::json;

use crate::error::{Error, Result};
use crate::mult::{restrict_to_window, verma_mult};
use crate::weights::{ideal_slice, IdealSpec, Weight};
use crate::weyl::{classify, same_block, IndexWindow};

/// Multiplicities of a Δ- or ∇-flag, indexed by weight.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FlagMultiset {
    entries: BTreeMap<Weight, u64>,
}

impl FlagMultiset {
    pub fn new() -> FlagMultiset {
        FlagMultiset::default()
    }

    pub fn insert(&mut self, w: Weight, m: u64) {
        if m > 0 {
            self.entries.insert(w, m);
        }
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> =
            self.entries.iter().map(|(w, m)| (w.to_string(), json!(m))).collect();
        serde_json::Value::Object(map)
    }
}

fn require_regular(w: &Weight) -> Result<()> {
    if !classify(w)?.regular {
        return Err(Error::NonIntegralOrSingular(w.to_string()));
    }
    Ok(())
}

/// `ν ↦ (P_K(μ):Δ(ν)) = [Δ(ν):L(μ)]` over `K ∩ [[μ]]`.
pub fn projective_flag(ideal: &IdealSpec, mu: &Weight) -> Result<FlagMultiset> {
    if !ideal.contains(mu)? {
        return Err(Error::NotInIdeal(mu.to_string()));
    }
    require_regular(mu)?;
    let mut out = FlagMultiset::new();
    for nu in ideal_slice(ideal, mu, mu)? {
        out.insert(nu.clone(), verma_mult(&nu, mu)?);
    }
    Ok(out)
}

/// `dim Hom(P_K(μ), P_K(ν))` over an ordered slice of one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    pub weights: Vec<Weight>,
    pub matrix: Vec<Vec<u64>>,
}

impl CartanMatrix {
    pub fn is_symmetric(&self) -> bool {
        let m = &self.matrix;
        (0..m.len()).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
    }

    pub fn diagonal(&self) -> Vec<u64> {
        (0..self.matrix.len()).map(|i| self.matrix[i][i]).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let weights: Vec<String> = self.weights.iter().map(ToString::to_string).collect();
        json!({ "weights": weights, "matrix": self.matrix })
    }

    /// Header row of weights, then one row per weight.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("weight");
        for w in &self.weights {
            out.push('\t');
            out.push_str(&w.to_string());
        }
        out.push('\n');
        for (w, row) in self.weights.iter().zip(&self.matrix) {
            out.push_str(&w.to_string());
            for v in row {
                out.push('\t');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Entries `Σ_{κ ∈ K} [Δ(κ):L(μ)]·[Δ(κ):L(ν)]` by BGG reciprocity.
pub fn cartan_matrix(ideal: &IdealSpec, slice: &[Weight]) -> Result<CartanMatrix> {
    for w in slice {
        if !ideal.contains(w)? {
            return Err(Error::NotInIdeal(w.to_string()));
        }
        require_regular(w)?;
        if !same_block(w, &slice[0]) {
            return Err(Error::DifferentBlocks(slice[0].to_string(), w.to_string()));
        }
    }
    // flags[i][κ] = [Δ(κ):L(slice[i])]
    let flags: Vec<FlagMultiset> = slice.iter().map(|mu| projective_flag(ideal, mu)).collect::<Result<_>>()?;
    let n = slice.len();
    let mut matrix = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = flags[i].iter().map(|(k, m)| m * flags[j].get(k)).sum();
            matrix[i][j] = v;
            matrix[j][i] = v;
        }
    }
    Ok(CartanMatrix { weights: slice.to_vec(), matrix })
}

/// The truncation of `K` to the finite `gl` of `window`: generators that agree
/// with `block` outside the window, restricted to it. `None` if there are none.
fn finite_ideal(ideal: &IdealSpec, block: &Weight, window: IndexWindow) -> Result<Option<IdealSpec>> {
    let mut gens = Vec::new();
    for g in ideal.generators() {
        if g.same_tails(block) && g.diff_support(block).iter().all(|&p| window.contains(p)) {
            gens.push(restrict_to_window(g, window)?);
        }
    }
    if gens.is_empty() {
        return Ok(None);
    }
    Ok(Some(IdealSpec::new(gens)?))
}

/// `K_n ∩ [[block]]_n` for the finite `gl` of `window`, as weights of the
/// original scheme.
pub fn window_slice(ideal: &IdealSpec, block: &Weight, window: IndexWindow) -> Result<Vec<Weight>> {
    let Some(fin) = finite_ideal(ideal, block, window)? else {
        return Ok(Vec::new());
    };
    let local = restrict_to_window(block, window)?;
    let mut sorted: Vec<i64> = window.positions().map(|p| block.shifted(p)).collect();
    sorted.sort_unstable();
    let floor = Weight::finite(&sorted)?;
    ideal_slice(&fin, &local, &floor)?
        .into_iter()
        .map(|k| {
            let vals = window.positions().zip(0..).map(|(p, i)| (p, k.shifted(i)));
            block.with_values(vals.collect::<Vec<_>>())
        })
        .collect()
}

fn finite_cartan(ideal: &IdealSpec, block: &Weight, window: IndexWindow, slice: &[Weight]) -> Result<CartanMatrix> {
    let fin = finite_ideal(ideal, block, window)?.ok_or_else(|| Error::NotInIdeal(block.to_string()))?;
    let local: Vec<Weight> = slice.iter().map(|w| restrict_to_window(w, window)).collect::<Result<_>>()?;
    cartan_matrix(&fin, &local)
}

/// Compares the Cartan matrix of `K_inner ∩ [[block]]` computed in the `gl` of
/// `outer` (the corner `ε A ε`) with the one computed in the `gl` of `inner`.
pub fn idempotent_truncation_check(
    ideal: &IdealSpec,
    block: &Weight,
    inner: IndexWindow,
    outer: IndexWindow,
) -> Result<bool> {
    if !outer.contains_window(&inner) || inner.is_empty() {
        return Err(Error::InvalidWindow(format!("{inner} is not a nonempty subwindow of {outer}")));
    }
    if !outer.fits(block.scheme()) {
        return Err(Error::InvalidWindow(format!("{outer} not inside {}", block.scheme())));
    }
    require_regular(block)?;
    let slice = window_slice(ideal, block, inner)?;
    if slice.is_empty() {
        return Err(Error::NotInIdeal(block.to_string()));
    }
    let big = finite_cartan(ideal, block, outer, &slice)?;
    let small = finite_cartan(ideal, block, inner, &slice)?;
    Ok(big.matrix == small.matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::IndexScheme;
    use crate::weyl::{dot_zero, WeylElt};

    fn w(word: &str) -> Weight {
        dot_zero(&WeylElt::parse_word(IndexScheme::Nat, word).unwrap())
    }

    #[test]
    fn projective_flag_examples() {
        let k = IdealSpec::principal(w("e"));
        let p0 = projective_flag(&k, &w("e")).unwrap();
        assert_eq!(p0.iter().collect::<Vec<_>>(), vec![(&w("e"), 1)]);
        let p1 = projective_flag(&k, &w("s0")).unwrap();
        assert_eq!((p1.len(), p1.get(&w("e")), p1.get(&w("s0"))), (2, 1, 1));
        let k1 = IdealSpec::principal(w("s0"));
        let p = projective_flag(&k1, &w("s0")).unwrap();
        assert_eq!(p.iter().collect::<Vec<_>>(), vec![(&w("s0"), 1)]);
        assert!(matches!(projective_flag(&k1, &w("e")), Err(Error::NotInIdeal(_))));
    }

    #[test]
    fn cartan_examples() {
        let k = IdealSpec::principal(w("e"));
        let c = cartan_matrix(&k, &[w("e"), w("s0")]).unwrap();
        assert_eq!(c.matrix, vec![vec![1, 1], vec![1, 2]]);
        let c = cartan_matrix(&IdealSpec::principal(w("s0")), &[w("s0")]).unwrap();
        assert_eq!(c.matrix, vec![vec![1]]);
        assert!(c.to_tsv().starts_with("weight\t"));
    }

    #[test]
    fn truncation_examples() {
        let k = IdealSpec::principal(w("e"));
        let s2 = IndexWindow::span(0, 1);
        let s3 = IndexWindow::span(0, 2);
        assert!(idempotent_truncation_check(&k, &w("e"), s2, s3).unwrap());
        assert!(idempotent_truncation_check(&k, &w("e"), s3, s3).unwrap());
        assert_eq!(window_slice(&k, &w("e"), s3).unwrap().len(), 6);
    }
}
