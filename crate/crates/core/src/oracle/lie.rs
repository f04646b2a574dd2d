//! `gl_n` in matrix units, PBW monomials of `U(n⁻)` and Verma module actions.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::weights::{IndexScheme, Weight};

/// Simple-root coordinates of `λ − ν`.
pub type Depth = Vec<i64>;

/// Sorted multiset of positive-root indices; `[r₁, …, r_k]` stands for
/// `f_{r₁} ⋯ f_{r_k} v_λ`.
pub type Mono = Vec<u8>;

/// Linear combination of PBW monomials.
pub type Comb = BTreeMap<Mono, BigInt>;

/// Positive roots `ε_a − ε_b` (`a < b`) of `gl_n`, ordered by height and then
/// by `a`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    n: usize,
    roots: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), u8>,
}

impl RootSystem {
    pub fn new(n: usize) -> RootSystem {
        let mut roots: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        roots.sort_by_key(|&(a, b)| (b - a, a));
        let index = roots.iter().enumerate().map(|(i, &r)| (r, i as u8)).collect();
        RootSystem { n, roots, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, r: usize) -> (usize, usize) {
        self.roots[r]
    }

    pub fn index_of(&self, a: usize, b: usize) -> usize {
        self.index[&(a.min(b), a.max(b))] as usize
    }

    /// Simple-root coordinates of root `r`.
    pub fn coords(&self, r: usize) -> Depth {
        let (a, b) = self.roots[r];
        (0..self.n.saturating_sub(1)).map(|k| i64::from(a <= k && k < b)).collect()
    }

    pub fn simple(&self, i: usize) -> usize {
        self.index_of(i, i + 1)
    }

    /// PBW monomials of total depth `gamma`, i.e. a basis of `U(n⁻)_{−γ}`.
    pub fn monomials(&self, gamma: &[i64]) -> Vec<Mono> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut rest = gamma.to_vec();
        self.fill(0, &mut rest, &mut cur, &mut out);
        out
    }

    fn fill(&self, from: usize, rest: &mut Depth, cur: &mut Mono, out: &mut Vec<Mono>) {
        if rest.iter().all(|&c| c == 0) {
            out.push(cur.clone());
            return;
        }
        for r in from..self.roots.len() {
            let (a, b) = self.roots[r];
            if (a..b).any(|k| rest[k] == 0) {
                continue;
            }
            (a..b).for_each(|k| rest[k] -= 1);
            cur.push(r as u8);
            self.fill(r, rest, cur, out);
            cur.pop();
            (a..b).for_each(|k| rest[k] += 1);
        }
    }
}

/// Kostant partition function: the number of ways to write `gamma` (in
/// simple-root coordinates) as an ℕ-combination of positive roots.
pub fn kostant_partition_count(n: usize, gamma: &[i64]) -> usize {
    if gamma.iter().any(|&c| c < 0) {
        return 0;
    }
    RootSystem::new(n).monomials(gamma).len()
}

fn add_into(acc: &mut Comb, comb: &Comb, scale: &BigInt) {
    for (m, c) in comb {
        let slot = acc.entry(m.clone()).or_insert_with(BigInt::zero);
        *slot += c * scale;
        if slot.is_zero() {
            acc.remove(m);
        }
    }
}

/// Largest weight space the oracle is willing to handle.
pub const DIM_LIMIT: usize = 400;

/// The Verma module `Δ(λ)` of `gl_n` in the PBW basis.
pub struct Verma {
    roots: RootSystem,
    lambda: Vec<i64>,
    memo: HashMap<(u8, u8, Mono), Comb>,
    bases: HashMap<Depth, Vec<Mono>>,
}

impl Verma {
    pub fn new(lam: &Weight) -> Result<Verma> {
        let IndexScheme::FiniteA(n) = lam.scheme() else {
            return Err(Error::SchemeMismatch("finite".into(), lam.scheme().to_string()));
        };
        let lambda = (0..n as i64).map(|p| lam.lambda(p)).collect();
        Ok(Verma { roots: RootSystem::new(n), lambda, memo: HashMap::new(), bases: HashMap::new() })
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    /// The monomial basis of `Δ(λ)_{λ−γ}`.
    pub fn basis(&mut self, gamma: &[i64]) -> Result<&[Mono]> {
        if !self.bases.contains_key(gamma) {
            let b = if gamma.iter().any(|&c| c < 0) { Vec::new() } else { self.roots.monomials(gamma) };
            if b.len() > DIM_LIMIT {
                return Err(Error::DepthTooLarge { dim: b.len(), limit: DIM_LIMIT });
            }
            self.bases.insert(gamma.to_vec(), b);
        }
        Ok(&self.bases[gamma])
    }

    /// `E_{ab} · m`, straightened into PBW form.
    pub fn apply(&mut self, a: usize, b: usize, m: &[u8]) -> Comb {
        let key = (a as u8, b as u8, m.to_vec());
        if let Some(c) = self.memo.get(&key) {
            return c.clone();
        }
        let out = self.apply_uncached(a, b, m);
        self.memo.insert(key, out.clone());
        out
    }

    fn apply_uncached(&mut self, a: usize, b: usize, m: &[u8]) -> Comb {
        let mut out = Comb::new();
        let Some((&first, rest)) = m.split_first() else {
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Equal => {
                    if self.lambda[a] != 0 {
                        out.insert(Vec::new(), BigInt::from(self.lambda[a]));
                    }
                }
                std::cmp::Ordering::Greater => {
                    out.insert(vec![self.roots.index_of(b, a) as u8], BigInt::from(1));
                }
            }
            return out;
        };
        if a > b && self.roots.index_of(b, a) as u8 <= first {
            let mut mono = Vec::with_capacity(m.len() + 1);
            mono.push(self.roots.index_of(b, a) as u8);
            mono.extend_from_slice(m);
            out.insert(mono, BigInt::from(1));
            return out;
        }
        // X f rest = f (X rest) + [X, f] rest, with f = E_{cd}
        let (d, c) = self.roots.root(first as usize);
        for (m2, k) in self.apply(a, b, rest) {
            let moved = self.apply(c, d, &m2);
            add_into(&mut out, &moved, &k);
        }
        // [E_ab, E_cd] = δ_bc E_ad − δ_da E_cb
        if b == c {
            let t = self.apply(a, d, rest);
            add_into(&mut out, &t, &BigInt::from(1));
        }
        if d == a {
            let t = self.apply(c, b, rest);
            add_into(&mut out, &t, &BigInt::from(-1));
        }
        out
    }

    /// Matrix of `E_{ab}` from depth `gamma` to depth `gamma − (ε_a − ε_b)`,
    /// rows indexed by the target basis.
    pub fn matrix(&mut self, a: usize, b: usize, gamma: &[i64]) -> Result<IntMatrix> {
        let mut target = gamma.to_vec();
        let (lo, hi, sign) = if a < b { (a, b, -1) } else { (b, a, 1) };
        (lo..hi).for_each(|k| target[k] += sign);
        let src = self.basis(gamma)?.to_vec();
        let dst = self.basis(&target)?.to_vec();
        let pos: HashMap<&Mono, usize> = dst.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut mat = vec![vec![BigInt::zero(); src.len()]; dst.len()];
        for (j, m) in src.iter().enumerate() {
            for (res, c) in self.apply(a, b, m) {
                mat[pos[&res]][j] = c;
            }
        }
        Ok(mat)
    }

    /// Gram matrix of the Shapovalov form on `Δ(λ)_{λ−γ}`, using the
    /// anti-involution `E_{ab} ↦ E_{ba}`.
    pub fn gram(&mut self, gamma: &[i64]) -> Result<IntMatrix> {
        let basis = self.basis(gamma)?.to_vec();
        let k = basis.len();
        let mut g = vec![vec![BigInt::zero(); k]; k];
        for i in 0..k {
            for j in i..k {
                let mut cur = Comb::from([(basis[j].clone(), BigInt::from(1))]);
                for &r in &basis[i] {
                    let (lo, hi) = self.roots.root(r as usize);
                    let mut next = Comb::new();
                    for (m, c) in &cur {
                        let t = self.apply(lo, hi, m);
                        add_into(&mut next, &t, c);
                    }
                    cur = next;
                }
                let v = cur.remove(&Vec::new()).unwrap_or_default();
                g[i][j] = v.clone();
                g[j][i] = v;
            }
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kostant_counts() {
        assert_eq!(kostant_partition_count(2, &[3]), 1);
        // α₀+α₁ = α₀+α₁ or the root ε₀−ε₂
        assert_eq!(kostant_partition_count(3, &[1, 1]), 2);
        assert_eq!(kostant_partition_count(3, &[2, 2]), 3);
        assert_eq!(kostant_partition_count(3, &[-1, 0]), 0);
    }

    #[test]
    fn sl2_gram_entries() {
        // ⟨f^k v, f^k v⟩ = k! λ(λ−1)⋯(λ−k+1) for h-eigenvalue λ
        let lam = Weight::finite(&[3, -1]).unwrap(); // λ = (3, 0), ⟨λ, h⟩ = 3
        let mut v = Verma::new(&lam).unwrap();
        let expected = [1, 3, 12, 36, 0];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(v.gram(&[k as i64]).unwrap(), vec![vec![BigInt::from(*e)]]);
        }
    }

    #[test]
    fn lowering_then_raising_commutator() {
        let lam = Weight::finite(&[0, -1, -2]).unwrap();
        let mut v = Verma::new(&lam).unwrap();
        // e₀ f₀₂ v = [E₀₁, E₂₀] v = −E₂₁ v
        let m = vec![v.roots().index_of(0, 2) as u8];
        let res = v.apply(0, 1, &m);
        let f12 = vec![v.roots().index_of(1, 2) as u8];
        assert_eq!(res, Comb::from([(f12, BigInt::from(-1))]));
    }
}
