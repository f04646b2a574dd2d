//! Chevalley–Eilenberg complexes over `n⁺` and over `g/h`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::lie::{Depth, RootSystem, Verma};
use crate::error::{Error, Result};
use crate::linalg::{rank_int, rank_rat, rref, solve_full_column_rank, to_rational, RatMatrix};

/// A highest weight module given weight space by weight space, together with
/// the action of the positive root vectors. Depths are measured from the
/// highest weight.
pub trait WeightModule {
    fn roots(&self) -> &RootSystem;

    fn dim(&mut self, gamma: &[i64]) -> Result<usize>;

    /// Matrix of `e_r` from depth `gamma` to depth `gamma − r`.
    fn raise(&mut self, r: usize, gamma: &[i64]) -> Result<RatMatrix>;
}

fn raised(roots: &RootSystem, r: usize, gamma: &[i64]) -> Depth {
    let c = roots.coords(r);
    gamma.iter().zip(c).map(|(g, c)| g - c).collect()
}

/// `Δ(λ)`.
pub struct VermaModule(pub Verma);

impl WeightModule for VermaModule {
    fn roots(&self) -> &RootSystem {
        self.0.roots()
    }

    fn dim(&mut self, gamma: &[i64]) -> Result<usize> {
        Ok(self.0.basis(gamma)?.len())
    }

    fn raise(&mut self, r: usize, gamma: &[i64]) -> Result<RatMatrix> {
        let (a, b) = self.0.roots().root(r);
        Ok(to_rational(&self.0.matrix(a, b, gamma)?))
    }
}

/// `∇(λ)`, the contragredient dual of `Δ(λ)` in the dual PBW basis: `e_r`
/// acts by the transpose of `f_r`.
pub struct DualVermaModule(pub Verma);

impl WeightModule for DualVermaModule {
    fn roots(&self) -> &RootSystem {
        self.0.roots()
    }

    fn dim(&mut self, gamma: &[i64]) -> Result<usize> {
        Ok(self.0.basis(gamma)?.len())
    }

    fn raise(&mut self, r: usize, gamma: &[i64]) -> Result<RatMatrix> {
        let (a, b) = self.0.roots().root(r);
        let target = raised(self.0.roots(), r, gamma);
        let f = self.0.matrix(b, a, &target)?;
        let rows = self.0.basis(&target)?.len();
        let cols = self.0.basis(gamma)?.len();
        Ok((0..rows).map(|i| (0..cols).map(|j| BigRational::from_integer(f[j][i].clone())).collect()).collect())
    }
}

struct SimpleSpace {
    gram: RatMatrix,
    pivots: Vec<usize>,
}

/// `L(λ) = Δ(λ)/rad`, with basis the images of the PBW monomials at the pivot
/// columns of each Shapovalov Gram matrix.
pub struct SimpleModule {
    verma: Verma,
    spaces: HashMap<Depth, SimpleSpace>,
}

impl SimpleModule {
    pub fn new(verma: Verma) -> SimpleModule {
        SimpleModule { verma, spaces: HashMap::new() }
    }

    fn space(&mut self, gamma: &[i64]) -> Result<&SimpleSpace> {
        if !self.spaces.contains_key(gamma) {
            let gram = to_rational(&self.verma.gram(gamma)?);
            let pivots = rref(&mut gram.clone());
            self.spaces.insert(gamma.to_vec(), SimpleSpace { gram, pivots });
        }
        Ok(&self.spaces[gamma])
    }
}

impl WeightModule for SimpleModule {
    fn roots(&self) -> &RootSystem {
        self.verma.roots()
    }

    fn dim(&mut self, gamma: &[i64]) -> Result<usize> {
        if gamma.iter().any(|&c| c < 0) {
            return Ok(0);
        }
        Ok(self.space(gamma)?.pivots.len())
    }

    fn raise(&mut self, r: usize, gamma: &[i64]) -> Result<RatMatrix> {
        let target = raised(self.verma.roots(), r, gamma);
        let src = self.space(gamma)?.pivots.clone();
        if target.iter().any(|&c| c < 0) {
            return Ok(Vec::new());
        }
        let (a, b) = self.verma.roots().root(r);
        let e = to_rational(&self.verma.matrix(a, b, gamma)?);
        let dst = self.space(&target)?;
        if dst.pivots.is_empty() {
            return Ok(Vec::new());
        }
        // The image of a vector c of Δ in L is determined by its pairings G·c.
        let rhs: Vec<Vec<BigRational>> = src
            .iter()
            .map(|&p| {
                dst.gram
                    .iter()
                    .map(|row| row.iter().zip(&e).map(|(g, erow)| g * &erow[p]).sum())
                    .collect()
            })
            .collect();
        let cols: RatMatrix =
            dst.gram.iter().map(|row| dst.pivots.iter().map(|&p| row[p].clone()).collect()).collect();
        let sol = solve_full_column_rank(&cols, &rhs);
        let k = dst.pivots.len();
        Ok((0..k).map(|i| sol.iter().map(|col| col[i].clone()).collect()).collect())
    }
}

/// `dim H^i(n⁺, M)_μ`, where `μ` sits at depth `gamma` below the highest
/// weight of `M`.
pub fn cohomology_dim(module: &mut dyn WeightModule, gamma: &[i64], degree: usize) -> Result<usize> {
    let roots = module.roots().clone();
    let nr = roots.len();
    if degree > nr {
        return Ok(0);
    }
    let depth_of = |mask: u32| -> Depth {
        let mut g = gamma.to_vec();
        for r in (0..nr).filter(|r| mask >> r & 1 == 1) {
            for (k, c) in roots.coords(r).into_iter().enumerate() {
                g[k] -= c;
            }
        }
        g
    };
    let mut layout: Vec<Vec<(u32, usize, usize)>> = vec![Vec::new(); nr + 2];
    for i in degree.saturating_sub(1)..=(degree + 1).min(nr) {
        let mut offset = 0;
        for mask in (0u32..1 << nr).filter(|m| m.count_ones() as usize == i) {
            let g = depth_of(mask);
            let d = if g.iter().any(|&c| c < 0) { 0 } else { module.dim(&g)? };
            if d > 0 {
                layout[i].push((mask, offset, d));
                offset += d;
            }
        }
    }
    let total = |i: usize| layout[i].iter().map(|t| t.2).sum::<usize>();
    let dim_c = total(degree);
    if dim_c == 0 {
        return Ok(0);
    }
    let mut rank_of = |i: usize| -> Result<usize> {
        if i + 1 > nr || total(i) == 0 || total(i + 1) == 0 {
            return Ok(0);
        }
        let d = differential(module, &roots, &layout[i], &layout[i + 1], total(i), total(i + 1), &depth_of)?;
        Ok(rank_rat(&d))
    };
    let out_rank = rank_of(degree)?;
    let in_rank = if degree == 0 { 0 } else { rank_of(degree - 1)? };
    Ok(dim_c - out_rank - in_rank)
}

fn differential(
    module: &mut dyn WeightModule,
    roots: &RootSystem,
    src: &[(u32, usize, usize)],
    dst: &[(u32, usize, usize)],
    cols: usize,
    rows: usize,
    depth_of: &dyn Fn(u32) -> Depth,
) -> Result<RatMatrix> {
    let mut d = vec![vec![BigRational::zero(); cols]; rows];
    let src_at: HashMap<u32, (usize, usize)> = src.iter().map(|&(m, o, k)| (m, (o, k))).collect();
    let sign = |e: usize| if e.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    for &(mask, row0, _) in dst {
        let xs: Vec<usize> = (0..roots.len()).filter(|r| mask >> r & 1 == 1).collect();
        // Σ_j (−1)^j x_j φ(…x̂_j…)
        for (j, &x) in xs.iter().enumerate() {
            let smaller = mask & !(1 << x);
            let Some(&(col0, _)) = src_at.get(&smaller) else { continue };
            let e = module.raise(x, &depth_of(smaller))?;
            for (i, row) in e.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    d[row0 + i][col0 + k] += &sign(j) * v;
                }
            }
        }
        // Σ_{j<k} (−1)^{j+k} φ([x_j, x_k], …)
        for (j, &xj) in xs.iter().enumerate() {
            for (k, &xk) in xs.iter().enumerate().skip(j + 1) {
                let ((a, b), (c, dd)) = (roots.root(xj), roots.root(xk));
                let (beta, coeff) = if b == c {
                    (roots.index_of(a, dd), 1)
                } else if dd == a {
                    (roots.index_of(c, b), -1)
                } else {
                    continue;
                };
                let rest = mask & !(1 << xj) & !(1 << xk);
                if rest >> beta & 1 == 1 {
                    continue;
                }
                let target = rest | 1 << beta;
                let Some(&(col0, dim)) = src_at.get(&target) else { continue };
                let before = (0..beta).filter(|r| rest >> r & 1 == 1).count();
                let s = sign(j + k + before) * BigRational::from_integer(BigInt::from(coeff));
                for t in 0..dim {
                    d[row0 + t][col0 + t] += &s;
                }
            }
        }
    }
    Ok(d)
}

/// Kernel dimension of the weight-zero relative differential
/// `Hom_h(Λ²(g/h), k) → Hom_h(Λ³(g/h), k)` for `g = gl_n`.
pub fn ce_ext2_trivial(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::BadRank(n));
    }
    let units: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let index: HashMap<(usize, usize), usize> = units.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let weight = |set: &[usize]| {
        let mut w = vec![0i64; n];
        for &u in set {
            let (a, b) = units[u];
            w[a] += 1;
            w[b] -= 1;
        }
        w.iter().all(|&x| x == 0)
    };
    let m = units.len();
    let pairs: Vec<[usize; 2]> =
        (0..m).flat_map(|i| (i + 1..m).map(move |j| [i, j])).filter(|p| weight(p)).collect();
    let pair_at: HashMap<[usize; 2], usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let triples: Vec<[usize; 3]> = (0..m)
        .flat_map(|i| (i + 1..m).flat_map(move |j| (j + 1..m).map(move |k| [i, j, k])))
        .filter(|t| weight(t))
        .collect();
    let mut d = vec![vec![BigInt::zero(); pairs.len()]; triples.len()];
    for (row, t) in triples.iter().enumerate() {
        for (j, k, l) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let ((a, b), (c, e)) = (units[t[j]], units[t[k]]);
            // off-diagonal part of [E_ab, E_ce] = δ_bc E_ae − δ_ea E_cb
            let mut terms = Vec::new();
            if b == c && a != e {
                terms.push(((a, e), 1));
            }
            if e == a && c != b {
                terms.push(((c, b), -1));
            }
            for (u, coeff) in terms {
                let (u, other) = (index[&u], t[l]);
                if u == other {
                    continue;
                }
                let (key, swap) = if u < other { ([u, other], 1) } else { ([other, u], -1) };
                let Some(&col) = pair_at.get(&key) else { continue };
                let s = if (j + k) % 2 == 0 { 1 } else { -1 };
                d[row][col] += BigInt::from(s * coeff * swap);
            }
        }
    }
    Ok(pairs.len() - rank_int(&d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext2_small_ranks() {
        assert_eq!(ce_ext2_trivial(2).unwrap(), 1);
        assert!(matches!(ce_ext2_trivial(1), Err(Error::BadRank(1))));
    }
}
