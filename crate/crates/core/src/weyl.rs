//! Finitely supported permutations, the dot action, blocks, the Bruhat order
//! on a block and the co-atom cover count that separates the two Dynkin
//! Borels of `gl(∞)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hecke::Perm;
use crate::weights::{IndexScheme, Tails, Weight};

/// A finitely supported permutation of the positions of a scheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElt {
    scheme: IndexScheme,
    // position -> image; fixed points are not stored
    mapping: BTreeMap<i64, i64>,
}

impl WeylElt {
    pub fn identity(scheme: IndexScheme) -> WeylElt {
        WeylElt { scheme, mapping: BTreeMap::new() }
    }

    /// The transposition of positions `i` and `j`.
    pub fn transposition(scheme: IndexScheme, i: i64, j: i64) -> Result<WeylElt> {
        if !scheme.contains(i) || !scheme.contains(j) {
            return Err(Error::Parse(format!("positions {i},{j} outside scheme {scheme}")));
        }
        let mut mapping = BTreeMap::new();
        if i != j {
            mapping.insert(i, j);
            mapping.insert(j, i);
        }
        Ok(WeylElt { scheme, mapping })
    }

    /// The simple reflection `s_i = r_{ε_i − ε_{i+1}}`.
    pub fn simple(scheme: IndexScheme, i: i64) -> Result<WeylElt> {
        if !scheme.has_simple_root(i) {
            return Err(Error::Parse(format!("s{i} is not a simple reflection of {scheme}")));
        }
        WeylElt::transposition(scheme, i, i + 1)
    }

    /// The product `s_{i_1} s_{i_2} ⋯ s_{i_k}`.
    pub fn from_word(scheme: IndexScheme, word: &[i64]) -> Result<WeylElt> {
        word.iter().try_fold(WeylElt::identity(scheme), |acc, &i| {
            Ok(acc.compose(&WeylElt::simple(scheme, i)?))
        })
    }

    /// Parses words such as `"s0 s1 s0"`, `"s-2"` or `"e"`.
    pub fn parse_word(scheme: IndexScheme, word: &str) -> Result<WeylElt> {
        let mut idx = Vec::new();
        for tok in word.split_whitespace() {
            if tok == "e" || tok == "1" {
                continue;
            }
            let i = tok
                .strip_prefix('s')
                .and_then(|r| r.parse::<i64>().ok())
                .ok_or_else(|| Error::Parse(format!("bad simple reflection `{tok}`")))?;
            idx.push(i);
        }
        WeylElt::from_word(scheme, &idx)
    }

    pub fn scheme(&self) -> IndexScheme {
        self.scheme
    }

    pub fn apply(&self, p: i64) -> i64 {
        self.mapping.get(&p).copied().unwrap_or(p)
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.mapping.keys().copied()
    }

    /// `(self ∘ other)(p) = self(other(p))`.
    pub fn compose(&self, other: &WeylElt) -> WeylElt {
        let keys: BTreeSet<i64> = self.mapping.keys().chain(other.mapping.keys()).copied().collect();
        let mapping = keys
            .into_iter()
            .map(|p| (p, self.apply(other.apply(p))))
            .filter(|(p, q)| p != q)
            .collect();
        WeylElt { scheme: self.scheme, mapping }
    }

    pub fn inverse(&self) -> WeylElt {
        WeylElt { scheme: self.scheme, mapping: self.mapping.iter().map(|(&p, &q)| (q, p)).collect() }
    }

    /// Number of inversions (all of them lie inside the support hull).
    pub fn length(&self) -> usize {
        let (Some(&lo), Some(&hi)) = (self.mapping.keys().next(), self.mapping.keys().next_back())
        else {
            return 0;
        };
        let img: Vec<i64> = (lo..=hi).map(|p| self.apply(p)).collect();
        (0..img.len()).map(|i| img[i + 1..].iter().filter(|&&v| v < img[i]).count()).sum()
    }

    /// Restriction to a window that contains the support.
    pub fn to_perm(&self, window: IndexWindow) -> Result<Perm> {
        if self.support().any(|p| !window.contains(p)) {
            return Err(Error::InvalidWindow(format!("{window} does not contain the support")));
        }
        Perm::new(window.positions().map(|p| (self.apply(p) - window.lo) as u8).collect())
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mapping.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.mapping.iter().map(|(p, q)| format!("{p}->{q}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A contiguous range of positions `lo..lo+len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexWindow {
    pub lo: i64,
    pub len: usize,
}

impl IndexWindow {
    pub fn new(lo: i64, len: usize) -> IndexWindow {
        IndexWindow { lo, len }
    }

    /// The window `lo..=hi`.
    pub fn span(lo: i64, hi: i64) -> IndexWindow {
        IndexWindow { lo, len: (hi - lo + 1).max(0) as usize }
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Last position (meaningless for an empty window).
    pub fn hi(&self) -> i64 {
        self.lo + self.len as i64 - 1
    }

    pub fn contains(&self, p: i64) -> bool {
        p >= self.lo && p < self.lo + self.len as i64
    }

    pub fn contains_window(&self, other: &IndexWindow) -> bool {
        other.is_empty() || (self.contains(other.lo) && self.contains(other.hi()))
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> {
        self.lo..self.lo + self.len as i64
    }

    pub fn fits(&self, scheme: IndexScheme) -> bool {
        self.is_empty() || (scheme.contains(self.lo) && scheme.contains(self.hi()))
    }

    /// Grows by `k` positions, to the right while the scheme allows, then to
    /// the left. An empty window first becomes a single position.
    pub fn enlarged(&self, scheme: IndexScheme, k: usize) -> Result<IndexWindow> {
        let mut w = if self.is_empty() { IndexWindow::new(0, 1) } else { *self };
        for _ in 0..k {
            if scheme.contains(w.hi() + 1) {
                w.len += 1;
            } else if scheme.contains(w.lo - 1) {
                w.lo -= 1;
                w.len += 1;
            } else {
                return Err(Error::InvalidWindow(format!("cannot enlarge {w} inside {scheme}")));
            }
        }
        Ok(w)
    }
}

impl fmt::Display for IndexWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("{}")
        } else {
            write!(f, "{{{}..{}}}", self.lo, self.hi())
        }
    }
}

impl FromStr for IndexWindow {
    type Err = Error;

    /// `lo..hi`, both ends inclusive.
    fn from_str(s: &str) -> Result<IndexWindow> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}');
        if t.is_empty() {
            return Ok(IndexWindow::new(0, 0));
        }
        let (lo, hi) = t
            .split_once("..")
            .ok_or_else(|| Error::Parse(format!("expected `lo..hi`, got `{s}`")))?;
        let lo: i64 = lo.trim().parse().map_err(|_| Error::Parse(format!("bad window `{s}`")))?;
        let hi: i64 = hi.trim().parse().map_err(|_| Error::Parse(format!("bad window `{s}`")))?;
        if hi < lo {
            return Err(Error::InvalidWindow(s.to_string()));
        }
        Ok(IndexWindow::span(lo, hi))
    }
}

/// `w·λ = w(λ+ρ) − ρ`: the value at position `p` moves to `w(p)`.
pub fn dot(w: &WeylElt, lam: &Weight) -> Result<Weight> {
    if w.scheme != lam.scheme() {
        return Err(Error::SchemeMismatch(w.scheme.to_string(), lam.scheme().to_string()));
    }
    let inv = w.inverse();
    lam.with_values(w.support().map(|q| (q, lam.shifted(inv.apply(q)))).collect::<Vec<_>>())
}

/// `w·0`.
pub fn dot_zero(w: &WeylElt) -> Weight {
    dot(w, &Weight::zero(w.scheme)).expect("scheme matches by construction")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Classification {
    pub regular: bool,
    pub dominant: bool,
    pub antidominant: bool,
}

// (tail, lies to the right of the core)
fn tail_list(lam: &Weight) -> Vec<(crate::weights::Tail, bool)> {
    match lam.tails() {
        Tails::Finite => vec![],
        Tails::Nat(t) => vec![(t, true)],
        Tails::Int { left, right } => vec![(left, false), (right, true)],
    }
}

fn is_regular(lam: &Weight) -> bool {
    let (lo, hi) = lam.core_range();
    let core = lam.values_on(lo, hi);
    let mut seen = BTreeSet::new();
    if !core.iter().all(|v| seen.insert(*v)) {
        return false;
    }
    let tails = tail_list(lam);
    for &(t, right) in &tails {
        for &v in &core {
            let p = t.position_of(v);
            let in_domain = if right { p > hi } else { p < lo };
            if in_domain && lam.scheme().contains(p) {
                return false;
            }
        }
    }
    if let [(l, _), (r, _)] = tails[..] {
        if l.slope != r.slope {
            return false;
        }
        // c_L + s·p = c_R + s·q with p < lo, q > hi  ⇔  q − p = s(c_L − c_R) ≥ hi − lo + 2
        let delta = l.slope * (l.intercept - r.intercept);
        if delta >= hi - lo + 2 {
            return false;
        }
    }
    true
}

fn is_monotone(lam: &Weight, decreasing: bool) -> bool {
    let (lo, hi) = lam.core_range();
    let want = if decreasing { -1 } else { 1 };
    if tail_list(lam).iter().any(|(t, _)| t.slope != want) {
        return false;
    }
    let scheme = lam.scheme();
    (lo - 1..=hi).filter(|&p| scheme.contains(p) && scheme.contains(p + 1)).all(|p| {
        let (a, b) = (lam.shifted(p), lam.shifted(p + 1));
        if decreasing {
            a >= b
        } else {
            a <= b
        }
    })
}

/// Regularity (injective shifted sequence) and (anti)dominance.
pub fn classify(lam: &Weight) -> Result<Classification> {
    Ok(Classification {
        regular: is_regular(lam),
        dominant: is_monotone(lam, true),
        antidominant: is_monotone(lam, false),
    })
}

fn require_regular(lam: &Weight) -> Result<()> {
    if is_regular(lam) {
        Ok(())
    } else {
        Err(Error::NonIntegralOrSingular(lam.to_string()))
    }
}

/// Identifies the block `[[λ]]`: the tails together with the multiset
/// difference between the window values and the background values there.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockId {
    pub scheme: IndexScheme,
    pub tails: Tails,
    pub extra: Vec<i64>,
    pub missing: Vec<i64>,
}

pub fn block_id(lam: &Weight) -> BlockId {
    let mut balance: BTreeMap<i64, i64> = BTreeMap::new();
    for (&p, &v) in lam.window() {
        *balance.entry(v).or_default() += 1;
        *balance.entry(lam.tails().default_at(p)).or_default() -= 1;
    }
    let mut extra = Vec::new();
    let mut missing = Vec::new();
    for (v, c) in balance {
        for _ in 0..c.max(0) {
            extra.push(v);
        }
        for _ in 0..(-c).max(0) {
            missing.push(v);
        }
    }
    BlockId { scheme: lam.scheme(), tails: lam.tails(), extra, missing }
}

/// `μ ∈ W·λ` for a finitely supported `w`.
pub fn same_block(lam: &Weight, mu: &Weight) -> bool {
    block_id(lam) == block_id(mu)
}

/// Checks the common preconditions of the order operations and returns the
/// hull of the positions where the weights differ.
fn block_pair_hull(mu: &Weight, lam: &Weight) -> Result<Option<IndexWindow>> {
    mu.check_scheme(lam)?;
    require_regular(mu)?;
    require_regular(lam)?;
    if !same_block(mu, lam) {
        return Err(Error::DifferentBlocks(mu.to_string(), lam.to_string()));
    }
    let supp = lam.diff_support(mu);
    Ok(match (supp.first(), supp.last()) {
        (Some(&lo), Some(&hi)) => Some(IndexWindow::span(lo, hi)),
        _ => None,
    })
}

/// The permutation `w` with `λ|_window = w·b`, where `b` lists the window
/// values of `λ` in increasing order (the antidominant arrangement).
pub fn arrangement_perm(lam: &Weight, window: IndexWindow) -> Result<Perm> {
    let vals: Vec<i64> = window.positions().map(|p| lam.shifted(p)).collect();
    let mut sorted = vals.clone();
    sorted.sort_unstable();
    let pos: HashMap<i64, usize> = vals.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    if pos.len() != vals.len() {
        return Err(Error::NonIntegralOrSingular(lam.to_string()));
    }
    Perm::new(sorted.iter().map(|v| pos[v] as u8).collect())
}

/// `μ ↑ λ`.
pub fn bruhat_leq(mu: &Weight, lam: &Weight) -> Result<bool> {
    let Some(hull) = block_pair_hull(mu, lam)? else {
        return Ok(true);
    };
    let x = arrangement_perm(mu, hull)?;
    let w = arrangement_perm(lam, hull)?;
    Ok(x.bruhat_le(&w))
}

/// Weights covered by `λ` in the Bruhat order that differ from `λ` only inside
/// `window`.
pub fn bruhat_covers(lam: &Weight, window: IndexWindow) -> Result<Vec<Weight>> {
    require_regular(lam)?;
    if !window.fits(lam.scheme()) {
        return Err(Error::InvalidWindow(format!("{window} not inside {}", lam.scheme())));
    }
    let pos: Vec<i64> = window.positions().collect();
    let vals: Vec<i64> = pos.iter().map(|&p| lam.shifted(p)).collect();
    let mut out = Vec::new();
    for i in 0..pos.len() {
        for j in i + 1..pos.len() {
            let (hi, lo) = (vals[i], vals[j]);
            if hi > lo && !vals[i + 1..j].iter().any(|&v| lo < v && v < hi) {
                out.push(lam.with_values([(pos[i], lo), (pos[j], hi)])?);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `s_i · 0`.
pub fn coatom(scheme: IndexScheme, i: i64) -> Result<Weight> {
    Ok(dot_zero(&WeylElt::simple(scheme, i)?))
}

/// The index `i` with `coatom = s_i·0`.
pub fn coatom_index(coatom: &Weight) -> Result<i64> {
    let zero = Weight::zero(coatom.scheme());
    let not_coatom = || Error::NotACoatom(coatom.to_string());
    if !coatom.same_tails(&zero) {
        return Err(not_coatom());
    }
    match coatom.diff_support(&zero)[..] {
        [i, j] if j == i + 1 && coatom.shifted(i) == zero.shifted(j) && coatom.shifted(j) == zero.shifted(i) => {
            Ok(i)
        }
        _ => Err(not_coatom()),
    }
}

/// The window `[i − margin, i + 1 + margin]` around `s_i·0`, clipped to the
/// scheme.
pub fn coatom_window(scheme: IndexScheme, i: i64, margin: usize) -> IndexWindow {
    let m = margin as i64;
    let mut lo = i - m;
    let mut hi = i + 1 + m;
    while !scheme.contains(lo) {
        lo += 1;
    }
    while !scheme.contains(hi) {
        hi -= 1;
    }
    IndexWindow::span(lo, hi)
}

/// `c(coatom)`: the number of other co-atoms `ν` such that the co-atom and `ν`
/// both cover at least two common weights, computed inside `window`.
pub fn cover_count_invariant(scheme: IndexScheme, coatom: &Weight, window: IndexWindow) -> Result<usize> {
    if coatom.scheme() != scheme {
        return Err(Error::SchemeMismatch(scheme.to_string(), coatom.scheme().to_string()));
    }
    let i = coatom_index(coatom)?;
    if !window.contains(i) || !window.contains(i + 1) {
        return Err(Error::InvalidWindow(format!("{window} does not contain the support of s{i}.0")));
    }
    let mine: BTreeSet<Weight> = bruhat_covers(coatom, window)?.into_iter().collect();
    let mut count = 0;
    for j in window.positions() {
        if j == i || !window.contains(j + 1) {
            continue;
        }
        let other = self::coatom(scheme, j)?;
        let common = bruhat_covers(&other, window)?.into_iter().filter(|w| mine.contains(w)).count();
        if common >= 2 {
            count += 1;
        }
    }
    Ok(count)
}

/// `c(s_i·0)` at margins 1 and 2 around the co-atom, i.e. windows of four and
/// six positions in the interior. Returns `(value at the larger window, stable)`.
pub fn cover_count_stable(scheme: IndexScheme, i: i64) -> Result<(usize, bool)> {
    let c = coatom(scheme, i)?;
    let small = cover_count_invariant(scheme, &c, coatom_window(scheme, i, 1))?;
    let large = cover_count_invariant(scheme, &c, coatom_window(scheme, i, 2))?;
    Ok((large, small == large))
}

/// The smallest window such that `λ − μ` lies in the root lattice of the
/// corresponding finite `gl`. Empty when `λ = μ`.
pub fn min_rank(lam: &Weight, mu: &Weight) -> Result<IndexWindow> {
    lam.check_scheme(mu)?;
    if !same_block(lam, mu) {
        return Err(Error::DifferentBlocks(lam.to_string(), mu.to_string()));
    }
    let supp = lam.diff_support(mu);
    Ok(match (supp.first(), supp.last()) {
        (Some(&lo), Some(&hi)) => IndexWindow::span(lo, hi),
        _ => IndexWindow::new(0, 0),
    })
}
