//! Index schemes, weights in ρ-shifted coordinates, the order `≤`, intervals
//! and finitely generated ideals.
//!
//! A weight is stored through the sequence `i ↦ (λ+ρ)_i`. The sequence is a
//! finite window of overrides on top of a background rule: `−i` for the finite
//! schemes (this is ρ), one affine tail for the ℕ-indexed Borel and two affine
//! tails (positions `< 0` and `≥ 0`) for the ℤ-indexed Borel. Tail slopes are
//! `±1`, which keeps the representation closed under the dot action and under
//! negation.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The position set of the root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexScheme {
    /// `gl_n` with positions `0..n`.
    FiniteA(usize),
    /// `gl(∞)` with the ℕ-indexed Dynkin Borel.
    Nat,
    /// `gl(∞)` with the ℤ-indexed Dynkin Borel.
    Int,
}

impl IndexScheme {
    pub fn contains(&self, p: i64) -> bool {
        match *self {
            IndexScheme::FiniteA(n) => p >= 0 && p < n as i64,
            IndexScheme::Nat => p >= 0,
            IndexScheme::Int => true,
        }
    }

    /// Whether `α_i = ε_i − ε_{i+1}` is a simple root of the scheme.
    pub fn has_simple_root(&self, i: i64) -> bool {
        self.contains(i) && self.contains(i + 1)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, IndexScheme::FiniteA(_))
    }

    pub(crate) fn default_tails(&self) -> Tails {
        match self {
            IndexScheme::FiniteA(_) => Tails::Finite,
            IndexScheme::Nat => Tails::Nat(Tail::RHO),
            IndexScheme::Int => Tails::Int { left: Tail::RHO, right: Tail::RHO },
        }
    }
}

impl fmt::Display for IndexScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexScheme::FiniteA(n) => write!(f, "fin{n}"),
            IndexScheme::Nat => f.write_str("nat"),
            IndexScheme::Int => f.write_str("int"),
        }
    }
}

impl FromStr for IndexScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "nat" => Ok(IndexScheme::Nat),
            "int" => Ok(IndexScheme::Int),
            other => {
                let n = other
                    .strip_prefix("fin")
                    .and_then(|r| r.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown index scheme `{other}`")))?;
                if n == 0 {
                    return Err(Error::BadRank(0));
                }
                Ok(IndexScheme::FiniteA(n))
            }
        }
    }
}

/// Affine rule `p ↦ intercept + slope·p` for the shifted sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tail {
    pub intercept: i64,
    pub slope: i64,
}

impl Tail {
    /// The tail of `0 + ρ`.
    pub const RHO: Tail = Tail { intercept: 0, slope: -1 };

    pub fn new(intercept: i64, slope: i64) -> Result<Tail> {
        if slope != 1 && slope != -1 {
            return Err(Error::Parse(format!("tail slope must be ±1, got {slope}")));
        }
        Ok(Tail { intercept, slope })
    }

    pub fn value(&self, p: i64) -> i64 {
        self.intercept + self.slope * p
    }

    /// The unique position where the tail takes value `v`.
    pub fn position_of(&self, v: i64) -> i64 {
        self.slope * (v - self.intercept)
    }

    pub fn negated(&self) -> Tail {
        Tail { intercept: -self.intercept, slope: -self.slope }
    }
}

/// Background rule of a weight outside its window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tails {
    /// Finite scheme; the background is ρ itself (`−p`).
    Finite,
    Nat(Tail),
    /// `left` applies at positions `< 0`, `right` at positions `≥ 0`.
    Int { left: Tail, right: Tail },
}

impl Tails {
    fn fits(&self, scheme: IndexScheme) -> bool {
        matches!(
            (self, scheme),
            (Tails::Finite, IndexScheme::FiniteA(_))
                | (Tails::Nat(_), IndexScheme::Nat)
                | (Tails::Int { .. }, IndexScheme::Int)
        )
    }

    pub(crate) fn default_at(&self, p: i64) -> i64 {
        match self {
            Tails::Finite => -p,
            Tails::Nat(t) => t.value(p),
            Tails::Int { left, right } => {
                if p < 0 {
                    left.value(p)
                } else {
                    right.value(p)
                }
            }
        }
    }

    pub fn negated(&self) -> Tails {
        match self {
            Tails::Finite => Tails::Finite,
            Tails::Nat(t) => Tails::Nat(t.negated()),
            Tails::Int { left, right } => Tails::Int { left: left.negated(), right: right.negated() },
        }
    }
}

/// An integral weight, stored in ρ-shifted coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    scheme: IndexScheme,
    tails: Tails,
    window: BTreeMap<i64, i64>,
}

impl Weight {
    /// Builds a weight from shifted values overriding the tail rule.
    pub fn new(scheme: IndexScheme, tails: Tails, window: BTreeMap<i64, i64>) -> Result<Weight> {
        if !tails.fits(scheme) {
            return Err(Error::Parse(format!("tails {tails:?} do not fit scheme {scheme}")));
        }
        if let Some(p) = window.keys().find(|p| !scheme.contains(**p)) {
            return Err(Error::Parse(format!("position {p} outside scheme {scheme}")));
        }
        let mut w = Weight { scheme, tails, window };
        w.normalize();
        Ok(w)
    }

    /// The zero weight, i.e. the shifted sequence `ρ`.
    pub fn zero(scheme: IndexScheme) -> Weight {
        Weight { scheme, tails: scheme.default_tails(), window: BTreeMap::new() }
    }

    /// A `gl_n` weight given by its full shifted sequence.
    pub fn finite(values: &[i64]) -> Result<Weight> {
        if values.is_empty() {
            return Err(Error::BadRank(0));
        }
        let window = values.iter().enumerate().map(|(p, &v)| (p as i64, v)).collect();
        Weight::new(IndexScheme::FiniteA(values.len()), Tails::Finite, window)
    }

    /// The weight `0 + Σ c_p ε_p`.
    pub fn from_lambda(scheme: IndexScheme, coords: &[(i64, i64)]) -> Result<Weight> {
        Weight::zero(scheme).translate(coords)
    }

    fn normalize(&mut self) {
        let tails = self.tails;
        self.window.retain(|p, v| tails.default_at(*p) != *v);
    }

    pub fn scheme(&self) -> IndexScheme {
        self.scheme
    }

    pub fn tails(&self) -> Tails {
        self.tails
    }

    /// Overrides of the tail rule, keyed by position.
    pub fn window(&self) -> &BTreeMap<i64, i64> {
        &self.window
    }

    /// `(λ+ρ)_p`.
    pub fn shifted(&self, p: i64) -> i64 {
        debug_assert!(self.scheme.contains(p));
        self.window.get(&p).copied().unwrap_or_else(|| self.tails.default_at(p))
    }

    /// `λ_p`, with `ρ_p = −p`.
    pub fn lambda(&self, p: i64) -> i64 {
        self.shifted(p) + p
    }

    /// Same scheme and same background.
    pub fn same_tails(&self, other: &Weight) -> bool {
        self.scheme == other.scheme && self.tails == other.tails
    }

    pub(crate) fn check_scheme(&self, other: &Weight) -> Result<()> {
        if self.scheme != other.scheme {
            return Err(Error::SchemeMismatch(self.scheme.to_string(), other.scheme.to_string()));
        }
        Ok(())
    }

    /// Sorted positions where two weights with equal tails differ.
    pub fn diff_support(&self, other: &Weight) -> Vec<i64> {
        debug_assert!(self.same_tails(other));
        let keys: BTreeSet<i64> = self.window.keys().chain(other.window.keys()).copied().collect();
        keys.into_iter().filter(|&p| self.shifted(p) != other.shifted(p)).collect()
    }

    /// Returns a copy with the given shifted values replaced.
    pub fn with_values<I>(&self, values: I) -> Result<Weight>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut window = self.window.clone();
        for (p, v) in values {
            if !self.scheme.contains(p) {
                return Err(Error::Parse(format!("position {p} outside scheme {}", self.scheme)));
            }
            window.insert(p, v);
        }
        let mut w = Weight { scheme: self.scheme, tails: self.tails, window };
        w.normalize();
        Ok(w)
    }

    /// Adds `Σ c_p ε_p`.
    pub fn translate(&self, coords: &[(i64, i64)]) -> Result<Weight> {
        let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
        for &(p, c) in coords {
            *acc.entry(p).or_default() += c;
        }
        let vals: Vec<(i64, i64)> = acc
            .into_iter()
            .map(|(p, c)| {
                if self.scheme.contains(p) {
                    Ok((p, self.shifted(p) + c))
                } else {
                    Err(Error::Parse(format!("position {p} outside scheme {}", self.scheme)))
                }
            })
            .collect::<Result<_>>()?;
        self.with_values(vals)
    }

    /// `self − α_k`.
    pub fn sub_simple_root(&self, k: i64) -> Result<Weight> {
        self.translate(&[(k, -1), (k + 1, 1)])
    }

    /// `self + α_k`.
    pub fn add_simple_root(&self, k: i64) -> Result<Weight> {
        self.translate(&[(k, 1), (k + 1, -1)])
    }

    /// A finite position range `[lo, hi]` outside of which the sequence is
    /// given by the tails alone (for ℤ it always contains `−1` and `0`).
    pub fn core_range(&self) -> (i64, i64) {
        let wmin = self.window.keys().next().copied();
        let wmax = self.window.keys().next_back().copied();
        match self.scheme {
            IndexScheme::FiniteA(n) => (0, n as i64 - 1),
            IndexScheme::Nat => (0, wmax.unwrap_or(0).max(0)),
            IndexScheme::Int => (wmin.unwrap_or(-1).min(-1), wmax.unwrap_or(0).max(0)),
        }
    }

    /// Shifted values on `lo..=hi`.
    pub fn values_on(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).map(|p| self.shifted(p)).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            f.write_str("{")?;
            for (i, (p, v)) in self.window.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}:{v}")?;
            }
            f.write_str("}")
        };
        match self.tails {
            Tails::Finite => {
                let IndexScheme::FiniteA(n) = self.scheme else { unreachable!() };
                let vals: Vec<String> =
                    (0..n as i64).map(|p| self.shifted(p).to_string()).collect();
                write!(f, "fin{n}:[{}]", vals.join(","))
            }
            Tails::Nat(t) => {
                f.write_str("nat:")?;
                body(f)?;
                write!(f, "/slope={}", t.slope)?;
                if t.intercept != 0 {
                    write!(f, ",intercept={}", t.intercept)?;
                }
                Ok(())
            }
            Tails::Int { left, right } => {
                f.write_str("int:")?;
                body(f)?;
                write!(f, "/left={},right={}", left.slope, right.slope)?;
                if left.intercept != 0 {
                    write!(f, ",left_intercept={}", left.intercept)?;
                }
                if right.intercept != 0 {
                    write!(f, ",right_intercept={}", right.intercept)?;
                }
                Ok(())
            }
        }
    }
}

fn parse_int(s: &str) -> Result<i64> {
    let s = s.trim();
    match s.parse::<i64>() {
        Ok(v) => Ok(v),
        Err(_) if s.parse::<f64>().is_ok() => Err(Error::NonIntegral(s.to_string())),
        Err(_) => Err(Error::Parse(format!("expected integer, got `{s}`"))),
    }
}

fn parse_window(body: &str) -> Result<BTreeMap<i64, i64>> {
    let inner = body
        .trim()
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("expected `{{pos:value,...}}`, got `{body}`")))?;
    let mut out = BTreeMap::new();
    for entry in inner.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (p, v) = entry
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("bad window entry `{entry}`")))?;
        if out.insert(parse_int(p)?, parse_int(v)?).is_some() {
            return Err(Error::Parse(format!("duplicate position in `{entry}`")));
        }
    }
    Ok(out)
}

fn parse_options(opts: Option<&str>) -> Result<BTreeMap<String, i64>> {
    let mut out = BTreeMap::new();
    if let Some(opts) = opts {
        for kv in opts.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad tail option `{kv}`")))?;
            out.insert(k.trim().to_string(), parse_int(v)?);
        }
    }
    Ok(out)
}

impl FromStr for Weight {
    type Err = Error;

    /// Literal syntax: `fin4:[a,b,c,d]`, `nat:{3:-5,4:-2}/slope=-1`,
    /// `int:{0:1}/left=-1,right=-1`. Values are shifted `(λ+ρ)` values.
    fn from_str(s: &str) -> Result<Weight> {
        let s = s.trim();
        let (head, rest) =
            s.split_once(':').ok_or_else(|| Error::Parse(format!("bad weight literal `{s}`")))?;
        let scheme: IndexScheme = head.parse()?;
        match scheme {
            IndexScheme::FiniteA(n) => {
                let inner = rest
                    .trim()
                    .strip_prefix('[')
                    .and_then(|b| b.strip_suffix(']'))
                    .ok_or_else(|| Error::Parse(format!("expected `[..]` in `{s}`")))?;
                let vals: Vec<i64> = inner
                    .split(',')
                    .map(str::trim)
                    .filter(|e| !e.is_empty())
                    .map(parse_int)
                    .collect::<Result<_>>()?;
                if vals.len() != n {
                    return Err(Error::Parse(format!("{head} needs {n} values, got {}", vals.len())));
                }
                Weight::finite(&vals)
            }
            IndexScheme::Nat | IndexScheme::Int => {
                let (body, opts) = match rest.split_once('/') {
                    Some((b, o)) => (b, Some(o)),
                    None => (rest, None),
                };
                let window = parse_window(body)?;
                let opts = parse_options(opts)?;
                let get = |k: &str, d: i64| opts.get(k).copied().unwrap_or(d);
                let allowed: &[&str] = if scheme == IndexScheme::Nat {
                    &["slope", "intercept"]
                } else {
                    &["left", "right", "left_intercept", "right_intercept"]
                };
                if let Some(k) = opts.keys().find(|k| !allowed.contains(&k.as_str())) {
                    return Err(Error::Parse(format!("unknown tail option `{k}` for {scheme}")));
                }
                let tails = if scheme == IndexScheme::Nat {
                    Tails::Nat(Tail::new(get("intercept", 0), get("slope", -1))?)
                } else {
                    Tails::Int {
                        left: Tail::new(get("left_intercept", 0), get("left", -1))?,
                        right: Tail::new(get("right_intercept", 0), get("right", -1))?,
                    }
                };
                Weight::new(scheme, tails, window)
            }
        }
    }
}

/// Coefficients `c_k` of `λ − μ = Σ c_k α_k` over the difference support, as
/// `(first index, coefficients)`. `None` if the difference is not in the root
/// lattice (nonzero total).
fn root_coefficients(mu: &Weight, lam: &Weight) -> Option<(i64, Vec<i64>)> {
    let supp = lam.diff_support(mu);
    let (Some(&lo), Some(&hi)) = (supp.first(), supp.last()) else {
        return Some((0, Vec::new()));
    };
    let mut coeffs = Vec::with_capacity((hi - lo) as usize);
    let mut acc = 0;
    for p in lo..=hi {
        acc += lam.shifted(p) - mu.shifted(p);
        if p < hi {
            coeffs.push(acc);
        }
    }
    (acc == 0).then_some((lo, coeffs))
}

/// `μ ≤ λ`, i.e. `λ − μ` is a finite ℕ-combination of simple roots.
pub fn leq(mu: &Weight, lam: &Weight) -> Result<bool> {
    mu.check_scheme(lam)?;
    if !mu.same_tails(lam) {
        return Ok(false);
    }
    Ok(root_coefficients(mu, lam).is_some_and(|(_, c)| c.iter().all(|&x| x >= 0)))
}

/// Height of `λ − μ` (sum of simple-root coefficients), if `μ ≤ λ`.
pub fn height(mu: &Weight, lam: &Weight) -> Result<Option<i64>> {
    if !leq(mu, lam)? {
        return Ok(None);
    }
    Ok(root_coefficients(mu, lam).map(|(_, c)| c.iter().sum()))
}

/// All `ν` with `μ ≤ ν ≤ λ`, sorted.
pub fn interval(mu: &Weight, lam: &Weight) -> Result<Vec<Weight>> {
    if !leq(mu, lam)? {
        return Ok(Vec::new());
    }
    let supp = lam.diff_support(mu);
    let roots: Vec<i64> = match (supp.first(), supp.last()) {
        (Some(&lo), Some(&hi)) => (lo..hi).collect(),
        _ => Vec::new(),
    };
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lam.clone());
    queue.push_back(lam.clone());
    while let Some(nu) = queue.pop_front() {
        for &k in &roots {
            let lower = nu.sub_simple_root(k)?;
            if !seen.contains(&lower) && leq(mu, &lower)? {
                seen.insert(lower.clone());
                queue.push_back(lower);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// A finitely generated ideal `{μ : μ ≤ g for some generator g}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    generators: Vec<Weight>,
}

impl IdealSpec {
    pub fn new(generators: Vec<Weight>) -> Result<IdealSpec> {
        let first = generators
            .first()
            .ok_or_else(|| Error::Parse("an ideal needs at least one generator".into()))?;
        for g in &generators[1..] {
            first.check_scheme(g)?;
        }
        Ok(IdealSpec { generators })
    }

    /// The principal ideal `⟨g⟩`.
    pub fn principal(g: Weight) -> IdealSpec {
        IdealSpec { generators: vec![g] }
    }

    pub fn generators(&self) -> &[Weight] {
        &self.generators
    }

    pub fn scheme(&self) -> IndexScheme {
        self.generators[0].scheme()
    }

    pub fn contains(&self, mu: &Weight) -> Result<bool> {
        for g in &self.generators {
            if leq(mu, g)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

pub fn ideal_contains(ideal: &IdealSpec, mu: &Weight) -> Result<bool> {
    ideal.contains(mu)
}

/// `{κ ∈ [[block_rep]] : κ ∈ K, κ ≥ floor}`, sorted.
pub fn ideal_slice(ideal: &IdealSpec, block_rep: &Weight, floor: &Weight) -> Result<Vec<Weight>> {
    block_rep.check_scheme(floor)?;
    floor.check_scheme(&ideal.generators[0])?;
    if !crate::weyl::classify(block_rep)?.regular {
        return Err(Error::NonIntegralOrSingular(block_rep.to_string()));
    }
    let mut out = BTreeSet::new();
    for g in &ideal.generators {
        for k in interval(floor, g)? {
            if crate::weyl::same_block(&k, block_rep) {
                out.insert(k);
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat0() -> Weight {
        Weight::zero(IndexScheme::Nat)
    }

    fn alpha(k: i64) -> Weight {
        nat0().add_simple_root(k).unwrap()
    }

    #[test]
    fn leq_examples() {
        assert!(leq(&nat0(), &nat0()).unwrap());
        let e01 = Weight::from_lambda(IndexScheme::Nat, &[(0, 1), (1, -1)]).unwrap();
        assert!(leq(&nat0(), &e01).unwrap());
        let e10 = Weight::from_lambda(IndexScheme::Nat, &[(0, -1), (1, 1)]).unwrap();
        assert!(!leq(&nat0(), &e10).unwrap());
    }

    #[test]
    fn leq_scheme_mismatch_and_tail_mismatch() {
        let z = Weight::zero(IndexScheme::Int);
        assert!(matches!(leq(&nat0(), &z), Err(Error::SchemeMismatch(..))));
        let flipped: Weight = "nat:{}/slope=1".parse().unwrap();
        assert!(!leq(&nat0(), &flipped).unwrap());
    }

    #[test]
    fn interval_examples() {
        assert_eq!(interval(&nat0(), &nat0()).unwrap(), vec![nat0()]);
        let m = nat0().sub_simple_root(0).unwrap();
        assert_eq!(interval(&m, &nat0()).unwrap().len(), 2);
        let m2 = m.sub_simple_root(1).unwrap();
        assert_eq!(interval(&m2, &nat0()).unwrap().len(), 4);
        assert!(interval(&nat0(), &m).unwrap().is_empty());
    }

    #[test]
    fn ideal_examples() {
        let k = IdealSpec::principal(nat0());
        assert!(k.contains(&nat0().sub_simple_root(0).unwrap()).unwrap());
        assert!(!k.contains(&alpha(0)).unwrap());
        assert!(k.contains(&nat0().sub_simple_root(5).unwrap()).unwrap());
    }

    #[test]
    fn zero_has_rho_sequence() {
        let z = nat0();
        assert!(z.window().is_empty());
        assert_eq!(z.values_on(0, 3), vec![0, -1, -2, -3]);
        assert_eq!(z.lambda(7), 0);
    }

    #[test]
    fn literal_round_trip() {
        for lit in [
            "nat:{3:-5,4:-2}/slope=-1",
            "nat:{}/slope=1",
            "nat:{0:4}/slope=-1,intercept=2",
            "int:{-2:5}/left=-1,right=-1",
            "int:{}/left=1,right=1,left_intercept=3",
            "fin4:[1,0,-2,-3]",
        ] {
            let w: Weight = lit.parse().unwrap();
            assert_eq!(w.to_string(), lit);
        }
        let w: Weight = "nat:{0:0,1:-1}".parse().unwrap();
        assert_eq!(w, nat0());
    }

    #[test]
    fn literal_errors() {
        assert!(matches!("nat:{0:1.5}".parse::<Weight>(), Err(Error::NonIntegral(_))));
        assert!(matches!("fin3:[1,2]".parse::<Weight>(), Err(Error::Parse(_))));
        assert!(matches!("nat:{0:1}/slope=2".parse::<Weight>(), Err(Error::Parse(_))));
        assert!(matches!("nat:{-1:1}".parse::<Weight>(), Err(Error::Parse(_))));
        assert!(matches!("bogus".parse::<Weight>(), Err(Error::Parse(_))));
    }

    #[test]
    fn int_tails_split_at_zero() {
        let w: Weight = "int:{}/left=1,right=-1".parse().unwrap();
        assert_eq!(w.values_on(-2, 1), vec![-2, -1, 0, -1]);
    }
}
