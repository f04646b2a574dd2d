use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `0..n` in one-line notation, `w(i) = one_line[i]`.
///
/// Composition follows `(uv)(i) = u(v(i))`. Printed and parsed 1-indexed,
/// e.g. `[3,4,1,2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    one_line: Vec<u8>,
}

impl Perm {
    pub fn new(one_line: Vec<u8>) -> Result<Perm> {
        let n = one_line.len();
        if n > u8::MAX as usize {
            return Err(Error::BadRank(n));
        }
        let mut seen = vec![false; n];
        for &v in &one_line {
            let v = v as usize;
            if v >= n || seen[v] {
                return Err(Error::Parse(format!("{one_line:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Perm { one_line })
    }

    pub fn identity(n: usize) -> Perm {
        Perm { one_line: (0..n as u8).collect() }
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.one_line.swap(i, i + 1);
        p
    }

    /// The longest element `w_0`.
    pub fn longest(n: usize) -> Perm {
        Perm { one_line: (0..n as u8).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.one_line
    }

    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.n() != other.n() {
            return Err(Error::WindowMismatch(self.n(), other.n()));
        }
        Ok(Perm { one_line: other.one_line.iter().map(|&i| self.one_line[i as usize]).collect() })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Perm { one_line: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let p = &self.one_line;
        (0..p.len()).map(|i| p[i + 1..].iter().filter(|&&v| v < p[i]).count()).sum()
    }

    /// `s_i · self`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Perm {
        let one_line = self
            .one_line
            .iter()
            .map(|&v| match v as usize {
                x if x == i => (i + 1) as u8,
                x if x == i + 1 => i as u8,
                _ => v,
            })
            .collect();
        Perm { one_line }
    }

    /// `self · s_i`: swaps the entries at positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.one_line.swap(i, i + 1);
        p
    }

    /// `ℓ(s_i w) < ℓ(w)`: the value `i+1` appears before the value `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.one_line.iter().position(|&x| x as usize == v).unwrap();
        pos(i + 1) < pos(i)
    }

    pub fn left_descents(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n().saturating_sub(1)).filter(|&i| self.has_left_descent(i))
    }

    /// Bruhat order by the tableau criterion: `self ≤ other` iff for every
    /// prefix and threshold `#{a ≤ i : self(a) ≥ j} ≤ #{a ≤ i : other(a) ≥ j}`.
    pub fn bruhat_le(&self, other: &Perm) -> bool {
        let n = self.n();
        if n != other.n() {
            return false;
        }
        let mut cx = vec![0i32; n + 1];
        let mut cw = vec![0i32; n + 1];
        for i in 0..n {
            for j in 0..=self.apply(i) {
                cx[j] += 1;
            }
            for j in 0..=other.apply(i) {
                cw[j] += 1;
            }
            if (0..n).any(|j| cx[j] > cw[j]) {
                return false;
            }
        }
        true
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Perm { one_line: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Embeds into `S_{n+k}` fixing the new points.
    pub fn extend(&self, k: usize) -> Perm {
        let n = self.n();
        let mut one_line = self.one_line.clone();
        one_line.extend((n..n + k).map(|v| v as u8));
        Perm { one_line }
    }

    /// Embeds into `S_{n+k}` after `k` new leading fixed points.
    pub fn shift(&self, k: usize) -> Perm {
        let mut one_line: Vec<u8> = (0..k as u8).collect();
        one_line.extend(self.one_line.iter().map(|&v| v + k as u8));
        Perm { one_line }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected one-line notation `[..]`, got `{s}`")))?;
        let vals = inner
            .split(',')
            .map(str::trim)
            .filter(|e| !e.is_empty())
            .map(|e| match e.parse::<u16>() {
                Ok(v) if (1..=256).contains(&v) => Ok((v - 1) as u8),
                _ => Err(Error::Parse(format!("bad one-line entry `{e}`"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Perm::new(vals)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_one_indexed() {
        let p: Perm = "[3,4,1,2]".parse().unwrap();
        assert_eq!(p.one_line(), &[2, 3, 0, 1]);
        assert_eq!(p.to_string(), "[3,4,1,2]");
        assert_eq!(p.length(), 4);
        assert!("[1,1]".parse::<Perm>().is_err());
    }

    #[test]
    fn composition_convention() {
        let s0 = Perm::simple(3, 0);
        let s1 = Perm::simple(3, 1);
        let u = s0.compose(&s1).unwrap();
        for i in 0..3 {
            assert_eq!(u.apply(i), s0.apply(s1.apply(i)));
        }
        assert_eq!(s1.left_mul_simple(0), u);
        assert_eq!(s0.right_mul_simple(1), u);
        assert_eq!(u.compose(&u.inverse()).unwrap(), Perm::identity(3));
    }

    #[test]
    fn bruhat_in_s3() {
        let all = Perm::all(3);
        assert_eq!(all.len(), 6);
        let e = Perm::identity(3);
        let w0 = Perm::longest(3);
        for p in &all {
            assert!(e.bruhat_le(p));
            assert!(p.bruhat_le(&w0));
        }
        assert!(!Perm::simple(3, 0).bruhat_le(&Perm::simple(3, 1)));
    }

    #[test]
    fn descents() {
        let w0 = Perm::longest(4);
        assert_eq!(w0.left_descents().count(), 3);
        assert_eq!(Perm::identity(4).left_descents().count(), 0);
    }
}
