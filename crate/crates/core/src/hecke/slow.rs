use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::{KLPoly, Perm};
use crate::error::{Error, Result};

/// Laurent polynomial in `v`: exponent → coefficient.
type Laurent = BTreeMap<i32, BigInt>;

/// Element of the Hecke algebra in the standard basis `H_w`.
type Elt = HashMap<Perm, Laurent>;

fn add_term(elt: &mut Elt, w: Perm, exp: i32, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let poly = elt.entry(w.clone()).or_default();
    let slot = poly.entry(exp).or_insert_with(BigInt::zero);
    *slot += c;
    if slot.is_zero() {
        poly.remove(&exp);
        if poly.is_empty() {
            elt.remove(&w);
        }
    }
}

/// Hecke algebra of `S_n` with `H_s² = 1 + (v⁻¹ − v) H_s`, whose canonical
/// basis `C_w = H_w + Σ_{y<w} h_{y,w} H_y` is built by multiplying with
/// `C_s = H_s + v` and subtracting the non-bar-invariant part.
pub struct SlowHecke {
    n: usize,
    canonical: HashMap<Perm, Elt>,
}

impl SlowHecke {
    pub fn new(n: usize) -> SlowHecke {
        SlowHecke { n, canonical: HashMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    // H_s · x
    fn mul_simple(s: usize, x: &Elt) -> Elt {
        let mut out = Elt::new();
        for (w, poly) in x {
            let sw = w.left_mul_simple(s);
            if w.has_left_descent(s) {
                // H_s H_w = H_{sw} + (v⁻¹ − v) H_w
                for (&e, c) in poly {
                    add_term(&mut out, sw.clone(), e, c.clone());
                    add_term(&mut out, w.clone(), e - 1, c.clone());
                    add_term(&mut out, w.clone(), e + 1, -c.clone());
                }
            } else {
                for (&e, c) in poly {
                    add_term(&mut out, sw.clone(), e, c.clone());
                }
            }
        }
        out
    }

    /// The canonical basis element `C_w`.
    pub fn canonical(&mut self, w: &Perm) -> Result<&Elt> {
        if w.n() != self.n {
            return Err(Error::WindowMismatch(w.n(), self.n));
        }
        if !self.canonical.contains_key(w) {
            let elt = self.build(w)?;
            self.canonical.insert(w.clone(), elt);
        }
        Ok(&self.canonical[w])
    }

    fn build(&mut self, w: &Perm) -> Result<Elt> {
        let Some(s) = w.left_descents().next() else {
            let mut e = Elt::new();
            add_term(&mut e, w.clone(), 0, BigInt::from(1));
            return Ok(e);
        };
        let shorter = w.left_mul_simple(s);
        let prev = self.canonical(&shorter)?.clone();
        let mut elt = SlowHecke::mul_simple(s, &prev);
        for (y, poly) in &prev {
            for (&e, c) in poly {
                add_term(&mut elt, y.clone(), e + 1, c.clone());
            }
        }
        loop {
            // the longest y < w whose coefficient still has a constant term
            let bad = elt
                .iter()
                .filter(|(y, poly)| *y != w && poly.contains_key(&0))
                .map(|(y, poly)| (y.length(), y.clone(), poly[&0].clone()))
                .max_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
            let Some((_, y, c)) = bad else { break };
            let cy = self.canonical(&y)?.clone();
            for (z, poly) in &cy {
                for (&e, d) in poly {
                    add_term(&mut elt, z.clone(), e, -(&c * d));
                }
            }
        }
        Ok(elt)
    }

    /// `P_{x,w}` read off from `h_{x,w} = v^{ℓ(w)−ℓ(x)} P_{x,w}(v⁻²)`.
    pub fn kl_poly(&mut self, x: &Perm, w: &Perm) -> Result<KLPoly> {
        if x.n() != w.n() {
            return Err(Error::WindowMismatch(x.n(), w.n()));
        }
        let gap = w.length() as i32 - x.length() as i32;
        let Some(h) = self.canonical(w)?.get(x).cloned() else {
            return Ok(KLPoly::zero());
        };
        let mut coeffs = Vec::new();
        for (e, c) in h {
            if (gap - e) % 2 != 0 || e > gap || c.is_negative() {
                return Err(Error::Parse(format!("unexpected term v^{e} in h_{{{x},{w}}}")));
            }
            let i = ((gap - e) / 2) as usize;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, BigUint::zero());
            }
            coeffs[i] = c.magnitude().clone();
        }
        Ok(KLPoly::from_coeffs(coeffs))
    }
}

/// `P_{x,w}` through a shared per-rank [`SlowHecke`].
pub fn kl_poly_slow(x: &Perm, w: &Perm) -> Result<KLPoly> {
    static ALGEBRAS: OnceLock<Mutex<HashMap<usize, SlowHecke>>> = OnceLock::new();
    if x.n() != w.n() {
        return Err(Error::WindowMismatch(x.n(), w.n()));
    }
    let mut algebras = ALGEBRAS.get_or_init(Default::default).lock().unwrap();
    algebras.entry(w.n()).or_insert_with(|| SlowHecke::new(w.n())).kl_poly(x, w)
}
