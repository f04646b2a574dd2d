use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use super::cache::{read_cache_file, write_cache_records, CacheRecord};
use super::{KLPoly, Perm};
use crate::error::{Error, Result};

type Poly = Vec<BigInt>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn add_shifted(acc: &mut Poly, p: &Poly, shift: usize, scale: &BigInt) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c * scale;
    }
}

/// Multiplication table and memoized KL columns of one `S_n`.
struct GroupTable {
    elems: Vec<Perm>,
    index: HashMap<Perm, u32>,
    length: Vec<u32>,
    // left[s][i] = index of s_s · elems[i]
    left: Vec<Vec<u32>>,
    // columns[w][x] = P_{x,w}
    columns: HashMap<u32, Arc<Vec<Poly>>>,
}

impl GroupTable {
    fn new(n: usize) -> GroupTable {
        let elems = Perm::all(n);
        let index: HashMap<Perm, u32> =
            elems.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let length = elems.iter().map(|p| p.length() as u32).collect();
        let left = (0..n.saturating_sub(1))
            .map(|s| elems.iter().map(|p| index[&p.left_mul_simple(s)]).collect())
            .collect();
        GroupTable { elems, index, length, left, columns: HashMap::new() }
    }

    fn column(&mut self, w: u32) -> Arc<Vec<Poly>> {
        if let Some(c) = self.columns.get(&w) {
            return Arc::clone(c);
        }
        let size = self.elems.len();
        let wp = self.elems[w as usize].clone();
        let col = match wp.left_descents().next() {
            None => {
                let e = self.index[&Perm::identity(wp.n())];
                (0..size as u32).map(|x| if x == e { vec![BigInt::one()] } else { Vec::new() }).collect()
            }
            Some(s) => self.column_from_descent(w, s),
        };
        let col = Arc::new(col);
        self.columns.insert(w, Arc::clone(&col));
        col
    }

    // P_{x,w} = q^{1−c} P_{sx,v} + q^c P_{x,v} − Σ_z μ(z,v) q^{(ℓ(w)−ℓ(z))/2} P_{x,z},
    // v = sw, c = [sx < x], z over sz < z < v.
    fn column_from_descent(&mut self, w: u32, s: usize) -> Vec<Poly> {
        let v = self.left[s][w as usize];
        let col_v = self.column(v);
        let lw = self.length[w as usize];
        let lv = self.length[v as usize];
        let mut corrections: Vec<(BigInt, usize, Arc<Vec<Poly>>)> = Vec::new();
        for z in 0..self.elems.len() as u32 {
            let lz = self.length[z as usize];
            if z == v || lz >= lv || (lv - lz).is_multiple_of(2) {
                continue;
            }
            if self.length[self.left[s][z as usize] as usize] > lz {
                continue;
            }
            let top = ((lv - lz - 1) / 2) as usize;
            let mu = col_v[z as usize].get(top).cloned().unwrap_or_default();
            if mu.is_zero() {
                continue;
            }
            let col_z = self.column(z);
            corrections.push((mu, ((lw - lz) / 2) as usize, col_z));
        }
        let wp = &self.elems[w as usize];
        let minus_one = -BigInt::one();
        (0..self.elems.len())
            .map(|x| {
                if !self.elems[x].bruhat_le(wp) {
                    return Vec::new();
                }
                let sx = self.left[s][x] as usize;
                let c = self.length[sx] < self.length[x];
                let mut acc: Poly = Vec::new();
                let one = BigInt::one();
                add_shifted(&mut acc, &col_v[sx], usize::from(!c), &one);
                add_shifted(&mut acc, &col_v[x], usize::from(c), &one);
                for (mu, shift, col_z) in &corrections {
                    add_shifted(&mut acc, &col_z[x], *shift, &(mu * &minus_one));
                }
                trim(&mut acc);
                acc
            })
            .collect()
    }
}

/// Identifies `(x, w)` up to fixed points shared at both ends of the window.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Key {
    x: Perm,
    w: Perm,
}

fn normalize(x: &Perm, w: &Perm) -> Key {
    let (a, b) = (x.one_line(), w.one_line());
    let n = a.len();
    let lead = (0..n).take_while(|&i| a[i] as usize == i && b[i] as usize == i).count();
    let trail = (lead..n).rev().take_while(|&i| a[i] as usize == i && b[i] as usize == i).count();
    let keep = lead..n - trail;
    let shift = |p: &[u8]| Perm::new(p[keep.clone()].iter().map(|&v| v - lead as u8).collect()).unwrap();
    Key { x: shift(a), w: shift(b) }
}

/// Memoizing KL engine with an optional append-only spill file.
///
/// Lookups take a read lock; new entries are inserted under a write lock, and
/// two threads racing on the same entry both compute it (the values agree).
pub struct KlEngine {
    results: RwLock<HashMap<Key, KLPoly>>,
    tables: Mutex<HashMap<usize, GroupTable>>,
    spill: Mutex<Spill>,
}

#[derive(Default)]
struct Spill {
    path: Option<PathBuf>,
    pending: Vec<CacheRecord>,
}

impl Default for KlEngine {
    fn default() -> Self {
        KlEngine::new()
    }
}

impl KlEngine {
    pub fn new() -> KlEngine {
        KlEngine {
            results: RwLock::new(HashMap::new()),
            tables: Mutex::new(HashMap::new()),
            spill: Mutex::new(Spill::default()),
        }
    }

    /// The process-wide engine used by the free functions.
    pub fn global() -> &'static KlEngine {
        static GLOBAL: OnceLock<KlEngine> = OnceLock::new();
        GLOBAL.get_or_init(KlEngine::new)
    }

    /// Loads `path` if it exists and spills newly computed entries to it on
    /// [`KlEngine::flush`]. Returns the number of records loaded.
    pub fn attach_cache_file(&self, path: &Path) -> Result<usize> {
        let records = if path.exists() { read_cache_file(path)? } else { Vec::new() };
        let loaded = records.len();
        {
            let mut res = self.results.write().unwrap();
            for r in records {
                res.insert(normalize(&r.x, &r.w), r.poly);
            }
        }
        self.spill.lock().unwrap().path = Some(path.to_path_buf());
        Ok(loaded)
    }

    /// Appends pending entries to the attached cache file.
    pub fn flush(&self) -> Result<usize> {
        let mut spill = self.spill.lock().unwrap();
        let Some(path) = spill.path.clone() else {
            return Ok(0);
        };
        let pending = std::mem::take(&mut spill.pending);
        write_cache_records(&path, &pending)?;
        Ok(pending.len())
    }

    pub fn cached_entries(&self) -> usize {
        self.results.read().unwrap().len()
    }

    pub fn kl_poly(&self, x: &Perm, w: &Perm) -> Result<KLPoly> {
        if x.n() != w.n() {
            return Err(Error::WindowMismatch(x.n(), w.n()));
        }
        if !x.bruhat_le(w) {
            return Ok(KLPoly::zero());
        }
        let key = normalize(x, w);
        if let Some(p) = self.results.read().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let poly = self.compute(&key)?;
        self.results.write().unwrap().insert(key.clone(), poly.clone());
        let mut spill = self.spill.lock().unwrap();
        if spill.path.is_some() {
            spill.pending.push(CacheRecord { x: key.x, w: key.w, poly: poly.clone() });
        }
        Ok(poly)
    }

    fn compute(&self, key: &Key) -> Result<KLPoly> {
        let n = key.x.n();
        let mut tables = self.tables.lock().unwrap();
        let table = tables.entry(n).or_insert_with(|| GroupTable::new(n));
        let (xi, wi) = (table.index[&key.x], table.index[&key.w]);
        let col = table.column(wi);
        col[xi as usize]
            .iter()
            .map(|c| match c.sign() {
                Sign::Minus => Err(Error::Parse(format!("negative KL coefficient for {}, {}", key.x, key.w))),
                _ => Ok(c.magnitude().clone()),
            })
            .collect::<Result<Vec<BigUint>>>()
            .map(KLPoly::from_coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_strips_shared_end_fixed_points() {
        let x = Perm::new(vec![0, 1, 2, 3, 4]).unwrap();
        let w = Perm::new(vec![0, 2, 1, 3, 4]).unwrap();
        let k = normalize(&x, &w);
        assert_eq!(k.w.one_line(), &[1, 0]);
        assert_eq!(k.x.one_line(), &[0, 1]);
    }

    #[test]
    fn embedding_stability_in_s5() {
        let engine = KlEngine::new();
        for w in Perm::all(4) {
            for x in Perm::all(4) {
                let small = engine.kl_poly(&x, &w).unwrap();
                assert_eq!(engine.kl_poly(&x.extend(1), &w.extend(1)).unwrap(), small);
                assert_eq!(engine.kl_poly(&x.shift(1), &w.shift(1)).unwrap(), small);
            }
        }
    }

    #[test]
    fn concurrent_queries_agree() {
        let engine = Arc::new(KlEngine::new());
        let w = Perm::longest(5);
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let e = Arc::clone(&engine);
                let w = w.clone();
                std::thread::spawn(move || {
                    Perm::all(5).iter().map(|x| e.kl_poly(x, &w).unwrap()).collect::<Vec<_>>()
                })
            })
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|r| r[0] == r[1]));
        assert!(results[0].iter().all(|p| *p == KLPoly::one()));
    }
}
