//! Exact dense linear algebra over `ℤ` and `ℚ`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type RatMatrix = Vec<Vec<BigRational>>;

/// Rank by fraction-free (Bareiss) elimination.
pub fn rank_int(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k];
                a[r][k] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn to_rational(m: &IntMatrix) -> RatMatrix {
    m.iter().map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(a: &mut RatMatrix) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for k in c..cols {
            a[r][k] = &a[r][k] * &inv;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for k in c..cols {
                let d = &f * &a[r][k];
                a[i][k] -= d;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_rat(m: &RatMatrix) -> usize {
    rref(&mut m.clone()).len()
}

/// Solves `A y = b` for every right-hand side in `rhs`, where `A` has full
/// column rank and each `b` lies in its column space.
pub fn solve_full_column_rank(a: &RatMatrix, rhs: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let rows = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut aug: RatMatrix = (0..rows)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend(rhs.iter().map(|b| b[i].clone()));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    debug_assert!(pivots.iter().take(n).eq((0..n).collect::<Vec<_>>().iter()));
    (0..rhs.len()).map(|j| (0..n).map(|i| aug[i][n + j].clone()).collect()).collect()
}
