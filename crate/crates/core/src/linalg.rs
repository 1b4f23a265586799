//! Exact linear algebra over the rationals.
//!
//! Rank is computed either by fraction-free (Bareiss) elimination over the
//! integers, or modulo two 62-bit primes. Rows that become zero during
//! elimination are dropped, so the cost is `O(rank * rows * cols)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Q;

/// `2^62 - 57` and `2^62 - 87`.
pub const RANK_PRIMES: [u64; 2] = [4_611_686_018_427_387_847, 4_611_686_018_427_387_817];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    Bareiss,
    /// Rank modulo both [`RANK_PRIMES`]; falls back to Bareiss when they disagree.
    Modular,
}

/// Clears denominators row by row (each row scaled by the lcm of its denominators).
pub fn integer_rows(rows: &[Vec<Q>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| integer_row(r).0).collect()
}

/// Returns `(numerators, d)` with `row[k] = numerators[k] / d`.
pub fn integer_row(row: &[Q]) -> (Vec<BigInt>, BigInt) {
    let d = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let nums = row.iter().map(|q| q.numer() * (&d / q.denom())).collect();
    (nums, d)
}

pub fn rank(rows: Vec<Vec<BigInt>>, method: RankMethod) -> usize {
    match method {
        RankMethod::Bareiss => bareiss_rank(rows),
        RankMethod::Modular => {
            let a = modular_rank(&rows, RANK_PRIMES[0]);
            let b = modular_rank(&rows, RANK_PRIMES[1]);
            if a == b {
                a
            } else {
                bareiss_rank(rows)
            }
        }
    }
}

pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    m.retain(|r| r.iter().any(|x| !x.is_zero()));
    let Some(cols) = m.first().map(Vec::len) else {
        return 0;
    };
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let p = &pivot_row[c];
        for row in bottom.iter_mut() {
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = p * &row[j] - &f * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = p.clone();
        r += 1;
        let keep: Vec<Vec<BigInt>> = m
            .drain(r..)
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .collect();
        m.extend(keep);
    }
    r
}

fn reduce_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

pub fn modular_rank(rows: &[Vec<BigInt>], p: u64) -> usize {
    let mut ech = ModEchelon::new(p);
    for r in rows {
        ech.insert(r.iter().map(|x| reduce_mod(x, p)).collect());
    }
    ech.rank()
}

/// Residues of `v` modulo `p`.
pub fn residues(v: &[BigInt], p: u64) -> Vec<u64> {
    v.iter().map(|x| reduce_mod(x, p)).collect()
}

/// Row echelon form over `GF(p)` built one row at a time. Each stored row
/// has a unit pivot and zeros at the pivots of all earlier rows.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModEchelon {
    pub fn new(p: u64) -> Self {
        Self {
            p,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; keeps it and returns `true` if
    /// it was independent of them.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for (c, row) in &self.rows {
            let f = v[*c];
            if f == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                if y != 0 {
                    let s = mul_mod(f, y, p);
                    *x = if *x >= s { *x - s } else { *x + p - s };
                }
            }
        }
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = pow_mod(v[c], p - 2, p);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        self.rows.push((c, v));
        true
    }
}

/// Positions of a set of linearly independent columns among `rows`
/// (each inner vector is one column of the underlying matrix, i.e. a
/// candidate basis vector). Returns `None` if the vectors are dependent.
fn pivot_positions(vectors: &[Vec<BigInt>], p: u64) -> Option<Vec<usize>> {
    let mut m: Vec<Vec<u64>> = vectors
        .iter()
        .map(|r| r.iter().map(|x| reduce_mod(x, p)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::with_capacity(m.len());
    for r in 0..m.len() {
        let c = (0..cols).find(|&c| m[r][c] != 0)?;
        let inv = pow_mod(m[r][c], p - 2, p);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul_mod(row[c], inv, p);
            for j in 0..cols {
                let s = mul_mod(f, pivot_row[j], p);
                row[j] = if row[j] >= s {
                    row[j] - s
                } else {
                    row[j] + p - s
                };
            }
        }
        pivots.push(c);
    }
    Some(pivots)
}

/// Gauss-Jordan inverse over the rationals.
pub fn invert(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, piv);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (pr, row) = if i < c {
                    let (lo, hi) = m.split_at_mut(c);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = m.split_at_mut(i);
                    (&lo[c], &mut hi[0])
                };
                for (x, y) in row.iter_mut().zip(pr.iter()) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `a x = b` for square nonsingular `a`.
pub fn solve_square(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let inv = invert(a)?;
    Some(mat_vec(&inv, b))
}

pub fn mat_vec(a: &[Vec<Q>], x: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}

/// A fixed family of linearly independent vectors, prepared for repeated
/// exact membership tests. The coefficients are read off a nonsingular
/// square subsystem; a full residual check then decides membership.
#[derive(Clone, Debug)]
pub struct ColumnBasis {
    vectors: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    // inverse of S with S[k][j] = vectors[j][pivots[k]]
    inverse: Vec<Vec<Q>>,
}

impl ColumnBasis {
    /// `None` if the vectors are linearly dependent.
    pub fn new(vectors: Vec<Vec<Q>>) -> Option<Self> {
        let len = vectors.first().map_or(0, Vec::len);
        if vectors.iter().any(|v| v.len() != len) || vectors.len() > len {
            return None;
        }
        let ints = integer_rows(&vectors);
        // A nonzero minor mod p is nonzero over Z, so the pivots are exact.
        let pivots = pivot_positions(&ints, RANK_PRIMES[0])
            .or_else(|| pivot_positions(&ints, RANK_PRIMES[1]))
            .or_else(|| exact_pivots(&vectors))?;
        let square: Vec<Vec<Q>> = pivots
            .iter()
            .map(|&k| vectors.iter().map(|v| v[k].clone()).collect())
            .collect();
        let inverse = invert(&square)?;
        Some(Self {
            vectors,
            pivots,
            inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Q>] {
        &self.vectors
    }

    /// Coefficients `x` with `Σ x_j v_j = target`, or the nonzero entries of
    /// the residual `target - Σ x_j v_j` when `target` is outside the span.
    pub fn solve(&self, target: &[Q]) -> Result<Vec<Q>, Vec<(usize, Q)>> {
        let rhs: Vec<Q> = self.pivots.iter().map(|&k| target[k].clone()).collect();
        let x = mat_vec(&self.inverse, &rhs);
        let residual: Vec<(usize, Q)> = target
            .iter()
            .enumerate()
            .filter_map(|(i, t)| {
                let fitted: Q = x
                    .iter()
                    .zip(&self.vectors)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, v)| c * &v[i])
                    .sum();
                let r = t - fitted;
                (!r.is_zero()).then_some((i, r))
            })
            .collect();
        if residual.is_empty() {
            Ok(x)
        } else {
            Err(residual)
        }
    }
}

fn exact_pivots(vectors: &[Vec<Q>]) -> Option<Vec<usize>> {
    let mut m = vectors.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    for r in 0..m.len() {
        let c = (0..cols).find(|&c| !m[r][c].is_zero())?;
        let (top, bottom) = m.split_at_mut(r + 1);
        let pr = &top[r];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pr[c];
            for j in 0..cols {
                let d = &f * &pr[j];
                row[j] -= d;
            }
        }
        pivots.push(c);
    }
    Some(pivots)
}

/// Largest absolute value among the entries, used for overflow bounds.
pub(crate) fn max_abs(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x.abs()).max().unwrap_or_default()
}
