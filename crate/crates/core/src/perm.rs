//! Permutations of `{1..n}` in one-line notation and the statistics
//! `maj`, `des`, `inv`, `exc`, `fix`, `comaj` defined on them.
//!
//! Positions and values are 1-based in the public API. Enumeration of `S_n`
//! is lexicographic on one-line notation, and [`Permutation::rank`] /
//! [`Permutation::unrank`] are the Lehmer-code bijection with `0..n!`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::convention::Convention;
use crate::error::{Error, Result};

/// Largest degree accepted by default. `8! = 40320` coefficients per
/// group-algebra element; dense `n! x n!` work at this size is only
/// practical for the structured paths.
pub const DEFAULT_DEGREE_CAP: usize = 8;

/// Hard ceiling for any configured cap: `20!` is the largest factorial in `u64`.
pub const MAX_DEGREE: usize = 20;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images: images[i] = σ(i + 1) - 1
    images: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from 1-based one-line notation.
    pub fn new(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let invalid = || Error::InvalidPermutation {
            n,
            images: one_line.to_vec(),
        };
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge { n, cap: MAX_DEGREE });
        }
        let mut seen = vec![false; n];
        for &v in one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(invalid());
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            images: one_line.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u8).collect(),
        }
    }

    /// The decreasing word `[n, n-1, ..., 1]`.
    pub fn reversal(n: usize) -> Self {
        Self {
            images: (0..n as u8).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub(crate) fn images0(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Self { images: inv }
    }

    /// Function composition `(self ∘ other)(i) = self(other(i))`.
    pub(crate) fn after(&self, other: &Self) -> Self {
        Self {
            images: other
                .images
                .iter()
                .map(|&j| self.images[j as usize])
                .collect(),
        }
    }

    /// Descent set `{i : σ(i) > σ(i+1)}` as sorted 1-based positions.
    pub fn descent_set(&self) -> Vec<usize> {
        self.images
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Descent set as a bitmask, bit `i - 1` set iff `i` is a descent.
    pub fn descent_mask(&self) -> u32 {
        self.images
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn stat(&self, kind: StatKind) -> usize {
        let n = self.degree();
        match kind {
            StatKind::Des => self.images.windows(2).filter(|w| w[0] > w[1]).count(),
            StatKind::Maj => self.descent_set().iter().sum(),
            StatKind::Inv => {
                let mut count = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if self.images[i] > self.images[j] {
                            count += 1;
                        }
                    }
                }
                count
            }
            // i ranges over 1..n-1; σ(n) > n is impossible so this equals
            // the count over all of 1..n.
            StatKind::Exc => (0..n.saturating_sub(1))
                .filter(|&i| self.images[i] as usize > i)
                .count(),
            StatKind::Fix => (0..n).filter(|&i| self.images[i] as usize == i).count(),
            StatKind::Comaj => self.descent_set().iter().map(|&i| n - i).sum(),
        }
    }

    /// Index of `self` in the lexicographic enumeration of `S_n`.
    pub fn rank(&self) -> usize {
        rank_of_images(&self.images)
    }

    pub fn unrank(index: usize, n: usize) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge { n, cap: MAX_DEGREE });
        }
        let total = factorial(n) as usize;
        if index >= total {
            return Err(Error::IndexOutOfRange {
                index,
                limit: total,
            });
        }
        let mut digits = vec![0usize; n];
        let mut rest = index;
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rest % base;
            rest /= base;
        }
        let mut pool: Vec<u8> = (0..n as u8).collect();
        let images = digits.into_iter().map(|d| pool.remove(d)).collect();
        Ok(Self { images })
    }

    /// Next permutation in lexicographic order, or `None` at the reversal.
    pub fn successor(&self) -> Option<Self> {
        let mut a = self.images.clone();
        let n = a.len();
        if n < 2 {
            return None;
        }
        let mut i = n - 1;
        while i > 0 && a[i - 1] >= a[i] {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let mut j = n - 1;
        while a[j] <= a[i - 1] {
            j -= 1;
        }
        a.swap(i - 1, j);
        a[i..].reverse();
        Some(Self { images: a })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

/// Group product of `a` and `b` under `convention`.
pub fn compose(a: &Permutation, b: &Permutation, convention: Convention) -> Result<Permutation> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(match convention {
        Convention::RightToLeft => a.after(b),
        Convention::LeftToRight => b.after(a),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StatKind {
    Maj,
    Des,
    Inv,
    Exc,
    Fix,
    Comaj,
}

impl StatKind {
    pub const ALL: [StatKind; 6] = [
        StatKind::Maj,
        StatKind::Des,
        StatKind::Inv,
        StatKind::Exc,
        StatKind::Fix,
        StatKind::Comaj,
    ];

    /// The three statistics that generate the skew-symmetric ideal.
    pub const SKEW: [StatKind; 3] = [StatKind::Maj, StatKind::Des, StatKind::Inv];

    pub fn name(self) -> &'static str {
        match self {
            StatKind::Maj => "maj",
            StatKind::Des => "des",
            StatKind::Inv => "inv",
            StatKind::Exc => "exc",
            StatKind::Fix => "fix",
            StatKind::Comaj => "comaj",
        }
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownStat(s.to_string()))
    }
}

/// Lehmer-code rank of 0-based one-line images, `O(n)` via a bitmask of
/// values already consumed.
pub(crate) fn rank_of_images(images: &[u8]) -> usize {
    let n = images.len();
    let mut used = 0u32;
    let mut rank = 0usize;
    for (i, &v) in images.iter().enumerate() {
        let smaller_unused = v as u32 - (used & ((1u32 << v) - 1)).count_ones();
        rank = rank * (n - i) + smaller_unused as usize;
        used |= 1 << v;
    }
    rank
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn check_degree(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { n, min: 1 });
    }
    let cap = cap.min(MAX_DEGREE);
    if n > cap {
        return Err(Error::DegreeTooLarge { n, cap });
    }
    Ok(())
}

/// All of `S_n` in lexicographic order, subject to [`DEFAULT_DEGREE_CAP`].
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    all_permutations_capped(n, DEFAULT_DEGREE_CAP)
}

pub fn all_permutations_capped(n: usize, cap: usize) -> Result<Vec<Permutation>> {
    check_degree(n, cap)?;
    let mut out = Vec::with_capacity(factorial(n) as usize);
    let mut cur = Some(Permutation::identity(n));
    while let Some(p) = cur {
        cur = p.successor();
        out.push(p);
    }
    Ok(out)
}

/// Coefficients `c_k = #{σ ∈ S_n : stat(σ) = k}`.
pub fn generating_polynomial(kind: StatKind, n: usize) -> Result<Vec<u64>> {
    let mut coeffs: Vec<u64> = Vec::new();
    for p in all_permutations(n)? {
        let k = p.stat(kind);
        if coeffs.len() <= k {
            coeffs.resize(k + 1, 0);
        }
        coeffs[k] += 1;
    }
    Ok(coeffs)
}

/// `Σ_σ stat(σ)` by enumeration.
pub fn stat_sum(kind: StatKind, n: usize) -> Result<u64> {
    Ok(all_permutations(n)?
        .iter()
        .map(|p| p.stat(kind) as u64)
        .sum())
}

/// Character of the natural representation `(n-1, 1)`: `fix(σ) - 1`.
pub fn chi_nat(sigma: &Permutation) -> Result<i64> {
    let n = sigma.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    Ok(sigma.stat(StatKind::Fix) as i64 - 1)
}

/// Character of `(n-2, 1, 1)`, the exterior square of the natural
/// representation: `((fix σ - 1)^2 - (fix σ^2 - 1)) / 2`.
pub fn chi_wedge2(sigma: &Permutation) -> Result<i64> {
    let n = sigma.degree();
    if n < 3 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    let a = sigma.stat(StatKind::Fix) as i64 - 1;
    let b = sigma.after(sigma).stat(StatKind::Fix) as i64 - 1;
    Ok((a * a - b) / 2)
}
