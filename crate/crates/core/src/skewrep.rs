//! Skew-symmetric matrices and the intertwiner with the pseudounit span.
//!
//! A [`SkewMatrix`] stores only the strict upper triangle, row-major:
//! `(1,2), (1,3), ..., (1,n), (2,3), ...`. The same order indexes the
//! pseudomatrix units, so `W(u_ij) = E_ij` is the identity on coordinates.

use std::fmt;
use std::io::Write;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::convention::Convention;
use crate::error::{Error, Result};
use crate::groupalg::{GAElement, SymmetricGroup};
use crate::linalg;
use crate::perm::{Permutation, StatKind};
use crate::{fmt_ratio, parse_ratio, ratio, Q};

/// `(i, j)` with `1 <= i < j <= n`, row-major.
pub fn upper_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

/// Position of `(i, j)`, `i < j`, in [`upper_pairs`].
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    // rows 1..i-1 hold (n-1) + (n-2) + ... + (n-i+1) entries
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SkewRepr", try_from = "SkewRepr")]
pub struct SkewMatrix {
    n: usize,
    upper: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct SkewRepr {
    n: usize,
    upper: Vec<String>,
}

impl From<SkewMatrix> for SkewRepr {
    fn from(a: SkewMatrix) -> Self {
        Self {
            n: a.n,
            upper: a.upper.iter().map(fmt_ratio).collect(),
        }
    }
}

impl TryFrom<SkewRepr> for SkewMatrix {
    type Error = Error;

    fn try_from(r: SkewRepr) -> Result<Self> {
        let upper = r
            .upper
            .iter()
            .map(|s| parse_ratio(s))
            .collect::<Result<_>>()?;
        SkewMatrix::new(r.n, upper)
    }
}

impl fmt::Debug for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewMatrix(n={}, upper=[", self.n)?;
        for (k, a) in self.upper.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "])")
    }
}

/// Upper triangle, one row per line, lower triangle blank.
impl fmt::Display for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (1..=self.n)
            .map(|i| {
                (1..=self.n)
                    .map(|j| {
                        if j > i {
                            self.get(i, j).to_string()
                        } else if i == j {
                            "0".into()
                        } else {
                            String::new()
                        }
                    })
                    .collect()
            })
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" ").trim_end())?;
        }
        Ok(())
    }
}

impl SkewMatrix {
    pub fn new(n: usize, upper: Vec<Q>) -> Result<Self> {
        let expected = n * n.saturating_sub(1) / 2;
        if upper.len() != expected {
            return Err(Error::LengthMismatch {
                got: upper.len(),
                expected,
            });
        }
        Ok(Self { n, upper })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            upper: vec![Q::zero(); n * n.saturating_sub(1) / 2],
        }
    }

    /// Builds the matrix from its entries `f(i, j)` for `i < j`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Q) -> Self {
        Self {
            n,
            upper: upper_pairs(n).into_iter().map(|(i, j)| f(i, j)).collect(),
        }
    }

    /// `E_ij`: `+1` at `(i, j)`, `-1` at `(j, i)`.
    pub fn unit_matrix(i: usize, j: usize, n: usize) -> Result<Self> {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::InvalidPair { i, j, n });
        }
        let mut a = Self::zero(n);
        a.upper[pair_index(n, i, j)] = Q::one();
        Ok(a)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn upper(&self) -> &[Q] {
        &self.upper
    }

    /// Entry `a_ij` of the full matrix, 1-based, using `a_ji = -a_ij`.
    pub fn get(&self, i: usize, j: usize) -> Q {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper[pair_index(self.n, i, j)].clone(),
            Greater => -self.upper[pair_index(self.n, j, i)].clone(),
            Equal => Q::zero(),
        }
    }

    fn check_size(&self, other: &SkewMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `Σ_{i<j} a_ij b_ij`.
    pub fn inner(&self, other: &SkewMatrix) -> Result<Q> {
        self.check_size(other)?;
        Ok(self
            .upper
            .iter()
            .zip(&other.upper)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn norm_sq(&self) -> Q {
        self.upper.iter().map(|a| a * a).sum()
    }

    pub fn scaled(&self, k: &Q) -> SkewMatrix {
        Self {
            n: self.n,
            upper: self.upper.iter().map(|a| a * k).collect(),
        }
    }

    pub fn checked_add(&self, other: &SkewMatrix) -> Result<SkewMatrix> {
        self.check_size(other)?;
        Ok(Self {
            n: self.n,
            upper: self
                .upper
                .iter()
                .zip(&other.upper)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &SkewMatrix) -> Result<SkewMatrix> {
        self.check_size(other)?;
        Ok(Self {
            n: self.n,
            upper: self
                .upper
                .iter()
                .zip(&other.upper)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(Zero::is_zero)
    }

    /// Sum of row `i` of the full matrix.
    pub fn row_sum(&self, i: usize) -> Q {
        (1..=self.n).map(|j| self.get(i, j)).sum()
    }

    /// Writes `i,j,value` rows for the upper triangle.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(["i", "j", "value"]).map_err(io)?;
        for ((i, j), a) in upper_pairs(self.n).into_iter().zip(&self.upper) {
            w.write_record([i.to_string(), j.to_string(), fmt_ratio(a)])
                .map_err(io)?;
        }
        w.flush().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(())
    }
}

/// Simultaneous permutation of rows and columns, chosen so that `σ -> act(σ, ·)`
/// is a homomorphism for `convention`: left-to-right uses the pullback
/// `R_ij = A_{σ(i)σ(j)}`, right-to-left the pushforward `R_{σ(i)σ(j)} = A_ij`.
pub fn act(convention: Convention, sigma: &Permutation, a: &SkewMatrix) -> Result<SkewMatrix> {
    if sigma.degree() != a.n {
        return Err(Error::DegreeMismatch {
            left: a.n,
            right: sigma.degree(),
        });
    }
    let pi = match convention {
        Convention::LeftToRight => sigma.clone(),
        Convention::RightToLeft => sigma.inverse(),
    };
    Ok(SkewMatrix::from_fn(a.n, |i, j| {
        a.get(pi.apply(i), pi.apply(j))
    }))
}

/// `h_des = Σ E_{k,k+1}`, `h_maj = Σ k E_{k,k+1}`, `h_inv = Σ_{i<j} E_ij`.
pub fn h_matrix(kind: StatKind, n: usize) -> Result<SkewMatrix> {
    let weight: fn(usize) -> i64 = match kind {
        StatKind::Des => |_| 1,
        StatKind::Maj => |k| k as i64,
        StatKind::Inv => return Ok(SkewMatrix::from_fn(n, |_, _| Q::one())),
        other => return Err(Error::UnsupportedStat(other)),
    };
    Ok(SkewMatrix::from_fn(n, |i, j| {
        if j == i + 1 {
            Q::from_integer(weight(i).into())
        } else {
            Q::zero()
        }
    }))
}

/// Projection onto `{a_ij = α_i - α_j}`, with `α_i` the row sum over `n`.
pub fn p1(a: &SkewMatrix) -> SkewMatrix {
    let n = a.n;
    let nq = Q::from_integer(n.into());
    let alpha: Vec<Q> = (1..=n).map(|i| a.row_sum(i) / &nq).collect();
    SkewMatrix::from_fn(n, |i, j| &alpha[i - 1] - &alpha[j - 1])
}

/// Projection onto the matrices with zero row sums.
pub fn p2(a: &SkewMatrix) -> SkewMatrix {
    a.checked_sub(&p1(a)).expect("same size")
}

/// `W`: coordinates of `u` in the pseudomatrix units, read as a matrix.
pub fn w(g: &SymmetricGroup, u: &GAElement) -> Result<SkewMatrix> {
    let coords = g.pseudounit_coordinates(u)?;
    SkewMatrix::new(g.degree(), coords)
}

/// `W^-1(A) = Σ_{i<j} a_ij u_ij`.
pub fn w_inv(g: &SymmetricGroup, a: &SkewMatrix) -> Result<GAElement> {
    if a.n != g.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: a.n,
        });
    }
    g.element(
        g.elements()
            .iter()
            .map(|s| coefficient_recover(a, s))
            .collect::<Result<_>>()?,
    )
}

/// Coefficient at `σ` of `W^-1(A)`: `Σ_{i<j} a_ij sgn(σ(j) - σ(i))`. Under the
/// left-to-right convention this is `⟨act(σ, h_inv), A⟩`.
pub fn coefficient_recover(a: &SkewMatrix, sigma: &Permutation) -> Result<Q> {
    if sigma.degree() != a.n {
        return Err(Error::DegreeMismatch {
            left: a.n,
            right: sigma.degree(),
        });
    }
    let mut acc = Q::zero();
    for ((i, j), x) in upper_pairs(a.n).into_iter().zip(&a.upper) {
        if x.is_zero() {
            continue;
        }
        if sigma.apply(i) < sigma.apply(j) {
            acc += x;
        } else {
            acc -= x;
        }
    }
    Ok(acc)
}

/// The centering constant `c` with `stat = c - ½⟨act(σ)h_inv, h_stat⟩`.
pub fn matrix_formula_constant(kind: StatKind, n: usize) -> Result<Q> {
    let n = n as i64;
    match kind {
        StatKind::Des => Ok(ratio(n - 1, 2)),
        StatKind::Maj | StatKind::Inv => Ok(ratio(n * (n - 1), 4)),
        other => Err(Error::UnsupportedStat(other)),
    }
}

/// `stat(σ)` evaluated as `c - ½⟨act(σ)h_inv, h_stat⟩`.
pub fn stat_via_matrix(convention: Convention, kind: StatKind, sigma: &Permutation) -> Result<Q> {
    let n = sigma.degree();
    let h = h_matrix(kind, n)?;
    let moved = act(convention, sigma, &h_matrix(StatKind::Inv, n)?)?;
    Ok(matrix_formula_constant(kind, n)? - moved.inner(&h)? / ratio(2, 1))
}

/// `W(P δ_e)` for the orthogonal projection `P` onto the pseudounit span,
/// computed by an exact solve against the pseudounit Gram matrix.
pub fn projected_delta(g: &SymmetricGroup) -> Result<SkewMatrix> {
    let n = g.degree();
    if n < 3 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    let gram = g.gram_pseudounits()?;
    let nf = Q::from_integer(g.order().into());
    let system: Vec<Vec<Q>> = gram
        .entries
        .iter()
        .map(|row| row.iter().map(|x| x * &nf).collect())
        .collect();
    // ⟨δ_e, u_ij⟩ = u_ij(e) = 1
    let rhs = vec![Q::one(); gram.pairs.len()];
    let coords = linalg::solve_square(&system, &rhs)
        .ok_or_else(|| Error::Oracle("singular pseudounit Gram matrix".into()))?;
    SkewMatrix::new(n, coords)
}

/// `(3/n!) (A/(n+1) + B)` with `A`, `B` from [`toeplitz_a`], [`toeplitz_b`].
pub fn projected_delta_closed_form(n: usize) -> SkewMatrix {
    let nf = Q::from_integer(crate::perm::factorial(n).into());
    let a = toeplitz_a(n).scaled(&ratio(1, n as i64 + 1));
    let sum = a.checked_add(&toeplitz_b(n)).expect("same size");
    sum.scaled(&(ratio(3, 1) / nf))
}

/// Toeplitz `A` with `a_{i,i+k} = 2k/n`; equals `p1(h_inv)`.
pub fn toeplitz_a(n: usize) -> SkewMatrix {
    SkewMatrix::from_fn(n, |i, j| ratio(2 * (j - i) as i64, n as i64))
}

/// Toeplitz `B` with `b_{i,i+k} = 1 - 2k/n`; equals `p2(h_inv)`.
pub fn toeplitz_b(n: usize) -> SkewMatrix {
    SkewMatrix::from_fn(n, |i, j| Q::one() - ratio(2 * (j - i) as i64, n as i64))
}

/// Entrywise closed forms for `p_k(h_stat)`, written out independently of
/// [`p1`] and [`p2`]. Requires `n >= 3`.
pub fn projection_display(kind: StatKind, component: u8, n: usize) -> Result<SkewMatrix> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    let q = |x: i64| Q::from_integer(x.into());
    let inv_n = ratio(1, n as i64);
    let m = match (kind, component) {
        (StatKind::Inv, 1) => toeplitz_a(n),
        (StatKind::Inv, 2) => toeplitz_b(n),
        (StatKind::Maj, 1) => {
            SkewMatrix::from_fn(n, |_, j| if j == n { Q::one() } else { Q::zero() })
        }
        (StatKind::Maj, 2) => SkewMatrix::from_fn(n, |i, j| {
            let (i, j, n) = (i as i64, j as i64, n as i64);
            if i == n - 1 && j == n {
                q(n - 2)
            } else if j == n {
                q(-1)
            } else if j == i + 1 {
                q(i)
            } else {
                q(0)
            }
        }),
        (StatKind::Des, 1) => SkewMatrix::from_fn(n, |i, j| {
            let v = if i == 1 && j == n {
                2
            } else if i == 1 || j == n {
                1
            } else {
                0
            };
            q(v) * &inv_n
        }),
        (StatKind::Des, 2) => SkewMatrix::from_fn(n, |i, j| {
            let (i, j, n) = (i as i64, j as i64, n as i64);
            let v = if i == 1 && j == 2 {
                n - 1
            } else if i == 1 && j == n {
                -2
            } else if i == 1 {
                -1
            } else if i == n - 1 && j == n {
                n - 1
            } else if j == n {
                -1
            } else if j == i + 1 {
                n
            } else {
                0
            };
            q(v) * &inv_n
        }),
        (StatKind::Des | StatKind::Maj | StatKind::Inv, c) => {
            return Err(Error::IndexOutOfRange {
                index: c as usize,
                limit: 2,
            })
        }
        (other, _) => return Err(Error::UnsupportedStat(other)),
    };
    Ok(m)
}

/// Applies `p_k` for `k` in `{1, 2}`.
pub fn project(component: u8, a: &SkewMatrix) -> Result<SkewMatrix> {
    match component {
        1 => Ok(p1(a)),
        2 => Ok(p2(a)),
        c => Err(Error::IndexOutOfRange {
            index: c as usize,
            limit: 2,
        }),
    }
}

/// Rank of a family of skew matrices over `Q`.
pub fn span_rank(family: &[SkewMatrix]) -> usize {
    let rows: Vec<Vec<Q>> = family.iter().map(|a| a.upper.clone()).collect();
    linalg::rank(linalg::integer_rows(&rows), linalg::RankMethod::Bareiss)
}

/// The largest absolute entry, used to size witnesses in reports.
pub fn max_entry(a: &SkewMatrix) -> Q {
    a.upper
        .iter()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(Q::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use proptest::prelude::*;

    const B: Convention = Convention::LeftToRight;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v).unwrap()
    }

    #[test]
    fn pair_order_is_row_major() {
        assert_eq!(
            upper_pairs(4),
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        );
        for n in 2..8 {
            for (k, (i, j)) in upper_pairs(n).into_iter().enumerate() {
                assert_eq!(pair_index(n, i, j), k);
            }
        }
    }

    #[test]
    fn unit_matrices() {
        let e12 = SkewMatrix::unit_matrix(1, 2, 3).unwrap();
        assert_eq!(e12.get(1, 2), Q::one());
        assert_eq!(e12.get(2, 1), -Q::one());
        assert_eq!(e12.get(1, 1), Q::zero());
        let e13 = SkewMatrix::unit_matrix(1, 3, 3).unwrap();
        assert_eq!(e12.inner(&e12).unwrap(), Q::one());
        assert_eq!(e12.inner(&e13).unwrap(), Q::zero());
        assert!(SkewMatrix::unit_matrix(2, 1, 3).is_err());
        assert!(SkewMatrix::unit_matrix(1, 4, 3).is_err());
    }

    #[test]
    fn h_matrices() {
        let d3 = h_matrix(StatKind::Des, 3).unwrap();
        assert_eq!(d3.upper(), &[Q::one(), Q::zero(), Q::one()]);
        let m4 = h_matrix(StatKind::Maj, 4).unwrap();
        assert_eq!(
            (m4.get(1, 2), m4.get(2, 3), m4.get(3, 4)),
            (ratio(1, 1), ratio(2, 1), ratio(3, 1))
        );
        assert!(h_matrix(StatKind::Inv, 3)
            .unwrap()
            .upper()
            .iter()
            .all(|x| x.is_one()));
        assert!(matches!(
            h_matrix(StatKind::Fix, 3),
            Err(Error::UnsupportedStat(StatKind::Fix))
        ));
        for n in 2..8 {
            let inv = h_matrix(StatKind::Inv, n).unwrap();
            let half = ratio((n * (n - 1)) as i64, 2);
            assert_eq!(inv.norm_sq(), half);
            let des = h_matrix(StatKind::Des, n).unwrap();
            let maj = h_matrix(StatKind::Maj, n).unwrap();
            assert_eq!(des.inner(&maj).unwrap(), half);
        }
    }

    #[test]
    fn act_on_units() {
        // Under left-to-right composition the action pulls entries back, so
        // E_ij goes to ±E_{σ^-1(i) σ^-1(j)}.
        for s in all_permutations(4).unwrap() {
            let si = s.inverse();
            for (i, j) in upper_pairs(4) {
                let e = SkewMatrix::unit_matrix(i, j, 4).unwrap();
                let (a, b) = (si.apply(i), si.apply(j));
                let expected = if a < b {
                    SkewMatrix::unit_matrix(a, b, 4).unwrap()
                } else {
                    SkewMatrix::unit_matrix(b, a, 4).unwrap().scaled(&-Q::one())
                };
                assert_eq!(act(B, &s, &e).unwrap(), expected);
                // the other convention moves entries forward
                let pushed = act(Convention::RightToLeft, &si, &e).unwrap();
                assert_eq!(pushed, expected);
            }
        }
    }

    #[test]
    fn act_is_a_homomorphism_for_both_conventions() {
        let a = SkewMatrix::from_fn(4, |i, j| ratio((i * 7 + j * j) as i64, 3));
        let perms = all_permutations(4).unwrap();
        for c in [Convention::LeftToRight, Convention::RightToLeft] {
            for s in &perms {
                for t in perms.iter().step_by(5) {
                    let st = crate::perm::compose(s, t, c).unwrap();
                    let lhs = act(c, &st, &a).unwrap();
                    let rhs = act(c, s, &act(c, t, &a).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
            assert_eq!(act(c, &Permutation::identity(4), &a).unwrap(), a);
        }
    }

    #[test]
    fn projection_structure() {
        for n in 3..=7 {
            let units: Vec<SkewMatrix> = upper_pairs(n)
                .into_iter()
                .map(|(i, j)| SkewMatrix::unit_matrix(i, j, n).unwrap())
                .collect();
            let r1: Vec<_> = units.iter().map(p1).collect();
            let r2: Vec<_> = units.iter().map(p2).collect();
            assert_eq!(span_rank(&r1), n - 1);
            assert_eq!(span_rank(&r2), (n - 1) * (n - 2) / 2);
            for a in &r2 {
                for i in 1..=n {
                    assert!(a.row_sum(i).is_zero());
                }
            }
        }
        let e24 = SkewMatrix::unit_matrix(2, 4, 5).unwrap();
        let alpha = |k: usize| match k {
            2 => ratio(1, 5),
            4 => ratio(-1, 5),
            _ => Q::zero(),
        };
        assert_eq!(p1(&e24), SkewMatrix::from_fn(5, |i, j| alpha(i) - alpha(j)));
    }

    #[test]
    fn projection_displays_match() {
        for n in 3..=7 {
            for kind in StatKind::SKEW {
                let h = h_matrix(kind, n).unwrap();
                assert_eq!(
                    p1(&h),
                    projection_display(kind, 1, n).unwrap(),
                    "{kind} p1 n={n}"
                );
                assert_eq!(
                    p2(&h),
                    projection_display(kind, 2, n).unwrap(),
                    "{kind} p2 n={n}"
                );
            }
        }
        assert!(projection_display(StatKind::Inv, 3, 4).is_err());
        assert!(projection_display(StatKind::Fix, 1, 4).is_err());
    }

    #[test]
    fn projection_inner_products() {
        for n in 3..=7i64 {
            let nu = n as usize;
            let h = |k| h_matrix(k, nu).unwrap();
            let (inv, des, maj) = (h(StatKind::Inv), h(StatKind::Des), h(StatKind::Maj));
            let ip = |a: &SkewMatrix, b: &SkewMatrix| a.inner(b).unwrap();
            assert_eq!(ip(&p1(&inv), &p1(&des)), ratio(2 * (n - 1), n));
            assert_eq!(ip(&p2(&inv), &p2(&des)), ratio((n - 1) * (n - 2), n));
            assert_eq!(ip(&p1(&inv), &p1(&maj)), ratio(n - 1, 1));
            assert_eq!(ip(&p2(&inv), &p2(&maj)), ratio((n - 1) * (n - 2), 2));
            assert_eq!(p1(&inv).norm_sq(), ratio(n * n - 1, 3));
            // n(n-1)/2 - (n^2-1)/3 simplifies to (n-1)(n-2)/6
            assert_eq!(
                p2(&inv).norm_sq(),
                ratio(n * (n - 1), 2) - ratio(n * n - 1, 3)
            );
            assert_eq!(p2(&inv).norm_sq(), ratio((n - 1) * (n - 2), 6));
        }
    }

    #[test]
    fn matrix_formulas_match_statistics() {
        for n in 2..=6 {
            for s in all_permutations(n).unwrap() {
                for kind in StatKind::SKEW {
                    let v = stat_via_matrix(B, kind, &s).unwrap();
                    assert_eq!(v, Q::from_integer(s.stat(kind).into()), "{kind} {s}");
                }
            }
        }
        let s = p(&[2, 1]);
        let moved = act(B, &s, &h_matrix(StatKind::Inv, 2).unwrap()).unwrap();
        assert_eq!(
            moved.inner(&h_matrix(StatKind::Des, 2).unwrap()).unwrap(),
            -Q::one()
        );
    }

    #[test]
    fn w_on_centered_statistics() {
        for n in 3..=5 {
            let g = SymmetricGroup::new(n).unwrap();
            for kind in StatKind::SKEW {
                let u = g.from_stat(kind, true);
                let expected = h_matrix(kind, n).unwrap().scaled(&ratio(-1, 2));
                assert_eq!(w(&g, &u).unwrap(), expected);
                assert_eq!(w_inv(&g, &expected).unwrap(), u);
            }
            assert!(matches!(
                w(&g, &g.delta_e()),
                Err(Error::NotInSubspace { .. })
            ));
        }
    }

    #[test]
    fn w_intertwines_the_ideal_side_translation() {
        let g = SymmetricGroup::new(4).unwrap();
        let a = SkewMatrix::from_fn(4, |i, j| ratio((i * i + 3 * j) as i64 - 7, 2));
        let u = w_inv(&g, &a).unwrap();
        for s in g.elements() {
            let t = g.translate(&u, s, g.ideal_side()).unwrap();
            assert_eq!(w(&g, &t).unwrap(), act(g.convention(), s, &a).unwrap());
        }
    }

    #[test]
    fn coefficient_recovery() {
        let g = SymmetricGroup::new(3).unwrap();
        let u12 = g.pseudounit(1, 2).unwrap();
        let a = w(&g, &u12).unwrap();
        for (k, s) in g.elements().iter().enumerate() {
            assert_eq!(&coefficient_recover(&a, s).unwrap(), u12.coeff(k));
            assert!(coefficient_recover(&SkewMatrix::zero(3), s)
                .unwrap()
                .is_zero());
            // with the pinned convention this is the matrix element form
            let me = act(B, s, &h_matrix(StatKind::Inv, 3).unwrap())
                .unwrap()
                .inner(&a)
                .unwrap();
            assert_eq!(me, coefficient_recover(&a, s).unwrap());
        }
    }

    #[test]
    fn projected_delta_closed_form_matches() {
        for n in 3..=5 {
            let g = SymmetricGroup::new(n).unwrap();
            let pd = projected_delta(&g).unwrap();
            assert_eq!(pd, projected_delta_closed_form(n), "n={n}");
            let nf = Q::from_integer(g.order().into());
            assert_eq!(p2(&pd), toeplitz_b(n).scaled(&(ratio(3, 1) / nf)));
            // ⟨Pδ_e, u⟩ recovers the identity coefficient of u ∈ H
            let a = SkewMatrix::from_fn(n, |i, j| ratio(i as i64 - 2 * j as i64, 3));
            let u = w_inv(&g, &a).unwrap();
            let lhs = pd.checked_add(&SkewMatrix::zero(n)).unwrap();
            let pd_elem = w_inv(&g, &lhs).unwrap();
            assert_eq!(pd_elem.inner(&u).unwrap(), u.coeff(0).clone());
            assert_eq!(
                coefficient_recover(&a, &Permutation::identity(n)).unwrap(),
                u.coeff(0).clone()
            );
        }
        assert!(projected_delta(&SymmetricGroup::new(2).unwrap()).is_err());
    }

    #[test]
    fn serialization() {
        let a = h_matrix(StatKind::Maj, 3).unwrap().scaled(&ratio(-1, 2));
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"{"n":3,"upper":["-1/2","0/1","-1/1"]}"#);
        assert_eq!(serde_json::from_str::<SkewMatrix>(&js).unwrap(), a);
        assert!(serde_json::from_str::<SkewMatrix>(r#"{"n":3,"upper":["1"]}"#).is_err());
        let mut buf = Vec::new();
        a.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("i,j,value"));
        assert_eq!(text.lines().count(), 4);
    }

    fn skew(n: usize) -> impl Strategy<Value = SkewMatrix> {
        proptest::collection::vec(-20i64..20, n * (n - 1) / 2).prop_map(move |v| {
            SkewMatrix::new(n, v.into_iter().map(|x| ratio(x, 1)).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn inner_symmetric_and_act_unitary(a in skew(5), b in skew(5), k in 0usize..120) {
            let s = Permutation::unrank(k, 5).unwrap();
            prop_assert_eq!(a.inner(&b).unwrap(), b.inner(&a).unwrap());
            let lhs = act(B, &s, &a).unwrap().inner(&act(B, &s, &b).unwrap()).unwrap();
            prop_assert_eq!(lhs, a.inner(&b).unwrap());
            prop_assert!(a.norm_sq() >= Q::zero());
            prop_assert_eq!(a.norm_sq().is_zero(), a.is_zero());
        }

        #[test]
        fn projections_idempotent_orthogonal_equivariant(a in skew(4), b in skew(4), k in 0usize..24) {
            let s = Permutation::unrank(k, 4).unwrap();
            prop_assert_eq!(p1(&p1(&a)), p1(&a));
            prop_assert_eq!(p2(&p2(&a)), p2(&a));
            prop_assert!(p1(&a).inner(&p2(&b)).unwrap().is_zero());
            prop_assert_eq!(p1(&a).checked_add(&p2(&a)).unwrap(), a.clone());
            prop_assert_eq!(act(B, &s, &p1(&a)).unwrap(), p1(&act(B, &s, &a).unwrap()));
            prop_assert_eq!(act(B, &s, &p2(&a)).unwrap(), p2(&act(B, &s, &a).unwrap()));
        }
    }
}
