//! Dense exact elements of the group algebra `Q[S_n]`.
//!
//! An element is a vector of `n!` rationals indexed by the lexicographic
//! enumeration of `S_n`. [`SymmetricGroup`] owns the enumeration, the
//! composition convention and cached tables; every operation that depends
//! on the group law goes through it.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::convention::{Convention, Side};
use crate::error::{Error, Result};
use crate::linalg::{self, ColumnBasis, ModEchelon, RankMethod, RANK_PRIMES};
use crate::perm::{self, chi_nat, chi_wedge2, factorial, Permutation, StatKind};
use crate::{fmt_ratio, parse_ratio, ratio, Q};

/// Largest degree for which the full `n! x n!` product table is cached
/// (`7!^2` entries of `u16`, about 50 MB).
pub const PRODUCT_TABLE_MAX_DEGREE: usize = 7;

/// Largest degree ranked by exact Bareiss elimination; above it ranks are
/// taken modulo two primes.
pub const EXACT_RANK_MAX_DEGREE: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupConfig {
    pub convention: Convention,
    /// Memory for one dense element is roughly `n! * 64` bytes; `n = 8` is
    /// 2.6 MB per element, `n = 9` about 23 MB.
    pub degree_cap: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        Self {
            convention: Convention::PINNED,
            degree_cap: perm::DEFAULT_DEGREE_CAP,
        }
    }
}

/// Irreducible representations used by the central idempotents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramLabel {
    /// `(n-1, 1)`, the natural representation.
    Row,
    /// `(n-2, 1, 1)`, its exterior square.
    Hook,
}

impl DiagramLabel {
    pub fn dimension(self, n: usize) -> usize {
        match self {
            DiagramLabel::Row => n - 1,
            DiagramLabel::Hook => (n - 1) * (n - 2) / 2,
        }
    }

    pub fn character(self, sigma: &Permutation) -> Result<i64> {
        match self {
            DiagramLabel::Row => chi_nat(sigma),
            DiagramLabel::Hook => chi_wedge2(sigma),
        }
    }
}

pub struct SymmetricGroup {
    n: usize,
    config: GroupConfig,
    elements: Vec<Permutation>,
    inverse: Vec<u32>,
    table: OnceLock<Option<Vec<u16>>>,
    pseudounit_basis: OnceLock<ColumnBasis>,
    gram_inverse: OnceLock<Vec<Vec<Q>>>,
}

impl fmt::Debug for SymmetricGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymmetricGroup")
            .field("n", &self.n)
            .field("config", &self.config)
            .finish_non_exhaustive()
    }
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_config(n, GroupConfig::default())
    }

    pub fn with_config(n: usize, config: GroupConfig) -> Result<Self> {
        let elements = perm::all_permutations_capped(n, config.degree_cap)?;
        let inverse = elements.iter().map(|p| p.inverse().rank() as u32).collect();
        Ok(Self {
            n,
            config,
            elements,
            inverse,
            table: OnceLock::new(),
            pseudounit_basis: OnceLock::new(),
            gram_inverse: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn config(&self) -> GroupConfig {
        self.config
    }

    pub fn convention(&self) -> Convention {
        self.config.convention
    }

    pub fn ideal_side(&self) -> Side {
        self.config.convention.ideal_side()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// `(i, j)` with `1 <= i < j <= n`, row-major.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        crate::skewrep::upper_pairs(self.n)
    }

    pub fn index_of(&self, sigma: &Permutation) -> Result<usize> {
        self.check_perm(sigma)?;
        Ok(sigma.rank())
    }

    fn check_perm(&self, sigma: &Permutation) -> Result<()> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: sigma.degree(),
            });
        }
        Ok(())
    }

    fn check_element(&self, u: &GAElement) -> Result<()> {
        if u.n != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: u.n,
            });
        }
        Ok(())
    }

    pub fn product(&self, a: &Permutation, b: &Permutation) -> Result<Permutation> {
        perm::compose(a, b, self.config.convention)
    }

    pub(crate) fn inverse_index(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    fn product_index_direct(&self, a: usize, b: usize) -> usize {
        let (x, y) = match self.config.convention {
            Convention::RightToLeft => (&self.elements[a], &self.elements[b]),
            Convention::LeftToRight => (&self.elements[b], &self.elements[a]),
        };
        // x ∘ y
        let xi = x.images0();
        let mut buf = [0u8; perm::MAX_DEGREE];
        for (slot, &j) in buf.iter_mut().zip(y.images0()) {
            *slot = xi[j as usize];
        }
        perm::rank_of_images(&buf[..self.n])
    }

    fn table(&self) -> Option<&[u16]> {
        self.table
            .get_or_init(|| {
                if self.n > PRODUCT_TABLE_MAX_DEGREE {
                    return None;
                }
                let order = self.order();
                let rows: Vec<Vec<u16>> = (0..order)
                    .into_par_iter()
                    .map(|a| {
                        (0..order)
                            .map(|b| self.product_index_direct(a, b) as u16)
                            .collect()
                    })
                    .collect();
                Some(rows.concat())
            })
            .as_deref()
    }

    /// Index of `elements[a] · elements[b]` under the configured convention.
    pub fn product_index(&self, a: usize, b: usize) -> usize {
        match self.table() {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.product_index_direct(a, b),
        }
    }

    fn element_from(&self, coeffs: Vec<Q>) -> GAElement {
        debug_assert_eq!(coeffs.len(), self.order());
        GAElement { n: self.n, coeffs }
    }

    pub fn element(&self, coeffs: Vec<Q>) -> Result<GAElement> {
        GAElement::new(self.n, coeffs)
    }

    pub fn zero(&self) -> GAElement {
        self.element_from(vec![Q::zero(); self.order()])
    }

    /// The all-ones element `Σ_σ σ`.
    pub fn ones(&self) -> GAElement {
        self.element_from(vec![Q::one(); self.order()])
    }

    pub fn delta(&self, sigma: &Permutation) -> Result<GAElement> {
        let k = self.index_of(sigma)?;
        let mut u = self.zero();
        u.coeffs[k] = Q::one();
        Ok(u)
    }

    pub fn delta_e(&self) -> GAElement {
        let mut u = self.zero();
        u.coeffs[0] = Q::one();
        u
    }

    pub fn from_fn(&self, f: impl Fn(&Permutation) -> Q) -> GAElement {
        self.element_from(self.elements.iter().map(f).collect())
    }

    /// `Σ_σ stat(σ)/n!`.
    pub fn stat_mean(&self, kind: StatKind) -> Q {
        let total: u64 = self.elements.iter().map(|p| p.stat(kind) as u64).sum();
        Q::new(total.into(), (self.order() as u64).into())
    }

    /// `Σ_σ stat(σ) σ`, optionally centered so the coefficients sum to zero.
    pub fn from_stat(&self, kind: StatKind, centered: bool) -> GAElement {
        let shift = if centered {
            self.stat_mean(kind)
        } else {
            Q::zero()
        };
        self.from_fn(|p| Q::from_integer(p.stat(kind).into()) - &shift)
    }

    /// Unnormalized pseudomatrix unit: coefficient `+1` where `σ(i) < σ(j)`,
    /// `-1` where `σ(i) > σ(j)`, and the zero element when `i == j`.
    pub fn pseudounit(&self, i: usize, j: usize) -> Result<GAElement> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::InvalidPair { i, j, n: self.n });
        }
        if i == j {
            return Ok(self.zero());
        }
        Ok(self.from_fn(|p| {
            if p.apply(i) < p.apply(j) {
                Q::one()
            } else {
                -Q::one()
            }
        }))
    }

    /// Exact convolution `(u * v)(σ) = Σ_g u(g) v(g^-1 σ)`, i.e. the
    /// coefficient of `σ` in the product `u v`.
    pub fn convolve(&self, u: &GAElement, v: &GAElement) -> Result<GAElement> {
        self.check_element(u)?;
        self.check_element(v)?;
        let order = self.order();
        let (un, ud) = linalg::integer_row(&u.coeffs);
        let (vn, vd) = linalg::integer_row(&v.coeffs);
        let support: Vec<usize> = (0..order).filter(|&g| !un[g].is_zero()).collect();
        let left_div: Vec<usize> = support.iter().map(|&g| self.inverse_index(g)).collect();
        let bound = linalg::max_abs(&un) * linalg::max_abs(&vn) * BigInt::from(order);
        let small = bound < (BigInt::one() << 120usize);
        let nums: Vec<BigInt> = if small {
            let ui: Vec<i128> = support.iter().map(|&g| un[g].to_i128().unwrap()).collect();
            let vi: Vec<i128> = vn.iter().map(|x| x.to_i128().unwrap()).collect();
            (0..order)
                .into_par_iter()
                .map(|s| {
                    let mut acc = 0i128;
                    for (a, &gi) in ui.iter().zip(&left_div) {
                        acc += a * vi[self.product_index(gi, s)];
                    }
                    BigInt::from(acc)
                })
                .collect()
        } else {
            (0..order)
                .into_par_iter()
                .map(|s| {
                    let mut acc = BigInt::zero();
                    for (&g, &gi) in support.iter().zip(&left_div) {
                        acc += &un[g] * &vn[self.product_index(gi, s)];
                    }
                    acc
                })
                .collect()
        };
        let denom = ud * vd;
        Ok(self.element_from(nums.into_iter().map(|x| Q::new(x, denom.clone())).collect()))
    }

    /// Source index for each target under translation by `sigma`:
    /// left `σu` has `(σu)(τ) = u(σ^-1 τ)`, right `uσ` has `(uσ)(τ) = u(τ σ^-1)`.
    fn translation_map(&self, sigma: usize, side: Side) -> Vec<usize> {
        let si = self.inverse_index(sigma);
        (0..self.order())
            .map(|t| match side {
                Side::Left => self.product_index(si, t),
                Side::Right => self.product_index(t, si),
            })
            .collect()
    }

    /// Multiplication by the basis element `sigma` on `side`.
    pub fn translate(&self, u: &GAElement, sigma: &Permutation, side: Side) -> Result<GAElement> {
        self.check_element(u)?;
        let k = self.index_of(sigma)?;
        let map = self.translation_map(k, side);
        Ok(self.element_from(map.into_iter().map(|s| u.coeffs[s].clone()).collect()))
    }

    fn rank_method(&self) -> RankMethod {
        if self.n <= EXACT_RANK_MAX_DEGREE {
            RankMethod::Bareiss
        } else {
            RankMethod::Modular
        }
    }

    /// Rank of an explicit family of elements.
    pub fn span_rank<'a>(
        &self,
        elements: impl IntoIterator<Item = &'a GAElement>,
    ) -> Result<usize> {
        let rows: Vec<Vec<BigInt>> = elements
            .into_iter()
            .map(|u| {
                self.check_element(u)?;
                Ok(linalg::integer_row(&u.coeffs).0)
            })
            .collect::<Result<_>>()?;
        Ok(linalg::rank(rows, self.rank_method()))
    }

    /// Dimension of the span of all `side`-translates of `u` (the dual
    /// complexity when `side` is the ideal side).
    pub fn ideal_dimension(&self, u: &GAElement, side: Side) -> Result<usize> {
        self.translates_rank(&[u], side)
    }

    /// Dimension of the span of all `side`-translates of all `generators`.
    pub fn translates_rank(&self, generators: &[&GAElement], side: Side) -> Result<usize> {
        for u in generators {
            self.check_element(u)?;
        }
        let ints: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|u| linalg::integer_row(&u.coeffs).0)
            .collect();
        let maps: Vec<Vec<usize>> = (0..self.order())
            .into_par_iter()
            .map(|s| self.translation_map(s, side))
            .collect();
        let exact = || {
            let rows = ints
                .iter()
                .flat_map(|u| {
                    maps.iter()
                        .map(move |m| m.iter().map(|&s| u[s].clone()).collect())
                })
                .collect();
            linalg::bareiss_rank(rows)
        };
        Ok(match self.rank_method() {
            RankMethod::Bareiss => exact(),
            RankMethod::Modular => {
                let ranks: Vec<usize> = RANK_PRIMES
                    .iter()
                    .map(|&p| {
                        let mut ech = ModEchelon::new(p);
                        for u in &ints {
                            let res = linalg::residues(u, p);
                            for m in &maps {
                                ech.insert(m.iter().map(|&s| res[s]).collect());
                                if ech.rank() == self.order() {
                                    break;
                                }
                            }
                        }
                        ech.rank()
                    })
                    .collect();
                if ranks[0] == ranks[1] {
                    ranks[0]
                } else {
                    exact()
                }
            }
        })
    }

    /// Entries `⟨u_ij, u_kl⟩ / n!` over all pairs `i<j`, `k<l`.
    pub fn gram_pseudounits(&self) -> Result<PseudounitGram> {
        let pairs = self.pairs();
        let units: Vec<GAElement> = pairs
            .iter()
            .map(|&(i, j)| self.pseudounit(i, j))
            .collect::<Result<_>>()?;
        let scale = Q::from_integer(self.order().into());
        let entries = units
            .iter()
            .map(|a| {
                units
                    .iter()
                    .map(|b| a.inner(b).map(|x| x / &scale))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(PseudounitGram { pairs, entries })
    }

    /// `Σ_g χ_λ(g) g`.
    pub fn character_element(&self, label: DiagramLabel) -> Result<GAElement> {
        let coeffs = self
            .elements
            .iter()
            .map(|p| label.character(p).map(|c| Q::from_integer(c.into())))
            .collect::<Result<_>>()?;
        Ok(self.element_from(coeffs))
    }

    /// `C_λ u` with `C_λ = (dim π_λ / n!) Σ_g χ_λ(g) g`.
    pub fn central_idempotent_apply(
        &self,
        label: DiagramLabel,
        u: &GAElement,
    ) -> Result<GAElement> {
        if self.n < 3 {
            return Err(Error::DegreeTooSmall { n: self.n, min: 3 });
        }
        self.check_element(u)?;
        let chi = self.character_element(label)?;
        let scale = ratio(label.dimension(self.n) as i64, self.order() as i64);
        Ok(self.convolve(&chi, u)?.scaled(&scale))
    }

    /// `⟨e'_ij, e'_kl⟩` for the rescaled units `e' = A e`, computed as
    /// `(3/(n+1)) ⟨C1 e_ij, C1 e_kl⟩ + 3 ⟨C2 e_ij, C2 e_kl⟩`; the cross terms
    /// vanish because the two isotypic components are orthogonal.
    pub fn primed_inner(&self, a: (usize, usize), b: (usize, usize)) -> Result<Q> {
        let n = self.n;
        for &(i, j) in &[a, b] {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::InvalidPair { i, j, n });
            }
        }
        let ua = self.pseudounit(a.0, a.1)?;
        let ub = self.pseudounit(b.0, b.1)?;
        let row_a = self.central_idempotent_apply(DiagramLabel::Row, &ua)?;
        let row_b = self.central_idempotent_apply(DiagramLabel::Row, &ub)?;
        let hook_a = self.central_idempotent_apply(DiagramLabel::Hook, &ua)?;
        let hook_b = self.central_idempotent_apply(DiagramLabel::Hook, &ub)?;
        Ok(self.primed_combination(&row_a.inner(&row_b)?, &hook_a.inner(&hook_b)?))
    }

    /// Combines unnormalized isotypic inner products into `⟨e', e'⟩`.
    pub(crate) fn primed_combination(&self, row: &Q, hook: &Q) -> Q {
        let nf = Q::from_integer(self.order().into());
        let row_part = ratio(3, self.n as i64 + 1) * row / &nf;
        let hook_part = ratio(3, 1) * hook / &nf;
        row_part + hook_part
    }

    /// Pseudomatrix units `u_ij` (row-major `i<j`) prepared for exact solves.
    pub fn pseudounit_basis(&self) -> &ColumnBasis {
        self.pseudounit_basis.get_or_init(|| {
            let vectors = self
                .pairs()
                .into_iter()
                .map(|(i, j)| self.pseudounit(i, j).expect("valid pair").coeffs)
                .collect();
            ColumnBasis::new(vectors).expect("pseudomatrix units are independent")
        })
    }

    /// Inverse of the normalized pseudounit Gram matrix, built from the
    /// overlap case analysis. Callers must verify whatever they solve with it.
    pub(crate) fn pseudounit_gram_inverse(&self) -> &[Vec<Q>] {
        self.gram_inverse.get_or_init(|| {
            let pairs = self.pairs();
            let gram: Vec<Vec<Q>> = pairs
                .iter()
                .map(|&a| {
                    pairs
                        .iter()
                        .map(|&b| PseudounitGram::predicted(a, b))
                        .collect()
                })
                .collect();
            linalg::invert(&gram).expect("pseudounit Gram matrix is nonsingular")
        })
    }

    /// Coordinates of `u` in the pseudomatrix units, or the residual witness
    /// when `u` is outside their span.
    pub fn pseudounit_coordinates(&self, u: &GAElement) -> Result<Vec<Q>> {
        self.check_element(u)?;
        if self.n < 2 {
            return if u.is_zero() {
                Ok(Vec::new())
            } else {
                Err(Error::NotInSubspace {
                    space: "the pseudounit span",
                    residual: residual_witness(u.coeffs.iter().cloned().enumerate().collect()),
                })
            };
        }
        self.pseudounit_basis()
            .solve(&u.coeffs)
            .map_err(|r| Error::NotInSubspace {
                space: "the pseudounit span",
                residual: residual_witness(r),
            })
    }
}

pub(crate) fn residual_witness(r: Vec<(usize, Q)>) -> Vec<(usize, String)> {
    r.into_iter()
        .take(8)
        .map(|(k, q)| (k, fmt_ratio(&q)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudounitGram {
    pub pairs: Vec<(usize, usize)>,
    pub entries: Vec<Vec<Q>>,
}

impl PseudounitGram {
    /// The value predicted by the case analysis on index overlap.
    pub fn predicted(a: (usize, usize), b: (usize, usize)) -> Q {
        let (i, j) = a;
        let (k, l) = b;
        if a == b {
            Q::one()
        } else if i == k || j == l {
            ratio(1, 3)
        } else if i == l || j == k {
            ratio(-1, 3)
        } else {
            Q::zero()
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GAElementRepr", try_from = "GAElementRepr")]
pub struct GAElement {
    n: usize,
    coeffs: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct GAElementRepr {
    n: usize,
    coeffs: Vec<String>,
}

impl From<GAElement> for GAElementRepr {
    fn from(u: GAElement) -> Self {
        Self {
            n: u.n,
            coeffs: u.coeffs.iter().map(fmt_ratio).collect(),
        }
    }
}

impl TryFrom<GAElementRepr> for GAElement {
    type Error = Error;

    fn try_from(r: GAElementRepr) -> Result<Self> {
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| parse_ratio(s))
            .collect::<Result<_>>()?;
        GAElement::new(r.n, coeffs)
    }
}

impl fmt::Debug for GAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GAElement(n={}, [", self.n)?;
        for (k, c) in self.coeffs.iter().enumerate().take(12) {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        if self.coeffs.len() > 12 {
            write!(f, ", ...")?;
        }
        write!(f, "])")
    }
}

impl GAElement {
    pub fn new(n: usize, coeffs: Vec<Q>) -> Result<Self> {
        if n > perm::MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                n,
                cap: perm::MAX_DEGREE,
            });
        }
        let expected = factorial(n) as usize;
        if coeffs.len() != expected {
            return Err(Error::LengthMismatch {
                got: coeffs.len(),
                expected,
            });
        }
        Ok(Self { n, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Q> {
        self.coeffs
    }

    pub fn coeff(&self, index: usize) -> &Q {
        &self.coeffs[index]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn sum(&self) -> Q {
        self.coeffs.iter().sum()
    }

    pub fn inner(&self, other: &GAElement) -> Result<Q> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn scaled(&self, k: &Q) -> GAElement {
        GAElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn checked_add(&self, other: &GAElement) -> Result<GAElement> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &GAElement) -> Result<GAElement> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &GAElement, f: impl Fn(&Q, &Q) -> Q) -> Result<GAElement> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(GAElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// Index and values of the first coefficient where `self` and `other` differ.
    pub fn first_difference(&self, other: &GAElement) -> Option<(usize, Q, Q)> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(k, (a, b))| (k, a.clone(), b.clone()))
    }
}

/// Panics on degree mismatch; use [`GAElement::checked_add`] otherwise.
impl Add for &GAElement {
    type Output = GAElement;

    fn add(self, rhs: &GAElement) -> GAElement {
        self.checked_add(rhs).expect("degree mismatch in addition")
    }
}

impl Sub for &GAElement {
    type Output = GAElement;

    fn sub(self, rhs: &GAElement) -> GAElement {
        self.checked_sub(rhs)
            .expect("degree mismatch in subtraction")
    }
}

impl Neg for &GAElement {
    type Output = GAElement;

    fn neg(self) -> GAElement {
        self.scaled(&-Q::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize) -> SymmetricGroup {
        SymmetricGroup::new(n).unwrap()
    }

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v).unwrap()
    }

    #[test]
    fn from_stat_small() {
        let s2 = g(2);
        let des = s2.from_stat(StatKind::Des, false);
        assert_eq!(des.coeffs(), &[Q::zero(), Q::one()]);
        let centered = s2.from_stat(StatKind::Des, true);
        assert_eq!(centered.coeffs(), &[ratio(-1, 2), ratio(1, 2)]);
        assert_eq!(g(5).from_stat(StatKind::Maj, false).sum(), ratio(600, 1));
    }

    #[test]
    fn centering_constants() {
        for n in 2..=7 {
            let s = g(n);
            let n = n as i64;
            assert_eq!(s.stat_mean(StatKind::Des), ratio(n - 1, 2));
            assert_eq!(s.stat_mean(StatKind::Maj), ratio(n * (n - 1), 4));
            assert_eq!(s.stat_mean(StatKind::Inv), ratio(n * (n - 1), 4));
            assert!(s.from_stat(StatKind::Inv, true).sum().is_zero());
        }
    }

    #[test]
    fn convolution_units() {
        let s4 = g(4);
        let v = s4.from_stat(StatKind::Maj, true);
        assert_eq!(s4.convolve(&s4.delta_e(), &v).unwrap(), v);
        assert_eq!(s4.convolve(&v, &s4.delta_e()).unwrap(), v);
        let ones = s4.ones();
        assert_eq!(
            s4.convolve(&ones, &ones).unwrap(),
            ones.scaled(&ratio(24, 1))
        );
        let des = s4.from_stat(StatKind::Des, true);
        assert_eq!(s4.convolve(&des, &des).unwrap(), des.scaled(&ratio(-6, 1)));
        assert!(s4.convolve(&des, &g(3).ones()).is_err());
    }

    #[test]
    fn convolution_is_the_group_product_on_deltas() {
        let s3 = g(3);
        for a in s3.elements() {
            for b in s3.elements() {
                let lhs = s3
                    .convolve(&s3.delta(a).unwrap(), &s3.delta(b).unwrap())
                    .unwrap();
                assert_eq!(lhs, s3.delta(&s3.product(a, b).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn bigint_convolution_path() {
        let s3 = g(3);
        let huge = Q::from_integer(BigInt::one() << 100usize);
        let u = s3.delta_e().scaled(&huge);
        let v = s3.from_stat(StatKind::Inv, false).scaled(&huge);
        let w = s3.convolve(&u, &v).unwrap();
        assert_eq!(
            w,
            s3.from_stat(StatKind::Inv, false).scaled(&(&huge * &huge))
        );
    }

    #[test]
    fn inner_products() {
        let s4 = g(4);
        assert_eq!(s4.delta_e().inner(&s4.delta_e()).unwrap(), Q::one());
        assert!(s4
            .from_stat(StatKind::Des, true)
            .inner(&s4.ones())
            .unwrap()
            .is_zero());
        for n in 3..=6 {
            let s = g(n);
            let u12 = s.pseudounit(1, 2).unwrap();
            let u13 = s.pseudounit(1, 3).unwrap();
            let nf = Q::from_integer(s.order().into());
            assert_eq!(u12.inner(&u13).unwrap() / nf, ratio(1, 3));
        }
    }

    #[test]
    fn translations() {
        let s3 = g(3);
        let u = s3.from_stat(StatKind::Maj, false);
        for s in s3.elements() {
            let d = s3.translate(&s3.delta_e(), s, Side::Left).unwrap();
            assert_eq!(d, s3.delta(s).unwrap());
            let back = s3
                .translate(
                    &s3.translate(&u, s, Side::Left).unwrap(),
                    &s.inverse(),
                    Side::Left,
                )
                .unwrap();
            assert_eq!(back, u);
            assert_eq!(
                s3.translate(&u, &Permutation::identity(3), Side::Right)
                    .unwrap(),
                u
            );
        }
    }

    #[test]
    fn ideal_side_translates_of_u12_are_pseudounits() {
        // Translation on the ideal side reindexes u(τ) -> u(τ ∘ σ^-1), so
        // u_12 goes to ±u_{σ^-1(1) σ^-1(2)}.
        let s3 = g(3);
        let u12 = s3.pseudounit(1, 2).unwrap();
        for s in s3.elements() {
            let t = s3.translate(&u12, s, s3.ideal_side()).unwrap();
            let si = s.inverse();
            let expected = s3.pseudounit(si.apply(1), si.apply(2)).unwrap();
            assert_eq!(t, expected, "σ = {s}");
        }
    }

    #[test]
    fn pseudounit_properties() {
        let s2 = g(2);
        assert_eq!(
            s2.pseudounit(1, 2).unwrap().coeffs(),
            &[Q::one(), -Q::one()]
        );
        let s4 = g(4);
        assert!(s4.pseudounit(2, 2).unwrap().is_zero());
        assert_eq!(s4.pseudounit(3, 1).unwrap(), -&s4.pseudounit(1, 3).unwrap());
        assert!(s4.pseudounit(0, 1).is_err());
        assert!(s4.pseudounit(1, 5).is_err());
        let s3 = g(3);
        let nf = ratio(6, 1);
        let u12 = s3.pseudounit(1, 2).unwrap();
        let u23 = s3.pseudounit(2, 3).unwrap();
        assert_eq!(u12.inner(&u23).unwrap() / nf, ratio(-1, 3));
    }

    #[test]
    fn gram_values() {
        let gram = g(4).gram_pseudounits().unwrap();
        let at = |a, b| {
            let i = gram.pairs.iter().position(|&x| x == a).unwrap();
            let j = gram.pairs.iter().position(|&x| x == b).unwrap();
            gram.entries[i][j].clone()
        };
        assert_eq!(at((1, 2), (3, 4)), Q::zero());
        assert_eq!(at((1, 2), (1, 2)), Q::one());
        assert_eq!(at((1, 2), (1, 3)), ratio(1, 3));
        assert_eq!(at((1, 3), (2, 3)), ratio(1, 3));
        assert_eq!(at((1, 2), (2, 4)), ratio(-1, 3));
    }

    #[test]
    fn ideal_dimensions_small() {
        let s4 = g(4);
        assert_eq!(s4.ideal_dimension(&s4.delta_e(), Side::Left).unwrap(), 24);
        let inv = s4.from_stat(StatKind::Inv, false);
        assert_eq!(s4.ideal_dimension(&inv, s4.ideal_side()).unwrap(), 7);
        let exc = s4.from_stat(StatKind::Exc, false);
        assert_eq!(s4.ideal_dimension(&exc, s4.ideal_side()).unwrap(), 10);
    }

    #[test]
    fn modular_and_exact_ranks_agree_at_n5() {
        // Force the modular path through a group with a larger exact limit.
        let s5 = g(5);
        let maj = s5.from_stat(StatKind::Maj, false);
        let exact = s5.ideal_dimension(&maj, Side::Left).unwrap();
        let ints = linalg::integer_row(maj.coeffs()).0;
        let rows: Vec<Vec<BigInt>> = (0..s5.order())
            .map(|s| {
                s5.translation_map(s, Side::Left)
                    .into_iter()
                    .map(|k| ints[k].clone())
                    .collect()
            })
            .collect();
        assert_eq!(linalg::rank(rows, RankMethod::Modular), exact);
        assert_eq!(exact, 11);
    }

    #[test]
    fn central_idempotents() {
        let s4 = g(4);
        let ones = s4.ones();
        assert!(s4
            .central_idempotent_apply(DiagramLabel::Row, &ones)
            .unwrap()
            .is_zero());
        let u = s4.from_stat(StatKind::Maj, false);
        for label in [DiagramLabel::Row, DiagramLabel::Hook] {
            let once = s4.central_idempotent_apply(label, &u).unwrap();
            let twice = s4.central_idempotent_apply(label, &once).unwrap();
            assert_eq!(once, twice);
        }
        let row = s4.central_idempotent_apply(DiagramLabel::Row, &u).unwrap();
        assert!(s4
            .central_idempotent_apply(DiagramLabel::Hook, &row)
            .unwrap()
            .is_zero());
        assert!(g(2)
            .central_idempotent_apply(DiagramLabel::Row, &g(2).ones())
            .is_err());
    }

    #[test]
    fn c1_units_and_sum_at_n4() {
        let s4 = g(4);
        let n = 4;
        for (i, j) in s4.pairs() {
            let uij = s4.pseudounit(i, j).unwrap();
            let c1 = s4
                .central_idempotent_apply(DiagramLabel::Row, &uij)
                .unwrap();
            let mut expected = s4.zero();
            for k in 1..=n {
                expected = &expected + &s4.pseudounit(i, k).unwrap();
                expected = &expected + &s4.pseudounit(k, j).unwrap();
            }
            assert_eq!(c1, expected.scaled(&ratio(1, n as i64)));
            let c2 = s4
                .central_idempotent_apply(DiagramLabel::Hook, &uij)
                .unwrap();
            assert_eq!(&c1 + &c2, uij);
        }
    }

    #[test]
    fn primed_units_orthonormal_n4() {
        let s4 = g(4);
        assert_eq!(s4.primed_inner((1, 2), (1, 2)).unwrap(), Q::one());
        assert_eq!(s4.primed_inner((1, 2), (3, 4)).unwrap(), Q::zero());
        assert_eq!(s4.primed_inner((1, 2), (1, 3)).unwrap(), Q::zero());
        assert!(s4.primed_inner((2, 1), (1, 3)).is_err());
        let u12 = s4.pseudounit(1, 2).unwrap();
        let u13 = s4.pseudounit(1, 3).unwrap();
        let c12 = s4
            .central_idempotent_apply(DiagramLabel::Row, &u12)
            .unwrap();
        let c13 = s4
            .central_idempotent_apply(DiagramLabel::Row, &u13)
            .unwrap();
        assert_eq!(c12.inner(&c13).unwrap() / ratio(24, 1), ratio(5, 12));
    }

    #[test]
    fn pseudounit_coordinates_roundtrip() {
        let s4 = g(4);
        let inv = s4.from_stat(StatKind::Inv, true);
        let coords = s4.pseudounit_coordinates(&inv).unwrap();
        assert!(coords.iter().all(|c| *c == ratio(-1, 2)));
        let err = s4.pseudounit_coordinates(&s4.delta_e()).unwrap_err();
        assert!(matches!(err, Error::NotInSubspace { .. }));
    }

    #[test]
    fn json_roundtrip() {
        let s3 = g(3);
        let u = s3.from_stat(StatKind::Maj, true);
        let js = serde_json::to_string(&u).unwrap();
        assert!(js.contains("\"-3/2\""));
        assert!(js.contains("\"1/2\""));
        let back: GAElement = serde_json::from_str(&js).unwrap();
        assert_eq!(back, u);
        assert!(serde_json::from_str::<GAElement>(r#"{"n":3,"coeffs":["1"]}"#).is_err());
    }

    #[test]
    fn degree_mismatch_errors() {
        let s3 = g(3);
        let s4 = g(4);
        assert!(s3
            .translate(&s4.ones(), &p(&[1, 2, 3]), Side::Left)
            .is_err());
        assert!(s3
            .translate(&s3.ones(), &p(&[1, 2, 3, 4]), Side::Left)
            .is_err());
        assert!(s3.ones().inner(&s4.ones()).is_err());
    }
}
