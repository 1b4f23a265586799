//! Compositions and the descent-algebra basis `B_p`.
//!
//! A composition of `n` is encoded by the set of its proper partial sums, a
//! mask with bit `k - 1` set iff `k` is a partial sum. Enumeration runs over
//! masks `0..2^(n-1)`, so `(n)` comes first and `(1^n)` last.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupalg::{residual_witness, GAElement, SymmetricGroup};
use crate::linalg::ColumnBasis;
use crate::perm::StatKind;
use crate::{ratio, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Parse(format!("not a composition: {parts:?}")));
        }
        Ok(Self { parts })
    }

    /// Inverse of [`Composition::mask`]; bits at or above `n - 1` are ignored.
    pub fn from_mask(mask: u32, n: usize) -> Self {
        let mut parts = Vec::new();
        let mut last = 0;
        for k in 1..n {
            if mask >> (k - 1) & 1 == 1 {
                parts.push(k - last);
                last = k;
            }
        }
        parts.push(n - last);
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `α_1, α_1 + α_2, ...`, excluding `n`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.parts[..self.parts.len() - 1]
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    pub fn mask(&self) -> u32 {
        self.partial_sums().iter().fold(0, |m, &k| m | 1 << (k - 1))
    }

    /// `(1, ..., 1, 2, 1, ..., 1)` with the 2 in position `k`, `1 <= k < n`.
    pub fn p_k(n: usize, k: usize) -> Result<Self> {
        if !(1 <= k && k < n) {
            return Err(Error::IndexOutOfRange { index: k, limit: n });
        }
        let full = (1u32 << (n - 1)) - 1;
        Ok(Self::from_mask(full & !(1 << (k - 1)), n))
    }

    /// `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `2^(n-1)` compositions of `n`, in mask order.
pub fn compositions(n: usize) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { n, min: 1 });
    }
    if n > 31 {
        return Err(Error::DegreeTooLarge { n, cap: 31 });
    }
    Ok((0..1u32 << (n - 1))
        .map(|m| Composition::from_mask(m, n))
        .collect())
}

/// `B_p = Σ σ` over `σ` whose descent set lies in the partial sums of `p`.
pub fn b_element(g: &SymmetricGroup, p: &Composition) -> Result<GAElement> {
    if p.n() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: p.n(),
        });
    }
    let mask = p.mask();
    Ok(g.from_fn(|s| {
        if s.descent_mask() & !mask == 0 {
            Q::one()
        } else {
            Q::zero()
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub parts: Composition,
    #[serde(with = "crate::spectra::ratio_str")]
    pub coefficient: Q,
}

/// JSON: `{"member": [terms]}` or `{"not_member": {"residual": [[index, "p/q"], ...]}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    /// Coefficients over all compositions in enumeration order.
    Member(Vec<Term>),
    NotMember {
        residual: Vec<(usize, String)>,
    },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }

    pub fn terms(&self) -> Option<&[Term]> {
        match self {
            Membership::Member(t) => Some(t),
            Membership::NotMember { .. } => None,
        }
    }

    /// Nonzero terms only.
    pub fn support(&self) -> Option<Vec<Term>> {
        self.terms().map(|t| {
            t.iter()
                .filter(|x| !x.coefficient.is_zero())
                .cloned()
                .collect()
        })
    }
}

/// The `B_p` of one degree, prepared for exact membership solves.
pub struct SolomonBasis {
    compositions: Vec<Composition>,
    elements: Vec<GAElement>,
    basis: ColumnBasis,
}

impl SolomonBasis {
    pub fn new(g: &SymmetricGroup) -> Result<Self> {
        let compositions = compositions(g.degree())?;
        let elements: Vec<GAElement> = compositions
            .iter()
            .map(|p| b_element(g, p))
            .collect::<Result<_>>()?;
        let basis = ColumnBasis::new(elements.iter().map(|e| e.coeffs().to_vec()).collect())
            .ok_or_else(|| Error::Oracle("descent-algebra basis is dependent".into()))?;
        Ok(Self {
            compositions,
            elements,
            basis,
        })
    }

    pub fn compositions(&self) -> &[Composition] {
        &self.compositions
    }

    pub fn elements(&self) -> &[GAElement] {
        &self.elements
    }

    pub fn membership(&self, u: &GAElement) -> Result<Membership> {
        let n = self.compositions[0].n();
        if u.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: u.degree(),
            });
        }
        Ok(match self.basis.solve(u.coeffs()) {
            Ok(x) => Membership::Member(
                self.compositions
                    .iter()
                    .cloned()
                    .zip(x)
                    .map(|(parts, coefficient)| Term { parts, coefficient })
                    .collect(),
            ),
            Err(r) => Membership::NotMember {
                residual: residual_witness(r),
            },
        })
    }
}

/// Expands `u` in the `B_p`, or reports that it lies outside their span.
pub fn solomon_membership(g: &SymmetricGroup, u: &GAElement) -> Result<Membership> {
    SolomonBasis::new(g)?.membership(u)
}

/// `u_des = (n-1) B_(1^n) - Σ_k B_{p_k}` and
/// `u_maj = n(n-1)/2 B_(1^n) - Σ_k k B_{p_k}`, as nonzero terms.
pub fn expected_expansion(kind: StatKind, n: usize) -> Result<Vec<Term>> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    let n_i = n as i64;
    let (top, weight): (Q, fn(i64) -> i64) = match kind {
        StatKind::Des => (ratio(n_i - 1, 1), |_| 1),
        StatKind::Maj => (ratio(n_i * (n_i - 1), 2), |k| k),
        other => return Err(Error::UnsupportedStat(other)),
    };
    let mut terms = vec![Term {
        parts: Composition::ones(n),
        coefficient: top,
    }];
    for k in 1..n {
        terms.push(Term {
            parts: Composition::p_k(n, k)?,
            coefficient: ratio(-weight(k as i64), 1),
        });
    }
    terms.sort_by_key(|t| t.parts.mask());
    Ok(terms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub failures: Vec<(Composition, Composition)>,
    pub passed: bool,
}

/// Checks that every product `B_p B_q` lies in the span of the `B_r`.
pub fn closure_check(g: &SymmetricGroup) -> Result<ClosureReport> {
    let basis = SolomonBasis::new(g)?;
    let m = basis.elements.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).collect();
    let outcomes: Vec<Option<(usize, usize)>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let prod = g.convolve(&basis.elements[a], &basis.elements[b])?;
            Ok((!basis.membership(&prod)?.is_member()).then_some((a, b)))
        })
        .collect::<Result<_>>()?;
    let failures: Vec<_> = outcomes
        .into_iter()
        .flatten()
        .map(|(a, b)| (basis.compositions[a].clone(), basis.compositions[b].clone()))
        .collect();
    Ok(ClosureReport {
        n: g.degree(),
        pairs_checked: pairs.len(),
        passed: failures.is_empty(),
        failures,
    })
}
