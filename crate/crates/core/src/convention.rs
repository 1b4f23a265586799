//! Composition conventions for `S_n` and the oracle that pins one of them.
//!
//! Nothing in the definitions of the statistics fixes whether `στ` means
//! "apply τ, then σ" or "apply σ, then τ", nor on which side translates of
//! the pseudomatrix units stay inside their span. The [`bootstrap`] oracle
//! tries all four (convention, side) pairs at a small degree and keeps the
//! one under which the ideal and the convolution identities both check
//! out. The result is pinned as [`Convention::PINNED`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupalg::{GroupConfig, SymmetricGroup};
use crate::perm::StatKind;
use crate::spectra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    /// `(στ)(i) = σ(τ(i))`, the right factor acts first ("variantA").
    #[serde(rename = "variantA")]
    RightToLeft,
    /// `(στ)(i) = τ(σ(i))`, the left factor acts first ("variantB").
    #[serde(rename = "variantB")]
    LeftToRight,
}

impl Convention {
    /// Selected by [`bootstrap`] and asserted by a regression test.
    pub const PINNED: Convention = Convention::LeftToRight;

    pub fn name(self) -> &'static str {
        match self {
            Convention::RightToLeft => "variantA",
            Convention::LeftToRight => "variantB",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Convention::RightToLeft => "right-to-left, (st)(i) = s(t(i))",
            Convention::LeftToRight => "left-to-right, (st)(i) = t(s(i))",
        }
    }

    /// Side on which translates of the pseudomatrix units stay in their span.
    ///
    /// Both pairings describe the same reindexing `u(τ) -> u(τ ∘ σ^-1)` of
    /// coefficient vectors.
    pub fn ideal_side(self) -> Side {
        match self {
            Convention::RightToLeft => Side::Right,
            Convention::LeftToRight => Side::Left,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "variantA" | "a" | "A" | "right-to-left" => Ok(Convention::RightToLeft),
            "variantB" | "b" | "B" | "left-to-right" => Ok(Convention::LeftToRight),
            _ => Err(Error::Parse(format!("unknown convention {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub convention: Convention,
    pub side: Side,
    /// Rank of all `side`-translates of all pseudomatrix units.
    pub translate_span_dim: usize,
    /// The centered `des`, `maj`, `inv` vectors lie in that span.
    pub centered_in_span: bool,
    /// All six convolution identities hold under `convention`.
    pub identities_hold: bool,
}

impl Candidate {
    pub fn accepted(&self, n: usize) -> bool {
        self.translate_span_dim == n * (n - 1) / 2 && self.centered_in_span && self.identities_hold
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BootstrapOutcome {
    pub n: usize,
    pub candidates: Vec<Candidate>,
    pub convention: Convention,
    pub ideal_side: Side,
}

/// Runs the convention oracle at degree `n` (3 is enough to separate the
/// candidates). Fails unless exactly one (convention, side) pair passes.
pub fn bootstrap(n: usize) -> Result<BootstrapOutcome> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    let mut candidates = Vec::new();
    for convention in [Convention::RightToLeft, Convention::LeftToRight] {
        let g = SymmetricGroup::with_config(
            n,
            GroupConfig {
                convention,
                ..GroupConfig::default()
            },
        )?;
        let identities_hold = spectra::convolution_identities(&g)?
            .iter()
            .all(|r| r.passed);
        let units: Vec<_> = g
            .pairs()
            .into_iter()
            .map(|(i, j)| g.pseudounit(i, j))
            .collect::<Result<_>>()?;
        for side in [Side::Left, Side::Right] {
            let translates: Vec<_> = units
                .iter()
                .flat_map(|u| g.elements().iter().map(move |s| (u, s)))
                .map(|(u, s)| g.translate(u, s, side))
                .collect::<Result<_>>()?;
            let translate_span_dim = g.span_rank(translates.iter())?;
            let centered: Vec<_> = StatKind::SKEW
                .into_iter()
                .map(|k| g.from_stat(k, true))
                .collect();
            let with_centered = g.span_rank(translates.iter().chain(centered.iter()))?;
            candidates.push(Candidate {
                convention,
                side,
                translate_span_dim,
                centered_in_span: with_centered == translate_span_dim,
                identities_hold,
            });
        }
    }
    let accepted: Vec<&Candidate> = candidates.iter().filter(|c| c.accepted(n)).collect();
    match accepted.as_slice() {
        [one] => Ok(BootstrapOutcome {
            n,
            convention: one.convention,
            ideal_side: one.side,
            candidates: candidates.clone(),
        }),
        _ => Err(Error::Oracle(format!(
            "n={n} accepted {} candidates, expected exactly one",
            accepted.len()
        ))),
    }
}
