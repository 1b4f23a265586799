//! Exact group-algebra models of the permutation statistics `maj`, `des`
//! and `inv`.
//!
//! The centered statistics span one ideal of `Q[S_n]` of dimension
//! `n(n-1)/2 + 1`, and on that ideal the regular representation is the
//! constants plus the action of `S_n` on `n x n` skew-symmetric matrices.
//! This crate builds both sides exactly and checks the correspondence:
//!
//! * [`perm`]: permutations, statistics, characters, generating polynomials.
//! * [`groupalg`]: dense group-algebra elements, convolution, translations,
//!   pseudomatrix units, central idempotents, ideal dimension.
//! * [`skewrep`]: skew-symmetric matrices, the action of `S_n`, the isotypic
//!   projections and the intertwiner between the ideal and the matrices.
//! * [`spectra`]: eigenvalues of multiplication by a statistic, convolution
//!   identities, conditional negative definiteness, the `fix` averages and a
//!   structured `O(n! n^2)` multiplication path.
//! * [`solomon`]: compositions, the descent-algebra basis and membership.
//! * [`verify`] and [`cli`]: claim-by-claim verification reports and the
//!   command-line front end.
//!
//! Every computation is exact (`BigRational`); nothing uses floating point.
//!
//! ```
//! use permrep::{groupalg::SymmetricGroup, perm::StatKind, ratio};
//!
//! let g = SymmetricGroup::new(4).unwrap();
//! let des = g.from_stat(StatKind::Des, true);
//! let sq = g.convolve(&des, &des).unwrap();
//! // u_des * u_des = -(n-1)! u_des for the centered statistic
//! assert_eq!(sq, des.scaled(&ratio(-6, 1)));
//! ```

pub mod cli;
pub mod convention;
pub mod error;
pub mod groupalg;
pub mod linalg;
pub mod perm;
pub mod skewrep;
pub mod solomon;
pub mod spectra;
pub mod verify;

pub use convention::{Convention, Side};
pub use error::{Error, Result};
pub use groupalg::{GAElement, GroupConfig, SymmetricGroup};
pub use perm::{Permutation, StatKind};
pub use skewrep::SkewMatrix;

/// Exact rational scalar used throughout.
pub type Q = num_rational::BigRational;

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn fmt_ratio(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_ratio(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: num_bigint::BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
            if num_traits::Zero::is_zero(&q) {
                return Err(bad());
            }
            Ok(Q::new(p, q))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Shorthand for `p/q` as a [`Q`].
pub fn ratio(p: i64, q: i64) -> Q {
    Q::new(p.into(), q.into())
}
