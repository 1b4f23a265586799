//! Multiplication by a statistic: spectra, convolution identities, the
//! quadratic form of the `inv` kernel, the `fix` averages and a structured
//! multiplication path on the ideal.
//!
//! Multiplication acts on the side opposite to the ideal side, so that it
//! commutes with the translations generating the ideal. Under the pinned
//! convention that is right multiplication `f -> f * u`.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::convention::Side;
use crate::error::{Error, Result};
use crate::groupalg::{DiagramLabel, GAElement, SymmetricGroup};
use crate::linalg;
use crate::perm::{self, factorial, Permutation, StatKind};
use crate::skewrep::{self, SkewMatrix};
use crate::{fmt_ratio, ratio, Q};

fn skew_kind(kind: StatKind) -> Result<StatKind> {
    match kind {
        StatKind::Maj | StatKind::Des | StatKind::Inv => Ok(kind),
        other => Err(Error::UnsupportedStat(other)),
    }
}

fn dim_component(component: u8, n: usize) -> Result<usize> {
    match component {
        1 => Ok(n - 1),
        2 => Ok((n - 1) * (n - 2) / 2),
        c => Err(Error::IndexOutOfRange {
            index: c as usize,
            limit: 2,
        }),
    }
}

/// `-(n! / (2 dim π_k)) ⟨p_k h_inv, p_k h_stat⟩`, the eigenvalue of
/// multiplication by the centered statistic on the `k`-th isotypic part.
pub fn predicted_eigenvalue(kind: StatKind, component: u8, n: usize) -> Result<Q> {
    skew_kind(kind)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    let dim = dim_component(component, n)?;
    if dim == 0 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    let inv = skewrep::h_matrix(StatKind::Inv, n)?;
    let h = skewrep::h_matrix(kind, n)?;
    let ip = skewrep::project(component, &inv)?.inner(&skewrep::project(component, &h)?)?;
    let nf = Q::from_integer(factorial(n).into());
    Ok(-(nf / Q::from_integer((2 * dim).into())) * ip)
}

/// Closed forms: `-n!/2` (maj), `-(n-1)!` (des), `-(n+1)!/6` and `-n!/6` (inv).
pub fn closed_form_eigenvalue(kind: StatKind, component: u8, n: usize) -> Result<Q> {
    dim_component(component, n)?;
    let f = |m: usize| Q::from_integer(factorial(m).into());
    match (skew_kind(kind)?, component) {
        (StatKind::Maj, _) => Ok(-f(n) / ratio(2, 1)),
        (StatKind::Des, _) => Ok(-f(n - 1)),
        (_, 1) => Ok(-f(n + 1) / ratio(6, 1)),
        _ => Ok(-f(n) / ratio(6, 1)),
    }
}

/// Multiplication by `u` on the side that commutes with the ideal-side
/// translations.
pub fn multiply(g: &SymmetricGroup, f: &GAElement, u: &GAElement) -> Result<GAElement> {
    match g.ideal_side() {
        Side::Left => g.convolve(f, u),
        Side::Right => g.convolve(u, f),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenvalue {
    /// `const`, `row` or `hook`, or `row+hook` when the two values coincide.
    pub subspace: String,
    #[serde(with = "ratio_str")]
    pub value: Q,
    pub predicted_multiplicity: usize,
    pub verified_multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub stat: StatKind,
    pub n: usize,
    pub eigenvalues: Vec<Eigenvalue>,
    pub kernel_dim: usize,
    pub predicted_kernel_dim: usize,
    /// Whether the kernel is exactly the orthogonal complement of the ideal.
    /// Holds iff `σ -> stat(σ^-1)` lies in the ideal; reported, not required.
    pub kernel_is_orthogonal_complement: bool,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Verifies the full predicted spectrum of multiplication by `stat`:
/// constants, the two isotypic parts of the pseudounit span, and the kernel
/// dimension `n! - rank`, with rank the dimension of the generated ideal.
pub fn verify_spectrum(g: &SymmetricGroup, kind: StatKind) -> Result<SpectrumReport> {
    skew_kind(kind)?;
    let n = g.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    let u = g.from_stat(kind, false);
    let mut witness = None;
    let mut eigenvalues = Vec::new();

    let check = |v: &GAElement, s: &Q, label: &str, witness: &mut Option<String>| -> Result<bool> {
        let got = multiply(g, v, &u)?;
        let want = v.scaled(s);
        if let Some((k, a, b)) = got.first_difference(&want) {
            witness.get_or_insert_with(|| {
                format!(
                    "{label}: coefficient at {} is {}, expected {}",
                    g.elements()[k],
                    fmt_ratio(&a),
                    fmt_ratio(&b)
                )
            });
            return Ok(false);
        }
        Ok(true)
    };

    let s0 = Q::from_integer(perm::stat_sum(kind, n)?.into());
    let ones_ok = check(&g.ones(), &s0, "const", &mut witness)?;
    eigenvalues.push(Eigenvalue {
        subspace: "const".into(),
        value: s0,
        predicted_multiplicity: 1,
        verified_multiplicity: usize::from(ones_ok),
    });

    let units: Vec<GAElement> = g
        .pairs()
        .into_iter()
        .map(|(i, j)| g.pseudounit(i, j))
        .collect::<Result<_>>()?;
    let parts: Vec<(&str, u8, Vec<GAElement>)> = if n == 2 {
        vec![("row", 1, units)]
    } else {
        let mut v = Vec::new();
        for (label, k, lambda) in [
            ("row", 1, DiagramLabel::Row),
            ("hook", 2, DiagramLabel::Hook),
        ] {
            let span = units
                .iter()
                .map(|x| g.central_idempotent_apply(lambda, x))
                .collect::<Result<_>>()?;
            v.push((label, k, span));
        }
        v
    };
    let mut merged: Vec<Eigenvalue> = Vec::new();
    for (label, k, span) in &parts {
        let s = predicted_eigenvalue(kind, *k, n)?;
        let mut all = true;
        for v in span {
            all &= check(v, &s, label, &mut witness)?;
        }
        let verified = if all { g.span_rank(span.iter())? } else { 0 };
        let entry = Eigenvalue {
            subspace: label.to_string(),
            value: s,
            predicted_multiplicity: dim_component(*k, n)?,
            verified_multiplicity: verified,
        };
        match merged.iter_mut().find(|e| e.value == entry.value) {
            Some(e) => {
                e.subspace = format!("{}+{}", e.subspace, entry.subspace);
                e.predicted_multiplicity += entry.predicted_multiplicity;
                e.verified_multiplicity += entry.verified_multiplicity;
            }
            None => merged.push(entry),
        }
    }
    eigenvalues.extend(merged);

    let order = g.order();
    let rank = g.ideal_dimension(&u, g.ideal_side())?;
    let kernel_dim = order - rank;
    let predicted_kernel_dim = order - n * (n - 1) / 2 - 1;
    if kernel_dim != predicted_kernel_dim {
        witness.get_or_insert_with(|| {
            format!("kernel dimension {kernel_dim}, expected {predicted_kernel_dim}")
        });
    }

    // σ -> stat(σ^-1), minus its mean, must lie in the pseudounit span.
    let reflected =
        g.from_fn(|s| Q::from_integer(s.inverse().stat(kind).into()) - g.stat_mean(kind));
    let kernel_is_orthogonal_complement = g.pseudounit_coordinates(&reflected).is_ok();

    let passed = witness.is_none()
        && eigenvalues
            .iter()
            .all(|e| e.predicted_multiplicity == e.verified_multiplicity)
        && eigenvalues
            .iter()
            .map(|e| e.verified_multiplicity)
            .sum::<usize>()
            + kernel_dim
            == order;
    Ok(SpectrumReport {
        stat: kind,
        n,
        eigenvalues,
        kernel_dim,
        predicted_kernel_dim,
        kernel_is_orthogonal_complement,
        passed,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// The six products `u_a * u_b = s u_a` of centered statistics, with `b` in
/// `{des, maj}`, checked by exact convolution.
pub fn convolution_identities(g: &SymmetricGroup) -> Result<Vec<IdentityResult>> {
    let n = g.degree();
    if n < 3 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    let cases = [
        (StatKind::Maj, StatKind::Des),
        (StatKind::Maj, StatKind::Maj),
        (StatKind::Des, StatKind::Des),
        (StatKind::Des, StatKind::Maj),
        (StatKind::Inv, StatKind::Des),
        (StatKind::Inv, StatKind::Maj),
    ];
    cases
        .iter()
        .map(|&(a, b)| {
            let ua = g.from_stat(a, true);
            let ub = g.from_stat(b, true);
            let s = closed_form_eigenvalue(b, 1, n)?;
            let got = g.convolve(&ua, &ub)?;
            let want = ua.scaled(&s);
            let witness = got.first_difference(&want).map(|(k, x, y)| {
                format!(
                    "at {}: {} vs {}",
                    g.elements()[k],
                    fmt_ratio(&x),
                    fmt_ratio(&y)
                )
            });
            Ok(IdentityResult {
                name: format!("{a}~ * {b}~ = {} {a}~", fmt_ratio(&s)),
                passed: witness.is_none(),
                witness,
            })
        })
        .collect()
}

/// `K(g, h) = stat(g^-1 h)` as a dense row-major integer matrix.
pub fn kernel_matrix(g: &SymmetricGroup, kind: StatKind) -> Vec<i64> {
    let order = g.order();
    let stats: Vec<i64> = g.elements().iter().map(|p| p.stat(kind) as i64).collect();
    let mut k = vec![0i64; order * order];
    for a in 0..order {
        let ai = g.inverse_index(a);
        for b in 0..order {
            k[a * order + b] = stats[g.product_index(ai, b)];
        }
    }
    k
}

/// `Σ_{g,h} K(g,h) x_g x_h` for an integer vector.
pub fn cpd_form_int(kernel: &[i64], x: &[i64]) -> i128 {
    let order = x.len();
    let mut total = 0i128;
    for (a, &xa) in x.iter().enumerate() {
        if xa == 0 {
            continue;
        }
        let row = &kernel[a * order..(a + 1) * order];
        let inner: i128 = row
            .iter()
            .zip(x)
            .map(|(&k, &xb)| (k as i128) * (xb as i128))
            .sum();
        total += xa as i128 * inner;
    }
    total
}

/// `Σ_{g,h} stat(g^-1 h) x_g x_h` for a rational vector.
pub fn cpd_form(g: &SymmetricGroup, kind: StatKind, x: &GAElement) -> Result<Q> {
    let order = g.order();
    if x.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: x.degree(),
        });
    }
    let kernel = kernel_matrix(g, kind);
    let mut total = Q::zero();
    for a in 0..order {
        let xa = x.coeff(a);
        if xa.is_zero() {
            continue;
        }
        let inner: Q = (0..order)
            .map(|b| Q::from_integer(kernel[a * order + b].into()) * x.coeff(b))
            .sum();
        total += xa * inner;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CpdReport {
    pub stat: StatKind,
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    /// `stat(σ^-1) = stat(σ)` for all `σ`.
    pub symmetric: bool,
    /// Largest form value over the eigenbasis vectors (constants excluded).
    #[serde(with = "ratio_str")]
    pub eigenbasis_max: Q,
    /// Largest form value over the random sum-zero vectors.
    #[serde(with = "ratio_str")]
    pub random_max: Q,
    /// The sum-zero vector attaining `random_max`, or a positive one.
    pub worst_witness: Vec<i64>,
    pub passed: bool,
}

/// Random integer vector with zero coefficient sum; mixes dense and sparse
/// supports so that both large and localized directions are probed.
pub fn random_sum_zero(order: usize, rng: &mut impl Rng) -> Vec<i64> {
    let mut x = vec![0i64; order];
    if rng.gen_bool(0.5) {
        for v in x.iter_mut() {
            *v = rng.gen_range(-20..=20);
        }
    } else {
        let k = rng.gen_range(2..=order.min(6));
        for _ in 0..k {
            x[rng.gen_range(0..order)] += rng.gen_range(-9..=9);
        }
    }
    let s: i64 = x.iter().sum();
    let fix = rng.gen_range(0..order);
    x[fix] -= s;
    x
}

/// Checks that the quadratic form of `K(g,h) = stat(g^-1 h)` is nonpositive
/// on sum-zero vectors: first on the eigenvectors of multiplication by the
/// statistic and a basis of the orthogonal complement of the ideal, then on
/// `trials` seeded random integer vectors (scaling does not change the sign,
/// so integer vectors cover the rational case).
pub fn cpd_check(
    g: &SymmetricGroup,
    kind: StatKind,
    trials: usize,
    seed: u64,
) -> Result<CpdReport> {
    let n = g.degree();
    if n < 3 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    let order = g.order();
    let kernel = kernel_matrix(g, kind);
    let symmetric = g
        .elements()
        .iter()
        .all(|p| p.stat(kind) == p.inverse().stat(kind));

    let mut eigvecs: Vec<GAElement> = Vec::new();
    for (i, j) in g.pairs() {
        let u = g.pseudounit(i, j)?;
        eigvecs.push(g.central_idempotent_apply(DiagramLabel::Row, &u)?);
        eigvecs.push(g.central_idempotent_apply(DiagramLabel::Hook, &u)?);
    }
    // δ_σ minus its projection onto the ideal, for a few σ
    let pd = skewrep::w_inv(g, &skewrep::projected_delta(g)?)?;
    let mean = ratio(1, order as i64);
    for k in [0, 1, order / 2, order - 1] {
        let sigma = &g.elements()[k];
        let moved = g.translate(&pd, sigma, g.ideal_side())?;
        let mut v = g.delta(sigma)?.checked_sub(&moved)?;
        v = v.checked_sub(&g.ones().scaled(&mean))?;
        eigvecs.push(v);
    }
    let mut eigenbasis_max: Option<Q> = None;
    for v in &eigvecs {
        let (nums, _) = crate::linalg::integer_row(v.coeffs());
        let ints: Vec<i64> = nums
            .iter()
            .map(|x| {
                i64::try_from(x).map_err(|_| Error::Oracle("eigenvector entry overflow".into()))
            })
            .collect::<Result<_>>()?;
        let value = Q::from_integer(cpd_form_int(&kernel, &ints).into());
        if eigenbasis_max.as_ref().is_none_or(|m| value > *m) {
            eigenbasis_max = Some(value);
        }
    }
    let eigenbasis_max = eigenbasis_max.unwrap_or_else(Q::zero);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_max: Option<i128> = None;
    let mut worst_witness = vec![0; order];
    for _ in 0..trials {
        let x = random_sum_zero(order, &mut rng);
        let v = cpd_form_int(&kernel, &x);
        if random_max.is_none_or(|m| v > m) {
            random_max = Some(v);
            worst_witness = x;
        }
    }
    let random_max = Q::from_integer(random_max.unwrap_or(0).into());
    let passed = eigenbasis_max <= Q::zero() && random_max <= Q::zero();
    Ok(CpdReport {
        stat: kind,
        n,
        seed,
        trials,
        symmetric,
        eigenbasis_max,
        random_max,
        worst_witness,
        passed,
    })
}

/// `(1/n!) Σ_g stat(g) (fix(g) - 1)` for maj, des, inv.
pub fn fix_identity(g: &SymmetricGroup) -> Result<[Q; 3]> {
    let n = g.degree();
    if n < 3 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    let nf = Q::from_integer(g.order().into());
    let mut out = [Q::zero(), Q::zero(), Q::zero()];
    for (slot, kind) in out
        .iter_mut()
        .zip([StatKind::Maj, StatKind::Des, StatKind::Inv])
    {
        let total: i64 = g
            .elements()
            .iter()
            .map(|p| p.stat(kind) as i64 * perm::chi_nat(p).expect("n >= 2"))
            .sum();
        *slot = Q::from_integer(total.into()) / &nf;
    }
    Ok(out)
}

/// `(-1/2, -1/n, -(n+1)/6)`.
pub fn fix_identity_closed_form(n: usize) -> [Q; 3] {
    let n = n as i64;
    [ratio(-1, 2), ratio(-1, n), ratio(-(n + 1), 6)]
}

/// An element of the ideal stored as `scalar * 1 + W^-1(matrix)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredElement {
    pub scalar: Q,
    pub matrix: SkewMatrix,
}

impl StructuredElement {
    /// Fails with `NotInSubspace` when `f` is outside constants plus the
    /// pseudounit span.
    pub fn from_element(g: &SymmetricGroup, f: &GAElement) -> Result<Self> {
        let scalar = f.sum() / Q::from_integer(g.order().into());
        let h = f.checked_sub(&g.ones().scaled(&scalar))?;
        let matrix = skewrep::w(g, &h)?;
        Ok(Self { scalar, matrix })
    }

    pub fn to_element(&self, g: &SymmetricGroup) -> Result<GAElement> {
        let n = g.degree();
        let coeffs = g
            .elements()
            .iter()
            .map(|s| Ok(skewrep::coefficient_recover(&self.matrix, s)? + &self.scalar))
            .collect::<Result<_>>()?;
        GAElement::new(n, coeffs)
    }

    /// Multiplication by the centered statistic: constants vanish and the
    /// two isotypic parts scale by their eigenvalues.
    pub fn multiply_centered(&self, kind: StatKind) -> Result<Self> {
        let n = self.matrix.size();
        let a1 = skewrep::p1(&self.matrix).scaled(&predicted_eigenvalue(kind, 1, n)?);
        let matrix = if n >= 3 {
            let a2 = skewrep::p2(&self.matrix).scaled(&predicted_eigenvalue(kind, 2, n)?);
            a1.checked_add(&a2)?
        } else {
            a1
        };
        Ok(Self {
            scalar: Q::zero(),
            matrix,
        })
    }
}

/// Equals `multiply(g, f, centered stat)` for `f` in the ideal, in
/// `O(n! n^2)` time instead of `O((n!)^2)`.
pub fn structured_multiply(g: &SymmetricGroup, f: &GAElement, kind: StatKind) -> Result<GAElement> {
    skew_kind(kind)?;
    if let Some(out) = structured_multiply_int(g, f, kind)? {
        return Ok(out);
    }
    StructuredElement::from_element(g, f)?
        .multiply_centered(kind)?
        .to_element(g)
}

/// Numerators over the least common denominator, if they fit in `i128`.
fn common_denominator<'a>(v: impl IntoIterator<Item = &'a Q> + Clone) -> Option<(Vec<i128>, i128)> {
    let mut d = BigInt::one();
    for x in v.clone() {
        d = d.lcm(x.denom());
    }
    let nums = v
        .into_iter()
        .map(|x| (x.numer() * (&d / x.denom())).to_i128())
        .collect::<Option<Vec<_>>>()?;
    Some((nums, d.to_i128()?))
}

/// Signs `u_ij(σ)` for all `i < j`, packed as bits in row-major pair order.
fn pair_signs(p: &Permutation, pairs: &[(usize, usize)]) -> u64 {
    pairs.iter().enumerate().fold(0, |acc, (k, &(i, j))| {
        acc | (((p.apply(i) < p.apply(j)) as u64) << k)
    })
}

fn signed_sum(values: &[i128], signs: u64) -> Option<i128> {
    values.iter().enumerate().try_fold(0i128, |acc, (k, &v)| {
        if signs >> k & 1 == 1 {
            acc.checked_add(v)
        } else {
            acc.checked_sub(v)
        }
    })
}

/// Integer route for [`structured_multiply`]. `Ok(None)` means an
/// intermediate overflowed `i128` or `f` fails the membership check; the
/// rational route then decides.
fn structured_multiply_int(
    g: &SymmetricGroup,
    f: &GAElement,
    kind: StatKind,
) -> Result<Option<GAElement>> {
    let n = g.degree();
    if n < 2 || n * (n - 1) / 2 > 64 || f.degree() != n {
        return Ok(None);
    }
    let pairs = g.pairs();
    let order = g.order() as i128;
    let Some((num, den)) = common_denominator(f.coeffs()) else {
        return Ok(None);
    };
    let signs: Vec<u64> = g.elements().iter().map(|p| pair_signs(p, &pairs)).collect();
    // b_k = <u_k, f> * den; constants contribute nothing.
    let mut b = vec![0i128; pairs.len()];
    let mut total = 0i128;
    for (&x, &s) in num.iter().zip(&signs) {
        let Some(t) = total.checked_add(x) else {
            return Ok(None);
        };
        total = t;
        for (k, bk) in b.iter_mut().enumerate() {
            let step = if s >> k & 1 == 1 {
                bk.checked_add(x)
            } else {
                bk.checked_sub(x)
            };
            let Some(v) = step else { return Ok(None) };
            *bk = v;
        }
    }
    let scale = ratio(1, 1) / Q::from_integer(BigInt::from(den) * BigInt::from(order));
    let rhs: Vec<Q> = b
        .iter()
        .map(|&x| Q::from_integer(x.into()) * &scale)
        .collect();
    let coords = SkewMatrix::new(n, linalg::mat_vec(g.pseudounit_gram_inverse(), &rhs))?;
    let product = StructuredElement {
        scalar: Q::zero(),
        matrix: coords.clone(),
    }
    .multiply_centered(kind)?;
    let (Some((a, ad)), Some((c, cd))) = (
        common_denominator(coords.upper()),
        common_denominator(product.matrix.upper()),
    ) else {
        return Ok(None);
    };
    // Membership: f(σ) - scalar = W^-1(a)(σ), with denominators cleared.
    let Some(lhs_scale) = order.checked_mul(den) else {
        return Ok(None);
    };
    let mut out = Vec::with_capacity(g.order());
    let cd_big = BigInt::from(cd);
    for (&x, &s) in num.iter().zip(&signs) {
        let (Some(wa), Some(wc)) = (signed_sum(&a, s), signed_sum(&c, s)) else {
            return Ok(None);
        };
        let lhs = wa.checked_mul(lhs_scale);
        let rhs = order
            .checked_mul(x)
            .and_then(|v| v.checked_sub(total))
            .and_then(|v| v.checked_mul(ad));
        match (lhs, rhs) {
            (Some(l), Some(r)) if l == r => {}
            _ => return Ok(None),
        }
        out.push(Q::new(wc.into(), cd_big.clone()));
    }
    Ok(Some(GAElement::new(n, out)?))
}

/// Random `c * 1 + W^-1(A)` with small integer `c` and entries of `A`.
pub fn random_ideal_element(g: &SymmetricGroup, rng: &mut impl Rng) -> GAElement {
    let n = g.degree();
    let upper = (0..n * (n - 1) / 2)
        .map(|_| ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
        .collect();
    let a = SkewMatrix::new(n, upper).expect("upper-triangle length");
    let c = ratio(rng.gen_range(-5..=5), 1);
    skewrep::w_inv(g, &a)
        .expect("matching degree")
        .checked_add(&g.ones().scaled(&c))
        .expect("matching degree")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub kind: StatKind,
    pub n: usize,
    pub naive_ns: u128,
    pub structured_ns: u128,
    /// `(n!)^2 / (n! n^2)`, the ratio of coefficient operation counts.
    #[serde(with = "ratio_str")]
    pub op_ratio: Q,
}

impl BenchRecord {
    pub const CSV_HEADER: [&'static str; 5] =
        ["kind", "n", "naive_ns", "structured_ns", "op_ratio"];

    pub fn csv_row(&self) -> [String; 5] {
        [
            self.kind.to_string(),
            self.n.to_string(),
            self.naive_ns.to_string(),
            self.structured_ns.to_string(),
            fmt_ratio(&self.op_ratio),
        ]
    }
}

pub fn op_ratio(n: usize) -> Q {
    let nf = factorial(n) as i64;
    ratio(nf, (n * n) as i64)
}

fn median(mut v: Vec<u128>) -> u128 {
    v.sort_unstable();
    v[v.len() / 2]
}

/// Times naive and structured multiplication by the centered statistic on
/// one seeded ideal element, single-threaded. Fails if the outputs differ.
pub fn benchmark(
    g: &SymmetricGroup,
    kind: StatKind,
    repetitions: usize,
    seed: u64,
) -> Result<BenchRecord> {
    skew_kind(kind)?;
    let reps = repetitions.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = random_ideal_element(g, &mut rng);
    let u = g.from_stat(kind, true);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| Error::Oracle(e.to_string()))?;
    pool.install(|| {
        let naive = multiply(g, &f, &u)?;
        let fast = structured_multiply(g, &f, kind)?;
        if naive != fast {
            return Err(Error::Oracle(format!(
                "structured and naive products differ for {kind} at n={}",
                g.degree()
            )));
        }
        let mut naive_ns = Vec::with_capacity(reps);
        let mut structured_ns = Vec::with_capacity(reps);
        for _ in 0..reps {
            let t = Instant::now();
            std::hint::black_box(multiply(g, &f, &u)?);
            naive_ns.push(t.elapsed().as_nanos());
            let t = Instant::now();
            std::hint::black_box(structured_multiply(g, &f, kind)?);
            structured_ns.push(t.elapsed().as_nanos());
        }
        Ok(BenchRecord {
            kind,
            n: g.degree(),
            naive_ns: median(naive_ns),
            structured_ns: median(structured_ns),
            op_ratio: op_ratio(g.degree()),
        })
    })
}

/// Serializes a rational as a `p/q` string.
pub(crate) mod ratio_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::Q;

    pub fn serialize<S: Serializer>(q: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::fmt_ratio(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        crate::parse_ratio(&s).map_err(serde::de::Error::custom)
    }
}

/// Permutation witness helper for reports.
pub fn describe(g: &SymmetricGroup, index: usize) -> String {
    let p: &Permutation = &g.elements()[index];
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convention::Convention;
    use crate::groupalg::GroupConfig;

    fn g(n: usize) -> SymmetricGroup {
        SymmetricGroup::new(n).unwrap()
    }

    #[test]
    fn predicted_eigenvalues_small() {
        assert_eq!(
            predicted_eigenvalue(StatKind::Maj, 1, 4).unwrap(),
            ratio(-12, 1)
        );
        assert_eq!(
            predicted_eigenvalue(StatKind::Maj, 2, 4).unwrap(),
            ratio(-12, 1)
        );
        assert_eq!(
            predicted_eigenvalue(StatKind::Des, 1, 4).unwrap(),
            ratio(-6, 1)
        );
        assert_eq!(
            predicted_eigenvalue(StatKind::Des, 2, 4).unwrap(),
            ratio(-6, 1)
        );
        assert_eq!(
            predicted_eigenvalue(StatKind::Inv, 1, 4).unwrap(),
            ratio(-20, 1)
        );
        assert_eq!(
            predicted_eigenvalue(StatKind::Inv, 2, 4).unwrap(),
            ratio(-4, 1)
        );
        assert!(predicted_eigenvalue(StatKind::Fix, 1, 4).is_err());
        assert!(predicted_eigenvalue(StatKind::Inv, 2, 2).is_err());
        assert_eq!(
            predicted_eigenvalue(StatKind::Des, 1, 2).unwrap(),
            ratio(-1, 1)
        );
    }

    #[test]
    fn predicted_matches_closed_forms() {
        for n in 3..=8 {
            for kind in StatKind::SKEW {
                for k in [1, 2] {
                    assert_eq!(
                        predicted_eigenvalue(kind, k, n).unwrap(),
                        closed_form_eigenvalue(kind, k, n).unwrap(),
                        "{kind} k={k} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn spectrum_des_n2() {
        let r = verify_spectrum(&g(2), StatKind::Des).unwrap();
        assert!(r.passed, "{r:?}");
        let values: Vec<Q> = r.eigenvalues.iter().map(|e| e.value.clone()).collect();
        assert_eq!(values, vec![ratio(1, 1), ratio(-1, 1)]);
        assert_eq!(r.kernel_dim, 0);
    }

    #[test]
    fn spectrum_inv_n4() {
        let r = verify_spectrum(&g(4), StatKind::Inv).unwrap();
        assert!(r.passed, "{r:?}");
        let got: Vec<(Q, usize)> = r
            .eigenvalues
            .iter()
            .map(|e| (e.value.clone(), e.verified_multiplicity))
            .collect();
        assert_eq!(
            got,
            vec![(ratio(72, 1), 1), (ratio(-20, 1), 3), (ratio(-4, 1), 3)]
        );
        assert_eq!(r.kernel_dim, 17);
        assert!(r.kernel_is_orthogonal_complement);
    }

    #[test]
    fn spectrum_maj_n5() {
        let r = verify_spectrum(&g(5), StatKind::Maj).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.eigenvalues.len(), 2);
        assert_eq!(r.eigenvalues[0].value, ratio(600, 1));
        assert_eq!(r.eigenvalues[1].value, ratio(-60, 1));
        assert_eq!(r.eigenvalues[1].verified_multiplicity, 10);
        assert_eq!(r.kernel_dim, 109);
        // maj is not invariant under σ -> σ^-1, and its kernel is not the
        // orthogonal complement of the ideal.
        assert!(!r.kernel_is_orthogonal_complement);
    }

    #[test]
    fn identities_hold_under_pinned_convention() {
        for n in 3..=5 {
            for r in convolution_identities(&g(n)).unwrap() {
                assert!(r.passed, "n={n}: {r:?}");
            }
        }
        let other = SymmetricGroup::with_config(
            4,
            GroupConfig {
                convention: Convention::RightToLeft,
                ..GroupConfig::default()
            },
        )
        .unwrap();
        assert!(convolution_identities(&other)
            .unwrap()
            .iter()
            .any(|r| !r.passed));
    }

    #[test]
    fn pointwise_maj_des_sum_n3() {
        // Σ_g maj~(g) des~(g^-1 σ) = -(n-1)! maj~(σ), evaluated directly.
        let s3 = g(3);
        let maj = |p: &Permutation| ratio(4 * p.stat(StatKind::Maj) as i64 - 6, 4);
        let des = |p: &Permutation| ratio(2 * p.stat(StatKind::Des) as i64 - 2, 2);
        for sigma in s3.elements() {
            let mut total = Q::zero();
            for h in s3.elements() {
                let rest = s3.product(&h.inverse(), sigma).unwrap();
                total += maj(h) * des(&rest);
            }
            assert_eq!(total, ratio(-2, 1) * maj(sigma));
        }
    }

    #[test]
    fn cpd_two_point_vectors() {
        let s4 = g(4);
        let kernel = kernel_matrix(&s4, StatKind::Inv);
        for (a, b) in [(0usize, 5usize), (3, 17), (7, 23)] {
            let mut x = vec![0i64; 24];
            x[a] = 1;
            x[b] = -1;
            let ga = &s4.elements()[a];
            let gb = &s4.elements()[b];
            let inv = s4.product(&ga.inverse(), gb).unwrap().stat(StatKind::Inv) as i128;
            assert_eq!(cpd_form_int(&kernel, &x), -2 * inv);
        }
        assert_eq!(cpd_form_int(&kernel, &[0; 24]), 0);
        let x = s4
            .delta_e()
            .checked_sub(&s4.delta(&s4.elements()[9]).unwrap())
            .unwrap();
        assert!(cpd_form(&s4, StatKind::Inv, &x).unwrap() < Q::zero());
    }

    #[test]
    fn cpd_holds_for_inv() {
        for n in 3..=4 {
            let r = cpd_check(&g(n), StatKind::Inv, 300, 7).unwrap();
            assert!(r.passed, "{r:?}");
            assert!(r.symmetric);
        }
    }

    #[test]
    fn cpd_inequality_fails_for_maj_and_des() {
        // The form of maj is indefinite on sum-zero vectors from n = 3 and
        // that of des from n = 4; a seeded search finds a positive value.
        let r = cpd_check(&g(3), StatKind::Maj, 2000, 1).unwrap();
        assert!(!r.passed);
        assert!(!r.symmetric);
        let witness_value = cpd_form_int(&kernel_matrix(&g(3), StatKind::Maj), &r.worst_witness);
        assert!(witness_value > 0);
        assert_eq!(r.worst_witness.iter().sum::<i64>(), 0);
        assert!(cpd_check(&g(3), StatKind::Des, 500, 1).unwrap().passed);
        for (n, kind) in [(3, StatKind::Maj), (4, StatKind::Des), (5, StatKind::Des)] {
            let kernel = kernel_matrix(&g(n), kind);
            let x = top_sum_zero_direction(&kernel, g(n).order());
            assert_eq!(x.iter().sum::<i64>(), 0);
            assert!(cpd_form_int(&kernel, &x) > 0, "{kind} n={n}");
        }
    }

    /// Integer rounding of the top eigenvector of the symmetrized form on
    /// sum-zero vectors, found by shifted power iteration. Only a search
    /// heuristic; the caller evaluates the form exactly.
    fn top_sum_zero_direction(kernel: &[i64], order: usize) -> Vec<i64> {
        let sym = |x: &[f64]| -> Vec<f64> {
            (0..order)
                .map(|a| {
                    (0..order)
                        .map(|b| {
                            0.5 * (kernel[a * order + b] + kernel[b * order + a]) as f64 * x[b]
                        })
                        .sum()
                })
                .collect()
        };
        let center = |x: &mut Vec<f64>| {
            let m = x.iter().sum::<f64>() / order as f64;
            x.iter_mut().for_each(|v| *v -= m);
        };
        let shift = kernel.iter().map(|&k| k.abs()).sum::<i64>() as f64 / order as f64;
        let mut x: Vec<f64> = (0..order).map(|k| ((k * 7919) % 13) as f64 - 6.0).collect();
        center(&mut x);
        for _ in 0..3000 {
            let sx = sym(&x);
            x = sx.iter().zip(&x).map(|(a, b)| a + shift * b).collect();
            center(&mut x);
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            x.iter_mut().for_each(|v| *v /= norm);
        }
        let mut ints: Vec<i64> = x.iter().map(|v| (v * 1e4).round() as i64).collect();
        let s: i64 = ints.iter().sum();
        ints[0] -= s;
        ints
    }

    #[test]
    fn fix_identity_small() {
        assert_eq!(
            fix_identity(&g(3)).unwrap(),
            [ratio(-1, 2), ratio(-1, 3), ratio(-2, 3)]
        );
        assert_eq!(
            fix_identity(&g(6)).unwrap(),
            [ratio(-1, 2), ratio(-1, 6), ratio(-7, 6)]
        );
        for n in 3..=5 {
            assert_eq!(fix_identity(&g(n)).unwrap(), fix_identity_closed_form(n));
        }
    }

    #[test]
    fn structured_examples() {
        let s4 = g(4);
        let des = s4.from_stat(StatKind::Des, true);
        assert_eq!(
            structured_multiply(&s4, &des, StatKind::Maj).unwrap(),
            des.scaled(&ratio(-12, 1))
        );
        let inv = s4.from_stat(StatKind::Inv, true);
        assert_eq!(
            structured_multiply(&s4, &inv, StatKind::Des).unwrap(),
            inv.scaled(&ratio(-6, 1))
        );
        assert!(matches!(
            structured_multiply(&s4, &s4.delta_e(), StatKind::Des),
            Err(Error::NotInSubspace { .. })
        ));
        let s2 = g(2);
        let f = s2.from_stat(StatKind::Des, false);
        let u = s2.from_stat(StatKind::Des, true);
        assert_eq!(
            structured_multiply(&s2, &f, StatKind::Des).unwrap(),
            multiply(&s2, &f, &u).unwrap()
        );
    }

    #[test]
    fn structured_matches_naive_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 3..=4 {
            let s = g(n);
            for kind in StatKind::SKEW {
                let u = s.from_stat(kind, true);
                for _ in 0..10 {
                    let f = random_ideal_element(&s, &mut rng);
                    assert_eq!(
                        structured_multiply(&s, &f, kind).unwrap(),
                        multiply(&s, &f, &u).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn integer_route_agrees_with_rational_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let s = g(5);
        for kind in StatKind::SKEW {
            for _ in 0..5 {
                let f = random_ideal_element(&s, &mut rng);
                let rational = StructuredElement::from_element(&s, &f)
                    .unwrap()
                    .multiply_centered(kind)
                    .unwrap()
                    .to_element(&s)
                    .unwrap();
                assert_eq!(
                    structured_multiply_int(&s, &f, kind).unwrap(),
                    Some(rational)
                );
            }
        }
        // A non-member falls through to the rational route.
        let outside = s.delta_e();
        assert_eq!(
            structured_multiply_int(&s, &outside, StatKind::Maj).unwrap(),
            None
        );
        // Huge numerators overflow and fall through as well.
        let big = s
            .from_stat(StatKind::Inv, true)
            .scaled(&Q::from_integer(BigInt::from(10).pow(40)));
        assert_eq!(
            structured_multiply_int(&s, &big, StatKind::Inv).unwrap(),
            None
        );
        let naive = multiply(&s, &big, &s.from_stat(StatKind::Inv, true)).unwrap();
        assert_eq!(structured_multiply(&s, &big, StatKind::Inv).unwrap(), naive);
    }

    #[test]
    fn benchmark_small() {
        let r = benchmark(&g(4), StatKind::Inv, 2, 3).unwrap();
        assert_eq!(r.op_ratio, ratio(24, 16));
        assert_eq!(r.csv_row()[0], "inv");
        assert_eq!(op_ratio(7), ratio(5040, 49));
    }
}
