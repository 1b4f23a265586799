//! Claim-by-claim verification suites.
//!
//! Each suite checks one family of identities at a given degree and emits
//! [`Claim`]s carrying the expected and computed values as exact strings.
//! Claims are sorted by id, so reports do not depend on scheduling.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupalg::{DiagramLabel, GroupConfig, PseudounitGram, SymmetricGroup};
use crate::perm::{self, StatKind};
use crate::skewrep::{self, SkewMatrix};
use crate::solomon::{self, SolomonBasis};
use crate::spectra;
use crate::{fmt_ratio, ratio, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Gram,
    Isomorphism,
    MatrixFormulas,
    Projections,
    Spectra,
    Identities,
    Cpd,
    Fix,
    Solomon,
    Complexity,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Gram,
        Suite::Isomorphism,
        Suite::MatrixFormulas,
        Suite::Projections,
        Suite::Spectra,
        Suite::Identities,
        Suite::Cpd,
        Suite::Fix,
        Suite::Solomon,
        Suite::Complexity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gram => "gram",
            Suite::Isomorphism => "isomorphism",
            Suite::MatrixFormulas => "matrix-formulas",
            Suite::Projections => "projections",
            Suite::Spectra => "spectra",
            Suite::Identities => "identities",
            Suite::Cpd => "cpd",
            Suite::Fix => "fix",
            Suite::Solomon => "solomon",
            Suite::Complexity => "complexity",
        }
    }

    /// Degrees at which the suite is meaningful, inclusive.
    pub fn degree_range(self) -> (usize, usize) {
        match self {
            Suite::Gram | Suite::MatrixFormulas | Suite::Spectra => (2, usize::MAX),
            Suite::Cpd | Suite::Solomon => (3, 6),
            _ => (3, usize::MAX),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Parses a comma-separated suite list; `all` selects every suite.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        let suite: Suite = part.parse()?;
        if !out.contains(&suite) {
            out.push(suite);
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("no suite selected".into()));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    /// What is being claimed, in words.
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub convention: String,
    pub claims: Vec<Claim>,
    pub skipped: Vec<String>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (convention {})", self.suite, self.convention)?;
        for c in &self.claims {
            writeln!(
                f,
                "{} {}  [{}]  expected {}  computed {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.anchor,
                c.expected,
                c.computed
            )?;
        }
        for s in &self.skipped {
            writeln!(f, "SKIP {s}")?;
        }
        let failed = self.failures().count();
        writeln!(
            f,
            "{}: {} claims, {} failed",
            if self.passed { "PASS" } else { "FAIL" },
            self.claims.len(),
            failed
        )
    }
}

/// Tuning for the heavier suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub cpd_trials: usize,
    pub structured_trials: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            seed: 2024,
            cpd_trials: 1000,
            structured_trials: 100,
        }
    }
}

struct Cx<'a> {
    suite: Suite,
    n: usize,
    claims: &'a mut Vec<Claim>,
}

impl Cx<'_> {
    fn claim(
        &mut self,
        name: &str,
        anchor: &str,
        expected: String,
        computed: String,
        passed: bool,
    ) {
        self.claims.push(Claim {
            id: format!("{}/n{:02}/{}", self.suite, self.n, name),
            anchor: anchor.to_string(),
            expected,
            computed,
            passed,
        });
    }

    fn eq_q(&mut self, name: &str, anchor: &str, expected: &Q, computed: &Q) {
        self.claim(
            name,
            anchor,
            fmt_ratio(expected),
            fmt_ratio(computed),
            expected == computed,
        );
    }

    fn eq_usize(&mut self, name: &str, anchor: &str, expected: usize, computed: usize) {
        self.claim(
            name,
            anchor,
            expected.to_string(),
            computed.to_string(),
            expected == computed,
        );
    }

    fn eq_matrix(
        &mut self,
        name: &str,
        anchor: &str,
        expected: &SkewMatrix,
        computed: &SkewMatrix,
    ) {
        self.claim(
            name,
            anchor,
            short(expected),
            short(computed),
            expected == computed,
        );
    }

    /// `ok` out of `total` checks passed, with an optional first failure.
    fn count(&mut self, name: &str, anchor: &str, total: usize, ok: usize, first: Option<String>) {
        let computed = match first {
            Some(w) if ok != total => format!("{ok}/{total}; first failure {w}"),
            _ => format!("{ok}/{total}"),
        };
        self.claim(
            name,
            anchor,
            format!("{total}/{total}"),
            computed,
            ok == total,
        );
    }
}

fn short(a: &SkewMatrix) -> String {
    let parts: Vec<String> = a.upper().iter().map(fmt_ratio).collect();
    format!("[{}]", parts.join(","))
}

/// Runs `suites` at every degree in `degrees` and merges the claims.
pub fn run(
    suites: &[Suite],
    degrees: &[usize],
    config: GroupConfig,
    options: SuiteOptions,
) -> Result<VerificationReport> {
    let mut groups: HashMap<usize, Arc<SymmetricGroup>> = HashMap::new();
    for &n in degrees {
        if let std::collections::hash_map::Entry::Vacant(e) = groups.entry(n) {
            e.insert(Arc::new(SymmetricGroup::with_config(n, config)?));
        }
    }
    let mut cells = Vec::new();
    let mut skipped = Vec::new();
    for &suite in suites {
        for &n in degrees {
            let (lo, hi) = suite.degree_range();
            if n < lo || n > hi {
                skipped.push(format!(
                    "{suite} at n={n}: defined for {lo} <= n{}",
                    if hi == usize::MAX {
                        String::new()
                    } else {
                        format!(" <= {hi}")
                    }
                ));
            } else {
                cells.push((suite, n));
            }
        }
    }
    let results: Vec<Vec<Claim>> = cells
        .par_iter()
        .map(|&(suite, n)| run_cell(suite, &groups[&n], options))
        .collect::<Result<_>>()?;
    let mut claims: Vec<Claim> = results.into_iter().flatten().collect();
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = claims.iter().all(|c| c.passed);
    let name = if suites.len() == Suite::ALL.len() {
        "all".to_string()
    } else {
        suites
            .iter()
            .map(|s| s.name())
            .collect::<Vec<_>>()
            .join(",")
    };
    Ok(VerificationReport {
        suite: name,
        convention: config.convention.name().to_string(),
        claims,
        skipped,
        passed,
    })
}

/// Claims of one suite at one degree.
pub fn run_cell(suite: Suite, g: &SymmetricGroup, options: SuiteOptions) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    let mut cx = Cx {
        suite,
        n: g.degree(),
        claims: &mut claims,
    };
    match suite {
        Suite::Gram => gram(&mut cx, g)?,
        Suite::Isomorphism => isomorphism(&mut cx, g)?,
        Suite::MatrixFormulas => matrix_formulas(&mut cx, g)?,
        Suite::Projections => projections(&mut cx, g.degree())?,
        Suite::Spectra => spectra_suite(&mut cx, g)?,
        Suite::Identities => identities(&mut cx, g)?,
        Suite::Cpd => cpd(&mut cx, g, options)?,
        Suite::Fix => fix(&mut cx, g)?,
        Suite::Solomon => solomon_suite(&mut cx, g)?,
        Suite::Complexity => complexity(&mut cx, g)?,
    }
    Ok(claims)
}

fn gram(cx: &mut Cx, g: &SymmetricGroup) -> Result<()> {
    let gram = g.gram_pseudounits()?;
    let mut ok = 0;
    let mut first = None;
    let mut total = 0;
    for (a, row) in gram.pairs.iter().zip(&gram.entries) {
        for (b, x) in gram.pairs.iter().zip(row) {
            total += 1;
            let want = PseudounitGram::predicted(*a, *b);
            if *x == want {
                ok += 1;
            } else if first.is_none() {
                first = Some(format!(
                    "{a:?},{b:?}: {} vs {}",
                    fmt_ratio(x),
                    fmt_ratio(&want)
                ));
            }
        }
    }
    cx.count(
        "entries",
        "normalized pseudounit Gram entries follow the index-overlap cases",
        total,
        ok,
        first,
    );
    let mut values: Vec<Q> = gram.entries.iter().flatten().cloned().collect();
    values.sort();
    values.dedup();
    let allowed = [ratio(-1, 3), Q::zero(), ratio(1, 3), ratio(1, 1)];
    cx.claim(
        "values",
        "Gram entries lie in {1, 1/3, -1/3, 0}",
        "subset of {-1/3,0/1,1/3,1/1}".into(),
        format!(
            "{{{}}}",
            values.iter().map(fmt_ratio).collect::<Vec<_>>().join(",")
        ),
        values.iter().all(|v| allowed.contains(v)),
    );
    Ok(())
}

fn isomorphism(cx: &mut Cx, g: &SymmetricGroup) -> Result<()> {
    let n = g.degree();
    let pairs = g.pairs();
    let units: Vec<_> = pairs
        .iter()
        .map(|&(i, j)| g.pseudounit(i, j))
        .collect::<Result<_>>()?;
    let (mut ok, mut first) = (0, None);
    for (&(i, j), u) in pairs.iter().zip(&units) {
        let c1 = g.central_idempotent_apply(DiagramLabel::Row, u)?;
        let mut want = g.zero();
        for k in 1..=n {
            want = want.checked_add(&g.pseudounit(i, k)?)?;
            want = want.checked_add(&g.pseudounit(k, j)?)?;
        }
        if c1 == want.scaled(&ratio(1, n as i64)) {
            ok += 1;
        } else {
            first.get_or_insert(format!("({i},{j})"));
        }
    }
    cx.count(
        "c1-units",
        "C1 u_ij = (1/n) sum_k (u_ik + u_kj)",
        pairs.len(),
        ok,
        first,
    );

    // ⟨e'_ij, e'_kl⟩ from the isotypic components of the units.
    let rows: Vec<_> = units
        .iter()
        .map(|u| g.central_idempotent_apply(DiagramLabel::Row, u))
        .collect::<Result<_>>()?;
    let hooks: Vec<_> = units
        .iter()
        .map(|u| g.central_idempotent_apply(DiagramLabel::Hook, u))
        .collect::<Result<_>>()?;
    let (mut ok, mut first, mut total) = (0, None, 0);
    for a in 0..pairs.len() {
        for b in 0..pairs.len() {
            total += 1;
            let v = g.primed_combination(&rows[a].inner(&rows[b])?, &hooks[a].inner(&hooks[b])?);
            let want = if a == b {
                Q::from_integer(1.into())
            } else {
                Q::zero()
            };
            if v == want {
                ok += 1;
            } else {
                first.get_or_insert(format!("{:?},{:?} = {}", pairs[a], pairs[b], fmt_ratio(&v)));
            }
        }
    }
    cx.count(
        "primed-orthonormal",
        "rescaled units e' are orthonormal",
        total,
        ok,
        first,
    );

    for kind in StatKind::SKEW {
        let u = g.from_stat(kind, true);
        let want = skewrep::h_matrix(kind, n)?.scaled(&ratio(-1, 2));
        let got = skewrep::w(g, &u).map_or_else(|e| e.to_string(), |m| short(&m));
        let passed = got == short(&want);
        cx.claim(
            &format!("w-{kind}"),
            "centered statistic lies in the pseudounit span as -1/2 h",
            short(&want),
            got,
            passed,
        );
    }

    let a = SkewMatrix::from_fn(n, |i, j| ratio((i * i + 3 * j) as i64 - 7, 2));
    let u = skewrep::w_inv(g, &a)?;
    cx.eq_matrix(
        "w-roundtrip",
        "W inverts W^-1 on skew matrices",
        &a,
        &skewrep::w(g, &u)?,
    );
    let (mut ok, mut first) = (0, None);
    let step = (g.order() / 24).max(1);
    let sample: Vec<_> = g.elements().iter().step_by(step).collect();
    for s in &sample {
        let t = g.translate(&u, s, g.ideal_side())?;
        if skewrep::w(g, &t)? == skewrep::act(g.convention(), s, &a)? {
            ok += 1;
        } else {
            first.get_or_insert(s.to_string());
        }
    }
    cx.count(
        "intertwining",
        "W(translate(u, s)) = act(s, W(u))",
        sample.len(),
        ok,
        first,
    );
    Ok(())
}

fn matrix_formulas(cx: &mut Cx, g: &SymmetricGroup) -> Result<()> {
    let n = g.degree();
    for kind in StatKind::SKEW {
        let results: Vec<Option<String>> = g
            .elements()
            .par_iter()
            .map(|s| {
                let v = skewrep::stat_via_matrix(g.convention(), kind, s)?;
                let want = Q::from_integer(s.stat(kind).into());
                Ok((v != want).then(|| format!("{s}: {} vs {}", fmt_ratio(&v), fmt_ratio(&want))))
            })
            .collect::<Result<_>>()?;
        let ok = results.iter().filter(|r| r.is_none()).count();
        let first = results.into_iter().flatten().next();
        cx.count(
            &format!("formula-{kind}"),
            "stat = c - 1/2 <act(s) h_inv, h_stat> for every permutation",
            g.order(),
            ok,
            first,
        );
    }
    for kind in StatKind::SKEW {
        let u = g.from_stat(kind, true);
        let a = skewrep::h_matrix(kind, n)?.scaled(&ratio(-1, 2));
        let recovered = skewrep::w_inv(g, &a)?;
        cx.claim(
            &format!("recover-{kind}"),
            "coefficients recovered from the matrix -1/2 h",
            "centered statistic".into(),
            if recovered == u {
                "centered statistic".into()
            } else {
                "mismatch".into()
            },
            recovered == u,
        );
    }
    if n >= 3 {
        cx.eq_matrix(
            "projected-delta",
            "W(P delta_e) = (3/n!)(A/(n+1) + B)",
            &skewrep::projected_delta_closed_form(n),
            &skewrep::projected_delta(g)?,
        );
    }
    Ok(())
}

fn projections(cx: &mut Cx, n: usize) -> Result<()> {
    let h = |k| skewrep::h_matrix(k, n);
    for kind in StatKind::SKEW {
        for k in [1u8, 2] {
            cx.eq_matrix(
                &format!("p{k}-h-{kind}"),
                "projection of h matches the displayed matrix",
                &skewrep::projection_display(kind, k, n)?,
                &skewrep::project(k, &h(kind)?)?,
            );
        }
    }
    let ni = n as i64;
    let inv = h(StatKind::Inv)?;
    let table = [
        (StatKind::Des, 1u8, ratio(2 * (ni - 1), ni)),
        (StatKind::Des, 2, ratio((ni - 1) * (ni - 2), ni)),
        (StatKind::Maj, 1, ratio(ni - 1, 1)),
        (StatKind::Maj, 2, ratio((ni - 1) * (ni - 2), 2)),
        (StatKind::Inv, 1, ratio(ni * ni - 1, 3)),
        (StatKind::Inv, 2, ratio((ni - 1) * (ni - 2), 6)),
    ];
    for (kind, k, want) in table {
        let got = skewrep::project(k, &inv)?.inner(&skewrep::project(k, &h(kind)?)?)?;
        cx.eq_q(
            &format!("inner-p{k}-inv-{kind}"),
            "inner products of projected h-matrices",
            &want,
            &got,
        );
    }
    Ok(())
}

fn spectra_suite(cx: &mut Cx, g: &SymmetricGroup) -> Result<()> {
    let n = g.degree();
    for kind in StatKind::SKEW {
        let r = spectra::verify_spectrum(g, kind)?;
        for e in &r.eigenvalues {
            cx.claim(
                &format!("{kind}-{}", e.subspace),
                "eigenvalue of multiplication by the statistic on its predicted eigenspace",
                format!("{} x{}", fmt_ratio(&e.value), e.predicted_multiplicity),
                format!("{} x{}", fmt_ratio(&e.value), e.verified_multiplicity),
                e.predicted_multiplicity == e.verified_multiplicity,
            );
        }
        cx.eq_usize(
            &format!("{kind}-kernel"),
            "kernel dimension n! - n(n-1)/2 - 1",
            r.predicted_kernel_dim,
            r.kernel_dim,
        );
        cx.claim(
            &format!("{kind}-report"),
            "spectrum report passes",
            "passed".into(),
            r.witness.clone().unwrap_or_else(|| "passed".into()),
            r.passed,
        );
        let max_k = if n >= 3 { 2 } else { 1 };
        for k in 1..=max_k {
            cx.eq_q(
                &format!("{kind}-formula-{k}"),
                "eigenvalue formula from projected inner products equals closed form",
                &spectra::closed_form_eigenvalue(kind, k, n)?,
                &spectra::predicted_eigenvalue(kind, k, n)?,
            );
        }
    }
    Ok(())
}

fn identities(cx: &mut Cx, g: &SymmetricGroup) -> Result<()> {
    for (k, r) in spectra::convolution_identities(g)?.into_iter().enumerate() {
        cx.claim(
            &format!("identity-{}", k + 1),
            &r.name,
            "holds".into(),
            r.witness.unwrap_or_else(|| "holds".into()),
            r.passed,
        );
    }
    Ok(())
}

fn cpd(cx: &mut Cx, g: &SymmetricGroup, options: SuiteOptions) -> Result<()> {
    let r = spectra::cpd_check(g, StatKind::Inv, options.cpd_trials, options.seed)?;
    cx.claim(
        "inv-eigenbasis",
        "inv form is nonpositive on the eigenbasis of sum-zero vectors",
        "<= 0".into(),
        fmt_ratio(&r.eigenbasis_max),
        r.eigenbasis_max <= Q::zero(),
    );
    cx.claim(
        "inv-random",
        "inv form is nonpositive on seeded random sum-zero vectors",
        "<= 0".into(),
        format!(
            "max {} over {} trials (seed {})",
            fmt_ratio(&r.random_max),
            r.trials,
            r.seed
        ),
        r.random_max <= Q::zero(),
    );
    cx.claim(
        "inv-symmetric",
        "inv(s^-1) = inv(s)",
        "true".into(),
        r.symmetric.to_string(),
        r.symmetric,
    );
    Ok(())
}

fn fix(cx: &mut Cx, g: &SymmetricGroup) -> Result<()> {
    let got = spectra::fix_identity(g)?;
    let want = spectra::fix_identity_closed_form(g.degree());
    for ((kind, w), c) in [StatKind::Maj, StatKind::Des, StatKind::Inv]
        .iter()
        .zip(&want)
        .zip(&got)
    {
        cx.eq_q(
            &format!("fix-{kind}"),
            "average of stat times the natural character",
            w,
            c,
        );
    }
    Ok(())
}

fn solomon_suite(cx: &mut Cx, g: &SymmetricGroup) -> Result<()> {
    let n = g.degree();
    let basis = SolomonBasis::new(g)?;
    for kind in [StatKind::Des, StatKind::Maj] {
        let m = basis.membership(&g.from_stat(kind, false))?;
        let want = solomon::expected_expansion(kind, n)?;
        let fmt_terms = |t: &[solomon::Term]| {
            t.iter()
                .map(|x| format!("{}{}", fmt_ratio(&x.coefficient), x.parts))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        let got = m.support();
        cx.claim(
            &format!("expansion-{kind}"),
            "expansion of the statistic in the descent-algebra basis",
            fmt_terms(&want),
            got.as_deref()
                .map_or_else(|| "not a member".into(), fmt_terms),
            got.as_deref() == Some(&want[..]),
        );
    }
    let inv = basis.membership(&g.from_stat(StatKind::Inv, false))?;
    cx.claim(
        "inv-non-member",
        "inv lies outside the descent algebra",
        "not a member".into(),
        if inv.is_member() {
            "member".into()
        } else {
            "not a member".into()
        },
        !inv.is_member(),
    );
    let closure = solomon::closure_check(g)?;
    let ok = closure.pairs_checked - closure.failures.len();
    let first = closure.failures.first().map(|(p, q)| format!("{p}*{q}"));
    cx.count(
        "closure",
        "products B_p B_q stay in the span of the B_r",
        closure.pairs_checked,
        ok,
        first,
    );
    Ok(())
}

fn complexity(cx: &mut Cx, g: &SymmetricGroup) -> Result<()> {
    let n = g.degree();
    let side = g.ideal_side();
    let small = n * (n - 1) / 2 + 1;
    let els: Vec<_> = StatKind::SKEW
        .iter()
        .map(|&k| g.from_stat(k, false))
        .collect();
    for (kind, u) in StatKind::SKEW.iter().zip(&els) {
        cx.eq_usize(
            &format!("dim-{kind}"),
            "dimension of the ideal generated by the statistic",
            small,
            g.ideal_dimension(u, side)?,
        );
    }
    let refs: Vec<_> = els.iter().collect();
    cx.eq_usize(
        "dim-maj-des-inv-stacked",
        "maj, des and inv generate the same ideal",
        small,
        g.translates_rank(&refs, side)?,
    );
    let big = (n - 1) * (n - 1) + 1;
    let exc = g.from_stat(StatKind::Exc, false);
    let fix = g.from_stat(StatKind::Fix, false);
    cx.eq_usize(
        "dim-exc",
        "dimension of the ideal generated by exc",
        big,
        g.ideal_dimension(&exc, side)?,
    );
    cx.eq_usize(
        "dim-exc-fix-stacked",
        "exc and fix generate the same ideal",
        big,
        g.translates_rank(&[&exc, &fix], side)?,
    );
    cx.eq_usize(
        "dim-delta",
        "delta_e generates the whole algebra",
        g.order(),
        g.ideal_dimension(&g.delta_e(), side)?,
    );
    Ok(())
}

/// Statistic sums and closed forms, shared by the CLI and the tests.
pub fn stat_sum_closed_form(kind: StatKind, n: usize) -> Option<u64> {
    let f = perm::factorial(n);
    let n = n as u64;
    match kind {
        StatKind::Maj | StatKind::Inv => Some(f * n * (n - 1) / 4),
        StatKind::Des => Some(f * (n - 1) / 2),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(parse_suites("all").unwrap().len(), 10);
        assert_eq!(
            parse_suites("gram,fix,gram").unwrap(),
            vec![Suite::Gram, Suite::Fix]
        );
        assert!(parse_suites("gram,bogus").is_err());
        assert!(parse_suites("").is_err());
    }

    #[test]
    fn all_suites_pass_at_n3() {
        let r = run(
            &Suite::ALL,
            &[3],
            GroupConfig::default(),
            SuiteOptions {
                cpd_trials: 200,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(r.passed, "{:?}", r.failures().next());
        assert!(r.skipped.is_empty());
        let ids: Vec<&str> = r.claims.iter().map(|c| c.id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn complexity_at_n5() {
        let r = run(
            &[Suite::Complexity],
            &[5],
            GroupConfig::default(),
            SuiteOptions::default(),
        )
        .unwrap();
        let get = |name: &str| {
            r.claims
                .iter()
                .find(|c| c.id.ends_with(name))
                .unwrap()
                .computed
                .clone()
        };
        assert_eq!(get("dim-maj"), "11");
        assert_eq!(get("dim-des"), "11");
        assert_eq!(get("dim-inv"), "11");
        assert_eq!(get("dim-exc"), "17");
        assert!(r.passed);
    }

    #[test]
    fn skipped_degrees_are_listed() {
        let r = run(
            &[Suite::Identities, Suite::Gram],
            &[2],
            GroupConfig::default(),
            SuiteOptions::default(),
        )
        .unwrap();
        assert_eq!(r.skipped.len(), 1);
        assert!(r.passed);
    }

    #[test]
    fn closed_form_sums() {
        assert_eq!(stat_sum_closed_form(StatKind::Maj, 4), Some(72));
        assert_eq!(stat_sum_closed_form(StatKind::Des, 4), Some(36));
        assert_eq!(stat_sum_closed_form(StatKind::Fix, 4), None);
    }
}
