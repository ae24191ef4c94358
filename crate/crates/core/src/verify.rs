//! Coefficient-level checks: identities, coefficient-wise inequalities,
//! monotonicity, the six-step recurrence, and the `D3` injection.
//!
//! Every check produces a [`CheckReport`]. A report passes exactly when it
//! holds no counterexamples, and its range is the range that was actually
//! examined. Finite truncation verifies the statements; it does not prove them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::identities::{self as ids, TELESCOPED_HEAD};
use crate::partitions::{self, hook_count_tables, Constraint, Partition, DEFAULT_ORACLE_CEILING};
use crate::series::{Series, TermList};

pub const DEFAULT_SERIES_N_MAX: usize = 500;
pub const DEFAULT_INJECTION_CEILING: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("range ends at {n_hi} but the series are only known to q^{trunc}")]
    RangeBeyondTruncation { n_hi: usize, trunc: usize },
    #[error("{theorem} has no {mode} route")]
    UnsupportedMode { theorem: TheoremId, mode: Mode },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

fn as_decimal<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    #[serde(serialize_with = "as_decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "as_decimal")]
    pub rhs: BigInt,
}

impl Counterexample {
    pub fn new(n: usize, lhs: impl Into<BigInt>, rhs: impl Into<BigInt>) -> Self {
        Counterexample {
            n,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub range: (usize, usize),
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
    pub runtime_note: String,
}

impl CheckReport {
    pub fn new(
        check_name: impl Into<String>,
        range: (usize, usize),
        counterexamples: Vec<Counterexample>,
        runtime_note: impl Into<String>,
    ) -> Self {
        CheckReport {
            check_name: check_name.into(),
            range,
            passed: counterexamples.is_empty(),
            counterexamples,
            runtime_note: runtime_note.into(),
        }
    }

    pub fn failing_indices(&self) -> Vec<usize> {
        self.counterexamples.iter().map(|c| c.n).collect()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} [{}, {}]", self.check_name, self.range.0, self.range.1)?;
        if !self.passed {
            write!(f, " ({} counterexamples)", self.counterexamples.len())?;
        }
        if !self.runtime_note.is_empty() {
            write!(f, " - {}", self.runtime_note)?;
        }
        Ok(())
    }
}

/// Collects the clauses of a composite check into one report.
struct Clauses {
    cex: Vec<Counterexample>,
    failed: Vec<&'static str>,
    notes: Vec<String>,
}

impl Clauses {
    fn new() -> Self {
        Clauses {
            cex: Vec::new(),
            failed: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn clause(&mut self, label: &'static str, cex: Vec<Counterexample>) {
        if !cex.is_empty() {
            self.failed.push(label);
        }
        self.cex.extend(cex);
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn finish(self, name: &str, range: (usize, usize)) -> CheckReport {
        let mut notes = self.notes;
        if !self.failed.is_empty() {
            notes.insert(0, format!("failed clauses: {}", self.failed.join(", ")));
        }
        CheckReport::new(name, range, self.cex, notes.join("; "))
    }
}

fn ensure_within(n_hi: usize, series: &[&Series]) -> Result<(), VerifyError> {
    let trunc = series.iter().map(|s| s.trunc()).min().unwrap_or(0);
    if n_hi > trunc {
        Err(VerifyError::RangeBeyondTruncation { n_hi, trunc })
    } else {
        Ok(())
    }
}

fn geq_cex(a: &Series, b: &Series, n_lo: usize, n_hi: usize) -> Vec<Counterexample> {
    (n_lo..=n_hi)
        .filter(|&n| a.coeffs()[n] < b.coeffs()[n])
        .map(|n| Counterexample::new(n, a.coeffs()[n].clone(), b.coeffs()[n].clone()))
        .collect()
}

fn eq_cex(a: &Series, b: &Series, n_lo: usize, n_hi: usize) -> Vec<Counterexample> {
    (n_lo..=n_hi)
        .filter(|&n| a.coeffs()[n] != b.coeffs()[n])
        .map(|n| Counterexample::new(n, a.coeffs()[n].clone(), b.coeffs()[n].clone()))
        .collect()
}

/// Records every `n` in `[n_lo, n_hi]` with `[q^n]a < [q^n]b`.
pub fn check_coeffwise_geq(
    name: &str,
    a: &Series,
    b: &Series,
    n_lo: usize,
    n_hi: usize,
) -> Result<CheckReport, VerifyError> {
    ensure_within(n_hi, &[a, b])?;
    Ok(CheckReport::new(name, (n_lo, n_hi), geq_cex(a, b, n_lo, n_hi), ""))
}

pub fn check_equal(name: &str, a: &Series, b: &Series, n_hi: usize) -> Result<CheckReport, VerifyError> {
    ensure_within(n_hi, &[a, b])?;
    Ok(CheckReport::new(name, (0, n_hi), eq_cex(a, b, 0, n_hi), ""))
}

fn nonneg_cex(a: &Series, n_lo: usize, n_hi: usize) -> Vec<Counterexample> {
    geq_cex(a, &Series::zero(a.trunc()), n_lo, n_hi)
}

fn values(s: &Series, range: std::ops::RangeInclusive<usize>) -> String {
    let v: Vec<String> = range.map(|n| s.coeffs()[n].to_string()).collect();
    format!("({})", v.join(","))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `b_{3,2}(n) >= b_{2,2}(n)`, `n >= 4`
    Thm1,
    /// `b_{3,3}(n) >= b_{2,3}(n)`, `n >= 0`
    Thm2,
    /// `b_{2,2}(n) >= b_{2,1}(n)`, `n >= 5`
    Thm3,
    /// `b_{4,2}(n) >= b_{3,2}(n)`, `n >= 0`
    Thm4Pjm,
}

impl TheoremId {
    pub const ALL: [TheoremId; 4] = [TheoremId::Thm1, TheoremId::Thm2, TheoremId::Thm3, TheoremId::Thm4Pjm];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Thm1 => "thm1",
            TheoremId::Thm2 => "thm2",
            TheoremId::Thm3 => "thm3",
            TheoremId::Thm4Pjm => "thm4_pjm",
        }
    }

    /// First `n` covered by the inequality.
    pub fn start(self) -> usize {
        match self {
            TheoremId::Thm1 => 4,
            TheoremId::Thm3 => 5,
            TheoremId::Thm2 | TheoremId::Thm4Pjm => 0,
        }
    }

    /// `((t, k) of the larger side, (t, k) of the smaller side)`.
    pub fn sides(self) -> ((u32, u32), (u32, u32)) {
        match self {
            TheoremId::Thm1 => ((3, 2), (2, 2)),
            TheoremId::Thm2 => ((3, 3), (2, 3)),
            TheoremId::Thm3 => ((2, 2), (2, 1)),
            TheoremId::Thm4Pjm => ((4, 2), (3, 2)),
        }
    }

    pub fn has_genfun(self) -> bool {
        matches!(self, TheoremId::Thm1 | TheoremId::Thm3)
    }

    pub fn default_mode(self) -> Mode {
        if self.has_genfun() {
            Mode::Both
        } else {
            Mode::Oracle
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Genfun,
    Oracle,
    Both,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Genfun => "genfun",
            Mode::Oracle => "oracle",
            Mode::Both => "both",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "genfun" => Ok(Mode::Genfun),
            "oracle" => Ok(Mode::Oracle),
            "both" => Ok(Mode::Both),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

/// Generating function for `b_{t,k}` where one is available.
pub fn genfun_for(t: u32, k: u32, trunc: usize) -> Option<Series> {
    match (t, k) {
        (2, 1) => Some(ids::b21(trunc)),
        (2, 2) => Some(ids::b22(trunc)),
        (3, 2) => Some(ids::b32(trunc)),
        _ => None,
    }
}

/// Brute-force `b_{t,k}(0..=n_max)` for several `(t, k)` pairs, grouping by
/// `t` so each family of partitions is enumerated once.
fn oracle_tables(pairs: &[(u32, u32)], n_max: usize) -> HashMap<(u32, u32), Vec<u64>> {
    let mut by_t: HashMap<u32, Vec<u32>> = HashMap::new();
    for &(t, k) in pairs {
        let ks = by_t.entry(t).or_default();
        if !ks.contains(&k) {
            ks.push(k);
        }
    }
    let mut out = HashMap::new();
    for (t, ks) in by_t {
        for table in hook_count_tables(t, &ks, n_max) {
            out.insert((table.t, table.k), table.values);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Truncation order for generating-function checks.
    pub n_max: usize,
    /// Largest `n` for hook-count enumeration.
    pub oracle_ceiling: usize,
    /// Largest `n` for the exhaustive injection check.
    pub injection_ceiling: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: DEFAULT_SERIES_N_MAX,
            oracle_ceiling: DEFAULT_ORACLE_CEILING,
            injection_ceiling: DEFAULT_INJECTION_CEILING,
        }
    }
}

impl VerifyConfig {
    pub fn with_n_max(n_max: usize) -> Self {
        VerifyConfig {
            n_max,
            ..Self::default()
        }
    }

    fn oracle_max(&self) -> usize {
        self.n_max.min(self.oracle_ceiling)
    }
}

/// Checks a theorem's inequality from its start index through `cfg.n_max`
/// (oracle routes stop at `cfg.oracle_ceiling`).
pub fn verify_theorem(id: TheoremId, mode: Mode, cfg: &VerifyConfig) -> Result<CheckReport, VerifyError> {
    if mode != Mode::Oracle && !id.has_genfun() {
        return Err(VerifyError::UnsupportedMode { theorem: id, mode });
    }
    let start = id.start();
    let ((t_hi, k_hi), (t_lo, k_lo)) = id.sides();
    let mut clauses = Clauses::new();
    let mut hi = cfg.n_max;

    if mode != Mode::Oracle {
        let big = genfun_for(t_hi, k_hi, cfg.n_max).expect("genfun exists");
        let small = genfun_for(t_lo, k_lo, cfg.n_max).expect("genfun exists");
        let diff = &big - &small;
        clauses.clause("inequality (genfun)", nonneg_cex(&diff, start, cfg.n_max));
        if start > 0 {
            clauses.note(format!(
                "outside range, informational: n=0..{} values {}",
                start - 1,
                values(&diff, 0..=(start - 1).min(cfg.n_max))
            ));
        }
    }

    if mode != Mode::Genfun {
        let om = cfg.oracle_max();
        let tables = oracle_tables(&[(t_hi, k_hi), (t_lo, k_lo)], om);
        let big = &tables[&(t_hi, k_hi)];
        let small = &tables[&(t_lo, k_lo)];
        let cex = (start..=om)
            .filter(|&n| big[n] < small[n])
            .map(|n| Counterexample::new(n, big[n], small[n]))
            .collect();
        clauses.clause("inequality (oracle)", cex);
        if mode == Mode::Both {
            for (t, k) in [(t_hi, k_hi), (t_lo, k_lo)] {
                let g = genfun_for(t, k, om).expect("genfun exists");
                let table = &tables[&(t, k)];
                let cex = (0..=om)
                    .filter(|&n| g.coeffs()[n] != BigInt::from(table[n]))
                    .map(|n| Counterexample::new(n, g.coeffs()[n].clone(), table[n]))
                    .collect();
                clauses.clause("genfun/oracle agreement", cex);
            }
            clauses.note(format!("oracle cross-check on [0, {om}]"));
        } else {
            hi = om;
            if cfg.n_max > om {
                clauses.note(format!("oracle only, capped at n = {om}"));
            }
        }
    }
    Ok(clauses.finish(id.as_str(), (start, hi)))
}

/// `[q^n](B22 - B21) = sum_{i<=n-5} d3(i) - d3(n-1)` for `5 <= n <= n_max`,
/// with `d3` read off `(-q^3;q)_inf`, then again with brute-force counts up
/// to the oracle ceiling.
pub fn verify_corollary(cfg: &VerifyConfig) -> CheckReport {
    let n_max = cfg.n_max;
    let mut clauses = Clauses::new();
    let diff = ids::b22(n_max) - ids::b21(n_max);
    let d3 = ids::d3_table(n_max);
    let cex = (5..=n_max)
        .filter_map(|n| {
            let rhs = ids::corollary_rhs(n, &d3).expect("table covers n - 1");
            (diff.coeffs()[n] != rhs).then(|| Counterexample::new(n, diff.coeffs()[n].clone(), rhs))
        })
        .collect();
    clauses.clause("closed form (series)", cex);

    let om = cfg.oracle_max();
    if om >= 5 {
        let tables = oracle_tables(&[(2, 2), (2, 1)], om);
        let d3_brute: Vec<BigInt> = (0..=om).map(|n| BigInt::from(partitions::d3_brute(n))).collect();
        let cex = (5..=om)
            .filter_map(|n| {
                let lhs = BigInt::from(tables[&(2, 2)][n]) - tables[&(2, 1)][n];
                let rhs = ids::corollary_rhs(n, &d3_brute).expect("table covers n - 1");
                (lhs != rhs || lhs != diff.coeffs()[n]).then(|| Counterexample::new(n, lhs, rhs))
            })
            .collect();
        clauses.clause("closed form (oracle)", cex);
        clauses.note(format!("oracle triple-check on [5, {om}]"));
    }
    clauses.finish("corollary", (5, n_max))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    D3Monotone,
    Phi,
    Pge,
    Fn,
    CoefPositivityInstance,
}

impl LemmaId {
    pub const ALL: [LemmaId; 5] = [
        LemmaId::D3Monotone,
        LemmaId::Phi,
        LemmaId::Pge,
        LemmaId::Fn,
        LemmaId::CoefPositivityInstance,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::D3Monotone => "lemma_d3_monotone",
            LemmaId::Phi => "lemma_phi",
            LemmaId::Pge => "lemma_pge",
            LemmaId::Fn => "lemma_fn",
            LemmaId::CoefPositivityInstance => "lemma_coef_positivity",
        }
    }
}

/// Generic positivity criterion: `H = sum h_n q^n` nondecreasing from `n0`,
/// `E = sum_{j in J} alpha_j q^j - c q^r` with `r` outside `J`, all
/// `alpha_j >= 0`, `c >= 0`, and some `s < r` in `J` with `alpha_s >= c`.
/// Then `[q^n](E H) >= 0` for `n >= n0 + r`.
///
/// The hypotheses are checked on `h`'s known coefficients up to `n_max`
/// before the conclusion; `c` is read off `E` as minus its `q^r` coefficient.
pub fn check_coef_positivity(
    name: &str,
    e: &TermList,
    r: usize,
    s: usize,
    h: &Series,
    n0: usize,
    n_max: usize,
) -> Result<CheckReport, VerifyError> {
    ensure_within(n_max, &[h])?;
    let mut clauses = Clauses::new();
    let zero = BigInt::zero();
    let c = -e.get(r).cloned().unwrap_or_default();
    let alpha_s = e.get(s).cloned().unwrap_or_default();

    let mut hyp = Vec::new();
    if c.is_negative() {
        hyp.push(Counterexample::new(r, c.clone(), zero.clone()));
    }
    for (j, a) in e.iter().filter(|&(j, _)| j != r) {
        if a.is_negative() {
            hyp.push(Counterexample::new(j, a.clone(), zero.clone()));
        }
    }
    if s >= r || e.get(s).is_none() || alpha_s < c {
        hyp.push(Counterexample::new(s, alpha_s.clone(), c.clone()));
    }
    clauses.clause("hypothesis on E", hyp);

    let hc = h.coeffs();
    let mono = (n0 + 1..=n_max)
        .filter(|&n| hc[n] < hc[n - 1])
        .map(|n| Counterexample::new(n, hc[n].clone(), hc[n - 1].clone()))
        .collect();
    clauses.clause("h nondecreasing", mono);

    let product = Series::from_terms(e, n_max) * h.truncate(n_max);
    clauses.clause("conclusion", nonneg_cex(&product, n0 + r, n_max));
    clauses.note(format!("r={r}, s={s}, c={c}, N0={n0}; conclusion from n={}", n0 + r));
    Ok(clauses.finish(name, (n0 + r, n_max)))
}

pub fn verify_lemma(id: LemmaId, n_max: usize) -> CheckReport {
    let name = id.as_str();
    match id {
        LemmaId::D3Monotone => {
            let mut clauses = Clauses::new();
            // Analytic route: every coefficient of the Sylvester-type expansion
            // of (1-q)(-q^3;q)_inf from q^2 on.
            let expansion = ids::syl3_rhs(n_max);
            clauses.clause("expansion nonnegative", nonneg_cex(&expansion, 2, n_max));
            let d3 = ids::d3_table(n_max);
            let cex = (2..=n_max)
                .filter(|&n| d3[n] < d3[n - 1])
                .map(|n| Counterexample::new(n, d3[n].clone(), d3[n - 1].clone()))
                .collect();
            clauses.clause("d3(n) >= d3(n-1)", cex);
            clauses.finish(name, (2, n_max))
        }
        LemmaId::Phi => {
            let phi = ids::phi(n_max.max(ids::MIN_BUILD_TRUNC));
            let mut clauses = Clauses::new();
            clauses.clause("nonnegative", nonneg_cex(&phi, 4, n_max));
            clauses.note(format!(
                "informational: coefficients q^0..q^3 = {}",
                values(&phi, 0..=3)
            ));
            clauses.finish(name, (4, n_max))
        }
        LemmaId::Pge => {
            let rhs = ids::m_poly(n_max) * ids::h_series(n_max);
            let report = check_coeffwise_geq(name, &ids::p_series(n_max), &rhs, 0, n_max);
            report.expect("both sides built at n_max")
        }
        LemmaId::Fn => {
            let f = ids::f_series(n_max);
            let mut clauses = Clauses::new();
            clauses.clause("nonnegative", nonneg_cex(&f, 4, n_max));
            let upper = 3.min(n_max);
            clauses.note(format!("informational: F_0..F_{upper} = {}", values(&f, 0..=upper)));
            clauses.finish(name, (4, n_max))
        }
        LemmaId::CoefPositivityInstance => {
            check_coef_positivity(name, &ids::e_terms(), 3, 2, &ids::h_series(n_max), 1, n_max)
                .expect("h built at n_max")
        }
    }
}

/// The base block `G_4..G_9`.
pub const BASE_BLOCK: [i64; 6] = [3, 1, 5, 5, 11, 13];

/// `G_n - G_{n-6} = F_n` on `[0, n_max]`, the base block, and
/// `G_n >= G_{n-6}` from `n = 4` (which makes every residue sequence
/// `G_{r+6k}`, `r = 4..9`, nondecreasing). `G_m = 0` for `m < 0`.
pub fn verify_recurrence(n_max: usize) -> CheckReport {
    let n_max = n_max.max(9);
    let g = ids::g_series(n_max);
    let f = ids::f_series(n_max);
    let gc = g.coeffs();
    let lag = |n: usize| if n >= 6 { gc[n - 6].clone() } else { BigInt::zero() };
    let mut clauses = Clauses::new();

    let cex = (0..=n_max)
        .filter_map(|n| {
            let lhs = &gc[n] - lag(n);
            (lhs != f.coeffs()[n]).then(|| Counterexample::new(n, lhs, f.coeffs()[n].clone()))
        })
        .collect();
    clauses.clause("G_n - G_{n-6} = F_n", cex);

    let cex = BASE_BLOCK
        .iter()
        .zip(4..)
        .filter(|&(&want, n)| gc[n] != BigInt::from(want))
        .map(|(&want, n)| Counterexample::new(n, gc[n].clone(), want))
        .collect();
    clauses.clause("base block", cex);

    let cex = (4..=n_max)
        .filter(|&n| gc[n] < lag(n))
        .map(|n| Counterexample::new(n, gc[n].clone(), lag(n)))
        .collect();
    clauses.clause("G_n >= G_{n-6}", cex);
    clauses.finish("recurrence", (0, n_max))
}

/// Runs `map` over every `D3(n-1)`, `n_lo <= n <= n_hi`.
///
/// Counterexamples, by clause:
/// - a part of size `n-2` or `n-3`: `(n, part, n-1)`
/// - an image outside `D3(0) ∪ D3(3..=n-5)`: `(n, index, n-5)`
/// - an `(index, image)` pair hit more than once: `(n, preimages, 1)`
/// - `|D3(n-1)| > sum_{i<=n-5} |D3(i)|`: `(n, |D3(n-1)|, sum)`
pub fn check_injection_map<F>(name: &str, n_lo: usize, n_hi: usize, map: F) -> CheckReport
where
    F: Fn(&Partition) -> (usize, Partition),
{
    let n_lo = n_lo.max(5);
    let mut clauses = Clauses::new();
    let counts: Vec<usize> = (0..n_hi.max(1))
        .map(|i| partitions::enumerate(i, Constraint::DistinctMin(3)).count())
        .collect();
    let (mut structural, mut invalid, mut duplicate, mut cardinality) = (vec![], vec![], vec![], vec![]);

    for n in n_lo..=n_hi {
        let mut seen: HashMap<(usize, Partition), usize> = HashMap::new();
        for p in partitions::enumerate(n - 1, Constraint::DistinctMin(3)) {
            for &part in p.parts() {
                let part = part as usize;
                if part == n - 2 || part == n - 3 {
                    structural.push(Counterexample::new(n, part, n - 1));
                }
            }
            let (index, image) = map(&p);
            let valid = image.is_distinct_min(3) && image.size() == index && index <= n - 5 && index != 1 && index != 2;
            if !valid {
                invalid.push(Counterexample::new(n, index, n - 5));
            }
            *seen.entry((index, image)).or_default() += 1;
        }
        let mut dups: Vec<_> = seen.into_iter().filter(|(_, c)| *c > 1).collect();
        dups.sort();
        duplicate.extend(dups.into_iter().map(|(_, c)| Counterexample::new(n, c, 1)));

        let domain = counts[n - 1];
        let codomain: usize = counts[..=n - 5].iter().sum();
        if domain > codomain {
            cardinality.push(Counterexample::new(n, domain, codomain));
        }
    }
    clauses.clause("no part of size n-2 or n-3", structural);
    clauses.clause("image in D3(0..=n-5)", invalid);
    clauses.clause("injective", duplicate);
    clauses.clause("|D3(n-1)| <= sum |D3(i)|", cardinality);
    clauses.finish(name, (n_lo, n_hi))
}

pub fn verify_injection(n_lo: usize, n_hi: usize) -> CheckReport {
    check_injection_map("injection", n_lo, n_hi, |p| {
        partitions::injection(p).expect("enumerated from D3(n-1)")
    })
}

/// `[q^n]B_{t,k} = b_{t,k}(n)` for the three available generating functions.
pub fn verify_genfun_oracle(n_max: usize) -> CheckReport {
    let pairs = [(2, 1), (2, 2), (3, 2)];
    let tables = oracle_tables(&pairs, n_max);
    let mut clauses = Clauses::new();
    for (t, k) in pairs {
        let g = genfun_for(t, k, n_max).expect("genfun exists");
        let table = &tables[&(t, k)];
        let cex = (0..=n_max)
            .filter(|&n| g.coeffs()[n] != BigInt::from(table[n]))
            .map(|n| Counterexample::new(n, g.coeffs()[n].clone(), table[n]))
            .collect();
        let label = match (t, k) {
            (2, 1) => "B21",
            (2, 2) => "B22",
            _ => "B32",
        };
        clauses.clause(label, cex);
    }
    clauses.note("lhs = series coefficient, rhs = brute-force count");
    clauses.finish("genfun_oracle", (0, n_max))
}

macro_rules! check_ids {
    ($($variant:ident => $s:literal,)*) => {
        /// Every runnable check, by its report name.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId {
            $($variant,)*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $s,)*
                }
            }
        }

        impl FromStr for CheckId {
            type Err = VerifyError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($s => Ok(CheckId::$variant),)*
                    _ => Err(VerifyError::UnknownCheck(s.to_string())),
                }
            }
        }
    };
}

check_ids! {
    Thm1 => "thm1",
    Thm2 => "thm2",
    Thm3 => "thm3",
    Thm4Pjm => "thm4_pjm",
    Corollary => "corollary",
    LemmaD3Monotone => "lemma_d3_monotone",
    LemmaPhi => "lemma_phi",
    LemmaPge => "lemma_pge",
    LemmaFn => "lemma_fn",
    LemmaCoefPositivity => "lemma_coef_positivity",
    Recurrence => "recurrence",
    Injection => "injection",
    GenfunOracle => "genfun_oracle",
    IdentityEuler => "identity_euler",
    IdentitySylvesterX0 => "identity_sylvester_x0",
    IdentitySylvesterX1 => "identity_sylvester_x1",
    IdentitySylvesterX2 => "identity_sylvester_x2",
    IdentitySyl2 => "identity_syl2",
    IdentitySyl3 => "identity_syl3",
    IdentityLem1 => "identity_lem1_bookkeeping",
    IdentityB22Simplified => "identity_b22_simplified",
    IdentityFForms => "identity_f_forms",
    IdentityPhiExpansion => "identity_phi_expansion",
    IdentityPrExpansion => "identity_pr_expansion",
    IdentityMPcFactored => "identity_m_pc_factored",
    IdentityTelescoped => "identity_telescoped",
    SVanishesLow => "s_vanishes_low",
    SNonneg => "s_nonneg",
    SPcNonneg => "s_pc_nonneg",
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn poly(terms: &[(usize, i64)], trunc: usize) -> Series {
    Series::from_terms(&terms.iter().copied().collect(), trunc)
}

fn equal(name: CheckId, a: &Series, b: &Series, n_max: usize) -> CheckReport {
    check_equal(name.as_str(), a, b, n_max).expect("both sides built at n_max")
}

impl CheckId {
    pub fn run(self, cfg: &VerifyConfig) -> CheckReport {
        let n = cfg.n_max;
        let theorem = |id: TheoremId| verify_theorem(id, id.default_mode(), cfg).expect("default mode is supported");
        match self {
            CheckId::Thm1 => theorem(TheoremId::Thm1),
            CheckId::Thm2 => theorem(TheoremId::Thm2),
            CheckId::Thm3 => theorem(TheoremId::Thm3),
            CheckId::Thm4Pjm => theorem(TheoremId::Thm4Pjm),
            CheckId::Corollary => verify_corollary(cfg),
            CheckId::LemmaD3Monotone => verify_lemma(LemmaId::D3Monotone, n),
            CheckId::LemmaPhi => verify_lemma(LemmaId::Phi, n),
            CheckId::LemmaPge => verify_lemma(LemmaId::Pge, n),
            CheckId::LemmaFn => verify_lemma(LemmaId::Fn, n),
            CheckId::LemmaCoefPositivity => verify_lemma(LemmaId::CoefPositivityInstance, n),
            CheckId::Recurrence => verify_recurrence(n),
            CheckId::Injection => {
                let hi = cfg.injection_ceiling.min(n).max(5);
                let mut r = verify_injection(5, hi);
                if hi < n {
                    r.runtime_note = join_note(&r.runtime_note, &format!("exhaustive, capped at n = {hi}"));
                }
                r
            }
            CheckId::GenfunOracle => verify_genfun_oracle(cfg.oracle_max()),
            CheckId::IdentityEuler => equal(self, &ids::euler_lhs(n), &ids::euler_rhs(n), n),
            CheckId::IdentitySylvesterX0 => equal(self, &ids::sylvester_lhs(0, n), &ids::sylvester_rhs(0, n), n),
            CheckId::IdentitySylvesterX1 => equal(self, &ids::sylvester_lhs(1, n), &ids::sylvester_rhs(1, n), n),
            CheckId::IdentitySylvesterX2 => equal(self, &ids::sylvester_lhs(2, n), &ids::sylvester_rhs(2, n), n),
            CheckId::IdentitySyl2 => equal(self, &ids::syl2_lhs(n), &ids::syl2_rhs(n), n),
            CheckId::IdentitySyl3 => equal(self, &ids::syl3_lhs(n), &ids::syl3_rhs(n), n),
            CheckId::IdentityLem1 => {
                let lhs = ids::lem1_lhs(n);
                let d3 = ids::d3_table(n);
                let rhs = Series::from_coeffs((0..=n).map(|i| ids::d3_difference(&d3, i)).collect());
                let mut clauses = Clauses::new();
                clauses.clause("series d3", eq_cex(&lhs, &rhs, 0, n));
                let om = cfg.oracle_max();
                let brute: Vec<BigInt> = (0..=om).map(|i| BigInt::from(partitions::d3_brute(i))).collect();
                let cex = (0..=om)
                    .filter_map(|i| {
                        let want = ids::d3_difference(&brute, i);
                        (lhs.coeffs()[i] != want).then(|| Counterexample::new(i, lhs.coeffs()[i].clone(), want))
                    })
                    .collect();
                clauses.clause("brute-force d3", cex);
                clauses.note(format!("brute-force d3 on [0, {om}]"));
                clauses.finish(self.as_str(), (0, n))
            }
            CheckId::IdentityB22Simplified => equal(self, &ids::b22(n), &ids::b22_simplified(n), n),
            CheckId::IdentityFForms => equal(self, &ids::f_series(n), &ids::f_product_form(n), n),
            CheckId::IdentityPhiExpansion => {
                let expected = poly(
                    &[
                        (2, 1),
                        (3, -2),
                        (4, 3),
                        (6, 5),
                        (7, 2),
                        (8, 5),
                        (9, 4),
                        (10, 3),
                        (11, 3),
                        (12, 1),
                        (13, 1),
                    ],
                    n.max(ids::MIN_BUILD_TRUNC),
                );
                let phi = ids::phi(n.max(ids::MIN_BUILD_TRUNC));
                equal(self, &phi, &expected, phi.trunc())
            }
            CheckId::IdentityPrExpansion => {
                let t = n.max(ids::MIN_BUILD_TRUNC);
                let expected = poly(
                    &[(2, 1), (3, 2), (4, 2), (5, 3), (6, 3), (7, 3), (8, 2), (9, 1), (10, 1)],
                    t,
                );
                equal(self, &ids::pr(t), &expected, t)
            }
            CheckId::IdentityMPcFactored => {
                let inner = poly(&[(1, 1), (3, 1), (5, 1)], n);
                let rhs = poly(&[(0, 2), (1, 1), (2, 1), (3, 1)], n) * &inner * inner;
                equal(self, &(ids::m_poly(n) * ids::pc(n)), &rhs, n)
            }
            CheckId::IdentityTelescoped => {
                let diff = ids::b22(n) - ids::b21(n);
                let d3 = ids::d3_table(n);
                let rhs = Series::from_coeffs(
                    (0..=n)
                        .map(|i| ids::telescoped_coeff(i, &d3).expect("table covers i"))
                        .collect(),
                );
                let mut r = equal(self, &diff, &rhs, n);
                r.runtime_note = format!(
                    "raw head {:?} at q^1..q^3; net B22-B21 at n=0..4 {}",
                    &TELESCOPED_HEAD[1..],
                    values(&diff, 0..=4.min(n))
                );
                r
            }
            CheckId::SVanishesLow => {
                let s = ids::s_series(n);
                let hi = 5.min(n);
                equal(self, &s, &Series::zero(n), hi)
            }
            CheckId::SNonneg => {
                let s = ids::s_series(n);
                CheckReport::new(self.as_str(), (6, n), nonneg_cex(&s, 6, n), "")
            }
            CheckId::SPcNonneg => {
                let spc = ids::s_series(n) * ids::pc(n);
                CheckReport::new(self.as_str(), (0, n), nonneg_cex(&spc, 0, n), "")
            }
        }
    }
}

fn join_note(a: &str, b: &str) -> String {
    if a.is_empty() {
        b.to_string()
    } else {
        format!("{a}; {b}")
    }
}

/// Runs `checks` in parallel; reports come back sorted by check name.
pub fn run_checks(checks: &[CheckId], cfg: &VerifyConfig) -> Vec<CheckReport> {
    let mut reports: Vec<CheckReport> = checks.par_iter().map(|c| c.run(cfg)).collect();
    reports.sort_by(|a, b| a.check_name.cmp(&b.check_name));
    reports
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckReport> {
    run_checks(CheckId::ALL, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perturbed(s: &Series, at: usize) -> Series {
        let mut c = s.coeffs().to_vec();
        c[at] -= 1;
        Series::from_coeffs(c)
    }

    #[test]
    fn geq_reflexive_and_range_errors() {
        let a = ids::p_series(60);
        assert!(check_coeffwise_geq("refl", &a, &a, 0, 60).unwrap().passed);
        assert_eq!(
            check_coeffwise_geq("x", &a, &a, 0, 61),
            Err(VerifyError::RangeBeyondTruncation { n_hi: 61, trunc: 60 })
        );
        assert!(check_equal("x", &a, &ids::p_series(20), 30).is_err());
    }

    #[test]
    fn g_early_values_fail_nonnegativity_only_at_three() {
        // G_0..G_3 = (0, 0, 1, -1)
        let g = ids::g_series(20);
        let r = check_coeffwise_geq("g", &g, &Series::zero(20), 0, 3).unwrap();
        assert!(!r.passed);
        assert_eq!(r.counterexamples, vec![Counterexample::new(3, -1, 0)]);
    }

    #[test]
    fn equal_detects_shift() {
        let a = ids::euler_lhs(30);
        let r = check_equal("shift", &a, &a.shift(1), 30).unwrap();
        assert_eq!(r.failing_indices().first(), Some(&0));
    }

    #[test]
    fn perturbation_is_reported_at_exact_index() {
        let a = ids::euler_lhs(80);
        let b = ids::euler_rhs(80);
        let r = check_equal("euler", &a, &perturbed(&b, 57), 80).unwrap();
        assert_eq!(r.failing_indices(), [57]);
        // S vanishes on [0, 5], so lowering P there breaks P >= M H exactly once
        let rhs = ids::m_poly(80) * ids::h_series(80);
        let r = check_coeffwise_geq("pge", &perturbed(&ids::p_series(80), 4), &rhs, 0, 80).unwrap();
        assert_eq!(r.failing_indices(), [4]);
    }

    #[test]
    fn unsupported_modes() {
        let cfg = VerifyConfig::with_n_max(30);
        for id in [TheoremId::Thm2, TheoremId::Thm4Pjm] {
            for mode in [Mode::Genfun, Mode::Both] {
                assert_eq!(
                    verify_theorem(id, mode, &cfg),
                    Err(VerifyError::UnsupportedMode { theorem: id, mode })
                );
            }
        }
    }

    #[test]
    fn thm3_from_one_fails_early() {
        let d = ids::b22(30) - ids::b21(30);
        let r = check_coeffwise_geq("thm3_from_1", &d, &Series::zero(30), 1, 30).unwrap();
        assert_eq!(r.failing_indices(), [1, 4]);
    }

    #[test]
    fn thm1_notes_early_values() {
        let r = verify_theorem(TheoremId::Thm1, Mode::Genfun, &VerifyConfig::with_n_max(40)).unwrap();
        assert!(r.passed);
        assert_eq!(r.range, (4, 40));
        assert!(r.runtime_note.contains("(0,0,1,-1)"), "{}", r.runtime_note);
    }

    #[test]
    fn lemma_phi_and_fn_small() {
        let r = verify_lemma(LemmaId::Phi, 30);
        assert!(r.passed);
        assert!(r.runtime_note.contains("(0,0,1,-2)"));
        let r = verify_lemma(LemmaId::Fn, 30);
        assert!(r.passed);
        assert!(r.runtime_note.contains("(0,0,1,-1)"));
    }

    #[test]
    fn coef_positivity_rejects_bad_hypotheses() {
        let h = ids::h_series(40);
        // alpha_s < c
        let e: TermList = [(2usize, 1i64), (3, -2)].into_iter().collect();
        let r = check_coef_positivity("bad", &e, 3, 2, &h, 1, 40).unwrap();
        assert!(!r.passed);
        assert!(r.runtime_note.contains("hypothesis on E"));
        // s not below r
        let r = check_coef_positivity("bad", &ids::e_terms(), 3, 4, &h, 1, 40).unwrap();
        assert!(!r.passed);
        // h not nondecreasing from 0: d3(1) < d3(0)
        let r = check_coef_positivity("bad", &ids::e_terms(), 3, 2, &h, 0, 40).unwrap();
        assert!(r.runtime_note.contains("h nondecreasing"));
    }

    #[test]
    fn check_names_round_trip() {
        for &c in CheckId::ALL {
            assert_eq!(c.as_str().parse::<CheckId>().unwrap(), c);
        }
        assert!("nosuch".parse::<CheckId>().is_err());
    }

    #[test]
    fn report_json_uses_decimal_strings() {
        let r = CheckReport::new(
            "x",
            (0, 1),
            vec![Counterexample::new(1, BigInt::from(10).pow(30), 0)],
            "",
        );
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["counterexamples"][0]["lhs"], "1000000000000000000000000000000");
        assert_eq!(v["passed"], false);
        assert_eq!(v["range"], serde_json::json!([0, 1]));
    }
}
