//! Verification pipelines.
//!
//! `phi(S)` is the exponent vector of the leading term of `l_S`. The SAGBI
//! check asks that, over all `S` in the power set of `[n-1]`, these vectors
//! are pairwise distinct and are exactly the Hilbert basis of the length-`n`
//! Lecture Hall cone. Failures are collected as data, never raised.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cone::{self, hb_to_subset, hilbert_basis, is_lecture_hall};
use crate::error::{Error, Result};
use crate::lhseq::{check_index, LhSequence};
use crate::minors::{ell_s, CacheStats, SubsetS};
use crate::polyring::{BiDegree, TermOrder};

/// Table of `phi` values for `n <= 8`, one `subset;vector` row per subset.
pub const PHI_TABLE_CSV: &str = include_str!("../../../fixtures/table1.csv");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiEntry {
    pub subset: SubsetS,
    /// Leading exponent vector with trailing zeros trimmed.
    pub vector: Vec<i64>,
    pub lead_coeff: BigInt,
}

impl PhiEntry {
    pub fn has_negative_exponent(&self) -> bool {
        self.vector.iter().any(|&e| e < 0)
    }

    /// The vector zero-padded to length `n`, or `None` if it is longer.
    pub fn padded(&self, n: usize) -> Option<Vec<i64>> {
        (self.vector.len() <= n).then(|| {
            let mut v = self.vector.clone();
            v.resize(n, 0);
            v
        })
    }

    fn to_json(&self) -> Value {
        json!({
            "S": self.subset.elements(),
            "vector": self.vector,
            "lead_coeff": bigint_json(&self.lead_coeff),
        })
    }
}

fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

/// `phi(S)` together with its leading coefficient.
pub fn phi(seq: &LhSequence, s: &SubsetS) -> Result<PhiEntry> {
    let poly = ell_s(seq, s)?;
    let (c, m) = poly.leading_term(TermOrder::DegLex)?;
    Ok(PhiEntry {
        subset: s.clone(),
        vector: m.exponents().iter().map(|&e| i64::from(e)).collect(),
        lead_coeff: c.clone(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Conjecture {
    /// Each Lecture Hall polynomial is a polynomial.
    Pi,
    /// Leading terms of the subset minors form the Hilbert basis.
    Sagbi,
    /// Sum, alternating-sum, restriction and bidegree identities of phi.
    PhiProperties,
    /// The Lecture Hall theorem as truncated series identities.
    Lht,
}

impl Conjecture {
    pub fn as_str(self) -> &'static str {
        match self {
            Conjecture::Pi => "pi",
            Conjecture::Sagbi => "sagbi",
            Conjecture::PhiProperties => "phi-properties",
            Conjecture::Lht => "lht",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub subset: SubsetS,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub n: usize,
    pub conjecture: Conjecture,
    pub status: Status,
    pub entries: Vec<PhiEntry>,
    pub failures: Vec<Failure>,
    /// Observation only: every leading coefficient is 1. Not part of `status`.
    pub unit_leading_coeffs: bool,
    pub elapsed_ms: u64,
    pub cache: Option<CacheStats>,
}

impl VerificationReport {
    fn finish(
        n: usize,
        conjecture: Conjecture,
        entries: Vec<PhiEntry>,
        failures: Vec<Failure>,
        started: Instant,
        cache: Option<CacheStats>,
    ) -> Self {
        let unit_leading_coeffs = entries.iter().all(|e| e.lead_coeff.is_one());
        Self {
            n,
            conjecture,
            status: if failures.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            entries,
            failures,
            unit_leading_coeffs,
            elapsed_ms: started.elapsed().as_millis() as u64,
            cache,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// JSON document; `elapsed_ms` is written as 0 when `with_timing` is false
    /// so that repeated runs are byte-identical.
    pub fn to_json(&self, with_timing: bool) -> String {
        let doc = json!({
            "n": self.n,
            "conjecture": self.conjecture.as_str(),
            "status": self.status,
            "entries": self.entries.iter().map(PhiEntry::to_json).collect::<Vec<_>>(),
            "failures": self.failures.iter().map(|f| json!({
                "S": f.subset.elements(),
                "reason": f.reason,
            })).collect::<Vec<_>>(),
            "unit_leading_coeffs": self.unit_leading_coeffs,
            "elapsed_ms": if with_timing { self.elapsed_ms } else { 0 },
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }

    /// Entries as `subset;vector` rows in the same order and format as the
    /// shipped table (subsets ordered by their bitmask).
    pub fn phi_csv(&self) -> String {
        phi_csv(&self.entries)
    }
}

fn subset_mask(s: &SubsetS) -> u64 {
    s.elements().iter().map(|&x| 1u64 << (x - 1)).sum()
}

/// Renders entries in the table format, ordered by subset bitmask.
pub fn phi_csv(entries: &[PhiEntry]) -> String {
    let mut sorted: Vec<&PhiEntry> = entries.iter().collect();
    sorted.sort_by_key(|e| subset_mask(&e.subset));
    let mut out = String::new();
    for e in sorted {
        let v: Vec<String> = e.vector.iter().map(i64::to_string).collect();
        writeln!(out, "{};{}", e.subset.to_csv(), v.join(",")).expect("write to String");
    }
    out
}

fn compute_entries(seq: &LhSequence, subsets: &[SubsetS]) -> Result<Vec<PhiEntry>> {
    subsets.par_iter().map(|s| phi(seq, s)).collect()
}

/// Checks that the `phi` vectors for all `S` in the power set of `[n-1]` are
/// pairwise distinct and coincide with the Hilbert basis of the length-`n`
/// cone. Runs on the ambient rayon pool.
pub fn verify_sagbi(seq: &mut LhSequence, n: usize) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::InvalidIndex(0));
    }
    let started = Instant::now();
    seq.ensure(n)?;
    let seq = &*seq;
    let subsets = SubsetS::all_subsets_of(n - 1);
    let entries = compute_entries(seq, &subsets)?;
    let basis: BTreeSet<Vec<i64>> = hilbert_basis(n).into_iter().collect();

    let mut failures = Vec::new();
    let mut seen: BTreeMap<Vec<i64>, &SubsetS> = BTreeMap::new();
    for e in &entries {
        let fail = |reason: String| Failure {
            subset: e.subset.clone(),
            reason,
        };
        if e.has_negative_exponent() {
            failures.push(fail(format!(
                "leading exponent {:?} has a negative entry",
                e.vector
            )));
            continue;
        }
        let Some(padded) = e.padded(n) else {
            failures.push(fail(format!(
                "leading exponent {:?} is longer than {n}",
                e.vector
            )));
            continue;
        };
        if !is_lecture_hall(&padded) {
            failures.push(fail(format!(
                "leading exponent {:?} is not a Lecture Hall partition",
                e.vector
            )));
        } else if !basis.contains(&padded) {
            failures.push(fail(format!(
                "leading exponent {:?} is not a Hilbert basis element",
                e.vector
            )));
        }
        match seen.get(&padded) {
            Some(other) => failures.push(fail(format!(
                "leading exponent {:?} coincides with that of {other}",
                e.vector
            ))),
            None => {
                seen.insert(padded, &e.subset);
            }
        }
    }
    for h in &basis {
        if !seen.contains_key(h) {
            failures.push(Failure {
                subset: SubsetS::empty(),
                reason: format!("Hilbert basis element {h:?} is not a leading exponent"),
            });
        }
    }

    Ok(VerificationReport::finish(
        n,
        Conjecture::Sagbi,
        entries,
        failures,
        started,
        Some(seq.memo().stats()),
    ))
}

/// `sum_j (s_j + 2 - j, s_j + 1 - j)` for `S = {s_1 < ... < s_r}`: the
/// bidegree of the diagonal product `prod_j l_{s_j + 2 - j}`.
pub fn expected_subset_bidegree(s: &SubsetS) -> BiDegree {
    s.elements()
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let j = k as i64 + 1;
            BiDegree::new(x as i64 + 2 - j, x as i64 + 1 - j)
        })
        .fold(BiDegree::default(), |a, b| a + b)
}

/// Checks the degree identities of `phi` for every nonempty `S` in the power
/// set of `[n-1]`, and that its restriction to `[i-1]` hits the Hilbert basis
/// of length `i` for every `i <= n`.
pub fn verify_phi_properties(seq: &mut LhSequence, n: usize) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::InvalidIndex(0));
    }
    let started = Instant::now();
    seq.ensure(n)?;
    let seq = &*seq;
    let subsets = SubsetS::all_subsets_of(n - 1);
    let results: Vec<(PhiEntry, Option<BiDegree>)> = subsets
        .par_iter()
        .map(|s| {
            let poly = ell_s(seq, s)?;
            let (c, m) = poly.leading_term(TermOrder::DegLex)?;
            let entry = PhiEntry {
                subset: s.clone(),
                vector: m.exponents().iter().map(|&e| i64::from(e)).collect(),
                lead_coeff: c.clone(),
            };
            Ok((entry, poly.bidegree()))
        })
        .collect::<Result<_>>()?;

    let mut failures = Vec::new();
    for (e, bideg) in &results {
        let s = &e.subset;
        let fail = |reason: String| Failure {
            subset: s.clone(),
            reason,
        };
        if !s.is_empty() {
            let r = s.len() as i64;
            let alternating: i64 = e
                .vector
                .iter()
                .enumerate()
                .map(|(k, &x)| if k % 2 == 0 { x } else { -x })
                .sum();
            if alternating != r {
                failures.push(fail(format!("alternating sum {alternating} != #S = {r}")));
            }
            let sum: i64 = e.vector.iter().sum();
            let expected = 2 * s.elements().iter().map(|&x| x as i64).sum::<i64>() + 2 * r - r * r;
            if sum != expected {
                failures.push(fail(format!("entry sum {sum} != {expected}")));
            }
        }
        let want = if s.is_empty() {
            BiDegree::new(1, 0)
        } else {
            expected_subset_bidegree(s)
        };
        if *bideg != Some(want) {
            failures.push(fail(format!(
                "bidegree {bideg:?} != ({}, {})",
                want.d_odd, want.d_even
            )));
        }
    }

    for i in 1..=n {
        let image: BTreeSet<Vec<i64>> = results
            .iter()
            .filter(|(e, _)| e.subset.largest().is_none_or(|m| m < i))
            .filter_map(|(e, _)| e.padded(i))
            .collect();
        let basis: BTreeSet<Vec<i64>> = hilbert_basis(i).into_iter().collect();
        if image != basis {
            failures.push(Failure {
                subset: SubsetS::range(1, i - 1)?,
                reason: format!(
                    "image of the subsets of [{}] is not the Hilbert basis of length {i}",
                    i - 1
                ),
            });
        }
    }

    let entries = results.into_iter().map(|(e, _)| e).collect();
    Ok(VerificationReport::finish(
        n,
        Conjecture::PhiProperties,
        entries,
        failures,
        started,
        Some(seq.memo().stats()),
    ))
}

/// Runs the per-index checks for `l_1..=l_max_i`. Entry `i` of the report is
/// reported under the subset `{i-1}`, since `l_i = l_{{i-1}}`.
pub fn verify_pi(seq: &mut LhSequence, max_i: usize) -> Result<VerificationReport> {
    if max_i == 0 {
        return Err(Error::InvalidIndex(0));
    }
    let started = Instant::now();
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for i in 1..=max_i {
        let report = check_index(seq, i)?;
        let subset = if i == 1 {
            SubsetS::empty()
        } else {
            SubsetS::new(vec![i - 1])?
        };
        entries.push(phi(seq, &subset)?);
        for check in report.failed_checks() {
            failures.push(Failure {
                subset: subset.clone(),
                reason: format!("l_{i}: {check}"),
            });
        }
    }
    Ok(VerificationReport::finish(
        max_i,
        Conjecture::Pi,
        entries,
        failures,
        started,
        Some(seq.memo().stats()),
    ))
}

/// Checks both forms of the Lecture Hall theorem for every length up to
/// `max_n`, truncated at total `max_total`.
pub fn verify_lht(max_n: usize, max_total: u64) -> Result<VerificationReport> {
    if max_n == 0 {
        return Err(Error::InvalidIndex(0));
    }
    let started = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let lhs = cone::lh_series(n, max_total);
        let rhs = cone::product_series(n, max_total);
        for total in 0..=max_total {
            let count = cone::enumerate_lh(n, total).len() as u64;
            let odd = cone::odd_parts_count(n, total);
            if count != odd {
                failures.push(Failure {
                    subset: SubsetS::empty(),
                    reason: format!(
                        "n={n} N={total}: {count} partitions but {odd} odd-part partitions"
                    ),
                });
            }
            if lhs.diagonal_sum(total) != count {
                failures.push(Failure {
                    subset: SubsetS::empty(),
                    reason: format!(
                        "n={n} N={total}: bivariate series does not specialize to the count"
                    ),
                });
            }
        }
        if lhs != rhs {
            let diff: Vec<String> = lhs
                .entries()
                .into_iter()
                .chain(rhs.entries())
                .filter(|&(a, b, _)| lhs.coeff(a, b) != rhs.coeff(a, b))
                .map(|(a, b, _)| format!("({a},{b}): {} vs {}", lhs.coeff(a, b), rhs.coeff(a, b)))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            failures.push(Failure {
                subset: SubsetS::empty(),
                reason: format!("n={n}: series differ at {}", diff.join("; ")),
            });
        }
    }
    Ok(VerificationReport::finish(
        max_n,
        Conjecture::Lht,
        Vec::new(),
        failures,
        started,
        None,
    ))
}

/// `phi` values keyed by subset.
pub type PhiTable = BTreeMap<SubsetS, Vec<i64>>;

/// Parses `subset;vector` rows; blank lines and `#` comments are skipped.
pub fn parse_phi_table(text: &str) -> Result<PhiTable> {
    let mut table = PhiTable::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::FixtureParse { line: k + 1, msg };
        let (s, v) = line
            .split_once(';')
            .ok_or_else(|| err("missing ';'".into()))?;
        let subset: SubsetS = s.parse().map_err(|e| err(format!("{e}")))?;
        let vector = v
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| err(format!("bad vector {v:?}: {e}")))?;
        if table.insert(subset.clone(), vector).is_some() {
            return Err(err(format!("duplicate subset {subset}")));
        }
    }
    Ok(table)
}

/// The shipped table.
pub fn default_phi_table() -> PhiTable {
    parse_phi_table(PHI_TABLE_CSV).expect("shipped table parses")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableDiff {
    Mismatch {
        subset: SubsetS,
        computed: Vec<i64>,
        expected: Vec<i64>,
    },
    /// A table row inside the report's range that the report does not cover.
    Missing { subset: SubsetS },
}

/// Compares report entries with the table. Entries whose subset is absent
/// from the table are ignored; table rows with subsets inside `[n-1]` must
/// be present in the report.
pub fn compare_table(report: &VerificationReport, table: &PhiTable) -> Vec<TableDiff> {
    let mut diffs = Vec::new();
    let computed: BTreeMap<&SubsetS, &PhiEntry> =
        report.entries.iter().map(|e| (&e.subset, e)).collect();
    for e in &report.entries {
        if let Some(expected) = table.get(&e.subset) {
            if &e.vector != expected {
                diffs.push(TableDiff::Mismatch {
                    subset: e.subset.clone(),
                    computed: e.vector.clone(),
                    expected: expected.clone(),
                });
            }
        }
    }
    for subset in table.keys() {
        let in_range = subset.largest().is_none_or(|m| m < report.n);
        if in_range && !computed.contains_key(subset) {
            diffs.push(TableDiff::Missing {
                subset: subset.clone(),
            });
        }
    }
    diffs
}

/// Recovers the subset a Hilbert basis vector stands for; convenience for
/// reading `phi` as a permutation of the power set.
pub fn phi_as_permutation(entries: &[PhiEntry], n: usize) -> Result<Vec<(SubsetS, SubsetS)>> {
    entries
        .iter()
        .map(|e| {
            let v = e
                .padded(n)
                .ok_or_else(|| Error::MalformedHilbertBasis(e.vector.clone()))?;
            Ok((e.subset.clone(), hb_to_subset(&v)?))
        })
        .collect()
}
