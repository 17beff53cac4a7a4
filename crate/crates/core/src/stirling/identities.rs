//! Identity checks over exact Stirling numbers and the reports they produce.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::table::{must_vanish, Region, StirlingTable};
use super::{
    defn_coeffs, knuth, knuth_formal, partition_sum_neg, partition_sum_pos, recurrence_table, stirling2,
    symfunc_route, NegVariant, PosVariant,
};
use crate::exact::{factorial, Rational};

const MAX_WITNESSES: usize = 8;

/// A failing instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub n: i64,
    pub k: i64,
    pub expected: String,
    pub got: String,
    pub detail: String,
}

/// One named identity evaluated over a parameter range.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub range: String,
    pub instances: usize,
    pub failed: usize,
    /// The first few failures, in the order found.
    pub failures: Vec<Witness>,
    pub notes: Vec<String>,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>, range: impl Into<String>) -> Self {
        IdentityCheck {
            name: name.into(),
            range: range.into(),
            instances: 0,
            failed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn first_failure(&self) -> Option<&Witness> {
        self.failures.first()
    }

    /// Records an exact comparison; returns whether it held.
    pub fn expect_eq(&mut self, n: i64, k: i64, expected: &Rational, got: &Rational, detail: &str) -> bool {
        self.expect(n, k, expected == got, expected.to_string(), got.to_string(), detail)
    }

    pub fn expect(&mut self, n: i64, k: i64, ok: bool, expected: String, got: String, detail: &str) -> bool {
        self.instances += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_WITNESSES {
                self.failures.push(Witness { n, k, expected, got, detail: detail.to_string() });
            }
        }
        ok
    }

    fn merge(&mut self, other: IdentityCheck) {
        self.instances += other.instances;
        self.failed += other.failed;
        let room = MAX_WITNESSES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} [{}] {}/{} instances", self.name, self.range, self.instances - self.failed, self.instances)?;
        if let Some(w) = self.first_failure() {
            write!(f, "; first counterexample at (n={}, k={}): expected {}, got {} ({})", w.n, w.k, w.expected, w.got, w.detail)?;
        }
        for note in &self.notes {
            write!(f, "\n    note: {note}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn push(&mut self, check: IdentityCheck) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn find(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let verdict = if self.passed() { "all identities hold" } else { "FAILURES PRESENT" };
        write!(f, "{} checks, {} failing instances: {verdict}", self.checks.len(), self.failures())
    }
}

/// `T_1(n) = H_n`, `T_r(n) = sum_{i<=n} T_(r-1)(i) / i`.
pub fn nested_harmonic(n: u32, r: u32) -> Rational {
    assert!(r >= 1, "nested harmonic sums start at r = 1");
    // level[i] = T_(level)(i + 1); T_0 is identically one.
    let mut level = vec![Rational::one(); n as usize];
    for _ in 0..r {
        let mut acc = Rational::zero();
        for (i, v) in level.iter_mut().enumerate() {
            acc += &*v * Rational::recip_of(i as u64 + 1);
            *v = acc.clone();
        }
    }
    level.last().cloned().unwrap_or_else(Rational::zero)
}

/// `sum_{k=0}^{n} (-1)^k s(n, k)` from the production table; equals `(-1)^n n!`.
pub fn alternating_sum(n: u32) -> Rational {
    let table = recurrence_table(0, n as i64, n as usize).expect("region contains 0");
    table
        .column(n as i64)
        .expect("degree in table")
        .iter()
        .enumerate()
        .map(|(k, v)| v * Rational::sign_power(k as i64))
        .sum()
}

/// Both sides of `S(k, n) = (-1)^(n+k+1) s(-n, -k)`, the right side read
/// through the binomial sum at negative order.
#[derive(Clone, Debug, PartialEq)]
pub struct DualityInstance {
    pub n: u32,
    pub k: u32,
    pub second_kind: Rational,
    pub formal: Rational,
}

impl DualityInstance {
    pub fn holds(&self) -> bool {
        self.second_kind == self.formal
    }
}

pub fn duality_check(n: u32, k: u32) -> DualityInstance {
    let second_kind = stirling2(k, n).map(Rational::from_integer).unwrap_or_else(|_| -Rational::one());
    let formal = Rational::sign_power(n as i64 + k as i64 + 1) * knuth_formal(n, -(k as i64));
    DualityInstance { n, k, second_kind, formal }
}

/// Outcome of [`tail_limit_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct TailLimit {
    pub check: IdentityCheck,
    /// `1 - (m-1)! |s(-m, k_max)|`, exact.
    pub gap: Rational,
    pub within_tol: bool,
}

/// Sign pattern `(-1)^k`, monotone growth and the bound `(m-1)! |s(-m,k)| <= 1`,
/// plus the distance from 1 at `k_max` (reported, not failed, when above `tol`).
pub fn tail_limit_check(m: u32, k_max: u32, tol: f64) -> TailLimit {
    assert!(m >= 1, "tail limit needs m >= 1");
    let mut check = IdentityCheck::new(format!("tail-limit m={m}"), format!("k<={k_max}"));
    let scale = Rational::from_integer(factorial(m as u64 - 1));
    let one = Rational::one();
    let mut previous: Option<Rational> = None;
    let mut last = Rational::zero();
    for k in 0..=k_max {
        let s = knuth(m, k).expect("m >= 1");
        let n = -(m as i64);
        let expected_sign = if k % 2 == 0 { "positive" } else { "negative" };
        let sign_ok = if k % 2 == 0 { !s.is_negative() && !s.is_zero() } else { s.is_negative() };
        check.expect(n, k as i64, sign_ok, expected_sign.into(), s.to_string(), "sign (-1)^k");
        let scaled = s.abs() * &scale;
        check.expect(n, k as i64, scaled <= one, "<= 1".into(), scaled.to_string(), "bounded by 1");
        if let Some(prev) = &previous {
            check.expect(n, k as i64, &scaled >= prev, format!(">= {prev}"), scaled.to_string(), "nondecreasing");
        }
        previous = Some(scaled.clone());
        last = scaled;
    }
    let gap = one - last;
    let gap_f = gap.to_f64();
    let within_tol = gap_f < tol;
    check.notes.push(format!(
        "gap 1 - (m-1)!|s(-{m},{k_max})| = {gap_f:.3e} ({} tol {tol:e})",
        if within_tol { "within" } else { "NOT within" }
    ));
    TailLimit { check, gap, within_tol }
}

/// `c[k]` = number of permutations of `n` letters with exactly `k` cycles, by
/// generating all `n!` permutations.
pub fn cycle_counts_by_enumeration(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    let mut tally = |p: &[usize]| {
        let mut seen = vec![false; p.len()];
        let mut cycles = 0;
        for start in 0..p.len() {
            if !seen[start] {
                cycles += 1;
                let mut i = start;
                while !seen[i] {
                    seen[i] = true;
                    i = p[i];
                }
            }
        }
        counts[cycles] += 1;
    };
    // Heap's algorithm, iterative form.
    let mut c = vec![0usize; n];
    tally(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            perm.swap(j, i);
            tally(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    counts
}

/// Exact agreement of every applicable algorithm with the table's values.
pub fn agreement_check(table: &StirlingTable) -> IdentityCheck {
    let region = table.region();
    let k_max = region.k_max;
    let per_degree: Vec<IdentityCheck> = region
        .degrees()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| {
            let mut check = IdentityCheck::new("agreement", "");
            let reference = table.column(n).expect("degree in table");
            let defn = defn_coeffs(n, k_max);
            for k in 0..=k_max {
                let want = &reference[k];
                let (ni, ki) = (n, k as i64);
                check.expect_eq(ni, ki, want, &defn[k], "definition");
                check.expect_eq(ni, ki, want, &symfunc_route(n, k), "symfunc");
                if n < 0 {
                    let m = n.unsigned_abs() as u32;
                    check.expect_eq(ni, ki, want, &knuth(m, k as u32).expect("m >= 1"), "knuth");
                    for v in NegVariant::ALL {
                        check.expect_eq(ni, ki, want, &partition_sum_neg(m, k, v), &format!("partition {v:?}"));
                    }
                } else if n > 0 {
                    for v in PosVariant::ALL {
                        check.expect_eq(ni, ki, want, &partition_sum_pos(n as u32, k, v), &format!("partition {v:?}"));
                    }
                }
            }
            check
        })
        .collect();
    let mut check = IdentityCheck::new("agreement", format!("region {region}"));
    for c in per_degree {
        check.merge(c);
    }
    check
}

/// `s(n+1, k) = s(n, k-1) - n s(n, k)` on every interior cell.
pub fn recurrence_check(table: &StirlingTable) -> IdentityCheck {
    let region = table.region();
    let mut check = IdentityCheck::new("recurrence", format!("region {region}"));
    for n in region.n_min..region.n_max {
        for k in 1..=region.k_max {
            let lhs = table.get(n + 1, k).expect("inside");
            let rhs = table.get(n, k - 1).expect("inside") - Rational::from(n) * table.get(n, k).expect("inside");
            check.expect_eq(n + 1, k as i64, &rhs, lhs, "s(n+1,k) = s(n,k-1) - n s(n,k)");
        }
    }
    check
}

pub fn zero_pattern_check(table: &StirlingTable) -> IdentityCheck {
    let region = table.region();
    let mut check = IdentityCheck::new("zero-pattern", format!("region {region}"));
    let bad = table.zero_pattern_violations();
    for (n, k, v) in table.iter() {
        let ok = !bad.contains(&(n, k));
        let want = if must_vanish(n, k) { "0" } else { "nonzero" };
        check.expect(n, k as i64, ok, want.into(), v.to_string(), "zero pattern");
    }
    check
}

/// `|s(n, k)|` against brute-force cycle counts for `1 <= n <= n_max`.
pub fn permutation_check(n_max: u32) -> IdentityCheck {
    let mut check = IdentityCheck::new("permutation", format!("1<=n<={n_max}, all k"));
    let table = recurrence_table(0, n_max as i64, n_max as usize).expect("contains 0");
    for n in 1..=n_max as usize {
        let counts = cycle_counts_by_enumeration(n);
        for (k, &c) in counts.iter().enumerate() {
            let want = Rational::from_integer(BigInt::from(c));
            let got = table.get(n as i64, k).expect("inside").abs();
            check.expect_eq(n as i64, k as i64, &want, &got, "cycle count");
        }
    }
    check
}

/// `n! s(-n, r) = (-1)^r T_r(n)` for `1 <= r <= r_max`, `1 <= n <= n_max`.
pub fn harmonic_check(n_max: u32, r_max: u32) -> IdentityCheck {
    let mut check = IdentityCheck::new("harmonic", format!("1<=n<={n_max}, 1<=r<={r_max}"));
    let table = recurrence_table(-(n_max as i64), 0, r_max as usize).expect("contains 0");
    for n in 1..=n_max {
        let n_fact = Rational::from_integer(factorial(n as u64));
        for r in 1..=r_max {
            let lhs = &n_fact * table.get(-(n as i64), r as usize).expect("inside");
            let rhs = Rational::sign_power(r as i64) * nested_harmonic(n, r);
            check.expect_eq(-(n as i64), r as i64, &rhs, &lhs, "n! s(-n,r) = (-1)^r T_r(n)");
        }
    }
    check
}

/// `s(n, 2) = (-1)^n (n-1)! H_(n-1)` for `2 <= n <= n_max`.
pub fn harmonic_positive_check(n_max: u32) -> IdentityCheck {
    let mut check = IdentityCheck::new("harmonic-positive", format!("2<=n<={n_max}"));
    let table = recurrence_table(0, n_max as i64, 2).expect("contains 0");
    for n in 2..=n_max {
        let h: Rational = (1..n as u64).map(Rational::recip_of).sum();
        let rhs = Rational::sign_power(n as i64) * Rational::from_integer(factorial(n as u64 - 1)) * h;
        check.expect_eq(n as i64, 2, &rhs, table.get(n as i64, 2).expect("inside"), "s(n,2) = (-1)^n (n-1)! H_(n-1)");
    }
    check
}

pub fn duality_suite(max: u32) -> IdentityCheck {
    let mut check = IdentityCheck::new("duality", format!("1<=n,k<={max}"));
    for n in 1..=max {
        for k in 1..=max {
            let d = duality_check(n, k);
            check.expect_eq(n as i64, k as i64, &d.second_kind, &d.formal, "S(k,n) = (-1)^(n+k+1) s(-n,-k)");
        }
    }
    check
}

pub fn alternating_suite(n_max: u32) -> IdentityCheck {
    let mut check = IdentityCheck::new("alternating", format!("1<=n<={n_max}"));
    for n in 1..=n_max {
        let want = Rational::sign_power(n as i64) * Rational::from_integer(factorial(n as u64));
        check.expect_eq(n as i64, -1, &want, &alternating_sum(n), "sum_k (-1)^k s(n,k) = (-1)^n n!");
    }
    check
}

/// Tail behaviour for `1 <= m <= m_max`, merged into one check.
pub fn tail_suite(m_max: u32, k_max: u32, tol: f64) -> IdentityCheck {
    let mut check = IdentityCheck::new("tail-limit", format!("1<=m<={m_max}, k<={k_max}, tol {tol:e}"));
    for m in 1..=m_max {
        check.merge(tail_limit_check(m, k_max, tol).check);
    }
    check
}

/// Every exact family on `region` with the default parameter ranges.
pub fn verify_all(region: Region) -> IdentityReport {
    let table = StirlingTable::build(region, super::Method::Recurrence).expect("recurrence covers any region");
    verify_table(&table)
}

/// As [`verify_all`], against a caller-supplied table (possibly corrupted).
pub fn verify_table(table: &StirlingTable) -> IdentityReport {
    let mut report = IdentityReport::default();
    report.push(agreement_check(table));
    report.push(recurrence_check(table));
    report.push(zero_pattern_check(table));
    report.push(permutation_check(7));
    report.push(harmonic_check(20, 3));
    report.push(harmonic_positive_check(20));
    report.push(duality_suite(8));
    report.push(alternating_suite(10));
    report.push(tail_suite(5, 60, 1e-4));
    report
}
