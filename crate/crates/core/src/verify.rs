//! Verification driver combining the exact identity families with the
//! real-degree checks.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::realdeg::{continuity_deviation, real_identity_checks, RealDegree};
use crate::stirling::identities::{
    agreement_check, alternating_suite, duality_suite, harmonic_check, harmonic_positive_check, permutation_check,
    recurrence_check, tail_suite, zero_pattern_check, IdentityCheck, IdentityReport,
};
use crate::stirling::{Method, Region, StirlingTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Agreement,
    Recurrence,
    ZeroPattern,
    Permutation,
    Harmonic,
    HarmonicPositive,
    Duality,
    Alternating,
    Tail,
    Real,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Agreement,
        Family::Recurrence,
        Family::ZeroPattern,
        Family::Permutation,
        Family::Harmonic,
        Family::HarmonicPositive,
        Family::Duality,
        Family::Alternating,
        Family::Tail,
        Family::Real,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Agreement => "agreement",
            Family::Recurrence => "recurrence",
            Family::ZeroPattern => "zero-pattern",
            Family::Permutation => "permutation",
            Family::Harmonic => "harmonic",
            Family::HarmonicPositive => "harmonic-positive",
            Family::Duality => "duality",
            Family::Alternating => "alternating",
            Family::Tail => "tail",
            Family::Real => "real",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown identity family {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    pub region: Region,
    /// Absolute tolerance for the real-degree recurrence residual.
    pub real_tol: f64,
    /// Families to run; empty means all.
    pub only: Vec<Family>,
    /// Upper degree for the harmonic families (default 20).
    pub n_max: Option<u32>,
    /// Corrupt one table cell before checking, to exercise the failure path.
    pub inject_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            region: Region::new(-8, 8, 12).expect("valid"),
            real_tol: 1e-8,
            only: Vec::new(),
            n_max: None,
            inject_fault: false,
        }
    }
}

/// Cell overwritten by fault injection: `(-1, 1)` when present, else the first cell.
pub fn fault_cell(region: Region) -> (i64, usize) {
    if region.contains(-1, 1) {
        (-1, 1)
    } else {
        (region.n_min, 0)
    }
}

/// Real-degree family: recurrence residuals at half-integer degrees and
/// continuity toward the exact columns at `n + eps`.
pub fn real_family(tol: f64) -> IdentityCheck {
    let mut check = IdentityCheck::new("real", format!("residual tol {tol:e}; continuity n in [-4,4], k<=6"));
    for &a in &[0.25, 0.5, 1.5, -0.5, -2.5] {
        let outcome = RealDegree::new(a).and_then(|d| real_identity_checks(d, 8, tol));
        let (ok, got) = match &outcome {
            Ok(r) => (r.recurrence_residual < tol, format!("{:e}", r.recurrence_residual)),
            Err(e) => (false, e.to_string()),
        };
        check.expect(0, 8, ok, format!("< {tol:e}"), got, &format!("recurrence residual at a={a}"));
    }
    let eps = [1e-3, 1e-4, 1e-5];
    for n in -4..=4i64 {
        let devs: Vec<f64> = eps
            .iter()
            .map(|&e| continuity_deviation(n, e, 6).unwrap_or(f64::INFINITY))
            .collect();
        let monotone = devs.windows(2).all(|w| w[1] <= w[0] || w[1] < 1e-9);
        check.expect(n, 6, monotone, "decreasing".into(), format!("{devs:?}"), "deviation decreases with eps");
        check.expect(n, 6, devs[2] < 1e-3, "< 1e-3".into(), format!("{:e}", devs[2]), "deviation at eps=1e-5");
    }
    check
}

pub fn run(opts: &VerifyOptions) -> IdentityReport {
    let wanted = |f: Family| opts.only.is_empty() || opts.only.contains(&f);
    let needs_table = [Family::Agreement, Family::Recurrence, Family::ZeroPattern]
        .into_iter()
        .any(wanted);
    let mut report = IdentityReport::default();
    if needs_table {
        let mut table = StirlingTable::build(opts.region, Method::Recurrence).expect("recurrence covers any region");
        if opts.inject_fault {
            let (n, k) = fault_cell(opts.region);
            let old = table.get(n, k).cloned().expect("inside");
            table.set(n, k, old + Rational::one());
        }
        if wanted(Family::Agreement) {
            report.push(agreement_check(&table));
        }
        if wanted(Family::Recurrence) {
            report.push(recurrence_check(&table));
        }
        if wanted(Family::ZeroPattern) {
            report.push(zero_pattern_check(&table));
        }
    }
    let harmonic_n = opts.n_max.unwrap_or(20);
    if wanted(Family::Permutation) {
        report.push(permutation_check(7));
    }
    if wanted(Family::Harmonic) {
        report.push(harmonic_check(harmonic_n, 3));
    }
    if wanted(Family::HarmonicPositive) {
        report.push(harmonic_positive_check(harmonic_n));
    }
    if wanted(Family::Duality) {
        report.push(duality_suite(8));
    }
    if wanted(Family::Alternating) {
        report.push(alternating_suite(10));
    }
    if wanted(Family::Tail) {
        report.push(tail_suite(5, 60, 1e-4));
    }
    if wanted(Family::Real) {
        report.push(real_family(opts.real_tol));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_filter() {
        let opts = VerifyOptions { only: vec![Family::Harmonic], n_max: Some(20), ..Default::default() };
        let report = run(&opts);
        assert_eq!(report.checks.len(), 1);
        assert_eq!(report.checks[0].name, "harmonic");
        assert_eq!(report.checks[0].instances, 60);
        assert!(report.passed());
    }

    #[test]
    fn injected_fault_is_caught() {
        let opts = VerifyOptions {
            region: Region::new(-3, 3, 4).unwrap(),
            only: vec![Family::Agreement, Family::Recurrence],
            inject_fault: true,
            ..Default::default()
        };
        let report = run(&opts);
        assert!(!report.passed());
        let w = report.find("agreement").unwrap().first_failure().unwrap();
        assert_eq!((w.n, w.k), (-1, 1));
    }

    #[test]
    fn real_family_passes() {
        let c = real_family(1e-8);
        assert!(c.passed(), "{c}");
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
    }
}
