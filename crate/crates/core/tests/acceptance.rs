//! Exit criteria. Runs every criterion, prints one PASS/FAIL line each, and
//! exits nonzero if any fails or overruns its time budget.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use gstirling::format::{latex_cell, to_latex, LatexOptions, TableFile};
use gstirling::realdeg::{continuity_deviation, real_identity_checks, RealDegree};
use gstirling::stirling::identities::{
    agreement_check, alternating_suite, duality_suite, harmonic_check, harmonic_positive_check, recurrence_check,
    tail_limit_check, zero_pattern_check,
};
use gstirling::stirling::{defn_coeffs, Method, Region, StirlingTable};
use gstirling::Rational;

type Outcome = Result<String, String>;

fn q(s: &str) -> Rational {
    s.replace(',', "").parse().expect("literal")
}

/// Printed table, rows k = 0..=6, columns -5..=5 then the column printed as
/// "-6" (which holds degree +6).
const TABLE_ONE: [[&str; 12]; 7] = [
    ["1/120", "1/24", "1/6", "1/2", "1", "1", "0", "0", "0", "0", "0", "0"],
    ["-137/7200", "-25/288", "-11/36", "-3/4", "-1", "0", "1", "-1", "2", "-6", "24", "-120"],
    ["12,019/432,000", "415/3456", "85/216", "7/8", "1", "0", "0", "1", "-3", "11", "-50", "274"],
    ["-874,853/25,920,000", "-5845/41,472", "-575/1296", "-15/16", "-1", "0", "0", "0", "1", "-6", "35", "-225"],
    ["58,067,611/1,555,200,000", "76,111/497,664", "3661/7776", "31/32", "1", "0", "0", "0", "0", "1", "-10", "85"],
    [
        "-3,673,451,957/93,312,000,000",
        "-952,525/5,971,968",
        "-22,631/46,656",
        "-63/64",
        "-1",
        "0",
        "0",
        "0",
        "0",
        "0",
        "1",
        "-15",
    ],
    [
        "226,576,031,859/5,598,720,000,000",
        "11,679,655/71,663,616",
        "137,845/279,936",
        "127/128",
        "1",
        "0",
        "0",
        "0",
        "0",
        "0",
        "0",
        "1",
    ],
];

const TABLE_ONE_DEGREES: [i64; 12] = [-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6];

fn table_one() -> Outcome {
    let table = StirlingTable::build(Region::new(-5, 6, 6).unwrap(), Method::Recurrence).map_err(|e| e.to_string())?;
    let mut cells = 0;
    let mut mismatches = Vec::new();
    for (k, row) in TABLE_ONE.iter().enumerate() {
        for (col, printed) in row.iter().enumerate() {
            let n = TABLE_ONE_DEGREES[col];
            let got = table.get(n, k).unwrap();
            cells += 1;
            if *got != q(printed) {
                mismatches.push(format!("s({n},{k}) computed {got}, printed {printed}"));
                continue;
            }
            // Fractions must also typeset exactly as printed.
            if printed.contains('/') {
                let typeset = latex_cell(got, true);
                let (num, den) = printed.trim_start_matches('-').split_once('/').unwrap();
                let sign = if printed.starts_with('-') { "-" } else { "" };
                let expected = format!("${sign}\\frac{{{num}}}{{{den}}}$");
                if typeset != expected {
                    mismatches.push(format!("s({n},{k}) typeset {typeset}, printed {expected}"));
                }
            }
        }
    }
    let latex = to_latex(&table, LatexOptions { group_digits: true, legacy_minus_six: true });
    if !latex.contains("& 5 & $-6$ \\\\") {
        mismatches.push("LaTeX header does not reproduce the printed column order".into());
    }
    if mismatches.is_empty() {
        Ok(format!("{cells} cells exact, degree-6 column checked under its printed label -6"))
    } else {
        Err(format!("{}/{cells} cells match; {}", cells - mismatches.len(), mismatches.join("; ")))
    }
}

fn five_way() -> Outcome {
    let region = Region::new(-8, 8, 12).unwrap();
    let reference = StirlingTable::build(region, Method::Recurrence).map_err(|e| e.to_string())?;
    // Whole-table comparison for every method that covers the region.
    for method in [Method::Definition, Method::PartitionSum, Method::SymFunc] {
        let t = StirlingTable::build(region, method).map_err(|e| e.to_string())?;
        let mismatch = t.iter().find(|&(n, k, v)| reference.get(n, k) != Some(v)).map(|(n, k, v)| (n, k, v.clone()));
        if let Some((n, k, v)) = mismatch {
            return Err(format!("{method} disagrees at ({n},{k}): {v}"));
        }
    }
    let neg = Region::new(-8, 0, 12).unwrap();
    let knuth = StirlingTable::build(neg, Method::Knuth).map_err(|e| e.to_string())?;
    let mismatch = knuth.iter().find(|&(n, k, v)| reference.get(n, k) != Some(v)).map(|(n, k, v)| (n, k, v.clone()));
    if let Some((n, k, v)) = mismatch {
        return Err(format!("knuth disagrees at ({n},{k}): {v}"));
    }
    // Every partition-sum variant, per cell.
    let check = agreement_check(&reference);
    if !check.passed() {
        return Err(check.to_string());
    }
    Ok(format!("{} cell comparisons agree exactly", check.instances))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn cycles(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for s in 0..p.len() {
        if !seen[s] {
            count += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = p[i];
            }
        }
    }
    count
}

fn permutation_oracle() -> Outcome {
    let table = StirlingTable::build(Region::new(0, 7, 7).unwrap(), Method::Recurrence).map_err(|e| e.to_string())?;
    let mut compared = 0;
    for n in 1..=7usize {
        let mut tally: BTreeMap<usize, u64> = BTreeMap::new();
        for p in permutations(n) {
            *tally.entry(cycles(&p)).or_default() += 1;
        }
        for k in 0..=7usize {
            let want = Rational::from(*tally.get(&k).unwrap_or(&0) as i64);
            let got = table.get(n as i64, k).unwrap().abs();
            if got != want {
                return Err(format!("|s({n},{k})| = {got}, {want} permutations"));
            }
            compared += 1;
        }
    }
    Ok(format!("{compared} cells match exhaustive cycle counts"))
}

fn identity_suite() -> Outcome {
    let table = StirlingTable::build(Region::new(-8, 8, 12).unwrap(), Method::Recurrence).map_err(|e| e.to_string())?;
    let checks = [
        recurrence_check(&table),
        harmonic_check(20, 3),
        harmonic_positive_check(20),
        duality_suite(8),
        alternating_suite(10),
        zero_pattern_check(&table),
    ];
    let mut total = 0;
    for c in &checks {
        if !c.passed() {
            return Err(c.to_string());
        }
        total += c.instances;
    }
    // Generating-function substitution y = -1 straight from the definition.
    for n in 1..=10i64 {
        let at_minus_one: Rational = defn_coeffs(n, n as usize)
            .iter()
            .enumerate()
            .map(|(k, c)| c * Rational::sign_power(k as i64))
            .sum();
        let factorial: i64 = (1..=n).product();
        if at_minus_one != Rational::from(factorial) * Rational::sign_power(n) {
            return Err(format!("(y)_{n} at y = -1 gives {at_minus_one}"));
        }
    }
    Ok(format!("{} identity instances hold exactly", total + 10))
}

fn tail_limit() -> Outcome {
    let mut gaps = Vec::new();
    for m in 1..=5 {
        let t = tail_limit_check(m, 60, 1e-4);
        if !t.check.passed() {
            return Err(t.check.to_string());
        }
        if !t.within_tol {
            return Err(format!("m={m}: gap {} not below 1e-4", t.gap.to_f64()));
        }
        gaps.push(format!("{:.1e}", t.gap.to_f64()));
    }
    Ok(format!("signs, monotonicity and bound hold; gaps at k=60: {}", gaps.join(", ")))
}

fn real_continuity() -> Outcome {
    let eps = [1e-3, 1e-4, 1e-5];
    let mut worst: f64 = 0.0;
    for n in -4..=4i64 {
        let devs: Vec<f64> = eps.iter().map(|&e| continuity_deviation(n, e, 6).unwrap()).collect();
        if devs[2] >= 1e-3 {
            return Err(format!("n={n}: deviation {} at eps=1e-5", devs[2]));
        }
        if !devs.windows(2).all(|w| w[1] <= w[0] || w[1] < 1e-9) {
            return Err(format!("n={n}: deviations {devs:?} not decreasing"));
        }
        worst = worst.max(devs[2]);
    }
    let mut residual: f64 = 0.0;
    for a in [0.5, -0.5, -2.5] {
        let r = real_identity_checks(RealDegree::new(a).unwrap(), 8, 1e-8).map_err(|e| e.to_string())?;
        if r.recurrence_residual >= 1e-8 {
            return Err(format!("a={a}: residual {}", r.recurrence_residual));
        }
        residual = residual.max(r.recurrence_residual);
    }
    Ok(format!("max deviation at eps=1e-5 {worst:.2e}, max recurrence residual {residual:.2e}"))
}

fn round_trip() -> Outcome {
    let region = Region::new(-8, 8, 12).unwrap();
    let file = TableFile::new(StirlingTable::build(region, Method::Recurrence).map_err(|e| e.to_string())?, 1_760_000_000);
    let text = file.to_native();
    let parsed = TableFile::from_native(&text).map_err(|e| e.to_string())?;
    if parsed != file {
        return Err("parsed table differs".into());
    }
    if parsed.to_native() != text {
        return Err("re-printed bytes differ".into());
    }
    Ok(format!("{} cells, {} bytes identical", region.cell_count(), text.len()))
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 7] = [
        ("table-1 reproduction", table_one, Duration::from_secs(1)),
        ("five-way agreement", five_way, Duration::from_secs(30)),
        ("permutation oracle", permutation_oracle, Duration::from_secs(10)),
        ("identity suite", identity_suite, Duration::from_secs(60)),
        ("tail limit", tail_limit, Duration::from_secs(5)),
        ("real-degree continuity", real_continuity, Duration::from_secs(5)),
        ("native round-trip", round_trip, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; took {elapsed:?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
