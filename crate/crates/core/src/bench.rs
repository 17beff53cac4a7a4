//! Timing comparison of the exact algorithms cell by cell.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::stirling::{partition_sum_size, stirling, Method, Region, PARTITION_ENUM_LIMIT};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub algorithm: Method,
    pub n: i64,
    pub k: usize,
    /// Minimum over repetitions, nanoseconds.
    pub wall_ns: u64,
    /// Cells the algorithm materialized to answer this one.
    pub cells: usize,
}

/// Whether `method` applies to cell `(n, k)` at all.
pub fn applicable(method: Method, n: i64, k: usize) -> bool {
    match method {
        Method::Knuth => n <= 0 && (n, k) != (0, 0),
        Method::PartitionSum => partition_sum_size(n, k) <= PARTITION_ENUM_LIMIT,
        _ => true,
    }
}

fn cells_touched(method: Method, n: i64, k: usize) -> usize {
    match method {
        Method::Recurrence => (n.unsigned_abs() as usize + 1) * (k + 1),
        Method::Definition => k + 1,
        _ => 1,
    }
}

fn time_cell(method: Method, n: i64, k: usize, repetitions: usize) -> BenchRecord {
    let wall_ns = (0..repetitions.max(1))
        .map(|_| {
            let start = Instant::now();
            let v = stirling(n, k, method).expect("applicable cell");
            std::hint::black_box(v);
            start.elapsed().as_nanos() as u64
        })
        .min()
        .expect("at least one repetition");
    BenchRecord { algorithm: method, n, k, wall_ns, cells: cells_touched(method, n, k) }
}

/// One record per applicable `(algorithm, cell)`, sorted by algorithm then cell.
pub fn run(region: Region, algorithms: &[Method], repetitions: usize, parallel: bool) -> Vec<BenchRecord> {
    let jobs: Vec<(Method, i64, usize)> = algorithms
        .iter()
        .flat_map(|&m| region.cells().map(move |(n, k)| (m, n, k)))
        .filter(|&(m, n, k)| applicable(m, n, k))
        .collect();
    let mut records: Vec<BenchRecord> = if parallel {
        jobs.par_iter().map(|&(m, n, k)| time_cell(m, n, k, repetitions)).collect()
    } else {
        jobs.iter().map(|&(m, n, k)| time_cell(m, n, k, repetitions)).collect()
    };
    records.sort_by_key(|r| (r.algorithm, r.n, r.k));
    records
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("algorithm,n,k,wall_ns,cells\n");
    for r in records {
        out.push_str(&format!("{},{},{},{},{}\n", r.algorithm, r.n, r.k, r.wall_ns, r.cells));
    }
    out
}

/// For each order `k`, the least-negative degree from which the partition sum
/// is slower than the binomial sum at every more negative degree measured.
pub fn crossover(records: &[BenchRecord]) -> Vec<(usize, Option<i64>)> {
    let time = |m: Method, n: i64, k: usize| {
        records.iter().find(|r| r.algorithm == m && r.n == n && r.k == k).map(|r| r.wall_ns)
    };
    let mut ks: Vec<usize> = records.iter().map(|r| r.k).collect();
    ks.sort_unstable();
    ks.dedup();
    ks.into_iter()
        .map(|k| {
            let mut degrees: Vec<i64> = records
                .iter()
                .filter(|r| r.k == k && r.n < 0 && r.algorithm == Method::Knuth)
                .map(|r| r.n)
                .collect();
            degrees.sort_unstable();
            // Walk from the most negative degree up while partition stays slower.
            let mut frontier = None;
            for n in degrees {
                match (time(Method::PartitionSum, n, k), time(Method::Knuth, n, k)) {
                    (Some(p), Some(q)) if p > q => frontier = Some(n),
                    _ => break,
                }
            }
            (k, frontier)
        })
        .collect()
}
