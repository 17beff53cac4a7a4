//! Exact Stirling numbers of the first kind `s(n, k)` for every integer
//! degree `n`.
//!
//! `s(n, k)` is the coefficient of `y^k` in the lower factorial `(y)_n`: the
//! polynomial `y (y-1) ... (y-n+1)` for `n >= 0` and the series
//! `1 / ((y+1) (y+2) ... (y+m))` for `n = -m < 0`. Several independent
//! algorithms live here and are expected to agree cell for cell:
//!
//! | route | degrees | cost |
//! |-------|---------|------|
//! | [`defn_coeffs`] | all | polynomial / series expansion |
//! | [`recurrence_table`] | all | O(cells), the production path |
//! | [`knuth`] | `n < 0` | finite alternating binomial sum |
//! | [`partition_sum_neg`], [`partition_sum_pos`] | `n != 0` | partition enumeration |
//! | [`symfunc_route`] | all | symmetric-function specialization |

pub mod identities;
pub mod table;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, Rational};
use crate::partitions::{enum_bounded, enum_compositions, enum_distinct_below, enum_weight};
use crate::symfunc::{complete_h, elementary_e, SymArgs};

pub use table::{Region, StirlingTable};

/// Integer degree of a Stirling number; any sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Degree(pub i64);

impl From<i64> for Degree {
    fn from(n: i64) -> Self {
        Degree(n)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Algorithm that produced (or should produce) a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Definition,
    Recurrence,
    Knuth,
    PartitionSum,
    SymFunc,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Definition,
        Method::Recurrence,
        Method::Knuth,
        Method::PartitionSum,
        Method::SymFunc,
    ];

    /// Short name used on the command line and in files.
    pub fn name(self) -> &'static str {
        match self {
            Method::Definition => "defn",
            Method::Recurrence => "recurrence",
            Method::Knuth => "knuth",
            Method::PartitionSum => "partition",
            Method::SymFunc => "symfunc",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

/// Partition-sum forms for negative degree `-m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NegVariant {
    /// `k` parts, none greater than `m`.
    Bounded,
    /// `k + 1` parts, largest part exactly `m`.
    LargestPart,
    /// Multiplicity sequences `(m_1, ..., m_m)` summing to `k`.
    Composition,
}

impl NegVariant {
    pub const ALL: [NegVariant; 3] = [NegVariant::Bounded, NegVariant::LargestPart, NegVariant::Composition];
}

/// Partition-sum forms for positive degree `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PosVariant {
    /// Reciprocal products over `k - 1` distinct parts below `n`.
    Reciprocal,
    /// Products over `n - k` distinct parts below `n`.
    Product,
    /// Reciprocal products over `k` distinct parts with largest part `n`.
    LargestPart,
    /// Permutation counts by cycle type.
    CycleType,
}

impl PosVariant {
    pub const ALL: [PosVariant; 4] = [
        PosVariant::Reciprocal,
        PosVariant::Product,
        PosVariant::LargestPart,
        PosVariant::CycleType,
    ];
}

/// Beyond this many summands a partition sum is refused in favour of the recurrence.
pub const PARTITION_ENUM_LIMIT: u64 = 20_000_000;

fn delta(k: usize) -> Rational {
    if k == 0 {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `s(n, 0..=k_max)` straight from the definition of the lower factorial.
pub fn defn_coeffs(n: i64, k_max: usize) -> Vec<Rational> {
    let mut poly = vec![Rational::zero(); k_max + 1];
    poly[0] = Rational::one();
    if n >= 0 {
        // Multiply by (y - i) for i = 0..n, keeping terms up to y^k_max.
        for i in 0..n {
            let shift = Rational::from(-i);
            for j in (0..=k_max).rev() {
                let lower = if j > 0 { poly[j - 1].clone() } else { Rational::zero() };
                poly[j] = lower + &poly[j] * &shift;
            }
        }
        poly
    } else {
        // Multiply by (1 + y/i)^-1 = sum_j (-1/i)^j y^j, then divide by m!.
        let m = n.unsigned_abs();
        for i in 1..=m {
            let ratio = -Rational::recip_of(i);
            for j in (0..=k_max).rev() {
                let mut acc = Rational::zero();
                let mut power = Rational::one();
                for l in 0..=j {
                    acc += &poly[j - l] * &power;
                    power *= &ratio;
                }
                poly[j] = acc;
            }
        }
        let scale = Rational::recip_of(factorial(m));
        poly.into_iter().map(|c| c * &scale).collect()
    }
}

/// Builds `s(n, k)` on `n_min..=n_max`, `0..=k_max` from the three-term recurrence,
/// seeded at degree zero. Requires `n_min <= 0 <= n_max`.
pub fn recurrence_table(n_min: i64, n_max: i64, k_max: usize) -> Result<StirlingTable> {
    if n_min > 0 || n_max < 0 {
        return Err(Error::Region(format!(
            "recurrence is seeded at degree 0; need n_min <= 0 <= n_max, got {n_min}..{n_max}"
        )));
    }
    let width = k_max + 1;
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity((n_max - n_min + 1) as usize);

    // Downward: s(-m, k) = (s(-m+1, k) - s(-m, k-1)) / m, with s(-m, 0) = 1/m!.
    let mut neg: Vec<Vec<Rational>> = Vec::new();
    let mut above: Vec<Rational> = (0..width).map(delta).collect();
    let mut m_factorial = BigInt::one();
    for m in 1..=n_min.unsigned_abs() {
        m_factorial *= m;
        let inv_m = Rational::recip_of(m);
        let mut col = Vec::with_capacity(width);
        col.push(Rational::recip_of(m_factorial.clone()));
        for k in 1..width {
            let v = (&above[k] - &col[k - 1]) * &inv_m;
            col.push(v);
        }
        neg.push(col.clone());
        above = col;
    }
    columns.extend(neg.into_iter().rev());

    // Upward: s(a+1, k) = s(a, k-1) - a s(a, k); at k = 0 only the second term survives.
    let mut col: Vec<Rational> = (0..width).map(delta).collect();
    columns.push(col.clone());
    for a in 0..n_max {
        let a_rat = Rational::from(a);
        let mut next = Vec::with_capacity(width);
        for k in 0..width {
            let lower = if k > 0 { col[k - 1].clone() } else { Rational::zero() };
            next.push(lower - &a_rat * &col[k]);
        }
        columns.push(next.clone());
        col = next;
    }

    let region = Region::new(n_min, n_max, k_max)?;
    StirlingTable::from_columns(region, Method::Recurrence, columns)
}

/// `s(-m, k)` by the finite alternating binomial sum. `(m, k) = (0, 0)` is excluded.
pub fn knuth(m: u32, k: u32) -> Result<Rational> {
    if m == 0 && k == 0 {
        return Err(Error::Domain("the binomial sum needs (m, k) != (0, 0)".into()));
    }
    Ok(knuth_formal(m, k as i64))
}

/// The binomial sum `((-1)^(order+1) / m!) sum_j C(m,j) (-1)^j j^(-order)`,
/// evaluated for any integer `order`. Negative orders give the formal values
/// that pair with second-kind numbers.
pub fn knuth_formal(m: u32, order: i64) -> Rational {
    let mut sum = Rational::zero();
    for j in 1..=m as u64 {
        let c = Rational::from_integer(binomial(m as u64, j)) * Rational::sign_power(j as i64);
        let p = num_traits::pow(BigInt::from(j), order.unsigned_abs() as usize);
        let term = if order >= 0 { c / Rational::from_integer(p) } else { c * Rational::from_integer(p) };
        sum += term;
    }
    sum * Rational::sign_power(order + 1) * Rational::recip_of(factorial(m as u64))
}

/// Refuses the binomial sum at non-integer degree, where it becomes an
/// infinite divergent series.
pub fn knuth_real(a: f64, k: u32) -> Result<Rational> {
    if a.fract() == 0.0 && a <= 0.0 && a.is_finite() {
        return knuth((-a) as u32, k);
    }
    Err(Error::Domain(format!(
        "the binomial sum diverges at non-integer degree {a}; use the real-degree path"
    )))
}

fn lcm_upto(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc.lcm(&BigInt::from(i)))
}

/// `sum 1/p` over the products, accumulated over the common multiple `common`.
fn reciprocal_sum(products: impl Iterator<Item = BigInt>, common: &BigInt) -> Rational {
    let total: BigInt = products.map(|p| common / p).sum();
    Rational::new(total, common.clone()).expect("common multiple is positive")
}

/// Number of summands a partition sum would visit for `s(n, k)`.
pub fn partition_sum_size(n: i64, k: usize) -> u64 {
    use num_traits::ToPrimitive;
    if n < 0 {
        let m = n.unsigned_abs();
        binomial(m + k as u64 - 1, k as u64).to_u64().unwrap_or(u64::MAX)
    } else if n == 0 {
        1
    } else {
        let n = n as u64;
        let k = (k as u64).min(n);
        binomial(n - 1, k.saturating_sub(1)).to_u64().unwrap_or(u64::MAX)
    }
}

/// `s(-m, k)` by one of the partition-sum forms.
pub fn partition_sum_neg(m: u32, k: usize, variant: NegVariant) -> Rational {
    if m == 0 {
        return delta(k);
    }
    let sign = Rational::sign_power(k as i64);
    match variant {
        NegVariant::Bounded => {
            let common = num_traits::pow(lcm_upto(m as u64), k);
            let sum = reciprocal_sum(enum_bounded(k, m).map(|p| p.product()), &common);
            sign * sum * Rational::recip_of(factorial(m as u64))
        }
        NegVariant::LargestPart => {
            let common = num_traits::pow(lcm_upto(m as u64), k + 1);
            // Partitions with k + 1 parts and largest part m: m leads, k parts <= m follow.
            let sum = reciprocal_sum(enum_bounded(k, m).map(|p| p.with_part(m).product()), &common);
            sign * sum * Rational::recip_of(factorial(m as u64 - 1))
        }
        NegVariant::Composition => {
            let common = num_traits::pow(lcm_upto(m as u64), k);
            let products = enum_compositions(m as usize, k as u32).map(|c| {
                c.entries()
                    .iter()
                    .enumerate()
                    .fold(BigInt::one(), |acc, (i, &mult)| acc * num_traits::pow(BigInt::from(i + 1), mult as usize))
            });
            sign * reciprocal_sum(products, &common) * Rational::recip_of(factorial(m as u64))
        }
    }
}

/// `s(n, k)` for `n >= 1` by one of the partition-sum forms.
pub fn partition_sum_pos(n: u32, k: usize, variant: PosVariant) -> Rational {
    if n == 0 {
        return delta(k);
    }
    let sign = Rational::sign_power(n as i64 + k as i64);
    match variant {
        PosVariant::Reciprocal => {
            if k == 0 {
                return Rational::zero();
            }
            // Distinct parts below n have a product dividing (n-1)!.
            let common = factorial(n as u64 - 1);
            let sum = reciprocal_sum(enum_distinct_below(k - 1, n).map(|p| p.product()), &common);
            sign * sum * Rational::from_integer(common)
        }
        PosVariant::Product => {
            if k > n as usize {
                return Rational::zero();
            }
            let sum: BigInt = enum_distinct_below(n as usize - k, n).map(|p| p.product()).sum();
            sign * Rational::from_integer(sum)
        }
        PosVariant::LargestPart => {
            let common = factorial(n as u64);
            let products = enum_distinct_below(k, n + 1)
                .filter(|p| p.largest() == Some(n))
                .map(|p| p.product());
            sign * reciprocal_sum(products, &common) * Rational::from_integer(common)
        }
        PosVariant::CycleType => {
            let n_fact = factorial(n as u64);
            let count: BigInt = enum_weight(n, k)
                .map(|p| {
                    let mut centralizer = BigInt::one();
                    let mut i = 0;
                    let parts = p.parts();
                    while i < parts.len() {
                        let part = parts[i];
                        let mult = p.multiplicity(part);
                        centralizer *= num_traits::pow(BigInt::from(part), mult) * factorial(mult as u64);
                        i += mult;
                    }
                    &n_fact / centralizer
                })
                .sum();
            sign * Rational::from_integer(count)
        }
    }
}

/// `s(n, k)` through the symmetric-function specializations: `h_k` at
/// `(-1, ..., -1/m) / m!` for `n = -m`, `e_(n-k)` at `(-1, ..., -(n-1))` for `n > 0`.
pub fn symfunc_route(n: i64, k: usize) -> Rational {
    match n.signum() {
        0 => delta(k),
        -1 => {
            let m = n.unsigned_abs() as u32;
            complete_h(k, &SymArgs::negative_reciprocals(m)) * Rational::recip_of(factorial(m as u64))
        }
        _ => {
            let n = n as usize;
            if k > n {
                Rational::zero()
            } else {
                elementary_e(n - k, &SymArgs::negative_integers_below(n as u32))
            }
        }
    }
}

/// Second-kind number `S(k, n)` from `((-1)^n / n!) sum_{m=0}^{n} C(n,m) (-1)^m m^k`
/// with `0^0 = 1`. For `k >= 1` the `m = 0` term vanishes, and the terms with
/// `m > n` vanish because `C(n, m) = 0`, so the bound `n` agrees with any bound `>= n`.
pub fn stirling2(k: u32, n: u32) -> Result<BigInt> {
    let sum: BigInt = (0..=n as u64)
        .map(|m| {
            let power = if m == 0 {
                if k == 0 { BigInt::one() } else { BigInt::zero() }
            } else {
                num_traits::pow(BigInt::from(m), k as usize)
            };
            let term = binomial(n as u64, m) * power;
            if m % 2 == 1 { -term } else { term }
        })
        .sum();
    let sum = if n % 2 == 1 { -sum } else { sum };
    let (q, r) = sum.div_rem(&factorial(n as u64));
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Consistency(format!("S({k},{n}) came out non-integral or negative")));
    }
    Ok(q)
}

/// Single cell `s(n, k)` by the requested algorithm.
pub fn stirling(n: i64, k: usize, method: Method) -> Result<Rational> {
    match method {
        Method::Definition => Ok(defn_coeffs(n, k).swap_remove(k)),
        Method::Recurrence => {
            let t = recurrence_table(n.min(0), n.max(0), k)?;
            Ok(t.get(n, k).cloned().expect("cell inside region"))
        }
        Method::Knuth => match n.signum() {
            0 => Ok(delta(k)),
            -1 => knuth(n.unsigned_abs() as u32, k as u32),
            _ => Err(Error::Domain(format!("the binomial sum covers degrees <= 0, got {n}"))),
        },
        Method::PartitionSum => {
            let size = partition_sum_size(n, k);
            if size > PARTITION_ENUM_LIMIT {
                return Err(Error::Domain(format!(
                    "partition sum for s({n},{k}) has {size} terms; use the recurrence"
                )));
            }
            Ok(match n.signum() {
                0 => delta(k),
                -1 => partition_sum_neg(n.unsigned_abs() as u32, k, NegVariant::Bounded),
                _ => partition_sum_pos(n as u32, k, PosVariant::Reciprocal),
            })
        }
        Method::SymFunc => Ok(symfunc_route(n, k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn qs(v: &[&str]) -> Vec<Rational> {
        v.iter().map(|s| q(s)).collect()
    }

    #[test]
    fn definition_columns() {
        assert_eq!(defn_coeffs(-1, 5), qs(&["1", "-1", "1", "-1", "1", "-1"]));
        assert_eq!(defn_coeffs(0, 3), qs(&["1", "0", "0", "0"]));
        assert_eq!(defn_coeffs(3, 5), qs(&["0", "2", "-3", "1", "0", "0"]));
        assert_eq!(defn_coeffs(-2, 3), qs(&["1/2", "-3/4", "7/8", "-15/16"]));
    }

    #[test]
    fn recurrence_cells() {
        let t = recurrence_table(-5, 5, 6).unwrap();
        assert_eq!(t.get(-2, 1), Some(&q("-3/4")));
        assert_eq!(t.get(-4, 1), Some(&q("-25/288")));
        assert_eq!(t.get(5, 5), Some(&Rational::one()));
        assert_eq!(t.get(-5, 0), Some(&q("1/120")));
        assert!(recurrence_table(1, 3, 2).is_err());
        assert!(recurrence_table(-3, -1, 2).is_err());
    }

    #[test]
    fn knuth_cells() {
        assert_eq!(knuth(3, 2).unwrap(), q("85/216"));
        for k in 0..8 {
            assert_eq!(knuth(1, k).unwrap(), Rational::sign_power(k as i64));
        }
        assert_eq!(knuth(5, 0).unwrap(), q("1/120"));
        assert_eq!(knuth(0, 3).unwrap(), Rational::zero());
        assert!(knuth(0, 0).is_err());
    }

    #[test]
    fn knuth_refuses_non_integer_degree() {
        assert!(matches!(knuth_real(0.5, 2), Err(Error::Domain(_))));
        assert!(matches!(knuth_real(-2.5, 1), Err(Error::Domain(_))));
        assert_eq!(knuth_real(-3.0, 2).unwrap(), q("85/216"));
    }

    #[test]
    fn negative_partition_sums() {
        assert_eq!(partition_sum_neg(2, 2, NegVariant::Bounded), q("7/8"));
        assert_eq!(partition_sum_neg(2, 3, NegVariant::Composition), q("-15/16"));
        for m in 1..6 {
            for v in NegVariant::ALL {
                assert_eq!(partition_sum_neg(m, 0, v), Rational::recip_of(factorial(m as u64)));
            }
        }
        assert_eq!(partition_sum_neg(2, 1, NegVariant::LargestPart), q("-3/4"));
    }

    #[test]
    fn positive_partition_sums() {
        assert_eq!(partition_sum_pos(4, 2, PosVariant::Product), q("11"));
        assert_eq!(partition_sum_pos(5, 1, PosVariant::Reciprocal), q("24"));
        assert_eq!(partition_sum_pos(4, 2, PosVariant::CycleType), q("11"));
        assert_eq!(partition_sum_pos(4, 2, PosVariant::LargestPart), q("11"));
        for v in PosVariant::ALL {
            assert_eq!(partition_sum_pos(3, 0, v), Rational::zero());
            assert_eq!(partition_sum_pos(3, 5, v), Rational::zero());
            assert_eq!(partition_sum_pos(6, 6, v), Rational::one());
        }
    }

    #[test]
    fn symfunc_cells() {
        assert_eq!(symfunc_route(-2, 2), q("7/8"));
        assert_eq!(symfunc_route(3, 3), Rational::one());
        assert_eq!(symfunc_route(-5, 1), q("-137/7200"));
        assert_eq!(symfunc_route(0, 0), Rational::one());
        assert_eq!(symfunc_route(4, 7), Rational::zero());
    }

    /// Brute-force count of set partitions of {0..k} into n nonempty blocks.
    fn count_set_partitions(k: usize, n: usize) -> u64 {
        fn go(i: usize, k: usize, blocks: usize, n: usize) -> u64 {
            if i == k {
                return (blocks == n) as u64;
            }
            // Element i joins an existing block or opens a new one.
            let mut total = blocks as u64 * go(i + 1, k, blocks, n);
            if blocks < n {
                total += go(i + 1, k, blocks + 1, n);
            }
            total
        }
        go(0, k, 0, n)
    }

    #[test]
    fn second_kind() {
        assert_eq!(stirling2(3, 2).unwrap(), BigInt::from(3));
        assert_eq!(stirling2(4, 2).unwrap(), BigInt::from(7));
        for k in 1..8 {
            assert_eq!(stirling2(k, 1).unwrap(), BigInt::one());
        }
        for k in 0..=8u32 {
            for n in 0..=8u32 {
                let expect = count_set_partitions(k as usize, n as usize);
                assert_eq!(stirling2(k, n).unwrap(), BigInt::from(expect), "S({k},{n})");
            }
        }
    }

    #[test]
    fn single_cell_dispatch() {
        for method in Method::ALL {
            assert_eq!(stirling(-3, 2, method).unwrap(), q("85/216"), "{method}");
            assert_eq!(stirling(0, 0, method).unwrap(), Rational::one(), "{method}");
        }
        assert!(stirling(3, 1, Method::Knuth).is_err());
        assert_eq!(stirling(4, 2, Method::PartitionSum).unwrap(), q("11"));
        assert!(stirling(-60, 60, Method::PartitionSum).is_err());
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("real".parse::<Method>().is_err());
    }
}
