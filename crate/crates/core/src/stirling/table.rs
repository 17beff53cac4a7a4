use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{defn_coeffs, knuth, partition_sum_neg, partition_sum_pos, recurrence_table, symfunc_route};
use super::{Method, NegVariant, PosVariant};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Rectangle of degrees `n_min..=n_max` and orders `0..=k_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Region {
    pub n_min: i64,
    pub n_max: i64,
    pub k_max: usize,
}

impl Region {
    pub fn new(n_min: i64, n_max: i64, k_max: usize) -> Result<Self> {
        if n_min > n_max {
            return Err(Error::Region(format!("n_min {n_min} exceeds n_max {n_max}")));
        }
        Ok(Region { n_min, n_max, k_max })
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.n_min..=self.n_max
    }

    pub fn width(&self) -> usize {
        (self.n_max - self.n_min + 1) as usize
    }

    pub fn cell_count(&self) -> usize {
        self.width() * (self.k_max + 1)
    }

    pub fn contains(&self, n: i64, k: usize) -> bool {
        n >= self.n_min && n <= self.n_max && k <= self.k_max
    }

    /// All `(n, k)` cells, degree-major.
    pub fn cells(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.degrees().flat_map(move |n| (0..=self.k_max).map(move |k| (n, k)))
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.n_min, self.n_max, self.k_max)
    }
}

impl std::str::FromStr for Region {
    type Err = Error;

    /// `n_min:n_max:k_max`
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Region(format!("expected n_min:n_max:k_max, got {s:?}"));
        let mut it = s.split(':');
        let (Some(a), Some(b), Some(c), None) = (it.next(), it.next(), it.next(), it.next()) else {
            return Err(bad());
        };
        let n_min = a.trim().parse().map_err(|_| bad())?;
        let n_max = b.trim().parse().map_err(|_| bad())?;
        let k_max = c.trim().parse().map_err(|_| bad())?;
        Region::new(n_min, n_max, k_max)
    }
}

/// `s(n, k) = 0` exactly when `k > n > 0`, `k = 0 < n`, or `n = 0 < k`
/// (degree zero is the Kronecker delta). Negative degrees never vanish.
pub fn must_vanish(n: i64, k: usize) -> bool {
    n >= 0 && (k as i64 > n || (k == 0 && n > 0))
}

/// Every cell of a [`Region`] together with the method that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    region: Region,
    method: Method,
    // Degree-major: index (n - n_min) * (k_max + 1) + k.
    cells: Vec<Rational>,
}

impl StirlingTable {
    pub fn from_cells(region: Region, method: Method, cells: Vec<Rational>) -> Result<Self> {
        if cells.len() != region.cell_count() {
            return Err(Error::Region(format!(
                "region {region} needs {} cells, got {}",
                region.cell_count(),
                cells.len()
            )));
        }
        Ok(StirlingTable { region, method, cells })
    }

    pub(crate) fn from_columns(region: Region, method: Method, columns: Vec<Vec<Rational>>) -> Result<Self> {
        Self::from_cells(region, method, columns.into_iter().flatten().collect())
    }

    /// Computes every cell of `region` with `method`. The recurrence is run over
    /// the smallest span containing degree zero and then cut down.
    pub fn build(region: Region, method: Method) -> Result<Self> {
        let k_max = region.k_max;
        let columns: Vec<Vec<Rational>> = match method {
            Method::Recurrence => {
                let full = recurrence_table(region.n_min.min(0), region.n_max.max(0), k_max)?;
                return Ok(full.restrict(region).expect("subregion"));
            }
            Method::Definition => region.degrees().map(|n| defn_coeffs(n, k_max)).collect(),
            Method::Knuth => {
                if region.n_max > 0 {
                    return Err(Error::Domain("the binomial sum covers degrees <= 0".into()));
                }
                region
                    .degrees()
                    .map(|n| {
                        (0..=k_max)
                            .map(|k| match (n, k) {
                                (0, 0) => Rational::one(),
                                _ => knuth(n.unsigned_abs() as u32, k as u32).expect("excluded (0,0)"),
                            })
                            .collect()
                    })
                    .collect()
            }
            Method::PartitionSum => {
                let cells: Vec<(i64, usize)> = region.cells().collect();
                let values: Vec<Rational> = cells
                    .par_iter()
                    .map(|&(n, k)| match n.signum() {
                        -1 => partition_sum_neg(n.unsigned_abs() as u32, k, NegVariant::Bounded),
                        0 => symfunc_route(0, k),
                        _ => partition_sum_pos(n as u32, k, PosVariant::Reciprocal),
                    })
                    .collect();
                return Self::from_cells(region, method, values);
            }
            Method::SymFunc => region
                .degrees()
                .map(|n| (0..=k_max).map(|k| symfunc_route(n, k)).collect())
                .collect(),
        };
        Self::from_columns(region, method, columns)
    }

    pub fn region(&self) -> Region {
        self.region
    }

    pub fn method(&self) -> Method {
        self.method
    }

    fn index(&self, n: i64, k: usize) -> Option<usize> {
        self.region
            .contains(n, k)
            .then(|| (n - self.region.n_min) as usize * (self.region.k_max + 1) + k)
    }

    pub fn get(&self, n: i64, k: usize) -> Option<&Rational> {
        self.index(n, k).map(|i| &self.cells[i])
    }

    /// Orders `0..=k_max` at degree `n`.
    pub fn column(&self, n: i64) -> Option<&[Rational]> {
        let start = self.index(n, 0)?;
        Some(&self.cells[start..start + self.region.k_max + 1])
    }

    /// Overwrites one cell, returning the old value. Used for fault injection.
    pub fn set(&mut self, n: i64, k: usize, value: Rational) -> Option<Rational> {
        let i = self.index(n, k)?;
        Some(std::mem::replace(&mut self.cells[i], value))
    }

    /// `(n, k, value)` in degree-major order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, usize, &Rational)> + '_ {
        self.region.cells().zip(self.cells.iter()).map(|((n, k), v)| (n, k, v))
    }

    pub fn restrict(&self, sub: Region) -> Option<StirlingTable> {
        if sub.n_min < self.region.n_min || sub.n_max > self.region.n_max || sub.k_max > self.region.k_max {
            return None;
        }
        let cells = sub.cells().map(|(n, k)| self.get(n, k).cloned().expect("inside")).collect();
        Some(StirlingTable { region: sub, method: self.method, cells })
    }

    /// Cells that break the zero pattern, see [`must_vanish`].
    pub fn zero_pattern_violations(&self) -> Vec<(i64, usize)> {
        self.iter()
            .filter(|&(n, k, v)| must_vanish(n, k) != v.is_zero())
            .map(|(n, k, _)| (n, k))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn region_parse() {
        let r: Region = "-8:8:12".parse().unwrap();
        assert_eq!(r, Region::new(-8, 8, 12).unwrap());
        assert_eq!(r.cell_count(), 17 * 13);
        assert_eq!(r.to_string(), "-8:8:12");
        for bad in ["1:2", "3:1:2", "a:b:c", "1:2:-3", "1:2:3:4"] {
            assert!(bad.parse::<Region>().is_err(), "{bad}");
        }
    }

    #[test]
    fn build_matches_recurrence_on_offset_region() {
        let region = Region::new(2, 6, 7).unwrap();
        let rec = StirlingTable::build(region, Method::Recurrence).unwrap();
        let defn = StirlingTable::build(region, Method::Definition).unwrap();
        assert_eq!(rec.region(), region);
        assert!(rec.iter().zip(defn.iter()).all(|(a, b)| a == b));
        let neg = Region::new(-6, -2, 5).unwrap();
        let rec = StirlingTable::build(neg, Method::Recurrence).unwrap();
        let knuth = StirlingTable::build(neg, Method::Knuth).unwrap();
        assert!(rec.iter().zip(knuth.iter()).all(|(a, b)| a == b));
        assert!(StirlingTable::build(region, Method::Knuth).is_err());
    }

    #[test]
    fn zero_pattern_and_fault() {
        let mut t = StirlingTable::build(Region::new(-4, 6, 8).unwrap(), Method::Recurrence).unwrap();
        assert!(t.zero_pattern_violations().is_empty());
        t.set(3, 5, Rational::one());
        assert_eq!(t.zero_pattern_violations(), vec![(3, 5)]);
        assert!(t.set(30, 0, Rational::one()).is_none());
    }

    #[test]
    fn wrong_cell_count_is_rejected() {
        let r = Region::new(0, 1, 1).unwrap();
        assert!(StirlingTable::from_cells(r, Method::Recurrence, vec![Rational::one()]).is_err());
    }
}
