//! Lazy enumeration of the constrained partitions and compositions that index
//! the partition-sum formulas.
//!
//! Every stream is deterministic and yields its elements in lexicographically
//! decreasing order of the part sequence.

use num_bigint::BigInt;
use num_traits::One;

/// A nonincreasing sequence of positive integers. The empty partition has
/// length 0 and product 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into nonincreasing order; returns `None` if any part is zero.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Product of the parts.
    pub fn product(&self) -> BigInt {
        self.parts.iter().fold(BigInt::one(), |acc, &p| acc * p)
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Adjoin one more part, keeping the sequence nonincreasing.
    pub fn with_part(&self, part: u32) -> Self {
        let mut parts = self.parts.clone();
        let at = parts.partition_point(|&p| p >= part);
        parts.insert(at, part);
        Partition { parts }
    }

    #[cfg(test)]
    fn is_valid(&self) -> bool {
        self.parts.iter().all(|&p| p >= 1) && self.parts.windows(2).all(|w| w[0] >= w[1])
    }
}

/// A fixed-length sequence of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    entries: Vec<u32>,
}

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        Composition { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn slots(&self) -> usize {
        self.entries.len()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&e| e as u64).sum()
    }
}

/// Partitions with exactly `k_parts` parts, each at most `max_part`.
pub fn enum_bounded(k_parts: usize, max_part: u32) -> Bounded {
    let first = if k_parts > 0 && max_part == 0 {
        None
    } else {
        Some(vec![max_part; k_parts])
    };
    Bounded { next: first }
}

pub struct Bounded {
    next: Option<Vec<u32>>,
}

impl Iterator for Bounded {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        if let Some(i) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current.clone();
            let v = succ[i] - 1;
            succ[i..].iter_mut().for_each(|p| *p = v);
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

/// Partitions with exactly `k_parts` pairwise-distinct parts, each `< bound`.
pub fn enum_distinct_below(k_parts: usize, bound: u32) -> DistinctBelow {
    let available = bound.saturating_sub(1) as usize;
    let first = (k_parts <= available).then(|| (0..k_parts as u32).map(|i| bound - 1 - i).collect());
    DistinctBelow { next: first }
}

pub struct DistinctBelow {
    next: Option<Vec<u32>>,
}

impl Iterator for DistinctBelow {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let k = current.len();
        // Position i holds at least k - i so the strictly decreasing tail fits above zero.
        if let Some(i) = (0..k).rev().find(|&i| current[i] as usize > k - i) {
            let mut succ = current.clone();
            succ[i] -= 1;
            for j in i + 1..k {
                succ[j] = succ[j - 1] - 1;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

/// Partitions of `n` into exactly `k_parts` parts.
pub fn enum_weight(n: u32, k_parts: usize) -> Weight {
    let first = if k_parts == 0 {
        (n == 0).then(Vec::new)
    } else if (k_parts as u64) > n as u64 {
        None
    } else {
        let mut v = vec![1; k_parts];
        v[0] = n - (k_parts as u32 - 1);
        Some(v)
    };
    Weight { next: first }
}

pub struct Weight {
    next: Option<Vec<u32>>,
}

impl Iterator for Weight {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let k = current.len();
        let mut tail: u64 = 0;
        for i in (0..k.saturating_sub(1)).rev() {
            tail += current[i + 1] as u64;
            let cap = current[i] as u64 - 1;
            let rest = tail + 1;
            let slots = (k - 1 - i) as u64;
            if cap >= 1 && rest <= slots * cap {
                let mut succ = current[..i].to_vec();
                succ.push(cap as u32);
                // Greedy largest-first fill gives the lexicographically largest tail.
                let mut left = rest;
                for s in (0..slots).rev() {
                    let take = cap.min(left - s);
                    succ.push(take as u32);
                    left -= take;
                }
                self.next = Some(succ);
                break;
            }
        }
        Some(Partition { parts: current })
    }
}

/// All length-`slots` sequences of nonnegative integers summing to `total`.
pub fn enum_compositions(slots: usize, total: u32) -> Compositions {
    let first = if slots == 0 {
        (total == 0).then(Vec::new)
    } else {
        let mut v = vec![0; slots];
        v[0] = total;
        Some(v)
    };
    Compositions { next: first }
}

pub struct Compositions {
    next: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        let s = current.len();
        if s >= 2 {
            if let Some(i) = (0..s - 1).rev().find(|&i| current[i] > 0) {
                let mut succ = current.clone();
                let tail: u32 = succ[i + 1..].iter().sum();
                succ[i] -= 1;
                succ[i + 1..].iter_mut().for_each(|e| *e = 0);
                succ[i + 1] = tail + 1;
                self.next = Some(succ);
            }
        }
        Some(Composition { entries: current })
    }
}
