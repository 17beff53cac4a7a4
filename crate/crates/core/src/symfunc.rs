//! Complete homogeneous and elementary symmetric functions at finite rational
//! specializations.
//!
//! [`complete_h`] and [`elementary_e`] use the one-variable-at-a-time
//! recurrences, O(k * |xs|). The `genfunc_*` routes expand the generating
//! products `prod (1 - x y)^-1` and `prod (1 + x y)` as truncated series and
//! serve as an independent check.

use crate::exact::Rational;

/// Specialization points, kept in the order given.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymArgs(pub Vec<Rational>);

impl SymArgs {
    pub fn new(args: Vec<Rational>) -> Self {
        SymArgs(args)
    }

    pub fn args(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(-1, -1/2, ..., -1/m)`
    pub fn negative_reciprocals(m: u32) -> Self {
        SymArgs((1..=m).map(|i| -Rational::recip_of(i)).collect())
    }

    /// `(-1, -2, ..., -(n-1))`
    pub fn negative_integers_below(n: u32) -> Self {
        SymArgs((1..n).map(|i| Rational::from(-(i as i64))).collect())
    }
}

impl From<Vec<Rational>> for SymArgs {
    fn from(v: Vec<Rational>) -> Self {
        SymArgs(v)
    }
}

/// Coefficients `0..=k_max` of a truncated power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTruncation {
    coeffs: Vec<Rational>,
}

impl SeriesTruncation {
    pub fn one(k_max: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k_max + 1];
        coeffs[0] = Rational::one();
        SeriesTruncation { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn k_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &SeriesTruncation) -> SeriesTruncation {
        let k_max = self.k_max().min(other.k_max());
        let coeffs = (0..=k_max)
            .map(|k| (0..=k).map(|i| &self.coeffs[i] * &other.coeffs[k - i]).sum())
            .collect();
        SeriesTruncation { coeffs }
    }
}

impl std::ops::Index<usize> for SeriesTruncation {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }
}

/// `h_k(xs)`
pub fn complete_h(k: usize, xs: &SymArgs) -> Rational {
    complete_h_all(k, xs).swap_remove(k)
}

/// `h_0(xs), ..., h_k_max(xs)` in one pass.
pub fn complete_h_all(k_max: usize, xs: &SymArgs) -> Vec<Rational> {
    let mut h = vec![Rational::zero(); k_max + 1];
    h[0] = Rational::one();
    // Adding a variable x: h'_j = h_j + x h'_{j-1}.
    for x in xs.args() {
        for j in 1..=k_max {
            let carry = x * &h[j - 1];
            h[j] += carry;
        }
    }
    h
}

/// `e_k(xs)`; zero when `k > |xs|`.
pub fn elementary_e(k: usize, xs: &SymArgs) -> Rational {
    if k > xs.len() {
        return Rational::zero();
    }
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    // Adding a variable x: e'_j = e_j + x e_{j-1}, updated from the top down.
    for x in xs.args() {
        for j in (1..=k).rev() {
            let carry = x * &e[j - 1];
            e[j] += carry;
        }
    }
    e.swap_remove(k)
}

/// Truncation of `prod_x (1 - x y)^-1`.
pub fn genfunc_h_coeffs(xs: &SymArgs, k_max: usize) -> SeriesTruncation {
    xs.args().iter().fold(SeriesTruncation::one(k_max), |acc, x| {
        let mut power = Rational::one();
        let geometric = (0..=k_max)
            .map(|_| {
                let c = power.clone();
                power *= x;
                c
            })
            .collect();
        acc.mul(&SeriesTruncation { coeffs: geometric })
    })
}

/// Truncation of `prod_x (1 + x y)`.
pub fn genfunc_e_coeffs(xs: &SymArgs, k_max: usize) -> SeriesTruncation {
    xs.args().iter().fold(SeriesTruncation::one(k_max), |acc, x| {
        let mut linear = SeriesTruncation::one(k_max);
        if k_max >= 1 {
            linear.coeffs[1] = x.clone();
        }
        acc.mul(&linear)
    })
}
