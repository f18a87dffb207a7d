//! Truncated formal power series in `q` with exact rational coefficients,
//! and builders for the generating functions of the weighted partition
//! identities.
//!
//! Infinite products and sums are truncated by valuation: a factor
//! `1 − c·q^e` with `e > N`, or a summand whose lowest term has degree
//! greater than `N`, cannot affect coefficients `0..=N` and is skipped. The
//! truncation is therefore exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::partition::{self, PartKind, PartitionClass};
use crate::weighted::{weighted_sum, VerificationReport, WeightFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term is zero; the series has no reciprocal")]
    NonUnitReciprocal,
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("exponent {0} is not positive; the product does not converge")]
    NonPositiveExponent(i64),
    #[error("coefficient of q^{index} is {value}, not an integer")]
    NonIntegral { index: usize, value: String },
    #[error("unknown series {0:?}")]
    UnknownBuilder(String),
    #[error("order must be at least 1")]
    ZeroOrder,
}

/// `c_0 + c_1 q + … + c_N q^N + O(q^{N+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self { order, coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(rat(1), 0, order)
    }

    /// `c·q^exp`, which is zero when `exp > order`.
    pub fn monomial(c: BigRational, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Pads with zeros or truncates to `order`.
    pub fn from_coeffs(coeffs: Vec<BigRational>, order: usize) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, BigRational::zero());
        Self { order, coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I, order: usize) -> Self {
        Self::from_coeffs(coeffs.into_iter().take(order + 1).map(rat).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// Drops terms above `order`; never raises the order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self { order, coeffs: self.coeffs[..=order].to_vec() }
    }

    fn same_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch(self.order, other.order))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { order: self.order, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { order: self.order, coeffs })
    }

    /// Cauchy product modulo `q^{N+1}`.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &BigRational) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scalar_mul(&rat(-1))
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::NonUnitReciprocal);
        }
        let inv0 = c0.recip();
        let mut out = Self::zero(self.order);
        out.coeffs[0] = inv0.clone();
        for k in 1..=self.order {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out.coeffs[k - i];
                }
            }
            out.coeffs[k] = -acc * &inv0;
        }
        Ok(out)
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        let mut out = Self::zero(self.order);
        for k in e..=self.order {
            out.coeffs[k] = self.coeffs[k - e].clone();
        }
        out
    }

    /// In place `self *= 1 − c·q^e` for `e ≥ 1`.
    pub fn mul_binomial(&mut self, c: &BigRational, e: usize) {
        assert!(e >= 1);
        for k in (e..=self.order).rev() {
            let t = c * &self.coeffs[k - e];
            self.coeffs[k] -= t;
        }
    }

    /// In place `self /= 1 − c·q^e` for `e ≥ 1`.
    pub fn div_binomial(&mut self, c: &BigRational, e: usize) {
        assert!(e >= 1);
        for k in e..=self.order {
            let t = c * &self.coeffs[k - e];
            self.coeffs[k] += t;
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The coefficients as integers; fails on the first non-integer.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(SeriesError::NonIntegral { index, value: c.to_string() })
                }
            })
            .collect()
    }

    /// Coefficients as exact strings: `"3"` or `"-1/2"`.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Prints `c_0 + c_1 q + … + c_N q^N + O(q^{N+1})`, omitting zero terms.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = k == 0 || !magnitude.is_one();
            match (show_coeff, k) {
                (_, 0) => write!(f, "{magnitude}")?,
                (true, 1) => write!(f, "{magnitude} q")?,
                (true, _) => write!(f, "{magnitude} q^{k}")?,
                (false, 1) => f.write_str("q")?,
                (false, _) => write!(f, "q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

/// Result of a coefficientwise comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    FirstDiff { index: usize, left: BigRational, right: BigRational },
}

pub fn compare(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<Comparison, SeriesError> {
    a.same_order(b)?;
    Ok(a.coeffs
        .iter()
        .zip(&b.coeffs)
        .enumerate()
        .find(|(_, (x, y))| x != y)
        .map(|(index, (x, y))| Comparison::FirstDiff { index, left: x.clone(), right: y.clone() })
        .unwrap_or(Comparison::Equal))
}

/// `c·q^e`, the `x` of a q-Pochhammer symbol `(x; q^b)_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: i64,
    pub exp: i64,
}

impl Monomial {
    pub fn q_pow(exp: i64) -> Self {
        Self { coeff: 1, exp }
    }

    pub fn neg_q_pow(exp: i64) -> Self {
        Self { coeff: -1, exp }
    }
}

/// Number of factors of a q-Pochhammer symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl FromStr for Count {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinite" | "infinity" | "∞" => Ok(Count::Infinite),
            other => other.parse().map(Count::Finite).map_err(|_| format!("bad count {s:?}")),
        }
    }
}

/// `(x; q^b)_n = (1 − x)(1 − x q^b) ⋯ (1 − x q^{(n−1)b})` truncated at `order`.
pub fn pochhammer(x: Monomial, step: u64, count: Count, order: usize) -> Result<TruncatedSeries, SeriesError> {
    let factors = match count {
        Count::Finite(n) => n,
        Count::Infinite if x.exp <= 0 => return Err(SeriesError::NonPositiveExponent(x.exp)),
        Count::Infinite if step == 0 => return Err(SeriesError::NonPositiveExponent(0)),
        Count::Infinite => u64::MAX,
    };
    let c = rat(x.coeff);
    let mut s = TruncatedSeries::one(order);
    for k in 0..factors {
        let e = x.exp + (k * step) as i64;
        if e < 0 {
            return Err(SeriesError::NonPositiveExponent(e));
        }
        if e == 0 {
            s = s.scalar_mul(&(rat(1) - &c));
        } else if e as usize <= order {
            s.mul_binomial(&c, e as usize);
        } else if step > 0 {
            break;
        }
    }
    Ok(s)
}

/// `(−q; q)_∞`, the generating function of distinct-part partitions.
pub fn distinct_product(order: usize) -> TruncatedSeries {
    pochhammer(Monomial::neg_q_pow(1), 1, Count::Infinite, order).expect("positive exponent")
}

/// `1/(q; q²)_∞`, the generating function of odd-part partitions.
pub fn odd_reciprocal(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for e in (1..=order).step_by(2) {
        s.div_binomial(&rat(1), e);
    }
    s
}

/// `Σ_e q^e/(1 − q^e)` over the given exponents, expanded geometrically.
fn lambert(exps: impl Iterator<Item = usize>, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for e in exps.take_while(|&e| e <= order) {
        for k in (e..=order).step_by(e) {
            s.coeffs[k] += rat(1);
        }
    }
    s
}

/// `1 + Σ_{n≥1} q^{n(n+1)/2}/(−q; q)_n`: distinct-part partitions with even
/// rank minus those with odd rank.
fn rank_parity(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    let mut n = 1;
    while n * (n + 1) / 2 <= order {
        let mut term = TruncatedSeries::monomial(rat(1), n * (n + 1) / 2, order);
        for k in 1..=n {
            term.div_binomial(&rat(-1), k);
        }
        s = s.add(&term).expect("same order");
        n += 1;
    }
    s
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// `P·(−1/2 + L) + (1/2)·R` with `P = (−q;q)_∞`, `R` the rank-parity series.
fn ramanujan_rhs(lambert_sum: &TruncatedSeries, order: usize) -> TruncatedSeries {
    let p = distinct_product(order);
    let bracket = lambert_sum.sub(&TruncatedSeries::one(order).scalar_mul(&half())).expect("same order");
    p.mul(&bracket).expect("same order").add(&rank_parity(order).scalar_mul(&half())).expect("same order")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesBuilder {
    DistinctProduct,
    OddReciprocal,
    Eq1Lhs,
    Eq1Rhs,
    Eq2Lhs,
    Eq2Rhs,
    GfRootedDistinct,
    GfRootedOdd,
    GfAlmostDistinct,
    GfEvenRoot,
    RankParity,
    LargestPartDistinct,
    HalfLargestOdd,
    SumLengthOdd,
    SumLengthDistinct,
    OddRankDistinct,
}

impl SeriesBuilder {
    pub const ALL: [SeriesBuilder; 16] = [
        SeriesBuilder::DistinctProduct,
        SeriesBuilder::OddReciprocal,
        SeriesBuilder::Eq1Lhs,
        SeriesBuilder::Eq1Rhs,
        SeriesBuilder::Eq2Lhs,
        SeriesBuilder::Eq2Rhs,
        SeriesBuilder::GfRootedDistinct,
        SeriesBuilder::GfRootedOdd,
        SeriesBuilder::GfAlmostDistinct,
        SeriesBuilder::GfEvenRoot,
        SeriesBuilder::RankParity,
        SeriesBuilder::LargestPartDistinct,
        SeriesBuilder::HalfLargestOdd,
        SeriesBuilder::SumLengthOdd,
        SeriesBuilder::SumLengthDistinct,
        SeriesBuilder::OddRankDistinct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesBuilder::DistinctProduct => "distinct-product",
            SeriesBuilder::OddReciprocal => "odd-reciprocal",
            SeriesBuilder::Eq1Lhs => "eq1-lhs",
            SeriesBuilder::Eq1Rhs => "eq1-rhs",
            SeriesBuilder::Eq2Lhs => "eq2-lhs",
            SeriesBuilder::Eq2Rhs => "eq2-rhs",
            SeriesBuilder::GfRootedDistinct => "gf-rooted-distinct",
            SeriesBuilder::GfRootedOdd => "gf-rooted-odd",
            SeriesBuilder::GfAlmostDistinct => "gf-almost-distinct",
            SeriesBuilder::GfEvenRoot => "gf-even-root",
            SeriesBuilder::RankParity => "rank-parity",
            SeriesBuilder::LargestPartDistinct => "largest-part-distinct",
            SeriesBuilder::HalfLargestOdd => "half-largest-odd",
            SeriesBuilder::SumLengthOdd => "sum-length-odd",
            SeriesBuilder::SumLengthDistinct => "sum-length-distinct",
            SeriesBuilder::OddRankDistinct => "odd-rank-distinct",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            SeriesBuilder::DistinctProduct => "(-q;q)_inf",
            SeriesBuilder::OddReciprocal => "1/(q;q^2)_inf",
            SeriesBuilder::Eq1Lhs => "sum_{n>=0} [(-q;q)_inf - (-q;q)_n]",
            SeriesBuilder::Eq1Rhs => "(-q;q)_inf [-1/2 + sum_d q^d/(1-q^d)] + 1/2 [1 + sum_n q^(n(n+1)/2)/(-q;q)_n]",
            SeriesBuilder::Eq2Lhs => "sum_{n>=0} [1/(q;q^2)_inf - 1/(q;q^2)_{n+1}]",
            SeriesBuilder::Eq2Rhs => "(-q;q)_inf [-1/2 + sum_d q^2d/(1-q^2d)] + 1/2 [1 + sum_n q^(n(n+1)/2)/(-q;q)_n]",
            SeriesBuilder::GfRootedDistinct => "sum_d q^d prod_{j!=d} (1+q^j)",
            SeriesBuilder::GfRootedOdd => "1/(q;q^2)_inf sum_{d>=0} q^(2d+1)/(1-q^(2d+1))",
            SeriesBuilder::GfAlmostDistinct => "(-q;q)_inf sum_d q^d/(1-q^d)",
            SeriesBuilder::GfEvenRoot => "(-q;q)_inf sum_d q^2d/(1-q^2d)",
            SeriesBuilder::RankParity => "1 + sum_{n>=1} q^(n(n+1)/2)/(-q;q)_n",
            SeriesBuilder::LargestPartDistinct => "sum_{n>=1} n q^n (-q;q)_{n-1}",
            SeriesBuilder::HalfLargestOdd => "sum_{n>=0} n q^(2n+1)/(q;q^2)_{n+1}",
            SeriesBuilder::SumLengthOdd => "sum_{d>=0} sum_{m>=1} m q^((2d+1)m) / prod_{j!=d} (1-q^(2j+1))",
            SeriesBuilder::SumLengthDistinct => "(-q;q)_inf sum_j q^j/(1+q^j)",
            SeriesBuilder::OddRankDistinct => "((-q;q)_inf - rank-parity)/2",
        }
    }

    pub fn build(self, order: usize) -> Result<TruncatedSeries, SeriesError> {
        if order == 0 {
            return Err(SeriesError::ZeroOrder);
        }
        let n = order;
        let s = match self {
            SeriesBuilder::DistinctProduct => distinct_product(n),
            SeriesBuilder::OddReciprocal => odd_reciprocal(n),
            SeriesBuilder::Eq1Lhs => {
                // summand k is (−q;q)_k ((−q^{k+1};q)_∞ − 1), valuation k + 1
                let full = distinct_product(n);
                let mut partial = TruncatedSeries::one(n);
                let mut sum = TruncatedSeries::zero(n);
                for k in 0..n {
                    if k >= 1 {
                        partial.mul_binomial(&rat(-1), k);
                    }
                    sum = sum.add(&full.sub(&partial)?)?;
                }
                sum
            }
            SeriesBuilder::Eq1Rhs => ramanujan_rhs(&lambert(1.., n), n),
            SeriesBuilder::Eq2Lhs => {
                // Summand k is 1/(q;q²)_∞ − 1/(q;q²)_{k+1}, valuation 2k + 3.
                // Indexing from (q;q²)_1 is what makes both sides agree with
                // Σ_O (λ_1−1)/2 q^|λ|; starting at (q;q²)_0 adds 1/(q;q²)_∞ − 1.
                let full = odd_reciprocal(n);
                let mut partial = TruncatedSeries::one(n);
                let mut sum = TruncatedSeries::zero(n);
                let mut k = 0;
                while 2 * k + 3 <= n {
                    partial.div_binomial(&rat(1), 2 * k + 1);
                    sum = sum.add(&full.sub(&partial)?)?;
                    k += 1;
                }
                sum
            }
            SeriesBuilder::Eq2Rhs => ramanujan_rhs(&lambert((1..).map(|d| 2 * d), n), n),
            SeriesBuilder::GfRootedDistinct => {
                let mut sum = TruncatedSeries::zero(n);
                for d in 1..=n {
                    let mut term = TruncatedSeries::monomial(rat(1), d, n);
                    for j in (1..=n).filter(|&j| j != d) {
                        term.mul_binomial(&rat(-1), j);
                    }
                    sum = sum.add(&term)?;
                }
                sum
            }
            SeriesBuilder::GfRootedOdd => odd_reciprocal(n).mul(&lambert((0..).map(|d| 2 * d + 1), n))?,
            SeriesBuilder::GfAlmostDistinct => distinct_product(n).mul(&lambert(1.., n))?,
            SeriesBuilder::GfEvenRoot => distinct_product(n).mul(&lambert((1..).map(|d| 2 * d), n))?,
            SeriesBuilder::RankParity => rank_parity(n),
            SeriesBuilder::LargestPartDistinct => {
                let mut partial = TruncatedSeries::one(n);
                let mut sum = TruncatedSeries::zero(n);
                for k in 1..=n {
                    if k >= 2 {
                        partial.mul_binomial(&rat(-1), k - 1);
                    }
                    sum = sum.add(&partial.shift(k).scalar_mul(&rat(k as i64)))?;
                }
                sum
            }
            SeriesBuilder::HalfLargestOdd => {
                let mut denom_inv = TruncatedSeries::one(n);
                let mut sum = TruncatedSeries::zero(n);
                let mut k = 0;
                while 2 * k < n {
                    denom_inv.div_binomial(&rat(1), 2 * k + 1);
                    sum = sum.add(&denom_inv.shift(2 * k + 1).scalar_mul(&rat(k as i64)))?;
                    k += 1;
                }
                sum
            }
            SeriesBuilder::SumLengthOdd => {
                let mut sum = TruncatedSeries::zero(n);
                for d in (1..=n).step_by(2) {
                    let mut term = TruncatedSeries::zero(n);
                    for m in 1..=n / d {
                        term.coeffs[d * m] = rat(m as i64);
                    }
                    for j in (1..=n).step_by(2).filter(|&j| j != d) {
                        term.div_binomial(&rat(1), j);
                    }
                    sum = sum.add(&term)?;
                }
                sum
            }
            SeriesBuilder::SumLengthDistinct => {
                let mut alternating = TruncatedSeries::zero(n);
                for j in 1..=n {
                    for (i, k) in (j..=n).step_by(j).enumerate() {
                        alternating.coeffs[k] += rat(if i % 2 == 0 { 1 } else { -1 });
                    }
                }
                distinct_product(n).mul(&alternating)?
            }
            SeriesBuilder::OddRankDistinct => distinct_product(n).sub(&rank_parity(n))?.scalar_mul(&half()),
        };
        Ok(s)
    }

    /// Coefficient of `q^n` computed by enumerating partitions.
    pub fn enumeration_oracle(self, n: u64) -> BigInt {
        use PartitionClass as C;
        use WeightFunction as W;
        let distinct_by_rank = |odd: bool| {
            partition::partitions(n, PartKind::Distinct).filter(|p| (p.rank().rem_euclid(2) == 1) == odd).count()
        };
        match self {
            SeriesBuilder::DistinctProduct => BigInt::from(partition::count(n, C::Distinct)),
            SeriesBuilder::OddReciprocal => BigInt::from(partition::count(n, C::Odd)),
            SeriesBuilder::Eq1Lhs | SeriesBuilder::Eq1Rhs | SeriesBuilder::LargestPartDistinct => {
                weighted_sum(n, C::Distinct, W::LargestPart)
            }
            SeriesBuilder::Eq2Lhs | SeriesBuilder::Eq2Rhs | SeriesBuilder::HalfLargestOdd => {
                weighted_sum(n, C::Odd, W::HalfLargestMinus)
            }
            SeriesBuilder::GfRootedDistinct => BigInt::from(partition::count(n, C::RootedDistinct)),
            SeriesBuilder::GfRootedOdd => BigInt::from(partition::count(n, C::RootedOdd)),
            SeriesBuilder::GfAlmostDistinct => BigInt::from(partition::count(n, C::RootedAlmostDistinct)),
            SeriesBuilder::GfEvenRoot => BigInt::from(partition::count(n, C::RootedAlmostDistinctEvenRoot)),
            SeriesBuilder::RankParity => {
                BigInt::from(distinct_by_rank(false)) - BigInt::from(distinct_by_rank(true))
            }
            SeriesBuilder::SumLengthOdd => weighted_sum(n, C::Odd, W::Length),
            SeriesBuilder::SumLengthDistinct => weighted_sum(n, C::Distinct, W::Length),
            SeriesBuilder::OddRankDistinct => BigInt::from(distinct_by_rank(true)),
        }
    }
}

impl fmt::Display for SeriesBuilder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesBuilder {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        SeriesBuilder::ALL
            .into_iter()
            .find(|b| b.name() == key)
            .ok_or_else(|| SeriesError::UnknownBuilder(s.to_string()))
    }
}

/// Generating-function identities checked coefficient by coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesIdentity {
    /// The first Ramanujan identity.
    Eq1,
    /// The second Ramanujan identity.
    Eq2,
    /// `(−q;q)_∞ = 1/(q;q²)_∞`.
    Euler,
    /// Left side of `Eq1` as the largest-part generating function.
    Andrews1,
    /// Left side of `Eq2` as the half-largest-part generating function.
    Andrews2,
    Lem2,
    Lem3,
    Lem4,
    T4_1,
    T4_2,
    /// `Σ_D (μ_1 + l + [r odd]) q^|μ| = Σ_O 2l q^|λ|`.
    Eqn9,
    /// `Σ_D (l + [r odd]) q^|μ| = Σ_O (l − (λ_1−1)/2) q^|λ|`.
    Eqn6,
}

impl SeriesIdentity {
    pub const ALL: [SeriesIdentity; 12] = [
        SeriesIdentity::Eq1,
        SeriesIdentity::Eq2,
        SeriesIdentity::Euler,
        SeriesIdentity::Andrews1,
        SeriesIdentity::Andrews2,
        SeriesIdentity::Lem2,
        SeriesIdentity::Lem3,
        SeriesIdentity::Lem4,
        SeriesIdentity::T4_1,
        SeriesIdentity::T4_2,
        SeriesIdentity::Eqn9,
        SeriesIdentity::Eqn6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesIdentity::Eq1 => "eq1",
            SeriesIdentity::Eq2 => "eq2",
            SeriesIdentity::Euler => "euler",
            SeriesIdentity::Andrews1 => "andrews1",
            SeriesIdentity::Andrews2 => "andrews2",
            SeriesIdentity::Lem2 => "lem2",
            SeriesIdentity::Lem3 => "lem3",
            SeriesIdentity::Lem4 => "lem4",
            SeriesIdentity::T4_1 => "t4_1",
            SeriesIdentity::T4_2 => "t4_2",
            SeriesIdentity::Eqn9 => "eqn9",
            SeriesIdentity::Eqn6 => "eqn6",
        }
    }

    pub fn sides(self, order: usize) -> Result<(TruncatedSeries, TruncatedSeries), SeriesError> {
        use SeriesBuilder as B;
        let b = |x: SeriesBuilder| x.build(order);
        let two = rat(2);
        Ok(match self {
            SeriesIdentity::Eq1 => (b(B::Eq1Lhs)?, b(B::Eq1Rhs)?),
            SeriesIdentity::Eq2 => (b(B::Eq2Lhs)?, b(B::Eq2Rhs)?),
            SeriesIdentity::Euler => (b(B::DistinctProduct)?, b(B::OddReciprocal)?),
            SeriesIdentity::Andrews1 => (b(B::Eq1Lhs)?, b(B::LargestPartDistinct)?),
            SeriesIdentity::Andrews2 => (b(B::Eq2Lhs)?, b(B::HalfLargestOdd)?),
            SeriesIdentity::Lem2 => (b(B::GfEvenRoot)?.add(&b(B::GfRootedDistinct)?)?, b(B::GfRootedOdd)?),
            SeriesIdentity::Lem3 => (b(B::GfRootedDistinct)?, b(B::SumLengthDistinct)?),
            SeriesIdentity::Lem4 => (b(B::GfRootedOdd)?, b(B::SumLengthOdd)?),
            SeriesIdentity::T4_1 => (
                b(B::GfAlmostDistinct)?,
                b(B::SumLengthOdd)?.scalar_mul(&two).sub(&b(B::SumLengthDistinct)?)?,
            ),
            SeriesIdentity::T4_2 => (b(B::GfEvenRoot)?, b(B::SumLengthOdd)?.sub(&b(B::SumLengthDistinct)?)?),
            SeriesIdentity::Eqn9 => (
                b(B::LargestPartDistinct)?.add(&b(B::SumLengthDistinct)?)?.add(&b(B::OddRankDistinct)?)?,
                b(B::SumLengthOdd)?.scalar_mul(&two),
            ),
            SeriesIdentity::Eqn6 => (
                b(B::SumLengthDistinct)?.add(&b(B::OddRankDistinct)?)?,
                b(B::SumLengthOdd)?.sub(&b(B::HalfLargestOdd)?)?,
            ),
        })
    }
}

impl fmt::Display for SeriesIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesIdentity {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace(['-', '.'], "_");
        SeriesIdentity::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .ok_or_else(|| SeriesError::UnknownBuilder(s.to_string()))
    }
}

/// Compares both sides of `id` for every coefficient `0..=order`. Both sides
/// must be integral.
pub fn verify_series(id: SeriesIdentity, order: usize) -> Result<VerificationReport, SeriesError> {
    let (lhs, rhs) = id.sides(order)?;
    Ok(VerificationReport::from_values(id.name(), "series", 0, lhs.to_integers()?, rhs.to_integers()?))
}

/// Compares coefficients `0..=order` of a builder with enumeration.
pub fn verify_builder_oracle(builder: SeriesBuilder, order: usize) -> Result<VerificationReport, SeriesError> {
    use rayon::prelude::*;
    let series = builder.build(order)?.to_integers()?;
    let oracle: Vec<BigInt> = (0..=order as u64).into_par_iter().map(|n| builder.enumeration_oracle(n)).collect();
    Ok(VerificationReport::from_values(format!("oracle:{}", builder.name()), "series", 0, series, oracle))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.to_integers().unwrap().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn ring_identities() {
        let n = 8;
        let one_minus_q = TruncatedSeries::from_integers([1, -1], n);
        let geometric = one_minus_q.reciprocal().unwrap();
        assert_eq!(ints(&geometric), vec![1; n + 1]);
        assert_eq!(one_minus_q.mul(&geometric).unwrap(), TruncatedSeries::one(n));
        let ones = TruncatedSeries::from_integers(vec![1; n + 1], n);
        assert_eq!(ints(&ones.mul(&ones).unwrap()), (1..=n as i64 + 1).collect::<Vec<_>>());
    }

    #[test]
    fn arithmetic_errors() {
        let a = TruncatedSeries::one(3);
        let b = TruncatedSeries::one(4);
        assert_eq!(a.add(&b), Err(SeriesError::OrderMismatch(3, 4)));
        assert_eq!(a.mul(&b), Err(SeriesError::OrderMismatch(3, 4)));
        assert_eq!(compare(&a, &b), Err(SeriesError::OrderMismatch(3, 4)));
        assert_eq!(TruncatedSeries::zero(3).reciprocal(), Err(SeriesError::NonUnitReciprocal));
        assert_eq!(a.truncate(2).order(), 2);
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(ints(&distinct_product(4)), [1, 1, 1, 2, 2]);
        assert_eq!(ints(&odd_reciprocal(4)), [1, 1, 1, 2, 2]);
        let empty = pochhammer(Monomial::q_pow(1), 1, Count::Finite(0), 5).unwrap();
        assert_eq!(empty, TruncatedSeries::one(5));
        let euler = pochhammer(Monomial::q_pow(1), 1, Count::Infinite, 3).unwrap();
        assert_eq!(ints(&euler), [1, -1, -1, 0]);
        assert_eq!(
            pochhammer(Monomial::q_pow(0), 1, Count::Infinite, 3),
            Err(SeriesError::NonPositiveExponent(0))
        );
        // (q;q²)_2 = (1 − q)(1 − q³)
        let finite = pochhammer(Monomial::q_pow(1), 2, Count::Finite(2), 5).unwrap();
        assert_eq!(ints(&finite), [1, -1, 0, -1, 1, 0]);
    }

    #[test]
    fn builder_small_coefficients() {
        assert_eq!(SeriesBuilder::GfRootedDistinct.build(4).unwrap().coeff(4), &rat(3));
        assert_eq!(SeriesBuilder::GfRootedOdd.build(4).unwrap().coeff(4), &rat(6));
        assert_eq!(SeriesBuilder::GfAlmostDistinct.build(4).unwrap().coeff(4), &rat(9));
        assert_eq!(ints(&SeriesBuilder::RankParity.build(2).unwrap()), [1, 1, -1]);
        assert_eq!(SeriesBuilder::Eq1Lhs.build(0), Err(SeriesError::ZeroOrder));
    }

    #[test]
    fn ramanujan_sides_have_halves_before_cancellation() {
        let order = 6;
        let p = distinct_product(order);
        let bracket = lambert(1.., order).sub(&TruncatedSeries::one(order).scalar_mul(&half())).unwrap();
        assert!(!p.mul(&bracket).unwrap().is_integral());
        assert!(SeriesBuilder::Eq1Rhs.build(order).unwrap().is_integral());
        assert!(SeriesBuilder::Eq2Rhs.build(order).unwrap().is_integral());
    }

    #[test]
    fn display_form() {
        let s = TruncatedSeries::from_integers([1, 1, -1, 0, 2], 4);
        assert_eq!(s.to_string(), "1 + q - q^2 + 2 q^4 + O(q^5)");
        assert_eq!(TruncatedSeries::zero(2).to_string(), "0 + O(q^3)");
        let h = TruncatedSeries::one(1).scalar_mul(&half()).neg();
        assert_eq!(h.to_string(), "-1/2 + O(q^2)");
        assert_eq!(h.coefficient_strings(), ["-1/2", "0"]);
        assert!(matches!(h.to_integers(), Err(SeriesError::NonIntegral { index: 0, .. })));
    }

    #[test]
    fn names_parse() {
        for b in SeriesBuilder::ALL {
            assert_eq!(b.name().parse::<SeriesBuilder>().unwrap(), b);
        }
        for id in SeriesIdentity::ALL {
            assert_eq!(id.name().parse::<SeriesIdentity>().unwrap(), id);
        }
        assert!("nope".parse::<SeriesBuilder>().is_err());
    }
}
