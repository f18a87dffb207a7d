//! Weighted partition counts and the identities relating them.
//!
//! Each identity is checked two ways where possible: by summing both sides
//! over enumerated classes for every `n` in a range, and, for the identities
//! that come from an explicit bijection, element by element along the map.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bijections::{self, BijectionError};
use crate::partition::{self, Member, PartKind, Partition, PartitionClass, RootedPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("identity {0} has no bijective certificate")]
    NotConstructive(IdentityId),
    #[error("n_max must be at least 1")]
    EmptyRange,
    #[error(transparent)]
    Bijection(#[from] BijectionError),
}

/// Statistics summed over a partition class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightFunction {
    /// `μ_1`
    LargestPart,
    /// `2μ_1 + 1`
    TwiceLargestPlusOne,
    /// `(λ_1 − 1)/2 + l(λ)`
    HalfLargestPlusLength,
    /// `λ_1 + 2l(λ)`
    LargestPlusTwiceLength,
    /// `μ_1 − l(μ) + (1 + (−1)^{r(μ)})/2`
    RankAdjusted,
    /// `l(μ) + μ_1 + (1 − (−1)^{r(μ)})/2`
    LengthPlusLargestPlusOddRank,
    /// `2l(λ)`
    TwiceLength,
    /// `l(μ) + (1 − (−1)^{r(μ)})/2`
    LengthPlusOddRank,
    /// `l(λ) − (λ_1 − 1)/2`
    LengthMinusHalfLargest,
    /// `l(λ)`
    Length,
    /// `(λ_1 − 1)/2`
    HalfLargestMinus,
    /// `1`
    Unit,
}

impl WeightFunction {
    /// Evaluates the statistic. Every variant except [`WeightFunction::Unit`]
    /// is 0 on the empty partition.
    pub fn eval(self, p: &Partition) -> i64 {
        if p.is_empty() {
            return i64::from(self == WeightFunction::Unit);
        }
        let largest = i64::from(p.largest());
        let len = p.len() as i64;
        let odd_rank = p.rank().rem_euclid(2);
        let even_rank = 1 - odd_rank;
        let half = (largest - 1).div_euclid(2);
        match self {
            WeightFunction::LargestPart => largest,
            WeightFunction::TwiceLargestPlusOne => 2 * largest + 1,
            WeightFunction::HalfLargestPlusLength => half + len,
            WeightFunction::LargestPlusTwiceLength => largest + 2 * len,
            WeightFunction::RankAdjusted => largest - len + even_rank,
            WeightFunction::LengthPlusLargestPlusOddRank => len + largest + odd_rank,
            WeightFunction::TwiceLength => 2 * len,
            WeightFunction::LengthPlusOddRank => len + odd_rank,
            WeightFunction::LengthMinusHalfLargest => len - half,
            WeightFunction::Length => len,
            WeightFunction::HalfLargestMinus => half,
            WeightFunction::Unit => 1,
        }
    }
}

/// Sum of `w` over the members of `class` of weight `n`. Rooted members are
/// weighed by their underlying multiset of parts.
pub fn weighted_sum(n: u64, class: PartitionClass, w: WeightFunction) -> BigInt {
    partition::enumerate(n, class).map(|m| BigInt::from(w.eval(&m.flatten()))).sum()
}

fn count(n: u64, class: PartitionClass) -> BigInt {
    BigInt::from(partition::count(n, class))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    Euler,
    T1,
    T2,
    Thm1,
    Thm2,
    Lem1,
    Lem2,
    O1,
    O2,
    Lem3,
    Lem4,
    T4_1,
    T4_2,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::Euler,
        IdentityId::T1,
        IdentityId::T2,
        IdentityId::Thm1,
        IdentityId::Thm2,
        IdentityId::Lem1,
        IdentityId::Lem2,
        IdentityId::O1,
        IdentityId::O2,
        IdentityId::Lem3,
        IdentityId::Lem4,
        IdentityId::T4_1,
        IdentityId::T4_2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Euler => "euler",
            IdentityId::T1 => "t1",
            IdentityId::T2 => "t2",
            IdentityId::Thm1 => "thm1",
            IdentityId::Thm2 => "thm2",
            IdentityId::Lem1 => "lem1",
            IdentityId::Lem2 => "lem2",
            IdentityId::O1 => "o1",
            IdentityId::O2 => "o2",
            IdentityId::Lem3 => "lem3",
            IdentityId::Lem4 => "lem4",
            IdentityId::T4_1 => "t4_1",
            IdentityId::T4_2 => "t4_2",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityId::Euler => "#distinct = #odd",
            IdentityId::T1 => "sum of largest part over distinct = sum of (l1-1)/2 + len over odd",
            IdentityId::T2 => "sum of rank + [rank even] over distinct = sum of largest part over odd",
            IdentityId::Thm1 => "sum of len + largest + [rank odd] over distinct = sum of 2 len over odd",
            IdentityId::Thm2 => "sum of len + [rank odd] over distinct = sum of len - (l1-1)/2 over odd",
            IdentityId::Lem1 => "#rooted almost distinct + #rooted distinct = 2 #rooted odd",
            IdentityId::Lem2 => "#rooted almost distinct even root + #rooted distinct = #rooted odd",
            IdentityId::O1 => "#almost distinct odd root = #almost distinct even root + #rooted distinct",
            IdentityId::O2 => "#almost distinct odd root = #rooted odd",
            IdentityId::Lem3 => "#rooted distinct = sum of len over distinct",
            IdentityId::Lem4 => "#rooted odd = sum of len over odd",
            IdentityId::T4_1 => "#rooted almost distinct = 2 sum len over odd - sum len over distinct",
            IdentityId::T4_2 => "#almost distinct even root = sum len over odd - sum len over distinct",
        }
    }

    /// Identities proved by an explicit correspondence.
    pub fn is_constructive(self) -> bool {
        matches!(self, IdentityId::T1 | IdentityId::T2 | IdentityId::O1 | IdentityId::O2)
    }

    /// Left and right sides at `n`.
    pub fn sides(self, n: u64) -> (BigInt, BigInt) {
        use PartitionClass as C;
        use WeightFunction as W;
        let d = |w| weighted_sum(n, C::Distinct, w);
        let o = |w| weighted_sum(n, C::Odd, w);
        match self {
            IdentityId::Euler => (count(n, C::Distinct), count(n, C::Odd)),
            IdentityId::T1 => (d(W::LargestPart), o(W::HalfLargestPlusLength)),
            IdentityId::T2 => (d(W::RankAdjusted), o(W::LargestPart)),
            IdentityId::Thm1 => (d(W::LengthPlusLargestPlusOddRank), o(W::TwiceLength)),
            IdentityId::Thm2 => (d(W::LengthPlusOddRank), o(W::LengthMinusHalfLargest)),
            IdentityId::Lem1 => (
                count(n, C::RootedAlmostDistinct) + count(n, C::RootedDistinct),
                2 * count(n, C::RootedOdd),
            ),
            IdentityId::Lem2 => (
                count(n, C::RootedAlmostDistinctEvenRoot) + count(n, C::RootedDistinct),
                count(n, C::RootedOdd),
            ),
            IdentityId::O1 => (
                count(n, C::RootedAlmostDistinctOddRoot),
                count(n, C::RootedAlmostDistinctEvenRoot) + count(n, C::RootedDistinct),
            ),
            IdentityId::O2 => (count(n, C::RootedAlmostDistinctOddRoot), count(n, C::RootedOdd)),
            IdentityId::Lem3 => (count(n, C::RootedDistinct), d(W::Length)),
            IdentityId::Lem4 => (count(n, C::RootedOdd), o(W::Length)),
            IdentityId::T4_1 => (count(n, C::RootedAlmostDistinct), 2 * o(W::Length) - d(W::Length)),
            IdentityId::T4_2 => (count(n, C::RootedAlmostDistinctEvenRoot), o(W::Length) - d(W::Length)),
        }
    }

    /// Per-element arithmetic behind the derived identities: returns the first
    /// partition where the statistic decomposition fails.
    fn derivation_check(self, n: u64) -> Option<String> {
        use WeightFunction as W;
        let (distinct_parts, odd_parts): (Vec<(W, W, W, i64)>, Vec<(W, W, W, i64)>) = match self {
            // (2μ_1+1) − (rank-adjusted) = thm1 statistic; λ_1+2l − λ_1 = 2l
            IdentityId::Thm1 => (
                vec![(W::TwiceLargestPlusOne, W::RankAdjusted, W::LengthPlusLargestPlusOddRank, 0)],
                vec![(W::LargestPlusTwiceLength, W::LargestPart, W::TwiceLength, 0)],
            ),
            // (μ_1+1) − (rank-adjusted) = thm2 statistic; ((λ_1−1)/2+l) + 1 − λ_1
            IdentityId::Thm2 => (
                vec![(W::LargestPart, W::RankAdjusted, W::LengthPlusOddRank, 1)],
                vec![(W::HalfLargestPlusLength, W::LargestPart, W::LengthMinusHalfLargest, 1)],
            ),
            _ => return None,
        };
        let check = |kind: PartKind, rules: &[(W, W, W, i64)]| {
            partition::partitions(n, kind).find_map(|p| {
                rules.iter().find_map(|&(a, b, c, k)| {
                    (a.eval(&p) - b.eval(&p) + k != c.eval(&p))
                        .then(|| format!("{a:?} - {b:?} + {k} != {c:?} at {p}"))
                })
            })
        };
        check(PartKind::Distinct, &distinct_parts).or_else(|| check(PartKind::Odd, &odd_parts))
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace(['-', '.'], "_");
        let key = match key.as_str() {
            "o_1" => "o1",
            "o_2" => "o2",
            "t4_1" | "t41" => "t4_1",
            "t4_2" | "t42" => "t4_2",
            other => other,
        };
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .ok_or_else(|| IdentityError::UnknownIdentity(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Pass,
    FailAt { n: u64, lhs: String, rhs: String },
}

/// Both sides of one identity over a range of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub method: &'static str,
    /// First and last `n` (or series exponent) checked.
    pub n_range: (u64, u64),
    pub lhs_values: Vec<BigInt>,
    pub rhs_values: Vec<BigInt>,
    pub status: Status,
    /// Why a check failed when the side values alone do not show it.
    pub detail: Option<String>,
}

impl VerificationReport {
    /// Builds a report, locating the first index where the sides differ.
    pub fn from_values(
        identity: impl Into<String>,
        method: &'static str,
        start: u64,
        lhs_values: Vec<BigInt>,
        rhs_values: Vec<BigInt>,
    ) -> Self {
        assert_eq!(lhs_values.len(), rhs_values.len());
        let end = start + lhs_values.len() as u64 - 1;
        let status = lhs_values
            .iter()
            .zip(&rhs_values)
            .enumerate()
            .find(|(_, (l, r))| l != r)
            .map(|(i, (l, r))| Status::FailAt { n: start + i as u64, lhs: l.to_string(), rhs: r.to_string() })
            .unwrap_or(Status::Pass);
        Self {
            identity: identity.into(),
            method,
            n_range: (start, end),
            lhs_values,
            rhs_values,
            status,
            detail: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `(n, lhs, rhs)` rows in order.
    pub fn rows(&self) -> impl Iterator<Item = (u64, &BigInt, &BigInt)> {
        let start = self.n_range.0;
        self.lhs_values.iter().zip(&self.rhs_values).enumerate().map(move |(i, (l, r))| (start + i as u64, l, r))
    }
}

/// Evaluates both sides of `id` for every `n` in `1..=n_max` by enumeration.
pub fn verify_theorem(id: IdentityId, n_max: u64) -> Result<VerificationReport, IdentityError> {
    if n_max == 0 {
        return Err(IdentityError::EmptyRange);
    }
    let per_n: Vec<((BigInt, BigInt), Option<String>)> =
        (1..=n_max).into_par_iter().map(|n| (id.sides(n), id.derivation_check(n))).collect();
    let detail = per_n.iter().enumerate().find_map(|(i, (_, d))| d.clone().map(|d| (i as u64 + 1, d)));
    let (lhs, rhs): (Vec<BigInt>, Vec<BigInt>) = per_n.into_iter().map(|(s, _)| s).unzip();
    let mut report = VerificationReport::from_values(id.name(), "enum", 1, lhs, rhs);
    if let Some((n, d)) = detail {
        if report.passed() {
            let i = (n - 1) as usize;
            report.status = Status::FailAt {
                n,
                lhs: report.lhs_values[i].to_string(),
                rhs: report.rhs_values[i].to_string(),
            };
        }
        report.detail = Some(d);
    }
    Ok(report)
}

/// One element of a bijective certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateEntry {
    /// `source` maps to `image`; the transported statistics must agree.
    Matched { source: Member, image: Member, source_stat: i64, image_stat: i64 },
    /// Element counted on one side without a partner (the distinct rooted
    /// partitions left fixed by the root-moving involution).
    Unmatched { element: Member },
    /// The certificate broke at this element.
    Violation { element: Member, reason: String },
}

impl CertificateEntry {
    pub fn is_violation(&self) -> bool {
        matches!(self, CertificateEntry::Violation { .. })
    }
}

/// Pairs every element of weight `n` with its image under the map proving
/// `id`, checking the transported statistic per element. Stops after the
/// first violation.
pub fn certify_bijectively(id: IdentityId, n: u64) -> Result<Vec<CertificateEntry>, IdentityError> {
    let entries = match id {
        IdentityId::T1 => certify_plain(n, |lam| {
            let mu = bijections::sylvester(lam)?;
            let src = WeightFunction::HalfLargestPlusLength.eval(lam);
            let img = WeightFunction::LargestPart.eval(&mu);
            let back = bijections::sylvester_inv(&mu)?;
            Ok((mu, src, img, back))
        }),
        IdentityId::T2 => certify_plain(n, |lam| {
            let mu = bijections::iterated_dyson(lam)?;
            let src = WeightFunction::LargestPart.eval(lam);
            let img = WeightFunction::RankAdjusted.eval(&mu);
            let back = bijections::iterated_dyson_inv(&mu)?;
            Ok((mu, src, img, back))
        }),
        IdentityId::O1 => certify_tau(n),
        IdentityId::O2 => certify_sigma(n),
        other => return Err(IdentityError::NotConstructive(other)),
    };
    Ok(entries)
}

type PlainStep = Result<(Partition, i64, i64, Partition), BijectionError>;

fn certify_plain(n: u64, map: impl Fn(&Partition) -> PlainStep) -> Vec<CertificateEntry> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for lam in partition::partitions(n, PartKind::Odd) {
        let source = Member::Plain(lam.clone());
        let (mu, src, img, back) = match map(&lam) {
            Ok(step) => step,
            Err(e) => {
                out.push(CertificateEntry::Violation { element: source, reason: e.to_string() });
                return out;
            }
        };
        let reason = if !mu.has_distinct_parts() || mu.weight() != n {
            Some(format!("image {mu} is not a distinct-part partition of {n}"))
        } else if back != lam {
            Some(format!("inverse sends {mu} to {back}"))
        } else if src != img {
            Some(format!("statistic {src} != {img}"))
        } else if !seen.insert(mu.clone()) {
            Some(format!("image {mu} hit twice"))
        } else {
            None
        };
        if let Some(reason) = reason {
            out.push(CertificateEntry::Violation { element: source, reason });
            return out;
        }
        out.push(CertificateEntry::Matched { source, image: Member::Plain(mu), source_stat: src, image_stat: img });
    }
    if seen.len() as u64 != partition::count(n, PartitionClass::Distinct) {
        out.push(CertificateEntry::Violation {
            element: Member::Plain(Partition::empty()),
            reason: format!("image misses {} distinct-part partitions", partition::count(n, PartitionClass::Distinct) - seen.len() as u64),
        });
    }
    out
}

fn certify_tau(n: u64) -> Vec<CertificateEntry> {
    let mut out = Vec::new();
    let mut hit = HashSet::new();
    for rp in partition::rooted_partitions(n, PartitionClass::RootedAlmostDistinctOddRoot) {
        if rp.is_distinct() {
            out.push(CertificateEntry::Unmatched { element: Member::Rooted(rp) });
            continue;
        }
        let source = Member::Rooted(rp.clone());
        let image = match bijections::tau(&rp) {
            Ok(img) => img,
            Err(e) => {
                out.push(CertificateEntry::Violation { element: source, reason: e.to_string() });
                return out;
            }
        };
        let reason = if image.root_size() % 2 != 0 || !image.is_almost_distinct() || image.weight() != n {
            Some(format!("image {image} is not almost distinct with even root size"))
        } else if bijections::tau(&image).as_ref() != Ok(&rp) {
            Some(format!("tau is not an involution at {rp}"))
        } else if !hit.insert(image.clone()) {
            Some(format!("image {image} hit twice"))
        } else {
            None
        };
        if let Some(reason) = reason {
            out.push(CertificateEntry::Violation { element: source, reason });
            return out;
        }
        out.push(CertificateEntry::Matched {
            source,
            image: Member::Rooted(image.clone()),
            source_stat: i64::from(rp.root_size() % 2),
            image_stat: i64::from(image.root_size() % 2),
        });
    }
    let even = partition::count(n, PartitionClass::RootedAlmostDistinctEvenRoot);
    if hit.len() as u64 != even {
        out.push(CertificateEntry::Violation {
            element: Member::Rooted(RootedPartition::new(Partition::empty(), 1, 1).expect("valid")),
            reason: format!("tau covers {} of {even} even-root partitions", hit.len()),
        });
    }
    out
}

fn certify_sigma(n: u64) -> Vec<CertificateEntry> {
    let mut out = Vec::new();
    let mut hit = HashSet::new();
    for rp in partition::rooted_partitions(n, PartitionClass::RootedAlmostDistinctOddRoot) {
        let source = Member::Rooted(rp.clone());
        let step = bijections::sigma(&rp).and_then(|img| bijections::sigma_inv(&img).map(|back| (img, back)));
        let (image, back) = match step {
            Ok(s) => s,
            Err(e) => {
                out.push(CertificateEntry::Violation { element: source, reason: e.to_string() });
                return out;
            }
        };
        let reason = if !image.is_odd() || image.weight() != n {
            Some(format!("image {image} is not an odd rooted partition of {n}"))
        } else if back != rp {
            Some(format!("inverse sends {image} to {back}"))
        } else if !hit.insert(image.clone()) {
            Some(format!("image {image} hit twice"))
        } else {
            None
        };
        if let Some(reason) = reason {
            out.push(CertificateEntry::Violation { element: source, reason });
            return out;
        }
        out.push(CertificateEntry::Matched {
            source,
            image: Member::Rooted(image),
            source_stat: rp.weight() as i64,
            image_stat: n as i64,
        });
    }
    let odd = partition::count(n, PartitionClass::RootedOdd);
    if hit.len() as u64 != odd {
        out.push(CertificateEntry::Violation {
            element: Member::Rooted(RootedPartition::new(Partition::empty(), 1, 1).expect("valid")),
            reason: format!("sigma covers {} of {odd} odd rooted partitions", hit.len()),
        });
    }
    out
}
