//! Partitions, rooted partitions and class-filtered enumeration.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive parts. A
//! [`RootedPartition`] pairs a base partition with a nonempty block of equal
//! parts (the root), written with barred parts such as `3~+1`.
//!
//! Enumeration order is fixed: members are listed by their part multiset in
//! decreasing lexicographic order, and rooted members sharing a multiset are
//! ordered by `(root_part, root_size)` descending.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive, found {0}")]
    NonPositivePart(i64),
    #[error("parts must be weakly decreasing: {0} is followed by {1}")]
    NotDecreasing(u32, u32),
    #[error("cannot parse part {0:?}")]
    Parse(String),
    #[error("root block must be nonempty with a positive part, got {root_part} x {root_size}")]
    EmptyRoot { root_part: u32, root_size: u32 },
    #[error("unknown partition class {0:?}")]
    UnknownClass(String),
}

/// A weakly decreasing finite sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(PartitionError::NotDecreasing(w[0], w[1]));
            }
        }
        if parts.last() == Some(&0) {
            return Err(PartitionError::NonPositivePart(0));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts into decreasing order; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// The largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Dyson's rank: largest part minus the number of parts. The empty
    /// partition has rank 0.
    pub fn rank(&self) -> i64 {
        i64::from(self.largest()) - self.len() as i64
    }

    /// Number of parts equal to `d`.
    pub fn multiplicity(&self, d: u32) -> usize {
        self.parts.iter().filter(|&&p| p == d).count()
    }

    /// Transpose of the Young diagram: the i-th part counts parts `>= i`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.largest() as usize;
        let mut out = vec![0u32; cols];
        for &p in &self.parts {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Self { parts: out }
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn has_odd_parts(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// Distinct values paired with their multiplicities, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Removes `count` copies of `value`; `None` if fewer are present.
    pub fn without(&self, value: u32, count: usize) -> Option<Partition> {
        if self.multiplicity(value) < count {
            return None;
        }
        let mut removed = 0;
        let parts = self
            .parts
            .iter()
            .copied()
            .filter(|&p| {
                if p == value && removed < count {
                    removed += 1;
                    false
                } else {
                    true
                }
            })
            .collect();
        Some(Self { parts })
    }

    /// Inserts `count` copies of `value` at their sorted position.
    pub fn with(&self, value: u32, count: usize) -> Partition {
        let at = self.parts.partition_point(|&p| p >= value);
        let mut parts = Vec::with_capacity(self.len() + count);
        parts.extend_from_slice(&self.parts[..at]);
        parts.extend(std::iter::repeat(value).take(count));
        parts.extend_from_slice(&self.parts[at..]);
        Self { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses `7,7,5,5,3,1`. The empty string and `()` denote the empty partition.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let v: i64 = tok.parse().map_err(|_| PartitionError::Parse(tok.to_string()))?;
            if v <= 0 {
                return Err(PartitionError::NonPositivePart(v));
            }
            let v = u32::try_from(v).map_err(|_| PartitionError::Parse(tok.to_string()))?;
            parts.push(v);
        }
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// A pair `(base, root)` where the root is `root_size` copies of `root_part`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RootedPartition {
    #[serde(rename = "parts")]
    base: Partition,
    root_part: u32,
    root_size: u32,
}

impl RootedPartition {
    pub fn new(base: Partition, root_part: u32, root_size: u32) -> Result<Self, PartitionError> {
        if root_part == 0 || root_size == 0 {
            return Err(PartitionError::EmptyRoot { root_part, root_size });
        }
        Ok(Self { base, root_part, root_size })
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn root_part(&self) -> u32 {
        self.root_part
    }

    pub fn root_size(&self) -> u32 {
        self.root_size
    }

    /// The root block as an ordinary partition.
    pub fn root(&self) -> Partition {
        Partition::from_sorted_unchecked(vec![self.root_part; self.root_size as usize])
    }

    pub fn weight(&self) -> u64 {
        self.base.weight() + u64::from(self.root_part) * u64::from(self.root_size)
    }

    /// The union of base and root parts.
    pub fn flatten(&self) -> Partition {
        self.base.with(self.root_part, self.root_size as usize)
    }

    /// Every part of the union is distinct.
    pub fn is_distinct(&self) -> bool {
        self.root_size == 1 && self.base.has_distinct_parts() && self.base.multiplicity(self.root_part) == 0
    }

    /// The base has distinct parts.
    pub fn is_almost_distinct(&self) -> bool {
        self.base.has_distinct_parts()
    }

    pub fn is_odd(&self) -> bool {
        self.root_part % 2 == 1 && self.base.has_odd_parts()
    }
}

impl fmt::Display for RootedPartition {
    /// Barred parts carry a trailing `~`; within equal values the barred copies
    /// come first, e.g. `2~+2` and `2+1~+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        let mut rooted_done = false;
        for &p in self.base.parts() {
            if !rooted_done && p <= self.root_part {
                terms.extend((0..self.root_size).map(|_| format!("{}~", self.root_part)));
                rooted_done = true;
            }
            terms.push(p.to_string());
        }
        if !rooted_done {
            terms.extend((0..self.root_size).map(|_| format!("{}~", self.root_part)));
        }
        f.write_str(&terms.join("+"))
    }
}

/// Canonical ordering: multiset first (descending lex), then root descending.
fn rooted_order(a: &RootedPartition, b: &RootedPartition) -> Ordering {
    b.flatten()
        .cmp(&a.flatten())
        .then_with(|| (b.root_part, b.root_size).cmp(&(a.root_part, a.root_size)))
}

impl PartialOrd for RootedPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by enumeration position: earlier in the canonical listing is `Less`.
impl Ord for RootedPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        rooted_order(self, other)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartitionClass {
    All,
    Distinct,
    Odd,
    RootedAll,
    RootedDistinct,
    RootedOdd,
    RootedAlmostDistinct,
    RootedAlmostDistinctEvenRoot,
    RootedAlmostDistinctOddRoot,
}

impl PartitionClass {
    pub const ALL: [PartitionClass; 9] = [
        PartitionClass::All,
        PartitionClass::Distinct,
        PartitionClass::Odd,
        PartitionClass::RootedAll,
        PartitionClass::RootedDistinct,
        PartitionClass::RootedOdd,
        PartitionClass::RootedAlmostDistinct,
        PartitionClass::RootedAlmostDistinctEvenRoot,
        PartitionClass::RootedAlmostDistinctOddRoot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PartitionClass::All => "all",
            PartitionClass::Distinct => "distinct",
            PartitionClass::Odd => "odd",
            PartitionClass::RootedAll => "rooted-all",
            PartitionClass::RootedDistinct => "rooted-distinct",
            PartitionClass::RootedOdd => "rooted-odd",
            PartitionClass::RootedAlmostDistinct => "rooted-almost-distinct",
            PartitionClass::RootedAlmostDistinctEvenRoot => "rooted-almost-distinct-even-root",
            PartitionClass::RootedAlmostDistinctOddRoot => "rooted-almost-distinct-odd-root",
        }
    }

    pub fn is_rooted(self) -> bool {
        !matches!(self, PartitionClass::All | PartitionClass::Distinct | PartitionClass::Odd)
    }

    pub fn contains(self, member: &Member) -> bool {
        match (self, member) {
            (PartitionClass::All, Member::Plain(_)) => true,
            (PartitionClass::Distinct, Member::Plain(p)) => p.has_distinct_parts(),
            (PartitionClass::Odd, Member::Plain(p)) => p.has_odd_parts(),
            (PartitionClass::RootedAll, Member::Rooted(_)) => true,
            (PartitionClass::RootedDistinct, Member::Rooted(r)) => r.is_distinct(),
            (PartitionClass::RootedOdd, Member::Rooted(r)) => r.is_odd(),
            (PartitionClass::RootedAlmostDistinct, Member::Rooted(r)) => r.is_almost_distinct(),
            (PartitionClass::RootedAlmostDistinctEvenRoot, Member::Rooted(r)) => {
                r.is_almost_distinct() && r.root_size % 2 == 0
            }
            (PartitionClass::RootedAlmostDistinctOddRoot, Member::Rooted(r)) => {
                r.is_almost_distinct() && r.root_size % 2 == 1
            }
            _ => false,
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PartitionClass {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        PartitionClass::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| PartitionError::UnknownClass(s.to_string()))
    }
}

/// One element of an enumerated class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Member {
    Plain(Partition),
    Rooted(RootedPartition),
}

impl Member {
    pub fn weight(&self) -> u64 {
        match self {
            Member::Plain(p) => p.weight(),
            Member::Rooted(r) => r.weight(),
        }
    }

    /// The underlying multiset of parts as an ordinary partition.
    pub fn flatten(&self) -> Partition {
        match self {
            Member::Plain(p) => p.clone(),
            Member::Rooted(r) => r.flatten(),
        }
    }

    pub fn as_plain(&self) -> Option<&Partition> {
        match self {
            Member::Plain(p) => Some(p),
            Member::Rooted(_) => None,
        }
    }

    pub fn as_rooted(&self) -> Option<&RootedPartition> {
        match self {
            Member::Rooted(r) => Some(r),
            Member::Plain(_) => None,
        }
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Plain(p) => p.fmt(f),
            Member::Rooted(r) => r.fmt(f),
        }
    }
}

/// Restriction on the parts produced by [`Partitions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartKind {
    Any,
    Distinct,
    Odd,
}

impl PartKind {
    fn admits(self, part: u32) -> bool {
        part > 0 && (self != PartKind::Odd || part % 2 == 1)
    }

    /// Largest part allowed after `part`.
    fn next_cap(self, part: u32) -> u32 {
        match self {
            PartKind::Distinct => part - 1,
            _ => part,
        }
    }

    /// Whether `rest` can be completed with parts no larger than `cap`.
    fn completable(self, rest: u64, cap: u32) -> bool {
        let cap = u64::from(cap);
        match self {
            PartKind::Any => rest == 0 || cap >= 1,
            PartKind::Odd => rest == 0 || cap >= 1,
            PartKind::Distinct => rest <= cap * (cap + 1) / 2,
        }
    }
}

/// Partitions of `n` restricted by a [`PartKind`], in decreasing
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    kind: PartKind,
    n: u64,
    parts: Vec<u32>,
    remaining: u64,
    started: bool,
    done: bool,
}

impl Partitions {
    pub fn new(n: u64, kind: PartKind) -> Self {
        Self { kind, n, parts: Vec::new(), remaining: n, started: false, done: false }
    }

    fn cap_after(&self, len: usize) -> u32 {
        match len {
            0 => u32::try_from(self.n).unwrap_or(u32::MAX),
            _ => self.kind.next_cap(self.parts[len - 1]),
        }
    }

    /// Largest admissible part `<= upper` leaving a completable remainder.
    fn best_part(&self, upper: u64, rest: u64) -> Option<u32> {
        let mut y = upper.min(rest);
        while y >= 1 {
            let part = y as u32;
            if self.kind.admits(part) && self.kind.completable(rest - y, self.kind.next_cap(part)) {
                return Some(part);
            }
            y -= 1;
        }
        None
    }

    /// Greedily appends the lexicographically largest completion.
    fn fill(&mut self) -> bool {
        while self.remaining > 0 {
            let cap = u64::from(self.cap_after(self.parts.len()));
            match self.best_part(cap, self.remaining) {
                Some(p) => {
                    self.parts.push(p);
                    self.remaining -= u64::from(p);
                }
                None => return false,
            }
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.fill() {
                return Some(Partition::from_sorted_unchecked(self.parts.clone()));
            }
            self.done = true;
            return None;
        }
        while let Some(last) = self.parts.pop() {
            self.remaining += u64::from(last);
            if last > 1 {
                if let Some(p) = self.best_part(u64::from(last) - 1, self.remaining) {
                    self.parts.push(p);
                    self.remaining -= u64::from(p);
                    if self.fill() {
                        return Some(Partition::from_sorted_unchecked(self.parts.clone()));
                    }
                    // greedy completion is always feasible once `best_part` succeeded
                    unreachable!("completable partition prefix failed to fill");
                }
            }
        }
        self.done = true;
        None
    }
}

/// All partitions of `n` with the given part restriction.
pub fn partitions(n: u64, kind: PartKind) -> Partitions {
    Partitions::new(n, kind)
}

/// Rooted partitions of `n` in the given rooted class.
///
/// Panics if `class` is not a rooted class.
pub fn rooted_partitions(n: u64, class: PartitionClass) -> impl Iterator<Item = RootedPartition> {
    assert!(class.is_rooted(), "{class} is not a rooted class");
    let kind = match class {
        PartitionClass::RootedDistinct => PartKind::Distinct,
        PartitionClass::RootedOdd => PartKind::Odd,
        _ => PartKind::Any,
    };
    partitions(n, kind).filter(|p| !p.is_empty()).flat_map(move |p| {
        let groups = p.multiplicities();
        // Almost-distinct classes allow at most one repeated value outside the root.
        let repeated = groups.iter().filter(|(_, m)| *m > 1).count();
        let mut out = Vec::new();
        for &(value, mult) in &groups {
            for copies in (1..=mult).rev() {
                let keep = match class {
                    PartitionClass::RootedAll | PartitionClass::RootedOdd | PartitionClass::RootedDistinct => true,
                    _ => {
                        let base_distinct =
                            mult - copies <= 1 && (repeated == 0 || (repeated == 1 && mult > 1));
                        base_distinct
                            && match class {
                                PartitionClass::RootedAlmostDistinctEvenRoot => copies % 2 == 0,
                                PartitionClass::RootedAlmostDistinctOddRoot => copies % 2 == 1,
                                _ => true,
                            }
                    }
                };
                if keep {
                    let base = p.without(value, copies).expect("multiplicity checked");
                    out.push(RootedPartition { base, root_part: value, root_size: copies as u32 });
                }
            }
        }
        out
    })
}

/// Every member of `class` with weight `n`, in canonical order.
pub fn enumerate(n: u64, class: PartitionClass) -> Box<dyn Iterator<Item = Member>> {
    match class {
        PartitionClass::All => Box::new(partitions(n, PartKind::Any).map(Member::Plain)),
        PartitionClass::Distinct => Box::new(partitions(n, PartKind::Distinct).map(Member::Plain)),
        PartitionClass::Odd => Box::new(partitions(n, PartKind::Odd).map(Member::Plain)),
        rooted => Box::new(rooted_partitions(n, rooted).map(Member::Rooted)),
    }
}

pub fn count(n: u64, class: PartitionClass) -> u64 {
    enumerate(n, class).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(p(&[7, 7, 5, 5, 3, 1]).weight(), 28);
        assert_eq!(Partition::empty().weight(), 0);
        assert_eq!(p(&[8, 6, 2, 1]).weight(), 17);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(p(&[5, 4, 3, 3, 2, 1]).rank(), -1);
        assert_eq!(Partition::empty().rank(), 0);
        assert_eq!(p(&[4]).rank(), 3);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2, 2]).conjugate(), p(&[3, 3]));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(p(&[7, 7, 5, 5, 3, 1]).multiplicity(5), 2);
        assert_eq!(p(&[1, 1, 1, 1]).multiplicity(1), 4);
        assert_eq!(p(&[3, 1]).multiplicity(2), 0);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Partition::new(vec![1, 2]), Err(PartitionError::NotDecreasing(1, 2)));
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3,-1".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!(RootedPartition::new(Partition::empty(), 2, 0).is_err());
    }

    #[test]
    fn display_round_trip() {
        let q = p(&[7, 7, 5, 5, 3, 1]);
        assert_eq!(q.to_string(), "7,7,5,5,3,1");
        assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
    }

    #[test]
    fn rooted_display_bars_first_within_equal_values() {
        let r = RootedPartition::new(p(&[2]), 2, 1).unwrap();
        assert_eq!(r.to_string(), "2~+2");
        let r = RootedPartition::new(p(&[2, 1]), 1, 1).unwrap();
        assert_eq!(r.to_string(), "2+1~+1");
        let r = RootedPartition::new(Partition::empty(), 4, 1).unwrap();
        assert_eq!(r.to_string(), "4~");
        let r = RootedPartition::new(p(&[3]), 1, 1).unwrap();
        assert_eq!(r.to_string(), "3+1~");
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(4, PartitionClass::RootedAll), 12);
        assert_eq!(count(4, PartitionClass::RootedDistinct), 3);
        assert_eq!(count(4, PartitionClass::RootedAlmostDistinct), 9);
        assert_eq!(count(4, PartitionClass::RootedOdd), 6);
        assert_eq!(count(4, PartitionClass::Distinct), 2);
        assert_eq!(count(4, PartitionClass::Odd), 2);
        assert_eq!(count(4, PartitionClass::RootedAlmostDistinctOddRoot), 6);
        assert_eq!(count(4, PartitionClass::RootedAlmostDistinctEvenRoot), 3);
    }

    #[test]
    fn rooted_distinct_of_four() {
        let got: Vec<String> =
            rooted_partitions(4, PartitionClass::RootedDistinct).map(|r| r.to_string()).collect();
        assert_eq!(got, ["4~", "3~+1", "3+1~"]);
    }

    #[test]
    fn zero_has_only_the_empty_partition() {
        for class in [PartitionClass::All, PartitionClass::Distinct, PartitionClass::Odd] {
            let all: Vec<Member> = enumerate(0, class).collect();
            assert_eq!(all, vec![Member::Plain(Partition::empty())]);
        }
        for class in PartitionClass::ALL.into_iter().filter(|c| c.is_rooted()) {
            assert_eq!(count(0, class), 0, "{class}");
        }
    }

    #[test]
    fn all_partitions_in_decreasing_lex_order() {
        let all: Vec<Partition> = partitions(5, PartKind::Any).collect();
        let want: Vec<Partition> = [
            &[5][..],
            &[4, 1],
            &[3, 2],
            &[3, 1, 1],
            &[2, 2, 1],
            &[2, 1, 1, 1],
            &[1, 1, 1, 1, 1],
        ]
        .iter()
        .map(|s| p(s))
        .collect();
        assert_eq!(all, want);
    }

    #[test]
    fn class_names_parse() {
        for c in PartitionClass::ALL {
            assert_eq!(c.name().parse::<PartitionClass>().unwrap(), c);
        }
        assert!("bogus".parse::<PartitionClass>().is_err());
    }

    #[test]
    fn partition_counts_match_known_values() {
        // p(n), q(n) for n = 0..=12
        let p_n = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        let q_n = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15];
        for n in 0..=12u64 {
            assert_eq!(count(n, PartitionClass::All), p_n[n as usize]);
            assert_eq!(count(n, PartitionClass::Distinct), q_n[n as usize]);
            assert_eq!(count(n, PartitionClass::Odd), q_n[n as usize]);
        }
    }
}
