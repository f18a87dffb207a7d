//! Weight-preserving maps between partition classes.
//!
//! * Sylvester's bijection from odd parts to distinct parts, read off the
//!   diagonal hooks of the 2-modular diagram, and its inverse.
//! * Dyson's map `ψ_r` and the iterated Dyson map built from it.
//! * The root-moving involution on almost-distinct rooted partitions, the
//!   Sylvester-based correspondence between odd-root-size almost-distinct
//!   rooted partitions and odd rooted partitions, and part designation.

use serde::Serialize;
use thiserror::Error;

use crate::partition::{Partition, RootedPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("even part {0} present; the map needs odd parts")]
    EvenPartPresent(u32),
    #[error("empty input")]
    EmptyInput,
    #[error("repeated part {0}; the map needs distinct parts")]
    RepeatedPart(u32),
    #[error("rank {rank} exceeds r + 1 = {bound}")]
    RankTooLarge { rank: i64, bound: i64 },
    #[error("rank {rank} is below r - 1 = {bound}")]
    RankTooSmall { rank: i64, bound: i64 },
    #[error("input is outside the domain: {0}")]
    NotInDomain(String),
    #[error("index {index} out of range for a partition with {len} parts")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

fn require_odd(lam: &Partition) -> Result<(), BijectionError> {
    match lam.parts().iter().find(|&&p| p % 2 == 0) {
        Some(&p) => Err(BijectionError::EvenPartPresent(p)),
        None => Ok(()),
    }
}

fn require_distinct(mu: &Partition) -> Result<(), BijectionError> {
    match mu.parts().windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(BijectionError::RepeatedPart(w[0])),
        None => Ok(()),
    }
}

/// One diagonal hook of a 2-modular diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hook {
    /// Total number of boxes in the hook.
    pub cells: u32,
    /// Boxes labeled 2.
    pub twos: u32,
}

/// The diagonal hooks `H_1, H_2, …` of a 2-modular diagram, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HookDecomposition {
    pub hooks: Vec<Hook>,
}

impl HookDecomposition {
    /// Reads `cells_1, twos_1, cells_2, twos_2, …`, dropping a trailing zero.
    pub fn to_distinct_partition(&self) -> Partition {
        let mut parts: Vec<u32> = self.hooks.iter().flat_map(|h| [h.cells, h.twos]).collect();
        if parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::from_sorted_unchecked(parts)
    }

    /// Weight of the source diagram: a 2-box counts 2, a 1-box counts 1.
    pub fn weight(&self) -> u64 {
        self.hooks.iter().map(|h| u64::from(h.cells) + u64::from(h.twos)).sum()
    }
}

/// Row lengths of the 2-modular diagram: part `2m+1` becomes `m` twos and a 1.
pub fn two_modular_rows(lam: &Partition) -> Result<Vec<u32>, BijectionError> {
    require_odd(lam)?;
    Ok(lam.parts().iter().map(|p| p.div_ceil(2)).collect())
}

/// Label of the box in row `i`, column `c` (0-based) of a 2-modular diagram
/// with the given row lengths.
pub fn two_modular_label(rows: &[u32], i: usize, c: u32) -> Option<u8> {
    let len = *rows.get(i)?;
    match c.cmp(&len) {
        std::cmp::Ordering::Less if c + 1 == len => Some(1),
        std::cmp::Ordering::Less => Some(2),
        _ => None,
    }
}

/// Decomposes the 2-modular diagram of an odd-part partition into hooks.
///
/// Hook `j` (0-based) is row `j` from column `j` onward plus column `j` below
/// row `j`.
pub fn two_modular_hooks(lam: &Partition) -> Result<HookDecomposition, BijectionError> {
    if lam.is_empty() {
        return Err(BijectionError::EmptyInput);
    }
    let rows = two_modular_rows(lam)?;
    let mut hooks = Vec::new();
    for j in 0..rows.len() {
        let len = rows[j];
        if len <= j as u32 {
            break;
        }
        // arm: columns j..len of row j, all 2 except the last box
        let arm = len - j as u32;
        let mut cells = arm;
        let mut twos = arm - 1;
        for &below in &rows[j + 1..] {
            if below <= j as u32 {
                break;
            }
            cells += 1;
            if below > j as u32 + 1 {
                twos += 1;
            }
        }
        hooks.push(Hook { cells, twos });
    }
    Ok(HookDecomposition { hooks })
}

/// Sylvester's bijection `φ` from odd parts to distinct parts.
pub fn sylvester(lam: &Partition) -> Result<Partition, BijectionError> {
    if lam.is_empty() {
        return Ok(Partition::empty());
    }
    Ok(two_modular_hooks(lam)?.to_distinct_partition())
}

/// Pairs `(μ_1, μ_2), (μ_3, μ_4), …` of a distinct-part partition, padding an
/// odd length with a trailing zero.
pub fn hooks_from_distinct(mu: &Partition) -> Result<HookDecomposition, BijectionError> {
    require_distinct(mu)?;
    let hooks = mu
        .parts()
        .chunks(2)
        .map(|c| Hook { cells: c[0], twos: c.get(1).copied().unwrap_or(0) })
        .collect();
    Ok(HookDecomposition { hooks })
}

/// Inverse of [`sylvester`].
///
/// Hooks are rebuilt from the innermost outward. Every row of the diagram
/// already built inside hook `j` ends further right than column `j`, so it
/// contributes a 2 to the leg of hook `j`; the remaining twos of hook `j` go
/// to its arm, and its remaining ones extend the leg.
pub fn sylvester_inv(mu: &Partition) -> Result<Partition, BijectionError> {
    if mu.is_empty() {
        return Ok(Partition::empty());
    }
    let decomposition = hooks_from_distinct(mu)?;
    let k = decomposition.hooks.len();
    // Frobenius coordinates (arm, leg) of each hook.
    let mut arms = vec![0u32; k];
    let mut legs = vec![0u32; k];
    for j in (0..k).rev() {
        let Hook { cells, twos } = decomposition.hooks[j];
        let inner_rows = if j + 1 < k { legs[j + 1] + 1 } else { 0 };
        let arm = twos.checked_sub(inner_rows).ok_or_else(|| {
            BijectionError::InternalInvariantViolation(format!(
                "hook {} has {twos} twos but {inner_rows} inner rows",
                j + 1
            ))
        })?;
        let leg = (cells - 1).checked_sub(arm).ok_or_else(|| {
            BijectionError::InternalInvariantViolation(format!("hook {} arm {arm} exceeds its cells", j + 1))
        })?;
        if j + 1 < k && (arm <= arms[j + 1] || leg <= legs[j + 1]) {
            return Err(BijectionError::InternalInvariantViolation(format!(
                "hook {} does not enclose hook {}",
                j + 1,
                j + 2
            )));
        }
        arms[j] = arm;
        legs[j] = leg;
    }
    let rows = frobenius_rows(&arms, &legs);
    let parts = rows.into_iter().map(|r| 2 * r - 1).collect();
    Ok(Partition::from_sorted_unchecked(parts))
}

/// Row lengths of the diagram with the given Frobenius coordinates.
fn frobenius_rows(arms: &[u32], legs: &[u32]) -> Vec<u32> {
    let k = arms.len();
    let mut rows: Vec<u32> = arms.iter().enumerate().map(|(j, &a)| a + j as u32 + 1).collect();
    let cols: Vec<u32> = legs.iter().enumerate().map(|(j, &b)| b + j as u32 + 1).collect();
    let depth = cols.first().copied().unwrap_or(0) as usize;
    for i in k..depth {
        rows.push(cols.iter().filter(|&&c| c as usize > i).count() as u32);
    }
    rows
}

/// Dyson's map `ψ_r`: remove the first column and put a new top row of
/// `l + r` boxes above what remains. Sends a partition of rank at most `r + 1`
/// to a partition of rank at least `r − 1`, adding `r` to the weight.
pub fn dyson(lam: &Partition, r: i64) -> Result<Partition, BijectionError> {
    let len = lam.len() as i64;
    let bound = r + 1;
    if lam.rank() > bound {
        return Err(BijectionError::RankTooLarge { rank: lam.rank(), bound });
    }
    let top = len + r;
    if top < 0 {
        return Err(BijectionError::NotInDomain(format!("l + r = {top} is negative")));
    }
    let mut parts: Vec<u32> = Vec::with_capacity(lam.len() + 1);
    if top > 0 {
        parts.push(top as u32);
    }
    parts.extend(lam.parts().iter().filter(|&&p| p >= 2).map(|p| p - 1));
    Partition::new(parts).map_err(|e| BijectionError::InternalInvariantViolation(e.to_string()))
}

/// Inverse of [`dyson`]: delete the top row, widen every remaining row by one
/// box and restore the removed first-column boxes as parts equal to 1.
pub fn dyson_inv(mu: &Partition, r: i64) -> Result<Partition, BijectionError> {
    if mu.is_empty() {
        // ψ_r(1^{−r}) = () for r ≤ 0: the new top row has length zero.
        return match r {
            r if r <= 0 => Ok(Partition::from_sorted_unchecked(vec![1; r.unsigned_abs() as usize])),
            _ => Err(BijectionError::EmptyInput),
        };
    }
    let bound = r - 1;
    if mu.rank() < bound {
        return Err(BijectionError::RankTooSmall { rank: mu.rank(), bound });
    }
    let ones = i64::from(mu.largest()) - r - (mu.len() as i64 - 1);
    debug_assert!(ones >= 0);
    let mut parts: Vec<u32> = mu.parts()[1..].iter().map(|p| p + 1).collect();
    parts.extend(std::iter::repeat(1).take(ones as usize));
    Ok(Partition::from_sorted_unchecked(parts))
}

/// The chain `ν^l, ν^{l-1}, …, ν^1` produced by the iterated Dyson map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DysonTrace {
    /// `(r, ν)` where `ν` is the partition after applying `ψ_r`. The first
    /// step seeds `ν^l = (λ_l)` and records `r = λ_l`.
    pub steps: Vec<(u32, Partition)>,
}

impl DysonTrace {
    pub fn result(&self) -> Partition {
        self.steps.last().map(|(_, p)| p.clone()).unwrap_or_default()
    }
}

/// Iterated Dyson map from odd parts to distinct parts, keeping every
/// intermediate partition.
pub fn iterated_dyson_trace(lam: &Partition) -> Result<DysonTrace, BijectionError> {
    require_odd(lam)?;
    let parts = lam.parts();
    let mut steps = Vec::with_capacity(parts.len());
    let Some(&last) = parts.last() else {
        return Ok(DysonTrace { steps });
    };
    let mut nu = Partition::from_sorted_unchecked(vec![last]);
    steps.push((last, nu.clone()));
    for &r in parts[..parts.len() - 1].iter().rev() {
        if nu.rank() > i64::from(r) + 1 {
            return Err(BijectionError::InternalInvariantViolation(format!(
                "rank of {nu} exceeds {r} + 1 inside the iterated Dyson map"
            )));
        }
        nu = dyson(&nu, i64::from(r))?;
        steps.push((r, nu.clone()));
    }
    Ok(DysonTrace { steps })
}

pub fn iterated_dyson(lam: &Partition) -> Result<Partition, BijectionError> {
    Ok(iterated_dyson_trace(lam)?.result())
}

/// Inverse of [`iterated_dyson`]: repeatedly peel `λ_j = r(ν)` when the rank
/// is odd (`r(ν) + 1` otherwise) and apply `ψ_{λ_j}^{-1}`.
pub fn iterated_dyson_inv(mu: &Partition) -> Result<Partition, BijectionError> {
    require_distinct(mu)?;
    let mut peeled: Vec<u32> = Vec::new();
    let mut nu = mu.clone();
    while !nu.is_empty() {
        let rank = nu.rank();
        let part = if rank.rem_euclid(2) == 1 { rank } else { rank + 1 };
        if part <= 0 {
            return Err(BijectionError::InternalInvariantViolation(format!(
                "peeled non-positive part {part} from {nu}"
            )));
        }
        if let Some(&prev) = peeled.last() {
            if i64::from(prev) < part {
                return Err(BijectionError::InternalInvariantViolation(format!(
                    "peeled part {part} exceeds the previous part {prev}"
                )));
            }
        }
        nu = dyson_inv(&nu, part)?;
        peeled.push(part as u32);
    }
    Ok(Partition::from_sorted_unchecked(peeled))
}

/// The root-moving involution on almost-distinct rooted partitions that are
/// not distinct: a copy of the root value moves between base and root.
pub fn tau(rp: &RootedPartition) -> Result<RootedPartition, BijectionError> {
    if !rp.base().has_distinct_parts() {
        return Err(BijectionError::NotInDomain(format!("base of {rp} has repeated parts")));
    }
    if rp.is_distinct() {
        return Err(BijectionError::NotInDomain(format!("{rp} has distinct parts")));
    }
    let d = rp.root_part();
    let (base, size) = match rp.base().without(d, 1) {
        Some(base) => (base, rp.root_size() + 1),
        None => (rp.base().with(d, 1), rp.root_size() - 1),
    };
    Ok(RootedPartition::new(base, d, size).expect("root stays nonempty"))
}

/// Maps an almost-distinct rooted partition with odd root size to a rooted
/// partition with odd parts: `φ^{-1}` on the base, conjugation on the root.
pub fn sigma(rp: &RootedPartition) -> Result<RootedPartition, BijectionError> {
    if !rp.base().has_distinct_parts() {
        return Err(BijectionError::NotInDomain(format!("base of {rp} has repeated parts")));
    }
    if rp.root_size() % 2 == 0 {
        return Err(BijectionError::NotInDomain(format!("root size of {rp} is even")));
    }
    let base = sylvester_inv(rp.base())?;
    Ok(RootedPartition::new(base, rp.root_size(), rp.root_part()).expect("nonempty root"))
}

/// Inverse of [`sigma`].
pub fn sigma_inv(rp: &RootedPartition) -> Result<RootedPartition, BijectionError> {
    if !rp.is_odd() {
        return Err(BijectionError::NotInDomain(format!("{rp} has an even part")));
    }
    let base = sylvester(rp.base())?;
    Ok(RootedPartition::new(base, rp.root_size(), rp.root_part()).expect("nonempty root"))
}

/// Designates the part at 1-based `index` as the root.
///
/// Within a run of `m` equal parts, the `i`-th occurrence designates `i`
/// copies, so the `l(p)` indices give `l(p)` different rooted partitions.
pub fn designate(p: &Partition, index: usize) -> Result<RootedPartition, BijectionError> {
    if index == 0 || index > p.len() {
        return Err(BijectionError::IndexOutOfRange { index, len: p.len() });
    }
    let value = p.parts()[index - 1];
    let first = p.parts().iter().position(|&x| x == value).expect("value present");
    designate_copies(p, value, index - first)
}

/// Designates `copies` copies of `value` as the root.
pub fn designate_copies(p: &Partition, value: u32, copies: usize) -> Result<RootedPartition, BijectionError> {
    let base = p.without(value, copies).filter(|_| copies > 0).ok_or_else(|| {
        BijectionError::NotInDomain(format!("{p} does not contain {copies} copies of {value}"))
    })?;
    Ok(RootedPartition::new(base, value, copies as u32).expect("nonempty root"))
}

/// Inverse of [`designate`]: the underlying partition and the designated index.
pub fn undesignate(rp: &RootedPartition) -> (Partition, usize) {
    let p = rp.flatten();
    let first = p.parts().iter().position(|&x| x == rp.root_part()).expect("root present");
    (p, first + rp.root_size() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rooted(base: &[u32], d: u32, m: u32) -> RootedPartition {
        RootedPartition::new(p(base), d, m).unwrap()
    }

    #[test]
    fn hooks_of_7_7_5_5_3_1() {
        let h = two_modular_hooks(&p(&[7, 7, 5, 5, 3, 1])).unwrap();
        let pairs: Vec<(u32, u32)> = h.hooks.iter().map(|h| (h.cells, h.twos)).collect();
        assert_eq!(pairs, [(9, 7), (6, 4), (2, 0)]);
        assert_eq!(h.weight(), 28);
    }

    #[test]
    fn hook_edge_cases() {
        let h = two_modular_hooks(&p(&[1])).unwrap();
        assert_eq!(h.hooks, [Hook { cells: 1, twos: 0 }]);
        // (5,3): rows [2,2,1] and [2,1]; hooks (4,3), (1,0)
        let h = two_modular_hooks(&p(&[5, 3])).unwrap();
        assert_eq!(h.hooks, [Hook { cells: 4, twos: 3 }, Hook { cells: 1, twos: 0 }]);
        assert_eq!(two_modular_hooks(&p(&[4, 1])), Err(BijectionError::EvenPartPresent(4)));
        assert_eq!(two_modular_hooks(&Partition::empty()), Err(BijectionError::EmptyInput));
    }

    #[test]
    fn sylvester_examples() {
        assert_eq!(sylvester(&p(&[7, 7, 5, 5, 3, 1])).unwrap(), p(&[9, 7, 6, 4, 2]));
        assert_eq!(sylvester(&Partition::empty()).unwrap(), Partition::empty());
        assert_eq!(sylvester(&p(&[3, 1])).unwrap(), p(&[3, 1]));
        assert_eq!(sylvester(&p(&[5, 3])).unwrap(), p(&[4, 3, 1]));
        assert_eq!(sylvester(&p(&[2])), Err(BijectionError::EvenPartPresent(2)));
    }

    #[test]
    fn sylvester_inv_examples() {
        assert_eq!(sylvester_inv(&p(&[9, 7, 6, 4, 2])).unwrap(), p(&[7, 7, 5, 5, 3, 1]));
        assert_eq!(sylvester_inv(&Partition::empty()).unwrap(), Partition::empty());
        assert_eq!(sylvester_inv(&p(&[2])).unwrap(), p(&[1, 1]));
        assert_eq!(sylvester_inv(&p(&[2, 2])), Err(BijectionError::RepeatedPart(2)));
    }

    #[test]
    fn sylvester_inv_of_431_found_by_search() {
        let preimages: Vec<Partition> = crate::partition::partitions(8, crate::partition::PartKind::Odd)
            .filter(|l| sylvester(l).unwrap() == p(&[4, 3, 1]))
            .collect();
        assert_eq!(preimages.len(), 1);
        assert_eq!(sylvester_inv(&p(&[4, 3, 1])).unwrap(), preimages[0]);
    }

    #[test]
    fn dyson_examples() {
        assert_eq!(dyson(&p(&[5, 4, 3, 3, 2, 1]), 1).unwrap(), p(&[7, 4, 3, 2, 2, 1]));
        assert_eq!(dyson(&p(&[1]), 3).unwrap(), p(&[4]));
        assert_eq!(dyson(&Partition::empty(), 0).unwrap(), Partition::empty());
        assert_eq!(dyson(&p(&[6]), 1), Err(BijectionError::RankTooLarge { rank: 5, bound: 2 }));
    }

    #[test]
    fn dyson_inv_examples() {
        assert_eq!(dyson_inv(&p(&[7, 4, 3, 2, 2, 1]), 1).unwrap(), p(&[5, 4, 3, 3, 2, 1]));
        assert_eq!(dyson_inv(&p(&[7, 3, 2]), 5).unwrap(), p(&[4, 3]));
        assert_eq!(dyson_inv(&p(&[4]), 3).unwrap(), p(&[1]));
        assert_eq!(dyson_inv(&Partition::empty(), 1), Err(BijectionError::EmptyInput));
        assert_eq!(dyson_inv(&p(&[1, 1, 1]), 1), Err(BijectionError::RankTooSmall { rank: -2, bound: 0 }));
    }

    #[test]
    fn iterated_dyson_examples() {
        assert_eq!(iterated_dyson(&p(&[5, 5, 3, 3, 1])).unwrap(), p(&[8, 6, 2, 1]));
        assert_eq!(iterated_dyson(&p(&[1])).unwrap(), p(&[1]));
        // two-step trace: ν² = (1), ν¹ = ψ_3((1)) = (4)
        assert_eq!(iterated_dyson(&p(&[3, 1])).unwrap(), p(&[4]));
        assert_eq!(iterated_dyson(&p(&[1, 1, 1, 1])).unwrap(), p(&[3, 1]));
        assert_eq!(iterated_dyson(&Partition::empty()).unwrap(), Partition::empty());
    }

    #[test]
    fn iterated_dyson_trace_of_5_5_3_3_1() {
        let trace = iterated_dyson_trace(&p(&[5, 5, 3, 3, 1])).unwrap();
        let chain: Vec<Partition> = trace.steps.iter().map(|(_, nu)| nu.clone()).collect();
        assert_eq!(chain, [p(&[1]), p(&[4]), p(&[4, 3]), p(&[7, 3, 2]), p(&[8, 6, 2, 1])]);
    }

    #[test]
    fn iterated_dyson_inv_examples() {
        assert_eq!(iterated_dyson_inv(&p(&[8, 6, 2, 1])).unwrap(), p(&[5, 5, 3, 3, 1]));
        assert_eq!(iterated_dyson_inv(&Partition::empty()).unwrap(), Partition::empty());
        assert_eq!(iterated_dyson_inv(&p(&[3, 3])), Err(BijectionError::RepeatedPart(3)));
    }

    #[test]
    fn tau_pairs_at_four() {
        assert_eq!(tau(&rooted(&[2], 2, 1)).unwrap(), rooted(&[], 2, 2));
        assert_eq!(tau(&rooted(&[2, 1], 1, 1)).unwrap(), rooted(&[2], 1, 2));
        assert_eq!(tau(&rooted(&[1], 1, 3)).unwrap(), rooted(&[], 1, 4));
        assert!(matches!(tau(&rooted(&[3], 1, 1)), Err(BijectionError::NotInDomain(_))));
        assert!(matches!(tau(&rooted(&[1, 1], 2, 1)), Err(BijectionError::NotInDomain(_))));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&rooted(&[], 4, 1)).unwrap(), rooted(&[], 1, 4));
        assert_eq!(sigma(&rooted(&[2], 2, 1)).unwrap(), rooted(&[1, 1], 1, 2));
        assert_eq!(sigma(&rooted(&[2, 1], 1, 1)).unwrap(), rooted(&[3], 1, 1));
        assert!(matches!(sigma(&rooted(&[], 2, 2)), Err(BijectionError::NotInDomain(_))));
    }

    #[test]
    fn sigma_inv_examples() {
        assert_eq!(sigma_inv(&rooted(&[1], 3, 1)).unwrap(), rooted(&[1], 1, 3));
        assert_eq!(sigma_inv(&rooted(&[1, 1, 1], 1, 1)).unwrap(), rooted(&[3], 1, 1));
        assert_eq!(sigma_inv(&rooted(&[1], 1, 3)).unwrap(), rooted(&[1], 3, 1));
        assert!(matches!(sigma_inv(&rooted(&[2], 1, 1)), Err(BijectionError::NotInDomain(_))));
    }

    #[test]
    fn designate_examples() {
        assert_eq!(designate(&p(&[3, 1]), 1).unwrap(), rooted(&[1], 3, 1));
        assert_eq!(designate(&p(&[4]), 1).unwrap(), rooted(&[], 4, 1));
        assert_eq!(designate(&p(&[1, 1, 1]), 2).unwrap(), rooted(&[1], 1, 2));
        assert_eq!(designate(&p(&[3, 1]), 3), Err(BijectionError::IndexOutOfRange { index: 3, len: 2 }));
        assert_eq!(designate(&p(&[3, 1]), 0), Err(BijectionError::IndexOutOfRange { index: 0, len: 2 }));
        let rp = designate(&p(&[3, 3, 1]), 2).unwrap();
        assert_eq!(undesignate(&rp), (p(&[3, 3, 1]), 2));
    }
}
