//! Integer partitions (Young diagrams), cycle types of permutations, and
//! irreducible symmetric-group characters via the Murnaghan-Nakayama
//! rim-hook recursion.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers; the empty partition is
/// allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Validation("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Validation(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// Builds a partition from arbitrary values by dropping zeros and
    /// sorting decreasingly.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `n` copies of the part `1`.
    pub fn single_column(n: u64) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    /// The one-row partition `[n]`; empty for `n = 0`.
    pub fn single_row(n: u64) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of boxes.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part (0-based), 0 beyond the end.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols as u64 {
            parts.push(self.parts.iter().filter(|&&p| p > j).count() as u64);
        }
        Partition { parts }
    }

    /// True iff the diagram has at least `h` rows of length at least `w`,
    /// i.e. the `h x w` rectangle fits in the top-left corner.
    pub fn contains_rectangle(&self, h: usize, w: u64) -> bool {
        if h == 0 || w == 0 {
            return true;
        }
        self.part(h - 1) >= w
    }

    /// Multiset union of parts, re-sorted decreasingly.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition literal {s:?} must be bracketed")))?;
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u64> = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

/// All partitions of `n` in descending lexicographic order, `[n]` first.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    fn go(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// An ordered pair of Young diagrams. The pair classifies an equivalence
/// class of involutive R-matrices; its total number of boxes is the
/// dimension of the base space.
///
/// The degenerate pair `([], [])` is representable (it occurs as the value
/// of higher lambda-operations); operations that need a nonempty pair reject
/// it explicitly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartitionPair {
    pub plus: Partition,
    pub minus: Partition,
}

impl PartitionPair {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        PartitionPair { plus, minus }
    }

    /// Total number of boxes.
    pub fn dimension(&self) -> u64 {
        self.plus.weight() + self.minus.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }

    /// Swaps the two diagrams (classification of `-R`).
    pub fn swapped(&self) -> PartitionPair {
        PartitionPair::new(self.minus.clone(), self.plus.clone())
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.plus, self.minus)
    }
}

/// All pairs of Young diagrams with `d` boxes in total.
pub fn pairs_with_total(d: u64) -> Vec<PartitionPair> {
    let mut out = Vec::new();
    for plus_weight in (0..=d).rev() {
        for plus in partitions_of(plus_weight) {
            for minus in partitions_of(d - plus_weight) {
                out.push(PartitionPair::new(plus.clone(), minus));
            }
        }
    }
    out
}

/// A permutation of `{1, ..., n}` stored as 0-based one-line images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::Validation(
                    "permutation images must be a bijection".into(),
                ));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Function composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// The canonical representative of a cycle type: cycles filled with
    /// consecutive points, longest first.
    pub fn with_cycle_type(cycles: &CycleType) -> Permutation {
        let n = cycles.n() as usize;
        let mut images = vec![0usize; n];
        let mut start = 0usize;
        for &len in cycles.parts().parts() {
            let len = len as usize;
            for offset in 0..len {
                images[start + offset] = start + (offset + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }

    /// Lengths of the disjoint cycles, fixed points included.
    pub fn cycle_type(&self) -> CycleType {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
                len += 1;
            }
            lengths.push(len);
        }
        CycleType::new(Partition::from_unsorted(lengths))
    }
}

/// The cycle type of a permutation: a partition of the ambient `n` recording
/// disjoint-cycle lengths, fixed points included.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(parts: Partition) -> Self {
        CycleType(parts)
    }

    pub fn parts(&self) -> &Partition {
        &self.0
    }

    /// The ambient `n` (sum of cycle lengths).
    pub fn n(&self) -> u64 {
        self.0.weight()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(CycleType::new(s.parse()?))
    }
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Size of the conjugacy class with the given cycle type:
/// `n! / prod_k k^{m_k} m_k!` where `m_k` counts cycles of length `k`.
pub fn class_size(cycles: &CycleType) -> BigInt {
    let n = cycles.n();
    let mut denom = BigInt::one();
    let parts = cycles.parts().parts();
    let mut idx = 0;
    while idx < parts.len() {
        let k = parts[idx];
        let mut mult = 0u64;
        while idx < parts.len() && parts[idx] == k {
            mult += 1;
            idx += 1;
        }
        denom *= BigInt::from(k).pow(mult as u32) * factorial(mult);
    }
    factorial(n) / denom
}

/// Dimension of the irreducible representation labelled by `lambda`, by the
/// hook length formula.
pub fn hook_dimension(lambda: &Partition) -> BigInt {
    let n = lambda.weight();
    let conj = lambda.conjugate();
    let mut hooks = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let hook = row - (j as u64 + 1) + conj.part(j) - (i as u64 + 1) + 1;
            hooks *= BigInt::from(hook);
        }
    }
    factorial(n) / hooks
}

// First-column hook lengths ("beta numbers") of a partition padded to `len`
// rows: strictly decreasing values lambda_j + (len - 1 - j).
fn beta_numbers(parts: &[u64], len: usize) -> Vec<u64> {
    (0..len)
        .map(|j| {
            let part = parts.get(j).copied().unwrap_or(0);
            part + (len - 1 - j) as u64
        })
        .collect()
}

fn partition_from_betas(mut betas: Vec<u64>) -> Vec<u64> {
    betas.sort_unstable_by(|a, b| b.cmp(a));
    let len = betas.len();
    let mut parts: Vec<u64> = betas
        .iter()
        .enumerate()
        .map(|(j, &b)| b - (len - 1 - j) as u64)
        .collect();
    parts.retain(|&p| p > 0);
    parts
}

fn mn_recurse(lambda: &[u64], cycles: &[u64]) -> BigInt {
    if cycles.is_empty() {
        return BigInt::one();
    }
    let strip = cycles[0];
    let rest = &cycles[1..];
    let len = lambda.len();
    let betas = beta_numbers(lambda, len);
    let mut total = BigInt::zero();
    for j in 0..len {
        if betas[j] < strip {
            continue;
        }
        let target = betas[j] - strip;
        if betas.contains(&target) {
            continue;
        }
        // Number of beta values jumped over = height of the rim hook.
        let height = betas
            .iter()
            .filter(|&&b| b > target && b < betas[j])
            .count();
        let mut new_betas = betas.clone();
        new_betas[j] = target;
        let sub = mn_recurse(&partition_from_betas(new_betas), rest);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    total
}

/// Exact irreducible character value `chi^lambda(rho)` of the symmetric
/// group, by the Murnaghan-Nakayama rim-hook recursion.
pub fn irreducible_character(lambda: &Partition, rho: &CycleType) -> Result<BigInt> {
    if lambda.weight() != rho.n() {
        return Err(Error::Validation(format!(
            "character weight mismatch: |{lambda}| = {} but cycle type {rho} has n = {}",
            lambda.weight(),
            rho.n()
        )));
    }
    Ok(mn_recurse(lambda.parts(), rho.parts().parts()))
}
