//! Partitions, bipartitions, type C partitions and symmetric compositions.
//!
//! Text formats: a partition is written `2,1,1` and the empty partition `-`
//! (`0` is accepted on input as a synonym). A bipartition is `2,1|1`, with
//! `-` for an empty side. Every enumeration in this module is in
//! lexicographically descending order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other ordering is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition, discarding zeros.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The transposed Young diagram.
    pub fn dual(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: usize) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let dual = self.dual();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| (row - j - 1) + (dual.parts[j] - i - 1) + 1).collect())
            .collect()
    }

    /// Number of standard Young tableaux `f^λ`, by the hook length formula.
    pub fn num_standard_tableaux(&self) -> u64 {
        let numerator = factorial(self.size());
        let denominator: BigUint = self
            .hook_lengths()
            .iter()
            .flatten()
            .fold(BigUint::one(), |acc, &h| acc * BigUint::from(h));
        (numerator / denominator)
            .to_u64()
            .expect("number of standard tableaux exceeds u64")
    }

    /// Dimension of the irreducible `gl_m`-module with highest weight `self`
    /// (hook content formula). Zero when the partition has more than `m` rows.
    pub fn gl_dim(&self, m: usize) -> u64 {
        if self.len() > m {
            return 0;
        }
        let mut numerator = BigUint::one();
        let mut denominator = BigUint::one();
        for (i, row) in self.hook_lengths().iter().enumerate() {
            for (j, &hook) in row.iter().enumerate() {
                numerator *= BigUint::from(m + j - i);
                denominator *= BigUint::from(hook);
            }
        }
        (numerator / denominator).to_u64().expect("gl dimension exceeds u64")
    }

    /// Dominance order: every prefix sum of `self` is at most the
    /// corresponding prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { expected: other.size(), found: self.size() });
        }
        let rows = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..rows {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Even size, and every odd part occurs with even multiplicity.
    pub fn is_type_c(&self) -> bool {
        self.size().is_multiple_of(2)
            && self
                .parts
                .iter()
                .filter(|&&p| p % 2 == 1)
                .all(|&p| self.multiplicity(p).is_multiple_of(2))
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse { what: "partition", input: s.to_string() })?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All partitions of `n`, lexicographically descending.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn fill(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            fill(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    fill(n, n, &mut Vec::new(), &mut out);
    out
}

/// An ordered pair of partitions.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    /// `(λ̌, μ̌)`: both sides transposed.
    pub fn dual(&self) -> Bipartition {
        Bipartition::new(self.first.dual(), self.second.dual())
    }

    /// The same pair with its sides exchanged.
    pub fn swapped(&self) -> Bipartition {
        Bipartition::new(self.second.clone(), self.first.clone())
    }

    /// Parenthesised form with `0` for an empty side, e.g. `((1,1),0)`.
    pub fn display_paren(&self) -> String {
        fn side(p: &Partition) -> String {
            match p.len() {
                0 => "0".to_string(),
                1 => p.parts[0].to_string(),
                _ => format!("({p})"),
            }
        }
        format!("({},{})", side(&self.first), side(&self.second))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse { what: "bipartition", input: s.to_string() })?;
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All bipartitions of total size `d`, lexicographically descending on
/// `(first, second)`. There are `Σ_k p(k) p(d-k)` of them.
pub fn bipartitions(d: usize) -> Vec<Bipartition> {
    let mut out: Vec<Bipartition> = (0..=d)
        .flat_map(|k| {
            let seconds = partitions(d - k);
            partitions(k).into_iter().flat_map(move |first| {
                seconds.clone().into_iter().map(move |second| Bipartition::new(first.clone(), second))
            })
        })
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// A partition of an even number in which every odd part has even
/// multiplicity; these label the nilpotent orbits of `sp_{2d}`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeCPartition(Partition);

impl TypeCPartition {
    pub fn new(p: Partition) -> Result<Self> {
        if p.is_type_c() {
            Ok(TypeCPartition(p))
        } else {
            Err(Error::NotTypeC(p.to_string()))
        }
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_partition(self) -> Partition {
        self.0
    }

    /// Half the size: the `d` with `self` a partition of `2d`.
    pub fn rank(&self) -> usize {
        self.0.size() / 2
    }
}

impl Deref for TypeCPartition {
    type Target = Partition;

    fn deref(&self) -> &Partition {
        &self.0
    }
}

impl TryFrom<Partition> for TypeCPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        TypeCPartition::new(p)
    }
}

impl fmt::Display for TypeCPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for TypeCPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for TypeCPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TypeCPartition::new(s.parse()?)
    }
}

impl Serialize for TypeCPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// Type C partitions of `two_d`, lexicographically descending.
pub fn type_c_partitions(two_d: usize) -> Result<Vec<TypeCPartition>> {
    if !two_d.is_multiple_of(2) {
        return Err(Error::OddSize(two_d));
    }
    Ok(partitions(two_d).into_iter().filter(Partition::is_type_c).map(TypeCPartition).collect())
}

/// The C-collapse of `p`: the dominance-largest type C partition below `p`.
///
/// While some odd part has odd multiplicity, take the largest such part
/// `q`, lower its last occurrence to `q - 1` and raise the first later part
/// smaller than `q - 1` by one.
pub fn type_c_collapse(p: &Partition) -> Result<TypeCPartition> {
    let size = p.size();
    if !size.is_multiple_of(2) {
        return Err(Error::OddSize(size));
    }
    let mut parts = p.parts.clone();
    loop {
        let offender = parts
            .iter()
            .copied()
            .filter(|&x| x % 2 == 1 && parts.iter().filter(|&&y| y == x).count() % 2 == 1)
            .max();
        let Some(q) = offender else { break };
        // q >= 3 here: with an even total, q = 1 cannot be the largest offender.
        let last = parts.iter().rposition(|&x| x == q).expect("offender is a part");
        parts[last] -= 1;
        match parts[last + 1..].iter().position(|&x| x < q - 1) {
            Some(off) => parts[last + 1 + off] += 1,
            None => parts.push(1),
        }
    }
    TypeCPartition::new(Partition::new(parts)?)
}

/// An element of `Q_{N,D}`: a symmetric composition `d_i = d_{N+1-i}` of an
/// even total `D`, with `N = 2n + 1` entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymComposition {
    entries: Vec<usize>,
}

impl SymComposition {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let reject = |reason: &str| Error::InvalidComposition {
            entries: entries.clone(),
            reason: reason.to_string(),
        };
        if entries.len().is_multiple_of(2) {
            return Err(reject("length must be odd"));
        }
        if entries.iter().zip(entries.iter().rev()).any(|(a, b)| a != b) {
            return Err(reject("entries must satisfy d_i = d_{N+1-i}"));
        }
        if entries.iter().sum::<usize>() % 2 != 0 {
            return Err(reject("total must be even"));
        }
        Ok(SymComposition { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `n` with `N = 2n + 1`.
    pub fn n_param(&self) -> usize {
        self.entries.len() / 2
    }

    /// `N`, the number of entries.
    pub fn big_n(&self) -> usize {
        self.entries.len()
    }

    /// `D`, the total.
    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    /// `d = D / 2`.
    pub fn rank(&self) -> usize {
        self.total() / 2
    }

    /// The isotropic block sizes `d_1, …, d_n`.
    pub fn isotropic_blocks(&self) -> &[usize] {
        &self.entries[..self.n_param()]
    }

    /// Half the middle entry, the rank of the symplectic Levi factor.
    pub fn middle_half(&self) -> usize {
        self.entries[self.n_param()] / 2
    }
}

impl fmt::Display for SymComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl fmt::Debug for SymComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SymComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse { what: "composition", input: s.to_string() })?;
        SymComposition::new(entries)
    }
}

impl Serialize for SymComposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All of `Q_{N,D}` for `N = 2n + 1`, lexicographically descending.
pub fn enumerate_q(n_param: usize, big_d: usize) -> Result<Vec<SymComposition>> {
    if !big_d.is_multiple_of(2) {
        return Err(Error::OddSize(big_d));
    }
    // Choose (d_1, …, d_n, m) with d_1 + … + d_n + m = D / 2; the middle entry is 2m.
    fn fill(slots: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in (0..=rem).rev() {
            cur.push(v);
            fill(slots - 1, rem - v, cur, out);
            cur.pop();
        }
    }
    let mut halves = Vec::new();
    fill(n_param + 1, big_d / 2, &mut Vec::new(), &mut halves);
    Ok(halves
        .into_iter()
        .map(|half| {
            let (iso, m) = half.split_at(n_param);
            let mut entries = iso.to_vec();
            entries.push(2 * m[0]);
            entries.extend(iso.iter().rev());
            SymComposition { entries }
        })
        .collect())
}

/// Compares partitions by dominance, `None` when incomparable or of
/// different sizes.
pub fn dominance_cmp(a: &Partition, b: &Partition) -> Option<Ordering> {
    match (a.dominance_leq(b).ok()?, b.dominance_leq(a).ok()?) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

/// Multiset of parts as value → multiplicity.
pub fn part_counts(p: &Partition) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for &x in p.parts() {
        *counts.entry(x).or_insert(0) += 1;
    }
    counts
}
