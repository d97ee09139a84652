//! The hyperoctahedral group `W_d = S_d ⋉ (Z/2)^d` as signed permutations,
//! its conjugacy classes and its integer character table.
//!
//! Irreducible characters are indexed by bipartitions `(λ, μ)` and built as
//! induced characters from `W_a × W_b` (`a = |λ|`, `b = |μ|`) of
//! `χ^λ ⊠ χ^μ`, one side twisted by the linear character
//! `δ(w) = (-1)^{#sign changes}`. Which side carries `δ` is the
//! [`Labeling`]. Induction uses the class-sum form of the coset formula over
//! an exhaustive enumeration of the group.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};
use serde_json::json;

use crate::error::{Error, Result};
use crate::partitions::{bipartitions, Bipartition, Partition, SymComposition};

/// Largest `d` for which tables are built unless a caller raises the bound.
pub const DEFAULT_MAX_RANK: usize = 6;

/// A signed permutation of `{1, …, d}`: `w(e_k) = ±e_{perm(k)}`, with a
/// minus sign exactly when `flips[k]` is set. Stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    flips: Vec<bool>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, flips: Vec<bool>) -> Result<Self> {
        let d = perm.len();
        if flips.len() != d {
            return Err(Error::SizeMismatch { expected: d, found: flips.len() });
        }
        let mut seen = vec![false; d];
        for &p in &perm {
            if p >= d || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(SignedPermutation { perm, flips })
    }

    pub fn identity(d: usize) -> Self {
        SignedPermutation { perm: (0..d).collect(), flips: vec![false; d] }
    }

    /// Sign change at 0-based position `k`.
    pub fn sign_change(d: usize, k: usize) -> Self {
        let mut w = Self::identity(d);
        w.flips[k] = true;
        w
    }

    /// Transposition of 0-based positions `i` and `j`.
    pub fn transposition(d: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(d);
        w.perm.swap(i, j);
        w
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && !self.flips.iter().any(|&f| f)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn multiply(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.rank() != other.rank() {
            return Err(Error::SizeMismatch { expected: self.rank(), found: other.rank() });
        }
        Ok(self.compose(other))
    }

    fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        let flips = other.perm.iter().zip(&other.flips).map(|(&j, &f)| f ^ self.flips[j]).collect();
        SignedPermutation { perm, flips }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let d = self.rank();
        let mut perm = vec![0; d];
        let mut flips = vec![false; d];
        for k in 0..d {
            perm[self.perm[k]] = k;
            flips[self.perm[k]] = self.flips[k];
        }
        SignedPermutation { perm, flips }
    }

    /// Number of sign changes; `δ(w) = (-1)^{num_flips}`.
    pub fn num_flips(&self) -> usize {
        self.flips.iter().filter(|&&f| f).count()
    }

    /// Signed cycle type: cycles whose sign product is `+1` go to
    /// `pos_cycles`, the others to `neg_cycles`.
    pub fn cycle_type(&self) -> ConjClassLabel {
        let d = self.rank();
        let mut seen = vec![false; d];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let (mut len, mut negative, mut k) = (0, false, start);
            while !seen[k] {
                seen[k] = true;
                negative ^= self.flips[k];
                len += 1;
                k = self.perm[k];
            }
            if negative { neg.push(len) } else { pos.push(len) }
        }
        ConjClassLabel::new(Partition::from_unsorted(pos), Partition::from_unsorted(neg))
    }

    /// Whether the positions `0..a` are mapped onto themselves.
    fn preserves_prefix(&self, a: usize) -> bool {
        self.perm[..a].iter().all(|&p| p < a)
    }

    /// Restriction to the stable block `start..end`, reindexed from zero.
    fn restrict(&self, start: usize, end: usize) -> SignedPermutation {
        SignedPermutation {
            perm: self.perm[start..end].iter().map(|&p| p - start).collect(),
            flips: self.flips[start..end].to_vec(),
        }
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self
            .perm
            .iter()
            .zip(&self.flips)
            .map(|(&p, &s)| format!("{}{}", if s { "-" } else { "" }, p + 1))
            .collect();
        write!(f, "[{}]", images.join(" "))
    }
}

/// The Coxeter generators `s_1, …, s_d`: `s_1` changes the sign at
/// position 1, `s_k` for `k ≥ 2` swaps positions `k - 1` and `k`.
pub fn generators(d: usize) -> Result<Vec<SignedPermutation>> {
    if d == 0 {
        return Err(Error::InvalidArgument("W_0 has no generators".into()));
    }
    let mut gens = vec![SignedPermutation::sign_change(d, 0)];
    gens.extend((1..d).map(|k| SignedPermutation::transposition(d, k - 1, k)));
    Ok(gens)
}

/// `|W_d| = 2^d · d!`.
pub fn group_order(d: usize) -> u64 {
    (1..=d as u64).product::<u64>() << d
}

/// Every element of `W_d`.
pub fn elements(d: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::with_capacity(group_order(d) as usize);
    for perm in (0..d).permutations(d) {
        for mask in 0u32..(1 << d) {
            let flips = (0..d).map(|k| mask >> k & 1 == 1).collect();
            out.push(SignedPermutation { perm: perm.clone(), flips });
        }
    }
    out
}

/// A conjugacy class of `W_d`, named by its signed cycle type and written
/// `pos|neg` like a bipartition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjClassLabel {
    pub pos_cycles: Partition,
    pub neg_cycles: Partition,
}

impl ConjClassLabel {
    pub fn new(pos_cycles: Partition, neg_cycles: Partition) -> Self {
        ConjClassLabel { pos_cycles, neg_cycles }
    }

    pub fn rank(&self) -> usize {
        self.pos_cycles.size() + self.neg_cycles.size()
    }

    pub fn identity(d: usize) -> Self {
        ConjClassLabel::new(Partition::from_unsorted(vec![1; d]), Partition::empty())
    }

    /// Cycle type of the underlying permutation in `S_d`.
    pub fn underlying_cycle_type(&self) -> Partition {
        Partition::from_unsorted(
            self.pos_cycles.parts().iter().chain(self.neg_cycles.parts()).copied(),
        )
    }

    /// Centralizer order `Π_k (2k)^{a_k + b_k} a_k! b_k!`, with `a_k`, `b_k`
    /// the numbers of positive and negative `k`-cycles.
    pub fn centralizer_order(&self) -> u64 {
        let mut order = 1u64;
        for part in [&self.pos_cycles, &self.neg_cycles] {
            for (&k, &mult) in crate::partitions::part_counts(part).iter() {
                order *= (2 * k as u64).pow(mult as u32);
                order *= (1..=mult as u64).product::<u64>();
            }
        }
        order
    }

    pub fn class_size(&self) -> u64 {
        group_order(self.rank()) / self.centralizer_order()
    }

    /// An element of the class: cycles laid out on consecutive positions,
    /// each negative cycle carrying one sign change.
    pub fn representative(&self) -> SignedPermutation {
        let d = self.rank();
        let mut w = SignedPermutation::identity(d);
        let mut start = 0;
        let cycles = self
            .pos_cycles
            .parts()
            .iter()
            .map(|&l| (l, false))
            .chain(self.neg_cycles.parts().iter().map(|&l| (l, true)));
        for (len, negative) in cycles {
            for k in start..start + len {
                w.perm[k] = if k + 1 == start + len { start } else { k + 1 };
            }
            w.flips[start] = negative;
            start += len;
        }
        w
    }
}

impl fmt::Display for ConjClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.pos_cycles, self.neg_cycles)
    }
}

impl fmt::Debug for ConjClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for ConjClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let b: Bipartition = s.parse()?;
        Ok(ConjClassLabel::new(b.first, b.second))
    }
}

impl Serialize for ConjClassLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All class labels of `W_d`, lexicographically descending on `(pos, neg)`.
pub fn class_labels(d: usize) -> Vec<ConjClassLabel> {
    bipartitions(d).into_iter().map(|b| ConjClassLabel::new(b.first, b.second)).collect()
}

/// Which side of `(λ, μ)` carries the sign-change twist `δ`.
///
/// * `Springer`: `χ_(λ,μ) = Ind(δ·χ^λ ⊠ χ^μ)`. This reproduces the names of
///   the `d = 2` Springer table: `(-|2)` trivial, `(1,1|-)` the sign of the
///   Coxeter group, `(2|-)` the long-root sign `δ`, `(-|1,1)` the short-root
///   sign.
/// * `SchurWeyl`: `χ_(α,β) = Ind(χ^α ⊠ δ·χ^β)`. This is the label under
///   which `Z_(α,β)` pairs with the `gl_{n+1} ⊕ gl_n`-module of highest
///   weight `(α, β)` in `(C^{2n+1})^{⊗d}`; the `gl_n` factor is the
///   `-1`-eigenspace of the sign change.
///
/// The two are related by `Springer(λ, μ) = SchurWeyl(μ, λ)`, equivalently
/// `Springer(λ, μ) = SchurWeyl(λ̌, μ̌) ⊗ ε` with `ε` the Coxeter sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Labeling {
    Springer,
    SchurWeyl,
}

/// Converts a label between the two conventions.
pub fn relabel(rho: &Bipartition, from: Labeling, to: Labeling) -> Bipartition {
    if from == to { rho.clone() } else { rho.swapped() }
}

/// Irreducible character of `S_n` by the Murnaghan–Nakayama rule.
pub fn symmetric_character(shape: &Partition, cycle_type: &Partition) -> i64 {
    if shape.size() != cycle_type.size() {
        return 0;
    }
    let len = shape.len();
    let beta: Vec<usize> = (0..len).map(|i| shape.part(i) + len - 1 - i).collect();
    mn_beta(&beta, cycle_type.parts())
}

fn mn_beta(beta: &[usize], cycles: &[usize]) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&c| target < c && c < b).count() as i64;
        let mut next = beta.to_vec();
        next[idx] = target;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(&next, rest);
    }
    total
}

/// Dimension of the irreducible `W_d`-module: `C(d, |λ|) f^λ f^μ`
/// (the same under either labeling).
pub fn irr_dim(rho: &Bipartition) -> u64 {
    let d = rho.size() as u64;
    let a = rho.first.size() as u64;
    let binom = (1..=a).fold(1u64, |acc, k| acc * (d - a + k) / k);
    binom * rho.first.num_standard_tableaux() * rho.second.num_standard_tableaux()
}

fn block_types(w: &SignedPermutation, a: usize) -> (ConjClassLabel, ConjClassLabel) {
    let d = w.rank();
    (w.restrict(0, a).cycle_type(), w.restrict(a, d).cycle_type())
}

fn twisted_value(shape: &Partition, class: &ConjClassLabel, twisted: bool) -> i64 {
    let base = symmetric_character(shape, &class.underlying_cycle_type());
    if twisted && class.neg_cycles.len() % 2 == 1 { -base } else { base }
}

/// The character table of `W_d` under a fixed [`Labeling`].
#[derive(Clone, Debug)]
pub struct CharacterTable {
    d: usize,
    labeling: Labeling,
    rows: Vec<Bipartition>,
    classes: Vec<ConjClassLabel>,
    class_sizes: Vec<u64>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(d: usize, labeling: Labeling) -> Result<Self> {
        Self::with_bound(d, labeling, DEFAULT_MAX_RANK)
    }

    pub fn with_bound(d: usize, labeling: Labeling, max_rank: usize) -> Result<Self> {
        if d > max_rank {
            return Err(Error::Bound(format!("character table of W_{d} exceeds rank bound {max_rank}")));
        }
        let rows = bipartitions(d);
        let classes = class_labels(d);
        let index: BTreeMap<&ConjClassLabel, usize> =
            classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let order = group_order(d);

        // For every split a and class c: how many elements of c lie in
        // W_a × W_{d-a}, broken down by their signed types on the two blocks.
        let mut sizes = vec![0u64; classes.len()];
        let mut hist: Vec<Vec<BTreeMap<(ConjClassLabel, ConjClassLabel), u64>>> =
            vec![vec![BTreeMap::new(); classes.len()]; d + 1];
        for w in elements(d) {
            let c = index[&w.cycle_type()];
            sizes[c] += 1;
            for (a, per_class) in hist.iter_mut().enumerate() {
                if w.preserves_prefix(a) {
                    *per_class[c].entry(block_types(&w, a)).or_insert(0) += 1;
                }
            }
        }

        let mut values = vec![vec![0i64; classes.len()]; rows.len()];
        for (r, rho) in rows.iter().enumerate() {
            let a = rho.first.size();
            let sub_order = group_order(a) * group_order(d - a);
            for c in 0..classes.len() {
                let sum: i64 = hist[a][c]
                    .iter()
                    .map(|((t1, t2), &count)| {
                        let v1 = twisted_value(&rho.first, t1, labeling == Labeling::Springer);
                        let v2 = twisted_value(&rho.second, t2, labeling == Labeling::SchurWeyl);
                        count as i64 * v1 * v2
                    })
                    .sum();
                let numerator = sum * order as i64;
                let denominator = (sizes[c] * sub_order) as i64;
                if numerator % denominator != 0 {
                    return Err(Error::Consistency(format!(
                        "induced character {rho} is not integral on class {}",
                        classes[c]
                    )));
                }
                values[r][c] = numerator / denominator;
            }
        }
        Ok(CharacterTable { d, labeling, rows, classes, class_sizes: sizes, values })
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn labeling(&self) -> Labeling {
        self.labeling
    }

    pub fn order(&self) -> u64 {
        group_order(self.d)
    }

    pub fn rows(&self) -> &[Bipartition] {
        &self.rows
    }

    pub fn classes(&self) -> &[ConjClassLabel] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn row_index(&self, rho: &Bipartition) -> Option<usize> {
        self.rows.iter().position(|r| r == rho)
    }

    pub fn class_index(&self, cls: &ConjClassLabel) -> Option<usize> {
        self.classes.iter().position(|c| c == cls)
    }

    pub fn row(&self, rho: &Bipartition) -> Result<&[i64]> {
        self.row_index(rho)
            .map(|r| self.values[r].as_slice())
            .ok_or(Error::SizeMismatch { expected: self.d, found: rho.size() })
    }

    pub fn value(&self, rho: &Bipartition, cls: &ConjClassLabel) -> Result<i64> {
        let c = self
            .class_index(cls)
            .ok_or(Error::SizeMismatch { expected: self.d, found: cls.rank() })?;
        Ok(self.row(rho)?[c])
    }

    /// Degree read from the identity column.
    pub fn degree(&self, rho: &Bipartition) -> Result<i64> {
        self.value(rho, &ConjClassLabel::identity(self.d))
    }

    /// `Σ_c |c| χ(c) ψ(c)`, i.e. `|W_d|` times the inner product (all
    /// characters here are real).
    pub fn weighted_product(&self, chi: &[i64], psi: &[i64]) -> i64 {
        self.class_sizes
            .iter()
            .zip(chi.iter().zip(psi))
            .map(|(&s, (&x, &y))| s as i64 * x * y)
            .sum()
    }

    /// Checks both orthogonality relations exactly.
    pub fn check_orthogonality(&self) -> Result<()> {
        let order = self.order() as i64;
        for (i, ri) in self.values.iter().enumerate() {
            for (j, rj) in self.values.iter().enumerate() {
                let got = self.weighted_product(ri, rj);
                let want = if i == j { order } else { 0 };
                if got != want {
                    return Err(Error::Consistency(format!(
                        "row orthogonality <{}, {}> = {got}, expected {want}",
                        self.rows[i], self.rows[j]
                    )));
                }
            }
        }
        for c in 0..self.classes.len() {
            for e in 0..self.classes.len() {
                let got: i64 = self.values.iter().map(|row| row[c] * row[e]).sum();
                let want = if c == e { (order as u64 / self.class_sizes[c]) as i64 } else { 0 };
                if got != want {
                    return Err(Error::Consistency(format!(
                        "column orthogonality ({}, {}) = {got}, expected {want}",
                        self.classes[c], self.classes[e]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Tab-separated table: a header of class labels, a class-size row, then
    /// one row per bipartition.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("rho");
        for c in &self.classes {
            out.push('\t');
            out.push_str(&c.to_string());
        }
        out.push_str("\nclass_size");
        for s in &self.class_sizes {
            out.push_str(&format!("\t{s}"));
        }
        out.push('\n');
        for (rho, row) in self.rows.iter().zip(&self.values) {
            out.push_str(&rho.to_string());
            for v in row {
                out.push_str(&format!("\t{v}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "d": self.d,
            "labeling": self.labeling,
            "classes": self.classes,
            "class_sizes": self.class_sizes,
            "rows": self.rows.iter().zip(&self.values).map(|(rho, row)| json!({
                "rho": rho,
                "values": row,
            })).collect::<Vec<_>>(),
        })
    }
}

/// `χ_ρ` at one class.
pub fn character(rho: &Bipartition, cls: &ConjClassLabel, labeling: Labeling) -> Result<i64> {
    if rho.size() != cls.rank() {
        return Err(Error::SizeMismatch { expected: rho.size(), found: cls.rank() });
    }
    CharacterTable::new(rho.size(), labeling)?.value(rho, cls)
}

/// The block subgroup `W_d' = S_{d_1} × ⋯ × S_{d_n} × W_m` of `W_d` for a
/// composition in `Q_{N,2d}`: the symmetric factors act on consecutive
/// blocks of sizes `d_1, …, d_n` with no sign changes, and the last block of
/// size `m = d_{n+1} / 2` carries a full hyperoctahedral factor.
#[derive(Clone, Debug)]
pub struct BlockSubgroup {
    blocks: Vec<(usize, usize)>,
    signed_start: usize,
    d: usize,
}

impl BlockSubgroup {
    pub fn new(dcomp: &SymComposition) -> Self {
        let mut blocks = Vec::new();
        let mut start = 0;
        for &size in dcomp.isotropic_blocks() {
            blocks.push((start, start + size));
            start += size;
        }
        BlockSubgroup { blocks, signed_start: start, d: dcomp.rank() }
    }

    pub fn contains(&self, w: &SignedPermutation) -> bool {
        let unsigned_ok = self.blocks.iter().all(|&(s, e)| {
            (s..e).all(|k| !w.flips[k] && (s..e).contains(&w.perm[k]))
        });
        unsigned_ok && (self.signed_start..self.d).all(|k| w.perm[k] >= self.signed_start)
    }

    pub fn order(&self) -> u64 {
        let sym: u64 = self.blocks.iter().map(|&(s, e)| (1..=(e - s) as u64).product::<u64>()).product();
        sym * group_order(self.d - self.signed_start)
    }

    pub fn index(&self) -> u64 {
        group_order(self.d) / self.order()
    }
}

/// Permutation character of `W_d` on the cosets of the block subgroup of
/// `dcomp`: at each class, the number of cosets fixed by a representative.
pub fn perm_character_on_cosets(dcomp: &SymComposition) -> Result<BTreeMap<ConjClassLabel, u64>> {
    let d = dcomp.rank();
    if d > DEFAULT_MAX_RANK {
        return Err(Error::Bound(format!("W_{d} exceeds rank bound {DEFAULT_MAX_RANK}")));
    }
    let sub = BlockSubgroup::new(dcomp);
    let order = group_order(d);
    let mut in_class: BTreeMap<ConjClassLabel, (u64, u64)> =
        class_labels(d).into_iter().map(|c| (c, (0, 0))).collect();
    for w in elements(d) {
        let entry = in_class.get_mut(&w.cycle_type()).expect("every class is labelled");
        entry.0 += 1;
        if sub.contains(&w) {
            entry.1 += 1;
        }
    }
    // #{x : x⁻¹ g x ∈ H} / |H| = |C(g)| |cl(g) ∩ H| / |H|.
    in_class
        .into_iter()
        .map(|(c, (size, meet))| {
            let numerator = order * meet;
            let denominator = size * sub.order();
            if !numerator.is_multiple_of(denominator) {
                return Err(Error::Consistency(format!("fixed coset count at {c} is not integral")));
            }
            Ok((c, numerator / denominator))
        })
        .collect()
}

/// Multiplicities of the irreducibles in a class function, by inner
/// products. Fails if the input is not a genuine character.
pub fn decompose_character(
    values: &BTreeMap<ConjClassLabel, i64>,
    table: &CharacterTable,
) -> Result<BTreeMap<Bipartition, u64>> {
    let column: Vec<i64> = table
        .classes()
        .iter()
        .map(|c| {
            values
                .get(c)
                .copied()
                .ok_or_else(|| Error::InvalidArgument(format!("class function is missing class {c}")))
        })
        .collect::<Result<_>>()?;
    let order = table.order() as i64;
    let mut out = BTreeMap::new();
    for (rho, row) in table.rows().iter().zip(table.values()) {
        let product = table.weighted_product(row, &column);
        if product % order != 0 || product < 0 {
            return Err(Error::Consistency(format!(
                "multiplicity of {rho} is {product}/{order}, not a nonnegative integer"
            )));
        }
        if product != 0 {
            out.insert(rho.clone(), (product / order) as u64);
        }
    }
    Ok(out)
}

/// The regular character: `|W_d|` at the identity, zero elsewhere.
pub fn regular_character(d: usize) -> BTreeMap<ConjClassLabel, i64> {
    let id = ConjClassLabel::identity(d);
    class_labels(d)
        .into_iter()
        .map(|c| {
            let v = if c == id { group_order(d) as i64 } else { 0 };
            (c, v)
        })
        .collect()
}
