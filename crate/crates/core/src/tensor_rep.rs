//! The bimodule `E^{⊗d}`, `E = C^N`, `N = 2n + 1`.
//!
//! `W_d` acts on the right by signed permutations of tensor slots. Two
//! single-factor models of the sign change are provided:
//!
//! * [`Convention::Swap`]: the standard basis `f_1, …, f_N`, with the sign
//!   change sending `f_i ↦ f_{N+1-i}`. Θ-matrices, the grading by `Q_{N,2d}`
//!   and the `sl_N^θ` generators live here.
//! * [`Convention::Sign`]: a basis split into the `gl_{n+1}` block
//!   (positions `1..=n+1`, fixed by the sign change) and the `gl_n` block
//!   (positions `n+2..=N`, negated).
//!
//! [`change_of_basis`] intertwines the two. Isotypic components are indexed
//! in the [`Labeling::SchurWeyl`] convention, so `(α, β)` occurs with
//! multiplicity `dim V_α(gl_{n+1}) · dim V_β(gl_n)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperoctahedral::{self, elements, group_order, irr_dim, CharacterTable, Labeling, SignedPermutation};
use crate::matrix::{rank_of_integer_rows, ExactMatrix};
use crate::partitions::{bipartitions, enumerate_q, Bipartition, SymComposition};

/// Default ceiling on `N^d`.
pub const DEFAULT_MAX_CELLS: usize = 20_000;

/// Which single-factor model of the sign change to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Convention {
    Swap,
    Sign,
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "swap" => Ok(Convention::Swap),
            "sign" => Ok(Convention::Sign),
            _ => Err(Error::Parse { what: "convention", input: s.to_string() }),
        }
    }
}

/// A factor of the Levi subalgebra `gl_{n+1} ⊕ gl_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeviBlock {
    /// `gl_{n+1}`, block 1.
    First,
    /// `gl_n`, block 2.
    Second,
}

impl LeviBlock {
    pub fn from_index(block: usize) -> Result<Self> {
        match block {
            1 => Ok(LeviBlock::First),
            2 => Ok(LeviBlock::Second),
            _ => Err(Error::InvalidArgument(format!("block must be 1 or 2, got {block}"))),
        }
    }
}

/// A basis vector `f_{i_1} ⊗ ⋯ ⊗ f_{i_d}`, indices 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorBasisIndex(Vec<usize>);

impl TensorBasisIndex {
    pub fn new(indices: Vec<usize>) -> Self {
        TensorBasisIndex(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for TensorBasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", text.join(","))
    }
}

impl fmt::Debug for TensorBasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `d_i = #{k : i_k = i} + #{k : i_k = N+1-i}`.
pub fn grading(idx: &TensorBasisIndex, n: usize) -> SymComposition {
    let big_n = 2 * n + 1;
    let mut entries = vec![0; big_n];
    for &i in idx.indices() {
        entries[i - 1] += 1;
        entries[big_n - i] += 1;
    }
    SymComposition::new(entries).expect("grading is symmetric with even total")
}

/// A 0/1 matrix of size `N × 2d` with one 1 per column and
/// `a_{ij} = a_{N+1-i, 2d+1-j}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ThetaMatrix {
    entries: Vec<Vec<u8>>,
}

impl ThetaMatrix {
    pub fn new(entries: Vec<Vec<u8>>) -> Result<Self> {
        let big_n = entries.len();
        let big_d = entries.first().map_or(0, Vec::len);
        let bad = |why: &str| Error::InvalidArgument(format!("not a theta matrix: {why}"));
        if big_n.is_multiple_of(2) || big_d % 2 == 1 || entries.iter().any(|r| r.len() != big_d) {
            return Err(bad("shape must be odd x even"));
        }
        for j in 0..big_d {
            if entries.iter().map(|r| r[j] as usize).sum::<usize>() != 1
                || entries.iter().any(|r| r[j] > 1)
            {
                return Err(bad("every column must contain a single 1"));
            }
        }
        for i in 0..big_n {
            for j in 0..big_d {
                if entries[i][j] != entries[big_n - 1 - i][big_d - 1 - j] {
                    return Err(bad("entries must be centro-symmetric"));
                }
            }
        }
        Ok(ThetaMatrix { entries })
    }

    fn from_first_columns(rows: &[usize], big_n: usize) -> Self {
        let d = rows.len();
        let mut entries = vec![vec![0u8; 2 * d]; big_n];
        for (j, &r) in rows.iter().enumerate() {
            entries[r - 1][j] = 1;
            entries[big_n - r][2 * d - 1 - j] = 1;
        }
        ThetaMatrix { entries }
    }

    pub fn entries(&self) -> &[Vec<u8>] {
        &self.entries
    }

    /// The row holding the 1 of column `j` (both 1-based).
    pub fn row_of_column(&self, j: usize) -> usize {
        self.entries.iter().position(|r| r[j - 1] == 1).expect("validated column") + 1
    }

    pub fn row_sums(&self) -> SymComposition {
        let sums = self.entries.iter().map(|r| r.iter().map(|&x| x as usize).sum()).collect();
        SymComposition::new(sums).expect("row sums of a theta matrix are symmetric")
    }
}

impl fmt::Display for ThetaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.entries.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        f.write_str(&rows.join("/"))
    }
}

impl fmt::Debug for ThetaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Theta[{self}]")
    }
}

/// `χ(A) = f_{i_1} ⊗ ⋯ ⊗ f_{i_d}` with `i_k` the row of the 1 in column `k`.
pub fn theta_chi(m: &ThetaMatrix) -> TensorBasisIndex {
    let d = m.entries[0].len() / 2;
    TensorBasisIndex((1..=d).map(|k| m.row_of_column(k)).collect())
}

/// Θ (all row sums) or `Θ_dcomp`, in the order of the tensor basis.
pub fn theta_enumerate(n: usize, d: usize, dcomp: Option<&SymComposition>) -> Result<Vec<ThetaMatrix>> {
    let space = TensorSpace::new(n, d)?;
    if let Some(c) = dcomp {
        space.check_component(c)?;
    }
    Ok(theta_enumerate_in(&space, dcomp))
}

/// As [`theta_enumerate`], for an existing space; `dcomp` is not validated.
pub fn theta_enumerate_in(space: &TensorSpace, dcomp: Option<&SymComposition>) -> Vec<ThetaMatrix> {
    space
        .basis()
        .filter(|idx| dcomp.is_none_or(|c| grading(idx, space.n) == *c))
        .map(|idx| ThetaMatrix::from_first_columns(idx.indices(), space.big_n))
        .collect()
}

/// A named matrix, e.g. one of the `sl_N^θ` generators.
#[derive(Clone, Debug)]
pub struct NamedMatrix {
    pub name: String,
    pub matrix: ExactMatrix,
}

/// Per-component multiplicities of one isotypic component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDecomposition {
    pub rho: Bipartition,
    pub per_weight: BTreeMap<SymComposition, u64>,
    pub total: u64,
}

impl GradedDecomposition {
    pub fn get(&self, dcomp: &SymComposition) -> u64 {
        self.per_weight.get(dcomp).copied().unwrap_or(0)
    }
}

/// `E^{⊗d}` for fixed `(n, d)`, with basis vectors numbered in lexicographic
/// order of their index tuples (slot 1 most significant).
#[derive(Clone, Debug)]
pub struct TensorSpace {
    n: usize,
    d: usize,
    big_n: usize,
    dim: usize,
}

impl TensorSpace {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        Self::with_max_cells(n, d, DEFAULT_MAX_CELLS)
    }

    pub fn with_max_cells(n: usize, d: usize, max_cells: usize) -> Result<Self> {
        let big_n = 2 * n + 1;
        let dim = u32::try_from(d)
            .ok()
            .and_then(|e| big_n.checked_pow(e))
            .filter(|&dim| dim <= max_cells)
            .ok_or_else(|| Error::Bound(format!("N^d = {big_n}^{d} exceeds the ceiling {max_cells}")))?;
        Ok(TensorSpace { n, d, big_n, dim })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn encode(&self, idx: &TensorBasisIndex) -> usize {
        idx.indices().iter().fold(0, |acc, &i| acc * self.big_n + (i - 1))
    }

    pub fn decode(&self, mut k: usize) -> TensorBasisIndex {
        let mut out = vec![0; self.d];
        for slot in (0..self.d).rev() {
            out[slot] = k % self.big_n + 1;
            k /= self.big_n;
        }
        TensorBasisIndex(out)
    }

    pub fn basis(&self) -> impl Iterator<Item = TensorBasisIndex> + '_ {
        (0..self.dim).map(|k| self.decode(k))
    }

    pub fn check_component(&self, dcomp: &SymComposition) -> Result<()> {
        if dcomp.big_n() != self.big_n || dcomp.total() != 2 * self.d {
            return Err(Error::InvalidComposition {
                entries: dcomp.entries().to_vec(),
                reason: format!("not in Q_{{{},{}}}", self.big_n, 2 * self.d),
            });
        }
        Ok(())
    }

    /// Basis positions grouped by grading, for every element of `Q_{N,2d}`.
    pub fn grading_blocks(&self) -> BTreeMap<SymComposition, Vec<usize>> {
        let mut blocks: BTreeMap<SymComposition, Vec<usize>> = enumerate_q(self.n, 2 * self.d)
            .expect("2d is even")
            .into_iter()
            .map(|c| (c, Vec::new()))
            .collect();
        for (k, idx) in self.basis().enumerate() {
            blocks.get_mut(&grading(&idx, self.n)).expect("grading lies in Q").push(k);
        }
        blocks
    }

    fn flip_single(&self, i: usize, convention: Convention) -> (usize, i64) {
        match convention {
            Convention::Swap => (self.big_n + 1 - i, 1),
            Convention::Sign if i > self.n + 1 => (i, -1),
            Convention::Sign => (i, 1),
        }
    }

    /// Image of a basis vector under `w`: the target position and a sign.
    pub fn act(&self, w: &SignedPermutation, idx: &TensorBasisIndex, convention: Convention) -> (usize, i64) {
        let mut out = vec![0; self.d];
        let mut sign = 1;
        for (k, &i) in idx.indices().iter().enumerate() {
            let (image, s) = if w.flips()[k] { self.flip_single(i, convention) } else { (i, 1) };
            out[w.perm()[k]] = image;
            sign *= s;
        }
        (self.encode(&TensorBasisIndex(out)), sign)
    }

    fn check_rank(&self, w: &SignedPermutation) -> Result<()> {
        if w.rank() != self.d {
            return Err(Error::SizeMismatch { expected: self.d, found: w.rank() });
        }
        Ok(())
    }

    /// The monomial matrix of `w`.
    pub fn w_action_matrix(&self, w: &SignedPermutation, convention: Convention) -> Result<ExactMatrix> {
        self.check_rank(w)?;
        let mut m = ExactMatrix::zeros(self.dim, self.dim);
        for (k, idx) in self.basis().enumerate() {
            let (target, sign) = self.act(w, &idx, convention);
            m.add_integer(target, k, sign);
        }
        Ok(m)
    }

    /// Number of basis vectors of grading `dcomp` fixed by `w` in the swap
    /// convention (the action there is a plain permutation of Θ).
    pub fn fixed_points(&self, w: &SignedPermutation, dcomp: &SymComposition) -> Result<usize> {
        self.check_rank(w)?;
        self.check_component(dcomp)?;
        Ok(self
            .basis()
            .enumerate()
            .filter(|(k, idx)| grading(idx, self.n) == *dcomp && self.act(w, idx, Convention::Swap).0 == *k)
            .count())
    }

    fn single_change_of_basis(&self) -> ExactMatrix {
        let (n, big_n) = (self.n, self.big_n);
        let one = || BigRational::one();
        let mut c = ExactMatrix::zeros(big_n, big_n);
        for k in 1..=n {
            // u_k^+ in column k, u_k^- in column n + 1 + k
            c.set(k - 1, k - 1, one());
            c.set(big_n - k, k - 1, one());
            c.set(k - 1, n + k, one());
            c.set(big_n - k, n + k, -one());
        }
        c.set(n, n, one());
        c
    }

    fn tensor_power(&self, single: &ExactMatrix) -> ExactMatrix {
        (1..self.d).fold(single.clone(), |acc, _| acc.kron(single))
    }

    /// `C` with `C⁻¹ · swap(w) · C = sign(w)` for every `w`: the `d`-th
    /// tensor power of the single-factor basis change
    /// `u_k^± = f_k ± f_{N+1-k}`, `f_{n+1}` fixed. Verified on the
    /// generators before returning.
    pub fn change_of_basis(&self) -> Result<ExactMatrix> {
        let single = self.single_change_of_basis();
        let c = self.tensor_power(&single);
        if self.d == 0 {
            return Ok(c);
        }
        let c_inv = self.tensor_power(&single.inverse()?);
        for w in hyperoctahedral::generators(self.d)? {
            let swap = self.w_action_matrix(&w, Convention::Swap)?;
            let sign = self.w_action_matrix(&w, Convention::Sign)?;
            if c_inv.checked_mul(&swap)?.checked_mul(&c)? != sign {
                return Err(Error::Consistency(format!("change of basis fails to conjugate generator {w:?}")));
            }
        }
        Ok(c)
    }

    /// Extends a single-factor operator to `E^{⊗d}` by the Leibniz rule
    /// `X ↦ Σ_k 1 ⊗ ⋯ ⊗ X ⊗ ⋯ ⊗ 1`.
    pub fn leibniz(&self, single: &ExactMatrix) -> Result<ExactMatrix> {
        if single.rows() != self.big_n || single.cols() != self.big_n {
            return Err(Error::SizeMismatch { expected: self.big_n, found: single.rows() });
        }
        let mut out = ExactMatrix::zeros(self.dim, self.dim);
        for (col, idx) in self.basis().enumerate() {
            for slot in 0..self.d {
                let source = idx.indices()[slot];
                for target in 1..=self.big_n {
                    let coeff = single.get(target - 1, source - 1);
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut image = idx.indices().to_vec();
                    image[slot] = target;
                    let row = self.encode(&TensorBasisIndex(image));
                    let updated = out.get(row, col) + coeff;
                    out.set(row, col, updated);
                }
            }
        }
        Ok(out)
    }

    /// The matrix unit `E_{row,col}` of one Levi block (1-based within the
    /// block) acting on `E^{⊗d}` in the sign-convention basis.
    pub fn g_action_matrix(&self, block: LeviBlock, row: usize, col: usize) -> Result<ExactMatrix> {
        let (offset, size) = match block {
            LeviBlock::First => (0, self.n + 1),
            LeviBlock::Second => (self.n + 1, self.n),
        };
        if row == 0 || col == 0 || row > size || col > size {
            return Err(Error::InvalidArgument(format!(
                "matrix unit ({row}, {col}) outside a block of size {size}"
            )));
        }
        let mut unit = ExactMatrix::zeros(self.big_n, self.big_n);
        unit.set(offset + row - 1, offset + col - 1, BigRational::one());
        self.leibniz(&unit)
    }

    fn single_itheta(&self) -> Vec<(String, ExactMatrix)> {
        let big_n = self.big_n;
        let unit = |a: usize, b: usize| {
            let mut m = ExactMatrix::zeros(big_n, big_n);
            m.set(a - 1, b - 1, BigRational::one());
            m
        };
        let e = |i: usize| unit(i, i + 1);
        let f = |i: usize| unit(i + 1, i);
        let h = |i: usize| &unit(i, i) - &unit(i + 1, i + 1);
        let mut out = Vec::new();
        for i in 1..=self.n {
            let j = big_n - i;
            out.push((format!("E{i}"), &e(i) + &f(j)));
            out.push((format!("F{i}"), &f(i) + &e(j)));
            out.push((format!("H{i}"), &h(i) - &h(j)));
        }
        out
    }

    /// `E_i = e_i + f_{N-i}`, `F_i = f_i + e_{N-i}`, `H_i = h_i - h_{N-i}`
    /// for `i = 1..=n`, acting in the swap-convention basis.
    pub fn itheta_generators(&self) -> Result<Vec<NamedMatrix>> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("sl_1 has no generators (n = 0)".into()));
        }
        self.single_itheta()
            .into_iter()
            .map(|(name, single)| Ok(NamedMatrix { name, matrix: self.leibniz(&single)? }))
            .collect()
    }

    /// Whether every single-factor `sl_N^θ` generator becomes block diagonal
    /// for `gl_{n+1} ⊕ gl_n` after the change of basis.
    pub fn itheta_is_levi_after_change_of_basis(&self) -> Result<bool> {
        let c = self.single_change_of_basis();
        let c_inv = c.inverse()?;
        let split = self.n + 1;
        for (_, x) in self.single_itheta() {
            let y = c_inv.checked_mul(&x)?.checked_mul(&c)?;
            for i in 0..self.big_n {
                for j in 0..self.big_n {
                    if (i < split) != (j < split) && !y.get(i, j).is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    fn group_action(&self, convention: Convention) -> Result<GroupAction> {
        if self.d > hyperoctahedral::DEFAULT_MAX_RANK {
            return Err(Error::Bound(format!("W_{} exceeds rank bound", self.d)));
        }
        let table = CharacterTable::new(self.d, Labeling::SchurWeyl)?;
        let basis: Vec<TensorBasisIndex> = self.basis().collect();
        let (actions, class_of) = elements(self.d)
            .into_iter()
            .map(|w| {
                let images = basis.iter().map(|idx| self.act(&w, idx, convention)).collect();
                let class = table.class_index(&w.inverse().cycle_type()).expect("class present");
                (images, class)
            })
            .unzip();
        Ok(GroupAction { dim: self.dim, order: group_order(self.d), actions, class_of, table })
    }

    /// `P_ρ = (dim Z_ρ / |W|) Σ_w χ_ρ(w⁻¹) w`.
    pub fn isotypic_projector(&self, rho: &Bipartition, convention: Convention) -> Result<ExactMatrix> {
        self.group_action(convention)?.projector(rho)?.to_exact()
    }

    /// Multiplicity of every `Z_ρ`: `rank(P_ρ) / dim Z_ρ`.
    pub fn schur_weyl_decompose(&self, convention: Convention) -> Result<BTreeMap<Bipartition, u64>> {
        let action = self.group_action(convention)?;
        bipartitions(self.d)
            .par_iter()
            .map(|rho| {
                let projector = action.projector(rho)?;
                let rank = projector.rank(None) as u64;
                let dim = irr_dim(rho);
                if !rank.is_multiple_of(dim) {
                    return Err(Error::Consistency(format!("rank {rank} of P_{rho} is not a multiple of {dim}")));
                }
                Ok((rho.clone(), rank / dim))
            })
            .collect()
    }

    /// Multiplicity of `Z_ρ` inside each graded piece `C[Θ_dcomp]`
    /// (swap convention).
    pub fn graded_multiplicity(&self, rho: &Bipartition) -> Result<GradedDecomposition> {
        let action = self.group_action(Convention::Swap)?;
        let projector = action.projector(rho)?;
        let dim = irr_dim(rho);
        let blocks: Vec<(SymComposition, Vec<usize>)> = self.grading_blocks().into_iter().collect();
        let per_weight = blocks
            .par_iter()
            .map(|(dcomp, positions)| {
                let rank = projector.rank(Some(positions)) as u64;
                if !rank.is_multiple_of(dim) {
                    return Err(Error::Consistency(format!(
                        "rank {rank} of P_{rho} on component {dcomp} is not a multiple of {dim}"
                    )));
                }
                Ok((dcomp.clone(), rank / dim))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        let total = per_weight.values().sum();
        Ok(GradedDecomposition { rho: rho.clone(), per_weight, total })
    }
}

/// Monomial action of every group element, cached for projector assembly.
struct GroupAction {
    dim: usize,
    order: u64,
    actions: Vec<Vec<(usize, i64)>>,
    class_of: Vec<usize>,
    table: CharacterTable,
}

/// `P = scale · S` with `S` an integer matrix.
struct IntegerProjector {
    dim: usize,
    scale: BigRational,
    integer: Vec<i64>,
}

impl GroupAction {
    fn projector(&self, rho: &Bipartition) -> Result<IntegerProjector> {
        let row = self.table.row(rho)?;
        let mut integer = vec![0i64; self.dim * self.dim];
        for (images, &class) in self.actions.iter().zip(&self.class_of) {
            let chi = row[class];
            if chi == 0 {
                continue;
            }
            for (col, &(target, sign)) in images.iter().enumerate() {
                integer[target * self.dim + col] += chi * sign;
            }
        }
        let scale = BigRational::new(BigInt::from(irr_dim(rho)), BigInt::from(self.order));
        let projector = IntegerProjector { dim: self.dim, scale, integer };
        projector.check_idempotent(rho)?;
        Ok(projector)
    }
}

impl IntegerProjector {
    // P² = P  ⇔  S² = S / scale, checked in integers.
    fn check_idempotent(&self, rho: &Bipartition) -> Result<()> {
        let n = self.dim;
        let inv = self.scale.recip();
        let factor = inv.to_integer().to_i64().filter(|_| inv.is_integer());
        let mut square = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.integer[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    square[i * n + j] += a * self.integer[k * n + j];
                }
            }
        }
        let ok = match factor {
            Some(f) => square.iter().zip(&self.integer).all(|(&s, &x)| s == f * x),
            None => {
                let (num, den) = (inv.numer().to_i64(), inv.denom().to_i64());
                match (num, den) {
                    (Some(num), Some(den)) => {
                        square.iter().zip(&self.integer).all(|(&s, &x)| s * den == num * x)
                    }
                    _ => false,
                }
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Consistency(format!("projector for {rho} is not idempotent")))
        }
    }

    fn rank(&self, positions: Option<&[usize]>) -> usize {
        let all: Vec<usize>;
        let positions = match positions {
            Some(p) => p,
            None => {
                all = (0..self.dim).collect();
                &all
            }
        };
        let rows = positions
            .iter()
            .map(|&i| positions.iter().map(|&j| BigInt::from(self.integer[i * self.dim + j])).collect())
            .collect();
        rank_of_integer_rows(rows, positions.len())
    }

    fn to_exact(&self) -> Result<ExactMatrix> {
        let n = self.dim;
        Ok(ExactMatrix::from_fn(n, n, |i, j| {
            let x = self.integer[i * n + j];
            if x == 0 { BigRational::zero() } else { &self.scale * BigInt::from(x) }
        }))
    }
}

/// `w` acting on `E^{⊗d}`.
pub fn w_action_matrix(w: &SignedPermutation, n: usize, convention: Convention) -> Result<ExactMatrix> {
    TensorSpace::new(n, w.rank())?.w_action_matrix(w, convention)
}

pub fn change_of_basis(n: usize, d: usize) -> Result<ExactMatrix> {
    TensorSpace::new(n, d)?.change_of_basis()
}

pub fn g_action_matrix(block: LeviBlock, row: usize, col: usize, n: usize, d: usize) -> Result<ExactMatrix> {
    TensorSpace::new(n, d)?.g_action_matrix(block, row, col)
}

pub fn itheta_generator_matrices(n: usize, d: usize) -> Result<Vec<NamedMatrix>> {
    TensorSpace::new(n, d)?.itheta_generators()
}

pub fn isotypic_projector(rho: &Bipartition, n: usize, d: usize, convention: Convention) -> Result<ExactMatrix> {
    if rho.size() != d {
        return Err(Error::SizeMismatch { expected: d, found: rho.size() });
    }
    TensorSpace::new(n, d)?.isotypic_projector(rho, convention)
}

pub fn schur_weyl_decompose(n: usize, d: usize) -> Result<BTreeMap<Bipartition, u64>> {
    TensorSpace::new(n, d)?.schur_weyl_decompose(Convention::Swap)
}

pub fn graded_multiplicity(rho: &Bipartition, n: usize, d: usize) -> Result<GradedDecomposition> {
    if rho.size() != d {
        return Err(Error::SizeMismatch { expected: d, found: rho.size() });
    }
    TensorSpace::new(n, d)?.graded_multiplicity(rho)
}

/// `dim V_α(gl_{n+1}) · dim V_β(gl_n)`: the multiplicity predicted for
/// `(α, β)`.
pub fn levi_dim(rho: &Bipartition, n: usize) -> u64 {
    rho.first.gl_dim(n + 1) * rho.second.gl_dim(n)
}
