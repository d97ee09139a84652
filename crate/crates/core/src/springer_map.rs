//! The combinatorial Springer correspondence for `Sp_{2d}`:
//! `ρ = (λ, μ) ↦ A_ρ`, a type C partition of `2d`.
//!
//! Interleave `ν_{2i-1} = μ_i`, `ν_{2i} = λ_i` (zero elsewhere) and scan
//! left to right. At position `i`, against `ν_{i+1}`:
//!
//! * `ν_i = ν_{i+1} - 1`: `a_i = a_{i+1} = 2ν_i + 1`, advance by two;
//! * `ν_i ≤ ν_{i+1} - 2`: `a_i = 2ν_{i+1} - 2`, `a_{i+1} = 2ν_i + 2`,
//!   advance by two;
//! * otherwise (`ν_i ≥ ν_{i+1}`): `a_i = 2ν_i`, advance by one.
//!
//! The last position compares against `0`. The `a_i` are then sorted into a
//! Young diagram. Labels are in the [`Labeling::Springer`] convention.
//!
//! [`Labeling::Springer`]: crate::hyperoctahedral::Labeling::Springer

use std::collections::BTreeMap;
use std::fmt;

use log::debug;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperoctahedral::irr_dim;
use crate::partitions::{bipartitions, type_c_partitions, Bipartition, Partition, TypeCPartition};

/// Largest `d` accepted by the batch operations.
pub const DEFAULT_MAX_RANK: usize = 20;

/// The interleaved sequence `ν`, stored 0-based (`values[0]` is `ν_1`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NuSequence(Vec<usize>);

impl NuSequence {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for NuSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", text.join(","))
    }
}

/// Padding used by [`springer_orbit`]: `2(l(λ) + l(μ)) + 2`.
pub fn default_padding(rho: &Bipartition) -> usize {
    2 * (rho.first.len() + rho.second.len()) + 2
}

/// `ν` for `rho`, zero-padded to `length`.
pub fn nu_sequence(rho: &Bipartition, length: usize) -> Result<NuSequence> {
    let needed = 2 * rho.first.len().max(rho.second.len()) + 2;
    if length < needed {
        return Err(Error::InvalidArgument(format!(
            "nu sequence for {rho} needs length at least {needed}, got {length}"
        )));
    }
    let mut values = vec![0; length];
    for (i, &m) in rho.second.parts().iter().enumerate() {
        values[2 * i] = m;
    }
    for (i, &l) in rho.first.parts().iter().enumerate() {
        values[2 * i + 1] = l;
    }
    Ok(NuSequence(values))
}

/// Intermediate data of one evaluation of the map.
#[derive(Clone, Debug)]
pub struct SpringerTrace {
    pub nu: NuSequence,
    /// The `a_i` in emission order, zeros included.
    pub raw: Vec<usize>,
    /// Whether sorting changed the emission order of the nonzero parts.
    pub reordered: bool,
    pub orbit: TypeCPartition,
}

fn scan(nu: &[usize]) -> Vec<usize> {
    let mut a = vec![0; nu.len()];
    let mut i = 0;
    while i < nu.len() {
        let cur = nu[i];
        let next = nu.get(i + 1).copied().unwrap_or(0);
        if cur + 1 == next {
            a[i] = 2 * cur + 1;
            a[i + 1] = 2 * cur + 1;
            i += 2;
        } else if cur + 2 <= next {
            a[i] = 2 * next - 2;
            a[i + 1] = 2 * cur + 2;
            i += 2;
        } else {
            a[i] = 2 * cur;
            i += 1;
        }
    }
    a
}

/// Runs the scan with an explicit padding length.
pub fn springer_trace_padded(rho: &Bipartition, length: usize) -> Result<SpringerTrace> {
    let nu = nu_sequence(rho, length)?;
    let raw = scan(nu.values());
    let nonzero: Vec<usize> = raw.iter().copied().filter(|&x| x > 0).collect();
    let reordered = nonzero.windows(2).any(|w| w[0] < w[1]);
    let sorted = Partition::from_unsorted(nonzero);
    let fail = |what: &str| {
        Error::Consistency(format!("springer map for {rho}: {what} (nu = {nu}, a = {raw:?})"))
    };
    if sorted.size() != 2 * rho.size() {
        return Err(fail("size is not 2d"));
    }
    let orbit = TypeCPartition::new(sorted).map_err(|_| fail("result is not of type C"))?;
    if reordered {
        debug!("springer map for {rho}: emission order {raw:?} sorted to {orbit}");
    }
    Ok(SpringerTrace { nu, raw, reordered, orbit })
}

pub fn springer_trace(rho: &Bipartition) -> Result<SpringerTrace> {
    springer_trace_padded(rho, default_padding(rho))
}

/// `A_ρ`.
pub fn springer_orbit(rho: &Bipartition) -> Result<TypeCPartition> {
    Ok(springer_trace(rho)?.orbit)
}

/// All bipartitions of `d` whose Springer orbit is `a`.
pub fn orbit_fiber(a: &TypeCPartition, d: usize) -> Result<Vec<Bipartition>> {
    if a.size() != 2 * d {
        return Err(Error::SizeMismatch { expected: 2 * d, found: a.size() });
    }
    let mut fiber = Vec::new();
    for rho in bipartitions(d) {
        if springer_orbit(&rho)? == *a {
            fiber.push(rho);
        }
    }
    Ok(fiber)
}

/// The whole correspondence at rank `d`, grouped by orbit.
pub fn springer_image(d: usize) -> Result<BTreeMap<TypeCPartition, Vec<Bipartition>>> {
    if d > DEFAULT_MAX_RANK {
        return Err(Error::Bound(format!("springer image for d = {d} exceeds bound {DEFAULT_MAX_RANK}")));
    }
    let mut image: BTreeMap<TypeCPartition, Vec<Bipartition>> = BTreeMap::new();
    for rho in bipartitions(d) {
        image.entry(springer_orbit(&rho)?).or_default().push(rho);
    }
    Ok(image)
}

/// Which type C partitions of `2d` are hit by the map.
#[derive(Clone, Debug, Serialize)]
pub struct Coverage {
    pub d: usize,
    pub orbits: usize,
    pub hit: usize,
    pub missed: Vec<TypeCPartition>,
}

pub fn coverage(d: usize) -> Result<Coverage> {
    let image = springer_image(d)?;
    let all = type_c_partitions(2 * d)?;
    let missed: Vec<TypeCPartition> = all.iter().filter(|a| !image.contains_key(a)).cloned().collect();
    Ok(Coverage { d, orbits: all.len(), hit: all.len() - missed.len(), missed })
}

/// Names used in the `d = 2` correspondence table: the four linear
/// characters and the reflection representation `(1 | d-1)`.
pub fn irrep_name(rho: &Bipartition) -> Option<&'static str> {
    let d = rho.size();
    let row = |p: &Partition| p.len() == 1;
    let column = |p: &Partition| p.parts().iter().all(|&x| x == 1);
    if d == 0 {
        return Some("triv");
    }
    if rho.second.is_empty() && column(&rho.first) {
        Some("Sign")
    } else if rho.first.is_empty() && row(&rho.second) {
        Some("triv")
    } else if rho.second.is_empty() && row(&rho.first) {
        Some("Lsign")
    } else if rho.first.is_empty() && column(&rho.second) {
        Some("Ssign")
    } else if d >= 2 && rho.first.parts() == [1] && row(&rho.second) {
        // label of the reflection representation in the reference table
        Some("reguler")
    } else {
        None
    }
}

/// One row of the correspondence table.
#[derive(Clone, Debug, Serialize)]
pub struct SpringerRow {
    pub name: Option<&'static str>,
    pub rho: Bipartition,
    pub dim: u64,
    pub orbit: TypeCPartition,
}

/// The correspondence table at rank `d`, ordered by orbit (lexicographically
/// ascending, so the zero orbit comes first) and then by label descending.
pub fn springer_table(d: usize) -> Result<Vec<SpringerRow>> {
    if d > DEFAULT_MAX_RANK {
        return Err(Error::Bound(format!("springer table for d = {d} exceeds bound {DEFAULT_MAX_RANK}")));
    }
    let mut rows = bipartitions(d)
        .into_iter()
        .map(|rho| {
            Ok(SpringerRow { name: irrep_name(&rho), dim: irr_dim(&rho), orbit: springer_orbit(&rho)?, rho })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|x, y| x.orbit.cmp(&y.orbit).then_with(|| y.rho.cmp(&x.rho)));
    Ok(rows)
}
