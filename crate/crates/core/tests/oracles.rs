//! Library results against brute-force computations written from scratch.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use spfiber::hyperoctahedral::{elements, group_order, irr_dim, CharacterTable, Labeling};
use spfiber::orbit_geometry::{flag_dim, orbit_dim, richardson};
use spfiber::partitions::{bipartitions, enumerate_q, partitions, type_c_collapse, type_c_partitions};
use spfiber::springer_map::springer_orbit;
use spfiber::tensor_rep::{grading, levi_dim, Convention, TensorSpace};
use spfiber::{Bipartition, ExactMatrix, Partition, SymComposition};

fn ssyt_count(shape: &[usize], m: usize) -> u64 {
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    fn fill(k: usize, cells: &[(usize, usize)], grid: &mut BTreeMap<(usize, usize), usize>, m: usize) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[&(r, c - 1)] } else { 1 };
        let lo_col = if r > 0 { grid[&(r - 1, c)] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=m {
            grid.insert((r, c), v);
            total += fill(k + 1, cells, grid, m);
        }
        grid.remove(&(r, c));
        total
    }
    fill(0, &cells, &mut BTreeMap::new(), m)
}

fn syt_count(shape: &mut Vec<usize>) -> u64 {
    if shape.iter().all(|&x| x == 0) {
        return 1;
    }
    let mut total = 0;
    for i in 0..shape.len() {
        let corner = shape[i] > 0 && (i + 1 == shape.len() || shape[i + 1] < shape[i]);
        if corner {
            shape[i] -= 1;
            total += syt_count(shape);
            shape[i] += 1;
        }
    }
    total
}

fn count_partitions(n: usize, max: usize) -> usize {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n)).map(|k| count_partitions(n - k, k)).sum()
}

#[test]
fn gl_dim_counts_semistandard_tableaux() {
    for n in 0..=5 {
        for p in partitions(n) {
            for m in 0..=4 {
                assert_eq!(p.gl_dim(m), ssyt_count(p.parts(), m), "{p} in gl_{m}");
            }
        }
    }
}

#[test]
fn hook_length_counts_standard_tableaux() {
    let mut factorial = 1u64;
    for n in 0..=8 {
        if n > 0 {
            factorial *= n as u64;
        }
        let mut squares = 0;
        for p in partitions(n) {
            let f = syt_count(&mut p.parts().to_vec());
            assert_eq!(p.num_standard_tableaux(), f, "{p}");
            squares += f * f;
        }
        assert_eq!(squares, factorial);
    }
}

#[test]
fn partition_counts() {
    for n in 0..=15 {
        let all = partitions(n);
        assert_eq!(all.len(), count_partitions(n, n));
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }
}

#[test]
fn collapse_is_the_largest_type_c_partition_below() {
    for size in (0..=10).step_by(2) {
        let type_c = type_c_partitions(size).unwrap();
        for p in partitions(size) {
            let c = type_c_collapse(&p).unwrap();
            assert!(c.dominance_leq(&p).unwrap());
            for q in type_c.iter().filter(|q| q.dominance_leq(&p).unwrap()) {
                assert!(q.dominance_leq(&c).unwrap(), "{q} <= {p} but not <= collapse {c}");
            }
        }
    }
}

#[test]
fn cycle_types_are_conjugacy_classes() {
    for d in 1..=4 {
        let all = elements(d);
        let mut seen = BTreeSet::new();
        let mut classes = 0;
        for w in &all {
            if seen.contains(w) {
                continue;
            }
            let class: BTreeSet<_> =
                all.iter().map(|g| g.multiply(w).unwrap().multiply(&g.inverse()).unwrap()).collect();
            let label = w.cycle_type();
            assert!(class.iter().all(|x| x.cycle_type() == label));
            assert_eq!(class.len() as u64, label.class_size());
            assert_eq!(all.iter().filter(|x| x.cycle_type() == label).count(), class.len());
            seen.extend(class);
            classes += 1;
        }
        assert_eq!(classes, bipartitions(d).len());
    }
}

#[test]
fn tensor_character_matches_levi_dimensions() {
    // trace of w on the tensor space = number of fixed basis vectors
    for (n, d) in [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)] {
        let space = TensorSpace::new(n, d).unwrap();
        let table = CharacterTable::new(d, Labeling::SchurWeyl).unwrap();
        for (j, class) in table.classes().iter().enumerate() {
            let w = class.representative();
            let trace = space.basis().enumerate().filter(|(k, idx)| space.act(&w, idx, Convention::Swap).0 == *k).count();
            let predicted: i64 = table
                .rows()
                .iter()
                .zip(table.values())
                .map(|(rho, row)| levi_dim(rho, n) as i64 * row[j])
                .sum();
            assert_eq!(trace as i64, predicted, "n={n} d={d} class {class}");
        }
    }
}

#[test]
fn graded_multiplicity_matches_fixed_point_inner_products() {
    for (n, d) in [(2, 2), (1, 3), (2, 3)] {
        let space = TensorSpace::new(n, d).unwrap();
        let table = CharacterTable::new(d, Labeling::SchurWeyl).unwrap();
        let group = elements(d);
        for rho in table.rows() {
            let graded = space.graded_multiplicity(rho).unwrap();
            let row = table.row(rho).unwrap();
            for dcomp in enumerate_q(n, 2 * d).unwrap() {
                let sum: i64 = group
                    .iter()
                    .map(|w| {
                        let chi = row[table.class_index(&w.cycle_type()).unwrap()];
                        chi * space.fixed_points(w, &dcomp).unwrap() as i64
                    })
                    .sum();
                assert_eq!(sum % group_order(d) as i64, 0);
                assert_eq!(graded.get(&dcomp), (sum / group_order(d) as i64) as u64, "{rho} at {dcomp}");
            }
        }
    }
}

#[test]
fn grading_counts_match_multinomials() {
    let space = TensorSpace::new(2, 3).unwrap();
    let mut counts: BTreeMap<SymComposition, usize> = BTreeMap::new();
    for idx in space.basis() {
        *counts.entry(grading(&idx, 2)).or_default() += 1;
    }
    for (c, count) in counts {
        // choose which slots land in each pair {i, N+1-i}, then a side for each isotropic slot
        let e = c.entries();
        let mut ways = 1usize;
        let mut left = 3usize;
        for &k in c.isotropic_blocks().iter().chain([&c.middle_half()]) {
            ways *= binomial(left, k);
            left -= k;
        }
        ways <<= c.isotropic_blocks().iter().sum::<usize>();
        assert_eq!(count, ways, "{:?}", e);
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

// Symplectic form with antidiagonal matrix, +1 above the middle.
fn form(size: usize) -> ExactMatrix {
    let mut j = ExactMatrix::zeros(size, size);
    for i in 0..size {
        let v = if i < size / 2 { 1 } else { -1 };
        j.add_integer(i, size - 1 - i, v);
    }
    j
}

fn is_symplectic(x: &ExactMatrix, j: &ExactMatrix) -> bool {
    (&(&x.transpose() * j) + &(j * x)).is_zero()
}

/// A nilpotent `x ∈ sp` of Jordan type `a`, in a basis where the form is
/// built blockwise, together with that form.
fn nilpotent_representative(a: &Partition) -> (ExactMatrix, ExactMatrix) {
    let size = a.size();
    let mut x = ExactMatrix::zeros(size, size);
    let mut omega = ExactMatrix::zeros(size, size);
    let mut at = 0;
    let mut odd_pending: Option<usize> = None;
    for &k in a.parts() {
        if k % 2 == 0 {
            for i in 0..k {
                if i + 1 < k {
                    x.add_integer(at + i + 1, at + i, 1);
                }
                let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
                omega.add_integer(at + i, at + k - 1 - i, sign);
            }
            at += k;
        } else if odd_pending.take().is_none() {
            odd_pending = Some(k);
            // u_1..u_k then w_1..w_k
            for i in 0..k {
                if i + 1 < k {
                    x.add_integer(at + i + 1, at + i, 1);
                    x.add_integer(at + k + i, at + k + i + 1, -1);
                }
                omega.add_integer(at + i, at + k + i, 1);
                omega.add_integer(at + k + i, at + i, -1);
            }
            at += 2 * k;
        }
    }
    (x, omega)
}

fn symmetric_basis(size: usize) -> Vec<ExactMatrix> {
    let mut out = Vec::new();
    for i in 0..size {
        for k in i..size {
            let mut s = ExactMatrix::zeros(size, size);
            s.add_integer(i, k, 1);
            if i != k {
                s.add_integer(k, i, 1);
            }
            out.push(s);
        }
    }
    out
}

fn columns_rank(vectors: &[ExactMatrix]) -> usize {
    let cols = vectors.len();
    let rows = vectors.first().map_or(0, |v| v.rows() * v.cols());
    let m = ExactMatrix::from_fn(rows, cols, |r, c| {
        let v = &vectors[c];
        v.get(r / v.cols(), r % v.cols()).clone()
    });
    m.rank()
}

#[test]
fn orbit_dims_from_explicit_matrices() {
    for size in (0..=8).step_by(2) {
        for a in type_c_partitions(size).unwrap() {
            let (x, omega) = nilpotent_representative(&a);
            assert!(is_symplectic(&x, &omega), "{a}");
            assert_eq!(omega.rank(), size);
            let omega_inv = omega.inverse().unwrap_or_else(|_| ExactMatrix::identity(0));
            let images: Vec<ExactMatrix> = symmetric_basis(size)
                .iter()
                .map(|s| {
                    let y = &omega_inv * s;
                    x.commutator(&y).unwrap()
                })
                .collect();
            let rank = if size == 0 { 0 } else { columns_rank(&images) };
            assert_eq!(orbit_dim(&a), rank, "orbit {a}");
        }
    }
}

fn block_of(dcomp: &SymComposition) -> Vec<usize> {
    dcomp.entries().iter().enumerate().flat_map(|(b, &k)| std::iter::repeat_n(b, k)).collect()
}

#[test]
fn flag_dims_from_parabolic_subalgebras() {
    for (n, d) in [(1, 1), (2, 2), (1, 3), (3, 3), (2, 3)] {
        let size = 2 * d;
        let j = form(size);
        let j_inv = j.inverse().unwrap();
        for dcomp in enumerate_q(n, 2 * d).unwrap() {
            let block = block_of(&dcomp);
            // entries below the block diagonal of y = J⁻¹ S
            let lower: Vec<ExactMatrix> = symmetric_basis(size)
                .iter()
                .map(|s| {
                    let y = &j_inv * s;
                    assert!(is_symplectic(&y, &j));
                    ExactMatrix::from_fn(size, size, |r, c| {
                        if block[r] > block[c] { y.get(r, c).clone() } else { BigRational::zero() }
                    })
                })
                .collect();
            assert_eq!(flag_dim(&dcomp), columns_rank(&lower), "{dcomp}");
        }
    }
}

fn jordan_type(y: &ExactMatrix) -> Partition {
    let size = y.rows();
    let mut ranks = vec![size];
    let mut power = ExactMatrix::identity(size);
    while *ranks.last().unwrap() > 0 {
        power = &power * y;
        ranks.push(power.rank());
    }
    let dual: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Partition::new(dual).unwrap().dual()
}

#[test]
fn richardson_is_jordan_type_of_generic_nilradical_element() {
    let mut rng = StdRng::seed_from_u64(7);
    for (n, d) in [(1, 1), (2, 2), (1, 3), (2, 3), (3, 3)] {
        let size = 2 * d;
        let j = form(size);
        let j_inv = j.inverse().unwrap();
        for dcomp in enumerate_q(n, 2 * d).unwrap() {
            let block = block_of(&dcomp);
            let mut s = ExactMatrix::zeros(size, size);
            for r in 0..size {
                for c in r..size {
                    let v = rng.gen_range(-50..=50);
                    s.add_integer(r, c, v);
                    if r != c {
                        s.add_integer(c, r, v);
                    }
                }
            }
            let y = &j_inv * &s;
            let nil = ExactMatrix::from_fn(size, size, |r, c| {
                if block[r] < block[c] { y.get(r, c).clone() } else { BigRational::zero() }
            });
            assert!(is_symplectic(&nil, &j));
            assert_eq!(jordan_type(&nil), richardson(&dcomp).unwrap().into_partition(), "{dcomp}");
        }
    }
}

// The scan read directly from the rules, recursing on the remaining sequence.
fn springer_oracle(rho: &Bipartition) -> Partition {
    fn go(nu: &[usize], out: &mut Vec<usize>) {
        match nu {
            [] => {}
            [x] => out.push(2 * x),
            [x, y, rest @ ..] if x + 1 == *y => {
                out.extend([2 * x + 1, 2 * x + 1]);
                go(rest, out);
            }
            [x, y, rest @ ..] if x + 2 <= *y => {
                out.extend([2 * y - 2, 2 * x + 2]);
                go(rest, out);
            }
            [x, rest @ ..] => {
                out.push(2 * x);
                go(rest, out);
            }
        }
    }
    let len = 2 * (rho.first.len() + rho.second.len()) + 2;
    let nu: Vec<usize> = (0..len)
        .map(|i| if i % 2 == 0 { rho.second.part(i / 2) } else { rho.first.part(i / 2) })
        .collect();
    let mut out = Vec::new();
    go(&nu, &mut out);
    Partition::from_unsorted(out)
}

#[test]
fn springer_map_matches_recursive_scan() {
    for d in 0..=8 {
        for rho in bipartitions(d) {
            assert_eq!(springer_orbit(&rho).unwrap().into_partition(), springer_oracle(&rho), "{rho}");
        }
    }
}

#[test]
fn irreducible_degrees_square_sum() {
    for d in 0..=6 {
        let sum: u64 = bipartitions(d).iter().map(|r| irr_dim(r).pow(2)).sum();
        assert_eq!(sum, group_order(d));
    }
}
