//! Exact combinatorics for top Borel–Moore homology of type C partial
//! Springer fibers.
//!
//! For a nilpotent orbit `O_A` of `sp_{2d}` (labelled by a type C partition
//! `A`) and `N = 2n + 1`, the top homology of the partial Springer fiber over
//! `a ∈ O_A` is identified with `⊕ V_ρ̌`, the sum running over the
//! irreducible `W_d`-modules `ρ = (λ, μ)` whose Springer orbit is `A`, where
//! `ρ̌ = (λ̌, μ̌)` and `V_(α,β)` is the irreducible `gl_{n+1} ⊕ gl_n`-module of
//! highest weight `(α, β)`. This crate computes both sides of that
//! identification exactly:
//!
//! * [`partitions`]: partitions, bipartitions, type C partitions, symmetric
//!   compositions `Q_{N,D}`, hook lengths, dominance and the C-collapse.
//! * [`hyperoctahedral`]: signed permutations, conjugacy classes and the
//!   integer character table of `W_d = S_d ⋉ (Z/2)^d`.
//! * [`springer_map`]: the combinatorial type C Springer correspondence.
//! * [`tensor_rep`]: the bimodule `(C^N)^{⊗d}`, Θ-matrices, isotypic
//!   projectors and graded multiplicities over exact rationals.
//! * [`orbit_geometry`]: orbit and flag variety dimensions, Richardson orbits
//!   and the per-component `H_top` report.
//! * [`cli`]: report rendering and the verification suites behind the
//!   `spfiber` binary.
//!
//! The `examples/` directory of this crate has one runnable program per
//! capability; start with `cargo run --example htop_report`.

pub mod cli;
pub mod error;
pub mod hyperoctahedral;
pub mod matrix;
pub mod orbit_geometry;
pub mod partitions;
pub mod springer_map;
pub mod tensor_rep;

pub use error::{Error, Result};
pub use hyperoctahedral::{CharacterTable, ConjClassLabel, Labeling, SignedPermutation};
pub use matrix::ExactMatrix;
pub use orbit_geometry::{htop_report, HtopReport};
pub use partitions::{Bipartition, Partition, SymComposition, TypeCPartition};
pub use springer_map::springer_orbit;
pub use tensor_rep::{Convention, TensorSpace};
