//! Character table of the hyperoctahedral group `W_d`, checked for
//! orthogonality, and the decomposition of the permutation character on
//! the cosets of a block subgroup.
//!
//! `cargo run --example character_table -- 3`

use spfiber::hyperoctahedral::{decompose_character, perm_character_on_cosets, CharacterTable, Labeling};
use spfiber::partitions::enumerate_q;

pub fn run_example(d: usize) -> spfiber::Result<String> {
    let table = CharacterTable::new(d, Labeling::Springer)?;
    table.check_orthogonality()?;
    let mut out = table.to_tsv();
    let q = enumerate_q(2, 2 * d)?;
    let dcomp = &q[q.len() / 2];
    let perm = perm_character_on_cosets(dcomp)?;
    let values = perm.into_iter().map(|(c, v)| (c, v as i64)).collect();
    out += &format!("\ncosets of the block subgroup of ({dcomp}):\n");
    for (rho, m) in decompose_character(&values, &table)? {
        out += &format!("  {m} x {rho}\n");
    }
    Ok(out)
}

fn main() -> spfiber::Result<()> {
    let d = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    print!("{}", run_example(d)?);
    Ok(())
}
