//! Θ-matrices graded by `Q_{N,2d}`, and the fixed-point count of each class
//! representative against the permutation character on cosets.
//!
//! `cargo run --example theta_sets`

use spfiber::hyperoctahedral::perm_character_on_cosets;
use spfiber::partitions::enumerate_q;
use spfiber::tensor_rep::{theta_chi, theta_enumerate, TensorSpace};

pub fn run_example(n: usize, d: usize) -> spfiber::Result<String> {
    let space = TensorSpace::new(n, d)?;
    let mut out = String::new();
    for dcomp in enumerate_q(n, 2 * d)? {
        let theta = theta_enumerate(n, d, Some(&dcomp))?;
        let images: Vec<String> = theta.iter().map(|m| theta_chi(m).to_string()).collect();
        out += &format!("({dcomp}) |Theta| = {}: {}\n", theta.len(), images.join(" "));
        for (class, cosets) in perm_character_on_cosets(&dcomp)? {
            let fixed = space.fixed_points(&class.representative(), &dcomp)?;
            out += &format!("  class {class:<8} fixes {fixed}, cosets {cosets}\n");
        }
    }
    Ok(out)
}

fn main() -> spfiber::Result<()> {
    print!("{}", run_example(2, 2)?);
    Ok(())
}
