//! Decomposes `(C^{2n+1})^{⊗d}` under `W_d` by exact projector ranks and
//! compares with `dim V_α(gl_{n+1}) · dim V_β(gl_n)`.
//!
//! `cargo run --example schur_weyl -- 2 2`

use spfiber::hyperoctahedral::irr_dim;
use spfiber::tensor_rep::{levi_dim, Convention, TensorSpace};

pub fn run_example(n: usize, d: usize) -> spfiber::Result<String> {
    let space = TensorSpace::new(n, d)?;
    let mut out = format!("dim = {}\n", space.dim());
    let mut total = 0;
    for (rho, mult) in space.schur_weyl_decompose(Convention::Swap)? {
        out += &format!("{rho:<8} dim {} multiplicity {mult} (expected {})\n", irr_dim(&rho), levi_dim(&rho, n));
        total += mult * irr_dim(&rho);
    }
    out += &format!("sum = {total}\n");
    Ok(out)
}

fn main() -> spfiber::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (n, d) = (args.first().copied().unwrap_or(2), args.get(1).copied().unwrap_or(2));
    print!("{}", run_example(n, d)?);
    Ok(())
}
