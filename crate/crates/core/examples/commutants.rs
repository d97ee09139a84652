//! `W_d` commutes with `gl_{n+1} ⊕ gl_n` in the sign basis and with
//! `sl_N^θ` in the standard basis; the change of basis relates the two.
//!
//! `cargo run --example commutants`

use spfiber::hyperoctahedral::generators;
use spfiber::tensor_rep::{Convention, LeviBlock, TensorSpace};

pub fn run_example(n: usize, d: usize) -> spfiber::Result<String> {
    let space = TensorSpace::new(n, d)?;
    let c = space.change_of_basis()?;
    let mut out = format!("change of basis: rank {} of {}\n", c.rank(), c.rows());
    out += &format!("sl_N^theta is Levi after the change: {}\n", space.itheta_is_levi_after_change_of_basis()?);
    for w in generators(d)? {
        let sign = space.w_action_matrix(&w, Convention::Sign)?;
        let swap = space.w_action_matrix(&w, Convention::Swap)?;
        let e = space.g_action_matrix(LeviBlock::First, 1, n + 1)?;
        let f = space.g_action_matrix(LeviBlock::Second, n, 1)?;
        out += &format!(
            "{w:?}: [w, gl_{}(1,{})] = 0: {}, [w, gl_{n}({n},1)] = 0: {}",
            n + 1,
            n + 1,
            sign.commutator(&e)?.is_zero(),
            sign.commutator(&f)?.is_zero()
        );
        for g in space.itheta_generators()? {
            out += &format!(", [w, {}] = 0: {}", g.name, swap.commutator(&g.matrix)?.is_zero());
        }
        out.push('\n');
    }
    Ok(out)
}

fn main() -> spfiber::Result<()> {
    print!("{}", run_example(2, 2)?);
    Ok(())
}
