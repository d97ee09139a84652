//! The type C Springer correspondence at small rank, with the intermediate
//! `ν` sequence and raw `a_i` for each bipartition.
//!
//! `cargo run --example springer_table -- 3`

use spfiber::springer_map::{coverage, springer_table, springer_trace};

pub fn run_example(d: usize) -> spfiber::Result<String> {
    let mut out = String::new();
    for row in springer_table(d)? {
        let trace = springer_trace(&row.rho)?;
        out += &format!(
            "{:<8} dim {:<3} {:<12} nu {:<20} -> ({})\n",
            row.name.unwrap_or(""),
            row.dim,
            row.rho.display_paren(),
            trace.nu.to_string(),
            row.orbit
        );
    }
    let c = coverage(d)?;
    out += &format!("{} of {} type C orbits are Springer orbits\n", c.hit, c.orbits);
    Ok(out)
}

fn main() -> spfiber::Result<()> {
    let d = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    print!("{}", run_example(d)?);
    Ok(())
}
