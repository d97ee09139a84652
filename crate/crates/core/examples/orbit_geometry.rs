//! Orbit and flag variety dimensions, Richardson orbits and the emptiness
//! pattern of the components.
//!
//! `cargo run --example orbit_geometry -- 2 2`

use spfiber::orbit_geometry::{component_nonempty, components, orbit_dim, top_degree};
use spfiber::partitions::type_c_partitions;

pub fn run_example(n: usize, d: usize) -> spfiber::Result<String> {
    let comps = components(n, d)?;
    let mut out = String::new();
    for g in &comps {
        out += &format!("({}) flag dim {} richardson ({})\n", g.dcomp, g.flag_dim, g.richardson);
    }
    for a in type_c_partitions(2 * d)? {
        let cells = comps
            .iter()
            .map(|g| {
                Ok(if component_nonempty(&a, &g.dcomp)? { top_degree(&a, &g.dcomp)?.to_string() } else { "∅".into() })
            })
            .collect::<spfiber::Result<Vec<String>>>()?;
        out += &format!("({a}) dim {}: degrees {}\n", orbit_dim(&a), cells.join(" "));
    }
    Ok(out)
}

fn main() -> spfiber::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (n, d) = (args.first().copied().unwrap_or(2), args.get(1).copied().unwrap_or(2));
    print!("{}", run_example(n, d)?);
    Ok(())
}
