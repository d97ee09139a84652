//! Top homology of the partial Springer fiber over each orbit, component by
//! component, as JSON.
//!
//! `cargo run --example htop_report -- 2 2`

use spfiber::htop_report;
use spfiber::partitions::type_c_partitions;

pub fn run_example(n: usize, d: usize) -> spfiber::Result<String> {
    let mut out = String::new();
    for a in type_c_partitions(2 * d)? {
        let report = htop_report(&a, n, d)?;
        out += &serde_json::to_string(&report).expect("report serializes");
        out.push('\n');
    }
    Ok(out)
}

fn main() -> spfiber::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (n, d) = (args.first().copied().unwrap_or(2), args.get(1).copied().unwrap_or(2));
    print!("{}", run_example(n, d)?);
    Ok(())
}
