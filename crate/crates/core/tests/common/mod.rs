#![allow(dead_code)]

use std::path::PathBuf;

use spfiber::SymComposition;

pub fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {}: {e}", path.display()))
}

/// `Q_{5,4}` in the order of the reference tables (`d_1`, …, `d_6`).
pub fn reference_q54() -> Vec<SymComposition> {
    golden("q_5_4.txt").lines().map(|l| l.parse().unwrap()).collect()
}

/// Rows of a tab-separated golden file, header dropped.
pub fn tsv_rows(name: &str) -> Vec<Vec<String>> {
    golden(name).lines().skip(1).map(|l| l.split('\t').map(String::from).collect()).collect()
}
