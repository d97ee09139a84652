#[allow(dead_code)]
#[path = "../examples/springer_table.rs"]
mod springer_table;
#[allow(dead_code)]
#[path = "../examples/character_table.rs"]
mod character_table;
#[allow(dead_code)]
#[path = "../examples/schur_weyl.rs"]
mod schur_weyl;
#[allow(dead_code)]
#[path = "../examples/theta_sets.rs"]
mod theta_sets;
#[allow(dead_code)]
#[path = "../examples/orbit_geometry.rs"]
mod orbit_geometry;
#[allow(dead_code)]
#[path = "../examples/htop_report.rs"]
mod htop_report;
#[allow(dead_code)]
#[path = "../examples/commutants.rs"]
mod commutants;

#[test]
fn springer_table_runs() {
    let out = springer_table::run_example(2).unwrap();
    assert!(out.contains("reguler"));
    assert!(out.ends_with("4 of 4 type C orbits are Springer orbits\n"));
}

#[test]
fn character_table_runs() {
    let out = character_table::run_example(3).unwrap();
    assert!(out.starts_with("rho\t"));
}

#[test]
fn schur_weyl_runs() {
    assert!(schur_weyl::run_example(1, 2).unwrap().ends_with("sum = 9\n"));
}

#[test]
fn theta_sets_runs() {
    let out = theta_sets::run_example(2, 2).unwrap();
    for line in out.lines().filter(|l| l.contains("fixes")) {
        let nums: Vec<&str> = line.split_whitespace().filter(|t| t.trim_end_matches(',').parse::<u64>().is_ok()).collect();
        assert_eq!(nums[0].trim_end_matches(','), nums[1], "{line}");
    }
}

#[test]
fn orbit_geometry_runs() {
    let out = orbit_geometry::run_example(2, 2).unwrap();
    assert!(out.contains("(4) dim 8: degrees ∅ 0 ∅ ∅ ∅ ∅"));
}

#[test]
fn htop_report_runs() {
    let out = htop_report::run_example(2, 2).unwrap();
    let totals: Vec<u64> = out
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["total"].as_u64().unwrap())
        .collect();
    assert_eq!(totals, [1, 9, 3, 6]);
}

#[test]
fn commutants_runs() {
    let out = commutants::run_example(1, 2).unwrap();
    assert!(!out.contains("false"));
}
