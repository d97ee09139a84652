//! Acceptance criteria for the `n = 2, d = 2` worked example and the
//! surrounding invariants. Each test prints one PASS/FAIL line with its
//! runtime and bound.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{golden, reference_q54, tsv_rows};
use spfiber::cli::{check_commutants, check_schur_weyl, check_theta, cmd_springer, Format};
use spfiber::hyperoctahedral::{elements, group_order, irr_dim, CharacterTable, Labeling};
use spfiber::orbit_geometry::{component_nonempty, components, flag_dim, htop_report, orbit_dim, richardson};
use spfiber::partitions::{bipartitions, enumerate_q};
use spfiber::tensor_rep::{Convention, TensorSpace};
use spfiber::TypeCPartition;

type Outcome = Result<String, String>;

fn criterion(id: u32, title: &str, bound: Duration, check: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let in_time = elapsed < bound;
    let status = if outcome.is_ok() && in_time { "PASS" } else { "FAIL" };
    let detail = match &outcome {
        Ok(s) | Err(s) => s.clone(),
    };
    println!("[{status}] {id:>2} {title}: {detail} ({} ms, bound {} ms)", elapsed.as_millis(), bound.as_millis());
    assert!(outcome.is_ok(), "criterion {id} failed: {detail}");
    assert!(in_time, "criterion {id} took {elapsed:?}, bound {bound:?}");
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn orbit(s: &str) -> TypeCPartition {
    s.parse().unwrap()
}

fn dims_in_reference_order(a: &str) -> Result<(Vec<u64>, u64), String> {
    let report = htop_report(&orbit(a), 2, 2).map_err(|e| e.to_string())?;
    Ok((reference_q54().iter().map(|c| report.htop(c)).collect(), report.total))
}

#[test]
fn c01_springer_table() {
    criterion(1, "springer table d=2", Duration::from_secs(1), || {
        let out = cmd_springer(2, Format::Tsv).map_err(|e| e.to_string())?;
        ensure(out == golden("springer_d2.tsv"), || format!("table differs:\n{out}"))?;
        let rows: Vec<&str> = out.lines().skip(1).collect();
        Ok(format!("{} rows: {}", rows.len(), rows.join("; ").replace('\t', " ")))
    });
}

#[test]
fn c02_q_5_4() {
    criterion(2, "Q_{5,4}", Duration::from_secs(1), || {
        let got: BTreeSet<_> = enumerate_q(2, 4).map_err(|e| e.to_string())?.into_iter().collect();
        let want: BTreeSet<_> = reference_q54().into_iter().collect();
        ensure(got == want, || format!("got {got:?}"))?;
        Ok(format!("{} compositions", got.len()))
    });
}

#[test]
fn c03_htop_minimal_orbit() {
    criterion(3, "H_top over (2,1,1)", Duration::from_secs(60), || {
        let (dims, total) = dims_in_reference_order("2,1,1")?;
        ensure(dims == [1, 0, 0, 1, 1, 0] && total == 3, || format!("dims {dims:?}, total {total}"))?;
        // the same orbit type one rank up, on the 625-dimensional space
        let big = htop_report(&orbit("4,2,1,1"), 2, 4).map_err(|e| e.to_string())?;
        Ok(format!("dims {dims:?} total {total}; (4,2,1,1) at n=2 d=4 total {}", big.total))
    });
}

#[test]
fn c04_htop_remaining_orbits() {
    criterion(4, "H_top over the other orbits", Duration::from_secs(120), || {
        let mut seen = Vec::new();
        for row in tsv_rows("htop_n2_d2.tsv") {
            let (dims, total) = dims_in_reference_order(&row[0])?;
            let want: Vec<u64> = row[1..7].iter().map(|x| x.parse().unwrap()).collect();
            ensure(dims == want && total.to_string() == row[7], || {
                format!("orbit {}: dims {dims:?} total {total}", row[0])
            })?;
            seen.push(format!("({}) {total}", row[0]));
        }
        let (dims22, _) = dims_in_reference_order("2,2")?;
        ensure(dims22 == [3, 2, 2, 1, 1, 0], || format!("(2,2) dims {dims22:?}"))?;
        Ok(seen.join(", "))
    });
}

#[test]
fn c05_schur_weyl_decomposition() {
    criterion(5, "Schur-Weyl decomposition", Duration::from_secs(10), || {
        let mut totals = Vec::new();
        for (n, d) in [(2, 2), (1, 1), (1, 2)] {
            for convention in [Convention::Swap, Convention::Sign] {
                totals.push(check_schur_weyl(n, d, convention).map_err(|e| e.to_string())?);
            }
        }
        ensure(totals == [25, 25, 3, 3, 9, 9], || format!("totals {totals:?}"))?;
        Ok(format!("totals {totals:?}"))
    });
}

#[test]
fn c06_theta_sets() {
    criterion(6, "theta sets and coset characters", Duration::from_secs(5), || {
        let count = check_theta(2, 2).map_err(|e| e.to_string())?;
        ensure(count == 25, || format!("|Theta| = {count}"))?;
        Ok(format!("|Theta| = {count}, fixed points agree on 6 components"))
    });
}

#[test]
fn c07_character_theory() {
    criterion(7, "character orthogonality d<=4", Duration::from_secs(30), || {
        let mut summary = Vec::new();
        for d in 0..=4 {
            for labeling in [Labeling::Springer, Labeling::SchurWeyl] {
                let table = CharacterTable::new(d, labeling).map_err(|e| e.to_string())?;
                table.check_orthogonality().map_err(|e| e.to_string())?;
                let squares: u64 = table.rows().iter().map(|r| irr_dim(r).pow(2)).sum();
                ensure(squares == group_order(d) && elements(d).len() as u64 == group_order(d), || {
                    format!("d={d}: sum dim^2 = {squares}")
                })?;
            }
            summary.push(format!("|W_{d}|={}", group_order(d)));
        }
        let classes = CharacterTable::new(4, Labeling::Springer).map_err(|e| e.to_string())?.classes().len();
        ensure(classes == 20, || format!("{classes} classes at d=4"))?;
        Ok(format!("{}, 20 classes at d=4", summary.join(" ")))
    });
}

#[test]
fn c08_geometry_self_check() {
    criterion(8, "richardson self-check", Duration::from_secs(1), || {
        for (n, d) in [(2, 2), (3, 3)] {
            for g in components(n, d).map_err(|e| e.to_string())? {
                ensure(orbit_dim(&g.richardson) == 2 * g.flag_dim, || format!("{}", g.dcomp))?;
            }
        }
        let q = reference_q54();
        let image: Vec<usize> = q.iter().map(|c| 2 * flag_dim(c)).collect();
        ensure(image == [8, 6, 6, 6, 6, 0], || format!("image dims {image:?}"))?;
        let codim = (image[1] - orbit_dim(&orbit("2,1,1"))) / 2;
        ensure(codim == 1, || format!("codim {codim}"))?;
        let r: Vec<String> = q.iter().map(|c| richardson(c).unwrap().to_string()).collect();
        Ok(format!("image dims {image:?}, richardson {r:?}, (6-4)/2 = {codim}"))
    });
}

#[test]
fn c09_commutants() {
    criterion(9, "commutants and change of basis", Duration::from_secs(30), || {
        let count = check_commutants(2, 2).map_err(|e| e.to_string())?;
        let space = TensorSpace::new(2, 2).map_err(|e| e.to_string())?;
        let c = space.change_of_basis().map_err(|e| e.to_string())?;
        let c_inv = c.inverse().map_err(|e| e.to_string())?;
        for w in elements(2) {
            let swap = space.w_action_matrix(&w, Convention::Swap).unwrap();
            let sign = space.w_action_matrix(&w, Convention::Sign).unwrap();
            ensure(&(&c_inv * &swap) * &c == sign, || format!("conjugation fails at {w:?}"))?;
        }
        Ok(format!("{count} zero commutators, conjugation identity on all 8 elements"))
    });
}

#[test]
fn c10_emptiness_pattern() {
    criterion(10, "emptiness pattern", Duration::from_secs(1), || {
        let q = reference_q54();
        let mut empties = Vec::new();
        for row in tsv_rows("fibers_n2_d2.tsv") {
            let a = orbit(&row[0]);
            let got: Vec<bool> = q.iter().map(|c| component_nonempty(&a, c).unwrap()).collect();
            let want: Vec<bool> = row[1..].iter().map(|cell| cell != "∅").collect();
            ensure(got == want, || format!("orbit {a}: {got:?}"))?;
            empties.push(format!("({a}) {}", got.iter().filter(|x| !**x).count()));
        }
        ensure(bipartitions(2).len() == 5, || "five irreducibles".into())?;
        Ok(format!("empty components per orbit: {}", empties.join(", ")))
    });
}
