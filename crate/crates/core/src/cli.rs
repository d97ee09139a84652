//! Report rendering and verification suites behind the `spfiber` binary.
//!
//! Every command returns its full stdout as a string; [`run`] maps errors to
//! exit codes (0 ok, 1 failed verification, 2 resource bound, 3 bad input).

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::json;

use crate::error::{Error, Result};
use crate::hyperoctahedral::{group_order, irr_dim, perm_character_on_cosets, CharacterTable, Labeling};
use crate::orbit_geometry::{component_nonempty, components, htop_report_in, orbit_dim, richardson, HtopReport};
use crate::partitions::{bipartitions, enumerate_q, type_c_partitions, SymComposition, TypeCPartition};
use crate::springer_map::{self, springer_table};
use crate::tensor_rep::{self, levi_dim, theta_chi, Convention, LeviBlock, TensorSpace, DEFAULT_MAX_CELLS};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_BOUND: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Tsv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Suite {
    Sw,
    Springer,
    Geometry,
    Characters,
    #[default]
    All,
}

impl Suite {
    fn members(self) -> &'static [Suite] {
        match self {
            Suite::All => &[Suite::Characters, Suite::Springer, Suite::Sw, Suite::Geometry],
            Suite::Sw => &[Suite::Sw],
            Suite::Springer => &[Suite::Springer],
            Suite::Geometry => &[Suite::Geometry],
            Suite::Characters => &[Suite::Characters],
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::Sw => "sw",
            Suite::Springer => "springer",
            Suite::Geometry => "geometry",
            Suite::Characters => "characters",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        <Suite as clap::ValueEnum>::from_str(s, false).map_err(|_| Error::Parse { what: "suite", input: s.into() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Springer,
    Htop,
    Verify(Suite),
    Theta,
}

/// Parsed invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub d: usize,
    pub command: Command,
    pub orbit: Option<String>,
    pub component: Option<String>,
    pub format: Format,
    pub max_cells: usize,
}

impl RunConfig {
    pub fn new(command: Command, n: usize, d: usize) -> Self {
        RunConfig { n, d, command, orbit: None, component: None, format: Format::Tsv, max_cells: DEFAULT_MAX_CELLS }
    }
}

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Consistency(_) => EXIT_VERIFY,
        Error::Bound(_) => EXIT_BOUND,
        _ => EXIT_INPUT,
    }
}

/// Runs one command: `(stdout, stderr, exit code)`.
pub fn run(config: &RunConfig) -> (String, String, u8) {
    let result = match &config.command {
        Command::Springer => cmd_springer(config.d, config.format),
        Command::Htop => cmd_htop(config.n, config.d, config.orbit.as_deref(), config.format, config.max_cells),
        Command::Theta => {
            cmd_theta(config.n, config.d, config.component.as_deref(), config.format, config.max_cells)
        }
        Command::Verify(suite) => {
            let report = cmd_verify(*suite);
            let code = if report.passed() { EXIT_OK } else { EXIT_VERIFY };
            return (report.render(config.format), String::new(), code);
        }
    };
    match result {
        Ok(out) => (out, String::new(), EXIT_OK),
        Err(e) => (String::new(), format!("error: {e}\n"), exit_code(&e)),
    }
}

fn to_json_text(value: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

/// The Springer correspondence table at rank `d`.
pub fn cmd_springer(d: usize, format: Format) -> Result<String> {
    let rows = springer_table(d)?;
    let mut out = String::new();
    match format {
        Format::Json => return Ok(to_json_text(&rows)),
        Format::Tsv => {
            out.push_str("name\tdim\trho\torbit\n");
            for r in &rows {
                writeln!(out, "{}\t{}\t{}\t{}", r.name.unwrap_or("-"), r.dim, r.rho, r.orbit).unwrap();
            }
        }
        Format::Pretty => {
            let cells: Vec<[String; 4]> = rows
                .iter()
                .map(|r| {
                    [
                        r.name.unwrap_or("").to_string(),
                        r.dim.to_string(),
                        r.rho.display_paren(),
                        format!("({})", r.orbit),
                    ]
                })
                .collect();
            let header = ["Irr(W)", "dim", "(lambda,mu)", "Young diagram"].map(String::from);
            out = pretty_table(&header, &cells);
        }
    }
    Ok(out)
}

fn pretty_table<const K: usize>(header: &[String; K], rows: &[[String; K]]) -> String {
    let mut width = header.clone().map(|h| h.chars().count());
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String; K]| {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, &w)| format!("{c:<w$}")).collect();
        format!("| {} |\n", padded.join(" | "))
    };
    let rule = format!("+{}+\n", width.iter().map(|w| "-".repeat(w + 2)).collect::<Vec<_>>().join("+"));
    let mut out = rule.clone();
    out.push_str(&line(header));
    out.push_str(&rule);
    for r in rows {
        out.push_str(&line(r));
    }
    out.push_str(&rule);
    out
}

fn parse_orbit(s: &str, d: usize) -> Result<TypeCPartition> {
    let a: TypeCPartition = s.parse()?;
    if a.size() != 2 * d {
        return Err(Error::SizeMismatch { expected: 2 * d, found: a.size() });
    }
    Ok(a)
}

/// `H_top` reports for one orbit or for every type C orbit of `2d`.
pub fn htop_reports(n: usize, d: usize, orbit: Option<&str>, max_cells: usize) -> Result<Vec<HtopReport>> {
    let space = TensorSpace::with_max_cells(n, d, max_cells)?;
    let orbits = match orbit {
        Some(s) => vec![parse_orbit(s, d)?],
        None => type_c_partitions(2 * d)?,
    };
    orbits.iter().map(|a| htop_report_in(a, &space)).collect()
}

pub fn cmd_htop(n: usize, d: usize, orbit: Option<&str>, format: Format, max_cells: usize) -> Result<String> {
    let reports = htop_reports(n, d, orbit, max_cells)?;
    let comps = enumerate_q(n, 2 * d)?;
    let mut out = String::new();
    match format {
        Format::Json if orbit.is_some() => out = to_json_text(&reports[0]),
        Format::Json => out = to_json_text(&reports),
        Format::Tsv => {
            out.push_str("orbit");
            for c in &comps {
                write!(out, "\t{c}").unwrap();
            }
            out.push_str("\ttotal\n");
            for r in &reports {
                out.push_str(&r.orbit.to_string());
                for h in r.dims() {
                    write!(out, "\t{h}").unwrap();
                }
                writeln!(out, "\t{}", r.total).unwrap();
            }
        }
        Format::Pretty => {
            for r in &reports {
                let rhos: Vec<String> =
                    r.contributing.iter().map(|c| format!("{} (dual {}, dim {})", c.rho, c.rho_dual, c.dim)).collect();
                writeln!(out, "orbit ({}): {}", r.orbit, rhos.join(", ")).unwrap();
                let header: Vec<String> =
                    std::iter::once(String::new()).chain(comps.iter().map(|c| format!("({c})"))).collect();
                let degree: Vec<String> = std::iter::once("degree".to_string())
                    .chain(comps.iter().map(|c| r.degrees.get(c).map_or("∅".into(), |g| g.to_string())))
                    .collect();
                let dims: Vec<String> = std::iter::once("dim H_top".to_string())
                    .chain(r.dims().iter().map(u64::to_string))
                    .collect();
                out.push_str(&pretty_rows(&header, &[degree, dims]));
                writeln!(out, "total {}\n", r.total).unwrap();
            }
        }
    }
    Ok(out)
}

fn pretty_rows(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let width: Vec<usize> = (0..cols)
        .map(|j| rows.iter().map(|r| r[j].chars().count()).chain([header[j].chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> =
            cells.iter().zip(&width).map(|(c, &w)| format!("{c:<w$}", w = w)).collect();
        format!("| {} |\n", padded.join(" | "))
    };
    let mut out = line(header);
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

/// Θ-matrices with their χ-images and gradings.
pub fn cmd_theta(n: usize, d: usize, component: Option<&str>, format: Format, max_cells: usize) -> Result<String> {
    let space = TensorSpace::with_max_cells(n, d, max_cells)?;
    let dcomp = component.map(SymComposition::from_str).transpose()?;
    if let Some(c) = &dcomp {
        space.check_component(c)?;
    }
    let matrices = tensor_rep::theta_enumerate_in(&space, dcomp.as_ref());
    let mut out = String::new();
    match format {
        Format::Json => {
            let items: Vec<_> = matrices
                .iter()
                .map(|m| json!({"theta": m.to_string(), "chi": theta_chi(m).to_string(), "grading": m.row_sums()}))
                .collect();
            out = to_json_text(&json!({"n": n, "d": d, "count": matrices.len(), "matrices": items}));
        }
        Format::Tsv => {
            out.push_str("theta\tchi\tgrading\n");
            for m in &matrices {
                writeln!(out, "{m}\t{}\t{}", theta_chi(m), m.row_sums()).unwrap();
            }
            writeln!(out, "count\t{}", matrices.len()).unwrap();
        }
        Format::Pretty => {
            for m in &matrices {
                writeln!(out, "chi = {}  grading ({})", theta_chi(m), m.row_sums()).unwrap();
                for row in m.entries() {
                    let cells: Vec<String> = row.iter().map(u8::to_string).collect();
                    writeln!(out, "  {}", cells.join(" ")).unwrap();
                }
            }
            writeln!(out, "count {}", matrices.len()).unwrap();
        }
    }
    Ok(out)
}

/// Outcome of one verification check.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: Format) -> String {
        if format == Format::Json {
            return to_json_text(&json!({"passed": self.passed(), "checks": self.checks}));
        }
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{status}\t{}\t{}\t{}", c.suite, c.name, c.detail).unwrap();
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(out, "{} checks, {failed} failed", self.checks.len()).unwrap();
        out
    }

    fn record(&mut self, suite: Suite, name: impl Into<String>, outcome: Result<String, String>) {
        let (passed, detail) = match outcome {
            Ok(detail) => (true, detail),
            Err(detail) => (false, detail),
        };
        self.checks.push(Check { suite: suite.name(), name: name.into(), passed, detail });
    }
}

type Outcome = Result<String, String>;

fn lift(r: Result<Outcome>) -> Outcome {
    r.unwrap_or_else(|e| Err(e.to_string()))
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Outcome {
    if got == want {
        Ok(format!("{got:?}"))
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

/// Runs the invariant suites.
pub fn cmd_verify(suite: Suite) -> VerifyReport {
    let mut report = VerifyReport::default();
    for &s in suite.members() {
        match s {
            Suite::Characters => verify_characters(&mut report),
            Suite::Springer => verify_springer(&mut report),
            Suite::Sw => verify_sw(&mut report),
            Suite::Geometry => verify_geometry(&mut report),
            Suite::All => unreachable!("expanded by members"),
        }
    }
    report
}

fn verify_characters(report: &mut VerifyReport) {
    for d in 0..=4 {
        for labeling in [Labeling::Springer, Labeling::SchurWeyl] {
            let outcome = lift(CharacterTable::new(d, labeling).and_then(|t| {
                t.check_orthogonality()?;
                let squares: u64 = t.rows().iter().map(|r| irr_dim(r).pow(2)).sum();
                if squares != group_order(d) {
                    return Err(Error::Consistency(format!("sum of squared degrees {squares} != {}", group_order(d))));
                }
                Ok(Ok(format!("{} classes, sum dim^2 = {squares}", t.classes().len())))
            }));
            report.record(Suite::Characters, format!("orthogonality d={d} {labeling:?}"), outcome);
        }
    }
}

/// The correspondence table at `d = 2` as `name, dim, rho, orbit`.
pub const SPRINGER_D2: [(&str, u64, &str, &str); 5] = [
    ("Sign", 1, "1,1|-", "1,1,1,1"),
    ("Ssign", 1, "-|1,1", "2,1,1"),
    ("Lsign", 1, "2|-", "2,2"),
    ("reguler", 2, "1|1", "2,2"),
    ("triv", 1, "-|2", "4"),
];

fn verify_springer(report: &mut VerifyReport) {
    let table = lift(springer_table(2).map(|rows| {
        let got: Vec<(String, u64, String, String)> = rows
            .iter()
            .map(|r| (r.name.unwrap_or("-").to_string(), r.dim, r.rho.to_string(), r.orbit.to_string()))
            .collect();
        let want: Vec<(String, u64, String, String)> =
            SPRINGER_D2.iter().map(|&(a, b, c, e)| (a.into(), b, c.into(), e.into())).collect();
        expect_eq(got, want).map(|_| "5 rows".into())
    }));
    report.record(Suite::Springer, "table d=2", table);
    for d in 0..=8 {
        let outcome = lift(springer_map::coverage(d).map(|c| {
            let total: u64 = bipartitions(d).iter().map(irr_dim).sum();
            Ok(format!("{} of {} orbits hit, {} irreducibles, total degree {total}", c.hit, c.orbits, bipartitions(d).len()))
        }));
        report.record(Suite::Springer, format!("type C image d={d}"), outcome);
    }
}

/// `(n, d)` pairs checked by the Schur–Weyl suite.
pub const SW_CASES: [(usize, usize); 3] = [(2, 2), (1, 1), (1, 2)];

/// Compares projector-rank multiplicities with Levi dimensions; returns
/// `Σ dim Z_ρ · multiplicity`.
pub fn check_schur_weyl(n: usize, d: usize, convention: Convention) -> Result<u64> {
    let space = TensorSpace::new(n, d)?;
    let mult = space.schur_weyl_decompose(convention)?;
    for rho in bipartitions(d) {
        let (got, want) = (mult[&rho], levi_dim(&rho, n));
        if got != want {
            return Err(Error::Consistency(format!("multiplicity of {rho} is {got}, expected {want}")));
        }
    }
    let total: u64 = mult.iter().map(|(rho, m)| m * irr_dim(rho)).sum();
    if total as usize != space.dim() {
        return Err(Error::Consistency(format!("sum dim * multiplicity = {total}, expected {}", space.dim())));
    }
    Ok(total)
}

/// `|Θ| = N^d`, χ bijective, and fixed points on each `Θ_d` equal to the
/// permutation character on cosets.
pub fn check_theta(n: usize, d: usize) -> Result<usize> {
    let space = TensorSpace::new(n, d)?;
    let all = tensor_rep::theta_enumerate_in(&space, None);
    let images: std::collections::BTreeSet<usize> = all.iter().map(|m| space.encode(&theta_chi(m))).collect();
    if all.len() != space.dim() || images.len() != space.dim() {
        return Err(Error::Consistency(format!("|Theta| = {}, {} distinct images, N^d = {}", all.len(), images.len(), space.dim())));
    }
    for dcomp in enumerate_q(n, 2 * d)? {
        for (class, want) in perm_character_on_cosets(&dcomp)? {
            let got = space.fixed_points(&class.representative(), &dcomp)? as u64;
            if got != want {
                return Err(Error::Consistency(format!(
                    "class {class} fixes {got} elements of Theta_({dcomp}), coset count {want}"
                )));
            }
        }
    }
    Ok(all.len())
}

/// Zero commutators between `W_d` and both Lie actions, the change of basis
/// identity, and the Levi form of `sl_N^θ`. Returns the number of
/// commutators computed.
pub fn check_commutants(n: usize, d: usize) -> Result<usize> {
    let space = TensorSpace::new(n, d)?;
    space.change_of_basis()?;
    if !space.itheta_is_levi_after_change_of_basis()? {
        return Err(Error::Consistency("sl_N^theta is not block diagonal after the change of basis".into()));
    }
    let mut levi = Vec::new();
    for (block, size) in [(LeviBlock::First, n + 1), (LeviBlock::Second, n)] {
        for i in 1..=size {
            for j in 1..=size {
                levi.push((format!("{block:?}[{i},{j}]"), space.g_action_matrix(block, i, j)?));
            }
        }
    }
    let itheta: Vec<_> = space.itheta_generators()?.into_iter().map(|g| (g.name, g.matrix)).collect();
    let mut count = 0;
    for w in crate::hyperoctahedral::generators(d)? {
        for (convention, ops) in [(Convention::Sign, &levi), (Convention::Swap, &itheta)] {
            let m = space.w_action_matrix(&w, convention)?;
            for (name, x) in ops {
                if !m.commutator(x)?.is_zero() {
                    return Err(Error::Consistency(format!("{w:?} does not commute with {name}")));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

fn verify_sw(report: &mut VerifyReport) {
    for (n, d) in SW_CASES {
        for convention in [Convention::Swap, Convention::Sign] {
            let outcome = lift(check_schur_weyl(n, d, convention).map(|t| Ok(format!("sum dim*mult = {t}"))));
            report.record(Suite::Sw, format!("decomposition n={n} d={d} {convention:?}"), outcome);
        }
        let outcome = lift(check_theta(n, d).map(|t| Ok(format!("|Theta| = {t}"))));
        report.record(Suite::Sw, format!("theta n={n} d={d}"), outcome);
    }
    let outcome = lift(check_commutants(2, 2).map(|c| Ok(format!("{c} zero commutators"))));
    report.record(Suite::Sw, "commutants n=2 d=2", outcome);
}

/// The emptiness pattern at `n = 2, d = 2`: orbits descending, components
/// in enumeration order.
pub fn emptiness_pattern(n: usize, d: usize) -> Result<Vec<(TypeCPartition, Vec<bool>)>> {
    let comps = enumerate_q(n, 2 * d)?;
    type_c_partitions(2 * d)?
        .into_iter()
        .map(|a| {
            let row = comps.iter().map(|c| component_nonempty(&a, c)).collect::<Result<_>>()?;
            Ok((a, row))
        })
        .collect()
}

fn verify_geometry(report: &mut VerifyReport) {
    for (n, d) in [(2, 2), (3, 3), (1, 1), (1, 2), (2, 1), (2, 3), (3, 1), (3, 2), (1, 3)] {
        let outcome = lift(components(n, d).map(|gs| {
            let dims: Vec<usize> = gs.iter().map(|g| orbit_dim(&g.richardson)).collect();
            Ok(format!("richardson dims {dims:?}"))
        }));
        report.record(Suite::Geometry, format!("richardson self-check n={n} d={d}"), outcome);
    }
    let outcome = lift(enumerate_q(2, 4).and_then(|q| {
        let got = q.iter().map(|c| Ok(2 * crate::orbit_geometry::flag_dim(c))).collect::<Result<Vec<_>>>()?;
        let _ = q.iter().map(richardson).collect::<Result<Vec<_>>>()?;
        Ok(Ok(format!("{got:?}")))
    }));
    report.record(Suite::Geometry, "image dims Q_{5,4}", outcome);
    let outcome = lift(htop_reports(2, 2, None, DEFAULT_MAX_CELLS).map(|rs| {
        let totals: Vec<(String, u64)> = rs.iter().map(|r| (r.orbit.to_string(), r.total)).collect();
        let want = vec![("4".into(), 1), ("2,2".into(), 9), ("2,1,1".into(), 3), ("1,1,1,1".into(), 6)];
        let sum: u64 = rs.iter().map(|r| r.total).sum();
        let mass: u64 = bipartitions(2).iter().map(|rho| levi_dim(&rho.dual(), 2)).sum();
        if sum != mass {
            return Err(format!("sum of totals {sum} != {mass}"));
        }
        expect_eq(totals, want)
    }));
    report.record(Suite::Geometry, "H_top totals n=2 d=2", outcome);
}
