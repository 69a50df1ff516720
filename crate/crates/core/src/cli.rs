//! Command-line frontend. Every command prints one JSON document (or a plain
//! table with `--format table`) on standard output.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::betti::BettiTable;
use crate::ci_hodge::{
    euler_char_ci, hodge_diamond_ci, level_of, variable_middle, CISpace, HodgeDiamond, HodgeTable, LevelReport,
};
use crate::decomp::{
    assemble_total_betti, branch_degree_guard, euler_witness, printed_h12_guard, stratified_euler, summands,
    variable_middle_dim, verify_corrected_h12, verify_euler, verify_level_formula, verify_level_theorem,
    verify_web_odd, DecompError, EulerWitness, Summand, VerificationReport,
};
use crate::detscan::{regularity_report, DetScanError, QuadricSystem, ScanReport, Verdict};
use crate::double_cover::{
    betti_resolved, clemens_hodge, ih_table, weight_graded_dims, ClemensHodge, DoubleSolidModel, WeightGradedDims,
};
use crate::quadric_strata::{
    discriminant_invariants, fiber_betti, fiber_euler, strata_table, BundleShape, DiscriminantInvariants,
    QuadricFiberClass, StratumRow,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "quadrics",
    version,
    about = "Exact invariants of complete intersections of quadrics"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hodge diamond, Euler number and level of a complete intersection.
    Ci {
        #[arg(long)]
        ambient: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
    },
    /// Corank strata and discriminant invariants of a quadric bundle over P^r.
    Strata {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Invariants of the nodal double solid of a regular web in P^{2m+1}.
    DoubleSolid {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        defect: i64,
    },
    /// Decomposition summands and Betti numbers of the total space.
    Decomp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Dimension and Euler checks.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Finite-field scan of a system of quadrics read from a JSON file.
    Scan {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        prime: Vec<u64>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyTarget {
    /// Variable Hodge numbers of the web against the resolved double solid.
    WebOdd {
        #[arg(long, default_value = "3..12", value_parser = parse_range)]
        m_range: InclusiveRange,
    },
    /// Euler numbers along independent routes.
    Euler {
        #[arg(long, default_value = "3..10", value_parser = parse_range)]
        m_range: InclusiveRange,
    },
    /// Level of all-quadric complete intersections against the parity rule.
    Level {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        r_max: usize,
    },
    /// Variable cohomology of X against the discriminant double covers.
    VariableDims {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Corrected closed form and the rejected misprints.
    Typos {
        #[arg(long, default_value = "3..12", value_parser = parse_range)]
        m_range: InclusiveRange,
    },
    /// Every check above.
    All {
        #[arg(long, default_value_t = 12)]
        m_max: usize,
    },
}

/// `a..b`, both ends included; `a..=b` is accepted too.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InclusiveRange {
    pub start: usize,
    pub end: usize,
}

impl InclusiveRange {
    fn iter(self) -> impl Iterator<Item = usize> {
        self.start..=self.end
    }
}

fn parse_range(s: &str) -> Result<InclusiveRange, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected START..END, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let start = a.trim().parse().map_err(|e| format!("bad range start {a:?}: {e}"))?;
    let end = b.trim().parse().map_err(|e| format!("bad range end {b:?}: {e}"))?;
    if start > end {
        return Err(format!("empty range {s:?}"));
    }
    Ok(InclusiveRange { start, end })
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
}

impl<E: std::fmt::Display> From<E> for Failure
where
    E: std::error::Error,
{
    fn from(e: E) -> Self {
        Failure::Invalid(e.to_string())
    }
}

trait Render: Serialize {
    fn table(&self) -> String;

    fn passed(&self) -> bool {
        true
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct CiOutput {
    space: String,
    dim: usize,
    diamond: HodgeDiamond,
    middle_row: HodgeTable,
    variable_middle: HodgeTable,
    #[serde(serialize_with = "crate::serialize_bigint")]
    euler_hodge: BigInt,
    #[serde(serialize_with = "crate::serialize_bigint")]
    euler_chern: BigInt,
    level: LevelReport,
}

impl Render for CiOutput {
    fn table(&self) -> String {
        let mut s = format!("{}  (dim {})\n", self.space, self.dim);
        for (p, row) in self.diamond.entries.iter().enumerate() {
            let _ = writeln!(s, "  h^{{{p},*}}: {}", join(row));
        }
        let _ = writeln!(s, "middle row: {}", join(&self.middle_row.entries));
        let _ = writeln!(s, "variable:   {}", join(&self.variable_middle.entries));
        let _ = writeln!(s, "euler: {} (hodge) {} (chern)", self.euler_hodge, self.euler_chern);
        let level = self.level.level.map_or("none".to_string(), |l| l.to_string());
        let pred = self.level.parity_prediction.map_or("-".to_string(), |p| p.to_string());
        let _ = writeln!(s, "level: {level} (parity rule {pred})");
        s
    }

    fn passed(&self) -> bool {
        self.euler_hodge == self.euler_chern
    }
}

#[derive(Serialize)]
struct FiberRow {
    corank: usize,
    euler: i64,
    betti: BettiTable,
}

#[derive(Serialize)]
struct StrataOutput {
    shape: BundleShape,
    strata: Vec<StratumRow>,
    discriminant: DiscriminantInvariants,
    fibers: Vec<FiberRow>,
}

impl Render for StrataOutput {
    fn table(&self) -> String {
        let mut s = format!("quadrics of dimension {} over P^{}\n", self.shape.n, self.shape.r);
        let _ = writeln!(s, "corank  codim  dim  nonempty");
        for row in &self.strata {
            let _ = writeln!(
                s,
                "{:>6}  {:>5}  {:>3}  {}",
                row.corank, row.expected_codim, row.expected_dim_in_base, row.nonempty
            );
        }
        let nodes = self.discriminant.node_count.map_or("-".to_string(), |n| n.to_string());
        let _ = writeln!(s, "discriminant degree {}, nodes {}", self.discriminant.degree, nodes);
        for f in &self.fibers {
            let _ = writeln!(
                s,
                "fiber corank {}: e = {}, betti {}",
                f.corank,
                f.euler,
                join(f.betti.values())
            );
        }
        s
    }
}

#[derive(Serialize)]
struct DoubleSolidOutput {
    model: DoubleSolidModel,
    discriminant_euler: i64,
    clemens: ClemensHodge,
    #[serde(skip_serializing_if = "Option::is_none")]
    betti_resolved: Option<BettiTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    intersection_betti: Option<BettiTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weight_graded: Option<WeightGradedDims>,
}

impl Render for DoubleSolidOutput {
    fn table(&self) -> String {
        let m = &self.model;
        let mut s = format!(
            "m = {}: branch degree {}, nodes {}, defect {}, e(discriminant) = {}\n",
            m.m, m.branch_degree, m.mu, m.defect, self.discriminant_euler
        );
        let _ = writeln!(s, "h12 = {}, h03 = {}", self.clemens.h12, self.clemens.h03);
        if let Some(b) = &self.betti_resolved {
            let _ = writeln!(s, "betti (resolution): {}  e = {}", join(b.values()), b.euler());
        }
        if let Some(b) = &self.intersection_betti {
            let _ = writeln!(s, "intersection betti: {}  e = {}", join(b.values()), b.euler());
        }
        if let Some(w) = &self.weight_graded {
            let _ = writeln!(s, "gr3 = {}, ih3 = {}, b3 = {}", w.gr3, w.ih3, w.h3_resolved);
        }
        s
    }

    fn passed(&self) -> bool {
        self.weight_graded.is_none_or(|w| w.all_equal())
    }
}

#[derive(Serialize)]
struct DecompOutput {
    shape: BundleShape,
    total_shift: usize,
    summands: Vec<Summand>,
    variable_middle_dim: i64,
    total_betti: BettiTable,
    euler_total: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    stratified_euler: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    euler_witness: Option<EulerWitness>,
}

impl Render for DecompOutput {
    fn table(&self) -> String {
        let mut s = format!(
            "f_* Q[{}] for quadrics of dimension {} over P^{}\n",
            self.total_shift, self.shape.n, self.shape.r
        );
        for x in &self.summands {
            let _ = writeln!(
                s,
                "  {:?} on {:?}, {:?}, shift {}",
                x.kind, x.support, x.local_system, x.shift
            );
        }
        let _ = writeln!(s, "betti: {}", join(self.total_betti.values()));
        let _ = writeln!(s, "euler: {}", self.euler_total);
        if let Some(e) = self.stratified_euler {
            let _ = writeln!(s, "stratified euler: {e}");
        }
        if let Some(w) = &self.euler_witness {
            let _ = writeln!(s, "e(IC(L0)) = {}, e(IC(M0)) = {}", w.e_ic_l0, w.e_ic_m0);
        }
        s
    }

    fn passed(&self) -> bool {
        self.stratified_euler.is_none_or(|e| e == self.euler_total) && self.euler_witness.is_none_or(|w| w.equal)
    }
}

#[derive(Debug, Clone, Serialize)]
struct Skipped {
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    reason: String,
}

#[derive(Serialize)]
struct Sweep {
    reports: Vec<VerificationReport>,
    skipped: Vec<Skipped>,
    pass: bool,
}

impl Sweep {
    fn new(reports: Vec<VerificationReport>, skipped: Vec<Skipped>) -> Self {
        let pass = reports.iter().all(|r| r.pass);
        Sweep { reports, skipped, pass }
    }
}

fn fmt_map(m: &std::collections::BTreeMap<String, i64>) -> String {
    m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

impl Render for Sweep {
    fn table(&self) -> String {
        let mut s = String::new();
        for r in &self.reports {
            let mut label = Vec::new();
            if let Some(m) = r.m {
                label.push(format!("m={m}"));
            }
            if let Some(n) = r.n {
                label.push(format!("n={n}"));
            }
            if let Some(x) = r.r {
                label.push(format!("r={x}"));
            }
            if let Some(c) = &r.check {
                label.push(c.clone());
            }
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(
                s,
                "{verdict} {}: {} | {}",
                label.join(" "),
                fmt_map(&r.lhs),
                fmt_map(&r.rhs)
            );
        }
        for k in &self.skipped {
            let who = [
                k.m.map(|m| format!("m={m}")),
                k.n.map(|n| format!("n={n}")),
                k.r.map(|r| format!("r={r}")),
            ];
            let _ = writeln!(
                s,
                "SKIP {}: {}",
                who.into_iter().flatten().collect::<Vec<_>>().join(" "),
                k.reason
            );
        }
        s
    }

    fn passed(&self) -> bool {
        self.pass
    }
}

#[derive(Serialize)]
struct AllOutput {
    web_odd: Sweep,
    euler: Sweep,
    level: Sweep,
    variable_dims: Sweep,
    typos: Sweep,
    pass: bool,
}

impl Render for AllOutput {
    fn table(&self) -> String {
        let sections = [
            ("web-odd", &self.web_odd),
            ("euler", &self.euler),
            ("level", &self.level),
            ("variable-dims", &self.variable_dims),
            ("typos", &self.typos),
        ];
        let mut s = String::new();
        for (name, sweep) in sections {
            let _ = writeln!(s, "[{name}] {}", if sweep.pass { "PASS" } else { "FAIL" });
            s.push_str(&sweep.table());
        }
        s
    }

    fn passed(&self) -> bool {
        self.pass
    }
}

impl Render for ScanReport {
    fn table(&self) -> String {
        let degree = self.det_degree.map_or("degenerate".to_string(), |d| d.to_string());
        let verdict = serde_json::to_value(self.verdict)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default();
        let mut s = format!("prime {}: det degree {degree}, verdict {verdict}\n", self.prime);
        let _ = writeln!(s, "corank  count");
        for (c, n) in &self.census {
            let _ = writeln!(s, "{c:>6}  {n}");
        }
        let _ = writeln!(s, "points of corank >= 2: {}", self.nodes.len());
        for node in &self.nodes {
            let _ = writeln!(
                s,
                "  [{}] corank {} hessian rank {}",
                join(&node.point),
                node.corank,
                node.hessian_rank
            );
        }
        s
    }
}

#[derive(Serialize)]
struct MultiScan {
    reports: Vec<ScanReport>,
    verdict: Verdict,
}

impl Render for MultiScan {
    fn table(&self) -> String {
        let mut s: String = self.reports.iter().map(Render::table).collect();
        let verdict = serde_json::to_value(self.verdict)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default();
        let _ = writeln!(s, "overall verdict: {verdict}");
        s
    }
}

fn ci_output(ambient: usize, degrees: Vec<u32>) -> Result<CiOutput, Failure> {
    let space = CISpace::new(ambient, degrees)?;
    let diamond = hodge_diamond_ci(&space)?;
    Ok(CiOutput {
        space: space.to_string(),
        dim: space.dim(),
        middle_row: diamond.middle_row(),
        variable_middle: variable_middle(&space)?,
        euler_hodge: diamond.euler(),
        euler_chern: euler_char_ci(&space)?,
        level: level_of(&space)?,
        diamond,
    })
}

fn strata_output(n: usize, r: usize) -> Result<StrataOutput, Failure> {
    let shape = BundleShape::new(n, r)?;
    let fibers = (0..=(n + 2).min(r + 1))
        .map(|c| {
            let q = QuadricFiberClass::new(n, c)?;
            Ok(FiberRow {
                corank: c,
                euler: fiber_euler(q)?,
                betti: fiber_betti(q)?,
            })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    Ok(StrataOutput {
        shape,
        strata: strata_table(shape).strata,
        discriminant: discriminant_invariants(shape),
        fibers,
    })
}

fn double_solid_output(m: usize, defect: i64) -> Result<DoubleSolidOutput, Failure> {
    let model = DoubleSolidModel::new(m, defect)?;
    let regular = defect == 0;
    Ok(DoubleSolidOutput {
        model,
        discriminant_euler: model.discriminant_euler(),
        clemens: clemens_hodge(&model)?,
        betti_resolved: if regular { Some(betti_resolved(&model)?) } else { None },
        intersection_betti: if regular { Some(ih_table(&model)?) } else { None },
        weight_graded: if regular {
            Some(weight_graded_dims(&model)?)
        } else {
            None
        },
    })
}

fn decomp_output(n: usize, r: usize) -> Result<DecompOutput, Failure> {
    let shape = BundleShape::new(n, r)?;
    let list = summands(shape)?;
    let var = variable_middle_dim(shape)?;
    let total_betti = assemble_total_betti(shape, var)?;
    let stratified = match stratified_euler(shape) {
        Ok(e) => Some(e),
        Err(DecompError::Unsupported(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let witness = if r == 3 && n.is_multiple_of(2) && n >= 6 {
        Some(euler_witness(n / 2)?)
    } else {
        None
    };
    Ok(DecompOutput {
        shape,
        total_shift: list.total_shift,
        summands: list.summands,
        variable_middle_dim: var,
        euler_total: total_betti.euler(),
        total_betti,
        stratified_euler: stratified,
        euler_witness: witness,
    })
}

fn sweep_m(
    range: InclusiveRange,
    f: impl Fn(usize) -> Result<VerificationReport, DecompError>,
) -> Result<Sweep, Failure> {
    let reports = range.iter().map(f).collect::<Result<Vec<_>, _>>()?;
    Ok(Sweep::new(reports, Vec::new()))
}

fn level_sweep(n_max: usize, r_max: usize) -> Result<Sweep, Failure> {
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for n in 1..=n_max {
        for r in 0..=r_max.min(n) {
            let (rep, admissible) = verify_level_formula(n, r)?;
            if admissible {
                reports.push(rep);
            } else {
                skipped.push(Skipped {
                    m: None,
                    n: Some(n),
                    r: Some(r),
                    reason: format!(
                        "parity rule {} exceeds dim X = {}; computed level {}",
                        rep.rhs["level"],
                        n - r,
                        rep.lhs["level"]
                    ),
                });
            }
        }
    }
    Ok(Sweep::new(reports, skipped))
}

fn variable_dims_sweep(n_max: usize) -> Result<Sweep, Failure> {
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for n in 1..=n_max {
        for r in 0..=3.min(n) {
            match verify_level_theorem(n, r) {
                Ok(rep) => reports.push(rep),
                Err(DecompError::NotCovered { .. }) => skipped.push(Skipped {
                    m: None,
                    n: Some(n),
                    r: Some(r),
                    reason: "no independent dimension count for this double cover".into(),
                }),
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(Sweep::new(reports, skipped))
}

fn typo_sweep(range: InclusiveRange) -> Result<Sweep, Failure> {
    let mut reports = Vec::new();
    for m in range.iter() {
        reports.push(verify_corrected_h12(m)?);
        if m >= 4 {
            reports.push(printed_h12_guard(m)?);
        }
        reports.push(branch_degree_guard(m)?);
    }
    Ok(Sweep::new(reports, Vec::new()))
}

fn all_output(m_max: usize) -> Result<AllOutput, Failure> {
    if m_max < 3 {
        return Err(Failure::Invalid(format!("--m-max must be at least 3, got {m_max}")));
    }
    let range = InclusiveRange { start: 3, end: m_max };
    let web_odd = sweep_m(range, verify_web_odd)?;
    let euler = sweep_m(range, verify_euler)?;
    let level = level_sweep(12, 4)?;
    let variable_dims = variable_dims_sweep(12)?;
    let typos = typo_sweep(range)?;
    let pass = [&web_odd, &euler, &level, &variable_dims, &typos]
        .iter()
        .all(|s| s.pass);
    Ok(AllOutput {
        web_odd,
        euler,
        level,
        variable_dims,
        typos,
        pass,
    })
}

fn scan_output(input: &PathBuf, primes: &[u64], threads: Option<usize>) -> Result<Box<dyn ErasedRender>, Failure> {
    let text = std::fs::read_to_string(input).map_err(|e| Failure::Invalid(format!("{}: {e}", input.display())))?;
    let system = QuadricSystem::from_json(&text)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        if t == 0 {
            return Err(Failure::Invalid("--threads must be positive".into()));
        }
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| Failure::Invalid(e.to_string()))?;
    let report = pool
        .install(|| regularity_report(&system, primes))
        .map_err(|e: DetScanError| Failure::from(e))?;
    if report.reports.len() == 1 {
        Ok(Box::new(report.reports.into_iter().next().expect("one report")))
    } else {
        Ok(Box::new(MultiScan {
            reports: report.reports,
            verdict: report.verdict,
        }))
    }
}

/// Object-safe view of [`Render`].
trait ErasedRender {
    fn to_json(&self) -> serde_json::Result<String>;
    fn to_table(&self) -> String;
    fn ok(&self) -> bool;
}

impl<T: Render> ErasedRender for T {
    fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    fn to_table(&self) -> String {
        self.table()
    }

    fn ok(&self) -> bool {
        self.passed()
    }
}

fn execute(cli: Cli) -> Result<Box<dyn ErasedRender>, Failure> {
    Ok(match cli.command {
        Command::Ci { ambient, degrees } => Box::new(ci_output(ambient, degrees)?),
        Command::Strata { n, r } => Box::new(strata_output(n, r)?),
        Command::DoubleSolid { m, defect } => Box::new(double_solid_output(m, defect)?),
        Command::Decomp { n, r } => Box::new(decomp_output(n, r)?),
        Command::Verify { target } => match target {
            VerifyTarget::WebOdd { m_range } => Box::new(sweep_m(m_range, verify_web_odd)?),
            VerifyTarget::Euler { m_range } => Box::new(sweep_m(m_range, verify_euler)?),
            VerifyTarget::Level { n_max, r_max } => Box::new(level_sweep(n_max, r_max)?),
            VerifyTarget::VariableDims { n_max } => Box::new(variable_dims_sweep(n_max)?),
            VerifyTarget::Typos { m_range } => Box::new(typo_sweep(m_range)?),
            VerifyTarget::All { m_max } => Box::new(all_output(m_max)?),
        },
        Command::Scan { input, prime, threads } => scan_output(&input, &prime, threads)?,
    })
}

/// Parses `argv` (including the program name), runs the command and writes
/// the report. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INVALID
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let format = cli.format;
    match execute(cli) {
        Ok(report) => {
            let text = match format {
                Format::Json => match report.to_json() {
                    Ok(mut s) => {
                        s.push('\n');
                        s
                    }
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        return EXIT_INVALID;
                    }
                },
                Format::Table => report.to_table(),
            };
            let _ = out.write_all(text.as_bytes());
            if report.ok() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            }
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("quadrics").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..12"), Ok(InclusiveRange { start: 3, end: 12 }));
        assert_eq!(parse_range("3..=5"), Ok(InclusiveRange { start: 3, end: 5 }));
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn ci_middle_row() {
        let (code, out, _) = call(&["ci", "--ambient", "7", "--degrees", "2,2,2,2"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["middle_row"]["entries"], serde_json::json!([1, 65, 65, 1]));
        assert_eq!(v["euler_chern"], -128);
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = call(&["ci", "--bogus"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(err.contains("Usage"));
        let (code, _, err) = call(&["ci", "--ambient", "2", "--degrees", "2,2,2"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(err.starts_with("error:"));
        assert_eq!(call(&["double-solid", "--m", "2"]).0, EXIT_INVALID);
    }

    #[test]
    fn table_format() {
        let (code, out, _) = call(&["--format", "table", "verify", "web-odd", "--m-range", "3..4"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 2);
    }
}
