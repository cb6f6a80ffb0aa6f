use std::ffi::OsString;
use std::time::Instant;

use cayint::classifier::{
    catalog, classify_catalog, count_connection_sets, dicyclic_host, gk_membership_with, verify_closed_forms,
    verify_hereditary_properties, witness_suite, ClassifierError, SweepOptions, CATALOG_K,
};
use cayint::group::{fingerprint, generated_subgroup, named_group, Group, GroupError, DEFAULT_ORDER_CAP};
use cayint::kmmm::{decompose, KmmmError};
use cayint::spectral::{analyze, atoms, ConnectionSet, SpectralError};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::report::{ErrorInfo, GroupInfo, Report, Status, Timing, SCHEMA_VERSION};
use crate::spec::{parse_spec, BuildError, SyntaxError};

#[derive(Debug, Parser)]
#[command(name = "cayint", version, about = "Integral Cayley graphs and the classes G_k")]
pub struct Cli {
    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "CAYINT_JOBS")]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, labels and invariants of a group.
    Info { spec: String },
    /// Spectrum of Cay(G, S).
    Spectrum {
        spec: String,
        /// Comma-separated element labels.
        #[arg(long)]
        set: String,
    },
    /// Decide G ∈ G_k.
    Gk {
        spec: String,
        #[arg(long)]
        k: usize,
        /// Sweep every set instead of stopping at the first failure.
        #[arg(long)]
        full: bool,
    },
    /// Symbol and chi-matrices of Cay(G, S) over an abelian subgroup.
    Symbol {
        spec: String,
        /// Generators of the abelian subgroup H.
        #[arg(long)]
        subgroup: String,
        /// Leading coset representatives.
        #[arg(long, default_value = "")]
        pin: String,
        #[arg(long)]
        set: String,
    },
    /// Run a built-in verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Include the order-108 dicyclic group.
        #[arg(long)]
        stretch: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Witnesses,
    Classification,
    Hereditary,
    Kmmm,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Kmmm(#[from] KmmmError),
    #[error(transparent)]
    Classifier(#[from] ClassifierError),
}

impl CliError {
    fn internal(&self) -> bool {
        fn spectral(e: &SpectralError) -> bool {
            matches!(e, SpectralError::OracleDisagreement { .. } | SpectralError::InvariantViolated(_))
        }
        fn kmmm(e: &KmmmError) -> bool {
            match e {
                KmmmError::InvariantViolated(_) => true,
                KmmmError::Spectral(s) => spectral(s),
                _ => false,
            }
        }
        match self {
            CliError::Spectral(e) => spectral(e),
            CliError::Kmmm(e) => kmmm(e),
            CliError::Classifier(e) => match e {
                ClassifierError::InvariantViolated(_) | ClassifierError::ThreadPool(_) => true,
                ClassifierError::Spectral(s) => spectral(s),
                ClassifierError::Kmmm(k) => kmmm(k),
                _ => false,
            },
            _ => false,
        }
    }

    fn info(&self) -> ErrorInfo {
        let mut info = ErrorInfo { message: self.to_string(), ..Default::default() };
        info.kind = match self {
            CliError::Syntax(e) => {
                info.line = Some(e.line);
                info.column = Some(e.column);
                info.expected = e.expected.clone();
                "syntax"
            }
            CliError::Build(_) => "build",
            CliError::Group(_) | CliError::Spectral(_) | CliError::Kmmm(_) | CliError::Classifier(_) => {
                if let Some(s) = self.unknown_label() {
                    info.suggestions = s.to_vec();
                    "unknown-label"
                } else if self.internal() {
                    "invariant"
                } else {
                    "domain"
                }
            }
        }
        .to_string();
        info
    }

    fn unknown_label(&self) -> Option<&[String]> {
        let group = match self {
            CliError::Group(e) => e,
            CliError::Kmmm(KmmmError::Group(e)) => e,
            CliError::Classifier(ClassifierError::Group(e)) => e,
            _ => return None,
        };
        match group {
            GroupError::UnknownLabel { suggestions, .. } => Some(suggestions),
            _ => None,
        }
    }
}

/// What the binary should print and the exit code.
pub enum Outcome {
    Report(Box<Report>),
    /// `--help` / `--version` text.
    Text(String),
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Report(r) => r.exit_code,
            Outcome::Text(_) => 0,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Outcome::Report(r) => r.to_json(),
            Outcome::Text(t) => t.clone(),
        }
    }
}

struct Done {
    status: Status,
    group: Option<GroupInfo>,
    result: Value,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let start = Instant::now();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome::Text(e.to_string());
            }
            let info = ErrorInfo { kind: "usage".into(), message: e.render().to_string(), ..Default::default() };
            return Outcome::Report(Box::new(envelope("", Status::UsageError, None, None, Some(info), start)));
        }
    };
    let name = command_name(&cli.command);
    if let Some(n) = cli.jobs {
        // A second call in the same process (tests) keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let opts = SweepOptions { jobs: cli.jobs, ..SweepOptions::default() };
    let report = match execute(&cli.command, &opts) {
        Ok(done) => envelope(name, done.status, done.group, Some(done.result), None, start),
        Err(e) => {
            let status = if e.internal() { Status::InternalError } else { Status::UsageError };
            envelope(name, status, None, None, Some(e.info()), start)
        }
    };
    Outcome::Report(Box::new(report))
}

fn envelope(
    command: &str,
    status: Status,
    group: Option<GroupInfo>,
    result: Option<Value>,
    error: Option<ErrorInfo>,
    start: Instant,
) -> Report {
    Report {
        schema_version: SCHEMA_VERSION,
        command: command.to_string(),
        status,
        exit_code: status.exit_code(),
        group,
        result,
        error,
        timing: Timing { elapsed_ms: start.elapsed().as_secs_f64() * 1e3 },
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Info { .. } => "info",
        Command::Spectrum { .. } => "spectrum",
        Command::Gk { .. } => "gk",
        Command::Symbol { .. } => "symbol",
        Command::Verify { .. } => "verify",
    }
}

fn load(spec: &str) -> Result<(Group, GroupInfo), CliError> {
    let ast = parse_spec(spec)?;
    let g = ast.build(DEFAULT_ORDER_CAP)?;
    let info = GroupInfo { spec: ast.to_string(), order: g.order(), fingerprint: fingerprint(&g) };
    Ok((g, info))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn pass(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::Failed
    }
}

fn execute(command: &Command, opts: &SweepOptions) -> Result<Done, CliError> {
    match command {
        Command::Info { spec } => {
            let (g, info) = load(spec)?;
            let result = json!({
                "labels": g.labels(),
                "elementOrders": (0..g.order()).map(|x| g.element_order(x)).collect::<Vec<_>>(),
                "atoms": atoms(&g).iter().map(|a| a.elements().iter().map(|&x| g.label(x)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "involutions": g.involutions().len(),
                "orderTestG2": cayint::classifier::g2_order_test(&g),
            });
            Ok(Done { status: Status::Ok, group: Some(info), result })
        }
        Command::Spectrum { spec, set } => {
            let (g, info) = load(spec)?;
            let set = ConnectionSet::new(&g, g.elements(set)?)?;
            let report = analyze(&g, &set)?;
            let mut result = to_value(&report);
            result["set"] = to_value(&set.labels(&g));
            result["degree"] = json!(set.len());
            result["charPoly"] = to_value(&report.char_poly.coefficient_strings());
            let status = if report.integral { Status::Ok } else { Status::Nonintegral };
            Ok(Done { status, group: Some(info), result })
        }
        Command::Gk { spec, k, full } => {
            let (g, info) = load(spec)?;
            let verdict = gk_membership_with(&g, *k, &SweepOptions { full: *full, ..opts.clone() })?;
            let status = if verdict.is_member() { Status::Ok } else { Status::Nonmember };
            Ok(Done { status, group: Some(info), result: to_value(&verdict) })
        }
        Command::Symbol { spec, subgroup, pin, set } => {
            let (g, info) = load(spec)?;
            let h = generated_subgroup(&g, &g.elements(subgroup)?);
            let pins = g.elements(pin)?;
            let set = ConnectionSet::new(&g, g.elements(set)?)?;
            let report = analyze(&g, &set)?;
            let dec = decompose(&g, &set, &h, &pins)?;
            let m = dec.symbol.m();
            let labels = |cell: &[usize]| cell.iter().map(|&x| g.label(x).to_string()).collect::<Vec<_>>();
            let symbol: Vec<Vec<Vec<String>>> =
                (0..m).map(|i| (0..m).map(|j| labels(dec.symbol.cell(i, j))).collect()).collect();
            let blocks: Vec<Value> = dec
                .blocks
                .iter()
                .map(|b| {
                    let matrix: Vec<Vec<[f64; 2]>> =
                        b.matrix.to_complex().iter().map(|row| row.iter().map(|z| [z.re, z.im]).collect()).collect();
                    let mut values = b.eigenvalues.values.clone();
                    values.sort_by(f64::total_cmp);
                    json!({
                        "exponents": b.character.exponents(),
                        "rootOrder": b.character.root_order(),
                        "matrix": matrix,
                        "eigenvalues": values,
                        "radicand": b.eigenvalues.radicand.as_ref().map(|r| r.to_complex().re),
                    })
                })
                .collect();
            let spectrum = dec.spectrum();
            let result = json!({
                "subgroup": labels(h.elements()),
                "transversal": dec.transversal.rep_labels(),
                "set": set.labels(&g),
                "symbol": symbol,
                "characters": blocks,
                "spectrum": spectrum,
                "integral": report.integral,
                "matchesGraph": cayint::spectral::float::sorted_close(&spectrum, &report.float_spectrum, 1e-6),
            });
            let status = if report.integral { Status::Ok } else { Status::Nonintegral };
            Ok(Done { status, group: Some(info), result })
        }
        Command::Verify { suite, stretch } => verify(*suite, *stretch, opts),
    }
}

fn verify(suite: Suite, stretch: bool, opts: &SweepOptions) -> Result<Done, CliError> {
    let (ok, result) = match suite {
        Suite::Witnesses => {
            let r = witness_suite()?;
            (r.all_confirmed, to_value(&r))
        }
        Suite::Classification => {
            let r = classify_catalog(&CATALOG_K, opts)?;
            (r.passed(), to_value(&r))
        }
        Suite::Hereditary => {
            let mut reports = Vec::new();
            for entry in catalog().iter().filter(|e| e.expected_at(4) == Some(true)) {
                let g = entry.build()?;
                for k in [4, 5] {
                    reports.push(verify_hereditary_properties(&g, k, opts)?);
                }
            }
            let h2 = named_group("Z4sZ4")?;
            let d8 = fingerprint(&named_group("D8")?);
            let factor = verify_hereditary_properties(&h2, 2, opts)?;
            let dihedral_quotient = factor.observations.iter().any(|o| o.quotient == d8);
            let ok = reports.iter().all(|r| r.passed) && factor.passed && dihedral_quotient;
            (ok, json!({ "members": reports, "factorGroupExample": factor, "dihedralQuotientFound": dihedral_quotient }))
        }
        Suite::Kmmm => {
            let ns: &[u32] = if stretch { &[1, 2] } else { &[1] };
            let mut closed = Vec::new();
            let mut sweeps = Vec::new();
            let mut ok = true;
            for &n in ns {
                let r = verify_closed_forms(n)?;
                ok &= r.passed;
                closed.push(r);
                let g = dicyclic_host(n)?;
                let v = gk_membership_with(&g, 5, opts)?;
                let expected_sets = count_connection_sets(&g, 5);
                ok &= v.is_member() && v.sets_examined == expected_sets;
                sweeps.push(json!({ "n": n, "verdict": v, "enumerated": expected_sets }));
            }
            (ok, json!({ "closedForms": closed, "g5Sweeps": sweeps }))
        }
    };
    let mut result = result;
    result["stretch"] = json!(stretch);
    Ok(Done { status: pass(ok), group: None, result })
}
