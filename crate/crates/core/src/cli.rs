//! Command-line front end.
//!
//! Exit statuses are a stable contract: 0 all checks pass, 1 a suite failed,
//! 2 invalid input, 3 I/O error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::adapted::{exceptional_certificate, quiver_dot, CellViolation, Certificate};
use crate::ag::to_dot;
use crate::corpus::{self, natural_cmp, CorpusEntry};
use crate::divide::format::{parse_divide, write_divide};
use crate::lattice::Verdict;
use crate::pipeline::Analysis;
use crate::report::Report;

pub const EXIT_OK: u8 = 0;
pub const EXIT_SUITE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_IO: u8 = 3;

/// Directory of extra divide files for `corpus-run` when `--dir` is absent.
pub const CORPUS_DIR_ENV: &str = "ACAMPO_CORPUS_DIR";

#[derive(Debug, Parser)]
#[command(name = "acampo", version, about = "Divides, AΓ diagrams and Milnor lattice checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a divide file.
    Validate { path: PathBuf },
    /// Run the full pipeline and write the consolidated report.
    Report {
        path: PathBuf,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the AΓ diagram as Graphviz DOT.
        #[arg(long)]
        dot_ag: Option<PathBuf>,
        /// Write the Euler quiver as Graphviz DOT.
        #[arg(long)]
        dot_quiver: Option<PathBuf>,
        /// Reorder AΓ vertices within types: comma-separated 1-based old positions.
        #[arg(long)]
        order: Option<String>,
    },
    /// Print a generated divide file.
    Generate { family: Family, n: Option<usize> },
    /// Run every built-in entry plus the files of a custom directory.
    CorpusRun {
        /// Directory of extra `*.json` divide files; defaults to $ACAMPO_CORPUS_DIR.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    A,
    E6,
    Depth1,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Invalid(_) => EXIT_INVALID,
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn analyse(bytes: &[u8], order: Option<&[usize]>) -> Result<Analysis, CliError> {
    let text = std::str::from_utf8(bytes).map_err(|e| CliError::Invalid(format!("input is not UTF-8: {e}")))?;
    let divide = parse_divide(text).map_err(|d| CliError::Invalid(d.to_string()))?;
    Analysis::run(&divide, order).map_err(|e| CliError::Invalid(e.to_string()))
}

/// Parses `--order`: 1-based positions, turned 0-based.
pub fn parse_order(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => Err(CliError::Invalid(format!("bad --order entry {t:?}"))),
        })
        .collect()
}

/// Runs one parsed command, writing to `out` and `err`; returns the exit status.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match cli.command {
        Command::Validate { path } => cmd_validate(&path, out),
        Command::Report { path, json, dot_ag, dot_quiver, order } => {
            cmd_report(&path, json.as_deref(), dot_ag.as_deref(), dot_quiver.as_deref(), order.as_deref(), out)
        }
        Command::Generate { family, n } => cmd_generate(family, n, out),
        Command::CorpusRun { dir } => {
            let dir = dir.or_else(|| std::env::var_os(CORPUS_DIR_ENV).map(PathBuf::from));
            cmd_corpus_run(dir.as_deref(), out)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

pub fn cmd_validate(path: &Path, out: &mut dyn Write) -> Result<u8, CliError> {
    let a = analyse(&read(path)?, None)?;
    let inv = &a.invariants;
    let _ = writeln!(
        out,
        "valid: {} (d={}, r={}, mu={}, regions={})",
        a.signed.divide.name(),
        inv.d,
        inv.r,
        inv.mu,
        inv.n_regions
    );
    for issue in &a.signed.faces.issues {
        let _ = writeln!(out, "warning: region face {} revisits vertex {}", issue.face, issue.vertex);
    }
    Ok(EXIT_OK)
}

pub fn cmd_report(
    path: &Path,
    json: Option<&Path>,
    dot_ag: Option<&Path>,
    dot_quiver: Option<&Path>,
    order: Option<&str>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let bytes = read(path)?;
    let order = order.map(parse_order).transpose()?;
    let a = analyse(&bytes, order.as_deref())?;
    let report = Report::new(&a, &bytes);
    let name = a.signed.divide.name();
    match json {
        Some(p) => {
            write(p, &report.to_json())?;
            let _ = writeln!(out, "{name}: {}", report.verdict);
        }
        None => {
            let _ = out.write_all(report.to_json().as_bytes());
        }
    }
    if let Some(p) = dot_ag {
        write(p, &to_dot(name, &a.ag, &a.depths))?;
    }
    if let Some(p) = dot_quiver {
        write(p, &quiver_dot(name, &a.euler))?;
    }
    Ok(if a.passed() { EXIT_OK } else { EXIT_SUITE })
}

pub fn cmd_generate(family: Family, n: Option<usize>, out: &mut dyn Write) -> Result<u8, CliError> {
    let entry = match (family, n) {
        (Family::A, Some(n)) if n >= 1 => corpus::gen_a(n),
        (Family::A, _) => return Err(CliError::Invalid("family a needs n >= 1".into())),
        (Family::E6, None) => corpus::gen_e6(),
        (Family::Depth1, None) => corpus::gen_depth1(),
        (_, Some(_)) => return Err(CliError::Invalid("only family a takes n".into())),
    };
    let _ = out.write_all(write_divide(&entry.divide).as_bytes());
    Ok(EXIT_OK)
}

/// One line of the corpus summary.
#[derive(Clone, Debug)]
pub struct CorpusRow {
    pub name: String,
    pub origin: String,
    pub outcome: Result<RowVerdicts, String>,
    pub millis: u128,
}

#[derive(Clone, Debug)]
pub struct RowVerdicts {
    pub mu: usize,
    pub depth: usize,
    pub suite: Verdict,
    pub variation: Verdict,
    pub certificate: Verdict,
    pub cones: usize,
    pub facts: Verdict,
}

impl RowVerdicts {
    fn passed(&self) -> bool {
        [self.suite, self.variation, self.certificate, self.facts].iter().all(|v| v.passed())
    }
}

/// `E` measured against a reference AΓ of the same name.
fn reference_certificate(a: &Analysis, reference: &Analysis) -> Certificate {
    if a.ag.len() != reference.ag.len() {
        let violation = CellViolation {
            row: 0,
            col: 0,
            found: format!("rank {}", a.ag.len()),
            expected: format!("rank {}", reference.ag.len()),
        };
        return Certificate { verdict: Verdict::Fail, violations: vec![violation] };
    }
    exceptional_certificate(&a.euler.e, &reference.ag)
}

fn verdicts(a: &Analysis, expected: Option<(&CorpusEntry, &Analysis)>) -> RowVerdicts {
    let mut certificate = a.certificate.verdict;
    let mut facts = Verdict::Pass;
    if let Some((entry, reference)) = expected {
        facts = Verdict::from_bool(entry.check(a).is_empty());
        if !reference_certificate(a, reference).verdict.passed() {
            certificate = Verdict::Fail;
        }
    }
    RowVerdicts {
        mu: a.invariants.mu,
        depth: a.depths.diagram_depth,
        suite: Verdict::from_bool(a.suite.passed()),
        variation: Verdict::from_bool(a.variation.iter().all(|v| v.verdict.passed())),
        certificate,
        cones: a.cones.iter().filter(|c| c.verdict.passed()).count(),
        facts,
    }
}

/// Analyses the built-in corpus and every `*.json` file of `dir`, sorted by name.
pub fn corpus_rows(dir: Option<&Path>) -> Result<Vec<CorpusRow>, CliError> {
    let builtin = corpus::builtin();
    let mut references = Vec::new();
    let mut rows = Vec::new();
    for entry in &builtin {
        let start = Instant::now();
        let analysis = Analysis::run(&entry.divide, None);
        let outcome = match &analysis {
            Ok(a) => Ok(verdicts(a, Some((entry, a)))),
            Err(e) => Err(e.to_string()),
        };
        rows.push(CorpusRow { name: entry.name.clone(), origin: "builtin".into(), outcome, millis: start.elapsed().as_millis() });
        references.push(analysis.ok());
    }
    if let Some(dir) = dir {
        let listing = std::fs::read_dir(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
        let mut files: Vec<PathBuf> = listing
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        for path in files {
            let start = Instant::now();
            let bytes = read(&path)?;
            let file_name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let (name, outcome) = match analyse(&bytes, None) {
                Ok(a) => {
                    let name = a.signed.divide.name().to_string();
                    let expected = builtin
                        .iter()
                        .zip(&references)
                        .find(|(e, _)| e.name == name)
                        .and_then(|(e, r)| r.as_ref().map(|r| (e, r)));
                    (name, Ok(verdicts(&a, expected)))
                }
                Err(e) => (file_name.clone(), Err(e.to_string())),
            };
            rows.push(CorpusRow { name, origin: file_name, outcome, millis: start.elapsed().as_millis() });
        }
    }
    rows.sort_by(|a, b| {
        natural_cmp(&a.name, &b.name).then_with(|| (a.origin != "builtin").cmp(&(b.origin != "builtin")))
    });
    Ok(rows)
}

/// The summary table; the timing column is the only nondeterministic part.
pub fn render_rows(rows: &[CorpusRow]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<10} {:<18} {:>4} {:>5} {:<5} {:<9} {:<11} {:>5} {:<5} {:>6}",
        "name", "origin", "mu", "depth", "suite", "variation", "certificate", "cones", "facts", "ms"
    );
    for r in rows {
        match &r.outcome {
            Ok(v) => {
                let _ = writeln!(
                    s,
                    "{:<10} {:<18} {:>4} {:>5} {:<5} {:<9} {:<11} {:>5} {:<5} {:>6}",
                    r.name,
                    r.origin,
                    v.mu,
                    v.depth,
                    v.suite,
                    v.variation,
                    v.certificate,
                    v.cones,
                    v.facts,
                    r.millis
                );
            }
            Err(e) => {
                let _ = writeln!(s, "{:<10} {:<18} invalid: {e}", r.name, r.origin);
            }
        }
    }
    let passed = rows.iter().filter(|r| r.outcome.as_ref().is_ok_and(|v| v.passed())).count();
    let _ = writeln!(s, "{passed}/{} entries passed", rows.len());
    s
}

pub fn cmd_corpus_run(dir: Option<&Path>, out: &mut dyn Write) -> Result<u8, CliError> {
    let rows = corpus_rows(dir)?;
    let _ = out.write_all(render_rows(&rows).as_bytes());
    let code = rows
        .iter()
        .map(|r| match &r.outcome {
            Ok(v) if v.passed() => EXIT_OK,
            Ok(_) => EXIT_SUITE,
            Err(_) => EXIT_INVALID,
        })
        .max()
        .unwrap_or(EXIT_OK);
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_one_based() {
        assert_eq!(parse_order("2,1,3").unwrap(), vec![1, 0, 2]);
        assert!(parse_order("0,1").is_err());
        assert!(parse_order("x").is_err());
    }

    #[test]
    fn generate_needs_n_for_a() {
        let mut out = Vec::new();
        assert_eq!(cmd_generate(Family::A, None, &mut out).unwrap_err().code(), EXIT_INVALID);
        assert_eq!(cmd_generate(Family::E6, Some(2), &mut out).unwrap_err().code(), EXIT_INVALID);
        assert_eq!(cmd_generate(Family::A, Some(1), &mut out).unwrap(), EXIT_OK);
    }

    #[test]
    fn flipped_e6_fails_reference_certificate() {
        let e6 = corpus::gen_e6();
        let reference = Analysis::run(&e6.divide, None).unwrap();
        let flipped = Analysis::run(&e6.divide.clone().with_flipped_seed(), None).unwrap();
        assert!(flipped.certificate.verdict.passed());
        assert_eq!(reference_certificate(&flipped, &reference).verdict, Verdict::Fail);
        assert!(!e6.check(&flipped).is_empty());
    }
}
