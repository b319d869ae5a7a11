//! The `lingtruth` command line, as a library so it can be driven in tests.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or configuration
//! error.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use lingtruth_core::axioms::{check_all_axioms, check_involution, check_lattice_laws, classify_results};
use lingtruth_core::discrepancy::ledger;
use lingtruth_core::inference::{direct, inference_table, verify_examples, verify_examples_with, ExampleOutcome};
use lingtruth_core::oracle::{cross_check_ops, verify_lattice, CoverGraph};
use lingtruth_core::{
    AlgebraConfig, AlgebraKind, AxiomResult, Classification, Error, Formula, InferenceRow, LinguisticValue,
    RuleId, Valuation,
};
use serde::Serialize;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "lingtruth", version, about = "Linguistic truth-valued logic: axioms, evaluation, graded inference")]
struct Cli {
    #[command(flatten)]
    algebra: AlgebraArgs,

    /// Output format; each command accepts a subset
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    /// Index of the top hedge; the carrier has 2(n+1) values
    #[arg(long, global = true, default_value_t = 4)]
    n: u32,

    /// Use the quasi shape with one non-comparable pair
    #[arg(long, global = true)]
    qlia: bool,

    /// Grade i of the non-comparable pair v_{i0}, v_{(n-i)1}
    #[arg(long, global = true)]
    noncomp: Option<u32>,

    /// Comma-separated hedge names, lowest first (n+1 of them)
    #[arg(long, global = true, value_delimiter = ',')]
    labels: Option<Vec<String>>,
}

impl AlgebraArgs {
    fn config(&self) -> Result<AlgebraConfig, Error> {
        let kind = match (self.qlia, self.noncomp) {
            (true, Some(noncomp)) => AlgebraKind::Qlia { noncomp },
            (true, None) => return Err(Error::InvalidConfig("--qlia requires --noncomp".into())),
            (false, Some(_)) => return Err(Error::InvalidConfig("--noncomp requires --qlia".into())),
            (false, None) => AlgebraKind::Lia,
        };
        let config = AlgebraConfig::new(self.n, kind)?;
        match &self.labels {
            Some(labels) => config.with_labels(labels.iter().map(|s| s.trim())),
            None => Ok(config),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Rule {
    Mp,
    Mt,
}

impl From<Rule> for RuleId {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Mp => RuleId::MP,
            Rule::Mt => RuleId::MT,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the lattice laws, the involution and axioms I1-I7
    Check,
    /// Evaluate a formula under an assignment
    Eval {
        formula: String,
        /// NAME=v3T, NAME=v1F or NAME=quite true; repeatable
        #[arg(short = 'a', long = "assign")]
        assign: Vec<String>,
    },
    /// Modus Ponens / Modus Tollens over every pair, direct and closed form
    Infer {
        #[arg(long, value_enum)]
        rule: Rule,
        /// Only rows where direct and closed form disagree
        #[arg(long)]
        diff_only: bool,
    },
    /// Reproduce the eight worked examples
    VerifyExamples,
    /// Cover graph of the carrier
    Hasse,
    /// Statement discrepancies and the literal operation-table cross-check
    Discrepancies,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<u8, Failure>;

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let config = cli.algebra.config()?;
    let fmt = |allowed: &[Format]| -> Result<Format, Failure> {
        let f = cli.format.unwrap_or(allowed[0]);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(Failure::Usage(format!("--format {} is not supported here", f.to_possible_value().unwrap().get_name())))
        }
    };
    match &cli.command {
        Command::Check => check(&config, fmt(&[Format::Text, Format::Json])?, out),
        Command::Eval { formula, assign } => eval(&config, formula, assign, fmt(&[Format::Text, Format::Json])?, out),
        Command::Infer { rule, diff_only } => {
            infer(&config, (*rule).into(), *diff_only, fmt(&[Format::Text, Format::Json, Format::Csv])?, out)
        }
        Command::VerifyExamples => write_examples(&verify_examples(), fmt(&[Format::Text, Format::Json])?, out),
        Command::Hasse => hasse(&config, fmt(&[Format::Dot, Format::Json])?, out),
        Command::Discrepancies => discrepancies(&config, fmt(&[Format::Json, Format::Text])?, out),
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// `I1..I5` for runs of three or more, `I6,I7` otherwise.
fn axiom_span(results: &[&AxiomResult]) -> String {
    let ids: Vec<usize> = results.iter().map(|r| r.axiom as usize + 1).collect();
    let mut parts = Vec::new();
    let mut k = 0;
    while k < ids.len() {
        let mut end = k;
        while end + 1 < ids.len() && ids[end + 1] == ids[end] + 1 {
            end += 1;
        }
        if end - k >= 2 {
            parts.push(format!("I{}..I{}", ids[k], ids[end]));
        } else {
            parts.extend(ids[k..=end].iter().map(|i| format!("I{i}")));
        }
        k = end + 1;
    }
    parts.join(",")
}

fn axiom_summary(classification: Classification, results: &[AxiomResult]) -> String {
    let (hold, fail): (Vec<_>, Vec<_>) = results.iter().partition(|r| r.holds);
    let mut s = format!("{classification}: ");
    if !hold.is_empty() {
        s += &format!("{} hold", axiom_span(&hold));
    }
    if !fail.is_empty() {
        if !hold.is_empty() {
            s += "; ";
        }
        s += &format!("{} fail", axiom_span(&fail));
    }
    s
}

#[derive(Serialize)]
struct CheckReport {
    config: String,
    classification: Classification,
    expected: Classification,
    axioms: Vec<AxiomResult>,
    lattice_laws: Vec<lingtruth_core::LawResult>,
    involution: Vec<lingtruth_core::LawResult>,
    lattice: lingtruth_core::oracle::LatticeReport,
    oracle_mismatches: usize,
    literal_table_mismatches: usize,
    pass: bool,
}

fn check(config: &AlgebraConfig, format: Format, out: &mut dyn Write) -> Outcome {
    let axioms = check_all_axioms(config);
    let classification = classify_results(&axioms);
    let expected = if config.is_quasi() { Classification::Qlia } else { Classification::Lia };
    let lattice = verify_lattice(config);
    let ops = cross_check_ops(config);
    let report = CheckReport {
        config: config.to_string(),
        classification,
        expected,
        lattice_laws: check_lattice_laws(config),
        involution: check_involution(config),
        oracle_mismatches: ops.implemented.len(),
        literal_table_mismatches: ops.literal.len(),
        pass: classification == expected && ops.implemented.is_empty() && lattice.is_lattice(),
        lattice,
        axioms,
    };
    match format {
        Format::Json => json_line(out, &report)?,
        _ => {
            writeln!(out, "{}", axiom_summary(report.classification, &report.axioms))?;
            for r in report.axioms.iter().filter(|r| !r.holds) {
                if let Some(w) = r.witnesses.first() {
                    let args: Vec<String> =
                        [Some(w.x), w.y, w.z].into_iter().flatten().map(|v| v.to_string()).collect();
                    writeln!(
                        out,
                        "  {} fails {} times, e.g. ({}): {} vs {}",
                        r.axiom,
                        r.total_violations,
                        args.join(", "),
                        w.lhs,
                        w.rhs
                    )?;
                }
            }
            let laws_fail: Vec<_> = report.lattice_laws.iter().filter(|l| !l.holds).collect();
            if laws_fail.is_empty() {
                writeln!(out, "lattice laws hold")?;
            } else {
                for l in laws_fail {
                    writeln!(out, "lattice law {} fails {} times", l.law, l.total_violations)?;
                }
            }
            for l in &report.involution {
                let state = if l.holds { "holds".to_string() } else { format!("fails {} times", l.total_violations) };
                writeln!(out, "{}: {state}", l.law)?;
            }
            writeln!(
                out,
                "oracle: {} ({} closed-form mismatches, {} literal-table mismatches)",
                if report.lattice.is_lattice() { "lattice" } else { "not a lattice" },
                report.oracle_mismatches,
                report.literal_table_mismatches
            )?;
            if report.classification != report.expected {
                writeln!(out, "expected {}", report.expected)?;
            }
        }
    }
    Ok(if report.pass { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct EvalReport {
    formula: String,
    value: LinguisticValue,
    label: Option<String>,
}

fn eval(config: &AlgebraConfig, text: &str, assign: &[String], format: Format, out: &mut dyn Write) -> Outcome {
    let formula = Formula::parse(text).map_err(|e| match e {
        Error::Syntax { offset, .. } => Failure::Usage(format!("{e}\n  {text}\n  {}^", " ".repeat(offset))),
        other => other.into(),
    })?;
    let mut val = Valuation::new(config.clone());
    for a in assign {
        val.assign_text(a)?;
    }
    let value = formula.evaluate(&val)?;
    match format {
        Format::Json => {
            json_line(out, &EvalReport { formula: formula.render(), value, label: config.label(value) })?
        }
        _ => writeln!(out, "{}", config.describe(value))?,
    }
    Ok(EXIT_OK)
}

fn infer(config: &AlgebraConfig, rule: RuleId, diff_only: bool, format: Format, out: &mut dyn Write) -> Outcome {
    let rows: Vec<InferenceRow> = inference_table(config, rule).into_iter().filter(|r| !diff_only || !r.agree).collect();
    match format {
        Format::Json => json_line(out, &rows)?,
        Format::Csv => {
            writeln!(out, "p,q,rule,direct,closed,branch,agree")?;
            for r in &rows {
                writeln!(out, "{},{},{},{},{},\"{}\",{}", r.p, r.q, r.rule, r.direct, r.closed, r.branch, r.agree)?;
            }
        }
        _ => {
            let show = |v| config.describe(v);
            let cells: Vec<[String; 6]> = rows
                .iter()
                .map(|r| [show(r.p), show(r.q), show(r.direct), show(r.closed), r.branch.to_string(), r.agree.to_string()])
                .collect();
            let header = ["P".to_string(), "Q".into(), format!("{rule} direct"), "closed".into(), "branch".into(), "agree".into()];
            let mut width = header.clone().map(|h| h.len());
            for row in &cells {
                for (w, c) in width.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            writeln!(out, "{config}")?;
            for row in std::iter::once(&header).chain(&cells) {
                let line: Vec<String> = row.iter().zip(width).map(|(c, w)| format!("{c:<w$}")).collect();
                writeln!(out, "{}", line.join("  ").trim_end())?;
            }
            let disagree = rows.iter().filter(|r| !r.agree).count();
            writeln!(out, "{} rows, {disagree} disagreements", rows.len())?;
        }
    }
    let all_agree = rows.iter().all(|r| r.agree);
    Ok(if all_agree { EXIT_OK } else { EXIT_FAILED })
}

/// Writes an example report; exit status 1 if any example fails.
fn write_examples(outcomes: &[ExampleOutcome], format: Format, out: &mut dyn Write) -> Outcome {
    match format {
        Format::Json => json_line(out, &outcomes)?,
        _ => {
            for o in outcomes {
                writeln!(
                    out,
                    "example {} ({}) P={} Q={}: MP {} (expected {}), MT {} (expected {}): {}",
                    o.example,
                    o.config,
                    o.p,
                    o.q,
                    o.mp,
                    o.expected_mp,
                    o.mt,
                    o.expected_mt,
                    if o.pass { "pass" } else { "FAIL" }
                )?;
            }
            let passed = outcomes.iter().filter(|o| o.pass).count();
            writeln!(out, "{passed}/{} pass", outcomes.len())?;
        }
    }
    Ok(if outcomes.iter().all(|o| o.pass) { EXIT_OK } else { EXIT_FAILED })
}

/// `verify-examples` with a caller-supplied evaluator in place of the
/// algebra; `json` selects the JSON report.
pub fn verify_examples_using<F>(eval: F, json: bool, out: &mut dyn Write) -> u8
where
    F: Fn(&AlgebraConfig, RuleId, LinguisticValue, LinguisticValue) -> LinguisticValue,
{
    let format = if json { Format::Json } else { Format::Text };
    match write_examples(&verify_examples_with(eval), format, out) {
        Ok(code) => code,
        Err(_) => EXIT_FAILED,
    }
}

/// The evaluator `verify-examples` uses by default.
pub fn default_evaluator(c: &AlgebraConfig, rule: RuleId, p: LinguisticValue, q: LinguisticValue) -> LinguisticValue {
    direct(c, rule, p, q)
}

fn hasse(config: &AlgebraConfig, format: Format, out: &mut dyn Write) -> Outcome {
    let g = CoverGraph::build(config);
    match format {
        Format::Json => json_line(out, &g.to_json())?,
        _ => write!(out, "{}", g.to_dot())?,
    }
    Ok(EXIT_OK)
}

fn discrepancies(config: &AlgebraConfig, format: Format, out: &mut dyn Write) -> Outcome {
    let l = ledger(std::slice::from_ref(config));
    match format {
        Format::Json => json_line(out, &l)?,
        _ => {
            for d in &l.statements {
                writeln!(out, "{} [{}]: printed {}; resolved as {}", d.id, d.location, d.printed, d.resolution)?;
                if let Some(w) = &d.witness {
                    let inputs: Vec<String> = w.inputs.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "  {} ({}): printed {}, actual {}", w.config, inputs.join(", "), w.printed, w.actual)?;
                }
            }
            for r in &l.operations {
                writeln!(out, "{}: {} literal-table mismatches", r.config, r.literal.len())?;
                for m in &r.literal {
                    let lit = m.literal.map_or_else(|| "unbound".to_string(), |v| v.to_string());
                    writeln!(out, "  {:?} {} {} by {}: printed {lit}, oracle {}", m.op, m.a, m.b, m.rule, m.oracle)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}
