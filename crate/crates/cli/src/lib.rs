//! Command-line frontend for `quasif_core`.
//!
//! [`run`] parses arguments, dispatches to the library and returns the exit
//! code together with the rendered streams, so the binary stays a thin shell
//! and tests can drive commands in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quasif_core::construct::PartitionSpec;
use quasif_core::{
    associated_prime_criterion, characterize_by_height, characterize_by_upper_perfect, construct_with,
    enumerate_quasi, facet_complex, hilbert_function_from_fvector,
    hilbert_polynomial_deg2, hilbert_series_deg2, hilbert_series_from_fvector, is_admissible_type,
    is_lower_perfect, is_perfect, is_upper_perfect, minimal_primes, perfect_number_bruteforce,
    perfect_number_formula, quasi_type, stanley_reisner_complex, type_bounds, CharacterizationReport,
    EnumerateOptions, Ideal, IdealFile, Monomial, PrimeIdeal, QuasiOutcome, ShadowSet, SimplicialComplex,
};
use serde::Deserialize;
use serde_json::{json, Value};

pub mod fixtures;

#[derive(Parser, Debug)]
#[command(name = "quasif", version, about = "Quasi f-ideal toolkit for square-free monomial ideals")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Exactly one ideal source: a file or inline generators.
#[derive(Args, Debug, Clone)]
pub struct IdealInput {
    /// JSON (`{"n":..,"generators":[[..],..]}`) or text file with one monomial per line.
    #[arg(long, value_name = "PATH", required_unless_present = "gens", conflicts_with = "gens")]
    pub input: Option<PathBuf>,
    /// Comma-separated generators such as `x1x2,x3x4`.
    #[arg(long, value_name = "LIST")]
    pub gens: Option<String>,
    /// Number of variables; inferred from the largest index when omitted.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriterionArg {
    Height,
    UpperPerfect,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    Facet,
    Nonface,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Quasi f-ideal type, optionally with the degree-2 characterizations.
    Classify {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long, value_enum)]
        criterion: Option<CriterionArg>,
    },
    /// f-vectors of the facet and Stanley-Reisner complexes.
    Fvector {
        #[command(flatten)]
        ideal: IdealInput,
    },
    /// Facets of one of the two complexes.
    Complex {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long, value_enum, default_value_t = ComplexKind::Nonface)]
        kind: ComplexKind,
    },
    /// Minimal primes, or the associated-prime test for one prime.
    Primes {
        #[command(flatten)]
        ideal: IdealInput,
        /// Variables of a prime to test, e.g. `1,3`.
        #[arg(long, value_name = "INDICES")]
        check: Option<String>,
    },
    /// Perfect set checks and perfect numbers.
    Perfect {
        #[command(subcommand)]
        action: PerfectAction,
    },
    /// Range of b for quasi f-ideals of type (0, b) in degree 2.
    Bounds {
        #[arg(long)]
        n: usize,
        /// Also report whether this b is admissible.
        #[arg(long, allow_hyphen_values = true)]
        b: Option<i64>,
    },
    /// Build a degree-2 quasi f-ideal of type (0, b).
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        /// Partition block, e.g. `1,2,3,4`.
        #[arg(long = "A", value_name = "INDICES")]
        part: Option<String>,
        /// Padding pairs, e.g. `x1x6,x2x7`.
        #[arg(long = "D", value_name = "LIST")]
        padding: Option<String>,
    },
    /// Count all degree-2 quasi f-ideals of type (0, b).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        /// One representative per relabeling orbit.
        #[arg(long)]
        mod_symmetry: bool,
        #[arg(long, default_value_t = quasif_core::enumerate::DEFAULT_CAP)]
        cap: usize,
    },
    /// Hilbert function and series of R/I.
    Hilbert {
        #[command(flatten)]
        ideal: IdealInput,
        /// Value of the Hilbert function at this degree.
        #[arg(long, value_name = "M", allow_hyphen_values = true)]
        function: Option<i64>,
        #[arg(long)]
        series: bool,
        /// Degree-2 closed forms in n and b.
        #[arg(long)]
        closed_form: bool,
    },
    /// Check every bundled example against its recorded values.
    Fixtures,
}

#[derive(Subcommand, Debug)]
pub enum PerfectAction {
    /// Shadow checks for the generators of an equigenerated ideal.
    Check {
        #[command(flatten)]
        ideal: IdealInput,
    },
    /// Smallest perfect set size.
    Number {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Use exhaustive search instead of the closed form.
        #[arg(long)]
        brute_force: bool,
    },
}

/// Anything that stops a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] quasif_core::Error),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
    #[error("{failed} of {total} fixtures do not match")]
    FixtureMismatch { failed: usize, total: usize },
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.name(),
            CliError::Io(_) => "IoError",
            CliError::Usage(_) => "UsageError",
            CliError::FixtureMismatch { .. } => "FixtureMismatch",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// A command result in both output formats.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let (result, partial) = match &cli.command {
        Command::Fixtures => {
            let report = fixtures::run_fixtures();
            let failed = report.failed();
            let rendered = report.to_report();
            if failed > 0 {
                let total = report.results.len();
                (Err(CliError::FixtureMismatch { failed, total }), Some(rendered))
            } else {
                (Ok(rendered), None)
            }
        }
        command => (execute(command), None),
    };
    let mut stdout = String::new();
    let mut stderr = String::new();
    let code = match result.and_then(|r| emit(&cli, r.render(cli.format), &mut stdout)) {
        Ok(()) => 0,
        Err(e) => {
            if let Some(report) = partial {
                stdout = report.render(cli.format);
            }
            writeln!(stderr, "error[{}]: {e}", e.name()).unwrap();
            e.exit_code()
        }
    };
    Outcome { code, stdout, stderr }
}

fn emit(cli: &Cli, rendered: String, stdout: &mut String) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            *stdout = rendered;
            Ok(())
        }
    }
}

/// Runs one non-fixture command.
pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Classify { ideal, criterion } => classify(&load_ideal(ideal)?, *criterion),
        Command::Fvector { ideal } => fvector(&load_ideal(ideal)?),
        Command::Complex { ideal, kind } => complex(&load_ideal(ideal)?, *kind),
        Command::Primes { ideal, check } => primes(&load_ideal(ideal)?, check.as_deref()),
        Command::Perfect { action: PerfectAction::Check { ideal } } => perfect_check(&load_ideal(ideal)?),
        Command::Perfect { action: PerfectAction::Number { n, d, brute_force } } => {
            perfect_number(*n, *d, *brute_force)
        }
        Command::Bounds { n, b } => bounds(*n, *b),
        Command::Construct { n, b, part, padding } => construct(*n, *b, part.as_deref(), padding.as_deref()),
        Command::Enumerate { n, b, mod_symmetry, cap } => enumerate(*n, *b, *mod_symmetry, *cap),
        Command::Hilbert { ideal, function, series, closed_form } => {
            hilbert(&load_ideal(ideal)?, *function, *series, *closed_form)
        }
        Command::Fixtures => Ok(fixtures::run_fixtures().to_report()),
    }
}

/// Reads the ideal named by `input`.
pub fn load_ideal(input: &IdealInput) -> Result<Ideal, CliError> {
    match (&input.input, &input.gens) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
            parse_ideal_text(&text, input.n)
        }
        (None, Some(gens)) => match input.n {
            Some(n) => Ok(Ideal::parse_list(gens, n)?),
            None => Ok(Ideal::from_text(&gens.replace([',', ';'], "\n"), None)?),
        },
        _ => Err(CliError::Usage("give exactly one of --input or --gens".into())),
    }
}

/// JSON documents carry their own `n`; anything else is the line format.
pub fn parse_ideal_text(text: &str, n: Option<usize>) -> Result<Ideal, CliError> {
    if text.trim_start().starts_with('{') {
        let file = IdealFile::deserialize(&mut serde_json::Deserializer::from_str(text))
            .map_err(|e| quasif_core::Error::Format { reason: e.to_string() })?;
        if let Some(n) = n.filter(|&n| n != file.n) {
            return Err(CliError::Usage(format!("--n {n} disagrees with n = {} in the file", file.n)));
        }
        Ok(file.into_ideal()?)
    } else {
        Ok(Ideal::from_text(text, n)?)
    }
}

fn parse_indices(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.trim_start_matches('x')
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("not a variable index: {s:?}")))
        })
        .collect()
}

fn ideal_json(ideal: &Ideal) -> Value {
    serde_json::to_value(ideal.to_file()).expect("ideal serializes")
}

fn faces_json(faces: &[Monomial]) -> Value {
    json!(faces.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
}

fn with_ideal(ideal: &Ideal, extra: Value) -> Value {
    let mut v = ideal_json(ideal);
    if let (Value::Object(base), Value::Object(more)) = (&mut v, extra) {
        base.extend(more);
    }
    v
}

fn report_json(r: &CharacterizationReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

fn report_text(label: &str, r: &CharacterizationReport, out: &mut String) {
    writeln!(out, "{label}: {}", if r.verdict { "quasi" } else { "not quasi" }).unwrap();
    for c in &r.conditions {
        writeln!(out, "  {}: {}", c.name, c.holds).unwrap();
    }
}

pub fn classify(ideal: &Ideal, criterion: Option<CriterionArg>) -> Result<Report, CliError> {
    let outcome = quasi_type(ideal)?;
    let mut text = String::new();
    match &outcome {
        QuasiOutcome::Quasi { quasi_type, .. } => writeln!(text, "type: {quasi_type}").unwrap(),
        QuasiOutcome::NotQuasi { .. } => writeln!(text, "not quasi: dimensions differ").unwrap(),
    }
    writeln!(text, "facet f-vector: {}", outcome.facet_fvector()).unwrap();
    writeln!(text, "nonface f-vector: {}", outcome.nonface_fvector()).unwrap();
    let mut extra = json!({
        "quasi": outcome.quasi_type().is_some(),
        "type": outcome.quasi_type().map(|t| t.entries().to_vec()),
        "is_f_ideal": outcome.quasi_type().is_some_and(|t| t.is_zero()),
        "facet_fvector": outcome.facet_fvector(),
        "nonface_fvector": outcome.nonface_fvector(),
    });
    if let Some(c) = criterion {
        if matches!(c, CriterionArg::Height | CriterionArg::Both) {
            let r = characterize_by_height(ideal)?;
            report_text("height criterion", &r, &mut text);
            extra["height_criterion"] = report_json(&r);
        }
        if matches!(c, CriterionArg::UpperPerfect | CriterionArg::Both) {
            let r = characterize_by_upper_perfect(ideal)?;
            report_text("upper perfect criterion", &r, &mut text);
            extra["upper_perfect_criterion"] = report_json(&r);
        }
    }
    Ok(Report { text, json: with_ideal(ideal, extra) })
}

pub fn fvector(ideal: &Ideal) -> Result<Report, CliError> {
    let facet = facet_complex(ideal)?.f_vector()?;
    let nonface = stanley_reisner_complex(ideal)?.f_vector()?;
    Ok(Report {
        text: format!("facet: {facet}\nnonface: {nonface}\n"),
        json: with_ideal(ideal, json!({ "facet_fvector": facet, "nonface_fvector": nonface })),
    })
}

pub fn complex(ideal: &Ideal, kind: ComplexKind) -> Result<Report, CliError> {
    let c: SimplicialComplex = match kind {
        ComplexKind::Facet => facet_complex(ideal)?,
        ComplexKind::Nonface => stanley_reisner_complex(ideal)?,
    };
    let mut text = String::new();
    for f in c.facets() {
        writeln!(text, "{f:?}").unwrap();
    }
    let label = match kind {
        ComplexKind::Facet => "facet",
        ComplexKind::Nonface => "nonface",
    };
    Ok(Report {
        text,
        json: json!({ "kind": label, "n": c.n(), "dimension": c.dimension(), "facets": faces_json(c.facets()) }),
    })
}

pub fn primes(ideal: &Ideal, check: Option<&str>) -> Result<Report, CliError> {
    if let Some(spec) = check {
        let prime = PrimeIdeal::from_indices(&parse_indices(spec)?, ideal.n())?;
        let holds = associated_prime_criterion(ideal, &prime)?;
        return Ok(Report {
            text: format!("{prime}: {}\n", if holds { "minimal prime" } else { "not a minimal prime" }),
            json: json!({ "prime": prime.vars().to_vec(), "minimal": holds }),
        });
    }
    let found = minimal_primes(ideal)?;
    let text: String = found.iter().map(|p| format!("{p}\n")).collect();
    let list: Vec<Vec<usize>> = found.iter().map(|p| p.vars().to_vec()).collect();
    Ok(Report { text, json: json!({ "n": ideal.n(), "minimal_primes": list }) })
}

pub fn perfect_check(ideal: &Ideal) -> Result<Report, CliError> {
    let degree = ideal.generators().first().map(|g| g.degree()).unwrap_or(0);
    let set = ShadowSet::new(ideal.n(), degree, ideal.generators().iter().copied())?;
    let upper = is_upper_perfect(&set)?;
    let lower = is_lower_perfect(&set)?;
    let both = is_perfect(&set)?;
    Ok(Report {
        text: format!("upper perfect: {upper}\nlower perfect: {lower}\nperfect: {both}\n"),
        json: json!({ "n": ideal.n(), "degree": degree, "upper_perfect": upper, "lower_perfect": lower, "perfect": both }),
    })
}

pub fn perfect_number(n: usize, d: usize, brute_force: bool) -> Result<Report, CliError> {
    let value = if brute_force {
        perfect_number_bruteforce(n, d)?
    } else if d == 2 {
        perfect_number_formula(n)?
    } else {
        return Err(CliError::Usage("the closed form covers d = 2 only; add --brute-force".into()));
    };
    Ok(Report {
        text: format!("N({n},{d}) = {value}\n"),
        json: json!({ "n": n, "d": d, "perfect_number": value, "method": if brute_force { "search" } else { "formula" } }),
    })
}

pub fn bounds(n: usize, b: Option<i64>) -> Result<Report, CliError> {
    let (lo, hi) = type_bounds(n)?;
    let mut text = format!("{lo} <= b <= {hi}\n");
    let mut v = json!({ "n": n, "lower": lo, "upper": hi });
    if let Some(b) = b {
        let ok = is_admissible_type(n, b)?;
        writeln!(text, "b = {b}: {}", if ok { "admissible" } else { "not admissible" }).unwrap();
        v["b"] = json!(b);
        v["admissible"] = json!(ok);
    }
    Ok(Report { text, json: v })
}

pub fn construct(n: usize, b: i64, part: Option<&str>, padding: Option<&str>) -> Result<Report, CliError> {
    let spec = match part {
        Some(p) => Some(PartitionSpec::from_indices(n, &parse_indices(p)?)?),
        None => None,
    };
    let pad = padding
        .map(|d| Ideal::parse_list(d, n).map(|i| i.generators().to_vec()))
        .transpose()?;
    let built = construct_with(n, b, spec, pad)?;
    let mut text = String::new();
    writeln!(text, "ideal: {}", built.ideal).unwrap();
    writeln!(text, "generators: {}", built.ideal.generators().len()).unwrap();
    writeln!(text, "type: {}", built.claimed_type).unwrap();
    writeln!(text, "A: {:?}", built.partition.part()).unwrap();
    writeln!(text, "W_A: {}", join(&built.within)).unwrap();
    writeln!(text, "D: {}", join(&built.padding)).unwrap();
    let extra = json!({
        "b": b,
        "type": built.claimed_type.entries(),
        "A": built.partition.part().to_vec(),
        "W_A": faces_json(&built.within),
        "D": faces_json(&built.padding),
    });
    Ok(Report { text, json: with_ideal(&built.ideal, extra) })
}

fn join(ms: &[Monomial]) -> String {
    ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn enumerate(n: usize, b: i64, mod_symmetry: bool, cap: usize) -> Result<Report, CliError> {
    let census = enumerate_quasi(n, b, EnumerateOptions { up_to_symmetry: mod_symmetry, cap })?;
    let mut text = format!("count: {}\n", census.count);
    if let Some(orbits) = census.orbit_count {
        writeln!(text, "orbits: {orbits}").unwrap();
    }
    for (k, i) in census.ideals.iter().enumerate() {
        match &census.orbit_sizes {
            Some(sizes) => writeln!(text, "{i} [orbit size {}]", sizes[k]).unwrap(),
            None => writeln!(text, "{i}").unwrap(),
        }
    }
    if census.truncated {
        writeln!(text, "(list truncated at {cap})").unwrap();
    }
    let json: Value = serde_json::from_str(&census.to_json()).expect("census json");
    Ok(Report { text, json })
}

pub fn hilbert(ideal: &Ideal, function: Option<i64>, series: bool, closed_form: bool) -> Result<Report, CliError> {
    let all = function.is_none() && !series && !closed_form;
    let fv = stanley_reisner_complex(ideal)?.f_vector()?;
    let mut text = String::new();
    let mut v = json!({ "n": ideal.n(), "nonface_fvector": fv });
    if let Some(m) = function {
        let value = hilbert_function_from_fvector(&fv, m)?;
        writeln!(text, "H({m}) = {value}").unwrap();
        v["hilbert_function"] = json!({ "m": m, "value": value.to_string() });
    }
    if all {
        let values = (0..=5)
            .map(|m| hilbert_function_from_fvector(&fv, m))
            .collect::<Result<Vec<_>, _>>()?;
        let listed: Vec<String> = values.iter().map(|x| x.to_string()).collect();
        writeln!(text, "H(0..5) = {}", listed.join(", ")).unwrap();
        v["hilbert_values"] = json!(values.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    }
    if series || all {
        let s = hilbert_series_from_fvector(&fv);
        writeln!(text, "series: {}", s.term_sum_string()).unwrap();
        writeln!(text, "rational: {}", s.reduced()).unwrap();
        v["series_terms"] = json!(s.term_sum_string());
        v["series_rational"] = json!(s.reduced().to_string());
    }
    if closed_form {
        let report = characterize_by_height(ideal)?;
        if !report.verdict {
            return Err(quasif_core::Error::NotQuasiDeg2.into());
        }
        let poly = hilbert_polynomial_deg2(ideal.n(), report.b)?;
        let closed = hilbert_series_deg2(ideal.n(), report.b)?;
        let agrees = closed.same_function(&hilbert_series_from_fvector(&fv));
        writeln!(text, "b = {}", report.b).unwrap();
        writeln!(text, "H(z) = {poly} for z >= 1").unwrap();
        writeln!(text, "closed series: {closed}").unwrap();
        writeln!(text, "matches f-vector series: {agrees}").unwrap();
        v["b"] = json!(report.b);
        v["closed_polynomial"] = json!(poly.to_string());
        v["closed_series"] = json!(closed.to_string());
        v["closed_matches"] = json!(agrees);
    }
    Ok(Report { text, json: v })
}
