//! Command-line front end for the skewprime library.
//!
//! Verbs: `classify`, `factor`, `bound`, `similar`, `closure`, `lab`,
//! `validate`, `corpus`. Every verb takes `--json` for a machine-readable
//! report stamped with the schema id `skewprime/report/v1`.
//!
//! Exit codes:
//! * `0` — success, including reports that contain Inconclusive verdicts;
//! * `1` — usage or parse error (bad flags, bad ring/polynomial text,
//!   improper/zero inputs, unsupported ring for the operation);
//! * `2` — a search cap was exceeded before the answer was certain;
//! * `3` — an internal invariant was violated (primeness-lattice breach,
//!   cross-validation mismatch, corpus regression).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use skewprime::error::Error;
use skewprime::factorization::{factor_atoms, FactorStatus};
use skewprime::finitelab::{
    self, def_classify_with, enumerate_left_ideals, FiniteAlgebra, LabReport,
};
use skewprime::oracle::cross_validate;
use skewprime::parse::{parse_lab_ring, parse_poly, parse_ring};
use skewprime::primeness::classify;
use skewprime::similarity::{comaximal_witness, is_similar};
use skewprime::skewpoly::{LeftIdeal, SkewPoly, SkewRing};
use skewprime::structure::{bound, is_invariant, two_sided_closure};
use skewprime::verdict::{Verdict, Witness};

/// Schema identifier stamped on every JSON report.
pub const REPORT_SCHEMA: &str = "skewprime/report/v1";
/// Schema identifier expected at the top of corpus files.
pub const CORPUS_SCHEMA: &str = "skewprime/corpus/v1";
/// Environment variable overriding the default degree cap of `validate`.
pub const MAX_DEG_ENV: &str = "SKEWPRIME_MAX_DEG";
/// Default degree cap for `validate` when neither `--deg` nor the
/// environment variable is set.
pub const DEFAULT_VALIDATE_DEG: usize = 2;

#[derive(Parser)]
#[command(
    name = "skewprime",
    version,
    about = "Decide primeness notions for left ideals in skew polynomial rings",
    long_about = "Decides, for left ideals R·f in the skew polynomial rings \
GF(q)[t;frob^s], HQ[t] (rational quaternions), and QX[t;shift] \
(rational functions twisted by x -> x+1), whether the ideal is extremely, \
completely, structurally, and weakly prime; factors polynomials into atoms; \
computes bounds, closures, and similarity witnesses; and cross-checks the \
fast classifiers against brute-force definitional oracles."
)]
struct Cli {
    /// Emit a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Decide the four primeness notions for the left ideal R·poly.
    Classify {
        /// Ring descriptor: GF(q)[t;frob], GF(q)[t;frob^s], HQ[t], QX[t;shift].
        #[arg(long)]
        ring: String,
        /// Generator polynomial, e.g. "t^2 + 1" or "(t-j)*(t-i)".
        #[arg(long)]
        poly: String,
    },
    /// Factor poly into atoms, as far as the per-ring engines certify.
    Factor {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        poly: String,
    },
    /// Compute bound(poly): the monic generator of the largest two-sided
    /// ideal contained in R·poly (reported as absent when unbounded).
    Bound {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        poly: String,
    },
    /// Decide whether two polynomials are similar (R/Ra ≅ R/Rb) and, on
    /// Yes, produce and verify a comaximal witness.
    Similar {
        #[arg(long)]
        ring: String,
        /// First polynomial.
        a: String,
        /// Second polynomial.
        b: String,
    },
    /// Compute the two-sided closure R·poly·R (smallest two-sided ideal
    /// containing R·poly) and report its monic generator.
    Closure {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        poly: String,
    },
    /// Run brute-force definitional checks on a finite algebra.
    Lab {
        /// Algebra descriptor: GF(q), M2(GF(q)), T2(GF(q)).
        #[arg(long)]
        ring: String,
        /// all | characterizations | reduced | simplicity | examples.
        #[arg(long, default_value = "all")]
        check: String,
    },
    /// Cross-validate the fast classifiers against definitional oracles by
    /// sweeping every monic generator up to a degree cap.
    Validate {
        /// Finite-field ring descriptor, e.g. GF(4)[t;frob].
        #[arg(long)]
        ring: String,
        /// Degree cap (default from SKEWPRIME_MAX_DEG, else 2).
        #[arg(long)]
        deg: Option<usize>,
    },
    /// Replay the golden corpus files and diff actual against expected.
    Corpus {
        /// Directory holding corpus *.json files.
        #[arg(long, default_value = "corpus")]
        dir: PathBuf,
    },
}

/// Parse `args` and run the selected command, returning the process exit
/// code. All report text goes to stdout; errors go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 2 by convention; this tool reserves 2 for
            // cap-exceeded, so usage problems are remapped to 1.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli.verb, cli.json) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => 2,
        Error::InvariantViolation(_) => 3,
        _ => 1,
    }
}

fn dispatch(verb: &Verb, json: bool) -> Result<i32, Error> {
    match verb {
        Verb::Classify { ring, poly } => cmd_classify(ring, poly, json),
        Verb::Factor { ring, poly } => cmd_factor(ring, poly, json),
        Verb::Bound { ring, poly } => cmd_bound(ring, poly, json),
        Verb::Similar { ring, a, b } => cmd_similar(ring, a, b, json),
        Verb::Closure { ring, poly } => cmd_closure(ring, poly, json),
        Verb::Lab { ring, check } => cmd_lab(ring, check, json),
        Verb::Validate { ring, deg } => cmd_validate(ring, *deg, json),
        Verb::Corpus { dir } => cmd_corpus(dir, json),
    }
}

fn parse_input(ring: &str, poly: &str) -> Result<(SkewRing, SkewPoly), Error> {
    let ring = parse_ring(ring)?;
    let f = parse_poly(&ring, poly)?;
    Ok((ring, f))
}

fn report_skeleton(command: &str, ring: &SkewRing) -> Value {
    json!({
        "schema": REPORT_SCHEMA,
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "ring": ring.to_string(),
    })
}

fn verdict_value_json(v: &Verdict) -> Value {
    json!({
        "value": v.value.as_str(),
        "reason": v.reason,
    })
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Comaximal { x, y } => json!({
            "kind": "comaximal",
            "x": x.to_string(),
            "y": y.to_string(),
        }),
        Witness::Factorization { factors } => json!({
            "kind": "factorization",
            "factors": factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        }),
        Witness::CReduction { left, right } => json!({
            "kind": "cReduction",
            "left": left.to_string(),
            "right": right.to_string(),
        }),
        Witness::ClosureGenerator(g) => json!({
            "kind": "closureGenerator",
            "generator": g.to_string(),
        }),
        Witness::InvariantFactor(g) => json!({
            "kind": "invariantFactor",
            "factor": g.to_string(),
        }),
        Witness::BoundWitness(g) => json!({
            "kind": "bound",
            "bound": g.to_string(),
        }),
        Witness::QuaternionRoot(q) => json!({
            "kind": "quaternionRoot",
            "root": q.to_string(),
        }),
    }
}

fn print_report(json_mode: bool, report: &Value, text: &str) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
    } else {
        println!("{}", text.trim_end());
    }
}

// ---------------------------------------------------------------------------
// classify

fn cmd_classify(ring: &str, poly: &str, json_mode: bool) -> Result<i32, Error> {
    let (ring, f) = parse_input(ring, poly)?;
    let ideal = LeftIdeal::new(&f);
    let rep = classify(&ideal)?;

    let mut report = report_skeleton("classify", &ring);
    let obj = report.as_object_mut().expect("skeleton is an object");
    obj.insert("generator".into(), json!(f.to_string()));
    obj.insert("monic".into(), json!(ideal.generator().to_string()));
    obj.insert("invariant".into(), json!(rep.invariant));
    obj.insert(
        "bound".into(),
        rep.bound.as_ref().map_or(Value::Null, |b| json!(b.to_string())),
    );
    let mut verdicts = serde_json::Map::new();
    let mut witnesses = serde_json::Map::new();
    for (name, v) in rep.verdicts.named() {
        verdicts.insert(name.into(), verdict_value_json(v));
        if let Some(w) = &v.witness {
            witnesses.insert(name.into(), witness_json(w));
        }
    }
    obj.insert("verdicts".into(), Value::Object(verdicts));
    obj.insert("witnesses".into(), Value::Object(witnesses));

    let mut text = String::new();
    let _ = writeln!(text, "ring:      {ring}");
    let _ = writeln!(text, "ideal:     R*({})", ideal.generator());
    let _ = writeln!(text, "invariant: {}", if rep.invariant { "yes" } else { "no" });
    let _ = writeln!(
        text,
        "bound:     {}",
        match (&rep.bound, ideal.is_zero()) {
            (Some(b), _) => b.to_string(),
            (None, true) => "0 (the zero ideal is its own bound)".to_string(),
            (None, false) => "(unbounded)".to_string(),
        }
    );
    for (name, v) in rep.verdicts.named() {
        let _ = writeln!(text, "{:<13} {:<13} [{}]", format!("{name}:"), v.value.as_str(), v.reason);
    }
    print_report(json_mode, &report, &text);
    Ok(0)
}

// ---------------------------------------------------------------------------
// factor

fn cmd_factor(ring: &str, poly: &str, json_mode: bool) -> Result<i32, Error> {
    let (ring, f) = parse_input(ring, poly)?;
    let result = factor_atoms(&f)?;

    let mut report = report_skeleton("factor", &ring);
    let obj = report.as_object_mut().expect("skeleton is an object");
    obj.insert("input".into(), json!(f.to_string()));
    obj.insert("unit".into(), json!(result.unit.to_string()));
    obj.insert(
        "atoms".into(),
        json!(result.atoms.iter().map(|a| a.to_string()).collect::<Vec<_>>()),
    );
    obj.insert("complete".into(), json!(result.is_complete()));
    if let FactorStatus::Partial { residual, reason } = &result.status {
        obj.insert("residual".into(), json!(residual.to_string()));
        obj.insert("residualReason".into(), json!(reason));
    }
    let product_ok = f.is_unit() || result.product() == f;
    obj.insert("productCheck".into(), json!(product_ok));

    let mut text = String::new();
    let _ = writeln!(text, "ring:  {ring}");
    let _ = writeln!(text, "input: {f}");
    let _ = writeln!(text, "unit:  {}", result.unit);
    for (i, a) in result.atoms.iter().enumerate() {
        let _ = writeln!(text, "atom {}: {a}", i + 1);
    }
    match &result.status {
        FactorStatus::Complete => {
            let _ = writeln!(text, "complete: yes ({} atoms)", result.atoms.len());
        }
        FactorStatus::Partial { residual, reason } => {
            let _ = writeln!(text, "residual: {residual} [{reason}]");
            let _ = writeln!(text, "complete: no");
        }
    }
    if !product_ok {
        return Err(Error::InvariantViolation(
            "factorization does not multiply back to the input".into(),
        ));
    }
    print_report(json_mode, &report, &text);
    Ok(0)
}

// ---------------------------------------------------------------------------
// bound

fn cmd_bound(ring: &str, poly: &str, json_mode: bool) -> Result<i32, Error> {
    let (ring, f) = parse_input(ring, poly)?;
    if f.is_zero() {
        return Err(Error::ZeroInput("bound"));
    }
    let b = bound(&f)?;
    let invariant = is_invariant(&f);

    let mut report = report_skeleton("bound", &ring);
    let obj = report.as_object_mut().expect("skeleton is an object");
    obj.insert("input".into(), json!(f.to_string()));
    obj.insert("monic".into(), json!(f.monic().to_string()));
    obj.insert(
        "bound".into(),
        b.as_ref().map_or(Value::Null, |g| json!(g.to_string())),
    );
    obj.insert("bounded".into(), json!(b.is_some()));
    obj.insert("invariant".into(), json!(invariant));

    let mut text = String::new();
    let _ = writeln!(text, "ring:      {ring}");
    let _ = writeln!(text, "input:     {f}");
    let _ = writeln!(text, "invariant: {}", if invariant { "yes" } else { "no" });
    match &b {
        Some(g) => {
            let _ = writeln!(text, "bound:     {g}");
        }
        None => {
            let _ = writeln!(text, "bound:     none (R*f contains no nonzero two-sided ideal)");
        }
    }
    print_report(json_mode, &report, &text);
    Ok(0)
}

// ---------------------------------------------------------------------------
// similar

fn cmd_similar(ring: &str, a: &str, b: &str, json_mode: bool) -> Result<i32, Error> {
    let ring = parse_ring(ring)?;
    let fa = parse_poly(&ring, a)?;
    let fb = parse_poly(&ring, b)?;
    let verdict = is_similar(&fa, &fb)?;

    let mut report = report_skeleton("similar", &ring);
    let obj = report.as_object_mut().expect("skeleton is an object");
    obj.insert("left".into(), json!(fa.to_string()));
    obj.insert("right".into(), json!(fb.to_string()));
    obj.insert("verdict".into(), verdict_value_json(&verdict));

    let mut text = String::new();
    let _ = writeln!(text, "ring:    {ring}");
    let _ = writeln!(text, "left:    {fa}");
    let _ = writeln!(text, "right:   {fb}");
    let _ = writeln!(text, "similar: {} [{}]", verdict.value.as_str(), verdict.reason);

    if verdict.is_yes() && !fa.is_unit() {
        let wr = comaximal_witness(&fa, &fb)?;
        if !wr.checks.all() {
            return Err(Error::InvariantViolation(
                "similarity witness failed verification".into(),
            ));
        }
        obj.insert(
            "witness".into(),
            json!({
                "kind": "comaximal",
                "x": wr.witness.x.to_string(),
                "y": wr.witness.y.to_string(),
                "checks": {
                    "product": wr.checks.product,
                    "rightCoprime": wr.checks.right_coprime,
                    "leftCoprime": wr.checks.left_coprime,
                    "quotient": wr.checks.quotient,
                },
            }),
        );
        let _ = writeln!(text, "witness: x = {}", wr.witness.x);
        let _ = writeln!(text, "         y = {}", wr.witness.y);
        let _ = writeln!(text, "checks:  a*x = y*b, gcrd(x,b) = 1, gcld(a,y) = 1, (Rb:x) = Ra  (all verified)");
    } else {
        obj.insert("witness".into(), Value::Null);
    }
    print_report(json_mode, &report, &text);
    Ok(0)
}

// ---------------------------------------------------------------------------
// closure

fn cmd_closure(ring: &str, poly: &str, json_mode: bool) -> Result<i32, Error> {
    let (ring, f) = parse_input(ring, poly)?;
    if f.is_zero() {
        return Err(Error::ZeroInput("closure"));
    }
    let closure = two_sided_closure(&f);
    let invariant = is_invariant(&f);

    let mut report = report_skeleton("closure", &ring);
    let obj = report.as_object_mut().expect("skeleton is an object");
    obj.insert("input".into(), json!(f.to_string()));
    obj.insert("generator".into(), json!(closure.generator().to_string()));
    obj.insert("invariant".into(), json!(invariant));
    obj.insert("proper".into(), json!(closure.is_proper()));

    let mut text = String::new();
    let _ = writeln!(text, "ring:      {ring}");
    let _ = writeln!(text, "input:     {f}");
    let _ = writeln!(text, "closure:   R*({})*R = R*({})", f, closure.generator());
    let _ = writeln!(text, "invariant: {}", if invariant { "yes" } else { "no" });
    let _ = writeln!(text, "proper:    {}", if closure.is_proper() { "yes" } else { "no" });
    print_report(json_mode, &report, &text);
    Ok(0)
}

// ---------------------------------------------------------------------------
// lab

fn lab_report_json(r: &LabReport) -> Value {
    json!({
        "algebra": r.algebra,
        "ideals": r.ideals,
        "checks": r.checks,
        "discrepancies": r.discrepancies,
        "clean": r.is_clean(),
    })
}

fn lab_report_text(name: &str, r: &LabReport) -> String {
    let mut text = String::new();
    if r.is_clean() {
        let _ = writeln!(
            text,
            "{name}: clean ({} ideals, {} checks)",
            r.ideals, r.checks
        );
    } else {
        let _ = writeln!(
            text,
            "{name}: {} DISCREPANCIES ({} ideals, {} checks)",
            r.discrepancies.len(),
            r.ideals,
            r.checks
        );
        for d in &r.discrepancies {
            let _ = writeln!(text, "  - {d}");
        }
    }
    text
}

fn cmd_lab(ring: &str, check: &str, json_mode: bool) -> Result<i32, Error> {
    let alg = parse_lab_ring(ring)?;

    let mut reports: Vec<(String, LabReport)> = Vec::new();
    let mut example_lines: Vec<(String, bool)> = Vec::new();
    match check {
        "characterizations" => {
            reports.push(("characterizations".into(), finitelab::check_characterizations(&alg)?));
        }
        "reduced" => {
            reports.push(("reduced".into(), finitelab::check_reduced_intersection(&alg)?));
        }
        "simplicity" => {
            reports.push(("simplicity".into(), finitelab::check_simplicity_props(&alg)?));
        }
        "all" => {
            reports.push(("characterizations".into(), finitelab::check_characterizations(&alg)?));
            reports.push(("reduced".into(), finitelab::check_reduced_intersection(&alg)?));
            reports.push(("simplicity".into(), finitelab::check_simplicity_props(&alg)?));
        }
        "examples" => {
            example_lines = lab_examples(&alg)?;
        }
        other => {
            return Err(Error::InvalidArgument {
                op: "lab",
                msg: format!(
                    "unknown check {other:?}; expected all, characterizations, reduced, simplicity, or examples"
                ),
            });
        }
    }

    let mut report = json!({
        "schema": REPORT_SCHEMA,
        "version": env!("CARGO_PKG_VERSION"),
        "command": "lab",
        "ring": alg.name(),
        "check": check,
    });
    let obj = report.as_object_mut().expect("object");
    let clean: bool;
    let mut text = String::new();
    let _ = writeln!(text, "algebra: {}", alg.name());
    if check == "examples" {
        clean = example_lines.iter().all(|(_, ok)| *ok);
        obj.insert(
            "examples".into(),
            json!(example_lines
                .iter()
                .map(|(line, ok)| json!({"check": line, "pass": ok}))
                .collect::<Vec<_>>()),
        );
        for (line, ok) in &example_lines {
            let _ = writeln!(text, "[{}] {line}", if *ok { "pass" } else { "FAIL" });
        }
    } else {
        clean = reports.iter().all(|(_, r)| r.is_clean());
        obj.insert(
            "reports".into(),
            json!(reports
                .iter()
                .map(|(name, r)| {
                    let mut v = lab_report_json(r);
                    v.as_object_mut().expect("object").insert("name".into(), json!(name));
                    v
                })
                .collect::<Vec<_>>()),
        );
        for (name, r) in &reports {
            text.push_str(&lab_report_text(name, r));
        }
    }
    obj.insert("clean".into(), json!(clean));
    let _ = writeln!(text, "result: {}", if clean { "pass" } else { "FAIL" });
    print_report(json_mode, &report, &text);
    if clean {
        Ok(0)
    } else {
        // A definitional check failing means the library's theory layer and
        // the brute-force layer disagree: an internal invariant violation.
        Err(Error::InvariantViolation(format!(
            "lab check {check:?} found discrepancies in {}",
            alg.name()
        )))
    }
}

/// The named-example battery: classifies every proper left ideal of the
/// algebra by definition and asserts the family's known facts.
fn lab_examples(alg: &FiniteAlgebra) -> Result<Vec<(String, bool)>, Error> {
    let ideals = enumerate_left_ideals(alg)?;
    let mut lines = Vec::new();

    let proper: Vec<_> = ideals.iter().filter(|p| p.is_proper(alg)).collect();
    let mut patterns = Vec::new();
    for p in &proper {
        patterns.push(def_classify_with(alg, p, &ideals)?);
    }
    lines.push((
        format!("enumerated {} left ideals ({} proper)", ideals.len(), proper.len()),
        true,
    ));

    // Lattice audit (general-ring form) over every proper ideal.
    let lattice_ok = patterns.iter().all(|pat| pat.lattice_ok());
    lines.push(("primeness lattice holds for every proper left ideal".into(), lattice_ok));

    let name = alg.name();
    let zero_idx = proper
        .iter()
        .position(|p| p.rank() == 0)
        .expect("zero ideal is always proper");
    let zero = &patterns[zero_idx];
    if name.starts_with("M2(") {
        // Matrix algebras: the zero ideal is structurally and weakly prime
        // but not completely (and hence not extremely) prime; no proper
        // left ideal is extremely prime.
        lines.push((
            "zero ideal pattern is {extremely: No, completely: No, structurally: Yes, weakly: Yes}"
                .into(),
            zero.as_array() == [false, false, true, true],
        ));
        let extremely = patterns.iter().filter(|p| p.extremely).count();
        lines.push(("no proper left ideal is extremely prime".into(), extremely == 0));
    } else if name.starts_with("T2(") {
        // Triangular algebras separate completely from structurally: some
        // left ideal is completely but not structurally prime.
        let separating = patterns
            .iter()
            .any(|p| p.completely && !p.structurally);
        lines.push((
            "some left ideal is completely but not structurally prime".into(),
            separating,
        ));
    } else {
        // Division algebras (fields here): the zero ideal satisfies all
        // four notions, and it is the only proper prime.
        lines.push((
            "zero ideal satisfies all four primeness notions".into(),
            zero.as_array() == [true, true, true, true],
        ));
    }
    Ok(lines)
}

// ---------------------------------------------------------------------------
// validate

fn default_validate_deg() -> usize {
    std::env::var(MAX_DEG_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_VALIDATE_DEG)
}

fn cmd_validate(ring: &str, deg: Option<usize>, json_mode: bool) -> Result<i32, Error> {
    let ring = parse_ring(ring)?;
    let cap = deg.unwrap_or_else(default_validate_deg);
    let report = cross_validate(&ring, cap)?;

    let mut value = report_skeleton("validate", &ring);
    let obj = value.as_object_mut().expect("object");
    obj.insert("degreeCap".into(), json!(report.degree_cap));
    obj.insert("generators".into(), json!(report.generators));
    obj.insert("similarityPairs".into(), json!(report.similarity_pairs));
    obj.insert(
        "tallies".into(),
        json!(report
            .tallies
            .iter()
            .map(|t| json!({
                "notion": t.name,
                "agreeYes": t.agree_yes,
                "agreeNo": t.agree_no,
                "mismatches": t.mismatches,
            }))
            .collect::<Vec<_>>()),
    );
    obj.insert("mismatches".into(), json!(report.mismatches));
    obj.insert("clean".into(), json!(report.is_clean()));

    let text = report.to_string();
    print_report(json_mode, &value, &text);
    if report.is_clean() {
        Ok(0)
    } else {
        Err(Error::InvariantViolation(format!(
            "cross-validation found {} mismatches",
            report.mismatches.len()
        )))
    }
}

// ---------------------------------------------------------------------------
// corpus

#[derive(Deserialize)]
struct CorpusFile {
    schema: String,
    entries: Vec<CorpusEntry>,
}

#[derive(Deserialize)]
struct CorpusEntry {
    ring: String,
    command: String,
    input: String,
    /// Second polynomial for `similar`.
    #[serde(default)]
    other: Option<String>,
    expect: CorpusExpect,
    /// Human-readable description of the mathematical fact.
    #[serde(default)]
    note: Option<String>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct CorpusExpect {
    /// classify: lowercase verdicts per notion.
    #[serde(default)]
    verdicts: Option<std::collections::BTreeMap<String, String>>,
    /// bound: expected monic bound ("none" for unbounded).
    #[serde(default)]
    bound: Option<String>,
    /// similar: "yes" | "no" | "inconclusive".
    #[serde(default)]
    similar: Option<String>,
    /// similar: expected witness kind on Yes.
    #[serde(default, rename = "witnessKind")]
    witness_kind: Option<String>,
    /// factor: expected number of atoms.
    #[serde(default)]
    atoms: Option<usize>,
    /// factor: whether the factorization must be complete.
    #[serde(default)]
    complete: Option<bool>,
    /// closure: expected monic generator of the two-sided closure.
    #[serde(default)]
    generator: Option<String>,
    /// bound/classify: expected invariance of the input.
    #[serde(default)]
    invariant: Option<bool>,
}

fn norm(s: &str) -> String {
    s.trim().to_ascii_lowercase()
}

/// Run one corpus entry, appending human-readable failure lines.
fn run_corpus_entry(entry: &CorpusEntry, failures: &mut Vec<String>) -> Result<(), Error> {
    let label = format!(
        "{} {} {:?}{}{}",
        entry.ring,
        entry.command,
        entry.input,
        entry.other.as_deref().map(|o| format!(" vs {o:?}")).unwrap_or_default(),
        entry.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
    );
    let mut fail = |msg: String| failures.push(format!("{label}: {msg}"));

    let ring = parse_ring(&entry.ring)?;
    let f = parse_poly(&ring, &entry.input)?;
    match entry.command.as_str() {
        "classify" => {
            let rep = classify(&LeftIdeal::new(&f))?;
            let expected = entry.expect.verdicts.as_ref().ok_or(Error::InvalidArgument {
                op: "corpus",
                msg: "classify entry needs expect.verdicts".into(),
            })?;
            for (name, verdict) in rep.verdicts.named() {
                match expected.get(name) {
                    Some(want) if norm(want) != norm(verdict.value.as_str()) => {
                        fail(format!(
                            "{name}: expected {want}, got {} [{}]",
                            verdict.value.as_str(),
                            verdict.reason
                        ));
                    }
                    None => fail(format!("{name}: missing from expected verdicts")),
                    _ => {}
                }
            }
            if let Some(want) = entry.expect.invariant {
                if rep.invariant != want {
                    fail(format!("invariant: expected {want}, got {}", rep.invariant));
                }
            }
        }
        "bound" => {
            let b = bound(&f)?;
            let got = b.as_ref().map_or("none".to_string(), |g| g.to_string());
            let want = entry.expect.bound.as_ref().ok_or(Error::InvalidArgument {
                op: "corpus",
                msg: "bound entry needs expect.bound".into(),
            })?;
            // Compare as polynomials (re-parse) unless expecting "none".
            let matches = if norm(want) == "none" {
                b.is_none()
            } else {
                match &b {
                    None => false,
                    Some(g) => parse_poly(&ring, want)? == *g,
                }
            };
            if !matches {
                fail(format!("bound: expected {want}, got {got}"));
            }
            if let Some(want) = entry.expect.invariant {
                let got = is_invariant(&f);
                if got != want {
                    fail(format!("invariant: expected {want}, got {got}"));
                }
            }
        }
        "similar" => {
            let other = entry.other.as_ref().ok_or(Error::InvalidArgument {
                op: "corpus",
                msg: "similar entry needs a second polynomial in `other`".into(),
            })?;
            let g = parse_poly(&ring, other)?;
            let verdict = is_similar(&f, &g)?;
            let want = entry.expect.similar.as_ref().ok_or(Error::InvalidArgument {
                op: "corpus",
                msg: "similar entry needs expect.similar".into(),
            })?;
            if norm(want) != norm(verdict.value.as_str()) {
                fail(format!(
                    "similar: expected {want}, got {} [{}]",
                    verdict.value.as_str(),
                    verdict.reason
                ));
            }
            if verdict.is_yes() {
                if let Some(kind) = &entry.expect.witness_kind {
                    if norm(kind) != "comaximal" {
                        fail(format!("witnessKind: unknown expected kind {kind:?}"));
                    } else {
                        let wr = comaximal_witness(&f, &g)?;
                        if !wr.checks.all() {
                            fail("witness: comaximal witness failed verification".into());
                        }
                    }
                }
            }
        }
        "factor" => {
            let result = factor_atoms(&f)?;
            if let Some(want) = entry.expect.atoms {
                if result.atoms.len() != want {
                    fail(format!("atoms: expected {want}, got {}", result.atoms.len()));
                }
            }
            if let Some(want) = entry.expect.complete {
                if result.is_complete() != want {
                    fail(format!("complete: expected {want}, got {}", result.is_complete()));
                }
            }
            if !f.is_unit() && result.product() != f {
                fail("product: factors do not multiply back to the input".into());
            }
        }
        "closure" => {
            let closure = two_sided_closure(&f);
            let want = entry.expect.generator.as_ref().ok_or(Error::InvalidArgument {
                op: "corpus",
                msg: "closure entry needs expect.generator".into(),
            })?;
            if parse_poly(&ring, want)? != *closure.generator() {
                fail(format!(
                    "generator: expected {want}, got {}",
                    closure.generator()
                ));
            }
        }
        other => {
            return Err(Error::InvalidArgument {
                op: "corpus",
                msg: format!("unknown corpus command {other:?}"),
            });
        }
    }
    Ok(())
}

fn cmd_corpus(dir: &Path, json_mode: bool) -> Result<i32, Error> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::InvalidArgument {
            op: "corpus",
            msg: format!("cannot read corpus directory {}: {e}", dir.display()),
        })?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(Error::InvalidArgument {
            op: "corpus",
            msg: format!("no *.json corpus files in {}", dir.display()),
        });
    }

    let mut files_json = Vec::new();
    let mut text = String::new();
    let mut total_entries = 0usize;
    let mut total_failures = 0usize;
    for path in &paths {
        let raw = std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument {
            op: "corpus",
            msg: format!("cannot read {}: {e}", path.display()),
        })?;
        let file: CorpusFile = serde_json::from_str(&raw).map_err(|e| Error::InvalidArgument {
            op: "corpus",
            msg: format!("{} is not a valid corpus file: {e}", path.display()),
        })?;
        if file.schema != CORPUS_SCHEMA {
            return Err(Error::InvalidArgument {
                op: "corpus",
                msg: format!(
                    "{}: schema {:?} (expected {CORPUS_SCHEMA:?})",
                    path.display(),
                    file.schema
                ),
            });
        }
        let mut failures = Vec::new();
        for entry in &file.entries {
            run_corpus_entry(entry, &mut failures)?;
        }
        let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        let _ = writeln!(
            text,
            "{name}: {} entries, {}",
            file.entries.len(),
            if failures.is_empty() {
                "all match".to_string()
            } else {
                format!("{} FAILURES", failures.len())
            }
        );
        for line in &failures {
            let _ = writeln!(text, "  - {line}");
        }
        total_entries += file.entries.len();
        total_failures += failures.len();
        files_json.push(json!({
            "file": name,
            "entries": file.entries.len(),
            "failures": failures,
        }));
    }

    let report = json!({
        "schema": REPORT_SCHEMA,
        "version": env!("CARGO_PKG_VERSION"),
        "command": "corpus",
        "directory": dir.display().to_string(),
        "files": files_json,
        "entries": total_entries,
        "failures": total_failures,
        "clean": total_failures == 0,
    });
    let _ = writeln!(
        text,
        "total: {total_entries} entries, {}",
        if total_failures == 0 {
            "all match".to_string()
        } else {
            format!("{total_failures} FAILURES")
        }
    );
    print_report(json_mode, &report, &text);
    if total_failures == 0 {
        Ok(0)
    } else {
        Err(Error::InvariantViolation(format!(
            "corpus replay found {total_failures} failures"
        )))
    }
}
