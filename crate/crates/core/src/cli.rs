//! Command-line front end.
//!
//! Subcommands: `invariants` (report for a diagram file), `count`
//! (tight-structure counts on a torus-knot complement at a given tb),
//! `family` (enumerate realization records, optionally emitting diagram
//! files), and `verify-paper` (the built-in verification suite).
//!
//! Exit codes: 0 for success — including results that are honestly
//! unknown — 2 for input and usage errors, 3 for domain errors (singular
//! or inconsistent diagrams), 4 for verification failures.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::diagram::DiagramFile;
use crate::families::{
    self, FamilyError, FamilyParams, FamilyRequest, RealizationRecord, Source, Variant,
};
use crate::invariants::{self, Verdict};
use crate::seifert::{self, Count, SeifertError, TorusKnotSpec};
use crate::verify;
use crate::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "legctl",
    version,
    about = "Exact invariants of Legendrian knots in contact surgery presentations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classical invariants of the distinguished knot in a diagram file
    Invariants {
        /// Path to a surgery-diagram JSON file
        file: PathBuf,
        /// Output format
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Tight-structure counts on a torus-knot complement at a given tb
    Count {
        /// First torus-knot parameter (>= 2)
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        /// Second torus-knot parameter (nonzero, coprime to p)
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        /// Thurston-Bennequin invariant of the realization
        #[arg(long, allow_negative_numbers = true)]
        tb: i64,
        /// Output format
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Enumerate the realization records of a family
    Family {
        /// Which family to enumerate
        #[arg(value_enum)]
        id: FamilyArg,
        /// Torus-knot parameter p (pos and neg families)
        #[arg(long, allow_negative_numbers = true)]
        p: Option<i64>,
        /// Family depth n (pos and neg families)
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
        /// Family depth m (lht and rht-table families)
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        /// Restrict the tabulated family to one diagram shape
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        /// Write each member's diagram as JSON into this directory
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Output format
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run the built-in verification suite
    VerifyPaper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Lht,
    Pos,
    Neg,
    RhtTable,
}

impl FamilyArg {
    fn label(self) -> &'static str {
        match self {
            FamilyArg::Lht => "lht",
            FamilyArg::Pos => "pos",
            FamilyArg::Neg => "neg",
            FamilyArg::RhtTable => "rht-table",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    A,
    B,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::A => Variant::A,
            VariantArg::B => Variant::B,
        }
    }
}

/// Rendered output plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub text: String,
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Invariants { file, format } => invariants_outcome(&file, format),
        Command::Count { p, q, tb, format } => count_outcome(p, q, tb, format),
        Command::Family {
            id,
            p,
            n,
            m,
            variant,
            emit,
            format,
        } => family_outcome(id, p, n, m, variant, emit, format),
        Command::VerifyPaper => verify_outcome(),
    }
}

fn failure(exit_code: i32, msg: impl std::fmt::Display) -> Outcome {
    Outcome {
        exit_code,
        text: format!("error: {msg}"),
    }
}

/// An honestly-unknown result: ordinary output, exit code 0.
fn unknown_outcome(format: Format, reason: impl std::fmt::Display) -> Outcome {
    let text = match format {
        Format::Table => format!("unknown: {reason}"),
        Format::Json => pretty(&json!({ "status": "unknown", "reason": reason.to_string() })),
    };
    Outcome {
        exit_code: EXIT_OK,
        text,
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values render")
}

fn rat_str(r: &Rational) -> String {
    r.to_string()
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Overtwisted => "overtwisted",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn invariants_outcome(path: &Path, format: Format) -> Outcome {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            return failure(
                EXIT_INPUT,
                format_args!("cannot read {}: {e}", path.display()),
            )
        }
    };
    let file = match DiagramFile::parse(&text) {
        Ok(f) => f,
        Err(e) => return failure(EXIT_INPUT, e),
    };
    let (diagram, groups) = match file.validate() {
        Ok(x) => x,
        Err(e) => return failure(EXIT_INPUT, e),
    };
    let rep = match invariants::report(&diagram) {
        Ok(r) => r,
        Err(e) => return failure(EXIT_DOMAIN, e),
    };
    if let Some(g) = &groups {
        // the file's push-off partition must reproduce the full computation
        let deflated = diagram
            .deflate(g)
            .map_err(|e| e.to_string())
            .and_then(|dd| invariants::report_deflated(&dd).map_err(|e| e.to_string()));
        match deflated {
            Ok(dr) if dr == rep => {}
            Ok(_) => {
                return failure(
                    EXIT_DOMAIN,
                    "deflated computation disagrees with the full matrix",
                )
            }
            Err(e) => return failure(EXIT_DOMAIN, e),
        }
    }
    let hopf = invariants::d3_to_hopf(&rep.d3);
    let verdict = invariants::overtwisted_verdict(rep.tb, &rep.d3, None);
    let text = match format {
        Format::Table => {
            let rows = [
                ("tb", rep.tb.to_string()),
                ("rot", format!("{} / {}", rep.rot_plus, rep.rot_minus)),
                ("d3", rat_str(&rep.d3)),
                ("hopf label", rat_str(&hopf)),
                ("det M", rep.det_m.to_string()),
                ("signature", rep.sigma.to_string()),
                ("euler characteristic", rep.chi.to_string()),
                ("c^2", rat_str(&rep.c_squared)),
                ("(+1)-surgeries", rep.q_plus.to_string()),
                (
                    "homology sphere",
                    if rep.is_homology_sphere { "yes" } else { "no" }.to_string(),
                ),
                ("ambient structure", verdict_str(verdict).to_string()),
            ];
            rows.iter()
                .map(|(k, v)| format!("{k:<22}{v}"))
                .collect::<Vec<_>>()
                .join("\n")
        }
        Format::Json => pretty(&json!({
            "tb": rep.tb,
            "rot": { "plus": rep.rot_plus, "minus": rep.rot_minus },
            "d3": rat_str(&rep.d3),
            "hopf": rat_str(&hopf),
            "det_m": rep.det_m.to_string(),
            "signature": rep.sigma,
            "euler_characteristic": rep.chi,
            "c_squared": rat_str(&rep.c_squared),
            "plus_surgeries": rep.q_plus,
            "homology_sphere": rep.is_homology_sphere,
            "ambient_structure": verdict_str(verdict),
        })),
    };
    Outcome {
        exit_code: EXIT_OK,
        text,
    }
}

fn count_str(c: &Count) -> String {
    match c {
        Count::Known(n) => n.to_string(),
        Count::Unknown(reason) => format!("unknown ({reason})"),
    }
}

fn count_json(c: &Count) -> serde_json::Value {
    match c {
        Count::Known(n) => json!(n),
        Count::Unknown(reason) => json!({ "unknown": reason }),
    }
}

pub fn count_outcome(p: i64, q: i64, tb: i64, format: Format) -> Outcome {
    let knot = match TorusKnotSpec::new(p, q) {
        Ok(k) => k,
        Err(e) => return failure(EXIT_INPUT, e),
    };
    let complement = match seifert::complement_of(&knot) {
        Ok(c) => c,
        Err(e) => return unknown_outcome(format, e),
    };
    let sp = match seifert::slope_of(complement, tb) {
        Ok(sp) => sp,
        Err(e) => return unknown_outcome(format, e),
    };
    let tc = match seifert::exceptional_bound(&knot, tb) {
        Ok(tc) => tc,
        Err(SeifertError::InvalidKnot(e)) => return failure(EXIT_INPUT, e),
        Err(e) => return unknown_outcome(format, e),
    };
    let standard = seifert::std_count(&knot, tb);
    let text = match format {
        Format::Table => {
            let mut lines = vec![
                format!("(p, q) = ({p}, {q}), tb = {tb}"),
                format!("{:<22}{}", "slope", rat_str(&sp.s)),
                format!("{:<22}{}", "case", tc.case),
            ];
            if let Some(red) = &tc.reduction {
                lines.push(format!(
                    "{:<22}({}; {}, {}, {})",
                    "reduction", red.e0, red.r1, red.r2, red.r3
                ));
            }
            lines.push(format!(
                "{:<22}{}",
                "tight structures",
                count_str(&tc.total)
            ));
            lines.push(format!(
                "{:<22}{}",
                "standard tight",
                count_str(&tc.std_count)
            ));
            if let Some(rots) = &standard.rot_set {
                let set = rots
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                lines.push(format!("{:<22}{{{set}}}", "standard rot set"));
            }
            lines.push(format!(
                "{:<22}{}",
                "exceptional bound",
                count_str(&tc.exceptional_upper_bound)
            ));
            lines.join("\n")
        }
        Format::Json => pretty(&json!({
            "status": "ok",
            "p": p,
            "q": q,
            "tb": tb,
            "slope": rat_str(&sp.s),
            "case": tc.case.to_string(),
            "total": count_json(&tc.total),
            "standard": count_json(&tc.std_count),
            "standard_rot_set": standard.rot_set,
            "exceptional_upper_bound": count_json(&tc.exceptional_upper_bound),
            "reduction": tc.reduction.as_ref().map(|red| json!({
                "e0": red.e0,
                "r": [rat_str(&red.r1), rat_str(&red.r2), rat_str(&red.r3)],
            })),
        })),
    };
    Outcome {
        exit_code: EXIT_OK,
        text,
    }
}

fn source_str(s: Source) -> &'static str {
    match s {
        Source::Computed => "computed",
        Source::ClosedForm => "closed-form",
        Source::Tabulated => "tabulated",
    }
}

fn params_str(p: &FamilyParams) -> String {
    match p {
        FamilyParams::Lht { m } => format!("m = {m}"),
        FamilyParams::LhtStab { k } => format!("stabilizations k = {k}"),
        FamilyParams::Pos { p, n, k, l } => format!("p = {p}, n = {n}, k = {k}, l = {l}"),
        FamilyParams::Neg { p, n, k, l, u, v } => {
            format!("p = {p}, n = {n}, k = {k}, l = {l}, u = {u}, v = {v}")
        }
        FamilyParams::Rht { m, variant } => format!(
            "m = {m}, variant {}",
            match variant {
                Variant::A => "a",
                Variant::B => "b",
            }
        ),
    }
}

fn params_json(p: &FamilyParams) -> serde_json::Value {
    match p {
        FamilyParams::Lht { m } => json!({ "m": m }),
        FamilyParams::LhtStab { k } => json!({ "stabilizations": k }),
        FamilyParams::Pos { p, n, k, l } => json!({ "p": p, "n": n, "k": k, "l": l }),
        FamilyParams::Neg { p, n, k, l, u, v } => {
            json!({ "p": p, "n": n, "k": k, "l": l, "u": u, "v": v })
        }
        FamilyParams::Rht { m, variant } => json!({
            "m": m,
            "variant": match variant { Variant::A => "a", Variant::B => "b" },
        }),
    }
}

fn require(opt: Option<i64>, flag: &str, family: &str) -> Result<i64, String> {
    opt.ok_or_else(|| format!("--{flag} is required for the {family} family"))
}

fn forbid(present: bool, flag: &str, family: &str) -> Result<(), String> {
    if present {
        return Err(format!("--{flag} does not apply to the {family} family"));
    }
    Ok(())
}

fn family_request(
    id: FamilyArg,
    p: Option<i64>,
    n: Option<i64>,
    m: Option<i64>,
    variant: Option<VariantArg>,
) -> Result<FamilyRequest, String> {
    let fam = id.label();
    if id != FamilyArg::RhtTable {
        forbid(variant.is_some(), "variant", fam)?;
    }
    match id {
        FamilyArg::Lht | FamilyArg::RhtTable => {
            forbid(p.is_some(), "p", fam)?;
            forbid(n.is_some(), "n", fam)?;
            let m = require(m, "m", fam)?;
            Ok(if id == FamilyArg::Lht {
                FamilyRequest::Lht { m }
            } else {
                FamilyRequest::Rht { m }
            })
        }
        FamilyArg::Pos | FamilyArg::Neg => {
            forbid(m.is_some(), "m", fam)?;
            let p = require(p, "p", fam)?;
            let n = require(n, "n", fam)?;
            Ok(if id == FamilyArg::Pos {
                FamilyRequest::Pos { p, n }
            } else {
                FamilyRequest::Neg { p, n }
            })
        }
    }
}

/// Writes the generated diagram of every distinct family member in the
/// record list into `dir`, returning the file count.
fn emit_diagrams(records: &[RealizationRecord], dir: &Path) -> Result<usize, Outcome> {
    fs::create_dir_all(dir).map_err(|e| {
        failure(
            EXIT_INPUT,
            format_args!("cannot create {}: {e}", dir.display()),
        )
    })?;
    let mut seen: Vec<FamilyParams> = Vec::new();
    let mut written = 0usize;
    for r in records {
        if seen.contains(&r.params) {
            continue;
        }
        seen.push(r.params);
        let built: Result<(String, DiagramFile), FamilyError> = match r.params {
            FamilyParams::Lht { m } => families::gen_lht(m).map(|d| {
                (
                    format!("lht_m{m}.json"),
                    DiagramFile::from_diagram(&d, None),
                )
            }),
            FamilyParams::Pos { p, n, k, l } => families::gen_pos(p, n, k, l).map(|(d, g)| {
                (
                    format!("pos_p{p}_n{n}_k{k}_l{l}.json"),
                    DiagramFile::from_diagram(&d, Some(&g)),
                )
            }),
            FamilyParams::Neg { p, n, k, l, u, v } => {
                families::gen_neg(p, n, k, l, u, v).map(|(d, g)| {
                    (
                        format!("neg_p{p}_n{n}_k{k}_l{l}_u{u}_v{v}.json"),
                        DiagramFile::from_diagram(&d, Some(&g)),
                    )
                })
            }
            FamilyParams::LhtStab { .. } | FamilyParams::Rht { .. } => continue,
        };
        let (name, file) = built.map_err(|e| failure(EXIT_DOMAIN, e))?;
        let path = dir.join(name);
        fs::write(&path, file.to_json() + "\n").map_err(|e| {
            failure(
                EXIT_INPUT,
                format_args!("cannot write {}: {e}", path.display()),
            )
        })?;
        written += 1;
    }
    Ok(written)
}

fn family_outcome(
    id: FamilyArg,
    p: Option<i64>,
    n: Option<i64>,
    m: Option<i64>,
    variant: Option<VariantArg>,
    emit: Option<PathBuf>,
    format: Format,
) -> Outcome {
    let req = match family_request(id, p, n, m, variant) {
        Ok(r) => r,
        Err(msg) => return failure(EXIT_INPUT, msg),
    };
    if emit.is_some() && id == FamilyArg::RhtTable {
        return failure(
            EXIT_INPUT,
            "the rht-table family is tabulated data with no diagrams to emit",
        );
    }
    let mut records = match families::enumerate(req) {
        Ok(r) => r,
        Err(FamilyError::InvalidParams(msg)) => return failure(EXIT_INPUT, msg),
        Err(e) => return failure(EXIT_DOMAIN, e),
    };
    if let Some(v) = variant {
        let want: Variant = v.into();
        records
            .retain(|r| matches!(r.params, FamilyParams::Rht { variant, .. } if variant == want));
    }
    let mut emitted = None;
    if let Some(dir) = &emit {
        match emit_diagrams(&records, dir) {
            Ok(n) => emitted = Some((n, dir.clone())),
            Err(out) => return out,
        }
    }
    let text = match format {
        Format::Table => {
            let mut lines = vec![
                format!("family {}: {} realizations", id.label(), records.len()),
                format!(
                    "{:>6} {:>6} {:>6}  {:<12}{}",
                    "tb", "rot", "d3", "source", "params"
                ),
            ];
            for r in &records {
                let flag = if r.rot == 0 {
                    "  [orientations coincide (rot = 0)]"
                } else {
                    ""
                };
                lines.push(format!(
                    "{:>6} {:>6} {:>6}  {:<12}{}{}",
                    r.tb,
                    r.rot,
                    rat_str(&r.d3),
                    source_str(r.source),
                    params_str(&r.params),
                    flag,
                ));
            }
            if let Some((count, dir)) = &emitted {
                lines.push(format!(
                    "emitted {count} diagram files to {}",
                    dir.display()
                ));
            }
            lines.join("\n")
        }
        Format::Json => pretty(&json!({
            "family": id.label(),
            "count": records.len(),
            "records": records.iter().map(|r| json!({
                "tb": r.tb,
                "rot": r.rot,
                "d3": rat_str(&r.d3),
                "orientation": r.orientation,
                "source": source_str(r.source),
                "params": params_json(&r.params),
            })).collect::<Vec<_>>(),
            "emitted": emitted.as_ref().map(|(count, dir)| json!({
                "count": count,
                "dir": dir.display().to_string(),
            })),
        })),
    };
    Outcome {
        exit_code: EXIT_OK,
        text,
    }
}

fn verify_outcome() -> Outcome {
    let outcomes = verify::run_all();
    let all_passed = outcomes.iter().all(|o| o.passed);
    Outcome {
        exit_code: if all_passed { EXIT_OK } else { EXIT_VERIFY },
        text: verify::render(&outcomes),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(Cli::try_parse_from(args).expect("arguments parse"))
    }

    fn row(key: &str, value: impl std::fmt::Display) -> String {
        format!("{key:<22}{value}")
    }

    #[test]
    fn count_renders_the_reduction_ladder() {
        let out = run_args(&["legctl", "count", "--p", "2", "--q", "-3", "--tb", "-9"]);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains(&row("slope", "2/3")));
        assert!(out.text.contains(&row("case", "DLZ2")));
        assert!(out.text.contains(&row("reduction", "(-1; 1/2, 2/3, 2/7)")));
        assert!(out.text.contains(&row("tight structures", 7)));
        assert!(out.text.contains(&row("standard tight", 5)));
        assert!(out
            .text
            .contains(&row("standard rot set", "{-4, -2, 0, 2, 4}")));
        assert!(out.text.contains(&row("exceptional bound", 2)));
    }

    #[test]
    fn count_json_payload() {
        let out = run_args(&[
            "legctl", "count", "--p", "2", "--q", "-3", "--tb", "-5", "--format", "json",
        ]);
        assert_eq!(out.exit_code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["case"], "DLZ1");
        assert_eq!(v["slope"], "2");
        assert_eq!(v["total"], 2);
        assert_eq!(v["exceptional_upper_bound"], 2);
        assert_eq!(v["reduction"], serde_json::Value::Null);
    }

    #[test]
    fn count_unknowns_exit_zero() {
        let out = run_args(&["legctl", "count", "--p", "2", "--q", "-3", "--tb", "-6"]);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.starts_with("unknown: infinite slope"));
        let out = run_args(&["legctl", "count", "--p", "5", "--q", "7", "--tb", "3"]);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.starts_with("unknown:"));
    }

    #[test]
    fn count_rejects_bad_knots() {
        let out = run_args(&["legctl", "count", "--p", "4", "--q", "6", "--tb", "0"]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        assert!(out.text.contains("coprime"));
    }

    #[test]
    fn family_table_lists_records() {
        let out = run_args(&["legctl", "family", "pos", "--p", "2", "--n", "1"]);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains("4 realizations"));
        assert!(out.text.contains("computed"));
        let out = run_args(&[
            "legctl",
            "family",
            "rht-table",
            "--m",
            "2",
            "--variant",
            "b",
        ]);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains("2 realizations"));
        assert!(out.text.contains("tabulated"));
        // rot = 0 merges the orientations into a single record
        let out = run_args(&["legctl", "family", "lht", "--m", "6"]);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains("1 realizations"));
        assert!(out.text.contains("[orientations coincide (rot = 0)]"));
    }

    #[test]
    fn family_usage_errors() {
        let out = run_args(&["legctl", "family", "lht"]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        let out = run_args(&["legctl", "family", "lht", "--m", "-1"]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        let out = run_args(&["legctl", "family", "lht", "--m", "2", "--p", "3"]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        let out = run_args(&[
            "legctl",
            "family",
            "pos",
            "--p",
            "2",
            "--n",
            "1",
            "--variant",
            "a",
        ]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        let out = run_args(&[
            "legctl",
            "family",
            "rht-table",
            "--m",
            "1",
            "--emit",
            "/tmp/x",
        ]);
        assert_eq!(out.exit_code, EXIT_INPUT);
    }

    #[test]
    fn family_emit_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let out = run_args(&[
            "legctl",
            "family",
            "pos",
            "--p",
            "2",
            "--n",
            "1",
            "--emit",
            dir.path().to_str().unwrap(),
        ]);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains("emitted 2 diagram files"));
        for (k, l) in [(0, 1), (1, 0)] {
            let path = dir.path().join(format!("pos_p2_n1_k{k}_l{l}.json"));
            let text = fs::read_to_string(&path).unwrap();
            let (d, groups) = DiagramFile::parse(&text).unwrap().validate().unwrap();
            assert!(groups.is_some());
            assert_eq!(invariants::report(&d).unwrap().tb, 7);
        }
    }

    #[test]
    fn invariants_of_a_diagram_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("trefoil.json");
        let json = r#"{
            "components": [
                { "name": "L1", "tb": -1, "rot": 0, "coeff": -1 },
                { "name": "L2", "tb": -1, "rot": 0, "coeff": -1 },
                { "name": "L3", "tb": -2, "rot": 1, "coeff": 1 },
                { "name": "L4", "tb": -1, "rot": 0, "coeff": -1 }
            ],
            "linking": [
                [0, 1, 0, 0],
                [1, 0, 1, 0],
                [0, 1, 0, 1],
                [0, 0, 1, 0]
            ],
            "distinguished": { "tb0": -2, "rot0": 1, "lk": [0, 1, -2, 1] }
        }"#;
        fs::write(&path, json).unwrap();
        let out = run_args(&["legctl", "invariants", path.to_str().unwrap()]);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains(&row("tb", -5)));
        assert!(out.text.contains(&row("rot", "6 / -6")));
        assert!(out.text.contains(&row("d3", "3/2")));
        assert!(out.text.contains(&row("ambient structure", "overtwisted")));
        let out = run_args(&[
            "legctl",
            "invariants",
            path.to_str().unwrap(),
            "--format",
            "json",
        ]);
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["tb"], -5);
        assert_eq!(v["d3"], "3/2");
        assert_eq!(v["det_m"], "-1");
        assert_eq!(v["homology_sphere"], true);
    }

    #[test]
    fn invariants_error_paths() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        fs::write(&path, "{ not json").unwrap();
        let out = run_args(&["legctl", "invariants", path.to_str().unwrap()]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        // asymmetric linking is caught during validation
        let asym = r#"{
            "components": [
                { "name": "a", "tb": -1, "rot": 0, "coeff": -1 },
                { "name": "b", "tb": -1, "rot": 0, "coeff": -1 }
            ],
            "linking": [[0, 1], [2, 0]],
            "distinguished": { "tb0": -1, "rot0": 0, "lk": [0, 0] }
        }"#;
        fs::write(&path, asym).unwrap();
        let out = run_args(&["legctl", "invariants", path.to_str().unwrap()]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        assert!(out.text.contains("linking matrix not symmetric"));
        // a single (-1)-surgery unknot gives det -2: no homology sphere
        let lens = r#"{
            "components": [{ "name": "u", "tb": -1, "rot": 0, "coeff": -1 }],
            "linking": [[0]],
            "distinguished": { "tb0": -1, "rot0": 0, "lk": [0] }
        }"#;
        fs::write(&path, lens).unwrap();
        let out = run_args(&["legctl", "invariants", path.to_str().unwrap()]);
        assert_eq!(out.exit_code, EXIT_DOMAIN);
        assert!(out.text.contains("not a homology sphere"));
        let out = run_args(&["legctl", "invariants", "/nonexistent/x.json"]);
        assert_eq!(out.exit_code, EXIT_INPUT);
    }
}
