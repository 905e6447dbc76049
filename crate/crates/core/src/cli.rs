//! Command-line front end. Exit codes: 0 when everything verifies, 1 when a
//! verification fails, 2 for invalid surgery parameters.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::charvar::CharvarReport;
use crate::gens::{
    check_termination_cases, default_bound, exceptional_monomials, generating_set, normalize_params,
    Normalization,
};
use crate::monomial::{Monomial, ParamError};
use crate::twist::{check_twist_lemmas, LemmaReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug, Clone)]
#[command(name = "skein", version, about = "Skein module generating sets for M(alpha, beta, gamma)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Compute a generating set for S(M(alpha, beta, gamma)).
    Gens(ParamArgs),
    /// Check the closed-form twist coefficients, mirror symmetry and additivity.
    Lemmas {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        max_twist: u32,
    },
    /// Check that every monomial outside the candidate region has a
    /// strictly decreasing rewrite.
    Termination {
        #[command(flatten)]
        params: ParamArgs,
        /// Largest exponent checked; defaults to 4 max(a, b, c).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        bound: Option<u32>,
    },
    /// Character table of the binary icosahedral group and its trace relations.
    Charvar,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct ParamArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: i64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid parameters: {0}")]
    Params(#[from] ParamError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Params(_) => EXIT_INVALID,
        }
    }
}

/// A rendered report and whether everything in it verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub ok: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.ok {
            EXIT_OK
        } else {
            EXIT_FAILED
        }
    }
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn join(ms: &[Monomial]) -> String {
    ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Gens(p) => gens(p, cli.format),
        Command::Lemmas { max_twist } => Ok(lemmas(*max_twist, cli.format)),
        Command::Termination { params, bound } => termination(params, *bound, cli.format),
        Command::Charvar => Ok(charvar(cli.format)),
    }
}

fn header(out: &mut String, norm: &Normalization) {
    let [alpha, beta, gamma] = norm.input;
    let _ = writeln!(out, "M({alpha}, {beta}, {gamma})");
    if !norm.moves.is_empty() {
        let moves: Vec<String> = norm.moves.iter().map(|m| m.to_string()).collect();
        let _ = writeln!(out, "normalized to {} by {}", norm.canonical.params(), moves.join(", then "));
    }
}

fn gens(p: &ParamArgs, format: Format) -> Result<Outcome, CliError> {
    let norm = normalize_params(p.alpha, p.beta, p.gamma)?;
    let mut report = generating_set(&norm.canonical);
    report.params = norm.input;
    if format == Format::Json {
        return Ok(Outcome {
            report: render_json(&report.to_json()),
            ok: true,
        });
    }
    let mut out = String::new();
    header(&mut out, &norm);
    let gens = report.generators_by_exponent();
    let _ = writeln!(out, "candidates: {}", report.candidates.len());
    let extra = exceptional_monomials(&norm.canonical);
    if !extra.is_empty() {
        let _ = writeln!(out, "kept outside the grid (no decreasing rewrite): {}", join(&extra));
    }
    let _ = writeln!(out, "generators ({}): {}", gens.len(), join(&gens));
    let _ = writeln!(out, "in increasing order: {}", join(&report.generators));
    if !report.refinement_unverified.is_empty() {
        let _ = writeln!(
            out,
            "flagged by the same-sign refinement but not rewritable: {}",
            join(&report.refinement_unverified)
        );
    }
    let _ = writeln!(out, "rewrites:");
    for (m, w) in &report.rewrites {
        let _ = writeln!(out, "  {m}: {}, lead {}, right side top {}", w.relation, w.lead_coeff, w.right);
    }
    Ok(Outcome { report: out, ok: true })
}

fn lemmas(max_twist: u32, format: Format) -> Outcome {
    let report = check_twist_lemmas(max_twist, max_twist);
    let ok = report.ok();
    let text = match format {
        Format::Json => render_json(&lemma_json(&report)),
        Format::Text => lemma_text(&report),
    };
    Outcome { report: text, ok }
}

fn lemma_json(r: &LemmaReport) -> Value {
    let failures: Vec<Value> = r
        .failed_checks()
        .map(|c| {
            json!({
                "family": c.family, "m": c.m, "n": c.n,
                "expected": c.expected.to_string(), "actual": c.actual.to_string(),
            })
        })
        .collect();
    let mirror: Vec<Value> = r
        .mirror_failures
        .iter()
        .map(|(f, m, n)| json!({ "family": f, "m": m, "n": n }))
        .collect();
    json!({
        "max_twist": r.max_twist,
        "additivity_bound": r.additivity_bound,
        "coefficient_checks": r.checks.len(),
        "coefficient_failures": failures,
        "mirror_checks": r.mirror_checked,
        "mirror_failures": mirror,
        "additivity_checks": r.additivity_checked,
        "additivity_failures": r.additivity_failures,
        "ok": r.ok(),
    })
}

fn lemma_text(r: &LemmaReport) -> String {
    let mut out = String::new();
    let families = ["f+", "f-", "h+", "h-", "f++", "f--", "g+-", "g-+"];
    for family in families {
        let all: Vec<_> = r.checks.iter().filter(|c| c.family == family).collect();
        let bad = all.iter().filter(|c| !c.ok()).count();
        let _ = writeln!(
            out,
            "{} {family:<4} extreme coefficients, {} expansions",
            status(bad == 0),
            all.len()
        );
    }
    let _ = writeln!(
        out,
        "{} mirror symmetry, {} expansions",
        status(r.mirror_failures.is_empty()),
        r.mirror_checked
    );
    let _ = writeln!(
        out,
        "{} additivity for |m|, |n| <= {}, {} pairs",
        status(r.additivity_failures.is_empty()),
        r.additivity_bound,
        r.additivity_checked
    );
    for c in r.failed_checks() {
        let _ = writeln!(out, "  {} ({}, {}): expected {}, got {}", c.family, c.m, c.n, c.expected, c.actual);
    }
    out
}

fn termination(p: &ParamArgs, bound: Option<u32>, format: Format) -> Result<Outcome, CliError> {
    let norm = normalize_params(p.alpha, p.beta, p.gamma)?;
    let cp = norm.canonical;
    let report = check_termination_cases(&cp, bound.unwrap_or_else(|| default_bound(&cp)));
    let ok = report.ok();
    if format == Format::Json {
        return Ok(Outcome {
            report: render_json(&report.to_json()),
            ok,
        });
    }
    let mut out = String::new();
    header(&mut out, &norm);
    let _ = writeln!(
        out,
        "{} {} monomials outside the candidate region up to exponent {}, {} violations",
        status(ok),
        report.checked,
        report.bound,
        report.violations.len()
    );
    for v in &report.violations {
        let _ = write!(out, "  case {} at {}: {}: {}", v.case, v.monomial, v.relation, v.reason);
        match &v.fallback {
            Some(w) => {
                let _ = writeln!(out, "; {} reduces it to {}", w.relation, w.right);
            }
            None => {
                let _ = writeln!(out, "; no relation reduces it");
            }
        }
    }
    Ok(Outcome { report: out, ok })
}

fn charvar(format: Format) -> Outcome {
    let report = CharvarReport::compute();
    let ok = report.ok();
    let text = match format {
        Format::Json => render_json(&report.to_json()),
        Format::Text => report.to_string(),
    };
    Outcome { report: text, ok }
}
