//! The `fusionkit` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use super::catalog::{default_catalog, resolve_group, run_catalog, CatalogRun};
use super::format::ResolvedGroup;
use crate::caps::{self, Caps};
use crate::centralizers::{c_s_of_subsystem, z_of_fusion, CsStrategy};
use crate::error::{Error, Result};
use crate::fusion::{alperin_family, fusion_system, FusionSystem};
use crate::permcore::{center, intersection, PermGroup, Permutation};
use crate::structure::{core_p, core_p_prime, o_upper_p};
use crate::theorems::{
    check_corollary, check_lemma_1, check_theorem_a, check_theorem_b, paper_counterexample,
    proof_trace_theorem_b, CheckKind, Verdict, VerificationReport,
};

#[derive(Parser, Debug)]
#[command(
    name = "fusionkit",
    version,
    about = "Fusion systems of small permutation groups"
)]
struct Cli {
    /// Write the machine-readable report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check one statement for a group (and subgroup).
    Verify {
        statement: Statement,
        #[command(flatten)]
        target: Target,
    },
    /// Trace the reduction argument for one element t of S.
    Trace {
        #[command(flatten)]
        target: Target,
        /// Cycle notation, e.g. "(3 4 5)".
        #[arg(long)]
        element: String,
    },
    /// Reproduce the non-normal example.
    Counterexample,
    /// Print computed subgroups.
    Compute {
        what: Quantity,
        #[command(flatten)]
        target: Target,
    },
    /// The built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Run every entry whose id or statement contains FILTER.
    Run {
        #[arg(long)]
        filter: Option<String>,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// List the entries.
    List,
}

#[derive(Args, Debug)]
struct Target {
    /// A group file, a built-in name (s3, s4, sl23, s3xs3, ...), or a
    /// family such as symmetric(5).
    #[arg(long)]
    group: String,
    /// A named subgroup of the group.
    #[arg(long)]
    subgroup: Option<String>,
    #[arg(long)]
    prime: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Statement {
    TheoremA,
    TheoremB,
    Corollary,
    Lemma1,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Quantity {
    Zf,
    Cse,
    FusionReport,
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn exit_for_error(e: &Error) -> i32 {
    match e {
        Error::Inconsistency(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn exit_for_verdict(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
        Verdict::HypothesisViolated => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code. Output goes to `out`, errors to `err`.
pub fn run_cli_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match Caps::from_env() {
        Ok(c) => caps::set_global(c),
        Err(e) => {
            let _ = writeln!(err, "error: FUSIONKIT_CAPS: {e}");
            return EXIT_USAGE;
        }
    }
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_for_error(&e)
        }
    }
}

pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_cli_with(
        args,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

fn io_err(path: &Path, e: impl ToString) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

fn write_json(path: Option<&Path>, value: &serde_json::Value) -> Result<()> {
    if let Some(path) = path {
        let mut text = serde_json::to_string_pretty(value).map_err(|e| io_err(path, e))?;
        text.push('\n');
        std::fs::write(path, text).map_err(|e| io_err(path, e))?;
    }
    Ok(())
}

fn out_err(e: std::io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        message: e.to_string(),
    }
}

struct Loaded {
    resolved: ResolvedGroup,
    subgroup: Option<PermGroup>,
    prime: u64,
}

impl Loaded {
    fn new(target: &Target) -> Result<Loaded> {
        let resolved = resolve_group(&target.group)?;
        let subgroup = match &target.subgroup {
            Some(name) => Some(resolved.subgroup(name)?.clone()),
            None => None,
        };
        Ok(Loaded {
            resolved,
            subgroup,
            prime: target.prime,
        })
    }

    fn g(&self) -> &PermGroup {
        &self.resolved.group
    }

    fn h(&self, what: &str) -> Result<&PermGroup> {
        self.subgroup
            .as_ref()
            .ok_or_else(|| Error::contract(format!("{what} needs --subgroup NAME")))
    }

    fn subject(&self, target: &Target) -> String {
        match &target.subgroup {
            Some(h) => format!("{}/{h}/p={}", self.resolved.spec.name, self.prime),
            None => format!("{}/p={}", self.resolved.spec.name, self.prime),
        }
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let json_path = cli.json.as_deref();
    match cli.command {
        Command::Verify { statement, target } => {
            let l = Loaded::new(&target)?;
            let mut report = match statement {
                Statement::TheoremA => check_theorem_a(l.g(), l.prime)?,
                Statement::TheoremB => check_theorem_b(l.g(), l.h("theorem-b")?, l.prime)?,
                Statement::Corollary => check_corollary(l.g(), l.h("corollary")?, l.prime)?,
                Statement::Lemma1 => check_lemma_1(l.g(), l.h("lemma1")?, l.prime)?,
            };
            report.subject = l.subject(&target);
            finish_report(&report, json_path, out)
        }
        Command::Trace { target, element } => {
            let l = Loaded::new(&target)?;
            let t = Permutation::parse_cycles(l.g().degree(), &element)?;
            let mut report = proof_trace_theorem_b(l.g(), l.h("trace")?, l.prime, &t)?;
            report.subject = format!("{}, t = {t}", l.subject(&target));
            finish_report(&report, json_path, out)
        }
        Command::Counterexample => {
            let report = paper_counterexample()?;
            finish_report(&report, json_path, out)
        }
        Command::Compute { what, target } => {
            let l = Loaded::new(&target)?;
            let value = compute(what, &l, out)?;
            write_json(json_path, &value)?;
            Ok(EXIT_PASS)
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            for e in default_catalog() {
                let ids: Vec<&str> = e.expected.keys().map(|s| s.as_str()).collect();
                writeln!(out, "{:<20} {}", e.id, ids.join(", ")).map_err(out_err)?;
            }
            Ok(EXIT_PASS)
        }
        Command::Catalog {
            action: CatalogAction::Run { filter, jobs },
        } => {
            let run = run_catalog(&default_catalog(), filter.as_deref(), jobs)?;
            print_catalog(&run, out)?;
            write_json(json_path, &run.to_json())?;
            Ok(if run.all_match() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            })
        }
    }
}

fn finish_report(
    report: &VerificationReport,
    json_path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    print_report(report, out).map_err(out_err)?;
    write_json(
        json_path,
        &serde_json::to_value(report).expect("reports serialize"),
    )?;
    Ok(exit_for_verdict(report.verdict))
}

fn describe(elements: &[Permutation]) -> String {
    const SHOWN: usize = 12;
    let list: Vec<String> = elements.iter().take(SHOWN).map(|x| x.to_string()).collect();
    let more = if elements.len() > SHOWN { ", ..." } else { "" };
    format!("order {}: {{{}{more}}}", elements.len(), list.join(", "))
}

pub fn print_report(r: &VerificationReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{} [{}]: {}", r.statement_id, r.subject, r.verdict)?;
    for c in &r.checks {
        let mark = match (c.passed, c.kind) {
            (true, _) => "ok",
            (false, CheckKind::Info) => "no",
            (false, _) => "FAILED",
        };
        let kind = match c.kind {
            CheckKind::Hypothesis => " (hypothesis)",
            CheckKind::Info => " (info)",
            _ => "",
        };
        let detail = if c.detail.is_empty() {
            String::new()
        } else {
            format!(" [{}]", c.detail)
        };
        writeln!(out, "  {mark:<6} {}{kind}{detail}", c.name)?;
    }
    for (name, elems) in &r.computed {
        writeln!(out, "  {name} = {}", describe(elems))?;
    }
    for w in &r.witnesses {
        writeln!(out, "  witness: {w}")?;
    }
    for n in &r.notes {
        writeln!(out, "  note: {n}")?;
    }
    Ok(())
}

fn print_catalog(run: &CatalogRun, out: &mut dyn Write) -> Result<()> {
    for r in &run.results {
        let mark = if r.matches { "ok" } else { "MISMATCH" };
        writeln!(
            out,
            "{mark:<8} {:<14} {:<32} {} (expected {}) {} ms",
            r.statement_id.as_str(),
            r.report.subject,
            r.report.verdict,
            r.expected,
            r.report.timing_ms
        )
        .map_err(out_err)?;
    }
    let s = &run.summary;
    writeln!(
        out,
        "{} reports, {} as expected, {} mismatched",
        s.reports, s.matched, s.mismatched
    )
    .map_err(out_err)?;
    Ok(())
}

fn elements(g: &PermGroup) -> Result<Vec<Permutation>> {
    Ok(g.elements()?.to_vec())
}

fn compute(what: Quantity, l: &Loaded, out: &mut dyn Write) -> Result<serde_json::Value> {
    let f = fusion_system(l.g(), l.prime)?;
    let mut computed: Vec<(&str, PermGroup)> = vec![("S", f.sylow().clone())];
    let mut extra = json!({});
    match what {
        Quantity::Zf => {
            computed.push(("Z(F)", z_of_fusion(&f)?));
        }
        Quantity::Cse => {
            let h = l.h("cse")?;
            let t = intersection(f.sylow(), h)?;
            let e = FusionSystem::with_sylow(h, l.prime, &t).map_err(|_| {
                Error::contract("S ∩ H is not a Sylow subgroup of H, so E = F_T(H) is undefined")
            })?;
            computed.push(("T", t));
            computed.push(("C_S(E)", c_s_of_subsystem(&f, &e, CsStrategy::Cyclic)?));
        }
        Quantity::FusionReport => {
            let g = l.g();
            computed.push(("Z(G)", center(g)?));
            computed.push(("Z(F)", z_of_fusion(&f)?));
            computed.push(("O_p(G)", core_p(g, l.prime)?));
            computed.push(("O_p'(G)", core_p_prime(g, l.prime)?));
            computed.push(("O^p(G)", o_upper_p(g, l.prime)?));
            let family = alperin_family(&f)?;
            writeln!(out, "G of order {}, p = {}", g.order(), l.prime).map_err(out_err)?;
            writeln!(
                out,
                "centric radical subgroups (one fully normalized per class):"
            )
            .map_err(out_err)?;
            let mut members = Vec::new();
            for m in &family {
                writeln!(
                    out,
                    "  {:?}: |Aut_F(P)| = {}",
                    m.subgroup,
                    m.automizer.order()
                )
                .map_err(out_err)?;
                members.push(json!({
                    "subgroup": elements(&m.subgroup)?,
                    "automizer_order": m.automizer.order(),
                }));
            }
            extra = json!({ "alperin_family": members });
        }
    }
    let mut map = serde_json::Map::new();
    for (name, g) in &computed {
        writeln!(out, "{name} = {}", describe(&elements(g)?)).map_err(out_err)?;
        map.insert(name.to_string(), json!(elements(g)?));
    }
    let mut value = json!({ "command": format!("{what:?}").to_lowercase(), "computed": map });
    if let (Some(obj), Some(ext)) = (value.as_object_mut(), extra.as_object()) {
        obj.extend(ext.clone());
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["fusionkit"];
        full.extend_from_slice(args);
        let code = run_cli_with(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["counterexample"]).0, 0);
        assert_eq!(
            run(&[
                "verify",
                "theorem-b",
                "--group",
                "s3xs3",
                "--subgroup",
                "G1",
                "--prime",
                "3"
            ])
            .0,
            0
        );
        assert_eq!(
            run(&["verify", "theorem-a", "--group", "s3", "--prime", "2"]).0,
            2
        );
        assert_eq!(
            run(&["verify", "theorem-a", "--group", "s3", "--prime", "4"]).0,
            2
        );
        assert_eq!(
            run(&["verify", "theorem-b", "--group", "s3", "--prime", "3"]).0,
            2
        );
        assert_eq!(run(&["bogus"]).0, 2);
        let (code, _, err) = run(&[
            "verify",
            "theorem-b",
            "--group",
            "s3xs3",
            "--subgroup",
            "X",
            "--prime",
            "3",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("no subgroup named"), "{err}");
    }

    #[test]
    fn trace_accepts_cycle_notation() {
        let (code, out, _) = run(&[
            "trace",
            "--group",
            "s3xs3",
            "--subgroup",
            "G1",
            "--prime",
            "3",
            "--element",
            "(3 4 5)",
        ]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("proof_trace"));
        let (code, _, _) = run(&[
            "trace",
            "--group",
            "s3xs3",
            "--subgroup",
            "G1",
            "--prime",
            "3",
            "--element",
            "(0 1)",
        ]);
        assert_eq!(code, 2);
    }

    #[test]
    fn compute_writes_json() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("zf.json");
        let p = path.to_str().unwrap();
        let (code, out, _) = run(&[
            "compute", "zf", "--group", "sl23", "--prime", "2", "--json", p,
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("Z(F) = order 2"), "{out}");
        let v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(v["computed"]["Z(F)"].as_array().unwrap().len(), 2);

        let (code, out, _) = run(&[
            "compute",
            "cse",
            "--group",
            "s3xs3",
            "--subgroup",
            "H",
            "--prime",
            "3",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("C_S(E) = order 3"), "{out}");
        let (code, out, _) = run(&["compute", "fusion-report", "--group", "s4", "--prime", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("O_p(G) = order 4"), "{out}");
    }
}
