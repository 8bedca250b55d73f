//! Built-in groups and the verification catalog.

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use super::constructors::{direct_product, sl23_q8_generators, Family};
use super::format::{load_group, GroupSpec, ResolvedGroup};
use crate::centralizers::{c_s_of_subsystem, CsStrategy};
use crate::error::{Error, Result};
use crate::fusion::{fusion_system, FusionSystem};
use crate::permcore::{intersection, PermGroup, Permutation};
use crate::structure::{check_prime, is_p_power};
use crate::theorems::{
    check_corollary, check_lemma_1, check_theorem_a, check_theorem_b, example_groups,
    paper_counterexample, proof_trace_theorem_b, StatementId, Verdict, VerificationReport,
};

/// Names accepted by [`named_group`].
pub const GROUP_NAMES: [&str; 12] = [
    "s3", "s4", "a4", "s5", "sl23", "s3xs3", "d8", "q8", "c3xc3", "a5", "s6", "c2xs4",
];

fn perm(degree: usize, text: &str) -> Permutation {
    Permutation::parse_cycles(degree, text).expect("built-in cycles are valid")
}

fn family(expr: &str) -> PermGroup {
    Family::parse(expr)
        .and_then(Family::build)
        .expect("built-in family")
}

/// A built-in group with its named subgroups. Every group also names
/// itself `G`.
pub fn named_group(name: &str) -> Result<ResolvedGroup> {
    let (g, subgroups): (PermGroup, Vec<(&str, PermGroup)>) = match name {
        "s3" => (
            family("symmetric(3)"),
            vec![("A3", family("alternating(3)"))],
        ),
        "s4" => {
            let v4 = PermGroup::new(4, vec![perm(4, "(0 1)(2 3)"), perm(4, "(0 2)(1 3)")])?;
            (
                family("symmetric(4)"),
                vec![("A4", family("alternating(4)")), ("V4", v4)],
            )
        }
        "a4" => {
            let v4 = PermGroup::new(4, vec![perm(4, "(0 1)(2 3)"), perm(4, "(0 2)(1 3)")])?;
            (family("alternating(4)"), vec![("V4", v4)])
        }
        "s5" => (
            family("symmetric(5)"),
            vec![("A5", family("alternating(5)"))],
        ),
        "a5" => (family("alternating(5)"), vec![]),
        "s6" => (
            family("symmetric(6)"),
            vec![("A6", family("alternating(6)"))],
        ),
        "c2xs4" => {
            let c2 = family("cyclic(2)");
            let s4 = family("symmetric(4)");
            let a4 = family("alternating(4)");
            (
                direct_product(&c2, &s4),
                vec![
                    ("C2", direct_product(&c2, &PermGroup::trivial(4))),
                    ("S4", direct_product(&PermGroup::trivial(2), &s4)),
                    ("A4", direct_product(&PermGroup::trivial(2), &a4)),
                ],
            )
        }
        "sl23" => (
            family("sl23"),
            vec![("Q8", PermGroup::new(8, sl23_q8_generators())?)],
        ),
        "s3xs3" => {
            let x = example_groups();
            let s = direct_product(&family("cyclic(3)"), &family("cyclic(3)"));
            (
                x.g,
                vec![
                    ("G1", x.g1),
                    ("G2", x.g2),
                    ("S", s),
                    ("S1", x.s1),
                    ("S2", x.s2),
                    ("R", x.r),
                    ("H", x.h),
                ],
            )
        }
        "d8" => (family("dihedral(4)"), vec![]),
        "q8" => (PermGroup::new(8, sl23_q8_generators())?, vec![]),
        "c3xc3" => (family("elementary_abelian(3,2)"), vec![]),
        other => {
            return Err(Error::UnknownFamily(format!(
                "no built-in group named {other:?}"
            )))
        }
    };
    let mut named: Vec<(&str, &PermGroup)> = vec![("G", &g)];
    named.extend(subgroups.iter().map(|(n, h)| (*n, h)));
    GroupSpec::from_group(name, &g, &named).resolve()
}

/// A file path, a built-in name, or a family expression such as
/// `symmetric(5)`.
pub fn resolve_group(arg: &str) -> Result<ResolvedGroup> {
    if Path::new(arg).is_file() {
        return load_group(arg);
    }
    if GROUP_NAMES.contains(&arg) {
        return named_group(arg);
    }
    if arg.ends_with(".json") {
        return load_group(arg);
    }
    let g = Family::parse(arg)?.build()?;
    GroupSpec::from_group(arg, &g, &[("G", &g)]).resolve()
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub group: GroupSpec,
    pub subgroup_name: Option<String>,
    pub prime: u64,
    pub expected: BTreeMap<StatementId, Verdict>,
}

impl CatalogEntry {
    pub fn new(
        group: &str,
        subgroup: Option<&str>,
        prime: u64,
        expected: &[(StatementId, Verdict)],
    ) -> Result<CatalogEntry> {
        check_prime(prime)?;
        let resolved = named_group(group)?;
        if let Some(h) = subgroup {
            resolved.subgroup(h)?;
        }
        let id = match subgroup {
            Some(h) => format!("{group}/{h}/p={prime}"),
            None => format!("{group}/p={prime}"),
        };
        Ok(CatalogEntry {
            id,
            group: resolved.spec,
            subgroup_name: subgroup.map(str::to_string),
            prime,
            expected: expected.iter().copied().collect(),
        })
    }
}

/// The shipped catalog, in a fixed order.
pub fn default_catalog() -> Vec<CatalogEntry> {
    use StatementId::*;
    use Verdict::*;
    let center = |g: &str, p: u64, v: Verdict| CatalogEntry::new(g, None, p, &[(TheoremA, v)]);
    let normal = |g: &str, h: &str, p: u64| {
        CatalogEntry::new(
            g,
            Some(h),
            p,
            &[
                (TheoremB, Pass),
                (Corollary, Pass),
                (Lemma1, Pass),
                (ProofTrace, Pass),
            ],
        )
    };
    let entries = vec![
        center("s3", 3, Pass),
        center("s4", 2, Pass),
        center("sl23", 2, Pass),
        center("a4", 2, Pass),
        center("s5", 2, Pass),
        center("s5", 3, Pass),
        center("s5", 5, Pass),
        center("s3xs3", 3, Pass),
        center("d8", 2, Pass),
        center("q8", 2, Pass),
        center("c3xc3", 3, Pass),
        center("a5", 2, Pass),
        center("a5", 5, Pass),
        center("s6", 2, Pass),
        center("s6", 3, Pass),
        center("c2xs4", 2, Pass),
        center("s3", 2, HypothesisViolated),
        center("s4", 3, HypothesisViolated),
        center("s3xs3", 2, HypothesisViolated),
        center("sl23", 3, HypothesisViolated),
        normal("s3xs3", "G1", 3),
        normal("s3xs3", "S", 3),
        normal("s4", "A4", 2),
        normal("sl23", "Q8", 2),
        normal("s4", "V4", 2),
        normal("a4", "V4", 2),
        normal("s3xs3", "G", 3),
        normal("sl23", "G", 2),
        normal("s5", "A5", 2),
        normal("s5", "A5", 3),
        normal("s6", "A6", 2),
        normal("s6", "A6", 3),
        normal("c2xs4", "S4", 2),
        normal("c2xs4", "A4", 2),
        CatalogEntry::new(
            "s3xs3",
            Some("H"),
            3,
            &[
                (TheoremB, HypothesisViolated),
                (Lemma1, HypothesisViolated),
                (Counterexample, Pass),
            ],
        ),
        CatalogEntry::new(
            "s3xs3",
            Some("G1"),
            2,
            &[(TheoremB, HypothesisViolated), (Lemma1, Pass)],
        ),
        CatalogEntry::new(
            "s4",
            Some("A4"),
            3,
            &[(TheoremB, HypothesisViolated), (Lemma1, Pass)],
        ),
    ];
    entries
        .into_iter()
        .collect::<Result<_>>()
        .expect("the built-in catalog is well formed")
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogResult {
    pub entry: String,
    pub statement_id: StatementId,
    pub expected: Verdict,
    pub matches: bool,
    pub report: VerificationReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogSummary {
    pub reports: usize,
    pub matched: usize,
    pub mismatched: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogRun {
    pub results: Vec<CatalogResult>,
    pub summary: CatalogSummary,
}

impl CatalogRun {
    pub fn all_match(&self) -> bool {
        self.summary.mismatched == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("catalog runs always serialize")
    }

    /// The JSON without any `timing_ms` field.
    pub fn comparison_payload(&self) -> serde_json::Value {
        strip_timing(self.to_json())
    }
}

/// Removes every `timing_ms` key, recursively.
pub fn strip_timing(value: serde_json::Value) -> serde_json::Value {
    use serde_json::Value;
    match value {
        Value::Object(map) => Value::Object(
            map.into_iter()
                .filter(|(k, _)| k != "timing_ms")
                .map(|(k, v)| (k, strip_timing(v)))
                .collect(),
        ),
        Value::Array(items) => Value::Array(items.into_iter().map(strip_timing).collect()),
        other => other,
    }
}

/// Elements to trace: all of `C_S(E)`, plus the smallest element of `S`
/// of p-power order outside it.
fn trace_elements(f: &FusionSystem, h: &PermGroup) -> Result<Vec<Permutation>> {
    let t = intersection(f.sylow(), h)?;
    let e = FusionSystem::with_sylow(h, f.prime(), &t)?;
    let cse = c_s_of_subsystem(f, &e, CsStrategy::Cyclic)?;
    let mut out = cse.elements()?.to_vec();
    let outside = f
        .sylow()
        .elements()?
        .iter()
        .find(|x| !cse.has(x) && is_p_power(x.order(), f.prime()))
        .cloned();
    out.extend(outside);
    Ok(out)
}

fn run_job(entry: &CatalogEntry, id: StatementId) -> Result<Vec<VerificationReport>> {
    let resolved = entry.group.resolve()?;
    let g = &resolved.group;
    let p = entry.prime;
    let h = || -> Result<&PermGroup> {
        let name = entry.subgroup_name.as_deref().ok_or_else(|| {
            Error::contract(format!(
                "catalog entry {} has no subgroup for {id}",
                entry.id
            ))
        })?;
        resolved.subgroup(name)
    };
    let mut reports = match id {
        StatementId::TheoremA => vec![check_theorem_a(g, p)?],
        StatementId::TheoremB => vec![check_theorem_b(g, h()?, p)?],
        StatementId::Corollary => vec![check_corollary(g, h()?, p)?],
        StatementId::Lemma1 => vec![check_lemma_1(g, h()?, p)?],
        StatementId::Counterexample => vec![paper_counterexample()?],
        StatementId::ProofTrace => {
            let h = h()?;
            let f = fusion_system(g, p)?;
            trace_elements(&f, h)?
                .iter()
                .map(|t| proof_trace_theorem_b(g, h, p, t))
                .collect::<Result<_>>()?
        }
    };
    for r in &mut reports {
        r.subject = match r.computed.get("t") {
            Some(t) if id == StatementId::ProofTrace => format!("{}, t = {}", entry.id, t[0]),
            _ => entry.id.clone(),
        };
    }
    Ok(reports)
}

fn selected(entry: &CatalogEntry, id: StatementId, filter: Option<&str>) -> bool {
    filter.is_none_or(|f| entry.id.contains(f) || id.as_str().contains(f))
}

/// Runs every `(entry, statement)` pair matching `filter` on up to `jobs`
/// threads (0 = rayon's default). Results are in catalog order.
pub fn run_catalog(
    entries: &[CatalogEntry],
    filter: Option<&str>,
    jobs: usize,
) -> Result<CatalogRun> {
    let work: Vec<(&CatalogEntry, StatementId, Verdict)> = entries
        .iter()
        .flat_map(|e| e.expected.iter().map(move |(id, v)| (e, *id, *v)))
        .filter(|(e, id, _)| selected(e, *id, filter))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::contract(format!("cannot start {jobs} worker threads: {e}")))?;
    let batches: Vec<Vec<CatalogResult>> = pool.install(|| {
        work.par_iter()
            .map(|(entry, id, expected)| {
                Ok(run_job(entry, *id)?
                    .into_iter()
                    .map(|report| CatalogResult {
                        entry: entry.id.clone(),
                        statement_id: *id,
                        expected: *expected,
                        matches: report.verdict == *expected,
                        report,
                    })
                    .collect())
            })
            .collect::<Result<_>>()
    })?;
    let results: Vec<CatalogResult> = batches.into_iter().flatten().collect();
    let matched = results.iter().filter(|r| r.matches).count();
    Ok(CatalogRun {
        summary: CatalogSummary {
            reports: results.len(),
            matched,
            mismatched: results.len() - matched,
        },
        results,
    })
}
