//! Replays the reduction from the subsystem statement to the center
//! statement for a single element `t`, recording every intermediate claim.

use std::collections::BTreeMap;

use crate::centralizers::{c_s_of_subsystem, extension_witness, z_of_fusion, CsStrategy};
use crate::error::{Error, Result};
use crate::fusion::{
    action_on, alperin_family, aut_induced, automizer, is_centric, is_fully_normalized,
    morphism_restrict, radical_given, AutGroup, FusionMorphism, FusionSystem,
};
use crate::permcore::{center, conjugate_subgroup, intersection, PermGroup, Permutation};
use crate::structure::{all_subgroups, core_p_prime, is_coprime_to, is_p_power, o_upper_p, p_part};

use super::checks::{subject, Setting};
use super::report::{CheckKind, ReportBuilder, StatementId, VerificationReport};

pub const STEP_SYLOW: &str = "(1) S0 is a Sylow p-subgroup of G0";
pub const STEP_CORE: &str = "(2) O_p'(G0) = 1";
pub const STEP_UPPER: &str = "(2) O^p(G0) = O^p(H)";
pub const STEP_T_CENTER: &str = "(3) t in Z(S0)";
pub const STEP_T_IN_P: &str = "(3) t in P";
pub const STEP_SYLOW_AUT: &str = "(3) Aut_S0(P) is Sylow in Aut_F0(P)";
pub const STEP_CENTRIC: &str = "(3) P ∩ T is E-centric";
pub const STEP_GENERATED: &str = "(3) P = (P ∩ T)<t>";
pub const STEP_RADICAL: &str = "(3) O_p(Aut_F0(P)) = Inn(P)";
pub const STEP_COMMUTATOR: &str = "(3) [t, O^p(Aut_F0(P))] = 1";
pub const STEP_PHI_IN_H: &str = "(3) phi in Aut_H(P)";
pub const STEP_PHI_RESTRICT: &str = "(3) phi on P ∩ T is in Aut_E(P ∩ T)";
pub const STEP_PSI_EXISTS: &str = "(3) phi on P ∩ T extends to psi fixing t";
pub const STEP_PSI_ORDER: &str = "(3) psi is a p'-element";
pub const STEP_PSI_IN_H: &str = "(3) psi in Aut_H(P)";
pub const STEP_CHI_INNER: &str = "(3) chi = phi psi^-1 is in Inn(P)";
pub const STEP_T_FIXED: &str = "(3) t phi = t";
pub const STEP_THEOREM_A: &str = "(4) Z(F0) = Z(G0)";
pub const STEP_T_CENTRAL: &str = "(4) t in Z(G0)";
pub const STEP_ZG0: &str = "(4) Z(G0) <= C_S(H)";

/// Every per-subgroup step in the order the argument uses them.
pub const PER_SUBGROUP_STEPS: [&str; 14] = [
    STEP_T_CENTER,
    STEP_T_IN_P,
    STEP_SYLOW_AUT,
    STEP_CENTRIC,
    STEP_GENERATED,
    STEP_RADICAL,
    STEP_PHI_IN_H,
    STEP_PHI_RESTRICT,
    STEP_PSI_EXISTS,
    STEP_PSI_ORDER,
    STEP_PSI_IN_H,
    STEP_CHI_INNER,
    STEP_T_FIXED,
    STEP_COMMUTATOR,
];

/// Largest `|S0|` for which every centric radical fully normalized
/// subgroup is checked instead of one per class.
pub const ALL_SUBGROUPS_LIMIT: u64 = 81;

#[derive(Default)]
struct Tally {
    total: usize,
    failures: Vec<String>,
}

#[derive(Default)]
struct Tallies(BTreeMap<&'static str, Tally>);

impl Tallies {
    fn record(&mut self, step: &'static str, passed: bool, context: impl FnOnce() -> String) {
        let tally = self.0.entry(step).or_default();
        tally.total += 1;
        if !passed {
            tally.failures.push(context());
        }
    }
}

pub fn proof_trace_theorem_b(
    g: &PermGroup,
    h: &PermGroup,
    p: u64,
    t: &Permutation,
) -> Result<VerificationReport> {
    let set = Setting::new(g, h, p)?;
    if t.degree() != g.degree() || !set.s().has(t) {
        return Err(Error::contract(format!(
            "t = {t} must lie in the Sylow subgroup S"
        )));
    }
    if !is_p_power(t.order(), p) {
        return Err(Error::contract(format!(
            "t = {t} must have {p}-power order"
        )));
    }
    let mut b = ReportBuilder::new(
        StatementId::ProofTrace,
        format!("{}, t = {t}", subject(g, Some(h), p)),
    );
    b.elements("t", vec![t.clone()]);
    set.record_hypotheses(&mut b, true)?;
    let Some(e) = set.e.as_ref().filter(|_| b.hypotheses_ok()) else {
        b.note("hypotheses fail; no step of the argument is claimed");
        return Ok(b.finish());
    };

    let cse = c_s_of_subsystem(&set.f, e, CsStrategy::Cyclic)?;
    b.group("C_S(E)", &cse)?;
    let in_cse = cse.has(t);
    let kind = if in_cse {
        CheckKind::Claim
    } else {
        CheckKind::Info
    };
    if !in_cse {
        b.note("t is not in C_S(E); later steps are informational");
    }

    let g0 = h.with_generators(std::slice::from_ref(t))?;
    let s0 = set.t.with_generators(std::slice::from_ref(t))?;
    b.group("G0", &g0)?;
    b.group("S0", &s0)?;

    // (1) and (2) hold for any t in S.
    let sylow = s0.is_subgroup_of(&g0) && s0.is_p_group(p) && s0.order() == p_part(g0.order(), p);
    b.consistency(STEP_SYLOW, sylow);
    let f0 = FusionSystem::with_sylow(&g0, p, &s0)?;
    b.consistency(STEP_CORE, core_p_prime(&g0, p)?.is_trivial());
    b.consistency(
        STEP_UPPER,
        o_upper_p(&g0, p)?.same_elements(&o_upper_p(h, p)?),
    );

    // (3)
    let mut tallies = Tallies::default();
    let t_central = s0.generators().iter().all(|x| x * t == t * x);
    tallies.record(STEP_T_CENTER, t_central, || {
        format!("t = {t} is not central in S0")
    });

    let subgroups = if s0.order() <= ALL_SUBGROUPS_LIMIT {
        let mut out = Vec::new();
        for q in all_subgroups(&s0)?.iter() {
            let aut = automizer(&f0, q)?;
            if is_centric(&f0, q)? && radical_given(&f0, q, &aut)? && is_fully_normalized(&f0, q)? {
                out.push((q.clone(), aut));
            }
        }
        out
    } else {
        b.note(format!(
            "|S0| = {} > {ALL_SUBGROUPS_LIMIT}: one fully normalized subgroup per class",
            s0.order()
        ));
        alperin_family(&f0)?
            .into_iter()
            .map(|m| (m.subgroup, m.automizer))
            .collect()
    };
    b.note(format!(
        "{} centric radical fully normalized subgroups P of S0",
        subgroups.len()
    ));
    for (q, aut) in &subgroups {
        trace_subgroup(&set, e, &f0, t, q, aut, &mut tallies)?;
    }
    let mut first_failure: Option<&str> = None;
    for step in PER_SUBGROUP_STEPS {
        let Some(tally) = tallies.0.get(step) else {
            continue;
        };
        let passed = tally.failures.is_empty();
        if !passed {
            first_failure.get_or_insert(step);
            for f in &tally.failures {
                b.witness(format!("{step}: {f}"));
            }
        }
        b.checked(
            step,
            kind,
            passed,
            format!("{} cases, {} failures", tally.total, tally.failures.len()),
        );
    }

    // (4)
    let z_g0 = center(&g0)?;
    let z_f0 = z_of_fusion(&f0)?;
    b.group("Z(G0)", &z_g0)?;
    b.group("Z(F0)", &z_f0)?;
    b.consistency(STEP_THEOREM_A, z_g0.same_elements(&z_f0));
    b.consistency(STEP_ZG0, z_g0.is_subgroup_of(&set.c_s_h()?));
    let t_in_z = z_g0.has(t);
    if in_cse {
        b.claim(STEP_T_CENTRAL, t_in_z);
    } else {
        b.info(STEP_T_CENTRAL, t_in_z);
        // t in Z(G0) would put t in C_S(H) <= C_S(E).
        b.consistency("t is not in Z(G0)", !t_in_z);
        match first_failure.or((!t_in_z).then_some(STEP_T_CENTRAL)) {
            Some(step) => b.note(format!("first failing step: {step}")),
            None => b.note("no step fails although t is not in C_S(E)"),
        }
    }
    Ok(b.finish())
}

fn trace_subgroup(
    set: &Setting,
    e: &FusionSystem,
    f0: &FusionSystem,
    t: &Permutation,
    p_sub: &PermGroup,
    aut: &AutGroup,
    tallies: &mut Tallies,
) -> Result<()> {
    let p = set.p();
    let at = || format!("P = {p_sub:?}");
    tallies.record(STEP_T_IN_P, p_sub.has(t), at);

    let aut_s0 = aut_induced(p_sub, f0.sylow())?;
    let sylow_aut = aut_s0.is_subgroup_of(aut) && aut_s0.order() == p_part(aut.order(), p);
    tallies.record(STEP_SYLOW_AUT, sylow_aut, at);

    let q = intersection(p_sub, &set.t)?;
    tallies.record(STEP_CENTRIC, is_centric(e, &q)?, at);
    let generated = q.with_generators(std::slice::from_ref(t))?;
    tallies.record(STEP_GENERATED, generated.same_elements(p_sub), at);

    let inn = aut_induced(p_sub, p_sub)?;
    tallies.record(STEP_RADICAL, radical_given(f0, p_sub, aut)?, at);

    let Some(t_point) = aut.point_of(t) else {
        // t is not in P; the remaining steps need t ∈ P.
        return Ok(());
    };
    let op = o_upper_p(aut.action_group(), p)?;
    let commutes = op.generators().iter().all(|a| a.image(t_point) == t_point);
    tallies.record(STEP_COMMUTATOR, commutes, at);

    let aut_h = aut_induced(p_sub, &set.h)?;
    let aut_e_q = aut_induced(&q, &set.h)?;
    let t_group = PermGroup::new(t.degree(), vec![t.clone()])?;
    let t_centralizes_q = q.generators().iter().all(|x| x * t == t * x);
    for (a, w) in aut.elements_with_witnesses() {
        if !is_coprime_to(a.order(), p) {
            continue;
        }
        let ctx = || format!("P = {p_sub:?}, phi induced by {w}");
        tallies.record(STEP_PHI_IN_H, aut_h.contains(&a), ctx);
        tallies.record(
            STEP_PHI_RESTRICT,
            aut_e_q.contains(&action_on(&q, &w)?),
            ctx,
        );
        tallies.record(STEP_T_FIXED, a.image(t_point) == t_point, ctx);

        let phi_q = morphism_restrict(&FusionMorphism::conjugation(p_sub, &w)?, &q)?;
        let psi = if t_centralizes_q {
            extension_witness(&set.f, &phi_q, &t_group)?
        } else {
            None
        };
        tallies.record(STEP_PSI_EXISTS, psi.is_some(), ctx);
        let Some(psi) = psi else { continue };
        if !conjugate_subgroup(p_sub, &psi)?.same_elements(p_sub) {
            return Err(Error::inconsistency(format!(
                "extension {psi} of phi on P ∩ T fixing t does not normalize P = {p_sub:?}"
            )));
        }
        let psi_action = action_on(p_sub, &psi)?;
        tallies.record(STEP_PSI_ORDER, is_coprime_to(psi_action.order(), p), ctx);
        tallies.record(STEP_PSI_IN_H, aut_h.contains(&psi_action), ctx);
        let chi = &a * &psi_action.inverse();
        tallies.record(STEP_CHI_INNER, inn.contains(&chi), ctx);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;
    use crate::theorems::Verdict;

    #[test]
    fn central_element_passes_every_step() {
        let t = cyc(6, "(3 4 5)");
        let r = proof_trace_theorem_b(&s3xs3(), &g1(), 3, &t).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:#?}");
        assert_eq!(r.computed["G0"].len(), 18);
        assert_eq!(r.computed["Z(G0)"], s2().elements().unwrap().to_vec());
        for step in PER_SUBGROUP_STEPS.iter().chain(&[
            STEP_SYLOW,
            STEP_CORE,
            STEP_UPPER,
            STEP_THEOREM_A,
            STEP_T_CENTRAL,
        ]) {
            let c = r.check(step).unwrap_or_else(|| panic!("missing {step}"));
            assert!(c.passed && c.kind != CheckKind::Info, "{c:?}");
        }
    }

    #[test]
    fn identity_is_vacuous() {
        let t = Permutation::identity(6);
        let r = proof_trace_theorem_b(&s3xs3(), &g1(), 3, &t).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:#?}");
        assert_eq!(r.computed["G0"], g1().elements().unwrap().to_vec());
    }

    #[test]
    fn non_central_element_reports_failing_step() {
        let t = cyc(6, "(0 1 2)");
        let r = proof_trace_theorem_b(&s3xs3(), &g1(), 3, &t).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:#?}");
        assert!(!r.check(STEP_T_CENTRAL).unwrap().passed);
        assert!(r.check("t is not in Z(G0)").unwrap().passed);
        assert!(r.notes.iter().any(|n| n.starts_with("first failing step")));
    }

    #[test]
    fn rejects_bad_elements() {
        assert!(proof_trace_theorem_b(&s3xs3(), &g1(), 3, &cyc(6, "(0 1)")).is_err());
        let r = proof_trace_theorem_b(&s3xs3(), &h_nonnormal(), 3, &cyc(6, "(3 4 5)")).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisViolated);
    }
}
