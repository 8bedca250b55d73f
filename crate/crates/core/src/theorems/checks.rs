use crate::centralizers::{c_s_of_subsystem, z_of_fusion, CsStrategy};
use crate::error::{Error, Result};
use crate::fusion::{
    action_on, aut_induced, commutator_with_morphism, fusion_system, is_centric, FusionMorphism,
    FusionSystem,
};
use crate::permcore::{
    center, centralizer, conjugacy_orbit, intersection, is_normal, PermGroup, Permutation,
};
use crate::structure::{all_subgroups, check_prime, core_p_prime, is_coprime_to};

use super::report::{ReportBuilder, StatementId, VerificationReport};

pub(crate) fn subject(g: &PermGroup, h: Option<&PermGroup>, p: u64) -> String {
    match h {
        Some(h) => format!(
            "G of order {}, H of order {}, p = {p}",
            g.order(),
            h.order()
        ),
        None => format!("G of order {}, p = {p}", g.order()),
    }
}

/// Elements of `a` not in `b`, formatted.
pub(crate) fn difference(a: &PermGroup, b: &PermGroup) -> Result<Vec<String>> {
    Ok(a.elements()?
        .iter()
        .filter(|x| !b.has(x))
        .map(|x| x.to_string())
        .collect())
}

/// The common setting of the statements about a subgroup `H` of `G`.
pub(crate) struct Setting {
    pub f: FusionSystem,
    pub h: PermGroup,
    pub t: PermGroup,
    /// `F_T(H)`, when `T` is a Sylow subgroup of `H`.
    pub e: Option<FusionSystem>,
    pub normal: bool,
    pub op_prime: PermGroup,
}

impl Setting {
    pub fn new(g: &PermGroup, h: &PermGroup, p: u64) -> Result<Setting> {
        check_prime(p)?;
        if !h.is_subgroup_of(g) {
            return Err(Error::NotSubgroup(format!(
                "H {h:?} is not a subgroup of G"
            )));
        }
        let f = fusion_system(g, p)?;
        let t = intersection(f.sylow(), h)?;
        let e = FusionSystem::with_sylow(h, p, &t).ok();
        Ok(Setting {
            normal: is_normal(h, g)?,
            op_prime: core_p_prime(h, p)?,
            f,
            h: h.clone(),
            t,
            e,
        })
    }

    pub fn s(&self) -> &PermGroup {
        self.f.sylow()
    }

    pub fn p(&self) -> u64 {
        self.f.prime()
    }

    /// Records `H ⊴ G` and `O_{p'}(H) = 1` (when `with_core`).
    pub fn record_hypotheses(&self, b: &mut ReportBuilder, with_core: bool) -> Result<()> {
        b.hypothesis("H is normal in G", self.normal);
        if with_core {
            b.group("O_p'(H)", &self.op_prime)?;
            b.hypothesis("O_p'(H) = 1", self.op_prime.is_trivial());
        }
        Ok(())
    }

    pub fn c_s_h(&self) -> Result<PermGroup> {
        centralizer(self.s(), &self.h)
    }
}

pub fn check_theorem_a(g: &PermGroup, p: u64) -> Result<VerificationReport> {
    check_prime(p)?;
    let mut b = ReportBuilder::new(StatementId::TheoremA, subject(g, None, p));
    let f = fusion_system(g, p)?;
    let core = core_p_prime(g, p)?;
    b.group("O_p'(G)", &core)?;
    b.hypothesis("O_p'(G) = 1", core.is_trivial());

    let z_g = center(g)?;
    let z_f = z_of_fusion(&f)?;
    b.group("S", f.sylow())?;
    b.group("Z(G)", &z_g)?;
    b.group("Z(F)", &z_f)?;
    b.claim("Z(G) <= S", z_g.is_subgroup_of(f.sylow()));
    // Z(G) ∩ S is always F-central.
    b.consistency(
        "Z(G) ∩ S <= Z(F)",
        intersection(&z_g, f.sylow())?.is_subgroup_of(&z_f),
    );
    if !b.claim("Z(G) = Z(F)", z_g.same_elements(&z_f)) {
        for x in difference(&z_f, &z_g)? {
            b.witness(format!("{x} is in Z(F) but not in Z(G)"));
        }
        for x in difference(&z_g, &z_f)? {
            b.witness(format!("{x} is in Z(G) but not in Z(F)"));
        }
    }
    Ok(b.finish())
}

pub fn check_theorem_b(g: &PermGroup, h: &PermGroup, p: u64) -> Result<VerificationReport> {
    let set = Setting::new(g, h, p)?;
    let mut b = ReportBuilder::new(StatementId::TheoremB, subject(g, Some(h), p));
    set.record_hypotheses(&mut b, true)?;
    b.group("S", set.s())?;
    b.group("T", &set.t)?;
    let c_s_h = set.c_s_h()?;
    b.group("C_S(H)", &c_s_h)?;
    let Some(e) = &set.e else {
        b.hypothesis("S ∩ H is a Sylow subgroup of H", false);
        b.note("C_S(E) is not defined: S ∩ H is not a Sylow subgroup of H");
        return Ok(b.finish());
    };
    if set.normal {
        b.consistency("S ∩ H is a Sylow subgroup of H", true);
    } else {
        b.info("S ∩ H is a Sylow subgroup of H", true);
    }
    let cyclic = c_s_of_subsystem(&set.f, e, CsStrategy::Cyclic)?;
    let lattice = c_s_of_subsystem(&set.f, e, CsStrategy::Lattice)?;
    b.group("C_S(E)", &cyclic)?;
    b.consistency(
        "C_S(E): cyclic and lattice searches agree",
        cyclic.same_elements(&lattice),
    );
    b.consistency("C_S(H) <= C_S(E)", c_s_h.is_subgroup_of(&cyclic));
    if !b.claim("C_S(E) = C_S(H)", cyclic.same_elements(&c_s_h)) {
        for x in difference(&cyclic, &c_s_h)? {
            b.witness(format!("{x} is in C_S(E) but not in C_S(H)"));
        }
    }
    Ok(b.finish())
}

/// Whether `t^H ∩ S = {t}`.
pub(crate) fn isolated_in(t: &Permutation, h: &PermGroup, s: &PermGroup) -> bool {
    conjugacy_orbit(t, h.generators())
        .iter()
        .all(|y| y == t || !s.has(y))
}

pub fn check_corollary(g: &PermGroup, h: &PermGroup, p: u64) -> Result<VerificationReport> {
    let set = Setting::new(g, h, p)?;
    let mut b = ReportBuilder::new(StatementId::Corollary, subject(g, Some(h), p));
    set.record_hypotheses(&mut b, true)?;
    let s = set.s();
    let c_s_h = set.c_s_h()?;
    b.group("C_S(H)", &c_s_h)?;

    let order_p: Vec<Permutation> = s
        .elements()?
        .iter()
        .filter(|x| x.order() == p)
        .cloned()
        .collect();
    let mut isolated = Vec::new();
    let mut bad = 0;
    for t in &order_p {
        let lhs = isolated_in(t, h, s);
        let rhs = c_s_h.has(t);
        if lhs {
            isolated.push(t.clone());
        }
        if lhs != rhs {
            bad += 1;
            b.witness(format!(
                "t = {t}: t^H ∩ S = {{t}} is {lhs}, t in C_S(H) is {rhs}"
            ));
        }
    }
    b.elements("order-p elements t with t^H ∩ S = {t}", isolated.clone());
    b.claim_detail(
        "t^H ∩ S = {t} iff t in C_S(H), for every t in S of order p",
        bad == 0,
        format!(
            "{} elements of order {p}, {bad} counterexamples",
            order_p.len()
        ),
    );
    if b.hypotheses_ok() {
        if let Some(e) = &set.e {
            let cse = c_s_of_subsystem(&set.f, e, CsStrategy::Cyclic)?;
            let consistent = cse
                .elements()?
                .iter()
                .filter(|x| x.order() == p)
                .all(|x| isolated.contains(x));
            b.consistency(
                "every order-p element of C_S(E) satisfies t^H ∩ S = {t}",
                consistent,
            );
        }
    }
    if order_p.is_empty() {
        b.note("S has no elements of order p; the statement is vacuous");
    }
    Ok(b.finish())
}

pub fn check_lemma_1(g: &PermGroup, h: &PermGroup, p: u64) -> Result<VerificationReport> {
    let set = Setting::new(g, h, p)?;
    let mut b = ReportBuilder::new(StatementId::Lemma1, subject(g, Some(h), p));
    set.record_hypotheses(&mut b, false)?;
    let Some(e) = set.e.as_ref().filter(|_| set.normal) else {
        b.note("H is not normal in G; the lemma does not apply");
        return Ok(b.finish());
    };
    let s = set.s();
    let (mut subgroups, mut centric, mut tested, mut violations) = (0, 0, 0, 0);
    for p_sub in all_subgroups(s)?.iter() {
        subgroups += 1;
        let q = intersection(p_sub, h)?;
        if !is_centric(e, &q)? {
            continue;
        }
        centric += 1;
        let aut_g = aut_induced(p_sub, g)?;
        let aut_h = aut_induced(p_sub, h)?;
        let aut_h_q = aut_induced(&q, h)?;
        for (a, w) in aut_g.elements_with_witnesses() {
            if !is_coprime_to(a.order(), p) {
                continue;
            }
            let phi = FusionMorphism::conjugation(p_sub, &w)?;
            if !commutator_with_morphism(p_sub, &phi)?.is_subgroup_of(&q) {
                continue;
            }
            if !aut_h_q.contains(&action_on(&q, &w)?) {
                continue;
            }
            tested += 1;
            if !aut_h.contains(&a) {
                violations += 1;
                b.witness(format!(
                    "P = {p_sub:?}, phi induced by {w}: phi is not in Aut_H(P)"
                ));
            }
        }
    }
    b.claim_detail(
        "every qualifying p'-element of Aut_G(P) lies in Aut_H(P)",
        violations == 0,
        format!(
            "{subgroups} subgroups P of S, {centric} with P ∩ H centric in E, \
             {tested} automorphisms tested, {violations} violations"
        ),
    );
    Ok(b.finish())
}
