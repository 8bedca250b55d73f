//! `G = S3 × S3` with `H = S1 ⋊ R`, where `R` has order 2 and inverts all
//! of `S`. `H` is not normal, and `C_S(E)` is strictly larger than `C_S(H)`.

use crate::centralizers::{
    c_s_of_subsystem, subsystem_centralized_by, CsStrategy, MorphismStrategy,
};
use crate::corpusio::{direct_product, make_named};
use crate::error::Result;
use crate::fusion::{aut_induced, FusionSystem};
use crate::permcore::{centralizer, intersection, is_normal, PermGroup, Permutation};
use crate::structure::{core_p, p_part, sylow_subgroup};

use super::checks::{check_theorem_b, difference};
use super::report::{ReportBuilder, StatementId, VerificationReport};
use super::Verdict;

pub const FACT_R: &str = "(i) R has order 2 and acts fixed-point-freely on S";
pub const FACT_SYLOW: &str = "(ii) S1 = S ∩ H is a Sylow 3-subgroup of H";
pub const FACT_SAME_SYSTEM: &str = "(iii) F_S1(H) = F_S1(G1)";
pub const FACT_CENTRALIZED: &str = "(iii) E is contained in C_F(S2)";
pub const FACT_NOT_IN: &str = "(iv) S2 is not contained in C_S(H)";
pub const FACT_DIFFERENT: &str = "(v) C_S(E) != C_S(H)";
pub const FACT_CSE: &str = "(v) C_S(E) = S2";
pub const FACT_CSH: &str = "(v) C_S(H) = 1";

/// The groups of the example on 6 points: `G1` on {0,1,2}, `G2` on {3,4,5}.
pub struct ExampleGroups {
    pub g: PermGroup,
    pub g1: PermGroup,
    pub g2: PermGroup,
    pub s1: PermGroup,
    pub s2: PermGroup,
    pub r: PermGroup,
    pub h: PermGroup,
}

pub fn example_groups() -> ExampleGroups {
    let s3 = make_named("symmetric", &[3]).expect("S3");
    let trivial = PermGroup::trivial(3);
    let g = direct_product(&s3, &s3);
    let g1 = direct_product(&s3, &trivial);
    let g2 = direct_product(&trivial, &s3);
    let perm = |text: &str| Permutation::parse_cycles(6, text).expect("valid cycles");
    let group = |gens: &[&str]| {
        PermGroup::new(6, gens.iter().map(|c| perm(c)).collect()).expect("degree 6")
    };
    ExampleGroups {
        s1: group(&["(0 1 2)"]),
        s2: group(&["(3 4 5)"]),
        r: group(&["(0 1)(3 4)"]),
        h: group(&["(0 1 2)", "(0 1)(3 4)"]),
        g,
        g1,
        g2,
    }
}

pub fn paper_counterexample() -> Result<VerificationReport> {
    let x = example_groups();
    let p = 3;
    let mut b = ReportBuilder::new(
        StatementId::Counterexample,
        "G = S3 x S3, H = S1 R, p = 3".to_string(),
    );
    let s = core_p(&x.g, p)?;
    b.consistency(
        "O_3(G) is a Sylow 3-subgroup of G",
        s.same_elements(&sylow_subgroup(&x.g, p)?),
    );
    for (name, grp) in [
        ("G", &x.g),
        ("S", &s),
        ("S1", &x.s1),
        ("S2", &x.s2),
        ("R", &x.r),
        ("H", &x.h),
    ] {
        b.group(name, grp)?;
    }
    b.claim("H is not normal in G", !is_normal(&x.h, &x.g)?);

    // (i)
    let fixed = centralizer(&s, &x.r)?;
    b.claim(FACT_R, x.r.order() == 2 && fixed.is_trivial());

    // (ii)
    let t = intersection(&s, &x.h)?;
    b.claim(
        FACT_SYLOW,
        t.same_elements(&x.s1) && t.order() == p_part(x.h.order(), p),
    );

    // (iii)
    let f = FusionSystem::with_sylow(&x.g, p, &s)?;
    let e = FusionSystem::with_sylow(&x.h, p, &x.s1)?;
    let same = aut_induced(&x.s1, &x.h)?
        .action_group()
        .same_elements(aut_induced(&x.s1, &x.g1)?.action_group());
    b.claim(FACT_SAME_SYSTEM, same);
    b.group("C_S(G1)", &centralizer(&s, &x.g1)?)?;
    b.claim("S2 = C_S(G1)", centralizer(&s, &x.g1)?.same_elements(&x.s2));
    let brute = subsystem_centralized_by(&f, &e, &x.s2, MorphismStrategy::Brute)?;
    let alperin = subsystem_centralized_by(&f, &e, &x.s2, MorphismStrategy::Alperin)?;
    b.consistency(
        "E in C_F(S2): all morphisms and Alperin generators agree",
        brute == alperin,
    );
    b.claim(FACT_CENTRALIZED, brute);

    // (iv)
    let c_s_h = centralizer(&s, &x.h)?;
    b.group("C_S(H)", &c_s_h)?;
    if !b.claim(FACT_NOT_IN, !x.s2.is_subgroup_of(&c_s_h)) {
        b.witness("S2 centralizes H");
    }

    // (v)
    let cse = c_s_of_subsystem(&f, &e, CsStrategy::Cyclic)?;
    let cse_lattice = c_s_of_subsystem(&f, &e, CsStrategy::Lattice)?;
    b.group("C_S(E)", &cse)?;
    b.consistency(
        "C_S(E): cyclic and lattice searches agree",
        cse.same_elements(&cse_lattice),
    );
    b.claim(FACT_CSE, cse.same_elements(&x.s2));
    b.claim(FACT_CSH, c_s_h.is_trivial());
    if b.claim(FACT_DIFFERENT, !cse.same_elements(&c_s_h)) {
        for w in difference(&cse, &c_s_h)? {
            b.witness(format!("{w} is in C_S(E) but not in C_S(H)"));
        }
    }

    // control: the normal subgroup G1 in place of H
    let control = check_theorem_b(&x.g, &x.g1, p)?;
    b.claim(
        "control: the statement holds for H = G1",
        control.verdict == Verdict::Pass,
    );
    b.note("G2 acts on {3,4,5}; R = <(0 1)(3 4)> inverts both factors of S");
    Ok(b.finish())
}
