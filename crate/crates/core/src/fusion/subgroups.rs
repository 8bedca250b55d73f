//! Conjugacy classes of subgroups of the Sylow subgroup and the
//! centric / radical / fully normalized predicates.

use std::collections::HashSet;

use super::automizer::{aut_induced, AutGroup};
use super::system::FusionSystem;
use crate::error::Result;
use crate::permcore::{
    centralizer, conjugate_subgroup, normalizer, right_transversal, PermGroup, Permutation,
};
use crate::structure::{all_subgroups, core_p};

fn sort_canonical(groups: &mut [PermGroup]) -> Result<()> {
    // Pre-compute keys so the comparator cannot fail.
    let mut keyed: Vec<(u64, Vec<Permutation>, PermGroup)> = groups
        .iter()
        .map(|g| Ok((g.order(), g.elements()?.to_vec(), g.clone())))
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    for (slot, (_, _, g)) in groups.iter_mut().zip(keyed) {
        *slot = g;
    }
    Ok(())
}

/// Every `P^g ≤ U` for `g` in the ambient group, one per distinct subgroup,
/// in canonical order. Scans a right transversal of `N_K(P)`.
pub fn f_conjugates(sys: &FusionSystem, p: &PermGroup) -> Result<Vec<PermGroup>> {
    let n = normalizer(sys.ambient(), p)?;
    let mut out = Vec::new();
    for g in right_transversal(sys.ambient(), &n)? {
        let conj = conjugate_subgroup(p, &g)?;
        if conj.is_subgroup_of(sys.sylow()) {
            out.push(conj);
        }
    }
    sort_canonical(&mut out)?;
    Ok(out)
}

fn sylow_normalizer_order(sys: &FusionSystem, p: &PermGroup) -> Result<u64> {
    Ok(normalizer(sys.sylow(), p)?.order())
}

pub(crate) fn fully_normalized_among(
    sys: &FusionSystem,
    p: &PermGroup,
    class: &[PermGroup],
) -> Result<bool> {
    let own = sylow_normalizer_order(sys, p)?;
    for q in class {
        if sylow_normalizer_order(sys, q)? > own {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|N_U(P)| ≥ |N_U(P')|` for every F-conjugate `P'`.
pub fn is_fully_normalized(sys: &FusionSystem, p: &PermGroup) -> Result<bool> {
    sys.require_in_sylow(p, "subgroup")?;
    let class = f_conjugates(sys, p)?;
    fully_normalized_among(sys, p, &class)
}

pub(crate) fn centric_class(sys: &FusionSystem, class: &[PermGroup]) -> Result<bool> {
    for q in class {
        if !centralizer(sys.sylow(), q)?.is_subgroup_of(q) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C_U(P') ≤ P'` for every F-conjugate `P'`.
pub fn is_centric(sys: &FusionSystem, p: &PermGroup) -> Result<bool> {
    sys.require_in_sylow(p, "subgroup")?;
    let class = f_conjugates(sys, p)?;
    centric_class(sys, &class)
}

/// `Aut_F(P)`.
pub fn automizer(sys: &FusionSystem, p: &PermGroup) -> Result<AutGroup> {
    sys.require_in_sylow(p, "subgroup")?;
    aut_induced(p, sys.ambient())
}

pub(crate) fn radical_given(sys: &FusionSystem, p: &PermGroup, aut: &AutGroup) -> Result<bool> {
    let inn = aut_induced(p, p)?;
    let op = core_p(aut.action_group(), sys.prime())?;
    Ok(op.same_elements(inn.action_group()))
}

/// `O_p(Aut_F(P)) = Inn(P)`.
pub fn is_radical(sys: &FusionSystem, p: &PermGroup) -> Result<bool> {
    let aut = automizer(sys, p)?;
    radical_given(sys, p, &aut)
}

/// One member of an Alperin generating family: a fully normalized,
/// centric, radical subgroup with its automizer.
#[derive(Clone, Debug)]
pub struct AlperinMember {
    pub subgroup: PermGroup,
    pub automizer: AutGroup,
}

/// One fully normalized representative per F-class of centric radical
/// subgroups of the Sylow subgroup, in canonical order. Among the fully
/// normalized members of a class the smallest element set is chosen.
pub fn alperin_family(sys: &FusionSystem) -> Result<Vec<AlperinMember>> {
    let lattice = all_subgroups(sys.sylow())?;
    let mut assigned: HashSet<Vec<Permutation>> = HashSet::new();
    let mut family = Vec::new();
    for p in lattice.iter() {
        if assigned.contains(p.elements()?.as_slice()) {
            continue;
        }
        let class = f_conjugates(sys, p)?;
        for q in &class {
            assigned.insert(q.elements()?.to_vec());
        }
        if !centric_class(sys, &class)? {
            continue;
        }
        let mut best_order = 0;
        let mut rep: Option<&PermGroup> = None;
        for q in &class {
            let n = sylow_normalizer_order(sys, q)?;
            // class is in canonical order, so the first maximum is the smallest
            if n > best_order {
                best_order = n;
                rep = Some(q);
            }
        }
        let rep = rep
            .expect("a class always contains its own subgroup")
            .clone();
        let aut = aut_induced(&rep, sys.ambient())?;
        if radical_given(sys, &rep, &aut)? {
            family.push(AlperinMember {
                subgroup: rep,
                automizer: aut,
            });
        }
    }
    Ok(family)
}
