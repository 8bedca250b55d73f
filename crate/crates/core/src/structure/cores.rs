use std::collections::HashSet;

use super::{check_prime, is_coprime_to, is_p_power, p_part};
use crate::error::{Error, Result};
use crate::permcore::{
    conjugacy_orbit, conjugate_subgroup, intersection, normal_closure, normalizer,
    right_transversal, PermGroup, Permutation,
};

fn is_p_element(x: &Permutation, p: u64) -> bool {
    is_p_power(x.order(), p)
}

/// A Sylow `p`-subgroup by normalizer ascent.
///
/// Starting from the trivial group, repeatedly adjoin the first `p`-element
/// (in element order) of `N_G(P)` not already in `P`. While `P` is not Sylow,
/// `p` divides `|N_G(P) : P|`, so such an element exists and `P⟨x⟩` is again
/// a `p`-group.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    check_prime(p)?;
    let target = p_part(g.order(), p);
    let mut sylow = PermGroup::trivial(g.degree());
    while sylow.order() < target {
        let n = normalizer(g, &sylow)?;
        let elements = n.elements()?;
        let x = elements
            .iter()
            .find(|x| is_p_element(x, p) && !sylow.has(x))
            .ok_or_else(|| {
                Error::inconsistency(format!(
                    "normalizer ascent stalled at order {} below p-part {target}",
                    sylow.order()
                ))
            })?;
        sylow = sylow.with_generators(std::slice::from_ref(x))?;
        if !sylow.is_p_group(p) {
            return Err(Error::inconsistency("normalizer ascent left the p-groups"));
        }
    }
    Ok(sylow)
}

/// All distinct conjugates of `P` in `G`, one per coset of `N_G(P)`.
pub fn conjugates_in(g: &PermGroup, p: &PermGroup) -> Result<Vec<PermGroup>> {
    let n = normalizer(g, p)?;
    right_transversal(g, &n)?
        .iter()
        .map(|x| conjugate_subgroup(p, x))
        .collect()
}

/// `O_p(G)`: the intersection of the Sylow `p`-subgroups.
pub fn core_p(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let sylow = sylow_subgroup(g, p)?;
    let mut core = sylow.clone();
    for conj in conjugates_in(g, &sylow)? {
        if core.is_trivial() {
            break;
        }
        core = intersection(&core, &conj)?;
    }
    Ok(core)
}

/// `O_{p'}(G)`: the join of the normal closures of `p'`-elements that are
/// themselves `p'`-groups.
pub fn core_p_prime(g: &PermGroup, p: u64) -> Result<PermGroup> {
    check_prime(p)?;
    let elements = g.elements()?;
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut closures: Vec<PermGroup> = Vec::new();
    let mut rejected: Vec<PermGroup> = Vec::new();
    for x in elements.iter() {
        if x.is_identity() || seen.contains(x) || !is_coprime_to(x.order(), p) {
            continue;
        }
        // The normal closure only depends on the conjugacy class.
        seen.extend(conjugacy_orbit(x, g.generators()));
        let closure = normal_closure(g, std::slice::from_ref(x))?;
        if is_coprime_to(closure.order(), p) {
            closures.push(closure);
        } else {
            rejected.push(closure);
        }
    }
    let gens: Vec<Permutation> = closures
        .iter()
        .flat_map(|c| c.generators().iter().cloned())
        .collect();
    let core = PermGroup::new(g.degree(), gens)?;

    if !is_coprime_to(core.order(), p) {
        return Err(Error::inconsistency(format!(
            "join of p'-normal closures has order {} divisible by {p}",
            core.order()
        )));
    }
    if !crate::permcore::is_normal(&core, g)? {
        return Err(Error::inconsistency("O_p' candidate is not normal"));
    }
    // Any normal p'-subgroup containing a rejected closure would contain a
    // non-p' subgroup; the rejected ones must therefore stay outside the core.
    if rejected.iter().any(|r| r.is_subgroup_of(&core)) {
        return Err(Error::inconsistency(
            "O_p' candidate contains a non-p' normal closure",
        ));
    }
    Ok(core)
}

/// `O^p(G)`: generated by the elements of order coprime to `p`.
pub fn o_upper_p(g: &PermGroup, p: u64) -> Result<PermGroup> {
    check_prime(p)?;
    let elements = g.elements()?;
    let result = PermGroup::generated_by(
        g.degree(),
        elements.iter().filter(|x| is_coprime_to(x.order(), p)),
    );
    let index = g.order() / result.order();
    if !is_p_power(index, p) {
        return Err(Error::inconsistency(format!(
            "|G : O^p(G)| = {index} is not a power of {p}"
        )));
    }
    Ok(result)
}
