//! Subgroup operations. Centralizers, normalizers, and intersections filter
//! element lists and are subject to the enumeration cap.

use std::collections::HashSet;

use super::group::PermGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

fn same_degree(a: &PermGroup, b: &PermGroup) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

pub fn build_group(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
    PermGroup::new(degree, generators)
}

/// Whether `h^g ∈ H` for every generator `h` of `H` and `g` of `G`.
pub fn is_normal(h: &PermGroup, g: &PermGroup) -> Result<bool> {
    same_degree(h, g)?;
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup(format!(
            "{h:?} is not contained in {g:?}"
        )));
    }
    Ok(normalizes(g.generators(), h))
}

/// Whether every element of `elements` normalizes `p`.
pub(crate) fn normalizes(elements: &[Permutation], p: &PermGroup) -> bool {
    elements
        .iter()
        .all(|g| p.generators().iter().all(|x| p.has(&x.conjugate_by(g))))
}

fn commutes_with_all(g: &Permutation, xs: &[Permutation]) -> bool {
    xs.iter().all(|x| g * x == x * g)
}

/// `C_G(X)`.
pub fn centralizer(g: &PermGroup, x: &PermGroup) -> Result<PermGroup> {
    same_degree(g, x)?;
    let elements = g.elements()?;
    let gens = x.generators();
    Ok(PermGroup::generated_by(
        g.degree(),
        elements.iter().filter(|e| commutes_with_all(e, gens)),
    ))
}

/// `Z(G) = C_G(G)`.
pub fn center(g: &PermGroup) -> Result<PermGroup> {
    centralizer(g, g)
}

/// `N_G(P)`.
pub fn normalizer(g: &PermGroup, p: &PermGroup) -> Result<PermGroup> {
    same_degree(g, p)?;
    let elements = g.elements()?;
    Ok(PermGroup::generated_by(
        g.degree(),
        elements
            .iter()
            .filter(|e| normalizes(std::slice::from_ref(e), p)),
    ))
}

/// `P^g`, generated by the conjugates of the generators of `P`.
pub fn conjugate_subgroup(p: &PermGroup, g: &Permutation) -> Result<PermGroup> {
    if p.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: g.degree(),
        });
    }
    let gens = p.generators().iter().map(|x| x.conjugate_by(g)).collect();
    PermGroup::new(p.degree(), gens)
}

/// `⟨A ∪ B⟩`, checked to lie inside `G`.
pub fn join(g: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    same_degree(g, a)?;
    same_degree(g, b)?;
    for (name, sub) in [("first", a), ("second", b)] {
        if !sub.is_subgroup_of(g) {
            return Err(Error::NotSubgroup(format!(
                "{name} operand {sub:?} is not inside {g:?}"
            )));
        }
    }
    a.with_generators(b.generators())
}

/// `A ∩ B`, by filtering the elements of the smaller group.
pub fn intersection(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    same_degree(a, b)?;
    let (small, big) = if a.order() <= b.order() {
        (a, b)
    } else {
        (b, a)
    };
    let elements = small.elements()?;
    Ok(PermGroup::generated_by(
        a.degree(),
        elements.iter().filter(|e| big.has(e)),
    ))
}

/// The orbit of `x` under conjugation by the generators `gens`.
pub fn conjugacy_orbit(x: &Permutation, gens: &[Permutation]) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::from([x.clone()]);
    let mut orbit = vec![x.clone()];
    let mut k = 0;
    while k < orbit.len() {
        for g in gens {
            let y = orbit[k].conjugate_by(g);
            if seen.insert(y.clone()) {
                orbit.push(y);
            }
        }
        k += 1;
    }
    orbit.sort_unstable();
    orbit
}

/// Right transversal of `sub` in `g` (representatives of the cosets `sub·x`),
/// each representative the smallest element of its coset.
pub fn right_transversal(g: &PermGroup, sub: &PermGroup) -> Result<Vec<Permutation>> {
    same_degree(g, sub)?;
    let elements = g.elements()?;
    let sub_elements = sub.elements()?;
    let mut covered: HashSet<&Permutation> = HashSet::new();
    let mut reps = Vec::new();
    let mut coset = Vec::with_capacity(sub_elements.len());
    for x in elements.iter() {
        if covered.contains(x) {
            continue;
        }
        coset.clear();
        coset.extend(sub_elements.iter().map(|s| s * x));
        for y in &coset {
            // Coset members are elements of g; borrow the stored copy.
            let idx = elements
                .binary_search(y)
                .map_err(|_| Error::NotSubgroup(format!("{sub:?} is not contained in {g:?}")))?;
            covered.insert(&elements[idx]);
        }
        reps.push(x.clone());
    }
    Ok(reps)
}

/// The normal closure of a set of elements in `G`.
pub fn normal_closure(g: &PermGroup, xs: &[Permutation]) -> Result<PermGroup> {
    let mut closure = PermGroup::new(g.degree(), xs.to_vec())?;
    loop {
        let missing: Vec<Permutation> = closure
            .generators()
            .iter()
            .flat_map(|x| g.generators().iter().map(move |h| x.conjugate_by(h)))
            .filter(|y| !closure.has(y))
            .collect();
        if missing.is_empty() {
            return Ok(closure);
        }
        closure = closure.with_generators(&missing)?;
    }
}
