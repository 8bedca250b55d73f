use std::collections::BTreeMap;
use std::fmt;

use super::system::FusionSystem;
use crate::error::{Error, Result};
use crate::permcore::{conjugate_subgroup, PermGroup, Permutation};

/// A conjugation map `c_g` restricted to a domain `P`, with its witness `g`.
///
/// Two morphisms are the same map iff their domains agree as sets and they
/// send the canonical generators of the domain to the same elements; the
/// witnesses may then differ by an element of `C(P)`.
#[derive(Clone)]
pub struct FusionMorphism {
    domain: PermGroup,
    witness: Permutation,
    key: Vec<Permutation>,
}

impl FusionMorphism {
    pub fn conjugation(domain: &PermGroup, witness: &Permutation) -> Result<Self> {
        if domain.degree() != witness.degree() {
            return Err(Error::DegreeMismatch {
                left: domain.degree(),
                right: witness.degree(),
            });
        }
        let key = domain
            .canonical_generators()?
            .iter()
            .map(|x| x.conjugate_by(witness))
            .collect();
        Ok(FusionMorphism {
            domain: domain.clone(),
            witness: witness.clone(),
            key,
        })
    }

    pub fn identity(domain: &PermGroup) -> Result<Self> {
        Self::conjugation(domain, &domain.identity())
    }

    pub fn domain(&self) -> &PermGroup {
        &self.domain
    }

    pub fn witness(&self) -> &Permutation {
        &self.witness
    }

    /// Images of the canonical generators of the domain.
    pub fn key(&self) -> &[Permutation] {
        &self.key
    }

    pub fn apply(&self, x: &Permutation) -> Permutation {
        x.conjugate_by(&self.witness)
    }

    pub fn codomain(&self) -> PermGroup {
        conjugate_subgroup(&self.domain, &self.witness).expect("degrees checked at construction")
    }

    pub fn is_identity(&self) -> bool {
        self.domain
            .canonical_generators()
            .map(|g| g == self.key.as_slice())
            .unwrap_or(false)
    }

    /// `self` followed by `next`; the image of `self` must lie in the domain
    /// of `next`.
    pub fn then(&self, next: &FusionMorphism) -> Result<FusionMorphism> {
        if !self.codomain().is_subgroup_of(&next.domain) {
            return Err(Error::contract(
                "composite undefined: image not inside next domain",
            ));
        }
        FusionMorphism::conjugation(&self.domain, &(&self.witness * &next.witness))
    }

    pub fn inverse(&self) -> FusionMorphism {
        FusionMorphism::conjugation(&self.codomain(), &self.witness.inverse())
            .expect("degrees checked at construction")
    }

    pub fn same_map(&self, other: &FusionMorphism) -> bool {
        self.domain.same_elements(&other.domain) && self.key == other.key
    }
}

impl PartialEq for FusionMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.same_map(other)
    }
}

impl fmt::Debug for FusionMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c_{} on {:?}", self.witness, self.domain)
    }
}

/// `Hom_F(P, Q)`: every `c_g|_P` with `g` in the ambient group and
/// `P^g ≤ Q`, one per distinct map, sorted by key. The witness kept for each
/// map is the smallest ambient element inducing it.
pub fn hom_set(sys: &FusionSystem, p: &PermGroup, q: &PermGroup) -> Result<Vec<FusionMorphism>> {
    sys.require_in_sylow(p, "domain")?;
    sys.require_in_sylow(q, "target")?;
    let gens = p.canonical_generators()?;
    let mut maps: BTreeMap<Vec<Permutation>, Permutation> = BTreeMap::new();
    for g in sys.ambient().elements()?.iter() {
        let images: Vec<Permutation> = gens.iter().map(|x| x.conjugate_by(g)).collect();
        if images.iter().all(|y| q.has(y)) {
            maps.entry(images).or_insert_with(|| g.clone());
        }
    }
    maps.into_iter()
        .map(|(key, w)| {
            let m = FusionMorphism::conjugation(p, &w)?;
            debug_assert_eq!(m.key, key);
            Ok(m)
        })
        .collect()
}

/// Whether some element of `E`'s ambient group induces the same map as `m`.
pub fn morphism_in_subsystem(e: &FusionSystem, m: &FusionMorphism) -> Result<bool> {
    e.require_in_sylow(m.domain(), "morphism domain")?;
    e.require_in_sylow(&m.codomain(), "morphism image")?;
    let gens = m.domain().canonical_generators()?;
    Ok(e.ambient().elements()?.iter().any(|h| {
        gens.iter()
            .zip(m.key())
            .all(|(x, y)| &x.conjugate_by(h) == y)
    }))
}

/// `[P, m]`, generated by `x⁻¹ · m(x)` for `x ∈ P`.
pub fn commutator_with_morphism(p: &PermGroup, m: &FusionMorphism) -> Result<PermGroup> {
    if !p.same_elements(m.domain()) {
        return Err(Error::contract(format!("{p:?} is not the domain of {m:?}")));
    }
    let elements = p.elements()?;
    let comms: Vec<Permutation> = elements.iter().map(|x| x.commutator(m.witness())).collect();
    Ok(PermGroup::generated_by(p.degree(), comms.iter()))
}

/// `m|_R`.
pub fn morphism_restrict(m: &FusionMorphism, r: &PermGroup) -> Result<FusionMorphism> {
    if !r.is_subgroup_of(m.domain()) {
        return Err(Error::contract(format!(
            "{r:?} is not inside the domain of {m:?}"
        )));
    }
    FusionMorphism::conjugation(r, m.witness())
}
