use std::collections::HashMap;
use std::sync::Arc;

use super::morphism::FusionMorphism;
use crate::error::{Error, Result};
use crate::permcore::{normalizer, PermGroup, Permutation};

/// An automizer `Aut_K(P)`, represented faithfully as a permutation group on
/// the sorted element list of `P`.
///
/// Automizers of the same `P` built from different ambient groups act on the
/// same points, so they can be compared and intersected directly.
#[derive(Clone, Debug)]
pub struct AutGroup {
    base: PermGroup,
    action: PermGroup,
    /// Smallest ambient element inducing each automorphism.
    witnesses: HashMap<Permutation, Permutation>,
    base_index: Arc<HashMap<Permutation, usize>>,
}

/// The permutation of `P`'s element indices induced by conjugation with `g`.
pub fn action_on(p: &PermGroup, g: &Permutation) -> Result<Permutation> {
    let elements = p.elements()?;
    let index = p.element_index()?;
    let images = elements
        .iter()
        .map(|x| {
            index
                .get(&x.conjugate_by(g))
                .copied()
                .ok_or_else(|| Error::contract(format!("{g} does not normalize {p:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(images)
}

/// `Aut_K(P)`: the image of `N_K(P)` acting on `P` by conjugation.
/// `Inn(P)` is `aut_induced(P, P)`.
pub fn aut_induced(p: &PermGroup, k: &PermGroup) -> Result<AutGroup> {
    if p.degree() != k.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: k.degree(),
        });
    }
    let n = normalizer(k, p)?;
    let mut witnesses: HashMap<Permutation, Permutation> = HashMap::new();
    let mut order_seen: Vec<Permutation> = Vec::new();
    for g in n.elements()?.iter() {
        let a = action_on(p, g)?;
        if !witnesses.contains_key(&a) {
            witnesses.insert(a.clone(), g.clone());
            order_seen.push(a);
        }
    }
    let action = PermGroup::generated_by(p.elements()?.len(), order_seen.iter());
    if action.order() as usize != witnesses.len() {
        return Err(Error::inconsistency("automizer action is not closed"));
    }
    Ok(AutGroup {
        base: p.clone(),
        action,
        witnesses,
        base_index: p.element_index()?,
    })
}

impl AutGroup {
    pub fn base(&self) -> &PermGroup {
        &self.base
    }

    pub fn action_group(&self) -> &PermGroup {
        &self.action
    }

    pub fn order(&self) -> u64 {
        self.action.order()
    }

    /// An ambient element inducing the given automorphism.
    pub fn witness_of(&self, a: &Permutation) -> Option<&Permutation> {
        self.witnesses.get(a)
    }

    /// Witnesses of the action-group generators.
    pub fn generator_witnesses(&self) -> Vec<(Permutation, Permutation)> {
        self.action
            .generators()
            .iter()
            .map(|a| (a.clone(), self.witnesses[a].clone()))
            .collect()
    }

    /// Every automorphism with its witness, in action-element order.
    pub fn elements_with_witnesses(&self) -> Vec<(Permutation, Permutation)> {
        let mut all: Vec<_> = self
            .witnesses
            .iter()
            .map(|(a, w)| (a.clone(), w.clone()))
            .collect();
        all.sort();
        all
    }

    pub fn morphism(&self, a: &Permutation) -> Result<FusionMorphism> {
        let w = self
            .witness_of(a)
            .ok_or_else(|| Error::contract("element is not in this automizer"))?;
        FusionMorphism::conjugation(&self.base, w)
    }

    /// Index of an element of the base in the action's point set.
    pub fn point_of(&self, x: &Permutation) -> Option<usize> {
        self.base_index.get(x).copied()
    }

    pub fn contains(&self, a: &Permutation) -> bool {
        self.witnesses.contains_key(a)
    }

    /// Whether every automorphism of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &AutGroup) -> bool {
        self.base.same_elements(&other.base) && self.action.is_subgroup_of(&other.action)
    }
}
