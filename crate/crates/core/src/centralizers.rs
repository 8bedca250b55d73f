//! `Z(F)` and the subgroup `C_S(E)` of a subsystem `E = F_T(H)` inside
//! `F = F_S(G)`.
//!
//! A morphism of `F` is a restricted conjugation, so an element `z ∈ S` is
//! central in `F` exactly when every ambient conjugate of `z` that lands in
//! `S` is `z` itself. For `C_S(E)`, a morphism `c_h|_P` of `E` extends to
//! `PX` fixing `X` pointwise iff some element of `C_G(X) ∩ C_G(P)·h` exists.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fusion::{alperin_family, hom_set, FusionMorphism, FusionSystem};
use crate::permcore::{centralizer, conjugacy_orbit, intersection, PermGroup, Permutation};
use crate::structure::all_subgroups;

/// How to enumerate the morphisms of `E` that must extend.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MorphismStrategy {
    /// Every `E`-morphism between subgroups of `T`.
    Brute,
    /// Generators of the automizers in an Alperin family of `E`; enough
    /// because extendable morphisms are closed under restriction and
    /// composition.
    #[default]
    Alperin,
}

/// How to search for the largest centralized subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CsStrategy {
    /// Every subgroup of `C_S(T)`; used as the oracle.
    Lattice,
    /// Join of the passing cyclic subgroups of `C_S(T)`, rechecked.
    #[default]
    Cyclic,
}

/// `Z(F) = {z ∈ S : z^G ∩ S = {z}}`.
pub fn z_of_fusion(f: &FusionSystem) -> Result<PermGroup> {
    let s = f.sylow();
    let gens = f.ambient().generators();
    let mut central: Vec<Permutation> = Vec::new();
    for z in s.elements()?.iter() {
        let orbit = conjugacy_orbit(z, gens);
        if orbit.iter().all(|y| y == z || !s.has(y)) {
            central.push(z.clone());
        }
    }
    let z = PermGroup::generated_by(s.degree(), central.iter());
    if z.order() as usize != central.len() {
        return Err(Error::inconsistency(format!(
            "F-central elements ({}) do not form a subgroup (closure has order {})",
            central.len(),
            z.order()
        )));
    }
    if !z
        .generators()
        .iter()
        .all(|x| commutes_with(x, s.generators()))
    {
        return Err(Error::inconsistency("Z(F) is not central in S"));
    }
    Ok(z)
}

fn commutes_with(x: &Permutation, ys: &[Permutation]) -> bool {
    ys.iter().all(|y| x * y == y * x)
}

fn centralizes(x: &PermGroup, p: &PermGroup) -> bool {
    x.generators()
        .iter()
        .all(|a| commutes_with(a, p.generators()))
}

/// Whether `m: P → S` extends to `PX` with the identity on `X`.
pub fn extends_centralizing(f: &FusionSystem, m: &FusionMorphism, x: &PermGroup) -> Result<bool> {
    Ok(extension_witness(f, m, x)?.is_some())
}

/// An ambient element inducing `m` on `P` and centralizing `X`, if any.
pub fn extension_witness(
    f: &FusionSystem,
    m: &FusionMorphism,
    x: &PermGroup,
) -> Result<Option<Permutation>> {
    let cg_p = centralizer(f.ambient(), m.domain())?;
    extension_in(f, m, x, &cg_p.elements()?)
}

fn check_extension_inputs(f: &FusionSystem, m: &FusionMorphism, x: &PermGroup) -> Result<()> {
    let s = f.sylow();
    if !x.is_subgroup_of(s) || !m.domain().is_subgroup_of(s) {
        return Err(Error::contract("X and the morphism domain must lie in S"));
    }
    if !centralizes(x, m.domain()) {
        return Err(Error::contract(format!(
            "{x:?} does not centralize {:?}",
            m.domain()
        )));
    }
    if !f.ambient().has(m.witness()) || !m.codomain().is_subgroup_of(s) {
        return Err(Error::contract(format!(
            "{m:?} is not a morphism of the fusion system"
        )));
    }
    Ok(())
}

fn extension_in(
    f: &FusionSystem,
    m: &FusionMorphism,
    x: &PermGroup,
    cg_p: &[Permutation],
) -> Result<Option<Permutation>> {
    check_extension_inputs(f, m, x)?;
    for c in cg_p {
        let w = c * m.witness();
        if commutes_with(&w, x.generators()) {
            let s = f.sylow();
            let lands = m
                .domain()
                .generators()
                .iter()
                .chain(x.generators())
                .all(|y| s.has(&y.conjugate_by(&w)));
            if !lands {
                return Err(Error::inconsistency(format!(
                    "extension by {w} does not map PX into S"
                )));
            }
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Checks `E.ambient ≤ F.ambient` and `E.sylow = F.sylow ∩ E.ambient`;
/// returns `C_S(T)`.
fn validate_subsystem(f: &FusionSystem, e: &FusionSystem) -> Result<PermGroup> {
    if !e.ambient().is_subgroup_of(f.ambient()) {
        return Err(Error::contract(
            "subsystem ambient group is not inside the ambient group",
        ));
    }
    let t = intersection(f.sylow(), e.ambient())?;
    if !t.same_elements(e.sylow()) {
        return Err(Error::contract("subsystem Sylow subgroup is not S ∩ H"));
    }
    centralizer(f.sylow(), e.sylow())
}

/// The morphisms of `E` to test, each with `C_G(domain)` precomputed.
struct ExtensionChecker<'a> {
    f: &'a FusionSystem,
    morphisms: Vec<(FusionMorphism, Arc<Vec<Permutation>>)>,
    cs_t: PermGroup,
}

impl<'a> ExtensionChecker<'a> {
    fn new(f: &'a FusionSystem, e: &FusionSystem, strategy: MorphismStrategy) -> Result<Self> {
        let cs_t = validate_subsystem(f, e)?;
        let morphisms = match strategy {
            MorphismStrategy::Brute => {
                let mut all = Vec::new();
                for p in all_subgroups(e.sylow())?.iter() {
                    all.extend(hom_set(e, p, e.sylow())?);
                }
                all
            }
            MorphismStrategy::Alperin => {
                let mut all = Vec::new();
                for member in alperin_family(e)? {
                    for (_, w) in member.automizer.generator_witnesses() {
                        all.push(FusionMorphism::conjugation(&member.subgroup, &w)?);
                    }
                }
                all
            }
        };
        let mut cache: HashMap<Vec<Permutation>, Arc<Vec<Permutation>>> = HashMap::new();
        let mut with_c = Vec::with_capacity(morphisms.len());
        for m in morphisms {
            let key = m.domain().elements()?.to_vec();
            let c = match cache.get(&key) {
                Some(c) => Arc::clone(c),
                None => {
                    let c = centralizer(f.ambient(), m.domain())?.elements()?;
                    cache.insert(key, Arc::clone(&c));
                    c
                }
            };
            with_c.push((m, c));
        }
        Ok(ExtensionChecker {
            f,
            morphisms: with_c,
            cs_t,
        })
    }

    fn passes(&self, x: &PermGroup) -> Result<bool> {
        if !x.is_subgroup_of(&self.cs_t) {
            return Err(Error::contract(format!("{x:?} is not inside C_S(T)")));
        }
        for (m, c) in &self.morphisms {
            if extension_in(self.f, m, x, c)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Whether every morphism of `E` extends to one fixing `X` pointwise,
/// i.e. `E ⊆ C_F(X)`.
pub fn subsystem_centralized_by(
    f: &FusionSystem,
    e: &FusionSystem,
    x: &PermGroup,
    strategy: MorphismStrategy,
) -> Result<bool> {
    ExtensionChecker::new(f, e, strategy)?.passes(x)
}

/// `C_S(E)`: the largest `X ≤ C_S(T)` with `E ⊆ C_F(X)`.
pub fn c_s_of_subsystem(
    f: &FusionSystem,
    e: &FusionSystem,
    strategy: CsStrategy,
) -> Result<PermGroup> {
    match strategy {
        CsStrategy::Lattice => {
            // The oracle path: every subgroup, every morphism.
            let checker = ExtensionChecker::new(f, e, MorphismStrategy::Brute)?;
            let cs_t = checker.cs_t.clone();
            let mut passing = Vec::new();
            for x in all_subgroups(&cs_t)?.iter() {
                if checker.passes(x)? {
                    passing.push(x.clone());
                }
            }
            // The trivial subgroup always passes; the list is in ascending order.
            let largest = passing.last().cloned().ok_or_else(|| {
                Error::inconsistency("trivial subgroup failed the extension test")
            })?;
            if let Some(bad) = passing.iter().find(|x| !x.is_subgroup_of(&largest)) {
                return Err(Error::inconsistency(format!(
                    "no largest centralized subgroup: {bad:?} is not inside {largest:?}"
                )));
            }
            Ok(largest)
        }
        CsStrategy::Cyclic => {
            let checker = ExtensionChecker::new(f, e, MorphismStrategy::Alperin)?;
            let cs_t = checker.cs_t.clone();
            let mut gens = Vec::new();
            for x in cs_t.elements()?.iter() {
                let cyclic = PermGroup::new(cs_t.degree(), vec![x.clone()])?;
                if checker.passes(&cyclic)? {
                    gens.push(x.clone());
                }
            }
            let result = PermGroup::generated_by(cs_t.degree(), gens.iter());
            if !checker.passes(&result)? {
                return Err(Error::inconsistency(format!(
                    "join of centralized cyclic subgroups {result:?} is not centralized"
                )));
            }
            Ok(result)
        }
    }
}
