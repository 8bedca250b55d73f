use crate::error::{Error, Result};
use crate::permcore::PermGroup;
use crate::structure::{check_prime, p_part, sylow_subgroup};

/// The fusion system `F_U(K)` of a finite group `K` at a prime, carried as
/// the pair (ambient group, Sylow subgroup).
#[derive(Clone, Debug)]
pub struct FusionSystem {
    ambient: PermGroup,
    prime: u64,
    sylow: PermGroup,
}

impl FusionSystem {
    /// `F_S(K)` with `S` the Sylow subgroup found by normalizer ascent.
    pub fn new(ambient: &PermGroup, prime: u64) -> Result<Self> {
        let sylow = sylow_subgroup(ambient, prime)?;
        Ok(FusionSystem {
            ambient: ambient.clone(),
            prime,
            sylow,
        })
    }

    /// `F_U(K)` for a given Sylow subgroup `U` of `K`; checked.
    pub fn with_sylow(ambient: &PermGroup, prime: u64, sylow: &PermGroup) -> Result<Self> {
        check_prime(prime)?;
        if !sylow.is_subgroup_of(ambient) {
            return Err(Error::NotSubgroup(format!(
                "Sylow candidate {sylow:?} is not inside {ambient:?}"
            )));
        }
        let expected = p_part(ambient.order(), prime);
        if sylow.order() != expected {
            return Err(Error::contract(format!(
                "subgroup of order {} is not a Sylow {prime}-subgroup (p-part is {expected})",
                sylow.order()
            )));
        }
        Ok(FusionSystem {
            ambient: ambient.clone(),
            prime,
            sylow: sylow.clone(),
        })
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn sylow(&self) -> &PermGroup {
        &self.sylow
    }

    pub fn degree(&self) -> usize {
        self.ambient.degree()
    }

    /// `p` does not divide `|K|`; reports flag this rather than erroring.
    pub fn has_trivial_sylow(&self) -> bool {
        self.sylow.is_trivial()
    }

    pub(crate) fn require_in_sylow(&self, p: &PermGroup, what: &str) -> Result<()> {
        if !p.is_subgroup_of(&self.sylow) {
            return Err(Error::contract(format!(
                "{what} {p:?} is not inside the Sylow subgroup {:?}",
                self.sylow
            )));
        }
        Ok(())
    }
}

/// `fusion_system(K, p)`.
pub fn fusion_system(ambient: &PermGroup, prime: u64) -> Result<FusionSystem> {
    FusionSystem::new(ambient, prime)
}
