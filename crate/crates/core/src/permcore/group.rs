use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::chain::StabChain;
use super::perm::Permutation;
use crate::caps::{self, Caps};
use crate::error::{Error, Result};

/// A permutation group given by generators, with a stabilizer chain.
///
/// Immutable once built; clones share the chain and the lazily built element
/// list. Subgroups know only their degree, never an ambient group, so the
/// same value can be used inside several ambient groups.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u64,
    elements: OnceLock<Arc<Vec<Permutation>>>,
    index: OnceLock<Arc<HashMap<Permutation, usize>>>,
    canonical_gens: OnceLock<Vec<Permutation>>,
}

impl PermGroup {
    /// Builds the group generated by `generators` on `degree` points.
    ///
    /// Identity generators are dropped; the chain uses base points chosen as
    /// the smallest point moved by each new strong generator.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut chain = StabChain::new(degree);
        let mut kept = Vec::new();
        for g in generators {
            if g.is_identity() || kept.contains(&g) {
                continue;
            }
            chain.extend(&g);
            kept.push(g);
        }
        Ok(Self::from_parts(degree, kept, chain))
    }

    /// Like [`PermGroup::new`] but from raw image lists.
    pub fn from_images(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        let gens = generators
            .into_iter()
            .map(Permutation::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("trivial group on a positive degree")
    }

    /// The subgroup generated by a set of group elements, choosing generators
    /// greedily in the given order (an element is kept only if it is not yet
    /// in the span of the previous ones).
    pub fn generated_by<'a>(
        degree: usize,
        elements: impl IntoIterator<Item = &'a Permutation>,
    ) -> Self {
        let mut chain = StabChain::new(degree);
        let mut gens = Vec::new();
        for g in elements {
            assert_eq!(g.degree(), degree, "degree mismatch in generated_by");
            if !chain.contains(g) {
                chain.add_generator(0, g.clone());
                gens.push(g.clone());
            }
        }
        Self::from_parts(degree, gens, chain)
    }

    fn from_parts(degree: usize, generators: Vec<Permutation>, chain: StabChain) -> Self {
        let order = chain.order();
        PermGroup {
            inner: Arc::new(Inner {
                degree,
                generators,
                chain,
                order,
                elements: OnceLock::new(),
                index: OnceLock::new(),
                canonical_gens: OnceLock::new(),
            }),
        }
    }

    /// A group with extra generators appended.
    pub fn with_generators(&self, extra: &[Permutation]) -> Result<Self> {
        let mut gens = self.generators().to_vec();
        gens.extend_from_slice(extra);
        Self::new(self.degree(), gens)
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn base(&self) -> Vec<usize> {
        self.inner.chain.base()
    }

    /// Lengths of the fundamental orbits; their product is the order.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.inner
            .chain
            .levels()
            .iter()
            .map(|l| l.orbit.len())
            .collect()
    }

    /// Strong generators per chain level.
    pub fn strong_generators(&self) -> Vec<&[Permutation]> {
        self.inner
            .chain
            .levels()
            .iter()
            .map(|l| l.gens.as_slice())
            .collect()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Membership by sifting through the chain.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: p.degree(),
            });
        }
        Ok(self.inner.chain.contains(p))
    }

    /// Membership for an element already known to have the right degree.
    pub fn has(&self, p: &Permutation) -> bool {
        debug_assert_eq!(p.degree(), self.degree());
        self.inner.chain.contains(p)
    }

    /// All elements in lexicographic order of their image sequences, subject
    /// to the current enumeration cap.
    pub fn elements(&self) -> Result<Arc<Vec<Permutation>>> {
        self.elements_capped(&caps::current())
    }

    pub fn elements_capped(&self, caps: &Caps) -> Result<Arc<Vec<Permutation>>> {
        if let Some(e) = self.inner.elements.get() {
            return Ok(Arc::clone(e));
        }
        caps.check_enumeration("group", self.order())?;
        let e = self.inner.elements.get_or_init(|| {
            let mut all = self.inner.chain.enumerate();
            all.sort_unstable();
            Arc::new(all)
        });
        Ok(Arc::clone(e))
    }

    /// Position of each element in [`PermGroup::elements`].
    pub fn element_index(&self) -> Result<Arc<HashMap<Permutation, usize>>> {
        if let Some(ix) = self.inner.index.get() {
            return Ok(Arc::clone(ix));
        }
        let elements = self.elements()?;
        let ix = self.inner.index.get_or_init(|| {
            Arc::new(
                elements
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, p)| (p, i))
                    .collect(),
            )
        });
        Ok(Arc::clone(ix))
    }

    /// A generating sequence that depends only on the element set: scan the
    /// sorted elements and keep each one not yet generated.
    pub fn canonical_generators(&self) -> Result<&[Permutation]> {
        if let Some(g) = self.inner.canonical_gens.get() {
            return Ok(g);
        }
        let elements = self.elements()?;
        let gens = self.inner.canonical_gens.get_or_init(|| {
            Self::generated_by(self.degree(), elements.iter())
                .generators()
                .to_vec()
        });
        Ok(gens)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree()
            && self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.generators().iter().all(|g| other.has(g))
    }

    /// Equality as element sets.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a * b == b * a))
    }

    /// Whether the order is a power of `p` (the trivial group counts).
    pub fn is_p_group(&self, p: u64) -> bool {
        let mut n = self.order();
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }

    /// Canonical order on subgroups: by order, then lexicographically by the
    /// sorted element lists.
    pub fn canonical_cmp(&self, other: &PermGroup) -> Result<Ordering> {
        match self.order().cmp(&other.order()) {
            Ordering::Equal => Ok(self
                .elements()?
                .as_slice()
                .cmp(other.elements()?.as_slice())),
            o => Ok(o),
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.generators().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "> (order {}, degree {})", self.order(), self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    fn s3() -> PermGroup {
        PermGroup::new(3, vec![cyc(3, "(0 1)"), cyc(3, "(0 1 2)")]).unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(s3().order(), 6);
        assert_eq!(PermGroup::new(2, vec![]).unwrap().order(), 1);
        let g = PermGroup::new(
            6,
            vec![
                cyc(6, "(0 1 2)"),
                cyc(6, "(0 1)"),
                cyc(6, "(3 4 5)"),
                cyc(6, "(3 4)"),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), 36);
        assert_eq!(
            g.orbit_lengths().iter().product::<usize>() as u64,
            g.order()
        );
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(PermGroup::new(3, vec![Permutation::identity(4)]).is_err());
        assert!(PermGroup::from_images(3, vec![vec![0, 0, 1]]).is_err());
        assert!(PermGroup::new(0, vec![]).is_err());
    }

    #[test]
    fn base_is_deterministic() {
        let a = s3();
        let b = s3();
        assert_eq!(a.base(), b.base());
        assert_eq!(a.base(), vec![0, 1]);
        // fixed points are skipped
        let c = PermGroup::new(5, vec![cyc(5, "(2 4)")]).unwrap();
        assert_eq!(c.base(), vec![2]);
    }

    #[test]
    fn contains_examples() {
        assert!(s3().contains(&cyc(3, "(0 2 1)")).unwrap());
        let c3 = PermGroup::new(3, vec![cyc(3, "(0 1 2)")]).unwrap();
        assert!(!c3.contains(&cyc(3, "(0 1)")).unwrap());
        let triv = PermGroup::trivial(4);
        assert!(triv.contains(&Permutation::identity(4)).unwrap());
        assert!(triv.contains(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn elements_sorted_and_unique() {
        let e = s3().elements().unwrap();
        assert_eq!(e.len(), 6);
        assert!(e.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(
            *PermGroup::trivial(2).elements().unwrap(),
            vec![Permutation::identity(2)]
        );
    }

    #[test]
    fn elements_respects_cap() {
        // S_10 has 3,628,800 elements.
        let g =
            PermGroup::new(10, vec![cyc(10, "(0 1)"), cyc(10, "(0 1 2 3 4 5 6 7 8 9)")]).unwrap();
        assert_eq!(g.order(), 3_628_800);
        let err = g.elements_capped(&Caps::default()).unwrap_err();
        assert!(matches!(err, Error::ScaleLimit { cap: 20_000, .. }));
    }

    #[test]
    fn canonical_generators_depend_only_on_elements() {
        let a = PermGroup::new(3, vec![cyc(3, "(0 1 2)"), cyc(3, "(1 2)")]).unwrap();
        assert_eq!(
            a.canonical_generators().unwrap(),
            s3().canonical_generators().unwrap()
        );
    }
}
