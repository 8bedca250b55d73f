//! Full subgroup lists for small groups.
//!
//! Subgroups are handled as bitsets over the sorted element list of the
//! ambient group, with a Cayley table for closures. Starting from the cyclic
//! subgroups, every known subgroup is joined with every cyclic subgroup until
//! nothing new appears; every subgroup is reached because it is a join of
//! its cyclic subgroups.

use std::collections::HashSet;

use crate::caps;
use crate::error::Result;
use crate::permcore::{PermGroup, Permutation};

#[derive(Clone, PartialEq, Eq, Hash)]
struct ElemSet(Vec<u64>);

impl ElemSet {
    fn empty(n: usize) -> Self {
        ElemSet(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.0[w] & b == 0;
        self.0[w] |= b;
        fresh
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1u64 << (i % 64)) != 0
    }

    fn indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.0.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(w * 64 + b);
                bits &= bits - 1;
            }
        }
        out
    }
}

struct Cayley {
    identity: usize,
    table: Vec<u32>,
    n: usize,
}

impl Cayley {
    fn new(elements: &[Permutation]) -> Self {
        let n = elements.len();
        let index = |p: &Permutation| elements.binary_search(p).expect("closed element list");
        let identity = index(&Permutation::identity(elements[0].degree()));
        let mut table = Vec::with_capacity(n * n);
        for a in elements {
            for b in elements {
                table.push(index(&(a * b)) as u32);
            }
        }
        Cayley { identity, table, n }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    fn closure(&self, gens: &[usize]) -> ElemSet {
        let mut set = ElemSet::empty(self.n);
        set.insert(self.identity);
        let mut queue = vec![self.identity];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
            k += 1;
        }
        set
    }
}

/// A list of subgroups of `ambient`, each appearing once, ordered by order
/// and then by the sorted element list.
#[derive(Clone, Debug)]
pub struct SubgroupList {
    pub ambient: PermGroup,
    pub members: Vec<PermGroup>,
    /// The list is exhaustive.
    pub complete: bool,
}

impl SubgroupList {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PermGroup> {
        self.members.iter()
    }
}

/// Every subgroup of `s`, subject to the subgroup-enumeration cap.
pub fn all_subgroups(s: &PermGroup) -> Result<SubgroupList> {
    caps::current().check_subgroups("subgroup lattice ambient", s.order())?;
    let elements = s.elements()?;
    let cayley = Cayley::new(&elements);

    let mut known: HashSet<ElemSet> = HashSet::new();
    let mut found: Vec<(ElemSet, Vec<usize>)> = Vec::new();
    let mut cyclic: Vec<usize> = Vec::new();
    for i in 0..elements.len() {
        let set = cayley.closure(&[i]);
        if known.insert(set.clone()) {
            let gens = if i == cayley.identity {
                vec![]
            } else {
                vec![i]
            };
            cyclic.push(i);
            found.push((set, gens));
        }
    }

    let mut k = 0;
    while k < found.len() {
        for &c in &cyclic {
            if found[k].0.contains(c) {
                continue;
            }
            let mut gens = found[k].1.clone();
            gens.push(c);
            let joined = cayley.closure(&gens);
            if known.insert(joined.clone()) {
                found.push((joined, gens));
            }
        }
        k += 1;
    }

    let mut keyed: Vec<(usize, Vec<usize>, Vec<usize>)> = found
        .into_iter()
        .map(|(set, gens)| {
            let idx = set.indices();
            (idx.len(), idx, gens)
        })
        .collect();
    keyed.sort();
    let members = keyed
        .into_iter()
        .map(|(_, _, gens)| PermGroup::generated_by(s.degree(), gens.iter().map(|&i| &elements[i])))
        .collect();
    Ok(SubgroupList {
        ambient: s.clone(),
        members,
        complete: true,
    })
}
