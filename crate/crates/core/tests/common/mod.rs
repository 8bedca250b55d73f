//! Brute-force oracles shared by the integration tests. They use only
//! image arrays and ordered sets, never the stabilizer chain.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use fusionkit::fusion::{alperin_family, hom_set, FusionSystem};
use fusionkit::structure::all_subgroups;
use fusionkit::{PermGroup, Permutation};

pub type Images = Vec<usize>;

pub fn mul(a: &[usize], b: &[usize]) -> Images {
    // right action: a first, then b
    a.iter().map(|&i| b[i]).collect()
}

pub fn inv(a: &[usize]) -> Images {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

pub fn conj(x: &[usize], g: &[usize]) -> Images {
    mul(&mul(&inv(g), x), g)
}

/// All products of the generators, by breadth-first search.
pub fn closure(degree: usize, gens: &[Images]) -> BTreeSet<Images> {
    let id: Images = (0..degree).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn images(g: &PermGroup) -> Vec<Images> {
    g.generators().iter().map(|p| p.images().to_vec()).collect()
}

pub fn element_set(g: &PermGroup) -> BTreeSet<Images> {
    g.elements()
        .unwrap()
        .iter()
        .map(|p| p.images().to_vec())
        .collect()
}

/// Every subgroup as the closure of at most `log2 |G|` elements, which
/// is enough since each new generator at least doubles the order.
pub fn subgroups_by_generating_sets(g: &PermGroup) -> BTreeSet<BTreeSet<Images>> {
    let elems: Vec<Images> = element_set(g).into_iter().collect();
    let rank = elems.len().ilog2() as usize;
    let mut out = BTreeSet::new();
    let mut chosen = Vec::new();
    fn rec(
        elems: &[Images],
        start: usize,
        left: usize,
        degree: usize,
        chosen: &mut Vec<Images>,
        out: &mut BTreeSet<BTreeSet<Images>>,
    ) {
        out.insert(closure(degree, chosen));
        if left == 0 {
            return;
        }
        for i in start..elems.len() {
            chosen.push(elems[i].clone());
            rec(elems, i + 1, left - 1, degree, chosen, out);
            chosen.pop();
        }
    }
    rec(&elems, 0, rank, g.degree(), &mut chosen, &mut out);
    out
}

/// A morphism between subgroups of `S` as an explicit map on elements.
pub type Map = BTreeMap<Images, Images>;

fn map_of(domain: &BTreeSet<Images>, g: &[usize]) -> Map {
    domain.iter().map(|x| (x.clone(), conj(x, g))).collect()
}

/// Every morphism of `F` with domain a subgroup of `S`, computed by
/// scanning all ambient elements.
pub fn all_morphisms(f: &FusionSystem) -> BTreeSet<Map> {
    let s = element_set(f.sylow());
    let ambient = element_set(f.ambient());
    let mut out = BTreeSet::new();
    for p in subgroups_by_generating_sets(f.sylow()) {
        for g in &ambient {
            let m = map_of(&p, g);
            if m.values().all(|y| s.contains(y)) {
                out.insert(m);
            }
        }
    }
    out
}

/// The closure under restriction and composition of the automorphisms of
/// the Alperin family.
pub fn alperin_closure(f: &FusionSystem) -> BTreeSet<Map> {
    let mut basic: BTreeSet<Map> = BTreeSet::new();
    for member in alperin_family(f).unwrap() {
        let subs = subgroups_by_generating_sets(&member.subgroup);
        for (_, w) in member.automizer.elements_with_witnesses() {
            for q in &subs {
                basic.insert(map_of(q, w.images()));
            }
        }
    }
    let by_domain = |set: &BTreeSet<Map>| {
        let mut idx: BTreeMap<BTreeSet<Images>, Vec<Map>> = BTreeMap::new();
        for m in set {
            idx.entry(m.keys().cloned().collect())
                .or_default()
                .push(m.clone());
        }
        idx
    };
    let basic_idx = by_domain(&basic);
    let mut all = basic.clone();
    let mut frontier: Vec<Map> = basic.into_iter().collect();
    while let Some(m) = frontier.pop() {
        let image: BTreeSet<Images> = m.values().cloned().collect();
        for next in basic_idx.get(&image).into_iter().flatten() {
            let composite: Map = m
                .iter()
                .map(|(x, y)| (x.clone(), next[y].clone()))
                .collect();
            if all.insert(composite.clone()) {
                frontier.push(composite);
            }
        }
    }
    all
}

/// Hom sets from the library, as explicit maps.
pub fn library_morphisms(f: &FusionSystem) -> BTreeSet<Map> {
    let mut out = BTreeSet::new();
    for p in all_subgroups(f.sylow()).unwrap().iter() {
        let domain = element_set(p);
        for m in hom_set(f, p, f.sylow()).unwrap() {
            out.insert(map_of(&domain, m.witness().images()));
        }
    }
    out
}

pub fn perm(degree: usize, cycles: &str) -> Permutation {
    Permutation::parse_cycles(degree, cycles).unwrap()
}
