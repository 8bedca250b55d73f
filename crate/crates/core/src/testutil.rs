//! Small groups for unit tests.

use crate::permcore::{PermGroup, Permutation};

pub fn cyc(degree: usize, s: &str) -> Permutation {
    Permutation::parse_cycles(degree, s).unwrap()
}

pub fn grp(degree: usize, gens: &[&str]) -> PermGroup {
    PermGroup::new(degree, gens.iter().map(|s| cyc(degree, s)).collect()).unwrap()
}

pub fn s3() -> PermGroup {
    grp(3, &["(0 1)", "(0 1 2)"])
}

pub fn s4() -> PermGroup {
    grp(4, &["(0 1)", "(0 1 2 3)"])
}

pub fn d8() -> PermGroup {
    grp(4, &["(0 1 2 3)", "(0 2)"])
}

/// `G = G1 × G2` with `G1 = Sym{0,1,2}`, `G2 = Sym{3,4,5}`.
pub fn s3xs3() -> PermGroup {
    grp(6, &["(0 1 2)", "(0 1)", "(3 4 5)", "(3 4)"])
}

pub fn g1() -> PermGroup {
    grp(6, &["(0 1 2)", "(0 1)"])
}

pub fn s_33() -> PermGroup {
    grp(6, &["(0 1 2)", "(3 4 5)"])
}

pub fn s1() -> PermGroup {
    grp(6, &["(0 1 2)"])
}

pub fn s2() -> PermGroup {
    grp(6, &["(3 4 5)"])
}

/// The non-normal `H = S1 ⋊ ⟨(0 1)(3 4)⟩`.
pub fn h_nonnormal() -> PermGroup {
    grp(6, &["(0 1 2)", "(0 1)(3 4)"])
}

/// Brute-force closure of a generating set, independent of the chain.
pub fn closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut seen = std::collections::BTreeSet::from([Permutation::identity(degree)]);
    let mut queue = vec![Permutation::identity(degree)];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = &x * g;
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}
