//! Deterministic Schreier–Sims.
//!
//! Level `i` stores a base point `b_i`, the strong generators that fix
//! `b_0..b_{i-1}`, and the orbit of `b_i` under them with a transversal
//! element carrying `b_i` to each orbit point.
//!
//! Invariant after [`StabChain::add_generator`] returns at level `i`: the
//! levels `i..` form a complete base and strong generating set for the group
//! generated by the level-`i` generators.

use super::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    /// Orbit points in discovery order.
    pub orbit: Vec<usize>,
    /// `transversal[pt]` maps `base` to `pt`.
    pub transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }

    /// Extends the orbit with the current generators, keeping existing
    /// transversal elements.
    fn extend_orbit(&mut self) {
        let mut k = 0;
        while k < self.orbit.len() {
            let pt = self.orbit[k];
            for s in &self.gens {
                let next = s.image(pt);
                if self.transversal[next].is_none() {
                    let u = self.transversal[pt]
                        .as_ref()
                        .expect("orbit point without transversal");
                    self.transversal[next] = Some(u * s);
                    self.orbit.push(next);
                }
            }
            k += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it passed every level).
    pub fn sift_from(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let pt = h.image(level.base);
            match &level.transversal[pt] {
                Some(u) => h = &h * &u.inverse(),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (residue, level) = self.sift_from(g, 0);
        level == self.levels.len() && residue.is_identity()
    }

    /// Adds `g` (which fixes the base points of levels `< level`) as a strong
    /// generator at `level`, then restores completeness of the chain below.
    pub fn add_generator(&mut self, level: usize, g: Permutation) {
        debug_assert!(self.levels[..level].iter().all(|l| g.fixes(l.base)));
        if level == self.levels.len() {
            // New base point: smallest point moved by g.
            let base = g
                .moved_points()
                .next()
                .expect("identity passed as a new generator");
            self.levels.push(Level::new(base, self.degree));
        }
        self.levels[level].gens.push(g);
        self.levels[level].extend_orbit();

        // Every Schreier generator at this level must lie in the subgroup
        // described by the levels below. Additions below never change this
        // level's orbit, so a single pass over the final orbit suffices.
        let mut k = 0;
        while k < self.levels[level].orbit.len() {
            let pt = self.levels[level].orbit[k];
            let mut j = 0;
            while j < self.levels[level].gens.len() {
                let lvl = &self.levels[level];
                let s = &lvl.gens[j];
                let u_pt = lvl.transversal[pt].as_ref().unwrap();
                let u_next = lvl.transversal[s.image(pt)].as_ref().unwrap();
                let schreier = &(u_pt * s) * &u_next.inverse();
                if !schreier.is_identity() {
                    let (residue, stop) = self.sift_from(&schreier, level + 1);
                    if stop < self.levels.len() || !residue.is_identity() {
                        self.add_generator(level + 1, schreier);
                    }
                }
                j += 1;
            }
            k += 1;
        }
    }

    /// Adds a generator of the whole group, if it is not already a member.
    pub fn extend(&mut self, g: &Permutation) {
        if !self.contains(g) {
            self.add_generator(0, g.clone());
        }
    }

    /// All elements, as products `u_{k-1} · … · u_0` of transversal elements.
    pub fn enumerate(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for h in &acc {
                for pt in &level.orbit {
                    next.push(h * level.transversal[*pt].as_ref().unwrap());
                }
            }
            acc = next;
        }
        acc
    }
}
