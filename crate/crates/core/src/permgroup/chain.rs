//! Deterministic Schreier-Sims: base, strong generating set, membership.

use super::perm::Perm;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Level {
        let mut l = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        l.rebuild(degree);
        l
    }

    fn rebuild(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base as usize] = Some(Perm::identity(degree));
        self.orbit = vec![self.base];
        let mut head = 0;
        while head < self.orbit.len() {
            let b = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let c = s.apply(b);
                if self.transversal[c as usize].is_none() {
                    let t = self.transversal[b as usize].as_ref().unwrap().mul(s);
                    self.transversal[c as usize] = Some(t);
                    self.orbit.push(c);
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Perm]) -> StabChain {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<u32> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved_point().unwrap());
            }
        }
        let mut levels: Vec<Level> = Vec::new();
        for (i, &b) in base.iter().enumerate() {
            let mut l = Level::new(b, degree);
            l.gens = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&c| g.apply(c) == c))
                .cloned()
                .collect();
            l.rebuild(degree);
            levels.push(l);
        }
        let mut chain = StabChain { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut restart = None;
            'scan: for oi in 0..self.levels[iu].orbit.len() {
                let b = self.levels[iu].orbit[oi];
                for si in 0..self.levels[iu].gens.len() {
                    let level = &self.levels[iu];
                    let s = &level.gens[si];
                    let tb = level.transversal[b as usize].as_ref().unwrap();
                    let c = s.apply(b);
                    let tc = level.transversal[c as usize].as_ref().unwrap();
                    let y = tb.mul(s).mul(&tc.inverse());
                    if y.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip(&y, iu + 1);
                    if j < self.levels.len() || !h.is_identity() {
                        if j == self.levels.len() {
                            let bp = h.first_moved_point().unwrap();
                            self.levels.push(Level::new(bp, self.degree));
                        }
                        for l in iu + 1..=j {
                            self.levels[l].gens.push(h.clone());
                            self.levels[l].rebuild(self.degree);
                        }
                        restart = Some(j);
                        break 'scan;
                    }
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level where sifting stopped.
    fn strip(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.apply(level.base);
            match &level.transversal[b as usize] {
                None => return (h, j),
                Some(t) => h = h.mul(&t.inverse()),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.levels
            .first()
            .map(|l| l.gens.clone())
            .unwrap_or_default()
    }

    /// All elements, as products of transversal elements (deepest level first).
    pub fn elements(&self) -> Vec<Perm> {
        let mut acc = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let reps: Vec<&Perm> = level
                .orbit
                .iter()
                .map(|&b| level.transversal[b as usize].as_ref().unwrap())
                .collect();
            let mut next = Vec::with_capacity(acc.len() * reps.len());
            for e in &acc {
                for u in &reps {
                    next.push(e.mul(u));
                }
            }
            acc = next;
        }
        acc
    }

    /// Element selected by one orbit index per level.
    pub fn element_from_indices(&self, idx: &[usize]) -> Perm {
        let mut g = Perm::identity(self.degree);
        for (level, &k) in self.levels.iter().zip(idx).rev() {
            let b = level.orbit[k % level.orbit.len()];
            g = g.mul(level.transversal[b as usize].as_ref().unwrap());
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(deg: usize, s: &str) -> Perm {
        Perm::parse_cycles(deg, s, 1).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        for n in 2..8usize {
            let cyc: Vec<u32> = (0..n as u32).collect();
            let a = Perm::from_cycles(n, &[cyc]).unwrap();
            let b = Perm::from_cycles(n, &[vec![0, 1]]).unwrap();
            let c = StabChain::new(n, &[a, b]);
            assert_eq!(c.order(), (1..=n as u128).product::<u128>());
        }
    }

    #[test]
    fn membership_matches_enumeration() {
        let c = StabChain::new(5, &[p(5, "(1,2,3,4,5)"), p(5, "(3,4,5)")]);
        assert_eq!(c.order(), 60);
        let els = c.elements();
        assert_eq!(els.len(), 60);
        let set: std::collections::HashSet<_> = els.iter().cloned().collect();
        assert_eq!(set.len(), 60);
        assert!(!c.contains(&p(5, "(1,2)")));
        assert!(c.contains(&p(5, "(1,2)(3,4)")));
    }

    #[test]
    fn trivial_group() {
        let c = StabChain::new(4, &[]);
        assert_eq!(c.order(), 1);
        assert_eq!(c.elements().len(), 1);
    }
}
