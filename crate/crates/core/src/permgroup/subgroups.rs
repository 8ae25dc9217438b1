//! Exhaustive subgroup enumeration by cyclic extension over a Cayley table.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use super::{Perm, PermGroup};
use crate::error::{Error, Result};

type Bits = Vec<u64>;

fn bit_get(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn bit_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

/// All subgroups of a group of order at most the subgroup limit.
pub struct SubgroupLattice {
    group: PermGroup,
    elements: Vec<Perm>,
    table: Vec<u16>,
    inverse: Vec<u16>,
    subgroups: Vec<(Bits, Vec<u32>)>,
    index: FxHashMap<Bits, usize>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.group
    }

    /// Element indices (into the ambient sorted enumeration) of subgroup `i`.
    pub fn members(&self, i: usize) -> &[u32] {
        &self.subgroups[i].1
    }

    pub fn order(&self, i: usize) -> usize {
        self.subgroups[i].1.len()
    }

    pub fn contains_element(&self, i: usize, e: u32) -> bool {
        bit_get(&self.subgroups[i].0, e as usize)
    }

    pub fn is_subset(&self, i: usize, j: usize) -> bool {
        self.subgroups[i]
            .0
            .iter()
            .zip(&self.subgroups[j].0)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        let b: Bits = self.subgroups[i]
            .0
            .iter()
            .zip(&self.subgroups[j].0)
            .map(|(a, b)| a & b)
            .collect();
        self.index[&b]
    }

    pub fn find(&self, members: &[u32]) -> Option<usize> {
        let mut b = vec![0u64; self.elements.len().div_ceil(64)];
        for &m in members {
            bit_set(&mut b, m as usize);
        }
        self.index.get(&b).copied()
    }

    /// Subgroup `i` conjugated by the element with index `g`.
    pub fn conjugate(&self, i: usize, g: u32) -> usize {
        let n = self.elements.len();
        let gi = self.inverse[g as usize] as usize;
        let mut b = vec![0u64; n.div_ceil(64)];
        for &m in &self.subgroups[i].1 {
            let c = self.table[self.table[gi * n + m as usize] as usize * n + g as usize];
            bit_set(&mut b, c as usize);
        }
        self.index[&b]
    }

    pub fn group(&self, i: usize) -> PermGroup {
        let els: Vec<Perm> = self.subgroups[i]
            .1
            .iter()
            .map(|&m| self.elements[m as usize].clone())
            .collect();
        PermGroup::from_elements(self.group.degree(), els)
    }

    pub fn element(&self, e: u32) -> &Perm {
        &self.elements[e as usize]
    }

    pub fn multiply(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.elements.len() + b as usize] as u32
    }
}

pub(super) fn enumerate(g: &PermGroup, limit: u128) -> Result<SubgroupLattice> {
    let limit = limit.min(super::SUBGROUP_LIMIT);
    if g.order() > limit {
        return Err(Error::EnumerationLimit {
            order: g.order(),
            limit,
        });
    }
    let en = g.enumeration()?;
    let elements = en.elements().to_vec();
    let n = elements.len();
    let mut table = vec![0u16; n * n];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            table[i * n + j] = en.index_of(&a.mul(b)).unwrap() as u16;
        }
    }
    let inverse: Vec<u16> = elements
        .iter()
        .map(|a| en.index_of(&a.inverse()).unwrap() as u16)
        .collect();
    let words = n.div_ceil(64);
    // closure of a subgroup (given by members) with extra generators, using the full generator list
    let closure = |start: &Bits, gens: &[usize]| -> Bits {
        let mut b = start.clone();
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| bit_get(&b, i)).collect();
        for &s in gens {
            if !bit_get(&b, s) {
                bit_set(&mut b, s);
                queue.push_back(s);
            }
        }
        while let Some(e) = queue.pop_front() {
            for &s in gens {
                let c = table[e * n + s] as usize;
                if !bit_get(&b, c) {
                    bit_set(&mut b, c);
                    queue.push_back(c);
                }
            }
        }
        b
    };
    // one generator per cyclic subgroup
    let mut cyclic_seen: FxHashMap<Bits, usize> = FxHashMap::default();
    let mut cyclic_gens = Vec::new();
    for i in 0..n {
        let mut b = vec![0u64; words];
        let mut x = 0usize; // identity is index 0
        loop {
            bit_set(&mut b, x);
            x = table[x * n + i] as usize;
            if x == 0 {
                break;
            }
        }
        if !cyclic_seen.contains_key(&b) {
            cyclic_seen.insert(b, i);
            cyclic_gens.push(i);
        }
    }
    let mut trivial = vec![0u64; words];
    bit_set(&mut trivial, 0);
    let mut index: FxHashMap<Bits, usize> = FxHashMap::default();
    let mut found: Vec<Bits> = vec![trivial.clone()];
    let mut found_gens: Vec<Vec<usize>> = vec![Vec::new()];
    index.insert(trivial, 0);
    let mut head = 0;
    while head < found.len() {
        let u = found[head].clone();
        let ugens = found_gens[head].clone();
        head += 1;
        for &c in &cyclic_gens {
            if bit_get(&u, c) {
                continue;
            }
            let mut gens = ugens.clone();
            gens.push(c);
            let v = closure(&u, &gens);
            if !index.contains_key(&v) {
                index.insert(v.clone(), found.len());
                found.push(v);
                found_gens.push(gens);
            }
        }
    }
    let mut subgroups: Vec<(Bits, Vec<u32>)> = found
        .into_iter()
        .map(|b| {
            let m: Vec<u32> = (0..n)
                .filter(|&i| bit_get(&b, i))
                .map(|i| i as u32)
                .collect();
            (b, m)
        })
        .collect();
    subgroups.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.1.cmp(&b.1)));
    let index = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.0.clone(), i))
        .collect();
    Ok(SubgroupLattice {
        group: g.clone(),
        elements,
        table,
        inverse,
        subgroups,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::super::named::*;

    #[test]
    fn small_counts() {
        assert_eq!(dihedral(4).unwrap().subgroups(2500).unwrap().len(), 5);
        assert_eq!(symmetric(3).subgroups(2500).unwrap().len(), 6);
        assert_eq!(dihedral(8).unwrap().subgroups(2500).unwrap().len(), 10);
        assert_eq!(symmetric(4).subgroups(2500).unwrap().len(), 30);
        assert_eq!(alternating(5).subgroups(2500).unwrap().len(), 59);
    }

    #[test]
    fn meets_and_conjugation() {
        let s4 = symmetric(4);
        let l = s4.subgroups(2500).unwrap();
        for i in 0..l.len() {
            for j in 0..l.len() {
                let m = l.meet(i, j);
                assert!(l.is_subset(m, i) && l.is_subset(m, j));
            }
            for g in 0..24u32 {
                assert_eq!(l.order(l.conjugate(i, g)), l.order(i));
            }
        }
    }
}
