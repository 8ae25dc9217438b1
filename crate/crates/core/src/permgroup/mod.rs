//! Permutation groups: construction, enumeration, classes, Sylow theory,
//! subnormality and p-series.

mod chain;
pub mod gens_file;
pub mod named;
mod perm;
mod series;
mod subgroups;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use rustc_hash::FxHashMap;

pub use chain::StabChain;
pub use perm::Perm;
pub use series::PSeries;
pub use subgroups::SubgroupLattice;

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, p_part, prime_factors, valuation};

/// Largest order for which the full element list is built.
pub const ENUMERATION_LIMIT: u128 = 200_000;
/// Largest order for which all subgroups are enumerated.
pub const SUBGROUP_LIMIT: u128 = 2500;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClassData {
    /// ATLAS-style name: element order followed by a letter.
    pub name: String,
    /// Lexicographically least element of the class.
    pub representative: Perm,
    pub size: u128,
    pub order: u64,
    /// Class of `representative^p` for each prime `p` dividing the exponent.
    pub power_map: BTreeMap<u64, usize>,
}

pub struct Enumeration {
    elements: Vec<Perm>,
    index: FxHashMap<Perm, u32>,
}

impl Enumeration {
    fn new(mut elements: Vec<Perm>) -> Enumeration {
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        Enumeration { elements, index }
    }

    /// Elements in lexicographic order of their image lists; the identity is first.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, g: &Perm) -> Option<u32> {
        self.index.get(g).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub struct ClassStructure {
    pub classes: Vec<ConjClassData>,
    /// Class index for each element index.
    pub class_of: Vec<u32>,
    /// Element indices of each class.
    pub members: Vec<Vec<u32>>,
    /// Class of the inverses.
    pub inverse: Vec<usize>,
    pub exponent: u64,
}

struct Inner {
    degree: usize,
    gens: Vec<Perm>,
    chain: StabChain,
    order: u128,
    enumeration: OnceLock<Arc<Enumeration>>,
    classes: OnceLock<Arc<ClassStructure>>,
    sylows: Mutex<BTreeMap<u64, Arc<SylowSystem>>>,
}

/// An immutable permutation group. Cloning is cheap; derived data is memoized.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {}, gens {:?})",
            self.degree(),
            self.order(),
            self.generators()
        )
    }
}

/// One Sylow subgroup in a conjugation orbit, with a conjugator from the first.
pub struct SylowEntry {
    /// Sorted element indices in the ambient enumeration.
    pub elements: Vec<u32>,
    /// `P_0^conjugator` is this subgroup.
    pub conjugator: Perm,
}

pub struct SylowSystem {
    pub p: u64,
    pub sylows: Vec<SylowEntry>,
    pub first: PermGroup,
    pub normalizer: PermGroup,
    /// For each element index, the number of Sylow subgroups containing it.
    pub containing: Vec<u32>,
}

impl SylowSystem {
    pub fn count(&self) -> usize {
        self.sylows.len()
    }

    pub fn sylow_group(&self, i: usize) -> PermGroup {
        self.first.conjugate(&self.sylows[i].conjugator)
    }

    pub fn normalizer_of(&self, i: usize) -> PermGroup {
        self.normalizer.conjugate(&self.sylows[i].conjugator)
    }

    /// Indices of the Sylow subgroups containing the element with index `e`.
    pub fn sylows_containing(&self, e: u32) -> Vec<usize> {
        self.sylows
            .iter()
            .enumerate()
            .filter(|(_, s)| s.elements.binary_search(&e).is_ok())
            .map(|(i, _)| i)
            .collect()
    }
}

fn class_letters(mut k: usize) -> String {
    let mut s = String::new();
    loop {
        s.insert(0, (b'a' + (k % 26) as u8) as char);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s
}

impl PermGroup {
    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let gens: Vec<Perm> = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        let chain = StabChain::new(degree, &gens);
        Ok(PermGroup::assemble(degree, gens, chain))
    }

    fn assemble(degree: usize, gens: Vec<Perm>, chain: StabChain) -> PermGroup {
        let order = chain.order();
        PermGroup {
            inner: Arc::new(Inner {
                degree,
                gens,
                chain,
                order,
                enumeration: OnceLock::new(),
                classes: OnceLock::new(),
                sylows: Mutex::new(BTreeMap::new()),
            }),
        }
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::from_generators(degree, Vec::new()).unwrap()
    }

    /// Subgroup with the given (complete, closed) element list; generators chosen greedily.
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> PermGroup {
        let mut gens: Vec<Perm> = Vec::new();
        let mut chain = StabChain::new(degree, &gens);
        let target = elements.len() as u128;
        for e in &elements {
            if chain.order() == target {
                break;
            }
            if !chain.contains(e) {
                gens.push(e.clone());
                chain = StabChain::new(degree, &gens);
            }
        }
        let g = PermGroup::assemble(degree, gens, chain);
        debug_assert_eq!(g.order(), target);
        let _ = g
            .inner
            .enumeration
            .set(Arc::new(Enumeration::new(elements)));
        g
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.inner.gens
    }

    pub fn order(&self) -> u128 {
        self.inner.order
    }

    pub fn chain(&self) -> &StabChain {
        &self.inner.chain
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.inner.chain.contains(g)
    }

    pub fn is_enumerable(&self) -> bool {
        self.order() <= ENUMERATION_LIMIT
    }

    pub fn enumeration(&self) -> Result<Arc<Enumeration>> {
        if let Some(e) = self.inner.enumeration.get() {
            return Ok(e.clone());
        }
        if !self.is_enumerable() {
            return Err(Error::EnumerationLimit {
                order: self.order(),
                limit: ENUMERATION_LIMIT,
            });
        }
        let e = Arc::new(Enumeration::new(self.inner.chain.elements()));
        let _ = self.inner.enumeration.set(e);
        Ok(self.inner.enumeration.get().unwrap().clone())
    }

    pub fn elements(&self) -> Result<Vec<Perm>> {
        Ok(self.enumeration()?.elements().to_vec())
    }

    pub fn index_of(&self, g: &Perm) -> Result<u32> {
        self.enumeration()?.index_of(g).ok_or(Error::NotInGroup)
    }

    pub fn class_structure(&self) -> Result<Arc<ClassStructure>> {
        if let Some(c) = self.inner.classes.get() {
            return Ok(c.clone());
        }
        let c = Arc::new(self.compute_classes()?);
        let _ = self.inner.classes.set(c);
        Ok(self.inner.classes.get().unwrap().clone())
    }

    fn compute_classes(&self) -> Result<ClassStructure> {
        let en = self.enumeration()?;
        let n = en.len();
        let mut raw_class = vec![u32::MAX; n];
        let mut raw_members: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if raw_class[start] != u32::MAX {
                continue;
            }
            let c = raw_members.len() as u32;
            raw_class[start] = c;
            let mut members = vec![start as u32];
            let mut head = 0;
            while head < members.len() {
                let y = &en.elements[members[head] as usize];
                head += 1;
                for s in self.generators() {
                    let z = y.conj(s);
                    let zi = en.index_of(&z).expect("conjugate outside group") as usize;
                    if raw_class[zi] == u32::MAX {
                        raw_class[zi] = c;
                        members.push(zi as u32);
                    }
                }
            }
            members.sort_unstable();
            raw_members.push(members);
        }
        // canonical order: (element order, size, least representative)
        let mut keyed: Vec<(u64, usize, u32, usize)> = raw_members
            .iter()
            .enumerate()
            .map(|(i, m)| (en.elements[m[0] as usize].order(), m.len(), m[0], i))
            .collect();
        keyed.sort_unstable();
        let mut relabel = vec![0usize; raw_members.len()];
        for (new, k) in keyed.iter().enumerate() {
            relabel[k.3] = new;
        }
        let class_of: Vec<u32> = raw_class
            .iter()
            .map(|&c| relabel[c as usize] as u32)
            .collect();
        let members: Vec<Vec<u32>> = keyed.iter().map(|k| raw_members[k.3].clone()).collect();
        let exponent = keyed.iter().fold(1u64, |acc, k| acc.lcm(&k.0));
        let primes = prime_factors(exponent);
        let mut letter_count: BTreeMap<u64, usize> = BTreeMap::new();
        let mut classes = Vec::with_capacity(members.len());
        for (ci, m) in members.iter().enumerate() {
            let rep = en.elements[m[0] as usize].clone();
            let order = keyed[ci].0;
            let letter = letter_count.entry(order).or_insert(0);
            let name = format!("{}{}", order, class_letters(*letter));
            *letter += 1;
            let mut power_map = BTreeMap::new();
            for &p in &primes {
                let pw = rep.pow(p as i64);
                power_map.insert(p, class_of[en.index_of(&pw).unwrap() as usize] as usize);
            }
            classes.push(ConjClassData {
                name,
                representative: rep,
                size: m.len() as u128,
                order,
                power_map,
            });
        }
        let inverse = classes
            .iter()
            .map(|c| class_of[en.index_of(&c.representative.inverse()).unwrap() as usize] as usize)
            .collect();
        Ok(ClassStructure {
            classes,
            class_of,
            members,
            inverse,
            exponent,
        })
    }

    pub fn conjugacy_classes(&self) -> Result<Vec<ConjClassData>> {
        Ok(self.class_structure()?.classes.clone())
    }

    pub fn class_of(&self, g: &Perm) -> Result<usize> {
        let cs = self.class_structure()?;
        let i = self.index_of(g)?;
        Ok(cs.class_of[i as usize] as usize)
    }

    /// Class of `rep(c)^k`.
    pub fn power_class(&self, c: usize, k: i64) -> Result<usize> {
        let cs = self.class_structure()?;
        self.class_of(&cs.classes[c].representative.pow(k))
    }

    pub fn exponent(&self) -> Result<u64> {
        Ok(self.class_structure()?.exponent)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains(g))
    }

    pub fn same_as(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        p_part(self.order(), p) == self.order()
    }

    /// `H^g` for `H = self`.
    pub fn conjugate(&self, g: &Perm) -> PermGroup {
        let gens = self.generators().iter().map(|h| h.conj(g)).collect();
        PermGroup::from_generators(self.degree(), gens).unwrap()
    }

    /// Subgroup generated by `self` and `extra`.
    pub fn closure(&self, extra: &[Perm]) -> PermGroup {
        let mut gens = self.generators().to_vec();
        for e in extra {
            if !self.contains(e) && !gens.contains(e) {
                gens.push(e.clone());
            }
        }
        PermGroup::from_generators(self.degree(), gens).unwrap()
    }

    /// Elements of `self` satisfying `pred`, as a subgroup (the caller guarantees closure).
    pub fn filter_subgroup(&self, pred: impl Fn(&Perm) -> bool) -> Result<PermGroup> {
        let en = self.enumeration()?;
        let els: Vec<Perm> = en.elements().iter().filter(|g| pred(g)).cloned().collect();
        Ok(PermGroup::from_elements(self.degree(), els))
    }

    pub fn centralizer(&self, x: &Perm) -> Result<PermGroup> {
        if !self.contains(x) {
            return Err(Error::NotInGroup);
        }
        self.filter_subgroup(|g| g.commutes_with(x))
    }

    pub fn centralizer_of_group(&self, h: &PermGroup) -> Result<PermGroup> {
        let gens = h.generators().to_vec();
        self.filter_subgroup(|g| gens.iter().all(|x| g.commutes_with(x)))
    }

    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotSubgroup);
        }
        let gens = h.generators().to_vec();
        self.filter_subgroup(|g| gens.iter().all(|x| h.contains(&x.conj(g))))
    }

    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        small.filter_subgroup(|g| big.contains(g))
    }

    /// Normal closure of `h` in `self`.
    pub fn normal_closure(&self, h: &PermGroup) -> Result<PermGroup> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotSubgroup);
        }
        let mut gens: Vec<Perm> = h.generators().to_vec();
        let mut chain = StabChain::new(self.degree(), &gens);
        let mut i = 0;
        while i < gens.len() {
            let n = gens[i].clone();
            for k in self.generators() {
                let c = n.conj(k);
                if !chain.contains(&c) {
                    gens.push(c);
                    chain = StabChain::new(self.degree(), &gens);
                }
            }
            i += 1;
        }
        Ok(PermGroup::assemble(self.degree(), gens, chain))
    }

    pub fn is_normal_subgroup(&self, h: &PermGroup) -> bool {
        h.is_subgroup_of(self)
            && h.generators()
                .iter()
                .all(|x| self.generators().iter().all(|g| h.contains(&x.conj(g))))
    }

    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let gens = self.generators();
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.inverse().mul(&b.inverse()).mul(a).mul(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        let h = PermGroup::from_generators(self.degree(), comms)?;
        self.normal_closure(&h)
    }

    /// One Sylow p-subgroup: grow a maximal p-power cyclic subgroup through normalizers.
    pub fn sylow(&self, p: u64) -> Result<PermGroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = p_part(self.order(), p);
        if target == 1 {
            return Ok(PermGroup::trivial(self.degree()));
        }
        let en = self.enumeration()?;
        let start = en
            .elements()
            .iter()
            .filter(|g| {
                let o = g.order();
                o > 1 && p_part(o as u128, p) == o as u128
            })
            .max_by(|a, b| a.order().cmp(&b.order()).then(b.cmp(a)))
            .unwrap()
            .clone();
        let mut q = PermGroup::from_generators(self.degree(), vec![start])?;
        while q.order() < target {
            let n = self.normalizer(&q)?;
            let g = n
                .enumeration()?
                .elements()
                .iter()
                .find(|g| !q.contains(g) && q.contains(&g.pow(p as i64)))
                .cloned()
                .ok_or_else(|| Error::Other("Sylow growth stalled".into()))?;
            q = q.closure(&[g]);
        }
        debug_assert_eq!(q.order(), target);
        Ok(q)
    }

    /// Sylow p-subgroups with their conjugation data, in BFS order from `sylow(p)`.
    pub fn sylow_system(&self, p: u64) -> Result<Arc<SylowSystem>> {
        if let Some(s) = self.inner.sylows.lock().unwrap().get(&p) {
            return Ok(s.clone());
        }
        let sys = Arc::new(self.compute_sylow_system(p)?);
        let mut guard = self.inner.sylows.lock().unwrap();
        Ok(guard.entry(p).or_insert(sys).clone())
    }

    fn compute_sylow_system(&self, p: u64) -> Result<SylowSystem> {
        let en = self.enumeration()?;
        let first = self.sylow(p)?;
        let normalizer = self.normalizer(&first)?;
        let mut key: Vec<u32> = first
            .enumeration()?
            .elements()
            .iter()
            .map(|g| en.index_of(g).unwrap())
            .collect();
        key.sort_unstable();
        let mut seen: FxHashMap<Vec<u32>, usize> = FxHashMap::default();
        seen.insert(key.clone(), 0);
        let mut sylows = vec![SylowEntry {
            elements: key,
            conjugator: self.identity(),
        }];
        let mut head = 0;
        while head < sylows.len() {
            for s in self.generators() {
                let mut k: Vec<u32> = sylows[head]
                    .elements
                    .iter()
                    .map(|&e| en.index_of(&en.elements()[e as usize].conj(s)).unwrap())
                    .collect();
                k.sort_unstable();
                if !seen.contains_key(&k) {
                    seen.insert(k.clone(), sylows.len());
                    let conj = sylows[head].conjugator.mul(s);
                    sylows.push(SylowEntry {
                        elements: k,
                        conjugator: conj,
                    });
                }
            }
            head += 1;
        }
        let mut containing = vec![0u32; en.len()];
        for s in &sylows {
            for &e in &s.elements {
                containing[e as usize] += 1;
            }
        }
        Ok(SylowSystem {
            p,
            sylows,
            first,
            normalizer,
            containing,
        })
    }

    pub fn all_sylows(&self, p: u64) -> Result<Vec<PermGroup>> {
        let sys = self.sylow_system(p)?;
        Ok((0..sys.count()).map(|i| sys.sylow_group(i)).collect())
    }

    pub fn p_series(&self, p: u64) -> Result<PSeries> {
        series::p_series(self, p)
    }

    pub fn subgroups(&self, limit: u128) -> Result<SubgroupLattice> {
        subgroups::enumerate(self, limit)
    }

    /// `(x_p, x_{p'}, order of x)`.
    pub fn element_parts(&self, x: &Perm, p: u64) -> (Perm, Perm, u64) {
        element_parts(x, p)
    }

    /// Orbits of a set of element indices under conjugation by `by`; returns least members.
    pub fn conjugation_orbit_reps(&self, indices: &[u32], by: &PermGroup) -> Result<Vec<u32>> {
        let en = self.enumeration()?;
        let allowed: rustc_hash::FxHashSet<u32> = indices.iter().copied().collect();
        let mut done: rustc_hash::FxHashSet<u32> = Default::default();
        let mut reps = Vec::new();
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        for &i in &sorted {
            if done.contains(&i) {
                continue;
            }
            reps.push(i);
            done.insert(i);
            let mut queue = VecDeque::from([i]);
            while let Some(j) = queue.pop_front() {
                for s in by.generators() {
                    let k = en
                        .index_of(&en.elements()[j as usize].conj(s))
                        .ok_or(Error::NotInGroup)?;
                    if allowed.contains(&k) && done.insert(k) {
                        queue.push_back(k);
                    }
                }
            }
        }
        Ok(reps)
    }
}

/// `(x_p, x_{p'}, order of x)` with `x_p x_{p'} = x`.
pub fn element_parts(x: &Perm, p: u64) -> (Perm, Perm, u64) {
    let o = x.order();
    let pa = p_part(o as u128, p) as u64;
    let m = o / pa;
    // u = 1 mod p^a, u = 0 mod m
    let u = if pa == 1 {
        0
    } else if m == 1 {
        1
    } else {
        let inv = crate::numtheory::mod_inverse(m as i64, pa as i64).unwrap();
        (m as i64 * inv).rem_euclid(o as i64)
    };
    let v = (1 - u).rem_euclid(o as i64);
    (x.pow(u), x.pow(v), o)
}

/// Iterated normal closures: `true` iff the chain `K = N_0 >= N_1 >= ...`,
/// `N_{i+1}` the normal closure of `H` in `N_i`, stabilizes at `H`.
pub fn is_subnormal(h: &PermGroup, k: &PermGroup) -> Result<bool> {
    if !h.is_subgroup_of(k) {
        return Err(Error::NotSubgroup);
    }
    let mut n = k.clone();
    loop {
        let next = n.normal_closure(h)?;
        if next.order() == n.order() {
            return Ok(n.order() == h.order());
        }
        n = next;
    }
}

/// `nu_p(|G|)`.
pub fn sylow_exponent(order: u128, p: u64) -> u32 {
    valuation(order, p)
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn p(deg: usize, s: &str) -> Perm {
        Perm::parse_cycles(deg, s, 1).unwrap()
    }

    #[test]
    fn orders_from_generators() {
        let s4 = PermGroup::from_generators(4, vec![p(4, "(1,2,3,4)"), p(4, "(1,2)")]).unwrap();
        assert_eq!(s4.order(), 24);
        let a5 = PermGroup::from_generators(5, vec![p(5, "(1,2,3,4,5)"), p(5, "(3,4,5)")]).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(PermGroup::from_generators(4, vec![p(5, "(1,2)")]).is_err());
    }

    #[test]
    fn s4_classes() {
        let s4 = symmetric(4);
        let cs = s4.conjugacy_classes().unwrap();
        let mut sizes: Vec<u128> = cs.iter().map(|c| c.size).collect();
        assert_eq!(cs.len(), 5);
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(cs[0].order, 1);
        // canonical order: by element order, then size
        let key: Vec<(u64, u128)> = cs.iter().map(|c| (c.order, c.size)).collect();
        assert_eq!(key, vec![(1, 1), (2, 3), (2, 6), (3, 8), (4, 6)]);
        assert_eq!(cs[4].power_map[&2], 1);
    }

    #[test]
    fn centralizer_normalizer() {
        let s4 = symmetric(4);
        assert_eq!(s4.centralizer(&p(4, "(1,2)(3,4)")).unwrap().order(), 8);
        let a5 = alternating(5);
        let p5 = a5.sylow(5).unwrap();
        assert_eq!(a5.normalizer(&p5).unwrap().order(), 10);
    }

    #[test]
    fn sylow_counts() {
        let s4 = symmetric(4);
        assert_eq!(s4.sylow(2).unwrap().order(), 8);
        assert_eq!(s4.all_sylows(2).unwrap().len(), 3);
        let a5 = alternating(5);
        let syl = a5.sylow_system(2).unwrap();
        assert_eq!(syl.count(), 5);
        for i in 0..5 {
            for j in i + 1..5 {
                let common: Vec<_> = syl.sylows[i]
                    .elements
                    .iter()
                    .filter(|e| syl.sylows[j].elements.contains(e))
                    .collect();
                assert_eq!(common.len(), 1);
            }
        }
        let c6 = cyclic(6);
        assert_eq!(c6.all_sylows(3).unwrap().len(), 1);
        assert_eq!(c6.sylow(5).unwrap().order(), 1);
    }

    #[test]
    fn subnormality() {
        let d8 = dihedral(8).unwrap();
        let h = PermGroup::from_generators(4, vec![p(4, "(1,2)(3,4)")]).unwrap();
        assert!(is_subnormal(&h, &d8).unwrap());
        let a4 = alternating(4);
        let c3 = PermGroup::from_generators(4, vec![p(4, "(1,2,3)")]).unwrap();
        assert!(!is_subnormal(&c3, &a4).unwrap());
        assert!(is_subnormal(&a4, &a4).unwrap());
    }

    #[test]
    fn parts() {
        let x = p(6, "(1,2,3,4)(5,6)");
        let (xp, xq, o) = element_parts(&x, 2);
        assert_eq!((xp, xq.is_identity(), o), (x.clone(), true, 4));
        let y = p(5, "(1,2,3)(4,5)");
        let (yp, yq, _) = element_parts(&y, 2);
        assert_eq!(yp, y.pow(3));
        assert_eq!(yq, y.pow(4));
        assert_eq!(yp.mul(&yq), y);
    }

    #[test]
    fn class_letters_sequence() {
        assert_eq!(class_letters(0), "a");
        assert_eq!(class_letters(25), "z");
        assert_eq!(class_letters(26), "aa");
    }
}
