//! Subnormalizers `S_G(x) = {g : <x> subnormal in <x, g>}` and the group they generate.
//!
//! `<x>` is subnormal in `K` iff every prime-power part `<x_q>` is, and a q-subgroup is
//! subnormal iff its normal closure is a q-group. The normal closure of `x_q` in
//! `<x, g>` is generated by the conjugates of `x_q` under `x` and `g`, so the test never
//! builds `<x, g>` itself.

use std::collections::VecDeque;

use rustc_hash::FxHashSet;

use crate::error::Result;
use crate::numtheory::{p_part, prime_factors};
use crate::permgroup::{element_parts, Perm, PermGroup};

/// Whether the normal closure of the q-element `y` in `<a, b>` is a q-group of order at most `bound`.
fn closure_is_q_group(y: &Perm, a: &Perm, b: &Perm, q: u64, bound: u128) -> bool {
    if y.is_identity() {
        return true;
    }
    let is_q = |z: &Perm| {
        let o = z.order() as u128;
        p_part(o, q) == o
    };
    let mut seen: FxHashSet<Perm> = FxHashSet::default();
    let mut queue = VecDeque::new();
    seen.insert(y.clone());
    queue.push_back(y.clone());
    while let Some(z) = queue.pop_front() {
        for c in [a, b] {
            let w = z.conj(c);
            if seen.contains(&w) {
                continue;
            }
            if !is_q(&w) || seen.len() as u128 >= bound {
                return false;
            }
            seen.insert(w.clone());
            queue.push_back(w);
        }
    }
    let mut gens: Vec<Perm> = Vec::new();
    let mut group = PermGroup::trivial(y.degree());
    let mut conj: Vec<&Perm> = seen.iter().collect();
    conj.sort();
    for c in conj {
        if group.contains(c) {
            continue;
        }
        gens.push(c.clone());
        group = PermGroup::from_generators(y.degree(), gens.clone()).expect("same degree");
        let o = group.order();
        if o > bound || p_part(o, q) != o {
            return false;
        }
    }
    true
}

/// Whether `<x>` is subnormal in `<x, g>`, for `g` in a group of order `ambient_order`.
pub fn is_subnormalizing(x: &Perm, g: &Perm, ambient_order: u128) -> bool {
    let o = x.order();
    for q in prime_factors(o) {
        let (xq, _, _) = element_parts(x, q);
        if !closure_is_q_group(&xq, x, g, q, p_part(ambient_order, q)) {
            return false;
        }
    }
    true
}

/// Slow reference test: iterated normal closures inside `<x, g>`.
pub fn is_subnormalizing_by_closures(x: &Perm, g: &Perm) -> Result<bool> {
    let k = PermGroup::from_generators(x.degree(), vec![x.clone(), g.clone()])?;
    let h = PermGroup::from_generators(x.degree(), vec![x.clone()])?;
    crate::permgroup::is_subnormal(&h, &k)
}

/// Membership flags of `S_G(x)` indexed like the enumeration of `G`.
///
/// Membership is constant on orbits of `g -> x g`, `g -> g x`, `g -> g^-1` and conjugation
/// by `N_G(<x>)`, so one element per orbit is tested.
pub fn subnormalizer_set(group: &PermGroup, x: &Perm) -> Result<Vec<bool>> {
    let en = group.enumeration()?;
    if !group.contains(x) {
        return Err(crate::error::Error::NotInGroup);
    }
    let n = en.len();
    let cyc: FxHashSet<Perm> = (0..x.order()).map(|i| x.pow(i as i64)).collect();
    let norm = group.filter_subgroup(|g| cyc.contains(&x.conj(g)))?;
    let order = group.order();
    let mut result = vec![false; n];
    let mut done = vec![false; n];
    let idx = |p: &Perm| en.index_of(p).expect("element of the group") as usize;
    for start in 0..n {
        if done[start] {
            continue;
        }
        let g = &en.elements()[start];
        let verdict = is_subnormalizing(x, g, order);
        let mut queue = vec![start];
        done[start] = true;
        while let Some(i) = queue.pop() {
            result[i] = verdict;
            let e = &en.elements()[i];
            let mut next = vec![idx(&x.mul(e)), idx(&e.mul(x)), idx(&e.inverse())];
            for s in norm.generators() {
                next.push(idx(&e.conj(s)));
            }
            for j in next {
                if !done[j] {
                    done[j] = true;
                    queue.push(j);
                }
            }
        }
    }
    Ok(result)
}

/// `Sub_G(x)`, generated by the subnormalizer set.
pub fn subgroup_generated(group: &PermGroup, members: &[bool]) -> Result<PermGroup> {
    let en = group.enumeration()?;
    let mut gens: Vec<Perm> = Vec::new();
    let mut h = PermGroup::trivial(group.degree());
    for (i, &m) in members.iter().enumerate() {
        if m && !h.contains(&en.elements()[i]) {
            gens.push(en.elements()[i].clone());
            h = PermGroup::from_generators(group.degree(), gens.clone())?;
            if h.order() == group.order() {
                break;
            }
        }
    }
    Ok(h)
}

/// `<N_G(Q) : x in Q in Syl_p(G)>` for a p-element `x`.
pub fn sylow_normalizer_join(group: &PermGroup, p: u64, x: &Perm) -> Result<PermGroup> {
    let sys = group.sylow_system(p)?;
    let xi = group.index_of(x)?;
    let mut h = PermGroup::trivial(group.degree());
    for i in sys.sylows_containing(xi) {
        let n = sys.normalizer_of(i);
        if !n.is_subgroup_of(&h) {
            h = h.closure(n.generators());
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::named::{alternating, symmetric};

    fn p(deg: usize, s: &str) -> Perm {
        Perm::parse_cycles(deg, s, 1).unwrap()
    }

    #[test]
    fn fast_test_agrees_with_closures_on_s4_and_a5() {
        for g in [symmetric(4), alternating(5)] {
            let en = g.enumeration().unwrap();
            let cs = g.class_structure().unwrap();
            for c in &cs.classes {
                let x = &c.representative;
                for h in en.elements() {
                    assert_eq!(
                        is_subnormalizing(x, h, g.order()),
                        is_subnormalizing_by_closures(x, h).unwrap(),
                        "x = {x}, g = {h}"
                    );
                }
            }
        }
    }

    #[test]
    fn s4_subnormalizers() {
        let g = symmetric(4);
        let four = p(4, "(1,2,3,4)");
        let s = subnormalizer_set(&g, &four).unwrap();
        assert_eq!(s.iter().filter(|&&b| b).count(), 8);
        assert_eq!(subgroup_generated(&g, &s).unwrap().order(), 8);
        let dbl = p(4, "(1,2)(3,4)");
        let s = subnormalizer_set(&g, &dbl).unwrap();
        assert_eq!(s.iter().filter(|&&b| b).count(), 24);
        assert_eq!(sylow_normalizer_join(&g, 2, &dbl).unwrap().order(), 24);
    }
}
