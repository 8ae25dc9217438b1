//! Nilpotent Hall subgroups and H-picky elements.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::numtheory::pi_prime_part;
use crate::permgroup::{Perm, PermGroup};

fn pi_part(order: u128, pi: &[u64]) -> u128 {
    order / pi_prime_part(order, pi)
}

/// `|H|` is coprime to `|G : H|`.
pub fn is_hall(group: &PermGroup, h: &PermGroup) -> bool {
    if !h.is_subgroup_of(group) {
        return false;
    }
    let a = h.order();
    let b = group.order() / a;
    gcd_u128(a, b) == 1
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(h: &PermGroup) -> Result<bool> {
    for q in prime_factors_u128(h.order()) {
        if h.sylow_system(q)?.count() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn prime_factors_u128(n: u128) -> Vec<u64> {
    crate::numtheory::factorize(n)
        .into_iter()
        .map(|(p, _)| p)
        .collect()
}

/// A nilpotent Hall π-subgroup, if one exists.
///
/// A nilpotent Hall subgroup is the direct product of its Sylow subgroups, so after fixing
/// `P_1` the next factor is a Sylow subgroup of `C_G(P_1)` of full order, unique up to
/// conjugacy in `C_G(P_1)`. The greedy choice is therefore complete.
pub fn find_nilpotent_hall(group: &PermGroup, pi: &[u64]) -> Result<Option<PermGroup>> {
    let primes: Vec<u64> = prime_factors_u128(group.order())
        .into_iter()
        .filter(|q| pi.contains(q))
        .collect();
    let mut h = PermGroup::trivial(group.degree());
    let mut c = group.clone();
    for q in primes {
        let full = crate::numtheory::p_part(group.order(), q);
        if crate::numtheory::p_part(c.order(), q) != full {
            return Ok(None);
        }
        let s = c.sylow(q)?;
        h = h.closure(s.generators());
        c = c.centralizer_of_group(&s)?;
    }
    debug_assert_eq!(h.order(), pi_part(group.order(), pi));
    Ok(Some(h))
}

/// `x in H` is H-picky when `H` is the only conjugate of `H` containing it.
pub fn h_picky(group: &PermGroup, h: &PermGroup, x: &Perm) -> Result<bool> {
    if !is_hall(group, h) {
        return Err(Error::Precondition(
            "subgroup is not a Hall subgroup".into(),
        ));
    }
    if !h.contains(x) {
        return Err(Error::NotInGroup);
    }
    Ok(conjugates_containing(group, h, x)? == 1)
}

/// Number of `G`-conjugates of `H` that contain `x`.
pub fn conjugates_containing(group: &PermGroup, h: &PermGroup, x: &Perm) -> Result<usize> {
    let en = group.enumeration()?;
    let key = |k: &PermGroup| -> Result<BTreeSet<u32>> {
        k.elements()?.iter().map(|e| group.index_of(e)).collect()
    };
    let mut seen: BTreeSet<BTreeSet<u32>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(key(h)?);
    queue.push_back(h.clone());
    while let Some(k) = queue.pop_front() {
        for s in group.generators() {
            let c = k.conjugate(s);
            if seen.insert(key(&c)?) {
                queue.push_back(c);
            }
        }
    }
    let xi = en.index_of(x).ok_or(Error::NotInGroup)?;
    Ok(seen.iter().filter(|set| set.contains(&xi)).count())
}

/// The primes of `|G|` outside π and inside it, for reporting.
pub fn split_primes(order: u128, pi: &[u64]) -> (Vec<u64>, Vec<u64>) {
    prime_factors_u128(order)
        .into_iter()
        .partition(|q| pi.contains(q))
}
