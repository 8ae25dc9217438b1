//! Upper p-series `1 = P_0 <= N_0 < P_1 <= N_1 < ...` with
//! `N_i/P_i = O_{p'}(G/P_i)` and `P_{i+1}/N_i = O_p(G/N_i)`.

use super::PermGroup;
use crate::error::Result;
use crate::numtheory::{is_prime, p_part};

#[derive(Clone, Debug)]
pub struct PSeries {
    pub p: u64,
    /// `P_0, N_0, P_1, N_1, ...` (repeated terms omitted).
    pub terms: Vec<PermGroup>,
    pub o_p_prime: PermGroup,
    pub p_length: usize,
    pub p_solvable: bool,
}

fn is_p_power(n: u128, p: u64) -> bool {
    p_part(n, p) == n
}

fn is_p_prime(n: u128, p: u64) -> bool {
    n % p as u128 != 0
}

/// Largest normal subgroup `M >= K` of `G` with `|M/K|` a p-power (`want_p`) or prime to p.
fn largest_normal_over(g: &PermGroup, k: &PermGroup, p: u64, want_p: bool) -> Result<PermGroup> {
    let cs = g.class_structure()?;
    let mut m = k.clone();
    let ok = |n: u128| {
        if want_p {
            is_p_power(n, p)
        } else {
            is_p_prime(n, p)
        }
    };
    for c in &cs.classes {
        let r = &c.representative;
        if m.contains(r) {
            continue;
        }
        let mut e = c.order;
        for q in crate::numtheory::prime_factors(c.order) {
            while e % q == 0 && k.contains(&r.pow((e / q) as i64)) {
                e /= q;
            }
        }
        if !ok(e as u128) {
            continue;
        }
        let cand = g.normal_closure(&m.closure(std::slice::from_ref(r)))?;
        if ok(cand.order() / k.order()) {
            m = cand;
        }
    }
    Ok(m)
}

pub(super) fn p_series(g: &PermGroup, p: u64) -> Result<PSeries> {
    if !is_prime(p) {
        return Err(crate::error::Error::NotPrime(p));
    }
    let mut k = PermGroup::trivial(g.degree());
    let mut terms = vec![k.clone()];
    let mut p_length = 0;
    let mut o_p_prime = None;
    let p_solvable;
    loop {
        let n = largest_normal_over(g, &k, p, false)?;
        if o_p_prime.is_none() {
            o_p_prime = Some(n.clone());
        }
        if n.order() > k.order() {
            terms.push(n.clone());
        }
        if n.order() == g.order() {
            p_solvable = true;
            break;
        }
        let m = largest_normal_over(g, &n, p, true)?;
        if m.order() == n.order() {
            p_solvable = false;
            break;
        }
        p_length += 1;
        terms.push(m.clone());
        if m.order() == g.order() {
            p_solvable = true;
            break;
        }
        k = m;
    }
    Ok(PSeries {
        p,
        terms,
        o_p_prime: o_p_prime.unwrap(),
        p_length,
        p_solvable,
    })
}

#[cfg(test)]
mod tests {
    use super::super::named::*;

    #[test]
    fn examples() {
        let s = symmetric(4).p_series(2).unwrap();
        assert!(s.p_solvable);
        assert_eq!(s.p_length, 2);
        let orders: Vec<u128> = s.terms.iter().map(|t| t.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let a5 = alternating(5).p_series(2).unwrap();
        assert!(!a5.p_solvable);
        let c6 = cyclic(6).p_series(3).unwrap();
        assert!(c6.p_solvable);
        assert_eq!(c6.p_length, 1);
        assert_eq!(c6.o_p_prime.order(), 2);
        let s3 = symmetric(3).p_series(3).unwrap();
        assert_eq!((s3.p_length, s3.p_solvable), (1, true));
    }
}
