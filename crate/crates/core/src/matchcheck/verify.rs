//! Rechecks witnesses and certificates directly from table values.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Certificate, ConstraintSpec, Part, Side, WitnessPair};
use crate::cyclotomic::CycNum;

fn degree(side: &Side, chi: usize) -> BigInt {
    side.table.value(chi, 0).as_integer().unwrap_or_default()
}

fn prime_part(mut d: BigInt, primes: &[u64]) -> BigInt {
    let mut part = BigInt::from(1);
    for &p in primes {
        let p = BigInt::from(p);
        while !d.is_zero() && (&d % &p).is_zero() {
            d /= &p;
            part *= &p;
        }
    }
    part
}

fn fixed_by(v: &CycNum, k: i64) -> bool {
    v.galois(k).map(|w| &w == v).unwrap_or(false)
}

/// Same field of values, tested as equal Galois stabilizers inside `Q(E(n))` for a common `n`.
fn same_field_direct(a: &CycNum, b: &CycNum) -> bool {
    let n = crate::numtheory::lcm(a.conductor(), b.conductor());
    (1..=n as i64)
        .filter(|&k| crate::numtheory::gcd(k as u64, n) == 1)
        .all(|k| fixed_by(a, k) == fixed_by(b, k))
}

fn signs_ok(a: &CycNum, b: &CycNum, s: i8) -> bool {
    match s {
        0 => a.is_zero() && b.is_zero(),
        1 => a == b,
        _ => *a == -b,
    }
}

fn congruent(a: &BigInt, b: &BigInt, p: u64, s: i64) -> bool {
    ((a - b * BigInt::from(s)) % BigInt::from(p))
        .abs()
        .is_zero()
}

/// All conditions except the signs themselves, which are checked against `signs` if given,
/// and searched for otherwise.
pub fn verify_pair(
    left: &Side,
    right: &Side,
    spec: &ConstraintSpec,
    chi: usize,
    psi: usize,
    signs: Option<&[i8]>,
) -> bool {
    let (dl, dr) = (degree(left, chi), degree(right, psi));
    if !spec.degree_primes.is_empty()
        && prime_part(dl.clone(), &spec.degree_primes)
            != prime_part(dr.clone(), &spec.degree_primes)
    {
        return false;
    }
    let vals: Vec<(CycNum, CycNum)> = left
        .columns
        .iter()
        .zip(&right.columns)
        .map(|(&c, &d)| {
            (
                left.table.value(chi, c).clone(),
                right.table.value(psi, d).clone(),
            )
        })
        .collect();
    for (a, b) in &vals {
        if spec.vanishing_pattern && a.is_zero() != b.is_zero() {
            return false;
        }
        if spec.field_equality && !same_field_direct(a, b) {
            return false;
        }
        if let Some(p) = spec.value_p_part {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    if a.value_p_part(p).ok() != b.value_p_part(p).ok() {
                        return false;
                    }
                }
                _ => return false,
            }
        }
    }
    if let Some(p) = spec.degree_congruence {
        if !spec.linked_signs && !congruent(&dl, &dr, p, 1) && !congruent(&dl, &dr, p, -1) {
            return false;
        }
    }
    if !spec.sign_equality {
        return true;
    }
    let linked_ok =
        |e: i64| !spec.linked_signs || congruent(&dl, &dr, spec.degree_congruence.unwrap_or(1), e);
    match signs {
        Some(s) => {
            if s.len() != vals.len()
                || !vals
                    .iter()
                    .zip(s)
                    .all(|((a, b), &e)| signs_ok(a, b, e) || (e != 0 && a.is_zero() && b.is_zero()))
            {
                return false;
            }
            let used: BTreeSet<i8> = s.iter().copied().filter(|&e| e != 0).collect();
            if spec.uniform_sign && used.len() > 1 {
                return false;
            }
            match used.iter().next() {
                Some(&e) => linked_ok(e as i64),
                None => linked_ok(1) || linked_ok(-1),
            }
        }
        None => {
            if spec.uniform_sign {
                [1i8, -1].iter().any(|&e| {
                    vals.iter()
                        .all(|(a, b)| signs_ok(a, b, e) || (a.is_zero() && b.is_zero()))
                        && linked_ok(e as i64)
                })
            } else {
                vals.iter().all(|(a, b)| a == b || *a == -b)
            }
        }
    }
}

/// A bijection between the two character sets whose pairs all satisfy the spec.
pub fn verify_witness(left: &Side, right: &Side, spec: &ConstraintSpec, w: &[WitnessPair]) -> bool {
    let ls: BTreeSet<usize> = w.iter().map(|p| p.left).collect();
    let rs: BTreeSet<usize> = w.iter().map(|p| p.right).collect();
    let lset: BTreeSet<usize> = left.chars.iter().copied().collect();
    let rset: BTreeSet<usize> = right.chars.iter().copied().collect();
    if ls.len() != w.len() || rs.len() != w.len() || ls != lset || rs != rset {
        return false;
    }
    w.iter().all(|p| {
        verify_pair(
            left,
            right,
            spec,
            p.left,
            p.right,
            if spec.sign_equality {
                Some(&p.signs)
            } else {
                None
            },
        )
    })
}

/// The certificate implies that no bijection exists.
pub fn verify_certificate(
    left: &Side,
    right: &Side,
    spec: &ConstraintSpec,
    c: &Certificate,
) -> bool {
    let lset: BTreeSet<usize> = left.chars.iter().copied().collect();
    let rset: BTreeSet<usize> = right.chars.iter().copied().collect();
    match c {
        Certificate::Cardinality { left: a, right: b } => {
            *a == lset.len() && *b == rset.len() && a != b
        }
        Certificate::ValueSet {
            side, character, ..
        } => match side {
            Part::Left => {
                lset.contains(character)
                    && rset
                        .iter()
                        .all(|&r| !verify_pair(left, right, spec, *character, r, None))
            }
            Part::Right => {
                rset.contains(character)
                    && lset
                        .iter()
                        .all(|&l| !verify_pair(left, right, spec, l, *character, None))
            }
        },
        Certificate::HallViolator { side, subset, .. } => {
            let (own, other) = match side {
                Part::Left => (&lset, &rset),
                Part::Right => (&rset, &lset),
            };
            if !subset.iter().all(|s| own.contains(s)) {
                return false;
            }
            let neighbours: BTreeSet<usize> = other
                .iter()
                .copied()
                .filter(|&o| {
                    subset.iter().any(|&s| match side {
                        Part::Left => verify_pair(left, right, spec, s, o, None),
                        Part::Right => verify_pair(left, right, spec, o, s, None),
                    })
                })
                .collect();
            neighbours.len() < subset.iter().collect::<BTreeSet<_>>().len()
        }
    }
}
