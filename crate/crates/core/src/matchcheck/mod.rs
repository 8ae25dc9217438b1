//! Bijections between sets of characters subject to per-pair constraints, found by
//! maximum matching, with witnesses and failure certificates that are rechecked
//! independently.

mod checks;
pub mod hk;
mod verify;

use num_bigint::BigInt;
use serde::Serialize;

pub use checks::*;
pub use hk::{hopcroft_karp, koenig_violator};
pub use verify::{verify_certificate, verify_pair, verify_witness};

use crate::chartab::CharacterTable;
use crate::cyclotomic::{same_field, CycNum, PPart};
use crate::numtheory::pi_prime_part;
use crate::report::Verdict;

/// Which conditions a pair `(chi, psi)` must satisfy at every evaluation element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConstraintSpec {
    /// Equal π-parts of degrees for these primes; empty disables the condition.
    pub degree_primes: Vec<u64>,
    pub field_equality: bool,
    /// `psi(g) = ±chi(g)`.
    pub sign_equality: bool,
    /// One sign per pair across all evaluation elements.
    pub uniform_sign: bool,
    /// Equal p-parts of values.
    pub value_p_part: Option<u64>,
    /// `chi(g) = 0` iff `psi(g) = 0`.
    pub vanishing_pattern: bool,
    /// `chi(1) ≡ ±psi(1) (mod p)`.
    pub degree_congruence: Option<u64>,
    /// The congruence sign equals the value sign.
    pub linked_signs: bool,
}

impl ConstraintSpec {
    pub fn picky(p: u64) -> ConstraintSpec {
        ConstraintSpec {
            degree_primes: vec![p],
            field_equality: true,
            ..Default::default()
        }
    }

    pub fn strong(p: u64) -> ConstraintSpec {
        ConstraintSpec {
            degree_primes: vec![p],
            sign_equality: true,
            ..Default::default()
        }
    }

    /// Signed equality forces equal fields and equal zero patterns.
    pub fn normalized(mut self) -> ConstraintSpec {
        if self.sign_equality {
            self.field_equality = false;
            self.vanishing_pattern = false;
        }
        if self.linked_signs {
            self.uniform_sign = true;
        }
        self.degree_primes.sort_unstable();
        self.degree_primes.dedup();
        self
    }

    /// The same spec with signed equality relaxed to field equality.
    pub fn relaxed(&self) -> ConstraintSpec {
        let mut s = self.clone();
        if s.sign_equality {
            s.sign_equality = false;
            s.uniform_sign = false;
            s.linked_signs = false;
            s.field_equality = true;
            s.vanishing_pattern = true;
        }
        s
    }
}

/// One side of a matching problem: a set of characters of a table, evaluated at columns
/// that correspond position by position to the other side's columns.
#[derive(Clone, Debug)]
pub struct Side<'a> {
    pub table: &'a CharacterTable,
    pub chars: Vec<usize>,
    pub columns: Vec<usize>,
}

impl<'a> Side<'a> {
    pub fn new(table: &'a CharacterTable, chars: Vec<usize>, columns: Vec<usize>) -> Side<'a> {
        Side {
            table,
            chars,
            columns,
        }
    }

    /// All characters not vanishing at some column.
    pub fn nonvanishing(table: &'a CharacterTable, columns: Vec<usize>) -> Side<'a> {
        let chars = table.nonvanishing(&columns);
        Side {
            table,
            chars,
            columns,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    Cardinality {
        left: usize,
        right: usize,
    },
    /// A character compatible with nothing on the other side.
    ValueSet {
        side: Part,
        character: usize,
        degree_part: String,
        values: Vec<String>,
        opposite_values: Vec<String>,
    },
    /// A set on one side whose joint neighbourhood is smaller.
    HallViolator {
        side: Part,
        subset: Vec<usize>,
        neighborhood: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    pub left: usize,
    pub right: usize,
    /// Sign per evaluation element, 0 where both values vanish; empty unless signs are required.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub signs: Vec<i8>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatchVerdict {
    pub status: Verdict,
    pub left_size: usize,
    pub right_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<WitnessPair>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    /// The witness or certificate passed the independent verifier.
    pub verified: bool,
}

impl MatchVerdict {
    pub fn holds(&self) -> bool {
        self.status == Verdict::Holds
    }
}

fn pi_part(d: &BigInt, primes: &[u64]) -> u128 {
    let d: u128 = d.try_into().unwrap_or(u128::MAX);
    d / pi_prime_part(d, primes)
}

/// Degree and values of a character at the evaluation elements.
struct Profile {
    degree: BigInt,
    degree_part: u128,
    values: Vec<CycNum>,
    parts: Vec<Option<PPart>>,
}

fn profiles(side: &Side, spec: &ConstraintSpec) -> Vec<Profile> {
    side.chars
        .iter()
        .map(|&chi| {
            let degree = side.table.value(chi, 0).as_integer().unwrap_or_default();
            let values: Vec<CycNum> = side
                .columns
                .iter()
                .map(|&c| side.table.value(chi, c).clone())
                .collect();
            let parts = match spec.value_p_part {
                Some(p) => values
                    .iter()
                    .map(|v| {
                        if v.is_zero() {
                            None
                        } else {
                            v.value_p_part(p).ok()
                        }
                    })
                    .collect(),
                None => Vec::new(),
            };
            Profile {
                degree_part: pi_part(&degree, &spec.degree_primes),
                degree,
                values,
                parts,
            }
        })
        .collect()
}

fn congruent(a: &BigInt, b: &BigInt, p: u64, sign: i8) -> bool {
    let p = BigInt::from(p);
    let d = if sign >= 0 { a - b } else { a + b };
    (d % &p) == BigInt::from(0)
}

/// Signs witnessing compatibility, or `None`.
fn compatible(l: &Profile, r: &Profile, spec: &ConstraintSpec) -> Option<Vec<i8>> {
    if !spec.degree_primes.is_empty() && l.degree_part != r.degree_part {
        return None;
    }
    let n = l.values.len();
    for i in 0..n {
        let (a, b) = (&l.values[i], &r.values[i]);
        if spec.vanishing_pattern && a.is_zero() != b.is_zero() {
            return None;
        }
        if spec.field_equality && !same_field(a, b) {
            return None;
        }
        if spec.value_p_part.is_some() && l.parts[i] != r.parts[i] {
            return None;
        }
    }
    if let Some(p) = spec.degree_congruence {
        if !spec.linked_signs
            && !congruent(&l.degree, &r.degree, p, 1)
            && !congruent(&l.degree, &r.degree, p, -1)
        {
            return None;
        }
    }
    if !spec.sign_equality {
        return Some(Vec::new());
    }
    // possible signs per element: bit 0 for +, bit 1 for -
    let mut allowed_all = 3u8;
    let mut per = Vec::with_capacity(n);
    for i in 0..n {
        let (a, b) = (&l.values[i], &r.values[i]);
        let mut m = 0u8;
        if a == b {
            m |= 1;
        }
        if *a == -b {
            m |= 2;
        }
        if m == 0 {
            return None;
        }
        per.push(m);
        allowed_all &= m;
    }
    if spec.linked_signs {
        let p = spec.degree_congruence.unwrap_or(1);
        if !congruent(&l.degree, &r.degree, p, 1) {
            allowed_all &= !1;
        }
        if !congruent(&l.degree, &r.degree, p, -1) {
            allowed_all &= !2;
        }
    }
    if spec.uniform_sign {
        if allowed_all == 0 {
            return None;
        }
        let s: i8 = if allowed_all & 1 != 0 { 1 } else { -1 };
        return Some(per.iter().map(|&m| if m == 3 { 0 } else { s }).collect());
    }
    Some(
        per.iter()
            .map(|&m| {
                if m == 3 {
                    0
                } else if m == 1 {
                    1
                } else {
                    -1
                }
            })
            .collect(),
    )
}

/// Searches for a bijection between the two sides under `spec`.
///
/// Characters are taken in ascending index order regardless of input order, so the result
/// is a function of the sets.
pub fn find_bijection(left: &Side, right: &Side, spec: &ConstraintSpec) -> MatchVerdict {
    let spec = spec.clone().normalized();
    let mut left = left.clone();
    let mut right = right.clone();
    left.chars.sort_unstable();
    left.chars.dedup();
    right.chars.sort_unstable();
    right.chars.dedup();
    let (nl, nr) = (left.chars.len(), right.chars.len());
    let finish =
        |status: Verdict, witness: Option<Vec<WitnessPair>>, certificate: Option<Certificate>| {
            let verified = match (&witness, &certificate) {
                (Some(w), _) => verify_witness(&left, &right, &spec, w),
                (None, Some(c)) => verify_certificate(&left, &right, &spec, c),
                _ => false,
            };
            MatchVerdict {
                status,
                left_size: nl,
                right_size: nr,
                witness,
                certificate,
                verified,
            }
        };
    if nl != nr {
        return finish(
            Verdict::Fails,
            None,
            Some(Certificate::Cardinality {
                left: nl,
                right: nr,
            }),
        );
    }
    let lp = profiles(&left, &spec);
    let rp = profiles(&right, &spec);
    let mut signs = vec![vec![None; nr]; nl];
    let mut adj = vec![Vec::new(); nl];
    let mut radj = vec![Vec::new(); nr];
    for i in 0..nl {
        for j in 0..nr {
            if let Some(s) = compatible(&lp[i], &rp[j], &spec) {
                signs[i][j] = Some(s);
                adj[i].push(j);
                radj[j].push(i);
            }
        }
    }
    let describe = |p: &Profile| p.values.iter().map(|v| v.to_string()).collect::<Vec<_>>();
    let isolated = |side: Part, k: usize, own: &[Profile], other: &[Profile]| {
        let mut opp: Vec<String> = other
            .iter()
            .filter(|o| o.degree_part == own[k].degree_part)
            .map(|o| describe(o).join(", "))
            .collect();
        opp.sort();
        opp.dedup();
        let character = if side == Part::Left {
            left.chars[k]
        } else {
            right.chars[k]
        };
        Certificate::ValueSet {
            side,
            character,
            degree_part: own[k].degree_part.to_string(),
            values: describe(&own[k]),
            opposite_values: opp,
        }
    };
    if let Some(i) = (0..nl).find(|&i| adj[i].is_empty()) {
        return finish(
            Verdict::Fails,
            None,
            Some(isolated(Part::Left, i, &lp, &rp)),
        );
    }
    if let Some(j) = (0..nr).find(|&j| radj[j].is_empty()) {
        return finish(
            Verdict::Fails,
            None,
            Some(isolated(Part::Right, j, &rp, &lp)),
        );
    }
    let mate = hopcroft_karp(&adj, nr);
    if mate.iter().all(|m| m.is_some()) {
        let witness = mate
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let j = m.unwrap();
                WitnessPair {
                    left: left.chars[i],
                    right: right.chars[j],
                    signs: signs[i][j].clone().unwrap(),
                }
            })
            .collect();
        return finish(Verdict::Holds, Some(witness), None);
    }
    let (s, n) = koenig_violator(&adj, nr, &mate).expect("free left vertex");
    let cert = Certificate::HallViolator {
        side: Part::Left,
        subset: s.iter().map(|&i| left.chars[i]).collect(),
        neighborhood: n.iter().map(|&j| right.chars[j]).collect(),
    };
    finish(Verdict::Fails, None, Some(cert))
}
