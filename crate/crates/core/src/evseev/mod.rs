//! Induced-character lattices relative to the Sylow normalizer, the signed bijection
//! conditions built on them, and the decomposition of restrictions to a self-normalizing
//! Sylow subgroup.

mod hnf;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

pub use hnf::{CharLattice, Membership};

use crate::chartab::{
    class_fusion, dixon_schneider, induce, restrict, CharacterTable, ClassFusion,
};
use crate::error::{Error, Result};
use crate::matchcheck::hk::{hopcroft_karp, koenig_violator};
use crate::matchcheck::{Certificate, MatchVerdict, Part, WitnessPair};
use crate::numtheory::{is_prime, p_part};
use crate::permgroup::{PermGroup, SylowSystem, SUBGROUP_LIMIT};
use crate::report::{CheckReport, Verdict};

fn contained_in(sylow: &[u32], elems: &[u32]) -> bool {
    elems.iter().all(|e| sylow.binary_search(e).is_ok())
}

/// Whether a set of ambient element indices lies in some Sylow other than the first.
fn in_other_sylow(sys: &SylowSystem, elems: &[u32]) -> bool {
    sys.sylows
        .iter()
        .skip(1)
        .any(|s| contained_in(&s.elements, elems))
}

/// The subgroups of the first Sylow `P` that lie in some `P^t` with `t` outside `N_G(P)`.
pub struct SSet {
    pub sylow: PermGroup,
    /// Each member as sorted ambient element indices, with the number of Sylows containing it.
    pub members: Vec<(Vec<u32>, usize)>,
    /// Number of subgroups of `P` scanned.
    pub scanned: usize,
}

pub fn s_set(group: &PermGroup, p: u64) -> Result<SSet> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let sys = group.sylow_system(p)?;
    let lat = sys.first.subgroups(SUBGROUP_LIMIT)?;
    let mut members = Vec::new();
    let mut flags = vec![false; lat.len()];
    for i in 0..lat.len() {
        let mut elems: Vec<u32> = lat
            .members(i)
            .iter()
            .map(|&e| group.index_of(lat.element(e)))
            .collect::<Result<_>>()?;
        elems.sort_unstable();
        let count = sys
            .sylows
            .iter()
            .filter(|s| contained_in(&s.elements, &elems))
            .count();
        if count >= 2 {
            flags[i] = true;
            members.push((elems, count));
        }
    }
    // downward closed
    for i in 0..lat.len() {
        if !flags[i] {
            continue;
        }
        for j in 0..lat.len() {
            if lat.is_subset(j, i) && !flags[j] {
                return Err(Error::Verification(format!(
                    "non-picky set not closed under subgroups at order {}",
                    lat.order(j)
                )));
            }
        }
    }
    Ok(SSet {
        sylow: sys.first.clone(),
        members,
        scanned: lat.len(),
    })
}

/// One generator `theta^H` of the induced lattice.
#[derive(Clone, Debug, Serialize)]
pub struct InducedGenerator {
    pub subgroup_order: usize,
    pub theta: usize,
    pub coords: Vec<i64>,
    /// Values of `theta^H` on the classes of `H`.
    #[serde(skip)]
    pub values: Vec<crate::cyclotomic::CycNum>,
}

pub struct InducedLattice {
    pub normalizer: CharacterTable,
    pub generators: Vec<InducedGenerator>,
    /// Orders of the qualifying subgroups, one per `H`-class.
    pub qualifying: Vec<usize>,
    pub lattice: CharLattice,
}

fn h_class_reps(lat: &crate::permgroup::SubgroupLattice, h: &PermGroup) -> Vec<usize> {
    let gens: Vec<u32> = h
        .generators()
        .iter()
        .filter_map(|g| (0..h.order() as u32).find(|&e| lat.element(e) == g))
        .collect();
    let mut seen = vec![false; lat.len()];
    let mut reps = Vec::new();
    for i in 0..lat.len() {
        if seen[i] {
            continue;
        }
        reps.push(i);
        seen[i] = true;
        let mut stack = vec![i];
        while let Some(j) = stack.pop() {
            for &g in &gens {
                let k = lat.conjugate(j, g);
                if !seen[k] {
                    seen[k] = true;
                    stack.push(k);
                }
            }
        }
    }
    reps
}

/// The lattice `I(H, P, S)` with `H = N_G(P)`: spanned by `theta^H` for `theta` irreducible
/// on subgroups `L <= H` with `L ∩ P` a Sylow subgroup of `L` lying in a second Sylow of `G`.
pub fn induced_lattice(group: &PermGroup, p: u64) -> Result<InducedLattice> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let sys = group.sylow_system(p)?;
    let h = sys.normalizer.clone();
    let ht = dixon_schneider(&h)?;
    let dim = ht.num_chars();
    let mut generators = Vec::new();
    let mut qualifying = Vec::new();
    if sys.count() > 1 {
        let lat = h.subgroups(SUBGROUP_LIMIT)?;
        for i in h_class_reps(&lat, &h) {
            let mut lp = Vec::new();
            for &e in lat.members(i) {
                let gi = group.index_of(lat.element(e))?;
                if sys.sylows[0].elements.binary_search(&gi).is_ok() {
                    lp.push(gi);
                }
            }
            lp.sort_unstable();
            let order = lat.order(i);
            if lp.len() as u128 != p_part(order as u128, p) || !in_other_sylow(&sys, &lp) {
                continue;
            }
            qualifying.push(order);
            let lt = dixon_schneider(&lat.group(i))?;
            let fusion = class_fusion(&lt, &ht)?;
            for theta in 0..lt.num_chars() {
                let values = induce(&lt.irr[theta], &lt, &ht, &fusion)?;
                let coords = ht.decompose_integral(&values)?;
                generators.push(InducedGenerator {
                    subgroup_order: order,
                    theta,
                    coords,
                    values,
                });
            }
        }
    }
    let rows: Vec<Vec<i64>> = generators.iter().map(|g| g.coords.clone()).collect();
    let lattice = CharLattice::from_i64(dim, &rows)?;
    Ok(InducedLattice {
        normalizer: ht,
        generators,
        qualifying,
        lattice,
    })
}

pub fn membership(v: &[i64], l: &CharLattice) -> Result<bool> {
    l.contains_i64(v)
}

/// Which signed-bijection condition to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IrcVariant {
    /// Differences in the induced lattice alone, on `p'`-degree characters.
    Strict,
    /// Differences in the induced lattice plus the characters of degree divisible by `p`.
    Weak,
    /// Characters not vanishing on the picky elements, with equal degree p-parts; the extra
    /// summand is spanned by such characters of `H` of degree divisible by `p`.
    Picky,
}

impl std::str::FromStr for IrcVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<IrcVariant> {
        match s {
            "strict" | "irc" => Ok(IrcVariant::Strict),
            "weak" | "wirc" => Ok(IrcVariant::Weak),
            "picky" => Ok(IrcVariant::Picky),
            _ => Err(Error::Other(format!("unknown lattice condition {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IrcOutcome {
    pub p: u64,
    pub variant: IrcVariant,
    pub matching: MatchVerdict,
    pub lattice_rank: usize,
    pub generator_count: usize,
    pub qualifying_orders: Vec<usize>,
    /// Every generator vanishes on every picky class of `H`.
    pub generators_vanish_on_picky: bool,
    /// Along the witness, `±psi(x) = chi(x)` at every picky `x`.
    pub picky_values_agree: Option<bool>,
}

/// Picky classes of `H` with their columns in the ambient table.
fn picky_columns(
    t: &CharacterTable,
    ht: &CharacterTable,
    sys: &SylowSystem,
) -> Result<Vec<(usize, usize)>> {
    let g = t.group()?;
    let mut out = Vec::new();
    for (s, c) in ht.classes.iter().enumerate() {
        let rep = c
            .representative
            .as_ref()
            .ok_or_else(|| Error::Precondition("class without representative".into()))?;
        if crate::numtheory::prime_power(c.order).is_some_and(|(q, _)| q == sys.p)
            && sys.containing[g.index_of(rep)? as usize] == 1
        {
            out.push((s, t.column_of(rep)?));
        }
    }
    Ok(out)
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&a| BigInt::from(a)).collect()
}

/// Searches for a signed bijection `F` with `F(chi) - chi_H` in the lattice selected by
/// `variant`. Each `psi` is used once, with one sign.
pub fn check_irc(t: &CharacterTable, p: u64, variant: IrcVariant) -> Result<IrcOutcome> {
    let g = t.group()?;
    let sys = g.sylow_system(p)?;
    let il = induced_lattice(g, p)?;
    let ht = &il.normalizer;
    let fusion = class_fusion(ht, t)?;
    let picky = picky_columns(t, ht, &sys)?;
    let hcols: Vec<usize> = picky.iter().map(|x| x.0).collect();
    let gcols: Vec<usize> = picky.iter().map(|x| x.1).collect();

    let generators_vanish_on_picky = il
        .generators
        .iter()
        .all(|gen| hcols.iter().all(|&s| gen.values[s].is_zero()));

    let (left, right, extra): (Vec<usize>, Vec<usize>, Vec<usize>) = match variant {
        IrcVariant::Strict => (t.p_prime_degree(p), ht.p_prime_degree(p), Vec::new()),
        IrcVariant::Weak => {
            let extra = (0..ht.num_chars())
                .filter(|&i| ht.degree(i) % p as u128 == 0)
                .collect();
            (t.p_prime_degree(p), ht.p_prime_degree(p), extra)
        }
        IrcVariant::Picky => {
            let r = ht.nonvanishing(&hcols);
            let extra = r
                .iter()
                .copied()
                .filter(|&i| ht.degree(i) % p as u128 == 0)
                .collect();
            (t.nonvanishing(&gcols), r, extra)
        }
    };
    let dim = ht.num_chars();
    let units: Vec<Vec<i64>> = extra
        .iter()
        .map(|&i| {
            let mut v = vec![0; dim];
            v[i] = 1;
            v
        })
        .collect();
    let lattice = il.lattice.join(&CharLattice::from_i64(dim, &units)?)?;

    let restrictions: Vec<Vec<i64>> = left
        .iter()
        .map(|&chi| ht.decompose_integral(&restrict(&t.irr[chi], &fusion)))
        .collect::<Result<_>>()?;
    let edge_sign = |lat: &CharLattice, a: usize, b: usize| -> Result<Option<i8>> {
        if variant == IrcVariant::Picky
            && p_part(t.degree(left[a]), p) != p_part(ht.degree(right[b]), p)
        {
            return Ok(None);
        }
        for s in [1i64, -1] {
            let mut v: Vec<i64> = restrictions[a].iter().map(|x| -x).collect();
            v[right[b]] += s;
            if lat.contains(&big(&v))? {
                return Ok(Some(s as i8));
            }
        }
        Ok(None)
    };
    let mut adj = vec![Vec::new(); left.len()];
    for a in 0..left.len() {
        for b in 0..right.len() {
            if edge_sign(&lattice, a, b)?.is_some() {
                adj[a].push(b);
            }
        }
    }

    // rebuilt from the raw generators in reverse order, for rechecking
    let mut raw: Vec<Vec<i64>> = il
        .generators
        .iter()
        .rev()
        .map(|g| g.coords.clone())
        .collect();
    raw.extend(units.iter().cloned());
    let check_lattice = CharLattice::from_i64(dim, &raw)?;

    let mut matching = MatchVerdict {
        status: Verdict::Fails,
        left_size: left.len(),
        right_size: right.len(),
        witness: None,
        certificate: None,
        verified: false,
    };
    let mut picky_values_agree = None;
    if left.len() != right.len() {
        matching.certificate = Some(Certificate::Cardinality {
            left: left.len(),
            right: right.len(),
        });
        matching.verified = true;
    } else {
        let mate = hopcroft_karp(&adj, right.len());
        if mate.iter().all(|m| m.is_some()) {
            let mut pairs = Vec::new();
            let mut ok = true;
            let mut agree = true;
            for (a, m) in mate.iter().enumerate() {
                let b = m.unwrap();
                let s = edge_sign(&check_lattice, a, b)?;
                ok &= s.is_some();
                let s = s.unwrap_or(0);
                for (&hc, &gc) in hcols.iter().zip(&gcols) {
                    let psi = ht.value(right[b], hc).scale_int(s as i64);
                    agree &= &psi == t.value(left[a], gc);
                }
                pairs.push(WitnessPair {
                    left: left[a],
                    right: right[b],
                    signs: vec![s],
                });
            }
            matching.status = Verdict::Holds;
            matching.witness = Some(pairs);
            matching.verified = ok;
            picky_values_agree = Some(agree);
        } else {
            let (subset, nbhd) = koenig_violator(&adj, right.len(), &mate).expect("free vertex");
            let mut nb = BTreeSet::new();
            for &a in &subset {
                for b in 0..right.len() {
                    if edge_sign(&check_lattice, a, b)?.is_some() {
                        nb.insert(b);
                    }
                }
            }
            matching.verified = nb.len() < subset.len();
            matching.certificate = Some(Certificate::HallViolator {
                side: Part::Left,
                subset: subset.iter().map(|&a| left[a]).collect(),
                neighborhood: nbhd.iter().map(|&b| right[b]).collect(),
            });
        }
    }
    Ok(IrcOutcome {
        p,
        variant,
        matching,
        lattice_rank: lattice.rank(),
        generator_count: il.generators.len(),
        qualifying_orders: il.qualifying,
        generators_vanish_on_picky,
        picky_values_agree,
    })
}

pub fn irc_report(t: &CharacterTable, p: u64, variant: IrcVariant) -> Result<CheckReport> {
    let name = match variant {
        IrcVariant::Strict => "irc",
        IrcVariant::Weak => "wirc",
        IrcVariant::Picky => "irc-picky",
    };
    let o = check_irc(t, p, variant)?;
    let mut r = CheckReport::new(name, format!("{} p={p}", t.name));
    r.item(
        "generators vanish on picky elements",
        o.generators_vanish_on_picky,
        format!("{} generators, rank {}", o.generator_count, o.lattice_rank),
    );
    if let Some(a) = o.picky_values_agree {
        r.item("picky values along the bijection", a, "");
    }
    let status = o.matching.status;
    let detail = format!(
        "{} vs {} characters",
        o.matching.left_size, o.matching.right_size
    );
    r.matched("signed bijection", None, status, detail, o.matching);
    Ok(r.finish())
}

/// One `p'`-degree character and the linear character paired with it.
#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub character: usize,
    pub linear: Option<usize>,
    /// Multiplicities, per induced generator, of a nonnegative decomposition of the remainder.
    pub nonnegative: Option<Vec<(usize, u32)>>,
}

/// Searches `target = sum k_i gens[i]` with `0 <= k_i <= cap`.
fn nonnegative_search(target: &[i64], gens: &[Vec<i64>], cap: u32) -> Option<Vec<u32>> {
    fn go(i: usize, t: &mut Vec<i64>, gens: &[Vec<i64>], cap: u32, ks: &mut Vec<u32>) -> bool {
        if t.iter().all(|&x| x == 0) {
            ks.resize(gens.len(), 0);
            return true;
        }
        if i == gens.len() {
            return false;
        }
        // every positive coordinate must still be reachable
        if t.iter()
            .enumerate()
            .any(|(j, &x)| x > 0 && gens[i..].iter().all(|g| g[j] == 0))
        {
            return false;
        }
        let g = &gens[i];
        let max = g
            .iter()
            .zip(t.iter())
            .filter(|(a, _)| **a > 0)
            .map(|(a, b)| (b / a) as u32)
            .min()
            .unwrap_or(0)
            .min(cap);
        for k in (0..=max).rev() {
            for (x, a) in t.iter_mut().zip(g) {
                *x -= k as i64 * a;
            }
            ks.push(k);
            if go(i + 1, t, gens, cap, ks) {
                return true;
            }
            ks.pop();
            for (x, a) in t.iter_mut().zip(g) {
                *x += k as i64 * a;
            }
        }
        false
    }
    if target.iter().any(|&x| x < 0) {
        return None;
    }
    let mut ks = Vec::new();
    go(0, &mut target.to_vec(), gens, cap, &mut ks).then_some(ks)
}

/// For p-solvable `G` with `N_G(P) = P`: each `p'`-degree `chi` restricts to `P` as a linear
/// character plus an element of the lattice induced from non-picky subgroups, and the linear
/// parts give a bijection onto the linear characters of `P`.
pub fn check_self_normalizing_decomposition(
    t: &CharacterTable,
    p: u64,
) -> Result<(CheckReport, Vec<Decomposition>)> {
    let g = t.group()?;
    let target = format!("{} p={p}", t.name);
    let name = "self-normalizing-decomposition";
    if !g.p_series(p)?.p_solvable {
        return Ok((
            CheckReport::skipped(name, target, "group is not p-solvable"),
            Vec::new(),
        ));
    }
    let sys = g.sylow_system(p)?;
    if sys.normalizer.order() != sys.first.order() {
        return Ok((
            CheckReport::skipped(name, target, "Sylow subgroup is not self-normalizing"),
            Vec::new(),
        ));
    }
    let il = induced_lattice(g, p)?;
    let pt = &il.normalizer;
    let fusion: ClassFusion = class_fusion(pt, t)?;
    let linear: Vec<usize> = (0..pt.num_chars()).filter(|&i| pt.degree(i) == 1).collect();
    let chars = t.p_prime_degree(p);
    let coords: Vec<Vec<i64>> = chars
        .iter()
        .map(|&c| pt.decompose_integral(&restrict(&t.irr[c], &fusion)))
        .collect::<Result<_>>()?;

    let mut adj = vec![Vec::new(); chars.len()];
    for (a, c) in coords.iter().enumerate() {
        for (b, &l) in linear.iter().enumerate() {
            let mut v = c.clone();
            v[l] -= 1;
            if il.lattice.contains_i64(&v)? {
                adj[a].push(b);
            }
        }
    }
    let mut r = CheckReport::new(name, target);
    let mate = hopcroft_karp(&adj, linear.len());
    let bijective = chars.len() == linear.len() && mate.iter().all(|m| m.is_some());
    r.item(
        "linear parts form a bijection",
        bijective,
        format!(
            "{} characters, {} linear characters of P",
            chars.len(),
            linear.len()
        ),
    );

    let gens: Vec<Vec<i64>> = {
        let mut seen = BTreeSet::new();
        il.generators
            .iter()
            .map(|g| g.coords.clone())
            .filter(|c| seen.insert(c.clone()))
            .collect()
    };
    let mut out = Vec::new();
    for (a, &chi) in chars.iter().enumerate() {
        let lin = mate[a].map(|b| linear[b]);
        r.item(
            format!("chi{}", chi + 1),
            lin.is_some(),
            match lin {
                Some(l) => format!("linear part lambda{}", l + 1),
                None => "no linear character with remainder in the lattice".to_string(),
            },
        );
        let nonnegative = lin.and_then(|l| {
            let mut v = coords[a].clone();
            v[l] -= 1;
            nonnegative_search(&v, &gens, 10).map(|ks| {
                ks.into_iter()
                    .enumerate()
                    .filter(|(_, k)| *k > 0)
                    .map(|(i, k)| (i, k))
                    .collect()
            })
        });
        if lin.is_some() && nonnegative.is_none() {
            r.findings.push(format!(
                "chi{}: no nonnegative decomposition with coefficients at most 10",
                chi + 1
            ));
        }
        out.push(Decomposition {
            character: chi,
            linear: lin,
            nonnegative,
        });
    }
    Ok((r.finish(), out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::named::{alternating, cyclic, dihedral, symmetric};

    #[test]
    fn s_set_examples() {
        let a5 = alternating(5);
        let s = s_set(&a5, 2).unwrap();
        assert_eq!(s.members.len(), 1);
        assert_eq!(s.members[0].0.len(), 1);
        // S4, p=2: trivial, the three subgroups of order 2 in V4, and V4 itself
        let s4 = symmetric(4);
        let s = s_set(&s4, 2).unwrap();
        let mut orders: Vec<usize> = s.members.iter().map(|m| m.0.len()).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 2, 2, 4]);
        assert!(s
            .members
            .iter()
            .filter(|m| m.0.len() == 4)
            .all(|m| m.1 == 3));
        assert!(s_set(&cyclic(8), 2).unwrap().members.is_empty());
    }

    #[test]
    fn lattice_examples() {
        let l = induced_lattice(&alternating(5), 2).unwrap();
        let mut q = l.qualifying.clone();
        q.sort();
        assert_eq!(q, vec![1, 3]);
        assert!(
            induced_lattice(&dihedral(8).unwrap(), 2)
                .unwrap()
                .lattice
                .rank()
                == 0
        );
        let l = induced_lattice(&symmetric(4), 2).unwrap();
        assert_eq!(l.normalizer.order, 8);
        assert!(l.qualifying.iter().all(|&o| o <= 4));
    }

    #[test]
    fn irc_examples() {
        let s4 = dixon_schneider(&symmetric(4)).unwrap();
        let o = check_irc(&s4, 2, IrcVariant::Strict).unwrap();
        assert!(o.matching.holds() && o.matching.verified);
        assert!(o.generators_vanish_on_picky);
        assert_eq!(o.picky_values_agree, Some(true));
        let d8 = dixon_schneider(&dihedral(8).unwrap()).unwrap();
        let o = check_irc(&d8, 2, IrcVariant::Strict).unwrap();
        assert!(o.matching.holds());
        assert!(o
            .matching
            .witness
            .unwrap()
            .iter()
            .all(|w| w.left == w.right && w.signs == vec![1]));
        let a5 = dixon_schneider(&alternating(5)).unwrap();
        let o = check_irc(&a5, 2, IrcVariant::Strict).unwrap();
        assert_eq!((o.matching.left_size, o.matching.right_size), (4, 4));
        assert!(o.matching.verified);
        assert!(o.generators_vanish_on_picky);
    }

    #[test]
    fn decomposition_examples() {
        let s4 = dixon_schneider(&symmetric(4)).unwrap();
        let (r, d) = check_self_normalizing_decomposition(&s4, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "{r:?}");
        let lin: BTreeSet<usize> = d.iter().filter_map(|x| x.linear).collect();
        assert_eq!((d.len(), lin.len()), (4, 4));
        assert!(d.iter().all(|x| x.nonnegative.is_some()));
        let d8 = dixon_schneider(&dihedral(8).unwrap()).unwrap();
        let (r, d) = check_self_normalizing_decomposition(&d8, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(d.iter().all(|x| x.linear == Some(x.character)
            && x.nonnegative.as_ref().is_some_and(|v| v.is_empty())));
        let s3 = dixon_schneider(&symmetric(3)).unwrap();
        assert_eq!(
            check_self_normalizing_decomposition(&s3, 3)
                .unwrap()
                .0
                .verdict,
            Verdict::Skipped
        );
    }

    #[test]
    fn nonnegative_search_small() {
        let gens = vec![vec![1, 1, 0], vec![0, 1, 1]];
        assert_eq!(nonnegative_search(&[2, 3, 1], &gens, 10), Some(vec![2, 1]));
        assert_eq!(nonnegative_search(&[1, 0, 1], &gens, 10), None);
    }
}
