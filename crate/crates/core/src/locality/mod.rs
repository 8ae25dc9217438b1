//! Picky elements, subnormalizers, Casolo's count, fusion control, sections and
//! value fields.

pub mod hall;
pub mod sections;
pub mod semilattice;
pub mod subnormal;

use serde::Serialize;

pub use hall::{find_nilpotent_hall, h_picky, is_hall, is_nilpotent};
pub use sections::{canonical_sylow, section_reps, Sections};
pub use semilattice::{semilattice_fiber_verify, FiberReport, MeetSemilattice};
pub use subnormal::{
    is_subnormalizing, subgroup_generated, subnormalizer_set, sylow_normalizer_join,
};

use crate::chartab::{
    class_fusion, dixon_schneider, p_blocks, permutation_character, CharacterTable,
};
use crate::cyclotomic::{same_field_of_sets, CycNum};
use crate::error::{Error, Result};
use crate::numtheory::{p_part, prime_factors};
use crate::permgroup::{element_parts, Perm, PermGroup};
use crate::report::CheckReport;
use sections::check_p_element;

/// Number of Sylow p-subgroups containing the p-element `x`.
pub fn lambda_count(group: &PermGroup, p: u64, x: &Perm) -> Result<u64> {
    check_p_element(x, p)?;
    let sys = group.sylow_system(p)?;
    Ok(sys.sylows_containing(group.index_of(x)?).len() as u64)
}

pub fn is_picky(group: &PermGroup, p: u64, x: &Perm) -> Result<bool> {
    Ok(lambda_count(group, p, x)? == 1)
}

/// Representatives, up to `N_G(P)`-conjugacy, of the picky elements of the first Sylow `P`.
pub fn picky_reps(group: &PermGroup, p: u64) -> Result<Vec<Perm>> {
    let sys = group.sylow_system(p)?;
    let en = group.enumeration()?;
    let picky: Vec<u32> = sys.sylows[0]
        .elements
        .iter()
        .copied()
        .filter(|&e| sys.containing[e as usize] == 1)
        .collect();
    let reps = group.conjugation_orbit_reps(&picky, &sys.normalizer)?;
    Ok(reps
        .into_iter()
        .map(|i| en.elements()[i as usize].clone())
        .collect())
}

/// `S_G(x)` as membership flags over the enumeration, and `Sub_G(x)`.
///
/// When `p` is given, `x` must be a p-element and `Sub_G(x)` is also computed as the join
/// of the normalizers of the Sylow subgroups containing `x`; the two must agree.
pub fn subnormalizer(
    group: &PermGroup,
    x: &Perm,
    p: Option<u64>,
) -> Result<(Vec<bool>, PermGroup)> {
    let set = subnormalizer_set(group, x)?;
    let sub = subgroup_generated(group, &set)?;
    if let Some(p) = p {
        check_p_element(x, p)?;
        let joined = sylow_normalizer_join(group, p, x)?;
        if !joined.same_as(&sub) {
            return Err(Error::Verification(format!(
                "subnormalizer of {x}: generated set has order {}, Sylow normalizers generate order {}",
                sub.order(),
                joined.order()
            )));
        }
    }
    Ok((set, sub))
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalityProfile {
    pub element: String,
    pub p: u64,
    pub sylow_index: usize,
    pub lambda: u64,
    pub is_picky: bool,
    /// `|S_G(x)|`; `None` beyond the enumeration limit.
    pub subnormalizer_size: Option<u128>,
    pub sub_order: u128,
    #[serde(skip)]
    pub sub: PermGroup,
    #[serde(skip)]
    pub sections: Option<Sections>,
}

pub fn profile(group: &PermGroup, p: u64, x: &Perm) -> Result<LocalityProfile> {
    let lambda = lambda_count(group, p, x)?;
    let (sylow_index, _) = canonical_sylow(group, p, x)?;
    let (size, sub) = if group.is_enumerable() {
        let (set, sub) = subnormalizer(group, x, Some(p))?;
        (Some(set.iter().filter(|&&b| b).count() as u128), sub)
    } else {
        (None, sylow_normalizer_join(group, p, x)?)
    };
    let sections = if group.is_enumerable() {
        Some(section_reps(group, p, x)?)
    } else {
        None
    };
    Ok(LocalityProfile {
        element: x.to_cycle_string(),
        p,
        sylow_index,
        lambda,
        is_picky: lambda == 1,
        subnormalizer_size: size,
        sub_order: sub.order(),
        sub,
        sections,
    })
}

fn rep(t: &CharacterTable, c: usize) -> Result<&Perm> {
    t.classes[c].representative.as_ref().ok_or_else(|| {
        Error::Precondition(format!("class {} has no representative", t.classes[c].name))
    })
}

fn target(t: &CharacterTable, p: u64) -> String {
    format!("{} p={p}", t.name)
}

/// `|S_G(x)| = lambda_G(x) |N_G(P)|`, `lambda_G(x) = (1_N)^G(x)`, the two routes to
/// `Sub_G(x)`, and the containments between them, for every p-element class.
pub fn casolo_verify(t: &CharacterTable, p: u64) -> Result<CheckReport> {
    let g = t.group()?;
    let mut r = CheckReport::new("casolo", target(t, p));
    let sys = g.sylow_system(p)?;
    let n = &sys.normalizer;
    let nt = dixon_schneider(n)?;
    let fusion = class_fusion(&nt, t)?;
    let perm_char = permutation_character(&nt, t, &fusion)?;
    let mut classes = vec![0usize];
    classes.extend(t.p_element_classes(p));
    for c in classes {
        let x = rep(t, c)?;
        let label = t.classes[c].name.clone();
        let lambda = lambda_count(g, p, x)?;
        let pc = perm_char[c].as_i64();
        r.item(
            format!("{label} permutation character"),
            pc == Some(lambda as i64),
            format!("lambda {lambda}, (1_N)^G {}", perm_char[c]),
        );
        let (set, sub) = subnormalizer(g, x, Some(p))?;
        let size = set.iter().filter(|&&b| b).count() as u128;
        r.item(
            format!("{label} count"),
            size == lambda as u128 * n.order(),
            format!("|S| {size}, lambda {lambda}, |N| {}", n.order()),
        );
        let (i, _) = canonical_sylow(g, p, x)?;
        let np = sys.normalizer_of(i);
        let c_x = g.centralizer(x)?;
        let contains = np.is_subgroup_of(&sub) && c_x.is_subgroup_of(&sub);
        r.item(
            format!("{label} containments"),
            contains,
            format!("|Sub| {}", sub.order()),
        );
        r.item(
            format!("{label} picky iff Sub = N"),
            (lambda == 1) == sub.same_as(&np),
            format!("lambda {lambda}"),
        );
    }
    Ok(r.finish())
}

/// Only the two routes to `Sub_G(x)`, for every p-element class.
pub fn subnormalizer_routes_verify(t: &CharacterTable, p: u64) -> Result<CheckReport> {
    let g = t.group()?;
    let mut r = CheckReport::new("subnormalizer-routes", target(t, p));
    for c in t.p_element_classes(p) {
        let x = rep(t, c)?;
        let joined = sylow_normalizer_join(g, p, x)?;
        if !g.is_enumerable() {
            r.notes.push(format!(
                "{}: beyond enumeration, Sylow normalizer route only",
                t.classes[c].name
            ));
            continue;
        }
        let set = subnormalizer_set(g, x)?;
        let sub = subgroup_generated(g, &set)?;
        r.item(
            t.classes[c].name.clone(),
            sub.same_as(&joined),
            format!("orders {} and {}", sub.order(), joined.order()),
        );
    }
    Ok(r.finish())
}

#[derive(Clone, Debug, Serialize)]
pub struct SubFusion {
    pub sub_order: u128,
    /// Number of `Sub_G(x)`-classes in `x^G ∩ Sub_G(x)`.
    pub sub_classes: usize,
    /// For mixed-order `x`: `Sub_G(x) <= Sub_G(x_q)` for every prime `q | o(x)`.
    pub within_prime_parts: bool,
}

/// Splitting of `x^G ∩ Sub_G(x)` into `Sub_G(x)`-classes, computed by the definition route.
pub fn sub_fusion(group: &PermGroup, x: &Perm) -> Result<SubFusion> {
    let set = subnormalizer_set(group, x)?;
    let sub = subgroup_generated(group, &set)?;
    let cls = group.class_structure()?;
    let en = group.enumeration()?;
    let cx = group.class_of(x)?;
    let inside: Vec<u32> = cls.members[cx]
        .iter()
        .copied()
        .filter(|&i| sub.contains(&en.elements()[i as usize]))
        .collect();
    let sub_classes = group.conjugation_orbit_reps(&inside, &sub)?.len();
    let mut within = true;
    let primes = prime_factors(x.order());
    if primes.len() > 1 {
        for q in primes {
            let (xq, _, _) = element_parts(x, q);
            let sq = subgroup_generated(group, &subnormalizer_set(group, &xq)?)?;
            within &= sub.is_subgroup_of(&sq);
        }
    }
    Ok(SubFusion {
        sub_order: sub.order(),
        sub_classes,
        within_prime_parts: within,
    })
}

/// Picky fusion is controlled by `N_G(P)`, and `x^G ∩ Sub_G(x)` is one `Sub_G(x)`-class for
/// every p-element. Mixed-order classes with nontrivial p-part are tested as well; their
/// splitting is a finding.
pub fn fusion_control_verify(t: &CharacterTable, p: u64) -> Result<CheckReport> {
    let g = t.group()?;
    let mut r = CheckReport::new("fusion-control", target(t, p));
    let sys = g.sylow_system(p)?;
    let en = g.enumeration()?;
    let cls = g.class_structure()?;
    let first = &sys.sylows[0].elements;
    for x in picky_reps(g, p)? {
        let cx = g.class_of(&x)?;
        let in_p: Vec<u32> = first
            .iter()
            .copied()
            .filter(|&e| cls.class_of[e as usize] as usize == cx)
            .collect();
        let n_classes = g.conjugation_orbit_reps(&in_p, &sys.normalizer)?.len();
        r.item(
            format!("picky {x}"),
            n_classes == 1,
            format!(
                "x^G ∩ P has {} elements in {n_classes} N-classes",
                in_p.len()
            ),
        );
    }
    for c in t.p_element_classes(p) {
        let x = rep(t, c)?;
        let f = sub_fusion(g, x)?;
        r.item(
            format!("{} in Sub", t.classes[c].name),
            f.sub_classes == 1,
            format!("|Sub| {}, {} classes", f.sub_order, f.sub_classes),
        );
    }
    for c in 1..t.num_classes() {
        let o = t.classes[c].order;
        if o % p != 0 || p_part(o as u128, p) == o as u128 {
            continue;
        }
        let x = rep(t, c)?;
        let f = sub_fusion(g, x)?;
        if f.sub_classes != 1 {
            r.findings.push(format!(
                "mixed-order class {} splits into {} Sub-classes (|Sub| {})",
                t.classes[c].name, f.sub_classes, f.sub_order
            ));
        }
        if !f.within_prime_parts {
            r.item(
                format!("{} within prime parts", t.classes[c].name),
                false,
                "Sub(x) not contained in Sub(x_q)",
            );
        }
    }
    let _ = en;
    Ok(r.finish())
}

/// `o(x)^2 >= p^k` for picky x in a p-solvable group of p-length k; the bound `o(x) >= p^k` is a finding.
pub fn rae_verify(group: &PermGroup, p: u64) -> Result<CheckReport> {
    let series = group.p_series(p)?;
    if !series.p_solvable {
        return Err(Error::Precondition(format!("group is not {p}-solvable")));
    }
    let k = series.p_length as u32;
    let mut r = CheckReport::new("rae", format!("p={p} p-length {k}"));
    let pk = (p as u128).pow(k);
    for x in picky_reps(group, p)? {
        let o = x.order() as u128;
        r.item(
            format!("{x}"),
            o * o >= pk,
            format!("o(x) = {o}, p^k = {pk}"),
        );
        if o < pk {
            r.findings.push(format!("{x}: o(x) = {o} < p^k = {pk}"));
        }
    }
    Ok(r.finish())
}

fn column(t: &CharacterTable, c: usize) -> Vec<CycNum> {
    (0..t.num_chars()).map(|i| t.value(i, c).clone()).collect()
}

/// `Q(chi(x) : chi in Irr(G)) = Q(psi(x) : psi in Irr(Sub_G(x)))` for every p-element class,
/// and matching rational/real status with `N_G(P)` at picky classes.
pub fn value_field_verify(t: &CharacterTable, p: u64) -> Result<CheckReport> {
    let g = t.group()?;
    let mut r = CheckReport::new("value-field", target(t, p));
    for c in t.p_element_classes(p) {
        let x = rep(t, c)?;
        let sub = sylow_normalizer_join(g, p, x)?;
        let st = if sub.same_as(g) {
            t.clone()
        } else {
            dixon_schneider(&sub)?
        };
        let gv = column(t, c);
        let sv = column(&st, st.column_of(x)?);
        let label = t.classes[c].name.clone();
        r.item(
            format!("{label} field"),
            same_field_of_sets(&gv, &sv),
            String::new(),
        );
        if lambda_count(g, p, x)? == 1 {
            let rational = |v: &[CycNum]| v.iter().all(|a| a.is_rational());
            let real = |v: &[CycNum]| v.iter().all(|a| a.is_real());
            r.item(
                format!("{label} rational/real"),
                rational(&gv) == rational(&sv) && real(&gv) == real(&sv),
                format!("G rational {}, real {}", rational(&gv), real(&gv)),
            );
        }
    }
    Ok(r.finish())
}

/// `lambda_G(x) |N_G(P)| = |C_G(x)| |x^G ∩ P|` for every p-element class.
pub fn lambda_formula_verify(t: &CharacterTable, p: u64) -> Result<CheckReport> {
    let g = t.group()?;
    let mut r = CheckReport::new("lambda-formula", target(t, p));
    let sys = g.sylow_system(p)?;
    let cls = g.class_structure()?;
    for c in t.p_element_classes(p) {
        let x = rep(t, c)?;
        let gc = g.class_of(x)?;
        let meet = sys.sylows[0]
            .elements
            .iter()
            .filter(|&&e| cls.class_of[e as usize] as usize == gc)
            .count() as u128;
        let lambda = lambda_count(g, p, x)? as u128;
        let cx = g.order() / cls.classes[gc].size;
        r.item(
            t.classes[c].name.clone(),
            lambda * sys.normalizer.order() == cx * meet,
            format!(
                "lambda {lambda}, |C| {cx}, |x^G ∩ P| {meet}, |N| {}",
                sys.normalizer.order()
            ),
        );
    }
    Ok(r.finish())
}

/// Characters in blocks whose defect groups are not Sylow vanish at every picky element.
pub fn block_vanishing_verify(t: &CharacterTable, p: u64) -> Result<CheckReport> {
    let g = t.group()?;
    let mut r = CheckReport::new("block-vanishing", target(t, p));
    let blocks = p_blocks(t, p, 0, false)?;
    let picky = picky_reps(g, p)?;
    for x in &picky {
        let c = t.column_of(x)?;
        for (b, block) in blocks.blocks.iter().enumerate() {
            if blocks.is_full_defect(b, t.order) {
                continue;
            }
            let bad: Vec<usize> = block
                .characters
                .iter()
                .copied()
                .filter(|&chi| !t.value(chi, c).is_zero())
                .collect();
            r.item(
                format!("{} block {b}", t.classes[c].name),
                bad.is_empty(),
                format!("defect {}, nonvanishing {bad:?}", block.defect),
            );
        }
    }
    Ok(r.finish())
}

/// Whether `Irr^{R_p(x)}(G) = Irr^x(G)`; measured, not assumed.
pub fn reduced_section_coincides(t: &CharacterTable, p: u64, x: &Perm) -> Result<bool> {
    let s = section_reps(t.group()?, p, x)?;
    let cols: Vec<usize> = s
        .reduced
        .iter()
        .map(|y| t.column_of(y))
        .collect::<Result<_>>()?;
    Ok(t.nonvanishing(&cols) == t.nonvanishing(&[t.column_of(x)?]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::named::{alternating, cyclic, symmetric};

    fn p(deg: usize, s: &str) -> Perm {
        Perm::parse_cycles(deg, s, 1).unwrap()
    }

    #[test]
    fn lambda_examples() {
        let s4 = symmetric(4);
        assert_eq!(lambda_count(&s4, 2, &p(4, "(1,2,3,4)")).unwrap(), 1);
        assert_eq!(lambda_count(&s4, 2, &p(4, "(1,2)(3,4)")).unwrap(), 3);
        assert!(lambda_count(&s4, 2, &p(4, "(1,2,3)")).is_err());
        let a5 = alternating(5);
        assert!(is_picky(&a5, 5, &p(5, "(1,2,3,4,5)")).unwrap());
        assert!(is_picky(&a5, 2, &p(5, "(1,2)(3,4)")).unwrap());
        let c6 = cyclic(6);
        assert!(is_picky(&c6, 3, &c6.generators()[0].pow(2)).unwrap());
    }

    #[test]
    fn s4_picky_reps() {
        let reps = picky_reps(&symmetric(4), 2).unwrap();
        let mut orders: Vec<u64> = reps.iter().map(|x| x.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 4]);
    }

    #[test]
    fn s4_profiles_and_checks() {
        let s4 = symmetric(4);
        let prof = profile(&s4, 2, &p(4, "(1,2,3,4)")).unwrap();
        assert!(prof.is_picky);
        assert_eq!(prof.sub_order, 8);
        assert_eq!(prof.subnormalizer_size, Some(8));
        let t = dixon_schneider(&s4).unwrap();
        for q in [2, 3] {
            assert!(casolo_verify(&t, q).unwrap().passed());
            assert!(lambda_formula_verify(&t, q).unwrap().passed());
            assert!(fusion_control_verify(&t, q).unwrap().passed());
            assert!(value_field_verify(&t, q).unwrap().passed());
            assert!(block_vanishing_verify(&t, q).unwrap().passed());
        }
        let rae = rae_verify(&s4, 2).unwrap();
        assert!(rae.passed());
        // transpositions have order 2 < 2^2
        assert_eq!(rae.findings.len(), 1);
    }

    #[test]
    fn central_element_subnormalizes_everything() {
        let c6 = cyclic(6);
        let x = c6.generators()[0].pow(3);
        let (set, sub) = subnormalizer(&c6, &x, Some(2)).unwrap();
        assert!(set.iter().all(|&b| b));
        assert_eq!(sub.order(), 6);
    }
}
