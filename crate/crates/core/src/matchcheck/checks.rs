//! One checker per statement, each producing a report.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Serialize;

use super::{find_bijection, ConstraintSpec, MatchVerdict, Side};
use crate::chartab::{dixon_schneider, p_blocks, CharacterTable};
use crate::cyclotomic::{same_field_of_sets, CycNum};
use crate::error::{Error, Result};
use crate::locality::{
    find_nilpotent_hall, h_picky, is_hall, is_nilpotent, is_picky, picky_reps, section_reps,
    subgroup_generated, subnormalizer_set, sylow_normalizer_join,
};
use crate::numtheory::{p_part, pi_prime_part, prime_factors};
use crate::permgroup::{element_parts, Perm, PermGroup};
use crate::report::{CheckReport, Verdict};

/// Characters not vanishing at some class of `classes`.
pub fn nonvanishing_set(t: &CharacterTable, classes: &[usize]) -> Vec<usize> {
    t.nonvanishing(classes)
}

fn target(t: &CharacterTable, p: u64) -> String {
    format!("{} p={p}", t.name)
}

fn class_label(t: &CharacterTable, c: usize) -> String {
    t.classes[c].name.clone()
}

/// A table of a subgroup, reusing the ambient table when the subgroup is everything.
fn table_of(t: &CharacterTable, h: &PermGroup) -> Result<CharacterTable> {
    let g = t.group()?;
    if h.same_as(g) {
        return Ok(t.clone());
    }
    dixon_schneider(h)
}

/// Runs the strong spec and, when it fails, the relaxed spec to tell the two failures apart.
fn strong_status(left: &Side, right: &Side, spec: &ConstraintSpec) -> (Verdict, MatchVerdict) {
    let m = find_bijection(left, right, spec);
    if m.holds() || !spec.sign_equality {
        return (m.status, m);
    }
    let weak = find_bijection(left, right, &spec.relaxed());
    if weak.holds() {
        (Verdict::HoldsNonstrictOnly, m)
    } else {
        (Verdict::Fails, m)
    }
}

/// `Irr_{p'}(G) ⊆ Irr^x(G)` for every p-element class.
pub fn pprime_containment_verify(t: &CharacterTable, p: u64) -> CheckReport {
    let mut r = CheckReport::new("pprime-nonvanishing", target(t, p));
    let pp = t.p_prime_degree(p);
    for c in t.p_element_classes(p) {
        let nv = t.nonvanishing(&[c]);
        let missing: Vec<usize> = pp.iter().copied().filter(|i| !nv.contains(i)).collect();
        r.item(
            class_label(t, c),
            missing.is_empty(),
            format!("p'-degree characters vanishing: {missing:?}"),
        );
    }
    r.finish()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PickyMode {
    A,
    StrongA,
    Global,
    StrongGlobal,
    /// Condition (1) plus equal p-parts of the values.
    ValuePPart,
}

impl FromStr for PickyMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<PickyMode> {
        Ok(match s {
            "A" | "a" => PickyMode::A,
            "strong-A" | "strong-a" => PickyMode::StrongA,
            "global" => PickyMode::Global,
            "strong-global" => PickyMode::StrongGlobal,
            "value-p-part" | "malle3" => PickyMode::ValuePPart,
            _ => return Err(Error::Precondition(format!("unknown picky mode {s}"))),
        })
    }
}

/// `G`, `N_G(P)`, and the picky classes of the first Sylow seen from both tables.
pub struct PickyContext {
    pub n_table: CharacterTable,
    /// `(element, column in G, column in N, good/bad)`.
    pub picky: Vec<(Perm, usize, usize, &'static str)>,
}

pub fn picky_context(t: &CharacterTable, p: u64) -> Result<PickyContext> {
    let g = t.group()?;
    let sys = g.sylow_system(p)?;
    let n_table = dixon_schneider(&sys.normalizer)?;
    let derived = sys.first.derived_subgroup()?;
    let mut picky = Vec::new();
    for x in picky_reps(g, p)? {
        let kind = if derived.contains(&x) { "bad" } else { "good" };
        picky.push((x.clone(), t.column_of(&x)?, n_table.column_of(&x)?, kind));
    }
    Ok(PickyContext { n_table, picky })
}

pub fn check_picky(
    t: &CharacterTable,
    p: u64,
    mode: PickyMode,
    uniform_sign: bool,
) -> Result<CheckReport> {
    let ctx = picky_context(t, p)?;
    check_picky_with(t, &ctx, p, mode, uniform_sign)
}

pub fn check_picky_with(
    t: &CharacterTable,
    ctx: &PickyContext,
    p: u64,
    mode: PickyMode,
    uniform_sign: bool,
) -> Result<CheckReport> {
    let name = match mode {
        PickyMode::A => "picky-A",
        PickyMode::StrongA => "picky-strong-A",
        PickyMode::Global => "picky-global",
        PickyMode::StrongGlobal => "picky-strong-global",
        PickyMode::ValuePPart => "picky-value-p-part",
    };
    let mut r = CheckReport::new(name, target(t, p));
    if ctx.picky.is_empty() {
        r.notes.push("no picky elements".into());
        return Ok(r.finish());
    }
    let nt = &ctx.n_table;
    match mode {
        PickyMode::A | PickyMode::StrongA | PickyMode::ValuePPart => {
            let spec = match mode {
                PickyMode::A => ConstraintSpec::picky(p),
                PickyMode::StrongA => ConstraintSpec::strong(p),
                _ => ConstraintSpec {
                    value_p_part: Some(p),
                    ..ConstraintSpec::picky(p)
                },
            };
            for (x, cg, cn, kind) in &ctx.picky {
                let left = Side::nonvanishing(t, vec![*cg]);
                let right = Side::nonvanishing(nt, vec![*cn]);
                let (status, m) = strong_status(&left, &right, &spec);
                r.matched(
                    format!("{} {}", class_label(t, *cg), x),
                    Some(kind),
                    status,
                    format!("{} vs {}", m.left_size, m.right_size),
                    m,
                );
            }
        }
        PickyMode::Global | PickyMode::StrongGlobal => {
            let gcols: Vec<usize> = ctx.picky.iter().map(|e| e.1).collect();
            let ncols: Vec<usize> = ctx.picky.iter().map(|e| e.2).collect();
            let left = Side::nonvanishing(t, gcols.clone());
            let right = Side::nonvanishing(nt, ncols.clone());
            let mut spec = if mode == PickyMode::Global {
                ConstraintSpec::picky(p)
            } else {
                ConstraintSpec::strong(p)
            };
            spec.vanishing_pattern = true;
            spec.uniform_sign = uniform_sign;
            let (status, m) = strong_status(&left, &right, &spec);
            r.matched(
                "all picky classes",
                None,
                status,
                format!("{} vs {}", m.left_size, m.right_size),
                m,
            );
            if mode == PickyMode::StrongGlobal {
                // per-class strong verdicts, for the good/bad taxonomy
                for (x, cg, cn, kind) in &ctx.picky {
                    let left = Side::nonvanishing(t, vec![*cg]);
                    let right = Side::nonvanishing(nt, vec![*cn]);
                    let m = find_bijection(
                        &left,
                        &right,
                        &ConstraintSpec {
                            uniform_sign,
                            ..ConstraintSpec::strong(p)
                        },
                    );
                    r.notes.push(format!(
                        "strong at {} {x} ({kind}): {}",
                        class_label(t, *cg),
                        m.status
                    ));
                }
            }
        }
    }
    Ok(r.finish())
}

/// The one-element matching at every nonidentity p-element class, against `Sub_G(x)`.
pub fn check_subnormalizer(t: &CharacterTable, p: u64, strong: bool) -> Result<CheckReport> {
    let g = t.group()?;
    let mut r = CheckReport::new(
        if strong {
            "subnormalizer-strong-B"
        } else {
            "subnormalizer-B"
        },
        target(t, p),
    );
    let spec = if strong {
        ConstraintSpec::strong(p)
    } else {
        ConstraintSpec::picky(p)
    };
    let mut tables: Vec<(PermGroup, CharacterTable)> = Vec::new();
    for c in t.p_element_classes(p) {
        let x = t.classes[c]
            .representative
            .clone()
            .ok_or_else(|| Error::Precondition("class without representative".into()))?;
        let sub = sylow_normalizer_join(g, p, &x)?;
        let st = match tables.iter().find(|(h, _)| h.same_as(&sub)) {
            Some((_, st)) => st.clone(),
            None => match table_of(t, &sub) {
                Ok(st) => {
                    tables.push((sub.clone(), st.clone()));
                    st
                }
                Err(e) => {
                    r.notes.push(format!(
                        "{}: subnormalizer table infeasible: {e}",
                        class_label(t, c)
                    ));
                    continue;
                }
            },
        };
        let left = Side::nonvanishing(t, vec![c]);
        let right = Side::nonvanishing(&st, vec![st.column_of(&x)?]);
        let (status, m) = strong_status(&left, &right, &spec);
        let kind = if is_picky(g, p, &x)? {
            "picky"
        } else {
            "non-picky"
        };
        r.matched(
            class_label(t, c),
            Some(kind),
            status,
            format!("|Sub| {}", sub.order()),
            m,
        );
    }
    Ok(r.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SectionMode {
    Reduced,
    Abelian,
    OrderP,
    AbelianContainment,
}

impl FromStr for SectionMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<SectionMode> {
        Ok(match s {
            "reduced-4.4" | "reduced" => SectionMode::Reduced,
            "abelian-4.6" | "abelian" => SectionMode::Abelian,
            "thm-4.7" | "order-p" => SectionMode::OrderP,
            "prop-4.5" | "abelian-containment" => SectionMode::AbelianContainment,
            _ => return Err(Error::Precondition(format!("unknown section mode {s}"))),
        })
    }
}

fn columns(t: &CharacterTable, elems: &[Perm]) -> Result<Vec<usize>> {
    elems.iter().map(|e| t.column_of(e)).collect()
}

/// Section statements at `x`, or at every relevant class representative when `x` is `None`.
pub fn check_sections(
    t: &CharacterTable,
    p: u64,
    x: Option<&Perm>,
    mode: SectionMode,
) -> Result<CheckReport> {
    let g = t.group()?;
    let name = match mode {
        SectionMode::Reduced => "sections-reduced",
        SectionMode::Abelian => "sections-abelian",
        SectionMode::OrderP => "sections-order-p",
        SectionMode::AbelianContainment => "sections-abelian-containment",
    };
    let mut r = CheckReport::new(name, target(t, p));
    let sys = g.sylow_system(p)?;
    let abelian = sys.first.is_abelian();
    let order_p = sys.first.order() == p as u128;
    match mode {
        SectionMode::Abelian | SectionMode::AbelianContainment if !abelian => {
            return Ok(CheckReport::skipped(
                name,
                target(t, p),
                "Sylow subgroup is not abelian",
            ));
        }
        SectionMode::OrderP if !order_p || p == 2 => {
            return Ok(CheckReport::skipped(
                name,
                target(t, p),
                "requires |P| = p with p odd",
            ));
        }
        _ => {}
    }
    let elements: Vec<Perm> = match x {
        Some(x) => vec![x.clone()],
        None => match mode {
            SectionMode::Reduced | SectionMode::OrderP => t
                .p_element_classes(p)
                .iter()
                .map(|&c| t.classes[c].representative.clone().unwrap())
                .collect(),
            _ => picky_reps(g, p)?,
        },
    };
    for x in &elements {
        let label = format!("{} {x}", class_label(t, t.column_of(x)?));
        let picky = is_picky(g, p, x)?;
        let sections = section_reps(g, p, x)?;
        match mode {
            SectionMode::Reduced => {
                let sub = sylow_normalizer_join(g, p, x)?;
                let st = table_of(t, &sub)?;
                let left = Side::nonvanishing(t, columns(t, &sections.reduced)?);
                let right = Side::nonvanishing(&st, columns(&st, &sections.reduced)?);
                let spec = ConstraintSpec {
                    vanishing_pattern: true,
                    ..ConstraintSpec::picky(p)
                };
                let m = find_bijection(&left, &right, &spec);
                r.matched(
                    label.clone(),
                    None,
                    m.status,
                    format!("|R_p(x)| {}", sections.reduced.len()),
                    m,
                );
                let nv_x = t.nonvanishing(&[t.column_of(x)?]);
                if nv_x != left.chars {
                    r.findings.push(format!(
                        "{label}: Irr^R differs from Irr^x ({} vs {})",
                        left.chars.len(),
                        nv_x.len()
                    ));
                }
            }
            SectionMode::Abelian | SectionMode::OrderP => {
                if mode == SectionMode::Abelian && !picky {
                    r.notes.push(format!("{label}: not picky, skipped"));
                    continue;
                }
                let sub = sylow_normalizer_join(g, p, x)?;
                let st = table_of(t, &sub)?;
                let left = Side::nonvanishing(t, columns(t, &sections.section)?);
                let right = Side::nonvanishing(&st, columns(&st, &sections.section)?);
                let spec = ConstraintSpec::strong(p);
                if mode == SectionMode::Abelian {
                    let m = find_bijection(&left, &right, &spec);
                    r.matched(
                        label,
                        None,
                        m.status,
                        format!("|S_p(x)| {}", sections.section.len()),
                        m,
                    );
                } else {
                    let unlinked = ConstraintSpec {
                        degree_congruence: Some(p),
                        ..spec.clone()
                    };
                    let linked = ConstraintSpec {
                        linked_signs: true,
                        ..unlinked.clone()
                    };
                    let m = find_bijection(&left, &right, &unlinked);
                    r.matched(
                        format!("{label} unlinked"),
                        Some("unlinked"),
                        m.status,
                        format!("|S_p(x)| {}", sections.section.len()),
                        m,
                    );
                    let m = find_bijection(&left, &right, &linked);
                    r.matched(
                        format!("{label} linked"),
                        Some("linked"),
                        m.status,
                        String::new(),
                        m,
                    );
                }
            }
            SectionMode::AbelianContainment => {
                if !picky {
                    continue;
                }
                let pp = t.p_prime_degree(p);
                for g_el in &sections.section {
                    let c = t.column_of(g_el)?;
                    let nv = t.nonvanishing(&[c]);
                    let outside: Vec<usize> =
                        nv.iter().copied().filter(|i| !pp.contains(i)).collect();
                    r.item(
                        format!("{label} at {g_el}"),
                        outside.is_empty(),
                        format!("outside Irr_p': {outside:?}"),
                    );
                }
                let nv = t.nonvanishing(&[t.column_of(x)?]);
                r.item(
                    format!("{label} equality"),
                    nv == pp,
                    format!("|Irr^x| {}, |Irr_p'| {}", nv.len(), pp.len()),
                );
            }
        }
    }
    Ok(r.finish())
}

/// Smallest positive h with a degree `p^h`, `None` for infinity.
fn min_positive_height(degrees: impl Iterator<Item = u32>) -> Option<u32> {
    degrees.filter(|&h| h > 0).min()
}

/// `mh(B) = mh(D)` per block, on full-defect blocks and blocks of defect at most 1; other
/// blocks are reported as findings.
pub fn check_eaton_moreto(t: &CharacterTable, p: u64) -> Result<CheckReport> {
    let mut r = CheckReport::new("eaton-moreto", target(t, p));
    let blocks = p_blocks(t, p, 0, true)?;
    let show = |h: Option<u32>| h.map(|h| h.to_string()).unwrap_or_else(|| "inf".into());
    for (b, block) in blocks.blocks.iter().enumerate() {
        let Some(d) = &block.defect_group else {
            r.notes.push(format!("block {b}: defect group unavailable"));
            continue;
        };
        let mh_b = min_positive_height(block.characters.iter().map(|&c| blocks.heights[c]));
        let mh_d = if d.is_abelian() {
            None
        } else {
            let dt = dixon_schneider(d)?;
            min_positive_height((0..dt.num_chars()).map(|i| dt.degree_valuation(i, p)))
        };
        let detail = format!(
            "defect {}, mh(B) {}, mh(D) {}",
            block.defect,
            show(mh_b),
            show(mh_d)
        );
        if blocks.is_full_defect(b, t.order) || block.defect <= 1 {
            r.item(format!("block {b}"), mh_b == mh_d, detail);
        } else {
            r.findings.push(format!(
                "block {b}: {detail}{}",
                if mh_b == mh_d { "" } else { " (differ)" }
            ));
        }
    }
    Ok(r.finish())
}

#[derive(Clone, Debug, Serialize)]
pub struct PPartMultisets {
    pub group: BTreeMap<u128, usize>,
    pub normalizer: BTreeMap<u128, usize>,
    pub sylow: BTreeMap<u128, usize>,
}

fn multiset(t: &CharacterTable, chars: &[usize], p: u64) -> BTreeMap<u128, usize> {
    let mut m = BTreeMap::new();
    for &c in chars {
        *m.entry(p_part(t.degree(c), p)).or_insert(0) += 1;
    }
    m
}

pub fn ppart_multisets(t: &CharacterTable, p: u64, x: &Perm) -> Result<PPartMultisets> {
    let g = t.group()?;
    let sys = g.sylow_system(p)?;
    let nt = dixon_schneider(&sys.normalizer)?;
    let (i, sylow) = crate::locality::canonical_sylow(g, p, x)?;
    let pt = dixon_schneider(&sylow)?;
    let nt = if i == 0 {
        nt
    } else {
        dixon_schneider(&sys.normalizer_of(i))?
    };
    Ok(PPartMultisets {
        group: multiset(t, &t.nonvanishing(&[t.column_of(x)?]), p),
        normalizer: multiset(&nt, &nt.nonvanishing(&[nt.column_of(x)?]), p),
        sylow: multiset(&pt, &pt.nonvanishing(&[pt.column_of(x)?]), p),
    })
}

/// Multisets of degree p-parts over `Irr^x` of `G` and `N_G(P)` at picky `x`; the set over
/// `Irr^x(P)` is compared as a finding.
pub fn check_ppart_multiset(t: &CharacterTable, p: u64, x: Option<&Perm>) -> Result<CheckReport> {
    let g = t.group()?;
    let mut r = CheckReport::new("ppart-multiset", target(t, p));
    let xs = match x {
        Some(x) => vec![x.clone()],
        None => picky_reps(g, p)?,
    };
    for x in xs {
        let label = format!("{} {x}", class_label(t, t.column_of(&x)?));
        if !is_picky(g, p, &x)? {
            r.notes.push(format!("{label}: not picky, raw comparison"));
        }
        let m = ppart_multisets(t, p, &x)?;
        r.item(
            label.clone(),
            m.group == m.normalizer,
            format!("G {:?}, N {:?}", m.group, m.normalizer),
        );
        let gs: Vec<&u128> = m.group.keys().collect();
        let ps: Vec<&u128> = m.sylow.keys().collect();
        r.findings.push(format!(
            "{label}: degree p-parts over Irr^x(G) {gs:?}, over Irr^x(P) {ps:?}{}",
            if gs == ps { "" } else { " (differ)" }
        ));
    }
    Ok(r.finish())
}

/// The mixed-order question at `x`, when the strong subnormalizer statement holds at every prime part.
pub fn check_mixed(t: &CharacterTable, x: &Perm) -> Result<CheckReport> {
    let g = t.group()?;
    let cx = t.column_of(x)?;
    let mut r = CheckReport::new("mixed-order", format!("{} {}", t.name, class_label(t, cx)));
    let primes = prime_factors(x.order());
    if primes.len() < 2 {
        return Ok(CheckReport::skipped(
            "mixed-order",
            r.target,
            "element has prime-power order",
        ));
    }
    for &q in &primes {
        let (xq, _, _) = element_parts(x, q);
        let sub = sylow_normalizer_join(g, q, &xq)?;
        let st = table_of(t, &sub)?;
        let left = Side::nonvanishing(t, vec![t.column_of(&xq)?]);
        let right = Side::nonvanishing(&st, vec![st.column_of(&xq)?]);
        if !find_bijection(&left, &right, &ConstraintSpec::strong(q)).holds() {
            return Ok(CheckReport::skipped(
                "mixed-order",
                r.target,
                format!("strong subnormalizer statement fails at the {q}-part"),
            ));
        }
    }
    let sub = subgroup_generated(g, &subnormalizer_set(g, x)?)?;
    let st = table_of(t, &sub)?;
    // degree p-parts are required for primes p where x_{p'} centralizes a Sylow p-subgroup
    let mut degree_primes = Vec::new();
    for (q, _) in crate::numtheory::factorize(g.order()) {
        let (_, xqp, _) = element_parts(x, q);
        let c = g.centralizer(&xqp)?;
        if p_part(c.order(), q) == p_part(g.order(), q) {
            degree_primes.push(q);
        }
    }
    let spec = ConstraintSpec {
        degree_primes: degree_primes.clone(),
        sign_equality: true,
        ..Default::default()
    };
    let left = Side::nonvanishing(t, vec![cx]);
    let right = Side::nonvanishing(&st, vec![st.column_of(x)?]);
    let m = find_bijection(&left, &right, &spec);
    r.notes
        .push(format!("degree parts required at primes {degree_primes:?}"));
    r.matched(
        format!("{x}"),
        None,
        m.status,
        format!("|Sub| {}", sub.order()),
        m,
    );
    Ok(r.finish())
}

fn pi_degree_part(d: u128, pi: &[u64]) -> u128 {
    d / pi_prime_part(d, pi)
}

/// Values at `col` up to sign, with multiplicities.
pub fn value_multiplicities(t: &CharacterTable, col: usize) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for i in 0..t.num_chars() {
        let v = t.value(i, col);
        if v.is_zero() {
            continue;
        }
        let neg = -v;
        let key = if *v <= neg { v.clone() } else { neg };
        *m.entry(format!("±({key})")).or_insert(0) += 1;
    }
    m
}

/// The Hall statement for given tables and corresponding columns of the H-picky classes.
pub fn check_hall_tables(
    gt: &CharacterTable,
    gcols: &[usize],
    nt: &CharacterTable,
    ncols: &[usize],
    pi: &[u64],
) -> CheckReport {
    let mut r = CheckReport::new("hall", format!("{} pi={pi:?}", gt.name));
    let count = |t: &CharacterTable| {
        (0..t.num_chars())
            .filter(|&i| pi_degree_part(t.degree(i), pi) == 1)
            .count()
    };
    let (cg, cn) = (count(gt), count(nt));
    r.notes.push(format!("pi'-degree characters: {cg} vs {cn}"));
    if cg != cn {
        r.findings
            .push(format!("pi'-degree counts differ: {cg} != {cn}"));
    }
    let left = Side::nonvanishing(gt, gcols.to_vec());
    let right = Side::nonvanishing(nt, ncols.to_vec());
    let vanishing_pi_prime = (0..gt.num_chars())
        .filter(|&i| pi_degree_part(gt.degree(i), pi) == 1 && !left.chars.contains(&i))
        .count();
    r.notes.push(format!(
        "pi'-degree characters vanishing on the set: {vanishing_pi_prime}"
    ));
    for (&a, &b) in gcols.iter().zip(ncols) {
        let (vg, vn) = (value_multiplicities(gt, a), value_multiplicities(nt, b));
        r.item(
            format!("values at {}", gt.classes[a].name),
            vg == vn,
            format!("G {vg:?}, N {vn:?}"),
        );
    }
    let spec = ConstraintSpec {
        degree_primes: pi.to_vec(),
        field_equality: true,
        vanishing_pattern: true,
        ..Default::default()
    };
    let m = find_bijection(&left, &right, &spec);
    r.matched(
        "nonvanishing on the H-picky set",
        None,
        m.status,
        format!("{} vs {}", m.left_size, m.right_size),
        m,
    );
    r.finish()
}

/// The Hall statement for a partial table of `G` listing only the H-picky classes (besides
/// the identity) against a computed table of `N_G(H)`. Each G-class is paired with an unused
/// N-class of the same element order, preferring one with the same value multiplicities.
pub fn check_hall_fixture(gt: &CharacterTable, nt: &CharacterTable, pi: &[u64]) -> CheckReport {
    let gcols: Vec<usize> = (0..gt.num_classes())
        .filter(|&c| gt.classes[c].order > 1)
        .collect();
    let mut used = vec![false; nt.num_classes()];
    let mut ncols = Vec::new();
    for &a in &gcols {
        let order = gt.classes[a].order;
        let candidates: Vec<usize> = (0..nt.num_classes())
            .filter(|&b| !used[b] && nt.classes[b].order == order)
            .collect();
        let vg = value_multiplicities(gt, a);
        let pick = candidates
            .iter()
            .copied()
            .find(|&b| value_multiplicities(nt, b) == vg)
            .or(candidates.first().copied());
        match pick {
            Some(b) => {
                used[b] = true;
                ncols.push(b);
            }
            None => {
                let mut r = CheckReport::new("hall", format!("{} pi={pi:?}", gt.name));
                r.item(
                    format!("class {}", gt.classes[a].name),
                    false,
                    format!("no class of order {order} in {}", nt.name),
                );
                return r.finish();
            }
        }
    }
    let mut r = check_hall_tables(gt, &gcols, nt, &ncols, pi);
    r.notes
        .push("fixture: table-only data, no group-level verification".into());
    r
}

/// The Hall statement for a group: `H` is supplied or found by the nilpotent Hall search.
pub fn check_hall(t: &CharacterTable, pi: &[u64], h: Option<&PermGroup>) -> Result<CheckReport> {
    let g = t.group()?;
    let target = format!("{} pi={pi:?}", t.name);
    let h = match h {
        Some(h) => h.clone(),
        None => match find_nilpotent_hall(g, pi)? {
            Some(h) => h,
            None => {
                return Ok(CheckReport::skipped(
                    "hall",
                    target,
                    "no nilpotent Hall subgroup",
                ))
            }
        },
    };
    if !is_hall(g, &h) || !is_nilpotent(&h)? {
        return Err(Error::Precondition("not a nilpotent Hall subgroup".into()));
    }
    let n = g.normalizer(&h)?;
    let nt = table_of(t, &n)?;
    let en = h.elements()?;
    let mut idx = Vec::new();
    for e in &en {
        if h_picky(g, &h, e)? {
            idx.push(g.index_of(e)?);
        }
    }
    if idx.is_empty() {
        return Ok(CheckReport::skipped("hall", target, "no H-picky elements"));
    }
    let genum = g.enumeration()?;
    let reps: Vec<Perm> = g
        .conjugation_orbit_reps(&idx, &n)?
        .into_iter()
        .map(|i| genum.elements()[i as usize].clone())
        .collect();
    let gcols = columns(t, &reps)?;
    let ncols = columns(&nt, &reps)?;
    let mut r = check_hall_tables(t, &gcols, &nt, &ncols, pi);
    r.notes.push(format!(
        "|H| {}, |N_G(H)| {}, {} H-picky classes",
        h.order(),
        n.order(),
        reps.len()
    ));
    Ok(r)
}

/// Along a global picky witness, the fields generated by the values on all picky classes agree.
pub fn check_field_over_set(t: &CharacterTable, p: u64) -> Result<CheckReport> {
    let ctx = picky_context(t, p)?;
    let mut r = CheckReport::new("field-over-set", target(t, p));
    if ctx.picky.is_empty() {
        r.notes.push("no picky elements".into());
        return Ok(r.finish());
    }
    let gcols: Vec<usize> = ctx.picky.iter().map(|e| e.1).collect();
    let ncols: Vec<usize> = ctx.picky.iter().map(|e| e.2).collect();
    let left = Side::nonvanishing(t, gcols.clone());
    let right = Side::nonvanishing(&ctx.n_table, ncols.clone());
    let spec = ConstraintSpec {
        vanishing_pattern: true,
        ..ConstraintSpec::picky(p)
    };
    let m = find_bijection(&left, &right, &spec);
    let Some(w) = m.witness.clone().filter(|_| m.verified) else {
        return Ok(CheckReport::skipped(
            "field-over-set",
            target(t, p),
            "no verified global picky witness",
        ));
    };
    for pair in &w {
        let a: Vec<CycNum> = gcols
            .iter()
            .map(|&c| t.value(pair.left, c).clone())
            .collect();
        let b: Vec<CycNum> = ncols
            .iter()
            .map(|&c| ctx.n_table.value(pair.right, c).clone())
            .collect();
        r.item(
            format!("chi {} -> psi {}", pair.left, pair.right),
            same_field_of_sets(&a, &b),
            String::new(),
        );
    }
    Ok(r.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::named::{alternating, psl2, symmetric};

    #[test]
    fn psl2_7_strong_global() {
        let t = dixon_schneider(&psl2(7).unwrap()).unwrap();
        let r = check_picky(&t, 7, PickyMode::StrongGlobal, false).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "{r:?}");
        let x = &picky_context(&t, 7).unwrap().picky[0];
        assert_eq!(t.nonvanishing(&[x.1]).len(), 5);
        let r = check_sections(&t, 7, None, SectionMode::OrderP).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "{r:?}");
    }

    #[test]
    fn a5_sections_and_subnormalizers() {
        let t = dixon_schneider(&alternating(5)).unwrap();
        let r = check_sections(&t, 5, None, SectionMode::AbelianContainment).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(check_subnormalizer(&t, 2, false).unwrap().passed());
        assert!(pprime_containment_verify(&t, 2).passed());
    }

    #[test]
    fn s4_degree_invariants() {
        let t = dixon_schneider(&symmetric(4)).unwrap();
        let r = check_eaton_moreto(&t, 3).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(check_ppart_multiset(&t, 2, None).unwrap().passed());
        assert!(check_field_over_set(&t, 2).unwrap().passed());
        assert_eq!(
            check_picky(&t, 2, PickyMode::StrongA, false)
                .unwrap()
                .verdict,
            Verdict::Holds
        );
    }

    #[test]
    fn cyclic_six_mixed() {
        let g = crate::permgroup::named::cyclic(6);
        let t = dixon_schneider(&g).unwrap();
        let x = g.generators()[0].clone();
        assert!(check_mixed(&t, &x).unwrap().passed());
        let r = check_hall(
            &dixon_schneider(&symmetric(3)).unwrap(),
            &[2, 3],
            Some(&symmetric(3)),
        );
        assert!(r.is_err());
    }
}
