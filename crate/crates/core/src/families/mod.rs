//! Closed-form values of the characters nonvanishing on the picky classes of PSL2(q), the
//! Suzuki groups, PSU3(q) and the small Ree groups, with their Sylow normalizers, at any
//! admissible q.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::chartab::{dixon_schneider, CharacterTable, ClassInfo};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::matchcheck::{find_bijection, Certificate, ConstraintSpec, Side};
use crate::numtheory::{mod_pow, p_part, prime_power};
use crate::permgroup::gens_file::group_from_gens_text;
use crate::permgroup::{named, PermGroup};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Psl2,
    Suzuki,
    Psu3,
    Ree,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "psl2" => Ok(Family::Psl2),
            "suzuki" | "sz" | "2b2" => Ok(Family::Suzuki),
            "psu3" => Ok(Family::Psu3),
            "ree" | "2g2" => Ok(Family::Ree),
            _ => Err(Error::Other(format!("unknown family {s:?}"))),
        }
    }
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Psl2 => "psl2",
            Family::Suzuki => "suzuki",
            Family::Psu3 => "psu3",
            Family::Ree => "ree",
        }
    }
}

fn ser_value<S: Serializer>(v: &CycNum, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleRow {
    #[serde(serialize_with = "ser_value")]
    pub value: CycNum,
    pub degree_part: u128,
    pub multiplicity: u128,
    /// Full degree, recorded on the normalizer side.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleClass {
    pub label: String,
    /// Outside `P'`.
    pub good: bool,
    pub element_order: u64,
    pub centralizer: u128,
    pub g_rows: Vec<OracleRow>,
    pub h_rows: Vec<OracleRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Oracle {
    pub family: Family,
    pub q: u64,
    pub p: u64,
    pub classes: Vec<OracleClass>,
    /// `|Irr^{P#}(G)| = |Irr^{P#}(H)|` by the closed-form count.
    pub picky_count: u128,
    pub notes: Vec<String>,
}

fn row(value: CycNum, degree_part: u128, multiplicity: u128) -> OracleRow {
    OracleRow {
        value,
        degree_part,
        multiplicity,
        degree: None,
    }
}

fn hrow(value: CycNum, degree_part: u128, multiplicity: u128, degree: u128) -> OracleRow {
    OracleRow {
        value,
        degree_part,
        multiplicity,
        degree: Some(degree),
    }
}

fn int(a: i128) -> CycNum {
    CycNum::from_bigint(BigInt::from(a))
}

fn frac(a: &CycNum, num: i64, den: i64) -> CycNum {
    a.scale(&BigRational::new(BigInt::from(num), BigInt::from(den)))
}

fn conj_rows(rows: &[OracleRow]) -> Vec<OracleRow> {
    rows.iter()
        .map(|r| OracleRow {
            value: r.value.conj(),
            ..r.clone()
        })
        .collect()
}

/// `sum_k (k/p) E(p)^k`, a square root of `(-1)^((p-1)/2) p`.
fn quadratic_gauss_sum(p: u64) -> CycNum {
    let mut acc = CycNum::zero();
    for k in 1..p {
        let z = CycNum::root_of_unity(p, k as i64);
        acc = if mod_pow(k, (p - 1) / 2, p) == 1 {
            &acc + &z
        } else {
            &acc - &z
        };
    }
    acc
}

fn prime_power_of(q: u64) -> Result<(u64, u32)> {
    prime_power(q).ok_or_else(|| Error::Inadmissible(format!("q = {q} is not a prime power")))
}

/// Checks the structural conditions on `q`, returning the characteristic.
pub fn validate_q(family: Family, q: u64) -> Result<u64> {
    let (p, n) = prime_power_of(q)?;
    let ok = match family {
        Family::Psl2 => q > 3,
        Family::Suzuki => p == 2 && n % 2 == 1 && n >= 3,
        Family::Psu3 => q >= 3,
        Family::Ree => p == 3 && n % 2 == 1 && n >= 3,
    };
    if !ok {
        return Err(Error::Inadmissible(format!(
            "q = {q} for {}",
            family.name()
        )));
    }
    Ok(p)
}

pub fn psl2_oracle(q: u64) -> Result<Oracle> {
    let p = validate_q(Family::Psl2, q)?;
    let qq = q as u128;
    let qi = q as i128;
    let mut notes = Vec::new();
    let classes = if p == 2 {
        let g = vec![row(int(1), 1, qq / 2), row(int(-1), 1, qq / 2)];
        let h = vec![hrow(int(1), 1, qq - 1, 1), hrow(int(-1), 1, 1, qq - 1)];
        vec![OracleClass {
            label: "x".into(),
            good: true,
            element_order: 2,
            centralizer: qq,
            g_rows: g,
            h_rows: h,
        }]
    } else {
        let n = prime_power_of(q)?.1;
        let eps_plus = q % 4 == 1;
        let tau = if n % 2 == 0 {
            int(p.pow(n / 2) as i128)
        } else {
            quadratic_gauss_sum(p).scale_int(p.pow((n - 1) / 2) as i64)
        };
        let a = frac(&(&tau - &CycNum::one()), 1, 2);
        let abar = frac(&(&(-&tau) - &CycNum::one()), 1, 2);
        let (mp, mm) = if eps_plus {
            ((qq - 1) / 4, (qq - 1) / 4)
        } else {
            ((qq + 1) / 4, (qq - 3) / 4)
        };
        // for q = 1 mod 4 the exceptional characters of G take -a and -abar
        let (ga, gabar) = if eps_plus {
            (-&a, -&abar)
        } else {
            (a.clone(), abar.clone())
        };
        if eps_plus {
            notes.push("exceptional G-values are -a, -abar for q = 1 mod 4".into());
        }
        let g = vec![
            row(int(1), 1, mp),
            row(int(-1), 1, mm),
            row(ga, 1, 1),
            row(gabar, 1, 1),
        ];
        let d = (qi as u128 - 1) / 2;
        let h = vec![hrow(int(1), 1, d, 1), hrow(a, 1, 1, d), hrow(abar, 1, 1, d)];
        let x2g = if eps_plus { g.clone() } else { conj_rows(&g) };
        let x2h = if eps_plus { h.clone() } else { conj_rows(&h) };
        vec![
            OracleClass {
                label: "x1".into(),
                good: true,
                element_order: p,
                centralizer: qq,
                g_rows: g,
                h_rows: h,
            },
            OracleClass {
                label: "x2".into(),
                good: true,
                element_order: p,
                centralizer: qq,
                g_rows: x2g,
                h_rows: x2h,
            },
        ]
    };
    let picky_count = if p == 2 { qq } else { (qq + 3) / 2 };
    Ok(Oracle {
        family: Family::Psl2,
        q,
        p,
        classes,
        picky_count,
        notes,
    })
}

pub fn suzuki_oracle(q: u64) -> Result<Oracle> {
    validate_q(Family::Suzuki, q)?;
    let qq = q as u128;
    let r = crate::numtheory::integer_sqrt(2 * qq);
    let ri = r as i128;
    let i = CycNum::root_of_unity(4, 1);
    let ri2 = i.scale_int((r / 2) as i64);
    let wdeg = r * (qq - 1) / 2;
    let sigma_g = vec![
        row(int(1), 1, qq / 2),
        row(int(ri - 1), 1, (qq + r) / 4),
        row(int(-(ri + 1)), 1, (qq - r) / 4),
        row(int(-ri / 2), r / 2, 2),
    ];
    let sigma_h = vec![
        hrow(int(1), 1, qq - 1, 1),
        hrow(int(qq as i128 - 1), 1, 1, qq - 1),
        hrow(int(-ri / 2), r / 2, 2, wdeg),
    ];
    let rho_g = vec![
        row(int(1), 1, qq / 2),
        row(int(-1), 1, qq / 2),
        row(ri2.clone(), r / 2, 1),
        row(-&ri2, r / 2, 1),
    ];
    let rho_h = vec![
        hrow(int(1), 1, qq - 1, 1),
        hrow(int(-1), 1, 1, qq - 1),
        hrow(ri2.clone(), r / 2, 1, wdeg),
        hrow(-&ri2, r / 2, 1, wdeg),
    ];
    let classes = vec![
        OracleClass {
            label: "sigma".into(),
            good: false,
            element_order: 2,
            centralizer: qq * qq,
            g_rows: sigma_g,
            h_rows: sigma_h,
        },
        OracleClass {
            label: "rho".into(),
            good: true,
            element_order: 4,
            centralizer: 2 * qq,
            g_rows: rho_g.clone(),
            h_rows: rho_h.clone(),
        },
        OracleClass {
            label: "rho^-1".into(),
            good: true,
            element_order: 4,
            centralizer: 2 * qq,
            g_rows: conj_rows(&rho_g),
            h_rows: conj_rows(&rho_h),
        },
    ];
    Ok(Oracle {
        family: Family::Suzuki,
        q,
        p: 2,
        classes,
        picky_count: qq + 2,
        notes: Vec::new(),
    })
}

pub fn psu3_oracle(q: u64) -> Result<Oracle> {
    let p = validate_q(Family::Psu3, q)?;
    let qq = q as u128;
    let qi = q as i128;
    let d: u128 = if (qq + 1) % 3 == 0 { 3 } else { 1 };
    let rp = (qq + 1) / d;
    let e = (qq * qq - 1) / d;
    let dp = (3 - d) / 2;
    let tp = (qq * qq - qq + 1) / d;
    let tpp = (tp - 1) / 6;
    let mut z_g = vec![
        row(int(1), 1, 1 + 3 * tpp - dp),
        row(int(-(qi - 1)), 1, rp - 1),
        row(int(2 * rp as i128 - 1), 1, d - dp),
        row(int(2 * qi - 1), 1, tpp),
        row(int(-(qi + 1)), 1, 2 * tpp),
        row(int(-qi), qq, 1),
        row(int(qi), qq, rp - 1),
    ];
    z_g.retain(|r| r.multiplicity > 0);
    let z_h = vec![
        hrow(int(1), 1, e, 1),
        hrow(int(e as i128), 1, d, e),
        hrow(int(-qi), qq, rp, qq * (qq - 1)),
    ];
    let (u_g, u_h) = if d == 1 {
        (
            vec![row(int(1), 1, rp + 3 * tpp - dp), row(int(-1), 1, 3 * tpp)],
            vec![hrow(int(1), 1, e, 1), hrow(int(-1), 1, 1, e)],
        )
    } else {
        let v = int(qi - rp as i128);
        (
            vec![
                row(int(1), 1, rp + 3 * tpp - dp),
                row(int(-1), 1, 3 * tpp),
                row(v.clone(), 1, 1),
                row(int(-(rp as i128)), 1, 2),
            ],
            vec![
                hrow(int(1), 1, e, 1),
                hrow(v, 1, 1, e),
                hrow(int(-(rp as i128)), 1, 2, e),
            ],
        )
    };
    let u_order = if p == 2 { 4 } else { p };
    let mut classes = vec![OracleClass {
        label: "z".into(),
        good: false,
        element_order: p,
        centralizer: qq * qq * qq * (qq + 1) / d,
        g_rows: z_g,
        h_rows: z_h,
    }];
    for k in 1..=d {
        let label = if d == 1 {
            "u".to_string()
        } else {
            format!("u{k}")
        };
        classes.push(OracleClass {
            label,
            good: true,
            element_order: u_order,
            centralizer: qq * qq,
            g_rows: u_g.clone(),
            h_rows: u_h.clone(),
        });
    }
    Ok(Oracle {
        family: Family::Psu3,
        q,
        p,
        classes,
        picky_count: e + d + rp,
        notes: Vec::new(),
    })
}

pub fn ree_oracle(q: u64) -> Result<Oracle> {
    validate_q(Family::Ree, q)?;
    let qq = q as u128;
    let qi = q as i128;
    let m = crate::numtheory::integer_sqrt(qq / 3);
    let mi = m as i128;
    let w = CycNum::root_of_unity(3, 1);
    // i*sqrt(3) = 2 E(3) + 1
    let is3 = &w.scale_int(2) + &CycNum::one();
    let a = w.clone();
    let abar = a.conj();
    let b = &frac(&CycNum::one(), -1, 2) + &frac(&is3, mi as i64, 2);
    let bbar = b.conj();
    let dd = m * (qq - 1) / 2;
    let x_g = vec![
        row(int(1), 1, (qq - 1) / 2),
        row(int(-(qi - 1)), 1, 1),
        row(int(2 * qi - 1), 1, (qq - 3) / 6),
        row(int(-(qi + 1 + 3 * mi)), 1, (qq - 3 * m) / 6),
        row(int(-(qi + 1 - 3 * mi)), 1, (qq + 3 * m) / 6),
        row(int(-(qi + mi) / 2), m, 2),
        row(int((qi - mi) / 2), m, 2),
        row(int(-mi), m, 2),
        row(int(qi), qq, 1),
    ];
    let x_h = vec![
        hrow(int(1), 1, qq - 1, 1),
        hrow(int(qi - 1), 1, 1, qq - 1),
        hrow(int(mi * (qi - 1)), m, 2, 2 * dd),
        hrow(int(mi * (qi - 1) / 2), m, 4, dd),
        hrow(int(-qi), qq, 1, qq * (qq - 1)),
    ];
    // (-m + i m^2 sqrt 3) / 2 and twice it
    let c = &int(-mi) + &is3.scale_int((mi * mi) as i64);
    let t_g = vec![
        row(int(1), 1, (qq + 1) / 2),
        row(int(-1), 1, (qq - 3) / 6),
        row(int(-3 * mi - 1), 1, (qq - 3 * m) / 6),
        row(int(3 * mi - 1), 1, (qq + 3 * m) / 6),
        row(frac(&c, 1, 2), m, 2),
        row(frac(&c.conj(), 1, 2), m, 2),
        row(c.clone(), m, 1),
        row(c.conj(), m, 1),
    ];
    let t_h = vec![
        hrow(int(1), 1, qq - 1, 1),
        hrow(int(qi - 1), 1, 1, qq - 1),
        hrow(b.scale_int(2 * mi as i64), m, 1, 2 * dd),
        hrow(bbar.scale_int(2 * mi as i64), m, 1, 2 * dd),
        hrow(b.scale_int(mi as i64), m, 2, dd),
        hrow(bbar.scale_int(mi as i64), m, 2, dd),
    ];
    let y_g = vec![
        row(int(1), 1, (qq + 1) / 2),
        row(int(-1), 1, (qq - 1) / 2),
        row(int(mi), m, 4),
        row(int(-mi), m, 2),
    ];
    let y_h = vec![
        hrow(int(1), 1, qq - 1, 1),
        hrow(int(-1), 1, 1, qq - 1),
        hrow(int(mi), m, 4, dd),
        hrow(int(-mi), m, 2, 2 * dd),
    ];
    let ma = a.scale_int(mi as i64);
    let mabar = abar.scale_int(mi as i64);
    let yt_g = vec![
        row(int(1), 1, (qq + 1) / 2),
        row(int(-1), 1, (qq - 1) / 2),
        row(mabar.clone(), m, 2),
        row(ma.clone(), m, 2),
        row(-&ma, m, 1),
        row(-&mabar, m, 1),
    ];
    let yt_h = vec![
        hrow(int(1), 1, qq - 1, 1),
        hrow(int(-1), 1, 1, qq - 1),
        hrow(mabar.clone(), m, 2, dd),
        hrow(ma.clone(), m, 2, dd),
        hrow(-&ma, m, 1, 2 * dd),
        hrow(-&mabar, m, 1, 2 * dd),
    ];
    let cls =
        |label: &str, good: bool, order: u64, cent: u128, g: Vec<OracleRow>, h: Vec<OracleRow>| {
            OracleClass {
                label: label.into(),
                good,
                element_order: order,
                centralizer: cent,
                g_rows: g,
                h_rows: h,
            }
        };
    let classes = vec![
        cls("X", false, 3, qq * qq * qq, x_g, x_h),
        cls("T", false, 3, 2 * qq * qq, t_g.clone(), t_h.clone()),
        cls(
            "T^-1",
            false,
            3,
            2 * qq * qq,
            conj_rows(&t_g),
            conj_rows(&t_h),
        ),
        cls("Y", true, 9, 3 * qq, y_g, y_h),
        cls("YT", true, 9, 3 * qq, yt_g.clone(), yt_h.clone()),
        cls("YT^-1", true, 9, 3 * qq, conj_rows(&yt_g), conj_rows(&yt_h)),
    ];
    let notes = vec![
        "class names: X=(1,0,0,1), T=(1,0,1,0), T^-1=(1,0,-1,0), Y=(1,1,0,0), YT=(1,1,x,0), YT^-1=(1,1,-x,0)".into(),
        "G-side multiplicities at X and T are the column-norm consistent ones".into(),
    ];
    Ok(Oracle {
        family: Family::Ree,
        q,
        p: 3,
        classes,
        picky_count: qq + 7,
        notes,
    })
}

pub fn oracle(family: Family, q: u64) -> Result<Oracle> {
    match family {
        Family::Psl2 => psl2_oracle(q),
        Family::Suzuki => suzuki_oracle(q),
        Family::Psu3 => psu3_oracle(q),
        Family::Ree => ree_oracle(q),
    }
}

fn total(rows: &[OracleRow]) -> u128 {
    rows.iter().map(|r| r.multiplicity).sum()
}

/// `sum multiplicity * |value|^2`.
pub fn column_norm(rows: &[OracleRow]) -> CycNum {
    rows.iter().fold(CycNum::zero(), |acc, r| {
        &acc + &r.value.abs_squared().scale_int(r.multiplicity as i64)
    })
}

/// `sum multiplicity * degree * conj(value)` when all degrees are known.
pub fn identity_orthogonality(rows: &[OracleRow]) -> Option<CycNum> {
    rows.iter().try_fold(CycNum::zero(), |acc, r| {
        Some(
            &acc + &r
                .value
                .conj()
                .scale_int((r.degree? * r.multiplicity) as i64),
        )
    })
}

/// Invariant checks on the oracle data alone.
pub fn oracle_invariants(o: &Oracle, report: &mut CheckReport) {
    for c in &o.classes {
        let cent = CycNum::from_bigint(BigInt::from(c.centralizer));
        for (side, rows) in [("G", &c.g_rows), ("H", &c.h_rows)] {
            let n = column_norm(rows);
            report.item(
                format!("{} column norm {side}", c.label),
                n == cent,
                format!("{n} vs centralizer {}", c.centralizer),
            );
        }
        if let Some(s) = identity_orthogonality(&c.h_rows) {
            report.item(
                format!("{} orthogonal to identity H", c.label),
                s.is_zero(),
                format!("{s}"),
            );
        }
    }
    let gmax = o
        .classes
        .iter()
        .map(|c| total(&c.g_rows))
        .max()
        .unwrap_or(0);
    let hmax = o
        .classes
        .iter()
        .map(|c| total(&c.h_rows))
        .max()
        .unwrap_or(0);
    report.item(
        "picky character count",
        gmax == o.picky_count && hmax == o.picky_count,
        format!("G {gmax}, H {hmax}, expected {}", o.picky_count),
    );
}

const EXPANSION_LIMIT: u128 = 500_000;

/// A two-column partial table: degree p-parts in the first column, values in the second.
pub fn rows_table(name: &str, rows: &[OracleRow], class: &OracleClass) -> Result<CharacterTable> {
    if total(rows) > EXPANSION_LIMIT {
        return Err(Error::EnumerationLimit {
            order: total(rows),
            limit: EXPANSION_LIMIT,
        });
    }
    let mut irr = Vec::new();
    for r in rows {
        for _ in 0..r.multiplicity {
            irr.push(vec![
                CycNum::from_bigint(BigInt::from(r.degree_part)),
                r.value.clone(),
            ]);
        }
    }
    let info = |n: &str, order: u64| ClassInfo {
        name: n.into(),
        order,
        size: 1,
        power_map: BTreeMap::new(),
        representative: None,
    };
    Ok(CharacterTable {
        name: name.into(),
        order: class.centralizer,
        exponent: class.element_order,
        classes: vec![info("1a", 1), info(&class.label, class.element_order)],
        irr,
        group: None,
        complete: false,
        dixon_prime: None,
    })
}

/// Runs the matching engine on the oracle data, class by class.
pub fn family_verify(family: Family, q: u64) -> Result<CheckReport> {
    let o = oracle(family, q)?;
    let mut r = CheckReport::new("family", format!("{} q={q}", family.name()));
    r.notes.extend(o.notes.iter().cloned());
    oracle_invariants(&o, &mut r);
    if r.items.iter().any(|i| !i.passed) {
        let bad: Vec<String> = r
            .failures()
            .iter()
            .map(|i| format!("{}: {}", i.label, i.detail))
            .collect();
        return Err(Error::Inconsistent(bad.join("; ")));
    }
    let p = o.p;
    for c in &o.classes {
        let gt = rows_table("G", &c.g_rows, c)?;
        let ht = rows_table("H", &c.h_rows, c)?;
        let left = Side::new(&gt, (0..gt.num_chars()).collect(), vec![1]);
        let right = Side::new(&ht, (0..ht.num_chars()).collect(), vec![1]);
        let kind = Some(if c.good { "good" } else { "bad" });
        let plain = find_bijection(&left, &right, &ConstraintSpec::picky(p));
        let malle = find_bijection(
            &left,
            &right,
            &ConstraintSpec {
                value_p_part: Some(p),
                ..ConstraintSpec::picky(p)
            },
        );
        let strong = find_bijection(&left, &right, &ConstraintSpec::strong(p));
        let st = plain.status;
        r.matched(
            format!("{} degree part and field", c.label),
            kind,
            st,
            "",
            plain,
        );
        let st = malle.status;
        r.matched(format!("{} value p-parts", c.label), kind, st, "", malle);
        if c.good {
            let st = strong.status;
            r.matched(format!("{} strong", c.label), kind, st, "", strong);
        } else {
            let ok = !strong.holds()
                && strong.verified
                && matches!(strong.certificate, Some(Certificate::ValueSet { .. }));
            let detail = match &strong.certificate {
                Some(Certificate::ValueSet {
                    values,
                    opposite_values,
                    ..
                }) => format!("values {values:?} against {opposite_values:?}"),
                _ => "no value-set obstruction".into(),
            };
            r.items.push(crate::report::CheckItem {
                label: format!("{} strong fails", c.label),
                passed: ok,
                detail,
                kind: kind.map(str::to_string),
                status: Some(strong.status),
                matching: Some(strong),
            });
        }
    }
    Ok(r.finish())
}

/// The permutation group for the small cases that can be computed directly.
pub fn family_group(family: Family, q: u64) -> Result<PermGroup> {
    validate_q(family, q)?;
    let limit = || {
        Error::Precondition(format!(
            "{} at q = {q} is not available as a computed group",
            family.name()
        ))
    };
    match family {
        Family::Psl2 if q <= 13 => named::psl2(q),
        Family::Suzuki if q == 8 => group_from_gens_text(include_str!("../../../../data/sz8.gens")),
        Family::Psu3 if q == 3 => {
            group_from_gens_text(include_str!("../../../../data/psu3_3.gens"))
        }
        _ => Err(limit()),
    }
}

type Multiset = BTreeMap<(CycNum, u128), u128>;

fn multiset(rows: &[OracleRow]) -> Multiset {
    let mut m = Multiset::new();
    for r in rows {
        *m.entry((r.value.clone(), r.degree_part)).or_default() += r.multiplicity;
    }
    m
}

fn column_multiset(t: &CharacterTable, col: usize, p: u64) -> Multiset {
    let mut m = Multiset::new();
    for chi in 0..t.num_chars() {
        let v = t.value(chi, col);
        if !v.is_zero() {
            *m.entry((v.clone(), p_part(t.degree(chi), p))).or_default() += 1;
        }
    }
    m
}

fn show(m: &Multiset) -> String {
    m.iter()
        .map(|((v, d), k)| format!("({v}, {d}) x{k}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Compares the oracle with the tables of the group and its Sylow normalizer.
pub fn crosscheck(family: Family, q: u64) -> Result<CheckReport> {
    let o = oracle(family, q)?;
    let g = family_group(family, q)?;
    let t = dixon_schneider(&g)?;
    crosscheck_with(&o, &t)
}

pub fn crosscheck_with(o: &Oracle, t: &CharacterTable) -> Result<CheckReport> {
    let g = t.group()?;
    let p = o.p;
    let sys = g.sylow_system(p)?;
    let ht = dixon_schneider(&sys.normalizer)?;
    let en = g.enumeration()?;
    let mut r = CheckReport::new(
        "family-crosscheck",
        format!("{} q={}", o.family.name(), o.q),
    );
    let mut used = vec![false; o.classes.len()];
    let mut computed = 0;
    for col in t.p_element_classes(p) {
        let Some(&e) = sys.sylows[0]
            .elements
            .iter()
            .find(|&&e| t.column_of(&en.elements()[e as usize]).ok() == Some(col))
        else {
            continue;
        };
        if sys.containing[e as usize] != 1 {
            continue;
        }
        computed += 1;
        let y = &en.elements()[e as usize];
        let hcol = ht.column_of(y)?;
        let gm = column_multiset(t, col, p);
        let hm = column_multiset(&ht, hcol, p);
        let cent = t.centralizer_order(col);
        let name = &t.classes[col].name;
        let hit = o.classes.iter().enumerate().position(|(i, c)| {
            !used[i]
                && c.centralizer == cent
                && multiset(&c.g_rows) == gm
                && multiset(&c.h_rows) == hm
        });
        match hit {
            Some(i) => {
                used[i] = true;
                r.item(
                    format!("{} = {name}", o.classes[i].label),
                    true,
                    format!("centralizer {cent}"),
                );
            }
            None => {
                let near = o
                    .classes
                    .iter()
                    .enumerate()
                    .find(|(i, c)| !used[*i] && c.centralizer == cent)
                    .map(|(_, c)| c);
                let detail = match near {
                    Some(c) => format!(
                        "G computed [{}] oracle {} [{}]; H computed [{}] oracle [{}]",
                        show(&gm),
                        c.label,
                        show(&multiset(&c.g_rows)),
                        show(&hm),
                        show(&multiset(&c.h_rows))
                    ),
                    None => format!("no oracle class with centralizer {cent}"),
                };
                r.item(name.clone(), false, detail);
            }
        }
    }
    r.item(
        "picky class count",
        computed == o.classes.len(),
        format!("computed {computed}, oracle {}", o.classes.len()),
    );
    Ok(r.finish())
}

/// The oracle as text: one block per class, one row per line.
pub fn oracle_text(o: &Oracle) -> String {
    let mut s = format!(
        "family {}\nq {}\np {}\npicky-count {}\n",
        o.family.name(),
        o.q,
        o.p,
        o.picky_count
    );
    for n in &o.notes {
        s.push_str(&format!("# {n}\n"));
    }
    for c in &o.classes {
        s.push_str(&format!(
            "class {} {} order {} centralizer {}\n",
            c.label,
            if c.good { "good" } else { "bad" },
            c.element_order,
            c.centralizer
        ));
        for (side, rows) in [("G", &c.g_rows), ("H", &c.h_rows)] {
            for r in rows.iter() {
                s.push_str(&format!(
                    "{side} {} {} {}\n",
                    r.value, r.degree_part, r.multiplicity
                ));
            }
        }
    }
    s
}
