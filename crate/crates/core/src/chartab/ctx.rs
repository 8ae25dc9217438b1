//! CTX v1: a line-oriented text format for character tables.
//!
//! ```text
//! ctx 1
//! name S4
//! order 24
//! exponent 12
//! degree 4
//! classes 5
//! class 1 1 2:0 3:0 @1a rep:()
//! ...
//! chi 1 1 | 1 | 1 | 1 | 1
//! ```
//!
//! Class lines are `class <order> <size> [p:idx ...] [@label] [rep:<cycles>]` with
//! 0-based power map targets. `degree` is required only when representatives are
//! given. `dixon-prime` records the prime used by the computation. An optional
//! `mode fixture` header marks a partial table (some classes, all characters).
//! Lines starting with `#` are comments.

use std::collections::BTreeMap;

use super::{verify_table, CharacterTable, ClassInfo};
use crate::cyclotomic::{parse, CycNum};
use crate::error::{Error, Result};
use crate::permgroup::Perm;

pub fn ctx_write(t: &CharacterTable) -> String {
    let mut out = String::new();
    out.push_str("ctx 1\n");
    out.push_str(&format!("name {}\n", t.name));
    if !t.complete {
        out.push_str("mode fixture\n");
    }
    out.push_str(&format!("order {}\n", t.order));
    out.push_str(&format!("exponent {}\n", t.exponent));
    if let Some(q) = t.dixon_prime {
        out.push_str(&format!("dixon-prime {q}\n"));
    }
    let degree = t
        .classes
        .iter()
        .find_map(|c| c.representative.as_ref().map(|r| r.degree()));
    if let Some(d) = degree {
        out.push_str(&format!("degree {d}\n"));
    }
    out.push_str(&format!("classes {}\n", t.num_classes()));
    for c in &t.classes {
        out.push_str(&format!("class {} {}", c.order, c.size));
        for (p, i) in &c.power_map {
            out.push_str(&format!(" {p}:{i}"));
        }
        out.push_str(&format!(" @{}", c.name));
        if let Some(r) = &c.representative {
            out.push_str(&format!(" rep:{}", r.to_cycle_string()));
        }
        out.push('\n');
    }
    for row in &t.irr {
        let vals: Vec<String> = row.iter().map(|v| v.format()).collect();
        out.push_str(&format!("chi {} {}\n", row[0].format(), vals.join(" | ")));
    }
    out
}

fn perr<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        column: 1,
        message: message.into(),
    })
}

fn num<T: std::str::FromStr>(line: usize, s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .or_else(|_| perr(line, format!("bad {what}: {s:?}")))
}

/// Parses a CTX table. Complete tables are verified unless `trust` is set.
pub fn ctx_parse(text: &str, trust: bool) -> Result<CharacterTable> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, "ctx 1")) => {}
        Some((n, _)) => return perr(n, "expected header 'ctx 1'"),
        None => return perr(1, "empty input"),
    }
    let mut name = String::new();
    let mut order: Option<u128> = None;
    let mut exponent: Option<u64> = None;
    let mut degree: Option<usize> = None;
    let mut dixon_prime: Option<u64> = None;
    let mut complete = true;
    let mut nclasses: Option<usize> = None;
    let mut classes: Vec<ClassInfo> = Vec::new();
    let mut irr: Vec<Vec<CycNum>> = Vec::new();
    for (n, line) in lines {
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "name" => name = rest.to_string(),
            "mode" => match rest {
                "fixture" => complete = false,
                _ => return perr(n, format!("unknown mode {rest:?}")),
            },
            "order" => order = Some(num(n, rest, "order")?),
            "exponent" => exponent = Some(num(n, rest, "exponent")?),
            "degree" => degree = Some(num(n, rest, "degree")?),
            "dixon-prime" => dixon_prime = Some(num(n, rest, "prime")?),
            "classes" => nclasses = Some(num(n, rest, "class count")?),
            "class" => {
                if nclasses.is_none() {
                    return perr(n, "class line before 'classes'");
                }
                let mut toks = rest.split_whitespace();
                let o: u64 = num(n, toks.next().unwrap_or(""), "element order")?;
                let size: u128 = num(n, toks.next().unwrap_or(""), "class size")?;
                let mut power_map = BTreeMap::new();
                let mut label = None;
                let mut rep = None;
                for tok in toks {
                    if let Some(l) = tok.strip_prefix('@') {
                        label = Some(l.to_string());
                    } else if let Some(r) = tok.strip_prefix("rep:") {
                        let d = degree.ok_or_else(|| Error::Parse {
                            line: n,
                            column: 1,
                            message: "rep given without degree".into(),
                        })?;
                        rep = Some(Perm::parse_cycles(d, r, 1).map_err(|e| Error::Parse {
                            line: n,
                            column: 1,
                            message: e.to_string(),
                        })?);
                    } else if let Some((p, i)) = tok.split_once(':') {
                        power_map
                            .insert(num(n, p, "power map prime")?, num(n, i, "power map index")?);
                    } else {
                        return perr(n, format!("unexpected token {tok:?}"));
                    }
                }
                let idx = classes.len();
                let name = label.unwrap_or_else(|| format!("{o}_{idx}"));
                classes.push(ClassInfo {
                    name,
                    order: o,
                    size,
                    power_map,
                    representative: rep,
                });
            }
            "chi" => {
                let k = nclasses.ok_or_else(|| Error::Parse {
                    line: n,
                    column: 1,
                    message: "chi line before 'classes'".into(),
                })?;
                if classes.len() != k {
                    return perr(
                        n,
                        format!("expected {k} class lines, found {}", classes.len()),
                    );
                }
                let (deg, vals) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let deg = parse(deg).map_err(|e| Error::Parse {
                    line: n,
                    column: 1,
                    message: format!("degree: {e}"),
                })?;
                let row: Vec<CycNum> = vals
                    .split('|')
                    .map(|v| {
                        parse(v.trim()).map_err(|e| Error::Parse {
                            line: n,
                            column: 1,
                            message: e.to_string(),
                        })
                    })
                    .collect::<Result<_>>()?;
                if row.len() != k {
                    return perr(n, format!("expected {k} values, found {}", row.len()));
                }
                if complete && row[0] != deg {
                    return perr(n, "degree does not match the value at the first class");
                }
                if deg.as_integer().is_none() {
                    return perr(n, "degree is not an integer");
                }
                irr.push(row);
            }
            _ => return perr(n, format!("unknown keyword {key:?}")),
        }
    }
    let order = order.ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: "missing order".into(),
    })?;
    let exponent = exponent.ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: "missing exponent".into(),
    })?;
    let k = nclasses.ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: "missing classes".into(),
    })?;
    if classes.len() != k {
        return perr(
            1,
            format!("expected {k} class lines, found {}", classes.len()),
        );
    }
    for (i, c) in classes.iter().enumerate() {
        if order % c.size != 0 {
            return perr(
                1,
                format!("class {i} size {} does not divide the order", c.size),
            );
        }
    }
    let table = CharacterTable {
        name,
        order,
        exponent,
        classes,
        irr,
        group: None,
        complete,
        dixon_prime,
    };
    if !trust {
        let v = verify_table(&table);
        if !v.passed {
            return Err(Error::Verification(v.failures.join("; ")));
        }
    }
    Ok(table)
}
