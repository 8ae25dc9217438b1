//! Exact consistency checks for character tables.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::CharacterTable;
use crate::cyclotomic::CycNum;

#[derive(Clone, Debug, Serialize)]
pub struct TableVerification {
    pub passed: bool,
    /// Each check that ran.
    pub checks: Vec<String>,
    /// Violations with class and character indices.
    pub failures: Vec<String>,
}

const MAX_FAILURES: usize = 20;

/// Both orthogonality relations, the degree equation, degree divisibility,
/// power-map compatibility with the Galois action, and integrality of values.
/// Partial tables (all characters, some classes) get the column-wise checks only.
pub fn verify_table(t: &CharacterTable) -> TableVerification {
    let mut checks = Vec::new();
    let mut failures = Vec::new();
    let k = t.num_classes();
    let h = t.num_chars();
    let fail = |failures: &mut Vec<String>, s: String| {
        if failures.len() < MAX_FAILURES {
            failures.push(s);
        }
    };

    checks.push("integrality".to_string());
    for (i, row) in t.irr.iter().enumerate() {
        if row.len() != k {
            fail(
                &mut failures,
                format!("character {i} has {} values for {k} classes", row.len()),
            );
            continue;
        }
        for (s, v) in row.iter().enumerate() {
            if !v.is_integral() {
                fail(
                    &mut failures,
                    format!("value of character {i} at class {s} is not an algebraic integer: {v}"),
                );
            }
        }
    }
    if !failures.is_empty() {
        return TableVerification {
            passed: false,
            checks,
            failures,
        };
    }

    checks.push("degrees".to_string());
    for i in 0..h {
        match t.irr[i][0].as_integer() {
            Some(d) if d > BigInt::from(0) && (BigInt::from(t.order) % &d) == BigInt::from(0) => {}
            _ => fail(
                &mut failures,
                format!(
                    "degree of character {i} is {} which is not a positive divisor of {}",
                    t.irr[i][0], t.order
                ),
            ),
        }
    }

    let conj: Vec<Vec<CycNum>> = t
        .irr
        .iter()
        .map(|r| r.iter().map(|v| v.conj()).collect())
        .collect();

    checks.push("column orthogonality".to_string());
    for r in 0..k {
        for s in r..k {
            if !t.complete && r != s {
                continue;
            }
            let mut acc = CycNum::zero();
            for i in 0..h {
                acc = &acc + &(&t.irr[i][r] * &conj[i][s]);
            }
            let expected = if r == s {
                CycNum::from_bigint(BigInt::from(t.centralizer_order(r)))
            } else {
                CycNum::zero()
            };
            if acc != expected {
                fail(&mut failures, format!("column orthogonality fails for classes ({r},{s}): sum is {acc}, expected {expected}"));
            }
        }
    }

    if t.complete {
        checks.push("class count".to_string());
        if h != k {
            fail(&mut failures, format!("{h} characters for {k} classes"));
        }
        checks.push("row orthogonality".to_string());
        let sizes: Vec<BigRational> = t
            .classes
            .iter()
            .map(|c| BigRational::from_integer(BigInt::from(c.size)))
            .collect();
        for i in 0..h {
            for j in i..h {
                let mut acc = CycNum::zero();
                for s in 0..k {
                    acc = &acc + &(&t.irr[i][s] * &conj[j][s]).scale(&sizes[s]);
                }
                let expected = if i == j {
                    CycNum::from_bigint(BigInt::from(t.order))
                } else {
                    CycNum::zero()
                };
                if acc != expected {
                    fail(
                        &mut failures,
                        format!("row orthogonality fails for characters ({i},{j}): sum is {acc}"),
                    );
                }
            }
        }
        checks.push("degree equation".to_string());
        let sum: BigInt = (0..h)
            .filter_map(|i| t.irr[i][0].as_integer())
            .map(|d| &d * &d)
            .sum();
        if sum != BigInt::from(t.order) {
            fail(
                &mut failures,
                format!("sum of squared degrees is {sum}, expected {}", t.order),
            );
        }
        let size_sum: u128 = t.classes.iter().map(|c| c.size).sum();
        if size_sum != t.order {
            fail(
                &mut failures,
                format!("class sizes sum to {size_sum}, expected {}", t.order),
            );
        }
    }

    checks.push("power maps".to_string());
    for s in 0..k {
        let o = t.classes[s].order;
        for (&p, &ps) in &t.classes[s].power_map {
            if ps >= k {
                if t.complete {
                    fail(
                        &mut failures,
                        format!("power map {p} of class {s} points outside the table"),
                    );
                }
                continue;
            }
            let expected_order = if o % p == 0 { o / p } else { o };
            if t.classes[ps].order != expected_order {
                fail(
                    &mut failures,
                    format!(
                        "power map {p} sends class {s} of order {o} to order {}",
                        t.classes[ps].order
                    ),
                );
            }
            if o % p == 0 {
                continue;
            }
            for i in 0..h {
                let g = t.irr[i][s]
                    .galois(p as i64)
                    .expect("p prime to element order");
                if g != t.irr[i][ps] {
                    fail(&mut failures, format!("character {i}: value at class {ps} is not the {p}-Galois image of the value at class {s}"));
                }
            }
        }
    }

    TableVerification {
        passed: failures.is_empty(),
        checks,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::named::symmetric;

    #[test]
    fn perturbed_value_is_reported() {
        let mut t = super::super::dixon_schneider(&symmetric(4)).unwrap();
        assert!(verify_table(&t).passed);
        t.irr[3][2] = &t.irr[3][2] + &CycNum::one();
        let r = verify_table(&t);
        assert!(!r.passed);
        assert!(r
            .failures
            .iter()
            .any(|f| f.contains("column orthogonality fails for classes") && f.contains("2")));
    }
}
