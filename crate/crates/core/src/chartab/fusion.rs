//! Class fusion from a subgroup table, induction and restriction.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{CharacterTable, ClassFunction};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFusion {
    /// `map[t]` is the ambient class of the subgroup class `t`.
    pub map: Vec<usize>,
}

/// Fuses the classes of `sub` into `ambient` by locating each representative.
pub fn class_fusion(sub: &CharacterTable, ambient: &CharacterTable) -> Result<ClassFusion> {
    let h = sub.group()?;
    let g = ambient.group()?;
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    let mut map = Vec::with_capacity(sub.num_classes());
    for c in &sub.classes {
        let rep = c
            .representative
            .as_ref()
            .ok_or_else(|| Error::Precondition("subgroup class without representative".into()))?;
        let s = ambient.column_of(rep).map_err(|_| {
            Error::Inconsistent(format!("representative {rep} not found in ambient classes"))
        })?;
        if ambient.classes[s].order != c.order {
            return Err(Error::Inconsistent(format!(
                "class of {rep} has order {} in the ambient table",
                ambient.classes[s].order
            )));
        }
        map.push(s);
    }
    Ok(ClassFusion { map })
}

/// `theta^G(x_s) = |C_G(x_s)| / |H| * sum_{t -> s} |t^H| theta(t)`.
pub fn induce(
    theta: &[CycNum],
    sub: &CharacterTable,
    ambient: &CharacterTable,
    fusion: &ClassFusion,
) -> Result<ClassFunction> {
    sub.check_class_function(theta)?;
    if fusion.map.len() != sub.num_classes() {
        return Err(Error::DimensionMismatch {
            expected: sub.num_classes(),
            found: fusion.map.len(),
        });
    }
    let mut sums = vec![CycNum::zero(); ambient.num_classes()];
    for (t, &s) in fusion.map.iter().enumerate() {
        if theta[t].is_zero() {
            continue;
        }
        let w = theta[t].scale(&BigRational::from_integer(BigInt::from(
            sub.classes[t].size,
        )));
        sums[s] = &sums[s] + &w;
    }
    Ok(sums
        .into_iter()
        .enumerate()
        .map(|(s, v)| {
            v.scale(&BigRational::new(
                BigInt::from(ambient.centralizer_order(s)),
                BigInt::from(sub.order),
            ))
        })
        .collect())
}

pub fn restrict(chi: &[CycNum], fusion: &ClassFusion) -> ClassFunction {
    fusion.map.iter().map(|&s| chi[s].clone()).collect()
}

/// The permutation character on the cosets of the subgroup, `(1_H)^G`.
pub fn permutation_character(
    sub: &CharacterTable,
    ambient: &CharacterTable,
    fusion: &ClassFusion,
) -> Result<ClassFunction> {
    induce(&sub.trivial_character(), sub, ambient, fusion)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::dixon_schneider;
    use crate::permgroup::named::symmetric;
    use crate::permgroup::{Perm, PermGroup};

    #[test]
    fn v4_in_s4_fuses_to_double_transpositions() {
        let g = symmetric(4);
        let v4 = PermGroup::from_generators(
            4,
            vec![
                Perm::parse_cycles(4, "(1,2)(3,4)", 1).unwrap(),
                Perm::parse_cycles(4, "(1,3)(2,4)", 1).unwrap(),
            ],
        )
        .unwrap();
        let tg = dixon_schneider(&g).unwrap();
        let th = dixon_schneider(&v4).unwrap();
        let f = class_fusion(&th, &tg).unwrap();
        let target = tg
            .column_of(&Perm::parse_cycles(4, "(1,2)(3,4)", 1).unwrap())
            .unwrap();
        assert_eq!(f.map[0], 0);
        assert!(f.map[1..].iter().all(|&s| s == target));
        // (1_V4)^S4 has degree 6 and is the regular character of S3 inflated
        let pc = permutation_character(&th, &tg, &f).unwrap();
        assert_eq!(pc[0], CycNum::from_int(6));
        assert_eq!(pc[target], CycNum::from_int(6));
    }
}
