//! p-sections and reduced p-sections of a p-element.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::p_part;
use crate::permgroup::{Perm, PermGroup};

#[derive(Clone, Debug, Serialize)]
pub struct Sections {
    /// Position of the Sylow used, in the deterministic Sylow ordering.
    pub sylow_index: usize,
    /// `x y` over representatives `y` of the p-regular classes of `C_G(x)`.
    pub section: Vec<Perm>,
    /// `x z` over p-regular `z` in `C_G(P)`, one per `C_G(x)`-class.
    pub reduced: Vec<Perm>,
}

pub(crate) fn check_p_element(x: &Perm, p: u64) -> Result<()> {
    let o = x.order() as u128;
    if p_part(o, p) != o {
        return Err(Error::NotPElement(p));
    }
    Ok(())
}

/// First Sylow p-subgroup (in the deterministic ordering) containing `x`.
pub fn canonical_sylow(group: &PermGroup, p: u64, x: &Perm) -> Result<(usize, PermGroup)> {
    let sys = group.sylow_system(p)?;
    let xi = group.index_of(x)?;
    let i = *sys
        .sylows_containing(xi)
        .first()
        .ok_or(Error::NotPElement(p))?;
    Ok((i, sys.sylow_group(i)))
}

pub fn section_reps(group: &PermGroup, p: u64, x: &Perm) -> Result<Sections> {
    check_p_element(x, p)?;
    let (sylow_index, sylow) = canonical_sylow(group, p, x)?;
    let c = group.centralizer(x)?;
    let ccs = c.class_structure()?;
    let section = ccs
        .classes
        .iter()
        .filter(|cl| cl.order % p != 0)
        .map(|cl| x.mul(&cl.representative))
        .collect();
    let cp = group.centralizer_of_group(&sylow)?;
    let mut seen_classes: Vec<usize> = Vec::new();
    let mut reduced = Vec::new();
    for z in cp.enumeration()?.elements() {
        if z.order() % p == 0 {
            continue;
        }
        let cl = c.class_of(z)?;
        if !seen_classes.contains(&cl) {
            seen_classes.push(cl);
            reduced.push(x.mul(z));
        }
    }
    Ok(Sections {
        sylow_index,
        section,
        reduced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::named::{alternating, cyclic, symmetric};

    #[test]
    fn examples() {
        let a5 = alternating(5);
        let x = Perm::parse_cycles(5, "(1,2,3,4,5)", 1).unwrap();
        let s = section_reps(&a5, 5, &x).unwrap();
        assert_eq!(s.section, vec![x.clone()]);
        assert_eq!(s.reduced, vec![x]);
        let s4 = symmetric(4);
        let y = Perm::parse_cycles(4, "(1,2,3,4)", 1).unwrap();
        assert_eq!(section_reps(&s4, 2, &y).unwrap().section.len(), 1);
        let c6 = cyclic(6);
        let g = c6.generators()[0].clone();
        let inv = g.pow(3);
        let s = section_reps(&c6, 2, &inv).unwrap();
        assert_eq!(s.section.len(), 3);
        assert!(section_reps(&c6, 2, &g).is_err());
    }
}
