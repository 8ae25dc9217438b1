//! Catalog constructors.

use super::{Perm, PermGroup};
use crate::error::{Error, Result};
use crate::finite_field::FiniteField;
use crate::numtheory::prime_power;

fn cycle(degree: usize, pts: impl IntoIterator<Item = u32>) -> Perm {
    Perm::from_cycles(degree, &[pts.into_iter().collect()]).unwrap()
}

/// `S_n` on `n` points.
pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n.max(1));
    }
    PermGroup::from_generators(n, vec![cycle(n, 0..n as u32), cycle(n, [0, 1])]).unwrap()
}

/// `A_n` on `n` points.
pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n.max(1));
    }
    let long = if n % 2 == 1 {
        cycle(n, 0..n as u32)
    } else {
        cycle(n, 1..n as u32)
    };
    PermGroup::from_generators(n, vec![cycle(n, [0, 1, 2]), long]).unwrap()
}

/// Dihedral group of order `n` (so `dihedral(8)` is the symmetry group of a square).
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Inadmissible(format!(
            "dihedral group order {n} must be even and at least 2"
        )));
    }
    let m = n / 2;
    match m {
        1 => Ok(cyclic(2)),
        2 => PermGroup::from_generators(
            4,
            vec![
                Perm::parse_cycles(4, "(0 1)(2 3)", 0)?,
                Perm::parse_cycles(4, "(0 2)(1 3)", 0)?,
            ],
        ),
        _ => {
            let rot = cycle(m, 0..m as u32);
            let refl =
                Perm::from_images((0..m as u32).map(|i| (m as u32 - i) % m as u32).collect())?;
            PermGroup::from_generators(m, vec![rot, refl])
        }
    }
}

/// Cyclic group of order `n` on `n` points.
pub fn cyclic(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(1);
    }
    PermGroup::from_generators(n, vec![cycle(n, 0..n as u32)]).unwrap()
}

/// `PSL_2(q)` acting on the `q+1` points of the projective line.
///
/// Points `0..q` are field elements by index, point `q` is infinity.
pub fn psl2(q: u64) -> Result<PermGroup> {
    let (p, f) =
        prime_power(q).ok_or_else(|| Error::Inadmissible(format!("{q} is not a prime power")))?;
    if q < 2 {
        return Err(Error::Inadmissible(format!("q = {q}")));
    }
    let k = FiniteField::new(p, f as usize, 0)?;
    let n = q as usize + 1;
    let inf = q as u32;
    let one = k.one();
    let omega = k.element_of_order(q - 1)?;
    let omega2 = k.mul(&omega, &omega);
    let mut trans = vec![0u32; n];
    let mut scale = vec![0u32; n];
    let mut inv = vec![0u32; n];
    for i in 0..q {
        let x = k.element(i);
        trans[i as usize] = k.index(&k.add(&x, &one)) as u32;
        scale[i as usize] = k.index(&k.mul(&x, &omega2)) as u32;
        inv[i as usize] = if k.is_zero(&x) {
            inf
        } else {
            k.index(&k.neg(&k.inv(&x)?)) as u32
        };
    }
    trans[q as usize] = inf;
    scale[q as usize] = inf;
    inv[q as usize] = 0;
    let gens = vec![
        Perm::from_images(trans)?,
        Perm::from_images(scale)?,
        Perm::from_images(inv)?,
    ];
    PermGroup::from_generators(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(alternating(6).order(), 360);
        assert_eq!(alternating(7).order(), 2520);
        assert_eq!(dihedral(8).unwrap().order(), 8);
        assert_eq!(dihedral(4).unwrap().order(), 4);
        assert_eq!(dihedral(10).unwrap().order(), 10);
        assert!(dihedral(7).is_err());
        assert_eq!(cyclic(6).order(), 6);
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
            let g = psl2(q).unwrap();
            let expected = (q * (q * q - 1) / if q % 2 == 0 { 1 } else { 2 }) as u128;
            assert_eq!(g.order(), expected, "q = {q}");
            assert_eq!(g.degree() as u64, q + 1);
        }
        assert!(psl2(6).is_err());
    }
}
