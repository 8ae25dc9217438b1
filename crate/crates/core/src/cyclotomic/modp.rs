//! Reduction of cyclotomic integers modulo a prime above `p`.
//!
//! For an ambient modulus `E = p^a n'` with `p` not dividing `n'`, the residue
//! field is `F_{p^f}` with `f` the order of `p` mod `n'`. The field is built from
//! a fixed irreducible polynomial, `gamma` is the first element of order `n'`,
//! and `zeta_E` maps to `gamma^t` with `t = (p^a)^-1 mod n'`. Different choices of
//! polynomial or `gamma` change the map only by a field automorphism.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::CycNum;
use crate::error::{Error, Result};
use crate::finite_field::{Elem, FiniteField};
use crate::numtheory::{mod_inverse, multiplicative_order};

#[derive(Clone, Debug)]
pub struct ModPReduction {
    p: u64,
    modulus: u64,
    n_prime: u64,
    field: FiniteField,
    gamma: Elem,
    /// `beta^i` for `i < n'`, where `beta` is the image of `zeta_E`.
    powers: Vec<Elem>,
}

impl ModPReduction {
    /// `skip` selects a later irreducible polynomial; results must not depend on it.
    pub fn new(p: u64, modulus: u64, skip: usize) -> Result<ModPReduction> {
        let mut n_prime = modulus;
        let mut pa = 1u64;
        while n_prime % p == 0 {
            n_prime /= p;
            pa *= p;
        }
        let f = multiplicative_order(p % n_prime.max(1), n_prime) as usize;
        let field = FiniteField::new(p, f.max(1), skip)?;
        let gamma = field.element_of_order(n_prime)?;
        let t = if n_prime == 1 {
            0
        } else {
            mod_inverse(pa as i64, n_prime as i64).unwrap() as u128
        };
        let beta = field.pow(&gamma, t);
        let mut powers = Vec::with_capacity(n_prime as usize);
        let mut acc = field.one();
        for _ in 0..n_prime {
            powers.push(acc.clone());
            acc = field.mul(&acc, &beta);
        }
        Ok(ModPReduction {
            p,
            modulus,
            n_prime,
            field,
            gamma,
            powers,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn describe(&self) -> String {
        format!(
            "F_{}^{} = F_{}[t]/({}), zeta_{} -> gamma^t with gamma = {} of order {}",
            self.p,
            self.field.degree(),
            self.p,
            self.field.modulus_string(),
            self.modulus,
            self.field.format(&self.gamma),
            self.n_prime
        )
    }

    fn reduce_rational(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let pb = BigInt::from(self.p);
        let d = (den % &pb).to_u64().unwrap();
        if d == 0 {
            return Err(Error::NotIntegral(self.p));
        }
        let mut n = num % &pb;
        if n.is_negative() {
            n += &pb;
        }
        let n = n.to_u64().unwrap();
        let dinv = mod_inverse(d as i64, self.p as i64).unwrap() as u64;
        Ok(((n as u128 * dinv as u128) % self.p as u128) as u64)
    }

    /// Image of a value whose denominators are prime to `p` and whose conductor divides the ambient modulus.
    pub fn map(&self, v: &CycNum) -> Result<Elem> {
        let n = v.conductor();
        if self.modulus % n != 0 {
            return Err(Error::Precondition(format!(
                "conductor {n} does not divide the reduction modulus {}",
                self.modulus
            )));
        }
        let step = self.modulus / n;
        let mut acc = self.field.zero();
        for (j, c) in v.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = self.reduce_rational(c.numer(), c.denom())?;
            let e = (j as u64 * step) % self.n_prime.max(1);
            acc = self
                .field
                .add(&acc, &self.field.scale(&self.powers[e as usize], r));
        }
        Ok(acc)
    }

    pub fn is_zero_mod_p(&self, v: &CycNum) -> Result<bool> {
        Ok(self.field.is_zero(&self.map(v)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::parse;

    #[test]
    fn ring_homomorphism_on_samples() {
        let samples = [
            "E(7)+E(7)^2+E(7)^4",
            "3-E(21)^5",
            "E(4)",
            "2*E(7)^3-1",
            "E(3)",
        ];
        for p in [2u64, 3, 5, 7] {
            let red = ModPReduction::new(p, 84, 0).unwrap();
            for a in samples {
                for b in samples {
                    let x = parse(a).unwrap();
                    let y = parse(b).unwrap();
                    let k = red.field();
                    assert_eq!(
                        red.map(&(&x * &y)).unwrap(),
                        k.mul(&red.map(&x).unwrap(), &red.map(&y).unwrap())
                    );
                    assert_eq!(
                        red.map(&(&x + &y)).unwrap(),
                        k.add(&red.map(&x).unwrap(), &red.map(&y).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn rational_denominators() {
        let red = ModPReduction::new(3, 3, 0).unwrap();
        assert!(red.map(&CycNum::from_fraction(1, 3)).is_err());
        let red2 = ModPReduction::new(2, 7, 0).unwrap();
        assert_eq!(
            red2.map(&CycNum::from_fraction(1, 3)).unwrap(),
            red2.field().one()
        );
        assert!(red2.is_zero_mod_p(&CycNum::from_int(4)).unwrap());
    }

    #[test]
    fn sqrt_minus_seven_vanishes_mod_seven() {
        let a = parse("1+2*(E(7)+E(7)^2+E(7)^4)").unwrap();
        let red = ModPReduction::new(7, 7, 0).unwrap();
        assert!(red.is_zero_mod_p(&a).unwrap());
        let red2 = ModPReduction::new(2, 7, 0).unwrap();
        assert!(!red2.is_zero_mod_p(&a).unwrap());
    }
}
