//! Finite fields `F_{p^f}` as `F_p[t]/(m(t))` for a fixed monic irreducible `m`.
//!
//! Elements are coefficient vectors of length `f`, lowest degree first.

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

pub type Elem = Vec<u64>;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` modulo `m` over `F_p` (`m` nonzero, trimmed).
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let c = mul_mod(*r.last().unwrap(), lead_inv, p);
        let shift = r.len() - 1 - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mul_mod(c, mi, p)) % p;
        }
        trim(&mut r);
    }
    r
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or irreducibility test for a monic polynomial of degree >= 1.
pub fn is_irreducible(m: &[u64], p: u64) -> bool {
    let f = m.len() - 1;
    if f == 1 {
        return true;
    }
    // x^(p^i) mod m, iterated Frobenius
    let mut xp = vec![0, 1];
    for _ in 1..=f / 2 {
        xp = poly_pow_mod(&xp, p, m, p);
        let mut d = xp.clone();
        d.resize(d.len().max(2), 0);
        d[1] = (d[1] + p - 1) % p;
        trim(&mut d);
        let g = poly_gcd(m, &d, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn poly_pow_mod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = poly_rem(a, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = poly_rem(&poly_mul(&r, &b, p), m, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

/// Monic irreducible polynomials of degree `f` in increasing order of
/// `c_0 + c_1 p + ... + c_{f-1} p^{f-1}`; returns the one at position `skip`, if there are that many.
pub fn irreducible_polynomial(p: u64, f: usize, skip: usize) -> Option<Vec<u64>> {
    let total = p.checked_pow(f as u32).expect("field too large");
    let mut found = 0usize;
    for code in 0..total {
        let mut m = Vec::with_capacity(f + 1);
        let mut c = code;
        for _ in 0..f {
            m.push(c % p);
            c /= p;
        }
        m.push(1);
        if f > 1 && m[0] == 0 {
            continue;
        }
        if is_irreducible(&m, p) {
            if found == skip {
                return Some(m);
            }
            found += 1;
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    f: usize,
    modulus: Vec<u64>,
}

impl FiniteField {
    pub fn new(p: u64, f: usize, skip: usize) -> Result<FiniteField> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if f == 0 {
            return Err(Error::Inadmissible("field degree 0".into()));
        }
        let modulus = irreducible_polynomial(p, f, skip).ok_or_else(|| {
            Error::Inadmissible(format!(
                "no irreducible polynomial of degree {f} over F_{p} at position {skip}"
            ))
        })?;
        Ok(FiniteField { p, f, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.f
    }

    pub fn size(&self) -> u128 {
        (self.p as u128).pow(self.f as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Modulus in the form `t^2+2*t+1`.
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mon = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            terms.push(if mon.is_empty() {
                c.to_string()
            } else if c == 1 {
                mon
            } else {
                format!("{c}*{mon}")
            });
        }
        terms.join("+")
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.f]
    }

    pub fn one(&self) -> Elem {
        let mut v = vec![0; self.f];
        v[0] = 1;
        v
    }

    pub fn from_int(&self, a: i64) -> Elem {
        let mut v = vec![0; self.f];
        v[0] = a.rem_euclid(self.p as i64) as u64;
        v
    }

    /// The element whose base-`p` digits (lowest first) are the coefficients.
    pub fn element(&self, mut index: u64) -> Elem {
        let mut v = vec![0; self.f];
        for c in v.iter_mut() {
            *c = index % self.p;
            index /= self.p;
        }
        v
    }

    pub fn index(&self, a: &Elem) -> u64 {
        a.iter().rev().fold(0u64, |acc, &c| acc * self.p + c)
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        a.iter().map(|&x| (self.p - x) % self.p).collect()
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Elem, c: u64) -> Elem {
        a.iter().map(|&x| mul_mod(x, c % self.p, self.p)).collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let r = poly_rem(&poly_mul(a, b, self.p), &self.modulus, self.p);
        let mut v = r;
        v.resize(self.f, 0);
        v
    }

    pub fn pow(&self, a: &Elem, mut e: u128) -> Elem {
        let mut r = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if self.is_zero(a) {
            return Err(Error::Other("inverse of zero".into()));
        }
        Ok(self.pow(a, self.size() - 2))
    }

    /// Multiplicative order of a nonzero element, given that it divides `bound`.
    pub fn order_dividing(&self, a: &Elem, bound: u64) -> u64 {
        let mut ord = bound;
        for r in crate::numtheory::prime_factors(bound) {
            while ord % r == 0 && self.pow(a, (ord / r) as u128) == self.one() {
                ord /= r;
            }
        }
        ord
    }

    /// The first element (in index order) of the form `g^((q-1)/n)` having order exactly `n`.
    pub fn element_of_order(&self, n: u64) -> Result<Elem> {
        let q1 = self.size() - 1;
        if q1 % n as u128 != 0 {
            return Err(Error::Inadmissible(format!(
                "{n} does not divide |F^*| = {q1}"
            )));
        }
        let e = q1 / n as u128;
        let limit = self.size().min(u64::MAX as u128) as u64;
        for idx in 1..limit {
            let g = self.element(idx);
            let c = self.pow(&g, e);
            if self.order_dividing(&c, n) == n {
                return Ok(c);
            }
        }
        Err(Error::Other(format!("no element of order {n}")))
    }

    pub fn format(&self, a: &Elem) -> String {
        let parts: Vec<String> = a.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_irreducibles() {
        assert_eq!(irreducible_polynomial(2, 2, 0), Some(vec![1, 1, 1]));
        assert_eq!(irreducible_polynomial(2, 3, 0), Some(vec![1, 1, 0, 1]));
        assert_eq!(irreducible_polynomial(2, 3, 1), Some(vec![1, 0, 1, 1]));
        assert_eq!(irreducible_polynomial(3, 2, 0), Some(vec![1, 0, 1]));
        assert_eq!(irreducible_polynomial(2, 1, 2), None);
    }

    #[test]
    fn irreducible_count_matches_necklace_formula() {
        // number of monic irreducibles of degree 4 over F_2 is 3, degree 6 over F_2 is 9
        let count = |p: u64, f: usize| {
            let total = p.pow(f as u32);
            (0..total)
                .filter(|&code| {
                    let mut m = Vec::new();
                    let mut c = code;
                    for _ in 0..f {
                        m.push(c % p);
                        c /= p;
                    }
                    m.push(1);
                    m[0] != 0 && is_irreducible(&m, p)
                })
                .count()
        };
        assert_eq!(count(2, 4), 3);
        assert_eq!(count(2, 6), 9);
        assert_eq!(count(3, 3), 8);
    }

    #[test]
    fn field_axioms_f9() {
        let k = FiniteField::new(3, 2, 0).unwrap();
        for i in 1..9 {
            let a = k.element(i);
            assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), k.one());
            assert_eq!(k.pow(&a, 8), k.one());
        }
        let g = k.element_of_order(8).unwrap();
        assert_eq!(k.order_dividing(&g, 8), 8);
    }
}
